"""Rank-metric codes in M_{n x m}(F_q) and their metrics.

A code is an additive subspace given by a basis of codeword matrices, with a
declared scalar field: prime subfield ("Fp"), the entry field ("Fq"), or, for
codes presented by a generator matrix over a tower GF(q^n), the tower itself
("Fqn"). Minimum distance, rank distribution and the MRD predicate are exact
and exhaustive, guarded by the configured cap.

The closed-form MRD rank distribution implemented here is

    a_{d+l} = [m; d+l]_q * sum_{t=0}^{l} (-1)^t [d+l; t]_q q^{t(t-1)/2} (q^{n(l-t+1)} - 1)

([.;.]_q Gaussian binomials). The corresponding display in the source text
carries typos (sign exponent, a stray q-power); the form above is the one that
agrees with brute-force tallies of constructed MRD codes, which is the
normative behavior.
"""

from __future__ import annotations

import json
from math import comb

from .caps import check_exhaustive
from .errors import ArgumentError, DomainError, StructureError
from .fields import GF, FieldDescriptor
from .matrices import MatrixGF, _rref_inplace, gaussian_binomial
from .linearized import _coeff_column

LINEARITY_LEVELS = ("Fp", "Fq", "Fqn")


class RankDistribution:
    """Tallies a_0..a_m of codeword ranks."""

    __slots__ = ("counts",)

    def __init__(self, counts):
        self.counts = tuple(int(c) for c in counts)

    def __getitem__(self, i):
        return self.counts[i]

    def __iter__(self):
        return iter(self.counts)

    def __len__(self):
        return len(self.counts)

    def __eq__(self, other):
        if isinstance(other, RankDistribution):
            return self.counts == other.counts
        if isinstance(other, (tuple, list)):
            return self.counts == tuple(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.counts)

    def __repr__(self):
        return f"RankDistribution{self.counts}"

    @property
    def total(self) -> int:
        return sum(self.counts)

    def min_positive_rank(self):
        for i in range(1, len(self.counts)):
            if self.counts[i]:
                return i
        return None


class RankMetricCode:
    """An additive code of n x m matrices over GF(q)."""

    __slots__ = ("field", "n", "m", "linearity", "basis", "generator", "tower",
                 "transposed", "meta", "_cache")

    def __init__(self, field: FieldDescriptor, n: int, m: int, linearity: str,
                 basis=None, generator: MatrixGF | None = None,
                 tower: FieldDescriptor | None = None,
                 transposed: bool = False, meta: dict | None = None,
                 validate: bool = True):
        if linearity not in LINEARITY_LEVELS:
            raise ArgumentError(f"linearity must be one of {LINEARITY_LEVELS}")
        if m > n:
            raise ArgumentError(
                "m <= n is enforced; build through from_matrices for auto-transposition")
        if m < 1 or n < 1:
            raise ArgumentError("matrix shape must be at least 1x1")
        self.field = field
        self.n = n
        self.m = m
        self.linearity = linearity
        self.transposed = transposed
        self.meta = dict(meta) if meta else {}
        self._cache = {}

        if linearity == "Fqn":
            if generator is None:
                raise ArgumentError("Fqn-linear codes are given by a generator matrix")
            if tower is None:
                tower = field.extension(n)
            if tower.base_field() != field or tower.n != n:
                raise StructureError("tower does not extend the entry field by degree n")
            if generator.field != tower:
                raise StructureError("generator must live over the tower")
            if generator.ncols != m:
                raise ArgumentError("generator column count differs from m")
            self.generator = generator
            self.tower = tower
            self.basis = None
            if validate and generator.rank() != generator.nrows:
                raise StructureError("generator rows are dependent over the tower")
        else:
            if generator is not None:
                raise ArgumentError("matrix-basis codes take no generator")
            if basis is None:
                raise ArgumentError("a basis of codeword matrices is required")
            basis = tuple(basis)
            for M in basis:
                if not isinstance(M, MatrixGF) or M.field != field:
                    raise StructureError("basis matrices must live over the entry field")
                if (M.nrows, M.ncols) != (n, m):
                    raise ArgumentError("basis matrix of the wrong shape")
            self.basis = basis
            self.generator = None
            self.tower = tower
            if validate and basis:
                vecs = [self._flatten_scalar(M) for M in basis]
                rank = len(_rref_inplace([list(v) for v in vecs], len(vecs[0]),
                                         self._scalar_flat_field())[1])
                if rank != len(basis):
                    raise StructureError(
                        f"basis is dependent over the {linearity} scalars")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_matrices(cls, field: FieldDescriptor, matrices, linearity: str = "Fq",
                      meta: dict | None = None) -> "RankMetricCode":
        """Build from basis matrices, transposing into m <= n orientation."""
        matrices = list(matrices)
        if not matrices:
            raise ArgumentError("at least one basis matrix is required")
        n, m = matrices[0].nrows, matrices[0].ncols
        transposed = False
        if m > n:
            matrices = [M.transpose() for M in matrices]
            n, m = m, n
            transposed = True
        return cls(field, n, m, linearity, basis=matrices,
                   transposed=transposed, meta=meta)

    @classmethod
    def from_generator(cls, tower: FieldDescriptor, generator: MatrixGF,
                       meta: dict | None = None) -> "RankMetricCode":
        field = tower.base_field()
        return cls(field, tower.n, generator.ncols, "Fqn",
                   generator=generator, tower=tower, meta=meta)

    # -- scalars ------------------------------------------------------------

    def _scalar_flat_field(self) -> FieldDescriptor:
        return GF(self.field.p) if self.linearity == "Fp" else self.field

    def _flatten_scalar(self, M: MatrixGF) -> tuple[int, ...]:
        """Codeword as a vector over the scalar field used for independence."""
        if self.linearity == "Fp":
            out = []
            for c in M.entries:
                out.extend(_prime_digits(c, self.field.p, self.field.degree))
            return tuple(out)
        return M.entries

    @property
    def scalar_size(self) -> int:
        if self.linearity == "Fp":
            return self.field.p
        if self.linearity == "Fq":
            return self.field.order
        return self.tower.order

    @property
    def dimension(self) -> int:
        """Dimension over the declared scalar field."""
        if self.linearity == "Fqn":
            return self.generator.nrows
        return len(self.basis)

    @property
    def cardinality(self) -> int:
        return self.scalar_size**self.dimension

    @property
    def dim_over_prime(self) -> int:
        per = {"Fp": 1, "Fq": self.field.degree,
               "Fqn": self.field.degree * self.n}[self.linearity]
        return self.dimension * per

    # -- codeword iteration --------------------------------------------------

    def matrix_basis(self) -> tuple[MatrixGF, ...]:
        """An F_q-basis of the codeword space (expands Fqn generators)."""
        got = self._cache.get("matrix_basis")
        if got is not None:
            return got
        if self.linearity != "Fqn":
            out = self.basis
        else:
            tower = self.tower
            top = tower._top
            mats = []
            for r in range(self.generator.nrows):
                row = self.generator.row_codes(r)
                for beta in tower.polynomial_basis():
                    scaled = [top.mul(beta.code, c) for c in row]
                    cols = [_coeff_column(tower, c) for c in scaled]
                    mats.append(MatrixGF.from_columns(self.field, cols))
            out = tuple(mats)
        self._cache["matrix_basis"] = out
        return out

    def codewords(self):
        """Iterator over every codeword matrix (cap-checked up front)."""
        check_exhaustive(self.cardinality, "codeword enumeration")
        return self._iter_codewords()

    def _iter_codewords(self):
        field = self.field
        n, m = self.n, self.m
        for entries in self._iter_entry_tuples():
            yield MatrixGF(field, n, m, entries)

    def _iter_entry_tuples(self):
        """All codeword entry tuples via DFS over the scalar span."""
        if self.linearity == "Fqn":
            basis = self.matrix_basis()
            scalars = list(range(self.field.order))
        else:
            basis = self.basis
            scalars = list(range(self.scalar_size))
        nm = self.n * self.m
        mul = self.field._top.mul
        add = self.field._top.add
        scaled = []
        for M in basis:
            scaled.append([tuple(mul(s, c) for c in M.entries) for s in scalars])

        zero = tuple([0] * nm)

        def rec(level, current):
            if level == len(scaled):
                yield tuple(current)
                return
            for srow in scaled[level]:
                if any(srow):
                    nxt = [add(a, b) for a, b in zip(current, srow)]
                else:
                    nxt = current
                yield from rec(level + 1, nxt)

        yield from rec(0, list(zero))

    # -- metrics -------------------------------------------------------------

    def _rank_of_entries(self, entries) -> int:
        m = self.m
        rows = [list(entries[i * m:(i + 1) * m]) for i in range(self.n)]
        return len(_rref_inplace(rows, m, self.field)[1])

    def min_distance(self, method: str = "auto") -> int:
        key = ("min_distance", method)
        got = self._cache.get(key)
        if got is None:
            got = self._metric(method, want_distribution=False)
            self._cache[key] = got
            self._cache.setdefault(("min_distance", "auto"), got)
        return got

    def rank_distribution(self, method: str = "auto") -> RankDistribution:
        key = ("rank_distribution", method)
        got = self._cache.get(key)
        if got is None:
            got = self._metric(method, want_distribution=True)
            self._cache[key] = got
            self._cache.setdefault(("rank_distribution", "auto"), got)
        return got

    def _metric(self, method: str, want_distribution: bool):
        if method not in ("auto", "generic", "projective"):
            raise ArgumentError(f"unknown method {method!r}")
        if not want_distribution and self.cardinality < 2:
            raise DomainError("minimum distance needs at least two codewords")
        use_projective = (self.linearity == "Fqn" and method in ("auto", "projective"))
        if method == "projective" and self.linearity != "Fqn":
            raise ArgumentError("projective enumeration needs an Fqn-linear code")
        if use_projective:
            return self._metric_projective(want_distribution)
        return self._metric_generic(want_distribution)

    def _metric_generic(self, want_distribution: bool):
        check_exhaustive(self.cardinality, "codeword metric computation")
        counts = [0] * (self.m + 1)
        best = self.m + 1
        for entries in self._iter_entry_tuples():
            if any(entries):
                r = self._rank_of_entries(entries)
                counts[r] += 1
                if r < best:
                    best = r
                    if not want_distribution and best == 1:
                        return 1
            else:
                counts[0] += 1
        if want_distribution:
            return RankDistribution(counts)
        if best > self.m:
            raise DomainError("no nonzero codeword found")
        return best

    def _metric_projective(self, want_distribution: bool):
        """Enumerate one representative per tower-scalar line: rank(alpha v) = rank(v)."""
        tower = self.tower
        Q = tower.order
        k = self.generator.nrows
        reps = (Q**k - 1) // (Q - 1)
        check_exhaustive(reps, "projective codeword enumeration")
        top = tower._top
        mul, add = top.mul, top.add
        G = [self.generator.row_codes(r) for r in range(k)]
        m = self.m
        base = self.field
        counts = [0] * (self.m + 1)
        counts[0] = 1
        best = self.m + 1
        # leading coefficient fixed to 1 at position j, free above
        for j in range(k):
            free = k - 1 - j
            for tail in range(Q**free):
                coeffs = [0] * j + [1]
                t = tail
                for _ in range(free):
                    t, r = divmod(t, Q)
                    coeffs.append(r)
                v = [0] * m
                for c, row in zip(coeffs, G):
                    if c == 1:
                        for i in range(m):
                            if row[i]:
                                v[i] = add(v[i], row[i])
                    elif c:
                        for i in range(m):
                            if row[i]:
                                v[i] = add(v[i], mul(c, row[i]))
                rows = [_coeff_column(tower, c) for c in v]
                r = len(_rref_inplace(rows, tower.n, base)[1])
                counts[r] += Q - 1
                if r < best:
                    best = r
                    if not want_distribution and best == 1:
                        return 1
        if want_distribution:
            return RankDistribution(counts)
        if best > self.m:
            raise DomainError("no nonzero codeword found")
        return best

    def weight_enumerator(self, method: str = "auto"):
        """Coefficients of W_C(x,y) = sum_i a_i x^i y^{m-i} as (a_i, i, m-i)."""
        dist = self.rank_distribution(method)
        return tuple((a, i, self.m - i) for i, a in enumerate(dist))

    def is_mrd(self, method: str = "auto") -> bool:
        d = self.min_distance(method)
        return self.cardinality == singleton_bound(self.field.order, self.n, self.m, d)

    def singleton_defect_free(self) -> bool:
        return self.is_mrd()

    # -- membership and equality ---------------------------------------------

    def _prime_rref(self):
        got = self._cache.get("prime_rref")
        if got is None:
            p = self.field.p
            deg = self.field.degree
            mats = self.matrix_basis()
            if self.linearity != "Fp" and deg > 1:
                # matrix_basis is only a basis over the entry field; close
                # it under prime-basis scalars to span the same words over GF(p)
                mats = [M.scale(lam) for M in mats
                        for lam in self.field.prime_basis()]
            vecs = []
            for M in mats:
                v = []
                for c in M.entries:
                    v.extend(_prime_digits(c, p, deg))
                vecs.append(v)
            rows, pivots = _rref_inplace(vecs, self.n * self.m * deg, GF(p))
            got = (tuple(tuple(r) for r in rows), tuple(pivots))
            self._cache["prime_rref"] = got
        return got

    def contains(self, M: MatrixGF) -> bool:
        if M.field != self.field or (M.nrows, M.ncols) != (self.n, self.m):
            return False
        rows, pivots = self._prime_rref()
        p = self.field.p
        deg = self.field.degree
        v = []
        for c in M.entries:
            v.extend(_prime_digits(c, p, deg))
        for row, piv in zip(rows, pivots):
            c = v[piv]
            if c:
                for j in range(piv, len(v)):
                    if row[j]:
                        v[j] = (v[j] - c * row[j]) % p
        return not any(v)

    def canonical_key(self):
        rows, _ = self._prime_rref()
        return (self.field._key, self.n, self.m, rows)

    def same_codeword_set(self, other: "RankMetricCode") -> bool:
        return self.canonical_key() == other.canonical_key()

    def __eq__(self, other):
        if not isinstance(other, RankMetricCode):
            return NotImplemented
        return self.same_codeword_set(other)

    def __hash__(self):
        return hash(self.canonical_key())

    def __repr__(self):
        return (f"RankMetricCode({self.n}x{self.m} over {self.field}, "
                f"{self.linearity}, |C|={self.cardinality})")

    # -- misc ----------------------------------------------------------------

    def transpose(self) -> "RankMetricCode":
        if self.n != self.m:
            raise ArgumentError("transpose is only defined inside square shapes")
        if self.linearity == "Fqn":
            mats = [M.transpose() for M in self.matrix_basis()]
            return RankMetricCode(self.field, self.n, self.m, "Fq", basis=mats,
                                  meta=self.meta)
        return RankMetricCode(self.field, self.n, self.m, self.linearity,
                              basis=[M.transpose() for M in self.basis],
                              meta=self.meta)

    def with_meta(self, **kw) -> "RankMetricCode":
        meta = dict(self.meta)
        meta.update(kw)
        out = RankMetricCode(self.field, self.n, self.m, self.linearity,
                             basis=self.basis, generator=self.generator,
                             tower=self.tower, transposed=self.transposed,
                             meta=meta, validate=False)
        out._cache = self._cache
        return out

    # -- serialization ---------------------------------------------------------

    def to_json_dict(self) -> dict:
        q = {"p": self.field.p, "e": self.field.degree}
        if self.field.top_modulus is not None:
            q["modulus"] = list(self.field.top_modulus)
        out = {"q": q, "n": self.n, "m": self.m, "linearity": self.linearity}
        if self.linearity == "Fqn":
            out["generator"] = self.generator.to_text()
            default_tower = self.field.extension(self.n)
            if self.tower != default_tower:
                out["tower_modulus"] = list(self.tower.top_modulus)
        else:
            out["basis"] = [M.to_text() for M in self.basis]
        if self.transposed:
            out["transposed"] = True
        if self.meta:
            out["meta"] = self.meta
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_json_dict(cls, data: dict) -> "RankMetricCode":
        try:
            qinfo = data["q"]
            p, e = int(qinfo["p"]), int(qinfo["e"])
            modulus = qinfo.get("modulus")
            n, m = int(data["n"]), int(data["m"])
            linearity = data["linearity"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ArgumentError(f"malformed code JSON: {exc}") from exc
        field = GF(p, 1, e, top_modulus=modulus) if e > 1 else GF(p)
        meta = data.get("meta") or {}
        transposed = bool(data.get("transposed", False))
        if linearity == "Fqn":
            tower = field.extension(n, modulus=data.get("tower_modulus"))
            G = MatrixGF.from_text(tower, data["generator"])
            return cls(field, n, m, "Fqn", generator=G, tower=tower,
                       transposed=transposed, meta=meta)
        basis = [MatrixGF.from_text(field, t) for t in data.get("basis", [])]
        return cls(field, n, m, linearity, basis=basis,
                   transposed=transposed, meta=meta)

    @classmethod
    def from_json(cls, text: str) -> "RankMetricCode":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ArgumentError(f"invalid JSON: {exc}") from exc
        return cls.from_json_dict(data)

    def save(self, path) -> None:
        with open(path, "w") as fh:
            fh.write(self.to_json() + "\n")

    @classmethod
    def load(cls, path) -> "RankMetricCode":
        with open(path) as fh:
            return cls.from_json(fh.read())


def _prime_digits(code: int, p: int, length: int) -> list[int]:
    out = []
    for _ in range(length):
        code, r = divmod(code, p)
        out.append(r)
    return out


# ---------------------------------------------------------------------------
# Bounds and the closed-form distribution.


def singleton_bound(q: int, n: int, m: int, d: int) -> int:
    """Largest possible |C| for a code in M_{n x m}(F_q) of min distance d."""
    if isinstance(q, FieldDescriptor):
        q = q.order
    if not 1 <= d <= m <= n:
        raise ArgumentError(f"need 1 <= d <= m <= n, got d={d}, m={m}, n={n}")
    return q**(n * (m - d + 1))


def additive_singleton_dimension(field: FieldDescriptor, n: int, m: int, d: int) -> int:
    """Upper bound on dim over the prime field: e n (m - d + 1)."""
    if not 1 <= d <= m <= n:
        raise ArgumentError(f"need 1 <= d <= m <= n, got d={d}, m={m}, n={n}")
    return field.degree * n * (m - d + 1)


def delsarte_rank_distribution(q: int, n: int, m: int, d: int) -> RankDistribution:
    """Rank distribution shared by every additive MRD code with these parameters."""
    if isinstance(q, FieldDescriptor):
        q = q.order
    if not 1 <= d <= m <= n:
        raise ArgumentError(f"need 1 <= d <= m <= n, got d={d}, m={m}, n={n}")
    counts = [0] * (m + 1)
    counts[0] = 1
    for l in range(m - d + 1):
        i = d + l
        total = 0
        for t in range(l + 1):
            term = (gaussian_binomial(i, t, q) * q**comb(t, 2)
                    * (q**(n * (l - t + 1)) - 1))
            total += -term if t % 2 else term
        counts[i] = gaussian_binomial(m, i, q) * total
    return RankDistribution(counts)


def min_distance(C: RankMetricCode) -> int:
    return C.min_distance()


def rank_distribution(C: RankMetricCode) -> RankDistribution:
    return C.rank_distribution()


def weight_enumerator(C: RankMetricCode):
    return C.weight_enumerator()


def is_mrd(C: RankMetricCode) -> bool:
    return C.is_mrd()
