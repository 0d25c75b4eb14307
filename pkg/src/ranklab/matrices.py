"""Dense exact linear algebra over a field descriptor.

Matrices are immutable, row-major tuples of integer element codes. Rank and
echelon work run through one generic Gaussian elimination; GF(2) gets a
bit-packed fast path since the census workload is rank-bound.
"""

from __future__ import annotations

import itertools

from .caps import check_enumeration, check_exhaustive
from .errors import ArgumentError, DomainError, StructureError
from .fields import FieldDescriptor, FieldElement


def _entry_code(field: FieldDescriptor, x) -> int:
    if isinstance(x, FieldElement):
        if x.field != field:
            raise StructureError("entry from a different field")
        return x.code
    code = int(x)
    if not 0 <= code < field.order:
        raise ArgumentError(f"entry code {code} out of range for {field}")
    return code


class MatrixGF:
    __slots__ = ("field", "nrows", "ncols", "entries")

    def __init__(self, field: FieldDescriptor, nrows: int, ncols: int, entries):
        entries = tuple(entries)
        if len(entries) != nrows * ncols:
            raise ArgumentError(
                f"expected {nrows * ncols} entries, got {len(entries)}")
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.entries = entries

    # -- constructors --------------------------------------------------

    @classmethod
    def from_rows(cls, field: FieldDescriptor, rows) -> "MatrixGF":
        rows = [list(r) for r in rows]
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ArgumentError("ragged rows")
        flat = [_entry_code(field, x) for r in rows for x in r]
        return cls(field, nrows, ncols, flat)

    @classmethod
    def from_columns(cls, field: FieldDescriptor, cols) -> "MatrixGF":
        return cls.from_rows(field, cols).transpose()

    @classmethod
    def zeros(cls, field: FieldDescriptor, nrows: int, ncols: int) -> "MatrixGF":
        return cls(field, nrows, ncols, (0,) * (nrows * ncols))

    @classmethod
    def identity(cls, field: FieldDescriptor, n: int) -> "MatrixGF":
        e = [0] * (n * n)
        for i in range(n):
            e[i * n + i] = 1
        return cls(field, n, n, e)

    @classmethod
    def scalar(cls, field: FieldDescriptor, n: int, c) -> "MatrixGF":
        code = _entry_code(field, c)
        e = [0] * (n * n)
        for i in range(n):
            e[i * n + i] = code
        return cls(field, n, n, e)

    @classmethod
    def from_text(cls, field: FieldDescriptor, text: str) -> "MatrixGF":
        rows = []
        for chunk in text.strip().split(";"):
            chunk = chunk.strip()
            if not chunk:
                raise ArgumentError("empty matrix row")
            try:
                rows.append([int(x) for x in chunk.split(",")])
            except ValueError as exc:
                raise ArgumentError(f"bad matrix text {text!r}") from exc
        return cls.from_rows(field, rows)

    def to_text(self) -> str:
        return ";".join(
            ",".join(str(self.entries[i * self.ncols + j]) for j in range(self.ncols))
            for i in range(self.nrows))

    # -- access ---------------------------------------------------------

    def entry(self, i: int, j: int) -> FieldElement:
        return FieldElement(self.field, self.entries[i * self.ncols + j])

    def code_at(self, i: int, j: int) -> int:
        return self.entries[i * self.ncols + j]

    def row_codes(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.ncols:(i + 1) * self.ncols]

    def column_codes(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.ncols + j] for i in range(self.nrows))

    def rows_as_lists(self) -> list[list[int]]:
        m = self.ncols
        return [list(self.entries[i * m:(i + 1) * m]) for i in range(self.nrows)]

    def __repr__(self):
        return f"MatrixGF({self.nrows}x{self.ncols} over {self.field}: {self.to_text()})"

    def __eq__(self, other):
        return (isinstance(other, MatrixGF) and self.field == other.field
                and self.nrows == other.nrows and self.ncols == other.ncols
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.field._key, self.nrows, self.ncols, self.entries))

    # -- arithmetic -------------------------------------------------------

    def _same_shape(self, other):
        if not isinstance(other, MatrixGF):
            raise StructureError(f"cannot combine matrix with {type(other).__name__}")
        if other.field != self.field:
            raise StructureError("matrices over different fields")
        if (other.nrows, other.ncols) != (self.nrows, self.ncols):
            raise ArgumentError("shape mismatch")
        return other

    def __add__(self, other):
        other = self._same_shape(other)
        add = self.field._top.add
        return MatrixGF(self.field, self.nrows, self.ncols,
                        tuple(add(a, b) for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other):
        other = self._same_shape(other)
        sub = self.field._top.sub
        return MatrixGF(self.field, self.nrows, self.ncols,
                        tuple(sub(a, b) for a, b in zip(self.entries, other.entries)))

    def __neg__(self):
        neg = self.field._top.neg
        return MatrixGF(self.field, self.nrows, self.ncols,
                        tuple(neg(a) for a in self.entries))

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            return self.scale(other)
        if not isinstance(other, MatrixGF):
            return NotImplemented
        if other.field != self.field:
            raise StructureError("matrices over different fields")
        if self.ncols != other.nrows:
            raise ArgumentError(
                f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
        ops = self.field._top
        mul, add = ops.mul, ops.add
        n, k, m = self.nrows, self.ncols, other.ncols
        a, b = self.entries, other.entries
        out = [0] * (n * m)
        for i in range(n):
            arow = a[i * k:(i + 1) * k]
            for t in range(k):
                c = arow[t]
                if c == 0:
                    continue
                brow = b[t * m:(t + 1) * m]
                base = i * m
                if c == 1:
                    for j in range(m):
                        if brow[j]:
                            out[base + j] = add(out[base + j], brow[j])
                else:
                    for j in range(m):
                        if brow[j]:
                            out[base + j] = add(out[base + j], mul(c, brow[j]))
        return MatrixGF(self.field, n, m, out)

    __matmul__ = __mul__

    def scale(self, c) -> "MatrixGF":
        code = _entry_code(self.field, c)
        mul = self.field._top.mul
        return MatrixGF(self.field, self.nrows, self.ncols,
                        tuple(mul(code, a) for a in self.entries))

    def transpose(self) -> "MatrixGF":
        n, m, e = self.nrows, self.ncols, self.entries
        return MatrixGF(self.field, m, n,
                        tuple(e[i * m + j] for j in range(m) for i in range(n)))

    def map_codes(self, fn) -> "MatrixGF":
        return MatrixGF(self.field, self.nrows, self.ncols,
                        tuple(fn(a) for a in self.entries))

    def entrywise_prime_frobenius(self, t: int) -> "MatrixGF":
        """Apply x -> x^(p^t) to every entry."""
        f = self.field
        return self.map_codes(lambda c: f.prime_frob_code(c, t))

    def submatrix(self, rows, cols) -> "MatrixGF":
        rows = list(rows)
        cols = list(cols)
        e = self.entries
        m = self.ncols
        return MatrixGF(self.field, len(rows), len(cols),
                        tuple(e[i * m + j] for i in rows for j in cols))

    def hstack(self, other: "MatrixGF") -> "MatrixGF":
        if other.nrows != self.nrows or other.field != self.field:
            raise ArgumentError("hstack shape/field mismatch")
        rows = []
        for i in range(self.nrows):
            rows.append(list(self.row_codes(i)) + list(other.row_codes(i)))
        return MatrixGF.from_rows(self.field, rows)

    def vstack(self, other: "MatrixGF") -> "MatrixGF":
        if other.ncols != self.ncols or other.field != self.field:
            raise ArgumentError("vstack shape/field mismatch")
        return MatrixGF(self.field, self.nrows + other.nrows, self.ncols,
                        self.entries + other.entries)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.entries)

    # -- elimination ------------------------------------------------------

    def rref(self) -> tuple["MatrixGF", tuple[int, ...]]:
        rows, pivots = _rref(self.rows_as_lists(), self.ncols, self.field)
        full = rows + [[0] * self.ncols for _ in range(self.nrows - len(rows))]
        flat = tuple(x for r in full for x in r)
        return MatrixGF(self.field, self.nrows, self.ncols, flat), tuple(pivots)

    def rank(self) -> int:
        if self.field.order == 2:
            packed = [_pack_row(r) for r in self.rows_as_lists()]
            return _rank_bits(packed)
        _, pivots = _rref_inplace(self.rows_as_lists(), self.ncols, self.field)
        return len(pivots)

    def inverse(self) -> "MatrixGF":
        if self.nrows != self.ncols:
            raise ArgumentError("inverse of a non-square matrix")
        n = self.nrows
        aug = [list(self.row_codes(i)) + [1 if j == i else 0 for j in range(n)]
               for i in range(n)]
        rows, pivots = _rref(aug, 2 * n, self.field)
        if list(pivots) != list(range(n)):
            raise DomainError("matrix is singular")
        return MatrixGF(self.field, n, n, tuple(x for r in rows for x in r[n:]))

    def solve_right(self, rhs: "MatrixGF"):
        """One X with self @ X = rhs, or None. Free variables are set to 0."""
        if rhs.nrows != self.nrows or rhs.field != self.field:
            raise ArgumentError("solve_right shape/field mismatch")
        n, m, k = self.nrows, self.ncols, rhs.ncols
        aug = [list(self.row_codes(i)) + list(rhs.row_codes(i)) for i in range(n)]
        rows, pivots = _rref(aug, m + k, self.field)
        if any(p >= m for p in pivots):
            return None
        out = [[0] * k for _ in range(m)]
        for r, p in enumerate(pivots):
            out[p] = rows[r][m:]
        return MatrixGF.from_rows(self.field, out)

    def right_kernel(self) -> "SubspaceBasis":
        return SubspaceBasis(self.field, self.ncols,
                             _kernel_rows(self.rows_as_lists(), self.ncols, self.field))

    def left_kernel(self) -> "SubspaceBasis":
        return self.transpose().right_kernel()

    def row_space(self) -> "SubspaceBasis":
        rows, _ = _rref(self.rows_as_lists(), self.ncols, self.field)
        return SubspaceBasis(self.field, self.ncols, rows)

    def column_space(self) -> "SubspaceBasis":
        return self.transpose().row_space()


# ---------------------------------------------------------------------------
# Elimination internals.


def _rref_inplace(rows: list[list[int]], ncols: int, field: FieldDescriptor):
    """Reduce rows in place; returns (rows, pivots) with zero rows dropped."""
    ops = field._top
    mul, sub, inv = ops.mul, ops.sub, ops.inv
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        lead = rows[r][c]
        if lead != 1:
            li = inv(lead)
            rows[r] = [mul(li, x) for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                ri, rr = rows[i], rows[r]
                for j in range(c, ncols):
                    if rr[j]:
                        ri[j] = sub(ri[j], mul(f, rr[j]))
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows[:r], pivots


def _rref(rows, ncols, field):
    return _rref_inplace([list(r) for r in rows], ncols, field)


def _kernel_rows(rows, ncols, field) -> list[list[int]]:
    """RREF basis of {v : A v = 0} from the RREF of A."""
    red, pivots = _rref(rows, ncols, field)
    neg = field._top.neg
    pivot_set = set(pivots)
    free = [j for j in range(ncols) if j not in pivot_set]
    out = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for r, p in enumerate(pivots):
            if red[r][f]:
                v[p] = neg(red[r][f])
        out.append(v)
    reduced, _ = _rref(out, ncols, field)
    return reduced


def _pack_row(codes) -> int:
    x = 0
    for j, c in enumerate(codes):
        if c:
            x |= 1 << j
    return x


def _rank_bits(rows: list[int]) -> int:
    piv_at: dict[int, int] = {}
    rank = 0
    for row in rows:
        cur = row
        while cur:
            low = cur & -cur
            p = piv_at.get(low)
            if p is None:
                piv_at[low] = cur
                rank += 1
                break
            cur ^= p
    return rank


# ---------------------------------------------------------------------------
# Subspaces.


class SubspaceBasis:
    """A subspace of F^ambient, stored as its unique RREF basis."""

    __slots__ = ("field", "ambient_dim", "rows")

    def __init__(self, field: FieldDescriptor, ambient_dim: int, rows):
        rows = tuple(tuple(r) for r in rows)
        for r in rows:
            if len(r) != ambient_dim:
                raise ArgumentError("basis row length differs from ambient dimension")
        self.field = field
        self.ambient_dim = ambient_dim
        self.rows = rows

    @classmethod
    def from_vectors(cls, field: FieldDescriptor, ambient_dim: int, vectors) -> "SubspaceBasis":
        vecs = [[_entry_code(field, x) for x in v] for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise ArgumentError("vector length differs from ambient dimension")
        rows, _ = _rref(vecs, ambient_dim, field)
        return cls(field, ambient_dim, rows)

    @classmethod
    def full(cls, field: FieldDescriptor, ambient_dim: int) -> "SubspaceBasis":
        return cls(field, ambient_dim,
                   [[1 if j == i else 0 for j in range(ambient_dim)]
                    for i in range(ambient_dim)])

    @classmethod
    def from_text(cls, field: FieldDescriptor, text: str) -> "SubspaceBasis":
        m = MatrixGF.from_text(field, text)
        return cls.from_vectors(field, m.ncols, m.rows_as_lists())

    def to_text(self) -> str:
        if not self.rows:
            return ""
        return ";".join(",".join(str(x) for x in r) for r in self.rows)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def pivots(self) -> tuple[int, ...]:
        out = []
        for r in self.rows:
            for j, x in enumerate(r):
                if x:
                    out.append(j)
                    break
        return tuple(out)

    def matrix(self) -> MatrixGF:
        return MatrixGF.from_rows(self.field, self.rows) if self.rows \
            else MatrixGF.zeros(self.field, 0, self.ambient_dim)

    def __eq__(self, other):
        return (isinstance(other, SubspaceBasis) and self.field == other.field
                and self.ambient_dim == other.ambient_dim and self.rows == other.rows)

    def __hash__(self):
        return hash((self.field._key, self.ambient_dim, self.rows))

    def __repr__(self):
        return f"SubspaceBasis(dim {self.dim} in F^{self.ambient_dim}: {self.to_text()!r})"

    def contains(self, vector) -> bool:
        v = [_entry_code(self.field, x) for x in vector]
        if len(v) != self.ambient_dim:
            raise ArgumentError("vector length differs from ambient dimension")
        ops = self.field._top
        sub, mul = ops.sub, ops.mul
        for row in self.rows:
            p = next(j for j, x in enumerate(row) if x)
            c = v[p]
            if c:
                for j in range(p, self.ambient_dim):
                    if row[j]:
                        v[j] = sub(v[j], mul(c, row[j]))
        return not any(v)

    def contains_space(self, other: "SubspaceBasis") -> bool:
        return all(self.contains(r) for r in other.rows)

    def annihilator(self) -> "SubspaceBasis":
        """{v : v . u = 0 for all u in self} under the standard dot product."""
        if not self.rows:
            return SubspaceBasis.full(self.field, self.ambient_dim)
        rows = _kernel_rows([list(r) for r in self.rows], self.ambient_dim, self.field)
        return SubspaceBasis(self.field, self.ambient_dim, rows)

    def sum_with(self, other: "SubspaceBasis") -> "SubspaceBasis":
        self._check_compatible(other)
        rows, _ = _rref([list(r) for r in self.rows + other.rows],
                        self.ambient_dim, self.field)
        return SubspaceBasis(self.field, self.ambient_dim, rows)

    def intersect_with(self, other: "SubspaceBasis") -> "SubspaceBasis":
        self._check_compatible(other)
        return self.annihilator().sum_with(other.annihilator()).annihilator()

    def _check_compatible(self, other):
        if self.field != other.field or self.ambient_dim != other.ambient_dim:
            raise ArgumentError("subspaces live in different ambients")

    def vectors(self):
        """All q^dim vectors of the subspace (cap-checked)."""
        q = self.field.order
        check_exhaustive(q**self.dim, "enumerating subspace vectors")
        add, mul = self.field._top.add, self.field._top.mul
        for combo in itertools.product(range(q), repeat=self.dim):
            v = [0] * self.ambient_dim
            for c, row in zip(combo, self.rows):
                if c:
                    for j, x in enumerate(row):
                        if x:
                            v[j] = add(v[j], mul(c, x))
            yield tuple(v)


# ---------------------------------------------------------------------------
# Counting and enumeration.


def gaussian_binomial(m: int, i: int, q: int) -> int:
    """Number of i-dimensional subspaces of F_q^m."""
    if isinstance(q, FieldDescriptor):
        q = q.order
    if not 0 <= i <= m:
        raise ArgumentError(f"gaussian binomial [{m} choose {i}] undefined")
    r = 1
    for j in range(i):
        r = r * (q**(m - j) - 1) // (q**(j + 1) - 1)
    return r


def gaussian_binomial_or_zero(m: int, i: int, q: int) -> int:
    if i < 0 or m < 0 or i > m:
        return 0
    return gaussian_binomial(m, i, q)


def subspace_pivot_sets(ambient_dim: int, sub_dim: int):
    """Pivot-column sets in the lexicographic enumeration order."""
    return itertools.combinations(range(ambient_dim), sub_dim)


def free_positions(ambient_dim: int, pivots: tuple[int, ...]) -> list[tuple[int, int]]:
    """Row-major free coordinates of an RREF pattern with the given pivots."""
    pivot_set = set(pivots)
    out = []
    for i, p in enumerate(pivots):
        for j in range(p + 1, ambient_dim):
            if j not in pivot_set:
                out.append((i, j))
    return out


def enumerate_subspaces(ambient_dim: int, sub_dim: int, field: FieldDescriptor,
                        pivot_sets=None):
    """All sub_dim-dimensional subspaces of F_q^ambient, each exactly once.

    Deterministic order: pivot sets lexicographically, then free entries in
    row-major position order with codes ascending. pivot_sets restricts the
    stream to a slice for parallel consumption.
    """
    if not 0 <= sub_dim <= ambient_dim:
        raise ArgumentError("sub_dim out of range")
    q = field.order
    if pivot_sets is None:
        check_enumeration(gaussian_binomial(ambient_dim, sub_dim, q),
                          f"enumerating {sub_dim}-subspaces of F^{ambient_dim}")
        pivot_sets = subspace_pivot_sets(ambient_dim, sub_dim)
    for pivots in pivot_sets:
        pivots = tuple(pivots)
        pattern = []
        for i, p in enumerate(pivots):
            row = [0] * ambient_dim
            row[p] = 1
            pattern.append(row)
        frees = free_positions(ambient_dim, pivots)
        if not frees:
            yield SubspaceBasis(field, ambient_dim, [list(r) for r in pattern])
            continue
        for combo in itertools.product(range(q), repeat=len(frees)):
            rows = [list(r) for r in pattern]
            for (i, j), c in zip(frees, combo):
                rows[i][j] = c
            yield SubspaceBasis(field, ambient_dim, rows)


def rank_kernel_image(A: MatrixGF):
    """(rank, right kernel, right image, left kernel, left image) of A."""
    rank = A.rank()
    return (rank, A.right_kernel(), A.column_space(), A.left_kernel(), A.row_space())


def enumerate_matrices(field: FieldDescriptor, nrows: int, ncols: int):
    q = field.order
    check_exhaustive(q**(nrows * ncols), f"enumerating {nrows}x{ncols} matrices")
    for combo in itertools.product(range(q), repeat=nrows * ncols):
        yield MatrixGF(field, nrows, ncols, combo)


def gl_order(q: int, n: int) -> int:
    r = 1
    for i in range(n):
        r *= q**n - q**i
    return r


def enumerate_gl(field: FieldDescriptor, n: int):
    """All invertible n x n matrices (cap-checked against the full count)."""
    for M in enumerate_matrices(field, n, n):
        if M.rank() == n:
            yield M


def random_matrix(field: FieldDescriptor, nrows: int, ncols: int, rng) -> MatrixGF:
    vals = rng.integers(0, field.order, size=nrows * ncols)
    return MatrixGF(field, nrows, ncols, tuple(int(v) for v in vals))


def random_invertible(field: FieldDescriptor, n: int, rng) -> MatrixGF:
    while True:
        M = random_matrix(field, n, n, rng)
        if M.rank() == n:
            return M
