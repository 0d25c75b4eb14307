"""Constructions of maximum-size rank-metric codes.

Evaluation codes of sigma-polynomials of bounded degree, their twisted
variants gated by a pointwise norm comparison, quotients of skew-polynomial
rings realized as matrix codes over an intermediate field, pair codes of
scattered maps, and spread sets of (pre)semifield multiplications. Gates
reject parameter choices that would break maximality, carrying a witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .caps import check_exhaustive
from .errors import (ArgumentError, ConstructionRejected, DomainError,
                     StructureError)
from .fields import (FieldDescriptor, FieldElement, GF, default_irreducible,
                     field_from_order, is_irreducible)
from .linearized import SigmaPolynomial, _coeff_column
from .matrices import MatrixGF, _rref_inplace
from .representations import linpoly_to_matrix, moore_matrix, VectorRep
from .codes import RankMetricCode

TWIST_FAMILIES = ("TG", "GTG", "AGTG", "TZ", "custom")


def _ground_field(q) -> FieldDescriptor:
    if isinstance(q, FieldDescriptor):
        if q.e != 1:
            raise ArgumentError("ground field must be a single-level descriptor")
        return q
    return field_from_order(int(q))


def _tower_of(q, n: int):
    base = _ground_field(q)
    if n < 1:
        raise ArgumentError("extension degree n must be >= 1")
    return base, base.extension(n)


def _element_code(field: FieldDescriptor, value, name: str) -> int:
    if isinstance(value, FieldElement):
        if value.field != field:
            raise StructureError(f"{name} lives in {value.field}, expected {field}")
        return value.code
    value = int(value)
    if not 0 <= value < field.order:
        raise ArgumentError(f"{name} code {value} out of range for {field}")
    return value


def _sign_code(base: FieldDescriptor, exponent: int) -> int:
    """(-1)^exponent as a code of the ground field."""
    return 1 if exponent % 2 == 0 else base._top.neg(1)


# ---------------------------------------------------------------------------
# Additive maps of GF(q^n), encoded by prime-power coefficients.


class AdditiveMap:
    """a -> sum_t c_t a^{p^t}: the general additive self-map of a field.

    Power-of-q twists embed at index t = e*h; the coefficient tuple always
    has length [field : prime field].
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldDescriptor, coeffs):
        degree = field.degree
        codes = [_element_code(field, c, "coefficient") for c in coeffs]
        if len(codes) != degree:
            raise ArgumentError(
                f"expected exactly {degree} coefficients, got {len(codes)}")
        self.field = field
        self.coeffs = tuple(codes)

    @classmethod
    def zero(cls, field: FieldDescriptor) -> "AdditiveMap":
        return cls(field, [0] * field.degree)

    @classmethod
    def identity(cls, field: FieldDescriptor) -> "AdditiveMap":
        return cls.p_monomial(field, 1, 0)

    @classmethod
    def p_monomial(cls, field: FieldDescriptor, c, t: int) -> "AdditiveMap":
        """a -> c * a^{p^t}."""
        coeffs = [0] * field.degree
        coeffs[t % field.degree] = _element_code(field, c, "coefficient")
        return cls(field, coeffs)

    @classmethod
    def q_monomial(cls, field: FieldDescriptor, c, h: int) -> "AdditiveMap":
        """a -> c * a^{q^h} where q is the size of the ground field."""
        return cls.p_monomial(field, c, field.e * (h % field.n))

    @classmethod
    def from_sigma_polynomial(cls, f: SigmaPolynomial) -> "AdditiveMap":
        field = f.field
        out = [0] * field.degree
        add = field._top.add
        for i, c in enumerate(f.coeffs):
            if c:
                t = field.e * ((f.s * i) % field.n)
                out[t] = add(out[t], c)
        return cls(field, out)

    @classmethod
    def parse(cls, field: FieldDescriptor, text: str) -> "AdditiveMap":
        body = text.strip()
        if body.startswith("coeffs="):
            body = body[len("coeffs="):].strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ArgumentError(f"bad additive-map text {text!r}")
        try:
            coeffs = [int(x) for x in body[1:-1].split(",")]
        except ValueError as exc:
            raise ArgumentError(f"bad additive-map text {text!r}") from exc
        return cls(field, coeffs)

    def to_text(self) -> str:
        return f"coeffs=[{','.join(str(c) for c in self.coeffs)}]"

    def __repr__(self):
        return f"AdditiveMap({self.to_text()} over {self.field})"

    def __eq__(self, other):
        return (isinstance(other, AdditiveMap) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field._key, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def evaluate_code(self, x: int) -> int:
        field = self.field
        top = field._top
        acc = 0
        for t, c in enumerate(self.coeffs):
            if c:
                acc = top.add(acc, top.mul(c, field.prime_frob_code(x, t)))
        return acc

    def evaluate(self, x) -> FieldElement:
        code = _element_code(self.field, x, "argument")
        return FieldElement(self.field, self.evaluate_code(code))


# ---------------------------------------------------------------------------
# Evaluation codes of bounded sigma-degree.


def gabidulin(q, n: int, k: int, s: int = 1) -> RankMetricCode:
    """Code of all maps x -> f_0 x + f_1 x^{sigma} + ... + f_{k-1} x^{sigma^{k-1}}.

    GF(q^n)-linear of dimension k in M_n(GF(q)), minimum distance n - k + 1.
    """
    base, tower = _tower_of(q, n)
    if not 1 <= k <= n:
        raise ArgumentError(f"need 1 <= k <= n, got k={k}")
    if n > 1 and gcd(s, n) != 1:
        raise ArgumentError(f"twist s={s} does not generate the Galois group "
                            f"of degree {n}")
    basis = [b.code for b in tower.polynomial_basis()]
    M = moore_matrix(VectorRep(tower, basis), s=s)
    G = MatrixGF.from_rows(tower, M.rows_as_lists()[:k])
    meta = {"family": "gabidulin", "q": base.order, "n": n, "k": k, "s": s}
    return RankMetricCode.from_generator(tower, G, meta=meta)


@dataclass(frozen=True)
class TwistSpec:
    """Parameters of a twisted evaluation code H_k(phi1, phi2).

    Known families fill phi1/phi2 from (eta, h); family "custom" takes the
    two additive maps explicitly.
    """

    family: str
    k: int
    eta: object = None
    h: int = 0
    phi1: AdditiveMap | None = None
    phi2: AdditiveMap | None = None


def _tz_theta(tower: FieldDescriptor) -> int:
    """Smallest code outside the index-2 subfield (fixed by Frobenius^{n/2})."""
    half = tower.n // 2
    for x in range(tower.order):
        if tower.frob_code(x, half) != x:
            return x
    raise StructureError("no quadratic generator found")  # unreachable


def _tz_maps(tower: FieldDescriptor, eta_code: int):
    """Split a = a0 + a1*theta over the index-2 subfield: phi1 = a0, phi2 = eta*a1."""
    n = tower.n
    if n % 2:
        raise ArgumentError("the bi-semilinear family needs n even")
    top = tower._top
    half = n // 2
    theta = _tz_theta(tower)
    delta = top.sub(theta, tower.frob_code(theta, half))
    dinv = top.inv(delta)
    t_index = tower.e * half
    # a1 = (a - a^{q^{n/2}})/delta, a0 = a - a1*theta
    phi1 = [0] * tower.degree
    phi1[0] = top.sub(1, top.mul(theta, dinv))
    phi1[t_index] = top.mul(theta, dinv)
    phi2 = [0] * tower.degree
    phi2[0] = top.mul(eta_code, dinv)
    phi2[t_index] = top.neg(top.mul(eta_code, dinv))
    return AdditiveMap(tower, phi1), AdditiveMap(tower, phi2)


def _as_additive(phi, tower: FieldDescriptor) -> AdditiveMap:
    if isinstance(phi, SigmaPolynomial):
        phi = AdditiveMap.from_sigma_polynomial(phi)
    if not isinstance(phi, AdditiveMap):
        raise ArgumentError("twist maps must be AdditiveMap or SigmaPolynomial")
    if phi.field != tower:
        raise StructureError("twist map lives over the wrong tower")
    return phi


def twist_maps(spec: TwistSpec, q, n: int, s: int = 1):
    """The (phi1, phi2) pair a TwistSpec resolves to over GF(q^n)."""
    _, tower = _tower_of(q, n)
    family = spec.family.upper() if spec.family != "custom" else "custom"
    if family not in TWIST_FAMILIES:
        raise ArgumentError(f"unknown twist family {spec.family!r}")
    if family == "custom":
        if spec.phi1 is None or spec.phi2 is None:
            raise ArgumentError("custom twists take explicit phi1 and phi2")
        return (_as_additive(spec.phi1, tower), _as_additive(spec.phi2, tower))
    if spec.eta is None:
        raise ArgumentError(f"family {family} needs eta")
    eta_code = _element_code(tower, spec.eta, "eta")
    if family == "TG" and s != 1:
        raise ArgumentError("family TG fixes the twist to s=1; use GTG")
    if family in ("TG", "GTG"):
        return (AdditiveMap.identity(tower),
                AdditiveMap.q_monomial(tower, eta_code, spec.h))
    if family == "AGTG":
        return (AdditiveMap.identity(tower),
                AdditiveMap.p_monomial(tower, eta_code, spec.h))
    return _tz_maps(tower, eta_code)


def twisted_code(spec: TwistSpec, q, n: int, s: int = 1) -> RankMetricCode:
    """H_k(phi1, phi2): perturb first and last coefficients of a degree-k window.

    Accepted only when N(phi1(a)) != (-1)^{nk} N(phi2(a)) for every a != 0,
    checked exhaustively; the failing a is the rejection witness.
    """
    base, tower = _tower_of(q, n)
    if not 1 <= spec.k <= n - 1:
        raise ArgumentError(f"need 1 <= k <= n-1, got k={spec.k}")
    if gcd(s, n) != 1:
        raise ArgumentError(f"twist s={s} does not generate the Galois group "
                            f"of degree {n}")
    phi1, phi2 = twist_maps(spec, q, n, s)
    k = spec.k

    check_exhaustive(tower.order, "twist norm gate")
    sign = _sign_code(base, n * k)
    bmul = base._top.mul
    for a in range(1, tower.order):
        n1 = tower.norm_code(phi1.evaluate_code(a))
        n2 = tower.norm_code(phi2.evaluate_code(a))
        if n1 == bmul(sign, n2):
            raise ConstructionRejected(
                f"norm gate fails at a={a}: both sides equal {n1}",
                witness=FieldElement(tower, a))

    mats = []
    for b in tower.prime_basis():
        g = SigmaPolynomial.from_dict(
            tower, s, {0: phi1.evaluate_code(b.code),
                       k: phi2.evaluate_code(b.code)})
        mats.append(linpoly_to_matrix(g))
    for i in range(1, k):
        for b in tower.prime_basis():
            mats.append(linpoly_to_matrix(SigmaPolynomial.monomial(tower, s, i, b.code)))
    meta = {"family": spec.family.lower(), "q": base.order, "n": n,
            "k": k, "s": s, "h": spec.h}
    if spec.eta is not None:
        meta["eta"] = _element_code(tower, spec.eta, "eta")
    if spec.family == "custom":
        meta["phi1"] = phi1.to_text()
        meta["phi2"] = phi2.to_text()
    return RankMetricCode.from_matrices(base, mats, linearity="Fp", meta=meta)


# ---------------------------------------------------------------------------
# Skew-polynomial rings and their central quotients.


class SkewPolynomial:
    """sum f_i t^i over GF(q^n) with the commutation rule t*a = a^{sigma}*t."""

    __slots__ = ("field", "s", "coeffs")

    def __init__(self, field: FieldDescriptor, s: int, coeffs):
        codes = [_element_code(field, c, "coefficient") for c in coeffs]
        while codes and codes[-1] == 0:
            codes.pop()
        self.field = field
        self.s = s % field.n if field.n > 1 else 0
        self.coeffs = tuple(codes)

    @classmethod
    def monomial(cls, field: FieldDescriptor, s: int, c, d: int) -> "SkewPolynomial":
        coeffs = [0] * (d + 1)
        coeffs[d] = _element_code(field, c, "coefficient")
        return cls(field, s, coeffs)

    @classmethod
    def zero(cls, field: FieldDescriptor, s: int = 1) -> "SkewPolynomial":
        return cls(field, s, [])

    @classmethod
    def one(cls, field: FieldDescriptor, s: int = 1) -> "SkewPolynomial":
        return cls(field, s, [1])

    def degree(self):
        """t-degree; None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def to_text(self) -> str:
        return f"s={self.s}; coeffs=[{','.join(str(c) for c in self.coeffs)}]"

    def __repr__(self):
        return f"SkewPolynomial({self.to_text()} over {self.field})"

    def __eq__(self, other):
        return (isinstance(other, SkewPolynomial) and self.field == other.field
                and self.s == other.s and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field._key, self.s, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def _same(self, other):
        if not isinstance(other, SkewPolynomial):
            raise StructureError("expected a skew polynomial")
        if other.field != self.field or other.s != self.s:
            raise StructureError("mismatched ring")
        return other

    def __add__(self, other):
        other = self._same(other)
        add = self.field._top.add
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = add(out[i], c)
        return SkewPolynomial(self.field, self.s, out)

    def __neg__(self):
        neg = self.field._top.neg
        return SkewPolynomial(self.field, self.s, [neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._same(other))

    def __mul__(self, other):
        other = self._same(other)
        field = self.field
        top = field._top
        n = field.n
        if self.is_zero() or other.is_zero():
            return SkewPolynomial(field, self.s, [])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, fi in enumerate(self.coeffs):
            if fi == 0:
                continue
            twist = (self.s * i) % n
            for j, gj in enumerate(other.coeffs):
                if gj:
                    out[i + j] = top.add(out[i + j],
                                         top.mul(fi, field.frob_code(gj, twist)))
        return SkewPolynomial(field, self.s, out)

    def right_divmod(self, g: "SkewPolynomial"):
        """(u, r) with self = u*g + r and deg r < deg g."""
        g = self._same(g)
        if g.is_zero():
            raise DomainError("division by the zero polynomial")
        field = self.field
        top = field._top
        n = field.n
        mg = g.degree()
        glead = g.coeffs[-1]
        rem = list(self.coeffs)
        quot = [0] * max(0, len(rem) - mg)
        while len(rem) - 1 >= mg and rem:
            d = len(rem) - 1
            shift = d - mg
            c = top.mul(rem[d], top.inv(field.frob_code(glead, (self.s * shift) % n)))
            quot[shift] = top.add(quot[shift], c)
            for idx, gc in enumerate(g.coeffs):
                if gc:
                    rem[shift + idx] = top.sub(
                        rem[shift + idx],
                        top.mul(c, field.frob_code(gc, (self.s * shift) % n)))
            while rem and rem[-1] == 0:
                rem.pop()
        return (SkewPolynomial(field, self.s, quot),
                SkewPolynomial(field, self.s, rem))


class _SkewQuotient:
    """The simple module V = R/Rg of R/(fbar(t^n)), with its scalar field.

    g is the first monic degree-s right divisor of fbar(t^n) in candidate
    code order. The class of t^n acts centrally and generates the scalar
    field K = GF(q)[y]/(fbar); module elements become K-coordinate columns
    via a greedy K-basis so that any f in R maps to a matrix in M_n(K).
    """

    def __init__(self, base, tower, s_deg, fbar_codes, twist):
        self.base = base
        self.tower = tower
        self.s_deg = s_deg
        self.twist = twist
        n = tower.n
        self.K = base if s_deg == 1 else base.extension(s_deg, modulus=list(fbar_codes))

        central = [0] * (n * s_deg + 1)
        for l, fc in enumerate(fbar_codes):
            central[n * l] = fc  # ground-field codes embed as constant digits
        self.central = SkewPolynomial(tower, twist, central)
        self.divisor = self._find_divisor()
        self._z_poly = SkewPolynomial.monomial(tower, twist, 1, n)
        self._build_basis()

    def _find_divisor(self) -> SkewPolynomial:
        tower, s_deg = self.tower, self.s_deg
        Q = tower.order
        check_exhaustive(Q**s_deg, "right-divisor search")
        for idx in range(Q**s_deg):
            rest, digits = idx, []
            for _ in range(s_deg):
                rest, r = divmod(rest, Q)
                digits.append(r)
            g = SkewPolynomial(tower, self.twist, digits + [1])
            if self.central.right_divmod(g)[1].is_zero():
                return g
        raise StructureError("central polynomial has no right divisor "
                             "of the scalar degree")  # unreachable for irreducible fbar

    # module elements are tuples of s_deg tower codes (t-degrees 0..s_deg-1)

    def act(self, f: SkewPolynomial, v: tuple) -> tuple:
        prod = f * SkewPolynomial(self.tower, self.twist, v)
        rem = prod.right_divmod(self.divisor)[1].coeffs
        return rem + (0,) * (self.s_deg - len(rem))

    def _coords(self, v: tuple) -> list[int]:
        out = []
        for c in v:
            out.extend(_coeff_column(self.tower, c))
        return out

    def _build_basis(self):
        tower, s_deg = self.tower, self.s_deg
        n = tower.n
        dim = n * s_deg
        q = tower.base_size
        span_rows: list[list[int]] = []
        chosen: list[tuple] = []
        m_cols: list[list[int]] = []

        def in_span(vec):
            rows = [list(r) for r in span_rows] + [list(vec)]
            return len(_rref_inplace(rows, dim, self.base)[0]) == len(span_rows)

        for pos in range(s_deg):
            for j in range(n):
                if len(chosen) == n:
                    break
                v = tuple(q**j if i == pos else 0 for i in range(s_deg))
                if span_rows and in_span(self._coords(v)):
                    continue
                chosen.append(v)
                w = v
                for l in range(s_deg):
                    m_cols.append(self._coords(w))
                    span_rows.append(self._coords(w))
                    if l + 1 < s_deg:
                        w = self.act(self._z_poly, w)
                rows = [list(r) for r in span_rows]
                span_rows = [list(r) for r in _rref_inplace(rows, dim, self.base)[0]]
        if len(chosen) != n:
            raise StructureError("module basis extraction failed")
        self.basis = chosen
        self._minv = MatrixGF.from_columns(self.base, m_cols).inverse()

    def matrix_of(self, f: SkewPolynomial) -> MatrixGF:
        n = self.tower.n
        s_deg = self.s_deg
        q = self.tower.base_size
        cols = []
        for v in self.basis:
            w = MatrixGF.from_columns(self.base, [self._coords(self.act(f, v))])
            x = self._minv * w
            col = []
            for i in range(n):
                code = 0
                for l in range(s_deg - 1, -1, -1):
                    code = code * q + x.code_at(i * s_deg + l, 0)
                col.append(code)
            cols.append(col)
        return MatrixGF.from_columns(self.K, cols)


def skew_mrd(q, n: int, s_deg: int, k: int, eta=0, fbar=None,
             twist: int = 1) -> RankMetricCode:
    """Image of {f : deg f <= s*k, f_{sk} = eta*f_0} in R/(fbar(t^n)).

    R = GF(q^n)[t;sigma]; the quotient is M_n(GF(q^s)) and the image is a
    maximum-size code of q^{nks} matrices there. Needs fbar irreducible with
    nonzero constant term and N(eta) != (-1)^{nks}.
    """
    base, tower = _tower_of(q, n)
    if s_deg < 1:
        raise ArgumentError("scalar degree must be >= 1")
    if not 1 <= k <= n:
        raise ArgumentError(f"need 1 <= k <= n, got k={k}")
    if n > 1 and gcd(twist, n) != 1:
        raise ArgumentError(f"twist s={twist} does not generate the Galois "
                            f"group of degree {n}")
    fbar_codes = _resolve_fbar(base, s_deg, fbar)
    eta_code = _element_code(tower, eta, "eta")
    if eta_code and k == n:
        raise ArgumentError("a nonzero eta ties coefficient s*k to coefficient 0, "
                            "which needs k <= n-1")
    sign = _sign_code(base, n * k * s_deg)
    if tower.norm_code(eta_code) == sign:
        raise ConstructionRejected(
            f"N(eta) = (-1)^(nks) for eta code {eta_code}",
            witness=FieldElement(tower, eta_code))

    module = _SkewQuotient(base, tower, s_deg, fbar_codes, twist)
    top = tower._top
    mats = []
    for u in tower.prime_basis():
        coeffs = [0] * (s_deg * k + 1)
        coeffs[0] = u.code
        coeffs[s_deg * k] = top.mul(eta_code, u.code)
        mats.append(module.matrix_of(SkewPolynomial(tower, twist, coeffs)))
    for i in range(1, s_deg * k):
        for u in tower.prime_basis():
            mats.append(module.matrix_of(
                SkewPolynomial.monomial(tower, twist, u.code, i)))
    meta = {"family": "skew", "q": base.order, "n": n, "s_deg": s_deg, "k": k,
            "eta": eta_code, "fbar": [int(c) for c in fbar_codes],
            "twist": twist, "divisor": [int(c) for c in module.divisor.coeffs]}
    return RankMetricCode.from_matrices(module.K, mats, linearity="Fp", meta=meta)


def _resolve_fbar(base: FieldDescriptor, s_deg: int, fbar) -> tuple[int, ...]:
    if fbar is None:
        return default_irreducible(base, s_deg, nonzero_constant=True)
    codes = [_element_code(base, c, "fbar coefficient") for c in fbar]
    while codes and codes[-1] == 0:
        codes.pop()
    if len(codes) != s_deg + 1:
        raise ArgumentError(f"fbar must have degree {s_deg}")
    if codes[0] == 0:
        raise ArgumentError("fbar needs a nonzero constant term "
                            "(else t is a zero divisor in the quotient)")
    if codes[-1] != 1:
        lead_inv = base._top.inv(codes[-1])
        codes = [base._top.mul(lead_inv, c) for c in codes]
    if not is_irreducible(codes, base):
        raise ArgumentError("fbar is reducible over the ground field")
    return tuple(codes)


# ---------------------------------------------------------------------------
# Pair codes of scattered maps.


def scattered_pair_code(f: SigmaPolynomial) -> RankMetricCode:
    """The GF(q^n)-span of x and f(x), maximum-size with distance n-1.

    Requires f to hit (q^n-1)/(q-1) distinct quotients f(x)/x; a pair of
    arguments on distinct lines with equal quotient is the rejection witness.
    """
    tower = f.field
    n = tower.n
    if n < 2:
        raise ArgumentError("pair codes need n >= 2")
    witness = f.scattered_witness()
    if witness is not None:
        x1, x2 = witness
        raise ConstructionRejected(
            f"map is not scattered: arguments {x1.code} and {x2.code} share "
            f"a quotient", witness=witness)
    basis = [b.code for b in tower.polynomial_basis()]
    G = MatrixGF.from_rows(tower, [basis, [f.evaluate_code(b) for b in basis]])
    meta = {"family": "scattered", "q": tower.base_size, "n": n,
            "f": f.to_text()}
    return RankMetricCode.from_generator(tower, G, meta=meta)


# ---------------------------------------------------------------------------
# Spread sets of (pre)semifield multiplications.


def _spread_build(field: FieldDescriptor, mult_code, meta: dict,
                  verify_bilinear: bool) -> RankMetricCode:
    """Code {R_y : y} of right multiplications, as matrices over the prime field.

    mult_code: (x_code, y_code) -> code of x*y. Every R_y must be invertible;
    the first singular y is the rejection witness.
    """
    order = field.order
    degree = field.degree
    prime = field.prime_field()
    digits = [FieldElement(field, x).prime_coefficients() for x in range(order)]
    basis_codes = [b.code for b in field.prime_basis()]

    if verify_bilinear:
        check_exhaustive(order * order, "bilinearity check")
        padd = field._top.add
        pmul = field._top.mul
        for x in range(order):
            row = [mult_code(x, b) for b in basis_codes]
            for y in range(order):
                acc = 0
                for lam, r in zip(digits[y], row):
                    if lam:
                        acc = padd(acc, pmul(lam, r))
                if acc != mult_code(x, y):
                    raise StructureError(
                        f"product is not additive in the right argument "
                        f"at x={x}, y={y}")
        for y in range(order):
            col = [mult_code(b, y) for b in basis_codes]
            for x in range(order):
                acc = 0
                for lam, c in zip(digits[x], col):
                    if lam:
                        acc = padd(acc, pmul(lam, c))
                if acc != mult_code(x, y):
                    raise StructureError(
                        f"product is not additive in the left argument "
                        f"at x={x}, y={y}")

    check_exhaustive(order, "right-multiplication gate")
    basis_mats = {}
    for y in range(1, order):
        cols = [list(digits[mult_code(b, y)]) for b in basis_codes]
        R = MatrixGF.from_columns(prime, cols)
        if R.rank() != degree:
            raise ConstructionRejected(
                f"right multiplication by y={y} is singular",
                witness=FieldElement(field, y))
        if y in basis_codes:
            basis_mats[y] = R
    mats = [basis_mats[b] for b in basis_codes]
    return RankMetricCode.from_matrices(prime, mats, linearity="Fp", meta=meta)


def spread_set_of(field: FieldDescriptor, mult) -> RankMetricCode:
    """Spread set of an arbitrary bilinear product on `field`.

    mult: (FieldElement, FieldElement) -> FieldElement. Bilinearity over the
    prime field is checked exhaustively, then every right multiplication
    must be invertible.
    """
    def mult_code(x, y):
        out = mult(FieldElement(field, x), FieldElement(field, y))
        return _element_code(field, out, "product")

    meta = {"family": "spread", "field": str(field)}
    return _spread_build(field, mult_code, meta, verify_bilinear=True)


def albert_twisted_field(p: int, degree: int, i: int, j: int, c) -> RankMetricCode:
    """Spread set of x*y - c x^{p^i} y^{p^j} on GF(p^degree).

    c = 0 is plain field multiplication. Nonzero c is accepted exactly when
    every right multiplication stays invertible (first singular y is the
    witness); that holds iff the norm of c into GF(p^gcd(i,j,degree)) is not 1.
    """
    field = GF(p, 1, degree) if degree > 1 else GF(p)
    i %= max(degree, 1)
    j %= max(degree, 1)
    c_code = _element_code(field, c, "c")
    top = field._top

    def mult_code(x, y):
        return top.sub(top.mul(x, y),
                       top.mul(c_code, top.mul(field.prime_frob_code(x, i),
                                               field.prime_frob_code(y, j))))

    meta = {"family": "albert", "p": p, "degree": degree, "i": i, "j": j,
            "c": c_code}
    return _spread_build(field, mult_code, meta, verify_bilinear=False)
