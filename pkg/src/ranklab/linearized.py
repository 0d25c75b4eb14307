"""Sigma-linearized polynomials over a tower GF(q^n)/GF(q).

f = f_0 x + f_1 x^sigma + ... + f_{n-1} x^{sigma^{n-1}} with sigma: x -> x^{q^s},
reduced mod x^{sigma^n} - x, so the coefficient sequence always has exactly n
entries. These are the F_q-linear maps of GF(q^n); rank/nullity refer to that
linear map.
"""

from __future__ import annotations

from math import gcd

from .caps import check_exhaustive
from .errors import ArgumentError, DomainError, StructureError
from .fields import FieldDescriptor, FieldElement
from .matrices import MatrixGF


class SigmaPolynomial:
    __slots__ = ("field", "s", "coeffs")

    def __init__(self, field: FieldDescriptor, s: int, coeffs):
        if field.n < 1:
            raise ArgumentError("tower descriptor required")
        codes = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.field != field:
                    raise StructureError("coefficient from a different field")
                codes.append(c.code)
            else:
                c = int(c)
                if not 0 <= c < field.order:
                    raise ArgumentError(f"coefficient code {c} out of range")
                codes.append(c)
        if len(codes) != field.n:
            raise ArgumentError(
                f"expected exactly {field.n} coefficients, got {len(codes)}")
        self.field = field
        self.s = s % field.n if field.n > 1 else 0
        self.coeffs = tuple(codes)

    # -- constructors ----------------------------------------------------

    @classmethod
    def from_dict(cls, field: FieldDescriptor, s: int, entries: dict) -> "SigmaPolynomial":
        coeffs = [0] * field.n
        for i, c in entries.items():
            coeffs[i % field.n] = c
        return cls(field, s, coeffs)

    @classmethod
    def monomial(cls, field: FieldDescriptor, s: int, i: int, c=1) -> "SigmaPolynomial":
        return cls.from_dict(field, s, {i: c})

    @classmethod
    def identity(cls, field: FieldDescriptor, s: int = 1) -> "SigmaPolynomial":
        return cls.monomial(field, s, 0, 1)

    @classmethod
    def zero(cls, field: FieldDescriptor, s: int = 1) -> "SigmaPolynomial":
        return cls(field, s, [0] * field.n)

    @classmethod
    def parse(cls, field: FieldDescriptor, text: str) -> "SigmaPolynomial":
        """Text form "s=<int>; coeffs=[c0,c1,...]"."""
        try:
            spart, cpart = (chunk.strip() for chunk in text.strip().split(";", 1))
            if not spart.startswith("s=") or not cpart.startswith("coeffs="):
                raise ValueError
            s = int(spart[2:])
            body = cpart[len("coeffs="):].strip()
            if not (body.startswith("[") and body.endswith("]")):
                raise ValueError
            coeffs = [int(x) for x in body[1:-1].split(",")] if body[1:-1].strip() else []
        except ValueError as exc:
            raise ArgumentError(f"bad sigma-polynomial text {text!r}") from exc
        return cls(field, s, coeffs)

    def to_text(self) -> str:
        return f"s={self.s}; coeffs=[{','.join(str(c) for c in self.coeffs)}]"

    def __repr__(self):
        return f"SigmaPolynomial({self.to_text()} over {self.field})"

    def __eq__(self, other):
        return (isinstance(other, SigmaPolynomial) and self.field == other.field
                and self.s == other.s and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field._key, self.s, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    # -- structure ---------------------------------------------------------

    def sigma_degree(self):
        """Largest i with f_i nonzero; None for the zero polynomial."""
        for i in range(self.field.n - 1, -1, -1):
            if self.coeffs[i]:
                return i
        return None

    def coefficient(self, i: int) -> FieldElement:
        return FieldElement(self.field, self.coeffs[i % self.field.n])

    def _same(self, other):
        if not isinstance(other, SigmaPolynomial):
            raise StructureError("expected a sigma polynomial")
        if other.field != self.field or other.s != self.s:
            raise StructureError("mismatched tower or twist")
        return other

    def __add__(self, other):
        other = self._same(other)
        add = self.field._top.add
        return SigmaPolynomial(self.field, self.s,
                               [add(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        other = self._same(other)
        sub = self.field._top.sub
        return SigmaPolynomial(self.field, self.s,
                               [sub(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        neg = self.field._top.neg
        return SigmaPolynomial(self.field, self.s, [neg(a) for a in self.coeffs])

    def scale(self, c) -> "SigmaPolynomial":
        """Left multiplication of every coefficient by c."""
        code = c.code if isinstance(c, FieldElement) else int(c)
        mul = self.field._top.mul
        return SigmaPolynomial(self.field, self.s, [mul(code, a) for a in self.coeffs])

    # -- the linear map ----------------------------------------------------

    def evaluate_code(self, x: int) -> int:
        field = self.field
        top = field._top
        acc = 0
        for i, c in enumerate(self.coeffs):
            if c:
                acc = top.add(acc, top.mul(c, field.frob_code(x, (self.s * i) % field.n)))
        return acc

    def evaluate(self, x) -> FieldElement:
        if isinstance(x, FieldElement):
            if x.field != self.field:
                raise StructureError("argument from a different field")
            x = x.code
        return FieldElement(self.field, self.evaluate_code(int(x)))

    def compose(self, other: "SigmaPolynomial") -> "SigmaPolynomial":
        """self after other, reduced mod x^{sigma^n} - x."""
        other = self._same(other)
        field = self.field
        n = field.n
        top = field._top
        out = [0] * n
        for i, fi in enumerate(self.coeffs):
            if fi == 0:
                continue
            si = (self.s * i) % n
            for j, gj in enumerate(other.coeffs):
                if gj:
                    k = (i + j) % n
                    out[k] = top.add(out[k], top.mul(fi, field.frob_code(gj, si)))
        return SigmaPolynomial(field, self.s, out)

    def operator_matrix(self) -> MatrixGF:
        """Matrix over GF(q) of the map in the polynomial basis: images as columns."""
        field = self.field
        base = field.base_field()
        q = field.base_size
        cols = []
        for i in range(field.n):
            image = self.evaluate_code(q**i)
            cols.append(_coeff_column(field, image))
        return MatrixGF.from_columns(base, cols)

    def rank_nullity(self) -> tuple[int, int]:
        r = self.operator_matrix().rank()
        return r, self.field.n - r

    def rank(self) -> int:
        return self.rank_nullity()[0]

    def kernel_codes(self) -> list[int]:
        """All roots in GF(q^n), by exhaustive evaluation (cap-checked)."""
        check_exhaustive(self.field.order, "kernel enumeration")
        return [x for x in range(self.field.order) if self.evaluate_code(x) == 0]

    def adjoint(self) -> "SigmaPolynomial":
        """The trace-form adjoint: tr(f(x) y) = tr(x fhat(y)) for all x, y."""
        field = self.field
        n = field.n
        out = [0] * n
        for j in range(n):
            out[j] = field.frob_code(self.coeffs[(n - j) % n], (self.s * j) % n)
        return SigmaPolynomial(field, self.s, out)

    def is_scattered(self) -> bool:
        return self.scattered_witness() is None

    def scattered_witness(self):
        """None if f is scattered, else a pair (x1, x2) on distinct F_q-lines
        of GF(q^n) with f(x1)/x1 = f(x2)/x2."""
        field = self.field
        q = field.base_size
        order = field.order
        check_exhaustive(order, "scattered test")
        top = field._top
        seen: dict[int, int] = {}
        # one representative per F_q-line is enough: f(cx)/(cx) = f(x)/x for c in F_q*
        for x in range(1, order):
            rep = _line_representative(field, x)
            if rep != x:
                continue
            quot = top.mul(self.evaluate_code(x), top.inv(x))
            prev = seen.get(quot)
            if prev is not None:
                return (FieldElement(field, prev), FieldElement(field, x))
            seen[quot] = x
        return None

def _coeff_column(field: FieldDescriptor, code: int) -> list[int]:
    q = field.base_size
    out = []
    for _ in range(field.n):
        code, r = divmod(code, q)
        out.append(r)
    return out


def _line_representative(field: FieldDescriptor, x: int) -> int:
    """Smallest code on the F_q-line through x (F_q* multiples of x)."""
    top = field._top
    best = x
    for c in range(2, field.base_size):
        y = top.mul(c, x)
        if y < best:
            best = y
    return best


# -- contracted free functions ----------------------------------------------


def evaluate(f: SigmaPolynomial, x) -> FieldElement:
    return f.evaluate(x)


def compose_mod(f: SigmaPolynomial, g: SigmaPolynomial) -> SigmaPolynomial:
    return f.compose(g)


def rank_nullity(f: SigmaPolynomial) -> tuple[int, int]:
    return f.rank_nullity()


def adjoint(f: SigmaPolynomial) -> SigmaPolynomial:
    return f.adjoint()


def is_scattered(f: SigmaPolynomial) -> bool:
    return f.is_scattered()


def require_generator_twist(f_or_field, s: int = None) -> None:
    """MRD constructions need sigma to generate Gal(GF(q^n)/GF(q))."""
    if isinstance(f_or_field, SigmaPolynomial):
        field, s = f_or_field.field, f_or_field.s
    else:
        field = f_or_field
    n = field.n
    if n > 1 and gcd(s, n) != 1:
        raise DomainError(
            f"twist s={s} does not generate the Galois group of degree {n}")


def random_sigma_polynomial(field: FieldDescriptor, s: int, rng) -> SigmaPolynomial:
    return SigmaPolynomial(
        field, s, [int(rng.integers(0, field.order)) for _ in range(field.n)])
