"""Conversions among the representations of F_q-linear maps of GF(q^n).

Vector over GF(q^n) / expansion matrix over GF(q) / sigma-polynomial /
operator matrix X_{f,B} / Dickson autocirculant / Moore matrix. All of them
report the same rank, and the conversions here are lossless.
"""

from __future__ import annotations

from .errors import ArgumentError, StructureError
from .fields import FieldDescriptor, FieldElement
from .linearized import SigmaPolynomial, _coeff_column
from .matrices import MatrixGF


class VectorRep:
    """A tuple v_1..v_m of GF(q^n) elements, considered up to F_q-span."""

    __slots__ = ("field", "entries")

    def __init__(self, field: FieldDescriptor, entries):
        codes = []
        for x in entries:
            if isinstance(x, FieldElement):
                if x.field != field:
                    raise StructureError("entry from a different field")
                codes.append(x.code)
            else:
                x = int(x)
                if not 0 <= x < field.order:
                    raise ArgumentError(f"entry code {x} out of range")
                codes.append(x)
        if not codes:
            raise ArgumentError("vector must have length >= 1")
        self.field = field
        self.entries = tuple(codes)

    @classmethod
    def parse(cls, field: FieldDescriptor, text: str) -> "VectorRep":
        try:
            codes = [int(x) for x in text.strip().split(",")]
        except ValueError as exc:
            raise ArgumentError(f"bad vector text {text!r}") from exc
        return cls(field, codes)

    def to_text(self) -> str:
        return ",".join(str(c) for c in self.entries)

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        return (isinstance(other, VectorRep) and self.field == other.field
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.field._key, self.entries))

    def __repr__(self):
        return f"VectorRep([{self.to_text()}] over {self.field})"

    def elements(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.field, c) for c in self.entries)


class DicksonMatrix(MatrixGF):
    """n x n autocirculant over GF(q^n): entry (i,j) = f_{(j-i) mod n}^{sigma^i}."""

    __slots__ = ("s",)

    def __init__(self, field: FieldDescriptor, s: int, entries):
        n = field.n
        super().__init__(field, n, n, entries)
        self.s = s % n if n > 1 else 0
        row0 = self.row_codes(0)
        for i in range(1, n):
            for j in range(n):
                expected = field.frob_code(row0[(j - i) % n], (self.s * i) % n)
                if self.entries[i * n + j] != expected:
                    raise StructureError("matrix does not have the Dickson pattern")

    def coefficients(self) -> tuple[int, ...]:
        return self.row_codes(0)

    def to_sigma_polynomial(self) -> SigmaPolynomial:
        return SigmaPolynomial(self.field, self.s, self.row_codes(0))


# ---------------------------------------------------------------------------
# Basis plumbing.


def _basis_matrix(field: FieldDescriptor, basis) -> MatrixGF:
    """Columns = base-field coefficient expansions of the basis elements."""
    base = field.base_field()
    cols = []
    for b in basis:
        code = b.code if isinstance(b, FieldElement) else int(b)
        cols.append(_coeff_column(field, code))
    M = MatrixGF.from_columns(base, cols)
    if M.nrows != M.ncols or M.rank() != field.n:
        raise ArgumentError("basis elements are not an F_q-basis of the tower")
    return M


def default_basis(field: FieldDescriptor) -> tuple[FieldElement, ...]:
    return field.polynomial_basis()


# ---------------------------------------------------------------------------
# Contracted conversions.


def vector_rank(v: VectorRep) -> int:
    """dim over F_q of the span of the entries."""
    field = v.field
    base = field.base_field()
    rows = [_coeff_column(field, c) for c in v.entries]
    return MatrixGF.from_rows(base, rows).rank()


def vector_to_matrix(v: VectorRep, basis=None) -> MatrixGF:
    """n x m expansion A_{v,B}: column j = coordinates of v_j in the basis."""
    field = v.field
    if basis is None:
        cols = [_coeff_column(field, c) for c in v.entries]
        return MatrixGF.from_columns(field.base_field(), cols)
    B = _basis_matrix(field, basis)
    Binv = B.inverse()
    cols = [_coeff_column(field, c) for c in v.entries]
    return Binv * MatrixGF.from_columns(field.base_field(), cols)


def matrix_to_vector(A: MatrixGF, field: FieldDescriptor, basis=None) -> VectorRep:
    """Inverse of vector_to_matrix: v_j = sum_i A_ij b_i."""
    if A.nrows != field.n:
        raise ArgumentError(f"matrix must have {field.n} rows for this tower")
    if A.field != field.base_field():
        raise StructureError("matrix must live over the base field of the tower")
    if basis is None:
        basis = field.polynomial_basis()
    basis = [b if isinstance(b, FieldElement) else FieldElement(field, int(b))
             for b in basis]
    top = field._top
    entries = []
    for j in range(A.ncols):
        acc = 0
        for i in range(A.nrows):
            c = A.code_at(i, j)
            if c:
                acc = top.add(acc, top.mul(c, basis[i].code))
        entries.append(acc)
    return VectorRep(field, entries)


def moore_matrix(v: VectorRep, s: int = 1) -> MatrixGF:
    """n x m matrix over GF(q^n), row i = v^{sigma^i}; rank = vector_rank(v)."""
    field = v.field
    n = field.n
    rows = []
    for i in range(n):
        rows.append([field.frob_code(c, (s * i) % n) for c in v.entries])
    return MatrixGF.from_rows(field, rows)


def linpoly_to_matrix(f: SigmaPolynomial, basis=None) -> MatrixGF:
    """X_{f,B} over GF(q): f(b_j) = sum_i X_ij b_i."""
    field = f.field
    if basis is None:
        return f.operator_matrix()
    B = _basis_matrix(field, basis)
    Binv = B.inverse()
    basis_codes = [b.code if isinstance(b, FieldElement) else int(b) for b in basis]
    cols = [_coeff_column(field, f.evaluate_code(c)) for c in basis_codes]
    return Binv * MatrixGF.from_columns(field.base_field(), cols)


def matrix_to_linpoly(X: MatrixGF, field: FieldDescriptor, basis=None,
                      s: int = 1) -> SigmaPolynomial:
    """The unique sigma-polynomial acting as X on the given basis."""
    if X.nrows != X.ncols:
        raise ArgumentError("operator matrix must be square")
    if X.nrows != field.n:
        raise ArgumentError(f"operator matrix must be {field.n}x{field.n}")
    if X.field != field.base_field():
        raise StructureError("operator matrix must live over the base field")
    if basis is None:
        basis = field.polynomial_basis()
    basis = [b if isinstance(b, FieldElement) else FieldElement(field, int(b))
             for b in basis]
    top = field._top
    values = []
    for j in range(field.n):
        acc = 0
        for i in range(field.n):
            c = X.code_at(i, j)
            if c:
                acc = top.add(acc, top.mul(c, basis[i].code))
        values.append(acc)
    alphas = VectorRep(field, [b.code for b in basis])
    return linpoly_interpolate(VectorRep(field, values), alphas, s=s)


def dickson_matrix(f: SigmaPolynomial) -> DicksonMatrix:
    field = f.field
    n = field.n
    entries = []
    for i in range(n):
        for j in range(n):
            entries.append(field.frob_code(f.coeffs[(j - i) % n], (f.s * i) % n))
    return DicksonMatrix(field, f.s, entries)


def tensor_to_linpoly(pairs, field: FieldDescriptor, s: int = 1) -> SigmaPolynomial:
    """f(x) = sum_l a_l tr(b_l x) as a sigma-polynomial: f_i = sum_l a_l b_l^{sigma^i}."""
    top = field._top
    coeffs = [0] * field.n
    norm_pairs = []
    for a, b in pairs:
        a = a.code if isinstance(a, FieldElement) else int(a)
        b = b.code if isinstance(b, FieldElement) else int(b)
        norm_pairs.append((a, b))
    for i in range(field.n):
        acc = 0
        for a, b in norm_pairs:
            if a and b:
                acc = top.add(acc, top.mul(a, field.frob_code(b, (s * i) % field.n)))
        coeffs[i] = acc
    return SigmaPolynomial(field, s, coeffs)


def linpoly_interpolate(values: VectorRep, alphas: VectorRep, s: int = 1) -> SigmaPolynomial:
    """The unique f of sigma-degree < m with f(alpha_j) = v_j.

    alphas must be F_q-independent; solved through the m x m Moore system.
    """
    field = values.field
    if alphas.field != field:
        raise StructureError("points and values over different towers")
    m = len(alphas)
    if len(values) != m:
        raise ArgumentError("values and points have different lengths")
    if m > field.n:
        raise ArgumentError("more interpolation points than the tower degree")
    if vector_rank(alphas) != m:
        raise ArgumentError("interpolation points are F_q-dependent")
    n = field.n
    # Moore system: rows j, unknowns f_i: sum_i alpha_j^{sigma^i} f_i = v_j
    rows = [[field.frob_code(alphas.entries[j], (s * i) % n) for i in range(m)]
            for j in range(m)]
    M = MatrixGF.from_rows(field, rows)
    rhs = MatrixGF.from_columns(field, [list(values.entries)])
    sol = M.solve_right(rhs)
    if sol is None:  # pragma: no cover - Moore matrix of independent points is invertible
        raise ArgumentError("interpolation system is singular")
    coeffs = [sol.code_at(i, 0) for i in range(m)] + [0] * (n - m)
    return SigmaPolynomial(field, s, coeffs)


def embed_matrix(X: MatrixGF, field: FieldDescriptor) -> MatrixGF:
    """Lift a base-field matrix into the tower entrywise."""
    if X.field != field.base_field():
        raise StructureError("matrix is not over the base field of the tower")
    return MatrixGF(field, X.nrows, X.ncols, X.entries)
