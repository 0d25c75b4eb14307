"""Presemifield multiplications, their spread sets, and isotopy testing.

A multiplication is stored as structure constants over its coefficient
field, so it is biadditive by encoding. Raw callables on field elements
can also be verified; they are the only inputs that can fail a
distributive law, and the only ones that can be quasifields without
being presemifields.
"""

from typing import NamedTuple

from .caps import check_exhaustive, exhaustive_cap
from .codes import RankMetricCode
from .constructions import spread_set_of as _spread_from_callable
from .errors import (ArgumentError, ConstructionRejected, DomainError,
                     StructureError)
from .fields import GF, FieldDescriptor, FieldElement
from .matrices import MatrixGF, enumerate_matrices
from .transforms import idealisers


def _coord_codes(mult, v, name):
    if isinstance(v, (tuple, list)):
        out = []
        for c in v:
            if isinstance(c, FieldElement):
                if c.field != mult.field:
                    raise StructureError(
                        f"{name} coordinate lives in {c.field}, "
                        f"expected {mult.field}")
                out.append(c.code)
            else:
                c = int(c)
                if not 0 <= c < mult.field.order:
                    raise ArgumentError(f"{name} coordinate {c} out of range")
                out.append(c)
        if len(out) != mult.n:
            raise ArgumentError(
                f"{name} needs exactly {mult.n} coordinates, got {len(out)}")
        return tuple(out)
    raise ArgumentError(f"{name} must be a coordinate sequence")


def _counter_digits(code, base, width):
    out = []
    for _ in range(width):
        code, r = divmod(code, base)
        out.append(r)
    return tuple(out)


class SemifieldMultiplication:
    """A biadditive product on F_q^n given by n^3 structure constants.

    table[(i*n + j)*n + k] is the e_k-coefficient of e_i * e_j, so
    z = x * y has z_k = sum_ij x_i y_j c_ijk.
    """

    __slots__ = ("field", "n", "table")

    def __init__(self, field: FieldDescriptor, n: int, table):
        if not isinstance(field, FieldDescriptor):
            raise ArgumentError("a coefficient field descriptor is required")
        n = int(n)
        if n < 1:
            raise ArgumentError("dimension must be at least 1")
        table = tuple(int(c) for c in table)
        if len(table) != n ** 3:
            raise ArgumentError(
                f"expected {n ** 3} structure constants, got {len(table)}")
        for c in table:
            if not 0 <= c < field.order:
                raise ArgumentError(f"structure constant {c} out of range")
        self.field = field
        self.n = n
        self.table = table

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_field(cls, tower: FieldDescriptor) -> "SemifieldMultiplication":
        """Field multiplication of the tower's top level over its base.

        Element codes are positional over the base, so the coordinates of
        a product are just its base-card digits.
        """
        if not isinstance(tower, FieldDescriptor):
            raise ArgumentError("a field descriptor is required")
        n = tower.n
        base = tower.base_field()
        card = tower.base_size
        top = tower._top
        table = []
        for i in range(n):
            bi = card ** i
            for j in range(n):
                table.extend(_counter_digits(top.mul(bi, card ** j), card, n))
        return cls(base, n, table)

    @classmethod
    def from_product(cls, tower: FieldDescriptor, mult) -> "SemifieldMultiplication":
        """Prime-level structure constants of a biadditive product.

        mult: (FieldElement, FieldElement) -> FieldElement on the tower.
        Additivity in both arguments is checked exhaustively; only that
        makes the table faithful.
        """
        if not isinstance(tower, FieldDescriptor):
            raise ArgumentError("a field descriptor is required")
        order = tower.order
        degree = tower.degree

        def mult_code(x, y):
            out = mult(FieldElement(tower, x), FieldElement(tower, y))
            if not isinstance(out, FieldElement) or out.field != tower:
                raise StructureError("product values must live on the tower")
            return out.code

        check_exhaustive(2 * order * order, "biadditivity check")
        padd = tower._top.add
        pmul = tower._top.mul
        digits = [FieldElement(tower, x).prime_coefficients()
                  for x in range(order)]
        basis_codes = [b.code for b in tower.prime_basis()]
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
        table = []
        for bi in basis_codes:
            for bj in basis_codes:
                table.extend(digits[mult_code(bi, bj)])
        return cls(GF(tower.p), degree, table)

    # -- basic structure ---------------------------------------------------

    def constant(self, i: int, j: int, k: int) -> int:
        return self.table[(i * self.n + j) * self.n + k]

    def apply(self, x, y) -> tuple:
        x = _coord_codes(self, x, "x")
        y = _coord_codes(self, y, "y")
        n = self.n
        add = self.field._top.add
        mul = self.field._top.mul
        out = [0] * n
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                w = mul(xi, yj)
                base = (i * n + j) * n
                for k in range(n):
                    c = self.table[base + k]
                    if c:
                        out[k] = add(out[k], mul(w, c))
        return tuple(out)

    def right_mult(self, y) -> MatrixGF:
        """Matrix of x -> x*y on coordinate columns."""
        y = _coord_codes(self, y, "y")
        n = self.n
        add = self.field._top.add
        mul = self.field._top.mul
        entries = [0] * (n * n)
        for j, yj in enumerate(y):
            if not yj:
                continue
            for i in range(n):
                base = (i * n + j) * n
                for k in range(n):
                    c = self.table[base + k]
                    if c:
                        entries[k * n + i] = add(entries[k * n + i], mul(yj, c))
        return MatrixGF(self.field, n, n, entries)

    def left_mult(self, x) -> MatrixGF:
        """Matrix of y -> x*y on coordinate columns."""
        x = _coord_codes(self, x, "x")
        n = self.n
        add = self.field._top.add
        mul = self.field._top.mul
        entries = [0] * (n * n)
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j in range(n):
                base = (i * n + j) * n
                for k in range(n):
                    c = self.table[base + k]
                    if c:
                        entries[k * n + j] = add(entries[k * n + j], mul(xi, c))
        return MatrixGF(self.field, n, n, entries)

    @property
    def is_commutative(self) -> bool:
        n = self.n
        return all(self.constant(i, j, k) == self.constant(j, i, k)
                   for i in range(n) for j in range(i + 1, n)
                   for k in range(n))

    def opposite(self) -> "SemifieldMultiplication":
        n = self.n
        table = [self.constant(j, i, k)
                 for i in range(n) for j in range(n) for k in range(n)]
        return SemifieldMultiplication(self.field, n, table)

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, SemifieldMultiplication):
            return NotImplemented
        return (self.field == other.field and self.n == other.n
                and self.table == other.table)

    def __hash__(self):
        return hash((self.field._key, self.n, self.table))

    def __repr__(self):
        return (f"SemifieldMultiplication(order {self.field.order}^{self.n} "
                f"over {self.field})")

    # -- serialization -------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"q {self.field.p} {self.field.degree}"]
        if self.field.top_modulus is not None:
            lines.append("modulus " + " ".join(str(c) for c in self.field.top_modulus))
        lines.append(f"n {self.n}")
        lines.append(" ".join(str(c) for c in self.table))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "SemifieldMultiplication":
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        try:
            head = lines[0].split()
            if head[0] != "q":
                raise ValueError("missing q line")
            p, e = int(head[1]), int(head[2])
            rest = lines[1:]
            modulus = None
            if rest and rest[0].startswith("modulus"):
                modulus = [int(c) for c in rest[0].split()[1:]]
                rest = rest[1:]
            nline = rest[0].split()
            if nline[0] != "n":
                raise ValueError("missing n line")
            n = int(nline[1])
            table = [int(c) for chunk in rest[1:] for c in chunk.split()]
        except (IndexError, ValueError) as exc:
            raise ArgumentError(f"malformed multiplication table: {exc}") from exc
        field = GF(p, 1, e, top_modulus=modulus) if e > 1 else GF(p)
        return cls(field, n, table)


class PresemifieldReport(NamedTuple):
    verdict: str          # "presemifield" | "left-quasifield-only" | "fails"
    witness: object       # singular/violating element, None otherwise
    reason: str


def _verify_table(mult: SemifieldMultiplication) -> PresemifieldReport:
    order = mult.field.order
    total = order ** mult.n
    check_exhaustive(total, "right-multiplication gate")
    for code in range(1, total):
        y = _counter_digits(code, order, mult.n)
        if mult.right_mult(y).rank() != mult.n:
            return PresemifieldReport("fails", y,
                                      "singular right multiplication")
    return PresemifieldReport("presemifield", None, "")


def _verify_callable(field: FieldDescriptor, mult) -> PresemifieldReport:
    order = field.order
    degree = field.degree
    prime = field.prime_field()
    check_exhaustive(order * order, "distributivity check")
    padd = field._top.add
    pmul = field._top.mul

    def mult_code(x, y):
        out = mult(FieldElement(field, x), FieldElement(field, y))
        if not isinstance(out, FieldElement) or out.field != field:
            raise StructureError("product values must live on the field")
        return out.code

    digits = [FieldElement(field, x).prime_coefficients() for x in range(order)]
    basis_codes = [b.code for b in field.prime_basis()]

    def additive_in_right():
        for x in range(order):
            row = [mult_code(x, b) for b in basis_codes]
            for y in range(order):
                acc = 0
                for lam, r in zip(digits[y], row):
                    if lam:
                        acc = padd(acc, pmul(lam, r))
                if acc != mult_code(x, y):
                    return False
        return True

    def additive_in_left():
        for y in range(order):
            col = [mult_code(b, y) for b in basis_codes]
            for x in range(order):
                acc = 0
                for lam, c in zip(digits[x], col):
                    if lam:
                        acc = padd(acc, pmul(lam, c))
                if acc != mult_code(x, y):
                    return False
        return True

    right_ok = additive_in_right()
    left_ok = additive_in_left()
    if right_ok and left_ok:
        for y in range(1, order):
            cols = [list(digits[mult_code(b, y)]) for b in basis_codes]
            if MatrixGF.from_columns(prime, cols).rank() != degree:
                return PresemifieldReport("fails", FieldElement(field, y),
                                          "singular right multiplication")
        return PresemifieldReport("presemifield", None, "")
    if right_ok:
        # left distributive law only: x*(y+z) = x*y + x*z. Each left
        # multiplication is then linear and must be invertible, while the
        # right multiplications only need to be bijections.
        for x in range(1, order):
            cols = [list(digits[mult_code(x, b)]) for b in basis_codes]
            if MatrixGF.from_columns(prime, cols).rank() != degree:
                return PresemifieldReport("fails", FieldElement(field, x),
                                          "singular left multiplication")
        for y in range(1, order):
            if len({mult_code(x, y) for x in range(order)}) != order:
                return PresemifieldReport(
                    "fails", FieldElement(field, y),
                    "right multiplication is not a bijection")
        return PresemifieldReport("left-quasifield-only", None,
                                  "not additive in the left argument")
    return PresemifieldReport("fails", None,
                              "not additive in the right argument")


def verify_presemifield(mult) -> PresemifieldReport:
    """Classify a product as presemifield, left quasifield, or neither.

    Accepts a SemifieldMultiplication, or a (field, callable) pair for
    products that are not known to be biadditive.
    """
    if isinstance(mult, SemifieldMultiplication):
        return _verify_table(mult)
    if (isinstance(mult, tuple) and len(mult) == 2
            and isinstance(mult[0], FieldDescriptor) and callable(mult[1])):
        return _verify_callable(mult[0], mult[1])
    raise ArgumentError(
        "expected a SemifieldMultiplication or a (field, callable) pair")


def spread_set_of(mult, callable_mult=None) -> RankMetricCode:
    """Spread set {R_y} of a multiplication as a rank-metric code.

    Also keeps the (field, callable) form working for raw products on
    field elements.
    """
    if isinstance(mult, SemifieldMultiplication):
        if callable_mult is not None:
            raise ArgumentError("a table already carries its product")
        order = mult.field.order
        total = order ** mult.n
        check_exhaustive(total, "right-multiplication gate")
        for code in range(1, total):
            y = _counter_digits(code, order, mult.n)
            R = mult.right_mult(y)
            if R.rank() != mult.n:
                raise ConstructionRejected(
                    f"right multiplication by {y} is singular", witness=y)
        basis = [mult.right_mult(_counter_digits(order ** j, order, mult.n))
                 for j in range(mult.n)]
        tag = "Fp" if mult.field.is_prime_field else "Fq"
        meta = {"family": "spread", "dimension": mult.n}
        return RankMetricCode.from_matrices(mult.field, basis, tag, meta=meta)
    if isinstance(mult, FieldDescriptor) and callable(callable_mult):
        return _spread_from_callable(mult, callable_mult)
    raise ArgumentError(
        "expected a SemifieldMultiplication, or a field and a callable")


def mult_from_spread(C: RankMetricCode) -> SemifieldMultiplication:
    """Recover structure constants from a spread set.

    Inverse of spread_set_of on tables: the j-th basis matrix becomes the
    right multiplication by e_j.
    """
    if not isinstance(C, RankMetricCode):
        raise ArgumentError("a rank-metric code is required")
    if C.n != C.m:
        raise DomainError("spread sets are square")
    field = C.field
    n = C.n
    if C.cardinality != field.order ** n:
        raise DomainError(
            f"a spread set in {n}x{n} matrices must have {field.order ** n} "
            f"elements, this code has {C.cardinality}")
    if C.linearity == "Fp" and not field.is_prime_field:
        raise DomainError(
            "structure constants need a basis linear over the entry field")
    if C.min_distance() != n:
        raise DomainError("spread set has a singular nonzero element")
    basis = C.matrix_basis()
    table = []
    for i in range(n):
        for j in range(n):
            B = basis[j]
            table.extend(B.code_at(k, i) for k in range(n))
    return SemifieldMultiplication(field, n, table)


class IsotopyResult(NamedTuple):
    status: str           # "isotopic" | "not-isotopic" | "indeterminate"
    witness: object       # (X, Y, Z) with X(x*y) = Y(x) *' Z(y), or None
    report: dict


def _gl_order(q: int, n: int) -> int:
    qn = q ** n
    out = 1
    for i in range(n):
        out *= qn - q ** i
    return out


def isotopic(m1: SemifieldMultiplication,
             m2: SemifieldMultiplication) -> IsotopyResult:
    """Decide isotopy X(x*y) = Y(x)*'Z(y) by invariants, then by search.

    Differing idealiser orders of the spread sets settle non-isotopy
    without search. The search itself iterates Y over GL and the image
    of the first basis vector under Z; X is then determined, and the
    remaining right multiplications must land in the other spread set.
    Above the cap the result is indeterminate, not an error.
    """
    if not isinstance(m1, SemifieldMultiplication) or \
            not isinstance(m2, SemifieldMultiplication):
        raise ArgumentError("two SemifieldMultiplication values are required")
    if m1.field != m2.field or m1.n != m2.n:
        raise ArgumentError("products live on different coordinate spaces")
    field = m1.field
    n = m1.n
    ident = MatrixGF.identity(field, n)
    if m1.table == m2.table:
        return IsotopyResult("isotopic", (ident, ident, ident), {})

    C1 = spread_set_of(m1)
    C2 = spread_set_of(m2)
    i1 = idealisers(C1)
    i2 = idealisers(C2)
    report = {"left_orders": (i1.left_order, i2.left_order),
              "right_orders": (i1.right_order, i2.right_order)}
    if (i1.left_order, i1.right_order) != (i2.left_order, i2.right_order):
        report["method"] = "idealiser orders"
        return IsotopyResult("not-isotopic", None, report)

    q = field.order
    total = q ** n
    work = max(q ** (n * n), _gl_order(q, n) * (total - 1))
    if total > 4096 or work > exhaustive_cap():
        report["method"] = "invariants only; search exceeds the cap"
        return IsotopyResult("indeterminate", None, report)

    r1 = [m1.right_mult(_counter_digits(q ** j, q, n)) for j in range(n)]
    r1inv0 = r1[0].inverse()
    r2_by_code = {}
    for code in range(1, total):
        z = _counter_digits(code, q, n)
        r2_by_code[code] = m2.right_mult(z)
    # columns of this matrix are the flattened right multiplications of m2,
    # so coordinates of a codeword in C2 read off the Z-image
    s2 = MatrixGF.from_columns(
        field, [[m2.right_mult(_counter_digits(q ** k, q, n)).entries[t]
                 for t in range(n * n)] for k in range(n)])

    for Y in enumerate_matrices(field, n, n):
        if Y.rank() != n:
            continue
        yinv = Y.inverse()
        B = Y * r1inv0
        for z1code in range(1, total):
            X = r2_by_code[z1code] * B
            mats = [X * r1[j] * yinv for j in range(1, n)]
            if not all(C2.contains(M) for M in mats):
                continue
            cols = [list(_counter_digits(z1code, q, n))]
            ok = True
            for M in mats:
                sol = s2.solve_right(MatrixGF(field, n * n, 1, M.entries))
                if sol is None:
                    ok = False
                    break
                cols.append([sol.code_at(k, 0) for k in range(n)])
            if not ok:
                continue
            Z = MatrixGF.from_columns(field, cols)
            if Z.rank() != n:
                continue
            if _isotopism_holds(m1, m2, X, Y, Z):
                return IsotopyResult("isotopic", (X, Y, Z), report)
    report["method"] = "exhausted isotopism search"
    return IsotopyResult("not-isotopic", None, report)


def _isotopism_holds(m1, m2, X, Y, Z) -> bool:
    n = m1.n
    for i in range(n):
        ei = tuple(1 if t == i else 0 for t in range(n))
        yi = [Y.code_at(k, i) for k in range(n)]
        for j in range(n):
            ej = tuple(1 if t == j else 0 for t in range(n))
            zj = [Z.code_at(k, j) for k in range(n)]
            prod = m1.apply(ei, ej)
            lhs = [0] * n
            add = m1.field._top.add
            mul = m1.field._top.mul
            for k in range(n):
                for t in range(n):
                    if prod[t]:
                        lhs[k] = add(lhs[k], mul(X.code_at(k, t), prod[t]))
            if tuple(lhs) != m2.apply(yi, zj):
                return False
    return True
