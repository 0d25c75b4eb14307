"""Codes of symmetric matrices: type classification, bounds, duality.

Over odd q the congruence action X^T A X has exactly two orbits on
symmetric matrices of each nonzero rank. The sign convention here is
chi((-1)^floor(r/2) * disc), which makes even-rank plus hyperbolic.
Even characteristic has no implemented classification, only bounds.
"""

from fractions import Fraction

from .codes import RankDistribution, RankMetricCode, _prime_digits
from .errors import (ArgumentError, ConstructionRejected, DomainError,
                     StructureError, UnsupportedParameterError)
from .fields import GF, FieldDescriptor
from .matrices import MatrixGF
from .semifields import SemifieldMultiplication
from .transforms import delsarte_dual


class TypeDistribution:
    """Tallies a_0, then (a_{i,+}, a_{i,-}) for i = 1..n."""

    __slots__ = ("counts",)

    def __init__(self, counts):
        counts = tuple(int(c) for c in counts)
        if len(counts) < 1 or len(counts) % 2 == 0:
            raise ArgumentError(
                "type tallies hold one rank-0 slot and a +/- pair per rank")
        self.counts = counts

    @property
    def n(self) -> int:
        return (len(self.counts) - 1) // 2

    def plus(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise ArgumentError(f"rank {i} out of range")
        return self.counts[2 * i - 1]

    def minus(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise ArgumentError(f"rank {i} out of range")
        return self.counts[2 * i]

    def total(self) -> int:
        return sum(self.counts)

    def rank_distribution(self) -> RankDistribution:
        out = [self.counts[0]]
        for i in range(1, self.n + 1):
            out.append(self.plus(i) + self.minus(i))
        return RankDistribution(out)

    def __getitem__(self, i):
        return self.counts[i]

    def __iter__(self):
        return iter(self.counts)

    def __len__(self):
        return len(self.counts)

    def __eq__(self, other):
        if isinstance(other, TypeDistribution):
            return self.counts == other.counts
        if isinstance(other, (tuple, list)):
            return self.counts == tuple(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.counts)

    def __repr__(self):
        return f"TypeDistribution{self.counts}"


def _require_symmetric(M: MatrixGF, what: str) -> None:
    if M.nrows != M.ncols:
        raise DomainError(f"{what} is not square")
    n = M.nrows
    for i in range(n):
        for j in range(i + 1, n):
            if M.entries[i * n + j] != M.entries[j * n + i]:
                raise DomainError(f"{what} is not symmetric")


def symmetric_type(A: MatrixGF) -> tuple:
    """Rank and sign of a symmetric matrix under congruence, odd q only.

    The sign is chi((-1)^floor(r/2) * disc) of the nondegenerate part,
    computed by diagonalizing A congruently. Rank 0 is (0, "+") by
    convention.
    """
    if not isinstance(A, MatrixGF):
        raise ArgumentError("a matrix is required")
    field = A.field
    if field.p == 2:
        raise UnsupportedParameterError(
            "type classification is implemented for odd characteristic only")
    _require_symmetric(A, "the matrix")
    n = A.nrows
    top = field._top
    M = [list(A.row_codes(i)) for i in range(n)]

    def add_row_col(i, j):
        # A <- E A E^T with E = I + e_ij; keeps symmetry
        for t in range(n):
            M[i][t] = top.add(M[i][t], M[j][t])
        for t in range(n):
            M[t][i] = top.add(M[t][i], M[t][j])

    def swap(i, j):
        M[i], M[j] = M[j], M[i]
        for t in range(n):
            M[t][i], M[t][j] = M[t][j], M[t][i]

    diag = []
    for k in range(n):
        if M[k][k] == 0:
            pivot = None
            for i in range(k, n):
                if M[i][i]:
                    pivot = i
                    break
            if pivot is None:
                pair = None
                for i in range(k, n):
                    for j in range(i + 1, n):
                        if M[i][j]:
                            pair = (i, j)
                            break
                    if pair:
                        break
                if pair is None:
                    break
                add_row_col(*pair)
                pivot = pair[0]
            if pivot != k:
                swap(pivot, k)
        d = M[k][k]
        diag.append(d)
        dinv = top.inv(d)
        for i in range(k + 1, n):
            if not M[i][k]:
                continue
            f = top.mul(M[i][k], dinv)
            for t in range(n):
                M[i][t] = top.sub(M[i][t], top.mul(f, M[k][t]))
            for t in range(n):
                M[t][i] = top.sub(M[t][i], top.mul(f, M[t][k]))
    rank = len(diag)
    s = top.sub(0, 1) if (rank // 2) % 2 else 1
    for d in diag:
        s = top.mul(s, d)
    sign = "+" if top.pow(s, (field.order - 1) // 2) == 1 else "-"
    return rank, sign


def type_distribution(C: RankMetricCode) -> TypeDistribution:
    """Tally the codewords of a symmetric code by (rank, sign)."""
    if not isinstance(C, RankMetricCode):
        raise ArgumentError("a rank-metric code is required")
    if C.field.p == 2:
        raise UnsupportedParameterError(
            "type classification is implemented for odd characteristic only")
    if C.n != C.m:
        raise DomainError("symmetric codewords need a square shape")
    counts = [0] * (2 * C.n + 1)
    for W in C.codewords():
        _require_symmetric(W, "a codeword")
        r, sign = symmetric_type(W)
        if r == 0:
            counts[0] += 1
        else:
            counts[2 * r - 1 if sign == "+" else 2 * r] += 1
    return TypeDistribution(counts)


def _is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        p = q
    while q % p == 0:
        q //= p
    return q == 1


def schmidt_bound(q, n: int, d: int, additive: bool) -> int:
    """Largest possible size of a code in S_n(F_q) with minimum distance d.

    Additive codes split on the parity of n-d; non-additive codes with
    odd d split on the parity of n the same way, and even d carries an
    extra fractional factor, floored here to an integer size bound.
    """
    if isinstance(q, FieldDescriptor):
        q = q.order
    q = int(q)
    if not _is_prime_power(q):
        raise ArgumentError(f"{q} is not a prime power")
    n = int(n)
    d = int(d)
    if not 1 <= d <= n:
        raise ArgumentError(f"need 1 <= d <= n, got d={d}, n={n}")
    if additive or d % 2 == 1:
        # for odd d the parities of n-d and n agree, so one split serves both
        if (n - d) % 2 == 0:
            return q ** (n * (n - d + 2) // 2)
        return q ** ((n + 1) * (n - d + 1) // 2)
    if n % 2 == 1:
        val = Fraction(q ** (n * (n - d + 3) // 2)) * \
            (1 + Fraction(1, q ** (n - 1))) / (q + 1)
    else:
        val = Fraction(q ** ((n + 1) * (n - d + 2) // 2)) * \
            (1 + Fraction(1, q ** (n - d + 1))) / (q + 1)
    return int(val)


def symmetric_dual(C: RankMetricCode) -> RankMetricCode:
    """Dual within S_n: symmetric matrices orthogonal to every codeword.

    Computed as the symmetric part of the full-space dual, so it uses the
    same trace form. For odd q the form stays nondegenerate on S_n and the
    dimensions are complementary within it.
    """
    if not isinstance(C, RankMetricCode):
        raise ArgumentError("a rank-metric code is required")
    if C.n != C.m:
        raise DomainError("symmetric codewords need a square shape")
    for B in C.matrix_basis():
        _require_symmetric(B, "a basis codeword")
    D = delsarte_dual(C)
    mats = D.matrix_basis()
    if not mats:
        zero = RankMetricCode(C.field, C.n, C.m, "Fp", basis=(),
                              meta={"transform": "symmetric-dual"})
        return zero
    p = C.field.p
    deg = C.field.degree
    n = C.n
    rows = []
    for B in mats:
        diff = B - B.transpose()
        vec = []
        for c in diff.entries:
            vec.extend(_prime_digits(c, p, deg))
        rows.append(vec)
    kernel = MatrixGF(GF(p), len(rows), len(rows[0]),
                      tuple(x for r in rows for x in r)).left_kernel()
    out = []
    for combo in kernel.rows:
        acc = None
        for c, B in zip(combo, mats):
            if not c:
                continue
            term = B if c == 1 else B.scale(c)
            acc = term if acc is None else acc + term
        if acc is not None:
            out.append(acc)
    meta = {"transform": "symmetric-dual"}
    if not out:
        return RankMetricCode(C.field, n, n, "Fp", basis=(), meta=meta)
    return RankMetricCode.from_matrices(C.field, out, "Fp", meta=meta)


def commutative_to_symmetric(mult: SemifieldMultiplication) -> RankMetricCode:
    """Symmetric spread set of a commutative presemifield.

    The structure constants c_ijk are symmetric in (i, j) exactly when the
    product commutes; slicing the cube along k instead of j then yields
    symmetric matrices whose span is validated as an additive symmetric
    code meeting the distance-n bound.
    """
    if not isinstance(mult, SemifieldMultiplication):
        raise ArgumentError("a SemifieldMultiplication is required")
    n = mult.n
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                if mult.constant(i, j, k) != mult.constant(j, i, k):
                    raise ConstructionRejected(
                        f"product is not commutative at basis pair ({i}, {j})",
                        witness=(i, j))
    slices = []
    for k in range(n):
        entries = [mult.constant(i, j, k) for i in range(n) for j in range(n)]
        slices.append(MatrixGF(mult.field, n, n, entries))
    tag = "Fp" if mult.field.is_prime_field else "Fq"
    meta = {"family": "commutative-symmetric"}
    try:
        out = RankMetricCode.from_matrices(mult.field, slices, tag, meta=meta)
    except StructureError as exc:
        raise ConstructionRejected(
            f"transposed slices are dependent: {exc}") from exc
    if out.min_distance() != n:
        raise ConstructionRejected(
            "a transposed slice combination is singular; the product is "
            "not a presemifield")
    return out
