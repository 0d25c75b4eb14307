"""Operations that move between rank-metric codes.

Equivalence maps A -> X A^rho Y, Delsarte duality with the MacWilliams
transform of rank distributions, row and column shortening and
puncturing, lifting to constant-dimension subspace codes, and the left
and right idealisers of a code.

Duality always uses the bilinear form tr(sum_ij A_ij B_ij) with the
trace taken down to the prime field, so dual dimensions come out right
for every additive code, not only for codes linear over the entry
field.  The MacWilliams transform evaluates

    a'_j = (1/|C|) sum_i a_i sum_s (-1)^(j-s) q^(ns + binom(j-s,2))
                         [m-s choose m-j]_q [m-i choose s]_q

in exact integer arithmetic, with Gaussian binomials outside their
range taken as zero; the test suite reconciles it against duals
computed from the bilinear form.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import NamedTuple

from .caps import check_exhaustive
from .codes import RankDistribution, RankMetricCode, _prime_digits
from .errors import ArgumentError, DomainError, StructureError
from .fields import GF, FieldDescriptor, is_irreducible
from .linearized import SigmaPolynomial
from .matrices import (MatrixGF, SubspaceBasis, _rref_inplace,
                       gaussian_binomial_or_zero)


# ---------------------------------------------------------------------------
# Prime-level plumbing shared by the linear solves below.


def _prime_vector(field: FieldDescriptor, M: MatrixGF) -> list[int]:
    """Entries of M as digits over GF(p), row major, low digit first."""
    out = []
    for c in M.entries:
        out.extend(_prime_digits(c, field.p, field.degree))
    return out


def _matrix_from_prime_vector(field: FieldDescriptor, nrows: int, ncols: int,
                              vec) -> MatrixGF:
    deg, p = field.degree, field.p
    entries = []
    for k in range(nrows * ncols):
        code = 0
        for t in range(deg - 1, -1, -1):
            code = code * p + vec[k * deg + t]
        entries.append(code)
    return MatrixGF(field, nrows, ncols, entries)


def _prime_basis_matrices(C: RankMetricCode) -> list[MatrixGF]:
    rows, _ = C._prime_rref()
    return [_matrix_from_prime_vector(C.field, C.n, C.m, v) for v in rows]


def _prime_trace_code(field: FieldDescriptor, code: int) -> int:
    """Absolute trace down to GF(p), as a code below p."""
    add = field._top.add
    acc = 0
    for t in range(field.degree):
        acc = add(acc, field.prime_frob_code(code, t))
    return acc


def _trace_gram(field: FieldDescriptor) -> list[list[int]]:
    """Gram matrix of (x, y) -> tr(xy) on the prime basis 1, x, x^2, ..."""
    deg, p = field.degree, field.p
    mul = field._top.mul
    return [[_prime_trace_code(field, mul(p**t, p**s)) for s in range(deg)]
            for t in range(deg)]


def _gram_row(vec, T, deg: int, p: int) -> list[int]:
    """vec times the block-diagonal Gram matrix with blocks T."""
    out = [0] * len(vec)
    for k in range(0, len(vec), deg):
        for s in range(deg):
            acc = 0
            for t in range(deg):
                a = vec[k + t]
                if a:
                    acc += a * T[t][s]
            out[k + s] = acc % p
    return out


def _build_fp_code(field: FieldDescriptor, mats, nrows: int, ncols: int,
                   meta) -> RankMetricCode:
    if mats:
        return RankMetricCode.from_matrices(field, mats, "Fp", meta=meta)
    transposed = ncols > nrows
    if transposed:
        nrows, ncols = ncols, nrows
    return RankMetricCode(field, nrows, ncols, "Fp", basis=(),
                          transposed=transposed, meta=meta)


def _coerce_code(C) -> RankMetricCode:
    """Accept a code, or a full codeword collection that must be additive."""
    if isinstance(C, RankMetricCode):
        return C
    try:
        mats = list(C)
    except TypeError:
        raise ArgumentError(
            "expected a rank-metric code or an iterable of codewords") from None
    for M in mats:
        if not isinstance(M, MatrixGF):
            raise ArgumentError("codewords must be matrices over a finite field")
    if not mats:
        raise DomainError("the empty set misses zero, so it is not additive")
    field = mats[0].field
    shape = (mats[0].nrows, mats[0].ncols)
    for M in mats:
        if M.field != field or (M.nrows, M.ncols) != shape:
            raise DomainError("codewords disagree on shape or entry field")
    distinct = {M.entries for M in mats}
    vecs = [_prime_vector(field, M) for M in mats]
    rows, _ = _rref_inplace([list(v) for v in vecs], len(vecs[0]), GF(field.p))
    if field.p**len(rows) != len(distinct):
        raise DomainError("codeword set is not closed under addition")
    basis = [_matrix_from_prime_vector(field, shape[0], shape[1], r) for r in rows]
    return _build_fp_code(field, basis, shape[0], shape[1], None)


# ---------------------------------------------------------------------------
# Equivalence.


@dataclass(frozen=True)
class EquivalenceMove:
    """A -> x A^rho y, with an optional final transpose for square shapes.

    rho is the automorphism exponent: entries are raised to p^rho.
    Applied to a code in its stored n x m orientation.
    """

    x: MatrixGF
    y: MatrixGF
    rho: int = 0
    transpose: bool = False


def _entrywise_prime_frob(M: MatrixGF, t: int) -> MatrixGF:
    if t == 0:
        return M
    f = M.field.prime_frob_code
    return MatrixGF(M.field, M.nrows, M.ncols,
                    tuple(f(c, t) for c in M.entries))


def apply_equivalence(C: RankMetricCode, move: EquivalenceMove) -> RankMetricCode:
    """The code {x A^rho y : A in C}, transposed afterwards if asked."""
    if not isinstance(move, EquivalenceMove):
        raise ArgumentError("expected an EquivalenceMove")
    field = C.field
    X, Y = move.x, move.y
    if not isinstance(X, MatrixGF) or not isinstance(Y, MatrixGF):
        raise ArgumentError("move matrices must be matrices")
    if X.field != field or Y.field != field:
        raise StructureError("move matrices must live over the entry field")
    if (X.nrows, X.ncols) != (C.n, C.n):
        raise ArgumentError(f"x must be {C.n}x{C.n}")
    if (Y.nrows, Y.ncols) != (C.m, C.m):
        raise ArgumentError(f"y must be {C.m}x{C.m}")
    if not 0 <= move.rho < field.degree:
        raise ArgumentError("automorphism exponent out of range")
    if move.transpose and C.n != C.m:
        raise ArgumentError("transposition needs a square shape")
    if X.rank() != C.n:
        raise ArgumentError("x is singular")
    if Y.rank() != C.m:
        raise ArgumentError("y is singular")
    # a p-power twist is additive and bijective, so it carries any basis of
    # the code to a basis of the image; scalar linearity above Fp survives
    # only as Fq-linearity in general
    tag = "Fp" if C.linearity == "Fp" else "Fq"
    mats = []
    for B in C.matrix_basis():
        A = X * _entrywise_prime_frob(B, move.rho) * Y
        if move.transpose:
            A = A.transpose()
        mats.append(A)
    return RankMetricCode.from_matrices(field, mats, tag,
                                        meta={"transform": "equivalence"})


# ---------------------------------------------------------------------------
# Duality.


def _check_form_matrix(B, field: FieldDescriptor, size: int, name: str) -> MatrixGF:
    if not isinstance(B, MatrixGF):
        raise ArgumentError(f"{name} must be a matrix")
    if B.field != field:
        raise StructureError(f"{name} must live over the entry field")
    if (B.nrows, B.ncols) != (size, size):
        raise ArgumentError(f"{name} must be {size}x{size}")
    if B.rank() != size:
        raise ArgumentError(f"{name} is singular")
    return B


def delsarte_dual(C, b1: MatrixGF | None = None,
                  b2: MatrixGF | None = None) -> RankMetricCode:
    """All B with tr(sum_ij A_ij B_ij) = 0 for every codeword A.

    Optional invertible form matrices replace the standard pairing by
    (A, B) -> tr(sum (b1^T A b2)_ij B_ij); the result is the standard
    dual conjugated by b1^-1 on the left and b2^-T on the right.

    Also accepts a raw codeword collection, which must be additive.
    """
    C = _coerce_code(C)
    field = C.field
    n, m = C.n, C.m
    deg, p = field.degree, field.p
    if b1 is not None:
        b1 = _check_form_matrix(b1, field, n, "b1")
    if b2 is not None:
        b2 = _check_form_matrix(b2, field, m, "b2")
    rows, _ = C._prime_rref()
    amb = n * m * deg
    if rows:
        T = _trace_gram(field)
        flat = []
        for v in rows:
            if b1 is not None or b2 is not None:
                A = _matrix_from_prime_vector(field, n, m, v)
                if b1 is not None:
                    A = b1.transpose() * A
                if b2 is not None:
                    A = A * b2
                v = _prime_vector(field, A)
            flat.extend(_gram_row(v, T, deg, p))
        kernel = MatrixGF(GF(p), len(rows), amb, flat).right_kernel()
        out_rows = kernel.rows
    else:
        out_rows = [tuple(1 if j == k else 0 for j in range(amb))
                    for k in range(amb)]
    mats = [_matrix_from_prime_vector(field, n, m, r) for r in out_rows]
    return _build_fp_code(field, mats, n, m, {"transform": "dual"})


def macwilliams_transform(dist, q: int, n: int, m: int, dim_c) -> RankDistribution:
    """Rank distribution of the dual from the distribution of the code.

    dim_c is the dimension over GF(q); a Fraction is accepted so that
    additive codes with |C| = p^D can state D/e.  The distribution must
    sum to q^dim_c.
    """
    if isinstance(q, FieldDescriptor):
        q = q.order
    if not 1 <= m <= n:
        raise ArgumentError(f"need 1 <= m <= n, got m={m}, n={n}")
    counts = list(dist)
    if len(counts) != m + 1:
        raise ArgumentError(f"distribution must list ranks 0..{m}")
    for c in counts:
        if not isinstance(c, int) or c < 0:
            raise ArgumentError("distribution counts must be nonnegative integers")
    if counts[0] != 1:
        raise ArgumentError("an additive code has exactly one word of rank 0")
    try:
        k = Fraction(dim_c)
    except (TypeError, ValueError):
        raise ArgumentError("dim_c must be a number") from None
    total = sum(counts)
    if k < 0 or total**k.denominator != q**k.numerator:
        raise ArgumentError(
            f"distribution sums to {total}, not q^dim_c = {q}^{dim_c}")
    out = []
    for j in range(m + 1):
        acc = 0
        for i, a in enumerate(counts):
            if not a:
                continue
            inner = 0
            for s in range(j + 1):
                term = (q**(n * s + comb(j - s, 2))
                        * gaussian_binomial_or_zero(m - s, m - j, q)
                        * gaussian_binomial_or_zero(m - i, s, q))
                inner += -term if (j - s) % 2 else term
            acc += a * inner
        val = Fraction(acc, total)
        if val.denominator != 1 or val < 0:
            raise DomainError(
                "transform left the code distributions; the input is not "
                "the rank distribution of an additive code")
        out.append(int(val))
    return RankDistribution(out)


def linearized_dual(polys) -> tuple[SigmaPolynomial, ...]:
    """Dual of the additive span of polys under (f, g) = tr(sum_i f_i g_i).

    The trace goes down to the prime field, matching delsarte_dual; the
    returned polynomials form a basis of everything orthogonal to the
    span inside the full space of sigma polynomials.
    """
    polys = list(polys)
    if not polys:
        raise ArgumentError("at least one polynomial is required")
    for f in polys:
        if not isinstance(f, SigmaPolynomial):
            raise ArgumentError("expected sigma polynomials")
    field, s = polys[0].field, polys[0].s
    for f in polys[1:]:
        if f.field != field or f.s != s:
            raise StructureError("mismatched tower or twist")
    deg, p, n = field.degree, field.p, field.n
    vecs = []
    for f in polys:
        v = []
        for c in f.coeffs:
            v.extend(_prime_digits(c, p, deg))
        vecs.append(v)
    rows, _ = _rref_inplace(vecs, n * deg, GF(p))
    if rows:
        T = _trace_gram(field)
        flat = []
        for w in rows:
            flat.extend(_gram_row(w, T, deg, p))
        kernel = MatrixGF(GF(p), len(rows), n * deg, flat).right_kernel()
        out_rows = kernel.rows
    else:
        out_rows = [tuple(1 if j == k else 0 for j in range(n * deg))
                    for k in range(n * deg)]
    out = []
    for r in out_rows:
        coeffs = []
        for i in range(n):
            code = 0
            for t in range(deg - 1, -1, -1):
                code = code * p + r[i * deg + t]
            coeffs.append(code)
        out.append(SigmaPolynomial(field, s, coeffs))
    return tuple(out)


# ---------------------------------------------------------------------------
# Shortening and puncturing.


def _check_axis(axis: str) -> str:
    if axis not in ("row", "column"):
        raise ArgumentError("axis must be 'row' or 'column'")
    return axis


def shorten(C: RankMetricCode, U: SubspaceBasis, axis: str = "row") -> RankMetricCode:
    """Codewords annihilating U, re-expressed over the annihilator of U.

    Row axis: keeps {A : A u = 0 for u in U} with U below F_q^m, writing
    the surviving row spaces in the RREF basis of the annihilator, so the
    result lives in n x (m - dim U).  Column axis mirrors this on the
    left, landing in (n - dim U) x m before reorientation.
    """
    axis = _check_axis(axis)
    if not isinstance(U, SubspaceBasis):
        raise ArgumentError("shortening needs a SubspaceBasis")
    field = C.field
    if U.field != field:
        raise StructureError("subspace over the wrong field")
    side = C.m if axis == "row" else C.n
    if U.ambient_dim != side:
        raise ArgumentError(f"subspace must live in F^{side}")
    keep = side - U.dim
    if keep == 0:
        raise ArgumentError("shortening by the full space leaves no coordinates")
    R = U.annihilator().matrix()
    rows, _ = C._prime_rref()
    p = field.p
    if U.dim == 0:
        selected = rows
    else:
        Umat = U.matrix()
        flat = []
        width = 0
        for v in rows:
            B = _matrix_from_prime_vector(field, C.n, C.m, v)
            prod = B * Umat.transpose() if axis == "row" else Umat * B
            w = _prime_vector(field, prod)
            width = len(w)
            flat.extend(w)
        kernel = MatrixGF(GF(p), len(rows), width, flat).left_kernel()
        selected = []
        for combo in kernel.rows:
            acc = [0] * len(rows[0])
            for c, v in zip(combo, rows):
                if c:
                    for j, x in enumerate(v):
                        if x:
                            acc[j] = (acc[j] + c * x) % p
            selected.append(acc)
    RT = R.transpose()
    out = []
    for v in selected:
        A = _matrix_from_prime_vector(field, C.n, C.m, v)
        if axis == "row":
            sol = RT.solve_right(A.transpose())
        else:
            sol = RT.solve_right(A)
        if sol is None:
            raise StructureError("selected codeword escapes the annihilator")
        out.append(sol.transpose() if axis == "row" else sol)
    shape = (C.n, keep) if axis == "row" else (keep, C.m)
    return _build_fp_code(field, out, shape[0], shape[1],
                          {"transform": "shorten", "axis": axis})


def puncture(C: RankMetricCode, M: MatrixGF, axis: str = "row") -> RankMetricCode:
    """The image code under row maps A -> M A or column maps A -> A M,
    re-expressed in the RREF basis of the image of M.

    Row axis needs M with n columns; the result lives in rank(M) x m.
    Column axis needs M with m rows; the result lives in n x rank(M).
    """
    axis = _check_axis(axis)
    if not isinstance(M, MatrixGF):
        raise ArgumentError("puncturing needs a matrix")
    field = C.field
    if M.field != field:
        raise StructureError("puncturing matrix over the wrong field")
    if axis == "row" and M.ncols != C.n:
        raise ArgumentError(f"row puncturing needs {C.n} columns")
    if axis == "column" and M.nrows != C.m:
        raise ArgumentError(f"column puncturing needs {C.m} rows")
    t = M.rank()
    if t == 0:
        raise ArgumentError("puncturing by the zero map")
    imgs = []
    if axis == "row":
        Bc = M.column_space().matrix().transpose()
        for B in _prime_basis_matrices(C):
            sol = Bc.solve_right(M * B)
            if sol is None:
                raise StructureError("image escapes the image basis")
            imgs.append(sol)
        shape = (t, C.m)
    else:
        RT = M.row_space().matrix().transpose()
        for B in _prime_basis_matrices(C):
            sol = RT.solve_right((B * M).transpose())
            if sol is None:
                raise StructureError("image escapes the image basis")
            imgs.append(sol.transpose())
        shape = (C.n, t)
    # images of a basis can collapse, so reduce to an independent set
    vecs = [_prime_vector(field, A) for A in imgs]
    if vecs:
        rows, _ = _rref_inplace(vecs, len(vecs[0]), GF(field.p))
    else:
        rows = []
    mats = [_matrix_from_prime_vector(field, shape[0], shape[1], r) for r in rows]
    return _build_fp_code(field, mats, shape[0], shape[1],
                          {"transform": "puncture", "axis": axis})


# ---------------------------------------------------------------------------
# Lifting.


def lift(C: RankMetricCode) -> tuple[SubspaceBasis, ...]:
    """The subspaces {(x, Ax)} of F_q^(m+n), one per codeword.

    Each lift has dimension m and comes as its RREF basis (I | column_i(A)
    rows), so the result is a constant-dimension subspace code.
    """
    field = C.field
    n, m = C.n, C.m
    out = []
    for A in C.codewords():
        rows = []
        for i in range(m):
            row = [0] * m
            row[i] = 1
            rows.append(row + list(A.column_codes(i)))
        out.append(SubspaceBasis(field, m + n, rows))
    return tuple(out)


def subspace_distance(U: SubspaceBasis, V: SubspaceBasis) -> int:
    """2 dim(U+V) - dim U - dim V, the metric of subspace codes."""
    if not isinstance(U, SubspaceBasis) or not isinstance(V, SubspaceBasis):
        raise ArgumentError("expected two subspace bases")
    if U.field != V.field or U.ambient_dim != V.ambient_dim:
        raise ArgumentError("subspaces live in different ambients")
    return 2 * U.sum_with(V).dim - U.dim - V.dim


# ---------------------------------------------------------------------------
# Idealisers.


class Idealisers(NamedTuple):
    left_basis: tuple[MatrixGF, ...]
    right_basis: tuple[MatrixGF, ...]
    left_order: int
    right_order: int
    fqn_linear: bool


def _reduce_against(rows, pivots, vec, p: int) -> list[int]:
    v = list(vec)
    for row, piv in zip(rows, pivots):
        c = v[piv]
        if c:
            for j in range(piv, len(v)):
                if row[j]:
                    v[j] = (v[j] - c * row[j]) % p
    return v


def _idealiser_side(C: RankMetricCode, left: bool) -> list[MatrixGF]:
    field = C.field
    side = C.n if left else C.m
    deg, p = field.degree, field.p
    crows, cpivots = C._prime_rref()
    Bmats = _prime_basis_matrices(C)
    amb = side * side * deg
    if not Bmats:
        # the zero code is idealised by everything
        return [_matrix_from_prime_vector(
            field, side, side, [1 if j == k else 0 for j in range(amb)])
            for k in range(amb)]
    flat = []
    width = 0
    for k in range(amb):
        vec = [0] * amb
        vec[k] = 1
        E = _matrix_from_prime_vector(field, side, side, vec)
        row = []
        for B in Bmats:
            P = E * B if left else B * E
            row.extend(_reduce_against(crows, cpivots, _prime_vector(field, P), p))
        width = len(row)
        flat.extend(row)
    kernel = MatrixGF(GF(p), amb, width, flat).left_kernel()
    return [_matrix_from_prime_vector(field, side, side, r) for r in kernel.rows]


def _prime_min_poly_full(field: FieldDescriptor, X: MatrixGF, want: int) -> bool:
    """True when the minimal polynomial of X over GF(p) is irreducible
    of degree exactly `want`, so GF(p)[X] is a field of order p^want."""
    prime = GF(field.p)
    cur = MatrixGF.identity(field, X.nrows)
    vecs = [_prime_vector(field, cur)]
    for k in range(1, want + 1):
        cur = cur * X
        vecs.append(_prime_vector(field, cur))
        rows, _ = _rref_inplace([list(v) for v in vecs], len(vecs[0]), prime)
        if len(rows) < k + 1:
            if k != want:
                return False
            A = MatrixGF.from_columns(prime, vecs[:k])
            rhs = MatrixGF.from_columns(prime, [vecs[k]])
            sol = A.solve_right(rhs)
            if sol is None:
                return False
            coeffs = [(field.p - sol.code_at(i, 0)) % field.p for i in range(k)]
            coeffs.append(1)
            return is_irreducible(coeffs, prime)
    return False


def _contains_tower_field(C: RankMetricCode, basis_mats) -> bool:
    """Does the span of basis_mats contain a field of order q^n?"""
    field = C.field
    want = field.degree * C.n
    if len(basis_mats) < want:
        return False
    p = field.p
    check_exhaustive(p**len(basis_mats), "idealiser subfield search")
    vecs = [_prime_vector(field, X) for X in basis_mats]
    length = len(vecs[0])
    for combo in itertools.product(range(p), repeat=len(basis_mats)):
        if not any(combo):
            continue
        w = [0] * length
        for c, v in zip(combo, vecs):
            if c:
                for j, x in enumerate(v):
                    if x:
                        w[j] = (w[j] + c * x) % p
        X = _matrix_from_prime_vector(field, C.n, C.n, w)
        if _prime_min_poly_full(field, X, want):
            return True
    return False


def idealisers(C: RankMetricCode) -> Idealisers:
    """Left and right idealisers {X : XC <= C} and {Y : CY <= C}.

    Returns prime-field bases and orders of both, plus a flag telling
    whether the left idealiser contains a field of order q^n, which is
    what linearity over the degree-n extension of the entry field means
    for a code in its n x m orientation.
    """
    if not isinstance(C, RankMetricCode):
        raise ArgumentError("expected a rank-metric code")
    left = _idealiser_side(C, True)
    right = _idealiser_side(C, False)
    p = C.field.p
    flag = _contains_tower_field(C, left)
    return Idealisers(tuple(left), tuple(right),
                      p**len(left), p**len(right), flag)
