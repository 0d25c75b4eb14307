"""Congruence types, symmetric-code bounds, duality, commutative bridge."""

import itertools

import numpy as np
import pytest

from ranklab import (
    GF,
    ArgumentError,
    ConstructionRejected,
    DomainError,
    EquivalenceMove,
    FieldElement,
    MatrixGF,
    RankDistribution,
    RankMetricCode,
    SemifieldMultiplication,
    SubspaceBasis,
    TypeDistribution,
    UnsupportedParameterError,
    albert_twisted_field,
    apply_equivalence,
    commutative_to_symmetric,
    mult_from_spread,
    schmidt_bound,
    symmetric_dual,
    symmetric_type,
    type_distribution,
)
from ranklab.matrices import random_invertible


def sym(field, *rows):
    n = len(rows)
    return MatrixGF(field, n, n, tuple(x for r in rows for x in r))


def congruence_orbits(q, n):
    """Partition all of S_n(F_q) under A -> X^T A X, X in GL(n, q)."""
    F = GF(q)
    top = F._top
    gen = next(c for c in range(2, q)
               if all(top.pow(c, (q - 1) // f) != 1
                      for f in range(2, q) if (q - 1) % f == 0))
    eye = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    gens = []
    D = [r[:] for r in eye]
    D[0][0] = gen
    gens.append(D)
    if n > 1:
        T = [r[:] for r in eye]
        T[0][1] = 1
        gens.append(T)
        S = [r[:] for r in eye]
        S[0], S[1] = S[1], S[0]
        gens.append(S)
    if n > 2:
        gens.append([[1 if j == (i + 1) % n else 0 for j in range(n)]
                     for i in range(n)])

    def conj(A, X):
        AX = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                s = 0
                for k in range(n):
                    if A[i][k] and X[k][j]:
                        s = top.add(s, top.mul(A[i][k], X[k][j]))
                AX[i][j] = s
        out = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                s = 0
                for k in range(n):
                    if X[k][i] and AX[k][j]:
                        s = top.add(s, top.mul(X[k][i], AX[k][j]))
                out[i][j] = s
        return out

    upper = [(i, j) for i in range(n) for j in range(i, n)]
    unseen = {}
    for vals in itertools.product(range(q), repeat=len(upper)):
        A = [[0] * n for _ in range(n)]
        for (i, j), v in zip(upper, vals):
            A[i][j] = v
            A[j][i] = v
        unseen[tuple(x for r in A for x in r)] = A
    orbits = []
    while unseen:
        key = next(iter(unseen))
        frontier = [unseen.pop(key)]
        orbit = list(frontier)
        while frontier:
            nxt = []
            for A in frontier:
                for X in gens:
                    B = conj(A, X)
                    hit = unseen.pop(tuple(x for r in B for x in r), None)
                    if hit is not None:
                        orbit.append(B)
                        nxt.append(B)
            frontier = nxt
        orbits.append(orbit)
    return F, orbits


# -- symmetric_type -----------------------------------------------------------


def test_type_anchors_over_f3():
    F3 = GF(3)
    assert symmetric_type(sym(F3, (0, 0), (0, 0))) == (0, "+")
    assert symmetric_type(sym(F3, (1, 0), (0, 1))) == (2, "-")
    assert symmetric_type(sym(F3, (1, 0), (0, 2))) == (2, "+")
    # the hyperbolic plane is the plus type in even rank
    assert symmetric_type(sym(F3, (0, 1), (1, 0))) == (2, "+")
    assert symmetric_type(sym(F3, (1, 0), (0, 0))) == (1, "+")
    assert symmetric_type(sym(F3, (2, 0), (0, 0))) == (1, "-")


def test_type_anchors_over_f9():
    F9 = GF(3, 2)
    # -1 is a square in GF(9), so the identity plane flips to plus
    assert symmetric_type(sym(F9, (1, 0), (0, 1))) == (2, "+")
    assert symmetric_type(sym(F9, (1, 0), (0, 4))) == (2, "-")


def test_type_handles_zero_diagonal_blocks():
    F3 = GF(3)
    A = sym(F3, (0, 1, 0), (1, 0, 0), (0, 0, 2))
    r, s = symmetric_type(A)
    assert r == 3
    # congruent to hyperbolic + <2>: disc 2*(-1), sign chi(-1 * -2) = chi(2)
    assert s == "-"


def test_type_validation():
    F3 = GF(3)
    with pytest.raises(ArgumentError):
        symmetric_type((1, 0, 0, 1))
    with pytest.raises(DomainError, match="square"):
        symmetric_type(MatrixGF(F3, 2, 1, (1, 0)))
    with pytest.raises(DomainError, match="symmetric"):
        symmetric_type(MatrixGF(F3, 2, 2, (0, 1, 0, 0)))
    with pytest.raises(UnsupportedParameterError):
        symmetric_type(MatrixGF.identity(GF(2), 2))


def test_type_invariant_under_congruence_over_f9():
    F9 = GF(3, 2)
    rng = np.random.default_rng(11)
    for _ in range(60):
        n = int(rng.integers(1, 4))
        ent = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                v = int(rng.integers(0, 9))
                ent[i][j] = v
                ent[j][i] = v
        A = MatrixGF(F9, n, n, tuple(x for r in ent for x in r))
        X = random_invertible(F9, n, rng)
        assert symmetric_type(X.transpose() * A * X) == symmetric_type(A)


@pytest.mark.parametrize("q,n", [(3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (5, 3)])
def test_congruence_orbits_are_classified_exactly(q, n):
    F, orbits = congruence_orbits(q, n)
    assert sum(len(o) for o in orbits) == q ** (n * (n + 1) // 2)
    seen = {}
    for orbit in orbits:
        types = {symmetric_type(MatrixGF(F, n, n, tuple(x for r in A for x in r)))
                 for A in orbit}
        # one type per orbit, one orbit per type
        assert len(types) == 1
        t = types.pop()
        assert t not in seen
        seen[t] = len(orbit)
    ranks = sorted(r for r, _ in seen)
    assert ranks.count(0) == 1
    for r in range(1, n + 1):
        assert ranks.count(r) == 2


def test_orbit_sizes_over_f3():
    _, orbits2 = congruence_orbits(3, 2)
    F3 = GF(3)
    sizes2 = {}
    for o in orbits2:
        t = symmetric_type(MatrixGF(F3, 2, 2, tuple(x for r in o[0] for x in r)))
        sizes2[t] = len(o)
    assert sizes2 == {(0, "+"): 1, (1, "+"): 4, (1, "-"): 4,
                      (2, "+"): 12, (2, "-"): 6}
    _, orbits3 = congruence_orbits(3, 3)
    sizes3 = {}
    for o in orbits3:
        t = symmetric_type(MatrixGF(F3, 3, 3, tuple(x for r in o[0] for x in r)))
        sizes3[t] = len(o)
    assert sizes3 == {(0, "+"): 1, (1, "+"): 13, (1, "-"): 13,
                      (2, "+"): 156, (2, "-"): 78,
                      (3, "+"): 234, (3, "-"): 234}


# -- TypeDistribution ----------------------------------------------------------


def test_type_distribution_container():
    td = TypeDistribution((1, 4, 4, 12, 6))
    assert td.n == 2
    assert td[0] == 1 and td.plus(1) == 4 and td.minus(2) == 6
    assert td.total() == 27
    assert td == (1, 4, 4, 12, 6)
    assert td == TypeDistribution([1, 4, 4, 12, 6])
    assert td.rank_distribution() == RankDistribution((1, 8, 18))
    assert len(td) == 5 and list(td) == [1, 4, 4, 12, 6]
    with pytest.raises(ArgumentError):
        TypeDistribution((1, 2))
    with pytest.raises(ArgumentError):
        td.plus(3)


def test_full_ambient_distribution_matches_orbit_census():
    F3 = GF(3)
    S2 = RankMetricCode.from_matrices(
        F3, [sym(F3, (1, 0), (0, 0)), sym(F3, (0, 0), (0, 1)),
             sym(F3, (0, 1), (1, 0))], "Fp")
    td = type_distribution(S2)
    assert td == (1, 4, 4, 12, 6)
    assert td.rank_distribution() == S2.rank_distribution()


def test_distribution_invariant_under_congruence():
    F3 = GF(3)
    S2 = RankMetricCode.from_matrices(
        F3, [sym(F3, (1, 0), (0, 0)), sym(F3, (0, 0), (0, 1)),
             sym(F3, (0, 1), (1, 0))], "Fp")
    td = type_distribution(S2)
    rng = np.random.default_rng(7)
    for _ in range(25):
        X = random_invertible(F3, 2, rng)
        moved = apply_equivalence(S2, EquivalenceMove(X.transpose(), X))
        assert type_distribution(moved) == td


def test_distribution_validation():
    F3 = GF(3)
    asym = RankMetricCode.from_matrices(F3, [MatrixGF(F3, 2, 2, (0, 1, 0, 0))],
                                        "Fp")
    with pytest.raises(DomainError, match="symmetric"):
        type_distribution(asym)
    tall = RankMetricCode.from_matrices(F3, [MatrixGF(F3, 2, 1, (1, 0))], "Fp")
    with pytest.raises(DomainError, match="square"):
        type_distribution(tall)
    even = RankMetricCode.from_matrices(GF(2), [MatrixGF.identity(GF(2), 2)],
                                        "Fp")
    with pytest.raises(UnsupportedParameterError):
        type_distribution(even)
    with pytest.raises(ArgumentError):
        type_distribution([MatrixGF.identity(F3, 2)])


# -- bounds ---------------------------------------------------------------------


def test_bound_anchors():
    assert schmidt_bound(3, 3, 3, True) == 27
    assert schmidt_bound(2, 3, 2, True) == 16
    assert schmidt_bound(3, 2, 2, True) == 9
    # odd-distance non-additive agrees with additive
    assert schmidt_bound(3, 3, 3, False) == 27
    assert schmidt_bound(5, 3, 1, False) == schmidt_bound(5, 3, 1, True)
    # even-distance non-additive exceeds additive
    assert schmidt_bound(2, 3, 2, False) == 26
    assert schmidt_bound(3, 3, 2, False) == 202
    assert schmidt_bound(3, 2, 2, False) == 9


def test_bound_at_full_distance_is_field_size():
    for q in (2, 3, 4, 5, 8, 9):
        for n in (1, 2, 3, 4):
            assert schmidt_bound(q, n, n, True) == q ** n


def test_nonadditive_bound_never_below_additive():
    for q in (2, 3, 5):
        for n in range(1, 5):
            for d in range(1, n + 1):
                assert schmidt_bound(q, n, d, False) >= schmidt_bound(q, n, d, True)


def test_bound_validation():
    with pytest.raises(ArgumentError):
        schmidt_bound(6, 2, 2, True)
    with pytest.raises(ArgumentError):
        schmidt_bound(3, 2, 3, True)
    with pytest.raises(ArgumentError):
        schmidt_bound(3, 2, 0, True)
    assert schmidt_bound(GF(3, 2), 2, 2, True) == 81


def test_additive_bound_is_tight_in_s2_f3():
    # exhaustive over all subspaces of S_2(F_3): max size at distance 2
    F3 = GF(3)
    top = F3._top
    vectors = [v for v in itertools.product(range(3), repeat=3) if any(v)]
    seen = set()
    best, achievers = 0, 0
    for k in (1, 2, 3):
        for combo in itertools.combinations(vectors, k):
            S = SubspaceBasis.from_vectors(F3, 3, combo)
            if S.dim != k or S.rows in seen:
                continue
            seen.add(S.rows)
            ok = True
            for coeffs in itertools.product(range(3), repeat=k):
                if not any(coeffs):
                    continue
                acc = [0, 0, 0]
                for c, row in zip(coeffs, S.rows):
                    for t in range(3):
                        acc[t] = top.add(acc[t], top.mul(c, row[t]))
                a, c_, b = acc
                if MatrixGF(F3, 2, 2, (a, b, b, c_)).rank() < 2:
                    ok = False
                    break
            if ok:
                size = 3 ** k
                if size > best:
                    best, achievers = size, 1
                elif size == best:
                    achievers += 1
    assert len(seen) == 27
    assert best == schmidt_bound(3, 2, 2, True) == 9
    assert achievers == 3


# -- commutative bridge ----------------------------------------------------------


def test_field_bridge_meets_the_bound():
    C = commutative_to_symmetric(SemifieldMultiplication.from_field(GF(3, 1, 2)))
    assert C.cardinality == 9 == schmidt_bound(3, 2, 2, True)
    assert C.min_distance() == 2 and C.is_mrd()
    for B in C.matrix_basis():
        assert B.entries == B.transpose().entries
    assert type_distribution(C) == (1, 0, 0, 4, 4)


def test_albert_commutative_bridge():
    # i = j = 1 makes the twisted product commutative
    A = albert_twisted_field(3, 3, 1, 1, 2)
    m = mult_from_spread(A)
    assert m.is_commutative
    C = commutative_to_symmetric(m)
    assert C.cardinality == 27 == schmidt_bound(3, 3, 3, True)
    assert C.min_distance() == 3 and C.is_mrd()
    td = type_distribution(C)
    assert td[0] == 1 and td.total() == 27
    assert td.rank_distribution() == C.rank_distribution()


def test_bridge_works_in_even_characteristic_but_typing_does_not():
    C = commutative_to_symmetric(SemifieldMultiplication.from_field(GF(2, 1, 2)))
    assert C.cardinality == 4 == schmidt_bound(2, 2, 2, True)
    assert C.min_distance() == 2
    with pytest.raises(UnsupportedParameterError):
        type_distribution(C)


def test_bridge_rejects_noncommutative_products():
    F4 = GF(2, 1, 2)
    skew = SemifieldMultiplication.from_product(F4, lambda x, y: x * (y * y))
    with pytest.raises(ConstructionRejected) as exc:
        commutative_to_symmetric(skew)
    assert exc.value.witness == (0, 1)
    with pytest.raises(ArgumentError):
        commutative_to_symmetric("table")


def test_bridge_rejects_singular_slices():
    # coordinatewise product is commutative but has zero divisors
    table = (1, 0, 0, 0, 0, 0, 0, 1)
    m = SemifieldMultiplication(GF(2), 2, table)
    with pytest.raises(ConstructionRejected):
        commutative_to_symmetric(m)


# -- duality inside the symmetric space --------------------------------------------


def test_symmetric_dual_of_field_bridge():
    C = commutative_to_symmetric(SemifieldMultiplication.from_field(GF(3, 1, 2)))
    D = symmetric_dual(C)
    basis = D.matrix_basis()
    assert len(basis) == 1
    assert basis[0].entries == (1, 0, 0, 1)
    # form vanishes between the two: entrywise dot over F_3
    top = GF(3)._top
    for A in C.codewords():
        for B in D.codewords():
            acc = 0
            for a, b in zip(A.entries, B.entries):
                acc = top.add(acc, top.mul(a, b))
            assert acc == 0
    assert symmetric_dual(D).same_codeword_set(C)


def test_symmetric_dual_of_zero_code_is_everything():
    Z = RankMetricCode(GF(3), 2, 2, "Fp", basis=())
    full = symmetric_dual(Z)
    assert len(full.matrix_basis()) == 3
    assert all(B.entries == B.transpose().entries for B in full.matrix_basis())
    back = symmetric_dual(full)
    assert back.cardinality == 1


def test_symmetric_dual_of_diagonal_span():
    F5 = GF(5)
    C = RankMetricCode.from_matrices(
        F5, [sym(F5, (1, 0), (0, 0)), sym(F5, (0, 0), (0, 1))], "Fp")
    D = symmetric_dual(C)
    assert [B.entries for B in D.matrix_basis()] == [(0, 1, 1, 0)]


def test_symmetric_dual_dimension_complement_odd_q():
    # dim C + dim dual = dim S_n whenever q is odd
    F3 = GF(3)
    rng = np.random.default_rng(19)
    units = [sym(F3, (1, 0, 0), (0, 0, 0), (0, 0, 0)),
             sym(F3, (0, 0, 0), (0, 1, 0), (0, 0, 0)),
             sym(F3, (0, 0, 0), (0, 0, 0), (0, 0, 1)),
             sym(F3, (0, 1, 0), (1, 0, 0), (0, 0, 0)),
             sym(F3, (0, 0, 1), (0, 0, 0), (1, 0, 0)),
             sym(F3, (0, 0, 0), (0, 0, 1), (0, 1, 0))]
    top = F3._top
    for _ in range(10):
        k = int(rng.integers(1, 6))
        picks = []
        for _ in range(k):
            coeffs = [int(c) for c in rng.integers(0, 3, size=6)]
            acc = None
            for c, U in zip(coeffs, units):
                if not c:
                    continue
                term = U if c == 1 else U.scale(c)
                acc = term if acc is None else acc + term
            if acc is not None:
                picks.append(acc)
        if not picks:
            continue
        try:
            C = RankMetricCode.from_matrices(F3, picks, "Fp")
        except Exception:
            continue
        D = symmetric_dual(C)
        assert len(C.matrix_basis()) + len(D.matrix_basis()) == 6
        assert symmetric_dual(D).same_codeword_set(C)


def test_symmetric_dual_validation():
    F3 = GF(3)
    asym = RankMetricCode.from_matrices(F3, [MatrixGF(F3, 2, 2, (0, 1, 0, 0))],
                                        "Fp")
    with pytest.raises(DomainError, match="symmetric"):
        symmetric_dual(asym)
    tall = RankMetricCode.from_matrices(F3, [MatrixGF(F3, 2, 1, (1, 0))], "Fp")
    with pytest.raises(DomainError, match="square"):
        symmetric_dual(tall)
    with pytest.raises(ArgumentError):
        symmetric_dual("code")
