from math import comb

import pytest

from published_tables import M, S, TRUNCATED, as_masks, free_of, satisfies
from sdcyclic.exceptions import MissingAssignment
from sdcyclic.gf2m import field_new
from sdcyclic.solver import (
    BitMatrix,
    build_G,
    build_M,
    is_solution,
    level_for,
    solve_homogeneous,
    solve_recursive,
    truncate,
)


@pytest.mark.parametrize("l", sorted(M))
def test_M_matches_published_tables(l):
    assert build_M(l).to_strings() == M[l]


@pytest.mark.parametrize("lam", range(1, 7))
def test_G_is_involutive_lucas_matrix(lam):
    G = build_G(lam)
    n = 1 << lam
    assert G @ G == BitMatrix.identity(n)
    assert G.to_lists() == [[comb(i, j) % 2 for j in range(n)] for i in range(n)]


def test_G_kronecker_recursion():
    G2 = build_G(1)
    assert G2.to_lists() == [[1, 0], [1, 1]]
    for lam in range(2, 6):
        assert build_G(lam) == build_G(lam - 1).kron(G2)


def test_bitmatrix_basics():
    A = BitMatrix.from_lists([[1, 0, 1], [0, 1, 1]])
    assert A.to_strings() == ["101", "011"]
    assert A.rank() == 2
    assert A.apply([1, 1, 1]) == [0, 0]
    assert (A + A) == BitMatrix.zeros(2, 3)
    assert A[0, 2] == 1 and A[1, 0] == 0
    assert BitMatrix.identity(3) @ BitMatrix.from_lists([[1], [0], [1]]) == BitMatrix.from_lists(
        [[1], [0], [1]]
    )


def test_level_for():
    assert [level_for(l) for l in (1, 2, 3, 4, 5, 8, 9, 16, 17)] == [1, 1, 2, 2, 3, 3, 4, 4, 5]


@pytest.mark.parametrize("l", range(1, 65))
def test_dimension_law(l):
    Ml = build_M(l)
    assert Ml.is_lower_triangular(strict=True)
    assert Ml.rank() == l // 2
    assert solve_homogeneous(l).dim == (l + 1) // 2
    assert solve_recursive(l) == solve_homogeneous(l)


@pytest.mark.parametrize("l", range(1, 65))
def test_dependency_rows_structure(l):
    sp = solve_recursive(l)
    # free set is every odd index plus the top one
    assert set(sp.free) == {i for i in range(l) if i % 2 or i == l - 1}
    for i, row in sp.bound.items():
        assert row < (1 << i)
        assert all(j in sp.free for j in range(l) if row >> j & 1)
    for vec in sp.basis():
        assert is_solution(l, vec)


@pytest.mark.parametrize("l", sorted(S))
def test_matches_published_parametrisations(l):
    sp = solve_recursive(l)
    assert sp.free == free_of(S[l])
    assert sp.rows() == as_masks(S[l])


@pytest.mark.parametrize("key", sorted(TRUNCATED))
def test_truncations_match_published_lists(key):
    l, delta = key
    t = truncate(solve_recursive(l), delta)
    assert t.rows() == as_masks(TRUNCATED[key])
    assert t.free == free_of(TRUNCATED[key], delta)


@pytest.mark.parametrize("l", range(2, 20))
def test_truncation_is_brute_force_subset(l):
    F2 = field_new(1)
    full = list(solve_recursive(l).iter_vectors(F2))
    for delta in range(1, l):
        want = {tuple(v[delta:]) for v in full if not any(v[:delta])}
        got = {tuple(v) for v in truncate(solve_recursive(l), delta).iter_vectors(F2)}
        assert got == want


def test_cardinalities():
    for m in (1, 2, 5):
        assert truncate(solve_recursive(15), 7).cardinality(m) == (2**m) ** 5
        assert solve_recursive(16).cardinality(m) == (2**m) ** 8


def test_materialize_and_describe():
    sp = solve_recursive(4)
    assert sp.describe() == "(0, b1, b1, b3)"
    assert sp.materialize({1: 5, 3: 2}) == [0, 5, 5, 2]
    with pytest.raises(MissingAssignment):
        sp.materialize({1: 1})
    with pytest.raises(MissingAssignment):
        sp.materialize({0: 1, 1: 1, 3: 1})
    assert truncate(solve_recursive(7), 3).describe() == "(b3, 0, b5, b6)"


def test_iter_vectors_order_and_membership():
    F4 = field_new(2)
    sp = solve_recursive(5)
    vecs = list(sp.iter_vectors(F4))
    assert len(vecs) == 4**3
    assert vecs[0] == [0] * 5 and vecs[1] == [0, 0, 0, 0, 1]
    assert all(satisfies(S[5], v) for v in vecs)
    assert len({tuple(v) for v in vecs}) == len(vecs)


def test_truncate_rejects_bad_delta():
    with pytest.raises(ValueError):
        truncate(solve_recursive(4), 4)
    with pytest.raises(ValueError):
        truncate(truncate(solve_recursive(8), 3), 2)
