import itertools

import pytest
from hypothesis import given, strategies as st

from equilayer.group import (
    Permutation,
    act,
    enumerate_group,
    generators,
    group_order,
    rho,
    sign,
)
from equilayer.limits import ResourceBoundError
from equilayer.sparse import SparseMatrix, linearize


def inversions(images):
    return sum(1 for i, j in itertools.combinations(range(len(images)), 2) if images[i] > images[j])


def test_sign_examples():
    assert sign(Permutation.identity(4)) == 1
    assert sign(Permutation((2, 1, 3))) == -1
    assert inversions((2, 3, 1)) == 2
    assert sign(Permutation((2, 3, 1))) == 1


@pytest.mark.parametrize("n", range(1, 7))
def test_sign_matches_inversion_parity(n):
    for p in enumerate_group(n, "sn"):
        assert sign(p) == (-1) ** inversions(p.images)


@pytest.mark.parametrize("n", range(1, 5))
def test_sign_homomorphism(n):
    g = enumerate_group(n, "sn")
    for s in g:
        for t in g:
            assert sign(s * t) == sign(s) * sign(t)


def test_composition_convention():
    s = Permutation.from_cycles(3, (1, 2))
    t = Permutation.from_cycles(3, (2, 3))
    assert (s * t)(2) == s(t(2)) == 3


def test_act_examples():
    swap = Permutation((2, 1))
    assert act(swap, (1, 1, 1)) == (2, 2, 2)
    assert act(Permutation.identity(3), (3, 1, 2)) == (3, 1, 2)
    assert act(Permutation((2, 3, 1)), (1, 3, 1, 2)) == (2, 1, 2, 3)
    with pytest.raises(ValueError):
        act(swap, (1, 3))


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("m", range(0, 4))
def test_act_bijective_and_compatible(n, m):
    g = enumerate_group(n, "sn")
    space = list(itertools.product(range(1, n + 1), repeat=m))
    for s in g:
        assert sorted(act(s, x) for x in space) == space
        for t in g[:6]:
            for x in space:
                assert act(s * t, x) == act(s, act(t, x))


def test_group_sizes():
    assert [p.images for p in enumerate_group(2, "an")] == [(1, 2)]
    assert len(enumerate_group(3, "an")) == 3
    assert len(enumerate_group(3, "sn")) == 6
    assert len(enumerate_group(1, "an")) == 1


@pytest.mark.parametrize("n", range(1, 7))
def test_alternating_is_even_part(n):
    sn = enumerate_group(n, "sn")
    an = enumerate_group(n, "an")
    assert an == [p for p in sn if sign(p) == 1]
    assert len(an) == max(1, len(sn) // 2) == group_order(n, "an")
    assert len(set(sn)) == len(sn) == group_order(n, "sn")


def test_group_degree_bound():
    with pytest.raises(ResourceBoundError):
        enumerate_group(9, "sn")


def closure(gens):
    n = gens[0].degree
    seen = {Permutation.identity(n)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = g * p
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("which", ["sn", "an"])
def test_generators_generate(n, which):
    assert closure(generators(n, which)) == set(enumerate_group(n, which))


def test_rho_examples():
    assert rho(Permutation.identity(3), 2) == SparseMatrix.identity(9)
    assert rho(Permutation((2, 1)), 1) == SparseMatrix.from_dense([[0, 1], [1, 0]])
    m = rho(Permutation((2, 1)), 2)
    # (1,1)<->(2,2) and (1,2)<->(2,1), derived by applying act to every multi-index
    want = {}
    for x in itertools.product((1, 2), repeat=2):
        want[(linearize(act(Permutation((2, 1)), x), 2), linearize(x, 2))] = 1
    assert m == SparseMatrix(4, 4, want)
    assert set(m.support()) == {(3, 0), (0, 3), (2, 1), (1, 2)}
    assert rho(Permutation((2, 3, 1)), 0) == SparseMatrix.identity(1)


@pytest.mark.parametrize("n", range(1, 4))
@pytest.mark.parametrize("m", range(0, 4))
def test_rho_homomorphism(n, m):
    g = enumerate_group(n, "sn")
    mats = {p: rho(p, m) for p in g}
    for s in g:
        for t in g:
            assert mats[s * t] == mats[s] @ mats[t]


@given(st.permutations(list(range(1, 6))), st.integers(0, 3))
def test_rho_is_permutation_matrix(images, order):
    m = rho(Permutation(tuple(images)), order)
    assert m.nnz == 5**order
    assert len({r for r, _ in m.support()}) == 5**order
