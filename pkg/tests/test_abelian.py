import math

import pytest
from hypothesis import given, strategies as st

from overrings import abelian
from overrings.abelian import GroupElement, make_group
from overrings.errors import InvalidModulus, ShapeError


def test_group_validation():
    with pytest.raises(InvalidModulus):
        make_group(1, [1])
    with pytest.raises(InvalidModulus):
        make_group(0, [0])
    with pytest.raises(ValueError):
        make_group(-1)


def test_element_reduces_torsion():
    G = make_group(1, [2, 3])
    x = G.element([4, 5, -1])
    assert x == GroupElement((4,), (1, 2))
    with pytest.raises(ShapeError):
        G.element([1, 2])


def test_str():
    assert str(make_group(1, [2])) == "Z + Z/2"
    assert str(make_group(0)) == "0"
    assert str(make_group(0, [6]).element([5])) == "(5)"


def test_arithmetic_small():
    G = make_group(1, [4])
    x, y = G.element([1, 3]), G.element([-2, 2])
    assert abelian.add(G, x, y) == G.element([-1, 1])
    assert abelian.neg(G, x) == G.element([-1, 1])
    assert abelian.scalar_mul(G, 3, x) == G.element([3, 1])
    assert abelian.linear_combination(G, [2, 1], [x, y]) == G.element([0, 0])


def test_element_order():
    G = make_group(1, [4, 6])
    assert abelian.element_order(G, G.element([0, 2, 3])) == 2
    assert abelian.element_order(G, G.element([0, 1, 4])) == 12
    assert abelian.element_order(G, abelian.zero(G)) == 1
    assert abelian.element_order(G, G.element([1, 0, 0])) == math.inf
    assert abelian.is_torsion_group(make_group(0, [2, 2]))
    assert not abelian.is_torsion_group(G)


def test_snf_known():
    U, D, V = abelian.smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert abelian.diagonal(D) == [2, 6, 12]
    assert abelian.matmul(abelian.matmul(U, [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]), V) == D


def test_snf_empty_and_zero():
    U, D, V = abelian.smith_normal_form([], ncols=2)
    assert U == [] and V == abelian.identity(2)
    _, D, _ = abelian.smith_normal_form([[0, 0], [0, 0]])
    assert abelian.diagonal(D) == [0, 0]


def test_group_from_relations():
    G, proj = abelian.group_from_relations(2, [[2, 0]])
    assert (G.rank, G.torsion_moduli) == (1, (2,))
    H, p = abelian.normalize(make_group(0, [2, 3]))
    assert H.torsion_moduli == (6,)
    assert abelian.element_order(H, p([1, 1])) == 6
    with pytest.raises(ShapeError):
        abelian.group_from_relations(2, [[1, 2, 3]])


def test_canonical_generators():
    G = make_group(1, [3])
    assert abelian.canonical_generators(G) == [G.element([1, 0]), G.element([-1, 0]), G.element([0, 1])]


groups = st.builds(
    make_group,
    st.integers(0, 2),
    st.lists(st.sampled_from([2, 3, 4, 6]), max_size=2),
)


@st.composite
def group_and_elements(draw, k=3):
    G = draw(groups)
    xs = [G.element(draw(st.lists(st.integers(-20, 20), min_size=G.ngens, max_size=G.ngens))) for _ in range(k)]
    return G, xs


@given(group_and_elements())
def test_group_laws(data):
    G, (x, y, z) = data
    add = abelian.add
    assert add(G, x, y) == add(G, y, x)
    assert add(G, add(G, x, y), z) == add(G, x, add(G, y, z))
    assert add(G, x, abelian.zero(G)) == x
    assert add(G, x, abelian.neg(G, x)) == abelian.zero(G)
    assert abelian.scalar_mul(G, 3, x) == add(G, x, add(G, x, x))


@given(group_and_elements(k=1))
def test_order_kills_torsion(data):
    G, (x,) = data
    n = abelian.element_order(G, x)
    if n != math.inf:
        assert abelian.scalar_mul(G, n, x) == abelian.zero(G)
        assert all(abelian.scalar_mul(G, k, x) != abelian.zero(G) for k in range(1, n))


matrices = st.integers(1, 4).flatmap(
    lambda p: st.integers(1, 4).flatmap(
        lambda q: st.lists(st.lists(st.integers(-10, 10), min_size=q, max_size=q), min_size=p, max_size=p)
    )
)


@given(matrices)
def test_snf_properties(M):
    U, D, V = abelian.smith_normal_form(M)
    assert abelian.matmul(abelian.matmul(U, M), V) == D
    assert abs(abelian.determinant(U)) == 1
    assert abs(abelian.determinant(V)) == 1
    diag = abelian.diagonal(D)
    for i in range(len(D)):
        for j in range(len(D[0])):
            if i != j:
                assert D[i][j] == 0
    nz = [d for d in diag if d]
    assert all(d > 0 for d in nz)
    assert diag[: len(nz)] == nz
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
