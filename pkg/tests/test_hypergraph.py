import random

import pytest
from hypothesis import given, strategies as st

from hghopf.hypergraph import (
    Hypergraph,
    LinearCombination,
    contraction,
    coproduct,
    is_discrete,
    isolated_vertices,
    iterated_coproduct,
    product,
    relabel,
    restriction,
)
from hghopf.instances import hypergraph_family, random_hypergraph
from hghopf.setcomp import Decomposition, DomainError, enumerate_decompositions

H12_23 = Hypergraph("123", [[1, 2], [2, 3]])
EMPTY = Hypergraph.empty()


def test_construction_and_equality():
    assert Hypergraph("12", [[1, 2], [1]]) == Hypergraph([2, 1], [["1"], ["2", "1"]])
    assert Hypergraph("12", [[1]]) != Hypergraph("123", [[1]])
    assert Hypergraph("1", [[1], [1]]) != Hypergraph("1", [[1]])
    with pytest.raises(DomainError):
        Hypergraph("12", [[3]])
    with pytest.raises(DomainError):
        Hypergraph("12", [[]])
    with pytest.raises(AttributeError):
        H12_23.edges = ()


def test_str_and_repr():
    assert str(Hypergraph("12", [[1, 2], [1]])) == "{{1},{1,2}}"
    assert repr(H12_23) == "Hypergraph(['1', '2', '3'], [['1', '2'], ['2', '3']])"
    assert str(EMPTY) == "{}"


def test_restriction():
    assert restriction(H12_23, "12") == Hypergraph("12", [[1, 2]])
    assert restriction(H12_23, "") == EMPTY
    assert restriction(H12_23, "123") == H12_23
    with pytest.raises(DomainError):
        restriction(H12_23, "4")


def test_contraction():
    assert contraction(H12_23, "12") == Hypergraph("3", [[3]])
    assert contraction(H12_23, "") == H12_23
    H = Hypergraph("123", [[1, 2], [1, 2], [1, 3]])
    assert contraction(H, "1") == Hypergraph("23", [[2], [2], [3]])
    with pytest.raises(DomainError):
        contraction(H12_23, "9")


def test_product():
    assert product(Hypergraph("1", [[1]]), Hypergraph("2", [[2]])) == Hypergraph("12", [[1], [2]])
    assert product(H12_23, EMPTY) == H12_23
    assert product(Hypergraph("12", [[1, 2]]), Hypergraph("3")) == Hypergraph("123", [[1, 2]])
    with pytest.raises(DomainError):
        product(H12_23, Hypergraph("3"))


def test_coproduct_extremes():
    assert coproduct(H12_23, "123") == (H12_23, EMPTY)
    assert coproduct(H12_23, "") == (EMPTY, H12_23)


def test_iterated_coproduct():
    H = Hypergraph("12", [[1, 2]])
    assert iterated_coproduct(H, Decomposition("12", ["12"])) == [H]
    assert iterated_coproduct(H, Decomposition("12", ["", "12"])) == [EMPTY, H]
    assert iterated_coproduct(H, Decomposition("12", ["1", "2"])) == [Hypergraph("1"), Hypergraph("2", [[2]])]
    with pytest.raises(DomainError):
        iterated_coproduct(H, Decomposition("1", ["1"]))


def test_relabel():
    H = Hypergraph("12", [[1, 2]])
    assert relabel(H, {1: 1, 2: 2}) == H
    assert relabel(H, {1: "a", 2: "b"}) == Hypergraph("ab", ["ab"])
    with pytest.raises(DomainError):
        relabel(H, {1: "a", 2: "a"})
    with pytest.raises(DomainError):
        relabel(H, {1: "a"})


def test_discrete_and_isolated():
    assert is_discrete(Hypergraph("12", [[1], [2], [1]]))
    assert not is_discrete(Hypergraph("12", [[1, 2]]))
    assert is_discrete(Hypergraph("12"))
    assert isolated_vertices(Hypergraph("123", [[1, 2]])) == frozenset("3")
    assert isolated_vertices(Hypergraph("12")) == frozenset("12")
    assert isolated_vertices(H12_23) == frozenset()


def components_by_definition(H, d):
    """Edges of each component computed straight from the definition of the iterated coproduct.

    Component i sees the edges not yet contained in earlier blocks, intersected
    with the blocks from i on, and keeps those landing inside block i.
    """
    out = []
    earlier = frozenset()
    for i, block in enumerate(d.blocks):
        later = frozenset().union(*d.blocks[i:])
        edges = [e & later for e in H.edges if not e <= earlier]
        out.append(sorted(sorted(e) for e in edges if e <= block))
        earlier |= block
    return out


def test_iterated_coproduct_matches_definition():
    rng = random.Random(3)
    for _ in range(40):
        H = random_hypergraph(rng, 4, 4)
        for d in enumerate_decompositions(H.ground, 3):
            got = [sorted(c.edge_lists()) for c in iterated_coproduct(H, d)]
            assert got == components_by_definition(H, d)


hypergraphs = st.builds(lambda seed: random_hypergraph(random.Random(seed), 5, 4), st.integers(0, 10**6))


@given(hypergraphs, st.data())
def test_coassociativity_and_product_inverse(H, data):
    elems = list(H.ground.elements)
    S = data.draw(st.sets(st.sampled_from(elems)) if elems else st.just(set()))
    left, right = coproduct(H, S)
    assert left.ground.as_set() | right.ground.as_set() == H.ground.as_set()
    # (H|S)|R == H|R and (H/S)/R == H/(S+R)
    R = data.draw(st.sets(st.sampled_from(sorted(right.ground.as_set()))) if right.ground.elements else st.just(set()))
    assert contraction(right, R) == contraction(H, set(S) | R)
    assert restriction(right, R) == contraction(restriction(H, set(S) | R), S)
    # a disjoint union splits back along its factors
    assert coproduct(product(left, right), S) == (left, right)


def test_family_counts():
    family = list(hypergraph_family(4, 3))
    assert len(family) == len(set(family)) == 961
    assert all(len(H.ground) <= 4 and len(H.edges) <= 3 for H in family)


def test_linear_combination():
    a, b = Hypergraph("12", [[1, 2]]), Hypergraph("12")
    c = LinearCombination([(a, 1), (b, 2), (a, -1)])
    assert c.terms == {b: 2}
    assert str(LinearCombination([(a, 1), (a, -1)])) == "0"
    assert (c - c).terms == {}
    assert str(LinearCombination({a: -1, b: 3})) == "3 × {}\n-1 × {{1,2}}"
    with pytest.raises(DomainError):
        LinearCombination([(a, 1), (Hypergraph("1"), 1)])
