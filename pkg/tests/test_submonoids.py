import itertools
import random

import pytest

from hghopf.hopf import chi_direct, chi_polynomial
from hghopf.hypergraph import Hypergraph
from hghopf.instances import complex_family, graph_family, random_graph, random_paths
from hghopf.orientations import acyclic_orientations
from hghopf.polyring import RationalPoly, interpolate
from hghopf.setcomp import DomainError
from hghopf.submonoids import (
    Graph,
    SetOfPaths,
    SimpleHypergraph,
    SimplicialComplex,
    binary_trees,
    catalan,
    chi_graph,
    chi_paths,
    chi_sc,
    chi_shg,
    chromatic_deletion_contraction,
    count_proper_colorings,
    count_tree_pairs,
    graph_coproduct,
    one_skeleton,
    paths_coproduct,
    shg_contraction,
    tree_pair_polynomial,
)

K3 = Graph("123", ["12", "13", "23"])


def P(*c):
    return RationalPoly(c)


def chromatic_by_counting(g):
    return interpolate((n, count_proper_colorings(g, n)) for n in range(len(g.ground) + 1))


# -- simple hypergraphs --


def test_shg_contraction():
    H = SimpleHypergraph("123", ["12", "13", "23"])
    assert shg_contraction(H, "1") == SimpleHypergraph("23", ["2", "3", "23"])
    assert shg_contraction(SimpleHypergraph("123", ["12", "13"]), "23") == SimpleHypergraph("1", ["1"])
    assert shg_contraction(H, "") == H
    with pytest.raises(DomainError):
        SimpleHypergraph("12", ["12", "12"])


def test_chi_shg():
    assert chi_shg(SimpleHypergraph("12", ["12"])) == P(0, -1, 1)
    assert chi_shg(SimpleHypergraph("123", ["1", "3"])) == P(0, 0, 0, 1)


def test_shg_invariant_agrees_with_multiset_version():
    # collapsing repeated edges never changes discreteness of a component
    for H in [SimpleHypergraph("123", ["12", "13", "23"]), SimpleHypergraph("1234", ["123", "34", "24"])]:
        assert chi_shg(H) == chi_polynomial(H.as_hypergraph())


# -- graphs --


def test_graph_validation():
    with pytest.raises(DomainError):
        Graph("123", ["123"])
    with pytest.raises(DomainError):
        Graph("12", ["12", "12"])


def test_graph_coproduct():
    assert graph_coproduct(K3, "12") == (Graph("12", ["12"]), Graph("3"))
    assert graph_coproduct(K3, "123") == (K3, Graph.empty())
    assert graph_coproduct(Graph("12"), "1") == (Graph("1"), Graph("2"))


def test_graph_coproduct_is_hypergraph_coproduct_up_to_singletons():
    rng = random.Random(0)
    for _ in range(30):
        g = random_graph(rng, 5)
        S = [v for v in g.ground if rng.random() < 0.5]
        gl, gr = graph_coproduct(g, S)
        hl, hr = g.as_hypergraph().coproduct(S)
        assert gl.as_hypergraph() == hl
        assert gr.as_hypergraph() == Hypergraph(hr.ground, [e for e in hr.edges if len(e) == 2])


@pytest.mark.parametrize(
    "g, poly",
    [
        (K3, P(0, 2, -3, 1)),
        (Graph("12", ["12"]), P(0, -1, 1)),
        (Graph("12"), P(0, 0, 1)),
        (Graph("123", ["12", "23"]), P(0, 1, -2, 1)),
        (Graph("1"), P(0, 1)),
    ],
)
def test_chromatic_examples(g, poly):
    assert chromatic_deletion_contraction(g) == poly
    assert chromatic_by_counting(g) == poly
    assert chi_graph(g) == poly


def test_k3_acyclic_orientations():
    assert (-1) ** 3 * chi_graph(K3)(-1) == 6 == len(acyclic_orientations(K3.as_hypergraph()))


def test_all_graphs_up_to_four_vertices():
    graphs = list(graph_family(4))
    assert len(graphs) == 1 + 1 + 2 + 8 + 64
    for g in graphs:
        assert chi_graph(g) == chromatic_deletion_contraction(g) == chromatic_by_counting(g)


def test_random_graphs_on_five_vertices():
    rng = random.Random(21)
    for _ in range(10):
        g = random_graph(rng, 5)
        assert chi_graph(g) == chromatic_deletion_contraction(g)


# -- simplicial complexes --


def test_complex_validation():
    with pytest.raises(DomainError):
        SimplicialComplex("12", [["1", "2"]])
    assert SimplicialComplex("12", ["1", "2", "12"]) == SimplicialComplex.generated_by("12", ["12"])


def test_one_skeleton():
    assert one_skeleton(SimplicialComplex.generated_by("123", ["123"])) == K3
    assert one_skeleton(SimplicialComplex("123", ["1", "2", "3"])) == Graph("123")
    assert one_skeleton(SimplicialComplex("123", ["1", "2", "12"])) == Graph("123", ["12"])


@pytest.mark.parametrize(
    "C, poly",
    [
        (SimplicialComplex.generated_by("123", ["123"]), P(0, 2, -3, 1)),
        (SimplicialComplex.generated_by("123", ["12"]), P(0, 0, -1, 1)),
        (SimplicialComplex("123", ["1", "2", "3"]), P(0, 0, 0, 1)),
    ],
)
def test_chi_sc_examples(C, poly):
    assert chi_sc(C) == poly


def test_complex_coproduct_stays_closed():
    C = SimplicialComplex.generated_by("1234", ["123", "34"])
    for r in range(5):
        for S in itertools.combinations("1234", r):
            for part in C.coproduct(S):
                SimplicialComplex(part.ground, part.faces)


def test_all_complexes_up_to_four_vertices():
    family = list(complex_family(4))
    assert len(family) == len(set(family))
    for C in family:
        assert chi_sc(C) == chromatic_by_counting(one_skeleton(C))


# -- sets of paths --


def test_worked_path_coproduct():
    alpha = SetOfPaths.from_words(["bfcg", "aed"])
    left, right = paths_coproduct(alpha, "bce")
    assert f"{left} ⊗ {right}" == "bc|e ⊗ f|g|a|d"
    assert left == SetOfPaths.from_words(["e", "cb"])


def test_path_coproduct_extremes():
    alpha = SetOfPaths.from_words(["abc", "d"])
    assert paths_coproduct(alpha, "abcd") == (alpha, SetOfPaths("", []))
    assert paths_coproduct(alpha, "") == (SetOfPaths("", []), alpha)


def test_paths_are_unoriented():
    assert SetOfPaths.from_words(["abc"]) == SetOfPaths.from_words(["cba"])
    assert SetOfPaths.from_words(["abc"]) != SetOfPaths.from_words(["bac"])
    with pytest.raises(DomainError):
        SetOfPaths("abc", [["a", "b"]])


def test_paths_coproduct_coassociative():
    rng = random.Random(6)
    for _ in range(30):
        alpha = random_paths(rng, 6)
        elems = list(alpha.ground)
        S = set(v for v in elems if rng.random() < 0.4)
        R = set(v for v in elems if v not in S and rng.random() < 0.5)
        assert alpha.contraction(S).contraction(R) == alpha.contraction(S | R)
        assert alpha.contraction(S).restriction(R) == alpha.restriction(S | R).contraction(S)


def test_binary_tree_shapes_are_catalan():
    assert [len(binary_trees(m)) for m in range(1, 6)] == [1, 2, 5, 14, 42]
    assert [catalan(m) for m in range(1, 6)] == [1, 2, 5, 14, 42]


def test_single_vertex_path():
    chi = chi_paths(SetOfPaths.from_words(["a"]))
    assert chi == P(0, 1)
    assert -chi(-1) == 1


def test_three_path():
    chi = chi_paths(SetOfPaths.from_words(["abc"]))
    assert str(chi) == "n^3 - (5/2)n^2 + (3/2)n"
    assert count_tree_pairs(3, 1, False) == 5


@pytest.mark.parametrize("m", range(1, 6))
def test_path_invariant_counts_trees(m):
    alpha = SetOfPaths.from_words(["abcde"[:m]])
    chi = chi_paths(alpha)
    assert chi == tree_pair_polynomial(m)
    for n in range(1, 4):
        assert chi(n) == count_tree_pairs(m, n, True)
        assert (-1) ** m * chi(-n) == count_tree_pairs(m, n, False)
    assert (-1) ** m * chi(-1) == catalan(m)


def test_path_invariant_direct_values():
    alpha = SetOfPaths.from_words(["ab"])
    assert [chi_direct(alpha, n) for n in range(4)] == [count_tree_pairs(2, n, True) if n else 0 for n in range(4)]
