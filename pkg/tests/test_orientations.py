import itertools
import random

import pytest

from hghopf.hopf import chi_direct, chi_polynomial
from hghopf.hypergraph import Hypergraph
from hghopf.instances import hypergraph_family, random_hypergraph, random_multiedge_hypergraph
from hghopf.orientations import (
    acyclic_orientations,
    all_orientations,
    chi_formula,
    count_pairs,
    count_unique_max_colorings,
    has_directed_cycle,
    is_compatible,
    is_strictly_compatible,
    reciprocity_formula,
    strict_constrained_compositions,
    unique_max_orientation,
    weak_constrained_compositions,
)
from hghopf.polyring import RationalPoly
from hghopf.setcomp import Composition, DomainError

K3 = Hypergraph("123", ["12", "23", "13"])


def cycle_by_search(H, f):
    """Look for e_1 .. e_k distinct with f(e_i) in e_{i+1} minus f(e_{i+1}), cyclically."""
    m = len(H.edges)
    for k in range(2, m + 1):
        for seq in itertools.permutations(range(m), k):
            if all(
                f[seq[i]] in H.edges[seq[(i + 1) % k]] and f[seq[i]] != f[seq[(i + 1) % k]]
                for i in range(k)
            ):
                return True
    return False


def pairs_by_brute_force(H, n, strict):
    verts = H.ground.elements
    total = 0
    for f in itertools.product(*[sorted(e) for e in H.edges]):
        if cycle_by_search(H, f):
            continue
        for colors in itertools.product(range(1, n + 1), repeat=len(verts)):
            col = dict(zip(verts, colors))
            good = True
            for e, h in zip(H.edges, f):
                top = max(col[v] for v in e)
                if col[h] != top or (strict and sum(col[v] == top for v in e) > 1):
                    good = False
            total += good
    return total


def test_cycle_examples():
    assert not has_directed_cycle(Hypergraph("12", ["12"]), ("1",))
    assert has_directed_cycle(Hypergraph("12", ["12", "12"]), ("1", "2"))
    assert not has_directed_cycle(Hypergraph("12", ["12", "12"]), ("1", "1"))
    # edges are stored sorted: 12, 13, 23; heads 2, 1, 3 give the cyclic orientation
    assert has_directed_cycle(K3, ("2", "1", "3"))


def test_cycle_detection_matches_search():
    rng = random.Random(4)
    for _ in range(150):
        H = random_multiedge_hypergraph(rng, 4)
        for f in all_orientations(H):
            assert has_directed_cycle(H, f) == cycle_by_search(H, f)


def test_orientation_must_pick_members():
    with pytest.raises(DomainError):
        has_directed_cycle(Hypergraph("12", ["12"]), ("3",))
    with pytest.raises(DomainError):
        has_directed_cycle(Hypergraph("12", ["12"]), ())


def test_acyclic_orientation_counts():
    assert len(acyclic_orientations(Hypergraph("123", ["123"]))) == 3
    assert len(acyclic_orientations(K3)) == 6
    assert acyclic_orientations(Hypergraph("12")) == [()]


def test_compatibility():
    H = Hypergraph("12", ["12"])
    assert is_strictly_compatible(H, ("1",), {"1": 2, "2": 1})
    assert is_compatible(H, ("1",), {"1": 1, "2": 1})
    assert not is_strictly_compatible(H, ("1",), {"1": 1, "2": 1})
    assert not is_compatible(H, ("2",), {"1": 2, "2": 1})


def test_unique_max_counts():
    assert count_unique_max_colorings(Hypergraph("12", ["12"]), 2) == 2
    assert count_unique_max_colorings(Hypergraph("123", ["123"]), 2) == 3
    assert count_unique_max_colorings(Hypergraph("123"), 3) == 27


def test_unique_max_orientation():
    H = Hypergraph("123", ["12", "23"])
    assert unique_max_orientation(H, {"1": 3, "2": 1, "3": 2}) == ("1", "3")
    with pytest.raises(DomainError):
        unique_max_orientation(H, {"1": 1, "2": 1, "3": 2})


def test_count_pairs_matches_brute_force():
    rng = random.Random(9)
    cases = [K3, Hypergraph("12", ["12", "12"])] + [random_multiedge_hypergraph(rng, 4) for _ in range(40)]
    for H in cases:
        for n in range(4):
            for strict in (True, False):
                assert count_pairs(H, n, strict) == pairs_by_brute_force(H, n, strict)
    assert count_pairs(K3, 1, False) == 6


def test_constrained_compositions():
    H = Hypergraph("123", ["12", "23"])
    assert strict_constrained_compositions(H, ("2", "3")) == [Composition("23", ["2", "3"])]
    assert set(weak_constrained_compositions(H, ("2", "3"))) == {
        Composition("23", ["2", "3"]),
        Composition("23", ["23"]),
    }
    with pytest.raises(DomainError):
        strict_constrained_compositions(K3, ("2", "1", "3"))
    assert strict_constrained_compositions(Hypergraph("1"), ()) == [Composition("", [])]


@pytest.mark.parametrize(
    "H, coeffs",
    [
        (Hypergraph("123", ["123"]), ["0", "1/2", "-3/2", "1"]),
        (Hypergraph("12", ["12"]), ["0", "-1", "1"]),
        (Hypergraph("123", ["1", "2", "3"]), ["0", "0", "0", "1"]),
        (K3, ["0", "2", "-3", "1"]),
    ],
)
def test_chi_formula_examples(H, coeffs):
    assert chi_formula(H) == RationalPoly.from_strings(coeffs)
    assert chi_formula(H)(2) == count_unique_max_colorings(H, 2)


def test_formulas_on_small_family():
    for H in hypergraph_family(3, 3):
        chi = chi_polynomial(H)
        assert chi_formula(H) == chi
        assert reciprocity_formula(H) == chi.reflect() * (-1) ** len(H.ground)


def test_reciprocity_with_singleton_edges():
    # a singleton edge forces a zero exponent in the first signature part
    H = Hypergraph("1234", ["1"])
    assert chi_polynomial(H) == RationalPoly.monomial(4)
    assert reciprocity_formula(H) == RationalPoly.monomial(4)


def test_counting_identities_on_random_multiedge():
    rng = random.Random(17)
    for _ in range(15):
        H = random_multiedge_hypergraph(rng, 5)
        formula = chi_formula(H)
        for n in range(4):
            assert chi_direct(H, n) == count_unique_max_colorings(H, n) == count_pairs(H, n, True) == formula(n)


def test_acyclic_count_at_minus_one():
    rng = random.Random(1)
    for _ in range(30):
        H = random_hypergraph(rng, 4, 4)
        assert (-1) ** len(H.ground) * chi_polynomial(H)(-1) == len(acyclic_orientations(H))
