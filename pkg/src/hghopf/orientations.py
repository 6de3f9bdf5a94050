"""Orientations and colorings of hypergraphs.

An orientation picks a head vertex in every edge occurrence; here it is a
tuple of labels aligned with ``H.edges``.  A coloring with ``[n]`` is a
mapping from vertices to ``1..n``.  This module counts colorings with a
unique maximal vertex per edge, counts (strictly) compatible pairs of
acyclic orientations and colorings, and evaluates the closed-form
expansion of the basic invariant in the ``F`` polynomials.
"""

from __future__ import annotations

import itertools
from graphlib import CycleError, TopologicalSorter
from typing import Iterator, Mapping, Sequence

from .hypergraph import Hypergraph
from .polyring import RationalPoly, f_from_one, f_polynomial
from .setcomp import Composition, DomainError, GroundSet, constrained_refinements

Orientation = tuple


def _check_orientation(H: Hypergraph, f: Sequence) -> None:
    if len(f) != len(H.edges) or any(h not in e for h, e in zip(f, H.edges)):
        raise DomainError("not an orientation of the hypergraph")


def edge_digraph(H: Hypergraph, f: Orientation) -> dict[int, list[int]]:
    """Arcs ``a -> b`` between edge occurrences whenever ``f(a)`` lies in ``b - f(b)``."""
    return {
        a: [b for b, eb in enumerate(H.edges) if f[a] in eb and f[a] != f[b]]
        for a in range(len(H.edges))
    }


def has_directed_cycle(H: Hypergraph, f: Orientation) -> bool:
    _check_orientation(H, f)
    ts = TopologicalSorter()
    for a, succ in edge_digraph(H, f).items():
        ts.add(a)
        for b in succ:
            ts.add(b, a)
    try:
        ts.prepare()
    except CycleError:
        return True
    return False


def all_orientations(H: Hypergraph) -> Iterator[Orientation]:
    return itertools.product(*(sorted(e) for e in H.edges))


def acyclic_orientations(H: Hypergraph) -> list[Orientation]:
    return [f for f in all_orientations(H) if not has_directed_cycle(H, f)]


def image(H: Hypergraph, f: Orientation) -> frozenset:
    return frozenset(f)


def is_compatible(H: Hypergraph, f: Orientation, coloring: Mapping) -> bool:
    return all(coloring[h] == max(coloring[v] for v in e) for h, e in zip(f, H.edges))


def is_strictly_compatible(H: Hypergraph, f: Orientation, coloring: Mapping) -> bool:
    return all(
        all(coloring[v] < coloring[h] for v in e if v != h) for h, e in zip(f, H.edges)
    )


def colorings(ground: GroundSet, n: int) -> Iterator[dict]:
    for values in itertools.product(range(1, n + 1), repeat=len(ground)):
        yield dict(zip(ground.elements, values))


def _max_vertices(e: frozenset, coloring: Mapping) -> list:
    top = max(coloring[v] for v in e)
    return [v for v in sorted(e) if coloring[v] == top]


def count_unique_max_colorings(H: Hypergraph, n: int) -> int:
    return sum(
        1 for c in colorings(H.ground, n) if all(len(_max_vertices(e, c)) == 1 for e in H.edges)
    )


def compatible_orientations(H: Hypergraph, coloring: Mapping, strict: bool) -> Iterator[Orientation]:
    choices = [_max_vertices(e, coloring) for e in H.edges]
    if strict:
        choices = [m if len(m) == 1 else [] for m in choices]
    return itertools.product(*choices)


def count_pairs(H: Hypergraph, n: int, strict: bool) -> int:
    """Pairs (acyclic orientation, coloring with ``[n]``) that are (strictly) compatible."""
    acyclic = set(acyclic_orientations(H))
    total = 0
    for c in colorings(H.ground, n):
        total += sum(1 for f in compatible_orientations(H, c, strict) if f in acyclic)
    return total


def unique_max_orientation(H: Hypergraph, coloring: Mapping) -> Orientation:
    """Send each edge to its unique maximal vertex (the coloring must have one per edge)."""
    out = []
    for e in H.edges:
        m = _max_vertices(e, coloring)
        if len(m) != 1:
            raise DomainError("some edge has several maximal vertices")
        out.append(m[0])
    return tuple(out)


def constraint_graph(H: Hypergraph, f: Orientation) -> set[tuple]:
    """Pairs ``(v, f(e))`` for ``v`` in ``e - f(e)``, kept only when ``v`` is a head too."""
    heads = image(H, f)
    return {(v, h) for h, e in zip(f, H.edges) for v in e if v != h and v in heads}


def constrained_compositions(H: Hypergraph, f: Orientation, strict: bool = True) -> list[Composition]:
    """Compositions ``P`` of ``f(H)`` with ``P(v) < P(f(e))`` (``<=`` when not strict)."""
    _check_orientation(H, f)
    if has_directed_cycle(H, f):
        raise DomainError("orientation has a directed cycle")
    heads = image(H, f)
    if not heads:
        return [Composition(GroundSet(), [])]
    return constrained_refinements(constraint_graph(H, f), Composition(GroundSet(heads), [heads]), strict)


def strict_constrained_compositions(H: Hypergraph, f: Orientation) -> list[Composition]:
    return constrained_compositions(H, f, strict=True)


def weak_constrained_compositions(H: Hypergraph, f: Orientation) -> list[Composition]:
    return constrained_compositions(H, f, strict=False)


def tilde_blocks(H: Hypergraph, f: Orientation, P: Composition) -> list[frozenset]:
    """Non-head vertices grouped by the first block of ``P`` holding one of their edges' heads."""
    heads = image(H, f)
    claimed: frozenset = frozenset()
    out = []
    for block in P.blocks:
        cover = frozenset().union(*(e for h, e in zip(f, H.edges) if h in block))
        t = cover - heads - claimed
        out.append(t)
        claimed |= t
    return out


def signature(H: Hypergraph, f: Orientation, P: Composition) -> tuple[int, ...]:
    return tuple(len(t) for t in tilde_blocks(H, f, P))


def _expansion(H: Hypergraph, strict: bool) -> RationalPoly:
    total = RationalPoly()
    for f in acyclic_orientations(H):
        for P in constrained_compositions(H, f, strict):
            sig = signature(H, f, P)
            if strict:
                # head block i gets color k_i + 1, its P~ vertices one of k_i lower colors
                total = total + (f_polynomial(sig) if sig else RationalPoly([1]))
            else:
                # head block i gets color k_i, its P~ vertices one of k_i colors <= k_i
                total = total + f_from_one(sig)
    return total * RationalPoly.monomial(len(H.isolated_vertices()))


def chi_formula(H: Hypergraph) -> RationalPoly:
    """Basic invariant as ``n^|J| * sum_f sum_P F_(|P~_1|,...)(n)``."""
    return _expansion(H, strict=True)


def reciprocity_formula(H: Hypergraph) -> RationalPoly:
    """``(-1)^|I| chi(-n)`` as a sum over acyclic orientations and weak compositions.

    Each term is ``F_p(n + 1)``; when the first part of ``p`` is 0 the
    ``k_1 = 0`` terms are dropped, since no color 0 exists.
    """
    return _expansion(H, strict=False)
