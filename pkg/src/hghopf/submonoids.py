"""Simple hypergraphs, graphs, simplicial complexes and sets of paths.

Each class is a species element usable with :mod:`hghopf.hopf`.  Where the
coproduct differs from the hypergraph one it is overridden:

* simple hypergraphs deduplicate the contraction,
* graphs contract to the induced subgraph on the complement,
* simplicial complexes go through the simple-hypergraph coproduct of their
  nonempty faces,
* sets of paths restrict to induced sub-paths and contract by cutting.

The module also carries the independent oracles used to check the basic
invariants: deletion-contraction chromatic polynomials and binary trees
with (strictly) decreasing colorings.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .hopf import chi_polynomial
from .hypergraph import Hypergraph
from .polyring import RationalPoly, interpolate
from .setcomp import DomainError, GroundSet, _as_ground, _block


class SimpleHypergraph(Hypergraph):
    """Hypergraph without repeated edges."""

    __slots__ = ()

    def _validate(self) -> None:
        if len(set(self.edges)) != len(self.edges):
            raise DomainError("simple hypergraphs cannot repeat an edge")

    def contraction(self, S):
        S = self._subset(S)
        T = self.ground.as_set() - S
        return self._make(GroundSet(T), {e & T for e in self.edges if not e <= S})

    def as_hypergraph(self) -> Hypergraph:
        return Hypergraph._make(self.ground, self.edges)

    def to_dict(self) -> dict:
        return dict(super().to_dict(), kind="simple")


class Graph(Hypergraph):
    """Simple graph: every edge has exactly two vertices."""

    __slots__ = ()

    def _validate(self) -> None:
        if any(len(e) != 2 for e in self.edges):
            raise DomainError("graph edges must have exactly two vertices")
        if len(set(self.edges)) != len(self.edges):
            raise DomainError("graphs cannot repeat an edge")

    def contraction(self, S):
        S = self._subset(S)
        return self.restriction(self.ground.as_set() - S)

    def as_hypergraph(self) -> Hypergraph:
        return Hypergraph._make(self.ground, self.edges)

    def to_dict(self) -> dict:
        return dict(super().to_dict(), kind="graph")


def shg_contraction(H: SimpleHypergraph, S) -> SimpleHypergraph:
    return H.contraction(S)


def graph_coproduct(g: Graph, S) -> tuple[Graph, Graph]:
    return g.coproduct(S)


class SimplicialComplex:
    """Downward-closed family of faces; the empty face is always present."""

    __slots__ = ("ground", "faces")

    def __init__(self, ground, faces: Iterable[Iterable] = ()):
        ground = _as_ground(ground)
        fs = {_block(f) for f in faces} | {frozenset()}
        vs = ground.as_set()
        for f in fs:
            if not f <= vs:
                raise DomainError(f"face {sorted(f)} is not a subset of the ground set")
            for v in f:
                if f - {v} not in fs:
                    raise DomainError(f"face {sorted(f)} has a missing subface {sorted(f - {v})}")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "faces", frozenset(fs))

    def __setattr__(self, name, value):
        raise AttributeError("SimplicialComplex is immutable")

    @classmethod
    def generated_by(cls, ground, facets: Iterable[Iterable]) -> SimplicialComplex:
        faces = set()
        for F in facets:
            F = sorted(_block(F))
            for r in range(len(F) + 1):
                faces.update(frozenset(c) for c in itertools.combinations(F, r))
        return cls(ground, faces)

    @classmethod
    def _from_shg(cls, H: SimpleHypergraph) -> SimplicialComplex:
        obj = cls.__new__(cls)
        object.__setattr__(obj, "ground", H.ground)
        object.__setattr__(obj, "faces", frozenset(H.edges) | {frozenset()})
        return obj

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.ground == other.ground and self.faces == other.faces

    def __hash__(self) -> int:
        return hash(("SC", self.ground, self.faces))

    def nonempty_faces(self) -> list[frozenset]:
        return sorted((f for f in self.faces if f), key=lambda f: (len(f), sorted(f)))

    def sort_key(self):
        return (self.ground.elements, [(len(f), sorted(f)) for f in self.nonempty_faces()])

    def as_simple_hypergraph(self) -> SimpleHypergraph:
        return SimpleHypergraph._make(self.ground, self.nonempty_faces())

    def restriction(self, S) -> SimplicialComplex:
        return self._from_shg(self.as_simple_hypergraph().restriction(S))

    def contraction(self, S) -> SimplicialComplex:
        return self._from_shg(self.as_simple_hypergraph().contraction(S))

    def coproduct(self, S):
        return self.restriction(S), self.contraction(S)

    def product(self, other: SimplicialComplex) -> SimplicialComplex:
        if not isinstance(other, SimplicialComplex):
            raise DomainError("cannot multiply elements of different species")
        return self._from_shg(self.as_simple_hypergraph().product(other.as_simple_hypergraph()))

    def relabel(self, sigma: Mapping) -> SimplicialComplex:
        return self._from_shg(self.as_simple_hypergraph().relabel(sigma))

    def is_discrete(self) -> bool:
        return all(len(f) <= 1 for f in self.faces)

    def __str__(self) -> str:
        return "{" + ",".join("{" + ",".join(sorted(f)) + "}" for f in self.nonempty_faces()) + "}"

    def __repr__(self) -> str:
        return f"SimplicialComplex({list(self.ground.elements)}, {[sorted(f) for f in self.nonempty_faces()]})"

    def to_dict(self) -> dict:
        return {
            "kind": "simplicial",
            "vertices": list(self.ground.elements),
            "faces": [sorted(f) for f in self.nonempty_faces()],
        }


def one_skeleton(C: SimplicialComplex) -> Graph:
    return Graph._make(C.ground, [f for f in C.faces if len(f) == 2])


def _canonical_path(word: Sequence[str]) -> tuple[str, ...]:
    w = tuple(word)
    return min(w, w[::-1])


class SetOfPaths:
    """Set partition of the ground set with an unoriented path on each block.

    Paths are stored in the order given (that order is only used for
    display); each path is stored as the smaller of its two readings.
    Equality ignores the order of the paths.
    """

    __slots__ = ("ground", "paths", "_key")

    def __init__(self, ground, paths: Iterable[Sequence]):
        ground = _as_ground(ground)
        ps = [_canonical_path([str(v) for v in p]) for p in paths]
        if any(not p for p in ps):
            raise DomainError("paths must be nonempty")
        seen = [v for p in ps for v in p]
        if len(seen) != len(set(seen)) or set(seen) != ground.as_set():
            raise DomainError("paths must partition the ground set")
        self._init(ground, tuple(ps))

    def _init(self, ground: GroundSet, paths: tuple) -> None:
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "paths", paths)
        object.__setattr__(self, "_key", frozenset(paths))

    @classmethod
    def _make(cls, ground: GroundSet, paths: Iterable[Sequence]) -> SetOfPaths:
        obj = cls.__new__(cls)
        obj._init(ground, tuple(_canonical_path(p) for p in paths))
        return obj

    @classmethod
    def from_words(cls, words: Sequence[str]) -> SetOfPaths:
        """Build from strings where each character is a label, e.g. ``["bfcg", "aed"]``."""
        return cls([v for w in words for v in w], [list(w) for w in words])

    def __setattr__(self, name, value):
        raise AttributeError("SetOfPaths is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, SetOfPaths):
            return NotImplemented
        return self.ground == other.ground and self._key == other._key

    def __hash__(self) -> int:
        return hash(("F", self.ground, self._key))

    def sort_key(self):
        return (self.ground.elements, sorted(self.paths))

    def __str__(self) -> str:
        if all(len(v) == 1 for v in self.ground):
            return "|".join("".join(p) for p in self.paths)
        return "|".join("-".join(p) for p in self.paths)

    def __repr__(self) -> str:
        return f"SetOfPaths({str(self)!r})"

    def _subset(self, S) -> frozenset:
        S = _block(S)
        if not S <= self.ground.as_set():
            raise DomainError("subset is not contained in the ground set")
        return S

    def restriction(self, S) -> SetOfPaths:
        S = self._subset(S)
        induced = [[v for v in p if v in S] for p in self.paths]
        return self._make(GroundSet(S), [p for p in induced if p])

    def contraction(self, S) -> SetOfPaths:
        S = self._subset(S)
        pieces = []
        for p in self.paths:
            cur: list = []
            for v in p:
                if v in S:
                    if cur:
                        pieces.append(cur)
                    cur = []
                else:
                    cur.append(v)
            if cur:
                pieces.append(cur)
        return self._make(GroundSet(self.ground.as_set() - S), pieces)

    def coproduct(self, S):
        return self.restriction(S), self.contraction(S)

    def product(self, other: SetOfPaths) -> SetOfPaths:
        if not isinstance(other, SetOfPaths):
            raise DomainError("cannot multiply elements of different species")
        if self.ground.as_set() & other.ground.as_set():
            raise DomainError("ground sets overlap")
        return self._make(GroundSet(self.ground.elements + other.ground.elements), self.paths + other.paths)

    def relabel(self, sigma: Mapping) -> SetOfPaths:
        sigma = {str(k): str(v) for k, v in sigma.items()}
        if set(sigma) != self.ground.as_set() or len(set(sigma.values())) != len(sigma):
            raise DomainError("relabeling must be a bijection on the ground set")
        return self._make(GroundSet(sigma.values()), [[sigma[v] for v in p] for p in self.paths])

    def is_discrete(self) -> bool:
        return all(len(p) == 1 for p in self.paths)

    def to_dict(self) -> dict:
        return {"kind": "paths", "vertices": list(self.ground.elements), "paths": [list(p) for p in self.paths]}


def paths_coproduct(alpha: SetOfPaths, S) -> tuple[SetOfPaths, SetOfPaths]:
    return alpha.coproduct(S)


def chi_shg(H: SimpleHypergraph) -> RationalPoly:
    return chi_polynomial(H)


def chi_graph(g: Graph) -> RationalPoly:
    return chi_polynomial(g)


def chi_sc(C: SimplicialComplex) -> RationalPoly:
    return chi_polynomial(C)


def chi_paths(alpha: SetOfPaths) -> RationalPoly:
    return chi_polynomial(alpha)


# -- oracles -------------------------------------------------------------------


@lru_cache(maxsize=None)
def _chromatic(k: int, edges: frozenset) -> RationalPoly:
    if not edges:
        return RationalPoly.monomial(k)
    e = min(edges, key=sorted)
    u, w = sorted(e)
    deleted = edges - {e}
    # merge w into u, dropping loops and parallel edges
    contracted = set()
    for f in deleted:
        g = frozenset(u if x == w else x for x in f)
        if len(g) == 2:
            contracted.add(g)
    return _chromatic(k, deleted) - _relabeled(k - 1, contracted)


def _relabeled(k: int, edges: Iterable[frozenset]) -> RationalPoly:
    verts = sorted({v for e in edges for v in e})
    index = {v: i for i, v in enumerate(verts)}
    # isolated vertices only contribute n^(number of them)
    canon = frozenset(frozenset(index[v] for v in e) for e in edges)
    return _chromatic(len(verts), canon) * RationalPoly.monomial(k - len(verts))


def chromatic_deletion_contraction(g: Graph) -> RationalPoly:
    """Chromatic polynomial by ``P(g) = P(g - e) - P(g / e)``."""
    return _relabeled(len(g.ground), g.edges)


def count_proper_colorings(g: Graph, n: int) -> int:
    verts = g.ground.elements
    index = {v: i for i, v in enumerate(verts)}
    pairs = [tuple(index[v] for v in e) for e in g.edges]
    return sum(
        1
        for c in itertools.product(range(n), repeat=len(verts))
        if all(c[a] != c[b] for a, b in pairs)
    )


# A binary tree is None or a pair (left, right).
def binary_trees(m: int) -> list:
    return list(_binary_trees(m))


@lru_cache(maxsize=None)
def _binary_trees(m: int) -> tuple:
    if m == 0:
        return (None,)
    out = []
    for k in range(m):
        for left in _binary_trees(k):
            for right in _binary_trees(m - 1 - k):
                out.append((left, right))
    return tuple(out)


def _parent_child_pairs(tree) -> tuple[int, list[tuple[int, int]]]:
    """Number the nodes in preorder and list (parent, child) index pairs."""
    pairs: list[tuple[int, int]] = []
    counter = itertools.count()

    def walk(node) -> int:
        me = next(counter)
        for child in node:
            if child is not None:
                pairs.append((me, walk(child)))
        return me

    walk(tree)
    return next(counter), pairs


def count_tree_pairs(m: int, n: int, strict: bool) -> int:
    """Pairs (binary tree shape on ``m`` nodes, coloring with ``[n]``) where every
    node's color is greater (or, weakly, at least) each child's color."""
    if m < 1:
        raise DomainError("trees need at least one vertex")
    total = 0
    for tree in binary_trees(m):
        size, pairs = _parent_child_pairs(tree)
        for c in itertools.product(range(1, n + 1), repeat=size):
            if strict:
                ok = all(c[p] > c[ch] for p, ch in pairs)
            else:
                ok = all(c[p] >= c[ch] for p, ch in pairs)
            total += ok
    return total


def tree_pair_polynomial(m: int) -> RationalPoly:
    """Interpolates the strict tree-pair count of ``m`` nodes at ``n = 0 .. m``."""
    return interpolate((n, count_tree_pairs(m, n, True) if n else 0) for n in range(m + 1))


def catalan(m: int) -> int:
    from math import comb

    return comb(2 * m, m) // (m + 1)
