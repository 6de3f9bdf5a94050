"""The Hopf monoid of hypergraphs.

A hypergraph over ``I`` is a multiset of nonempty subsets of ``I`` (the
mandatory empty edge is implicit).  The product is disjoint union and the
coproduct along ``I = S | T`` is restriction to ``S`` tensored with the
contraction of ``S``.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Mapping

from .setcomp import Decomposition, DomainError, GroundSet, _as_ground, _block


def _edge_key(e: frozenset):
    return (len(e), sorted(e))


def sort_edges(edges: Iterable[frozenset]) -> tuple[frozenset, ...]:
    return tuple(sorted(edges, key=_edge_key))


class Hypergraph:
    """Hypergraph over a labeled ground set, edges kept with multiplicity.

    Equality compares the ground set and the edge multiset; two hypergraphs
    with the same edges over different ground sets are different.
    """

    __slots__ = ("ground", "edges", "_hash")

    def __init__(self, ground, edges: Iterable[Iterable] = ()):
        ground = _as_ground(ground)
        edges = [_block(e) for e in edges]
        vs = ground.as_set()
        for e in edges:
            if not e:
                raise DomainError("the empty edge is implicit and cannot be stored")
            if not e <= vs:
                raise DomainError(f"edge {sorted(e)} is not a subset of the ground set")
        self._init(ground, sort_edges(edges))
        self._validate()

    def _init(self, ground: GroundSet, edges: tuple) -> None:
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "_hash", None)

    def _validate(self) -> None:
        pass

    @classmethod
    def _make(cls, ground: GroundSet, edges: Iterable[frozenset]):
        # trusted constructor: edges already valid for ``cls``
        obj = cls.__new__(cls)
        obj._init(ground, sort_edges(edges))
        return obj

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def empty(cls):
        return cls._make(GroundSet(), ())

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.ground == other.ground and self.edges == other.edges

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((type(self).__name__, self.ground, self.edges)))
        return self._hash

    def __lt__(self, other) -> bool:
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return (self.ground.elements, [_edge_key(e) for e in self.edges])

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self.ground.elements)}, {self.edge_lists()})"

    def __str__(self) -> str:
        return "{" + ",".join("{" + ",".join(e) + "}" for e in self.edge_lists()) + "}"

    def edge_lists(self) -> list[list[str]]:
        return [sorted(e) for e in self.edges]

    def edge_counts(self) -> Counter:
        return Counter(self.edges)

    # -- species structure -------------------------------------------------

    def _subset(self, S) -> frozenset:
        S = _block(S)
        if not S <= self.ground.as_set():
            raise DomainError("subset is not contained in the ground set")
        return S

    def restriction(self, S):
        S = self._subset(S)
        return self._make(GroundSet(S), [e for e in self.edges if e <= S])

    def contraction(self, S):
        S = self._subset(S)
        T = self.ground.as_set() - S
        return self._make(GroundSet(T), [e & T for e in self.edges if not e <= S])

    def coproduct(self, S):
        return self.restriction(S), self.contraction(S)

    def product(self, other):
        if type(other) is not type(self):
            raise DomainError("cannot multiply elements of different species")
        if self.ground.as_set() & other.ground.as_set():
            raise DomainError("ground sets overlap")
        ground = GroundSet(self.ground.elements + other.ground.elements)
        return self._make(ground, self.edges + other.edges)

    def __or__(self, other):
        return self.product(other)

    def iterated_coproduct(self, d: Decomposition) -> list:
        from .hopf import iterated_coproduct

        return list(iterated_coproduct(self, d))

    def relabel(self, sigma: Mapping):
        sigma = {str(k): str(v) for k, v in sigma.items()}
        if set(sigma) != self.ground.as_set() or len(set(sigma.values())) != len(sigma):
            raise DomainError("relabeling must be a bijection on the ground set")
        return self._make(
            GroundSet(sigma.values()), [frozenset(sigma[v] for v in e) for e in self.edges]
        )

    def is_discrete(self) -> bool:
        return all(len(e) <= 1 for e in self.edges)

    def isolated_vertices(self) -> frozenset:
        covered: frozenset = frozenset().union(*self.edges)
        return self.ground.as_set() - covered

    def to_dict(self) -> dict:
        return {"kind": "hypergraph", "vertices": list(self.ground.elements), "edges": self.edge_lists()}


def restriction(H: Hypergraph, S) -> Hypergraph:
    return H.restriction(S)


def contraction(H: Hypergraph, S) -> Hypergraph:
    return H.contraction(S)


def coproduct(H: Hypergraph, S) -> tuple[Hypergraph, Hypergraph]:
    return H.coproduct(S)


def product(H1: Hypergraph, H2: Hypergraph) -> Hypergraph:
    return H1.product(H2)


def iterated_coproduct(H: Hypergraph, d: Decomposition) -> list[Hypergraph]:
    return H.iterated_coproduct(d)


def relabel(H: Hypergraph, sigma: Mapping) -> Hypergraph:
    return H.relabel(sigma)


def is_discrete(H: Hypergraph) -> bool:
    return H.is_discrete()


def isolated_vertices(H: Hypergraph) -> frozenset:
    return H.isolated_vertices()


class LinearCombination:
    """Integer combination of species elements over one ground set."""

    __slots__ = ("terms", "ground")

    def __init__(self, terms: Mapping | Iterable = (), ground=None):
        acc: Counter = Counter()
        items = terms.items() if isinstance(terms, Mapping) else terms
        for x, c in items:
            acc[x] += c
        grounds = {x.ground for x in acc}
        if len(grounds) > 1:
            raise DomainError("terms of a linear combination must share a ground set")
        if ground is None:
            ground = next(iter(grounds)) if grounds else None
        elif grounds and _as_ground(ground) not in grounds:
            raise DomainError("terms do not match the declared ground set")
        self.terms = {x: c for x, c in acc.items() if c}
        self.ground = _as_ground(ground) if ground is not None else None

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearCombination):
            return NotImplemented
        return self.terms == other.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __add__(self, other: LinearCombination) -> LinearCombination:
        return LinearCombination(list(self) + list(other))

    def __neg__(self) -> LinearCombination:
        return LinearCombination([(x, -c) for x, c in self])

    def __sub__(self, other: LinearCombination) -> LinearCombination:
        return self + (-other)

    def sorted_terms(self) -> list[tuple]:
        return sorted(self.terms.items(), key=lambda t: t[0].sort_key())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return "\n".join(f"{c} × {x}" for x, c in self.sorted_terms())
