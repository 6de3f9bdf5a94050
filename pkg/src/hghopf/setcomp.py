"""Finite ground sets, decompositions and compositions.

A decomposition of ``I`` is an ordered sequence of pairwise disjoint blocks
covering ``I``; empty blocks are allowed.  A composition is a decomposition
without empty blocks (an ordered set partition).  Decompositions of length
``n`` are in bijection with functions ``I -> [n]`` (block ``i`` is the
preimage of ``i``), which is how colorings are handled throughout the package.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from graphlib import CycleError, TopologicalSorter
from typing import Iterable, Iterator, Mapping

Label = str
Block = frozenset


class DomainError(ValueError):
    """Raised when an argument falls outside an operation's domain."""


@dataclass(frozen=True)
class GroundSet:
    """A finite set of atom labels, kept in lexicographic order."""

    elements: tuple[Label, ...]

    def __init__(self, elements: Iterable = ()):
        labels = [str(e) for e in elements]
        if len(set(labels)) != len(labels):
            raise DomainError(f"duplicate labels in ground set: {labels}")
        object.__setattr__(self, "elements", tuple(sorted(labels)))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Label]:
        return iter(self.elements)

    def __contains__(self, label) -> bool:
        return label in self.as_set()

    def as_set(self) -> frozenset:
        return frozenset(self.elements)

    def mask(self, labels: Iterable[Label]) -> int:
        index = {v: i for i, v in enumerate(self.elements)}
        m = 0
        for v in labels:
            m |= 1 << index[v]
        return m

    def labels(self, mask: int) -> frozenset:
        return frozenset(v for i, v in enumerate(self.elements) if mask >> i & 1)

    def __repr__(self) -> str:
        return "GroundSet({" + ", ".join(self.elements) + "})"


def _as_ground(ground) -> GroundSet:
    return ground if isinstance(ground, GroundSet) else GroundSet(ground)


def _block(labels: Iterable) -> frozenset:
    return frozenset(str(v) for v in labels)


@dataclass(frozen=True, eq=False)
class Decomposition:
    """Ordered sequence of disjoint blocks covering ``ground``."""

    ground: GroundSet
    blocks: tuple[frozenset, ...]

    def __init__(self, ground, blocks: Iterable[Iterable]):
        ground = _as_ground(ground)
        blocks = tuple(_block(b) for b in blocks)
        seen: set = set()
        for b in blocks:
            if seen & b:
                raise DomainError("blocks are not pairwise disjoint")
            seen |= b
        if seen != ground.as_set():
            raise DomainError("blocks do not cover the ground set exactly")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "blocks", blocks)
        self._check()

    def _check(self) -> None:
        pass

    # a Composition equals the Decomposition with the same blocks
    def __eq__(self, other) -> bool:
        if not isinstance(other, Decomposition):
            return NotImplemented
        return self.ground == other.ground and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash((self.ground, self.blocks))

    def __len__(self) -> int:
        return len(self.blocks)

    @property
    def length(self) -> int:
        return len(self.blocks)

    @property
    def size(self) -> int:
        return len(self.ground)

    def __iter__(self):
        return iter(self.blocks)

    def __getitem__(self, i):
        return self.blocks[i]

    def position(self, v: Label) -> int:
        """1-based index of the block holding ``v``."""
        for i, b in enumerate(self.blocks, 1):
            if v in b:
                return i
        raise DomainError(f"{v!r} is not in the ground set")

    def to_list(self) -> list[list[str]]:
        return [sorted(b) for b in self.blocks]

    def __str__(self) -> str:
        inner = ",".join("{" + ",".join(sorted(b)) + "}" if b else "∅" for b in self.blocks)
        return f"({inner})"


class Composition(Decomposition):
    """A decomposition whose blocks are all nonempty."""

    def _check(self) -> None:
        if any(not b for b in self.blocks):
            raise DomainError("compositions cannot have empty blocks")


def from_function(ground, n: int, f: Mapping) -> Decomposition:
    ground = _as_ground(ground)
    f = {str(k): v for k, v in f.items()}
    if set(f) != ground.as_set():
        raise DomainError("function must be total on the ground set")
    blocks: list[set] = [set() for _ in range(n)]
    for v, c in f.items():
        if not 1 <= c <= n:
            raise DomainError(f"value {c} for {v!r} outside 1..{n}")
        blocks[c - 1].add(v)
    return Decomposition(ground, blocks)


def to_function(d: Decomposition) -> dict[Label, int]:
    return {v: i for i, b in enumerate(d.blocks, 1) for v in b}


def canonicalize(d: Decomposition) -> Composition:
    return Composition(d.ground, [b for b in d.blocks if b])


def restrict(d: Decomposition, subset: Iterable) -> Decomposition:
    J = _block(subset)
    if not J <= d.ground.as_set():
        raise DomainError("restriction set is not contained in the ground set")
    return Decomposition(GroundSet(J), [b & J for b in d.blocks])


def order_of_appearance(d: Decomposition, subset: Iterable) -> Composition:
    return canonicalize(restrict(d, subset))


def _same_ground(p: Decomposition, q: Decomposition) -> None:
    if p.ground != q.ground:
        raise DomainError("compositions are over different ground sets")


def refines(p: Composition, q: Composition) -> bool:
    """True iff ``p`` is a concatenation of compositions of ``q``'s blocks."""
    _same_ground(p, q)
    it = iter(p.blocks)
    for target in q.blocks:
        acc: frozenset = frozenset()
        while acc != target:
            b = next(it, None)
            if b is None or not b <= target:
                return False
            acc |= b
    return True


def _disjoint(p: Decomposition, q: Decomposition) -> None:
    if p.ground.as_set() & q.ground.as_set():
        raise DomainError("ground sets overlap")


def concat(p: Composition, q: Composition) -> Composition:
    _disjoint(p, q)
    return Composition(p.ground.elements + q.ground.elements, p.blocks + q.blocks)


def shuffle(p: Composition, q: Composition) -> list[Composition]:
    """Quasi-shuffles of ``p`` and ``q``.

    Each block of the result is a block of ``p``, a block of ``q``, or the
    union of one of each, with the relative orders of ``p`` and ``q`` kept.
    """
    _disjoint(p, q)
    ground = p.ground.elements + q.ground.elements
    a, b = p.blocks, q.blocks

    def rec(i: int, j: int) -> Iterator[tuple]:
        if i == len(a) and j == len(b):
            yield ()
            return
        if i < len(a):
            for rest in rec(i + 1, j):
                yield (a[i],) + rest
        if j < len(b):
            for rest in rec(i, j + 1):
                yield (b[j],) + rest
        if i < len(a) and j < len(b):
            for rest in rec(i + 1, j + 1):
                yield (a[i] | b[j],) + rest

    return [Composition(ground, blocks) for blocks in rec(0, 0)]


def enumerate_decompositions(ground, n: int) -> Iterator[Decomposition]:
    """All ``n**|ground|`` decompositions of length ``n``, in a fixed order."""
    ground = _as_ground(ground)
    for values in itertools.product(range(n), repeat=len(ground)):
        blocks: list[set] = [set() for _ in range(n)]
        for v, c in zip(ground.elements, values):
            blocks[c].add(v)
        yield Decomposition(ground, blocks)


def _submasks(mask: int) -> Iterator[int]:
    # nonempty submasks, increasing order
    sub = 0
    while True:
        sub = (sub - mask) & mask
        if sub == 0:
            return
        yield sub


def _mask_compositions(mask: int) -> Iterator[tuple[int, ...]]:
    if mask == 0:
        yield ()
        return
    for first in _submasks(mask):
        for rest in _mask_compositions(mask & ~first):
            yield (first,) + rest


def enumerate_compositions(ground, allow_empty: bool = False) -> Iterator[Composition]:
    """All ordered set partitions of ``ground``.

    For the empty ground set the empty composition is produced only when
    ``allow_empty`` is set; otherwise nothing is yielded.
    """
    ground = _as_ground(ground)
    if not len(ground) and not allow_empty:
        return
    full = (1 << len(ground)) - 1
    for masks in _mask_compositions(full):
        yield Composition(ground, [ground.labels(m) for m in masks])


def refinements(p: Composition) -> Iterator[Composition]:
    """All compositions refining ``p`` (including ``p``)."""
    per_block = [list(enumerate_compositions(GroundSet(b))) for b in p.blocks]
    for choice in itertools.product(*per_block):
        yield Composition(p.ground, [blk for c in choice for blk in c.blocks])


def is_acyclic(pairs: Iterable[tuple]) -> bool:
    ts = TopologicalSorter()
    for v, w in pairs:
        ts.add(str(w), str(v))
    try:
        ts.prepare()
    except CycleError:
        return False
    return True


def constrained_refinements(G: Iterable[tuple], P: Composition, strict: bool = True) -> list[Composition]:
    """Refinements ``Q`` of ``P`` with ``Q(v) < Q(w)`` (or ``<=``) for every ``(v, w)`` in ``G``."""
    G = [(str(v), str(w)) for v, w in G]
    if not is_acyclic(G):
        raise DomainError("constraint relation has a directed cycle")
    ground = P.ground.as_set()
    if any(v not in ground or w not in ground for v, w in G):
        raise DomainError("constraint pairs must lie in the ground set")
    out = []
    for Q in refinements(P):
        pos = to_function(Q)
        if strict:
            ok = all(pos[v] < pos[w] for v, w in G)
        else:
            ok = all(pos[v] <= pos[w] for v, w in G)
        if ok:
            out.append(Q)
    return out


def signed_sum(comps: Iterable[Composition]) -> int:
    """Sum of ``(-1)**length`` over the given compositions."""
    return sum(-1 if len(c) % 2 else 1 for c in comps)
