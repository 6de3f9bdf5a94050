"""Generic Hopf-monoid operations: basic character, invariant, antipode.

Everything here works for any species element exposing ``ground``,
``coproduct(S)``, ``product(other)``, ``relabel(sigma)`` and
``is_discrete()``; hypergraphs and every sub-monoid in :mod:`submonoids`
qualify.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache, reduce
from typing import Iterator, Protocol

from .hypergraph import LinearCombination
from .polyring import RationalPoly, interpolate
from .setcomp import Decomposition, DomainError, enumerate_compositions, enumerate_decompositions


class SpeciesElement(Protocol):
    ground: object

    def coproduct(self, S): ...

    def product(self, other): ...

    def relabel(self, sigma): ...

    def is_discrete(self) -> bool: ...


def iterated_coproduct(x, d: Decomposition) -> Iterator:
    """Components of the coproduct of ``x`` along ``d``, left to right."""
    if d.ground != x.ground:
        raise DomainError("decomposition is not over the element's ground set")
    rest = x
    for block in d.blocks:
        head, rest = rest.coproduct(block)
        yield head


def iterated_product(parts):
    return reduce(lambda a, b: a.product(b), parts)


def zeta_basic(x) -> int:
    return 1 if x.is_discrete() else 0


def _all_discrete(x, d: Decomposition) -> bool:
    # stops at the first non-discrete component
    return all(h.is_discrete() for h in iterated_coproduct(x, d))


def chi_direct(x, n: int) -> int:
    """Number of length-``n`` decompositions whose coproduct components are all discrete."""
    if n < 0:
        raise DomainError("direct summation needs n >= 0")
    return _chi_direct(x, n)


# elements are immutable and hashable; antipode terms repeat a lot
@lru_cache(maxsize=1 << 16)
def _chi_direct(x, n: int) -> int:
    return sum(1 for d in enumerate_decompositions(x.ground, n) if _all_discrete(x, d))


def clear_caches() -> None:
    _chi_direct.cache_clear()


def chi_polynomial(x) -> RationalPoly:
    """Interpolate :func:`chi_direct` at ``n = 0 .. |I|``."""
    k = len(x.ground)
    return interpolate((n, chi_direct(x, n)) for n in range(k + 1))


def antipode_takeuchi(x, signed: bool = True) -> LinearCombination:
    """Takeuchi's formula: sum over compositions of ``(-1)**k`` times product∘coproduct.

    ``signed=False`` drops the sign; that variant is only kept to show it
    breaks reciprocity.  On the empty ground set the antipode is the identity.
    """
    if not len(x.ground):
        return LinearCombination({x: 1})
    terms = []
    for comp in enumerate_compositions(x.ground):
        sign = (-1) ** len(comp) if signed else 1
        terms.append((iterated_product(list(iterated_coproduct(x, comp))), sign))
    return LinearCombination(terms, ground=x.ground)


def chi_of_combination(c: LinearCombination, n: int) -> Fraction | int:
    if n >= 0:
        return sum(coef * chi_direct(x, n) for x, coef in c)
    return sum(coef * chi_polynomial(x)(n) for x, coef in c)


def apply_antipode_axiom(x) -> LinearCombination:
    """``sum over S|T = I of S(x|S) * x/S``; zero for nonempty ground sets."""
    from .setcomp import GroundSet

    out = LinearCombination(ground=x.ground)
    elems = x.ground.elements
    for mask in range(1 << len(elems)):
        S = [v for i, v in enumerate(elems) if mask >> i & 1]
        left, right = x.coproduct(S)
        s_left = antipode_takeuchi(left)
        out = out + LinearCombination([(y.product(right), c) for y, c in s_left], ground=GroundSet(elems))
    return out
