"""Exact univariate polynomials over the rationals.

Coefficients are :class:`fractions.Fraction`, stored densely from degree 0
upward with trailing zeros stripped.  Besides ring arithmetic this module
provides discrete summation, Bernoulli numbers and the family

    F_{p_1..p_t}(n) = sum over 0 <= k_1 < ... < k_t <= n-1 of k_1^p_1 ... k_t^p_t

computed by iterated discrete summation.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from .setcomp import DomainError


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class RationalPoly:
    """Dense polynomial ``sum c[i] * n**i`` with Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [_frac(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def constant(cls, c) -> RationalPoly:
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c=1) -> RationalPoly:
        return cls([0] * degree + [c])

    @classmethod
    def x(cls) -> RationalPoly:
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == RationalPoly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def _coerce(self, other) -> RationalPoly:
        if isinstance(other, RationalPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalPoly([other])
        raise TypeError(f"cannot combine polynomial with {type(other).__name__}")

    def __add__(self, other) -> RationalPoly:
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, c in enumerate(b):
            res[i] += c
        return RationalPoly(res)

    __radd__ = __add__

    def __neg__(self) -> RationalPoly:
        return RationalPoly([-c for c in self.coeffs])

    def __sub__(self, other) -> RationalPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> RationalPoly:
        return self._coerce(other) - self

    def __mul__(self, other) -> RationalPoly:
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return RationalPoly()
        res = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    res[i + j] += a * b
        return RationalPoly(res)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> RationalPoly:
        if k < 0:
            raise ValueError("negative exponent")
        out = RationalPoly([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: RationalPoly) -> RationalPoly:
        out = RationalPoly()
        for c in reversed(self.coeffs):
            out = out * inner + c
        return out

    def shift(self, a) -> RationalPoly:
        """The polynomial ``n -> self(n + a)``."""
        return self.compose(RationalPoly([a, 1]))

    def reflect(self) -> RationalPoly:
        """The polynomial ``n -> self(-n)``."""
        return RationalPoly([-c if i % 2 else c for i, c in enumerate(self.coeffs)])

    def to_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs] or ["0"]

    @classmethod
    def from_strings(cls, items: Sequence[str]) -> RationalPoly:
        return cls(Fraction(s) for s in items)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"RationalPoly({self.to_strings()})"


def format_poly(p: RationalPoly, var: str = "n") -> str:
    """Descending powers with explicit signs, e.g. ``n^3 - 3n^2 + 2n``."""
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if i == 0:
            body = str(a)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            if a == 1:
                body = mono
            elif a.denominator == 1:
                body = f"{a}{mono}"
            else:
                body = f"({a}){mono}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def eval_poly(q: RationalPoly, x) -> Fraction:
    return q(x)


@lru_cache(maxsize=None)
def bernoulli(j: int) -> Fraction:
    """Bernoulli number ``B_j`` with ``B_1 = -1/2``."""
    if j < 0:
        raise DomainError("Bernoulli index must be nonnegative")
    if j == 0:
        return Fraction(1)
    # sum_{i=0}^{j} C(j+1, i) B_i = 0
    s = sum(comb(j + 1, i) * bernoulli(i) for i in range(j))
    return -s / (j + 1)


def _binomial_poly(k: int) -> RationalPoly:
    # C(n, k) = n (n-1) ... (n-k+1) / k!
    out = RationalPoly([1])
    for i in range(k):
        out = out * RationalPoly([Fraction(-i, i + 1), Fraction(1, i + 1)])
    return out


def discrete_sum(q: RationalPoly) -> RationalPoly:
    """``Q`` with ``Q(0) = 0`` and ``Q(m + 1) - Q(m) = q(m)``.

    Expands ``q`` in the binomial basis through forward differences at 0:
    ``q(k) = sum_j D^j q(0) C(k, j)`` sums to ``sum_j D^j q(0) C(n, j+1)``.
    """
    if q.is_zero():
        return RationalPoly()
    vals = [q(k) for k in range(q.degree + 1)]
    out = RationalPoly()
    j = 0
    while vals:
        out = out + _binomial_poly(j + 1) * vals[0]
        vals = [b - a for a, b in zip(vals, vals[1:])]
        j += 1
    return out


@lru_cache(maxsize=None)
def _f_cached(parts: tuple[int, ...]) -> RationalPoly:
    g = discrete_sum(RationalPoly.monomial(parts[0]))
    for p in parts[1:]:
        g = discrete_sum(RationalPoly.monomial(p) * g)
    return g


def f_polynomial(parts: Sequence[int]) -> RationalPoly:
    """The polynomial ``F_{p_1..p_t}``; zero parts use ``0**0 == 1``."""
    parts = tuple(int(p) for p in parts)
    if not parts:
        raise DomainError("F needs at least one part")
    if any(p < 0 for p in parts):
        raise DomainError("F parts must be nonnegative")
    return _f_cached(parts)


@lru_cache(maxsize=None)
def f_from_one(parts: tuple[int, ...]) -> RationalPoly:
    """``n -> sum over 1 <= k_1 < ... < k_t <= n`` of ``k_1^p_1 ... k_t^p_t``.

    Equals ``F_p(n + 1)`` unless ``p_1 == 0``, where ``F_p(n + 1)`` would also
    count ``k_1 = 0``.  The empty signature gives the constant 1.
    """
    parts = tuple(parts)
    if not parts:
        return RationalPoly([1])
    shifted = f_polynomial(parts).shift(1)
    if parts[0] == 0:
        shifted = shifted - f_from_one(parts[1:])
    return shifted


def f_bruteforce(parts: Sequence[int], n: int) -> int:
    """The defining sum of ``F`` evaluated directly; test oracle."""
    from itertools import combinations
    from math import prod

    return sum(
        prod(k**p for k, p in zip(ks, parts)) for ks in combinations(range(n), len(parts))
    )


def interpolate(points: Iterable[tuple]) -> RationalPoly:
    """Lagrange interpolation through ``(x, y)`` pairs, exactly."""
    pts = [(_frac(x), _frac(y)) for x, y in points]
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise DomainError("duplicate abscissae")
    out = RationalPoly()
    for i, (xi, yi) in enumerate(pts):
        if yi == 0:
            continue
        basis = RationalPoly([1])
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * RationalPoly([-xj, 1])
                denom *= xi - xj
        out = out + basis * (yi / denom)
    return out


def coarsenings(parts: Sequence[int]) -> list[tuple[int, ...]]:
    """Every integer composition obtained by merging adjacent parts.

    The ``2**(t-1)`` results are listed in the order of the cut-point bitmask,
    starting with ``parts`` itself.
    """
    parts = tuple(parts)
    if not parts:
        raise DomainError("empty signature")
    t = len(parts)
    out = []
    for keep in range((1 << (t - 1)) - 1, -1, -1):
        merged = [parts[0]]
        for i in range(1, t):
            if keep >> (i - 1) & 1:
                merged.append(parts[i])
            else:
                merged[-1] += parts[i]
        out.append(tuple(merged))
    return out
