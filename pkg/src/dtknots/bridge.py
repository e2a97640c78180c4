"""
Fraction calculus for 2-bridge knots and links.

A 2-bridge link K_{p/q} is determined by a reduced fraction.  We identify a
knot with its mirror image, so K_{p/q}, K_{p/q'}, K_{p/(p-q)} and
K_{p/(p-q')} (q' the inverse of q mod p) all describe the same knot.

Double twist knots C(m, n) have classifying fraction (mn + 1)/n.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

# checked integer range: 64 bit promoted to 128 bit, never wrapped
INT_LIMIT = 2**127


class RangeError(OverflowError):
    """An exact integer left the supported 128-bit range."""


def _check(*values: int) -> None:
    for v in values:
        if abs(v) >= INT_LIMIT:
            raise RangeError(f"integer {v} exceeds the 128-bit range")


@dataclass(frozen=True, order=True)
class TwoBridgeFraction:
    """Normalized fraction p/q with p >= 0 and 0 <= q < p.

    p = 1 (q = 0) is the unknot and p = 0 is the 2-component unlink (stored
    with q = 1, the only fraction with numerator zero).
    """

    p: int
    q: int

    @classmethod
    def from_pair(cls, num: int, den: int) -> "TwoBridgeFraction":
        _check(num, den)
        g = gcd(num, den)
        if g == 0:
            raise ValueError("0/0 is not a fraction")
        num, den = num // g, den // g
        if num < 0:
            num, den = -num, -den
        if num == 0:
            return cls(0, 1)
        return cls(num, den % num)

    @property
    def is_knot(self) -> bool:
        return self.p % 2 == 1

    @property
    def is_unknot(self) -> bool:
        return self.p == 1

    @property
    def is_unlink(self) -> bool:
        return self.p == 0

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


@dataclass(frozen=True)
class ContinuedFraction:
    terms: tuple
    convention: str = "additive"

    def __post_init__(self):
        if self.convention not in ("additive", "subtractive"):
            raise ValueError(f"unknown convention {self.convention!r}")
        if self.convention == "subtractive" and any(b < 2 for b in self.terms):
            raise ValueError("subtractive expansions need every term >= 2")

    def value(self) -> TwoBridgeFraction:
        if self.convention == "additive":
            return cf_value(self.terms)
        return subtractive_value(self.terms)


def _projective_eval(terms: Sequence[int], sign: int) -> tuple:
    # homogeneous coordinates make 1/0 = infinity and 1/infinity = 0 automatic
    if not terms:
        raise ValueError("empty continued fraction")
    num, den = terms[-1], 1
    for a in reversed(terms[:-1]):
        num, den = a * num + sign * den, num
        _check(num, den)
    return num, den


def cf_value(terms: Iterable[int]) -> TwoBridgeFraction:
    """Value of the additive continued fraction [a1, a2, ..., ak].

    >>> str(cf_value([5, -4, 1, -2]))
    '9/2'
    """
    num, den = _projective_eval(list(terms), 1)
    return TwoBridgeFraction.from_pair(num, den)


def subtractive_value(terms: Iterable[int]) -> TwoBridgeFraction:
    num, den = _projective_eval(list(terms), -1)
    return TwoBridgeFraction.from_pair(num, den)


def classifying_fraction(m: int, n: int) -> TwoBridgeFraction:
    """Fraction (mn + 1)/n of C(m, n)."""
    _check(m, n, m * n + 1)
    return TwoBridgeFraction.from_pair(m * n + 1, n)


def subtractive_cf(f: TwoBridgeFraction) -> ContinuedFraction:
    """The unique expansion p/q = b1 - 1/(b2 - ...) with every bi >= 2."""
    p, q = f.p, f.q
    if p <= 1 or q < 1:
        raise ValueError(f"subtractive expansion needs p > q >= 1, got {f}")
    terms = []
    while q:
        b = -(-p // q)
        terms.append(b)
        p, q = q, b * q - p
    return ContinuedFraction(tuple(terms), "subtractive")


def fraction_orbit(f: TwoBridgeFraction) -> frozenset:
    """All fractions over p naming the same knot up to mirror image."""
    p, q = f.p, f.q
    if p < 2 or gcd(p, q) != 1:
        raise ValueError(f"orbit needs p >= 2 and gcd(p, q) = 1, got {f}")
    qi = pow(q, -1, p)
    return frozenset(TwoBridgeFraction(p, r % p) for r in (q, qi, p - q, p - qi))


def orbit_representative(f: TwoBridgeFraction) -> TwoBridgeFraction:
    if f.p < 2:
        return f
    return min(fraction_orbit(f))


def knots_equivalent(f1: TwoBridgeFraction, f2: TwoBridgeFraction) -> bool:
    if f1.p != f2.p:
        return False
    if f1.p < 2:
        return True
    return f2 in fraction_orbit(f1)


@dataclass(frozen=True)
class DoubleTwist:
    """Parameters of the diagram C(m, n).

    The constructor does not canonicalize; use :func:`canonicalize`.
    ``unknot`` and ``torus`` flags are set by canonicalization.
    """

    m: int
    n: int
    unknot: bool = False
    torus: bool = False

    @property
    def pair(self) -> tuple:
        return (self.m, self.n)

    @property
    def trivial(self) -> bool:
        return self.unknot

    def __str__(self) -> str:
        return f"C({self.m},{self.n})"


def canonicalize(k) -> DoubleTwist:
    """Canonical parameters for a double twist knot.

    Accepts a :class:`DoubleTwist` or an ``(m, n)`` pair.  The result has
    m > 1, n even, n not in {0, -2}, unless it is flagged as the unknot
    (returned as C(1, 0)) or as the torus knot C(1, n).
    """
    m, n = (k.m, k.n) if isinstance(k, DoubleTwist) else k
    _check(m, n, m * n)
    if m % 2 and n % 2:
        raise ValueError(f"C({m},{n}) has both parameters odd: a 2-component link")
    if m * n in (0, -2):
        return DoubleTwist(1, 0, unknot=True)
    if n % 2:
        m, n = n, m
    if m < 0:
        m, n = -m, -n
    if n == -2:
        m, n = m - 1, 2
    if m == 1:
        return DoubleTwist(1, n, torus=True)
    if n > 0 and m % 2 == 0 and n > m:
        m, n = n, m
    return DoubleTwist(m, n)


def parameterizations(k) -> list:
    """Every (m, n) with m >= 1, n even nonzero describing the same knot.

    Closure of the canonical pair under swapping the entries (and negating
    both when needed) and the clasp flip C(m, -2) = C(m - 1, 2).
    """
    c = canonicalize(k)
    if c.unknot:
        return []
    seen = {c.pair}
    todo = [c.pair]
    while todo:
        m, n = todo.pop()
        nxt = []
        if m % 2 == 0:
            a, b = n, m
            if a < 0:
                a, b = -a, -b
            nxt.append((a, b))
        if n == -2 and m > 1:
            nxt.append((m - 1, 2))
        if n == 2:
            nxt.append((m + 1, -2))
        for a, b in nxt:
            if a >= 1 and b % 2 == 0 and b != 0 and (a, b) not in seen:
                seen.add((a, b))
                todo.append((a, b))
    return sorted(seen)


def determinant(k) -> int:
    m, n = (k.m, k.n) if isinstance(k, DoubleTwist) else k
    return abs(m * n + 1)


def crossing_number(k) -> int:
    c = canonicalize(k)
    if c.unknot:
        return 0
    if c.torus:
        return abs(c.n + 1)
    if c.n > 0:
        return c.m + c.n
    return c.m - c.n - 1
