"""Exact arithmetic on quadratic irrationals (u + v*sqrt(w)) / z.

All operations use integer arithmetic only; no floating point is involved
anywhere, so floors and equalities are exact even arbitrarily close to
integers.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


class SurdError(ValueError):
    """Invalid surd construction or operation."""


class RationalTermination(SurdError):
    """Raised by euclid_step when the value equals the subtracted integer."""


def isqrt(n: int) -> int:
    """Floor of the square root of a non-negative integer."""
    if n < 0:
        raise SurdError(f"isqrt of negative number {n}")
    return math.isqrt(n)


@lru_cache(maxsize=None)
def square_kernel(w: int) -> tuple[int, int]:
    """Split w >= 0 as f*f * k with k squarefree; returns (f, k)."""
    if w < 0:
        raise SurdError(f"negative radicand {w}")
    f = 1
    d = 2
    while d * d <= w:
        dd = d * d
        while w % dd == 0:
            w //= dd
            f *= d
        d += 1
    return f, w


def floor_scaled_sqrt(v: int, w: int) -> int:
    """Floor of v * sqrt(w) for integer v and w >= 0."""
    t = v * v * w
    r = isqrt(t)
    if v >= 0:
        return r
    return -r if r * r == t else -(r + 1)


def floor_quadratic(u: int, v: int, w: int, z: int) -> int:
    """Floor of (u + v*sqrt(w)) / z for integers with z != 0, w >= 0."""
    if z == 0:
        raise SurdError("zero denominator")
    if z < 0:
        u, v, z = -u, -v, -z
    return (u + floor_scaled_sqrt(v, w)) // z


def sign_of_radical(a: int, b: int, w: int) -> int:
    """Sign of a + b*sqrt(w), computed exactly."""
    if b == 0 or w == 0:
        return (a > 0) - (a < 0)
    if b < 0:
        return -sign_of_radical(-a, -b, w)
    # b > 0 and w > 0, so b*sqrt(w) > 0
    if a >= 0:
        return 1
    lhs = b * b * w
    rhs = a * a
    return (lhs > rhs) - (lhs < rhs)


@dataclass(frozen=True, eq=False)
class Surd:
    """The real number (u + v*sqrt(w)) / z, exactly.

    Rationals are carried with v = w = 0 so expansion loops stay uniform.
    Construct with arbitrary components and call normalize(); equality and
    hashing compare values (square factors of w are folded into v).
    """

    u: int
    v: int
    w: int
    z: int

    def normalize(self) -> "Surd":
        """Unique representative: z > 0, gcd 1, perfect-square radicand absorbed."""
        u, v, w, z = self.u, self.v, self.w, self.z
        if z == 0:
            raise SurdError("zero denominator")
        if w < 0:
            raise SurdError(f"negative radicand {w} (complex value)")
        if v != 0:
            r = math.isqrt(w)
            if r * r == w:
                u += v * r
                v = 0
        if v == 0:
            w = 0
        if z < 0:
            u, v, z = -u, -v, -z
        g = math.gcd(math.gcd(abs(u), abs(v)), z)
        return Surd(u // g, v // g, w, z // g)

    @property
    def is_rational(self) -> bool:
        s = self.normalize()
        return s.v == 0

    def as_fraction(self) -> Fraction:
        s = self.normalize()
        if s.v != 0:
            raise SurdError("irrational surd has no Fraction value")
        return Fraction(s.u, s.z)

    def canonical_key(self) -> tuple[int, int, int, int]:
        s = self.normalize()
        if s.v == 0:
            return (s.u, 0, 0, s.z)
        f, k = square_kernel(s.w)
        u, v, z = s.u, s.v * f, s.z
        g = math.gcd(math.gcd(abs(u), abs(v)), z)
        return (u // g, v // g, k, z // g)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Surd):
            return NotImplemented
        return self.canonical_key() == other.canonical_key()

    def __hash__(self) -> int:
        return hash(self.canonical_key())

    def floor(self) -> int:
        s = self.normalize()
        return floor_quadratic(s.u, s.v, s.w, s.z)

    def compare_fraction(self, q: Fraction) -> int:
        """Sign of self - q, exactly."""
        s = self.normalize()
        p, d = q.numerator, q.denominator
        return sign_of_radical(d * s.u - p * s.z, d * s.v, s.w)

    def __float__(self) -> float:
        s = self.normalize()
        return (s.u + s.v * math.sqrt(s.w)) / s.z


def normalize(s: Surd) -> Surd:
    return s.normalize()


def surd_floor(s: Surd) -> int:
    return s.floor()


def euclid_step(s: Surd, a: int) -> Surd:
    """One Euclidean step: normalize(1 / (s - a)).

    Works uniformly for rational surds (v = 0).  Raises RationalTermination
    when s == a, i.e. the reciprocal is undefined and the finite continued
    fraction has ended.
    """
    s = s.normalize()
    t = s.u - a * s.z
    z2 = t * t - s.v * s.v * s.w
    if z2 == 0:
        raise RationalTermination(f"value equals {a}; expansion terminates")
    return Surd(s.z * t, -s.z * s.v, s.w, z2).normalize()


def surd_eq(a: Surd, b: Surd) -> bool:
    return a == b


def conjugate(s: Surd) -> Surd:
    """(u - v*sqrt(w)) / z, normalized.  Involution; fixes rationals."""
    s = s.normalize()
    return Surd(s.u, -s.v, s.w, s.z).normalize()
