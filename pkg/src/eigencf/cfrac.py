"""Periodic continued-fraction expansions of quadratic irrationals.

Two independent routes:
  * expand_surd   - Euclidean steps on exact surds with gcd cancellation;
  * expand_qform  - integer recurrence on the quadratic equation satisfied
                    by each complete quotient (no surds constructed).
Plus the divisibility check for the raw (uncancelled) coefficients of
monic inputs.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .surd import (
    Surd,
    SurdError,
    euclid_step,
    floor_quadratic,
    isqrt,
)


class StepLimitExceeded(RuntimeError):
    """Expansion failed to close within max_steps; indicates a bug or bad input."""


class Branch(enum.Enum):
    PLUS = "plus"
    MINUS = "minus"


@dataclass(frozen=True)
class Expansion:
    """Head digits followed by the repeating cycle of a continued fraction.

    The cycle is stored exactly as first detected (un-rotated); it is empty
    iff the input was rational (the period-0 convention).
    """

    head: tuple[int, ...]
    cycle: tuple[int, ...]

    @property
    def preperiod_len(self) -> int:
        return len(self.head)

    @property
    def is_periodic(self) -> bool:
        return bool(self.cycle)


@dataclass(frozen=True)
class QuadForm:
    """Polynomial a*x^2 + b*x + c with a root-branch selector."""

    a: int
    b: int
    c: int
    branch: Branch = Branch.PLUS

    def __post_init__(self) -> None:
        if self.a == 0:
            raise ValueError("leading coefficient must be nonzero")

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c


def _is_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def expand_surd(x0: Surd, max_steps: int = 10_000) -> Expansion:
    """Expansion via exact Euclidean steps on surds.

    Cycle detection keeps a hash of every normalized complete quotient;
    rational inputs run the finite algorithm and return an empty cycle.
    """
    if max_steps <= 0:
        raise ValueError("max_steps must be positive")
    x = x0.normalize()
    digits: list[int] = []
    seen: dict[tuple[int, int, int, int], int] = {}
    for _ in range(max_steps):
        if x.v == 0:
            # finite continued fraction of a rational
            while True:
                a = x.u // x.z
                digits.append(a)
                if x.u == a * x.z:
                    return Expansion(tuple(digits), ())
                x = euclid_step(x, a)
                if len(digits) > max_steps:
                    raise StepLimitExceeded(f"no termination within {max_steps} steps")
        key = (x.u, x.v, x.w, x.z)
        if key in seen:
            j = seen[key]
            return Expansion(tuple(digits[:j]), tuple(digits[j:]))
        seen[key] = len(digits)
        a = x.floor()
        digits.append(a)
        x = euclid_step(x, a)
    raise StepLimitExceeded(f"no period within {max_steps} steps")


def qform_step(f: QuadForm, a: int) -> QuadForm:
    """Form whose roots are 1/(x - a) for x the roots of f.

    Coefficients: (A*a^2 + B*a + C, B + 2*A*a, A); the discriminant is
    unchanged.  Tracking a specific root, the branch sign flips.
    """
    a2 = f.a * a * a + f.b * a + f.c
    b2 = f.b + 2 * f.a * a
    if a2 == 0:
        raise SurdError("x = a is a root: rational input")
    flipped = Branch.MINUS if f.branch is Branch.PLUS else Branch.PLUS
    return QuadForm(a2, b2, f.a, flipped)


def qform_root(f: QuadForm) -> Surd:
    """The selected root (-B +/- sqrt(D)) / (2A) as a normalized surd."""
    d = f.discriminant
    if d <= 0:
        raise SurdError(f"non-positive discriminant {d}")
    eps = 1 if f.branch is Branch.PLUS else -1
    return Surd(-f.b, eps, d, 2 * f.a).normalize()


def _expand_form(
    a0: int, b0: int, c0: int, eps: int, max_steps: int
) -> tuple[list[int], int, list[tuple[int, int, int]]]:
    """Core integer loop; returns (digits, cycle_start, form_trace)."""
    d = b0 * b0 - 4 * a0 * c0
    if d <= 0 or _is_square(d):
        raise SurdError(f"discriminant {d} is not positive non-square")
    a_, b_, c_ = a0, b0, c0
    if a_ < 0:
        a_, b_, c_, eps = -a_, -b_, -c_, -eps
    digits: list[int] = []
    seen: dict[tuple[int, int, int, int], int] = {}
    trace: list[tuple[int, int, int]] = [(a_, b_, c_)]
    for _ in range(max_steps):
        key = (a_, b_, c_, eps)
        if key in seen:
            return digits, seen[key], trace
        seen[key] = len(digits)
        q = floor_quadratic(-b_, eps, d, 2 * a_)
        digits.append(q)
        a_, b_, c_ = a_ * q * q + b_ * q + c_, b_ + 2 * a_ * q, a_
        eps = -eps
        if a_ < 0:
            a_, b_, c_, eps = -a_, -b_, -c_, -eps
        trace.append((a_, b_, c_))
    raise StepLimitExceeded(f"no period within {max_steps} steps")


def expand_qform(
    f: QuadForm, max_steps: int = 10_000, with_trace: bool = False
):
    """Expansion via the coefficient recurrence, never building a surd.

    Requires a positive non-square discriminant.  With with_trace=True also
    returns the list of (A_i, B_i, C_i) visited, for invariant checks.
    """
    if max_steps <= 0:
        raise ValueError("max_steps must be positive")
    eps = 1 if f.branch is Branch.PLUS else -1
    digits, start, trace = _expand_form(f.a, f.b, f.c, eps, max_steps)
    exp = Expansion(tuple(digits[:start]), tuple(digits[start:]))
    if with_trace:
        return exp, trace
    return exp


def raw_euclid_digits(x0: Surd, steps: int) -> list[int]:
    """Digit prefix from the literal uncancelled Euclidean recurrence.

    Coefficient sizes double every step, so this is a short-prefix
    reference for equivalence testing only.
    """
    u, v, w, z = x0.u, x0.v, x0.w, x0.z
    if z == 0 or w < 0:
        raise SurdError("invalid surd")
    digits: list[int] = []
    for _ in range(steps):
        a = floor_quadratic(u, v, w, z)
        digits.append(a)
        t = u - a * z
        z2 = t * t - v * v * w
        if z2 == 0:
            break
        u, v, z = z * t, -z * v, z2
        if z < 0:
            u, v, z = -u, -v, -z
    return digits


def check_divisibility(p: int, q: int, max_steps: int = 10_000) -> bool:
    """Test that the raw u_i and z_i stay divisible by v_i for x^2+px+q.

    Starting from the "+" root (-p + sqrt(p^2-4q)) / 2 with v_0 = 1, each
    raw step produces u' = z*(u - a*z), v' = z*v, z' = (u-a*z)^2 - v^2*w
    (up to sign).  v' | u' and, when v' | z', the licensed factor v' is
    cancelled before continuing, which keeps the coefficients bounded while
    testing exactly the raw divisibility at every step.  Runs through one
    full period; returns False at the first failure.
    """
    d = p * p - 4 * q
    if d <= 0 or _is_square(d):
        raise ValueError("roots are not irrational real numbers")
    u, z = -p, 2
    seen: set[tuple[int, int]] = set()
    for _ in range(max_steps):
        if (u, z) in seen:
            return True
        seen.add((u, z))
        a = floor_quadratic(u, 1, d, z)
        t = u - a * z
        # raw step: v' = z, u' = z*t (so v' | u' holds); z' = t*t - d
        if (t * t - d) % z != 0:
            return False
        u, z = -t, (d - t * t) // z
    raise StepLimitExceeded(f"no period within {max_steps} steps")


def khinchin_bound(f0: QuadForm) -> int:
    """Integer upper bound >= 2|A0*x0| + |A0| + |B0| for the coefficients.

    |A0*x0| = |-B0 +/- sqrt(D)| / 2 <= (|B0| + isqrt(D) + 1) / 2 for either
    root, so the returned value dominates both branch readings.
    """
    d = f0.discriminant
    if d <= 0:
        raise SurdError(f"non-positive discriminant {d}")
    two_a0x0 = abs(f0.b) + isqrt(d) + 1
    return two_a0x0 + abs(f0.a) + abs(f0.b)


def expansion_of_monic(p: int, q: int, branch: Branch = Branch.PLUS,
                       max_steps: int = 10_000) -> Expansion:
    """Expansion of the selected root of x^2 + p*x + q (rational roots allowed)."""
    d = p * p - 4 * q
    if d < 0:
        raise SurdError("complex roots")
    if _is_square(d):
        eps = 1 if branch is Branch.PLUS else -1
        return expand_surd(Surd(-p, eps, d, 2).normalize(), max_steps)
    return expand_qform(QuadForm(1, p, q, branch), max_steps)
