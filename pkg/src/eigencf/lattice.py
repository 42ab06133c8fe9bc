"""Enumeration of SL(2,Z) matrices with k >= 0 inside a euclidean norm ball.

A matrix [[k,l],[m,n]] lies in the ball of radius r when
k^2 + l^2 + m^2 + n^2 <= r^2.  Enumeration runs over coprime (k, m) pairs,
seeds one solution of k*n - l*m = 1 via the extended Euclidean algorithm,
and walks the shift family [[k, l+a*k],[m, n+a*m]].
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterator, Optional

from .surd import Surd


class LatticeError(ValueError):
    pass


class MatrixClass(enum.Enum):
    HYPERBOLIC = "hyperbolic"
    PARABOLIC = "parabolic"
    ELLIPTIC = "elliptic"


@dataclass(frozen=True)
class UniMatrix:
    """Integer matrix [[k,l],[m,n]] with determinant 1."""

    k: int
    l: int
    m: int
    n: int

    def __post_init__(self) -> None:
        if self.k * self.n - self.l * self.m != 1:
            raise LatticeError(f"determinant != 1 for {self!r}")

    @property
    def norm_sq(self) -> int:
        return self.k * self.k + self.l * self.l + self.m * self.m + self.n * self.n

    @property
    def trace(self) -> int:
        return self.k + self.n


def classify(mat: UniMatrix) -> MatrixClass:
    t2 = mat.trace * mat.trace
    if t2 > 4:
        return MatrixClass.HYPERBOLIC
    if t2 == 4:
        return MatrixClass.PARABOLIC
    return MatrixClass.ELLIPTIC


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def solve_unimodular(k: int, m: int) -> Optional[tuple[int, int]]:
    """One integer pair (l, n) with k*n - l*m = 1, or None when gcd(k,m) > 1."""
    if k == 0 and m == 0:
        raise LatticeError("(0, 0) has no unimodular completion")
    g, x, y = xgcd(k, m)
    if g != 1:
        return None
    # k*x + m*y = 1  =>  k*x - (-y)*m = 1
    return (-y, x)


def enumerate_ball(r: int) -> Iterator[UniMatrix]:
    """Every UniMatrix with k >= 0 and norm_sq <= r^2, each exactly once.

    Deterministic order: k ascending, m ascending, then the shift offset a
    outward (0, 1, -1, 2, -2, ...) from the minimal-norm member of the
    (k, m) family.
    """
    if r <= 0:
        raise LatticeError("radius must be positive")
    r2 = r * r
    for k in range(0, r + 1):
        m_max = math.isqrt(r2 - k * k)
        for m in range(-m_max, m_max + 1):
            if k == 0 and m == 0:
                continue
            sol = solve_unimodular(k, m)
            if sol is None:
                continue
            l0, n0 = sol
            d = k * k + m * m
            # shift the seed to the minimal-norm member of the family
            a0 = -(l0 * k + n0 * m) // d
            best = min(
                (a0, a0 + 1),
                key=lambda a: (l0 + a * k) ** 2 + (n0 + a * m) ** 2,
            )
            l0, n0 = l0 + best * k, n0 + best * m
            if d + l0 * l0 + n0 * n0 > r2:
                continue
            yield UniMatrix(k, l0, m, n0)
            step = 1
            up = down = True
            while up or down:
                if up:
                    l1, n1 = l0 + step * k, n0 + step * m
                    if d + l1 * l1 + n1 * n1 <= r2:
                        yield UniMatrix(k, l1, m, n1)
                    else:
                        up = False
                if down:
                    l1, n1 = l0 - step * k, n0 - step * m
                    if d + l1 * l1 + n1 * n1 <= r2:
                        yield UniMatrix(k, l1, m, n1)
                    else:
                        down = False
                step += 1


def brute_ball_oracle(r: int) -> set[UniMatrix]:
    """Exhaustive scan over (k, l, m) with n solved from the determinant.

    Guarded to small r; this is the independent test oracle for
    enumerate_ball, not a production path.
    """
    if r < 0:
        raise LatticeError("radius must be non-negative")
    if r > 20:
        raise LatticeError("brute-force oracle restricted to r <= 20")
    r2 = r * r
    out: set[UniMatrix] = set()
    for k in range(0, r + 1):
        for l in range(-r, r + 1):
            if k * k + l * l > r2:
                continue
            for m in range(-r, r + 1):
                partial = k * k + l * l + m * m
                if partial > r2:
                    continue
                if k == 0:
                    if l * m != -1:
                        continue
                    n_bound = math.isqrt(r2 - partial)
                    for n in range(-n_bound, n_bound + 1):
                        out.add(UniMatrix(k, l, m, n))
                else:
                    num = 1 + l * m
                    if num % k != 0:
                        continue
                    n = num // k
                    if partial + n * n <= r2:
                        out.add(UniMatrix(k, l, m, n))
    return out


def eigen_slope(mat: UniMatrix) -> Optional[Surd]:
    """Slope y of the eigenvector (1, y), the "+" branch, or None.

    None when l = 0 (vertical eigenvector) or the eigenvalues are complex.
    The conjugate surd is the second slope.
    """
    if mat.l == 0:
        return None
    t = mat.trace
    disc = t * t - 4
    if disc < 0:
        return None
    return Surd(mat.n - mat.k, 1, disc, 2 * mat.l).normalize()
