"""Per-radius statistics of eigenvector-slope expansions, and log-law fits.

Counting conventions: matrices with k >= 1 carry weight 2 (their negation
has k <= -1 and is never enumerated), matrices with k = 0 carry weight 1;
rational slopes enter with period length 0; matrices without a real slope
(l = 0 or complex eigenvalues) are excluded entirely.  All averages are
carried as exact rationals and only formatted as decimals on output.
"""
from __future__ import annotations

import csv
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, TextIO

from .cfrac import Expansion, _expand_form
from .lattice import UniMatrix, enumerate_ball

CSV_COLUMNS = [
    "r", "weight_total", "avg_len", "max_len", "avg_sum", "max_sum",
    "avg_ratio", "freq_1", "freq_2", "freq_3",
]


@dataclass
class StatsRow:
    """Aggregate over all matrices with norm <= r."""

    r: int
    weight_total: int = 0
    sum_len: int = 0
    max_len: int = 0
    sum_elems: int = 0
    max_elems: int = 0
    sum_ratio: Fraction = Fraction(0)
    digit_counts: Counter = field(default_factory=Counter)

    @property
    def avg_len(self) -> Fraction:
        return Fraction(self.sum_len, self.weight_total) if self.weight_total else Fraction(0)

    @property
    def avg_sum(self) -> Fraction:
        return Fraction(self.sum_elems, self.weight_total) if self.weight_total else Fraction(0)

    @property
    def avg_ratio(self) -> Fraction:
        return self.sum_ratio / self.weight_total if self.weight_total else Fraction(0)

    def freq(self, digit: int) -> Fraction:
        total = sum(self.digit_counts.values())
        return Fraction(self.digit_counts.get(digit, 0), total) if total else Fraction(0)

    def merge(self, other: "StatsRow") -> "StatsRow":
        """Commutative combination; used for prefix accumulation over radii."""
        return StatsRow(
            r=max(self.r, other.r),
            weight_total=self.weight_total + other.weight_total,
            sum_len=self.sum_len + other.sum_len,
            max_len=max(self.max_len, other.max_len),
            sum_elems=self.sum_elems + other.sum_elems,
            max_elems=max(self.max_elems, other.max_elems),
            sum_ratio=self.sum_ratio + other.sum_ratio,
            digit_counts=self.digit_counts + other.digit_counts,
        )


def accumulate(row: StatsRow, mat: UniMatrix, exp: Expansion) -> StatsRow:
    """Add one matrix/expansion pair to the row, applying the k>=1 weight."""
    if mat.l == 0 or mat.trace * mat.trace < 4:
        raise ValueError(f"{mat!r} has no real eigenvector slope")
    weight = 2 if mat.k >= 1 else 1
    row.weight_total += weight
    cyc = exp.cycle
    length = len(cyc)
    total = sum(cyc)
    row.sum_len += weight * length
    row.max_len = max(row.max_len, length)
    row.sum_elems += weight * total
    row.max_elems = max(row.max_elems, total)
    if length:
        row.sum_ratio += weight * Fraction(total, length)
        for d in cyc:
            row.digit_counts[d] += weight
    return row


def _ceil_sqrt(n: int) -> int:
    s = math.isqrt(n)
    return s if s * s == n else s + 1


def sweep(
    r_max: int,
    include_parabolic: bool = True,
    max_steps: int = 10_000,
) -> list[StatsRow]:
    """Rows for r = 1..r_max; row r covers exactly the matrices with norm <= r.

    Enumerates the ball once at r_max, buckets matrices by the least integer
    radius containing them, and prefix-accumulates, which is identical to
    running each radius independently.
    """
    if r_max < 1:
        raise ValueError("r_max must be positive")
    deltas = [StatsRow(r) for r in range(1, r_max + 1)]
    cycle_cache: dict[tuple[int, int, int], tuple[tuple[int, ...], int]] = {}
    for mat in enumerate_ball(r_max):
        if mat.l == 0:
            continue
        t = mat.trace
        disc = t * t - 4
        if disc < 0:
            continue
        bucket = _ceil_sqrt(mat.norm_sq)
        row = deltas[bucket - 1]
        weight = 2 if mat.k >= 1 else 1
        if disc == 0:
            # parabolic with l != 0: rational slope, period 0
            if include_parabolic:
                row.weight_total += weight
            continue
        # the slope satisfies l*y^2 + (k-n)*y - m = 0; take the "+" branch
        key = (mat.l, mat.k - mat.n, -mat.m)
        hit = cycle_cache.get(key)
        if hit is None:
            digits, start, _ = _expand_form(key[0], key[1], key[2], 1, max_steps)
            hit = (tuple(digits[start:]), start)
            cycle_cache[key] = hit
        cyc = hit[0]
        length = len(cyc)
        total = sum(cyc)
        row.weight_total += weight
        row.sum_len += weight * length
        row.max_len = max(row.max_len, length)
        row.sum_elems += weight * total
        row.max_elems = max(row.max_elems, total)
        row.sum_ratio += weight * Fraction(total, length)
        for d in cyc:
            row.digit_counts[d] += weight
    rows: list[StatsRow] = []
    acc = StatsRow(0)
    for delta in deltas:
        acc = acc.merge(delta)  # merge allocates a fresh row each time
        rows.append(acc)
    return rows


def gauss_kuzmin(k: int) -> float:
    """Limiting probability -log2(1 - 1/(k+1)^2) of digit k."""
    if k < 1:
        raise ValueError("digit must be >= 1")
    return -math.log2(1 - 1 / (k + 1) ** 2)


@dataclass(frozen=True)
class FitResult:
    alpha: float
    beta: float
    base: str
    r_squared: float


_LOG_BASES = {"2": 2.0, "10": 10.0, "e": math.e}


def fit_log(points: Sequence[tuple[float, float]], base: str = "2") -> FitResult:
    """Ordinary least squares of y against log_base(r)."""
    if base not in _LOG_BASES:
        raise ValueError(f"base must be one of {sorted(_LOG_BASES)}")
    if len({r for r, _ in points}) < 2:
        raise ValueError("need at least 2 distinct r values")
    if any(r < 1 for r, _ in points):
        raise ValueError("all r must be >= 1")
    b = _LOG_BASES[base]
    xs = [math.log(r) / math.log(b) for r, _ in points]
    ys = [float(y) for _, y in points]
    n = len(xs)
    xbar = sum(xs) / n
    ybar = sum(ys) / n
    sxx = sum((x - xbar) ** 2 for x in xs)
    sxy = sum((x - xbar) * (y - ybar) for x, y in zip(xs, ys))
    beta = sxy / sxx
    alpha = ybar - beta * xbar
    ss_res = sum((y - (alpha + beta * x)) ** 2 for x, y in zip(xs, ys))
    ss_tot = sum((y - ybar) ** 2 for y in ys)
    if ss_tot == 0.0:
        r2 = 1.0 if ss_res < 1e-12 else 0.0
    else:
        r2 = 1.0 - ss_res / ss_tot
    return FitResult(alpha=alpha, beta=beta, base=base, r_squared=r2)


def row_to_csv(row: StatsRow) -> list[str]:
    return [
        str(row.r),
        str(row.weight_total),
        f"{float(row.avg_len):.6f}",
        str(row.max_len),
        f"{float(row.avg_sum):.6f}",
        str(row.max_elems),
        f"{float(row.avg_ratio):.6f}",
        f"{float(row.freq(1)):.6f}",
        f"{float(row.freq(2)):.6f}",
        f"{float(row.freq(3)):.6f}",
    ]


def write_csv(rows: Iterable[StatsRow], out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(row_to_csv(row))


def read_csv(inp: TextIO) -> list[dict[str, float]]:
    reader = csv.DictReader(inp)
    if reader.fieldnames is None or set(CSV_COLUMNS) - set(reader.fieldnames):
        raise ValueError("input is not a sweep CSV")
    return [{k: float(v) for k, v in rec.items()} for rec in reader]
