import io
from fractions import Fraction

import pytest

from eigencf.cfrac import Expansion, expand_surd
from eigencf.lattice import UniMatrix, brute_ball_oracle, eigen_slope
from eigencf.stats import (
    CSV_COLUMNS,
    StatsRow,
    accumulate,
    fit_log,
    gauss_kuzmin,
    read_csv,
    sweep,
    write_csv,
)


def test_accumulate_weights_and_sums():
    row = StatsRow(r=5)
    accumulate(row, UniMatrix(1, 1, 1, 2), Expansion((), (1,)))
    assert row.weight_total == 2
    assert row.sum_len == 2 and row.max_len == 1
    assert row.sum_elems == 2 and row.max_elems == 1
    assert row.sum_ratio == Fraction(2)
    assert row.digit_counts == {1: 2}
    # parabolic with l != 0: rational slope, period 0, still weighted
    accumulate(row, UniMatrix(1, 1, 0, 1), Expansion((0,), ()))
    assert row.weight_total == 4
    assert row.sum_len == 2 and row.sum_ratio == Fraction(2)
    # k = 0 carries weight 1
    accumulate(row, UniMatrix(0, 1, -1, -4), Expansion((-1,), (1, 2)))
    assert row.weight_total == 5
    assert row.sum_len == 4 and row.max_elems == 3


def test_accumulate_rejects_sloperless_matrix():
    with pytest.raises(ValueError):
        accumulate(StatsRow(r=1), UniMatrix(0, 1, -1, 0), Expansion((), ()))
    with pytest.raises(ValueError):
        accumulate(StatsRow(r=1), UniMatrix(1, 0, 5, 1), Expansion((), ()))


def _row_from_oracle(r):
    row = StatsRow(r=r)
    for mat in brute_ball_oracle(r):
        y = eigen_slope(mat)
        if y is None:
            continue
        accumulate(row, mat, expand_surd(y))
    return row


def _rows_equal(a, b):
    return (
        a.weight_total == b.weight_total
        and a.sum_len == b.sum_len
        and a.max_len == b.max_len
        and a.sum_elems == b.sum_elems
        and a.max_elems == b.max_elems
        and a.sum_ratio == b.sum_ratio
        and a.digit_counts == b.digit_counts
    )


def test_sweep_matches_independent_oracle_rows():
    rows = sweep(20)
    for r in (5, 10, 20):
        assert _rows_equal(rows[r - 1], _row_from_oracle(r))


def test_sweep_prefix_consistency():
    rows = sweep(20)
    for r in (5, 10, 20):
        assert _rows_equal(rows[r - 1], sweep(r)[r - 1])


def test_sweep_row1_empty():
    row = sweep(1)[0]
    assert row.weight_total == 0
    assert row.avg_len == 0


def test_weighted_counting():
    from eigencf.lattice import enumerate_ball
    r = 12
    w1 = w2 = 0
    for mat in enumerate_ball(r):
        y = eigen_slope(mat)
        if y is None:
            continue
        if mat.k >= 1:
            w2 += 1
        else:
            w1 += 1
    assert sweep(r)[r - 1].weight_total == 2 * w2 + w1


def test_sweep_monotone_sums():
    rows = sweep(15)
    for a, b in zip(rows, rows[1:]):
        assert a.weight_total <= b.weight_total
        assert a.sum_len <= b.sum_len
        assert a.sum_elems <= b.sum_elems
        assert a.max_len <= b.max_len


def test_max_elems_small_radii():
    rows = sweep(12)
    for r in range(5, 13):
        assert rows[r - 1].max_elems == r - 2


def test_digit_frequencies_are_probabilities():
    row = sweep(15)[14]
    total = Fraction(0)
    for d in row.digit_counts:
        f = row.freq(d)
        assert 0 <= f <= 1
        total += f
    assert total == 1


def test_gauss_kuzmin_values():
    assert abs(gauss_kuzmin(1) - 0.4150) < 5e-4
    assert abs(gauss_kuzmin(2) - 0.1699) < 5e-4
    assert abs(gauss_kuzmin(3) - 0.0931) < 5e-4
    with pytest.raises(ValueError):
        gauss_kuzmin(0)


def test_fit_log_exact_synthetic():
    import math
    pts = [(r, 2 + 3 * math.log2(r)) for r in (2, 4, 8, 16)]
    res = fit_log(pts, "2")
    assert abs(res.alpha - 2) < 1e-9
    assert abs(res.beta - 3) < 1e-9
    assert abs(res.r_squared - 1) < 1e-12


def test_fit_log_constant():
    res = fit_log([(1, 5.0), (2, 5.0), (4, 5.0)], "10")
    assert abs(res.alpha - 5) < 1e-9
    assert abs(res.beta) < 1e-9


def test_fit_log_rejects():
    with pytest.raises(ValueError):
        fit_log([(2, 1.0), (2, 2.0)], "2")
    with pytest.raises(ValueError):
        fit_log([(1, 1.0), (2, 2.0)], "3")


def test_csv_roundtrip():
    rows = sweep(6)
    buf = io.StringIO()
    write_csv(rows, buf)
    buf.seek(0)
    records = read_csv(buf)
    assert len(records) == 6
    assert set(records[0]) == set(CSV_COLUMNS)
    assert records[4]["max_sum"] == 3.0  # r=5


def test_read_csv_rejects_bad_schema():
    with pytest.raises(ValueError):
        read_csv(io.StringIO("a,b\n1,2\n"))
