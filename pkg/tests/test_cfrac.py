import random
from fractions import Fraction

import pytest

from eigencf.cfrac import (
    Branch,
    QuadForm,
    StepLimitExceeded,
    check_divisibility,
    expand_qform,
    expand_surd,
    expansion_of_monic,
    khinchin_bound,
    qform_root,
    qform_step,
    raw_euclid_digits,
)
from eigencf.cycles import canonical_rotation
from eigencf.surd import Surd, SurdError, surd_eq


def test_expand_surd_examples():
    e = expand_surd(Surd(1, 1, 5, 2))
    assert (e.head, e.cycle) == ((), (1,))
    e = expand_surd(Surd(0, 1, 2, 1))
    assert (e.head, e.cycle) == ((1,), (2,))
    e = expand_surd(Surd(-2, 1, 3, 1))
    assert (e.head, e.cycle) == ((-1,), (1, 2))
    e = expand_surd(Surd(5, 0, 0, 3))
    assert (e.head, e.cycle) == ((1, 1, 2), ())
    assert e.preperiod_len == 3 and not e.is_periodic


def test_expand_surd_step_limit():
    with pytest.raises(StepLimitExceeded):
        expand_surd(Surd(0, 1, 1234567, 1), max_steps=3)


def test_qform_step_examples():
    f = qform_step(QuadForm(1, -1, -1), 1)
    assert (f.a, f.b, f.c) == (-1, 1, 1)
    g = qform_step(QuadForm(1, 0, -2), 1)
    assert (g.a, g.b, g.c) == (-1, 2, 1)
    # discriminant invariance
    assert f.discriminant == QuadForm(1, -1, -1).discriminant == 5
    assert g.discriminant == QuadForm(1, 0, -2).discriminant == 8


def test_qform_step_rational_root():
    with pytest.raises(SurdError):
        qform_step(QuadForm(1, -3, 2), 1)  # x=1 is a root


def test_qform_root_examples():
    assert surd_eq(qform_root(QuadForm(1, -1, -1)), Surd(1, 1, 5, 2))
    root = qform_root(QuadForm(1, 4, 1))
    assert surd_eq(root, Surd(-2, 1, 3, 1))
    # substituting back must give exactly zero
    u, v, w, z = root.u, root.v, root.w, root.z
    assert (u * u + v * v * w) + 4 * u * z + z * z == 0
    assert 2 * u * v + 4 * v * z == 0
    assert surd_eq(qform_root(QuadForm(1, 0, -2, Branch.MINUS)), Surd(0, -1, 2, 1))
    with pytest.raises(SurdError):
        qform_root(QuadForm(1, 0, 1))


def test_expand_qform_examples():
    e = expand_qform(QuadForm(1, -1, -1))
    assert (e.head, e.cycle) == ((), (1,))
    e = expand_qform(QuadForm(1, 4, 1))
    assert (e.head, e.cycle) == ((-1,), (1, 2))
    e = expand_qform(QuadForm(1, 0, -2))
    assert (e.head, e.cycle) == ((1,), (2,))


def _random_forms(count, seed, coeff_max=50):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        a = rng.randint(-coeff_max, coeff_max)
        b = rng.randint(-coeff_max, coeff_max)
        c = rng.randint(-coeff_max, coeff_max)
        if a == 0:
            continue
        d = b * b - 4 * a * c
        from math import isqrt
        if d <= 0 or isqrt(d) ** 2 == d:
            continue
        out.append(QuadForm(a, b, c, rng.choice([Branch.PLUS, Branch.MINUS])))
    return out


def test_algorithm_equivalence_random_forms():
    for f in _random_forms(300, seed=7):
        e1 = expand_surd(qform_root(f))
        e2 = expand_qform(f)
        assert e1.head == e2.head
        assert canonical_rotation(e1.cycle) == canonical_rotation(e2.cycle)


def test_digit_positivity():
    for f in _random_forms(100, seed=11):
        e = expand_qform(f)
        assert all(d >= 1 for d in (e.head + e.cycle)[1:])


def test_discriminant_constant_along_expansion():
    for f in _random_forms(100, seed=13):
        _, trace = expand_qform(f, with_trace=True)
        d0 = f.discriminant
        for a, b, c in trace:
            assert b * b - 4 * a * c == d0


def _cf_value(digits):
    val = Fraction(digits[-1])
    for d in reversed(digits[:-1]):
        val = d + 1 / val
    return val


def test_value_reconstruction():
    for f in _random_forms(60, seed=17):
        e = expand_qform(f)
        digits = list(e.head) + list(e.cycle) * 3
        approx = _cf_value(digits)
        root = qform_root(f)
        q = approx.denominator
        err_bound = Fraction(1, q * q)
        # |root - approx| < 1/q^2, decided exactly
        assert root.compare_fraction(approx - err_bound) > 0
        assert root.compare_fraction(approx + err_bound) < 0


def test_raw_vs_cancelled_equivalence():
    # digit prefixes of the uncancelled recurrence match the cancelled one
    rng = random.Random(23)
    checked = 0
    while checked < 200:
        u = rng.randint(-9, 9)
        v = rng.randint(-3, 3)
        w = rng.randint(2, 30)
        z = rng.choice([-3, -2, -1, 1, 2, 3])
        from math import isqrt
        if v == 0 or isqrt(w) ** 2 == w:
            continue
        x = Surd(u, v, w, z).normalize()
        e = expand_surd(x)
        full = list(e.head) + list(e.cycle) * 12
        prefix = raw_euclid_digits(x, 10)
        assert prefix == full[: len(prefix)]
        checked += 1


def test_check_divisibility_examples():
    assert check_divisibility(-1, -1)  # golden ratio
    assert check_divisibility(4, 1)
    with pytest.raises(ValueError):
        check_divisibility(0, -4)  # discriminant 16 is a perfect square


def test_khinchin_bound_examples():
    f = QuadForm(1, -1, -1)
    bound = khinchin_bound(f)
    assert bound >= 6
    _, trace = expand_qform(f, with_trace=True)
    for a, b, c in trace:
        assert abs(a) <= bound and abs(c) <= bound
        assert b * b - 4 * a * c == 5


def test_expansion_of_monic_rational():
    e = expansion_of_monic(2, 1)  # (x+1)^2, root -1
    assert (e.head, e.cycle) == ((-1,), ())
