import random
from fractions import Fraction

import pytest

from cliquepart.analysis import (
    denominator,
    f_value,
    g_value,
    k_roots_closed_form,
    k_roots_computed,
    leading_coefficient,
    top_quadratic,
    top_value,
    verify_inequality_grid,
)


def test_f_examples():
    assert f_value(1, 1, 3) == 0
    assert f_value(2, 2, 3) == Fraction(1, 3)
    assert f_value(3, 2, 3) == 0


def test_f_domain():
    for args in ((1, 2, 3), (4, 1, 3), (1, 1, 2), (0, 0, 3)):
        with pytest.raises(ValueError):
            f_value(*args)


@pytest.mark.parametrize("ell", range(3, 60))
def test_g_identities(ell):
    for k in range(1, ell + 1):
        assert g_value(k, k, ell) == 4 * k * (k - 1)
    assert g_value(ell, ell - 1, ell) == 0


def test_f_times_denominator_is_g():
    rng = random.Random(0)
    for _ in range(200):
        ell = rng.randint(3, 200)
        k = rng.randint(1, ell)
        i = rng.randint(k, ell)
        assert f_value(i, k, ell) * denominator(ell) == g_value(i, k, ell)


@pytest.mark.parametrize("ell", range(3, 40))
def test_top_row_factor(ell):
    # g at i = ell factors as ell times a quadratic in k
    for k in range(1, ell + 1):
        assert g_value(ell, k, ell) == ell * top_value(k, ell)


def test_roots():
    assert k_roots_closed_form(6)[1] == Fraction(112, 22)
    for ell in range(3, 200):
        k1, k2 = k_roots_closed_form(ell)
        assert set(k_roots_computed(ell)) == {k1, k2}
        assert top_value(k1, ell) == 0
        a, b, c = top_quadratic(ell)
        assert a * k2 * k2 + b * k2 + c == 0
        if ell >= 6:
            assert k2 > k1
        else:
            assert ell - 2 <= k2 < k1


def test_leading_coefficient_negative():
    assert all(leading_coefficient(ell) < 0 for ell in range(3, 500))


def test_grid_small():
    res = verify_inequality_grid(30)
    assert res.passed
    assert res.min_value == 0
    assert res.points == sum(ell * (ell + 1) // 2 - 1 for ell in range(3, 31))


def test_grid_rejects_small_range():
    with pytest.raises(ValueError):
        verify_inequality_grid(2)
