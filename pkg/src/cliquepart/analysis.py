"""Exact-arithmetic checks of the polynomial inequality behind the
``2w'/(w'+1)`` guarantee.

``f(i, k, l)`` is the per-clique-size slack whose nonnegativity carries the
induction step; ``g`` is its numerator over ``4 l (l-1) (l-2)``. Python ints
are unbounded, so every evaluation here is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, isqrt


def _check_domain(i: int, k: int, ell: int) -> None:
    if not (ell >= 3 and 1 <= k <= i <= ell):
        raise ValueError(f"need ell >= 3 and 1 <= k <= i <= ell, got i={i} k={k} ell={ell}")


def f_value(i: int, k: int, ell: int) -> Fraction:
    """The three-term slack, evaluated term by term (no expansion)."""
    _check_domain(i, k, ell)
    c_low = comb(ell - 1, 2)
    c_top = comb(ell, 2)
    first = Fraction((ell - k) * c_low - k + 1, 2 * c_low) * (i - k)
    second = Fraction(c_low + 1, 2 * c_low) * Fraction((2 * i - k) * (k - 1), 2)
    third = Fraction(c_top + 1, 2 * c_top) * comb(i, 2)
    return first + second - third


def leading_coefficient(ell: int) -> int:
    """Coefficient of ``i^2`` in ``g``."""
    return -ell**3 + 3 * ell**2 - 4 * ell + 4


def g_value(i: int, k: int, ell: int) -> int:
    """Numerator of ``f``: a quadratic in ``i`` with cubic-in-``ell`` coefficients."""
    a = leading_coefficient(ell)
    b = 2 * ell**4 - 7 * ell**3 + 7 * ell**2 - 4
    c = ell * k * (-2 * ell**3 + ell**2 * k + 7 * ell**2 - 3 * ell * k - 7 * ell + 4 * k)
    return a * i * i + b * i + c


def denominator(ell: int) -> int:
    return 4 * ell * (ell - 1) * (ell - 2)


def top_quadratic(ell: int) -> tuple[int, int, int]:
    """Coefficients ``(a, b, c)`` of ``Q(k) = a k^2 + b k + c`` with
    ``g(l, k, l) = l * Q(k)``."""
    return (
        ell**2 - 3 * ell + 4,
        -2 * ell**3 + 7 * ell**2 - 7 * ell,
        ell**4 - 4 * ell**3 + 3 * ell**2 + 4 * ell - 4,
    )


def top_value(k: int, ell: int) -> int:
    a, b, c = top_quadratic(ell)
    return a * k * k + b * k + c


def k_roots_closed_form(ell: int) -> tuple[Fraction, Fraction]:
    """``(k1, k2) = (l - 1, (l-2)^2 (l+1) / (l^2 - 3l + 4))``."""
    return Fraction(ell - 1), Fraction((ell - 2) ** 2 * (ell + 1), ell**2 - 3 * ell + 4)


def k_roots_computed(ell: int) -> tuple[Fraction, Fraction]:
    """Roots of ``Q`` from the quadratic formula, ascending.

    The discriminant must be a perfect square for the roots to be rational;
    ``ValueError`` otherwise.
    """
    a, b, c = top_quadratic(ell)
    disc = b * b - 4 * a * c
    root = isqrt(disc)
    if root * root != disc:
        raise ValueError(f"discriminant {disc} is not a perfect square at ell={ell}")
    lo, hi = Fraction(-b - root, 2 * a), Fraction(-b + root, 2 * a)
    return lo, hi


@dataclass
class InequalityGridResult:
    ell_range: tuple[int, int]
    violations: list[tuple[int, int, int]] = field(default_factory=list)
    min_value: int | None = None
    points: int = 0
    diagonal_ok: bool = True    # g(k, k, l) == 4k(k-1)
    root_ok: bool = True        # g(l, l-1, l) == 0
    concavity_ok: bool = True   # min over i in [k, l] sits at an endpoint
    leading_negative: bool = True
    k2_ok: bool = True          # closed-form roots == computed roots

    @property
    def passed(self) -> bool:
        return (
            not self.violations
            and self.diagonal_ok
            and self.root_ok
            and self.concavity_ok
            and self.leading_negative
            and self.k2_ok
        )

    def as_record(self) -> dict:
        return {
            "ell_min": self.ell_range[0],
            "ell_max": self.ell_range[1],
            "points": self.points,
            "violations": [list(v) for v in self.violations],
            "min_value": self.min_value,
            "diagonal_ok": self.diagonal_ok,
            "root_ok": self.root_ok,
            "concavity_ok": self.concavity_ok,
            "leading_negative": self.leading_negative,
            "k2_ok": self.k2_ok,
            "passed": self.passed,
        }


def verify_inequality_grid(ell_max: int, ell_min: int = 3) -> InequalityGridResult:
    """Evaluate ``g`` over ``3 <= l <= ell_max``, ``1 <= k <= l-1``, ``k <= i <= l``."""
    if ell_max < 3 or ell_min < 3:
        raise ValueError("ell range must start at 3 or above")
    res = InequalityGridResult((ell_min, ell_max))
    for ell in range(ell_min, ell_max + 1):
        if leading_coefficient(ell) >= 0:
            res.leading_negative = False
        if g_value(ell, ell - 1, ell) != 0:
            res.root_ok = False
        # k2 sits below k1 for small ell, so compare as sets
        if set(k_roots_closed_form(ell)) != set(k_roots_computed(ell)):
            res.k2_ok = False
        for k in range(1, ell):
            row = [g_value(i, k, ell) for i in range(k, ell + 1)]
            res.points += len(row)
            if row[0] != 4 * k * (k - 1):
                res.diagonal_ok = False
            low = min(row)
            if low != min(row[0], row[-1]):
                res.concavity_ok = False
            if res.min_value is None or low < res.min_value:
                res.min_value = low
            for i, v in zip(range(k, ell + 1), row):
                if v < 0:
                    res.violations.append((i, k, ell))
    return res
