"""Log-log rate fitting and the exact sharpness identity.

fit_rate puts a least-squares line through (ln a, ln err); a slope near
-1/2 is the empirical signature of O(1/sqrt(a)) convergence.

sharpness_check verifies, in exact rational arithmetic, that for nu = 2
and admissible (x, a), meaning a = r^2/2 with r even and x r a
non-negative integer at most a, the deviation is exactly

    (2a) c_n^a(2) - (4x^2 - 2) = 4x / sqrt(2a),   n = a - x sqrt(2a).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

import numpy as np

from .charlier import _exact_sqrt, _to_fraction, charlier_direct
from .errors import DomainError, RationalModeError


@dataclass(frozen=True)
class RateFit:
    slope: float
    intercept: float
    r_squared: float
    points: Tuple[Tuple[float, float], ...]


def fit_rate(points: Sequence[Tuple[float, float]]) -> RateFit:
    """Least-squares line through (ln a, ln err).

    Needs at least 3 points, all a distinct and positive, all err > 0.
    """
    pts = tuple((float(a), float(e)) for a, e in points)
    if len(pts) < 3:
        raise DomainError(f"fit_rate needs >= 3 points, got {len(pts)}")
    a_vals = [p[0] for p in pts]
    if len(set(a_vals)) != len(a_vals):
        raise DomainError("fit_rate needs distinct a values")
    if any(a <= 0 for a in a_vals):
        raise DomainError("fit_rate needs positive a values")
    if any(e <= 0 for e in (p[1] for p in pts)):
        raise DomainError("fit_rate needs strictly positive errors")
    la = np.log([p[0] for p in pts])
    le = np.log([p[1] for p in pts])
    slope, intercept = np.polyfit(la, le, 1)
    pred = slope * la + intercept
    ss_res = float(np.sum((le - pred) ** 2))
    ss_tot = float(np.sum((le - np.mean(le)) ** 2))
    r_squared = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    return RateFit(float(slope), float(intercept), r_squared, pts)


@dataclass(frozen=True)
class SharpnessResult:
    n: int
    lhs: Fraction
    rhs: Fraction
    equal: bool


def sharpness_check(x, a) -> SharpnessResult:
    """Exact evaluation of the nu = 2 deviation identity.

    Inputs are taken as exact rationals (int, Fraction, or decimal
    string); pairs where sqrt(2a) is irrational or n = a - x sqrt(2a)
    is not a non-negative integer are rejected.
    """
    x_r = _to_fraction(x, "x")
    a_r = _to_fraction(a, "a")
    if a_r <= 0:
        raise DomainError(f"a must be positive, got {a!r}")
    two_a = 2 * a_r
    r = _exact_sqrt(two_a)
    if r is None:
        raise RationalModeError(f"sqrt(2a) is irrational for a={a!r}")
    n_exact = a_r - x_r * r
    if n_exact.denominator != 1 or n_exact < 0:
        raise DomainError(
            f"n = a - x*sqrt(2a) = {n_exact} is not a non-negative integer"
        )
    n = int(n_exact)
    c = charlier_direct(n, a_r, Fraction(2), mode="rational")
    lhs = two_a * c - (4 * x_r * x_r - 2)
    rhs = 4 * x_r / r
    return SharpnessResult(n, lhs, rhs, lhs == rhs)


def admissible_sharpness_pairs(r_values=(2, 4, 6, 8)) -> list:
    """All (x, a) admissible for sharpness_check: a = r^2/2 for each even
    r, x = j/r for every integer 0 <= j <= a."""
    pairs = []
    for r in r_values:
        if r % 2 or r <= 0:
            raise DomainError(f"r values must be positive even integers, got {r!r}")
        a = Fraction(r * r, 2)
        for j in range(int(a) + 1):
            pairs.append((Fraction(j, r), a))
    return pairs
