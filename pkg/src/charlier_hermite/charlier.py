"""Charlier polynomials c_n^a at real (not just integer) arguments.

The defining series is

    c_n^a(nu) = sum_{k=0}^{n} C(n,k) (-nu)_k a^{-k}

with (-nu)_k the rising factorial.  Writing the ratio of consecutive
terms as ((n-k)/(k+1)) * ((k-nu)/a) avoids both binomials and gamma
quotients, so real nu costs nothing extra and there is no pole to dodge.

The scaled value

    y_nu^a(x) = (2a)^{nu/2} c_n^a(nu),   n = ceil(a - x*sqrt(2a))

is the quantity that approaches the Hermite function H_nu(x) as a grows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

import numpy as np

from .errors import DegenerateArgumentError, DomainError, RationalModeError

Rational = Union[int, Fraction]
Number = Union[int, float, Fraction]


def _check_degree(n: int, name: str = "n") -> int:
    if isinstance(n, bool) or n != int(n) or n < 0:
        raise DomainError(f"{name} must be an integer >= 0, got {n!r}")
    return int(n)


def _to_fraction(v: Number, name: str) -> Fraction:
    # Floats are taken at their exact binary value; decimal strings and
    # Fractions pass through exactly.
    try:
        return Fraction(v)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise RationalModeError(f"{name}={v!r} is not an exact rational") from exc


def charlier_direct(n: int, a: Number, nu: Number, mode: str = "float"):
    """Evaluate c_n^a(nu) by direct summation of the defining series.

    mode="float": terms generated by the overflow-safe ratio recurrence
    and accumulated with exactly rounded (compensated) summation.
    mode="rational": the same recurrence in Fraction arithmetic; exact.
    """
    n = _check_degree(n)
    if mode == "rational":
        a_r = _to_fraction(a, "a")
        nu_r = _to_fraction(nu, "nu")
        if a_r <= 0:
            raise DomainError(f"a must be positive, got {a!r}")
        total = Fraction(1)
        term = Fraction(1)
        for k in range(n):
            term *= Fraction(n - k, k + 1) * (k - nu_r) / a_r
            if term == 0:
                break
            total += term
        return total
    if mode != "float":
        raise DomainError(f"unknown mode {mode!r}")
    a_f = float(a)
    nu_f = float(nu)
    if not (math.isfinite(a_f) and math.isfinite(nu_f)) or a_f <= 0:
        raise DomainError(f"need finite nu and finite a > 0, got a={a!r}, nu={nu!r}")
    if n == 0:
        return 1.0
    k = np.arange(n, dtype=float)
    ratios = ((n - k) / (k + 1.0)) * ((k - nu_f) / a_f)
    terms = np.empty(n + 1)
    terms[0] = 1.0
    np.cumprod(ratios, out=terms[1:])
    return math.fsum(terms.tolist())


def charlier_degree_sequence(a: float, nu: float, n_max: int) -> list:
    """c_0, c_1, ..., c_{n_max} via the degree recurrence

        a c_{m+1} = (m + a - nu) c_m - m c_{m-1},  c_0 = 1, c_1 = 1 - nu/a.
    """
    n_max = _check_degree(n_max, "n_max")
    a = float(a)
    nu = float(nu)
    if not (math.isfinite(a) and math.isfinite(nu)) or a <= 0:
        raise DomainError(f"need finite nu and finite a > 0, got a={a!r}, nu={nu!r}")
    seq = [1.0]
    if n_max == 0:
        return seq
    seq.append(1.0 - nu / a)
    for m in range(1, n_max):
        seq.append(((m + a - nu) * seq[m] - m * seq[m - 1]) / a)
    return seq


def charlier_order_shift(n: int, a: float, nu: float,
                         c_at_nu: float, c_at_nu_minus_1: float) -> float:
    """c_n(nu+1) from c_n(nu) and c_n(nu-1):

        c_n(nu+1) = ((nu + a - n)/a) c_n(nu) - (nu/a) c_n(nu-1).
    """
    n = _check_degree(n)
    if a <= 0:
        raise DomainError(f"a must be positive, got {a!r}")
    return ((nu + a - n) / a) * c_at_nu - (nu / a) * c_at_nu_minus_1


def charlier_backward_step(n: int, a: float, x: float,
                           c_nm1_at_x: float, c_n_at_x: float) -> float:
    """c_{n-1}(x-1) from same-argument values at degrees n-1 and n:

        c_{n-1}(x-1) = (a/x) (c_{n-1}(x) - c_n(x)).

    Signals rather than divides when |x| < 1e-300; the caller must use
    direct evaluation there.
    """
    n = _check_degree(n)
    if n < 1:
        raise DomainError("backward step needs n >= 1")
    if a <= 0:
        raise DomainError(f"a must be positive, got {a!r}")
    if abs(x) < 1e-300:
        raise DegenerateArgumentError(
            f"backward step degenerate at x={x!r}; evaluate directly instead"
        )
    return (a / x) * (c_nm1_at_x - c_n_at_x)


@dataclass(frozen=True)
class ScaledPoint:
    """A point (x, a) of the convergence sweep.

    Carries the derived degree n = ceil(a - x*sqrt(2a)) and the ceiling
    offset theta = n - (a - x*sqrt(2a)) in [0, 1).
    """

    x: float
    a: float
    n: int = field(init=False)
    theta: float = field(init=False)

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.a)) or self.a <= 0:
            raise DomainError(
                f"ScaledPoint needs finite x and finite a > 0, got x={self.x!r}, a={self.a!r}"
            )
        s = self.a - self.x * math.sqrt(2.0 * self.a)
        n = math.ceil(s)
        if n < 0:
            raise DomainError(
                f"derived degree n = ceil({s}) is negative; x too large for a"
            )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "theta", float(n) - s)


def _exact_sqrt(f: Fraction):
    if f < 0:
        return None
    pn = math.isqrt(f.numerator)
    pd = math.isqrt(f.denominator)
    if pn * pn == f.numerator and pd * pd == f.denominator:
        return Fraction(pn, pd)
    return None


def scaled_y(point: ScaledPoint, nu: Number, mode: str = "float"):
    """y_nu^a(x) = (2a)^{nu/2} c_n^a(nu) at a ScaledPoint.

    Rational mode needs (2a)^{nu/2} to be rational: nu an even integer,
    or nu an odd integer with 2a a perfect square.
    """
    if mode == "float":
        nu_f = float(nu)
        return (2.0 * point.a) ** (nu_f / 2.0) * charlier_direct(point.n, point.a, nu_f)
    if mode != "rational":
        raise DomainError(f"unknown mode {mode!r}")
    nu_r = _to_fraction(nu, "nu")
    if nu_r.denominator != 1:
        raise RationalModeError(f"(2a)^(nu/2) is irrational for nu={nu!r}")
    nu_i = nu_r.numerator
    two_a = 2 * _to_fraction(point.a, "a")
    if nu_i % 2 == 0:
        scale = two_a ** (nu_i // 2)
    else:
        root = _exact_sqrt(two_a)
        if root is None:
            raise RationalModeError(
                f"sqrt(2a) is irrational for a={point.a!r}; cannot scale exactly"
            )
        scale = root ** nu_i
    return scale * charlier_direct(point.n, _to_fraction(point.a, "a"), nu_r,
                                   mode="rational")
