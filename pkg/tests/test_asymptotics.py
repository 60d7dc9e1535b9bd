import math

import numpy as np
import pytest

from charlier_hermite import (
    DomainError,
    SplitConfig,
    charlier_direct,
    f_nu,
    factor_p,
    factor_q,
    head_tail_split,
    hermite_at_zero,
    term_T,
    trapezoid_gamma_check,
    upper_incomplete_gamma,
)
from charlier_hermite.asymptotics import _ceil_4th_root


def test_ceil_4th_root_exact():
    for r in (1, 2, 3, 10, 31, 1000, 56234):
        assert _ceil_4th_root(r ** 4) == r
        assert _ceil_4th_root(r ** 4 + 1) == r + 1
        if r > 1:
            assert _ceil_4th_root(r ** 4 - 1) == r


def test_split_config_derivations():
    cfg = SplitConfig(a=1e4, nu=-4.0)
    assert (cfg.A, cfg.M) == (10000, 1000)  # 10000^(3/4) is exact
    assert cfg.dt == 1.0 / math.sqrt(10000.0)
    cfg = SplitConfig(a=100.0, nu=-4.0)
    assert (cfg.A, cfg.M) == (100, 32)  # ceil(31.62...)
    cfg = SplitConfig(a=10.7, nu=-5.0)
    assert (cfg.A, cfg.M) == (10, 6)  # ceil(5.623...)
    with pytest.raises(DomainError):
        SplitConfig(a=0.9, nu=-4.0)


def test_term_t_seeds():
    cfg = SplitConfig(a=50.0, nu=-4.5)
    want0 = 50.0 ** (-2.25) * math.gamma(4.5)
    assert math.isclose(term_T(0, cfg), want0, rel_tol=1e-12)
    want1 = want0 * 4.5 * (cfg.A / cfg.a)
    assert math.isclose(term_T(1, cfg), want1, rel_tol=1e-12)
    with pytest.raises(DomainError):
        term_T(-1, cfg)
    with pytest.raises(DomainError):
        term_T(cfg.A + 1, cfg)


def test_term_t_sum_reconstructs_direct_value():
    for a, nu in ((300.0, -4.5), (1000.0, -6.0)):
        cfg = SplitConfig(a=a, nu=nu)
        total = math.fsum(term_T(k, cfg) for k in range(cfg.A + 1))
        lhs = 2.0 ** (0.5 * nu) / math.gamma(-nu) * total
        rhs = (2.0 * a) ** (0.5 * nu) * charlier_direct(cfg.A, a, nu)
        assert math.isclose(lhs, rhs, rel_tol=1e-9), (a, nu)


def test_factor_p_values():
    assert factor_p(0, 500) == 1.0
    # log-space evaluation cancels two ~A log A terms, so the error
    # floor is lgamma(A+1)*eps, not eps
    assert math.isclose(factor_p(1, 500), 1.0, rel_tol=1e-11)
    A = 40
    want = math.exp(math.lgamma(A + 1.0) - A * math.log(A))
    assert math.isclose(factor_p(A, A), want, rel_tol=1e-12)
    # decreasing in k
    vals = [factor_p(k, 200) for k in range(0, 201, 20)]
    assert all(b < a for a, b in zip(vals, vals[1:]))


def test_factor_p_exponential_sandwich():
    # e^{-k^2/2A}(1 - k^3/A^2) <= p(k) <= e^{-k^2/2A}(1 + k/A) for k < A/2
    for A in (100, 1000, 20000):
        for k in range(1, A // 2, max(1, A // 40)):
            base = math.exp(-0.5 * k * k / A)
            p = factor_p(k, A)
            assert p <= base * (1.0 + k / A), (A, k)
            assert p >= base * (1.0 - k ** 3 / (A * A)), (A, k)


def test_factor_q_values():
    nu = -3.7
    assert math.isclose(factor_q(1, nu), math.gamma(1.0 - nu), rel_tol=1e-12)
    for k in (2, 10, 400):
        assert math.isclose(factor_q(k, -2.0), k + 1.0, rel_tol=1e-12)


def test_factor_q_power_law_with_true_constant():
    # q(k) k^{nu+1} = 1 + (nu(nu+1)/2)/k + O(1/k^2); the leading 1/k
    # coefficient plus margin 1 bounds the scaled deviation for k >= 100
    for nu in (-3.0, -4.5, -6.0):
        c_true = abs(nu * (nu + 1.0)) / 2.0
        for k in (100, 316, 1000, 10000):
            dev = abs(factor_q(k, nu) * k ** (nu + 1.0) - 1.0) * k
            assert dev <= c_true + 1.0, (nu, k, dev)


def test_f_nu_rules():
    assert f_nu(0.0, -3.0) == 0.0
    assert f_nu(0.0, -1.0) == 1.0
    with pytest.raises(DomainError):
        f_nu(0.0, -0.5)  # negative exponent pole
    with pytest.raises(DomainError):
        f_nu(-1.0, -3.0)
    assert math.isclose(f_nu(1.0, -2.0), math.exp(-0.5), rel_tol=1e-15)
    # argmax of t^2 e^{-t^2/2} sits at sqrt(2)
    ts = np.linspace(0.0, 4.0, 4001)
    vals = [f_nu(float(t), -3.0) for t in ts]
    assert abs(ts[int(np.argmax(vals))] - math.sqrt(2.0)) < 2e-3


def test_trapezoid_single_node():
    dt = 0.125
    chk = trapezoid_gamma_check(-3.0, 4, 4, dt)
    assert chk.riemann_sum == f_nu(4 * dt, -3.0) * dt


def test_trapezoid_closed_form_is_the_antiderivative():
    # -d/dt [2^{-nu/2-1} Gamma(-nu/2, t^2/2)] = f_nu(t), checked at t=1
    nu = -4.0
    s = -0.5 * nu
    h = 1e-5
    fd = -(2.0 ** (s - 1.0)) * (
        upper_incomplete_gamma(s, 0.5 * (1.0 + h) ** 2)
        - upper_incomplete_gamma(s, 0.5 * (1.0 - h) ** 2)
    ) / (2.0 * h)
    assert math.isclose(fd, f_nu(1.0, nu), rel_tol=1e-8)


def test_trapezoid_error_bound_and_halving():
    A = 10 ** 4
    dt = 1.0 / math.sqrt(A)
    chk = trapezoid_gamma_check(-3.0, 1, A, dt)
    assert chk.abs_err <= 5.0 * dt
    half = trapezoid_gamma_check(-3.0, 1, A, dt / 2.0)
    assert half.abs_err <= 0.5 * chk.abs_err


def test_trapezoid_validation():
    with pytest.raises(DomainError):
        trapezoid_gamma_check(-2.0, 1, 10, 0.1)
    with pytest.raises(DomainError):
        trapezoid_gamma_check(-3.0, 5, 4, 0.1)
    with pytest.raises(DomainError):
        trapezoid_gamma_check(-3.0, 1, 10, 0.0)


def test_head_tail_split_reconstruction():
    for a, nu in ((1000.0, -4.0), (250.5, -5.5)):
        rep = head_tail_split(SplitConfig(a=a, nu=nu))
        assert math.isclose(rep.y0_reconstructed, rep.y0_direct, rel_tol=1e-9), (a, nu)
        assert math.isclose(rep.h_nu_0, hermite_at_zero(nu), rel_tol=1e-13)
        # floor/ceiling disagree only off the integers
        if a == int(a):
            assert rep.y0_direct_ceiling is None
        else:
            assert rep.y0_direct_ceiling is not None


def test_head_tail_split_guard():
    with pytest.raises(DomainError):
        head_tail_split(SplitConfig(a=100.0, nu=-3.9))


def test_head_converges_to_hermite_and_tail_vanishes():
    nu = -4.0
    errs = []
    tails = []
    for a in (1e2, 1e3, 1e4):
        rep = head_tail_split(SplitConfig(a=a, nu=nu))
        errs.append(abs(rep.y0_reconstructed - rep.h_nu_0))
        tails.append(abs(rep.r_tail) * 2.0 ** (0.5 * nu) / math.gamma(-nu))
    assert errs[-1] < errs[0]
    # the tail is asymptotically negligible next to the total error
    assert all(t < e for t, e in zip(tails, errs))
    assert tails[-1] < 1e-10
