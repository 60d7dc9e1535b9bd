"""Acceptance gate: the eight verification criteria, one test each.

Every test prints a single line

    criterion N: PASS (...) / criterion N: FAIL (...)

before asserting, so a full run reports the verdict for all criteria
(run with -s to see the lines for passing tests too).  Three criteria
fail for reasons intrinsic to the quantities they measure; the
assertion messages carry the analysis, and test_uniform_error_rate
below shows the convergence order that criterion 1 probes does hold in
its uniform form.
"""

import math
from fractions import Fraction

import numpy as np
import pytest

from charlier_hermite import (
    DomainError,
    ScaledPoint,
    SplitConfig,
    admissible_sharpness_pairs,
    charlier_backward_step,
    charlier_direct,
    charlier_order_shift,
    euler_polygon,
    charlier_state_trace,
    factor_q,
    fit_rate,
    head_tail_split,
    hermite_derivative,
    hermite_fn,
    reciprocal_gamma,
    scaled_y,
    sharpness_check,
    trace_deviation,
    trapezoid_gamma_check,
    zero_convergence_table,
)

A_SWEEP = (1e2, 1e3, 1e4, 1e5)


def _line(n: int, ok: bool, detail: str) -> str:
    msg = f"criterion {n}: {'PASS' if ok else 'FAIL'} ({detail})"
    print(msg)
    return msg


def _pointwise_slope(nu: float, x: float) -> float:
    h = hermite_fn(nu, x)
    pts = [(a, abs(scaled_y(ScaledPoint(x=x, a=a), nu) - h)) for a in A_SWEEP]
    return fit_rate(pts).slope


def test_criterion_1_pointwise_rate():
    pairs = ((-1.5, 0.0), (0.5, 0.5), (1.5, 0.7), (3.7, 1.0))
    slopes = {pair: _pointwise_slope(*pair) for pair in pairs}
    bad = {p: s for p, s in slopes.items() if not -0.6 <= s <= -0.4}
    detail = ", ".join(f"({nu}, {x}) slope {s:.4f}"
                       for (nu, x), s in slopes.items())
    msg = _line(1, not bad, detail)
    assert not bad, (
        msg + "; at (0.5, 0.5) the ceiling offset theta(a) swings through "
        "[0, 1) across this a ladder and modulates the leading error term, "
        "so a 4-point single-x fit lands above the band; the x-uniform "
        "error (test_uniform_error_rate) does decay at the -1/2 order"
    )


def test_uniform_error_rate():
    # sup over an x grid removes the theta oscillation seen at fixed x
    xs = np.linspace(0.0, 1.0, 21)
    for nu in (-1.5, 0.5, 1.5, 3.7):
        pts = []
        for a in A_SWEEP:
            sup = max(abs(scaled_y(ScaledPoint(x=float(x), a=a), nu)
                          - hermite_fn(nu, float(x))) for x in xs)
            pts.append((a, sup))
        slope = fit_rate(pts).slope
        assert -0.6 <= slope <= -0.4, (nu, slope)


def test_criterion_2_sharpness_exact():
    results = [sharpness_check(x, a) for x, a in admissible_sharpness_pairs()]
    equal = sum(r.equal for r in results)
    ok = equal == len(results)
    msg = _line(2, ok, f"{equal}/{len(results)} admissible pairs exactly equal")
    assert ok, msg


def test_criterion_3_head_tail_rate():
    details = []
    ok = True
    for nu in (-4.0, -5.5):
        scale = 2.0 ** (nu / 2.0) * reciprocal_gamma(-nu)
        err_pts, tail_pts = [], []
        for a in A_SWEEP:
            rep = head_tail_split(SplitConfig(a, nu))
            err_pts.append((a, abs(rep.y0_reconstructed - rep.h_nu_0)))
            tail_pts.append((a, abs(scale * rep.r_tail)))
        s_err = fit_rate(err_pts).slope
        s_tail = fit_rate(tail_pts).slope
        ok = ok and -0.6 <= s_err <= -0.4 and s_tail <= -0.4
        details.append(f"nu={nu:g}: err slope {s_err:.4f}, "
                       f"tail slope {s_tail:.1f}")
    msg = _line(3, ok, "; ".join(details))
    assert ok, msg


def test_criterion_4_gamma_ratio_constant():
    worst = {}
    for nu in (-3.0, -4.5, -6.0):
        worst[nu] = max(abs(factor_q(k, nu) * k ** (nu + 1.0) - 1.0) * k
                        for k in range(100, 10001))
    overall = max(worst.values())
    ok = overall <= 10.0
    detail = ", ".join(f"nu={nu:g}: {w:.4f}" for nu, w in worst.items())
    msg = _line(4, ok, detail + f"; gate 10, max {overall:.4f}")
    assert ok, (
        msg + "; |q(k) k^(nu+1) - 1| k converges to |nu(nu+1)|/2, which is "
        "15 at nu = -6, so the constant exceeds 10 for every k range"
    )


def test_criterion_5_trapezoid_identity():
    dt = 1e-2  # 1/sqrt(A) for A = 1e4
    chk = trapezoid_gamma_check(-3.0, 1, 10**4, dt)
    half = trapezoid_gamma_check(-3.0, 1, 10**4, dt / 2.0)
    ratio = half.abs_err / chk.abs_err
    ok = chk.abs_err <= 5.0 * dt and ratio <= 0.5
    msg = _line(5, ok, f"abs err {chk.abs_err:.4e} vs gate {5.0 * dt:g}; "
                       f"halving ratio {ratio:.4f}")
    assert ok, msg


def test_criterion_6_polygon_agreement():
    slopes = {}
    for nu in (0.5, 2.0):
        pts = []
        for a in A_SWEEP:
            z = charlier_state_trace(nu, a, 1.0)
            u = euler_polygon(nu, z.states[0], 1.0, z.step)
            pts.append((a, trace_deviation(z, u)))
        slopes[nu] = fit_rate(pts).slope
    # Euler against the exact nu = 2 solution 4x^2 - 2 at the final node
    errs = []
    for dx in (0.02, 0.01, 0.005):
        u = euler_polygon(2.0, (-2.0, 0.0), 1.0, dx)
        errs.append(abs(u.states[-1, 0] - (4.0 * u.xs[-1] ** 2 - 2.0)))
    ratios = [errs[i + 1] / errs[i] for i in range(len(errs) - 1)]
    ok = (all(-0.65 <= s <= -0.35 for s in slopes.values())
          and all(r <= 0.5 for r in ratios))
    detail = ", ".join(f"nu={nu:g} slope {s:.4f}" for nu, s in slopes.items())
    msg = _line(6, ok, detail + "; halving ratios "
                + ", ".join(f"{r:.4f}" for r in ratios))
    assert ok, msg


def test_criterion_7_zero_convergence():
    notes = []
    ok = True
    for target in (1.0, 3.0):
        rows = zero_convergence_table(0.0, target, (100.0, 400.0, 1600.0, 6400.0))
        pts = [(r.a, r.abs_err) for r in rows if r.error is None]
        try:
            slope = fit_rate(pts).slope
            in_band = -0.65 <= slope <= -0.35
            ok = ok and in_band
            notes.append(f"target {target:g}: slope {slope:.4f}")
        except DomainError:
            ok = False
            errs = ", ".join(f"{e:.1e}" for _, e in pts)
            notes.append(f"target {target:g}: no fit, errors [{errs}]")
    msg = _line(7, ok, "; ".join(notes))
    assert ok, (
        msg + "; at target 1 the duality c_n^a(m) = c_m^a(n) makes "
        "c_a^a(1) = 1 - a/a = 0 exactly for every integer a, so the "
        "located zero coincides with the target and leaves no decaying "
        "error to fit"
    )


def test_criterion_8_identity_suites():
    rng = np.random.default_rng(101)
    worst = 0.0
    for _ in range(500):
        n = int(rng.integers(1, 25))
        a = float(rng.uniform(0.5, 20.0))
        nu = float(rng.uniform(-8.0, 8.0))
        if abs(nu) < 0.1:
            nu += 0.2
        cm, c0, cp = (charlier_direct(m, a, nu) for m in (n - 1, n, n + 1))
        r_deg = a * cp - (n + a - nu) * c0 + n * cm
        s_deg = max(1.0, abs(a * cp), abs((n + a - nu) * c0), abs(n * cm))
        up = charlier_direct(n, a, nu + 1.0)
        dn = charlier_direct(n, a, nu - 1.0)
        r_ord = charlier_order_shift(n, a, nu, c0, dn) - up
        s_ord = max(1.0, abs(up), abs(c0), abs(dn))
        back = charlier_backward_step(n, a, nu, cm, c0)
        r_back = back - charlier_direct(n - 1, a, nu - 1.0)
        s_back = max(1.0, (a / abs(nu)) * (abs(cm) + abs(c0)))
        worst = max(worst, abs(r_deg) / s_deg, abs(r_ord) / s_ord,
                    abs(r_back) / s_back)
    recurrences_ok = worst <= 1e-10

    rng = np.random.default_rng(103)
    worst_h = 0.0
    for _ in range(300):
        nu = float(rng.uniform(-4.0, 4.0))
        x = float(rng.uniform(-2.0, 2.0))
        hm, h0, hp = (hermite_fn(nu + d, x) for d in (-1.0, 0.0, 1.0))
        r_rec = hp - 2.0 * x * h0 + 2.0 * nu * hm
        s_rec = max(1.0, abs(hp), abs(2.0 * x * h0), abs(2.0 * nu * hm))
        ypp = 2.0 * nu * hermite_derivative(nu - 1.0, x)
        r_ode = ypp - 2.0 * x * hermite_derivative(nu, x) + 2.0 * nu * h0
        s_ode = max(1.0, abs(ypp), abs(2.0 * nu * h0))
        worst_h = max(worst_h, abs(r_rec) / s_rec, abs(r_ode) / s_ode)
    hermite_ok = worst_h <= 1e-9

    duality_bad = 0
    for a in (1, 2, Fraction(7, 2)):
        for m in range(21):
            for n in range(21):
                lhs = charlier_direct(n, a, m, mode="rational")
                rhs = charlier_direct(m, a, n, mode="rational")
                duality_bad += lhs != rhs
    duality_ok = duality_bad == 0

    # integer order: parity and the classical polynomials up to degree 8
    coeffs = [[1], [0, 2]]
    for k in range(1, 8):
        prev, cur = coeffs[k - 1], coeffs[k]
        nxt = [0.0] * (k + 2)
        for i, c in enumerate(cur):
            nxt[i + 1] += 2.0 * c
        for i, c in enumerate(prev):
            nxt[i] -= 2.0 * k * c
        coeffs.append(nxt)
    poly_ok = True
    for deg, cs in enumerate(coeffs):
        for x in (-1.7, -0.4, 0.0, 0.8, 2.3):
            ref = sum(c * x ** i for i, c in enumerate(cs))
            val = hermite_fn(float(deg), x)
            mirrored = (-1.0) ** deg * hermite_fn(float(deg), -x)
            scale = max(1.0, abs(ref))
            poly_ok = poly_ok and abs(val - ref) <= 1e-10 * scale
            poly_ok = poly_ok and abs(val - mirrored) <= 1e-10 * scale

    ok = recurrences_ok and hermite_ok and duality_ok and poly_ok
    msg = _line(8, ok, f"recurrence residual {worst:.2e} (gate 1e-10); "
                       f"hermite residual {worst_h:.2e} (gate 1e-9); "
                       f"duality mismatches {duality_bad}; "
                       f"integer-order match {'yes' if poly_ok else 'no'}")
    assert ok, msg
