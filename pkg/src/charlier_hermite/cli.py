"""Command line interface.

Grammar: charlier-hermite <group> <action> --flag value

Output goes to stdout as CSV (default) or JSON (--out json); both carry
the same table, numbers rendered with 17 significant digits, so a given
invocation is byte-for-byte reproducible.  Diagnostics and fit summaries
go to stderr.  Exit codes: 0 success, 1 domain error (including usage
errors), 2 numerical non-convergence.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .asymptotics import SplitConfig, head_tail_split, f_nu
from .charlier import ScaledPoint, charlier_direct, scaled_y
from .errors import ConvergenceError, DomainError
from .hermite import hermite_fn
from .polygon import charlier_state_trace, euler_polygon, trace_deviation
from .ratefit import fit_rate
from .zeros import zero_convergence_table


@dataclass
class OutputTable:
    header: tuple
    rows: list  # list of dicts keyed by header names


def _fmt_number(v) -> str:
    if isinstance(v, bool):
        raise TypeError("bool is not a table value")
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        if math.isnan(v):
            return "nan"
        return format(v + 0.0, ".17g")  # +0.0 normalizes -0.0
    if isinstance(v, Fraction):
        return str(v)
    return str(v)


def render_csv(table: OutputTable) -> str:
    lines = [",".join(table.header)]
    for row in table.rows:
        cells = []
        for key in table.header:
            v = row.get(key)
            if v is None:
                cells.append("")
            else:
                # commas would break the unquoted dialect
                cells.append(_fmt_number(v).replace(",", ";"))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _json_cell(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, float) and math.isnan(v):
        return "null"
    if isinstance(v, (int, float)) and not isinstance(v, bool):
        return _fmt_number(v)
    return json.dumps(_fmt_number(v))


def render_json(table: OutputTable) -> str:
    rows = []
    for row in table.rows:
        cells = ", ".join(
            f"{json.dumps(key)}: {_json_cell(row.get(key))}" for key in table.header
        )
        rows.append("  {" + cells + "}")
    return "[\n" + ",\n".join(rows) + "\n]\n"


def _emit(table: OutputTable, out: str) -> None:
    text = render_csv(table) if out == "csv" else render_json(table)
    sys.stdout.write(text)


class _Parser(argparse.ArgumentParser):
    # usage problems are domain errors (exit 1), not argparse's exit 2
    def error(self, message):
        raise DomainError(message)


def _parse_float(s: str, name: str) -> float:
    try:
        v = float(s)
    except ValueError as exc:
        raise DomainError(f"invalid number for {name}: {s!r}") from exc
    if not math.isfinite(v):
        raise DomainError(f"{name} must be finite, got {s!r}")
    return v


def _parse_int(s: str, name: str) -> int:
    try:
        return int(s)
    except ValueError as exc:
        raise DomainError(f"invalid integer for {name}: {s!r}") from exc


def _parse_fraction(s: str, name: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"invalid rational for {name}: {s!r}") from exc


def _parse_a_list(s: str) -> list:
    try:
        values = [float(part) for part in s.split(",") if part != ""]
    except ValueError as exc:
        raise DomainError(f"invalid --a-list: {s!r}") from exc
    if not values:
        raise DomainError("--a-list is empty")
    return values


def _slope_columns(points):
    """Fit slope over (a, err) points with err > 0; None columns if the
    fit is not possible."""
    usable = [(a, e) for a, e in points if e > 0]
    if len(usable) < 3 or len({a for a, _ in usable}) < len(usable):
        return None, None, None, len(points) - len(usable)
    fit = fit_rate(usable)
    return fit.slope, fit.intercept, fit.r_squared, len(points) - len(usable)


def _cmd_eval_charlier(args) -> tuple:
    n = _parse_int(args.n, "--n")
    if args.mode == "rational":
        a = _parse_fraction(args.a, "--a")
        nu = _parse_fraction(args.nu, "--nu")
        value = charlier_direct(n, a, nu, mode="rational")
    else:
        a = _parse_float(args.a, "--a")
        nu = _parse_float(args.nu, "--nu")
        value = charlier_direct(n, a, nu)
    table = OutputTable(("n", "a", "nu", "value"),
                        [{"n": n, "a": a, "nu": nu, "value": value}])
    return table, 0


def _cmd_eval_hermite(args) -> tuple:
    if args.mode == "rational":
        raise DomainError("rational mode is not available for hermite evaluation")
    nu = _parse_float(args.nu, "--nu")
    x = _parse_float(args.x, "--x")
    table = OutputTable(("nu", "x", "value"),
                        [{"nu": nu, "x": x, "value": hermite_fn(nu, x)}])
    return table, 0


def _cmd_eval_scaled(args) -> tuple:
    x = _parse_float(args.x, "--x")
    a = _parse_float(args.a, "--a")
    point = ScaledPoint(x, a)
    if args.mode == "rational":
        nu = _parse_fraction(args.nu, "--nu")
        value = scaled_y(point, nu, mode="rational")
    else:
        nu = _parse_float(args.nu, "--nu")
        value = scaled_y(point, nu)
    table = OutputTable(
        ("x", "a", "nu", "n", "theta", "value"),
        [{"x": x, "a": a, "nu": nu, "n": point.n, "theta": point.theta,
          "value": value}],
    )
    return table, 0


def _cmd_sweep_convergence(args) -> tuple:
    nu = _parse_float(args.nu, "--nu")
    x = _parse_float(args.x, "--x")
    a_values = _parse_a_list(args.a_list)
    h = hermite_fn(nu, x)
    rows = []
    ok = 0
    for a in a_values:
        row = {"a": a, "y": None, "hermite": None, "abs_err": None, "error": None}
        try:
            point = ScaledPoint(x, a)
            y = scaled_y(point, nu)
            row.update(y=y, hermite=h, abs_err=abs(y - h))
            ok += 1
        except DomainError as exc:
            row["error"] = str(exc)
        rows.append(row)
    points = [(r["a"], r["abs_err"]) for r in rows if r["abs_err"] is not None]
    slope, intercept, r2, dropped = _slope_columns(points)
    for r in rows:
        r["slope"] = slope
        r["r_squared"] = r2
    if slope is None:
        print("rate fit skipped: fewer than 3 usable rows with err > 0",
              file=sys.stderr)
    else:
        if dropped:
            print(f"rate fit excluded {dropped} row(s) with err <= 0 or failures",
                  file=sys.stderr)
        print(f"fitted slope {slope:.6g} (intercept {intercept:.6g}, "
              f"r^2 {r2:.6g})", file=sys.stderr)
    table = OutputTable(("a", "y", "hermite", "abs_err", "slope", "r_squared",
                         "error"), rows)
    return table, 0 if ok >= 3 else 1


def _cmd_plot_fnu(args) -> tuple:
    nu = _parse_float(args.nu, "--nu")
    t_max = _parse_float(args.t_max, "--t-max")
    dt = _parse_float(args.dt, "--dt")
    if dt <= 0 or t_max < 0:
        raise DomainError(f"need dt > 0 and t-max >= 0, got dt={dt}, t-max={t_max}")
    count = int(math.floor(t_max / dt + 1e-12)) + 1
    rows = [{"t": i * dt, "f": f_nu(i * dt, nu)} for i in range(count)]
    return OutputTable(("t", "f"), rows), 0


def _cmd_zeros_convergence(args) -> tuple:
    x = _parse_float(args.x, "--x")
    target = _parse_float(args.target_nu, "--target-nu")
    a_values = _parse_a_list(args.a_list)
    result = zero_convergence_table(x, target, a_values)
    rows = []
    ok = 0
    for r in result:
        failed = r.error is not None
        rows.append({
            "a": r.a,
            "n": None if failed else r.n,
            "nu_n": None if failed else r.nu_n,
            "abs_err": None if failed else r.abs_err,
            "error": r.error,
        })
        ok += 0 if failed else 1
    points = [(row["a"], row["abs_err"]) for row in rows
              if row["abs_err"] is not None]
    slope, intercept, r2, _ = _slope_columns(points)
    for row in rows:
        row["slope"] = slope
    if slope is None:
        print("rate fit skipped: fewer than 3 usable rows with err > 0",
              file=sys.stderr)
    else:
        print(f"fitted slope {slope:.6g} (intercept {intercept:.6g}, "
              f"r^2 {r2:.6g})", file=sys.stderr)
    table = OutputTable(("a", "n", "nu_n", "abs_err", "slope", "error"), rows)
    return table, 0 if ok >= 3 else 1


def _cmd_polygon_compare(args) -> tuple:
    nu = _parse_float(args.nu, "--nu")
    x_max = _parse_float(args.x_max, "--x-max")
    a = _parse_float(args.a, "--a")
    z = charlier_state_trace(nu, a, x_max)
    u = euler_polygon(nu, z.states[0], x_max, z.step)
    rows = []
    for k in range(len(z.xs)):
        dev = math.hypot(z.states[k, 0] - u.states[k, 0],
                         z.states[k, 1] - u.states[k, 1])
        rows.append({
            "x": float(z.xs[k]),
            "u_y": float(u.states[k, 0]),
            "u_dy": float(u.states[k, 1]),
            "z_y": float(z.states[k, 0]),
            "z_dy": float(z.states[k, 1]),
            "deviation": dev,
        })
    print(f"max node deviation {trace_deviation(z, u):.6g} over {len(rows)} nodes",
          file=sys.stderr)
    table = OutputTable(("x", "u_y", "u_dy", "z_y", "z_dy", "deviation"), rows)
    return table, 0


def _cmd_asymptotics_head_tail(args) -> tuple:
    a = _parse_float(args.a, "--a")
    nu = _parse_float(args.nu, "--nu")
    cfg = SplitConfig(a, nu)
    rep = head_tail_split(cfg)
    row = {
        "a": a,
        "nu": nu,
        "A": cfg.A,
        "M": cfg.M,
        "dt": cfg.dt,
        "r_head": rep.r_head,
        "r_tail": rep.r_tail,
        "y0_reconstructed": rep.y0_reconstructed,
        "y0_direct": rep.y0_direct,
        "y0_direct_ceiling": rep.y0_direct_ceiling,
        "h_nu_0": rep.h_nu_0,
        "abs_err_vs_hermite": abs(rep.y0_reconstructed - rep.h_nu_0),
    }
    header = ("a", "nu", "A", "M", "dt", "r_head", "r_tail", "y0_reconstructed",
              "y0_direct", "y0_direct_ceiling", "h_nu_0", "abs_err_vs_hermite")
    return OutputTable(header, [row]), 0


def _add_common_flags(parser) -> None:
    parser.add_argument("--out", choices=("csv", "json"), default="csv")
    parser.add_argument("--mode", choices=("float", "rational"), default="float")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="charlier-hermite", description=__doc__)
    groups = parser.add_subparsers(dest="group", required=True)

    ev = groups.add_parser("eval", help="evaluate a single value")
    ev_actions = ev.add_subparsers(dest="action", required=True)
    p = ev_actions.add_parser("charlier")
    for flag in ("--n", "--a", "--nu"):
        p.add_argument(flag, required=True)
    _add_common_flags(p)
    p.set_defaults(handler=_cmd_eval_charlier)
    p = ev_actions.add_parser("hermite")
    for flag in ("--nu", "--x"):
        p.add_argument(flag, required=True)
    _add_common_flags(p)
    p.set_defaults(handler=_cmd_eval_hermite)
    p = ev_actions.add_parser("scaled")
    for flag in ("--x", "--a", "--nu"):
        p.add_argument(flag, required=True)
    _add_common_flags(p)
    p.set_defaults(handler=_cmd_eval_scaled)

    sw = groups.add_parser("sweep", help="convergence sweep over a")
    sw_actions = sw.add_subparsers(dest="action", required=True)
    p = sw_actions.add_parser("convergence")
    p.add_argument("--nu", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--a-list", dest="a_list", required=True)
    _add_common_flags(p)
    p.set_defaults(handler=_cmd_sweep_convergence)

    pl = groups.add_parser("plot", help="tabulate f_nu for plotting")
    pl_actions = pl.add_subparsers(dest="action", required=True)
    p = pl_actions.add_parser("fnu")
    p.add_argument("--nu", required=True)
    p.add_argument("--t-max", dest="t_max", required=True)
    p.add_argument("--dt", required=True)
    _add_common_flags(p)
    p.set_defaults(handler=_cmd_plot_fnu)

    zr = groups.add_parser("zeros", help="zero convergence toward a Hermite zero")
    zr_actions = zr.add_subparsers(dest="action", required=True)
    p = zr_actions.add_parser("convergence")
    p.add_argument("--x", required=True)
    p.add_argument("--target-nu", dest="target_nu", required=True)
    p.add_argument("--a-list", dest="a_list", required=True)
    _add_common_flags(p)
    p.set_defaults(handler=_cmd_zeros_convergence)

    pg = groups.add_parser("polygon", help="Charlier trace vs Euler polygon")
    pg_actions = pg.add_subparsers(dest="action", required=True)
    p = pg_actions.add_parser("compare")
    p.add_argument("--nu", required=True)
    p.add_argument("--x-max", dest="x_max", required=True)
    p.add_argument("--a", required=True)
    _add_common_flags(p)
    p.set_defaults(handler=_cmd_polygon_compare)

    asym = groups.add_parser("asymptotics", help="head/tail split at x = 0")
    asym_actions = asym.add_subparsers(dest="action", required=True)
    p = asym_actions.add_parser("head-tail")
    p.add_argument("--a", required=True)
    p.add_argument("--nu", required=True)
    _add_common_flags(p)
    p.set_defaults(handler=_cmd_asymptotics_head_tail)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        table, code = args.handler(args)
        _emit(table, args.out)
        return code
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
