"""Command-line front end.

Subcommands:

* eval     -- one point: asymptotic estimate, optionally checked against the
              extended-precision series oracle;
* table    -- regenerate the six reference tables (oracle value, each
              applicable approximation, relative errors);
* sweep    -- CSV scan over a y-range at fixed (r, alpha);
* selftest -- the invariant battery (Wronskian, ODE residual, map residuals,
              realness, Airy overlap, table tolerances).

Exit codes: 0 ok, 1 selftest failure, 2 usage error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from dataclasses import dataclass

from .engine import METHODS, cor1_envelope, evaluate
from .errors import ConfigurationError, DomainError, NumericalError, ResourceError
from .precision import big_eval_context
from .scaled import ScaledComplex
from .zetamap import (
    DEFAULT_DELTA,
    Params,
    REGIME_MONOTONIC,
    classify_regime,
    zeta_for_y,
)

_DEFAULT_DIGITS = 60

# The six reference cases: (r, alpha, y, has cosine-form row).
TABLE_CASES = {
    1: (100.0, 0.1, 0.9999, True),
    2: (100.0, 0.1, 0.991, True),
    3: (100.0, 0.1, 0.993, True),
    4: (100.0, 0.1, 0.989, False),
    5: (100.0, 0.02, 0.9999, True),
    6: (100.0, 0.02, 0.9997, True),
}


@dataclass(frozen=True)
class RunConfig:
    command: str
    r: float = 0.0
    alpha: float = 0.0
    y: float = 0.0
    method: str = "auto"
    delta: float = DEFAULT_DELTA
    digits: int = _DEFAULT_DIGITS
    output: str = "text"


def _sci10(x: float) -> str:
    return f"{x:.9e}"


def _csv17(x: float) -> str:
    return f"{x:.17g}"


def _fmt_value(v: ScaledComplex) -> str:
    z = v.to_complex()
    sign = "+" if z.imag >= 0 else "-"
    return f"{_sci10(z.real)} {sign} {_sci10(abs(z.imag))}i"


def _default_digits() -> int:
    env = os.environ.get("HYPASYM_DIGITS")
    if env is None:
        return _DEFAULT_DIGITS
    try:
        return int(env)
    except ValueError:
        raise ConfigurationError(f"HYPASYM_DIGITS must be an integer, got {env!r}")


def _rel_error(approx: ScaledComplex, exact: ScaledComplex) -> float:
    diff = approx - exact
    if diff.re.is_zero() and diff.im.is_zero():
        return 0.0
    return math.exp(diff.abs().log_abs() - exact.abs().log_abs())


def cmd_eval(cfg: RunConfig, compare_oracle: bool, out) -> int:
    p = Params(cfg.r, cfg.alpha, cfg.y)
    p.check_regime_guard(cfg.delta)
    res = evaluate(p, method=cfg.method, delta=cfg.delta, digits=cfg.digits)
    print(f"r       = {cfg.r}", file=out)
    print(f"alpha   = {cfg.alpha}", file=out)
    print(f"y       = {cfg.y}", file=out)
    print(f"method  = {res.method}", file=out)
    print(f"regime  = {res.regime}", file=out)
    if res.zeta_point is not None:
        zp = res.zeta_point
        print(f"zeta    = {_sci10(zp.zeta)}", file=out)
        print(f"zeta_hat= {_sci10(zp.zeta_hat)}", file=out)
        print(f"a_value = {_sci10(zp.a_value)}", file=out)
        print(f"map_res = {_sci10(zp.residual)}", file=out)
    if res.value is not None:
        print(f"F2      = {_fmt_value(res.value)}", file=out)
        print(f"log10|F2| = {res.value.abs().log_abs() / math.log(10.0):.10f}", file=out)
    if res.envelope is not None:
        print(
            f"envelope log10 = {res.envelope.log_abs() / math.log(10.0):.10f}",
            file=out,
        )
    if compare_oracle:
        from .oracle import f2_oracle, scaled_from_big

        exact = scaled_from_big(f2_oracle(p, big_eval_context(cfg.digits)))
        print(f"oracle  = {_fmt_value(exact)}", file=out)
        if res.value is not None:
            print(f"rel_error = {_rel_error(res.value, exact):.9e}", file=out)
        elif res.envelope is not None:
            covered = exact.abs().log_abs() <= res.envelope.log_abs()
            print(f"envelope_covers_oracle = {covered}", file=out)
    return 0


def _table_rows(case: int, digits: int):
    from .oracle import f2_oracle, scaled_from_big

    r, alpha, y, has_cosine = TABLE_CASES[case]
    p = Params(r, alpha, y)
    exact = scaled_from_big(f2_oracle(p, big_eval_context(digits)))
    rows = [("F2", exact, None)]
    if has_cosine:
        v2 = evaluate(p, method="cor2").value
        rows.append(("cosine-form", v2, _rel_error(v2, exact)))
    v3 = evaluate(p, method="cor3").value
    rows.append(("airy-form", v3, _rel_error(v3, exact)))
    return p, rows


def cmd_table(cases, digits: int, output: str, out) -> int:
    for case in cases:
        p, rows = _table_rows(case, digits)
        if output == "csv":
            print("case,quantity,re,im,rel_error", file=out)
            for name, val, err in rows:
                z = val.to_complex()
                e = "" if err is None else _csv17(err)
                print(
                    f"{case},{name},{_csv17(z.real)},{_csv17(z.imag)},{e}",
                    file=out,
                )
        else:
            print(f"case {case}: r={p.r} alpha={p.alpha} y={p.y}", file=out)
            for name, val, err in rows:
                e = "" if err is None else f"  |rel err| = {err:.9f}"
                print(f"  {name:12s} {_fmt_value(val)}{e}", file=out)
        print("", file=out)
    return 0


def cmd_sweep(
    cfg: RunConfig, y_min: float, y_max: float, steps: int,
    with_envelope: bool, out,
) -> int:
    if not (0.0 < y_min < y_max < 1.0):
        raise DomainError(f"need 0 < y_min < y_max < 1, got [{y_min}, {y_max}]")
    if steps < 2:
        raise DomainError(f"need at least 2 steps, got {steps}")
    header = "y,regime,zeta,zeta_hat,log10_abs_f2,phase,method"
    if with_envelope:
        header += ",log10_envelope"
    print(header, file=out)
    ln10 = math.log(10.0)
    for k in range(steps):
        y = y_min + (y_max - y_min) * k / (steps - 1)
        p = Params(cfg.r, cfg.alpha, y)
        res = evaluate(p, method=cfg.method, delta=cfg.delta, digits=cfg.digits)
        zp = res.zeta_point if res.zeta_point is not None else zeta_for_y(p.alpha, y)
        row = [
            _csv17(y),
            res.regime,
            _csv17(zp.zeta),
            _csv17(zp.zeta_hat),
            _csv17(res.value.abs().log_abs() / ln10),
            _csv17(res.value.phase()),
            res.method,
        ]
        if with_envelope:
            env = ""
            if res.regime == REGIME_MONOTONIC:
                env = _csv17(cor1_envelope(p, cfg.delta).log_abs() / ln10)
            row.append(env)
        print(",".join(row), file=out)
    return 0


# -- selftest groups --------------------------------------------------------

def _check_wronskian() -> bool:
    from .bessel import bessel_quartet

    grid = [
        (0.5, 1.0), (0.5, 30.0), (2.0, 5.0), (5.0, 10.0), (10.0, 20.0),
        (20.0, 20.5), (20.0, 60.0), (50.0, 45.0), (50.0, 120.0),
        (100.0, 80.0), (100.0, 200.0), (200.0, 150.0),
    ]
    worst = 0.0
    for nu, x in grid:
        q = bessel_quartet(nu, x)
        lhs = q.k * q.itp - q.kp * q.it
        rhs_log = math.log(2.0 * math.pi) - math.pi * nu - math.log(x)
        rel = abs(math.expm1(lhs.log_abs() - rhs_log)) if lhs.sign > 0 else math.inf
        worst = max(worst, rel)
    return worst <= 1e-8


def _check_ode() -> bool:
    from .oracle import ode_residual

    ctx = big_eval_context(50)
    for r, alpha in ((5.0, 0.3), (10.0, 0.2)):
        for y0 in (0.2, 0.5, 0.8, 0.95):
            p = Params(r, alpha, y0)
            if ode_residual(p, y0, 1e-4, ctx) > 1e-6:
                return False
    return True


def _check_zeta_map() -> bool:
    import random

    rng = random.Random(12345)
    worst = 0.0
    for _ in range(500):
        alpha = rng.uniform(0.01, 0.99)
        y = rng.uniform(1e-6, 1.0 - 1e-6)
        zp = zeta_for_y(alpha, y)
        worst = max(worst, zp.residual)
        a_back = (2.0 * alpha / 3.0) * abs(zp.zeta_hat) ** 1.5
        if abs(a_back - zp.a_value) > 1e-12 * max(1.0, zp.a_value):
            return False
    return worst <= 1e-12


def _check_realness() -> bool:
    from .oracle import f2_oracle_detailed, y_transform

    ctx = big_eval_context(60)
    pts = [(r, a, y) for (r, a, y, _) in TABLE_CASES.values()] + [(5.0, 0.3, 0.5)]
    for r, alpha, y in pts:
        p = Params(r, alpha, y)
        val, _ = f2_oracle_detailed(p, ctx)
        Y = y_transform(p, val, ctx)
        if abs(float(Y.imag)) > 1e-8 * abs(float(Y.real)):
            return False
    return True


def _check_airy() -> bool:
    from .airy import airy_ai_scaled

    ai0, _ = airy_ai_scaled(0.0)
    ref = 0.3550280538878172  # 3^(-2/3)/Gamma(2/3)
    return abs(ai0.to_float() - ref) <= 1e-12


def _check_tables() -> bool:
    for case in (2, 3, 4, 6):  # the sub-second cases
        p, rows = _table_rows(case, 60)
        for name, val, err in rows:
            if err is not None and err > 0.5:
                return False
    return True


SELFTEST_GROUPS = [
    ("wronskian", _check_wronskian),
    ("ode-residual", _check_ode),
    ("zeta-map", _check_zeta_map),
    ("realness", _check_realness),
    ("airy", _check_airy),
    ("tables", _check_tables),
]


def cmd_selftest(out) -> int:
    all_ok = True
    for name, fn in SELFTEST_GROUPS:
        try:
            ok = fn()
        except Exception as exc:  # a crash in a group is a failure, not an abort
            print(f"{name}: FAIL ({exc})", file=out)
            all_ok = False
            continue
        print(f"{name}: {'PASS' if ok else 'FAIL'}", file=out)
        all_ok = all_ok and ok
    return 0 if all_ok else 1


# -- argument plumbing ------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="hypasym",
        description="Uniform asymptotics of a prefactored Gauss hypergeometric function.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(sp, need_point: bool):
        if need_point:
            sp.add_argument("--r", type=float, required=True)
            sp.add_argument("--alpha", type=float, required=True)
        sp.add_argument("--delta", type=float, default=DEFAULT_DELTA)
        sp.add_argument("--digits", type=int, default=None)
        sp.add_argument("--out", type=str, default=None)

    ev = sub.add_parser("eval", help="evaluate one point")
    common(ev, need_point=True)
    ev.add_argument("--y", type=float, required=True)
    ev.add_argument("--method", choices=METHODS, default="auto")
    ev.add_argument("--compare-oracle", action="store_true")

    tb = sub.add_parser("table", help="regenerate the reference tables")
    tb.add_argument("--case", type=int, choices=sorted(TABLE_CASES), default=None)
    tb.add_argument("--digits", type=int, default=None)
    tb.add_argument("--output", choices=("text", "csv"), default="text")
    tb.add_argument("--out", type=str, default=None)

    sw = sub.add_parser("sweep", help="CSV scan over a y-range")
    common(sw, need_point=True)
    sw.add_argument("--y-min", type=float, required=True)
    sw.add_argument("--y-max", type=float, required=True)
    sw.add_argument("--steps", type=int, default=101)
    sw.add_argument("--method", choices=METHODS, default="auto")
    sw.add_argument("--with-envelope", action="store_true")

    st = sub.add_parser("selftest", help="run the invariant battery")
    st.add_argument("--out", type=str, default=None)
    return top


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    close_out = False
    try:
        digits = getattr(args, "digits", None)
        if digits is None:
            digits = _default_digits()
        if getattr(args, "out", None):
            out = open(args.out, "w")
            close_out = True
        if args.command == "eval":
            cfg = RunConfig(
                "eval", args.r, args.alpha, args.y,
                method=args.method, delta=args.delta, digits=digits,
            )
            return cmd_eval(cfg, args.compare_oracle, out)
        if args.command == "table":
            cases = [args.case] if args.case else sorted(TABLE_CASES)
            return cmd_table(cases, digits, args.output, out)
        if args.command == "sweep":
            cfg = RunConfig(
                "sweep", args.r, args.alpha,
                method=args.method, delta=args.delta, digits=digits,
            )
            return cmd_sweep(
                cfg, args.y_min, args.y_max, args.steps, args.with_envelope, out
            )
        return cmd_selftest(out)
    except (DomainError, ConfigurationError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (NumericalError, ResourceError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    finally:
        if close_out:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
