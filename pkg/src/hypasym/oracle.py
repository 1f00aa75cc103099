"""Ground truth: extended-precision brute-force evaluation.

The Gauss series is summed with the running-ratio recurrence

    term_{n+1} = term_n (a+n)(b+n) / ((c+n)(n+1)) y,

which never forms a Pochhammer symbol or a factorial.  The stopping rule is
rigorous: once every remaining term ratio is bounded by rho < 1, the tail is
at most |term| rho/(1-rho), and summation stops when that bound drops below
10^-target of the current partial sum.  A cancellation guard tracks the
largest partial-sum magnitude; if the working precision cannot cover
(cancellation digits + target + 5), the precision is raised and the sum
restarted.

At table scale (y = 0.9999, r = 100) the series needs a few 1e5 terms and
carries ~13 digits of cancellation, comfortably inside the 60-digit default.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import gmpy2

from .errors import DomainError, ResourceError
from .precision import BigComplex, BigReal, PrecisionContext
from .scaled import ScaledComplex, ScaledReal
from .zetamap import Params

_MAX_TERMS = 5_000_000
_MAX_RESTARTS = 6
_CHECK_EVERY = 64


@dataclass(frozen=True)
class OracleValue:
    value: BigComplex
    terms_used: int
    tail_bound: BigReal
    cancellation_digits: float


def _mag(z) -> BigReal:
    # |Re| + |Im|: within sqrt(2) of |z|, cheap enough per term
    return abs(z.real) + abs(z.imag)


def _sum_series(a, b, c, y, target: int):
    """One summation pass at the currently active gmpy2 precision."""
    t = gmpy2.mpc(1)
    s = gmpy2.mpc(0)
    max_mag = gmpy2.mpfr(0)
    abs_a, abs_b, abs_c = abs(a), abs(b), abs(c)
    warmup = int(2.0 * float(abs_a + abs_b + abs_c)) + 8
    abs_y = abs(y)
    tol = gmpy2.mpfr(10) ** (-target)
    n = 0
    while n < _MAX_TERMS:
        s += t
        m = _mag(s)
        if m > max_mag:
            max_mag = m
        if n > warmup and n % _CHECK_EVERY == 0:
            rho = abs_y * (1 + abs_a / n) * (1 + abs_b / n) / (1 - (abs_c + 1) / n)
            if rho < 1:
                tail = _mag(t) * rho / (1 - rho)
                if tail <= tol * m:
                    return s, n + 1, tail, max_mag
        t = t * (a + n) * (b + n) / ((c + n) * (n + 1)) * y
        if t == 0:  # y = 0 or a parameter hit a negative integer: sum is exact
            return s, n + 1, gmpy2.mpfr(0), max_mag
        n += 1
    raise ResourceError(
        f"series did not satisfy its tail bound within {_MAX_TERMS} terms "
        f"(argument too close to 1 for the precision cap?)"
    )


def gauss_2f1_series(a, b, c, y, ctx: PrecisionContext, target: int | None = None) -> OracleValue:
    """2F1(a, b; c; y) by direct summation; |y| < 1.

    a, b, c may be python complex or BigComplex; y real.  `target` is the
    requested relative accuracy in digits (default: ctx.digits - 10).
    """
    if abs(y) >= 1:
        raise DomainError(f"series needs |y| < 1, got y={y}")
    cc = complex(c) if not isinstance(c, BigComplex) else complex(float(c.real), float(c.imag))
    if cc.imag == 0.0 and cc.real <= 0.0 and cc.real == int(cc.real):
        raise DomainError(f"c must not be a non-positive integer, got c={c}")
    if target is None:
        target = ctx.digits - 10
    working = max(ctx.digits, target + 15)
    for _ in range(_MAX_RESTARTS):
        wctx = ctx.with_digits(working)
        with wctx.active():
            am, bm, cm = (_to_big(v) for v in (a, b, c))
            ym = gmpy2.mpfr(y)
            s, n_used, tail, max_mag = _sum_series(am, bm, cm, ym, target)
            smag = _mag(s)
            cancel = float(gmpy2.log10(max_mag / smag)) if smag > 0 else float("inf")
            if cancel + target + 5 <= working:
                return OracleValue(s, n_used, gmpy2.mpfr(tail), max(cancel, 0.0))
        working = int(math.ceil(target + cancel + 10))
    raise ResourceError(
        f"cancellation ({cancel:.1f} digits) kept exceeding the precision "
        f"budget after {_MAX_RESTARTS} restarts"
    )


def _to_big(v):
    if isinstance(v, (BigComplex,)):
        return +v  # round into the active context
    v = complex(v)
    return gmpy2.mpc(gmpy2.mpfr(v.real), gmpy2.mpfr(v.imag))


def _hyp_params(p: Params, ctx: PrecisionContext):
    """a = 1/4 + i r(1-alpha), b = 1/4 - i r(1+alpha), c = 1/2, exactly.

    Built inside the active context from the double inputs, so every
    precision level sees bit-identical parameters.
    """
    r = gmpy2.mpfr(p.r)
    al = gmpy2.mpfr(p.alpha)
    quarter = gmpy2.mpfr(1) / 4
    a = gmpy2.mpc(quarter, r * (1 - al))
    b = gmpy2.mpc(quarter, -r * (1 + al))
    c = gmpy2.mpc(gmpy2.mpfr(1) / 2)
    return a, b, c


def _log_prefactor(p: Params, ctx: PrecisionContext) -> BigComplex:
    """log of Gamma(1/4+ir(1-a)) Gamma(1/4-ir(1+a)) / Gamma(1/2)."""
    mc = ctx.mpmath()
    # imaginary parts formed in high precision so they match _hyp_params bit for bit
    im1 = mc.mpf(p.r) * (1 - mc.mpf(p.alpha))
    im2 = -mc.mpf(p.r) * (1 + mc.mpf(p.alpha))
    lg1 = _loggamma_big(ctx, mc, im1)
    lg2 = _loggamma_big(ctx, mc, im2)
    with ctx.active():
        half_log_pi = gmpy2.log(gmpy2.const_pi()) / 2
        return lg1 + lg2 - half_log_pi


def _loggamma_big(ctx: PrecisionContext, mc, im) -> BigComplex:
    v = mc.loggamma(mc.mpc(0.25, im))
    d = ctx.digits + 8
    return gmpy2.mpc(gmpy2.mpfr(mc.nstr(v.real, d)), gmpy2.mpfr(mc.nstr(v.imag, d)))


def f2_oracle_detailed(p: Params, ctx: PrecisionContext) -> tuple[BigComplex, OracleValue]:
    with ctx.active():
        a, b, c = _hyp_params(p, ctx)
    series = gauss_2f1_series(a, b, c, p.y, ctx)
    logpref = _log_prefactor(p, ctx)
    with ctx.active():
        value = series.value * gmpy2.exp(logpref)
    return value, series


def f2_oracle(p: Params, ctx: PrecisionContext) -> BigComplex:
    """Prefactored hypergeometric value, fully in extended precision."""
    return f2_oracle_detailed(p, ctx)[0]


def two_f1_oracle(p: Params, ctx: PrecisionContext) -> BigComplex:
    """Bare 2F1 value at the standard parameter triple."""
    with ctx.active():
        a, b, c = _hyp_params(p, ctx)
    return gauss_2f1_series(a, b, c, p.y, ctx).value


def y_transform(p: Params, f2: BigComplex, ctx: PrecisionContext) -> BigComplex:
    """Y = y^{1/4} (1-y)^{1/2 - i r alpha} 2F1; real-valued up to oracle error."""
    logpref = _log_prefactor(p, ctx)
    with ctx.active():
        two_f1 = f2 * gmpy2.exp(-logpref)
        ym = gmpy2.mpfr(p.y)
        ralpha = gmpy2.mpfr(p.r) * gmpy2.mpfr(p.alpha)
        expo = gmpy2.mpc(gmpy2.mpfr(1) / 2, -ralpha) * gmpy2.log(1 - ym)
        return gmpy2.exp(gmpy2.log(ym) / 4 + expo) * two_f1


def y_oracle(p_r: float, p_alpha: float, yv: float, ctx: PrecisionContext) -> BigComplex:
    """Y(y) directly from the series (no Gamma prefactor involved)."""
    p = Params(p_r, p_alpha, yv)
    with ctx.active():
        a, b, c = _hyp_params(p, ctx)
    series = gauss_2f1_series(a, b, c, yv, ctx)
    with ctx.active():
        ym = gmpy2.mpfr(yv)
        ralpha = gmpy2.mpfr(p_r) * gmpy2.mpfr(p_alpha)
        expo = gmpy2.mpc(gmpy2.mpfr(1) / 2, -ralpha) * gmpy2.log(1 - ym)
        return gmpy2.exp(gmpy2.log(ym) / 4 + expo) * series.value


def ode_coefficients(alpha: float, x: float) -> tuple[float, float]:
    """f, g of Y'' = ((2r)^2 f + g) Y."""
    f = (1.0 - alpha * alpha - x) / (4.0 * x * (1.0 - x) ** 2)
    g = -1.0 / (4.0 * (1.0 - x) ** 2) - 3.0 / (16.0 * x * x * (1.0 - x))
    return f, g


def ode_residual(p: Params, y0: float, h: float, ctx: PrecisionContext) -> float:
    """Normalized defect of the 4th-order 5-point stencil in the Y equation."""
    if not (0.0 < y0 - 2 * h and y0 + 2 * h < 1.0):
        raise DomainError(f"stencil [{y0 - 2 * h}, {y0 + 2 * h}] leaves (0, 1)")
    ys = [y0 + k * h for k in (-2, -1, 0, 1, 2)]
    vals = [y_oracle(p.r, p.alpha, yv, ctx) for yv in ys]
    with ctx.active():
        hm = gmpy2.mpfr(h)
        ypp = (
            -vals[0] + 16 * vals[1] - 30 * vals[2] + 16 * vals[3] - vals[4]
        ) / (12 * hm * hm)
        f, g = ode_coefficients(p.alpha, y0)
        mu2 = (2.0 * p.r) ** 2
        lhs = ypp - (mu2 * f + g) * vals[2]
        scale = (mu2 * abs(f) + abs(g)) * abs(vals[2])
        return float(abs(lhs) / scale)


def scaled_from_big(z: BigComplex) -> ScaledComplex:
    """Collapse a BigComplex into the scaled double representation."""
    def part(v) -> ScaledReal:
        if v == 0:
            return ScaledReal.zero()
        return ScaledReal.from_log(float(gmpy2.log(abs(v))), 1.0 if v > 0 else -1.0)

    return ScaledComplex(part(z.real), part(z.imag))


def rel_error_scaled(approx: ScaledComplex, exact: BigComplex) -> float:
    """|approx - exact| / |exact| evaluated without under/overflow."""
    ex = scaled_from_big(exact)
    diff = approx - ex
    if diff.re.is_zero() and diff.im.is_zero():
        return 0.0
    return math.exp(diff.abs().log_abs() - ex.abs().log_abs())
