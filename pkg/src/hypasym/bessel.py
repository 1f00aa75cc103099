"""Modified Bessel functions of imaginary order.

K_iv(x) and the real combination Itilde_iv(x) = pi e**(-pi v) (I_iv + I_-iv),
with x-derivatives, are the kernels of the leading-order Bessel form of the
main asymptotic formula.  Two evaluation paths:

* series: the power series of I_iv summed in extended precision (the
  imaginary part suffers ~x/ln10 + v eta(x/v)/ln10 digits of cancellation,
  so the working precision is chosen adaptively), then
      K_iv  = -pi Im I_iv / sinh(pi v)
      It_iv = 2 pi e**(-pi v) Re I_iv.

* integral: for large x, real integral representations evaluated by
  tanh-sinh quadrature with the e**(+-x) scale factored into a ScaledReal:
      K_iv(x)  = int_0^inf e**(-x cosh t) cos(v t) dt
      It_iv(x) = 2 e**(-pi v) int_0^pi  e**(x cos th) cosh(v th) dth
                 - (1 - e**(-2 pi v)) int_0^inf e**(-x cosh t) sin(v t) dt.

The integral path is used only where its own cancellation (the result is
smaller than the integrand peak by e**(x - sqrt(x^2-v^2) - v*atan(v/...)))
stays within a few digits; otherwise the series path takes over at any x.

Derivatives use the differentiated series / integrands, never finite
differences, so the Wronskian identity
    K It' - K' It = 2 pi e**(-pi v) / x
is an implementation-independent certificate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from mpmath import MPContext

from .airy import airy_ai_scaled
from .errors import DomainError
from .quadrature import tanh_sinh
from .scaled import ScaledReal

X_SERIES_MAX = 40.0        # below this, always series
_QUAD_CANCEL_MAX = 12.0    # ln units of quadrature cancellation we accept
_NU_FLOOR = 1e-12          # removable sinh(pi v) singularity at v = 0
_TAIL_LN = 115.0           # e**-115 ~ 1e-50 integrand tail cut


def eta(x: float) -> float:
    """eta(x) = sqrt(x^2-1) - arctan sqrt(x^2-1), for x >= 1."""
    if x < 1.0:
        raise DomainError(f"eta needs x >= 1, got {x}")
    s = math.sqrt((x - 1.0) * (x + 1.0))
    return s - math.atan(s)


@dataclass(frozen=True)
class BesselImOrderValue:
    value: ScaledReal
    order: float
    argument: float
    method: str  # series | integral


@dataclass(frozen=True)
class _Quartet:
    """K, K', Itilde, Itilde' at one (order, argument)."""

    k: ScaledReal
    kp: ScaledReal
    it: ScaledReal
    itp: ScaledReal
    method: str


def _use_series(nu: float, x: float) -> bool:
    if x <= X_SERIES_MAX or x <= nu:
        return True
    s = math.sqrt((x - nu) * (x + nu))
    cancel = s - x + nu * math.atan2(nu, s)
    return cancel > _QUAD_CANCEL_MAX


def _series_quartet(nu: float, x: float) -> _Quartet:
    nu_eff = max(nu, _NU_FLOOR)
    cancel_ln = x
    if x > nu > 0.0:
        cancel_ln += nu * eta(x / nu)
    if nu_eff < 1.0:
        # Im I ~ nu * K: the imaginary part shrinks with the order
        cancel_ln -= math.log(nu_eff)
    mc = MPContext()
    mc.dps = 25 + int(cancel_ln / math.log(10.0))
    inu = mc.mpc(0, nu_eff)
    xm = mc.mpf(x)
    q = xm * xm / 4
    # t_k = (x/2)^(2k+i nu) / (k! Gamma(k+1+i nu)); log start avoids overflow
    t = mc.exp(inu * mc.log(xm / 2) - mc.loggamma(1 + inu))
    s_i = mc.mpc(0)
    s_ip = mc.mpc(0)   # sum of t_k (2k + i nu) / x, the term-wise derivative
    tiny = mc.mpf(10) ** (-(mc.dps - 3))
    peak = abs(t)
    k = 0
    while True:
        s_i += t
        s_ip += t * (2 * k + inu) / xm
        mag = abs(t)
        if mag > peak:
            peak = mag
        if k > 4 and mag < tiny * peak:
            break
        t *= q / ((k + 1) * (k + 1 + inu))
        k += 1
        if k > 20000:
            raise DomainError(f"Bessel series did not converge at nu={nu}, x={x}")
    sh = mc.sinh(mc.pi * nu_eff)
    k_val = -mc.pi * s_i.imag / sh
    kp_val = -mc.pi * s_ip.imag / sh
    it_scale = 2 * mc.pi * mc.exp(-mc.pi * nu_eff)
    it_val = it_scale * s_i.real
    itp_val = it_scale * s_ip.real
    return _Quartet(
        _from_mp(mc, k_val), _from_mp(mc, kp_val),
        _from_mp(mc, it_val), _from_mp(mc, itp_val), "series",
    )


def _from_mp(mc: MPContext, v) -> ScaledReal:
    if v == 0:
        return ScaledReal.zero()
    return ScaledReal.from_log(float(mc.log(abs(v))), 1.0 if v > 0 else -1.0)


def _integral_quartet(nu: float, x: float) -> _Quartet:
    tmax = math.acosh(1.0 + _TAIL_LN / x)
    scale = ScaledReal.from_log(-x)

    def kern_cos(t: float) -> float:
        return math.exp(-x * (math.cosh(t) - 1.0)) * math.cos(nu * t)

    def kern_cos_d(t: float) -> float:
        return math.exp(-x * (math.cosh(t) - 1.0)) * math.cosh(t) * math.cos(nu * t)

    def kern_sin(t: float) -> float:
        return math.exp(-x * (math.cosh(t) - 1.0)) * math.sin(nu * t)

    def kern_sin_d(t: float) -> float:
        return math.exp(-x * (math.cosh(t) - 1.0)) * math.cosh(t) * math.sin(nu * t)

    k_val = ScaledReal.from_float(tanh_sinh(kern_cos, 0.0, tmax)) * scale
    kp_val = -ScaledReal.from_float(tanh_sinh(kern_cos_d, 0.0, tmax)) * scale

    # cosh(v th) e**(-pi v), split to stay in double range
    def damped_cosh(th: float) -> float:
        return 0.5 * (math.exp(nu * (th - math.pi)) + math.exp(-nu * (th + math.pi)))

    def kern_i(th: float) -> float:
        return math.exp(x * (math.cos(th) - 1.0)) * damped_cosh(th)

    def kern_i_d(th: float) -> float:
        return math.exp(x * (math.cos(th) - 1.0)) * math.cos(th) * damped_cosh(th)

    up = ScaledReal.from_log(x)
    two_sinh = -math.expm1(-2.0 * math.pi * nu)  # (1 - e**(-2 pi v))
    it_val = (
        2.0 * ScaledReal.from_float(tanh_sinh(kern_i, 0.0, math.pi)) * up
        - two_sinh * ScaledReal.from_float(tanh_sinh(kern_sin, 0.0, tmax)) * scale
    )
    itp_val = (
        2.0 * ScaledReal.from_float(tanh_sinh(kern_i_d, 0.0, math.pi)) * up
        + two_sinh * ScaledReal.from_float(tanh_sinh(kern_sin_d, 0.0, tmax)) * scale
    )
    return _Quartet(k_val, kp_val, it_val, itp_val, "integral")


def bessel_quartet(nu: float, x: float) -> _Quartet:
    """K, K', Itilde, Itilde' at imaginary order i*nu and argument x."""
    if x <= 0.0:
        raise DomainError(f"argument must be positive, got x={x}")
    if nu < 0.0:
        raise DomainError(f"order parameter must be >= 0, got nu={nu}")
    if _use_series(nu, x):
        return _series_quartet(nu, x)
    return _integral_quartet(nu, x)


def bessel_k_im(nu: float, x: float) -> ScaledReal:
    """K_iv(x), real for real v >= 0 and x > 0."""
    return bessel_quartet(nu, x).k


def bessel_k_im_deriv(nu: float, x: float) -> ScaledReal:
    return bessel_quartet(nu, x).kp


def bessel_i_tilde(nu: float, x: float) -> ScaledReal:
    """Itilde_iv(x) = pi e**(-pi v) (I_iv(x) + I_-iv(x))."""
    return bessel_quartet(nu, x).it


def bessel_i_tilde_deriv(nu: float, x: float) -> ScaledReal:
    return bessel_quartet(nu, x).itp


def bessel_k_im_value(nu: float, x: float) -> BesselImOrderValue:
    q = bessel_quartet(nu, x)
    return BesselImOrderValue(q.k, nu, x, q.method)


def _hatzeta_of_z(z: float) -> float:
    """Airy variable of the K-Bessel turning point: positive for z < 1."""
    if z <= 0.0:
        raise DomainError(f"need z > 0, got {z}")
    if z < 1.0:
        s = math.sqrt((1.0 - z) * (1.0 + z))
        rhs = math.log((1.0 + s) / z) - s
        return (1.5 * rhs) ** (2.0 / 3.0)
    if z > 1.0:
        s = math.sqrt((z - 1.0) * (z + 1.0))
        rhs = s - math.acos(1.0 / z)
        return -((1.5 * rhs) ** (2.0 / 3.0))
    return 0.0


def bessel_k_airy_approx(nu: float, z: float) -> ScaledReal:
    """Airy-form approximation of K_iv(v z), leading order.

    K_iv(v z) ~ (pi e**(-pi v/2) / v^(1/3)) (4 zh/(1-z^2))^(1/4) Ai(-v^(2/3) zh).
    """
    if not (nu >= 10.0 and z > 0.0):
        raise DomainError(f"need nu >= 10 and z > 0, got nu={nu}, z={z}")
    zh = _hatzeta_of_z(z)
    if abs(z - 1.0) < 1e-6:
        ratio = 2.0 ** (-2.0 / 3.0)  # lim zh/(1-z^2) at the turning point
    else:
        ratio = zh / ((1.0 - z) * (1.0 + z))
    ai, _ = airy_ai_scaled(-(nu ** (2.0 / 3.0)) * zh)
    amp = ScaledReal.from_log(
        math.log(math.pi) - 0.5 * math.pi * nu - math.log(nu) / 3.0
    )
    return amp * (4.0 * ratio) ** 0.25 * ai
