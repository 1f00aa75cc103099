"""Asymptotic evaluators for the prefactored hypergeometric function.

Four closed forms, all exponentially scaled:

* bessel: the leading-order uniform Bessel form for 2F1 itself
  (multiply by the Gamma prefactor to get the prefactored function);
* cor1: an exponential-decay envelope bound, valid below the turning point;
* cor2: the oscillatory cosine form, valid above the turning point;
* cor3: the Airy turning-point form, valid on both sides and uniformly the
  most accurate, so the auto dispatcher prefers it everywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .airy import airy_ai_scaled
from .bessel import bessel_quartet
from .errors import DomainError
from .gammafn import gamma_prefactor, stirling_prefactor_leading
from .scaled import ScaledComplex, ScaledReal, scaled_from_log
from .zetamap import (
    DEFAULT_DELTA,
    Params,
    REGIME_MONOTONIC,
    REGIME_OSCILLATORY,
    ZetaPoint,
    a0,
    a1,
    classify_regime,
    l2_phase,
    regime_width,
    zeta_for_y,
)

_TURNING_GUARD = 1e-6  # bessel form: fourth-root ratio too ill-conditioned inside
_LOG_2SQRTPI = math.log(2.0 * math.sqrt(math.pi))

METHODS = ("auto", "cor1", "cor2", "cor3", "bessel", "oracle")


@dataclass(frozen=True)
class ApproxResult:
    value: Optional[ScaledComplex]
    method: str
    regime: str
    zeta_point: Optional[ZetaPoint]
    envelope: Optional[ScaledReal] = None
    prefactor_mode: str = "exact-gamma"
    diagnostics: dict = field(default_factory=dict)


def theorem_leading_2f1(p: Params) -> ScaledComplex:
    """Leading-order Bessel form of 2F1 (not the prefactored function)."""
    a2 = p.alpha * p.alpha
    d = (1.0 - a2) - p.y
    if abs(d) < _TURNING_GUARD:
        raise DomainError(
            f"y within {_TURNING_GUARD} of the turning point 1-alpha^2; "
            "use the Airy form there"
        )
    zp = zeta_for_y(p.alpha, p.y)
    z = zp.zeta
    # (z - a^2) and (1-a^2-y) flip sign together; the ratio stays positive
    ratio = (z - a2) / d
    amp_log = (
        -_LOG_2SQRTPI
        + 0.25 * (math.log((1.0 - a2) * p.r * p.r / (z * z)) + math.log(ratio))
    )
    nu = 2.0 * p.r * p.alpha
    x = 2.0 * p.r * math.sqrt(z)
    q = bessel_quartet(nu, x)
    sqz = math.sqrt(z)
    bracket = (
        2.0 * ScaledReal.from_log(math.pi * p.r) * sqz * q.k
        + ScaledReal.from_log(math.pi * p.r * (2.0 * p.alpha - 1.0)) * sqz * q.it
    )
    phase = p.r * p.alpha * math.log1p(-p.y)  # (1-y)^{i r alpha}, unit modulus
    return scaled_from_log(amp_log, phase) * bracket


def cor1_envelope(p: Params, delta: float = DEFAULT_DELTA) -> ScaledReal:
    """Upper-bound envelope 2 sqrt(pi) e^{-pi r a} e^{-2 r a0} / (sqrt r (1-a^2-y)^{1/4}).

    The decay-side order bound carries an implied constant; the true value
    sits at sqrt(pi) times the bare expression at leading order (that is the
    constant of the dominant K-term), so the factor 2 sqrt(pi) makes this a
    genuine bound with roughly 2x headroom.
    """
    a2 = p.alpha * p.alpha
    d = (1.0 - a2) - p.y
    if d < regime_width(p.r, p.alpha, delta):
        raise DomainError(
            f"envelope bound needs the monotonic regime, y={p.y} is not below "
            f"1-alpha^2 - width"
        )
    logmag = (
        _LOG_2SQRTPI
        - math.pi * p.r * p.alpha
        - 2.0 * p.r * a0(p.alpha, p.y)
        - 0.5 * math.log(p.r)
        - 0.25 * math.log(d)
    )
    return ScaledReal.from_log(logmag)


def cor2_f2(p: Params) -> ScaledComplex:
    """Oscillatory cosine form, defined for y above the turning point."""
    a2 = p.alpha * p.alpha
    d = p.y - (1.0 - a2)
    if d <= 0.0:
        raise DomainError(
            f"cosine form needs y > 1-alpha^2 = {1.0 - a2}, got y={p.y}"
        )
    av = a1(p.alpha, p.y)
    mag_log = (
        _LOG_2SQRTPI
        - math.pi * p.r * p.alpha
        - 0.5 * math.log(p.r)
        - 0.25 * math.log(d)
    )
    osc = math.cos(2.0 * p.r * av - 0.25 * math.pi)
    phase = p.r * l2_phase(p.r, p.alpha, p.y)
    return scaled_from_log(mag_log, phase) * osc


def cor3_f2(p: Params) -> ScaledComplex:
    """Airy turning-point form, valid on both sides of y = 1 - alpha^2."""
    a2 = p.alpha * p.alpha
    d = p.y - (1.0 - a2)
    zp = zeta_for_y(p.alpha, p.y)
    if d == 0.0:
        # lim a^2 zh / (y-1+a^2) from either side
        ratio = a2 * 2.0 ** (-2.0 / 3.0) / (a2 * (1.0 - a2) ** (1.0 / 3.0))
    else:
        ratio = a2 * zp.zeta_hat / d  # zh and d share sign: positive
    tau = 2.0 * p.r * p.alpha
    ai, _ = airy_ai_scaled(-(tau ** (2.0 / 3.0)) * zp.zeta_hat)
    mag_log = (
        1.5 * math.log(2.0)
        + math.log(math.pi)
        - math.pi * p.r * p.alpha
        - math.log(tau) / 3.0
    )
    phase = p.r * l2_phase(p.r, p.alpha, p.y)
    return scaled_from_log(mag_log, phase) * ratio ** 0.25 * ai


def evaluate(
    p: Params,
    method: str = "auto",
    delta: float = DEFAULT_DELTA,
    prefactor_mode: str = "exact-gamma",
    digits: int = 60,
) -> ApproxResult:
    """Dispatch one evaluation; `auto` prefers the Airy form everywhere."""
    if method not in METHODS:
        raise DomainError(f"unknown method {method!r}; expected one of {METHODS}")
    regime = classify_regime(p.r, p.alpha, p.y, delta)
    if method == "oracle":
        from .oracle import f2_oracle, scaled_from_big
        from .precision import big_eval_context

        val = f2_oracle(p, big_eval_context(digits))
        return ApproxResult(scaled_from_big(val), "oracle", regime, None)

    zp = zeta_for_y(p.alpha, p.y)
    if method == "bessel":
        pref = (
            gamma_prefactor(p.r, p.alpha)
            if prefactor_mode == "exact-gamma"
            else stirling_prefactor_leading(p.r, p.alpha)
        )
        val = theorem_leading_2f1(p) * pref
        return ApproxResult(val, "bessel", regime, zp, prefactor_mode=prefactor_mode)
    if method == "cor1":
        env = cor1_envelope(p, delta)
        return ApproxResult(None, "cor1", regime, zp, envelope=env)
    if method == "cor2":
        return ApproxResult(cor2_f2(p), "cor2", regime, zp)
    if method == "cor3":
        return ApproxResult(cor3_f2(p), "cor3", regime, zp)

    # auto: Airy form everywhere, with side information where available
    diagnostics = {}
    envelope = None
    if regime == REGIME_MONOTONIC:
        envelope = cor1_envelope(p, delta)
    elif regime == REGIME_OSCILLATORY:
        diagnostics["cor2"] = cor2_f2(p)
    return ApproxResult(
        cor3_f2(p), "cor3", regime, zp, envelope=envelope, diagnostics=diagnostics
    )
