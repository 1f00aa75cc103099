"""Real-argument Airy function Ai.

Maclaurin series (summed in extended precision; the alternating tail near
x = -7 costs about 8 digits of cancellation) for |x| <= 7, standard
asymptotic expansions beyond, truncated at the smallest term.  The decaying
side is also available as a ScaledReal so that e**(-2/3 x^{3/2}) never
underflows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from mpmath import MPContext

from .errors import DomainError
from .scaled import ScaledReal

X_SWITCH = 7.0
_SERIES_DPS = 34
_MAX_ASY_TERMS = 60


@dataclass(frozen=True)
class AiryValue:
    value: float
    method: str  # maclaurin | asymptotic-positive | asymptotic-negative


_mc = MPContext()
_mc.dps = _SERIES_DPS
_C1 = _mc.mpf(3) ** _mc.mpf("-2/3") / _mc.gamma(_mc.mpf(2) / 3)
_C2 = _mc.mpf(3) ** _mc.mpf("-1/3") / _mc.gamma(_mc.mpf(1) / 3)

AI_ZERO = float(_C1)  # Ai(0) = 3**(-2/3)/Gamma(2/3)


def _maclaurin(x: float) -> float:
    xm = _mc.mpf(x)
    x3 = xm * xm * xm
    # f = sum 3^k (1/3)_k x^{3k}/(3k)!,  g = sum 3^k (2/3)_k x^{3k+1}/(3k+1)!
    f = t = _mc.mpf(1)
    k = 0
    while abs(t) > _mc.mpf(10) ** (-_SERIES_DPS):
        t *= x3 * (3 * k + 1) / ((3 * k + 1) * (3 * k + 2) * (3 * k + 3))
        f += t
        k += 1
    g = t = xm
    k = 0
    while abs(t) > _mc.mpf(10) ** (-_SERIES_DPS):
        t *= x3 * (3 * k + 2) / ((3 * k + 2) * (3 * k + 3) * (3 * k + 4))
        g += t
        k += 1
    return float(_C1 * f - _C2 * g)


def _u_terms(xi: float, parity: int | None = None) -> float:
    """Sum of (-1)^k u_k / xi^k with optimal truncation.

    parity 0/1 restricts to even/odd k (used on the oscillatory side, where
    the respective sums multiply cos and sin); xi**k then means xi**k with the
    same k, signs (-1)^(k//2).
    """
    u = 1.0
    total = 0.0
    prev = math.inf
    for k in range(_MAX_ASY_TERMS):
        term = u / xi**k
        if term > prev:  # optimal truncation: stop at the smallest term
            break
        prev = term
        if parity is None:
            total += (-1) ** k * term
        elif k % 2 == parity:
            total += (-1) ** (k // 2) * term
        u *= (3 * k + 0.5) * (3 * k + 1.5) * (3 * k + 2.5) / (54.0 * (k + 1) * (k + 0.5))
    return total


def airy_ai_scaled(x: float) -> tuple[ScaledReal, str]:
    """Ai(x) as a ScaledReal, immune to underflow on the decaying side."""
    if not math.isfinite(x):
        raise DomainError(f"non-finite Airy argument: {x}")
    if abs(x) <= X_SWITCH:
        return ScaledReal.from_float(_maclaurin(x)), "maclaurin"
    if x > 0:
        xi = (2.0 / 3.0) * x ** 1.5
        s = _u_terms(xi)
        logmag = -xi - math.log(2.0 * math.sqrt(math.pi)) - 0.25 * math.log(x)
        return ScaledReal.from_log(logmag) * s, "asymptotic-positive"
    t = -x
    xi = (2.0 / 3.0) * t ** 1.5
    ceven = _u_terms(xi, parity=0)
    codd = _u_terms(xi, parity=1)
    amp = 1.0 / (math.sqrt(math.pi) * t ** 0.25)
    val = amp * (math.cos(xi - math.pi / 4.0) * ceven + math.sin(xi - math.pi / 4.0) * codd)
    return ScaledReal.from_float(val), "asymptotic-negative"


def airy_ai(x: float) -> AiryValue:
    """Ai(x) for finite real x."""
    s, method = airy_ai_scaled(x)
    return AiryValue(s.to_float(), method)
