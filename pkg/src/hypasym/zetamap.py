"""Liouville-Green change of variables and phase functions.

zeta(alpha, y) is defined implicitly by one of two monotone transcendental
branch equations, switching at the turning point y = 1 - alpha^2 (where
zeta = alpha^2):

    y < 1-a^2:  a0(alpha, y) = sqrt(z-a^2) - a arccos(a/sqrt(z)),  z in (a^2, z0]
    y > 1-a^2:  a1(alpha, y) = a log((a+sqrt(a^2-z))/sqrt(z)) - sqrt(a^2-z),
                                                                z in (0, a^2)

with the closed-form phase functions a0/a1 on the left.  Both right-hand
sides are monotone in zeta with the simple derivatives +-sqrt(|z-a^2|)/(2z),
so a safeguarded Newton iteration inside a maintained bracket converges
unconditionally.

The Airy variable is zeta_hat = -(3 a0/(2a))^(2/3) below the turning point
and +(3 a1/(2a))^(2/3) above; the exact relation a = (2a/3)|zeta_hat|^(3/2)
holds by construction.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from mpmath import MPContext

from .errors import DomainError, NumericalError

DEFAULT_DELTA = 0.1

# |1-a^2-y| below this multiple of a^2: closed forms cancel catastrophically,
# evaluate them in extended precision instead
_NEAR_TURNING = 1e-3
_NEWTON_TOL = 1e-13
_MAX_ITER = 200

_mc = MPContext()
_mc.dps = 50

REGIME_MONOTONIC = "monotonic"
REGIME_TURNING = "turning"
REGIME_OSCILLATORY = "oscillatory"


@dataclass(frozen=True)
class Params:
    """Evaluation point (r, alpha, y)."""

    r: float
    alpha: float
    y: float

    def __post_init__(self):
        if not (self.r > 0.0):
            raise DomainError(f"need r > 0, got {self.r}")
        if not (0.0 < self.alpha < 1.0):
            raise DomainError(f"need 0 < alpha < 1, got {self.alpha}")
        if not (0.0 < self.y < 1.0):
            raise DomainError(f"need 0 < y < 1, got {self.y}")

    def check_regime_guard(self, delta: float = DEFAULT_DELTA) -> bool:
        """Warn (never error) when alpha leaves r^(delta-1) < alpha < r^(-delta)."""
        lo, hi = self.r ** (delta - 1.0), self.r ** (-delta)
        ok = lo < self.alpha < hi
        if not ok:
            warnings.warn(
                f"alpha={self.alpha} outside asymptotic window "
                f"({lo:.3g}, {hi:.3g}) for r={self.r}, delta={delta}",
                stacklevel=2,
            )
        return ok


@dataclass(frozen=True)
class ZetaPoint:
    zeta: float
    zeta_hat: float
    a_value: float
    regime: str
    residual: float


def a0(alpha: float, y: float) -> float:
    """Exponential-side phase; positive on 0 < y < 1 - alpha^2."""
    d = (1.0 - alpha * alpha) - y
    if not (0.0 < y and d > 0.0):
        raise DomainError(f"a0 needs 0 < y < 1-alpha^2, got alpha={alpha}, y={y}")
    if d <= _NEAR_TURNING * alpha * alpha:
        return _a0_mp(alpha, y)
    sq = math.sqrt(y / d)
    return (
        0.5 * math.pi * (1.0 - alpha)
        - math.atan(sq)
        + alpha * math.atan(alpha * sq)
    )


def _a0_mp(alpha: float, y: float) -> float:
    a = _mc.mpf(alpha)
    ym = _mc.mpf(y)
    sq = _mc.sqrt(ym / (1 - a * a - ym))
    return float(_mc.pi * (1 - a) / 2 - _mc.atan(sq) + a * _mc.atan(a * sq))


def a1(alpha: float, y: float) -> float:
    """Oscillatory-side phase; positive on 1 - alpha^2 < y < 1."""
    d = y - (1.0 - alpha * alpha)
    if not (d > 0.0 and y < 1.0):
        raise DomainError(f"a1 needs 1-alpha^2 < y < 1, got alpha={alpha}, y={y}")
    if d <= _NEAR_TURNING * alpha * alpha:
        return _a1_mp(alpha, y)
    sy = math.sqrt(y)
    sd = math.sqrt(d)
    return (
        alpha * math.log(alpha * sy + sd)
        - math.log(sy + sd)
        - 0.5 * alpha * math.log1p(-y)
        + 0.5 * (1.0 - alpha) * math.log1p(-alpha * alpha)
    )


def _a1_mp(alpha: float, y: float) -> float:
    a = _mc.mpf(alpha)
    ym = _mc.mpf(y)
    sy = _mc.sqrt(ym)
    sd = _mc.sqrt(ym - 1 + a * a)
    return float(
        a * _mc.log(a * sy + sd)
        - _mc.log(sy + sd)
        - a / 2 * _mc.log(1 - ym)
        + (1 - a) / 2 * _mc.log(1 - a * a)
    )


def a0_taylor_leading(alpha: float, y: float) -> float:
    """Leading Taylor term of a0 at the turning point."""
    d = (1.0 - alpha * alpha) - y
    return (1.0 - alpha * alpha) * d ** 1.5 / (3.0 * alpha * alpha * y ** 1.5)


def a1_taylor_leading(alpha: float, y: float) -> float:
    """Leading Taylor term of a1 at the turning point."""
    d = y - (1.0 - alpha * alpha)
    return d ** 1.5 / (3.0 * alpha * alpha * math.sqrt(1.0 - alpha * alpha))


def _phi_mono(alpha: float, z: float) -> float:
    """sqrt(z-a^2) - a arccos(a/sqrt(z)); increasing on (a^2, inf)."""
    u = z - alpha * alpha
    if u <= 0.0:
        return 0.0 if u == 0.0 else -math.inf
    return math.sqrt(u) - alpha * math.acos(alpha / math.sqrt(z))


def _phi_osc(alpha: float, z: float) -> float:
    """a log((a+sqrt(a^2-z))/sqrt(z)) - sqrt(a^2-z); decreasing on (0, a^2)."""
    u = alpha * alpha - z
    if u <= 0.0:
        return 0.0 if u == 0.0 else -math.inf
    s = math.sqrt(u)
    return alpha * math.log((alpha + s) / math.sqrt(z)) - s


# both branch equations expand as phi = u^{3/2}/(3 z_t) * sum c_k (s x)^k with
# u = |zeta - z_t|, x = u/z_t, z_t = alpha^2, c_k = 3/(2k+3), and s = -1 on the
# monotone side, +1 on the oscillatory side; the series has no cancellation,
# unlike the closed forms, so it is the stable route very near the turning point
_TAYLOR_TERMS = 11
_TAYLOR_X_MAX = 0.05


def _phi_taylor(alpha: float, u: float, branch_sign: float) -> float:
    a2 = alpha * alpha
    x = branch_sign * u / a2
    s = 0.0
    for k in range(_TAYLOR_TERMS - 1, -1, -1):
        s = s * x + 3.0 / (2 * k + 3)
    return u ** 1.5 / (3.0 * a2) * s


def _invert_near_turning(alpha: float, t: float, branch_sign: float):
    """Solve phi(u) = t for small u via Newton on the stable series."""
    a2 = alpha * alpha
    u = (3.0 * a2 * t) ** (2.0 / 3.0)
    for _ in range(6):
        fu = _phi_taylor(alpha, u, branch_sign) - t
        # d phi / d u = sqrt(u) / (2 (a^2 - sign*u)) = sqrt(u) / (2 zeta)
        d = math.sqrt(u) / (2.0 * (a2 - branch_sign * u))
        step = fu / d
        u = max(u - step, 0.25 * u)
    return u, abs(_phi_taylor(alpha, u, branch_sign) - t)


def _newton_bracket(f, fprime, target, lo, hi, what):
    """Safeguarded Newton on f(z) = target inside the bracket [lo, hi]."""
    flo = f(lo) - target
    fhi = f(hi) - target
    if flo == 0.0:
        return lo, 0.0
    if fhi == 0.0:
        return hi, 0.0
    if flo * fhi > 0.0:
        raise NumericalError(
            f"{what}: root not bracketed in [{lo}, {hi}] "
            f"(f-target = {flo:.3e}, {fhi:.3e})"
        )
    z = 0.5 * (lo + hi)
    for _ in range(_MAX_ITER):
        fz = f(z) - target
        if abs(fz) <= _NEWTON_TOL:
            return z, abs(fz)
        if flo * fz < 0.0:
            hi = z
        else:
            lo, flo = z, fz
        d = fprime(z)
        zn = z - fz / d if d != 0.0 and math.isfinite(d) else math.nan
        z = zn if lo < zn < hi else 0.5 * (lo + hi)
        if hi - lo < 1e-17 * max(1.0, abs(z)):
            return z, abs(f(z) - target)
    raise NumericalError(f"{what}: no convergence after {_MAX_ITER} iterations")


def zeta0(alpha: float) -> float:
    """zeta at y = 0: pi(1-a)/2 = sqrt(z0-a^2) - a arccos(a/sqrt(z0))."""
    if not (0.0 < alpha < 1.0):
        raise DomainError(f"need 0 < alpha < 1, got {alpha}")
    a2 = alpha * alpha
    target = 0.5 * math.pi * (1.0 - alpha)
    z, _ = _newton_bracket(
        lambda z: _phi_mono(alpha, z),
        lambda z: math.sqrt(max(z - a2, 0.0)) / (2.0 * z),
        target,
        a2 * (1.0 + 1e-12),
        0.25 * math.pi * math.pi + a2 + 1.0,
        "zeta0",
    )
    return z


def zeta_for_y(alpha: float, y: float) -> ZetaPoint:
    """Invert the branch equation for zeta at (alpha, y)."""
    if not (0.0 < alpha < 1.0):
        raise DomainError(f"need 0 < alpha < 1, got {alpha}")
    if not (0.0 < y < 1.0):
        raise DomainError(f"need 0 < y < 1, got {y}")
    a2 = alpha * alpha
    turn = 1.0 - a2
    if y == turn:
        return ZetaPoint(a2, 0.0, 0.0, REGIME_TURNING, 0.0)
    if y < turn:
        t = a0(alpha, y)
        guess = a2 + (3.0 * a2 * t) ** (2.0 / 3.0)
        if guess - a2 <= _TAYLOR_X_MAX * a2:
            u, res = _invert_near_turning(alpha, t, -1.0)
            zh = -((3.0 * t / (2.0 * alpha)) ** (2.0 / 3.0))
            return ZetaPoint(a2 + u, zh, t, REGIME_MONOTONIC, res)
        hi = zeta0(alpha) * (1.0 + 1e-9)
        z, res = _newton_bracket(
            lambda z: _phi_mono(alpha, z),
            lambda z: math.sqrt(max(z - a2, 0.0)) / (2.0 * z),
            t,
            a2 * (1.0 + 1e-15),
            max(hi, guess * (1.0 + 1e-9)),
            f"zeta(alpha={alpha}, y={y})",
        )
        zh = -((3.0 * t / (2.0 * alpha)) ** (2.0 / 3.0))
        return ZetaPoint(z, zh, t, REGIME_MONOTONIC, res)
    t = a1(alpha, y)
    if (3.0 * a2 * t) ** (2.0 / 3.0) <= _TAYLOR_X_MAX * a2:
        u, res = _invert_near_turning(alpha, t, 1.0)
        zh = (3.0 * t / (2.0 * alpha)) ** (2.0 / 3.0)
        return ZetaPoint(a2 - u, zh, t, REGIME_OSCILLATORY, res)
    lo = min(4.0 * a2 * math.exp(-2.0 - 2.0 * t / alpha), 0.5 * a2) * 0.5
    z, res = _newton_bracket(
        lambda z: _phi_osc(alpha, z),
        lambda z: -math.sqrt(max(a2 - z, 0.0)) / (2.0 * z),
        t,
        lo,
        a2 * (1.0 - 1e-15),
        f"zeta(alpha={alpha}, y={y})",
    )
    zh = (3.0 * t / (2.0 * alpha)) ** (2.0 / 3.0)
    return ZetaPoint(z, zh, t, REGIME_OSCILLATORY, res)


def zeta_hat(alpha: float, y: float) -> float:
    """Airy variable: negative below the turning point, zero at it."""
    turn = 1.0 - alpha * alpha
    if y == turn:
        return 0.0
    if y < turn:
        return -((3.0 * a0(alpha, y) / (2.0 * alpha)) ** (2.0 / 3.0))
    return (3.0 * a1(alpha, y) / (2.0 * alpha)) ** (2.0 / 3.0)


def l2_phase(r: float, alpha: float, y: float) -> float:
    """Closed-form phase multiplying r in the oscillatory/Airy formulas."""
    if not (0.0 < y < 1.0):
        raise DomainError(f"need 0 < y < 1, got {y}")
    return (
        alpha * math.log1p(-y)
        - 2.0 * alpha * math.log(r)
        + (1.0 - alpha) * math.log1p(-alpha)
        - (1.0 + alpha) * math.log1p(alpha)
        + 2.0 * alpha
    )


def regime_width(r: float, alpha: float, delta: float = DEFAULT_DELTA) -> float:
    """Half-width of the turning zone: alpha^(4/3) / r^(2/3 - delta)."""
    return alpha ** (4.0 / 3.0) / r ** (2.0 / 3.0 - delta)


def classify_regime(
    r: float, alpha: float, y: float, delta: float = DEFAULT_DELTA
) -> str:
    """monotonic / turning / oscillatory relative to y = 1 - alpha^2."""
    width = regime_width(r, alpha, delta)
    turn = 1.0 - alpha * alpha
    if y <= turn - width:
        return REGIME_MONOTONIC
    if y >= turn + width:
        return REGIME_OSCILLATORY
    return REGIME_TURNING
