"""Scaled floating point: value = significand * e**exponent.

The asymptotic formulas combine factors like e**(pi*r) with Bessel values of
size e**(-pi*r); a double would overflow around |log value| ~ 709.  Storing an
integer base-e exponent next to a double significand keeps every intermediate
representable for |log value| up to ~1e6.  The base is e (not 2) because all
the large factors in play are natural exponentials, so they land on the
exponent field as integer shifts plus a small residual.

Canonical form after normalize(): |significand| in [1, e), or significand = 0
with exponent = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

_E = math.e
# exponent gap beyond which the smaller addend is below 1e-25 relative
_ADD_CUTOFF = 60


@dataclass(frozen=True)
class ScaledReal:
    sig: float
    exp: int = 0

    @staticmethod
    def from_float(x: float) -> "ScaledReal":
        return ScaledReal(float(x), 0).normalized()

    @staticmethod
    def from_log(logmag: float, sign: float = 1.0) -> "ScaledReal":
        """Value sign * e**logmag without ever forming e**logmag."""
        if not math.isfinite(logmag):
            raise DomainError(f"non-finite log magnitude: {logmag}")
        k = math.floor(logmag)
        return ScaledReal(math.copysign(math.exp(logmag - k), sign), k).normalized()

    @staticmethod
    def zero() -> "ScaledReal":
        return ScaledReal(0.0, 0)

    def normalized(self) -> "ScaledReal":
        return normalize(self)

    def is_zero(self) -> bool:
        return self.sig == 0.0

    @property
    def sign(self) -> float:
        return math.copysign(1.0, self.sig) if self.sig != 0.0 else 0.0

    def log_abs(self) -> float:
        if self.sig == 0.0:
            raise DomainError("log of zero")
        return math.log(abs(self.sig)) + self.exp

    def to_float(self) -> float:
        """Collapse to a double; overflows to inf, underflows to 0."""
        if self.sig == 0.0:
            return 0.0
        t = math.log(abs(self.sig)) + self.exp
        if t > 709.0:
            return math.copysign(math.inf, self.sig)
        if t < -745.0:
            return math.copysign(0.0, self.sig)
        return math.copysign(math.exp(t), self.sig)

    def __neg__(self) -> "ScaledReal":
        return ScaledReal(-self.sig, self.exp)

    def __abs__(self) -> "ScaledReal":
        return ScaledReal(abs(self.sig), self.exp)

    def __mul__(self, other: "ScaledReal | float") -> "ScaledReal":
        if not isinstance(other, ScaledReal):
            other = ScaledReal.from_float(other)
        return ScaledReal(self.sig * other.sig, self.exp + other.exp).normalized()

    __rmul__ = __mul__

    def __truediv__(self, other: "ScaledReal | float") -> "ScaledReal":
        if not isinstance(other, ScaledReal):
            other = ScaledReal.from_float(other)
        if other.sig == 0.0:
            raise ZeroDivisionError("scaled division by zero")
        return ScaledReal(self.sig / other.sig, self.exp - other.exp).normalized()

    def __add__(self, other: "ScaledReal | float") -> "ScaledReal":
        if not isinstance(other, ScaledReal):
            other = ScaledReal.from_float(other)
        a, b = self.normalized(), other.normalized()
        if a.sig == 0.0:
            return b
        if b.sig == 0.0:
            return a
        if a.exp < b.exp:
            a, b = b, a
        d = a.exp - b.exp
        if d > _ADD_CUTOFF:
            return a
        return ScaledReal(a.sig + b.sig * math.exp(-d), a.exp).normalized()

    __radd__ = __add__

    def __sub__(self, other: "ScaledReal | float") -> "ScaledReal":
        if not isinstance(other, ScaledReal):
            other = ScaledReal.from_float(other)
        return self + (-other)

    def scale_by_log(self, k: int) -> "ScaledReal":
        """Multiply by e**k exactly (integer k)."""
        if self.sig == 0.0:
            return self
        return ScaledReal(self.sig, self.exp + int(k))

    def sqrt(self) -> "ScaledReal":
        if self.sig < 0.0:
            raise DomainError("sqrt of negative scaled value")
        if self.sig == 0.0:
            return ScaledReal.zero()
        return ScaledReal.from_log(0.5 * self.log_abs())

    def __lt__(self, other: "ScaledReal") -> bool:
        return (self - other).sig < 0.0

    def __le__(self, other: "ScaledReal") -> bool:
        return (self - other).sig <= 0.0


def normalize(x: ScaledReal) -> ScaledReal:
    """Canonicalize: |sig| in [1, e) or exact zero.  Idempotent bitwise."""
    sig, exp = x.sig, x.exp
    if sig == 0.0:
        return x if exp == 0 else ScaledReal(0.0, 0)
    a = abs(sig)
    if 1.0 <= a < _E:
        return x
    k = math.floor(math.log(a))
    # rescale in two halves so e**(-k) itself cannot overflow for subnormal sig
    h = k // 2
    sig = (sig * math.exp(-h)) * math.exp(-(k - h))
    exp += k
    while abs(sig) >= _E:
        sig /= _E
        exp += 1
    while abs(sig) < 1.0:
        sig *= _E
        exp -= 1
    return ScaledReal(sig, exp)


@dataclass(frozen=True)
class ScaledComplex:
    """Complex number with independently scaled real and imaginary parts."""

    re: ScaledReal
    im: ScaledReal

    @staticmethod
    def from_complex(z: complex) -> "ScaledComplex":
        return ScaledComplex(ScaledReal.from_float(z.real), ScaledReal.from_float(z.imag))

    @staticmethod
    def zero() -> "ScaledComplex":
        return ScaledComplex(ScaledReal.zero(), ScaledReal.zero())

    def conj(self) -> "ScaledComplex":
        return ScaledComplex(self.re, -self.im)

    def __neg__(self) -> "ScaledComplex":
        return ScaledComplex(-self.re, -self.im)

    def __add__(self, other: "ScaledComplex") -> "ScaledComplex":
        return ScaledComplex(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "ScaledComplex") -> "ScaledComplex":
        return ScaledComplex(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "ScaledComplex | ScaledReal | float") -> "ScaledComplex":
        if isinstance(other, ScaledComplex):
            return ScaledComplex(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        return ScaledComplex(self.re * other, self.im * other)

    __rmul__ = __mul__

    def abs(self) -> ScaledReal:
        if self.re.is_zero() and self.im.is_zero():
            return ScaledReal.zero()
        if self.re.is_zero():
            return abs(self.im)
        if self.im.is_zero():
            return abs(self.re)
        return (abs(self.re) * abs(self.re) + abs(self.im) * abs(self.im)).sqrt()

    def log_abs(self) -> float:
        return self.abs().log_abs()

    def phase(self) -> float:
        a = max(self.re.exp, self.im.exp)
        return math.atan2(
            self.im.sig * math.exp(min(self.im.exp - a, 0)) if not self.im.is_zero() else 0.0,
            self.re.sig * math.exp(min(self.re.exp - a, 0)) if not self.re.is_zero() else 0.0,
        )

    def to_complex(self) -> complex:
        return complex(self.re.to_float(), self.im.to_float())


def scaled_from_log(logmag: float, phase: float) -> ScaledComplex:
    """Complex value with |z| = e**logmag and arg z = phase."""
    if not (math.isfinite(logmag) and math.isfinite(phase)):
        raise DomainError(f"non-finite input to scaled_from_log: {logmag}, {phase}")
    mag = ScaledReal.from_log(logmag)
    c, s = math.cos(phase), math.sin(phase)
    return ScaledComplex(mag * c, mag * s)
