"""Extended-precision arithmetic context for the brute-force oracle.

BigReal/BigComplex are gmpy2 mpfr/mpc values (fast C arithmetic for the long
series loops); complex log-gamma, which gmpy2 lacks, is delegated to a private
mpmath context at matching precision.  A context is an explicit value threaded
through every oracle call -- there is no module-level mutable precision state
beyond gmpy2's own thread-local context, which each entry point sets and
restores.
"""

from __future__ import annotations

import math
from contextlib import contextmanager
from dataclasses import dataclass

import gmpy2
from mpmath import MPContext

from .errors import ConfigurationError

MIN_DIGITS = 50
_GUARD_BITS = 16

BigReal = gmpy2.mpfr
BigComplex = gmpy2.mpc


@dataclass(frozen=True)
class PrecisionContext:
    """Working precision in significant decimal digits (>= 50)."""

    digits: int

    def __post_init__(self):
        if self.digits < MIN_DIGITS:
            raise ConfigurationError(
                f"precision floor is {MIN_DIGITS} digits, got {self.digits}"
            )

    @property
    def bits(self) -> int:
        return int(math.ceil(self.digits * math.log2(10))) + _GUARD_BITS

    def with_digits(self, digits: int) -> "PrecisionContext":
        return PrecisionContext(max(digits, MIN_DIGITS))

    @contextmanager
    def active(self):
        """Install this precision on gmpy2's thread-local context."""
        old = gmpy2.get_context()
        gmpy2.set_context(gmpy2.context(precision=self.bits))
        try:
            yield
        finally:
            gmpy2.set_context(old)

    # -- constructors (valid only while .active() is installed) --

    def real(self, x) -> BigReal:
        return gmpy2.mpfr(x)

    def cplx(self, re, im=0) -> BigComplex:
        return gmpy2.mpc(gmpy2.mpfr(re), gmpy2.mpfr(im))

    # -- mpmath bridge --

    def mpmath(self) -> MPContext:
        ctx = MPContext()
        ctx.dps = self.digits + 5
        return ctx

    def loggamma(self, re: float, im: float) -> BigComplex:
        """log Gamma(re + i*im) at this precision, as a BigComplex."""
        mc = self.mpmath()
        v = mc.loggamma(mc.mpc(re, im))
        d = self.digits + 8
        return gmpy2.mpc(
            gmpy2.mpfr(mc.nstr(v.real, d)), gmpy2.mpfr(mc.nstr(v.imag, d))
        )


def big_eval_context(digits: int) -> PrecisionContext:
    """Explicit precision context for oracle computations."""
    return PrecisionContext(digits)
