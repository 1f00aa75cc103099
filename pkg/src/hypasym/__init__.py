"""Uniform asymptotics of a Gamma-prefactored Gauss hypergeometric function.

The object of study is

    F2(r, alpha, y) = Gamma(1/4 + ir(1-alpha)) Gamma(1/4 - ir(1+alpha))
                      / Gamma(1/2) * 2F1(1/4 + ir(1-alpha),
                                         1/4 - ir(1+alpha); 1/2; y)

for large r, small alpha, 0 < y < 1.  The package provides overflow-safe
asymptotic evaluators (Bessel, cosine, Airy, and envelope forms), the
Liouville-Green change of variables they rest on, and a self-contained
extended-precision series oracle used as ground truth.
"""

from .engine import ApproxResult, METHODS, cor1_envelope, cor2_f2, cor3_f2, evaluate, theorem_leading_2f1
from .errors import (
    ConfigurationError,
    DomainError,
    HypasymError,
    NumericalError,
    PoleError,
    ResourceError,
)
from .precision import PrecisionContext, big_eval_context
from .scaled import ScaledComplex, ScaledReal
from .zetamap import (
    DEFAULT_DELTA,
    Params,
    ZetaPoint,
    classify_regime,
    regime_width,
    zeta_for_y,
    zeta0,
)

__all__ = [
    "ApproxResult",
    "ConfigurationError",
    "DEFAULT_DELTA",
    "DomainError",
    "HypasymError",
    "METHODS",
    "NumericalError",
    "Params",
    "PoleError",
    "PrecisionContext",
    "ResourceError",
    "ScaledComplex",
    "ScaledReal",
    "ZetaPoint",
    "big_eval_context",
    "classify_regime",
    "cor1_envelope",
    "cor2_f2",
    "cor3_f2",
    "evaluate",
    "regime_width",
    "theorem_leading_2f1",
    "zeta0",
    "zeta_for_y",
]

__version__ = "0.1.0"
