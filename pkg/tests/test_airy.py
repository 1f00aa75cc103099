import math

import mpmath
import pytest

from hypasym.airy import AI_ZERO, airy_ai, airy_ai_scaled
from hypasym.errors import DomainError


def _ref(x: float) -> float:
    return float(mpmath.airyai(x))


def test_value_at_origin():
    got, method = airy_ai_scaled(0.0)
    assert method == "maclaurin"
    assert got.to_float() == pytest.approx(AI_ZERO, abs=1e-12)
    assert AI_ZERO == pytest.approx(0.35502805388781723926, abs=1e-15)


def test_absolute_accuracy_small_arguments():
    for k in range(-100, 101):
        x = k / 10.0
        assert airy_ai(x).value == pytest.approx(_ref(x), abs=1e-10)


def test_relative_accuracy_decaying_side():
    for x in (10.0, 15.0, 25.0, 50.0):
        assert airy_ai_scaled(x)[0].to_float() == pytest.approx(_ref(x), rel=1e-8)


def test_envelope_relative_accuracy_oscillatory_side():
    for x in (-10.0, -12.5, -20.0, -40.0):
        env = 1.0 / (math.sqrt(math.pi) * (-x) ** 0.25)
        assert abs(airy_ai(x).value - _ref(x)) <= 1e-8 * env


def test_method_overlap_windows():
    # series and asymptotics must agree across the switch on both sides
    for x in (5.0, 6.0, 6.9, 7.1, 8.0, 9.0):
        assert airy_ai(x).value == pytest.approx(_ref(x), rel=1e-9)
    for x in (-5.0, -6.0, -6.9, -7.1, -8.0, -9.0):
        assert airy_ai(x).value == pytest.approx(_ref(x), abs=1e-10)


def test_switch_point_continuity():
    below = airy_ai(7.0 - 1e-9).value
    above = airy_ai(7.0 + 1e-9).value
    assert below == pytest.approx(above, rel=1e-7)


def test_ode_five_point_stencil():
    # Ai'' = x Ai, checked with a 4th-order central difference
    h = 1e-3
    for x0 in (-8.0, -3.0, 0.5, 3.0, 8.0):
        v = [airy_ai(x0 + k * h).value for k in (-2, -1, 0, 1, 2)]
        d2 = (-v[0] + 16 * v[1] - 30 * v[2] + 16 * v[3] - v[4]) / (12 * h * h)
        assert d2 == pytest.approx(x0 * v[2], abs=1e-6)


def test_first_zero_location():
    lo, hi = -2.4, -2.3
    flo = airy_ai(lo).value
    assert flo * airy_ai(hi).value < 0.0
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        fm = airy_ai(mid).value
        if flo * fm <= 0.0:
            hi = mid
        else:
            lo, flo = mid, fm
    assert 0.5 * (lo + hi) == pytest.approx(-2.33810741045976703849, abs=1e-10)


def test_no_underflow_deep_decay():
    v, method = airy_ai_scaled(500.0)
    assert method == "asymptotic-positive"
    # double arithmetic would underflow: log Ai(500) ~ -7453
    assert v.log_abs() < -7000.0
    assert v.to_float() == 0.0  # collapsing is the caller's informed choice


def test_rejects_nonfinite():
    with pytest.raises(DomainError):
        airy_ai_scaled(math.nan)
