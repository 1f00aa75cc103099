import math

import pytest
from hypothesis import given, strategies as st

from hypasym.errors import DomainError
from hypasym.scaled import ScaledComplex, ScaledReal, normalize, scaled_from_log

finite = st.floats(
    min_value=-1e12, max_value=1e12, allow_nan=False, allow_infinity=False
)
nonzero = finite.filter(lambda x: abs(x) > 1e-12)


@given(finite, st.integers(min_value=-500, max_value=500))
def test_normalize_idempotent(sig, exp):
    a = normalize(ScaledReal(sig, exp))
    b = normalize(a)
    assert a.sig == b.sig and a.exp == b.exp


@given(nonzero, st.integers(min_value=-500, max_value=500))
def test_normalized_range(sig, exp):
    a = normalize(ScaledReal(sig, exp))
    assert 1.0 <= abs(a.sig) < math.e


@given(nonzero, nonzero)
def test_mul_matches_float(x, y):
    got = (ScaledReal.from_float(x) * ScaledReal.from_float(y)).to_float()
    assert got == pytest.approx(x * y, rel=1e-14)


@given(nonzero, nonzero)
def test_div_matches_float(x, y):
    got = (ScaledReal.from_float(x) / ScaledReal.from_float(y)).to_float()
    assert got == pytest.approx(x / y, rel=1e-14)


@given(nonzero, nonzero)
def test_add_matches_float(x, y):
    got = (ScaledReal.from_float(x) + ScaledReal.from_float(y)).to_float()
    # near-total cancellation legitimately loses relative accuracy: the
    # normalized significands each carry ~1 ulp of rounding
    assert got == pytest.approx(x + y, rel=1e-13, abs=1e-14 * (abs(x) + abs(y)))


@given(nonzero, nonzero)
def test_add_then_sub_roundtrip(x, y):
    a = ScaledReal.from_float(x)
    b = ScaledReal.from_float(y)
    back = ((a + b) - b).to_float()
    # the roundtrip loses at most the usual absorption error of the addition
    assert back == pytest.approx(x, rel=1e-12, abs=1e-12 * abs(y))


def test_from_log_huge_magnitudes():
    a = ScaledReal.from_log(50000.0)
    b = ScaledReal.from_log(-50000.0)
    assert (a * b).to_float() == pytest.approx(1.0, rel=1e-12)
    assert a.log_abs() == pytest.approx(50000.0, abs=1e-9)


def test_add_absorbs_tiny_addend():
    big = ScaledReal.from_log(100.0)
    tiny = ScaledReal.from_log(-100.0)
    s = big + tiny
    assert s.log_abs() == pytest.approx(100.0, abs=1e-12)


def test_sqrt_and_negative_sqrt():
    v = ScaledReal.from_log(301.0)
    assert v.sqrt().log_abs() == pytest.approx(150.5, abs=1e-12)
    with pytest.raises(DomainError):
        (-v).sqrt()


def test_comparisons():
    a = ScaledReal.from_float(3.0)
    b = ScaledReal.from_log(200.0)
    assert a < b
    assert not (b < a)
    assert a <= a


def test_complex_product_matches_cmath():
    z = complex(1.5, -2.5)
    w = complex(-0.25, 4.0)
    got = (ScaledComplex.from_complex(z) * ScaledComplex.from_complex(w)).to_complex()
    assert got == pytest.approx(z * w, rel=1e-14)


def test_complex_abs_and_phase():
    z = scaled_from_log(-1000.0, 2.0)
    assert z.abs().log_abs() == pytest.approx(-1000.0, abs=1e-10)
    assert z.phase() == pytest.approx(2.0, abs=1e-12)


def test_scaled_from_log_rejects_nonfinite():
    with pytest.raises(DomainError):
        scaled_from_log(math.inf, 0.0)
    with pytest.raises(DomainError):
        scaled_from_log(0.0, math.nan)


def test_zero_behaviour():
    z = ScaledReal.zero()
    assert z.is_zero()
    assert (z + ScaledReal.from_float(2.0)).to_float() == 2.0
    with pytest.raises(DomainError):
        z.log_abs()
    with pytest.raises(ZeroDivisionError):
        ScaledReal.from_float(1.0) / z
