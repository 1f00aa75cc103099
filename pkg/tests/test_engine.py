import math

import pytest

from hypasym.engine import (
    cor1_envelope,
    cor2_f2,
    cor3_f2,
    evaluate,
    theorem_leading_2f1,
)
from hypasym.errors import DomainError
from hypasym.gammafn import gamma_prefactor
from hypasym.zetamap import Params, regime_width

from _reference import CASES, rel_diff


def test_cor2_matches_reference_cells():
    for case in (1, 2, 3, 5, 6):
        r, alpha, y = CASES[case]["params"]
        got = cor2_f2(Params(r, alpha, y)).to_complex()
        assert rel_diff(got, CASES[case]["cor2"]) <= 1e-6


def test_cor3_matches_reference_cells():
    for case in (1, 2, 3, 4, 5, 6):
        r, alpha, y = CASES[case]["params"]
        got = cor3_f2(Params(r, alpha, y)).to_complex()
        assert rel_diff(got, CASES[case]["cor3"]) <= 1e-6


def test_cor2_domain_gate():
    # the cosine form needs y above the turning point 1 - alpha^2
    with pytest.raises(DomainError):
        cor2_f2(Params(100.0, 0.1, 0.989))
    with pytest.raises(DomainError):
        cor2_f2(Params(100.0, 0.1, 0.5))


def test_cor1_domain_gate():
    with pytest.raises(DomainError):
        cor1_envelope(Params(100.0, 0.1, 0.9999))
    # just inside the turning zone is also rejected
    w = regime_width(100.0, 0.1)
    with pytest.raises(DomainError):
        cor1_envelope(Params(100.0, 0.1, 0.99 - 0.5 * w))


def test_bessel_form_rejects_turning_neighborhood():
    with pytest.raises(DomainError):
        theorem_leading_2f1(Params(100.0, 0.1, 0.99))


def test_phase_factor_is_unit_modulus():
    # on the monotonic side the bracket is real positive, so the argument of
    # the result is exactly that of (1-y)^{i r alpha} (modulo 2 pi)
    p = Params(100.0, 0.1, 0.5)
    v = theorem_leading_2f1(p)
    want = 100.0 * 0.1 * math.log(0.5)
    d = (v.phase() - want) / (2.0 * math.pi)
    assert d == pytest.approx(round(d), abs=1e-9)


def test_bessel_form_consistent_with_airy_form():
    # away from the turning point, bessel x prefactor and the airy form agree
    # at their shared leading order
    for y in (0.991, 0.9999):
        p = Params(100.0, 0.1, y)
        b = (theorem_leading_2f1(p) * gamma_prefactor(p.r, p.alpha)).to_complex()
        c = cor3_f2(p).to_complex()
        assert rel_diff(b, c) <= 0.05


def test_bessel_form_within_envelope_monotonic_side():
    p = Params(100.0, 0.1, 0.9)
    v = theorem_leading_2f1(p) * gamma_prefactor(p.r, p.alpha)
    env = cor1_envelope(p)
    assert v.abs().log_abs() <= env.log_abs() + math.log(3.0)


def test_cor2_cor3_coherence_above_turning():
    r, alpha = 100.0, 0.1
    w = regime_width(r, alpha)
    turn = 1.0 - alpha * alpha
    hi = min(turn + 10.0 * w, 1.0 - 1e-6)
    for k in range(5):
        y = turn + 2.0 * w + (hi - (turn + 2.0 * w)) * k / 4.0
        c2 = cor2_f2(Params(r, alpha, y))
        c3 = cor3_f2(Params(r, alpha, y))
        mag = math.exp(c3.abs().log_abs())
        diff = math.exp((c2 - c3).abs().log_abs())
        assert diff <= 0.3 * mag


def test_evaluate_dispatch_and_auto_policy():
    p_mono = Params(100.0, 0.1, 0.5)
    res = evaluate(p_mono, method="auto")
    assert res.method == "cor3"
    assert res.regime == "monotonic"
    assert res.envelope is not None

    p_osc = Params(100.0, 0.1, 0.9999)
    res = evaluate(p_osc, method="auto")
    assert res.regime == "oscillatory"
    assert res.envelope is None
    assert "cor2" in res.diagnostics

    with pytest.raises(DomainError):
        evaluate(p_osc, method="cor1")


def test_evaluate_unknown_method():
    with pytest.raises(DomainError):
        evaluate(Params(100.0, 0.1, 0.5), method="magic")


def test_evaluate_cor1_returns_envelope_only():
    res = evaluate(Params(100.0, 0.1, 0.5), method="cor1")
    assert res.value is None
    assert res.envelope is not None


def test_evaluate_oracle_route():
    res = evaluate(Params(100.0, 0.1, 0.991), method="oracle", digits=60)
    got = res.value.to_complex()
    assert rel_diff(got, CASES[2]["f2"]) <= 1e-6


def test_stirling_prefactor_mode_close_to_exact():
    p = Params(100.0, 0.1, 0.991)
    a = evaluate(p, method="bessel", prefactor_mode="exact-gamma").value
    b = evaluate(p, method="bessel", prefactor_mode="stirling-leading").value
    assert rel_diff(a.to_complex(), b.to_complex()) <= 1e-3
