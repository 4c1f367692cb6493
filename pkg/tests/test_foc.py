import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from csrgame import foc
from csrgame.foc import CostateTriple, MultiplierPair, PeriodDecision
from csrgame.model import example_params

P = example_params()
ZERO = CostateTriple(0.0, 0.0, 0.0)


# Independent oracle: per-period Hamiltonians built from the objectives and
# the state equation, differentiated by central differences.

def period_investment_terms(dec, p):
    total = sum(dec)
    tax = [p.tau * i * (1 + p.theta * total) for i in dec]
    js = tax[0] - dec.i_s + p.d * dec.i_m
    jm = tax[1] - dec.i_m + p.d_hat * dec.i_r
    jr = tax[2] - dec.i_r
    return js, jm, jr


def retailer_hamiltonian(i_r, i_s, i_m, p_next, p):
    dec = PeriodDecision(i_s, i_m, i_r)
    return period_investment_terms(dec, p)[2] + p_next.p_r * foc.state_step(0.0, dec, p)


def manufacturer_hamiltonian(i_m, i_s, p_next, p):
    i_r = foc.retailer_reaction(i_s, i_m, p_next.p_r, p)
    dec = PeriodDecision(i_s, i_m, i_r)
    return period_investment_terms(dec, p)[1] + p_next.p_m * foc.state_step(0.0, dec, p)


def supplier_hamiltonian(i_s, p_next, p):
    i_m = foc.manufacturer_reaction(i_s, p_next.p_m, p_next.p_r, p)
    i_r = foc.retailer_reaction(i_s, i_m, p_next.p_r, p)
    dec = PeriodDecision(i_s, i_m, i_r)
    return period_investment_terms(dec, p)[0] + p_next.p_s * foc.state_step(0.0, dec, p)


def central_diff(f, x, h=1.0):
    # Exact for quadratics up to rounding.
    return (f(x + h) - f(x - h)) / (2 * h)


def test_retailer_reaction_examples():
    assert foc.retailer_reaction(0, 0, 0, P) == pytest.approx(200, abs=1e-9)
    assert foc.retailer_reaction(0, 0, 1, P) == pytest.approx(0, abs=1e-9)
    assert foc.retailer_reaction(200, 200, 0, P) == pytest.approx(0, abs=1e-9)


def test_manufacturer_reaction_examples():
    assert foc.manufacturer_reaction(0, 0, 0, P) == pytest.approx(300, abs=1e-9)
    p = P.replace(d_hat=P.tau - 1)
    assert foc.manufacturer_reaction(0, 0, 0, p) == pytest.approx(0, abs=1e-9)
    assert foc.manufacturer_reaction(700, 0, 0, P) == pytest.approx(-50, abs=1e-9)


def test_supplier_reaction_examples():
    assert foc.supplier_reaction(0, 0, 0, P) == pytest.approx(700, abs=1e-9)
    assert foc.supplier_reaction(1, 0, 0, P) == pytest.approx(850, abs=1e-9)
    p = P.replace(d=(3 * P.tau + P.d_hat - 3) / 2)
    assert foc.supplier_reaction(0, 0, 0, p) == pytest.approx(0, abs=1e-9)


def test_state_step_examples():
    assert foc.state_step(1, PeriodDecision(0, 0, 0), P) == pytest.approx(0.8)
    assert foc.state_step(0, PeriodDecision(1, 1, 1), P) == pytest.approx(1.6)
    assert foc.state_step(1, PeriodDecision(700, -50, -125), P) == pytest.approx(85.8, abs=1e-12)


def test_adjoint_step_examples():
    assert foc.adjoint_step(0, MultiplierPair(0, 0), ZERO, P) == (0, 0, 0)
    assert foc.adjoint_step(1, MultiplierPair(0, 0), ZERO, P) == pytest.approx((0.4, 0.4, 0.4))
    got = foc.adjoint_step(0, MultiplierPair(1, 1), ZERO, P)
    assert got.p_s == pytest.approx(0.8)
    assert got.p_m == pytest.approx(0.4)
    assert got.p_r == 0


def test_adjoint_coefficients_form_printed_c():
    p = P.replace(delta=0.1, delta_hat=0.3, delta_hathat=0.7)
    cols = [foc.adjoint_step(*args, ZERO, p) for args in
            ((1, MultiplierPair(0, 0)), (0, MultiplierPair(1, 0)), (0, MultiplierPair(0, 1)))]
    C = np.array(cols).T
    expected = 2 * np.array([[0.1, 0.3, 0.7], [0.3, 0, 0.7], [0.7, 0, 0]])
    np.testing.assert_allclose(C, expected, atol=1e-15)


def test_multiplier_step_examples():
    got = foc.multiplier_step(MultiplierPair(0, 0), PeriodDecision(0, 0, 0), ZERO, P)
    assert got.u == pytest.approx(-80)
    assert got.mu == pytest.approx(-20)
    p0 = P.replace(d=0.0, d_hat=0.0)
    got = foc.multiplier_step(MultiplierPair(1, 1), PeriodDecision(0, 0, 0), ZERO, p0)
    assert got == pytest.approx((0.8, 0.8))
    got = foc.multiplier_step(MultiplierPair(0, 0), PeriodDecision(0, 100, 0), ZERO, p0)
    assert got.u == pytest.approx(-40)
    assert got.mu == 0


def test_residuals_vanish_on_reaction_chain():
    p_next = CostateTriple(0.3, -1.2, 2.5)
    dec = foc.reaction_chain(p_next, P)
    res = foc.stationarity_residuals(1.0, dec, MultiplierPair(0.1, 0.2), p_next, P)
    assert np.max(np.abs(res)) <= 1e-12


def test_retailer_residual_slope_and_value():
    r0 = foc.stationarity_residuals(0, PeriodDecision(0, 0, 0), MultiplierPair(0, 0), ZERO, P)[2]
    # dH^R/dI^R at zero is tau - 1.
    assert r0 == pytest.approx(-(1 - P.tau))
    p_next = CostateTriple(0.1, 0.2, 0.3)
    dec = foc.reaction_chain(p_next, P)
    eps = 7.0
    bumped = dec._replace(i_r=dec.i_r + eps)
    r = foc.stationarity_residuals(0, bumped, MultiplierPair(0, 0), p_next, P)[2]
    assert r == pytest.approx(2 * P.tau * P.theta * eps, rel=1e-9)


def test_retailer_residual_matches_hamiltonian_derivative():
    p_next = CostateTriple(0.5, -0.4, 1.7)
    i_s, i_m, i_r = 120.0, -40.0, 33.0
    fd = central_diff(lambda v: retailer_hamiltonian(v, i_s, i_m, p_next, P), i_r)
    res = foc.stationarity_residuals(0, PeriodDecision(i_s, i_m, i_r), MultiplierPair(0, 0),
                                     p_next, P)[2]
    assert res == pytest.approx(fd, rel=1e-8, abs=1e-10)


def test_manufacturer_residual_matches_hamiltonian_derivative():
    p_next = CostateTriple(0.5, -0.4, 1.7)
    i_s, i_m = 120.0, 80.0
    fd = central_diff(lambda v: manufacturer_hamiltonian(v, i_s, p_next, P), i_m)
    i_r = foc.retailer_reaction(i_s, i_m, p_next.p_r, P)
    res = foc.stationarity_residuals(0, PeriodDecision(i_s, i_m, i_r), MultiplierPair(0, 0),
                                     p_next, P)[1]
    assert res == pytest.approx(fd, rel=1e-8, abs=1e-10)


def test_supplier_reaction_costate_slopes_match_hamiltonian():
    # The costate coefficients of the closed-form supplier reaction agree with
    # the root of dH^S/dI^S; only the constant term differs (see README).
    def fd_root(p_next):
        g0 = central_diff(lambda v: supplier_hamiltonian(v, p_next, P), 0.0)
        g1 = central_diff(lambda v: supplier_hamiltonian(v, p_next, P), 1.0)
        return -g0 / (g1 - g0)

    base = fd_root(ZERO)
    for j in range(3):
        e = CostateTriple(*(float(i == j) for i in range(3)))
        slope_fd = fd_root(e) - base
        slope = foc.supplier_reaction(*e, P) - foc.supplier_reaction(*ZERO, P)
        assert slope == pytest.approx(slope_fd, rel=1e-6)
    tt = P.tau * P.theta
    assert base == pytest.approx((1 - P.tau + 2 * P.d - P.d_hat) / (2 * tt), rel=1e-6)


def test_own_curvatures_positive():
    s, m, r = foc.own_curvatures(P)
    assert r == pytest.approx(2 * P.tau * P.theta)
    hr = lambda v: retailer_hamiltonian(v, 0.0, 0.0, ZERO, P)
    assert (hr(1.0) - 2 * hr(0.0) + hr(-1.0)) == pytest.approx(r)
    hm = lambda v: manufacturer_hamiltonian(v, 0.0, ZERO, P)
    assert (hm(1.0) - 2 * hm(0.0) + hm(-1.0)) == pytest.approx(m)
    hs = lambda v: supplier_hamiltonian(v, ZERO, P)
    assert (hs(1.0) - 2 * hs(0.0) + hs(-1.0)) == pytest.approx(s)


def _affine_ok(f, n):
    # f(e_j) - f(0) recovers coefficients; check f(v) = f(0) + sum v_j * coef_j.
    z = np.zeros(n)
    f0 = np.asarray(f(*z), dtype=float)
    coefs = [np.asarray(f(*np.eye(n)[j]), dtype=float) - f0 for j in range(n)]
    v = np.array([0.7, -2.3, 5.1, 0.4, -1.1, 3.3][:n])
    expected = f0 + sum(v[j] * coefs[j] for j in range(n))
    np.testing.assert_allclose(np.asarray(f(*v), dtype=float), expected, rtol=1e-10, atol=1e-9)


def test_reactions_are_affine():
    _affine_ok(lambda a, b, c: foc.retailer_reaction(a, b, c, P), 3)
    _affine_ok(lambda a, b, c: foc.manufacturer_reaction(a, b, c, P), 3)
    _affine_ok(lambda a, b, c: foc.supplier_reaction(a, b, c, P), 3)


finite = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False)


@settings(max_examples=200, deadline=None)
@given(p_s=finite, p_m=finite, p_r=finite,
       tau=st.floats(0.05, 0.5), theta=st.floats(0.001, 0.05),
       b1=st.floats(0, 1), b2=st.floats(0, 1), b3=st.floats(0, 1))
def test_root_property(p_s, p_m, p_r, tau, theta, b1, b2, b3):
    p = P.replace(tau=tau, theta=theta, beta1=b1, beta2=b2, beta3=b3)
    p_next = CostateTriple(p_s, p_m, p_r)
    dec = foc.reaction_chain(p_next, p)
    res = foc.stationarity_residuals(0.0, dec, MultiplierPair(0, 0), p_next, p)
    scale = foc.residual_scales(dec, p_next, p)
    for r, s in zip(res, scale):
        assert abs(r) <= 1e-10 * (1 + s)


@settings(max_examples=50, deadline=None)
@given(st.floats(0.01, 0.99), st.floats(0, 1), st.floats(0, 1), st.floats(0, 1))
def test_terminal_propagation(alpha, d1, d2, d3):
    p = P.replace(alpha=alpha, delta=d1, delta_hat=d2, delta_hathat=d3)
    assert foc.adjoint_step(0.0, MultiplierPair(0, 0), ZERO, p) == (0, 0, 0)
