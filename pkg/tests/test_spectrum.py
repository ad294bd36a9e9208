import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import mp_oracle  # noqa: F401  (sets mpmath precision)
import mpmath as mp

from xychain.model import ChainParams
from xychain.spectrum import (
    alpha,
    epsilon,
    mode_spectrum,
    omega,
    sin_two_alpha_closed,
    small_k_omegas,
    theta,
)

ISING = ChainParams(201, 1.0, 1.0, 0.05)


def test_epsilon_examples():
    assert epsilon(ISING, 1.0, 0) == 0.0
    vals = epsilon(ISING, 2.0, np.arange(0, 101))
    assert np.all((vals >= 1) & (vals <= 3))
    ref = mp.mpf("1.05") - mp.cos(2 * mp.pi / 201)
    assert epsilon(ISING, 1.05, 1) == pytest.approx(float(ref), rel=1e-14)
    # quoted elsewhere as 0.0504884 (truncated, not rounded)
    assert float(ref) == pytest.approx(0.0504885, abs=1e-7)


def test_omega_examples():
    p0 = ISING.with_(gamma=0.0)
    k = np.arange(1, 101)
    assert np.allclose(omega(p0, 0.7, k), 2 * np.abs(epsilon(p0, 0.7, k)), rtol=0, atol=1e-15)
    assert omega(ISING, 1.0, 0) == 0.0
    q = 2 * mp.pi / 201
    ref = 2 * mp.sqrt((mp.mpf("1.05") - mp.cos(q)) ** 2 + mp.sin(q) ** 2)
    assert omega(ISING, 1.05, 1) == pytest.approx(float(ref), rel=1e-14)
    assert float(ref) == pytest.approx(0.11875, abs=1e-5)
    assert float(mp.sin(q)) == pytest.approx(0.0312545, abs=1e-7)


def test_theta_examples():
    p0 = ISING.with_(gamma=0.0)
    assert theta(p0, 2.0, 5) == 0.0
    assert theta(p0, 0.0, 5) == pytest.approx(np.pi, abs=0)
    # eps = 0 at k where cos(q) = fld
    k = 7
    fld = float(np.cos(2 * np.pi * k / 201))
    assert theta(ISING, fld, k) == pytest.approx(np.pi / 2, abs=1e-15)
    assert theta(ISING, 1.0, 0) == 0.0


def test_alpha_examples():
    k = np.arange(1, 101)
    assert np.all(alpha(ISING, ISING.lam, k) == 0.0)
    p0 = ChainParams(201, 0.0, 0.9, 0.3)
    s2a = np.sin(2 * alpha(p0, p0.lam + p0.g, k))
    assert np.all(np.abs(s2a) < 1e-15)
    a = alpha(ISING, 1.05, 1)
    assert -np.pi / 2 < a < 0
    q = 2 * mp.pi / 201
    th = lambda f: mp.atan2(2 * mp.sin(q), 2 * (mp.mpf(f) - mp.cos(q)))
    ref = (th("1.05") - th(1)) / 2
    assert a == pytest.approx(float(ref), rel=1e-13)
    assert float(ref) == pytest.approx(-0.50043147195955, rel=1e-12)


fields = st.floats(-3, 3, allow_nan=False)
gammas = st.floats(0, 1.5, allow_nan=False)
sizes = st.integers(1, 400).map(lambda m: 2 * m + 1)


@given(fld=fields, gamma=gammas, N=sizes, data=st.data())
def test_spectrum_invariants(fld, gamma, N, data):
    p = ChainParams(N, gamma, 1.0, 0.0)
    k = data.draw(st.integers(1, p.M))
    sp = mode_spectrum(p, fld, [k])
    q = 2 * np.pi * k / N
    assert sp.omega[0] ** 2 == pytest.approx(4 * (sp.eps[0] ** 2 + gamma**2 * np.sin(q) ** 2), rel=1e-12, abs=1e-300)
    assert np.cos(sp.theta[0]) * sp.omega[0] == pytest.approx(2 * sp.eps[0], abs=1e-12)
    assert 0.0 <= sp.theta[0] <= np.pi
    assert sp.omega[0] >= 2 * gamma * abs(np.sin(q)) * (1 - 1e-15)
    assert sp.omega[0] >= 2 * abs(sp.eps[0]) * (1 - 1e-15)


def test_theta_monotone_in_field():
    p = ChainParams(101, 0.6, 1.0, 0.0)
    f = np.linspace(-3, 3, 2001)
    for k in (1, 17, 50):
        th = np.array([theta(p, x, k) for x in f])
        # larger field -> larger eps -> smaller angle
        assert np.all(np.diff(th) < 0)


@settings(max_examples=300)
@given(lam=st.floats(0, 2), g=st.floats(0, 5), gamma=st.floats(0.0, 1.0), N=sizes, data=st.data())
def test_sin_two_alpha_identity(lam, g, gamma, N, data):
    p = ChainParams(N, gamma, lam, g)
    k = data.draw(st.integers(1, p.M))
    for branch, fld in ((1, lam + g), (2, lam - g)):
        if min(omega(p, fld, k), omega(p, lam, k)) <= 1e-8:
            continue
        lhs = np.sin(2 * alpha(p, fld, k))
        assert lhs == pytest.approx(sin_two_alpha_closed(p, branch, k), abs=1e-10)


def test_sin_two_alpha_branch_signs():
    # branch 1 is pushed to larger field: sin(2 alpha) < 0; branch 2 > 0
    k = np.arange(1, 101)
    assert np.all(np.sin(2 * alpha(ISING, 1.05, k)) < 0)
    assert np.all(np.sin(2 * alpha(ISING, 0.95, k)) > 0)


@given(delta=st.floats(-0.05, 0.05), g=st.floats(0, 0.05), gamma=st.floats(0.5, 1.0),
       N=st.integers(700, 4000).map(lambda m: 2 * m + 1), data=st.data())
def test_small_k_omegas_match_exact(delta, g, gamma, N, data):
    p = ChainParams(N, gamma, 1.0 - delta, g)
    kmax = int(0.01 * N / (2 * np.pi))
    k = data.draw(st.integers(1, kmax))
    approx = small_k_omegas(p, k)
    exact = (omega(p, p.lam + g, k), omega(p, p.lam - g, k), omega(p, p.lam, k))
    for a, e in zip(approx, exact):
        assert a == pytest.approx(e, rel=0.01)
