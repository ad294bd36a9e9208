import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from xychain.model import ChainParams, ParameterError, TwoQubitInitial, dressed_fields, dressed_lambdas, mode_grid


@pytest.mark.parametrize(
    "lam, g, expected",
    [
        (1.0, 0.05, (1.05, 0.95, 1.0, 1.0)),
        (1.0, 0.0, (1.0, 1.0, 1.0, 1.0)),
        (1.0, 500.0, (501.0, -499.0, 1.0, 1.0)),
    ],
)
def test_dressed_lambdas(lam, g, expected):
    assert dressed_lambdas(ChainParams(201, 1.0, lam, g)) == pytest.approx(expected, abs=0, rel=1e-15)


def test_dressed_fields_branches():
    fields = dressed_fields(ChainParams(5, 1.0, 0.7, 0.2))
    assert [f.branch for f in fields] == [1, 2, 3, 4]
    assert fields[2].value == fields[3].value == 0.7


@given(lam=st.floats(-5, 5), g=st.floats(0, 1e3))
def test_branches_one_and_two_average_to_lambda(lam, g):
    l1, l2, _, _ = dressed_lambdas(ChainParams(3, 1.0, lam, g))
    assert l1 + l2 == pytest.approx(2 * lam, abs=1e-12 * (1 + g))


def test_mode_grid_examples():
    assert mode_grid(ChainParams(5, 1.0, 1.0, 0.1)).tolist() == [1, 2]
    assert mode_grid(ChainParams(201, 1.0, 1.0, 0.1)).tolist() == list(range(1, 101))


@pytest.mark.parametrize("N", [4, 2, 1, 0, -3, 10])
def test_bad_sizes_rejected(N):
    with pytest.raises(ParameterError):
        ChainParams(N, 1.0, 1.0, 0.1)


@given(M=st.integers(1, 500_000))
def test_mode_grid_length(M):
    N = 2 * M + 1
    k = mode_grid(ChainParams(N, 1.0, 1.0, 0.1))
    assert len(k) == (N - 1) // 2
    assert k[0] == 1 and k[-1] == M


@pytest.mark.parametrize("kw", [dict(gamma=-0.1), dict(g=-1.0), dict(lam=math.nan), dict(gamma=math.inf)])
def test_bad_fields_rejected(kw):
    base = dict(N=11, gamma=1.0, lam=1.0, g=0.1)
    base.update(kw)
    with pytest.raises(ParameterError):
        ChainParams(**base)


def test_two_qubit_initial_normalisation():
    TwoQubitInitial.bell()
    TwoQubitInitial(0.6, 0.8j)
    with pytest.raises(ParameterError):
        TwoQubitInitial(1.0, 0.1)


def test_params_are_values():
    p = ChainParams(11, 1, 1, 0)
    assert isinstance(p.gamma, float) and p.M == 5
    assert p.with_(g=0.5) == ChainParams(11, 1.0, 1.0, 0.5)
    assert np.isscalar(p.lam)
