"""Closed-form approximations to |F(t)| and the near-critical scaling map."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .model import LAMBDA_C, ChainParams, ParameterError, dressed_lambdas, mode_grid
from .spectrum import mode_spectrum

_SINGULAR = 1e-12


class SingularityError(ParameterError):
    """A closed form is evaluated exactly at one of its poles."""


class RegimeWarning(UserWarning):
    """Parameters sit outside the regime an approximation was derived for."""


def cutoff_energy_sum(N: int, K_c: int) -> float:
    """E(K_c) = sum_{k=1}^{K_c} (2 pi k / N)^2 = 4 pi^2 K_c (K_c+1)(2K_c+1) / (6 N^2)."""
    if not 1 <= K_c <= (N - 1) // 2:
        raise ParameterError(f"K_c must lie in 1..{(N - 1) // 2}, got {K_c}")
    return 4.0 * math.pi**2 * K_c * (K_c + 1) * (2 * K_c + 1) / (6.0 * N**2)


def default_cutoff(N: int) -> int:
    """Cutoff keeping K_c / N fixed at 1/40."""
    return max(1, round(N / 40))


def _weak_poles(p: ChainParams) -> tuple[float, float, float]:
    lam1, lam2, _, _ = dressed_lambdas(p)
    d, d1, d2 = p.lam - LAMBDA_C, lam1 - LAMBDA_C, lam2 - LAMBDA_C
    if min(abs(d), abs(d1), abs(d2)) < _SINGULAR:
        raise SingularityError("lambda, lambda+g and lambda-g must all differ from 1")
    return d, d1, d2


def weak_coupling_S(p: ChainParams, K_c: int, t, literal: bool = False):
    """Small-k, weak-coupling estimate of ln|F_c(t)| (k^4/N^4 terms dropped).

    The interference term carries cos((Omega_1 - Omega_2) t) with
    Omega_j ~ 2|lambda_j - 1|, and enters with a plus sign, which is what
    the exact per-mode form reduces to and what makes S ~ -tau t^2 at short
    times. ``literal=True`` instead uses cos(4 lambda t) with a minus sign.
    """
    d, d1, d2 = _weak_poles(p)
    E = cutoff_energy_sum(p.N, K_c)
    t = np.asarray(t, dtype=float)
    w1, w2 = 2.0 * abs(d1), 2.0 * abs(d2)
    sin1, sin2 = np.sin(w1 * t), np.sin(w2 * t)
    if literal:
        cross = -2.0 * abs(d1 * d2) * sin1 * sin2 * np.cos(4.0 * p.lam * t)
    else:
        cross = 2.0 * abs(d1 * d2) * sin1 * sin2 * np.cos((w1 - w2) * t)
    bracket = d2**2 * sin1**2 + d1**2 * sin2**2 + cross
    return -0.5 * E * p.gamma**2 * p.g**2 / (d**2 * d1**2 * d2**2) * bracket


def gaussian_tau(p: ChainParams, K_c: int) -> float:
    """Rate of the short-time decay |F_c(t)| ~ exp(-tau t^2)."""
    d = p.lam - LAMBDA_C
    if abs(d) < _SINGULAR:
        raise SingularityError("tau diverges at lambda = 1; probe lambda = 1 +/- delta")
    return 8.0 * cutoff_energy_sum(p.N, K_c) * p.gamma**2 * p.g**2 / d**2


@dataclass(frozen=True)
class StrongCouplingModel:
    """Gaussian-envelope description of |F| for g >> 1.

    Attributes
    ----------
    N : int
    omega_bar : ndarray
        Omega_k(lambda+g) + Omega_k(lambda-g) per grid mode.
    omega_mean : float
        Mean of ``omega_bar`` over the grid.
    delta_k : ndarray
        ``omega_bar - omega_mean``.
    sin2a1 : ndarray
        sin(2 alpha_k) of branch 1.
    s2 : float
        sum_k sin^2(2 alpha_k) delta_k^2.
    omega_asymptotic : float
        4 g + gamma^2 / g.
    delta_asymptotic : ndarray
        -(gamma^2 / g) cos(4 pi k / N).
    alpha_gap : ndarray
        alpha_k(branch 1) - alpha_k(branch 2); tends to -pi/2 as g grows.
    """

    N: int
    omega_bar: np.ndarray
    omega_mean: float
    delta_k: np.ndarray
    sin2a1: np.ndarray
    s2: float
    omega_asymptotic: float
    delta_asymptotic: np.ndarray
    alpha_gap: np.ndarray

    @property
    def width(self) -> float:
        return 1.0 / math.sqrt(self.s2) if self.s2 > 0 else math.inf

    @property
    def period(self) -> float:
        return math.pi / self.omega_mean


def strong_coupling_model(p: ChainParams) -> StrongCouplingModel:
    if p.g <= 0:
        raise ParameterError("strong-coupling model needs g > 0")
    if p.g < 10.0 * max(1.0, abs(p.lam), p.gamma):
        warnings.warn(f"g={p.g} is not large against the chain scales", RegimeWarning, stacklevel=2)
    lam1, lam2, _, _ = dressed_lambdas(p)
    sp1 = mode_spectrum(p, lam1)
    sp2 = mode_spectrum(p, lam2)
    omega_bar = sp1.omega + sp2.omega
    omega_mean = float(np.mean(omega_bar))
    delta = omega_bar - omega_mean
    sin2a1 = np.sin(2.0 * sp1.alpha)
    k = mode_grid(p)
    return StrongCouplingModel(
        N=p.N,
        omega_bar=omega_bar,
        omega_mean=omega_mean,
        delta_k=delta,
        sin2a1=sin2a1,
        s2=float(np.sum(sin2a1**2 * delta**2)),
        omega_asymptotic=4.0 * p.g + p.gamma**2 / p.g,
        delta_asymptotic=-(p.gamma**2 / p.g) * np.cos(4.0 * np.pi * k / p.N),
        alpha_gap=sp1.alpha - sp2.alpha,
    )


def gaussian_envelope(m: StrongCouplingModel, t):
    t = np.asarray(t, dtype=float)
    return np.exp(-0.5 * m.s2 * t**2)


def strong_coupling_envelope(m: StrongCouplingModel, N: int, t):
    """exp(-s2 t^2 / 2) |cos(Omega t)|^((N-1)/2)."""
    t = np.asarray(t, dtype=float)
    return gaussian_envelope(m, t) * np.abs(np.cos(m.omega_mean * t)) ** ((N - 1) // 2)


def width_scaling(p: ChainParams) -> float:
    """Gaussian width 1/s_N; scales roughly as g gamma^-2 N^-1/2."""
    return strong_coupling_model(p).width


def scaling_transform(p: ChainParams, alpha: float, delta: float | None = None,
                      mode: str = "size") -> tuple[ChainParams, Callable]:
    """Image of ``p`` under t -> t/alpha, delta -> alpha delta, g -> alpha g, gamma/N -> alpha gamma/N.

    ``delta`` is the distance 1 - lambda and defaults to the one in ``p``.
    ``mode`` picks how gamma/N is rescaled: "size" grows the chain,
    M -> round(M / alpha), at fixed gamma; "gamma" scales gamma at fixed N.
    Returns the new parameters and the time map t -> t / alpha.
    """
    if not alpha > 0:
        raise ParameterError(f"alpha must be > 0, got {alpha}")
    if delta is None:
        delta = LAMBDA_C - p.lam
    if mode == "size":
        M = max(1, round(p.M / alpha))
        image = ChainParams(N=2 * M + 1, gamma=p.gamma, lam=LAMBDA_C - alpha * delta, g=alpha * p.g)
    elif mode == "gamma":
        image = ChainParams(N=p.N, gamma=alpha * p.gamma, lam=LAMBDA_C - alpha * delta, g=alpha * p.g)
    else:
        raise ParameterError(f"mode must be 'size' or 'gamma', got {mode!r}")
    if abs(delta) > 0.1 or p.g > 0.1:
        warnings.warn("scaling holds only near criticality at weak coupling", RegimeWarning, stacklevel=2)
    return image, lambda t: np.asarray(t, dtype=float) / alpha
