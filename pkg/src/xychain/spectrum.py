"""Per-mode quasiparticle spectrum and Bogoliubov angles of the XY chain.

All functions broadcast over the mode index ``k`` (scalar or array).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import LAMBDA_C, ChainParams, dressed_lambdas, mode_grid


def momentum(p: ChainParams, k) -> np.ndarray:
    return 2.0 * np.pi * np.asarray(k, dtype=float) / p.N


def epsilon(p: ChainParams, fld: float, k):
    return fld - np.cos(momentum(p, k))


def pairing(p: ChainParams, k):
    """gamma * sin(2 pi k / N); non-negative on the mode grid."""
    return p.gamma * np.sin(momentum(p, k))


def omega(p: ChainParams, fld: float, k):
    return 2.0 * np.hypot(epsilon(p, fld, k), pairing(p, k))


def theta(p: ChainParams, fld: float, k):
    """Bogoliubov angle in [0, pi] with cos = 2 eps / Omega, sin = 2 gamma sin(q) / Omega.

    Returns 0 where Omega vanishes.
    """
    # + 0.0 turns a signed zero into +0 so atan2 never lands on -pi
    y = 2.0 * pairing(p, k) + 0.0
    return np.arctan2(y, 2.0 * epsilon(p, fld, k))


def alpha(p: ChainParams, fld_dressed: float, k):
    """Half the angle between the dressed and bare Bogoliubov rotations."""
    return 0.5 * (theta(p, fld_dressed, k) - theta(p, p.lam, k))


@dataclass(frozen=True)
class ModeSpectrum:
    """Spectrum of every grid mode for one field value."""

    field: float
    k: np.ndarray
    eps: np.ndarray
    omega: np.ndarray
    theta: np.ndarray
    alpha: np.ndarray


def mode_spectrum(p: ChainParams, fld: float, k=None) -> ModeSpectrum:
    k = mode_grid(p) if k is None else np.asarray(k)
    eps = epsilon(p, fld, k)
    gs = pairing(p, k)
    om = 2.0 * np.hypot(eps, gs)
    th = np.arctan2(2.0 * gs + 0.0, 2.0 * eps)
    return ModeSpectrum(fld, k, eps, om, th, 0.5 * (th - theta(p, p.lam, k)))


def branch_spectra(p: ChainParams) -> list[ModeSpectrum]:
    return [mode_spectrum(p, fld) for fld in dressed_lambdas(p)]


def sin_two_alpha_closed(p: ChainParams, branch: int, k):
    """sin(2 alpha_k) for branch 1 or 2 from the energies alone.

    Exact identity: -4 gamma g sin(q) / (Omega_j Omega) for branch 1 and the
    opposite sign for branch 2.
    """
    if branch not in (1, 2):
        raise ValueError("branch must be 1 or 2")
    fld = dressed_lambdas(p)[branch - 1]
    sign = -1.0 if branch == 1 else 1.0
    return sign * 4.0 * p.g * pairing(p, k) / (omega(p, fld, k) * omega(p, p.lam, k))


def small_k_omegas(p: ChainParams, k):
    """Small-momentum, near-critical approximations of (Omega_1, Omega_2, Omega).

    Valid when q = 2 pi k / N, |delta| = |1 - lambda| and g are all small.
    """
    delta = LAMBDA_C - p.lam
    gq2 = 4.0 * p.gamma**2 * np.pi**2 * np.asarray(k, dtype=float) ** 2 / p.N**2
    om1 = 2.0 * np.sqrt((delta - p.g) ** 2 + gq2)
    om2 = 2.0 * np.sqrt((delta + p.g) ** 2 + gq2)
    om = 2.0 * np.sqrt(delta**2 + gq2)
    return om1, om2, om


def small_k_sin_two_alpha(p: ChainParams, k):
    """sin(2 alpha_k) for branches 1 and 2 built from the small-k energies."""
    om1, om2, om = small_k_omegas(p, k)
    num = 4.0 * p.gamma * p.g * 2.0 * np.pi * np.asarray(k, dtype=float) / p.N
    return -num / (om1 * om), num / (om2 * om)
