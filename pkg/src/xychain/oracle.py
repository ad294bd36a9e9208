"""Brute-force validation path.

Each (k, -k) fermion pair is evolved in its even-parity subspace
{|0_k 0_-k>, |1_k 1_-k>} with explicit 2x2 propagators. Nothing here uses
Bogoliubov angles; the pair Hamiltonian is built directly from the field,
the anisotropy and the momentum.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import ChainParams, ParameterError, mode_grid

_SY = np.array([[0, -1j], [1j, 0]])
_SYSY = np.kron(_SY, _SY)


class ValidationError(ValueError):
    """Input fails a physical-validity check (Hermiticity, trace, positivity)."""


@dataclass(frozen=True)
class PairBlock:
    k: int
    h: np.ndarray


def _pair_components(p: ChainParams, fld: float, k):
    """Pauli components (h_y, h_z) of the traceless pair Hamiltonian."""
    q = 2.0 * np.pi * np.asarray(k, dtype=float) / p.N
    eps = fld - np.cos(q)
    return -2.0 * p.gamma * np.sin(q), -2.0 * eps


def pair_block(p: ChainParams, fld: float, k: int) -> PairBlock:
    """H = [[-2 eps, 2i gamma sin q], [-2i gamma sin q, 2 eps]]."""
    hy, hz = _pair_components(p, fld, k)
    h = np.array([[hz, -1j * hy], [1j * hy, -hz]], dtype=complex)
    return PairBlock(int(k), h)


def _ground_vectors(hy, hz):
    """Normalised eigenvectors of h_y sy + h_z sz with eigenvalue -|h|, shape (..., 2)."""
    hy, hz = np.broadcast_arrays(np.asarray(hy, float), np.asarray(hz, float))
    r = np.hypot(hy, hz)
    # (h + r) v = 0 with h01 = -i hy: two equivalent null vectors, pick the better conditioned
    va = np.stack([1j * hy, hz + r], axis=-1)
    vb = np.stack([r - hz, -1j * hy], axis=-1)
    v = np.where((hz <= 0)[..., None], vb, va)
    n = np.linalg.norm(v, axis=-1, keepdims=True)
    zero = n[..., 0] == 0
    v = np.where(zero[..., None], np.array([1.0, 0.0]), v / np.where(n == 0, 1.0, n))
    return v


def ground_state(block: PairBlock) -> np.ndarray:
    h = block.h
    return _ground_vectors(h[1, 0].imag, h[0, 0].real)


def _propagators(hy, hz, t):
    """exp(-i h t) for h = hy sy + hz sz, shape (..., 2, 2), closed form."""
    r = np.hypot(hy, hz)
    c = np.cos(r * t)
    s = np.sinc(r * t / np.pi) * t  # sin(r t) / r, finite at r = 0
    u = np.empty(np.broadcast(r, t).shape + (2, 2), dtype=complex)
    u[..., 0, 0] = c - 1j * s * hz
    u[..., 1, 1] = c + 1j * s * hz
    # -i s (hy sy)_{01} = -i s (-i hy) = -s hy
    u[..., 0, 1] = -s * hy
    u[..., 1, 0] = s * hy
    return u


def propagator(block: PairBlock, t: float) -> np.ndarray:
    h = block.h
    return _propagators(h[1, 0].imag, h[0, 0].real, t)


def _overlaps(p: ChainParams, k, t: float, ref_field: float) -> np.ndarray:
    lam1, lam2 = p.lam + p.g, p.lam - p.g
    g0 = _ground_vectors(*_pair_components(p, ref_field, k))
    u1 = _propagators(*_pair_components(p, lam1, k), t)
    u2 = _propagators(*_pair_components(p, lam2, k), t)
    psi1 = np.einsum("...ij,...j->...i", u1, g0)
    psi2 = np.einsum("...ij,...j->...i", u2, g0)
    # <g| U2^dagger U1 |g> = <U2 g | U1 g>
    return np.einsum("...i,...i->...", psi2.conj(), psi1)


def _reference_field(p: ChainParams, reference: str) -> float:
    if reference == "lambda":
        return p.lam
    if reference == "lambda2":
        return p.lam - p.g
    raise ParameterError(f"unknown reference {reference!r}")


def oracle_mode_factor(p: ChainParams, k: int, t: float, reference: str = "lambda") -> complex:
    """<g_k| exp(+i H2 t) exp(-i H1 t) |g_k> for one pair."""
    if not 1 <= k <= p.M:
        raise ParameterError(f"k must lie in 1..{p.M}")
    return complex(_overlaps(p, k, t, _reference_field(p, reference)))


def oracle_mode_moduli(p: ChainParams, t: float, reference: str = "lambda") -> np.ndarray:
    return np.abs(_overlaps(p, mode_grid(p), t, _reference_field(p, reference)))


def oracle_decoherence(p: ChainParams, t: float, reference: str = "lambda") -> float:
    """|F(t)| as the product of per-pair overlap moduli (log domain when needed)."""
    mod = oracle_mode_moduli(p, t, reference)
    if mod.min() < 1e-6:
        with np.errstate(divide="ignore"):
            return float(np.exp(np.sum(np.log(mod))))
    return float(np.prod(mod))


def _check_density_matrix(rho: np.ndarray, tol: float) -> None:
    if rho.shape != (4, 4):
        raise ValidationError(f"expected a 4x4 matrix, got shape {rho.shape}")
    if np.max(np.abs(rho - rho.conj().T)) > tol:
        raise ValidationError("density matrix is not Hermitian")
    if abs(np.trace(rho) - 1.0) > tol:
        raise ValidationError("density matrix trace differs from 1")
    if np.linalg.eigvalsh(rho).min() < -tol:
        raise ValidationError("density matrix is not positive semidefinite")


def wootters_concurrence(rho4: np.ndarray, tol: float = 1e-10) -> float:
    """Two-qubit concurrence max(0, l1 - l2 - l3 - l4).

    The l_i are the decreasing square roots of the eigenvalues of
    rho (sy x sy) rho* (sy x sy). With rho = W W^dagger they equal the
    singular values of W^T (sy x sy) W, which stays accurate for
    rank-deficient (e.g. pure) states.
    """
    rho = np.asarray(rho4, dtype=complex)
    _check_density_matrix(rho, tol)
    w, v = np.linalg.eigh(0.5 * (rho + rho.conj().T))
    W = v * np.sqrt(np.clip(w, 0.0, None))
    lam = np.linalg.svd(W.T @ _SYSY @ W, compute_uv=False)
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))
