"""Exact disentanglement factor of the qubit pair as a product over (k, -k) modes.

Two closed forms are implemented independently: the four-term complex
amplitude per mode (``factor_terms``) and the real square-root form
(``factor_moduli``). Their moduli agree to rounding; the engine reports the
former and tests hold it against the latter and against :mod:`xychain.oracle`.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .model import ChainParams, ParameterError, TwoQubitInitial, dressed_lambdas, mode_grid
from .spectrum import omega, theta

# Per-factor modulus below which |F| is accumulated in the log domain.
LOG_THRESHOLD = 1e-6
# Upper bound on (time points x modes) evaluated in one block.
BLOCK_ELEMENTS = 1 << 21

REFERENCES = ("lambda", "lambda2")


@dataclass(frozen=True)
class BranchTables:
    """Per-mode energies and mixing angles of the two dynamical branches."""

    k: np.ndarray
    omega1: np.ndarray
    omega2: np.ndarray
    alpha1: np.ndarray
    alpha2: np.ndarray

    def head(self, n: int) -> "BranchTables":
        return BranchTables(self.k[:n], self.omega1[:n], self.omega2[:n],
                            self.alpha1[:n], self.alpha2[:n])


def branch_tables(p: ChainParams, reference: str = "lambda", k=None) -> BranchTables:
    """Precompute (Omega, alpha) for branches 1 and 2.

    ``reference`` picks the initial chain state: the ground state of the bare
    chain ("lambda", default) or of the branch-2 chain ("lambda2").
    """
    if reference not in REFERENCES:
        raise ParameterError(f"reference must be one of {REFERENCES}, got {reference!r}")
    k = mode_grid(p) if k is None else np.atleast_1d(np.asarray(k))
    lam1, lam2, _, _ = dressed_lambdas(p)
    th_ref = theta(p, p.lam if reference == "lambda" else lam2, k)
    return BranchTables(
        k=k,
        omega1=omega(p, lam1, k),
        omega2=omega(p, lam2, k),
        alpha1=0.5 * (theta(p, lam1, k) - th_ref),
        alpha2=0.5 * (theta(p, lam2, k) - th_ref),
    )


def factor_terms(tab: BranchTables, t) -> np.ndarray:
    """Complex per-mode amplitudes, shape (len(t), M), four-term form.

    The four terms carry phases exp(-i(x1 - x2)), exp(i(x1 + x2)),
    exp(-i(x1 + x2)) and exp(i(x1 - x2)) with x_j = Omega_j t. They are
    expanded in cos/sin of x1 and x2 and summed in real arithmetic, which
    keeps every element bitwise independent of array shape.
    """
    t = np.atleast_1d(np.asarray(t, dtype=float))[:, None]
    a1, a2 = tab.alpha1, tab.alpha2
    d = a1 - a2
    s1, c1, s2, c2 = np.sin(a1), np.cos(a1), np.sin(a2), np.cos(a2)
    sd, cd = np.sin(d), np.cos(d)
    A = s1 * s2 * cd  # exp(-i x1 + i x2)
    B = c1 * s2 * sd  # -exp(+i x1 + i x2)
    C = s1 * c2 * sd  # exp(-i x1 - i x2)
    D = c1 * c2 * cd  # exp(+i x1 - i x2)
    x1 = tab.omega1 * t
    x2 = tab.omega2 * t
    cx1, sx1, cx2, sx2 = np.cos(x1), np.sin(x1), np.cos(x2), np.sin(x2)
    cos_diff = cx1 * cx2 + sx1 * sx2
    cos_sum = cx1 * cx2 - sx1 * sx2
    sin_diff = sx1 * cx2 - cx1 * sx2
    sin_sum = sx1 * cx2 + cx1 * sx2
    out = np.empty(x1.shape, dtype=complex)
    out.real = (A + D) * cos_diff + (C - B) * cos_sum
    out.imag = (D - A) * sin_diff - (B + C) * sin_sum
    return out


def factor_moduli(tab: BranchTables, t) -> np.ndarray:
    """Per-mode moduli F_k(t) from the square-root form, shape (len(t), M)."""
    t = np.atleast_1d(np.asarray(t, dtype=float))[:, None]
    x1 = tab.omega1 * t
    x2 = tab.omega2 * t
    s1 = np.sin(2.0 * tab.alpha1)
    s2 = np.sin(2.0 * tab.alpha2)
    S1, S2 = np.sin(x1), np.sin(x2)
    sd2 = np.sin(tab.alpha1 - tab.alpha2) ** 2
    v = (1.0 - s1**2 * S1**2 - s2**2 * S2**2
         + 2.0 * s1 * s2 * S1 * S2 * np.cos(x1 - x2)
         - 4.0 * s1 * s2 * sd2 * S1**2 * S2**2)
    return np.sqrt(np.clip(v, 0.0, None))


def accumulate(factors: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Reduce per-mode complex factors along the last axis.

    Returns (|F|, ln|F|, F). Rows holding any factor below LOG_THRESHOLD are
    multiplied out in the log domain.
    """
    re, im = factors.real, factors.imag
    mod = np.hypot(re, im)
    with np.errstate(divide="ignore"):
        log_abs = np.sum(np.log(mod), axis=-1)
    direct = np.prod(mod, axis=-1)
    small = np.min(mod, axis=-1, initial=1.0) < LOG_THRESHOLD
    f_abs = np.where(small, np.exp(log_abs), direct)
    phase = np.sum(np.arctan2(im, re), axis=-1)
    f_c = np.empty(f_abs.shape, dtype=complex)
    f_c.real = f_abs * np.cos(phase)
    f_c.imag = f_abs * np.sin(phase)
    return f_abs, log_abs, f_c


@dataclass(frozen=True)
class DecoherenceSample:
    t: float
    f_abs: float
    f_complex: complex
    log_abs: float


@dataclass(frozen=True)
class DecoherenceSeries:
    t: np.ndarray
    f_abs: np.ndarray
    f_complex: np.ndarray
    log_abs: np.ndarray

    def __len__(self) -> int:
        return len(self.t)

    def __getitem__(self, i: int) -> DecoherenceSample:
        return DecoherenceSample(float(self.t[i]), float(self.f_abs[i]),
                                 complex(self.f_complex[i]), float(self.log_abs[i]))

    def __iter__(self):
        return (self[i] for i in range(len(self)))


def _mode_index(p: ChainParams, k) -> np.ndarray:
    k = np.atleast_1d(np.asarray(k))
    if np.any(k < 1) or np.any(k > p.M):
        raise ParameterError(f"mode index must lie in 1..{p.M}")
    return k


def mode_factor(p: ChainParams, k: int, t: float, reference: str = "lambda") -> complex:
    """Complex amplitude of the (k, -k) pair at time t."""
    tab = branch_tables(p, reference, _mode_index(p, k))
    return complex(factor_terms(tab, t)[0, 0])


def mode_modulus(p: ChainParams, k: int, t: float, reference: str = "lambda") -> float:
    """F_k(t) from the square-root form."""
    tab = branch_tables(p, reference, _mode_index(p, k))
    return float(factor_moduli(tab, t)[0, 0])


def _series_from_tables(tab: BranchTables, t: np.ndarray, workers: int = 1) -> DecoherenceSeries:
    t = np.asarray(t, dtype=float)
    if t.size == 0:
        empty = np.empty(0)
        return DecoherenceSeries(empty, empty, np.empty(0, complex), empty)
    step = max(1, BLOCK_ELEMENTS // max(1, len(tab.k)))
    blocks = [t[i:i + step] for i in range(0, len(t), step)]

    def run(block):
        return accumulate(factor_terms(tab, block))

    if workers > 1 and len(blocks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(run, blocks))
    else:
        parts = [run(b) for b in blocks]
    f_abs, log_abs, f_c = (np.concatenate(x) for x in zip(*parts))
    return DecoherenceSeries(t, f_abs, f_c, log_abs)


def decoherence_factor(p: ChainParams, t: float, reference: str = "lambda") -> DecoherenceSample:
    """|F(t)| and the bare product of per-mode amplitudes at one time."""
    if t < 0:
        raise ParameterError("t must be >= 0")
    return _series_from_tables(branch_tables(p, reference), np.array([t]))[0]


def time_series(p: ChainParams, t_grid, reference: str = "lambda",
                workers: int = 1) -> DecoherenceSeries:
    """Evaluate F over an ascending time grid.

    Output is bitwise independent of ``workers``: each time point is reduced
    on its own row in a fixed order.
    """
    t = np.asarray(t_grid, dtype=float).ravel()
    if t.size and (not np.all(np.isfinite(t)) or np.any(np.diff(t) < 0)):
        raise ParameterError("t_grid must be finite and ascending")
    return _series_from_tables(branch_tables(p, reference), t, workers)


def partial_product(p: ChainParams, K_c: int, t, reference: str = "lambda"):
    """Product of the first K_c per-mode moduli, an upper bound on |F(t)|."""
    if not 1 <= K_c <= p.M:
        raise ParameterError(f"K_c must lie in 1..{p.M}, got {K_c}")
    tab = branch_tables(p, reference).head(K_c)
    f_abs = accumulate(factor_terms(tab, t))[0]
    return float(f_abs[0]) if np.ndim(t) == 0 else f_abs


def reduced_density_matrix(init: TwoQubitInitial, sample: DecoherenceSample) -> np.ndarray:
    """2x2 qubit density matrix on {|++>, |-->}."""
    a, b = init.a, init.b
    off = a * np.conj(b) * sample.f_complex
    return np.array([[abs(a) ** 2, off], [np.conj(off), abs(b) ** 2]], dtype=complex)


def embed_x_state(rho2: np.ndarray) -> np.ndarray:
    """Place the 2x2 block into the 4x4 two-qubit basis |++>, |+->, |-+>, |-->."""
    rho4 = np.zeros((4, 4), dtype=complex)
    idx = (0, 3)
    for i in range(2):
        for j in range(2):
            rho4[idx[i], idx[j]] = rho2[i, j]
    return rho4


def concurrence(init: TwoQubitInitial, sample: DecoherenceSample) -> float:
    return 2.0 * abs(init.a) * abs(init.b) * sample.f_abs
