"""Randomised cross-check of the closed-form engine against the pair oracle."""

from __future__ import annotations

import numpy as np

from .decoherence import branch_tables, factor_moduli, factor_terms, time_series
from .model import ChainParams
from .oracle import oracle_decoherence, oracle_mode_moduli

G_CHOICES = (0.0, 0.05, 0.5, 5.0, 500.0)
N_CHOICES = (11, 101, 201, 1001)
MODE_TOL = 1e-10
PRODUCT_TOL = 1e-9


def random_cases(n: int, seed: int = 0) -> list[tuple[ChainParams, float]]:
    rng = np.random.default_rng(seed)
    cases = []
    for _ in range(n):
        p = ChainParams(
            N=int(rng.choice(N_CHOICES)),
            gamma=float(rng.uniform(0.0, 1.0)),
            lam=float(rng.uniform(0.0, 2.0)),
            g=float(rng.choice(G_CHOICES)),
        )
        cases.append((p, float(rng.uniform(0.0, 20.0))))
    return cases


def cross_validate(n: int = 100, seed: int = 0) -> dict:
    """Compare engine and oracle over ``n`` random (params, t) draws.

    Returns the JSON-ready summary {max_mode_dev, max_product_dev,
    max_form_dev, cases, pass}; ``max_form_dev`` compares the two
    closed forms of the per-mode modulus with each other.
    """
    mode_dev = prod_dev = form_dev = 0.0
    for p, t in random_cases(n, seed):
        tab = branch_tables(p)
        amp = np.abs(factor_terms(tab, t)[0])
        root = factor_moduli(tab, t)[0]
        ref = oracle_mode_moduli(p, t)
        mode_dev = max(mode_dev, float(np.max(np.abs(amp - ref))))
        form_dev = max(form_dev, float(np.max(np.abs(amp - root))))
        f = time_series(p, [t]).f_abs[0]
        prod_dev = max(prod_dev, abs(float(f) - oracle_decoherence(p, t)))
    return {
        "max_mode_dev": mode_dev,
        "max_product_dev": prod_dev,
        "max_form_dev": form_dev,
        "cases": n,
        "pass": bool(mode_dev < MODE_TOL and prod_dev < PRODUCT_TOL),
    }
