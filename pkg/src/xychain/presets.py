"""Named parameter recipes for the figure reproductions.

Time windows and grid densities are calibration choices: the figures do not
state their axis ranges.
"""

from __future__ import annotations

import numpy as np

PRESETS: dict[str, dict] = {
    "fig1a": dict(command="sweep", axis="lambda", values=list(np.linspace(0.0, 2.0, 200)),
                  gamma=1.0, g=0.05, N=201, t_max=100.0, steps=2000),
    "fig1b": dict(command="sweep", axis="N", values=[51, 201, 801],
                  lam=1.0, gamma=1.0, g=0.05, t_max=50.0, steps=2000),
    "fig2": dict(command="sweep", axis="gamma", values=list(np.linspace(0.0, 1.0, 101)),
                 lam=1.0, g=0.05, N=201, t_max=50.0, steps=2000),
    "fig3": dict(command="envelope", lam=1.0, gamma=1.0, g=500.0, N=201,
                 t_max=300.0, steps=20001),
    "fig4a": dict(command="envelope", lam=1.0, gamma=1.0, g=1000.0, N=201,
                  t_max=600.0, steps=20001),
    "fig4b": dict(command="envelope", lam=1.0, gamma=2.0, g=500.0, N=201,
                  t_max=70.0, steps=20001),
    "fig4c": dict(command="envelope", lam=1.0, gamma=1.0, g=500.0, N=801,
                  t_max=150.0, steps=20001),
    "fig5": dict(command="scaling-check", lam=0.95, gamma=1.0, g=0.05, N=201,
                 alpha=0.1, t_max=20.0, steps=2001),
}
