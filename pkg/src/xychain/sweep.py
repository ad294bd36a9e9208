"""Parameter x time sweeps of |F| with deterministic, order-preserving output."""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import TextIO

import numpy as np

from .decoherence import time_series
from .model import ChainParams, ParameterError

AXES = ("lambda", "gamma", "g", "N")
_FIELD = {"lambda": "lam", "gamma": "gamma", "g": "g", "N": "N"}


def fmt(x) -> str:
    """Fixed float formatting shared by every text output."""
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return "%.17g" % float(x)


def time_grid(t_max: float, steps: int) -> np.ndarray:
    """``steps`` points from 0 to ``t_max`` inclusive."""
    if steps < 1:
        raise ParameterError("steps must be >= 1")
    if t_max < 0:
        raise ParameterError("t_max must be >= 0")
    return np.linspace(0.0, t_max, steps) if steps > 1 else np.array([0.0])


@dataclass
class SweepSpec:
    axis: str
    values: list
    t: np.ndarray
    fixed: dict = field(default_factory=dict)
    output: str = "-"
    format: str = "csv"
    reference: str = "lambda"

    def __post_init__(self) -> None:
        if self.axis not in AXES:
            raise ParameterError(f"sweep axis must be one of {AXES}, got {self.axis!r}")
        if len(self.values) == 0 or len(self.t) == 0:
            raise ParameterError("sweep grids must be non-empty")
        if np.any(np.diff(np.asarray(self.values, float)) < 0) or np.any(np.diff(self.t) < 0):
            raise ParameterError("sweep grids must be ascending")
        if self.format not in ("csv", "json"):
            raise ParameterError(f"format must be csv or json, got {self.format!r}")
        if self.axis == "N":
            self.values = [int(v) for v in self.values]

    def params(self, value) -> ChainParams:
        kw = {k: v for k, v in self.fixed.items() if k in _FIELD.values()}
        kw[_FIELD[self.axis]] = value
        return ChainParams(**kw)


def compute_sweep(spec: SweepSpec, workers: int = 1) -> np.ndarray:
    """|F| on the (axis value, t) grid, rows in axis order."""
    cells = [spec.params(v) for v in spec.values]

    def row(p):
        return time_series(p, spec.t, spec.reference).f_abs

    if workers > 1 and len(cells) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(row, cells))
    else:
        rows = [row(p) for p in cells]
    return np.vstack(rows)


def write_sweep(spec: SweepSpec, grid: np.ndarray, out: TextIO) -> None:
    if spec.format == "json":
        doc = {
            "axis": spec.axis,
            "values": spec.values,
            "t": [float(x) for x in spec.t],
            "fixed": spec.fixed,
            "F_abs": [[float(x) for x in r] for r in grid],
        }
        out.write(json.dumps(doc, indent=None, sort_keys=True))
        out.write("\n")
        return
    out.write(f"{spec.axis},t,F_abs\n")
    ts = [fmt(x) for x in spec.t]
    for v, r in zip(spec.values, grid):
        head = fmt(v)
        out.write("".join(f"{head},{t},{fmt(f)}\n" for t, f in zip(ts, r)))
