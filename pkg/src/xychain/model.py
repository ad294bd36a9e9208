"""Physical parameters of the qubit pair + XY chain and the momentum-mode grid."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

# Critical transverse field of the XY family.
LAMBDA_C = 1.0


class ParameterError(ValueError):
    """Raised when a parameter bundle or argument is outside its valid domain."""


@dataclass(frozen=True)
class ChainParams:
    """Environment and coupling parameters.

    Attributes
    ----------
    N : int
        Number of chain sites. Must be odd and >= 3.
    gamma : float
        In-plane anisotropy (1 = Ising, 0 = XX).
    lam : float
        Transverse field.
    g : float
        Qubit-chain coupling strength.
    """

    N: int
    gamma: float
    lam: float
    g: float

    def __post_init__(self) -> None:
        if isinstance(self.N, bool) or int(self.N) != self.N:
            raise ParameterError(f"N must be an integer, got {self.N!r}")
        object.__setattr__(self, "N", int(self.N))
        if self.N < 3 or self.N % 2 == 0:
            raise ParameterError(f"N must be odd and >= 3, got {self.N}")
        for name in ("gamma", "lam", "g"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ParameterError(f"{name} must be finite, got {value}")
            object.__setattr__(self, name, value)
        if self.gamma < 0:
            raise ParameterError(f"gamma must be >= 0, got {self.gamma}")
        if self.g < 0:
            raise ParameterError(f"g must be >= 0, got {self.g}")

    @property
    def M(self) -> int:
        return (self.N - 1) // 2

    def with_(self, **changes) -> "ChainParams":
        return replace(self, **changes)


@dataclass(frozen=True)
class DressedField:
    branch: int
    value: float


@dataclass(frozen=True)
class TwoQubitInitial:
    """Initial two-qubit state a|++> + b|-->."""

    a: complex
    b: complex

    def __post_init__(self) -> None:
        a, b = complex(self.a), complex(self.b)
        norm = abs(a) ** 2 + abs(b) ** 2
        if abs(norm - 1.0) > 1e-12:
            raise ParameterError(f"|a|^2 + |b|^2 must be 1, got {norm!r}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def bell(cls) -> "TwoQubitInitial":
        s = 1.0 / math.sqrt(2.0)
        return cls(s, s)


def dressed_lambdas(p: ChainParams) -> tuple[float, float, float, float]:
    """Fields seen by the chain in the sectors |1>, |2>, |3>, |4>."""
    return (p.lam + p.g, p.lam - p.g, p.lam, p.lam)


def dressed_fields(p: ChainParams) -> list[DressedField]:
    return [DressedField(j + 1, v) for j, v in enumerate(dressed_lambdas(p))]


def mode_grid(p: ChainParams) -> np.ndarray:
    """Positive momentum indices k = 1..M.

    k = 0 is left out: its factor is identically one, and -k is folded into
    the (k, -k) pair of each factor.
    """
    return np.arange(1, p.M + 1, dtype=np.int64)


def check_mode(p: ChainParams, k) -> None:
    k = np.asarray(k)
    if np.any(k < 0) or np.any(k > p.M):
        raise ParameterError(f"mode index out of range 0..{p.M}")
