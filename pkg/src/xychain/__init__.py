"""Disentanglement of two qubits coupled to a transverse-field XY spin chain."""

__version__ = "0.1.0"

from .model import (
    ChainParams,
    DressedField,
    ParameterError,
    TwoQubitInitial,
    dressed_lambdas,
    mode_grid,
)
from .spectrum import ModeSpectrum, alpha, epsilon, mode_spectrum, omega, theta
from .decoherence import (
    DecoherenceSample,
    DecoherenceSeries,
    concurrence,
    decoherence_factor,
    mode_factor,
    mode_modulus,
    partial_product,
    reduced_density_matrix,
    time_series,
)
from .approx import (
    StrongCouplingModel,
    cutoff_energy_sum,
    gaussian_tau,
    scaling_transform,
    strong_coupling_envelope,
    strong_coupling_model,
    weak_coupling_S,
    width_scaling,
)
from .oracle import oracle_decoherence, oracle_mode_factor, pair_block, wootters_concurrence
