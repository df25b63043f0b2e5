"""Polaritons and polarization-mixed linear spectra of an anisotropic lattice in a planar cavity."""

__version__ = "0.1.0"

from .model import ModelConfig, ProbePoint, CouplingSet, cavity_dispersion, coupling_scale, coupling_constants
from .polariton import (
    Branch,
    PolaritonModes,
    DegenerateCouplingError,
    eigenfrequencies,
    hopfield_amplitudes,
    decoupled_modes,
    polariton_modes,
    diagonalize_oracle,
    large_detuning_approx,
)
from .spectra import (
    DampingConfig,
    IncidentField,
    SpectraPoint,
    complex_branches,
    lambda_matrix,
    solve_scattering,
    observables,
    spectrum_sweep,
)

__all__ = [
    "ModelConfig", "ProbePoint", "CouplingSet", "cavity_dispersion", "coupling_scale", "coupling_constants",
    "Branch", "PolaritonModes", "DegenerateCouplingError", "eigenfrequencies", "hopfield_amplitudes",
    "decoupled_modes", "polariton_modes", "diagonalize_oracle", "large_detuning_approx",
    "DampingConfig", "IncidentField", "SpectraPoint", "complex_branches", "lambda_matrix",
    "solve_scattering", "observables", "spectrum_sweep",
]
