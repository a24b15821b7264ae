"""Bound states of the inverse quartic-sextic radial potential.

Three independent solvers for the same spectrum:

- ``tra``: finite-basis solution in Bessel-polynomial functions, exact
  closed-form matrices, capacity-limited (the primary method);
- ``laguerre``: energy-independent Laguerre-basis diagonalization with a
  stability-plateau scale parameter (first verification);
- ``fdm``: high-order finite differences on the arctan-compactified
  half-line (second verification).
"""

from .besselpoly import BesselFamily, BPolyParams, bessel_norm, bessel_sequence, bpoly_sequence
from .errors import (
    DegenerateParameterError,
    DomainError,
    InvariantViolationError,
    NoPlateauError,
    NotPositiveDefiniteError,
    NumericalFailureError,
    UnsupportedRegimeError,
)
from .fdm import FdConfig, fd_assemble, fd_spectrum, fd_tau
from .laguerre import LaguerreBasis, lag_hamiltonian, lag_overlap, lag_plateau, lag_spectrum
from .linalg import (
    QuadratureRule,
    StencilWeights,
    TridiagonalSymmetric,
    dense_eigen,
    fornberg_weights,
    gauss_laguerre,
    generalized_sym_eigen,
    symtri_eigen,
)
from .model import PotentialParams, mapped_potential_value, potential_value
from .tra import (
    SpectrumResult,
    TraBasis,
    WavefunctionTable,
    count_nodes,
    tra_basis,
    tra_coefficients,
    tra_spectrum,
    tra_wavefunction,
)

__version__ = "0.1.0"

__all__ = [
    "BesselFamily",
    "BPolyParams",
    "DegenerateParameterError",
    "DomainError",
    "FdConfig",
    "InvariantViolationError",
    "LaguerreBasis",
    "NoPlateauError",
    "NotPositiveDefiniteError",
    "NumericalFailureError",
    "PotentialParams",
    "QuadratureRule",
    "SpectrumResult",
    "StencilWeights",
    "TraBasis",
    "TridiagonalSymmetric",
    "UnsupportedRegimeError",
    "WavefunctionTable",
    "bessel_norm",
    "bessel_sequence",
    "bpoly_sequence",
    "count_nodes",
    "dense_eigen",
    "fd_assemble",
    "fd_spectrum",
    "fd_tau",
    "fornberg_weights",
    "gauss_laguerre",
    "generalized_sym_eigen",
    "lag_hamiltonian",
    "lag_overlap",
    "lag_plateau",
    "lag_spectrum",
    "mapped_potential_value",
    "potential_value",
    "symtri_eigen",
    "tra_basis",
    "tra_coefficients",
    "tra_spectrum",
    "tra_wavefunction",
]
