"""Finite-difference verification method on the compactified half-line.

The substitution s = (2/pi) arctan(tau r) maps (0, inf) to (0, 1); on a
uniform interior grid s_i = i h, h = 1/(M+1), the radial equation becomes

    J psi = (A D2 + B D1 + C) psi = E psi

with diagonal coefficient matrices A, B, C and dense derivative matrices
D1, D2 assembled from maximal-order stencil weights: centered 2k+1 point
stencils in the interior, offset stencils over the first/last 2k+1 points
(2k+2 for the second derivative) near the Dirichlet boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .linalg import dense_eigen, fornberg_weights
from .model import PotentialParams, mapped_potential_value, require_lambda_zero
from .tra import SpectrumResult

IMAG_TOL = 1e-8
ABS_FLOOR = 1e-10


@dataclass(frozen=True)
class FdConfig:
    """Grid size M, scheme half-width k (order 2k), and the tau schedule."""

    m_interior: int
    half_width: int
    tau_coeff: float = 0.6
    tau_exp: float = -0.7

    def __post_init__(self):
        if self.half_width < 1:
            raise DomainError(f"half_width must be >= 1, got {self.half_width}")
        if self.m_interior < 2 * self.half_width + 2:
            raise DomainError(
                f"m_interior must be >= 2k + 2 = {2 * self.half_width + 2}, "
                f"got {self.m_interior}"
            )
        if not self.tau_coeff > 0:
            raise DomainError(f"tau_coeff must be positive, got {self.tau_coeff}")

    @property
    def h(self) -> float:
        return 1.0 / (self.m_interior + 1)


def fd_tau(j: int, cfg: FdConfig) -> float:
    """Compactification scale for eigenvalue index j >= 1 (default 0.6 j^-0.7)."""
    if j < 1:
        raise DomainError(f"eigenvalue index must be >= 1, got {j}")
    return cfg.tau_coeff * float(j) ** cfg.tau_exp


def delta_matrices(cfg: FdConfig) -> tuple[np.ndarray, np.ndarray]:
    """Derivative matrices D1, D2 (1/h and 1/h^2 included) on the interior grid.

    Homogeneous Dirichlet values at s = 0 and s = 1 drop the boundary columns.
    """
    m, k = cfg.m_interior, cfg.half_width
    h = cfg.h
    d1 = np.zeros((m, m))
    d2 = np.zeros((m, m))
    centered = np.arange(-k, k + 1)
    w1_c = fornberg_weights(1, centered).weights / h
    w2_c = fornberg_weights(2, centered).weights / h**2
    for i in range(1, m + 1):
        row = i - 1
        if i < k:
            pts1 = np.arange(0, 2 * k + 1)
            pts2 = np.arange(0, 2 * k + 2)
        elif i > m + 1 - k:
            pts1 = np.arange(m + 1 - 2 * k, m + 2)
            pts2 = np.arange(m - 2 * k, m + 2)
        else:
            pts1 = pts2 = i + centered
        if pts1[0] == i - k:  # interior row: reuse the centered weights
            w1, w2 = w1_c, w2_c
        else:
            w1 = fornberg_weights(1, pts1 - i).weights / h
            w2 = fornberg_weights(2, pts2 - i).weights / h**2
        for p, w in zip(pts1, w1):
            if 1 <= p <= m:
                d1[row, p - 1] = w
        for p, w in zip(pts2, w2):
            if 1 <= p <= m:
                d2[row, p - 1] = w
    return d1, d2


def fd_assemble(p: PotentialParams, tau: float, cfg: FdConfig) -> np.ndarray:
    """Dense operator J = A D2 + B D1 + C for one value of tau."""
    require_lambda_zero(p, "fd_assemble")
    if not tau > 0:
        raise DomainError(f"tau must be positive, got {tau}")
    s = cfg.h * np.arange(1, cfg.m_interior + 1)
    cos = np.cos(0.5 * np.pi * s)
    sin = np.sin(0.5 * np.pi * s)
    a_diag = -(2.0 * tau**2 / np.pi**2) * cos**4
    b_diag = (2.0 * tau**2 / np.pi) * cos**3 * sin
    c_diag = mapped_potential_value(p, tau, s)
    d1, d2 = delta_matrices(cfg)
    return a_diag[:, None] * d2 + b_diag[:, None] * d1 + np.diag(c_diag)


def _real_eigenvalues(j_matrix: np.ndarray) -> np.ndarray:
    vals, _ = dense_eigen(j_matrix)
    keep = np.abs(vals.imag) <= IMAG_TOL * np.abs(vals.real) + ABS_FLOOR
    return np.sort(vals[keep].real)


def fd_spectrum(
    p: PotentialParams,
    cfg: FdConfig,
    max_states: int,
    single_tau: float | None = None,
) -> SpectrumResult:
    """Bound spectrum from per-index eigensolves.

    For each target index j = 1..max_states the operator is rebuilt with
    tau = fd_tau(j, cfg) and the j-th real eigenvalue (ascending) is selected;
    negative selections form the bound spectrum. Passing ``single_tau`` skips
    the schedule and takes all levels from one solve with that fixed tau --
    cheaper but less accurate, and flagged as such in the diagnostics.
    """
    if max_states < 1:
        raise DomainError(f"max_states must be >= 1, got {max_states}")
    energies = []
    taus = []
    discarded = []
    if single_tau is not None:
        real = _real_eigenvalues(fd_assemble(p, single_tau, cfg))
        energies = [v for v in real[:max_states] if v < 0]
        taus = [single_tau]
        discarded = [cfg.m_interior - real.size]
    else:
        for j in range(1, max_states + 1):
            tau = fd_tau(j, cfg)
            real = _real_eigenvalues(fd_assemble(p, tau, cfg))
            taus.append(tau)
            discarded.append(cfg.m_interior - real.size)
            if real.size < j:
                break
            if real[j - 1] >= 0:
                # levels are ordered: once the j-th eigenvalue crosses zero
                # no deeper bound state remains at higher indices
                break
            energies.append(real[j - 1])
    energies = np.array(sorted(set(energies)))
    diagnostics = {
        "m_interior": cfg.m_interior,
        "half_width": cfg.half_width,
        "tau_per_level": taus,
        "discarded_complex": discarded,
        "single_tau_mode": single_tau is not None,
    }
    if any(d > 0 for d in discarded):
        diagnostics["warning"] = "some eigenvalues were complex and discarded"
    return SpectrumResult(
        method="FD", energies=energies, params=p, diagnostics=diagnostics
    )
