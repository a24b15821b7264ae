"""Tridiagonal-basis solution: spectrum, expansion coefficients, wavefunctions.

The wavefunction is expanded in the finite family

    phi_n(x) = A_n x^(mu + 3/4) e^(-1/(2x)) Y_n(x),    x = (r/a)^2,

with mu = -(b/a)^2 / 2 fixed so the wave operator acts tridiagonally.
The basis holds at most ``capacity`` states; the bound spectrum is the set
of negative eigenvalues of the generalized problem H v = E Omega v, where H
is diagonal and Omega tridiagonal with closed-form entries.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .besselpoly import BesselFamily, BPolyParams, bessel_norms, bessel_sequence, bpoly_sequence
from .errors import DomainError, InvariantViolationError, UnsupportedRegimeError
from .linalg import TridiagonalSymmetric, generalized_sym_eigen
from .model import PotentialParams, require_lambda_zero

# Eigenvalues in [-MARGINAL_CUTOFF, 0) are kept as bound states but flagged:
# at that scale the sign is at the mercy of roundoff.
MARGINAL_CUTOFF = 1e-12


@dataclass(frozen=True)
class TraBasis:
    """Basis parameter mu and the state capacity for given (a, b)."""

    mu: float
    capacity: int
    a: float
    ell: int

    @property
    def n_max(self) -> int:
        return self.capacity - 1

    @property
    def alpha(self) -> float:
        """Exponent of the x prefactor in the basis elements."""
        return self.mu + 0.75


@dataclass(frozen=True)
class TraSystem:
    """Generalized eigenproblem matrices: diagonal H and tridiagonal Omega."""

    h_diag: np.ndarray
    omega: TridiagonalSymmetric


@dataclass(frozen=True)
class SpectrumResult:
    """Bound energies (ascending, negative) plus solver metadata."""

    method: str
    energies: np.ndarray
    params: PotentialParams
    diagnostics: dict = field(default_factory=dict)

    def __post_init__(self):
        e = np.asarray(self.energies, dtype=float)
        object.__setattr__(self, "energies", e)
        if e.size and not np.all(e < 0):
            raise InvariantViolationError("bound energies must be negative")
        if e.size > 1 and not np.all(np.diff(e) > 0):
            raise InvariantViolationError("energies must be strictly increasing")

    def __len__(self) -> int:
        return self.energies.size


@dataclass(frozen=True)
class WavefunctionTable:
    """Sampled (r, psi(r)) pairs for one bound state."""

    r: np.ndarray
    psi: np.ndarray
    energy: float


def tra_basis(p: PotentialParams) -> TraBasis:
    """Basis parameters: mu = -(b/a)^2 / 2, capacity = floor((b/a)^2/2 + 1/2).

    When (b/a)^2/2 + 1/2 is exactly an integer the nominal top degree would
    sit on the mu = -N - 1/2 boundary, which the polynomial family excludes;
    the capacity shrinks by one in that case.
    """
    mu = -0.5 * p.ratio_sq
    if not mu < -0.5:
        raise UnsupportedRegimeError(
            f"basis requires (b/a)^2 > 1 (mu < -1/2), got mu = {mu}"
        )
    capacity = math.floor(0.5 * p.ratio_sq + 0.5)
    if not mu < -(capacity - 1) - 0.5:
        capacity -= 1
    return TraBasis(mu=mu, capacity=capacity, a=p.a, ell=p.ell)


def tra_assemble(p: PotentialParams) -> TraSystem:
    """Build H (diagonal) and Omega (tridiagonal) of size capacity.

    H_nn     = (1 / 4a^2) [(ell + 1/2)^2 - (2n + 2mu + 1)^2]
    Omega_nn = At_n / 4,  Omega_{n,n+1} = Bt_n / 4,

    with At_n = -mu / ((n+mu)(n+mu+1)) and
    Bt_n = sqrt(-(n+1)(n+2mu+1) / ((2n+2mu+1)(2n+2mu+3))) / (n+mu+1).

    The diagonal overlap entry for the top state is a convergent integral
    only when (b/a)^2 > 2 * capacity; outside that band the basis's highest
    element is not square integrable and the method does not apply.
    """
    require_lambda_zero(p, "tra_assemble")
    basis = tra_basis(p)
    mu, N = basis.mu, basis.n_max
    if not p.ratio_sq > 2.0 * basis.capacity:
        raise UnsupportedRegimeError(
            f"(b/a)^2 = {p.ratio_sq:.6g} in ({2 * basis.capacity - 1}, "
            f"{2 * basis.capacity}]: the top basis state is not normalizable; "
            "use the Laguerre or finite-difference solver for these parameters"
        )
    n = np.arange(N + 1)
    h_diag = ((p.ell + 0.5) ** 2 - (2 * n + 2 * mu + 1.0) ** 2) / (4.0 * p.a**2)
    a_t = -mu / ((n + mu) * (n + mu + 1.0))
    m = n[:-1]
    radicand = -(m + 1) * (m + 2 * mu + 1.0) / (
        (2 * m + 2 * mu + 1.0) * (2 * m + 2 * mu + 3.0)
    )
    if np.any(radicand <= 0):
        raise InvariantViolationError("off-diagonal radicand not positive")
    b_t = np.sqrt(radicand) / (m + mu + 1.0)
    omega = TridiagonalSymmetric(diag=0.25 * a_t, offdiag=0.25 * b_t)
    return TraSystem(h_diag=h_diag, omega=omega)


def tra_spectrum(p: PotentialParams) -> SpectrumResult:
    """Bound spectrum: negative eigenvalues of H v = E Omega v, ascending."""
    basis = tra_basis(p)
    system = tra_assemble(p)
    vals, _ = generalized_sym_eigen(system.h_diag, system.omega)
    vals = np.sort(vals)
    bound = vals[vals < 0]
    marginal = int(np.sum((vals >= -MARGINAL_CUTOFF) & (vals < 0)))
    return SpectrumResult(
        method="TRA",
        energies=bound,
        params=p,
        diagnostics={
            "mu": basis.mu,
            "capacity": basis.capacity,
            "all_eigenvalues": vals.tolist(),
            "marginal_count": marginal,
        },
    )


def tra_coefficients(p: PotentialParams, energy: float) -> np.ndarray:
    """Series coefficients c_n = A_n^2 B_n(z; gamma) of the bound-state series.

    gamma = 8/eps and z = (2/eps)(ell + 1/2)^2 with eps = a^2 E < 0.
    """
    if not energy < 0:
        raise DomainError(f"bound-state energy must be negative, got {energy}")
    basis = tra_basis(p)
    fam = BesselFamily(basis.mu, basis.n_max)
    bp = BPolyParams.from_epsilon(p.epsilon(energy), p.ell)
    bvals = bpoly_sequence(basis.mu, bp, basis.capacity)
    return bessel_norms(fam) ** 2 * bvals


def tra_wavefunction(
    p: PotentialParams,
    energy: float,
    r_grid,
    f0: float = 1.0,
    normalize: bool = False,
) -> WavefunctionTable:
    """Evaluate the bound-state series on a radial grid.

    psi(r) = f0 x^(mu + 3/4) e^(-1/(2x)) sum_n c_n Y_n(x),  x = (r/a)^2.

    By default f0 = 1 (un-normalized); with ``normalize`` the amplitude is
    rescaled so the L2 norm over (0, inf) is 1. A warning is issued when
    ``energy`` is not a member of the computed spectrum, since the series
    only represents bound states at spectrum energies.
    """
    r = np.atleast_1d(np.asarray(r_grid, dtype=float))
    if np.any(r <= 0):
        raise DomainError("r_grid must be positive")
    spectrum = tra_spectrum(p)
    if spectrum.energies.size == 0 or np.min(
        np.abs(spectrum.energies - energy)
    ) > 1e-8 * max(1.0, abs(energy)):
        warnings.warn(
            f"energy {energy} is not a member of the computed bound spectrum",
            stacklevel=2,
        )
    basis = tra_basis(p)
    fam = BesselFamily(basis.mu, basis.n_max)
    coeffs = tra_coefficients(p, energy)
    x = p.x_of_r(r)
    series = coeffs @ bessel_sequence(fam, x)
    psi = f0 * _envelope(x, basis.alpha) * series
    if normalize:
        norm = _l2_norm(p, energy)
        psi = psi / norm * (1.0 if f0 >= 0 else -1.0)
    return WavefunctionTable(r=r, psi=psi, energy=energy)


def _envelope(x, alpha: float):
    """x^alpha e^(-1/(2x)) evaluated in log form.

    The direct product overflows (x^alpha -> inf) before the exponential
    underflows as x -> 0; the summed exponent underflows cleanly to zero.
    """
    x = np.asarray(x, dtype=float)
    out = np.exp(alpha * np.log(x) - 0.5 / x)
    return out


def _l2_norm(p: PotentialParams, energy: float) -> float:
    """L2 norm of the un-normalized series over (0, inf).

    The series decays like a power of r at large r, so the integration cutoff
    is pushed out until the integrand drops below 1e-12 of its peak.
    """
    from scipy.integrate import quad

    basis = tra_basis(p)
    fam = BesselFamily(basis.mu, basis.n_max)
    coeffs = tra_coefficients(p, energy)

    def psi_sq(r):
        x = np.atleast_1d(np.asarray(r, dtype=float) / p.a) ** 2
        series = coeffs @ bessel_sequence(fam, x)
        val = _envelope(x, basis.alpha) * series
        return float(val[0] ** 2) if np.ndim(r) == 0 else val**2

    probe = np.geomspace(0.05 * p.a, 50.0 * p.a, 400)
    peak = float(np.max(psi_sq(probe)))
    r_max = 50.0 * p.a
    while psi_sq(r_max) > 1e-12 * peak:
        r_max *= 2.0
    # the integrand is sharply peaked near r ~ a inside a huge interval:
    # integrate piecewise so the adaptive rule cannot step over the peak
    cuts = [1e-12 * p.a, 0.05 * p.a, 0.5 * p.a, 2.0 * p.a, 10.0 * p.a, 50.0 * p.a]
    total = 0.0
    for lo, hi in zip(cuts[:-1], cuts[1:]):
        part, _ = quad(psi_sq, lo, hi, limit=400)
        total += part
    if r_max > cuts[-1]:
        # power-law tail: integrate in log r so the huge range stays cheap
        tail, _ = quad(
            lambda u: psi_sq(math.exp(u)) * math.exp(u),
            math.log(cuts[-1]),
            math.log(r_max),
            limit=400,
        )
        total += tail
    return math.sqrt(total)


def closure_residual(p: PotentialParams, energy: float) -> float:
    """Relative size of the last recursion row's defect at a trial energy.

    The coefficient recursion determines c_1..c_N from c_0 for any energy;
    only at spectrum energies does the final row of (H - E Omega) c = 0 close
    without a further term. The returned value is that row's residual scaled
    by the size of its constituents: it vanishes (to roundoff) exactly on the
    spectrum, which makes it a useful quantization diagnostic.
    """
    basis = tra_basis(p)
    system = tra_assemble(p)
    fam = BesselFamily(basis.mu, basis.n_max)
    # expansion-coefficient vector f_n = A_n B_n, the generalized eigenvector
    f = tra_coefficients(p, energy) / bessel_norms(fam)
    hf = system.h_diag * f
    of = system.omega.to_dense() @ f
    num = abs(hf[-1] - energy * of[-1])
    scale = np.max(np.abs(hf)) + abs(energy) * np.max(np.abs(of))
    return float(num / scale)


def count_nodes(r, psi, rel_threshold: float = 0.1) -> int:
    """Count sign changes between lobes of significant amplitude.

    The sampled curve is split at sign changes; lobes whose peak magnitude
    is below ``rel_threshold`` times the global maximum are discarded (the
    finite basis produces low-amplitude power-law ripples in the far tail
    that are not physical nodes). Adjacent surviving lobes of opposite sign
    contribute one node each.
    """
    psi = np.asarray(psi, dtype=float)
    peak = np.max(np.abs(psi))
    if peak == 0:
        return 0
    signs = np.sign(psi)
    flip_idx = np.nonzero(signs[1:] != signs[:-1])[0]
    bounds = [0, *(flip_idx + 1), psi.size]
    lobes = []
    for lo, hi in zip(bounds[:-1], bounds[1:]):
        seg = psi[lo:hi]
        j = np.argmax(np.abs(seg))
        if abs(seg[j]) >= rel_threshold * peak:
            lobes.append(np.sign(seg[j]))
    return int(sum(1 for s0, s1 in zip(lobes[:-1], lobes[1:]) if s0 != s1))
