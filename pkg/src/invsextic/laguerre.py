"""Energy-independent Laguerre-basis diagonalization.

The basis chi_n(y) = C_n y^(ell/2) e^(-y/2) L_n^nu(y) with y = (lambda r)^-2
and nu = ell + 1/2 makes the Hamiltonian matrix tridiagonal in closed form.
The overlap matrix involves integrals of y^-2 against the Laguerre weight;
they are evaluated with the Gauss rule carried by the basis itself, i.e. as
matrix elements of y^-2 of the truncated Jacobi operator. That choice keeps
Omega positive definite by construction and converges with the basis size
(for ell = 0 the underlying integral diverges and the quadrature value is
the regularization that the converged spectra validate).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
import scipy.linalg as sla

from .errors import DomainError, NoPlateauError
from .linalg import TridiagonalSymmetric, generalized_sym_eigen, laguerre_jacobi
from .model import PotentialParams, require_lambda_zero
from .tra import SpectrumResult


@dataclass(frozen=True)
class LaguerreBasis:
    """Scale parameter, size and the Laguerre exponent nu = ell + 1/2."""

    lambda_scale: float
    size: int
    ell: int

    def __post_init__(self):
        if not self.lambda_scale > 0:
            raise DomainError(f"lambda_scale must be positive, got {self.lambda_scale}")
        if self.size < 1:
            raise DomainError(f"size must be >= 1, got {self.size}")
        if self.ell < 0:
            raise DomainError(f"ell must be >= 0, got {self.ell}")

    @property
    def nu(self) -> float:
        return self.ell + 0.5

    @property
    def alpha_exp(self) -> float:
        """Power of y in the basis elements."""
        return 0.5 * self.ell


def lag_hamiltonian(p: PotentialParams, basis: LaguerreBasis) -> TridiagonalSymmetric:
    """Closed-form tridiagonal Hamiltonian in the Laguerre basis.

    diag[n] = (lambda^2/2) {[(lambda a)^4 + 1](2n + ell + 3/2) - 2 (lambda b)^2}
    off[n]  = -(lambda^2/2) [(lambda a)^4 - 1] sqrt((n+1)(n + ell + 3/2))

    At lambda = 1/a the off-diagonal vanishes identically.
    """
    require_lambda_zero(p, "lag_hamiltonian")
    lam = basis.lambda_scale
    la4 = (lam * p.a) ** 4
    n = np.arange(basis.size)
    diag = 0.5 * lam**2 * ((la4 + 1.0) * (2 * n + p.ell + 1.5) - 2.0 * (lam * p.b) ** 2)
    m = n[:-1]
    off = -0.5 * lam**2 * (la4 - 1.0) * np.sqrt((m + 1) * (m + p.ell + 1.5))
    return TridiagonalSymmetric(diag=diag, offdiag=off)


def lag_overlap(basis: LaguerreBasis, quad_order: int | None = None) -> np.ndarray:
    """Overlap matrix: Gauss-Laguerre quadrature of y^-2 between basis states.

    With the rule of order K >= size for the weight y^nu e^-y, the quadrature
    sum over nodes y_k with the orthonormal-eigenvector components U[n, k] of
    the Jacobi matrix is exactly the leading size x size block of
    U diag(y_k^-2) U^T. The block of that positive-definite matrix is itself
    positive definite, so the Cholesky reduction downstream cannot fail.
    K = size (the default) evaluates y^-2 of the truncated Jacobi operator,
    which is the rule the reference spectra are computed with.
    """
    size = basis.size
    if quad_order is None:
        quad_order = size
    if quad_order < size:
        raise DomainError(f"quad_order must be >= size, got {quad_order} < {size}")
    jac = laguerre_jacobi(basis.nu, quad_order)
    y, vecs = sla.eigh_tridiagonal(jac.diag, jac.offdiag)
    block = (vecs[:size] / y**2) @ vecs[:size].T
    return 0.5 * (block + block.T)


def lag_spectrum(
    p: PotentialParams, basis: LaguerreBasis, quad_order: int | None = None
) -> SpectrumResult:
    """Bound spectrum from the generalized problem H v = E Omega v."""
    if basis.ell != p.ell:
        raise DomainError(f"basis built for ell={basis.ell}, params have ell={p.ell}")
    h = lag_hamiltonian(p, basis)
    omega = lag_overlap(basis, quad_order)
    vals, _ = generalized_sym_eigen(h, omega, vectors=False)
    vals = np.sort(vals)
    bound = vals[vals < 0]
    cond = float(np.linalg.cond(omega))
    return SpectrumResult(
        method="Laguerre",
        energies=bound,
        params=p,
        diagnostics={
            "lambda": basis.lambda_scale,
            "size": basis.size,
            "quad_order": quad_order if quad_order is not None else basis.size,
            "omega_condition": cond,
        },
    )


class PlateauResult(NamedTuple):
    lambda_star: float
    width: float
    spectrum: SpectrumResult
    window: tuple[float, float]
    lambdas: np.ndarray


def lag_plateau(
    p: PotentialParams,
    size: int,
    lambda_range: tuple[float, float],
    steps: int = 40,
    rel_tol: float = 1e-6,
) -> PlateauResult:
    """Scan lambda geometrically and locate the plateau of stability.

    Neighboring lambda samples are compared state by state; a pair is stable
    when the bound-state count matches and every |Delta E| is below rel_tol
    times the deepest level's magnitude (the shallowest level carries the
    quadrature regularization noise, so a per-state relative test would never
    flag a plateau at ell = 0). The widest contiguous stable window wins and
    lambda* is its geometric midpoint.
    """
    lo, hi = lambda_range
    if not (0 < lo < hi):
        raise DomainError(f"need 0 < low < high, got ({lo}, {hi})")
    if steps < 3:
        raise DomainError(f"need at least 3 scan steps, got {steps}")
    lams = np.geomspace(lo, hi, steps)
    omega = lag_overlap(LaguerreBasis(lams[0], size, p.ell))
    h_list = [lag_hamiltonian(p, LaguerreBasis(lam, size, p.ell)) for lam in lams]
    spectra = []
    for h in h_list:
        vals, _ = generalized_sym_eigen(h, omega)
        vals = np.sort(vals)
        spectra.append(vals[vals < 0])
    stable = np.zeros(steps - 1, dtype=bool)
    for i in range(steps - 1):
        s0, s1 = spectra[i], spectra[i + 1]
        if s0.size == 0 or s0.size != s1.size:
            continue
        scale = np.abs(s0[0])
        stable[i] = np.max(np.abs(s1 - s0)) < rel_tol * scale
    best_len, best_end, run = 0, -1, 0
    for i, ok in enumerate(stable):
        run = run + 1 if ok else 0
        if run > best_len:
            best_len, best_end = run, i
    if best_len < 2:  # window of < 3 lambda samples
        raise NoPlateauError(
            f"no stability plateau in [{lo}, {hi}] at size {size}; "
            "increase the basis size or widen the range"
        )
    i0, i1 = best_end - best_len + 1, best_end + 1
    lam_lo, lam_hi = float(lams[i0]), float(lams[i1])
    lam_star = float(np.sqrt(lam_lo * lam_hi))
    spec = lag_spectrum(p, LaguerreBasis(lam_star, size, p.ell))
    diag = dict(spec.diagnostics)
    diag.update({"plateau_window": (lam_lo, lam_hi), "plateau_samples": best_len + 1})
    spec = SpectrumResult(
        method=spec.method, energies=spec.energies, params=p, diagnostics=diag
    )
    return PlateauResult(
        lambda_star=lam_star,
        width=lam_hi - lam_lo,
        spectrum=spec,
        window=(lam_lo, lam_hi),
        lambdas=lams,
    )
