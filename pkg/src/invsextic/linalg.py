"""Numerical kernels: eigensolvers, Gauss-Laguerre rules, stencil weights.

The eigensolvers wrap LAPACK (via numpy/scipy) behind small validated
interfaces; the quadrature and finite-difference weight generators are
implemented here directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg as sla

from .errors import (
    DomainError,
    InvariantViolationError,
    NotPositiveDefiniteError,
    NumericalFailureError,
)


@dataclass(frozen=True)
class TridiagonalSymmetric:
    """Symmetric tridiagonal matrix stored as diagonal + off-diagonal."""

    diag: np.ndarray
    offdiag: np.ndarray

    def __post_init__(self):
        d = np.asarray(self.diag, dtype=float)
        e = np.asarray(self.offdiag, dtype=float)
        object.__setattr__(self, "diag", d)
        object.__setattr__(self, "offdiag", e)
        if d.ndim != 1 or e.ndim != 1 or e.size != max(d.size - 1, 0):
            raise DomainError(
                f"inconsistent tridiagonal shapes: diag {d.shape}, offdiag {e.shape}"
            )
        if d.size == 0:
            raise DomainError("empty tridiagonal matrix")
        if not (np.all(np.isfinite(d)) and np.all(np.isfinite(e))):
            raise InvariantViolationError("tridiagonal entries must be finite")

    @property
    def n(self) -> int:
        return self.diag.size

    def to_dense(self) -> np.ndarray:
        m = np.diag(self.diag)
        if self.offdiag.size:
            m += np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)
        return m


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss rule for the weight y^alpha e^{-y} on (0, inf)."""

    nodes: np.ndarray
    weights: np.ndarray
    alpha: float

    def __post_init__(self):
        x = np.asarray(self.nodes, dtype=float)
        w = np.asarray(self.weights, dtype=float)
        object.__setattr__(self, "nodes", x)
        object.__setattr__(self, "weights", w)
        if x.shape != w.shape or x.ndim != 1:
            raise DomainError("nodes/weights shape mismatch")
        if np.any(np.diff(x) <= 0) or np.any(x <= 0):
            raise InvariantViolationError("nodes must be positive and increasing")
        if np.any(w <= 0):
            raise InvariantViolationError(
                "weights must be positive (underflow: reduce the order)"
            )
        total = math.gamma(self.alpha + 1.0)
        if abs(w.sum() - total) > 1e-10 * total:
            raise InvariantViolationError("weights do not sum to Gamma(alpha+1)")

    def integrate(self, f) -> float:
        """Approximate integral of f(y) y^alpha e^{-y} dy over (0, inf)."""
        return float(self.weights @ f(self.nodes))


@dataclass(frozen=True)
class StencilWeights:
    """Finite-difference weights; caller divides by h**derivative_order."""

    derivative_order: int
    offsets: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "offsets", np.asarray(self.offsets))
        object.__setattr__(self, "weights", np.asarray(self.weights, dtype=float))


def _as_dense_symmetric(m) -> np.ndarray:
    if isinstance(m, TridiagonalSymmetric):
        return m.to_dense()
    a = np.asarray(m, dtype=float)
    if a.ndim == 1:
        return np.diag(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {a.shape}")
    return a


def symtri_eigen(t: TridiagonalSymmetric, vectors: bool = False):
    """Eigenvalues (ascending) and optionally orthonormal eigenvectors."""
    try:
        if vectors:
            vals, vecs = sla.eigh_tridiagonal(t.diag, t.offdiag)
            return vals, vecs
        return sla.eigh_tridiagonal(t.diag, t.offdiag, eigvals_only=True), None
    except sla.LinAlgError as exc:  # pragma: no cover - LAPACK rarely fails here
        raise NumericalFailureError(f"tridiagonal eigensolver failed: {exc}") from exc


def generalized_sym_eigen(h, omega, vectors: bool = False):
    """Solve H v = lambda Omega v for symmetric H and positive-definite Omega.

    Reduction: Omega = L L^T (Cholesky), then the standard symmetric problem
    for L^{-1} H L^{-T}, with eigenvectors back-transformed by L^{-T}.

    Parameters
    ----------
    h : TridiagonalSymmetric, 1-D array (diagonal) or 2-D symmetric array
    omega : TridiagonalSymmetric or 2-D symmetric array, positive definite
    vectors : bool
        Also return eigenvectors (columns, Omega-orthonormal).

    Raises
    ------
    NotPositiveDefiniteError
        If the Cholesky factorization of omega fails.
    """
    hd = _as_dense_symmetric(h)
    od = _as_dense_symmetric(omega)
    if hd.shape != od.shape:
        raise DomainError(f"shape mismatch: H {hd.shape} vs Omega {od.shape}")
    try:
        low = np.linalg.cholesky(od)
    except np.linalg.LinAlgError as exc:
        raise NotPositiveDefiniteError(
            "overlap matrix is not positive definite"
        ) from exc
    half = sla.solve_triangular(low, hd, lower=True)
    reduced = sla.solve_triangular(low, half.T, lower=True)
    reduced = 0.5 * (reduced + reduced.T)
    if vectors:
        vals, w = sla.eigh(reduced)
        vecs = sla.solve_triangular(low.T, w, lower=False)
        return vals, vecs
    return sla.eigh(reduced, eigvals_only=True), None


def dense_eigen(m, vectors: bool = False):
    """All eigenvalues of a real square matrix (complex in general).

    Uses the LAPACK Hessenberg + shifted-QR path with balancing, which keeps
    small eigenvalues of strongly graded matrices accurate.
    """
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise InvariantViolationError("matrix entries must be finite")
    try:
        if vectors:
            vals, vecs = sla.eig(a)
            return vals, vecs
        return np.linalg.eigvals(a), None
    except (np.linalg.LinAlgError, sla.LinAlgError) as exc:
        raise NumericalFailureError(f"QR iteration did not converge: {exc}") from exc


def laguerre_jacobi(alpha: float, order: int) -> TridiagonalSymmetric:
    """Jacobi matrix of the orthonormal Laguerre family for y^alpha e^{-y}.

    Represents multiplication by y in the orthonormal basis:
    diagonal 2k + alpha + 1, off-diagonal -sqrt(k (k + alpha)). The sign of
    the off-diagonal matters when eigenvector components are combined across
    rows (overlap-type blocks), not for nodes and weights.
    """
    if not alpha > -1:
        raise DomainError(f"alpha must exceed -1, got {alpha}")
    if order < 1:
        raise DomainError(f"order must be >= 1, got {order}")
    k = np.arange(order)
    return TridiagonalSymmetric(
        diag=2.0 * k + alpha + 1.0,
        offdiag=-np.sqrt(k[1:] * (k[1:] + alpha)),
    )


def gauss_laguerre(alpha: float, order: int) -> QuadratureRule:
    """Golub-Welsch rule: nodes are Jacobi-matrix eigenvalues, weights
    Gamma(alpha+1) times the squared first eigenvector components.

    The inverse-iteration LAPACK driver is used because the default one
    flushes the tiny leading components of the large-node eigenvectors to
    exact zero, which would zero out the corresponding weights.
    """
    jac = laguerre_jacobi(alpha, order)
    nodes, vecs = sla.eigh_tridiagonal(jac.diag, jac.offdiag, lapack_driver="stebz")
    logw = math.lgamma(alpha + 1.0) + 2.0 * np.log(np.abs(vecs[0, :]))
    return QuadratureRule(nodes=nodes, weights=np.exp(logw), alpha=alpha)


def fornberg_weights(derivative_order: int, offsets, x0: float = 0.0) -> StencilWeights:
    """Maximal-order finite-difference weights on arbitrary nodes.

    Standard recursive generation (one pass over the nodes, exact in the
    sense that weights reproduce derivatives of all monomials up to degree
    len(offsets) - 1). Offsets are in grid units; the caller applies 1/h^order.
    """
    if derivative_order not in (1, 2):
        raise DomainError(f"derivative_order must be 1 or 2, got {derivative_order}")
    x = np.asarray(offsets, dtype=float)
    if x.ndim != 1 or x.size < derivative_order + 1:
        raise DomainError("need at least derivative_order + 1 offsets")
    if np.unique(x).size != x.size:
        raise DomainError("offsets must be distinct")
    m = derivative_order
    c = np.zeros((x.size, m + 1))
    c[0, 0] = 1.0
    c1 = 1.0
    c4 = x[0] - x0
    for i in range(1, x.size):
        mn = min(i, m)
        c2 = 1.0
        c5 = c4
        c4 = x[i] - x0
        for j in range(i):
            c3 = x[i] - x[j]
            c2 *= c3
            if j == i - 1:
                for k in range(mn, 0, -1):
                    c[i, k] = c1 * (k * c[i - 1, k - 1] - c5 * c[i - 1, k]) / c2
                c[i, 0] = -c1 * c5 * c[i - 1, 0] / c2
            for k in range(mn, 0, -1):
                c[j, k] = (c4 * c[j, k] - k * c[j, k - 1]) / c3
            c[j, 0] = c4 * c[j, 0] / c3
        c1 = c2
    return StencilWeights(
        derivative_order=m, offsets=np.asarray(offsets), weights=c[:, m]
    )
