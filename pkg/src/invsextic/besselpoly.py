"""Bessel polynomials on the positive half-line and the companion B-polynomials.

Y_n is a finite orthogonal family: for a negative parameter mu only degrees
n with mu < -n - 1/2 exist. Everything here is evaluated through three-term
recursions, which are definite (stable upward) precisely on that degree range.
The B-polynomial family B_n(z; gamma) is defined only by its recursion and
carries the spectral content of the expansion coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateParameterError, DomainError, InvariantViolationError


def max_degree(mu: float) -> int:
    """Largest integer strictly less than -mu - 1/2 (top valid degree N)."""
    bound = -mu - 0.5
    n = math.floor(bound)
    if n == bound:
        n -= 1
    return n


@dataclass(frozen=True)
class BesselFamily:
    """Parameter mu and the largest degree n_max used.

    mu must satisfy mu < -n_max - 1/2 strictly; with that constraint the
    recursion coefficients multiplying the n+1 and n-1 terms share one sign
    for every degree in range, so upward recursion is definite.
    """

    mu: float
    n_max: int | None = None

    def __post_init__(self):
        if self.n_max is None:
            object.__setattr__(self, "n_max", max_degree(self.mu))
        if self.n_max < 0:
            raise DomainError(
                f"mu = {self.mu} admits no valid degrees (need mu < -1/2)"
            )
        if not self.mu < -self.n_max - 0.5:
            raise InvariantViolationError(
                f"mu < -n_max - 1/2 required, got mu={self.mu}, n_max={self.n_max}"
            )


def _recursion_coeffs(mu: float, n: int):
    """Coefficients of 2x Y_n = c0 Y_n + c_minus Y_{n-1} + c_plus Y_{n+1}."""
    c0 = -mu / ((n + mu) * (n + mu + 1.0))
    c_minus = -n / ((n + mu) * (2 * n + 2 * mu + 1.0))
    c_plus = (n + 2 * mu + 1.0) / ((n + mu + 1.0) * (2 * n + 2 * mu + 1.0))
    return c0, c_minus, c_plus


def bessel_sequence(fam: BesselFamily, x):
    """Evaluate [Y_0(x), ..., Y_{n_max}(x)] by upward recursion.

    Parameters
    ----------
    fam : BesselFamily
    x : float or 1-D array, x > 0

    Returns
    -------
    ndarray of shape (n_max + 1,) for scalar x, else (n_max + 1, len(x)).
    """
    xa = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(xa <= 0):
        raise DomainError("bessel_sequence requires x > 0")
    mu, N = fam.mu, fam.n_max
    out = np.empty((N + 1, xa.size))
    out[0] = 1.0
    if N >= 1:
        out[1] = 1.0 + 2.0 * (mu + 1.0) * xa
    for n in range(1, N):
        c0, c_minus, c_plus = _recursion_coeffs(mu, n)
        out[n + 1] = (2.0 * xa * out[n] - c0 * out[n] - c_minus * out[n - 1]) / c_plus
    return out[:, 0] if np.ndim(x) == 0 else out


def bessel_norm(fam: BesselFamily, n: int) -> float:
    """Normalization constant A_n = sqrt(-(2n+2mu+1) / (n! Gamma(-n-2mu))).

    Computed through log-gamma: Gamma(-n-2mu) overflows double precision
    already for moderate (b/a)^2, while A_n itself is representable.
    """
    if not 0 <= n <= fam.n_max:
        raise DomainError(f"degree {n} outside [0, {fam.n_max}]")
    mu = fam.mu
    head = -(2 * n + 2 * mu + 1.0)
    if head <= 0:
        raise InvariantViolationError(
            f"norm radicand not positive at n={n}, mu={mu} (family mismatch)"
        )
    log_denom = math.lgamma(n + 1) + math.lgamma(-n - 2 * mu)
    return math.sqrt(head) * math.exp(-0.5 * log_denom)


def bessel_norms(fam: BesselFamily) -> np.ndarray:
    """All A_n for n = 0..n_max."""
    return np.array([bessel_norm(fam, n) for n in range(fam.n_max + 1)])


@dataclass(frozen=True)
class BPolyParams:
    """Arguments (gamma, z) of the B-polynomial.

    For a bound state of dimensionless energy eps = a^2 E < 0 they are
    gamma = 8/eps and z = (2/eps) (ell + 1/2)^2, both non-positive.
    """

    gamma: float
    z: float

    @classmethod
    def from_epsilon(cls, epsilon: float, ell: int) -> "BPolyParams":
        if epsilon == 0:
            raise DomainError("epsilon must be nonzero")
        return cls(gamma=8.0 / epsilon, z=(2.0 / epsilon) * (ell + 0.5) ** 2)


def bpoly_sequence(mu: float, params: BPolyParams, count: int) -> np.ndarray:
    """Evaluate [B_0, ..., B_{count-1}] at (z; gamma) by upward recursion.

    B_0 = 1 and B_{-1} = 0; each step solves the three-term recursion

        z B_n = [-2 mu / ((n+mu)(n+mu+1)) + gamma (n+mu+1/2)^2] B_n
                - n / ((n+mu)(n+mu+1/2)) B_{n-1}
                + (n+2mu+1) / ((n+mu+1)(n+mu+1/2)) B_{n+1}

    for B_{n+1}.
    """
    if count < 1:
        raise DomainError(f"count must be >= 1, got {count}")
    z, gamma = params.z, params.gamma
    out = np.empty(count)
    out[0] = 1.0
    for n in range(count - 1):
        for denom in (n + mu, n + mu + 1.0, n + mu + 0.5, n + 2 * mu + 1.0):
            if denom == 0.0:
                raise DegenerateParameterError(
                    f"recursion coefficient degenerate at n={n}, mu={mu}"
                )
        c0 = -2.0 * mu / ((n + mu) * (n + mu + 1.0)) + gamma * (n + mu + 0.5) ** 2
        c_minus = -n / ((n + mu) * (n + mu + 0.5))
        c_plus = (n + 2 * mu + 1.0) / ((n + mu + 1.0) * (n + mu + 0.5))
        prev = out[n - 1] if n >= 1 else 0.0
        out[n + 1] = (z * out[n] - c0 * out[n] - c_minus * prev) / c_plus
    return out
