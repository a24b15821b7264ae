"""Physical problem definition: parameters and potential evaluation.

The radial effective potential (atomic units, hbar = m = 1) is

    V(r) = [l(l+1) + Lambda] / (2 r^2) - b^2 / r^4 + a^4 / (2 r^6),

an attractive inverse-quartic well inside a repulsive inverse-sextic core.
It supports a finite number of bound states whenever |b| > |a|.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, UnsupportedRegimeError


@dataclass(frozen=True)
class PotentialParams:
    """Inputs shared by all solvers.

    Parameters
    ----------
    a : float
        Sextic-core length scale, a > 0.
    b : float
        Quartic-well length scale; |b| > |a| is required for binding.
    ell : int
        Angular momentum quantum number, >= 0.
    lambda_cap : float
        Extra dimensionless strength added to the orbital term. Carried
        through `potential_value` but rejected by the solvers, which are
        derived for lambda_cap = 0.
    """

    a: float
    b: float
    ell: int
    lambda_cap: float = 0.0

    def __post_init__(self):
        if not (self.a > 0 and math.isfinite(self.a)):
            raise DomainError(f"a must be positive and finite, got {self.a}")
        if not math.isfinite(self.b):
            raise DomainError(f"b must be finite, got {self.b}")
        if abs(self.b) <= abs(self.a):
            raise DomainError(
                f"|b| > |a| is required for bound states, got a={self.a}, b={self.b}"
            )
        if not (isinstance(self.ell, (int, np.integer)) and self.ell >= 0):
            raise DomainError(f"ell must be a non-negative integer, got {self.ell!r}")
        if not math.isfinite(self.lambda_cap):
            raise DomainError(f"lambda_cap must be finite, got {self.lambda_cap}")

    @property
    def ratio_sq(self) -> float:
        """(b/a)^2, the knob that controls how many states the well holds."""
        return (self.b / self.a) ** 2

    def epsilon(self, energy: float) -> float:
        """Dimensionless energy eps = a^2 E."""
        return self.a**2 * energy

    def x_of_r(self, r):
        """Dimensionless variable x = (r/a)^2."""
        return (np.asarray(r, dtype=float) / self.a) ** 2


def require_lambda_zero(p: PotentialParams, method: str) -> None:
    """Solvers are derived with the orbital term unmodified."""
    if p.lambda_cap != 0.0:
        raise UnsupportedRegimeError(
            f"{method} supports lambda_cap = 0 only, got {p.lambda_cap}"
        )


def potential_value(p: PotentialParams, r):
    """Evaluate V(r). Accepts a scalar or array of radii r > 0."""
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise DomainError("potential_value requires r > 0")
    out = (
        (p.ell * (p.ell + 1) + p.lambda_cap) / (2.0 * r**2)
        - p.b**2 / r**4
        + 0.5 * p.a**4 / r**6
    )
    return out if out.ndim else float(out)


def mapped_potential_value(p: PotentialParams, tau: float, s):
    """Potential in the compactified variable s = (2/pi) arctan(tau r), 0 < s < 1.

    Equals ``potential_value(p, tan(pi s / 2) / tau)`` identically for
    lambda_cap = 0; the mapping is what the finite-difference solver
    discretizes on a uniform s-grid.
    """
    if not tau > 0:
        raise DomainError(f"tau must be positive, got {tau}")
    require_lambda_zero(p, "mapped_potential_value")
    s = np.asarray(s, dtype=float)
    if np.any((s <= 0) | (s >= 1)):
        raise DomainError("mapped_potential_value requires 0 < s < 1")
    t2 = np.tan(0.5 * np.pi * s) ** 2
    out = (0.5 * tau**2 / t2) * (
        p.ell * (p.ell + 1) - 2.0 * (p.b * tau) ** 2 / t2 + (p.a * tau) ** 4 / t2**2
    )
    return out if out.ndim else float(out)
