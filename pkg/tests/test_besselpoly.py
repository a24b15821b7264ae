import math
from fractions import Fraction

import numpy as np
import pytest

import identity_suite as ids
from invsextic import (
    BesselFamily,
    BPolyParams,
    DegenerateParameterError,
    DomainError,
    InvariantViolationError,
    bessel_norm,
    bessel_sequence,
    bpoly_sequence,
)
from invsextic.besselpoly import bessel_norms, max_degree

MU = -6.125  # matches (b/a)^2 = 12.25, the workhorse parameter set


class TestFamily:
    def test_max_degree(self):
        assert max_degree(-6.125) == 5
        assert max_degree(-2.5) == 1
        assert max_degree(-10.25) == 9
        # boundary: -mu - 1/2 integral means that degree itself is excluded
        assert max_degree(-6.5) == 5

    def test_auto_n_max(self):
        assert BesselFamily(MU).n_max == 5
        assert BesselFamily(MU, 3).n_max == 3

    def test_invalid_families(self):
        with pytest.raises(DomainError):
            BesselFamily(-0.4)  # no valid degrees
        with pytest.raises(InvariantViolationError):
            BesselFamily(-6.125, 6)

    def test_recursion_definite(self):
        # coefficients multiplying Y_{n+1} and Y_{n-1} share their sign
        fam = BesselFamily(MU)
        from invsextic.besselpoly import _recursion_coeffs

        for n in range(1, fam.n_max):
            _, c_minus, c_plus = _recursion_coeffs(MU, n)
            assert c_minus * c_plus > 0


class TestSequence:
    def test_degree_zero_is_one(self):
        for mu in (-2.5, -6.125, -10.25):
            fam = BesselFamily(mu)
            assert bessel_sequence(fam, 0.37)[0] == 1.0

    def test_degree_one_closed_form(self):
        fam = BesselFamily(MU)
        for x in (0.2, 1.0, 5.5):
            assert bessel_sequence(fam, x)[1] == pytest.approx(
                1.0 + 2.0 * (MU + 1.0) * x, rel=1e-14
            )

    def test_matches_terminating_series_exact(self):
        # rational-arithmetic oracle at mu = -49/8, x = 7/10
        fam = BesselFamily(MU)
        got = bessel_sequence(fam, 0.7)
        for n in range(6):
            ref = ids.series_value_exact(Fraction(-49, 8), n, Fraction(7, 10))
            assert got[n] == pytest.approx(float(ref), rel=1e-10)

    def test_vectorized_matches_scalar(self):
        fam = BesselFamily(MU)
        xs = np.array([0.3, 1.7, 9.0])
        block = bessel_sequence(fam, xs)
        assert block.shape == (6, 3)
        for j, x in enumerate(xs):
            assert np.allclose(block[:, j], bessel_sequence(fam, float(x)), rtol=1e-14)

    def test_rejects_nonpositive_x(self):
        fam = BesselFamily(MU)
        with pytest.raises(DomainError):
            bessel_sequence(fam, 0.0)
        with pytest.raises(DomainError):
            bessel_sequence(fam, np.array([1.0, -2.0]))


class TestNorm:
    def test_degree_zero_value(self):
        fam = BesselFamily(MU)
        want = math.sqrt(11.25 / math.gamma(12.25))
        assert bessel_norm(fam, 0) == pytest.approx(want, rel=1e-13)

    def test_inverts_closed_form_norm(self):
        fam = BesselFamily(MU)
        for n in range(6):
            prod = bessel_norm(fam, n) ** 2 * ids.orthogonality_norm(fam, n)
            assert prod == pytest.approx(1.0, rel=1e-12)

    def test_against_quadrature(self):
        assert ids.check_norm_constants(BesselFamily(MU), deg_cap=3) < 1e-6

    def test_large_family_no_overflow(self):
        # Gamma(-n-2mu) is astronomically large here; log-gamma keeps A_n finite
        fam = BesselFamily(-28.125)
        norms = bessel_norms(fam)
        assert np.all(np.isfinite(norms)) and np.all(norms > 0)

    def test_degree_out_of_range(self):
        with pytest.raises(DomainError):
            bessel_norm(BesselFamily(MU), 6)


class TestIdentities:
    """Appendix-style identity battery at the workhorse parameter."""

    FAM = BesselFamily(MU)

    def test_orthogonality(self):
        assert ids.check_orthogonality(self.FAM, deg_cap=4) < 1e-6

    def test_differential_equation(self):
        assert ids.check_differential_equation(self.FAM) < 1e-7

    def test_forward_shift(self):
        assert ids.check_forward_shift(self.FAM) < 1e-8

    def test_backward_shift_pair(self):
        assert ids.check_backward_shift_pair(self.FAM) < 1e-8

    def test_backward_shift_recursion(self):
        assert ids.check_backward_shift_recursion(self.FAM) < 1e-8

    def test_generating_function(self):
        err, bound = ids.check_generating_function(self.FAM)
        assert err <= bound

    def test_laguerre_connection(self):
        assert ids.check_laguerre_connection(self.FAM) < 1e-10


class TestBPoly:
    def test_b0_is_one(self):
        for mu, count in [(-6.125, 6), (-2.5, 2), (-10.25, 10)]:
            assert bpoly_sequence(mu, BPolyParams(gamma=-0.3, z=-1.2), count)[0] == 1.0

    def test_b1_closed_form(self):
        mu, gamma, z = MU, -0.23, -1.9
        got = bpoly_sequence(mu, BPolyParams(gamma=gamma, z=z), 2)[1]
        want = (
            (z + 2 * mu / (mu * (mu + 1)) - gamma * (mu + 0.5) ** 2)
            * (mu + 1)
            * (mu + 0.5)
            / (2 * mu + 1)
        )
        assert got == pytest.approx(want, rel=1e-12)

    def test_b1_satisfies_recursion_row(self):
        # substitute B_0, B_1 back into the n = 0 three-term relation
        mu, gamma, z = MU, -0.23, -1.9
        b = bpoly_sequence(mu, BPolyParams(gamma=gamma, z=z), 2)
        lhs = z * b[0]
        rhs = (
            (-2 * mu / (mu * (mu + 1)) + gamma * (mu + 0.5) ** 2) * b[0]
            + (2 * mu + 1) / ((mu + 1) * (mu + 0.5)) * b[1]
        )
        assert lhs == pytest.approx(rhs, rel=1e-12)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_degree_in_z(self, n):
        # the (n+1)-th finite difference over n+2 equispaced z samples vanishes
        mu, gamma = MU, -0.37
        zs = np.linspace(-3.0, 2.0, n + 2)
        vals = np.array(
            [bpoly_sequence(mu, BPolyParams(gamma=gamma, z=z), n + 1)[n] for z in zs]
        )
        resid = np.diff(vals, n + 1)
        assert np.all(np.abs(resid) < 1e-9 * max(1.0, np.max(np.abs(vals))))

    def test_from_epsilon(self):
        bp = BPolyParams.from_epsilon(-4.0, ell=3)
        assert bp.gamma == pytest.approx(-2.0)
        assert bp.z == pytest.approx(-0.5 * 3.5**2)
        with pytest.raises(DomainError):
            BPolyParams.from_epsilon(0.0, ell=0)

    def test_degenerate_parameter(self):
        # integer negative mu hits a zero denominator at a visited degree
        with pytest.raises(DegenerateParameterError):
            bpoly_sequence(-3.0, BPolyParams(gamma=-0.5, z=-1.0), 6)

    def test_count_validation(self):
        with pytest.raises(DomainError):
            bpoly_sequence(MU, BPolyParams(gamma=-0.5, z=-1.0), 0)
