import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest

from invsextic import (
    DomainError,
    InvariantViolationError,
    NotPositiveDefiniteError,
    QuadratureRule,
    TridiagonalSymmetric,
    dense_eigen,
    fornberg_weights,
    gauss_laguerre,
    generalized_sym_eigen,
    symtri_eigen,
)


def sturm_count(diag, off, x):
    """Number of eigenvalues strictly below x (Sturm sequence recurrence)."""
    count = 0
    d = diag[0] - x
    if d < 0:
        count += 1
    for i in range(1, len(diag)):
        denom = d if d != 0 else 1e-300
        d = diag[i] - x - off[i - 1] ** 2 / denom
        if d < 0:
            count += 1
    return count


def sturm_bisection(diag, off, k, lo, hi, tol=1e-12):
    """k-th smallest eigenvalue by bisection on the Sturm count."""
    while hi - lo > tol * max(1.0, abs(lo), abs(hi)):
        mid = 0.5 * (lo + hi)
        if sturm_count(diag, off, mid) <= k:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def charpoly_exact(a_int):
    """Characteristic polynomial coefficients (monic) via Faddeev-LeVerrier
    in exact rational arithmetic."""
    n = a_int.shape[0]
    a = [[Fraction(int(v)) for v in row] for row in a_int]
    iden = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    coeffs = [Fraction(1)]
    m = [row[:] for row in iden]
    for k in range(1, n + 1):
        am = [
            [sum(a[i][t] * m[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
        c = -sum(am[i][i] for i in range(n)) / k
        coeffs.append(c)
        m = [[am[i][j] + (c if i == j else 0) for j in range(n)] for i in range(n)]
    return coeffs


class TestSymtri:
    def test_one_by_one(self):
        vals, _ = symtri_eigen(TridiagonalSymmetric([3.7], []))
        assert vals.tolist() == [3.7]

    def test_two_by_two(self):
        vals, _ = symtri_eigen(TridiagonalSymmetric([0.0, 0.0], [1.0]))
        assert np.allclose(vals, [-1.0, 1.0])

    def test_random_against_sturm_bisection(self):
        rng = np.random.default_rng(7)
        diag = rng.standard_normal(8)
        off = rng.standard_normal(7)
        vals, _ = symtri_eigen(TridiagonalSymmetric(diag, off))
        assert np.all(np.diff(vals) >= 0)
        bound = np.abs(diag).max() + 2 * np.abs(off).max() + 1
        for k in range(8):
            ref = sturm_bisection(diag, off, k, -bound, bound)
            assert vals[k] == pytest.approx(ref, abs=1e-9)

    def test_eigenvectors(self):
        rng = np.random.default_rng(11)
        t = TridiagonalSymmetric(rng.standard_normal(6), rng.standard_normal(5))
        vals, vecs = symtri_eigen(t, vectors=True)
        dense = t.to_dense()
        assert np.max(np.abs(vecs.T @ vecs - np.eye(6))) < 1e-10
        resid = dense @ vecs - vecs * vals
        assert np.max(np.abs(resid)) < 1e-10 * np.linalg.norm(dense)

    def test_trace_identity(self):
        rng = np.random.default_rng(3)
        t = TridiagonalSymmetric(rng.standard_normal(12), rng.standard_normal(11))
        vals, _ = symtri_eigen(t)
        scale = np.linalg.norm(t.to_dense())
        assert vals.sum() == pytest.approx(t.diag.sum(), abs=1e-9 * scale)

    def test_shape_validation(self):
        with pytest.raises(DomainError):
            TridiagonalSymmetric([1.0, 2.0], [1.0, 1.0])
        with pytest.raises(InvariantViolationError):
            TridiagonalSymmetric([1.0, np.inf], [0.0])


class TestGeneralized:
    def test_identity_overlap_reduces_to_standard(self):
        rng = np.random.default_rng(5)
        m = rng.standard_normal((5, 5))
        h = m + m.T
        vals, _ = generalized_sym_eigen(h, np.eye(5))
        assert np.allclose(vals, np.linalg.eigvalsh(h), atol=1e-12)

    def test_decoupled_diagonal(self):
        vals, _ = generalized_sym_eigen(np.array([2.0, 8.0]), np.diag([1.0, 2.0]))
        assert np.allclose(np.sort(vals), [2.0, 4.0])

    def test_scaling_rules(self):
        rng = np.random.default_rng(9)
        m = rng.standard_normal((6, 6))
        h = m + m.T
        q = rng.standard_normal((6, 6))
        omega = q @ q.T + 6 * np.eye(6)
        base, _ = generalized_sym_eigen(h, omega)
        for c in (0.5, 3.0):
            scaled_h, _ = generalized_sym_eigen(c * h, omega)
            assert np.allclose(scaled_h, c * base, rtol=1e-12)
            scaled_o, _ = generalized_sym_eigen(h, c * omega)
            assert np.allclose(scaled_o, base / c, rtol=1e-12)

    def test_residual_and_orthogonality(self):
        rng = np.random.default_rng(17)
        m = rng.standard_normal((7, 7))
        h = m + m.T
        q = rng.standard_normal((7, 7))
        omega = q @ q.T + 7 * np.eye(7)
        vals, vecs = generalized_sym_eigen(h, omega, vectors=True)
        for k in range(7):
            r = h @ vecs[:, k] - vals[k] * (omega @ vecs[:, k])
            tol = 1e-9 * (np.linalg.norm(h) + abs(vals[k]) * np.linalg.norm(omega))
            assert np.linalg.norm(r) <= tol
        gram = vecs.T @ omega @ vecs
        assert np.max(np.abs(gram - np.eye(7))) < 1e-10

    def test_tridiagonal_inputs(self):
        h = TridiagonalSymmetric([1.0, 2.0, 3.0], [0.1, 0.2])
        omega = TridiagonalSymmetric([1.0, 1.0, 1.0], [0.0, 0.0])
        vals, _ = generalized_sym_eigen(h, omega)
        ref = np.linalg.eigvalsh(h.to_dense())
        assert np.allclose(vals, ref, atol=1e-12)

    def test_trace_identity(self):
        rng = np.random.default_rng(41)
        m = rng.standard_normal((6, 6))
        h = m + m.T
        q = rng.standard_normal((6, 6))
        omega = q @ q.T + 6 * np.eye(6)
        vals, _ = generalized_sym_eigen(h, omega)
        want = np.trace(np.linalg.solve(omega, h))
        assert vals.sum() == pytest.approx(want, abs=1e-9 * np.linalg.norm(h))

    def test_not_positive_definite(self):
        with pytest.raises(NotPositiveDefiniteError):
            generalized_sym_eigen(np.eye(2), np.diag([1.0, -1.0]))


class TestDense:
    def test_rotation_pair(self):
        vals, _ = dense_eigen(np.array([[0.0, 1.0], [-1.0, 0.0]]))
        assert sorted(np.round(vals.imag, 12).tolist()) == [-1.0, 1.0]
        assert np.allclose(vals.real, 0.0, atol=1e-14)

    def test_upper_triangular(self):
        m = np.triu(np.arange(1.0, 10.0).reshape(3, 3))
        vals, _ = dense_eigen(m)
        assert np.allclose(sorted(vals.real), sorted(np.diag(m)), atol=1e-12)
        assert np.allclose(vals.imag, 0.0, atol=1e-14)

    def test_random_against_charpoly_roots(self):
        # integer matrix: exact characteristic polynomial, roots at 50 digits
        rng = np.random.default_rng(23)
        a = rng.integers(-9, 10, size=(10, 10))
        coeffs = charpoly_exact(a)
        with mpmath.workdps(50):
            roots = mpmath.polyroots([mpmath.mpf(c.numerator) / c.denominator
                                      for c in coeffs], maxsteps=200)
        ref = np.array([complex(z) for z in roots])
        vals, _ = dense_eigen(a.astype(float))
        scale = np.abs(ref).max()
        for z in ref:
            assert np.min(np.abs(vals - z)) < 1e-7 * scale

    def test_trace_identity(self):
        rng = np.random.default_rng(29)
        a = rng.standard_normal((9, 9))
        vals, _ = dense_eigen(a)
        assert vals.sum().real == pytest.approx(np.trace(a), abs=1e-9 * np.linalg.norm(a))
        assert vals.sum().imag == pytest.approx(0.0, abs=1e-9 * np.linalg.norm(a))

    def test_vectors(self):
        rng = np.random.default_rng(31)
        a = rng.standard_normal((6, 6))
        vals, vecs = dense_eigen(a, vectors=True)
        resid = a @ vecs - vecs * vals
        assert np.max(np.abs(resid)) < 1e-8 * np.linalg.norm(a)

    def test_validation(self):
        with pytest.raises(DomainError):
            dense_eigen(np.ones((2, 3)))
        with pytest.raises(InvariantViolationError):
            dense_eigen(np.array([[1.0, np.nan], [0.0, 1.0]]))


class TestGaussLaguerre:
    def test_order_one(self):
        rule = gauss_laguerre(0.0, 1)
        assert rule.nodes.tolist() == pytest.approx([1.0])
        assert rule.weights.tolist() == pytest.approx([1.0])

    @pytest.mark.parametrize("alpha", [0.0, 0.5, 2.5, -0.5])
    @pytest.mark.parametrize("order", [4, 20, 64])
    def test_weight_sum(self, alpha, order):
        rule = gauss_laguerre(alpha, order)
        assert rule.weights.sum() == pytest.approx(
            math.gamma(alpha + 1.0), rel=1e-12
        )

    def test_gamma_moment(self):
        rule = gauss_laguerre(0.5, 20)
        got = rule.integrate(lambda y: y**3)
        assert got == pytest.approx(math.gamma(4.5), rel=1e-12)

    @pytest.mark.parametrize("alpha", [0.0, 1.5])
    def test_degree_exactness(self, alpha):
        # exact for monomials up to degree 2*order - 1: moments are Gamma values
        order = 12
        rule = gauss_laguerre(alpha, order)
        for k in range(2 * order):
            got = rule.integrate(lambda y, k=k: y**k)
            assert got == pytest.approx(math.gamma(alpha + k + 1), rel=1e-11)

    def test_nodes_increasing_positive(self):
        rule = gauss_laguerre(1.0, 30)
        assert np.all(rule.nodes > 0)
        assert np.all(np.diff(rule.nodes) > 0)

    def test_validation(self):
        with pytest.raises(DomainError):
            gauss_laguerre(-1.0, 4)
        with pytest.raises(DomainError):
            gauss_laguerre(0.0, 0)

    def test_rule_invariants_enforced(self):
        with pytest.raises(InvariantViolationError):
            QuadratureRule(nodes=[1.0, 2.0], weights=[0.5, -0.1], alpha=0.0)
        with pytest.raises(InvariantViolationError):
            QuadratureRule(nodes=[2.0, 1.0], weights=[0.5, 0.5], alpha=0.0)


def vandermonde_weights_exact(order, offsets):
    """Solve the moment system sum_j w_j o_j^p = p! [p == order] in rationals."""
    n = len(offsets)
    rows = [[Fraction(o) ** p for o in offsets] for p in range(n)]
    rhs = [Fraction(math.factorial(order)) if p == order else Fraction(0) for p in range(n)]
    # Gaussian elimination in exact arithmetic
    aug = [row + [r] for row, r in zip(rows, rhs)]
    for col in range(n):
        piv = next(i for i in range(col, n) if aug[i][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col] / aug[col][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return [aug[i][n] / aug[i][i] for i in range(n)]


class TestFornberg:
    def test_classic_second_derivative(self):
        w = fornberg_weights(2, [-1, 0, 1]).weights
        assert np.allclose(w, [1.0, -2.0, 1.0], atol=1e-14)

    def test_central_first_derivative(self):
        w = fornberg_weights(1, [-1, 0, 1]).weights
        assert np.allclose(w, [-0.5, 0.0, 0.5], atol=1e-14)

    def test_one_sided_forward(self):
        w = fornberg_weights(1, [0, 1, 2, 3, 4]).weights
        assert np.allclose(w, [-25 / 12, 4.0, -3.0, 4 / 3, -0.25], atol=1e-12)

    @pytest.mark.parametrize("order", [1, 2])
    @pytest.mark.parametrize(
        "offsets",
        [(-2, -1, 0, 1, 2), (0, 1, 2, 3), (-3, -1, 0, 2, 5), (-1, 0, 2)],
    )
    def test_rational_vandermonde_oracle(self, order, offsets):
        if len(offsets) < order + 1:
            pytest.skip("not enough points")
        got = fornberg_weights(order, list(offsets)).weights
        ref = vandermonde_weights_exact(order, offsets)
        assert np.allclose(got, [float(r) for r in ref], rtol=1e-12, atol=1e-12)

    def test_monomial_reproduction(self):
        # weights differentiate every monomial up to len(offsets)-1 exactly
        offsets = [-2, -1, 0, 1, 2, 3]
        for order in (1, 2):
            w = fornberg_weights(order, offsets).weights
            for p in range(len(offsets)):
                got = sum(wj * oj**p for wj, oj in zip(w, offsets))
                want = math.factorial(order) if p == order else 0.0
                assert got == pytest.approx(want, abs=1e-10)

    def test_weight_sum_zero(self):
        for order, offsets in [(1, [0, 1, 2]), (2, [-1, 0, 1, 2])]:
            w = fornberg_weights(order, offsets).weights
            assert w.sum() == pytest.approx(0.0, abs=1e-12)

    def test_validation(self):
        with pytest.raises(DomainError):
            fornberg_weights(2, [0, 1])
        with pytest.raises(DomainError):
            fornberg_weights(1, [0, 0, 1])
        with pytest.raises(DomainError):
            fornberg_weights(3, [0, 1, 2, 3])
