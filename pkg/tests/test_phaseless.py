import math
import os
import sys
import unittest

import numpy as np

# Add project root to sys.path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from phaseless import (
    observe, phi_matrix, q_matrix, sample_measurements, sample_noise, sign_matrix_apply,
    sign_matrix_dense, sign_matrix_transpose_apply, swap_matrix, swap_matrix_by_rotation, varphi,
)
from util.linalg import unit


class TestMeasurements(unittest.TestCase):
    def test_shape_and_seed(self):
        ens = sample_measurements(30, 12, seed=3)
        self.assertEqual((ens.m, ens.n), (30, 12))
        np.testing.assert_array_equal(ens.A, sample_measurements(30, 12, seed=3).A)
        with self.assertRaises(ValueError):
            sample_measurements(0, 12, seed=3)

    def test_noise_norm(self):
        self.assertAlmostEqual(float(np.linalg.norm(sample_noise(40, 0.25, seed=1))), 0.25)
        np.testing.assert_array_equal(sample_noise(40, 0.0, seed=1), np.zeros(40))
        with self.assertRaises(ValueError):
            sample_noise(40, -1.0, seed=1)

    def test_observe(self):
        ens = sample_measurements(20, 8, seed=5)
        y = np.abs(np.random.default_rng(2).standard_normal(8))
        obs = observe(ens, y)
        np.testing.assert_allclose(obs.b, np.abs(ens.A @ y))
        self.assertEqual(obs.noise_norm, 0.0)
        with self.assertRaises(ValueError):
            observe(ens, np.ones(9))
        with self.assertRaises(ValueError):
            observe(ens, y, eta=np.zeros(3))


class TestSignMatrix(unittest.TestCase):
    def setUp(self):
        rng = np.random.default_rng(11)
        self.A = rng.standard_normal((15, 6))
        self.z = rng.standard_normal(6)
        self.v = rng.standard_normal(6)
        self.r = rng.standard_normal(15)

    def test_apply_matches_dense(self):
        dense = sign_matrix_dense(self.A, self.z)
        np.testing.assert_allclose(sign_matrix_apply(self.A, self.z, self.v), dense @ self.v)
        np.testing.assert_allclose(sign_matrix_transpose_apply(self.A, self.z, self.r), dense.T @ self.r)

    def test_positive_scaling_keeps_signs(self):
        for c in (1e-3, 0.5, 3.7, 1e4):
            np.testing.assert_array_equal(sign_matrix_dense(self.A, c * self.z), sign_matrix_dense(self.A, self.z))

    def test_zero_product_gives_zero_row(self):
        A = self.A.copy()
        A[4] = 0.0
        self.assertTrue(np.all(sign_matrix_dense(A, self.z)[4] == 0.0))


class TestSwapMatrix(unittest.TestCase):
    def setUp(self):
        rng = np.random.default_rng(4)
        self.x = unit(rng.standard_normal(5))
        self.y = unit(rng.standard_normal(5))

    def test_swaps_and_annihilates(self):
        M = swap_matrix(self.x, self.y)
        np.testing.assert_allclose(M.apply(self.x), self.y, atol=1e-12)
        np.testing.assert_allclose(M.apply(self.y), self.x, atol=1e-12)
        basis = np.column_stack([self.x, self.y])
        q, _ = np.linalg.qr(np.column_stack([basis, np.random.default_rng(0).standard_normal((5, 3))]))
        for j in range(2, 5):
            np.testing.assert_allclose(M.apply(q[:, j]), np.zeros(5), atol=1e-12)

    def test_matches_rotation_construction(self):
        np.testing.assert_allclose(
            swap_matrix(self.x, self.y).dense(), swap_matrix_by_rotation(self.x, self.y), atol=1e-12)

    def test_parallel_and_antiparallel(self):
        np.testing.assert_allclose(swap_matrix(self.x, self.x).dense(), np.outer(self.x, self.x), atol=1e-12)
        np.testing.assert_allclose(swap_matrix(self.x, -self.x).dense(), -np.outer(self.x, self.x), atol=1e-12)

    def test_requires_unit_inputs(self):
        with self.assertRaises(ValueError):
            swap_matrix(2.0 * self.x, self.y)


class TestExpectationOperators(unittest.TestCase):
    def test_phi_identical_is_identity(self):
        z = np.array([1.0, 2.0, -0.5])
        np.testing.assert_allclose(phi_matrix(z, 3.0 * z).dense(), np.eye(3), atol=1e-12)

    def test_phi_zero_operator(self):
        phi = phi_matrix(np.zeros(3), np.ones(3))
        np.testing.assert_array_equal(phi.dense(), np.zeros((3, 3)))
        self.assertEqual(phi.spectral_norm(), 0.0)

    def test_q_identical_is_half_identity(self):
        x = np.array([0.5, -1.0])
        np.testing.assert_allclose(q_matrix(x, x).dense(), 0.5 * np.eye(2), atol=1e-12)
        with self.assertRaises(ValueError):
            q_matrix(np.zeros(2), x)

    def test_self_pairs_stay_finite(self):
        rng = np.random.default_rng(31)
        for _ in range(500):
            z = rng.standard_normal(5)
            np.testing.assert_allclose(phi_matrix(z, z).dense(), np.eye(5), atol=1e-12)
            np.testing.assert_allclose(phi_matrix(z, 2.5 * z).dense(), np.eye(5), atol=1e-12)
            np.testing.assert_allclose(phi_matrix(z, -z).dense(), -np.eye(5), atol=1e-12)
            np.testing.assert_allclose(q_matrix(z, z).dense(), 0.5 * np.eye(5), atol=1e-12)
            x = unit(z)
            np.testing.assert_allclose(swap_matrix(x, x).dense(), np.outer(x, x), atol=1e-12)
            np.testing.assert_allclose(swap_matrix_by_rotation(x, x), np.outer(x, x), atol=1e-12)

    def test_nearly_parallel_pair(self):
        z = np.array([0.3, -1.2, 0.7, 2.0])
        w = z + 1e-7 * np.array([1.0, 0.0, 0.0, 0.0])
        phi = phi_matrix(z, w).dense()
        self.assertTrue(np.all(np.isfinite(phi)))
        self.assertLess(float(np.linalg.norm(phi - np.eye(4), 2)), 1e-6)

    def test_analytic_norm_matches_dense(self):
        rng = np.random.default_rng(9)
        for _ in range(20):
            z, w = rng.standard_normal(6), rng.standard_normal(6)
            for op in (phi_matrix(z, w), q_matrix(z, w)):
                self.assertAlmostEqual(op.spectral_norm(), float(np.linalg.norm(op.dense(), 2)), places=10)

    def test_phi_is_the_sign_expectation(self):
        print("\nTesting Phi against a large Gaussian ensemble...")
        rng = np.random.default_rng(21)
        m = 100000
        A = rng.standard_normal((m, 4)) / math.sqrt(m)
        z, w = rng.standard_normal(4), rng.standard_normal(4)
        empirical = sign_matrix_dense(A, z).T @ sign_matrix_dense(A, w)
        self.assertLess(float(np.linalg.norm(empirical - phi_matrix(z, w).dense(), 2)), 0.05)

    def test_phi_continuity(self):
        rng = np.random.default_rng(5)
        eps = 0.05
        for _ in range(200):
            z, w = unit(rng.standard_normal(5)), unit(rng.standard_normal(5))
            zt = z + eps * unit(rng.standard_normal(5)) * rng.uniform()
            wt = w + eps * unit(rng.standard_normal(5)) * rng.uniform()
            gap = np.linalg.norm(phi_matrix(zt, wt).dense() - phi_matrix(z, w).dense(), 2)
            self.assertLessEqual(gap, 88.0 / math.pi * eps)


class TestVarphi(unittest.TestCase):
    def test_values(self):
        self.assertAlmostEqual(varphi(0.0), 0.0, places=12)
        self.assertAlmostEqual(varphi(math.pi), 0.0, places=6)
        self.assertAlmostEqual(varphi(math.pi / 2), math.acos(2.0 / math.pi), places=12)
        with self.assertRaises(ValueError):
            varphi(-1.0)

    def test_cosine_floor(self):
        grid = np.linspace(0.0, math.pi, 1000)
        cosines = np.cos(varphi(grid))
        self.assertGreaterEqual(float(cosines.min()), 2.0 / math.pi - 1e-12)
        self.assertTrue(np.all(varphi(grid) <= grid + 1e-12))

    def test_matches_magnitude_cosine(self):
        rng = np.random.default_rng(8)
        A = rng.standard_normal((20000, 2))
        for theta in (0.3, 1.0, 2.0):
            z = np.array([1.0, 0.0])
            w = np.array([math.cos(theta), math.sin(theta)])
            az, aw = np.abs(A @ z), np.abs(A @ w)
            cos_emp = float(az @ aw / (np.linalg.norm(az) * np.linalg.norm(aw)))
            self.assertAlmostEqual(cos_emp, math.cos(varphi(theta)), delta=0.03)


if __name__ == '__main__':
    unittest.main()
