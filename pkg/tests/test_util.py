import math
import os
import sys
import unittest

import numpy as np

# Add project root to sys.path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from util.linalg import angle_between, leading_eigenvector, power_iteration_norm, spectral_norm, unit
from util.logger import logger, setup_logger
from util.seeding import NET_STREAM, RESTART_STREAM, derive_seed


class TestSeeding(unittest.TestCase):
    def test_counter_scheme(self):
        self.assertEqual(derive_seed(42, RESTART_STREAM, 3), derive_seed(42, RESTART_STREAM, 3))
        self.assertNotEqual(derive_seed(42, RESTART_STREAM, 3), derive_seed(42, RESTART_STREAM, 4))
        self.assertNotEqual(derive_seed(42, NET_STREAM, 0), derive_seed(42, RESTART_STREAM, 0))
        self.assertNotEqual(derive_seed(42, NET_STREAM), derive_seed(43, NET_STREAM))
        with self.assertRaises(ValueError):
            derive_seed(None, NET_STREAM)


class TestLinalg(unittest.TestCase):
    def test_power_iteration_matches_svd(self):
        M = np.random.default_rng(3).standard_normal((300, 40))
        exact = float(np.linalg.norm(M, 2))
        self.assertAlmostEqual(power_iteration_norm(M, iters=2000, tol=1e-12) / exact, 1.0, places=6)
        self.assertAlmostEqual(spectral_norm(M), exact, places=10)

    def test_leading_eigenvector(self):
        S = np.diag([5.0, 1.0, 0.5])
        v = leading_eigenvector(S)
        self.assertAlmostEqual(abs(v[0]), 1.0, places=6)

    def test_angles(self):
        self.assertAlmostEqual(angle_between(np.array([1.0, 0.0]), np.array([0.0, 2.0])), math.pi / 2)
        self.assertAlmostEqual(angle_between(np.array([1.0, 1.0]), np.array([-1.0, -1.0])), math.pi)
        with self.assertRaises(ValueError):
            unit(np.zeros(3))

    def test_angle_of_a_vector_with_itself(self):
        rng = np.random.default_rng(14)
        for _ in range(200):
            x = rng.standard_normal(5)
            self.assertLess(angle_between(x, 3.0 * x), 1e-12)
            self.assertGreater(angle_between(x, -x), math.pi - 1e-12)

    def test_angle_triangle_inequality(self):
        rng = np.random.default_rng(15)
        for _ in range(500):
            x1, x2, y = rng.standard_normal((3, 4))
            gap = abs(angle_between(x1, y) - angle_between(x2, y))
            self.assertLessEqual(gap, angle_between(x1, x2) + 1e-12)


class TestLogger(unittest.TestCase):
    def test_single_handler_set(self):
        count = len(logger.handlers)
        self.assertIs(setup_logger("DPR"), logger)
        self.assertEqual(len(logger.handlers), count)


if __name__ == '__main__':
    unittest.main()
