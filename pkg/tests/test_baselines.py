import os
import sys
import unittest

import numpy as np

# Add project root to sys.path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from baselines import (
    COMPARE_COLUMNS, hard_threshold, sample_sparse_signal, sign_invariant_error, sweep_compare,
    thresholded_amplitude_flow,
)
from models.network import NetworkDims
from models.solver_config import SolverConfig, SparseSolverConfig
from phaseless import sample_measurements


class TestHelpers(unittest.TestCase):
    def test_hard_threshold(self):
        z = np.array([0.1, -3.0, 2.0, 0.5])
        np.testing.assert_array_equal(hard_threshold(z, 2), np.array([0.0, -3.0, 2.0, 0.0]))
        np.testing.assert_array_equal(hard_threshold(z, 4), z)

    def test_sparse_signal(self):
        y = sample_sparse_signal(50, 4, seed=2)
        self.assertEqual(int(np.count_nonzero(y)), 4)
        self.assertAlmostEqual(float(np.linalg.norm(y)), 1.0)
        with self.assertRaises(ValueError):
            sample_sparse_signal(5, 6, seed=0)

    def test_sign_invariant_error(self):
        y = np.array([0.6, 0.0, -0.8])
        self.assertEqual(sign_invariant_error(-y, y), 0.0)
        self.assertAlmostEqual(sign_invariant_error(np.zeros(3), y), 1.0)


class TestAmplitudeFlow(unittest.TestCase):
    def test_zero_data_gives_zero(self):
        A = sample_measurements(30, 20, seed=1)
        out = thresholded_amplitude_flow(A, np.zeros(30), SparseSolverConfig(3))
        np.testing.assert_array_equal(out, np.zeros(20))

    def test_sparsity_larger_than_signal(self):
        A = sample_measurements(30, 20, seed=1)
        with self.assertRaises(ValueError):
            thresholded_amplitude_flow(A, np.ones(30), SparseSolverConfig(21))

    def test_dense_recovery(self):
        print("\nTesting amplitude flow without thresholding...")
        rng = np.random.default_rng(4)
        y = rng.standard_normal(10)
        A = sample_measurements(200, 10, seed=5)
        y_hat = thresholded_amplitude_flow(A, np.abs(A.A @ y), SparseSolverConfig(10))
        self.assertLess(sign_invariant_error(y_hat, y), 1e-3)

    def test_sparse_recovery(self):
        y = np.zeros(50)
        y[3], y[17] = 0.8, -0.6
        successes = 0
        for seed in range(5):
            A = sample_measurements(400, 50, seed=seed)
            y_hat = thresholded_amplitude_flow(A, np.abs(A.A @ y), SparseSolverConfig(2, seed=seed))
            successes += sign_invariant_error(y_hat, y) < 1e-3
        self.assertGreaterEqual(successes, 4)


class TestSweepCompare(unittest.TestCase):
    def test_small_table(self):
        rows = sweep_compare(
            {"dims": NetworkDims(2, [15, 40]), "solver": SolverConfig(max_iters=200)},
            {"n": 40, "config": SparseSolverConfig(2, iters=100)},
            [0, 30], trials=2, seed=3,
        )
        self.assertEqual(len(rows), 4)
        self.assertEqual(set(rows[0]), set(COMPARE_COLUMNS))
        for row in rows[:2]:
            self.assertEqual(row["m"], 0)
            self.assertEqual(row["success_rate"], 0.0)
            self.assertEqual(row["mean_err"], 1.0)
        self.assertEqual({r["algo"] for r in rows}, {"dpr", "sparse_taf"})
        self.assertTrue(all(r["trials"] == 2 for r in rows))

    def test_empty_grid(self):
        with self.assertRaises(ValueError):
            sweep_compare({}, {}, [], trials=1, seed=0)


if __name__ == '__main__':
    unittest.main()
