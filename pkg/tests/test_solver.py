import os
import sys
import unittest

import numpy as np

# Add project root to sys.path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from landscape import make_instance, sample_instance
from models.network import NetworkDims
from models.solver_config import ADAPTIVE_MOMENT, SolverConfig, default_step_size
from models.trace import CONVERGED, NUMERIC_FAILURE, IterateTrace, TraceRecord
from solver import (
    dpr_step, initial_point, reconstruction_error, relative_latent_error, run_restarts, solve,
    solve_two_branch,
)
from solver.adaptive import AdaptiveMomentState
from solver.restarts import restart_seed


class TestSolverConfig(unittest.TestCase):
    def test_default_step(self):
        self.assertAlmostEqual(default_step_size(2), 0.1)
        self.assertAlmostEqual(default_step_size(1), 0.2)
        self.assertAlmostEqual(SolverConfig().resolved_step(3), 8.0 / 90.0)
        self.assertEqual(SolverConfig(step_size=0.05).resolved_step(3), 0.05)

    def test_validation(self):
        with self.assertRaises(ValueError):
            SolverConfig(variant="newton")
        with self.assertRaises(ValueError):
            SolverConfig(max_iters=0)
        with self.assertRaises(ValueError):
            SolverConfig(step_size=-1.0)

    def test_replace_keeps_other_fields(self):
        cfg = SolverConfig(max_iters=77, restarts=4)
        other = cfg.replace(seed=9)
        self.assertEqual((other.max_iters, other.restarts, other.seed), (77, 4, 9))
        self.assertEqual(SolverConfig.from_dict(cfg.to_dict()).to_dict(), cfg.to_dict())


class TestDprStep(unittest.TestCase):
    def setUp(self):
        self.inst = sample_instance(NetworkDims(4, [50, 200]), 100, seed=2)

    def test_negation_from_negative_truth(self):
        x_next, negated = dpr_step(self.inst, -self.inst.x_star, 0.1)
        self.assertTrue(negated)
        np.testing.assert_allclose(x_next, self.inst.x_star, atol=1e-10)

    def test_no_negation_when_disabled(self):
        _, negated = dpr_step(self.inst, -self.inst.x_star, 0.1, negation=False)
        self.assertFalse(negated)

    def test_rejects_bad_inputs(self):
        with self.assertRaises(ValueError):
            dpr_step(self.inst, np.zeros(4), 0.1)
        with self.assertRaises(ValueError):
            dpr_step(self.inst, self.inst.x_star, 0.0)


class TestSolve(unittest.TestCase):
    def setUp(self):
        self.inst = sample_instance(NetworkDims(4, [50, 200]), 100, seed=2)
        self.x_star = self.inst.x_star
        self.u = np.random.default_rng(1).standard_normal(4)
        self.u /= np.linalg.norm(self.u)

    def test_local_convergence(self):
        print("\nTesting local convergence from a perturbed truth...")
        x0 = self.x_star + 0.05 * np.linalg.norm(self.x_star) * self.u
        trace = solve(self.inst, SolverConfig(), x0)
        self.assertEqual(trace.status, CONVERGED)
        self.assertLess(trace.rel_latent_error(), 1e-4)
        self.assertLess(trace.final_f, trace.diagnostics["f_x0"])
        self.assertLess(reconstruction_error(self.inst.net, trace.final_x, self.inst.y_star), 1e-4)

    def test_negation_escapes_negative_basin(self):
        x0 = -self.x_star + 1e-3 * self.u
        trace = solve(self.inst, SolverConfig(), x0)
        self.assertGreaterEqual(trace.negation_count, 1)
        self.assertLess(trace.rel_latent_error(), 1e-3)

    def test_two_branch_picks_true_branch(self):
        x0 = -self.x_star + 1e-3 * self.u
        trace = solve_two_branch(self.inst, SolverConfig(max_iters=2000), x0)
        self.assertEqual(trace.branch, -1)
        self.assertLess(trace.rel_latent_error(), 1e-3)
        self.assertGreater(trace.diagnostics["other_branch_final_f"], trace.final_f)
        self.assertEqual(trace.negation_count, 0)

    def test_adaptive_variant_descends(self):
        x0 = self.x_star + 0.3 * np.linalg.norm(self.x_star) * self.u
        cfg = SolverConfig(variant=ADAPTIVE_MOMENT, max_iters=400)
        trace = solve(self.inst, cfg, x0)
        self.assertLess(trace.final_f, trace.diagnostics["f_x0"])

    def test_non_finite_data_stops(self):
        eta = np.zeros(self.inst.ensemble.m)
        eta[0] = np.inf
        bad = make_instance(self.inst.net, self.inst.ensemble, self.x_star, eta)
        trace = solve(bad, SolverConfig(), self.x_star + 0.1 * self.u)
        self.assertEqual(trace.status, NUMERIC_FAILURE)

    def test_initial_point_checked(self):
        with self.assertRaises(ValueError):
            solve(self.inst, SolverConfig(), np.zeros(4))
        with self.assertRaises(ValueError):
            solve(self.inst, SolverConfig(), np.ones(3))


class TestRestarts(unittest.TestCase):
    def setUp(self):
        self.inst = sample_instance(NetworkDims(3, [30, 120]), 60, seed=5)
        self.cfg = SolverConfig(max_iters=400, restarts=3, seed=17)

    def test_deterministic_best(self):
        a = run_restarts(self.inst, self.cfg)
        b = run_restarts(self.inst, self.cfg, workers=3)
        np.testing.assert_array_equal(a.final_x, b.final_x)
        self.assertEqual(len(a.diagnostics["restart_scores"]), 3)
        scores = a.diagnostics["restart_scores"]
        self.assertEqual(scores[a.diagnostics["restart_index"]], min(scores))

    def test_unknown_method(self):
        with self.assertRaises(ValueError):
            run_restarts(self.inst, self.cfg, method="gauss_newton")

    def test_initial_point_seeded(self):
        np.testing.assert_array_equal(initial_point(3, 4), initial_point(3, 4))

    def test_single_restart_is_plain_solve(self):
        cfg = self.cfg.replace(restarts=1)
        seed = restart_seed(cfg.seed, 0)
        expected = solve(self.inst, cfg.replace(seed=seed), initial_point(3, seed))
        np.testing.assert_array_equal(run_restarts(self.inst, cfg).final_x, expected.final_x)

    def test_blank_reconstruction_error(self):
        y = self.inst.y_star
        self.assertAlmostEqual(reconstruction_error(self.inst.net, np.zeros(3), y),
                               float(np.linalg.norm(y) / np.sqrt(y.size)))
        self.assertEqual(reconstruction_error(self.inst.net, self.inst.x_star, y), 0.0)


class TestMetricsAndTrace(unittest.TestCase):
    def test_relative_error(self):
        x = np.array([3.0, 4.0])
        self.assertEqual(relative_latent_error(x, x), 0.0)
        self.assertAlmostEqual(relative_latent_error(np.zeros(2), x), 1.0)

    def test_rate_estimate(self):
        trace = IterateTrace(x_star=np.ones(2))
        for t in range(40):
            trace.append(TraceRecord(t, np.ones(2), 0.9 ** (2 * t)))
        self.assertAlmostEqual(trace.convergence_rate(), 0.9, places=6)
        self.assertEqual(trace.monotonicity_violations(), 0.0)

    def test_negated_steps_not_counted_as_violations(self):
        trace = IterateTrace()
        trace.append(TraceRecord(0, np.ones(2), 1.0))
        trace.append(TraceRecord(1, np.ones(2), 2.0, negated=True))
        trace.append(TraceRecord(2, np.ones(2), 0.5))
        self.assertEqual(trace.monotonicity_violations(), 0.0)
        self.assertEqual(trace.negation_count, 1)

    def test_rows(self):
        trace = IterateTrace(x_star=np.array([1.0, 0.0]))
        trace.append(TraceRecord(0, np.array([0.5, 0.0]), 0.2, grad_norm=0.1))
        row = trace.to_rows()[0]
        self.assertEqual(set(row), {"t", "f", "grad_norm", "negated", "rel_latent_err"})
        self.assertAlmostEqual(row["rel_latent_err"], 0.5)

    def test_adam_first_step(self):
        state = AdaptiveMomentState(3, 0.01, (0.9, 0.999), 1e-8)
        step = state.direction(np.array([2.0, -0.5, 1e-3]))
        np.testing.assert_allclose(step, 0.01 * np.array([1.0, -1.0, 1.0]), rtol=1e-4)


if __name__ == '__main__':
    unittest.main()
