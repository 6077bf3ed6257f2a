"""
Subgradient descent in the latent space with the negation step.

Each iteration compares f(x_t) with f(-x_t), keeps the smaller one as x-bar_t
and moves along a Clarke subgradient at x-bar_t.
"""
import math

import numpy as np

import config
from landscape.objective import objective, subgradient
from models.solver_config import ADAPTIVE_MOMENT
from models.trace import (
    CONVERGED, DIVERGED, MAX_ITERS, NUMERIC_FAILURE, STALLED, IterateTrace, TraceRecord,
)
from solver.adaptive import AdaptiveMomentState
from util.logger import logger
from util.seeding import make_rng


def _negation(inst, x, enabled=True):
    """Return (x_bar, f(x), f(x_bar), negated)."""
    f_x = objective(inst, x)
    if enabled:
        f_neg = objective(inst, -x)
        if f_neg < f_x:
            return -x, f_x, f_neg, True
    return x, f_x, f_x, False


def dpr_step(inst, x_t, alpha, negation=True):
    """One iteration: x_{t+1} = x-bar_t - alpha * v(x-bar_t). Returns (x_{t+1}, negated)."""
    x_t = np.asarray(x_t, dtype=float)
    if not np.any(x_t):
        raise ValueError("Zero iterate; restart from a new initial point")
    if not alpha > 0:
        raise ValueError(f"Step size must be positive, got {alpha}")
    x_bar, _, _, negated = _negation(inst, x_t, negation)
    v = subgradient(inst, x_bar).v
    return x_bar - alpha * v, negated


def _final_record(inst, t, x):
    gn = subgradient(inst, x).norm if np.any(x) else 0.0
    return TraceRecord(t, x, objective(inst, x), False, gn)


def _descend(inst, cfg, x0):
    x = np.array(x0, dtype=float)
    if x.shape != (inst.k,):
        raise ValueError(f"Initial point must have length {inst.k}")
    if not np.any(x):
        raise ValueError("The initial point must be nonzero")
    d = inst.depth
    alpha = cfg.resolved_step(d)
    rng = make_rng(cfg.seed)
    adam = None
    if cfg.variant == ADAPTIVE_MOMENT:
        adam = AdaptiveMomentState(inst.k, cfg.adam_step, cfg.adam_betas, cfg.adam_eps)

    trace = IterateTrace(x_star=inst.x_star)
    trace.diagnostics = {
        "f_x0": objective(inst, x),
        "f_x_star": objective(inst, inst.x_star),
        "step_size": alpha,
        "variant": cfg.variant,
        "negation": cfg.negation,
    }
    status = None
    prev_f = None
    rising = 0
    t = 0
    for t in range(cfg.max_iters):
        x_bar, f_x, f_bar, negated = _negation(inst, x, cfg.negation)
        v = subgradient(inst, x_bar).v
        gn = float(np.linalg.norm(v))
        trace.append(TraceRecord(t, x, f_x, negated, gn))

        if not (math.isfinite(f_x) and np.all(np.isfinite(v))):
            status = NUMERIC_FAILURE
            logger.error(f"Non-finite objective or subgradient at iteration {t}")
            break

        rising = rising + 1 if prev_f is not None and f_x > prev_f else 0
        prev_f = f_x
        if rising >= cfg.divergence_window:
            status = DIVERGED
            logger.warning(f"Objective grew for {rising} consecutive steps; stopping at t={t}")
            break

        if 2.0 ** d * gn / max(float(np.linalg.norm(x_bar)), 1e-300) < cfg.grad_tol:
            status = CONVERGED
            if negated:
                trace.append(TraceRecord(t + 1, x_bar, f_bar, True, gn))
            x = x_bar
            break

        if adam is not None:
            if negated:
                adam = AdaptiveMomentState(inst.k, cfg.adam_step, cfg.adam_betas, cfg.adam_eps)
            x_next = x_bar - adam.direction(v)
        else:
            x_next = x_bar - alpha * v
        if not np.any(x_next):
            x_next = config.ZERO_ITERATE_JITTER * rng.standard_normal(inst.k)
            logger.debug(f"Zero iterate at t={t}; re-perturbed")

        moved = float(np.linalg.norm(x_next - x))
        x = x_next
        if moved < cfg.step_tol:
            status = STALLED
            trace.append(_final_record(inst, t + 1, x))
            break
    else:
        status = MAX_ITERS
        trace.append(_final_record(inst, t + 1, x))

    trace.status = status
    trace.diagnostics["negations"] = trace.negation_count
    logger.debug(f"Descent finished: status={status} iterations={trace.iterations} f={trace.final_f:.3e}")
    return trace


def solve(inst, cfg, x0):
    """Run the negation-step subgradient method from x0 until a stopping rule fires."""
    return _descend(inst, cfg, x0)


def solve_two_branch(inst, cfg, x0):
    """
    Descend from x0 and from -x0 without per-step negation; keep the branch with
    the smaller final objective.
    """
    x0 = np.asarray(x0, dtype=float)
    branch_cfg = cfg.replace(negation=False)
    plus = _descend(inst, branch_cfg, x0)
    minus = _descend(inst, branch_cfg, -x0)
    plus.branch, minus.branch = 1, -1
    winner, other = (plus, minus) if plus.final_f <= minus.final_f else (minus, plus)
    winner.diagnostics["other_branch_final_f"] = other.final_f
    winner.diagnostics["other_branch_status"] = other.status
    return winner
