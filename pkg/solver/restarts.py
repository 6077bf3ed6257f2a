from concurrent.futures import ThreadPoolExecutor

import numpy as np

from generator.network import forward
from solver.dpr import solve, solve_two_branch
from util.logger import logger
from util.seeding import RESTART_STREAM, derive_seed, make_rng

METHODS = {"dpr": solve, "two_branch": solve_two_branch}


def restart_seed(master, index):
    return derive_seed(master, RESTART_STREAM, index)


def initial_point(k, seed):
    """Gaussian latent start N(0, I_k)."""
    return make_rng(seed).standard_normal(k)


def _score(inst, trace):
    if inst.noiseless:
        return float(np.linalg.norm(forward(inst.net, trace.final_x) - inst.y_star))
    return trace.final_f


def run_restarts(inst, cfg, method="dpr", workers=1):
    """
    Independent restarts from Gaussian starts; returns the best trace.

    Noiseless instances rank by ||G(x_hat) - G(x_*)||, noisy ones by the final objective.
    """
    if method not in METHODS:
        raise ValueError(f"Unknown method '{method}', expected one of {sorted(METHODS)}")
    runner = METHODS[method]

    def one(index):
        seed = restart_seed(cfg.seed, index)
        return runner(inst, cfg.replace(seed=seed), initial_point(inst.k, seed))

    if workers > 1 and cfg.restarts > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            traces = list(executor.map(one, range(cfg.restarts)))
    else:
        traces = [one(i) for i in range(cfg.restarts)]

    scores = [_score(inst, tr) for tr in traces]
    best = int(np.argmin(scores))
    traces[best].diagnostics["restart_index"] = best
    traces[best].diagnostics["restart_scores"] = scores
    logger.debug(f"Restarts: best={best} scores={scores}")
    return traces[best]
