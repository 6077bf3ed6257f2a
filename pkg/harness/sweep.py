from concurrent.futures import ThreadPoolExecutor

import numpy as np

from landscape.instance import sample_instance
from models.trace import NUMERIC_FAILURE
from solver.restarts import run_restarts
from util.errors import NumericFailure
from util.logger import logger
from util.seeding import TRIAL_STREAM, derive_seed

SWEEP_COLUMNS = ["m", "trials", "success_rate", "mean_rel_err", "median_rel_err"]


def _trial(cfg, m, index):
    seed = derive_seed(cfg.seed, TRIAL_STREAM, index)
    inst = sample_instance(cfg.dims, m, seed, noise_level=cfg.noise_level)
    trace = run_restarts(inst, cfg.solver.replace(seed=seed), method=cfg.method)
    if trace.status == NUMERIC_FAILURE:
        raise NumericFailure(f"Non-finite iterate in trial {index} at m={m}")
    return trace.rel_latent_error()


def phase_transition_sweep(cfg):
    """
    Success rate against the measurement count.

    Trial i draws its instance from derive_seed(seed, TRIAL_STREAM, i) at every m,
    so neighbouring columns share latent codes and generators.
    """
    if not cfg.m_grid:
        raise ValueError("phase_transition_sweep needs a non-empty m grid")
    rows = []
    for m in cfg.m_grid:
        with ThreadPoolExecutor(max_workers=cfg.workers) as executor:
            errs = np.array(list(executor.map(lambda i: _trial(cfg, m, i), range(cfg.trials))))
        rows.append({
            "m": int(m),
            "trials": cfg.trials,
            "success_rate": float(np.mean(errs < cfg.threshold)),
            "mean_rel_err": float(np.mean(errs)),
            "median_rel_err": float(np.median(errs)),
        })
        logger.info(f"sweep m={m}: success={rows[-1]['success_rate']:.2f} median_err={rows[-1]['median_rel_err']:.3e}")
    return rows
