from concurrent.futures import ThreadPoolExecutor

import numpy as np

import config
from baselines.amplitude_flow import sample_sparse_signal, sign_invariant_error, thresholded_amplitude_flow
from generator.network import forward
from landscape.instance import sample_instance
from phaseless.measurements import sample_measurements
from solver.restarts import run_restarts
from util.logger import logger
from util.seeding import BASELINE_STREAM, ENSEMBLE_STREAM, LATENT_STREAM, derive_seed

COMPARE_COLUMNS = ["m", "algo", "mean_err", "success_rate", "trials"]


def _generator_trial(family, m, seed, workers):
    inst = sample_instance(family["dims"], m, seed)
    cfg = family["solver"].replace(seed=seed)
    trace = run_restarts(inst, cfg, method=family.get("method", "dpr"), workers=workers)
    return sign_invariant_error(forward(inst.net, trace.final_x), inst.y_star)


def _sparse_trial(family, m, seed):
    sparse_cfg = family["config"]
    y = sample_sparse_signal(family["n"], sparse_cfg.sparsity, derive_seed(seed, LATENT_STREAM))
    ensemble = sample_measurements(m, family["n"], derive_seed(seed, ENSEMBLE_STREAM))
    b = np.abs(ensemble.A @ y)
    return sign_invariant_error(thresholded_amplitude_flow(ensemble, b, sparse_cfg), y)


def _row(m, algo, errs, threshold):
    errs = np.asarray(errs, dtype=float)
    return {
        "m": m,
        "algo": algo,
        "mean_err": float(np.mean(errs)),
        "success_rate": float(np.mean(errs < threshold)),
        "trials": int(errs.size),
    }


def sweep_compare(generator_family, sparse_family, m_grid, trials, seed,
                  threshold=config.SUCCESS_THRESHOLD, workers=1):
    """
    Mean relative signal error and success rate of DPR and the sparse baseline per m.

    generator_family: {"dims": NetworkDims, "solver": SolverConfig[, "method"]}
    sparse_family:    {"n": int, "config": SparseSolverConfig}
    Trial i uses the same derived seed at every m. m = 0 reports the
    zero estimate (error 1, success 0) without solving.
    """
    m_grid = list(m_grid)
    if not m_grid or trials < 1:
        raise ValueError("sweep_compare needs a non-empty m grid and at least one trial")
    seeds = [derive_seed(seed, BASELINE_STREAM, i) for i in range(trials)]
    rows = []
    for m in m_grid:
        if m == 0:
            rows.append(_row(0, "dpr", [1.0] * trials, threshold))
            rows.append(_row(0, "sparse_taf", [1.0] * trials, threshold))
            continue
        with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
            dpr_errs = list(executor.map(lambda s: _generator_trial(generator_family, m, s, 1), seeds))
            taf_errs = list(executor.map(lambda s: _sparse_trial(sparse_family, m, s), seeds))
        rows.append(_row(m, "dpr", dpr_errs, threshold))
        rows.append(_row(m, "sparse_taf", taf_errs, threshold))
        logger.info(f"compare m={m}: dpr={rows[-2]['success_rate']:.2f} sparse_taf={rows[-1]['success_rate']:.2f}")
    return rows
