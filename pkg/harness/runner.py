"""
Experiment dispatch: one function per kind, each writing its artifacts
through an ArtifactStore and returning the summary printed by the CLI.
"""
import json
import math

import numpy as np

from baselines.compare import COMPARE_COLUMNS, sweep_compare
from conditions.rrcp import angle_distortion_check, rrcp_deviation, subgradient_vs_h
from conditions.spectral import submatrix_spectral_check
from conditions.tessellation import tessellation_count
from conditions.wdc import wdc_deviation
from generator.angles import rho_d
from generator.network import sample_gaussian_net
from harness.sweep import SWEEP_COLUMNS, phase_transition_sweep
from harness.version import version_string
from landscape.critical import find_critical_points, scan_grid
from landscape.directions import idealized_loss
from landscape.instance import sample_instance
from models import experiment as kinds
from models.experiment import ExperimentConfig
from models.trace import NUMERIC_FAILURE
from phaseless.measurements import sample_measurements
from solver.restarts import run_restarts
from storage.artifact_store import ArtifactStore
from util.errors import ConfigError, NumericFailure
from util.logger import logger
from util.seeding import ENSEMBLE_STREAM, NET_STREAM, PROBE_STREAM, derive_seed

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIG = 2
EXIT_NUMERIC = 3

TRACE_COLUMNS = ["t", "f", "grad_norm", "negated", "rel_latent_err"]
LANDSCAPE_COLUMNS = ["x1", "x2", "F", "f", "h_norm", "v_norm"]
REPORT_COLUMNS = ["check", "samples", "max_dev", "mean_dev", "p50", "p95"]


def load_config(path):
    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigError(f"Cannot read experiment config {path}: {e}") from e
    return ExperimentConfig.from_dict(data)


def summary_line(summary):
    return " ".join(f"{k}={_fmt(v)}" for k, v in summary.items())


def _fmt(v):
    if isinstance(v, float):
        return f"{v:.6g}"
    return str(v)


def _require_finite(label, *values):
    for v in values:
        if v is None:
            continue
        if not np.all(np.isfinite(np.asarray(v, dtype=float))):
            raise NumericFailure(f"Non-finite value in {label}")


def _envelope(cfg, payload):
    """Every JSON artifact carries the full config and the version."""
    return {"version": version_string(), "config": cfg.to_dict(), **payload}


def _stamp(cfg):
    """CSV rows repeat the version and the config as compact JSON."""
    return {"version": version_string(), "config": json.dumps(cfg.to_dict(), sort_keys=True, separators=(",", ":"))}


def _report_row(name, report):
    row = report.to_dict()
    row["check"] = name
    return row


def _run_solve(cfg, store):
    inst = sample_instance(cfg.dims, cfg.m, cfg.seed, noise_level=cfg.noise_level)
    trace = run_restarts(inst, cfg.solver.replace(seed=cfg.seed), method=cfg.method, workers=cfg.workers)
    store.save_csv("solve_trace.csv", trace.to_rows(), TRACE_COLUMNS, stamp=_stamp(cfg))
    summary = trace.summary()
    store.save_json("solve_summary.json", _envelope(cfg, {
        "summary": summary,
        "diagnostics": trace.diagnostics,
        "x_hat": trace.final_x,
        "x_star": inst.x_star,
    }))
    if trace.status == NUMERIC_FAILURE:
        raise NumericFailure("Solver produced a non-finite iterate")
    return {
        "status": summary["status"],
        "iterations": summary["iterations"],
        "final_f": summary["final_f"],
        "rel_err": summary["rel_latent_err"],
        "negations": summary["negations"],
    }


def _run_sweep(cfg, store):
    rows = phase_transition_sweep(cfg)
    store.save_csv("sweep.csv", rows, SWEEP_COLUMNS, stamp=_stamp(cfg))
    store.save_json("sweep.json", _envelope(cfg, {"rows": rows}))
    best = max(rows, key=lambda r: r["success_rate"])
    return {"points": len(rows), "best_m": best["m"], "best_success": best["success_rate"]}


def _run_landscape(cfg, store):
    inst = sample_instance(cfg.dims, cfg.m, cfg.seed, noise_level=cfg.noise_level)
    rows = scan_grid(inst, radius=cfg.radius, resolution=cfg.resolution)
    _require_finite("landscape grid", [r["f"] for r in rows], [r["F"] for r in rows])
    d = inst.depth
    points = find_critical_points(inst.x_star, d)
    critical = [{"x": p, "F": idealized_loss(p, inst.x_star, d)} for p in points]
    rho, _ = rho_d(d)
    store.save_csv("landscape_grid.csv", rows, LANDSCAPE_COLUMNS, stamp=_stamp(cfg))
    store.save_json("landscape.json", _envelope(cfg, {
        "x_star": inst.x_star,
        "rho_d": rho,
        "critical_points": critical,
    }))
    return {"grid_points": len(rows), "critical_points": len(critical), "rho_d": rho}


def _run_verify_wdc(cfg, store):
    net = sample_gaussian_net(cfg.dims, derive_seed(cfg.seed, NET_STREAM))
    rows = []
    reports = {}
    for i, W in enumerate(net.weights, start=1):
        report = wdc_deviation(W, cfg.samples, derive_seed(cfg.seed, PROBE_STREAM, i))
        _require_finite(f"WDC layer {i}", report.max_dev)
        reports[f"layer_{i}"] = report.to_dict()
        rows.append(_report_row(f"wdc_layer_{i}", report))
    store.save_csv("verify_wdc.csv", rows, REPORT_COLUMNS, stamp=_stamp(cfg))
    store.save_json("verify_wdc.json", _envelope(cfg, {"reports": reports}))
    return {"layers": len(rows), "max_p95": max(r["p95"] for r in rows)}


def _run_verify_rrcp(cfg, store):
    inst = sample_instance(cfg.dims, cfg.m, cfg.seed, noise_level=cfg.noise_level)
    probe = derive_seed(cfg.seed, PROBE_STREAM)
    reports = {
        "rrcp": rrcp_deviation(inst.ensemble, inst.net, cfg.samples, probe),
        "angle_distortion": angle_distortion_check(inst.ensemble, inst.net, cfg.samples, probe),
        "subgradient_vs_h": subgradient_vs_h(inst, cfg.samples, probe),
        "submatrix_spectral": submatrix_spectral_check(
            inst.ensemble, max(1, cfg.m // 4), min(cfg.samples, 200), probe, subspace_dim=cfg.dims.k),
    }
    for name, report in reports.items():
        _require_finite(name, report.max_dev)
    rows = [_report_row(name, report) for name, report in reports.items()]
    store.save_csv("verify_rrcp.csv", rows, REPORT_COLUMNS, stamp=_stamp(cfg))
    store.save_json("verify_rrcp.json", _envelope(cfg, {n: r.to_dict() for n, r in reports.items()}))
    return {f"{name}_p95": report.p95 for name, report in reports.items()}


def _run_tessellate(cfg, store):
    ensemble = sample_measurements(cfg.m, cfg.dims.n_out, derive_seed(cfg.seed, ENSEMBLE_STREAM))
    result = tessellation_count(ensemble, cfg.ell, seed=derive_seed(cfg.seed, PROBE_STREAM), probes=cfg.probes)
    store.save_json("tessellate.json", _envelope(cfg, {"result": result.to_dict()}))
    return {
        "m": result.m,
        "ell": result.ell,
        "count": result.count,
        "exact": result.exact,
        "region_bound": result.region_bound,
    }


def _run_compare(cfg, store):
    rows = sweep_compare(
        {"dims": cfg.dims, "solver": cfg.solver, "method": cfg.method},
        {"n": cfg.dims.n_out, "config": cfg.sparse},
        cfg.m_grid, cfg.trials, cfg.seed, threshold=cfg.threshold, workers=cfg.workers,
    )
    _require_finite("comparison", [r["mean_err"] for r in rows])
    store.save_csv("compare.csv", rows, COMPARE_COLUMNS, stamp=_stamp(cfg))
    store.save_json("compare.json", _envelope(cfg, {"rows": rows}))
    dpr = [r["success_rate"] for r in rows if r["algo"] == "dpr"]
    taf = [r["success_rate"] for r in rows if r["algo"] == "sparse_taf"]
    return {"points": len(dpr), "dpr_best": max(dpr), "sparse_taf_best": max(taf)}


RUNNERS = {
    kinds.SOLVE: _run_solve,
    kinds.SWEEP: _run_sweep,
    kinds.LANDSCAPE: _run_landscape,
    kinds.VERIFY_WDC: _run_verify_wdc,
    kinds.VERIFY_RRCP: _run_verify_rrcp,
    kinds.TESSELLATE: _run_tessellate,
    kinds.COMPARE: _run_compare,
}


def execute(cfg):
    """Run one experiment and return its summary; errors propagate."""
    store = ArtifactStore(cfg.output, overwrite=cfg.overwrite)
    logger.info(f"Running {cfg.kind} (seed={cfg.seed}, out={cfg.output})")
    summary = {"kind": cfg.kind, "seed": cfg.seed}
    summary.update(RUNNERS[cfg.kind](cfg, store))
    for key, value in summary.items():
        if isinstance(value, float) and not math.isfinite(value):
            raise NumericFailure(f"Non-finite summary value {key}={value}")
    return summary


def run(cfg, stream=None):
    """Run one experiment, print its summary line and return the exit status."""
    try:
        summary = execute(cfg)
    except ConfigError as e:
        logger.error(f"Invalid configuration: {e}")
        return EXIT_CONFIG
    except NumericFailure as e:
        logger.error(f"Numeric failure: {e}")
        return EXIT_NUMERIC
    except Exception as e:
        logger.error(f"Experiment {cfg.kind} failed: {e}", exc_info=True)
        return EXIT_FAILURE
    print(summary_line(summary), file=stream, flush=True)
    return EXIT_OK
