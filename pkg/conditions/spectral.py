import numpy as np

from models.report import DeviationReport
from util.linalg import spectral_norm
from util.seeding import make_rng


def _restricted(A, subspace_dim, rng):
    A = np.asarray(getattr(A, "A", A), dtype=float)
    n = A.shape[1]
    kdim = min(subspace_dim, n)
    U, _ = np.linalg.qr(rng.standard_normal((n, kdim)))
    return A @ U, kdim


def submatrix_spectral_check(A, max_rows, trials, seed, subspace_dim=None):
    """
    ||A_Omega U|| over random row subsets with |Omega| = max_rows and a random
    k-dimensional subspace U (k defaults to max_rows // 2).
    """
    A = np.asarray(getattr(A, "A", A), dtype=float)
    m = A.shape[0]
    if not 1 <= max_rows <= m:
        raise ValueError(f"max_rows must lie in [1, {m}], got {max_rows}")
    rng = make_rng(seed)
    B, kdim = _restricted(A, subspace_dim or max(1, max_rows // 2), rng)
    norms = []
    for _ in range(trials):
        rows = rng.choice(m, size=max_rows, replace=False)
        norms.append(spectral_norm(B[rows]))
    return DeviationReport.from_samples(norms, {
        "check": "submatrix_spectral",
        "m": m,
        "max_rows": max_rows,
        "subspace_dim": kdim,
        "trials": trials,
        "reference": float(np.sqrt(max_rows / m) + np.sqrt(kdim / m)),
        "seed": seed,
    })


def nested_submatrix_norms(A, sizes, seed, subspace_dim=2):
    """Norms of nested row prefixes of one random permutation, one per size."""
    A = np.asarray(getattr(A, "A", A), dtype=float)
    rng = make_rng(seed)
    B, _ = _restricted(A, subspace_dim, rng)
    order = rng.permutation(A.shape[0])
    return [spectral_norm(B[order[:s]]) for s in sizes]
