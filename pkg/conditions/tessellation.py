"""
Sign patterns of A restricted to a low-dimensional subspace.

For ell = 2 the m lines {c : <p_i, c> = 0} cut the unit circle at 2m angles;
sweeping the arcs between consecutive cuts enumerates every full-sign region.
"""
import math

import numpy as np
from scipy.special import comb

from models.report import TessellationResult
from util.seeding import make_rng

PARALLEL_TOL = 1e-12
PERTURBATION = 1e-9
DEFAULT_PROBES = 100000


def subspace_projection(A, ell, rng):
    A = np.asarray(getattr(A, "A", A), dtype=float)
    m, n = A.shape
    if ell < 1 or ell > n:
        raise ValueError(f"Subspace dimension must lie in [1, {n}], got {ell}")
    if ell == n:
        return A.copy()
    U, _ = np.linalg.qr(rng.standard_normal((n, ell)))
    return A @ U


def _separate_parallel(P, rng):
    """Perturb rows until no two projected normals are parallel."""
    for _ in range(100):
        nrm = np.linalg.norm(P, axis=1)
        if np.any(nrm == 0.0):
            return P
        Q = P / nrm[:, None]
        cross = np.abs(Q[:, 0][:, None] * Q[:, 1][None, :] - Q[:, 1][:, None] * Q[:, 0][None, :])
        np.fill_diagonal(cross, np.inf)
        if np.min(cross) > PARALLEL_TOL:
            return P
        P = P + PERTURBATION * nrm.mean() * rng.standard_normal(P.shape)
    return P


def sweep_patterns(P):
    """Distinct full-sign patterns of P c over the unit circle (P is m x 2)."""
    P = np.asarray(P, dtype=float)
    if np.any(np.linalg.norm(P, axis=1) == 0.0):
        return np.zeros((0, P.shape[0]), dtype=np.int8)
    base = np.arctan2(P[:, 1], P[:, 0])
    cuts = np.sort(np.mod(np.concatenate([base + math.pi / 2, base - math.pi / 2]), 2 * math.pi))
    nxt = np.append(cuts[1:], cuts[0] + 2 * math.pi)
    mids = 0.5 * (cuts + nxt)
    C = np.vstack([np.cos(mids), np.sin(mids)])
    S = np.sign(P @ C).T.astype(np.int8)
    S = S[np.all(S != 0, axis=1)]
    return np.unique(S, axis=0)


def probe_patterns(P, probes, seed, chunk=DEFAULT_PROBES):
    """Distinct full-sign patterns hit by random Gaussian probes."""
    P = np.asarray(P, dtype=float)
    rng = make_rng(seed)
    found = np.zeros((0, P.shape[0]), dtype=np.int8)
    remaining = int(probes)
    while remaining > 0:
        size = min(chunk, remaining)
        C = rng.standard_normal((P.shape[1], size))
        S = np.sign(P @ C).T.astype(np.int8)
        S = S[np.all(S != 0, axis=1)]
        found = np.unique(np.vstack([found, S]), axis=0)
        remaining -= size
    return found


def region_bound(m, ell):
    """2 * sum_{i < ell} C(m - 1, i)."""
    return int(2 * sum(comb(m - 1, i, exact=True) for i in range(ell)))


def tessellation_count(A, ell, seed=0, probes=DEFAULT_PROBES):
    """
    Number of full-sign patterns of A on a random ell-dimensional subspace.

    Exact for ell <= 2; a random-probe lower bound for ell >= 3.
    """
    rng = make_rng(seed)
    P = subspace_projection(A, ell, rng)
    m = P.shape[0]
    if ell == 1:
        count = 2 if np.all(P[:, 0] != 0) else 0
        exact = True
    elif ell == 2:
        count = sweep_patterns(_separate_parallel(P, rng)).shape[0]
        exact = True
    else:
        count = probe_patterns(P, probes, seed).shape[0]
        exact = False
    return TessellationResult(
        m=m, ell=ell, count=count, exact=exact,
        region_bound=region_bound(m, ell),
        bound_10m=10.0 * m ** ell,
        bound_10m2=10.0 * m ** (2 * ell),
    )
