"""
Monte-Carlo check of the Weight Distribution Condition.

The reported maximum is a lower bound on the supremum over all direction
pairs; trends across widths are the meaningful output.
"""
import numpy as np

from models.report import DeviationReport
from phaseless.operators import q_matrix
from util.linalg import spectral_norm
from util.seeding import make_rng

NEAR_PARALLEL_ANGLE = 1e-3


def _unit_rows(rng, count, k):
    X = rng.standard_normal((count, k))
    return X / np.linalg.norm(X, axis=1, keepdims=True)


def _rotate_towards(x, rng, angle):
    """Unit vector at `angle` from unit x inside a random plane through x."""
    u = rng.standard_normal(x.shape[0])
    u -= np.dot(u, x) * x
    nrm = np.linalg.norm(u)
    if nrm == 0.0:
        return x.copy()
    u /= nrm
    return np.cos(angle) * x + np.sin(angle) * u


def structured_pairs(k, rng, extra=8):
    """Coordinate-aligned, antipodal, identical and nearly-parallel direction pairs."""
    pairs = []
    eye = np.eye(k)
    for i in range(min(k, 16)):
        for j in range(min(k, 16)):
            pairs.append((eye[i], eye[j]))
    for x in _unit_rows(rng, extra, k):
        pairs.append((x, -x))
        pairs.append((x, x))
        if k >= 2:
            pairs.append((x, _rotate_towards(x, rng, NEAR_PARALLEL_ANGLE)))
    return pairs


def wdc_pair_deviation(W, x, y):
    """|| W_{+,x}^T W_{+,y} - Q_{x,y} ||."""
    both = ((W @ x) > 0) & ((W @ y) > 0)
    Wb = W[both]
    return spectral_norm(Wb.T @ Wb - q_matrix(x, y).dense())


def wdc_deviation(W, num_pairs, seed, rotation=None, include_structured=True):
    """
    Spectral deviation from Q over random unit pairs plus structured pairs.

    `rotation` (k x k orthogonal) is applied to every sampled direction; the
    statistics should not change in distribution.
    """
    W = np.asarray(W, dtype=float)
    n, k = W.shape
    if n < k:
        raise ValueError(f"WDC needs n >= k, got a {n} x {k} matrix")
    rng = make_rng(seed)
    X = _unit_rows(rng, num_pairs, k)
    Y = _unit_rows(rng, num_pairs, k)
    pairs = list(zip(X, Y))
    if include_structured:
        pairs.extend(structured_pairs(k, rng))
    if rotation is not None:
        R = np.asarray(rotation, dtype=float)
        pairs = [(R @ x, R @ y) for x, y in pairs]
    devs = [wdc_pair_deviation(W, x, y) for x, y in pairs]
    return DeviationReport.from_samples(devs, {
        "check": "wdc",
        "shape": [n, k],
        "num_pairs": num_pairs,
        "structured": include_structured,
        "seed": seed,
    })
