import math

import numpy as np

import config


def clamp(value, min_v, max_v):
    return np.minimum(np.maximum(value, min_v), max_v)


def as_vector(x, name="x"):
    v = np.asarray(x, dtype=float)
    if v.ndim != 1:
        raise ValueError(f"{name} must be a 1-D vector, got shape {v.shape}")
    return v


def unit(x):
    """Return x / ||x||; raises on the zero vector."""
    x = as_vector(x)
    nrm = np.linalg.norm(x)
    if nrm == 0.0:
        raise ValueError("Cannot normalise the zero vector")
    return x / nrm


def safe_arccos(c):
    return np.arccos(clamp(c, -1.0, 1.0))


def half_angle_gaps(x_hat, y_hat):
    """||y - x||, ||y + x|| and the angle 2 atan2(||y - x||, ||y + x||) between unit vectors."""
    gap_minus = float(np.linalg.norm(y_hat - x_hat))
    gap_plus = float(np.linalg.norm(y_hat + x_hat))
    return gap_minus, gap_plus, 2.0 * math.atan2(gap_minus, gap_plus)


def angle_between(x, y):
    """Angle in [0, pi] between two nonzero vectors, accurate near 0 and pi."""
    x = as_vector(x, "x")
    y = as_vector(y, "y")
    nx = np.linalg.norm(x)
    ny = np.linalg.norm(y)
    if nx == 0.0 or ny == 0.0:
        raise ValueError("Angle undefined for a zero vector")
    return half_angle_gaps(x / nx, y / ny)[2]


def spectral_norm(M, iters=config.POWER_ITERS, tol=config.POWER_TOL, seed=0):
    """
    Largest singular value of M.

    Dense SVD when the smaller dimension is at most DENSE_SVD_MAX_DIM,
    otherwise power iteration on M^T M.
    """
    M = np.asarray(M, dtype=float)
    if M.size == 0:
        return 0.0
    if min(M.shape) <= config.DENSE_SVD_MAX_DIM:
        return float(np.linalg.norm(M, 2))
    return power_iteration_norm(M, iters=iters, tol=tol, seed=seed)


def power_iteration_norm(M, iters=config.POWER_ITERS, tol=config.POWER_TOL, seed=0):
    M = np.asarray(M, dtype=float)
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(M.shape[1])
    v /= np.linalg.norm(v)
    sigma = 0.0
    for _ in range(iters):
        w = M.T @ (M @ v)
        nrm = np.linalg.norm(w)
        if nrm == 0.0:
            return 0.0
        v = w / nrm
        new_sigma = float(np.linalg.norm(M @ v))
        if abs(new_sigma - sigma) <= tol * max(new_sigma, 1.0):
            return new_sigma
        sigma = new_sigma
    return sigma


def leading_eigenvector(S, iters=config.POWER_ITERS, tol=config.POWER_TOL, seed=0):
    """Leading eigenvector of a symmetric PSD matrix by power iteration."""
    S = np.asarray(S, dtype=float)
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(S.shape[0])
    v /= np.linalg.norm(v)
    for _ in range(iters):
        w = S @ v
        nrm = np.linalg.norm(w)
        if nrm == 0.0:
            return v
        w /= nrm
        if np.linalg.norm(w - v) <= tol:
            return w
        v = w
    return v
