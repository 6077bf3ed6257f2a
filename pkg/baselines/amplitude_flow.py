"""
Sparse truncated amplitude flow.

Support from the marginal energies sum_i b_i^2 a_ij^2, a spectral start on
that support, then truncated amplitude-flow steps followed by hard
thresholding to the s largest magnitudes.
"""
import numpy as np

from util.linalg import leading_eigenvector
from util.logger import logger
from util.seeding import make_rng


def hard_threshold(z, s):
    """Keep the s largest-magnitude entries of z."""
    if s >= z.size:
        return z
    out = np.zeros_like(z)
    keep = np.argpartition(np.abs(z), -s)[-s:]
    out[keep] = z[keep]
    return out


def _spectral_start(A, b, s, init_samples, seed):
    m, n = A.shape
    energy = (b ** 2) @ (A ** 2)
    support = np.sort(np.argpartition(energy, -s)[-s:]) if s < n else np.arange(n)
    rows = np.arange(m)
    if init_samples is not None and 0 < init_samples < m:
        rows = np.argpartition(b, -init_samples)[-init_samples:]
    As = A[np.ix_(rows, support)]
    Y = (As * (b[rows] ** 2)[:, None]).T @ As / rows.size
    u = leading_eigenvector(Y, seed=seed)
    z = np.zeros(n)
    z[support] = np.linalg.norm(b) * u
    return z


def thresholded_amplitude_flow(A, b, config):
    """Sign-ambiguous estimate of an s-sparse y from b = |A y|."""
    A = np.asarray(getattr(A, "A", A), dtype=float)
    b = np.asarray(b, dtype=float)
    m, n = A.shape
    if b.shape != (m,):
        raise ValueError(f"b must have length {m}, got shape {b.shape}")
    s = config.sparsity
    if s > n:
        raise ValueError(f"Sparsity {s} exceeds the signal length {n}")
    if not np.any(b):
        return np.zeros(n)

    z = _spectral_start(A, b, s, config.init_samples, config.seed)
    keep_ratio = 1.0 / (1.0 + config.truncation)
    for it in range(config.iters):
        Az = A @ z
        kept = np.abs(Az) >= keep_ratio * b
        residual = np.where(kept, Az - b * np.sign(Az), 0.0)
        z = hard_threshold(z - config.step * (A.T @ residual), s)
        if not np.all(np.isfinite(z)):
            logger.warning(f"Amplitude flow produced non-finite iterate at step {it}")
            break
    return z


def sample_sparse_signal(n, s, seed):
    """s nonzeros at uniform positions, Gaussian magnitudes, unit norm."""
    if not 1 <= s <= n:
        raise ValueError(f"Sparsity must lie in [1, {n}], got {s}")
    rng = make_rng(seed)
    y = np.zeros(n)
    y[rng.choice(n, size=s, replace=False)] = rng.standard_normal(s)
    return y / np.linalg.norm(y)


def sign_invariant_error(y_hat, y):
    """min(||y_hat - y||, ||y_hat + y||) / ||y||."""
    y_hat = np.asarray(y_hat, dtype=float)
    y = np.asarray(y, dtype=float)
    return float(min(np.linalg.norm(y_hat - y), np.linalg.norm(y_hat + y)) / np.linalg.norm(y))
