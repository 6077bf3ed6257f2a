import numpy as np

from models.measurement import MeasurementEnsemble, PhaselessObservation
from util.linalg import as_vector
from util.seeding import make_rng


def _matrix(A):
    return A.A if isinstance(A, MeasurementEnsemble) else np.asarray(A, dtype=float)


def sample_measurements(m, n, seed):
    """m x n ensemble with i.i.d. N(0, 1/m) entries."""
    if m < 1 or n < 1:
        raise ValueError(f"Ensemble dimensions must be positive, got m={m}, n={n}")
    rng = make_rng(seed)
    return MeasurementEnsemble(rng.normal(0.0, 1.0 / np.sqrt(m), size=(m, n)))


def sample_noise(m, level, seed):
    """Gaussian direction scaled so that ||eta|| = level (zero vector when level is 0)."""
    if level < 0:
        raise ValueError(f"Noise level must be nonnegative, got {level}")
    if level == 0:
        return np.zeros(m)
    rng = make_rng(seed)
    eta = rng.standard_normal(m)
    return level * eta / np.linalg.norm(eta)


def observe(A, y_star, eta=None):
    """b = |A y_*| + eta."""
    A = _matrix(A)
    y_star = as_vector(y_star, "y_star")
    if A.shape[1] != y_star.shape[0]:
        raise ValueError(f"Signal length {y_star.shape[0]} does not match ensemble width {A.shape[1]}")
    if eta is None:
        eta = np.zeros(A.shape[0])
    eta = as_vector(eta, "eta")
    if eta.shape[0] != A.shape[0]:
        raise ValueError(f"Noise length {eta.shape[0]} does not match {A.shape[0]} measurements")
    return PhaselessObservation(np.abs(A @ y_star) + eta, eta)


def sign_matrix_apply(A, z, v):
    """A_z v = diag(sgn(Az)) A v with sgn(0) = 0."""
    A = _matrix(A)
    return np.sign(A @ as_vector(z, "z")) * (A @ as_vector(v, "v"))


def sign_matrix_transpose_apply(A, z, r):
    """A_z^T r = A^T (sgn(Az) * r)."""
    A = _matrix(A)
    return A.T @ (np.sign(A @ as_vector(z, "z")) * as_vector(r, "r"))


def sign_matrix_dense(A, z):
    """Materialised A_z; only for small oracle checks."""
    A = _matrix(A)
    return np.sign(A @ as_vector(z, "z"))[:, None] * A
