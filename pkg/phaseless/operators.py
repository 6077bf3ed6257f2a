"""
The swap matrix M_{x<->y} and the expectation operators Phi and Q.

Both Phi and Q are a*I + c*M with M of rank at most two, kept in that
factored form; dense() materialises them for small checks.
"""
import math

import numpy as np

import config
from util.linalg import as_vector, half_angle_gaps, safe_arccos


class SwapMatrix:
    """sum_j sign_j u_j u_j^T with orthonormal u_j (rank one or two)."""

    def __init__(self, vectors, signs):
        self.vectors = [np.asarray(u, dtype=float) for u in vectors]
        self.signs = [float(s) for s in signs]

    @property
    def n(self):
        return self.vectors[0].shape[0]

    def apply(self, v):
        v = np.asarray(v, dtype=float)
        out = np.zeros_like(v)
        for s, u in zip(self.signs, self.vectors):
            out += s * np.dot(u, v) * u
        return out

    def dense(self):
        out = np.zeros((self.n, self.n))
        for s, u in zip(self.signs, self.vectors):
            out += s * np.outer(u, u)
        return out


class RankTwoOperator:
    """identity_coef * I + swap_coef * M; M None means a multiple of the identity."""

    def __init__(self, n, identity_coef, swap_coef=0.0, swap=None):
        self.n = int(n)
        self.identity_coef = float(identity_coef)
        self.swap_coef = float(swap_coef)
        self.swap = swap

    def apply(self, v):
        v = np.asarray(v, dtype=float)
        out = self.identity_coef * v
        if self.swap is not None and self.swap_coef != 0.0:
            out = out + self.swap_coef * self.swap.apply(v)
        return out

    def dense(self):
        out = self.identity_coef * np.eye(self.n)
        if self.swap is not None:
            out += self.swap_coef * self.swap.dense()
        return out

    def spectral_norm(self):
        # M has eigenvalues +-1 on its range (or a single +-1), 0 elsewhere
        a, c = self.identity_coef, self.swap_coef
        if self.swap is None:
            return abs(a)
        eigs = [a + c * s for s in self.swap.signs]
        if len(self.swap.vectors) < self.n:
            eigs.append(a)
        return float(max(abs(e) for e in eigs))


def _check_unit(v, name):
    v = as_vector(v, name)
    if abs(np.linalg.norm(v) - 1.0) > config.UNIT_NORM_TOL:
        raise ValueError(f"{name} must have unit norm, got norm {np.linalg.norm(v)}")
    return v


def _swap_from_units(x_hat, y_hat):
    # Degenerate when either gap vanishes
    gap_minus, gap_plus, theta = half_angle_gaps(x_hat, y_hat)
    if gap_minus < config.DEGENERATE_SIN_TOL:
        return SwapMatrix([x_hat], [1.0]), 0.0
    if gap_plus < config.DEGENERATE_SIN_TOL:
        return SwapMatrix([x_hat], [-1.0]), math.pi
    d1 = (y_hat - x_hat) / gap_minus
    d2 = (y_hat + x_hat) / gap_plus
    return SwapMatrix([d1, d2], [-1.0, 1.0]), theta


def swap_matrix(x_hat, y_hat):
    """M sending x_hat to y_hat, y_hat to x_hat and span{x, y}^perp to zero."""
    x_hat = _check_unit(x_hat, "x_hat")
    y_hat = _check_unit(y_hat, "y_hat")
    if x_hat.shape != y_hat.shape:
        raise ValueError("x_hat and y_hat differ in length")
    return _swap_from_units(x_hat, y_hat)[0]


def swap_matrix_by_rotation(x_hat, y_hat):
    """
    Dense M built from a rotation taking x_hat to e_1 and y_hat into span{e_1, e_2}.

    Reference construction for checking swap_matrix; needs n >= 2.
    """
    x_hat = _check_unit(x_hat, "x_hat")
    y_hat = _check_unit(y_hat, "y_hat")
    gap_minus, gap_plus, theta = half_angle_gaps(x_hat, y_hat)
    if min(gap_minus, gap_plus) < config.DEGENERATE_SIN_TOL:
        sign = 1.0 if gap_minus < gap_plus else -1.0
        return sign * np.outer(x_hat, x_hat)
    cos_t, sin_t = math.cos(theta), math.sin(theta)
    u2 = y_hat - cos_t * x_hat
    u2 /= np.linalg.norm(u2)
    basis = np.column_stack([x_hat, u2])
    block = np.array([[cos_t, sin_t], [sin_t, -cos_t]])
    return basis @ block @ basis.T


def phi_matrix(z, w):
    """Phi_{z,w} = ((pi - 2t)/pi) I + (2 sin t / pi) M; zero if z or w vanishes."""
    z = as_vector(z, "z")
    w = as_vector(w, "w")
    nz, nw = np.linalg.norm(z), np.linalg.norm(w)
    if nz == 0.0 or nw == 0.0:
        return RankTwoOperator(z.shape[0], 0.0)
    swap, theta = _swap_from_units(z / nz, w / nw)
    return RankTwoOperator(z.shape[0], (math.pi - 2.0 * theta) / math.pi,
                           2.0 * math.sin(theta) / math.pi, swap)


def q_matrix(x, y):
    """Q_{x,y} = ((pi - t)/(2 pi)) I + (sin t / (2 pi)) M."""
    x = as_vector(x, "x")
    y = as_vector(y, "y")
    nx, ny = np.linalg.norm(x), np.linalg.norm(y)
    if nx == 0.0 or ny == 0.0:
        raise ValueError("Q is undefined for a zero vector")
    swap, theta = _swap_from_units(x / nx, y / ny)
    return RankTwoOperator(x.shape[0], (math.pi - theta) / (2.0 * math.pi),
                           math.sin(theta) / (2.0 * math.pi), swap)


def varphi(theta):
    """arccos(((pi - 2t) cos t + 2 sin t) / pi) on [0, pi]."""
    t = np.asarray(theta, dtype=float)
    if np.any(~np.isfinite(t)) or np.any(t < -config.ANGLE_CLAMP_TOL) or np.any(t > math.pi + config.ANGLE_CLAMP_TOL):
        raise ValueError(f"Angle must lie in [0, pi], got {theta}")
    t = np.clip(t, 0.0, math.pi)
    val = safe_arccos(((math.pi - 2.0 * t) * np.cos(t) + 2.0 * np.sin(t)) / math.pi)
    return float(val) if np.ndim(val) == 0 else val
