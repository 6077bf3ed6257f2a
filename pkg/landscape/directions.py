"""Closed-form descent directions and the idealised loss built from the angle profile."""
import numpy as np

from generator.angles import angle_profile
from generator.network import end_to_end_jacobian
from phaseless.operators import phi_matrix
from util.linalg import as_vector


def _nonzero(v, name):
    v = as_vector(v, name)
    nrm = np.linalg.norm(v)
    if nrm == 0.0:
        raise ValueError(f"{name} must be nonzero")
    return v, nrm


def h_direction(x, x_star, d):
    """
    h_x = 2^-d [ -psi_d zeta_0 ||x_*|| x_*^ + (||x|| - ||x_*|| * radial) x^ ].

    The x_*^ term carries a minus sign so that h vanishes at x_* and at -rho_d x_*.
    """
    x, nx = _nonzero(x, "x")
    x_star, ns = _nonzero(x_star, "x_star")
    prof = angle_profile(x, x_star, d)
    along_star = -prof.psi_d * prof.zeta[0] * ns
    along_x = nx - ns * prof.radial_coefficient()
    return (along_star * (x_star / ns) + along_x * (x / nx)) / 2.0 ** d


def w_direction(inst, x):
    """w_x = Lambda_x^T (Lambda_x x - Phi_{x_d, x_*d} Lambda_{x_*} x_*)."""
    x, _ = _nonzero(x, "x")
    lam = end_to_end_jacobian(inst.net, x)
    x_d = lam @ x
    xs_d = end_to_end_jacobian(inst.net, inst.x_star) @ inst.x_star
    phi = phi_matrix(x_d, xs_d)
    return lam.T @ (x_d - phi.apply(xs_d))


def h_tilde(x, y, d):
    """2^-d [ zeta_0 y + weighted_sine_sum * (||y|| / ||x||) x ], angles from (x, y)."""
    x, nx = _nonzero(x, "x")
    y, ny = _nonzero(y, "y")
    prof = angle_profile(x, y, d)
    return (prof.zeta[0] * y + prof.weighted_sine_sum() * (ny / nx) * x) / 2.0 ** d


def idealized_loss(x, x_star, d):
    """
    F(x) = (||x||^2 + ||x_*||^2) / 2^(d+1)
           - 2^-d [ psi_d zeta_0 <x, x_*> + radial * ||x|| ||x_*|| ].

    F(0) is the continuous limit ||x_*||^2 / 2^(d+1).
    """
    x = as_vector(x, "x")
    x_star, ns = _nonzero(x_star, "x_star")
    nx = np.linalg.norm(x)
    base = (nx * nx + ns * ns) / 2.0 ** (d + 1)
    if nx == 0.0:
        return float(base)
    prof = angle_profile(x, x_star, d)
    cross = prof.psi_d * prof.zeta[0] * float(np.dot(x, x_star)) + prof.radial_coefficient() * nx * ns
    return float(base - cross / 2.0 ** d)


def s_beta_membership(x, x_star, d, beta):
    """True iff ||h_x|| <= (beta / 2^d) max(||x||, ||x_*||)."""
    if not beta > 0:
        raise ValueError(f"beta must be positive, got {beta}")
    x, nx = _nonzero(x, "x")
    h = h_direction(x, x_star, d)
    return bool(np.linalg.norm(h) <= beta / 2.0 ** d * max(nx, np.linalg.norm(x_star)))
