"""Latent-angle recursions: g, the theta-bar profile, the breve sequence and rho_d."""
import math
from functools import lru_cache

import numpy as np

import config
from models.network import AngleProfile
from util.linalg import angle_between, safe_arccos


def _check_angle(theta):
    arr = np.asarray(theta, dtype=float)
    tol = config.ANGLE_CLAMP_TOL
    if np.any(~np.isfinite(arr)) or np.any(arr < -tol) or np.any(arr > math.pi + tol):
        raise ValueError(f"Angle must lie in [0, pi], got {theta}")
    return np.clip(arr, 0.0, math.pi)


def g_theta(theta):
    """g(theta) = arccos(((pi - theta) cos theta + sin theta) / pi); accepts arrays."""
    t = _check_angle(theta)
    val = safe_arccos(((math.pi - t) * np.cos(t) + np.sin(t)) / math.pi)
    return float(val) if np.ndim(val) == 0 else val


def _recursion(theta0, d):
    thetas = [float(theta0)]
    for _ in range(d):
        thetas.append(g_theta(thetas[-1]))
    return thetas


def profile_from_angle(theta0, d, with_breve=False):
    if d < 1:
        raise ValueError(f"Depth must be at least 1, got {d}")
    theta0 = float(_check_angle(theta0))
    theta_bar = _recursion(theta0, d)
    zeta = [1.0] * (d + 1)
    for i in range(d - 1, -1, -1):
        zeta[i] = zeta[i + 1] * (math.pi - theta_bar[i]) / math.pi
    psi_d = (math.pi - 2.0 * theta_bar[d]) / math.pi
    breve = breve_sequence(d) if with_breve else None
    return AngleProfile(theta_bar, psi_d, zeta, breve)


def angle_profile(x, x_star, d, with_breve=False):
    """Profile of the pair (x, x_*); both must be nonzero."""
    return profile_from_angle(angle_between(x, x_star), d, with_breve=with_breve)


@lru_cache(maxsize=None)
def _breve(d):
    return tuple(_recursion(math.pi, d))


def breve_sequence(d):
    """theta-breve_0..d, starting from theta-breve_0 = pi."""
    return list(_breve(int(d)))


@lru_cache(maxsize=None)
def rho_d(d):
    """Return (rho_d, Gamma_d) from the breve recursion."""
    d = int(d)
    if d < 1:
        raise ValueError(f"Depth must be at least 1, got {d}")
    profile = profile_from_angle(math.pi, d)
    gamma = profile.weighted_sine_sum()
    return profile.radial_coefficient(), gamma
