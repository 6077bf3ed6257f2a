"""Two-dimensional landscape scans and critical-point search for the idealised loss."""
import math

import numpy as np
from scipy.optimize import brentq

from landscape.directions import h_direction, idealized_loss
from landscape.objective import objective, subgradient
from util.logger import logger

ORIGIN_EXCLUSION = 1e-3
# F is mirror-symmetric about the line through x_*; for d = 1 the tangential
# part vanishes to fifth order on that line and rounding blurs its zero
LINE_SNAP = 1e-2


def _scaled_h_norm(x, x_star, d):
    return 2.0 ** d * float(np.linalg.norm(h_direction(x, x_star, d)))


def _ray(phi):
    return np.array([math.cos(phi), math.sin(phi)])


def _tangential(x_star, d, r, phi):
    """Component of h across the ray at angle phi; its sign does not depend on r."""
    h = h_direction(r * _ray(phi), x_star, d)
    return float(-h[0] * math.sin(phi) + h[1] * math.cos(phi))


def _radial(x_star, d, r, phi):
    """Component of h along the ray; affine and increasing in r."""
    return float(np.dot(h_direction(r * _ray(phi), x_star, d), _ray(phi)))


def _angular_roots(x_star, d, r, n_angles):
    """Sign changes of the tangential component on a full turn, refined by bisection."""
    base = math.atan2(x_star[1], x_star[0])
    phis = base + np.linspace(0.0, 2.0 * math.pi, n_angles + 1)
    values = [_tangential(x_star, d, r, phi) for phi in phis]
    roots = []
    for j in range(n_angles):
        if values[j] == 0.0:
            roots.append(float(phis[j]))
        elif values[j] * values[j + 1] < 0.0:
            roots.append(brentq(lambda phi: _tangential(x_star, d, r, phi), phis[j], phis[j + 1], xtol=1e-14))
    return [_snap_to_line(phi, base) for phi in roots]


def _snap_to_line(phi, base):
    for target in (base, base + math.pi, base + 2.0 * math.pi):
        if abs(phi - target) < LINE_SNAP:
            return target
    return phi


def origin_is_critical(x_star, d, radius=1e-4, directions=64):
    """The origin is Clarke-stationary for F when it is a strict local maximum."""
    f0 = idealized_loss(np.zeros(2), x_star, d)
    for a in np.linspace(0.0, 2.0 * math.pi, directions, endpoint=False):
        if idealized_loss(radius * _ray(a), x_star, d) >= f0:
            return False
    return True


def find_critical_points(x_star, d, r_min=0.02, r_max=2.0, n_angles=200, tol=1e-3, h_tol=1e-8):
    """
    Critical points of the idealised loss in the plane.

    Away from the origin h splits into a tangential part whose zeros are rays
    and a radial part that is affine in the radius. Rays are bracketed on an
    angular scan, bisected and snapped onto the line through x_* when within
    LINE_SNAP of it; the radius on each ray is bisected over
    [r_min, r_max] * ||x_*||. A root is kept when 2^d ||h|| <= h_tol ||x_*||,
    and roots closer than tol * ||x_*|| are merged. The origin is added when
    it is a local maximum of F. All lengths scale with ||x_*||.
    """
    x_star = np.asarray(x_star, dtype=float)
    if x_star.shape != (2,):
        raise ValueError("Critical-point search runs in a two-dimensional latent space")
    scale = float(np.linalg.norm(x_star))
    if scale == 0.0:
        raise ValueError("x_star must be nonzero")
    lo, hi = r_min * scale, r_max * scale

    points = []
    for phi in _angular_roots(x_star, d, scale, n_angles):
        f_lo, f_hi = _radial(x_star, d, lo, phi), _radial(x_star, d, hi, phi)
        if f_lo * f_hi > 0.0:
            continue
        r = brentq(lambda s: _radial(x_star, d, s, phi), lo, hi, xtol=1e-15 * scale)
        z = r * _ray(phi)
        if _scaled_h_norm(z, x_star, d) > h_tol * scale:
            logger.debug(f"Discarding near-root {z.tolist()} of F (d={d})")
            continue
        if all(np.linalg.norm(z - p) > tol * scale for p in points):
            points.append(z)

    if origin_is_critical(x_star, d, radius=1e-4 * scale):
        points.append(np.zeros(2))
    logger.debug(f"Critical points of F (d={d}): {[p.tolist() for p in points]}")
    return points


def scan_grid(inst, radius=2.0, resolution=101):
    """Rows x1, x2, F, f, h_norm, v_norm over a square k = 2 grid, skipping the origin ball."""
    if inst.k != 2:
        raise ValueError(f"Landscape scans need k = 2, got k = {inst.k}")
    d = inst.depth
    axis = np.linspace(-radius, radius, resolution)
    rows = []
    for x2 in axis:
        for x1 in axis:
            x = np.array([x1, x2])
            if np.linalg.norm(x) < ORIGIN_EXCLUSION:
                continue
            rows.append({
                "x1": float(x1),
                "x2": float(x2),
                "F": idealized_loss(x, inst.x_star, d),
                "f": objective(inst, x),
                "h_norm": float(np.linalg.norm(h_direction(x, inst.x_star, d))),
                "v_norm": subgradient(inst, x).norm,
            })
    return rows
