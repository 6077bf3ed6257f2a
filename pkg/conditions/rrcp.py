"""Monte-Carlo checks of the measurement-side concentration properties."""
import math

import numpy as np

import config
from generator.network import forward_batch
from landscape.directions import h_direction
from landscape.objective import subgradient
from models.report import DeviationReport
from phaseless.operators import phi_matrix, varphi
from util.linalg import angle_between
from util.seeding import make_rng

MAX_RESAMPLES = 100


def _matrix(A):
    return getattr(A, "A", A)


def _tuple_value(A, z, w, u, q, L):
    """|<(A_z^T A_w - Phi_{z,w}) u, q>| / (L ||u|| ||q||)."""
    lhs = float(np.dot(np.sign(A @ w) * (A @ u), np.sign(A @ z) * (A @ q)))
    rhs = float(np.dot(phi_matrix(z, w).apply(u), q))
    return abs(lhs - rhs) / (L * np.linalg.norm(u) * np.linalg.norm(q))


def _draw_tuple(net, rng, structure):
    """Latents (x, y, x1, x2, x3, x4) pushed through G, resampled until both differences are nonzero."""
    for _ in range(MAX_RESAMPLES):
        lat = rng.standard_normal((net.k, 6))
        if structure == "diagonal":
            lat[:, 1] = lat[:, 0]
            lat[:, 4] = lat[:, 2]
            lat[:, 5] = lat[:, 3]
        elif structure == "antipodal":
            lat[:, 1] = -lat[:, 0]
        G = forward_batch(net, lat)
        u = G[:, 2] - G[:, 3]
        q = G[:, 4] - G[:, 5]
        if np.any(u) and np.any(q):
            return G[:, 0], G[:, 1], u, q
    raise RuntimeError("Could not draw a non-degenerate tuple; the generator output is identically zero")


def rrcp_deviation(A, net, num_tuples, seed, L=config.RRCP_L):
    """Normalised RRCP deviation over random latent tuples plus diagonal and antipodal ones."""
    A = _matrix(A)
    if A.shape[1] != net.n_out:
        raise ValueError(f"Ensemble width {A.shape[1]} does not match generator output {net.n_out}")
    rng = make_rng(seed)
    n_struct = max(1, num_tuples // 10)
    plan = ["random"] * num_tuples + ["diagonal"] * n_struct + ["antipodal"] * n_struct
    devs = []
    for structure in plan:
        z, w, u, q = _draw_tuple(net, rng, structure)
        devs.append(_tuple_value(A, z, w, u, q, L))
    return DeviationReport.from_samples(devs, {
        "check": "rrcp",
        "m": A.shape[0],
        "dims": net.dims.chain,
        "num_tuples": num_tuples,
        "L": L,
        "seed": seed,
    })


def angle_distortion_check(A, net, num_pairs, seed):
    """|cos angle(|Az|, |Aw|) - cos varphi(angle(z, w))| over z = G(x), w = G(y)."""
    A = _matrix(A)
    if A.shape[1] != net.n_out:
        raise ValueError(f"Ensemble width {A.shape[1]} does not match generator output {net.n_out}")
    rng = make_rng(seed)
    n_struct = max(1, num_pairs // 10)
    devs = []
    for index in range(num_pairs + n_struct):
        for _ in range(MAX_RESAMPLES):
            lat = rng.standard_normal((net.k, 2))
            if index >= num_pairs:
                lat[:, 1] = lat[:, 0]
            G = forward_batch(net, lat)
            z, w = G[:, 0], G[:, 1]
            az, aw = np.abs(A @ z), np.abs(A @ w)
            if np.any(az) and np.any(aw):
                break
        else:
            raise RuntimeError("Could not draw generator outputs with nonzero measurements")
        theta_d = angle_between(z, w)
        theta_1 = angle_between(az, aw)
        devs.append(abs(math.cos(theta_1) - math.cos(varphi(theta_d))))
    return DeviationReport.from_samples(devs, {
        "check": "angle_distortion",
        "m": A.shape[0],
        "dims": net.dims.chain,
        "num_pairs": num_pairs,
        "seed": seed,
    })


def subgradient_vs_h(inst, num_points, seed, radii=(0.5, 1.0, 2.0)):
    """2^d ||v_x - h_x|| / max(||x||, ||x_*||) on spheres of radius r ||x_*|| (x_* included)."""
    rng = make_rng(seed)
    d = inst.depth
    ns = float(np.linalg.norm(inst.x_star))
    devs = []
    points = [np.array(inst.x_star)]
    for _ in range(num_points):
        r = radii[int(rng.integers(len(radii)))]
        u = rng.standard_normal(inst.k)
        points.append(r * ns * u / np.linalg.norm(u))
    for x in points:
        gap = subgradient(inst, x).v - h_direction(x, inst.x_star, d)
        devs.append(2.0 ** d * float(np.linalg.norm(gap)) / max(float(np.linalg.norm(x)), ns))
    return DeviationReport.from_samples(devs, {
        "check": "subgradient_vs_h",
        "m": inst.ensemble.m,
        "dims": inst.net.dims.chain,
        "num_points": num_points,
        "radii": list(radii),
        "noise_norm": inst.obs.noise_norm,
        "seed": seed,
    })
