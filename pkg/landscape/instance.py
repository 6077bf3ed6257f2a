import numpy as np

from generator.network import forward, sample_gaussian_net
from models.problem import ProblemInstance
from phaseless.measurements import observe, sample_measurements, sample_noise
from util.seeding import (
    ENSEMBLE_STREAM, LATENT_STREAM, NET_STREAM, NOISE_STREAM, derive_seed, make_rng,
)


def make_instance(net, ensemble, x_star, eta=None):
    """Bundle (G, A, x_*) with b = |A G(x_*)| + eta."""
    x_star = np.asarray(x_star, dtype=float)
    y_star = forward(net, x_star)
    obs = observe(ensemble, y_star, eta)
    return ProblemInstance(net, ensemble, x_star, y_star, obs)


def sample_instance(dims, m, seed, noise_level=0.0, x_star=None):
    """Seeded Gaussian instance; each ingredient draws from its own stream."""
    net = sample_gaussian_net(dims, derive_seed(seed, NET_STREAM))
    ensemble = sample_measurements(m, net.n_out, derive_seed(seed, ENSEMBLE_STREAM))
    if x_star is None:
        x_star = make_rng(derive_seed(seed, LATENT_STREAM)).standard_normal(net.k)
    eta = sample_noise(m, noise_level, derive_seed(seed, NOISE_STREAM))
    return make_instance(net, ensemble, x_star, eta)
