import numpy as np

from generator.network import forward


def reconstruction_error(net, x_hat, y_star):
    """Per-coordinate l2 error ||G(x_hat) - y_*|| / sqrt(n_d)."""
    y_star = np.asarray(y_star, dtype=float)
    if y_star.shape != (net.n_out,):
        raise ValueError(f"y_star must have length {net.n_out}")
    return float(np.linalg.norm(forward(net, x_hat) - y_star) / np.sqrt(net.n_out))


def relative_latent_error(x_hat, x_star):
    x_star = np.asarray(x_star, dtype=float)
    return float(np.linalg.norm(np.asarray(x_hat, dtype=float) - x_star) / np.linalg.norm(x_star))
