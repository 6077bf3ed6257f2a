import numpy as np

from generator.network import check_latent, activation_margin, end_to_end_jacobian, forward, forward_layers
from models.problem import DescentDirection


def objective(inst, x):
    """f(x) = 1/2 || |A G(x)| - b ||^2."""
    r = np.abs(inst.A @ forward(inst.net, x)) - inst.b
    return 0.5 * float(np.dot(r, r))


def noiseless_objective(inst, x):
    """f_0(x) = 1/2 || |A G(x)| - |A G(x_*)| ||^2."""
    r = np.abs(inst.A @ forward(inst.net, x)) - np.abs(inst.A @ inst.y_star)
    return 0.5 * float(np.dot(r, r))


def subgradient(inst, x):
    """
    v_x = Lambda_x^T A_{G(x)}^T (|A G(x)| - b) with sgn(0) = 0.

    This is the gradient wherever f is differentiable and one Clarke element otherwise.
    """
    x = check_latent(inst.net, x)
    if not np.any(x):
        raise ValueError("The subgradient selection is undefined at x = 0")
    pre, _ = forward_layers(inst.net, x)
    lam = end_to_end_jacobian(inst.net, x)
    ay = inst.A @ (lam @ x)
    signs = np.sign(ay)
    v = lam.T @ (inst.A.T @ (signs * (np.abs(ay) - inst.b)))
    tie = any(np.any(z == 0) for z in pre) or np.any(ay == 0)
    return DescentDirection(v, differentiable=not tie)


def boundary_margin(inst, x):
    """Distance proxy to the nearest activation or measurement sign boundary."""
    y = forward(inst.net, x)
    ny = np.linalg.norm(y)
    if ny == 0.0:
        return 0.0
    meas = float(np.min(np.abs(inst.A @ y))) / ny
    return min(activation_margin(inst.net, x), meas)
