import numpy as np

from models.network import GeneratorNet, NetworkDims
from util.linalg import as_vector
from util.seeding import make_rng


def sample_gaussian_net(dims, seed):
    """Draw W_i with i.i.d. N(0, 1/n_i) entries."""
    if not isinstance(dims, NetworkDims):
        dims = NetworkDims.from_dict(dims)
    dims.validate()
    rng = make_rng(seed)
    chain = dims.chain
    weights = []
    for n_in, n_out in zip(chain, chain[1:]):
        weights.append(rng.normal(0.0, 1.0 / np.sqrt(n_out), size=(n_out, n_in)))
    return GeneratorNet(dims, weights)


def relu(v):
    return np.maximum(v, 0.0)


def check_latent(net, x):
    x = as_vector(x)
    if x.shape[0] != net.k:
        raise ValueError(f"Latent vector has length {x.shape[0]}, generator expects {net.k}")
    return x


def forward_layers(net, x):
    """Return (pre_activations, outputs) per layer, outputs[0] being x itself."""
    h = check_latent(net, x)
    pre = []
    outs = [h]
    for W in net.weights:
        z = W @ h
        h = relu(z)
        pre.append(z)
        outs.append(h)
    return pre, outs


def forward(net, x):
    """G(x) = relu(W_d ... relu(W_1 x) ...)."""
    h = check_latent(net, x)
    for W in net.weights:
        h = relu(W @ h)
    return h


def active_weights(net, x, layer):
    """W_{i,+,x}: rows of W_i kept where the layer-i pre-activation is strictly positive."""
    if not 1 <= layer <= net.depth:
        raise ValueError(f"Layer index must lie in [1, {net.depth}], got {layer}")
    pre, _ = forward_layers(net, x)
    mask = pre[layer - 1] > 0
    return net.weights[layer - 1] * mask[:, None]


def end_to_end_jacobian(net, x):
    """
    Lambda_x = W_{d,+,x} ... W_{1,+,x}, so that G(x) = Lambda_x x.

    At x = 0 every pre-activation ties at zero and the product is the zero matrix.
    """
    h = check_latent(net, x)
    lam = np.eye(net.k)
    for W in net.weights:
        z = W @ h
        mask = z > 0
        lam = (W @ lam) * mask[:, None]
        h = relu(z)
    return lam


def activation_margin(net, x):
    """Smallest |pre-activation| relative to the layer input norm, over all layers."""
    pre, outs = forward_layers(net, x)
    margin = np.inf
    for z, h in zip(pre, outs[:-1]):
        scale = np.linalg.norm(h)
        if scale == 0.0:
            return 0.0
        margin = min(margin, float(np.min(np.abs(z))) / scale)
    return margin


def lipschitz_ratio(net, x, x_star):
    x = check_latent(net, x)
    x_star = check_latent(net, x_star)
    gap = np.linalg.norm(x - x_star)
    if gap == 0.0:
        return 0.0
    return float(np.linalg.norm(forward(net, x) - forward(net, x_star)) / gap)


def forward_batch(net, X):
    """G applied to each column of the k x B matrix X."""
    H = np.asarray(X, dtype=float)
    if H.ndim != 2 or H.shape[0] != net.k:
        raise ValueError(f"Expected a {net.k} x B latent batch, got shape {H.shape}")
    for W in net.weights:
        H = relu(W @ H)
    return H
