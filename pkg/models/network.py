import math

import numpy as np


class NetworkDims:
    """Latent dimension k = n_0 and the widths n_1 < ... < n_d."""

    def __init__(self, k, layer_dims):
        self.k = int(k)
        self.layer_dims = [int(n) for n in layer_dims]
        self.validate()

    def validate(self):
        if self.k < 1:
            raise ValueError(f"Latent dimension must be positive, got {self.k}")
        if len(self.layer_dims) < 1:
            raise ValueError("A generator needs at least one layer")
        chain = [self.k] + self.layer_dims
        for prev, nxt in zip(chain, chain[1:]):
            if nxt <= prev:
                raise ValueError(f"Layer widths must strictly expand, got {chain}")

    @property
    def depth(self):
        return len(self.layer_dims)

    @property
    def chain(self):
        return [self.k] + list(self.layer_dims)

    @property
    def n_out(self):
        return self.layer_dims[-1]

    def to_dict(self):
        return {"k": self.k, "layer_dims": list(self.layer_dims)}

    @classmethod
    def from_dict(cls, data):
        return cls(k=data.get("k"), layer_dims=data.get("layer_dims", []))

    def __eq__(self, other):
        return isinstance(other, NetworkDims) and self.chain == other.chain

    def __repr__(self):
        return f"NetworkDims(k={self.k}, layer_dims={self.layer_dims})"


class GeneratorNet:
    """Bias-free ReLU network; weights are frozen after construction."""

    def __init__(self, dims, weights):
        self.dims = dims
        frozen = []
        for i, W in enumerate(weights):
            W = np.array(W, dtype=float)
            expected = (dims.chain[i + 1], dims.chain[i])
            if W.shape != expected:
                raise ValueError(f"Layer {i + 1} weight has shape {W.shape}, expected {expected}")
            if not np.all(np.isfinite(W)):
                raise ValueError(f"Layer {i + 1} weight has non-finite entries")
            W.setflags(write=False)
            frozen.append(W)
        if len(frozen) != dims.depth:
            raise ValueError(f"Expected {dims.depth} weight matrices, got {len(frozen)}")
        self.weights = tuple(frozen)

    @property
    def depth(self):
        return self.dims.depth

    @property
    def k(self):
        return self.dims.k

    @property
    def n_out(self):
        return self.dims.n_out

    def to_dict(self):
        # Row-major weight blocks after the dims header
        return {
            "dims": self.dims.to_dict(),
            "weights": [W.tolist() for W in self.weights],
        }

    @classmethod
    def from_dict(cls, data):
        dims = NetworkDims.from_dict(data.get("dims", {}))
        return cls(dims=dims, weights=[np.array(W, dtype=float) for W in data.get("weights", [])])


class AngleProfile:
    """
    Angle recursion attached to a pair of latent directions.

    theta_bar[0] is the angle between x and x_*, theta_bar[i] = g(theta_bar[i-1]).
    zeta[i] is the product of (pi - theta_bar[j]) / pi for j = i..d-1, so
    zeta[d] = 1. psi_d = (pi - 2 theta_bar[d]) / pi.
    """

    def __init__(self, theta_bar, psi_d, zeta, breve=None):
        self.theta_bar = [float(t) for t in theta_bar]
        self.psi_d = float(psi_d)
        self.zeta = [float(z) for z in zeta]
        self.breve = [float(t) for t in breve] if breve is not None else None

    @property
    def depth(self):
        return len(self.theta_bar) - 1

    def weighted_sine_sum(self):
        """Sum over i < d of (sin theta_bar_i / pi) * zeta_{i+1}."""
        d = self.depth
        return sum(math.sin(self.theta_bar[i]) / math.pi * self.zeta[i + 1] for i in range(d))

    def radial_coefficient(self):
        """2 sin(theta_bar_d) / pi + psi_d * weighted_sine_sum()."""
        return 2.0 * math.sin(self.theta_bar[-1]) / math.pi + self.psi_d * self.weighted_sine_sum()

    def to_dict(self):
        return {
            "theta_bar": self.theta_bar,
            "psi_d": self.psi_d,
            "zeta": self.zeta,
            "breve": self.breve,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            theta_bar=data.get("theta_bar", []),
            psi_d=data.get("psi_d", 1.0),
            zeta=data.get("zeta", []),
            breve=data.get("breve"),
        )
