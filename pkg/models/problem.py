import numpy as np


class ProblemInstance:
    """One recovery task: generator, ensemble, ground-truth latent and data."""

    def __init__(self, net, ensemble, x_star, y_star, obs):
        if ensemble.n != net.n_out:
            raise ValueError(f"Ensemble acts on R^{ensemble.n} but the generator outputs R^{net.n_out}")
        if obs.m != ensemble.m:
            raise ValueError(f"Observation has {obs.m} entries for {ensemble.m} measurements")
        self.net = net
        self.ensemble = ensemble
        self.x_star = np.array(x_star, dtype=float)
        self.y_star = np.array(y_star, dtype=float)
        self.obs = obs
        if self.x_star.shape != (net.k,):
            raise ValueError(f"x_star must have length {net.k}")
        self.x_star.setflags(write=False)
        self.y_star.setflags(write=False)

    @property
    def A(self):
        return self.ensemble.A

    @property
    def b(self):
        return self.obs.b

    @property
    def depth(self):
        return self.net.depth

    @property
    def k(self):
        return self.net.k

    @property
    def noiseless(self):
        return self.obs.noise_norm == 0.0


class DescentDirection:
    """A Clarke subgradient selection; differentiable is False when a sign tie was hit."""

    def __init__(self, v, differentiable=True):
        self.v = np.array(v, dtype=float)
        self.differentiable = bool(differentiable)

    @property
    def norm(self):
        return float(np.linalg.norm(self.v))

    def to_dict(self):
        return {"v": self.v.tolist(), "differentiable": self.differentiable}
