import numpy as np


class AdaptiveMomentState:
    """First/second moment step scaling (Adam) for latent descent."""

    def __init__(self, dim, step, betas, eps):
        self.step = step
        self.beta1, self.beta2 = betas
        self.eps = eps
        self.m = np.zeros(dim)
        self.v = np.zeros(dim)
        self.t = 0

    def direction(self, grad):
        """Return the update to subtract from the iterate."""
        self.t += 1
        self.m = self.beta1 * self.m + (1.0 - self.beta1) * grad
        self.v = self.beta2 * self.v + (1.0 - self.beta2) * grad * grad
        m_hat = self.m / (1.0 - self.beta1 ** self.t)
        v_hat = self.v / (1.0 - self.beta2 ** self.t)
        return self.step * m_hat / (np.sqrt(v_hat) + self.eps)
