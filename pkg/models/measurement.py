import numpy as np


class MeasurementEnsemble:
    """m x n real measurement matrix, intended entries N(0, 1/m)."""

    def __init__(self, A):
        A = np.array(A, dtype=float)
        if A.ndim != 2:
            raise ValueError(f"Measurement matrix must be 2-D, got shape {A.shape}")
        if not np.all(np.isfinite(A)):
            raise ValueError("Measurement matrix has non-finite entries")
        A.setflags(write=False)
        self.A = A

    @property
    def m(self):
        return self.A.shape[0]

    @property
    def n(self):
        return self.A.shape[1]

    def to_dict(self):
        return {"m": self.m, "n": self.n, "A": self.A.tolist()}

    @classmethod
    def from_dict(cls, data):
        A = np.array(data.get("A", []), dtype=float).reshape(data.get("m", 0), data.get("n", 0))
        return cls(A)


class PhaselessObservation:
    """b = |A y_*| + eta, with the noise kept alongside."""

    def __init__(self, b, eta):
        self.b = np.array(b, dtype=float)
        self.eta = np.array(eta, dtype=float)
        if self.b.shape != self.eta.shape:
            raise ValueError(f"b {self.b.shape} and eta {self.eta.shape} differ in shape")
        self.b.setflags(write=False)
        self.eta.setflags(write=False)

    @property
    def m(self):
        return self.b.shape[0]

    @property
    def noise_norm(self):
        return float(np.linalg.norm(self.eta))

    def to_dict(self):
        return {"b": self.b.tolist(), "eta": self.eta.tolist(), "noise_norm": self.noise_norm}

    @classmethod
    def from_dict(cls, data):
        return cls(b=data.get("b", []), eta=data.get("eta", []))
