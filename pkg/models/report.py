import numpy as np


class DeviationReport:
    """Summary statistics of a Monte-Carlo deviation sample, with the inputs echoed."""

    def __init__(self, samples, max_dev, mean_dev, p50, p95, config=None):
        self.samples = int(samples)
        self.max_dev = float(max_dev)
        self.mean_dev = float(mean_dev)
        self.p50 = float(p50)
        self.p95 = float(p95)
        self.config = config if config else {}

    @classmethod
    def from_samples(cls, devs, config=None):
        devs = np.asarray(devs, dtype=float)
        if devs.size == 0:
            return cls(0, 0.0, 0.0, 0.0, 0.0, config)
        # Sorted first so the reduction order never depends on worker order
        devs = np.sort(devs)
        return cls(
            samples=devs.size,
            max_dev=devs[-1],
            mean_dev=float(np.mean(devs)),
            p50=float(np.quantile(devs, 0.5)),
            p95=float(np.quantile(devs, 0.95)),
            config=config,
        )

    def to_dict(self):
        return {
            "samples": self.samples,
            "max_dev": self.max_dev,
            "mean_dev": self.mean_dev,
            "p50": self.p50,
            "p95": self.p95,
            "config": self.config,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            samples=data.get("samples", 0),
            max_dev=data.get("max_dev", 0.0),
            mean_dev=data.get("mean_dev", 0.0),
            p50=data.get("p50", 0.0),
            p95=data.get("p95", 0.0),
            config=data.get("config", {}),
        )


class TessellationResult:
    def __init__(self, m, ell, count, exact, region_bound, bound_10m, bound_10m2):
        self.m = int(m)
        self.ell = int(ell)
        self.count = int(count)
        self.exact = bool(exact)
        self.region_bound = int(region_bound)
        self.bound_10m = float(bound_10m)
        self.bound_10m2 = float(bound_10m2)

    def to_dict(self):
        return {
            "m": self.m,
            "ell": self.ell,
            "count": self.count,
            "exact": self.exact,
            "region_bound": self.region_bound,
            "bound_10m": self.bound_10m,
            "bound_10m2": self.bound_10m2,
        }
