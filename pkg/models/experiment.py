import config
from models.network import NetworkDims
from models.solver_config import SolverConfig, SparseSolverConfig
from util.errors import ConfigError

SOLVE = "solve"
SWEEP = "sweep"
LANDSCAPE = "landscape"
VERIFY_WDC = "verify-wdc"
VERIFY_RRCP = "verify-rrcp"
TESSELLATE = "tessellate"
COMPARE = "compare"
KINDS = (SOLVE, SWEEP, LANDSCAPE, VERIFY_WDC, VERIFY_RRCP, TESSELLATE, COMPARE)

# Kinds that draw a single measurement count rather than a grid
SINGLE_M_KINDS = (SOLVE, LANDSCAPE, VERIFY_RRCP, TESSELLATE)
GRID_KINDS = (SWEEP, COMPARE)
METHODS = ("dpr", "two_branch")


class ExperimentConfig:
    """One experiment, loaded from a single JSON document."""

    def __init__(self, kind, seed, dims, m=None, m_grid=None, noise_level=0.0, solver=None,
                 trials=1, output=None, workers=1, overwrite=True, method="dpr",
                 threshold=config.SUCCESS_THRESHOLD, samples=1000, radius=2.0, resolution=101,
                 ell=2, probes=100000, sparse=None):
        self.kind = kind
        self.seed = seed
        self.dims = dims
        self.m = m
        self.m_grid = list(m_grid) if m_grid is not None else None
        self.noise_level = noise_level
        self.solver = solver if solver is not None else SolverConfig()
        self.trials = trials
        self.output = output or config.OUTPUT_DIR
        self.workers = workers
        self.overwrite = overwrite
        self.method = method
        self.threshold = threshold
        self.samples = samples
        self.radius = radius
        self.resolution = resolution
        self.ell = ell
        self.probes = probes
        self.sparse = sparse
        self.validate()

    def validate(self):
        if self.kind not in KINDS:
            raise ConfigError(f"Unknown experiment kind '{self.kind}', expected one of {KINDS}")
        if self.seed is None or isinstance(self.seed, bool) or not isinstance(self.seed, int):
            raise ConfigError("A non-negative integer seed is mandatory")
        if self.seed < 0:
            raise ConfigError(f"Seed must be non-negative, got {self.seed}")
        if not isinstance(self.dims, NetworkDims):
            raise ConfigError("dims must describe the generator widths")
        if self.kind in SINGLE_M_KINDS and (self.m is None or int(self.m) < 1):
            raise ConfigError(f"'{self.kind}' needs a positive measurement count m")
        if self.kind in GRID_KINDS:
            if not self.m_grid:
                raise ConfigError(f"'{self.kind}' needs a non-empty m_grid")
            floor = 0 if self.kind == COMPARE else 1
            if any(int(m) < floor for m in self.m_grid):
                raise ConfigError(f"m_grid entries must be at least {floor}, got {self.m_grid}")
        if self.kind == LANDSCAPE and self.dims.k != 2:
            raise ConfigError(f"Landscape scans need k = 2, got k = {self.dims.k}")
        if self.kind == TESSELLATE and not 1 <= self.ell <= self.dims.n_out:
            raise ConfigError(f"ell must lie in [1, {self.dims.n_out}], got {self.ell}")
        if self.kind == COMPARE:
            if self.sparse is None:
                raise ConfigError("'compare' needs a sparse baseline section")
            if self.sparse.sparsity > self.dims.n_out:
                raise ConfigError("Sparse baseline sparsity exceeds the signal length")
        if self.trials < 1 or self.workers < 1 or self.samples < 1:
            raise ConfigError("trials, workers and samples must be at least 1")
        if self.noise_level < 0:
            raise ConfigError(f"noise_level must be non-negative, got {self.noise_level}")
        if not self.threshold > 0:
            raise ConfigError(f"threshold must be positive, got {self.threshold}")
        if self.method not in METHODS:
            raise ConfigError(f"Unknown method '{self.method}', expected one of {METHODS}")

    def merge_overrides(self, seed=None, output=None, workers=None):
        """CLI flags win over the JSON document."""
        data = self.to_dict()
        if seed is not None:
            data["seed"] = seed
        if output is not None:
            data["output"] = output
        if workers is not None:
            data["workers"] = workers
        return ExperimentConfig.from_dict(data)

    def to_dict(self):
        return {
            "kind": self.kind,
            "seed": self.seed,
            "dims": self.dims.to_dict(),
            "m": self.m,
            "m_grid": self.m_grid,
            "noise_level": self.noise_level,
            "solver": self.solver.to_dict(),
            "trials": self.trials,
            "output": self.output,
            "workers": self.workers,
            "overwrite": self.overwrite,
            "method": self.method,
            "threshold": self.threshold,
            "samples": self.samples,
            "radius": self.radius,
            "resolution": self.resolution,
            "ell": self.ell,
            "probes": self.probes,
            "sparse": self.sparse.to_dict() if self.sparse is not None else None,
        }

    @classmethod
    def from_dict(cls, data):
        if not isinstance(data, dict):
            raise ConfigError("Experiment config must be a JSON object")
        try:
            dims = data.get("dims")
            sparse = data.get("sparse")
            return cls(
                kind=data.get("kind"),
                seed=data.get("seed"),
                dims=NetworkDims.from_dict(dims) if dims else None,
                m=_count(data.get("m"), "m"),
                m_grid=[_count(v, "m_grid") for v in data["m_grid"]] if data.get("m_grid") is not None else None,
                noise_level=float(data.get("noise_level", 0.0)),
                solver=SolverConfig.from_dict(data.get("solver") or {}),
                trials=int(data.get("trials", 1)),
                output=data.get("output"),
                workers=int(data.get("workers", 1)),
                overwrite=bool(data.get("overwrite", True)),
                method=data.get("method", "dpr"),
                threshold=float(data.get("threshold", config.SUCCESS_THRESHOLD)),
                samples=int(data.get("samples", 1000)),
                radius=float(data.get("radius", 2.0)),
                resolution=int(data.get("resolution", 101)),
                ell=int(data.get("ell", 2)),
                probes=int(data.get("probes", 100000)),
                sparse=SparseSolverConfig.from_dict(sparse) if sparse else None,
            )
        except ConfigError:
            raise
        except (TypeError, ValueError) as e:
            raise ConfigError(f"Invalid experiment config: {e}") from e


def _count(value, name):
    """Integer from an int, an integral float or a numeric string."""
    if value is None:
        return None
    if isinstance(value, bool):
        raise ValueError(f"{name} must be an integer, got {value!r}")
    if isinstance(value, float) and not value.is_integer():
        raise ValueError(f"{name} must be an integer, got {value!r}")
    return int(value)
