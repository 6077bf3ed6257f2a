import config

PLAIN_SUBGRADIENT = "plain_subgradient"
ADAPTIVE_MOMENT = "adaptive_moment"
VARIANTS = (PLAIN_SUBGRADIENT, ADAPTIVE_MOMENT)


def default_step_size(depth):
    """alpha = 2^d / (10 d^2)."""
    d = max(int(depth), 1)
    return 2.0 ** d / (10.0 * d * d)


class SolverConfig:
    """Settings for the latent subgradient solvers; step_size None means the depth default."""

    def __init__(self, step_size=None, max_iters=config.DEFAULT_MAX_ITERS,
                 grad_tol=config.DEFAULT_GRAD_TOL, restarts=1, variant=PLAIN_SUBGRADIENT,
                 seed=0, negation=True, step_tol=config.DEFAULT_STEP_TOL,
                 divergence_window=config.DIVERGENCE_WINDOW, adam_step=config.ADAM_STEP,
                 adam_betas=config.ADAM_BETAS, adam_eps=config.ADAM_EPS):
        self.step_size = step_size
        self.max_iters = int(max_iters)
        self.grad_tol = float(grad_tol)
        self.restarts = int(restarts)
        self.variant = variant
        self.seed = seed
        self.negation = bool(negation)
        self.step_tol = float(step_tol)
        self.divergence_window = int(divergence_window)
        self.adam_step = float(adam_step)
        self.adam_betas = (float(adam_betas[0]), float(adam_betas[1]))
        self.adam_eps = float(adam_eps)
        self.validate()

    def validate(self):
        if self.step_size is not None and not self.step_size > 0:
            raise ValueError(f"step_size must be positive, got {self.step_size}")
        if self.max_iters < 1:
            raise ValueError(f"max_iters must be at least 1, got {self.max_iters}")
        if not (self.grad_tol > 0 and self.step_tol > 0):
            raise ValueError("Tolerances must be positive")
        if self.restarts < 1:
            raise ValueError(f"restarts must be at least 1, got {self.restarts}")
        if self.variant not in VARIANTS:
            raise ValueError(f"Unknown variant '{self.variant}', expected one of {VARIANTS}")
        if self.divergence_window < 1:
            raise ValueError("divergence_window must be at least 1")
        b1, b2 = self.adam_betas
        if not (0 <= b1 < 1 and 0 <= b2 < 1) or self.adam_step <= 0 or self.adam_eps <= 0:
            raise ValueError("Invalid adaptive-moment hyperparameters")

    def resolved_step(self, depth):
        return self.step_size if self.step_size is not None else default_step_size(depth)

    def replace(self, **changes):
        data = self.to_dict()
        data.update(changes)
        return SolverConfig.from_dict(data)

    def to_dict(self):
        return {
            "step_size": self.step_size,
            "max_iters": self.max_iters,
            "grad_tol": self.grad_tol,
            "restarts": self.restarts,
            "variant": self.variant,
            "seed": self.seed,
            "negation": self.negation,
            "step_tol": self.step_tol,
            "divergence_window": self.divergence_window,
            "adam_step": self.adam_step,
            "adam_betas": list(self.adam_betas),
            "adam_eps": self.adam_eps,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            step_size=data.get("step_size"),
            max_iters=data.get("max_iters", config.DEFAULT_MAX_ITERS),
            grad_tol=data.get("grad_tol", config.DEFAULT_GRAD_TOL),
            restarts=data.get("restarts", 1),
            variant=data.get("variant", PLAIN_SUBGRADIENT),
            seed=data.get("seed", 0),
            negation=data.get("negation", True),
            step_tol=data.get("step_tol", config.DEFAULT_STEP_TOL),
            divergence_window=data.get("divergence_window", config.DIVERGENCE_WINDOW),
            adam_step=data.get("adam_step", config.ADAM_STEP),
            adam_betas=data.get("adam_betas", config.ADAM_BETAS),
            adam_eps=data.get("adam_eps", config.ADAM_EPS),
        )


class SparseSolverConfig:
    """Thresholded amplitude flow settings. init_samples None uses every measurement."""

    def __init__(self, sparsity, step=0.6, iters=500, init_samples=None, truncation=0.7, seed=0):
        self.sparsity = int(sparsity)
        self.step = float(step)
        self.iters = int(iters)
        self.init_samples = init_samples
        self.truncation = float(truncation)
        self.seed = seed
        if self.sparsity < 1:
            raise ValueError(f"sparsity must be at least 1, got {self.sparsity}")
        if self.step <= 0 or self.iters < 0:
            raise ValueError("step must be positive and iters nonnegative")

    def to_dict(self):
        return {
            "sparsity": self.sparsity,
            "step": self.step,
            "iters": self.iters,
            "init_samples": self.init_samples,
            "truncation": self.truncation,
            "seed": self.seed,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            sparsity=data.get("sparsity", 1),
            step=data.get("step", 0.6),
            iters=data.get("iters", 500),
            init_samples=data.get("init_samples"),
            truncation=data.get("truncation", 0.7),
            seed=data.get("seed", 0),
        )
