import math

import numpy as np

CONVERGED = "converged"
STALLED = "stalled"
MAX_ITERS = "max_iters"
DIVERGED = "diverged"
NUMERIC_FAILURE = "numeric_failure"


class TraceRecord:
    def __init__(self, t, x, f, negated=False, grad_norm=0.0):
        self.t = int(t)
        self.x = np.array(x, dtype=float)
        self.f = float(f)
        self.negated = bool(negated)
        self.grad_norm = float(grad_norm)

    def to_dict(self):
        return {
            "t": self.t,
            "x": self.x.tolist(),
            "f": self.f,
            "negated": self.negated,
            "grad_norm": self.grad_norm,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            t=data.get("t", 0),
            x=data.get("x", []),
            f=data.get("f", 0.0),
            negated=data.get("negated", False),
            grad_norm=data.get("grad_norm", 0.0),
        )


class IterateTrace:
    """Per-iteration records of one solver run plus its terminal status."""

    def __init__(self, records=None, status=MAX_ITERS, x_star=None, branch=1, diagnostics=None):
        self.records = records if records else []
        self.status = status
        self.x_star = np.array(x_star, dtype=float) if x_star is not None else None
        self.branch = branch
        self.diagnostics = diagnostics if diagnostics else {}

    def append(self, record):
        self.records.append(record)

    @property
    def final_x(self):
        return self.records[-1].x

    @property
    def final_f(self):
        return self.records[-1].f

    @property
    def iterations(self):
        return self.records[-1].t if self.records else 0

    @property
    def negation_count(self):
        return sum(1 for r in self.records if r.negated)

    def rel_latent_error(self, x=None):
        if self.x_star is None:
            return None
        x = self.final_x if x is None else x
        return float(np.linalg.norm(x - self.x_star) / np.linalg.norm(self.x_star))

    def monotonicity_violations(self):
        """Fraction of plain steps on which f did not strictly decrease."""
        steps = 0
        bad = 0
        for prev, cur in zip(self.records, self.records[1:]):
            if cur.negated:
                continue
            steps += 1
            if not cur.f < prev.f:
                bad += 1
        return bad / steps if steps else 0.0

    def convergence_rate(self, tail=0.5):
        """
        Estimate tau from the slope of log f over the last `tail` share of the run.

        Returns None when fewer than three positive values are available.
        """
        start = int(len(self.records) * (1.0 - tail))
        pts = [(r.t, math.log(r.f)) for r in self.records[start:] if r.f > 0 and math.isfinite(r.f)]
        if len(pts) < 3:
            return None
        t, logf = np.array(pts).T
        slope = np.polyfit(t, logf, 1)[0]
        # f ~ tau^(2t) near the minimiser
        return float(math.exp(slope / 2.0))

    def to_rows(self):
        rows = []
        for r in self.records:
            rows.append({
                "t": r.t,
                "f": r.f,
                "grad_norm": r.grad_norm,
                "negated": int(r.negated),
                "rel_latent_err": self.rel_latent_error(r.x) if self.x_star is not None else "",
            })
        return rows

    def summary(self):
        return {
            "status": self.status,
            "iterations": self.iterations,
            "final_f": self.final_f,
            "rel_latent_err": self.rel_latent_error(),
            "negations": self.negation_count,
            "branch": self.branch,
            "monotonicity_violations": self.monotonicity_violations(),
            "rate_estimate": self.convergence_rate(),
        }

    def to_dict(self):
        return {
            "status": self.status,
            "branch": self.branch,
            "x_star": self.x_star.tolist() if self.x_star is not None else None,
            "diagnostics": self.diagnostics,
            "records": [r.to_dict() for r in self.records],
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            records=[TraceRecord.from_dict(r) for r in data.get("records", [])],
            status=data.get("status", MAX_ITERS),
            x_star=data.get("x_star"),
            branch=data.get("branch", 1),
            diagnostics=data.get("diagnostics", {}),
        )
