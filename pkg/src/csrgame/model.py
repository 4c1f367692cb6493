"""Model parameters for the three-tier CSR investment game."""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, fields, replace


class DomainError(ValueError):
    """Raised when a parameter set violates the model's invariants."""

    def __init__(self, problems):
        if isinstance(problems, str):
            problems = [problems]
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


@dataclass(frozen=True)
class ModelParams:
    """Economic, tax and dynamics parameters plus horizon and initial state.

    ``delta``, ``delta_hat`` and ``delta_hathat`` weight the social benefit
    of the supplier, manufacturer and retailer; ``d`` and ``d_hat`` are the
    shares of the downstream member's investment credited upstream.
    """

    a: float
    b: float
    c: float
    w: float
    z: float
    q: float
    d: float
    d_hat: float
    delta: float
    delta_hat: float
    delta_hathat: float
    tau: float
    theta: float
    alpha: float
    beta1: float
    beta2: float
    beta3: float
    T: int
    x1: float

    @property
    def tt(self) -> float:
        """tau * theta, the curvature scale every reaction divides by."""
        return self.tau * self.theta

    def replace(self, **changes) -> "ModelParams":
        return replace(self, **changes)

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def field_names(cls) -> tuple[str, ...]:
        return tuple(f.name for f in fields(cls))


def validate(params: ModelParams) -> ModelParams:
    problems = []
    for name in ModelParams.field_names():
        value = getattr(params, name)
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            problems.append(f"{name} must be a real number")
        elif not math.isfinite(value):
            problems.append(f"{name} must be finite")
    if problems:
        raise DomainError(problems)

    if not params.tau > 0:
        problems.append("tau must be > 0")
    if not params.theta > 0:
        problems.append("theta must be > 0")
    if not 0 < params.alpha < 1:
        problems.append("alpha must lie in (0,1)")
    if int(params.T) != params.T or params.T < 1:
        problems.append("T must be an integer >= 1")
    if not params.q > 0:
        problems.append("q must be > 0")
    for name in ("beta1", "beta2", "beta3"):
        if getattr(params, name) < 0:
            problems.append(f"{name} must be >= 0")
    if problems:
        raise DomainError(problems)
    return params


def example_params() -> ModelParams:
    """Numerical example of the three-tier chain.

    The source lists ``c`` twice (2.4 and 0.00001) and ``d`` twice (0.6 and
    0.4). The second ``c`` is read as the price sensitivity ``b`` so that the
    retail price a - b*q = 5 sits between w and z; ``d`` = 0.4 matches
    ``d_hat``. No retention rate is given, ``alpha`` = 0.8 is our choice.
    """
    return ModelParams(
        a=6.0, b=1e-5, c=2.4, w=3.8, z=6.0, q=100000.0,
        d=0.4, d_hat=0.4,
        delta=0.2, delta_hat=0.2, delta_hathat=0.2,
        tau=0.2, theta=0.01, alpha=0.8,
        beta1=0.3, beta2=0.5, beta3=0.8,
        T=10, x1=1.0,
    )


def params_from_dict(data: dict) -> ModelParams:
    """Build params from a mapping with exactly the field names.

    Keys starting with ``_`` are treated as comments and dropped.
    """
    data = {k: v for k, v in data.items() if not k.startswith("_")}
    names = set(ModelParams.field_names())
    problems = [f"unknown parameter {k!r}" for k in sorted(set(data) - names)]
    problems += [f"missing parameter {k!r}" for k in ModelParams.field_names()
                 if k not in data]
    if problems:
        raise DomainError(problems)
    values = dict(data)
    if isinstance(values["T"], float) and values["T"].is_integer():
        values["T"] = int(values["T"])
    return validate(ModelParams(**values))
