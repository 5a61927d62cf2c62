"""Residual aggregation across verification trials."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ValidationError
from .shapes import AlgebraShape

__all__ = ["ResidualReport"]


@dataclass(frozen=True)
class ResidualReport:
    """Max-abs residuals of one identity over a batch of random trials.

    ``max_abs`` always equals ``max(per_trial_max)``; trial order is the
    generation order, so per-trial values stay addressable by index.
    """

    shape: AlgebraShape
    identity_name: str
    trials: int
    max_abs: float
    per_trial_max: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "per_trial_max", tuple(float(v) for v in self.per_trial_max))
        if self.trials < 1:
            raise ValidationError("trials must be >= 1")
        if len(self.per_trial_max) != self.trials:
            raise ValidationError(
                f"expected {self.trials} per-trial values, got {len(self.per_trial_max)}"
            )
        if self.max_abs != max(self.per_trial_max):
            raise ValidationError("max_abs must equal max(per_trial_max)")

    @classmethod
    def from_trials(cls, shape, identity_name, per_trial_max) -> ResidualReport:
        per_trial_max = tuple(float(v) for v in per_trial_max)
        return cls(
            shape=shape,
            identity_name=identity_name,
            trials=len(per_trial_max),
            max_abs=max(per_trial_max),
            per_trial_max=per_trial_max,
        )

    def __str__(self):
        return (
            f"{self.identity_name} on {self.shape.display_name()}: "
            f"max |residual| = {self.max_abs:.6e} over {self.trials} trial(s)"
        )
