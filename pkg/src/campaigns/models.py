"""
Validated campaign parameters.
"""

from typing import Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from ..config import settings
from ..errors import InvalidParameter


def parse_n_range(text: str) -> list[int]:
    """'6' -> [6], '3..10' -> [3, ..., 10], '4,6,8' -> [4, 6, 8]."""
    text = text.strip()
    try:
        if ".." in text:
            low, _, high = text.partition("..")
            values = list(range(int(low), int(high) + 1))
        else:
            values = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise InvalidParameter(f"bad n range {text!r}; expected N, A..B or A,B,C")
    if not values:
        raise InvalidParameter(f"empty n range {text!r}")
    if min(values) < 3:
        raise InvalidParameter(f"prisms need n >= 3, got {min(values)}")
    return values


class CampaignConfig(BaseModel):
    """One equitable-choosability campaign."""

    n_values: list[int]
    mode: Literal["exhaustive", "sample"] = "sample"
    samples: int = Field(default_factory=lambda: settings.samples, ge=1)
    universe: int = Field(default_factory=lambda: settings.universe, ge=3)
    seed: Optional[int] = None
    jobs: int = Field(default_factory=lambda: settings.workers, ge=1)
    budget_nodes: int = Field(default_factory=lambda: settings.budget_nodes, ge=1)
    time_limit: Optional[float] = Field(default=None, gt=0)
    k: int = 3

    @field_validator("n_values")
    @classmethod
    def _prism_sizes(cls, values: list[int]) -> list[int]:
        if not values:
            raise ValueError("at least one n is required")
        if min(values) < 3:
            raise ValueError(f"prisms need n >= 3, got {min(values)}")
        return values

    @model_validator(mode="after")
    def _mode_requirements(self) -> "CampaignConfig":
        if self.mode == "sample" and self.seed is None:
            raise ValueError("sample mode needs a seed")
        if self.mode == "exhaustive":
            if any(n != 3 for n in self.n_values):
                raise ValueError("exhaustive mode is only available for n=3")
            if self.universe > settings.exhaustive_universe_cap:
                raise ValueError(
                    f"exhaustive universe {self.universe} exceeds the cap "
                    f"{settings.exhaustive_universe_cap}"
                )
        if self.universe < self.k:
            raise ValueError(f"universe {self.universe} is smaller than k={self.k}")
        return self

    def describe(self) -> str:
        ns = ",".join(str(n) for n in self.n_values)
        return (
            f"n={ns} mode={self.mode} samples={self.samples} universe={self.universe} "
            f"seed={self.seed} jobs={self.jobs}"
        )
