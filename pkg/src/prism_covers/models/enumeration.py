"""Low-index enumeration models."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field

from prism_covers.models.signature import PrismSignature


class EnumerationTask(BaseModel):
    """A low-index subgroup enumeration request."""

    model_config = {"frozen": True}

    signature: PrismSignature
    max_index: int = Field(ge=1)
    split_depth: int = Field(default=2, ge=0, description="Prefix depth for parallel work items")
    canonical_policy: Literal["first-in-orbit"] = "first-in-orbit"


class EnumerationSummary(BaseModel):
    """Counts from a finished enumeration."""

    model_config = {"frozen": True}

    signature: str
    max_index: int
    total: int
    by_index: dict[int, int] = Field(default_factory=dict)
    prefixes: int = 0
