"""Knot-complement pre-filter and cover-filter models."""

from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, Field

from prism_covers.models.rep import PermRep
from prism_covers.models.signature import PublishedObstructions


class IsotropyEdge(BaseModel):
    """Labelled edge of the isotropy graph."""

    model_config = {"frozen": True}

    u: str
    v: str
    label: int = Field(ge=1)
    origin: str = Field(description="Prism edge names merged into this edge")


class CuspKillResult(BaseModel):
    """Outcome of the cusp-killing reduction."""

    model_config = {"frozen": True}

    trivial: bool
    residual: list[IsotropyEdge] = Field(default_factory=list)
    steps: int = Field(default=0, description="Rewriting steps taken")

    @property
    def verdict(self) -> str:
        return "trivial" if self.trivial else "nontrivial"


class DoubleCoverStatus(str, Enum):
    """Double-cover test outcome."""

    EXISTS = "exists"
    ABSENT = "absent"
    NOT_APPLICABLE = "notApplicable"


class DoubleCoverResult(BaseModel):
    """Sign assignments giving a (3,3,3)-cusped double cover."""

    model_config = {"frozen": True}

    exists: bool
    witness: tuple[int, ...] = Field(default=(), description="Edges of a negative cycle")
    witness_count: int = 0


class Verdict(str, Enum):
    """Pre-filter verdict."""

    ELIMINATED = "eliminated"
    SURVIVING = "surviving"


class PrefilterReport(BaseModel):
    """Computed obstruction columns for one signature."""

    model_config = {"frozen": True}

    name: str
    cusp_kill: str
    double_cover: DoubleCoverStatus
    mcd: int
    unit_translation: str = "not implemented"
    verdict: Verdict
    reasons: list[str] = Field(default_factory=list)
    published: PublishedObstructions | None = None

    @property
    def obstructions_match(self) -> bool | None:
        """Whether CK and DC agree with the published row."""
        if self.published is None:
            return None
        ck_ok = self.published.ck is None or self.published.ck == int(self.cusp_kill == "trivial")
        dc_ok = (
            self.published.dc is None
            or self.double_cover == DoubleCoverStatus.NOT_APPLICABLE
            or self.published.dc == int(self.double_cover == DoubleCoverStatus.EXISTS)
        )
        return ck_ok and dc_ok

    @property
    def mcd_matches(self) -> bool | None:
        if self.published is None:
            return None
        return self.published.mcd is None or self.published.mcd == self.mcd

    @property
    def matches_published(self) -> bool | None:
        """Whether CK, DC and MCD agree with the published row."""
        if self.published is None:
            return None
        return bool(self.obstructions_match and self.mcd_matches)


class FilterStages(BaseModel):
    """Survivor counts after each cover-filter stage."""

    model_config = {"frozen": True}

    total: int
    manifold: int
    one_cusp: int
    homology_z: int
    survivors: list[PermRep] = Field(default_factory=list)

    @property
    def counts(self) -> tuple[int, int, int]:
        return (self.manifold, self.one_cusp, self.homology_z)
