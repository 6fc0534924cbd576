"""Ideal triangulation models."""

from __future__ import annotations

from pydantic import BaseModel, Field

from prism_covers.models.common import CoverError

FACES: tuple[str, ...] = ("012", "013", "023", "123")


class TetGluing(BaseModel):
    """Target of one tetrahedron face; ``perm[i]`` is the image of vertex i."""

    model_config = {"frozen": True}

    target: int
    perm: str = Field(pattern=r"^[0-3]{4}$")


class TriangulationData(BaseModel):
    """Tetrahedra with face gluings in face order 012, 013, 023, 123."""

    model_config = {"frozen": True}

    tet_count: int
    gluings: list[tuple[TetGluing, TetGluing, TetGluing, TetGluing]]
    ideal_corners: list[tuple[int, int]] = Field(description="(tet, vertex) corners at the cusp")
    ideal_vertex_classes: int
    finite_vertex_classes: int


class TriangulationReport(BaseModel):
    """Result of validating a gluing table."""

    model_config = {"frozen": True}

    valid: bool
    tet_count: int
    ideal_vertex_classes: int
    cusp_count: int | None = None
    errors: list[CoverError] = Field(default_factory=list)
