"""Prism signature and catalog data models."""

from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction

from pydantic import BaseModel, Field, field_validator


class CuspType(str, Enum):
    """Euclidean turnover type of the single cusp."""

    T236 = "(2,3,6)"
    T333 = "(3,3,3)"
    T244 = "(2,4,4)"


class PrismSignature(BaseModel):
    """Dihedral-angle labels (a1..a9) of a one-cusped hyperbolic prism.

    Edge ``ai`` carries dihedral angle ``pi/ai``. Construction through
    :func:`prism_covers.core.catalog.make_signature` also checks the cusp and
    vertex conditions; the model itself only checks shape.
    """

    model_config = {"frozen": True}

    a: tuple[int, int, int, int, int, int, int, int, int] = Field(description="Labels a1..a9")
    name: str | None = Field(default=None, description="Catalog label, e.g. 'O333_2'")

    @field_validator("a")
    @classmethod
    def _labels_at_least_two(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        if any(label < 2 for label in value):
            raise ValueError(f"all labels must be >= 2, got {value}")
        return value

    def label(self, edge: int) -> int:
        """Label of edge ``a{edge}`` (1-based)."""
        return self.a[edge - 1]

    def angle(self, edge: int) -> float:
        """Dihedral angle at edge ``a{edge}``."""
        return math.pi / self.a[edge - 1]

    @property
    def cusp_labels(self) -> tuple[int, int, int]:
        return (self.a[0], self.a[1], self.a[4])

    @property
    def cusp_type(self) -> CuspType | None:
        key = tuple(sorted(self.cusp_labels))
        return {
            (2, 3, 6): CuspType.T236,
            (3, 3, 3): CuspType.T333,
            (2, 4, 4): CuspType.T244,
        }.get(key)

    @property
    def display_name(self) -> str:
        return self.name or "(" + ",".join(str(v) for v in self.a) + ")"

    def __str__(self) -> str:
        body = " ".join(str(v) for v in self.a)
        return f"{self.name} {body}" if self.name else body


class PrismTemplate(BaseModel):
    """Combinatorics of the prism and its double across face D."""

    model_config = {"frozen": True}

    vertices: tuple[str, ...] = Field(description="Template vertex names, ideal vertex first")
    vertex_edges: dict[str, tuple[int, int, int]] = Field(description="Edges at each vertex")
    edge_ends: dict[int, tuple[str, str]] = Field(description="Oriented endpoints of each edge")
    faces: dict[str, tuple[int, ...]] = Field(description="Edges of each face in cyclic order")
    face_vertices: dict[str, tuple[str, ...]] = Field(description="Vertices of each face in cyclic order")
    pairing_axes: dict[str, int] = Field(description="Generator -> rotation axis edge")
    pairing_faces: dict[str, str] = Field(description="Generator -> paired face")


class VertexGroupData(BaseModel):
    """Orientable isotropy group of a finite prism vertex."""

    model_config = {"frozen": True, "arbitrary_types_allowed": True}

    vertex: str = Field(description="Template vertex name")
    labels: tuple[int, int, int] = Field(description="Labels of the three incident edges")
    n_v: Fraction = Field(description="1/ai + 1/aj + 1/ak - 1")
    order: int = Field(description="Group order 2/n_v")


class VertexReport(BaseModel):
    """All finite vertex groups and the minimum manifold-cover degree bound."""

    model_config = {"frozen": True}

    vertices: list[VertexGroupData] = Field(default_factory=list)
    mcd: int = Field(description="lcm of the vertex group orders")


class PublishedObstructions(BaseModel):
    """Obstruction columns as reported in the knot-complement tables.

    A value of 1 means the test is passed (not an obstruction), 0 means it
    fails. Columns a row leaves blank are ``None``.
    """

    model_config = {"frozen": True}

    ck: int | None = Field(default=None, description="Cusp-killing column")
    dc: int | None = Field(default=None, description="Double-cover column")
    ut: int | None = Field(default=None, description="Unit-translation column")
    ir: str | None = Field(default=None, description="Integral representation column")
    mcd: int | None = Field(default=None, description="Minimum manifold-cover degree")
    highlighted: bool = Field(default=False, description="Row highlighted as a candidate")


class FamilyRule(BaseModel):
    """Parameter rule for a catalog family row."""

    model_config = {"frozen": True}

    min_n: int = Field(ge=3, description="Smallest n for which the prism is hyperbolic")
    mcd_base: int = Field(description="Published MCD is lcm(mcd_base, n)")
    even: PublishedObstructions = Field(description="Published columns for even n")
    odd: PublishedObstructions = Field(description="Published columns for odd n")


class CatalogEntry(BaseModel):
    """A row of the (2,3,6) or (3,3,3) catalog.

    Finite rows store their labels directly. Family rows store ``None`` in the
    parameter slot and are instantiated with
    :func:`prism_covers.core.catalog.instantiate`.
    """

    model_config = {"frozen": True}

    name: str = Field(description="Row name, e.g. 'O236_5,n'")
    table: str = Field(description="'236' or '333'")
    pattern: tuple[int | None, ...] = Field(description="Labels with None for the family parameter")
    published: PublishedObstructions | None = Field(default=None, description="Finite-row columns")
    family: FamilyRule | None = Field(default=None, description="Family rule, if a family row")

    @property
    def is_family(self) -> bool:
        return self.family is not None
