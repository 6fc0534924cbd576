"""Cover complex, spine, presentation and homology models."""

from __future__ import annotations

from fractions import Fraction

from pydantic import BaseModel, Field

P_SIDE = 0
MIRROR_SIDE = 1


class FaceGluing(BaseModel):
    """Mirror face ``face`` of ``cell`` is glued to P-side face of ``target``."""

    model_config = {"frozen": True}

    cell: int
    face: int = Field(ge=0, le=3)
    target: int


class CoverComplex(BaseModel):
    """Doubled-prism cells of a cover with their edge and vertex identifications.

    Edge instances are addressed by ``(cell, label, side)`` where ``label`` is
    the prism edge number 1..9 and ``side`` is :data:`P_SIDE` or
    :data:`MIRROR_SIDE`. Vertex instances use the template vertex index 0..5
    (0 is the ideal vertex) in place of the label.
    """

    model_config = {"frozen": True}

    degree: int
    gluings: list[FaceGluing] = Field(default_factory=list)
    edge_class_of: list[int] = Field(description="Class index of each flat edge instance")
    vertex_class_of: list[int] = Field(description="Class index of each flat vertex instance")
    edge_class_count: int
    vertex_class_count: int

    @staticmethod
    def edge_key(cell: int, label: int, side: int) -> int:
        return (cell * 9 + label - 1) * 2 + side

    @staticmethod
    def vertex_key(cell: int, vertex: int, side: int) -> int:
        return (cell * 6 + vertex) * 2 + side

    def edge_class(self, cell: int, label: int, side: int = P_SIDE) -> int:
        return self.edge_class_of[self.edge_key(cell, label, side)]

    def vertex_class(self, cell: int, vertex: int, side: int = P_SIDE) -> int:
        return self.vertex_class_of[self.vertex_key(cell, vertex, side)]

    def edge_classes_for(self, label: int) -> list[list[tuple[int, int]]]:
        """Classes meeting edge label ``label`` as sorted ``(cell, side)`` lists."""
        groups: dict[int, list[tuple[int, int]]] = {}
        for cell in range(self.degree):
            for side in (P_SIDE, MIRROR_SIDE):
                groups.setdefault(self.edge_class(cell, label, side), []).append((cell, side))
        return [sorted(set(members)) for _, members in sorted(groups.items())]

    def vertex_cells(self, vertex: int, side: int = P_SIDE) -> list[list[int]]:
        """Partition of cells by the class of their ``vertex`` instance on ``side``."""
        groups: dict[int, list[int]] = {}
        for cell in range(self.degree):
            groups.setdefault(self.vertex_class(cell, vertex, side), []).append(cell)
        return sorted(groups.values())


class SpineEdge(BaseModel):
    """An oriented 1-cell of the spine."""

    model_config = {"frozen": True}

    tail: int
    head: int
    label: int = Field(description="Prism edge label of the class")


class SpineCell(BaseModel):
    """A 2-cell with its boundary word of signed 1-cells."""

    model_config = {"frozen": True}

    boundary: tuple[tuple[int, int], ...] = Field(description="(edge index, +1/-1) around the cell")
    faces: dict[str, int] = Field(default_factory=dict, description="Prism faces the cell is made of")


class SpineComplex(BaseModel):
    """Two-dimensional spine carrying the fundamental group of the cover."""

    model_config = {"frozen": True}

    vertex_count: int
    edges: list[SpineEdge] = Field(default_factory=list)
    cells: list[SpineCell] = Field(default_factory=list)

    @property
    def counts(self) -> tuple[int, int, int]:
        return (self.vertex_count, len(self.edges), len(self.cells))

    @property
    def euler_characteristic(self) -> int:
        v, e, f = self.counts
        return v - e + f


class Presentation(BaseModel):
    """Finite presentation; relators use signed 1-based generator indices."""

    model_config = {"frozen": True}

    generator_count: int
    relators: list[tuple[int, ...]] = Field(default_factory=list)
    tree_edges: list[int] = Field(default_factory=list, description="Spine edges in the maximal tree")


class AbelianGroup(BaseModel):
    """Finitely generated abelian group Z^rank + Z/d1 + ... with d1 | d2 | ..."""

    model_config = {"frozen": True}

    rank: int = Field(ge=0)
    torsion: tuple[int, ...] = Field(default=())

    def is_z(self) -> bool:
        return self.rank == 1 and not self.torsion

    def __str__(self) -> str:
        parts: list[str] = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


class SurfaceReport(BaseModel):
    """Closed totally geodesic surface tiled by the prism's triangle cross-sections."""

    model_config = {"frozen": True, "arbitrary_types_allowed": True}

    components: int
    component_sizes: list[int] = Field(description="Cells per component")
    euler_characteristic: int
    genus: list[int] = Field(description="Genus of each component")
    area_over_pi: Fraction = Field(description="Total area divided by pi")
    piece_area_over_pi: Fraction = Field(description="Area of one cell's piece divided by pi")
    orientable: bool = True
    separating: bool | None = Field(description="True when separating is guaranteed, else None")

    @property
    def separating_text(self) -> str:
        return "yes" if self.separating else "not guaranteed"
