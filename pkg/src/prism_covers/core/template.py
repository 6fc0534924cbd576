"""Hard-coded combinatorics of the prism and its double.

Vertices are indexed 0..5 with 0 the ideal vertex. Edges are the labels
1..9 (``a1``..``a9``), oriented by :data:`EDGE_ENDS`. Faces 0..3 are the
faces paired by x, y, z, w; ``"D"`` is the doubling face. In the doubled
prism every face f exists twice: the mirror copy (side 1) of cell k is glued
to the P-side copy (side 0) of cell sigma(g)(k).
"""

from __future__ import annotations

from prism_covers.models.common import Generator
from prism_covers.models.signature import PrismTemplate
from prism_covers.utils.errors import TemplateInconsistent

V_INF, V1, V2, V3, V4, V5 = range(6)
VERTEX_NAMES: tuple[str, ...] = ("v_inf", "v1", "v2", "v3", "v4", "v5")

EDGE_ENDS: dict[int, tuple[int, int]] = {
    1: (V_INF, V1),
    2: (V_INF, V2),
    3: (V1, V2),
    4: (V1, V3),
    5: (V_INF, V5),
    6: (V2, V4),
    7: (V3, V5),
    8: (V4, V5),
    9: (V3, V4),
}

# Cyclic vertex order; consecutive vertices are joined by the listed edges.
FACE_VERTICES: dict[str, tuple[int, ...]] = {
    "D": (V_INF, V1, V3, V5),
    "0": (V_INF, V1, V2),
    "1": (V1, V2, V4, V3),
    "2": (V_INF, V2, V4, V5),
    "3": (V3, V5, V4),
}
FACE_EDGES: dict[str, tuple[int, ...]] = {
    "D": (1, 4, 7, 5),
    "0": (1, 3, 2),
    "1": (3, 6, 9, 4),
    "2": (2, 6, 8, 5),
    "3": (7, 8, 9),
}

FACE_GENERATOR: dict[int, Generator] = {
    0: Generator.X,
    1: Generator.Y,
    2: Generator.Z,
    3: Generator.W,
}
GENERATOR_FACE: dict[Generator, int] = {g: f for f, g in FACE_GENERATOR.items()}
PAIRING_AXIS: dict[Generator, int] = {
    Generator.X: 1,
    Generator.Y: 4,
    Generator.Z: 5,
    Generator.W: 7,
}

AXIS_EDGES: tuple[int, ...] = (1, 4, 5, 7)
D_VERTICES: tuple[int, ...] = (V_INF, V1, V3, V5)
CUSP_EDGES: tuple[int, ...] = (1, 2, 5)
FINITE_VERTICES: tuple[int, ...] = (V1, V2, V3, V4, V5)

# Edges shared by two paired faces, with the generators of those faces.
TWO_FACE_EDGES: dict[int, tuple[Generator, Generator]] = {
    3: (Generator.Y, Generator.X),
    2: (Generator.Z, Generator.X),
    6: (Generator.Z, Generator.Y),
    9: (Generator.Y, Generator.W),
    8: (Generator.Z, Generator.W),
}


def vertex_edges(vertex: int) -> tuple[int, int, int]:
    """The three edge labels at a template vertex, ascending."""
    edges = sorted(e for e, ends in EDGE_ENDS.items() if vertex in ends)
    return (edges[0], edges[1], edges[2])


def faces_of_edge(edge: int) -> list[str]:
    return sorted(f for f, edges in FACE_EDGES.items() if edge in edges)


def verify_template() -> None:
    """Check the template's incidences against the presentation.

    Raises:
        TemplateInconsistent: If any incidence is wrong
    """
    for vertex in range(6):
        if len([e for e, ends in EDGE_ENDS.items() if vertex in ends]) != 3:
            raise TemplateInconsistent(f"vertex {VERTEX_NAMES[vertex]} is not trivalent")

    for face, verts in FACE_VERTICES.items():
        edges = FACE_EDGES[face]
        for i, edge in enumerate(edges):
            pair = {verts[i], verts[(i + 1) % len(verts)]}
            if set(EDGE_ENDS[edge]) != pair:
                raise TemplateInconsistent(f"face {face}: edge a{edge} does not join {sorted(pair)}")

    for edge in EDGE_ENDS:
        numbered = [f for f in faces_of_edge(edge) if f != "D"]
        in_d = edge in FACE_EDGES["D"]
        if len(numbered) + int(in_d) != 2:
            raise TemplateInconsistent(f"edge a{edge} does not lie on exactly two faces")
        if in_d:
            face = int(numbered[0])
            if PAIRING_AXIS[FACE_GENERATOR[face]] != edge:
                raise TemplateInconsistent(f"axis a{edge} does not match face {face}")
        else:
            gens = {FACE_GENERATOR[int(f)] for f in numbered}
            if set(TWO_FACE_EDGES[edge]) != gens:
                raise TemplateInconsistent(f"relator edge a{edge} lies on faces {numbered}")


def build_template() -> PrismTemplate:
    """The template as a frozen model."""
    return PrismTemplate(
        vertices=VERTEX_NAMES,
        vertex_edges={VERTEX_NAMES[v]: vertex_edges(v) for v in range(6)},
        edge_ends={e: (VERTEX_NAMES[a], VERTEX_NAMES[b]) for e, (a, b) in EDGE_ENDS.items()},
        faces=dict(FACE_EDGES),
        face_vertices={f: tuple(VERTEX_NAMES[v] for v in vs) for f, vs in FACE_VERTICES.items()},
        pairing_axes={g.value: e for g, e in PAIRING_AXIS.items()},
        pairing_faces={g.value: str(f) for g, f in GENERATOR_FACE.items()},
    )


verify_template()
TEMPLATE = build_template()
