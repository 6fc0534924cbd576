"""Ideal triangulation of a cover by six tetrahedra per cell.

Cell k owns tetrahedra 6k..6k+5; 6k+3..6k+5 are the mirror images of
6k..6k+2. Vertex 3 of tetrahedra 6k+1, 6k+2, 6k+4 and 6k+5 is the ideal
vertex. Faces are listed in the order 012, 013, 023, 123.
"""

from __future__ import annotations

import re

from networkx.utils import UnionFind

from prism_covers.core.permutation import cusp_orbits, validate_rep
from prism_covers.models.common import CoverError, Generator
from prism_covers.models.rep import PermRep
from prism_covers.models.signature import PrismSignature
from prism_covers.models.triangulation import (
    FACES,
    TetGluing,
    TriangulationData,
    TriangulationReport,
)
from prism_covers.utils.errors import GluingFormatError, InvalidRep
from prism_covers.utils.logging import get_logger

logger = get_logger(__name__)

TETS_PER_CELL = 6
IDENTITY = "0123"
IDEAL_OFFSETS: tuple[int, ...] = (1, 2, 4, 5)

# (offset, face) -> (target offset, perm) inside one cell.
INTERNAL_GLUINGS: dict[tuple[int, int], tuple[int, str]] = {
    (0, 1): (3, IDENTITY),
    (0, 3): (1, "3120"),
    (1, 0): (0, "3120"),
    (1, 1): (4, IDENTITY),
    (1, 2): (2, IDENTITY),
    (2, 2): (1, IDENTITY),
    (3, 1): (0, IDENTITY),
    (3, 3): (4, "3120"),
    (4, 0): (3, "3120"),
    (4, 1): (1, IDENTITY),
    (4, 2): (5, IDENTITY),
    (5, 2): (4, IDENTITY),
}

# Mirror (offset, face) glued by generator g to the same face of the
# P-side tetrahedron offset - 3 in cell sigma(g)(k).
EXTERNAL_GLUINGS: dict[tuple[int, int], Generator] = {
    (3, 0): Generator.W,
    (3, 2): Generator.Y,
    (4, 3): Generator.Z,
    (5, 0): Generator.Y,
    (5, 1): Generator.X,
    (5, 3): Generator.Z,
}

_LINE = re.compile(r"^tet\s+(\d+)\s*:\s*((?:\(\s*\d+\s*,\s*[0-3]{4}\s*\)\s*){4})$")
_ENTRY = re.compile(r"\(\s*(\d+)\s*,\s*([0-3]{4})\s*\)")


def _ideal_corners(tet_count: int) -> list[tuple[int, int]]:
    return [(t, 3) for t in range(tet_count) if t % TETS_PER_CELL in IDEAL_OFFSETS]


def _face_image(face: int, perm: str) -> int:
    """Index of the target face that ``face`` is carried to by ``perm``."""
    image = "".join(sorted(perm[int(v)] for v in FACES[face]))
    return FACES.index(image) if image in FACES else -1


def triangulate(sig: PrismSignature, rep: PermRep) -> TriangulationData:
    """Six tetrahedra per cell with internal and face-pairing gluings.

    Raises:
        InvalidRep: If ``rep`` fails a relator or is not transitive
    """
    validation = validate_rep(sig, rep)
    if not validation.valid:
        raise InvalidRep("; ".join(e.message for e in validation.errors))

    n = rep.degree
    table: list[list[TetGluing | None]] = [[None] * 4 for _ in range(TETS_PER_CELL * n)]
    for k in range(n):
        base = TETS_PER_CELL * k
        for (offset, face), (target, perm) in INTERNAL_GLUINGS.items():
            table[base + offset][face] = TetGluing(target=base + target, perm=perm)
        for (offset, face), g in EXTERNAL_GLUINGS.items():
            partner = TETS_PER_CELL * rep.gen(g)(k) + offset - 3
            table[base + offset][face] = TetGluing(target=partner, perm=IDENTITY)
            table[partner][face] = TetGluing(target=base + offset, perm=IDENTITY)

    gluings = [_complete(row, t) for t, row in enumerate(table)]
    return _with_vertex_classes(len(gluings), gluings)


def _complete(row: list[TetGluing | None], tet: int) -> tuple[TetGluing, TetGluing, TetGluing, TetGluing]:
    if any(g is None for g in row):
        raise InvalidRep(f"tetrahedron {tet} has an unglued face")
    a, b, c, d = row
    assert a is not None and b is not None and c is not None and d is not None
    return (a, b, c, d)


def _with_vertex_classes(
    tet_count: int,
    gluings: list[tuple[TetGluing, TetGluing, TetGluing, TetGluing]],
) -> TriangulationData:
    corners = UnionFind((t, v) for t in range(tet_count) for v in range(4))
    for t, row in enumerate(gluings):
        for face, gluing in enumerate(row):
            for v in FACES[face]:
                corners.union((t, int(v)), (gluing.target, int(gluing.perm[int(v)])))

    ideal = _ideal_corners(tet_count)
    ideal_roots = {corners[c] for c in ideal}
    all_roots = {corners[(t, v)] for t in range(tet_count) for v in range(4)}
    logger.debug("Triangulation with %d tetrahedra: %d ideal vertex classes", tet_count, len(ideal_roots))
    return TriangulationData(
        tet_count=tet_count,
        gluings=gluings,
        ideal_corners=ideal,
        ideal_vertex_classes=len(ideal_roots),
        finite_vertex_classes=len(all_roots - ideal_roots),
    )


def validate_triangulation(t: TriangulationData, cusp_count: int | None = None) -> TriangulationReport:
    """Check that the face gluings form a fixed-point-free involution.

    Problems are reported, not raised. With ``cusp_count`` the number of
    ideal vertex classes must also match it.
    """
    errors: list[CoverError] = []
    for tet, row in enumerate(t.gluings):
        for face, gluing in enumerate(row):
            where = f"tet {tet} face {FACES[face]}"
            if sorted(gluing.perm) != list(IDENTITY):
                errors.append(
                    CoverError(code="INVALID_PERMUTATION", message=f"{where}: {gluing.perm} is not a permutation")
                )
                continue
            if not 0 <= gluing.target < t.tet_count:
                errors.append(
                    CoverError(code="GLUING_TARGET_MISSING", message=f"{where}: no tetrahedron {gluing.target}")
                )
                continue
            back_face = _face_image(face, gluing.perm)
            if gluing.target == tet and back_face == face:
                errors.append(CoverError(code="FACE_GLUED_TO_ITSELF", message=f"{where} is glued to itself"))
                continue
            back = t.gluings[gluing.target][back_face]
            inverse = "".join(str(gluing.perm.index(str(i))) for i in range(4))
            if back.target != tet or back.perm != inverse:
                errors.append(
                    CoverError(
                        code="GLUING_NOT_INVOLUTION",
                        message=f"{where} -> ({gluing.target},{gluing.perm}) is not glued back",
                        details={"tet": tet, "face": FACES[face]},
                    )
                )

    if cusp_count is not None and t.ideal_vertex_classes != cusp_count:
        errors.append(
            CoverError(
                code="CUSP_COUNT_MISMATCH",
                message=f"{t.ideal_vertex_classes} ideal vertex classes but {cusp_count} cusps",
            )
        )
    return TriangulationReport(
        valid=not errors,
        tet_count=t.tet_count,
        ideal_vertex_classes=t.ideal_vertex_classes,
        cusp_count=cusp_count,
        errors=errors,
    )


def triangulate_and_validate(sig: PrismSignature, rep: PermRep) -> tuple[TriangulationData, TriangulationReport]:
    """Triangulate and check the ideal classes against the cusps of ``rep``."""
    t = triangulate(sig, rep)
    return t, validate_triangulation(t, cusp_count=len(cusp_orbits(rep)))


def export_gluing_table(t: TriangulationData) -> str:
    """Plain-text gluing table, one line per tetrahedron."""
    lines = [f"ntet {t.tet_count}"]
    for tet, row in enumerate(t.gluings):
        entries = " ".join(f"({g.target},{g.perm})" for g in row)
        lines.append(f"tet {tet} : {entries}")
    return "\n".join(lines) + "\n"


def parse_gluing_table(text: str) -> TriangulationData:
    """Parse the export format back into a triangulation.

    Raises:
        GluingFormatError: On malformed lines, out-of-order tetrahedra or a
            count that is not a multiple of six
    """
    lines = [(i, line.strip()) for i, line in enumerate(text.splitlines(), start=1) if line.strip()]
    if not lines:
        raise GluingFormatError("empty gluing table")
    header_no, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "ntet" or not parts[1].isdigit():
        raise GluingFormatError(f"expected 'ntet N' but got {header!r}", line=header_no)
    tet_count = int(parts[1])
    if tet_count % TETS_PER_CELL:
        raise GluingFormatError(f"tetrahedron count {tet_count} is not a multiple of {TETS_PER_CELL}", line=header_no)
    if len(lines) - 1 != tet_count:
        raise GluingFormatError(f"expected {tet_count} tetrahedra, found {len(lines) - 1}")

    gluings: list[tuple[TetGluing, TetGluing, TetGluing, TetGluing]] = []
    for expected, (line_no, line) in enumerate(lines[1:]):
        match = _LINE.match(line)
        if match is None:
            raise GluingFormatError(f"malformed line {line!r}", line=line_no)
        if int(match.group(1)) != expected:
            raise GluingFormatError(f"expected tet {expected}, got tet {match.group(1)}", line=line_no)
        entries = [TetGluing(target=int(a), perm=p) for a, p in _ENTRY.findall(match.group(2))]
        if any(g.target >= tet_count for g in entries):
            raise GluingFormatError("gluing target out of range", line=line_no)
        gluings.append((entries[0], entries[1], entries[2], entries[3]))
    return _with_vertex_classes(tet_count, gluings)
