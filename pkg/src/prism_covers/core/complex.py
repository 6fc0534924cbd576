"""Cell structure of a cover, its spine and the fundamental-group presentation."""

from __future__ import annotations

import random
from collections import Counter, deque

from networkx.utils import UnionFind

from prism_covers.core.permutation import evaluate_word, relators, validate_rep
from prism_covers.core.template import (
    AXIS_EDGES,
    D_VERTICES,
    EDGE_ENDS,
    FACE_EDGES,
    FACE_GENERATOR,
    FACE_VERTICES,
)
from prism_covers.models.complex import (
    MIRROR_SIDE,
    P_SIDE,
    CoverComplex,
    FaceGluing,
    Presentation,
    SpineCell,
    SpineComplex,
    SpineEdge,
)
from prism_covers.models.rep import PermRep
from prism_covers.models.signature import PrismSignature
from prism_covers.utils.errors import DisconnectedSpine, InvalidRep
from prism_covers.utils.logging import get_logger

logger = get_logger(__name__)

SPINE_EDGES: tuple[int, ...] = (3, 4, 6, 7, 8, 9)
# Boundary words of the spine faces 1- and 3- read along FACE_VERTICES.
SPINE_FACES: dict[str, tuple[tuple[int, int], ...]] = {
    "1": ((3, 1), (6, 1), (9, -1), (4, -1)),
    "3": ((7, 1), (8, -1), (9, -1)),
}


def build_complex(sig: PrismSignature, rep: PermRep) -> CoverComplex:
    """Glue ``n`` doubled prisms along the face pairings of ``rep``.

    Mirror face f of cell k is glued to the P-side face f of cell
    ``sigma(g)(k)`` where g pairs face f. Gluing P face f of cell k to the
    mirror face f of ``sigma(g)(k)`` instead gives the same complex with the
    P and mirror sides swapped. Axis edges and the vertices of the doubling
    face exist once per cell.

    Raises:
        InvalidRep: If ``rep`` fails a relator or is not transitive
    """
    validation = validate_rep(sig, rep)
    if not validation.valid:
        raise InvalidRep(
            "; ".join(e.message for e in validation.errors),
            details={"errors": [e.code for e in validation.errors]},
        )

    n = rep.degree
    edge_keys = [CoverComplex.edge_key(k, e, s) for k in range(n) for e in range(1, 10) for s in (0, 1)]
    vertex_keys = [CoverComplex.vertex_key(k, v, s) for k in range(n) for v in range(6) for s in (0, 1)]
    edges = UnionFind(edge_keys)
    vertices = UnionFind(vertex_keys)
    gluings: list[FaceGluing] = []

    for k in range(n):
        for e in AXIS_EDGES:
            edges.union(CoverComplex.edge_key(k, e, P_SIDE), CoverComplex.edge_key(k, e, MIRROR_SIDE))
        for v in D_VERTICES:
            vertices.union(
                CoverComplex.vertex_key(k, v, P_SIDE), CoverComplex.vertex_key(k, v, MIRROR_SIDE)
            )
        for face, g in FACE_GENERATOR.items():
            target = rep.gen(g)(k)
            gluings.append(FaceGluing(cell=k, face=face, target=target))
            for e in FACE_EDGES[str(face)]:
                edges.union(
                    CoverComplex.edge_key(k, e, MIRROR_SIDE),
                    CoverComplex.edge_key(target, e, P_SIDE),
                )
            for v in FACE_VERTICES[str(face)]:
                vertices.union(
                    CoverComplex.vertex_key(k, v, MIRROR_SIDE),
                    CoverComplex.vertex_key(target, v, P_SIDE),
                )

    edge_class_of, edge_count = _number_classes(edges, len(edge_keys))
    vertex_class_of, vertex_count = _number_classes(vertices, len(vertex_keys))
    logger.debug("Cover complex of degree %d: %d edge classes, %d vertex classes", n, edge_count, vertex_count)
    return CoverComplex(
        degree=n,
        gluings=gluings,
        edge_class_of=edge_class_of,
        vertex_class_of=vertex_class_of,
        edge_class_count=edge_count,
        vertex_class_count=vertex_count,
    )


def _number_classes(uf: UnionFind, size: int) -> tuple[list[int], int]:
    """Number classes by their smallest key."""
    class_of = [-1] * size
    count = 0
    roots: dict[int, int] = {}
    for key in range(size):
        root = uf[key]
        if root not in roots:
            roots[root] = count
            count += 1
        class_of[key] = roots[root]
    return class_of, count


def edge_cycle_check(sig: PrismSignature, rep: PermRep, cx: CoverComplex) -> list[str]:
    """Compare P-side edge classes with relator cycles; returns mismatching relators.

    For each relator the cells meeting an edge class on the P side must be
    exactly one cycle of the relator's base word.
    """
    mismatched: list[str] = []
    for relator in relators(sig):
        cycles = {frozenset(c) for c in evaluate_word(rep, relator.base).cycles()}
        classes = {
            frozenset(cell for cell, side in members if side == P_SIDE)
            for members in cx.edge_classes_for(relator.edge)
        }
        if cycles != classes:
            mismatched.append(relator.name)
    return mismatched


def build_spine(cx: CoverComplex) -> SpineComplex:
    """The 2-spine: P-side faces 1 and 3 of every cell with their compact edges."""
    edge_index: dict[int, int] = {}
    edges: list[SpineEdge] = []
    vertex_index: dict[int, int] = {}

    def vertex_id(cls: int) -> int:
        if cls not in vertex_index:
            vertex_index[cls] = len(vertex_index)
        return vertex_index[cls]

    def edge_id(cell: int, label: int) -> int:
        cls = cx.edge_class(cell, label, P_SIDE)
        if cls not in edge_index:
            tail, head = EDGE_ENDS[label]
            edge_index[cls] = len(edges)
            edges.append(
                SpineEdge(
                    tail=vertex_id(cx.vertex_class(cell, tail, P_SIDE)),
                    head=vertex_id(cx.vertex_class(cell, head, P_SIDE)),
                    label=label,
                )
            )
        return edge_index[cls]

    cells: list[SpineCell] = []
    for face in ("1", "3"):
        for k in range(cx.degree):
            boundary = tuple((edge_id(k, label), sign) for label, sign in SPINE_FACES[face])
            cells.append(SpineCell(boundary=boundary, faces={face: 1}))

    spine = SpineComplex(vertex_count=len(vertex_index), edges=edges, cells=cells)
    logger.debug("Spine counts (V, E, F) = %s", spine.counts)
    return spine


def _invert(word: list[tuple[int, int]]) -> list[tuple[int, int]]:
    return [(e, -s) for e, s in reversed(word)]


def _rotate(word: list[tuple[int, int]], start: int) -> list[tuple[int, int]]:
    return word[start:] + word[:start]


def _cancel_adjacent(word: list[tuple[int, int]], edge: int) -> list[tuple[int, int]] | None:
    """Remove a cyclically adjacent ``edge edge^-1`` pair, if there is one."""
    size = len(word)
    for i in range(size):
        j = (i + 1) % size
        if i == j:
            continue
        if word[i][0] == edge and word[j][0] == edge and word[i][1] == -word[j][1]:
            if j == 0:
                return word[1:i]
            return word[:i] + word[j + 1 :]
    return None


def coarsen_spine(sp: SpineComplex) -> SpineComplex:
    """Remove valence-two 1-cells, merging the 2-cells on either side.

    The lowest edge used exactly twice is removed at each step. Two distinct
    cells are merged into one; an adjacent ``e e^-1`` pair inside one cell is
    cancelled. Vertices left without edges are dropped.
    """
    words: list[list[tuple[int, int]] | None] = [list(c.boundary) for c in sp.cells]
    faces: list[Counter[str]] = [Counter(c.faces) for c in sp.cells]
    alive = set(range(len(sp.edges)))
    stuck: set[int] = set()

    while True:
        slots: dict[int, list[tuple[int, int]]] = {}
        for ci, word in enumerate(words):
            if word is None:
                continue
            for pos, (e, _) in enumerate(word):
                slots.setdefault(e, []).append((ci, pos))
        candidates = sorted(e for e, where in slots.items() if len(where) == 2 and e not in stuck)
        if not candidates:
            break
        e = candidates[0]
        (c1, p1), (c2, p2) = slots[e]
        if c1 != c2:
            first = words[c1]
            second = words[c2]
            assert first is not None and second is not None
            a = _rotate(first, p1)
            if a[0][1] < 0:
                a = _invert(_rotate(first, (p1 + 1) % len(first)))
            b = _rotate(second, p2)
            if b[0][1] > 0:
                b = _invert(_rotate(second, (p2 + 1) % len(second)))
            keep, drop = min(c1, c2), max(c1, c2)
            words[keep] = a[1:] + b[1:]
            faces[keep] = faces[c1] + faces[c2]
            words[drop] = None
        else:
            word = words[c1]
            assert word is not None
            reduced = _cancel_adjacent(word, e)
            if reduced is None:
                stuck.add(e)
                continue
            words[c1] = reduced
        alive.discard(e)
        stuck.clear()

    kept_edges = sorted(alive)
    used_vertices = sorted({v for e in kept_edges for v in (sp.edges[e].tail, sp.edges[e].head)})
    new_vertex = {v: i for i, v in enumerate(used_vertices)}
    new_edge = {e: i for i, e in enumerate(kept_edges)}
    edges = [
        SpineEdge(
            tail=new_vertex[sp.edges[e].tail],
            head=new_vertex[sp.edges[e].head],
            label=sp.edges[e].label,
        )
        for e in kept_edges
    ]
    cells = [
        SpineCell(boundary=tuple((new_edge[e], s) for e, s in word), faces=dict(faces[ci]))
        for ci, word in enumerate(words)
        if word is not None
    ]
    coarse = SpineComplex(vertex_count=len(used_vertices), edges=edges, cells=cells)
    logger.debug("Coarse spine counts (V, E, F) = %s", coarse.counts)
    return coarse


def fundamental_presentation(sp: SpineComplex, seed: int | None = None) -> Presentation:
    """Presentation from a maximal tree of the spine's 1-skeleton.

    The tree is grown breadth-first from vertex 0, trying edges in ascending
    order; with ``seed`` the edge order is shuffled instead.

    Raises:
        DisconnectedSpine: If the tree does not reach every vertex
    """
    order = list(range(len(sp.edges)))
    if seed is not None:
        random.Random(seed).shuffle(order)
    incident: dict[int, list[int]] = {v: [] for v in range(sp.vertex_count)}
    for e in order:
        edge = sp.edges[e]
        incident[edge.tail].append(e)
        if edge.head != edge.tail:
            incident[edge.head].append(e)

    tree: set[int] = set()
    if sp.vertex_count:
        reached = {0}
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for e in incident[v]:
                edge = sp.edges[e]
                other = edge.head if edge.tail == v else edge.tail
                if other not in reached:
                    reached.add(other)
                    tree.add(e)
                    queue.append(other)
        if len(reached) != sp.vertex_count:
            raise DisconnectedSpine(len(reached), sp.vertex_count)

    generator_of: dict[int, int] = {}
    for e in range(len(sp.edges)):
        if e not in tree:
            generator_of[e] = len(generator_of) + 1
    relator_words = [
        tuple(sign * generator_of[e] for e, sign in cell.boundary if e in generator_of)
        for cell in sp.cells
    ]
    return Presentation(
        generator_count=len(generator_of),
        relators=relator_words,
        tree_edges=sorted(tree),
    )


def format_spine(sp: SpineComplex) -> str:
    """Readable dump of a spine."""
    v, e, f = sp.counts
    lines = [f"vertices = {v}", f"edges = {e}", f"two_cells = {f}"]
    for i, edge in enumerate(sp.edges):
        lines.append(f"edge {i} : {edge.tail} -> {edge.head} (a{edge.label})")
    for i, cell in enumerate(sp.cells):
        word = " ".join(f"{'+' if s > 0 else '-'}{e}" for e, s in cell.boundary)
        composition = ", ".join(f"{count}x face {face}-" for face, count in sorted(cell.faces.items()))
        lines.append(f"cell {i} : {word} [{composition}]")
    return "\n".join(lines)


def format_presentation(p: Presentation) -> str:
    """Relators as words in g1, g2, ... with ^-1 for inverses."""
    lines = [f"generators = {p.generator_count}", f"relators = {len(p.relators)}"]
    for i, word in enumerate(p.relators):
        text = " ".join(f"g{abs(x)}" + ("^-1" if x < 0 else "") for x in word) or "1"
        lines.append(f"r{i + 1} = {text}")
    return "\n".join(lines)
