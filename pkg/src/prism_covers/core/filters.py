"""Obstructions to being covered by a knot complement, and the cover filter.

The pre-filter works on the signature alone: the cusp-killing quotient and,
for (2,3,6) cusps, the existence of a (3,3,3)-cusped double cover. The cover
filter certifies individual reps: manifold, one cusp, first homology Z.
"""

from __future__ import annotations

import math
import random
from itertools import combinations

import networkx as nx

from prism_covers.core.catalog import builtin_tables, instantiate, published_for, vertex_data
from prism_covers.core.complex import (
    build_complex,
    build_spine,
    coarsen_spine,
    fundamental_presentation,
)
from prism_covers.core.homology import first_homology
from prism_covers.core.permutation import cusp_orbits, is_manifold
from prism_covers.core.template import CUSP_EDGES, EDGE_ENDS, VERTEX_NAMES
from prism_covers.models.filters import (
    CuspKillResult,
    DoubleCoverResult,
    DoubleCoverStatus,
    FilterStages,
    IsotropyEdge,
    PrefilterReport,
    Verdict,
)
from prism_covers.models.rep import PermRep
from prism_covers.models.signature import CuspType, PrismSignature, PublishedObstructions
from prism_covers.utils.errors import NotA236Cusp
from prism_covers.utils.logging import get_logger
from prism_covers.utils.parallel import ordered_map

logger = get_logger(__name__)


def isotropy_graph(sig: PrismSignature) -> nx.MultiGraph:
    """The prism's 1-skeleton labelled by a1..a9.

    Nodes are template vertex indices; each edge carries ``label`` and
    ``origin`` (the prism edges it stands for).
    """
    graph = nx.MultiGraph()
    graph.add_nodes_from(range(len(VERTEX_NAMES)))
    for edge, (u, v) in EDGE_ENDS.items():
        graph.add_edge(u, v, key=edge, label=sig.label(edge), origin=f"a{edge}")
    return graph


def _pick(candidates: list[int], rng: random.Random | None) -> int:
    return rng.choice(candidates) if rng is not None else min(candidates)


def _rewrite_once(graph: nx.MultiGraph, rng: random.Random | None) -> bool:
    """Apply the first rule that matches; False at a fixed point."""
    trivial = [(u, v, k) for u, v, k, label in graph.edges(keys=True, data="label") if label == 1]
    if trivial:
        graph.remove_edges_from(trivial)
        return True

    isolated = [v for v in graph.nodes if graph.degree(v) == 0]
    if isolated:
        graph.remove_nodes_from(isolated)
        return True

    # A loop counts twice, so a vertex with only a loop is not a merge point.
    mergeable = [
        v
        for v in graph.nodes
        if graph.degree(v) == 2 and graph.number_of_edges(v, v) == 0
    ]
    if mergeable:
        v = _pick(mergeable, rng)
        (_, a, k1, d1), (_, b, k2, d2) = list(graph.edges(v, keys=True, data=True))
        graph.remove_node(v)
        graph.add_edge(
            a,
            b,
            key=f"{k1}+{k2}",
            label=math.gcd(d1["label"], d2["label"]),
            origin=f"{d1['origin']}+{d2['origin']}",
        )
        return True

    leaves = [v for v in graph.nodes if graph.degree(v) == 1]
    if leaves:
        v = _pick(leaves, rng)
        graph.remove_edges_from(list(graph.edges(v, keys=True)))
        return True
    return False


def cusp_killing(sig: PrismSignature, seed: int | None = None) -> CuspKillResult:
    """Reduce the isotropy graph after killing the peripheral torsion.

    Cusp edges are removed, then edges labelled 1 and isolated vertices are
    deleted, degree-two vertices are smoothed with the gcd of their labels
    and leaves lose their edge, until nothing applies. The quotient is
    trivial iff no edge survives. ``seed`` randomizes which vertex a rule
    is applied to.
    """
    graph = isotropy_graph(sig)
    graph.remove_edges_from([(u, v, e) for e in CUSP_EDGES for (u, v) in [EDGE_ENDS[e]]])
    rng = random.Random(seed) if seed is not None else None

    steps = 0
    while _rewrite_once(graph, rng):
        steps += 1

    residual = [
        IsotropyEdge(u=VERTEX_NAMES[u], v=VERTEX_NAMES[v], label=data["label"], origin=data["origin"])
        for u, v, data in graph.edges(data=True)
    ]
    result = CuspKillResult(trivial=not residual, residual=residual, steps=steps)
    logger.debug("Cusp killing for %s: %s after %d steps", sig.display_name, result.verdict, steps)
    return result


def _is_single_cycle(edges: tuple[int, ...]) -> bool:
    graph = nx.MultiGraph()
    graph.add_edges_from(EDGE_ENDS[e] for e in edges)
    return all(d == 2 for _, d in graph.degree()) and nx.is_connected(graph)


def double_cover_exists(sig: PrismSignature) -> DoubleCoverResult:
    """Search sign assignments for a double cover with a (3,3,3) cusp.

    The negative edges must include the cusp edges labelled 2 and 6 but not
    the one labelled 3, carry even labels, and form one cycle.

    Raises:
        NotA236Cusp: If the cusp is not (2,3,6)
    """
    if sig.cusp_type != CuspType.T236:
        raise NotA236Cusp(sig.display_name)

    required = {e for e in CUSP_EDGES if sig.label(e) != 3}
    forbidden = {e for e in CUSP_EDGES if sig.label(e) == 3}
    even = [e for e in EDGE_ENDS if sig.label(e) % 2 == 0]

    witnesses: list[tuple[int, ...]] = []
    for size in range(len(even) + 1):
        for negative in combinations(even, size):
            chosen = set(negative)
            if not required <= chosen or chosen & forbidden:
                continue
            if _is_single_cycle(negative):
                witnesses.append(tuple(sorted(negative)))

    witnesses.sort()
    logger.debug("Double-cover witnesses for %s: %s", sig.display_name, witnesses)
    return DoubleCoverResult(
        exists=bool(witnesses),
        witness=witnesses[0] if witnesses else (),
        witness_count=len(witnesses),
    )


def prefilter(sig: PrismSignature, published: PublishedObstructions | None = None) -> PrefilterReport:
    """Combine the implemented obstructions with the MCD bound."""
    ck = cusp_killing(sig)
    if sig.cusp_type == CuspType.T236:
        dc = DoubleCoverStatus.EXISTS if double_cover_exists(sig).exists else DoubleCoverStatus.ABSENT
    else:
        dc = DoubleCoverStatus.NOT_APPLICABLE

    reasons: list[str] = []
    if not ck.trivial:
        reasons.append("cusp-killing quotient is nontrivial")
    if dc == DoubleCoverStatus.ABSENT:
        reasons.append("no (3,3,3)-cusped double cover")

    mcd = vertex_data(sig).mcd
    if published is not None and published.mcd is not None and published.mcd != mcd:
        logger.warning("%s: published MCD %d differs from computed %d", sig.display_name, published.mcd, mcd)
    return PrefilterReport(
        name=sig.display_name,
        cusp_kill=ck.verdict,
        double_cover=dc,
        mcd=mcd,
        verdict=Verdict.ELIMINATED if reasons else Verdict.SURVIVING,
        reasons=reasons,
        published=published,
    )


def prefilter_table(n: int | None = None) -> list[PrefilterReport]:
    """Pre-filter every finite catalog row, and the family rows at ``n`` if given.

    Family rows whose minimum parameter exceeds ``n`` are skipped.
    """
    reports: list[PrefilterReport] = []
    for entry in builtin_tables():
        if entry.family is not None and (n is None or n < entry.family.min_n):
            if n is not None:
                logger.debug("Skipping %s: n=%d is below %d", entry.name, n, entry.family.min_n)
            continue
        sig = instantiate(entry, n if entry.is_family else None)
        reports.append(prefilter(sig, published_for(entry, n)))
    return reports


def certify_stage(item: tuple[PrismSignature, PermRep]) -> int:
    """Number of cover-filter stages ``rep`` passes (0 to 3)."""
    sig, rep = item
    if not is_manifold(sig, rep).manifold:
        return 0
    if len(cusp_orbits(rep)) != 1:
        return 1
    spine = coarsen_spine(build_spine(build_complex(sig, rep)))
    if not first_homology(fundamental_presentation(spine)).is_z():
        return 2
    return 3


def filter_covers(sig: PrismSignature, reps: list[PermRep], workers: int = 1) -> FilterStages:
    """Keep manifold covers with one cusp and first homology Z, counting each stage."""
    stages = list(ordered_map(certify_stage, ((sig, rep) for rep in reps), workers=workers))
    survivors = [rep for rep, stage in zip(reps, stages, strict=True) if stage == 3]
    result = FilterStages(
        total=len(reps),
        manifold=sum(1 for s in stages if s >= 1),
        one_cusp=sum(1 for s in stages if s >= 2),
        homology_z=len(survivors),
        survivors=survivors,
    )
    logger.info("Cover filter for %s: %d -> %s", sig.display_name, result.total, result.counts)
    return result
