"""Closed totally geodesic surface of a manifold cover.

Each cell contributes the hexagon made of the embedded right-angled
triangle and its mirror image. The triangle has one edge in each of faces 1
and 2 of the prism, so pieces are joined along the y and z pairings.
"""

from __future__ import annotations

from fractions import Fraction

from prism_covers.core.permutation import is_manifold, orbits
from prism_covers.models.complex import SurfaceReport
from prism_covers.models.rep import PermRep
from prism_covers.models.signature import PrismSignature
from prism_covers.utils.errors import NoGeodesicSurface, NotAManifold
from prism_covers.utils.logging import get_logger

logger = get_logger(__name__)


def triangle_defect(sig: PrismSignature) -> Fraction:
    """``1 - 1/a4 - 1/a5 - 1/a6``: the triangle's area divided by pi.

    Raises:
        NoGeodesicSurface: If the triangle is not hyperbolic
    """
    labels = (sig.label(4), sig.label(5), sig.label(6))
    defect = 1 - sum((Fraction(1, a) for a in labels), Fraction(0))
    if defect <= 0:
        raise NoGeodesicSurface(labels)
    return defect


def separation_guaranteed(sig: PrismSignature) -> bool | None:
    """True when the surface must separate the cover; None when (a7, a8, a9) = (2, 2, 2)."""
    return None if (sig.label(7), sig.label(8), sig.label(9)) == (2, 2, 2) else True


def geodesic_surface(sig: PrismSignature, rep: PermRep) -> SurfaceReport:
    """Components, genus, area and separation of the surface in the cover.

    Raises:
        NotAManifold: If ``rep`` gives an orbifold cover
        NoGeodesicSurface: If the prism has no compact triangle cross-section
    """
    report = is_manifold(sig, rep)
    if not report.manifold:
        raise NotAManifold([c.relator for c in report.cycles if not c.ok])

    defect = triangle_defect(sig)
    n = rep.degree
    components = orbits((rep.y, rep.z), n)
    sizes = [len(c) for c in components]

    # Each hexagon has area 2 * pi * defect; Gauss-Bonnet gives chi = -area / (2 pi).
    chi = -n * defect
    genus: list[int] = []
    for size in sizes:
        g = 1 - (-size * defect) / 2
        if g.denominator != 1:
            raise NotAManifold([f"surface component of {size} cells has Euler characteristic {-size * defect}"])
        genus.append(int(g))

    separating = separation_guaranteed(sig)
    logger.debug("Surface: %d component(s), chi %s, genus %s", len(components), chi, genus)
    return SurfaceReport(
        components=len(components),
        component_sizes=sizes,
        euler_characteristic=int(chi),
        genus=genus,
        area_over_pi=2 * n * defect,
        piece_area_over_pi=2 * defect,
        orientable=True,
        separating=separating,
    )
