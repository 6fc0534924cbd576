"""Prism volumes as four one-dimensional integrals.

Over the triangle cut out by Re z = 0 and the lines of faces D and 2, the
prism sits above whichever hemisphere is higher. The radical line of the two
hemispheres splits the triangle, and integrating ``dz / z^3`` over height
and then ``y`` in closed form leaves one variable per region.
"""

from __future__ import annotations

import math
import warnings
from collections.abc import Callable

from scipy import integrate

from prism_covers.core.catalog import split_along_triangle
from prism_covers.core.geometry import embed
from prism_covers.models.geometry import EmbeddingGeometry, SurfaceSideVolumes, VolumeResult
from prism_covers.models.signature import PrismSignature
from prism_covers.utils.errors import QuadratureNonconvergent, UnsupportedSignature
from prism_covers.utils.logging import get_logger

logger = get_logger(__name__)

ENDPOINT_INSET = 1e-13
QUAD_LIMIT = 200


def _strip(rho: float, upper: float, lower: float) -> float:
    """Integral of ``1 / (2 (rho^2 - y^2))`` for y from ``lower`` to ``upper``."""
    return math.log((rho + upper) * (rho - lower) / ((rho - upper) * (rho + lower))) / (4 * rho)


def _quad(region: int, func: Callable[[float], float], a: float, b: float, tol: float) -> tuple[float, float]:
    if b - a <= 2 * ENDPOINT_INSET:
        return 0.0, 0.0
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", integrate.IntegrationWarning)
        value, error = integrate.quad(
            func,
            a + ENDPOINT_INSET,
            b - ENDPOINT_INSET,
            epsabs=tol,
            epsrel=0.0,
            limit=QUAD_LIMIT,
        )
    issues = [w for w in caught if issubclass(w.category, integrate.IntegrationWarning)]
    if issues:
        message = str(issues[0].message).strip().splitlines()[0]
        # Roundoff warnings with an estimate inside tolerance are harmless.
        if error > tol:
            raise QuadratureNonconvergent(region, message)
        logger.debug("Region %d: %s (error %.2g)", region, message, error)
    return float(value), float(error)


def prism_volume(sig: PrismSignature, geom: EmbeddingGeometry, tol: float = 1e-11) -> VolumeResult:
    """Hyperbolic volume of the prism.

    Supported when a3 = 2, a1 = a2 = a5 = 3, the face-3 centre lies below
    the real axis and the radical line crosses both boundary lines inside
    the triangle.

    Raises:
        UnsupportedSignature: Outside that family
        QuadratureNonconvergent: If a region integral misses ``tol``
    """
    name = sig.display_name
    if geom.case != 2 or (sig.label(1), sig.label(2), sig.label(5)) != (3, 3, 3):
        raise UnsupportedSignature(name, "volume needs a3 = 2 and a (3,3,3) cusp")
    big_x, big_y, big_r = geom.s, geom.t, geom.r
    if big_y >= 0:
        raise UnsupportedSignature(name, "face-3 centre is not below the real axis")

    c1, s1 = math.cos(sig.angle(1)), math.sin(sig.angle(1))
    c2, s2 = math.cos(sig.angle(2)), math.sin(sig.angle(2))
    c4 = math.cos(sig.angle(4))
    c6 = math.cos(sig.angle(6))

    def y_upper(x: float) -> float:
        return (c4 - x * c1) / s1

    def y_lower(x: float) -> float:
        return (x * c2 - c6) / s2

    c0 = (1 - big_r**2 + big_x**2 + big_y**2) / 2

    def radical(x: float) -> float:
        return (c0 - big_x * x) / big_y

    apex = (c4 / s1 + c6 / s2) / (c1 / s1 + c2 / s2)
    x_lower = (c0 * s2 + big_y * c6) / (big_x * s2 + big_y * c2)
    x_upper = (big_y * c4 - c0 * s1) / (big_y * c1 - big_x * s1)
    if not 0 < x_lower <= x_upper < apex:
        raise UnsupportedSignature(
            name, f"radical line crossings {x_lower:.6g}, {x_upper:.6g} are not inside (0, {apex:.6g})"
        )

    def unit(x: float) -> float:
        return math.sqrt(1 - x * x)

    def shifted(x: float) -> float:
        return math.sqrt(big_r**2 - (x - big_x) ** 2)

    integrands: list[tuple[Callable[[float], float], float, float]] = [
        (lambda x: _strip(unit(x), y_upper(x), y_lower(x)), 0.0, x_lower),
        (lambda x: _strip(unit(x), y_upper(x), radical(x)), x_lower, x_upper),
        (lambda x: _strip(shifted(x), radical(x) - big_y, y_lower(x) - big_y), x_lower, x_upper),
        (lambda x: _strip(shifted(x), y_upper(x) - big_y, y_lower(x) - big_y), x_upper, apex),
    ]
    values: list[float] = []
    error = 0.0
    for region, (func, a, b) in enumerate(integrands, start=1):
        value, err = _quad(region, func, a, b, tol)
        values.append(value)
        error += err

    total = sum(values)
    logger.debug("Volume of %s: %.15g (error %.2g)", name, total, error)
    return VolumeResult(
        regions=(values[0], values[1], values[2], values[3]),
        total=total,
        error=error,
        x_lower=x_lower,
        x_upper=x_upper,
        apex=apex,
    )


def cover_volume(sig: PrismSignature, degree: int, tol: float = 1e-11) -> float:
    """Volume of a degree-``degree`` manifold cover of the doubled prism."""
    return 2 * degree * prism_volume(sig, embed(sig), tol).total


def surface_side_volumes(sig: PrismSignature, degree: int, tol: float = 1e-11) -> SurfaceSideVolumes:
    """Volumes of the two sides of the geodesic surface in a degree-``degree`` cover.

    The cusped side is made of the pieces of the prism below the triangle
    cross-section, which form the prism with a7 = a8 = a9 = 2.
    """
    _, cusped = split_along_triangle(sig)
    whole = prism_volume(sig, embed(sig), tol).total
    lower = prism_volume(cusped, embed(cusped), tol).total
    scale = 2 * degree
    return SurfaceSideVolumes(
        cusped_side=scale * lower,
        compact_side=scale * (whole - lower),
        total=scale * whole,
    )
