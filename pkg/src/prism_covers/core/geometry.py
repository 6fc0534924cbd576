"""Upper half-space realization of a prism and its rotation group.

The ideal vertex is at infinity. Faces 0, D and 2 are vertical planes
``Re(conj(u) z) = k``; face 1 lies on the unit hemisphere and face 3 on the
hemisphere of radius r centred at s + ti. Face 0 is the plane Re z = 0 when
a3 = 2 and Re z = -1/2 when a3 = 3.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from prism_covers.core.permutation import relators
from prism_covers.core.template import FACE_GENERATOR
from prism_covers.models.common import Generator
from prism_covers.models.geometry import (
    CuspData,
    EmbeddingGeometry,
    MatrixRepReport,
    MatrixResidual,
)
from prism_covers.models.rep import GroupWord
from prism_covers.models.signature import CuspType, PrismSignature
from prism_covers.utils.errors import CuspVolumeUnsupported, NoPositiveRoot, UnsupportedA3
from prism_covers.utils.logging import get_logger

logger = get_logger(__name__)

IDENTITY = np.eye(2, dtype=complex)


def _trig(sig: PrismSignature, edge: int) -> tuple[float, float]:
    theta = sig.angle(edge)
    return math.cos(theta), math.sin(theta)


def linear_coefficients(sig: PrismSignature) -> tuple[float, float, float, float]:
    """``(sA, sB, tA, tB)`` with ``s = sA r + sB`` and ``t = tA r + tB``.

    Face 3 meets face D at angle pi/a7 and face 2 at angle pi/a8.
    """
    c1, s1 = _trig(sig, 1)
    c2, s2 = _trig(sig, 2)
    c4, _ = _trig(sig, 4)
    c6, _ = _trig(sig, 6)
    c7, _ = _trig(sig, 7)
    c8, _ = _trig(sig, 8)
    det = -math.sin(sig.angle(1) + sig.angle(2))
    return (
        (c7 * s2 + c8 * s1) / det,
        (-c4 * s2 - c6 * s1) / det,
        (c2 * c7 - c1 * c8) / det,
        (c1 * c6 - c2 * c4) / det,
    )


def radius_quadratic(sig: PrismSignature) -> tuple[float, float, float]:
    """Coefficients of ``qa r^2 + qb r + qc = 0`` from ``s^2 + t^2 = 1 + r^2 + 2 r cos(pi/a9)``."""
    s_a, s_b, t_a, t_b = linear_coefficients(sig)
    c9, _ = _trig(sig, 9)
    return (
        s_a**2 + t_a**2 - 1,
        2 * s_a * s_b + 2 * t_a * t_b - 2 * c9,
        s_b**2 + t_b**2 - 1,
    )


def solve_radius(sig: PrismSignature, tol: float = 1e-12) -> float:
    """The positive root of the radius equation.

    With two positive roots the one below 1 is taken.

    Raises:
        NoPositiveRoot: If no root, or no single root below 1, is positive
    """
    qa, qb, qc = radius_quadratic(sig)
    if abs(qa) < tol:
        roots = [-qc / qb] if qb else []
    else:
        disc = qb * qb - 4 * qa * qc
        if disc < -tol:
            raise NoPositiveRoot([])
        root = math.sqrt(max(disc, 0.0))
        roots = [(-qb + root) / (2 * qa), (-qb - root) / (2 * qa)]

    positive = [r for r in roots if r > 0]
    if len(positive) == 1:
        return positive[0]
    below_one = [r for r in positive if r < 1]
    if len(positive) == 2 and len(below_one) == 1:
        logger.warning(
            "Radius equation for %s has two positive roots %s; using %s",
            sig.display_name,
            positive,
            below_one[0],
        )
        return below_one[0]
    raise NoPositiveRoot(roots)


def _line_reflection(u: complex, k: float) -> np.ndarray:
    """Reflection in ``Re(conj(u) z) = k`` acting on conj(z)."""
    return np.array([[-(u**2), 2 * k * u], [0, 1]], dtype=complex)


def _sphere_reflection(centre: complex, radius: float) -> np.ndarray:
    """Inversion in the hemisphere ``|z - centre| = radius`` acting on conj(z)."""
    return np.array(
        [[centre, radius**2 - abs(centre) ** 2], [1, -centre.conjugate()]],
        dtype=complex,
    )


def normalize(m: np.ndarray) -> np.ndarray:
    """Scale to determinant one."""
    return np.asarray(m / cmath.sqrt(np.linalg.det(m)), dtype=complex)


def face_reflections(sig: PrismSignature, s: float, t: float, r: float) -> dict[str, np.ndarray]:
    """Reflection matrices of the five faces, keyed like the template faces."""
    c3, _ = _trig(sig, 3)
    c4, _ = _trig(sig, 4)
    c6, _ = _trig(sig, 6)
    return {
        "0": _line_reflection(-1, c3),
        "D": _line_reflection(cmath.exp(1j * sig.angle(1)), c4),
        "2": _line_reflection(cmath.exp(-1j * sig.angle(2)), c6),
        "1": np.array([[0, 1], [1, 0]], dtype=complex),
        "3": _sphere_reflection(complex(s, t), r),
    }


def rotation_generators(faces: dict[str, np.ndarray]) -> dict[Generator, np.ndarray]:
    """Rotations ``D . conj(F)`` about the axis edges, determinant one."""
    return {
        g: normalize(faces["D"] @ np.conj(faces[str(face)])) for face, g in FACE_GENERATOR.items()
    }


def published_matrices(
    sig: PrismSignature,
    s: float,
    t: float,
    r: float,
    vertices: tuple[complex, complex],
) -> dict[str, np.ndarray]:
    """M1..M4 in the reported closed form.

    ``vertices`` are (y1, y2) when a3 = 2 and (z1, z2) when a3 = 3. M3 uses
    ``+y2`` in its corner entry, so for a3 = 2 it fixes the vertex y2 i.
    """
    e1 = cmath.exp(1j * sig.angle(1))
    e2 = cmath.exp(1j * sig.angle(2))
    p1, p2 = vertices
    if sig.label(3) == 2:
        m1 = np.array([[0, -1], [1, 0]], dtype=complex)
        m4 = np.array(
            [[complex(-s, t) / r, (s * s + t * t) / r - r], [1 / r, complex(-s, -t) / r]],
            dtype=complex,
        )
    else:
        m1 = np.array([[-1, -1], [1, 0]], dtype=complex)
        a = complex(-s - 1, t)
        m4 = np.array(
            [[a / r, a * complex(-s, -t) / r - r], [1 / r, complex(-s, -t) / r]],
            dtype=complex,
        )
    m2 = np.array([[1 / e1, -p1 * 1j * (1 / e1 - e1)], [0, e1]], dtype=complex)
    # Corner entry +y2: with it the "M3 fixes v2" residual of published_matrix_checks
    # vanishes for every a3 = 2 row; the opposite sign fixes -y2 i instead.
    m3 = np.array([[e2, p2 * 1j * (1 / e2 - e2)], [0, 1 / e2]], dtype=complex)
    return {"M1": m1, "M2": m2, "M3": m3, "M4": m4}


def embed(sig: PrismSignature, tol: float = 1e-12) -> EmbeddingGeometry:
    """Vertex coordinates, face-3 hemisphere and generator matrices.

    Raises:
        UnsupportedA3: If a3 is not 2 or 3
        NoPositiveRoot: If the radius equation has no usable root
    """
    a3 = sig.label(3)
    if a3 not in (2, 3):
        raise UnsupportedA3(a3)

    c4, s1 = _trig(sig, 4)[0], _trig(sig, 1)[1]
    c6, s2 = _trig(sig, 6)[0], _trig(sig, 2)[1]
    r = solve_radius(sig, tol)
    s_a, s_b, t_a, t_b = linear_coefficients(sig)
    s = s_a * r + s_b
    t = t_a * r + t_b

    y1 = y2 = None
    z1 = z2 = None
    if a3 == 2:
        y1 = c4 / s1
        y2 = -c6 / s2
        vertices = (complex(y1), complex(y2))
    else:
        cot1 = 1 / math.tan(sig.angle(1))
        cot2 = 1 / math.tan(sig.angle(2))
        z1 = complex(-0.5, c4 / s1 + cot1 / 2)
        z2 = complex(-0.5, -(c6 / s2 + cot2 / 2))
        vertices = (z1, z2)

    faces = face_reflections(sig, s, t, r)
    geom = EmbeddingGeometry(
        case=a3,
        y1=y1,
        y2=y2,
        z1=z1,
        z2=z2,
        s=s,
        t=t,
        r=r,
        linear=(s_a, s_b, t_a, t_b),
        quadratic=radius_quadratic(sig),
        matrices=published_matrices(sig, s, t, r, vertices),
        rho=rotation_generators(faces),
    )
    logger.debug("Embedding of %s: s=%.15g t=%.15g r=%.15g", sig.display_name, s, t, r)
    return geom


def word_matrix(rho: dict[Generator, np.ndarray], word: GroupWord) -> np.ndarray:
    """Product of generator images in word order; the empty word gives the identity."""
    result = IDENTITY.copy()
    for g, exponent in word.letters:
        result = result @ np.linalg.matrix_power(rho[g], exponent)
    return result


def projective_residual(m: np.ndarray) -> float:
    """Frobenius distance from the nearer of +I and -I."""
    return float(min(np.linalg.norm(m - IDENTITY), np.linalg.norm(m + IDENTITY)))


def verify_matrix_rep(geom: EmbeddingGeometry, sig: PrismSignature, tol: float = 1e-9) -> MatrixRepReport:
    """Residual of every relator in the matrix representation."""
    residuals = [
        MatrixResidual(
            relator=relator.name,
            residual=projective_residual(
                np.linalg.matrix_power(word_matrix(geom.rho, relator.base), relator.exponent)
            ),
        )
        for relator in relators(sig)
    ]
    max_residual = max(r.residual for r in residuals)
    logger.debug("Matrix relator residual for %s: %.3g", sig.display_name, max_residual)
    return MatrixRepReport(residuals=residuals, max_residual=max_residual, tolerance=tol)


def published_matrix_checks(geom: EmbeddingGeometry, sig: PrismSignature) -> list[MatrixResidual]:
    """Residuals of the closed-form matrices against their geometric meaning.

    M1, M2 and M3 are rotations of order a3, a1 and a2; M4 has determinant
    one and sends the face-3 centre to infinity. When a3 = 2, M2 and M3 also
    fix the vertices y1 i and y2 i.
    """
    m = geom.matrices

    def fixed(mat: np.ndarray, p: complex) -> float:
        return float(abs(mat[0, 0] * p + mat[0, 1] - p * (mat[1, 0] * p + mat[1, 1])))

    def power_residual(name: str, edge: int) -> MatrixResidual:
        power = np.linalg.matrix_power(normalize(m[name]), sig.label(edge))
        return MatrixResidual(relator=f"{name}^{sig.label(edge)}", residual=projective_residual(power))

    centre = complex(geom.s, geom.t)
    checks = [
        power_residual("M1", 3),
        power_residual("M2", 1),
        power_residual("M3", 2),
        MatrixResidual(relator="det M4", residual=float(abs(np.linalg.det(m["M4"]) - 1))),
        MatrixResidual(
            relator="M4 sends the face-3 centre to infinity",
            residual=float(abs(m["M4"][1, 0] * centre + m["M4"][1, 1])),
        ),
    ]
    if geom.y1 is not None and geom.y2 is not None:
        checks.append(MatrixResidual(relator="M2 fixes v1", residual=fixed(m["M2"], complex(0, geom.y1))))
        checks.append(MatrixResidual(relator="M3 fixes v2", residual=fixed(m["M3"], complex(0, geom.y2))))
    return checks


def cusp_volume(sig: PrismSignature, geom: EmbeddingGeometry) -> float:
    """Volume of the maximal cusp of a (3,3,3)-cusped prism with a3 = 2 and r <= 1.

    Raises:
        CuspVolumeUnsupported: Outside that family
    """
    if sig.cusp_type != CuspType.T333:
        raise CuspVolumeUnsupported(sig.display_name, "cusp is not (3,3,3)")
    if geom.case != 2 or geom.y1 is None or geom.y2 is None:
        raise CuspVolumeUnsupported(sig.display_name, "a3 is not 2")
    if geom.r > 1:
        raise CuspVolumeUnsupported(sig.display_name, f"r = {geom.r} exceeds 1")
    # Half the equilateral cross-section at height one.
    return (geom.y1 - geom.y2) ** 2 * math.sqrt(3) / 8


def maximal_cusp(sig: PrismSignature, geom: EmbeddingGeometry) -> CuspData:
    """Height ``max(1, r)`` of the maximal horoball, with its volume where derived."""
    try:
        volume: float | None = cusp_volume(sig, geom)
    except CuspVolumeUnsupported as e:
        logger.debug("%s", e.message)
        volume = None
    return CuspData(height=max(1.0, geom.r), cusp_volume=volume)
