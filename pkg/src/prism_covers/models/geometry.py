"""Hyperbolic embedding, cusp and volume models."""

from __future__ import annotations

import numpy as np
from pydantic import BaseModel, Field

from prism_covers.models.common import Generator


class EmbeddingGeometry(BaseModel):
    """Upper half-space realization of a prism.

    The ideal vertex sits at infinity. Faces 0, D and 2 are vertical planes,
    face 1 lies on the unit hemisphere and face 3 on the hemisphere with
    centre ``s + t*i`` and radius ``r``.
    """

    model_config = {"frozen": True, "arbitrary_types_allowed": True}

    case: int = Field(description="a3, either 2 or 3")
    y1: float | None = Field(default=None, description="Height of vertex v1 on the imaginary axis (a3=2)")
    y2: float | None = Field(default=None, description="Height of vertex v2 on the imaginary axis (a3=2)")
    z1: complex | None = Field(default=None, description="Vertex v1 (a3=3)")
    z2: complex | None = Field(default=None, description="Vertex v2 (a3=3)")
    s: float
    t: float
    r: float
    linear: tuple[float, float, float, float] = Field(description="sA, sB, tA, tB")
    quadratic: tuple[float, float, float] = Field(description="Coefficients of the radius equation")
    matrices: dict[str, np.ndarray] = Field(description="Published parabolic/elliptic matrices M1..M4")
    rho: dict[Generator, np.ndarray] = Field(description="Normalized images of x, y, z, w")

    def constraint_residuals(self, a9: int) -> tuple[float, float, float]:
        """Residuals of s = sA r + sB, t = tA r + tB and the hemisphere equation."""
        s_a, s_b, t_a, t_b = self.linear
        quad = self.s**2 + self.t**2 - (1 + self.r**2 + 2 * self.r * np.cos(np.pi / a9))
        return (self.s - (s_a * self.r + s_b), self.t - (t_a * self.r + t_b), float(quad))


class MatrixResidual(BaseModel):
    """Distance of a relator's matrix image from +/- identity."""

    model_config = {"frozen": True}

    relator: str
    residual: float


class MatrixRepReport(BaseModel):
    """Residuals of all relators in the matrix representation."""

    model_config = {"frozen": True}

    residuals: list[MatrixResidual] = Field(default_factory=list)
    max_residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_residual < self.tolerance


class CuspData(BaseModel):
    """Maximal horoball cusp neighbourhood."""

    model_config = {"frozen": True}

    height: float = Field(description="Height of the maximal horoball, max(1, r)")
    cusp_volume: float | None = Field(default=None, description="Volume of the maximal cusp")


class VolumeResult(BaseModel):
    """Prism volume as a sum of four region integrals."""

    model_config = {"frozen": True}

    regions: tuple[float, float, float, float]
    total: float
    error: float = Field(description="Sum of the quadrature error estimates")
    x_lower: float = Field(description="Where the radical line meets the lower boundary line")
    x_upper: float = Field(description="Where the radical line meets the upper boundary line")
    apex: float = Field(description="Where the two boundary lines meet")

    @property
    def orbifold_volume(self) -> float:
        """Volume of the doubled (orientable) orbifold."""
        return 2 * self.total


class SurfaceSideVolumes(BaseModel):
    """Volumes of the two sides of the geodesic surface in a cover."""

    model_config = {"frozen": True}

    cusped_side: float = Field(description="Side containing the cusp")
    compact_side: float
    total: float
