"""Data models for prism-covers.

All models are Pydantic BaseModel with frozen=True for immutability.
"""

from prism_covers.models.common import GENERATORS, CoverError, Generator, Orientation
from prism_covers.models.complex import (
    AbelianGroup,
    CoverComplex,
    Presentation,
    SpineCell,
    SpineComplex,
    SpineEdge,
    SurfaceReport,
)
from prism_covers.models.enumeration import EnumerationSummary, EnumerationTask
from prism_covers.models.filters import (
    CuspKillResult,
    DoubleCoverResult,
    DoubleCoverStatus,
    FilterStages,
    IsotropyEdge,
    PrefilterReport,
    Verdict,
)
from prism_covers.models.geometry import (
    CuspData,
    EmbeddingGeometry,
    MatrixRepReport,
    MatrixResidual,
    SurfaceSideVolumes,
    VolumeResult,
)
from prism_covers.models.rep import (
    CycleReport,
    GroupWord,
    ManifoldReport,
    Permutation,
    PermRep,
    Relator,
    RelatorFailure,
    RepValidation,
)
from prism_covers.models.signature import (
    CatalogEntry,
    CuspType,
    FamilyRule,
    PrismSignature,
    PrismTemplate,
    PublishedObstructions,
    VertexGroupData,
    VertexReport,
)
from prism_covers.models.triangulation import TetGluing, TriangulationData, TriangulationReport

__all__ = [
    "GENERATORS",
    "AbelianGroup",
    "CatalogEntry",
    "CoverComplex",
    "CoverError",
    "CuspData",
    "CuspKillResult",
    "CuspType",
    "CycleReport",
    "DoubleCoverResult",
    "DoubleCoverStatus",
    "EmbeddingGeometry",
    "EnumerationSummary",
    "EnumerationTask",
    "FamilyRule",
    "FilterStages",
    "Generator",
    "GroupWord",
    "IsotropyEdge",
    "ManifoldReport",
    "MatrixRepReport",
    "MatrixResidual",
    "Orientation",
    "Permutation",
    "PermRep",
    "PrefilterReport",
    "Presentation",
    "PrismSignature",
    "PrismTemplate",
    "PublishedObstructions",
    "Relator",
    "RelatorFailure",
    "RepValidation",
    "SpineCell",
    "SpineComplex",
    "SpineEdge",
    "SurfaceReport",
    "SurfaceSideVolumes",
    "TetGluing",
    "TriangulationData",
    "TriangulationReport",
    "Verdict",
    "VertexGroupData",
    "VertexReport",
    "VolumeResult",
]
