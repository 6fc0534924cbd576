"""Error handling utilities for prism-covers."""

from __future__ import annotations

from typing import Any

from prism_covers.models.common import CoverError


class PrismCoversError(Exception):
    """Base exception for prism-covers."""

    def __init__(self, message: str, code: str = "UNKNOWN_ERROR", details: dict[str, Any] | None = None):
        super().__init__(message)
        self.message = message
        self.code = code
        self.details = details or {}

    def to_cover_error(self) -> CoverError:
        """Convert to CoverError model."""
        return CoverError(code=self.code, message=self.message, details=self.details)


# Signatures and catalog


class CuspTypeInvalid(PrismCoversError):
    """The ideal vertex labels are not a rigid Euclidean triple."""

    def __init__(self, labels: tuple[int, int, int]):
        super().__init__(
            f"Cusp labels {sorted(labels)} are not one of (2,3,6), (3,3,3), (2,4,4)",
            code="CUSP_TYPE_INVALID",
            details={"labels": list(labels)},
        )


class VertexNotSpherical(PrismCoversError):
    """A finite vertex fails the angle-sum test."""

    def __init__(self, vertex: str, labels: tuple[int, int, int]):
        super().__init__(
            f"Vertex {vertex} with labels {labels} is not spherical",
            code="VERTEX_NOT_SPHERICAL",
            details={"vertex": vertex, "labels": list(labels)},
        )


class FamilyParameterOutOfRange(PrismCoversError):
    """A family row was instantiated with an invalid parameter."""

    def __init__(self, family: str, n: int, reason: str):
        super().__init__(
            f"{family}: n={n} is out of range ({reason})",
            code="FAMILY_PARAMETER_OUT_OF_RANGE",
            details={"family": family, "n": n},
        )


class UnknownSignature(PrismCoversError):
    """A catalog name does not exist."""

    def __init__(self, name: str):
        super().__init__(f"Unknown signature: {name}", code="UNKNOWN_SIGNATURE", details={"name": name})


class TemplateInconsistent(PrismCoversError):
    """The hard-coded prism template failed its self-check."""

    def __init__(self, message: str):
        super().__init__(message, code="TEMPLATE_INCONSISTENT")


# Representations


class RelatorViolation(PrismCoversError):
    """A relator does not evaluate to the identity."""

    def __init__(self, relator: str, point: int):
        super().__init__(
            f"Relator {relator} moves point {point}",
            code="RELATOR_VIOLATION",
            details={"relator": relator, "point": point},
        )


class NotTransitive(PrismCoversError):
    """The generated permutation group is not transitive."""

    def __init__(self, orbit_count: int):
        super().__init__(
            f"Action is not transitive ({orbit_count} orbits)",
            code="NOT_TRANSITIVE",
            details={"orbits": orbit_count},
        )


class DegreeNotDivisible(PrismCoversError):
    """The degree is not divisible by a relator exponent."""

    def __init__(self, relator: str, degree: int, exponent: int):
        super().__init__(
            f"Degree {degree} is not divisible by {exponent} for relator {relator}",
            code="DEGREE_NOT_DIVISIBLE",
            details={"relator": relator, "degree": degree, "exponent": exponent},
        )


class SignatureMismatch(PrismCoversError):
    """Two covers are over different orbifolds."""

    def __init__(self, first: str, second: str):
        super().__init__(
            f"Signatures differ: {first} vs {second}",
            code="SIGNATURE_MISMATCH",
            details={"first": first, "second": second},
        )


class DegreeMismatch(PrismCoversError):
    """Two reps have different degrees."""

    def __init__(self, first: int, second: int):
        super().__init__(
            f"Degrees differ: {first} vs {second}",
            code="DEGREE_MISMATCH",
            details={"first": first, "second": second},
        )


class InvalidRep(PrismCoversError):
    """A rep cannot be used to build a cover."""

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        super().__init__(message, code="INVALID_REP", details=details)


class RepFormatError(PrismCoversError):
    """A rep file could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        details = {"line": line} if line is not None else {}
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"{message}{where}", code="REP_FORMAT_ERROR", details=details)


# Complexes


class DisconnectedSpine(PrismCoversError):
    """The spine one-skeleton is not connected."""

    def __init__(self, reached: int, total: int):
        super().__init__(
            f"Spine is disconnected: tree reached {reached} of {total} vertices",
            code="DISCONNECTED_SPINE",
            details={"reached": reached, "total": total},
        )


class NotAManifold(PrismCoversError):
    """The cover is an orbifold, not a manifold."""

    def __init__(self, failed: list[str]):
        super().__init__(
            f"Cover is not a manifold (relators failing: {', '.join(failed)})",
            code="NOT_A_MANIFOLD",
            details={"failed": failed},
        )


class NoGeodesicSurface(PrismCoversError):
    """The prism has no compact right-angled triangle cross-section."""

    def __init__(self, labels: tuple[int, int, int]):
        super().__init__(
            f"Triangle with angles pi/{labels[0]}, pi/{labels[1]}, pi/{labels[2]} is not hyperbolic",
            code="NO_GEODESIC_SURFACE",
            details={"labels": list(labels)},
        )


class GluingFormatError(PrismCoversError):
    """A gluing table could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        details = {"line": line} if line is not None else {}
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"{message}{where}", code="GLUING_FORMAT_ERROR", details=details)


# Geometry


class UnsupportedA3(PrismCoversError):
    """The embedding is only derived for a3 in {2, 3}."""

    def __init__(self, a3: int):
        super().__init__(f"Embedding requires a3 in {{2, 3}}, got {a3}", code="UNSUPPORTED_A3", details={"a3": a3})


class NoPositiveRoot(PrismCoversError):
    """The hemisphere radius equation has no usable root."""

    def __init__(self, roots: list[float]):
        super().__init__(
            f"No positive radius among roots {roots}",
            code="NO_POSITIVE_ROOT",
            details={"roots": roots},
        )


class CuspVolumeUnsupported(PrismCoversError):
    """The maximal cusp volume is not derived for this signature."""

    def __init__(self, name: str, reason: str):
        super().__init__(
            f"Cusp volume unsupported for {name}: {reason}",
            code="CUSP_VOLUME_UNSUPPORTED",
            details={"signature": name},
        )


class UnsupportedSignature(PrismCoversError):
    """The volume integrals are not derived for this signature."""

    def __init__(self, name: str, reason: str):
        super().__init__(
            f"Volume unsupported for {name}: {reason}",
            code="UNSUPPORTED_SIGNATURE",
            details={"signature": name},
        )


class QuadratureNonconvergent(PrismCoversError):
    """Adaptive quadrature did not reach the requested tolerance."""

    def __init__(self, region: int, message: str):
        super().__init__(
            f"Quadrature for region {region} did not converge: {message}",
            code="QUADRATURE_NONCONVERGENT",
            details={"region": region},
        )


# Filters and enumeration


class NotA236Cusp(PrismCoversError):
    """The double-cover test needs a (2,3,6) cusp."""

    def __init__(self, name: str):
        super().__init__(f"{name} does not have a (2,3,6) cusp", code="NOT_A_236_CUSP", details={"signature": name})


class IndexTooLarge(PrismCoversError):
    """The brute-force oracle is limited to small index."""

    def __init__(self, index: int, limit: int):
        super().__init__(
            f"Index {index} exceeds the brute-force limit {limit}",
            code="INDEX_TOO_LARGE",
            details={"index": index, "limit": limit},
        )


class ConfigurationError(PrismCoversError):
    """Configuration error."""

    def __init__(self, message: str, config_key: str | None = None):
        details = {"config_key": config_key} if config_key else {}
        super().__init__(message, code="CONFIG_ERROR", details=details)
