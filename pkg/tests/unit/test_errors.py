"""Unit tests for the errors module."""

from prism_covers.models.common import CoverError
from prism_covers.utils.errors import (
    ConfigurationError,
    CuspTypeInvalid,
    DisconnectedSpine,
    FamilyParameterOutOfRange,
    GluingFormatError,
    IndexTooLarge,
    NotAManifold,
    PrismCoversError,
    RelatorViolation,
    RepFormatError,
    UnknownSignature,
    UnsupportedA3,
)


class TestPrismCoversError:
    """Tests for base PrismCoversError."""

    def test_basic_error(self):
        """Test basic error creation."""
        error = PrismCoversError("Something went wrong")
        assert str(error) == "Something went wrong"
        assert error.message == "Something went wrong"
        assert error.code == "UNKNOWN_ERROR"
        assert error.details == {}

    def test_error_with_code_and_details(self):
        """Test error with custom code and details."""
        error = PrismCoversError("Test error", code="TEST_ERROR", details={"key": "value"})
        assert error.code == "TEST_ERROR"
        assert error.details == {"key": "value"}

    def test_to_cover_error(self):
        """Test conversion to the CoverError model."""
        cover_error = PrismCoversError("Test error", code="TEST_ERROR", details={"key": "value"}).to_cover_error()
        assert isinstance(cover_error, CoverError)
        assert cover_error.code == "TEST_ERROR"
        assert cover_error.message == "Test error"
        assert cover_error.details == {"key": "value"}
        assert str(cover_error) == "[TEST_ERROR] Test error"


class TestSignatureErrors:
    """Tests for catalog errors."""

    def test_cusp_type_invalid(self):
        """Test CuspTypeInvalid carries the labels."""
        error = CuspTypeInvalid((2, 3, 5))
        assert error.code == "CUSP_TYPE_INVALID"
        assert error.details["labels"] == [2, 3, 5]

    def test_unknown_signature(self):
        """Test UnknownSignature names the row."""
        error = UnknownSignature("O999_1")
        assert "O999_1" in error.message

    def test_family_parameter(self):
        """Test FamilyParameterOutOfRange is a PrismCoversError."""
        error = FamilyParameterOutOfRange("O236_5,n", 3, "minimum is 7")
        assert isinstance(error, PrismCoversError)
        assert "O236_5,n" in error.message


class TestFormatErrors:
    """Tests for parse errors with line numbers."""

    def test_rep_format_error_line(self):
        """Test the line number is kept in message and details."""
        error = RepFormatError("bad record", line=7)
        assert error.details == {"line": 7}
        assert error.message.endswith("(line 7)")

    def test_gluing_format_error_without_line(self):
        """Test the line number is optional."""
        error = GluingFormatError("empty gluing table")
        assert error.details == {}
        assert error.code == "GLUING_FORMAT_ERROR"


class TestDomainErrors:
    """Tests for the remaining error codes."""

    def test_codes(self):
        """Test each error has its stable code."""
        assert RelatorViolation("x^3", 4).code == "RELATOR_VIOLATION"
        assert DisconnectedSpine(3, 6).code == "DISCONNECTED_SPINE"
        assert NotAManifold(["x^3"]).code == "NOT_A_MANIFOLD"
        assert UnsupportedA3(4).code == "UNSUPPORTED_A3"
        assert IndexTooLarge(9, 8).code == "INDEX_TOO_LARGE"
        assert ConfigurationError("bad", config_key="workers").details == {"config_key": "workers"}
