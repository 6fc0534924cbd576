"""Common model types shared across modules."""

from enum import Enum
from typing import Any

from pydantic import BaseModel, Field


class CoverError(BaseModel):
    """Represents an error found while checking a signature, rep or cover."""

    model_config = {"frozen": True}

    code: str = Field(description="Error code for programmatic handling")
    message: str = Field(description="Human-readable error message")
    details: dict[str, Any] = Field(
        default_factory=dict,
        description="Additional error context",
    )

    def __str__(self) -> str:
        return f"[{self.code}] {self.message}"


class Generator(str, Enum):
    """Generators of the orientable rotation group of the doubled prism."""

    X = "x"
    Y = "y"
    Z = "z"
    W = "w"


GENERATORS: tuple[Generator, ...] = (Generator.X, Generator.Y, Generator.Z, Generator.W)


class Orientation(str, Enum):
    """Orientation behaviour of an isometry between covers."""

    PRESERVING = "preserving"
    REVERSING = "reversing"
