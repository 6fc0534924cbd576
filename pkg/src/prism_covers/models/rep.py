"""Permutation, word and permutation-representation models."""

from __future__ import annotations

import re
from typing import Any

from pydantic import BaseModel, Field, field_validator, model_validator

from prism_covers.models.common import GENERATORS, CoverError, Generator

_TOKEN = re.compile(r"([xyzwXYZW])(?:\^?(-?\d+))?")


class Permutation(BaseModel):
    """A bijection of {0, ..., n-1}; ``images[i]`` is the image of ``i``."""

    model_config = {"frozen": True}

    images: tuple[int, ...] = Field(description="Image of each point")

    @field_validator("images")
    @classmethod
    def _bijective(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        if sorted(value) != list(range(len(value))):
            raise ValueError("images must be a permutation of 0..n-1")
        return value

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(images=tuple(range(degree)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def then(self, other: Permutation) -> Permutation:
        """Apply ``self`` first, then ``other`` (``other o self``)."""
        return Permutation(images=tuple(other.images[i] for i in self.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(images=tuple(inv))

    def power(self, exponent: int) -> Permutation:
        base = self if exponent >= 0 else self.inverse()
        result = Permutation.identity(self.degree)
        for _ in range(abs(exponent)):
            result = result.then(base)
        return result

    def cycles(self, include_fixed: bool = True) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its smallest point."""
        seen = [False] * self.degree
        out: list[tuple[int, ...]] = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cycle.append(j)
                seen[j] = True
                j = self.images[j]
            if include_fixed or len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def cycle_type(self) -> list[int]:
        return sorted((len(c) for c in self.cycles()), reverse=True)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def __str__(self) -> str:
        moved = self.cycles(include_fixed=False)
        if not moved:
            return "()"
        return "".join("(" + ",".join(str(p) for p in c) + ")" for c in moved)


class GroupWord(BaseModel):
    """A word in x, y, z, w with nonzero integer exponents."""

    model_config = {"frozen": True}

    letters: tuple[tuple[Generator, int], ...] = Field(default=(), description="(generator, exponent) pairs")

    @field_validator("letters")
    @classmethod
    def _nonzero_exponents(
        cls, value: tuple[tuple[Generator, int], ...]
    ) -> tuple[tuple[Generator, int], ...]:
        if any(exp == 0 for _, exp in value):
            raise ValueError("exponents must be nonzero")
        return value

    @classmethod
    def parse(cls, text: str) -> GroupWord:
        """Parse ``"y^-1 x"``, ``"Yx"`` or ``"x^3"``; capitals denote inverses."""
        compact = text.replace(" ", "").replace("*", "")
        letters: list[tuple[Generator, int]] = []
        pos = 0
        while pos < len(compact):
            match = _TOKEN.match(compact, pos)
            if match is None:
                raise ValueError(f"cannot parse word {text!r} at position {pos}")
            char, exp_text = match.group(1), match.group(2)
            exponent = int(exp_text) if exp_text is not None else 1
            if char.isupper():
                exponent = -exponent
            if exponent != 0:
                letters.append((Generator(char.lower()), exponent))
            pos = match.end()
        return cls(letters=tuple(letters))

    @classmethod
    def of(cls, *letters: tuple[Generator, int]) -> GroupWord:
        return cls(letters=tuple(letters))

    def __mul__(self, other: GroupWord) -> GroupWord:
        return GroupWord(letters=self.letters + other.letters)

    def inverse(self) -> GroupWord:
        return GroupWord(letters=tuple((g, -e) for g, e in reversed(self.letters)))

    def expand(self) -> list[tuple[Generator, int]]:
        """Letters with unit exponents."""
        out: list[tuple[Generator, int]] = []
        for g, e in self.letters:
            out.extend([(g, 1 if e > 0 else -1)] * abs(e))
        return out

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(g.value if e == 1 else f"{g.value}^{e}" for g, e in self.letters)


class Relator(BaseModel):
    """A relator ``base ** exponent`` attached to a prism edge."""

    model_config = {"frozen": True}

    base: GroupWord
    exponent: int = Field(ge=1)
    edge: int = Field(ge=1, le=9, description="Prism edge a{edge} the relator rotates about")

    @property
    def name(self) -> str:
        base = str(self.base)
        if len(self.base.letters) > 1 or self.base.letters[0][1] != 1:
            base = f"({base})"
        return f"{base}^{self.exponent}"


class PermRep(BaseModel):
    """Right-permutation representation: images of x, y, z, w.

    Point ``c`` is a coset and ``sigma(g)(c)`` is the coset ``c*g``.
    """

    model_config = {"frozen": True}

    x: Permutation
    y: Permutation
    z: Permutation
    w: Permutation

    @model_validator(mode="after")
    def _same_degree(self) -> PermRep:
        degrees = {self.x.degree, self.y.degree, self.z.degree, self.w.degree}
        if len(degrees) != 1:
            raise ValueError(f"generator images have different degrees: {sorted(degrees)}")
        return self

    @classmethod
    def from_images(cls, images: dict[Generator, Any]) -> PermRep:
        return cls(**{g.value: Permutation(images=tuple(images[g])) for g in GENERATORS})

    @classmethod
    def trivial(cls, degree: int = 1) -> PermRep:
        ident = Permutation.identity(degree)
        return cls(x=ident, y=ident, z=ident, w=ident)

    @property
    def degree(self) -> int:
        return self.x.degree

    def gen(self, g: Generator) -> Permutation:
        return getattr(self, g.value)  # type: ignore[no-any-return]

    def replace(self, g: Generator, perm: Permutation) -> PermRep:
        return self.model_copy(update={g.value: perm})

    def image_tuples(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.gen(g).images for g in GENERATORS)


class RelatorFailure(BaseModel):
    """A relator that moves at least one point."""

    model_config = {"frozen": True}

    relator: str
    point: int = Field(description="Smallest moved point")


class RepValidation(BaseModel):
    """Result of validating a rep against a signature's presentation."""

    model_config = {"frozen": True}

    valid: bool
    degree: int
    orbit_count: int = Field(description="Orbits of the full generated group")
    failures: list[RelatorFailure] = Field(default_factory=list)
    errors: list[CoverError] = Field(default_factory=list)


class CycleReport(BaseModel):
    """Cycle structure of one relator base word."""

    model_config = {"frozen": True}

    relator: str
    exponent: int
    cycle_type: list[int]
    ok: bool = Field(description="Exactly n/a cycles all of length a")


class ManifoldReport(BaseModel):
    """Per-relator manifold test."""

    model_config = {"frozen": True}

    manifold: bool
    cycles: list[CycleReport] = Field(default_factory=list)
    errors: list[CoverError] = Field(default_factory=list)
