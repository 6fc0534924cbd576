"""Prism signatures, the built-in catalogs and vertex-group data."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Any

import yaml

from prism_covers.core.template import (
    FINITE_VERTICES,
    VERTEX_NAMES,
    vertex_edges,
)
from prism_covers.models.signature import (
    CatalogEntry,
    FamilyRule,
    PrismSignature,
    PublishedObstructions,
    VertexGroupData,
    VertexReport,
)
from prism_covers.utils.errors import (
    CuspTypeInvalid,
    FamilyParameterOutOfRange,
    PrismCoversError,
    UnknownSignature,
    VertexNotSpherical,
)
from prism_covers.utils.logging import get_logger

logger = get_logger(__name__)

RIGID_CUSPS: tuple[tuple[int, int, int], ...] = ((2, 3, 6), (3, 3, 3), (2, 4, 4))
PUBLISHED_FAMILY_MIN_N = 6


def get_default_catalog_path() -> Path:
    """Path of the catalog shipped in the package data directory."""
    return Path(__file__).parent.parent / "data" / "prism_catalog.v1.yaml"


def make_signature(a: tuple[int, ...] | list[int], name: str | None = None) -> PrismSignature:
    """Build a validated signature.

    Args:
        a: The nine labels a1..a9, each at least 2
        name: Optional catalog label

    Returns:
        The validated signature

    Raises:
        CuspTypeInvalid: If {a1, a2, a5} is not a rigid cusp triple
        VertexNotSpherical: If a finite vertex fails the angle-sum test
    """
    labels = tuple(int(v) for v in a)
    if len(labels) != 9:
        raise PrismCoversError(f"a signature has nine labels, got {len(labels)}", code="INVALID_SIGNATURE")
    if any(v < 2 for v in labels):
        raise PrismCoversError(f"all labels must be >= 2, got {labels}", code="INVALID_SIGNATURE")

    cusp = (labels[0], labels[1], labels[4])
    if tuple(sorted(cusp)) not in RIGID_CUSPS:
        raise CuspTypeInvalid(cusp)

    for vertex in FINITE_VERTICES:
        edges = vertex_edges(vertex)
        triple = (labels[edges[0] - 1], labels[edges[1] - 1], labels[edges[2] - 1])
        if sum(Fraction(1, v) for v in triple) <= 1:
            raise VertexNotSpherical(VERTEX_NAMES[vertex], triple)

    return PrismSignature(a=labels, name=name)  # type: ignore[arg-type]


def vertex_data(sig: PrismSignature) -> VertexReport:
    """Orientable vertex-group orders and their lcm (the MCD bound).

    Every manifold cover has degree divisible by each order.
    """
    vertices: list[VertexGroupData] = []
    for vertex in FINITE_VERTICES:
        edges = vertex_edges(vertex)
        triple = (sig.label(edges[0]), sig.label(edges[1]), sig.label(edges[2]))
        n_v = sum((Fraction(1, v) for v in triple), Fraction(-1))
        order = Fraction(2) / n_v
        if order.denominator != 1:
            raise PrismCoversError(
                f"vertex {VERTEX_NAMES[vertex]} has non-integral group order {order}",
                code="INVALID_SIGNATURE",
            )
        vertices.append(
            VertexGroupData(vertex=VERTEX_NAMES[vertex], labels=triple, n_v=n_v, order=int(order))
        )
    return VertexReport(vertices=vertices, mcd=math.lcm(*(v.order for v in vertices)))


def split_along_triangle(sig: PrismSignature) -> tuple[PrismSignature, PrismSignature]:
    """The two prisms cut off by the compact right-angled triangle.

    Returns:
        (compact side, cusped side). The compact side has no cusp and is not
        checked against the one-cusped conditions.
    """
    a = sig.a
    base = sig.name or "P"
    compact = PrismSignature(a=(2, 2, 2, a[3], a[4], a[5], a[6], a[7], a[8]), name=f"{base}+")
    cusped = make_signature((a[0], a[1], a[2], a[3], a[4], a[5], 2, 2, 2), name=f"{base}-")
    return compact, cusped


def parse_signature_line(text: str) -> PrismSignature:
    """Parse ``[name] a1 ... a9``."""
    fields = text.split()
    name: str | None = None
    if len(fields) == 10:
        name, fields = fields[0], fields[1:]
    if len(fields) != 9:
        raise PrismCoversError(f"expected nine labels, got {text!r}", code="INVALID_SIGNATURE")
    try:
        labels = tuple(int(f) for f in fields)
    except ValueError as e:
        raise PrismCoversError(f"labels must be integers: {text!r}", code="INVALID_SIGNATURE") from e
    return make_signature(labels, name=name)


def format_signature_line(sig: PrismSignature) -> str:
    return str(sig)


def _published(raw: dict[str, Any] | None) -> PublishedObstructions | None:
    if raw is None:
        return None
    return PublishedObstructions.model_validate(raw)


@lru_cache(maxsize=4)
def _load_entries(path: str) -> tuple[CatalogEntry, ...]:
    data = yaml.safe_load(Path(path).read_text())
    entries: list[CatalogEntry] = []
    for row in data["rows"]:
        pattern = tuple(None if v == "n" else int(v) for v in row["a"])
        family = row.get("family")
        entries.append(
            CatalogEntry(
                name=row["name"],
                table=str(row["table"]),
                pattern=pattern,
                published=_published(row.get("published")),
                family=FamilyRule.model_validate(family) if family else None,
            )
        )
    logger.debug("Loaded %d catalog rows from %s", len(entries), path)
    return tuple(entries)


def builtin_tables(path: Path | str | None = None) -> list[CatalogEntry]:
    """All catalog rows, (2,3,6) first, in table order."""
    return list(_load_entries(str(path or get_default_catalog_path())))


def builtin_signatures(n: int | None = None) -> list[PrismSignature]:
    """Signatures of every finite row, plus family rows instantiated at ``n`` if given."""
    out: list[PrismSignature] = []
    for entry in builtin_tables():
        if entry.family is None:
            out.append(instantiate(entry))
        elif n is not None:
            out.append(instantiate(entry, n))
    return out


def instantiate(entry: CatalogEntry, n: int | None = None) -> PrismSignature:
    """Signature of a catalog row; family rows need ``n``.

    Raises:
        FamilyParameterOutOfRange: If ``n`` is missing or below the family minimum
    """
    if entry.family is None:
        return make_signature(tuple(v for v in entry.pattern if v is not None), name=entry.name)
    if n is None:
        raise FamilyParameterOutOfRange(entry.name, 0, "family rows need a parameter n")
    if n < entry.family.min_n:
        raise FamilyParameterOutOfRange(entry.name, n, f"minimum is {entry.family.min_n}")
    labels = tuple(n if v is None else v for v in entry.pattern)
    return make_signature(labels, name=entry.name.replace(",n", f",{n}"))


def lookup(name: str, n: int | None = None) -> PrismSignature:
    """Signature by catalog name, e.g. ``lookup("O333_3")`` or ``lookup("O236_5,n", 12)``.

    ``"O236_5,12"`` is accepted as shorthand for ``("O236_5,n", 12)``.
    """
    entry, n = _resolve(name, n)
    return instantiate(entry, n)


def find_entry(name: str) -> CatalogEntry:
    entry, _ = _resolve(name, None)
    return entry


def _resolve(name: str, n: int | None) -> tuple[CatalogEntry, int | None]:
    entries = {e.name: e for e in builtin_tables()}
    if name in entries:
        return entries[name], n
    head, sep, tail = name.rpartition(",")
    if sep and tail.isdigit() and f"{head},n" in entries:
        return entries[f"{head},n"], int(tail)
    raise UnknownSignature(name)


def published_for(entry: CatalogEntry, n: int | None = None) -> PublishedObstructions | None:
    """Published columns of a row; for families, selected by the parity of ``n``.

    Family columns are only reported for ``n >= 6``.
    """
    if entry.family is None:
        return entry.published
    if n is None or n < PUBLISHED_FAMILY_MIN_N:
        return None
    columns = entry.family.even if n % 2 == 0 else entry.family.odd
    return columns.model_copy(update={"mcd": math.lcm(entry.family.mcd_base, n)})


def published_columns(name: str, n: int | None = None) -> PublishedObstructions | None:
    """Published columns for a row name; unknown names give ``None``."""
    try:
        entry, n = _resolve(name, n)
    except UnknownSignature:
        return None
    return published_for(entry, n)
