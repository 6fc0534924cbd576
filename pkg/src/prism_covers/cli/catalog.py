"""CLI command for listing and validating prism signatures."""

from __future__ import annotations

import typer

from prism_covers.cli.utils import console, emit, fail, resolve_signature
from prism_covers.utils.errors import PrismCoversError


def catalog_cmd(
    name: list[str] | None = typer.Option(
        None,
        "--name",
        help="Catalog row name, e.g. O333_2 or 'O236_5,n' (repeatable)",
    ),
    n: int | None = typer.Option(None, "--n", help="Parameter for family rows"),
    line: str | None = typer.Option(
        None,
        "--line",
        help="Validate a signature line '[name] a1 ... a9'",
    ),
    show_all: bool = typer.Option(False, "--all", help="Print every row as a signature line"),
    vertices: bool = typer.Option(False, "--vertices", help="Show vertex group orders"),
) -> None:
    """
    List and validate prism signatures.

    Example:
        prism-covers catalog --name O236_5,n --n 12
    """
    from prism_covers.core.catalog import (
        builtin_tables,
        format_signature_line,
        instantiate,
        published_columns,
        vertex_data,
    )

    try:
        if show_all:
            for entry in builtin_tables():
                if entry.family is not None and (n is None or n < entry.family.min_n):
                    console.print(f"{entry.name} (family, needs --n >= {entry.family.min_n})", markup=False)
                    continue
                sig = instantiate(entry, n if entry.is_family else None)
                console.print(format_signature_line(sig), markup=False)
            return

        selectors = list(name or []) + ([line] if line else [])
        if not selectors:
            fail("Give --name, --line or --all")
        for selector in selectors:
            sig = resolve_signature(selector, n)
            report = vertex_data(sig)
            emit("signature", format_signature_line(sig))
            emit("cusp", sig.cusp_type.value if sig.cusp_type else "none")
            emit("mcd", report.mcd)
            if vertices:
                for v in report.vertices:
                    emit(f"order.{v.vertex}", v.order)
            if sig.name:
                published = published_columns(sig.name, n)
                if published is not None and published.mcd is not None:
                    emit("published_mcd", published.mcd)
    except PrismCoversError as e:
        fail(e)
