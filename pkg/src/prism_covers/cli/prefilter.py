"""CLI command for the knot-complement obstruction table."""

from __future__ import annotations

import typer
from rich.table import Table

from prism_covers.cli.utils import console, emit, fail, resolve_signature
from prism_covers.models.filters import PrefilterReport
from prism_covers.utils.errors import PrismCoversError


def _published_text(report: PrefilterReport) -> str:
    p = report.published
    if p is None:
        return "-"
    cols = [
        "-" if p.ck is None else str(p.ck),
        "-" if p.dc is None else str(p.dc),
        "-" if p.mcd is None else str(p.mcd),
    ]
    return "/".join(cols)


def prefilter_cmd(
    sig: str | None = typer.Option(None, "--sig", "-s", help="Single signature instead of the table"),
    n: int | None = typer.Option(None, "--n", help="Instantiate family rows at this n"),
    table: bool = typer.Option(False, "--table", "-t", help="Show a rich table instead of key = value lines"),
    show_graph: bool = typer.Option(False, "--residual", help="Show the residual isotropy graph"),
) -> None:
    """
    Run the cusp-killing, double-cover and MCD obstructions.

    Exits with status 1 if a computed CK or DC column disagrees with a
    published one. MCD differences are listed but do not fail the run.

    Example:
        prism-covers prefilter --n 12
    """
    from prism_covers.core.catalog import published_columns
    from prism_covers.core.filters import cusp_killing, prefilter, prefilter_table

    try:
        if sig is not None:
            signature = resolve_signature(sig, n)
            published = published_columns(signature.name, n) if signature.name else None
            reports = [prefilter(signature, published)]
        else:
            reports = prefilter_table(n)
    except PrismCoversError as e:
        fail(e)

    if table:
        out = Table(title="Knot-complement obstructions")
        out.add_column("Name", style="bold")
        out.add_column("CK")
        out.add_column("DC")
        out.add_column("MCD", justify="right")
        out.add_column("UT")
        out.add_column("Verdict")
        out.add_column("Published CK/DC/MCD")
        for r in reports:
            style = "green" if r.verdict.value == "surviving" else "red"
            out.add_row(
                r.name,
                r.cusp_kill,
                r.double_cover.value,
                str(r.mcd),
                r.unit_translation,
                f"[{style}]{r.verdict.value}[/{style}]",
                _published_text(r),
            )
        console.print(out)
    else:
        for r in reports:
            emit(
                r.name,
                f"ck: {r.cusp_kill}; dc: {r.double_cover.value}; mcd: {r.mcd}; verdict: {r.verdict.value}",
            )
            if show_graph and sig is not None:
                for edge in cusp_killing(resolve_signature(sig, n)).residual:
                    emit(f"{r.name}.residual", f"{edge.u}-{edge.v} label {edge.label} ({edge.origin})")

    emit("rows", len(reports))
    mismatched = [r.name for r in reports if r.obstructions_match is False]
    mcd_differs = [r.name for r in reports if r.mcd_matches is False]
    emit("published_mismatches", ", ".join(mismatched) if mismatched else "none")
    emit("mcd_differs", ", ".join(mcd_differs) if mcd_differs else "none")
    if mismatched:
        raise typer.Exit(1)
