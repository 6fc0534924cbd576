"""CLI command for exporting ideal triangulations."""

from __future__ import annotations

from pathlib import Path

import typer

from prism_covers.cli.utils import console, emit, fail, load_reps, resolve_signature, yes_no
from prism_covers.utils.errors import PrismCoversError


def triangulate_cmd(
    sig: str = typer.Option(..., "--sig", "-s", help="Signature name or nine labels"),
    reps: Path = typer.Option(..., "--reps", "-r", help="Rep file"),
    n: int | None = typer.Option(None, "--n", help="Parameter for family rows"),
    index: int = typer.Option(0, "--index", "-i", help="Which rep of the file to triangulate"),
    output: Path | None = typer.Option(None, "--output", "-o", help="Write the gluing table here"),
) -> None:
    """
    Triangulate a cover and export its gluing table.

    Without --output the table is printed after the summary lines.

    Example:
        prism-covers triangulate --sig O333_2 --reps sigma_2_1.rep -o cover.gluing
    """
    from prism_covers.core.permutation import cusp_orbits
    from prism_covers.core.triangulation import export_gluing_table, triangulate, validate_triangulation

    try:
        signature = resolve_signature(sig, n)
        all_reps = load_reps(reps)
        if not 0 <= index < len(all_reps):
            fail(f"--index {index} out of range; {reps} has {len(all_reps)} reps")
        rep = all_reps[index]
        data = triangulate(signature, rep)
        report = validate_triangulation(data, cusp_count=len(cusp_orbits(rep)))
    except PrismCoversError as e:
        fail(e)

    emit("tetrahedra", report.tet_count)
    emit("ideal_vertex_classes", report.ideal_vertex_classes)
    emit("finite_vertex_classes", data.finite_vertex_classes)
    emit("valid", yes_no(report.valid))
    for error in report.errors:
        emit("error", error)
    text = export_gluing_table(data)
    if output:
        output.write_text(text)
        emit("written", output)
    else:
        console.print(text, end="", markup=False)
    if not report.valid:
        raise typer.Exit(1)
