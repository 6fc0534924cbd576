"""CLI command for the totally geodesic surface report."""

from __future__ import annotations

from pathlib import Path

import typer

from prism_covers.cli.utils import emit, fail, load_reps, real, resolve_signature, yes_no
from prism_covers.utils.errors import PrismCoversError


def surface_cmd(
    sig: str = typer.Option(..., "--sig", "-s", help="Signature name or nine labels"),
    reps: Path = typer.Option(..., "--reps", "-r", help="Rep file"),
    n: int | None = typer.Option(None, "--n", help="Parameter for family rows"),
    volumes: bool = typer.Option(False, "--volumes", help="Also integrate the volume of each side"),
) -> None:
    """
    Report the closed geodesic surface tiled by triangle cross-sections.

    Example:
        prism-covers surface --sig O333_2 --reps sigma_2_1.rep
    """
    from prism_covers.core.surface import geodesic_surface
    from prism_covers.core.volume import surface_side_volumes

    try:
        signature = resolve_signature(sig, n)
        for i, rep in enumerate(load_reps(reps)):
            prefix = f"rep.{i}"
            report = geodesic_surface(signature, rep)
            emit(f"{prefix}.components", report.components)
            emit(f"{prefix}.connected", yes_no(report.components == 1))
            emit(f"{prefix}.orientable", yes_no(report.orientable))
            emit(f"{prefix}.genus", " ".join(str(g) for g in report.genus))
            emit(f"{prefix}.euler", report.euler_characteristic)
            emit(f"{prefix}.area", f"{report.area_over_pi}*pi")
            emit(f"{prefix}.separating", report.separating_text)
            if volumes:
                sides = surface_side_volumes(signature, rep.degree)
                emit(f"{prefix}.volume.cusped", real(sides.cusped_side))
                emit(f"{prefix}.volume.compact", real(sides.compact_side))
    except PrismCoversError as e:
        fail(e)
