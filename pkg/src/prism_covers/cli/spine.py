"""CLI command for spine counts and the fundamental group presentation."""

from __future__ import annotations

from pathlib import Path

import typer

from prism_covers.cli.utils import console, emit, fail, load_reps, resolve_signature
from prism_covers.utils.errors import PrismCoversError


def spine_cmd(
    sig: str = typer.Option(..., "--sig", "-s", help="Signature name or nine labels"),
    reps: Path = typer.Option(..., "--reps", "-r", help="Rep file"),
    n: int | None = typer.Option(None, "--n", help="Parameter for family rows"),
    full: bool = typer.Option(False, "--full", help="Report the uncoarsened spine"),
    dump: bool = typer.Option(False, "--dump", help="Print cells and the presentation"),
    seed: int | None = typer.Option(None, "--seed", help="Seed for the maximal tree"),
) -> None:
    """
    Build the spine of each cover and report its counts and homology.

    Example:
        prism-covers spine --sig O333_2 --reps sigma_2_1.rep
    """
    from prism_covers.core.complex import (
        build_complex,
        build_spine,
        coarsen_spine,
        format_presentation,
        format_spine,
        fundamental_presentation,
    )
    from prism_covers.core.homology import first_homology

    try:
        signature = resolve_signature(sig, n)
        for i, rep in enumerate(load_reps(reps)):
            prefix = f"rep.{i}"
            spine = build_spine(build_complex(signature, rep))
            if not full:
                spine = coarsen_spine(spine)
            v, e, f = spine.counts
            composition: dict[str, int] = {}
            for cell in spine.cells:
                key = "+".join(f"{face}x{k}" for face, k in sorted(cell.faces.items()))
                composition[key] = composition.get(key, 0) + 1
            presentation = fundamental_presentation(spine, seed=seed)
            emit(f"{prefix}.vertices", v)
            emit(f"{prefix}.edges", e)
            emit(f"{prefix}.cells", f)
            emit(f"{prefix}.euler", spine.euler_characteristic)
            emit(f"{prefix}.composition", ", ".join(f"{k}: {c}" for k, c in sorted(composition.items())))
            emit(f"{prefix}.generators", presentation.generator_count)
            emit(f"{prefix}.relators", len(presentation.relators))
            emit(f"{prefix}.H1", first_homology(presentation))
            if dump:
                console.print(format_spine(spine), markup=False)
                console.print(format_presentation(presentation), markup=False)
    except PrismCoversError as e:
        fail(e)
