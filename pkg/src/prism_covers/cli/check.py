"""CLI command for certifying reps: validity, manifold, cusps, homology."""

from __future__ import annotations

from pathlib import Path

import typer

from prism_covers.cli.utils import emit, fail, load_reps, resolve_signature, yes_no
from prism_covers.utils.errors import PrismCoversError


def check_cmd(
    sig: str = typer.Option(..., "--sig", "-s", help="Signature name or nine labels"),
    reps: Path = typer.Option(..., "--reps", "-r", help="Rep file"),
    n: int | None = typer.Option(None, "--n", help="Parameter for family rows"),
    homology: bool = typer.Option(True, "--homology/--no-homology", help="Compute first homology"),
    cycles: bool = typer.Option(False, "--cycles", help="Show relator cycle types"),
) -> None:
    """
    Validate reps and run the manifold, cusp and homology tests.

    Exits with status 1 unless every rep is a one-cusped manifold cover
    (with first homology Z when homology is computed).

    Example:
        prism-covers check --sig O333_2 --reps sigma_2_1.rep
    """
    from prism_covers.core.complex import build_complex, build_spine, coarsen_spine, fundamental_presentation
    from prism_covers.core.homology import first_homology
    from prism_covers.core.permutation import cusp_orbits, is_manifold, validate_rep

    try:
        signature = resolve_signature(sig, n)
        all_ok = True
        for i, rep in enumerate(load_reps(reps)):
            prefix = f"rep.{i}"
            validation = validate_rep(signature, rep)
            emit(f"{prefix}.degree", rep.degree)
            emit(f"{prefix}.valid", yes_no(validation.valid))
            if not validation.valid:
                for error in validation.errors:
                    emit(f"{prefix}.error", error)
                all_ok = False
                continue

            manifold = is_manifold(signature, rep)
            cusps = len(cusp_orbits(rep))
            parts = [f"manifold: {yes_no(manifold.manifold)}", f"cusps: {cusps}"]
            ok = manifold.manifold and cusps == 1
            if cycles:
                for c in manifold.cycles:
                    emit(f"{prefix}.cycles.{c.relator}", " ".join(str(k) for k in c.cycle_type))
            if homology:
                spine = coarsen_spine(build_spine(build_complex(signature, rep)))
                h1 = first_homology(fundamental_presentation(spine))
                parts.append(f"H1: {h1}")
                ok = ok and h1.is_z()
            emit(f"{prefix}.summary", "; ".join(parts))
            all_ok = all_ok and ok
    except PrismCoversError as e:
        fail(e)

    if not all_ok:
        raise typer.Exit(1)
