"""CLI command for the enumerate-and-filter pipeline."""

from __future__ import annotations

from pathlib import Path

import typer

from prism_covers.cli.utils import emit, fail, load_reps, resolve_signature, run_config
from prism_covers.utils.errors import PrismCoversError


def pipeline_cmd(
    sig: str = typer.Option(..., "--sig", "-s", help="Signature name or nine labels"),
    degree: int = typer.Option(24, "--degree", "-d", help="Cover degree to keep"),
    reps: Path | None = typer.Option(None, "--reps", "-r", help="Filter this rep file instead of enumerating"),
    survivors: Path | None = typer.Option(None, "--survivors", help="Write surviving reps here"),
    n: int | None = typer.Option(None, "--n", help="Parameter for family rows"),
    workers: int | None = typer.Option(None, "--workers", "-w", help="Worker processes"),
    config_file: Path | None = typer.Option(None, "--config", "-c", help="Run configuration YAML"),
) -> None:
    """
    Enumerate covers of one degree and keep one-cusped manifolds with H1 = Z.

    Example:
        prism-covers pipeline --sig O333_2 --survivors o333_2_final.rep
    """
    from prism_covers.core.filters import filter_covers
    from prism_covers.core.low_index import enumerate_subgroups
    from prism_covers.core.permutation import write_reps
    from prism_covers.models.enumeration import EnumerationTask

    try:
        config = run_config(config_file, workers=workers)
        signature = resolve_signature(sig, n)
        if reps is not None:
            candidates = [r for r in load_reps(reps) if r.degree == degree]
        else:
            task = EnumerationTask(
                signature=signature,
                max_index=degree,
                split_depth=config.workers.split_depth,
            )
            candidates = [
                r
                for r in enumerate_subgroups(
                    task,
                    workers=config.workers.workers,
                    progress_every=config.enumeration.progress_every,
                )
                if r.degree == degree
            ]
        stages = filter_covers(signature, candidates, workers=config.workers.workers)
    except PrismCoversError as e:
        fail(e)

    emit("candidates", stages.total)
    emit("manifold", stages.manifold)
    emit("one_cusp", stages.one_cusp)
    emit("homology_z", stages.homology_z)
    emit("stages", "/".join(str(c) for c in stages.counts))
    if survivors is not None:
        write_reps(stages.survivors, survivors)
        emit("written", survivors)
