"""CLI command for low-index subgroup enumeration."""

from __future__ import annotations

from pathlib import Path

import typer

from prism_covers.cli.utils import emit, fail, resolve_signature, run_config
from prism_covers.utils.errors import PrismCoversError


def enumerate_cmd(
    sig: str = typer.Option(..., "--sig", "-s", help="Signature name or nine labels"),
    max_index: int | None = typer.Option(None, "--max-index", "-k", help="Largest index to enumerate"),
    output: Path = typer.Option(..., "--output", "-o", help="Rep file to write"),
    checkpoint: Path | None = typer.Option(None, "--checkpoint", help="File of completed search prefixes"),
    resume: bool = typer.Option(False, "--resume", help="Skip prefixes listed in the checkpoint"),
    n: int | None = typer.Option(None, "--n", help="Parameter for family rows"),
    workers: int | None = typer.Option(None, "--workers", "-w", help="Worker processes"),
    config_file: Path | None = typer.Option(None, "--config", "-c", help="Run configuration YAML"),
) -> None:
    """
    Enumerate one transitive rep per conjugacy class of subgroups.

    Example:
        prism-covers enumerate --sig O333_2 -k 24 -o o333_2.rep --checkpoint o333_2.ckpt
    """
    from prism_covers.core.low_index import enumerate_to_file
    from prism_covers.models.enumeration import EnumerationTask

    if resume and checkpoint is None:
        fail("--resume needs --checkpoint")
    try:
        config = run_config(config_file, workers=workers)
        signature = resolve_signature(sig, n)
        task = EnumerationTask(
            signature=signature,
            max_index=max_index or config.enumeration.max_index,
            split_depth=config.workers.split_depth,
        )
        summary = enumerate_to_file(
            task,
            output,
            checkpoint=checkpoint,
            resume=resume,
            workers=config.workers.workers,
        )
    except PrismCoversError as e:
        fail(e)

    emit("signature", summary.signature)
    emit("max_index", summary.max_index)
    for index, count in summary.by_index.items():
        emit(f"index.{index}", count)
    emit("total", summary.total)
    emit("prefixes", summary.prefixes)
