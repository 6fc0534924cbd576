"""Shared utilities for CLI commands."""

from __future__ import annotations

from pathlib import Path
from typing import Any, NoReturn

import typer
from rich.console import Console

from prism_covers.models.rep import PermRep
from prism_covers.models.signature import PrismSignature
from prism_covers.utils.config import PrismCoversConfig, get_config, load_config, set_config
from prism_covers.utils.errors import PrismCoversError

# Shared console instance; results go to stdout, logs to stderr
console = Console(highlight=False, soft_wrap=True)


def fail(error: PrismCoversError | str) -> NoReturn:
    """Print a one-line diagnostic and exit with status 1."""
    message = error.message if isinstance(error, PrismCoversError) else error
    console.print(f"[red]Error:[/red] {message}", markup=True)
    raise typer.Exit(1)


def emit(key: str, value: Any) -> None:
    """Print one ``key = value`` result line."""
    console.print(f"{key} = {value}", markup=False)


def real(value: float, digits: int | None = None) -> str:
    """Real number with the configured significant digits."""
    return f"{value:.{digits or get_config().output.digits}g}"


def yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def run_config(
    config_file: Path | None,
    tol: float | None = None,
    workers: int | None = None,
) -> PrismCoversConfig:
    """Load ``--config`` and apply ``--tol``/``--workers`` overrides."""
    config = load_config(config_file)
    if tol is not None:
        if tol <= 0:
            fail(f"--tol must be positive, got {tol}")
        config = config.model_copy(
            update={"tolerances": config.tolerances.model_copy(update={"matrix": tol})}
        )
    if workers is not None:
        if workers < 1:
            fail(f"--workers must be at least 1, got {workers}")
        config = config.model_copy(
            update={"workers": config.workers.model_copy(update={"workers": workers})}
        )
    set_config(config)
    return config


def resolve_signature(selector: str, n: int | None = None) -> PrismSignature:
    """Signature from a catalog name (``O333_2``, ``O236_5,n`` with ``--n``) or nine labels."""
    from prism_covers.core.catalog import lookup, parse_signature_line

    if len(selector.split()) >= 9:
        return parse_signature_line(selector)
    return lookup(selector, n)


def load_reps(path: Path) -> list[PermRep]:
    """Read a rep file, failing on a missing or empty file."""
    from prism_covers.core.permutation import read_reps

    if not path.exists():
        fail(f"Rep file not found: {path}")
    reps = read_reps(path)
    if not reps:
        fail(f"No reps in {path}")
    return reps
