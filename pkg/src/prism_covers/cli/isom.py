"""CLI command for isometry search and intertwining checks between covers."""

from __future__ import annotations

from pathlib import Path

import typer

from prism_covers.cli.utils import emit, fail, load_reps, resolve_signature, yes_no
from prism_covers.models.common import Orientation
from prism_covers.models.rep import Permutation
from prism_covers.utils.errors import PrismCoversError


def isom_cmd(
    first: Path = typer.Option(..., "--from", help="Rep file of cover A (first rep is used)"),
    second: Path = typer.Option(..., "--to", help="Rep file of cover B (first rep is used)"),
    sig: str | None = typer.Option(None, "--sig", "-s", help="Signature of both covers, for the search"),
    orientation: Orientation = typer.Option(
        Orientation.PRESERVING,
        "--orientation",
        case_sensitive=False,
        help="preserving or reversing",
    ),
    verify: str | None = typer.Option(
        None,
        "--verify",
        help="Generator map to check, e.g. 'y=z+,z=y+,w=w+'",
    ),
    phi: str | None = typer.Option(
        None,
        "--phi",
        help="Check this cell map (images of 0..n-1) instead of searching",
    ),
    n: int | None = typer.Option(None, "--n", help="Parameter for family rows"),
) -> None:
    """
    Find all isometries from cover A to cover B, or check a given map.

    With --verify, exits with status 1 unless some isometry (or the map
    given with --phi) intertwines the generator map.

    Example:
        prism-covers isom --sig O333_2 --from sigma_2_1_prime.rep --to sigma_2_1.rep --orientation reversing
    """
    from prism_covers.core.isometry import find_isometries, parse_genmap, verify_intertwine

    try:
        rep_a = load_reps(first)[0]
        rep_b = load_reps(second)[0]
        if phi is not None:
            if verify is None:
                fail("--phi needs --verify")
            found = [Permutation(images=tuple(int(v) for v in phi.split()))]
        else:
            if sig is None:
                fail("Give --sig to search for isometries")
            signature = resolve_signature(sig, n)
            found = find_isometries(signature, rep_a, signature, rep_b, orientation)
            emit("isometries", len(found))
            for i, candidate in enumerate(found):
                emit(f"isometry.{i}", " ".join(str(p) for p in candidate.images))
        genmap = parse_genmap(verify) if verify is not None else None
    except PrismCoversError as e:
        fail(e)
    except ValueError as e:
        fail(str(e).splitlines()[0])

    if genmap is not None:
        hits = [verify_intertwine(candidate, rep_a, rep_b, genmap) for candidate in found]
        for i, ok in enumerate(hits):
            emit(f"isometry.{i}.intertwines", yes_no(ok))
        emit("verified", yes_no(any(hits)))
        if not any(hits):
            raise typer.Exit(1)
