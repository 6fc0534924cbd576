"""CLI command for the hyperbolic embedding, matrices, cusp and volume."""

from __future__ import annotations

from pathlib import Path

import typer

from prism_covers.cli.utils import emit, fail, real, resolve_signature, run_config, yes_no
from prism_covers.utils.errors import PrismCoversError


def geometry_cmd(
    sig: str = typer.Option(..., "--sig", "-s", help="Signature name or nine labels"),
    n: int | None = typer.Option(None, "--n", help="Parameter for family rows"),
    matrices: bool = typer.Option(False, "--matrices", help="Relator residuals of the matrix rep"),
    cusp: bool = typer.Option(False, "--cusp", help="Maximal cusp height and volume"),
    volume: bool = typer.Option(False, "--volume", help="Integrate the prism volume"),
    degree: int | None = typer.Option(None, "--degree", "-d", help="Also report the volume of a cover"),
    tol: float | None = typer.Option(None, "--tol", help="Matrix residual tolerance"),
    config_file: Path | None = typer.Option(None, "--config", "-c", help="Run configuration YAML"),
) -> None:
    """
    Embed the prism in upper half-space and report derived quantities.

    Exits with status 1 if a matrix residual exceeds the tolerance.

    Example:
        prism-covers geometry --sig O333_1 --volume
    """
    from prism_covers.core.geometry import embed, maximal_cusp, published_matrix_checks, verify_matrix_rep
    from prism_covers.core.volume import prism_volume

    passed = True
    try:
        config = run_config(config_file, tol=tol)
        tolerances = config.tolerances
        signature = resolve_signature(sig, n)
        geom = embed(signature, tol=tolerances.root)

        emit("a3", geom.case)
        if geom.y1 is not None and geom.y2 is not None:
            emit("y1", real(geom.y1))
            emit("y2", real(geom.y2))
        if geom.z1 is not None and geom.z2 is not None:
            emit("z1", f"{real(geom.z1.real)} + {real(geom.z1.imag)}i")
            emit("z2", f"{real(geom.z2.real)} + {real(geom.z2.imag)}i")
        emit("X", real(geom.s))
        emit("Y", real(geom.t))
        emit("R", real(geom.r))

        if matrices:
            report = verify_matrix_rep(geom, signature, tol=tolerances.matrix)
            for residual in report.residuals:
                emit(f"residual.{residual.relator}", f"{residual.residual:.3g}")
            emit("max_residual", f"{report.max_residual:.3g}")
            published = published_matrix_checks(geom, signature)
            for check in published:
                emit(f"published.{check.relator}", f"{check.residual:.3g}")
            emit("matrices_ok", yes_no(report.passed))
            passed = report.passed

        if cusp:
            data = maximal_cusp(signature, geom)
            emit("cusp_height", real(data.height))
            emit("cusp_volume", real(data.cusp_volume) if data.cusp_volume is not None else "unsupported")

        if volume or degree is not None:
            result = prism_volume(signature, geom, tol=tolerances.quadrature)
            emit("X_lower", real(result.x_lower))
            emit("X_upper", real(result.x_upper))
            emit("volume", real(result.total))
            emit("volume_error", f"{result.error:.2g}")
            if degree is not None:
                emit("cover_volume", real(2 * degree * result.total))
    except PrismCoversError as e:
        fail(e)

    if not passed:
        raise typer.Exit(1)
