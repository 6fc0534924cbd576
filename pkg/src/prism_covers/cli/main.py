"""Main CLI entry point for prism-covers."""

import typer
from rich.console import Console

from prism_covers.cli import (
    catalog,
    check,
    enumeration,
    geometry,
    isom,
    pipeline,
    prefilter,
    spine,
    surface,
    triangulate,
)

app = typer.Typer(
    name="prism-covers",
    help="Certify manifold covers of one-cusped hyperbolic prism orbifolds.",
    no_args_is_help=True,
    rich_markup_mode="rich",
)

console = Console()

# Register subcommands
app.command(name="catalog")(catalog.catalog_cmd)
app.command(name="check")(check.check_cmd)
app.command(name="spine")(spine.spine_cmd)
app.command(name="surface")(surface.surface_cmd)
app.command(name="triangulate")(triangulate.triangulate_cmd)
app.command(name="geometry")(geometry.geometry_cmd)
app.command(name="prefilter")(prefilter.prefilter_cmd)
app.command(name="enumerate")(enumeration.enumerate_cmd)
app.command(name="pipeline")(pipeline.pipeline_cmd)
app.command(name="isom")(isom.isom_cmd)


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Enable verbose output"),
    quiet: bool = typer.Option(False, "--quiet", "-q", help="Suppress non-essential output"),
    structured: bool = typer.Option(False, "--structured", help="Timestamped log lines with context fields"),
) -> None:
    """
    prism-covers: certify manifold covers of one-cusped hyperbolic prism orbifolds.

    - [bold]catalog[/bold]: List and validate prism signatures
    - [bold]check[/bold]: Validate reps, manifold and cusp tests, first homology
    - [bold]spine[/bold]: Spine cell counts and presentation
    - [bold]surface[/bold]: Totally geodesic surface report
    - [bold]triangulate[/bold]: Export an ideal triangulation
    - [bold]geometry[/bold]: Embedding, matrix residuals, cusp and volume
    - [bold]prefilter[/bold]: Knot-complement obstruction table
    - [bold]enumerate[/bold]: Low-index subgroup enumeration
    - [bold]pipeline[/bold]: Enumerate and filter covers
    - [bold]isom[/bold]: Isometry search between covers
    """
    from prism_covers.utils.logging import configure_logging, level_for

    configure_logging(level=level_for(verbose, quiet), structured=structured)


@app.command()
def version() -> None:
    """Show the prism-covers version."""
    from prism_covers import __version__

    console.print(f"prism-covers version {__version__}")


if __name__ == "__main__":
    app()
