"""Command-line front door.

Exit codes are a stable contract for scripts: 0 success or solvable,
1 theorem-check failure, 2 usage or parse error, 3 unsolvable target.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from .documents import DocumentError, dump_puzzle, parse_puzzle, parse_target
from .gf2 import BitVec, DimensionError
from .generators import FAMILIES, from_template
from .solver import (
    ClickSet,
    Puzzle,
    apply_clicks,
    count_solutions,
    minimal_clicks,
)
from .theorem import RngSpec, sweep

__all__ = ["main"]

EXIT_THEOREM_FAILURE = 1
EXIT_USAGE = 2
EXIT_UNSOLVABLE = 3


def _die(message: str, code: int) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _load_puzzle(path: str) -> Puzzle:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        _die(str(exc), EXIT_USAGE)
    try:
        return parse_puzzle(text)
    except DocumentError as exc:
        _die(f"{path}: {exc}", EXIT_USAGE)
    raise AssertionError("unreachable")


def _int_list(_ctx, _param, value):
    if value is None:
        return None
    try:
        return tuple(int(part) for part in value.split(",") if part != "")
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {value!r}")


@click.group()
@click.version_option(package_name="lightslab")
def main() -> None:
    """Lights Out laboratory: generate, solve, and verify puzzles."""


@main.command()
@click.argument("family", type=click.Choice(FAMILIES))
@click.option("--dims", callback=_int_list, default=None,
              help="Comma-separated grid extents, e.g. 3,3.")
@click.option("--wrap", default="none",
              help="Torus wrap: none, both, or per-axis bits like 1,0.")
@click.option("--diagonal", is_flag=True,
              help="Moore neighborhood (include diagonal neighbors).")
@click.option("--self", "self_affect", type=click.Choice(["all", "none"]),
              default="all", show_default=True,
              help="Which vertices toggle themselves.")
@click.option("--rows", type=int, default=None,
              help="Row count for the triangular family.")
@click.option("--radius", type=int, default=None,
              help="Ring count for the hexagonal family.")
@click.option("--mask", callback=_int_list, default=None,
              help="Comma-separated vertex indices to keep.")
@click.option("--green", callback=_int_list, default=None,
              help="Comma-separated vertices that self-toggle (recolors).")
@click.option("-o", "--out", "out_path", required=True,
              type=click.Path(dir_okay=False, writable=True),
              help="Where to write the puzzle document.")
def gen(family, dims, wrap, diagonal, self_affect, rows, radius, mask, green,
        out_path) -> None:
    """Write an all-off puzzle document for a catalog family."""
    try:
        graph = from_template(
            family,
            dims=dims,
            wrap=wrap,
            diagonal=diagonal,
            self_affect=self_affect,
            rows=rows,
            radius=radius,
            mask=mask,
            green=green,
        )
    except ValueError as exc:
        _die(str(exc), EXIT_USAGE)
        return
    puzzle = Puzzle.all_off(graph)
    Path(out_path).write_text(dump_puzzle(puzzle))
    click.echo(f"{graph.n_vertices} vertices, {len(graph.edges)} edges")
    click.echo(f"wrote {out_path}")


@main.command()
@click.argument("puzzle_path", type=click.Path(dir_okay=False))
@click.option("--target", default="all-off", show_default=True,
              help="all-off, all-on, corollary, or an explicit 0/1 string.")
@click.option("--minimal", is_flag=True,
              help="Enumerate the solution coset for a minimum-weight set.")
@click.option("--nullity-budget", type=int, default=20, show_default=True,
              help="Largest nullity --minimal will enumerate (2^k sets).")
def solve(puzzle_path, target, minimal, nullity_budget) -> None:
    """Decide solvability and print a click set reaching the target."""
    puzzle = _load_puzzle(puzzle_path)
    try:
        goal = parse_target(puzzle.graph, target)
    except DocumentError as exc:
        _die(str(exc), EXIT_USAGE)
        return
    budget = nullity_budget if minimal else 0
    try:
        result = minimal_clicks(puzzle, goal, nullity_budget=budget)
    except DimensionError as exc:
        _die(str(exc), EXIT_USAGE)
        return
    if result is None:
        click.echo("UNSOLVABLE")
        sys.exit(EXIT_UNSOLVABLE)
    clicks, is_minimal = result
    counts = count_solutions(puzzle, goal)
    click.echo("SOLVABLE")
    click.echo(f"clicks {clicks.to01()}")
    click.echo(f"weight {clicks.weight}")
    click.echo(f"nullity {counts.log2}")
    click.echo(f"minimal {'true' if is_minimal else 'false'}")


@main.command()
@click.argument("puzzle_path", type=click.Path(dir_okay=False))
@click.argument("clicks")
@click.option("-o", "--out", "out_path", required=True,
              type=click.Path(dir_okay=False, writable=True),
              help="Where to write the post-click document.")
def apply(puzzle_path, clicks, out_path) -> None:
    """Apply a click script (0/1 string, inline or a file holding one)."""
    puzzle = _load_puzzle(puzzle_path)
    script = clicks
    if Path(clicks).is_file():
        script = Path(clicks).read_text().strip()
    n = puzzle.graph.n_vertices
    if len(script) != n or any(ch not in "01" for ch in script):
        _die(
            f"clicks must be a 0/1 string of length {n}, got {script!r}",
            EXIT_USAGE,
        )
    after = apply_clicks(puzzle, ClickSet(clicks=BitVec.from01(script)))
    Path(out_path).write_text(dump_puzzle(after))
    click.echo(f"on-count before {puzzle.state.weight}")
    click.echo(f"on-count after {after.state.weight}")
    click.echo(f"wrote {out_path}")


@main.command("verify-theorem")
@click.option("--n-max", type=int, default=12, show_default=True,
              help="Largest matrix dimension to sweep.")
@click.option("--trials", type=int, default=50, show_default=True,
              help="Matrices per dimension.")
@click.option("--seed", type=int, default=0, show_default=True,
              help="Base seed; trials derive child seeds from it.")
@click.option("--oracle-max", type=int, default=0, show_default=True,
              help="Cross-check sizes up to this n against brute force.")
@click.option("--records", is_flag=True,
              help="Print one machine-readable line per instance.")
def verify_theorem(n_max, trials, seed, oracle_max, records) -> None:
    """Check diagonal reachability on random symmetric matrices."""
    if n_max < 1 or trials < 1:
        _die("--n-max and --trials must be >= 1", EXIT_USAGE)
    report = sweep(n_max, trials, RngSpec(seed=seed), oracle_max=oracle_max)
    if records:
        for line in report.machine_lines():
            click.echo(line)
    click.echo(report.summary())
    if report.failures or report.oracle_disagreements:
        sys.exit(EXIT_THEOREM_FAILURE)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--state-dir", type=click.Path(file_okay=False), default=None,
              help="Snapshot session documents into this directory.")
@click.option("--ui-dir", type=click.Path(exists=True, file_okay=False),
              default=None, help="Serve a static UI bundle under /ui.")
def serve(host, port, state_dir, ui_dir) -> None:
    """Run the HTTP session service until interrupted."""
    import uvicorn

    from .service import create_app

    app = create_app(state_dir=state_dir, ui_dir=ui_dir)
    try:
        uvicorn.run(app, host=host, port=port, log_level="info")
    except OSError as exc:
        _die(f"cannot bind {host}:{port}: {exc}", EXIT_USAGE)


if __name__ == "__main__":
    main()
