"""
Main entry point for the Scoring Games Calculator.
"""

from enum import Enum
from pathlib import Path
from typing import Optional

import typer

from calculator.repl import ScoringGamesCalculator


class OutputStyle(str, Enum):
    literal = "literal"
    pretty = "pretty"


app = typer.Typer(add_completion=False, help="Calculator for guaranteed scoring games.")


@app.command()
def main(
    batch: Optional[Path] = typer.Option(
        None, "--batch", exists=True, dir_okay=False, readable=True,
        help="Run the commands in FILE instead of starting the REPL.",
    ),
    output_format: Optional[OutputStyle] = typer.Option(
        None, "--format", help="How games are printed.",
    ),
    debug: bool = typer.Option(False, "--debug", help="Log engine steps to stderr."),
):
    """Start the calculator."""
    calculator = ScoringGamesCalculator(
        style=output_format.value if output_format else None,
        debug=debug,
    )
    if batch is not None:
        raise typer.Exit(code=calculator.run_batch(batch))
    calculator.run()


if __name__ == "__main__":
    app()
