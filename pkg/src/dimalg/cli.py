"""One-shot command line front end.

Exit codes: 0 success, 1 axiom or dimension failure, 2 input error.
"""

import sys

import click

from .errors import DimAlgError, DimensionMismatch, ExprSyntaxError, InputFormatError
from .poisson import coisotrope_check, poisson_axiom_report, poisson_reduce
from .registry import (
    convert as convert_quantity,
    evaluate,
    format_quantity,
    registry_load,
)
from .structure import check_structure, load_poisson, parse_poly

EXIT_FAILURE = 1
EXIT_INPUT = 2


def _fail(code: int, message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _load_registry(path):
    if path is None:
        _fail(EXIT_INPUT, "a registry is required (--registry PATH)")
    try:
        return registry_load(path)
    except InputFormatError as exc:
        _fail(EXIT_INPUT, str(exc))


@click.group()
def main():
    """Exact dimensioned-quantity calculator and structure checker."""


@main.command("eval")
@click.argument("expression")
@click.option("--registry", "registry_path", type=click.Path(), help="registry JSON")
@click.option("--digits", default=4, show_default=True, help="significant digits")
@click.option("--exact", is_flag=True, help="print the exact rational")
@click.option("--to", "target", default=None, help="convert the result to this unit")
def eval_cmd(expression, registry_path, digits, exact, target):
    """Evaluate a quantity expression."""
    if digits < 1:
        _fail(EXIT_INPUT, "digits must be >= 1")
    reg = _load_registry(registry_path)
    try:
        q = evaluate(expression, reg)
        if target is not None:
            q = convert_quantity(q, target, reg)
    except ExprSyntaxError as exc:
        _fail(EXIT_INPUT, str(exc))
    except DimensionMismatch as exc:
        _fail(EXIT_FAILURE, str(exc))
    click.echo(format_quantity(q, reg, digits=digits, exact=exact))


@main.command("convert")
@click.argument("expression")
@click.argument("target")
@click.option("--registry", "registry_path", type=click.Path(), help="registry JSON")
@click.option("--digits", default=4, show_default=True)
@click.option("--exact", is_flag=True)
def convert_cmd(expression, target, registry_path, digits, exact):
    """Evaluate an expression and re-express it in TARGET units."""
    if digits < 1:
        _fail(EXIT_INPUT, "digits must be >= 1")
    reg = _load_registry(registry_path)
    try:
        q = convert_quantity(evaluate(expression, reg), target, reg)
    except ExprSyntaxError as exc:
        _fail(EXIT_INPUT, str(exc))
    except DimensionMismatch as exc:
        _fail(EXIT_FAILURE, str(exc))
    click.echo(format_quantity(q, reg, digits=digits, exact=exact))


@main.group("registry")
def registry_group():
    """Registry utilities."""


@registry_group.command("validate")
@click.argument("path", type=click.Path())
def registry_validate(path):
    """Validate a registry file and summarize it."""
    try:
        reg = registry_load(path)
    except InputFormatError as exc:
        _fail(EXIT_INPUT, str(exc))
    click.echo(f"ok: {len(reg.base)} base dimensions ({', '.join(reg.base)}), "
               f"{len(reg.units)} units")


@main.command("check")
@click.argument("path", type=click.Path())
def check_cmd(path):
    """Run the axiom suite on a declared finite structure."""
    try:
        code, lines = check_structure(path)
    except InputFormatError as exc:
        _fail(EXIT_INPUT, str(exc))
    for line in lines:
        click.echo(line)
    sys.exit(code)


@main.group("poisson")
def poisson_group():
    """Dimensioned Poisson algebra commands (JSON descriptions)."""


def _load_poisson(path, validate):
    try:
        return load_poisson(path, validate=validate)
    except InputFormatError as exc:
        _fail(EXIT_INPUT, str(exc))
    except DimAlgError as exc:
        _fail(EXIT_FAILURE, str(exc))


@poisson_group.command("check")
@click.argument("path", type=click.Path())
def poisson_check(path):
    """Axiom suite (plus coisotrope check when an ideal is declared)."""
    p, ideal = _load_poisson(path, validate=False)
    rep = poisson_axiom_report(p)
    if ideal:
        rep = rep.merged(coisotrope_check(p, ideal))
    for line in rep.lines():
        click.echo(line)
    sys.exit(0 if rep.ok else EXIT_FAILURE)


@poisson_group.command("bracket")
@click.argument("path", type=click.Path())
@click.argument("left")
@click.argument("right")
def poisson_bracket_cmd(path, left, right):
    """Print the bracket of two polynomial expressions."""
    p, _ = _load_poisson(path, validate=True)
    try:
        f = parse_poly(p.ring, left)
        g = parse_poly(p.ring, right)
    except (ExprSyntaxError, DimAlgError) as exc:
        _fail(EXIT_INPUT, str(exc))
    try:
        out = p.bracket(f, g)
    except DimensionMismatch as exc:
        _fail(EXIT_FAILURE, str(exc))
    click.echo(p.ring.show(out))


@poisson_group.command("reduce")
@click.argument("path", type=click.Path())
@click.option("--cutoff", default=6, show_default=True, help="degree cutoff")
def poisson_reduce_cmd(path, cutoff):
    """Reduce by the declared coisotrope and list the surviving basis."""
    if cutoff < 1:
        _fail(EXIT_INPUT, "cutoff must be >= 1")
    p, ideal = _load_poisson(path, validate=True)
    if not ideal:
        _fail(EXIT_INPUT, "the description declares no ideal to reduce by")
    try:
        reduced = poisson_reduce(p, ideal, cutoff)
    except DimAlgError as exc:
        _fail(EXIT_FAILURE, str(exc))
    click.echo(f"reduced basis up to degree {cutoff} "
               f"({len(reduced.basis)} classes):")
    for b in reduced.basis:
        click.echo(f"  {p.ring.show(b)} @ {b.dim}")
    rep = reduced.axiom_report()
    for line in rep.lines():
        click.echo(line)
    sys.exit(0 if rep.ok else EXIT_FAILURE)


if __name__ == "__main__":
    main()
