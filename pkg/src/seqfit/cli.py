"""Command-line front end: fit, difftable, triangle, and verify subcommands.

Exit codes: 0 success, 1 domain errors (non-polynomial data, inconsistency,
failed verification), 2 usage and input-parse errors.  All errors go to
stderr; results go to stdout.
"""
from __future__ import annotations

import json
import sys
from math import factorial

import click

from . import __version__
from .difftable import build_table, detect_degree
from .errors import BFileError, NotPolynomialError, ScalarParseError, SeqfitError
from .numeric import Rational, format_scalar, parse_scalar
from .oeis import crosscheck_triangle, fetch_bfile
from .oracle import EfdtParams, efdt_sum, vandermonde_fit
from .solver import AffineMap, fit
from .triangles import TriangleKind, awnt, build_triangle, mwnt, stirling2

_CONVENTIONS = {"auto": "auto", "start-zero": "start_zero", "start-one": "start_one"}


def _read_values(input_file) -> list[Rational]:
    """Parse newline- or comma-separated scalars, skipping '#' comment lines."""
    values = []
    for raw in input_file.read().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        for token in line.split(","):
            token = token.strip()
            if not token:
                continue
            try:
                values.append(parse_scalar(token))
            except ScalarParseError as exc:
                raise click.UsageError(f"input parse: {exc}")
    if not values:
        raise click.UsageError("input contains no values")
    return values


def _fail(stage: str, exc: Exception):
    click.echo(f"error ({stage}): {exc}", err=True)
    sys.exit(1)


@click.group()
@click.version_option(__version__, prog_name="seqfit")
def main():
    """Recover exact polynomial coefficients from a sequence of values.

    \b
    Examples:
      seqfit fit values.txt --start 0 --step 1        # grid 0, 1, 2, ...
      seqfit fit values.txt --start 1 --step 1 --convention start-one
      seqfit fit values.txt --start 3.3 --step 0.1    # arbitrary affine grid
    """


@main.command("fit")
@click.argument("input_file", type=click.File("r"), default="-")
@click.option("--start", default="0", help="First grid value x0 (default 0).")
@click.option("--step", default="1", help="Constant grid step h (default 1).")
@click.option(
    "--convention",
    type=click.Choice(sorted(_CONVENTIONS)),
    default="auto",
    help="Index convention; auto remaps the grid to indexes 0, 1, 2, ...",
)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.option("--min-witnesses", type=click.IntRange(min=2), default=2,
              help="Entries required in the constant row (default 2).")
def fit_cmd(input_file, start, step, convention, fmt, min_witnesses):
    """Fit the generating polynomial of the sequence in INPUT_FILE (or stdin)."""
    values = _read_values(input_file)
    try:
        x0, h = parse_scalar(start), parse_scalar(step)
    except ScalarParseError as exc:
        raise click.UsageError(str(exc))
    if h == 0:
        raise click.UsageError("--step must be nonzero")
    try:
        result = fit(values, AffineMap(x0=x0, h=h),
                     convention=_CONVENTIONS[convention], min_witnesses=min_witnesses)
    except SeqfitError as exc:
        _fail("fit", exc)
    if fmt == "json":
        payload = {
            "degree": result.degree_report.degree,
            "basis_g": {
                "x0": format_scalar(result.index_map.x0),
                "h": format_scalar(result.index_map.h),
            },
            "coefficients_g": [format_scalar(c) for c in result.poly_in_g.coefficients],
            "coefficients_x": [format_scalar(c) for c in result.poly_in_x.coefficients],
            "verified": True,
        }
        click.echo(json.dumps(payload, indent=2))
    else:
        click.echo(f"degree: {result.degree_report.degree}")
        click.echo("coefficients in g = (x - {0})/{1} (ascending power): {2}".format(
            format_scalar(result.index_map.x0, prefer_decimal=True),
            format_scalar(result.index_map.h, prefer_decimal=True),
            ", ".join(format_scalar(c, prefer_decimal=True)
                      for c in result.poly_in_g.coefficients),
        ))
        click.echo("coefficients in x (ascending power): " + ", ".join(
            format_scalar(c, prefer_decimal=True) for c in result.poly_in_x.coefficients))
        click.echo("verified against all input samples")


@main.command("difftable")
@click.argument("input_file", type=click.File("r"), default="-")
@click.option("--format", "fmt", type=click.Choice(["table", "json"]), default="table")
@click.option("--min-witnesses", type=click.IntRange(min=2), default=2)
def difftable_cmd(input_file, fmt, min_witnesses):
    """Print the difference table of the sequence in INPUT_FILE (or stdin)."""
    values = _read_values(input_file)
    table = build_table(values)
    degree = None
    try:
        report = detect_degree(table, min_witnesses=min_witnesses)
        degree = report.degree
    except (NotPolynomialError, SeqfitError):
        pass  # table output is still useful without a detected degree
    if fmt == "json":
        payload = {
            "rows": [[format_scalar(v) for v in row] for row in table.rows],
            "main_diagonal": [format_scalar(v) for v in table.main_diagonal],
            "degree": degree,
        }
        click.echo(json.dumps(payload, indent=2))
    else:
        for r, row in enumerate(table.rows):
            cells = "  ".join(format_scalar(v, prefer_decimal=True) for v in row)
            click.echo(f"row {r}: {cells}")
        if degree is not None:
            click.echo(f"degree: {degree}")
        else:
            click.echo("degree: not polynomial within observed window")


@main.command("triangle")
@click.option("--kind", type=click.Choice(["mwnt", "awnt", "stirling2"]), required=True)
@click.option("--rows", type=click.IntRange(min=1), required=True)
@click.option("--format", "fmt", type=click.Choice(["table", "json", "bfile"]), default="table")
def triangle_cmd(kind, rows, fmt):
    """Print a number triangle with the given number of rows."""
    triangle = build_triangle(TriangleKind(kind), rows)
    if fmt == "json":
        payload = {"kind": kind, "rows": [list(row) for row in triangle.rows]}
        click.echo(json.dumps(payload, indent=2))
    elif fmt == "bfile":
        index = 0
        for row in triangle.rows:
            for value in row:
                index += 1
                click.echo(f"{index} {value}")
    else:
        for row in triangle.rows:
            click.echo("  ".join(str(v) for v in row))


@main.command("verify")
@click.option("--self", "self_check", is_flag=True, help="Run the identity suites.")
@click.option("--oeis", "oeis_id", default=None, help="Cross-check against an OEIS b-file.")
@click.option("--online", is_flag=True, help="Fetch the b-file from oeis.org instead of fixtures.")
@click.option("--cells", type=click.IntRange(min=1), default=45)
def verify_cmd(self_check, oeis_id, online, cells):
    """Run self-verification suites and OEIS cross-checks."""
    if not self_check and oeis_id is None:
        raise click.UsageError("nothing to verify: pass --self and/or --oeis")
    failures = 0
    if self_check:
        failures += _run_self_checks()
    if oeis_id is not None:
        kind = {"A019538": TriangleKind.AWNT, "A028246": TriangleKind.MWNT}.get(oeis_id)
        if kind is None:
            raise click.UsageError(f"no triangle mapping for {oeis_id}")
        try:
            bfile = fetch_bfile(oeis_id, source="network" if online else "fixture")
            report = crosscheck_triangle(kind, bfile, cells)
        except BFileError as exc:
            _fail("oeis", exc)
        status = "PASS" if report.ok else "FAIL"
        click.echo(f"{status}: {kind.value} vs {oeis_id}: "
                   f"{report.matched}/{report.cells_checked} cells matched")
        if report.first_mismatch:
            n, k, ours, theirs = report.first_mismatch
            click.echo(f"  first mismatch at (n={n}, k={k}): ours {ours}, b-file {theirs}")
            failures += 1
    sys.exit(1 if failures else 0)


def _run_self_checks() -> int:
    """Identity suites across triangles, diagonals, and the EFDT sums."""
    import random

    rng = random.Random(19538)
    failures = 0

    def check(name, ok):
        nonlocal failures
        click.echo(f"{'PASS' if ok else 'FAIL'}: {name}")
        if not ok:
            failures += 1

    check("awnt = k! * stirling2 and mwnt = (k-1)! * stirling2, n,k <= 12",
          all(awnt(n, k) == factorial(k) * stirling2(n, k)
              and mwnt(n, k) == factorial(k - 1) * stirling2(n, k)
              for n in range(1, 13) for k in range(1, n + 1)))
    check("awnt = k * mwnt, n,k <= 12",
          all(awnt(n, k) == k * mwnt(n, k)
              for n in range(1, 13) for k in range(1, n + 1)))
    check("right-diagonal factorials and zeros above the diagonal",
          all(awnt(k, k) == factorial(k) and mwnt(k, k) == factorial(k - 1)
              for k in range(1, 13))
          and all(awnt(n, k) == 0 for k in range(1, 13) for n in range(1, k)))
    check("shifted-binomial power sum equals mwnt(q+1, k)",
          all(sum((-1) ** (k - i) * factorial(k - 1)
                  // (factorial(i - 1) * factorial(k - i)) * i**q
                  for i in range(1, k + 1)) == mwnt(q + 1, k)
              for q in range(0, 11) for k in range(1, 11)))

    def random_scalar():
        return Rational(rng.randint(-20, 20), rng.randint(1, 9))

    efdt_ok = True
    for _ in range(20):
        z, b = random_scalar(), random_scalar()
        for k in range(1, 11):
            for n in range(0, k):
                efdt_ok &= efdt_sum(EfdtParams(z=z, b=b, n=n, k=k)) == 0
            efdt_ok &= efdt_sum(EfdtParams(z=z, b=b, n=k, k=k)) == b**k * factorial(k)
    check("finite-difference sums: 0 below the diagonal, b^k * k! on it", efdt_ok)

    agree = True
    for _ in range(25):
        d = rng.randint(0, 6)
        coeffs = [Rational(rng.randint(-9, 9)) for _ in range(d + 1)]
        if coeffs[-1] == 0:
            coeffs[-1] = Rational(1)
        points = [(Rational(x), sum(c * x**j for j, c in enumerate(coeffs)))
                  for x in range(d + 3)]
        recovered = fit([y for _, y in points], AffineMap(Rational(0), Rational(1)))
        oracle = vandermonde_fit(points)
        agree &= recovered.poly_in_x.coefficients == oracle.coefficients
    check("fit agrees with the Vandermonde oracle on random polynomials", agree)

    return failures


if __name__ == "__main__":
    main()
