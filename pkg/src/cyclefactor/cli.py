"""Command-line interface.

Exit codes: 0 success, 1 invalid input, 2 out of proven range, 3 internal error.
"""

from __future__ import annotations

import json
import math
import random
import sys
from dataclasses import dataclass

import click

from . import bounds, oracle
from .calculus import ConstructionError, InfeasibleError
from .engine import Certificate, OutOfRangeError, factor
from .perm import (
    Cycle,
    Permutation,
    PermutationError,
    format_perm,
    is_even,
    parse_cycle,
    parse_perm,
    product,
)

SCHEMA_VERSION = 1

EXIT_OK, EXIT_INPUT, EXIT_RANGE, EXIT_INTERNAL = 0, 1, 2, 3


def random_even(n: int, seed: int) -> Permutation:
    """Seeded shuffle of 1..n, drawn again until the result is even."""
    rng = random.Random(seed)
    while True:
        images = list(range(1, n + 1))
        rng.shuffle(images)
        p = Permutation(images)
        if is_even(p):
            return p


def to_document(cert: Certificate) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "n": cert.n,
        "k": cert.k,
        "l": cert.l,
        "sigma": format_perm(cert.target),
        "factors": [str(c) for c in cert.factors],
        "provenance": list(cert.provenance),
    }


@dataclass(frozen=True)
class Claim:
    """A certificate as read from a document, not yet trusted."""

    n: int
    k: int
    l: int
    target: Permutation
    factors: tuple[Cycle, ...]
    provenance: tuple[str, ...] = ()


def from_document(doc: dict) -> Claim:
    """Read a certificate document; raises ValueError on malformed input."""
    try:
        if doc["schema"] != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema version {doc['schema']!r}")
        n, k, l = int(doc["n"]), int(doc["k"]), int(doc["l"])
        target = parse_perm(doc["sigma"], n)
        factors = tuple(parse_cycle(text, n) for text in doc["factors"])
        provenance = tuple(doc.get("provenance", ()))
    except KeyError as e:
        raise ValueError(f"missing field {e.args[0]!r}") from None
    except (TypeError, PermutationError) as e:
        raise ValueError(str(e)) from None
    return Claim(n, k, l, target, factors, provenance)


def _fail(code: int, message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


@click.group()
@click.version_option(package_name="cyclefactor")
def main() -> None:
    """Factor even permutations into products of l-cycles, with checkable certificates."""


@main.command("factor")
@click.option("--n", "n", type=int, required=True, help="Degree.")
@click.option("--k", "k", type=int, required=True, help="Number of factors.")
@click.option("--l", "l", type=int, required=True, help="Cycle length of each factor.")
@click.option("--sigma", help='Target in cycle notation, e.g. "(1 2 3)(4 5)".')
@click.option("--random", "seed", type=int, help="Seed for a random even target.")
@click.option("--json", "as_json", is_flag=True, help="Print a JSON certificate document.")
def cmd_factor(n: int, k: int, l: int, sigma: str | None, seed: int | None, as_json: bool) -> None:
    """Write sigma as a product of k l-cycles."""
    if (sigma is None) == (seed is None):
        _fail(EXIT_INPUT, "give exactly one of --sigma and --random")
    try:
        if seed is not None:
            click.echo(f"seed: {seed}", err=True)
            target = random_even(n, seed)
        else:
            target = parse_perm(sigma, n)
        cert = factor(target, k, l, n)
    except OutOfRangeError as e:
        _fail(EXIT_RANGE, str(e))
    except (InfeasibleError, PermutationError) as e:
        _fail(EXIT_INPUT, str(e))
    except ConstructionError as e:
        _fail(EXIT_INTERNAL, f"internal error: {e}")
    if as_json:
        click.echo(json.dumps(to_document(cert), indent=2))
        return
    click.echo(f"sigma = {format_perm(cert.target)}  (n={cert.n})")
    click.echo(f"{cert.k} {cert.l}-cycles: " + " ".join(str(c) for c in cert.factors))
    for tag in cert.provenance:
        click.echo(f"  - {tag}")


@main.command("verify")
@click.option("--cert", "path", type=click.Path(exists=True, dir_okay=False), required=True)
def cmd_verify(path: str) -> None:
    """Check a JSON certificate document by recomposition."""
    try:
        with open(path) as fh:
            cert = from_document(json.load(fh))
    except (ValueError, OSError) as e:
        _fail(EXIT_INPUT, f"cannot read certificate: {e}")
    verdict = oracle.verify(cert)
    if verdict:
        click.echo("ok")
        return
    click.echo(f"mismatch: {verdict.reason}")
    click.echo(f"  product: {format_perm(product(cert.factors, cert.n))}")
    click.echo(f"  target:  {format_perm(cert.target)}")
    sys.exit(EXIT_INPUT)


@main.command("bound")
@click.option("--k", "k", type=int, required=True)
@click.option("--l", "l", type=int, required=True)
def cmd_bound(k: int, l: int) -> None:
    """Upper bound and exact value of n(k, l) where known."""
    try:
        rep = bounds.upper_bound(k, l)
    except bounds.UndefinedParameters as e:
        _fail(EXIT_INPUT, str(e))
    exact = "unknown" if rep.exact is None else str(rep.exact)
    line = f"n1={rep.n1} upper={rep.upper} exact={exact}"
    if rep.provenance is not None:
        line += f" ({rep.provenance})"
    click.echo(line)


@main.command("oracle")
@click.option("--n", "n", type=int, required=True)
@click.option("--l", "l", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
def cmd_oracle(n: int, l: int, k: int) -> None:
    """Exhaustively decide whether every even permutation of n points is a product of k l-cycles."""
    try:
        rep = oracle.class_power_reach(n, l, k)
    except oracle.OracleGuardError as e:
        _fail(EXIT_INPUT, str(e))
    click.echo(f"covered: {'yes' if rep.covered else 'no'}")
    click.echo(f"reached: {rep.reached_count} of {math.factorial(n) // 2} even permutations")
    if rep.witness_missing is not None:
        click.echo(f"missing: {format_perm(rep.witness_missing)}")


@main.command("table")
@click.option("--kmax", type=int, default=4, show_default=True)
@click.option("--lmax", type=int, default=6, show_default=True)
@click.option("--nmax", type=int, default=9, show_default=True)
@click.option("--csv", "as_csv", is_flag=True, help="Comma-separated output.")
def cmd_table(kmax: int, lmax: int, nmax: int, as_csv: bool) -> None:
    """Oracle values of n(k, l) next to the closed forms."""
    try:
        rows = oracle.table(range(2, kmax + 1), range(2, lmax + 1), nmax)
    except oracle.OracleGuardError as e:
        _fail(EXIT_INPUT, str(e))
    click.echo(oracle.format_table(rows, as_csv), nl=False)


if __name__ == "__main__":
    main()
