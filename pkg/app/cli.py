"""
Command-line frontend.

Exit codes: 0 accepted/complete, 1 legitimate negative, 2 usage error.
Results go to stdout, diagnostics to stderr.
"""
import csv
import json
import logging
import sys
from functools import wraps

import click

from app.catalog import (agreement_sweep, brute_force_xx, brute_force_xy, check_t11, check_t13,
                         classify_xx, gen_c51, gen_c52, structure_report)
from app.certificates import EXPORT_FORMATS, build_certificate, entry_row, export, params_row, tsv
from app.dsrg_verify import feasible_params
from app.errors import DsrgError
from app.models import DihedrantSpec
from app.residue_multiset import ResidueMultiset
from app.spectrum import fourier, gamma_data, two_valued_solutions
from app.utils import format_residues, parse_residues
from config import Config

logger = logging.getLogger(__name__)


def handle_errors(f):
    """Map library errors onto the exit-code contract."""
    @wraps(f)
    def decorated_function(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except DsrgError as exc:
            if exc.usage:
                raise click.UsageError(exc.message)
            click.echo(json.dumps(exc.to_dict()), err=True)
            sys.exit(1)
    return decorated_function


def emit(rows, as_json, payload):
    if as_json:
        click.echo(json.dumps(payload, indent=2))
    elif rows:
        click.echo(tsv(rows))


def threads_option(f):
    return click.option('--threads', type=click.IntRange(min=1), default=None,
                        help='Worker processes for exhaustive sweeps (default DSRG_THREADS).')(f)


@click.group()
@click.option('-v', '--verbose', is_flag=True, help='Log at DEBUG level on stderr.')
def cli(verbose):
    """Directed strongly regular dihedrants: verify, classify, construct, export."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else Config.DSRG_LOG_LEVEL,
        stream=sys.stderr,
        format='%(levelname)s %(name)s: %(message)s',
    )
    logging.getLogger().setLevel(logging.DEBUG if verbose else Config.DSRG_LOG_LEVEL)


# ==================== Verification ====================

@cli.command()
@click.option('--n', 'n', type=click.IntRange(min=1), required=True)
@click.option('--x', 'x', default='', help='Comma-separated residues of X.')
@click.option('--y', 'y', default='', help='Comma-separated residues of Y.')
@click.option('--json', 'as_json', is_flag=True)
@handle_errors
def verify(n, x, y, as_json):
    """Verify Dih(n, X, Y) and print its certificate."""
    spec = DihedrantSpec(n, parse_residues(x, n), parse_residues(y, n))
    certificate = build_certificate(spec)
    p = certificate.params
    row = (n, format_residues(spec.X), format_residues(spec.Y), *params_row(p), int(p.genuine))
    emit([row], as_json, certificate.to_dict())
    if not p.genuine:
        sys.exit(1)


@cli.command('export')
@click.option('--n', 'n', type=click.IntRange(min=1), required=True)
@click.option('--x', 'x', default='')
@click.option('--y', 'y', default='')
@click.option('--format', 'fmt', type=click.Choice(EXPORT_FORMATS), default='dot')
@click.option('--output', type=click.File('w'), default='-')
@handle_errors
def export_cmd(n, x, y, fmt, output):
    """Write the digraph as DOT or as a JSON adjacency list."""
    spec = DihedrantSpec(n, parse_residues(x, n), parse_residues(y, n))
    document = export(spec, fmt)
    output.write(document if fmt == 'dot' else json.dumps(document, indent=2))
    output.write('\n')


# ==================== Parameters ====================

@cli.command()
@click.option('--vertices', type=click.IntRange(min=2), required=True)
@click.option('--json', 'as_json', is_flag=True)
@handle_errors
def feasible(vertices, as_json):
    """List feasible genuine parameter sets on N vertices."""
    found = feasible_params(vertices)
    emit([params_row(p) for p in found], as_json, [p.to_dict() for p in found])
    if not found:
        sys.exit(1)


@cli.command()
@click.option('--n', 'n', type=click.IntRange(min=1), required=True)
@click.option('--set', 'residues', required=True, help='Multiset with repeats, e.g. 1,2,2,3.')
@click.option('--json', 'as_json', is_flag=True)
@handle_errors
def spectrum(n, residues, as_json):
    """Fourier spectrum of a residue multiset as CSV rows z,re,im,snapped."""
    table = fourier(ResidueMultiset.from_elements(n, parse_residues(residues, n, allow_repeats=True)))
    if as_json:
        click.echo(json.dumps(table.to_dict(), indent=2))
        return
    writer = csv.writer(sys.stdout, lineterminator='\n')
    writer.writerow(['z', 're', 'im', 'snapped'])
    for z, re, im, snapped in table.rows():
        writer.writerow([z, f'{re:.6f}', f'{im:.6f}', '' if snapped is None else snapped])


@cli.command('two-valued')
@click.option('--n', 'n', type=click.IntRange(2, 12), required=True)
@click.option('--c', 'c', type=int, required=True, help='The nonzero spectrum value, e.g. --c=-2.')
@click.option('--json', 'as_json', is_flag=True)
@handle_errors
def two_valued(n, c, as_json):
    """Multisets U (0 not in U, multiplicities <= 2) with nonprincipal spectrum in {0, c}."""
    solutions = two_valued_solutions(n, c)
    data = [gamma_data(U, c) for U in solutions]
    rows = [(format_residues(U), format_residues(d.gamma), d.delta, int(d.checks_pass))
            for U, d in zip(solutions, data)]
    emit(rows, as_json, [{'U': list(U), **d.to_dict()} for U, d in zip(solutions, data)])
    if not solutions:
        sys.exit(1)


# ==================== Classification ====================

@cli.command()
@click.option('--n', 'n', type=click.IntRange(min=3), required=True)
@click.option('--json', 'as_json', is_flag=True)
@handle_errors
def classify(n, as_json):
    """All X with Dih(n, X, X) a genuine DSRG, from the coset classification."""
    entries = classify_xx(n)
    emit([entry_row(e) for e in entries], as_json, [e.to_dict() for e in entries])
    if not entries:
        sys.exit(1)


@cli.command()
@click.option('--n', 'n', type=int, required=True)
@click.option('--general-y', is_flag=True, help='Search all (X, Y) instead of Y = X.')
@click.option('--json', 'as_json', is_flag=True)
@threads_option
@handle_errors
def bruteforce(n, general_y, as_json, threads):
    """Exhaustive matrix-oracle search."""
    if general_y:
        found = brute_force_xy(n, threads)
        rows = [(format_residues(X), format_residues(Y), *params_row(p)) for X, Y, p in found]
        payload = [{'X': list(X), 'Y': list(Y), 'params': p.to_dict()} for X, Y, p in found]
    else:
        found = brute_force_xx(n, threads)
        rows = [(format_residues(X), *params_row(p)) for X, p in found]
        payload = [{'X': list(X), 'params': p.to_dict()} for X, p in found]
    emit(rows, as_json, payload)
    if not found:
        sys.exit(1)


@cli.command()
@click.option('--n', 'n', type=click.IntRange(min=2), required=True)
@threads_option
@handle_errors
def agree(n, threads):
    """Compare the matrix and group-ring verifiers on every Dih(n, X, X)."""
    summary = agreement_sweep(n, threads)
    click.echo(tsv([(n, summary.subsets, len(summary.accepted), len(summary.disagreements),
                     len(summary.spectral_failures))]))
    if summary.disagreements or summary.spectral_failures:
        sys.exit(1)


# ==================== Constructions ====================

@cli.group()
def construct():
    """Build or check dihedrants from the coset constructions and theorems."""


@construct.command('c51')
@click.option('--n', 'n', type=int, required=True)
@click.option('--v', 'v', type=int, required=True)
@click.option('--t', 't', required=True, help='Transversal T of the pairs {j, v-j}.')
@click.option('--json', 'as_json', is_flag=True)
@handle_errors
def construct_c51(n, v, t, as_json):
    spec, params = gen_c51(n, v, parse_residues(t))
    entry = structure_report(n, spec.X, params)
    emit([entry_row(entry)], as_json, entry.to_dict())


@construct.command('c52')
@click.option('--n', 'n', type=int, required=True)
@click.option('--v', 'v', type=int, required=True)
@click.option('--t', 't', required=True, help="T' inside {1..2v-1}.")
@click.option('--json', 'as_json', is_flag=True)
@handle_errors
def construct_c52(n, v, t, as_json):
    spec, params = gen_c52(n, v, parse_residues(t))
    entry = structure_report(n, spec.X, params)
    emit([entry_row(entry)], as_json, entry.to_dict())


@construct.command('t11')
@click.option('--n', 'n', type=int, required=True)
@click.option('--x', 'x', required=True)
@click.option('--y', 'y', required=True)
@click.option('--epsilon', type=click.IntRange(0, 1), default=0)
@click.option('--b-shift', type=int, default=0, help='Replace Y by x^b Y before checking the graph.')
@click.option('--json', 'as_json', is_flag=True)
@handle_errors
def construct_t11(n, x, y, epsilon, b_shift, as_json):
    """Odd n: check the two group-ring conditions and confirm with the oracle."""
    spec, params = check_t11(n, parse_residues(x, n), parse_residues(y, n), epsilon, b_shift)
    row = (n, format_residues(spec.X), format_residues(spec.Y), *params_row(params))
    emit([row], as_json, {'spec': spec.to_dict(), 'params': params.to_dict()})


@construct.command('t13')
@click.option('--n', 'n', type=int, required=True)
@click.option('--x', 'x', required=True)
@click.option('--y', 'y', required=True)
@click.option('--json', 'as_json', is_flag=True)
@handle_errors
def construct_t13(n, x, y, as_json):
    """Even n: check the involution conditions; print printed vs. oracle parameters."""
    report = check_t13(n, parse_residues(x, n), parse_residues(y, n))
    oracle = params_row(report.oracle) if report.oracle else ('NotDsrg', format_residues(report.witness))
    emit([('printed', *params_row(report.printed)), ('oracle', *oracle)], as_json, report.to_dict())
    if not report.matches:
        sys.exit(1)


# ==================== Server ====================

@cli.command()
@click.option('--host', default='127.0.0.1')
@click.option('--port', type=int, default=5000)
def serve(host, port):
    """Serve the JSON API with the development server."""
    from app import create_app
    create_app().run(host=host, port=port)

