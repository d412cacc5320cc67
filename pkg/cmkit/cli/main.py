"""cmkit command line.

Exit codes:
    eval       0 ok, 2 invalid index or flags, 3 evaluation failure
    verify     0 every clause passes, 1 some clause fails, 2 bad flags or config,
               3 inconclusive or engine error
    sharpness  0 witness found, 1 no witness, 2 bad flags
    kernels    0 ok, 2 bad flags, 3 engine error

Data goes to stdout (or --out); diagnostics go to stderr.
"""

from enum import Enum
from pathlib import Path
from typing import Optional

import typer
from pydantic import ValidationError

from cmkit import __version__
from cmkit.exceptions import CMKitError, NoWitnessError
from cmkit.family import FamilyIndex, FamilyParams, f_derivative
from cmkit.polygamma.engine import check_argument
from cmkit.verifier import sharpness_probe, theorem_suite

from .kernels import kernels_app
from .output import (
    cells_frame,
    dumps,
    fail,
    records_frame,
    report_document,
    write_csv,
    write_json,
)
from .settings import RunConfig, load_run_config

app = typer.Typer(
    name='cmkit',
    help=(
        'Complete-monotonicity checks for polygamma-difference families.\n\n'
        'Exit codes: 0=ok, 1=clause fails or no witness, 2=bad flags, 3=engine error.'
    ),
    add_completion=False,
    no_args_is_help=True,
)
app.add_typer(kernels_app, name='kernels')


class OutputFormat(str, Enum):
    json = 'json'
    csv = 'csv'


class Direction(str, Enum):
    above = 'above'
    below = 'below'


def _version_callback(value: bool) -> None:
    if value:
        typer.echo(f'cmkit {__version__}')
        raise typer.Exit()


@app.callback()
def main(
    version: bool = typer.Option(
        False, '--version', help='Show version and exit.', callback=_version_callback, is_eager=True
    ),
) -> None:
    """Complete-monotonicity checks for polygamma-difference families."""


@app.command('eval')
def eval_command(
    p: int = typer.Option(..., '--p'),
    m: int = typer.Option(..., '--m'),
    n: int = typer.Option(..., '--n'),
    q: int = typer.Option(..., '--q'),
    s: float = typer.Option(..., '--s'),
    c: float = typer.Option(..., '--c'),
    x: list[float] = typer.Option(..., '--x', help='Evaluation point; repeatable.'),
    deriv: int = typer.Option(0, '--deriv', min=0, help='Derivative order k.'),
) -> None:
    """Print F^(k)(x; s; c) for each --x, one JSON record per line.

    Example:
      cmkit eval --p 3 --m 2 --n 2 --q 1 --s 0.5 --c 0.5 --x 1 --x 2
    """
    try:
        params = FamilyParams(index=FamilyIndex.of(p, m, n, q), s=s, c=c)
        points = [check_argument(value) for value in x]
    except (CMKitError, ValidationError) as e:
        fail(str(e), 2)
    for point in points:
        try:
            value = f_derivative(params, deriv, point)
        except CMKitError as e:
            fail(e.message, 3)
        typer.echo(dumps({'x': point, 'k': deriv, 'value': value}))


def _load(config: Optional[Path], **overrides) -> RunConfig:
    try:
        return load_run_config(config, **overrides)
    except (CMKitError, ValidationError) as e:
        fail(str(e), 2)


@app.command()
def verify(
    max_index: Optional[int] = typer.Option(None, '--max-index', help='Largest p.'),
    c: Optional[list[float]] = typer.Option(None, '--c', help='Step c; repeatable.'),
    max_order: Optional[int] = typer.Option(None, '--max-order'),
    tol: Optional[float] = typer.Option(None, '--tol'),
    s_scale: Optional[float] = typer.Option(
        None, '--s-scale', help='Multiply every clause level by this factor.'
    ),
    x_min: Optional[float] = typer.Option(None, '--x-min'),
    x_max: Optional[float] = typer.Option(None, '--x-max'),
    points: Optional[int] = typer.Option(None, '--points'),
    cross_check: Optional[bool] = typer.Option(
        None, '--cross-check/--no-cross-check', help='Compare passing cases with the Laplace oracle.'
    ),
    output_format: Optional[OutputFormat] = typer.Option(None, '--format'),
    out: Optional[str] = typer.Option(None, '--out', help="Output path, '-' for stdout."),
    config: Optional[Path] = typer.Option(None, '--config', help='JSON config or report.'),
) -> None:
    """Run every clause of the CM theorem over a grid and write a report.

    Example:
      cmkit verify --max-index 4 --c 0.5 --c 2 --out report.json
    """
    run = _load(
        config,
        command='verify',
        max_index=max_index,
        c=c,
        max_order=max_order,
        tol=tol,
        s_scale=s_scale,
        x_min=x_min,
        x_max=x_max,
        points=points,
        cross_check=cross_check,
        format=output_format.value if output_format else None,
        out=out,
    )
    try:
        grid = run.grid()
        spec = run.quadrature()
    except (CMKitError, ValidationError) as e:
        fail(str(e), 2)
    try:
        reports = theorem_suite(
            run.max_index,
            run.c,
            grid=grid,
            max_order=run.max_order,
            tol=run.tol,
            s_scale=run.s_scale,
            cross_check=run.cross_check,
            spec=spec,
            keep_cells=run.format == 'csv',
        )
    except CMKitError as e:
        fail(e.message, 3)

    counts = {verdict: 0 for verdict in ('pass', 'fail', 'inconclusive')}
    for report in reports:
        counts[report.verdict] += 1
        if report.witness is not None:
            typer.echo(
                f'FAIL {report.clause} {report.params.index} s={report.params.s!r} '
                f'c={report.params.c!r}: k={report.witness.k} x={report.witness.x!r} '
                f'value={report.witness.value!r}',
                err=True,
            )
    if counts['fail']:
        overall, code = 'fail', 1
    elif counts['inconclusive']:
        overall, code = 'inconclusive', 3
    else:
        overall, code = 'pass', 0

    if run.format == 'csv':
        write_csv(cells_frame(reports), run.out)
    else:
        summary = {'cases': len(reports), **counts, 'verdict': overall}
        write_json(report_document(run, reports, summary), run.out)
    raise typer.Exit(code=code)


@app.command()
def sharpness(
    p: Optional[int] = typer.Option(None, '--p'),
    m: Optional[int] = typer.Option(None, '--m'),
    n: Optional[int] = typer.Option(None, '--n'),
    q: Optional[int] = typer.Option(None, '--q'),
    c: Optional[float] = typer.Option(None, '--c'),
    epsilon: Optional[float] = typer.Option(None, '--epsilon'),
    direction: Optional[Direction] = typer.Option(None, '--direction'),
    x_lo: Optional[float] = typer.Option(None, '--x-lo'),
    x_hi: Optional[float] = typer.Option(None, '--x-hi'),
    tol: Optional[float] = typer.Option(None, '--tol'),
    output_format: Optional[OutputFormat] = typer.Option(None, '--format'),
    out: Optional[str] = typer.Option(None, '--out'),
    config: Optional[Path] = typer.Option(None, '--config'),
) -> None:
    """Search for a point where F just past its CM level has the wrong sign.

    Example:
      cmkit sharpness --p 3 --m 2 --n 2 --q 1 --c 0.5 --epsilon 0.02 --direction above
    """
    run = _load(
        config,
        command='sharpness',
        p=p,
        m=m,
        n=n,
        q=q,
        c=[c] if c is not None else None,
        epsilon=epsilon,
        direction=direction.value if direction else None,
        x_lo=x_lo,
        x_hi=x_hi,
        tol=tol,
        format=output_format.value if output_format else None,
        out=out,
    )
    try:
        if None in (run.p, run.m, run.n, run.q):
            fail('sharpness needs --p, --m, --n and --q.', 2)
        if len(run.c) != 1:
            fail('sharpness takes exactly one --c.', 2)
        index = FamilyIndex.of(run.p, run.m, run.n, run.q)
        params = FamilyParams(index=index, s=0.0, c=run.c[0])
        search = run.search_range()
    except (CMKitError, ValidationError) as e:
        fail(str(e), 2)

    try:
        result = sharpness_probe(
            params, run.direction, run.epsilon, x_search=search, tol=run.tol
        )
    except NoWitnessError as e:
        fail(e.message, 1)
    except CMKitError as e:
        fail(e.message, 2)

    if run.format == 'csv':
        write_csv(records_frame([result]), run.out)
    else:
        summary = {'witness': True, 'witness_x': result.witness_x}
        write_json(report_document(run, [result], summary), run.out)
