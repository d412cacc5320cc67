"""``cmkit kernels``: diagnostic tables for the auxiliary kernels."""

from enum import Enum
from typing import Optional

import numpy as np
import typer
from pydantic import ValidationError

from cmkit.exceptions import CMKitError
from cmkit.family import FamilyIndex, FamilyParams
from cmkit.kernels import (
    beta_identity_residuals,
    find_root,
    g_sign_table,
    kernel_sign_split,
    u,
    zero_integral_residuals,
)

from .output import fail, records_frame, report_document, write_csv, write_json

kernels_app = typer.Typer(help='Kernel diagnostics: roots, monotonicity, signs, identities.')


class TableFormat(str, Enum):
    json = 'json'
    csv = 'csv'


def _write(rows: list[dict], config: dict, summary: dict, fmt: TableFormat, out: str) -> None:
    if fmt == TableFormat.csv:
        write_csv(records_frame(rows), out)
    else:
        write_json(report_document(config, rows, summary), out)


@kernels_app.command()
def root(
    m: int = typer.Option(..., '--m', help='Exponent mm of a(t; mm, nn, cc).'),
    n: int = typer.Option(..., '--n', help='Exponent nn.'),
    c: float = typer.Option(..., '--c', help='Level cc in (0, 1).'),
    output_format: TableFormat = typer.Option(TableFormat.json, '--format'),
    out: str = typer.Option('-', '--out'),
) -> None:
    """Unique root t0 >= 1 of t^(m-n) + t^n - c(1 + t^m) and s0 = (t0-1)/(t0+1)."""
    try:
        result = find_root(m, n, c)
    except CMKitError as e:
        fail(e.message, 2)
    row = result.model_dump(mode='json')
    config = {'command': 'kernels root', 'm': m, 'n': n, 'c': c}
    _write([row], config, {'certified': result.certified}, output_format, out)


@kernels_app.command('u-monotone')
def u_monotone(
    a: Optional[list[float]] = typer.Option(None, '--a', help='Scale a; repeatable.'),
    c: Optional[list[float]] = typer.Option(None, '--c', help='Step c; repeatable.'),
    points: int = typer.Option(200, '--points', min=3),
    output_format: TableFormat = typer.Option(TableFormat.json, '--format'),
    out: str = typer.Option('-', '--out'),
) -> None:
    """Monotonicity of u(s; a, c) on (0, 1): decreasing for c <= 1, increasing for c >= 1."""
    scales = a or [0.5, 2.0, 10.0]
    steps = c or [0.25, 0.5, 2.0, 4.0]
    s_grid = np.linspace(0.0, 1.0, points + 2)[1:-1]
    rows = []
    try:
        for scale in scales:
            for step in steps:
                values = np.asarray(u(s_grid, scale, step))
                diffs = np.diff(values)
                slack = 1e-12 * np.abs(values[1:])
                rows.append(
                    {
                        'a': scale,
                        'c': step,
                        'decreasing': bool(np.all(diffs <= slack)),
                        'increasing': bool(np.all(diffs >= -slack)),
                        'expected': 'decreasing' if step <= 1.0 else 'increasing',
                    }
                )
    except CMKitError as e:
        fail(e.message, 2)
    agree = all(row[row['expected']] for row in rows)
    config = {'command': 'kernels u-monotone', 'a': scales, 'c': steps, 'points': points}
    _write(rows, config, {'as_expected': agree}, output_format, out)


@kernels_app.command('g-sign')
def g_sign(
    p: int = typer.Option(..., '--p'),
    m: int = typer.Option(..., '--m'),
    n: int = typer.Option(..., '--n'),
    q: int = typer.Option(..., '--q'),
    s: float = typer.Option(..., '--s'),
    c: float = typer.Option(..., '--c'),
    t_min: float = typer.Option(0.01, '--t-min'),
    t_max: float = typer.Option(50.0, '--t-max'),
    points: int = typer.Option(40, '--points', min=2),
    output_format: TableFormat = typer.Option(TableFormat.json, '--format'),
    out: str = typer.Option('-', '--out'),
) -> None:
    """Sign of the convolution kernel g(t) on a log t-grid."""
    try:
        params = FamilyParams(index=FamilyIndex.of(p, m, n, q), s=s, c=c)
        if not 0.0 < t_min < t_max:
            fail(f'Expected 0 < t_min < t_max, got {t_min}, {t_max}.', 2)
        if not c > 0.0:
            fail(f'The kernel g needs c > 0, got {c}.', 2)
    except (CMKitError, ValidationError) as e:
        fail(str(e), 2)
    try:
        samples = g_sign_table(params, np.geomspace(t_min, t_max, points))
    except CMKitError as e:
        fail(e.message, 3)

    slack = 1e-10
    nonnegative = all(sample.value >= -slack * sample.scale for sample in samples)
    nonpositive = all(sample.value <= slack * sample.scale for sample in samples)
    if nonnegative and nonpositive:
        verdict = 'zero'
    elif nonnegative:
        verdict = 'nonnegative'
    elif nonpositive:
        verdict = 'nonpositive'
    else:
        verdict = 'mixed'
    rows = [{'t': x.t, 'value': x.value, 'scale': x.scale} for x in samples]
    config = {
        'command': 'kernels g-sign',
        'index': [p, m, n, q],
        's': s,
        'c': c,
        't_min': t_min,
        't_max': t_max,
        'points': points,
    }
    _write(rows, config, {'verdict': verdict}, output_format, out)


@kernels_app.command('beta-identity')
def beta_identity(
    max_arg: int = typer.Option(6, '--max', min=1, help='Largest integer argument.'),
    output_format: TableFormat = typer.Option(TableFormat.json, '--format'),
    out: str = typer.Option('-', '--out'),
) -> None:
    """Quadrature of the beta integral against (x-1)!(y-1)!/(x+y-1)!."""
    try:
        residuals = beta_identity_residuals(max_arg)
    except CMKitError as e:
        fail(e.message, 3)
    rows = [
        {'label': r.label, 'value': r.value, 'exact': r.exact, 'residual': r.residual}
        for r in residuals
    ]
    summary = {'max_residual': max(r.residual for r in residuals)}
    _write(rows, {'command': 'kernels beta-identity', 'max': max_arg}, summary, output_format, out)


@kernels_app.command('zero-integral')
def zero_integral(
    max_p: int = typer.Option(6, '--max-p', min=2),
    output_format: TableFormat = typer.Option(TableFormat.json, '--format'),
    out: str = typer.Option('-', '--out'),
) -> None:
    """The kernel weight at s = alpha integrates to zero for every index with p <= max_p."""
    try:
        residuals = zero_integral_residuals(max_p)
    except CMKitError as e:
        fail(e.message, 3)
    rows = [{'index': r.label, 'value': r.value, 'residual': r.residual} for r in residuals]
    summary = {'max_residual': max(r.residual for r in residuals)}
    _write(rows, {'command': 'kernels zero-integral', 'max_p': max_p}, summary, output_format, out)


@kernels_app.command('sign-split')
def sign_split(
    p: int = typer.Option(..., '--p'),
    m: int = typer.Option(..., '--m'),
    n: int = typer.Option(..., '--n'),
    q: int = typer.Option(..., '--q'),
    points: int = typer.Option(2000, '--points', min=10),
    output_format: TableFormat = typer.Option(TableFormat.json, '--format'),
    out: str = typer.Option('-', '--out'),
) -> None:
    """Where the recast kernel's polynomial factor changes sign (q >= 1)."""
    try:
        split = kernel_sign_split(FamilyIndex.of(p, m, n, q), points)
    except CMKitError as e:
        fail(e.message, 2)
    row = {
        's0': split.s0,
        't0': split.root.t0,
        'nonnegative_below': split.nonnegative_below,
        'nonpositive_above': split.nonpositive_above,
    }
    config = {'command': 'kernels sign-split', 'index': [p, m, n, q], 'points': points}
    _write([row], config, {'holds': split.holds}, output_format, out)
