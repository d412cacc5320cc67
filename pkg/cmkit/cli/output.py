"""Report documents and their JSON and CSV renderings.

JSON and CSV floats are both written with 17 significant digits, so they read
back to the same binary64 values.
"""

import json
import math
import re
from pathlib import Path
from typing import Any, Iterable, NoReturn

import pandas as pd
import typer
from pydantic import BaseModel

from cmkit import __version__
from cmkit.verifier.models import CMReport

CSV_FLOAT_FORMAT = '%.17g'
JSON_FLOAT_FORMAT = '.17g'
# floats travel through json.dumps as marked strings and are unquoted afterwards
_MARK = '\x00'
_MARKED_FLOAT = re.compile(r'"\\u0000([^"\\]+)\\u0000"')
CELL_COLUMNS = [
    'clause', 'p', 'm', 'n', 'q', 's', 'c', 'sign', 'k', 'x', 'value', 'scale', 'pass'
]


def report_document(
    config: BaseModel | dict[str, Any],
    results: Iterable[BaseModel | dict[str, Any]],
    summary: dict[str, Any],
) -> dict[str, Any]:
    """The schema-stable top level {tool_version, config, results, summary}."""

    def plain(item: BaseModel | dict[str, Any]) -> dict[str, Any]:
        return item.model_dump(mode='json') if isinstance(item, BaseModel) else item

    return {
        'tool_version': __version__,
        'config': plain(config),
        'results': [plain(result) for result in results],
        'summary': summary,
    }


def fail(message: str, code: int) -> NoReturn:
    typer.echo(f'ERROR: {message}', err=True)
    raise typer.Exit(code=code)


def emit(text: str, out: str) -> None:
    """Write ``text`` to stdout for '-' and to a file otherwise."""
    if out == '-':
        typer.echo(text, nl=False)
    else:
        Path(out).write_text(text)


def _float_token(value: float) -> str:
    if math.isnan(value):
        return 'NaN'
    if math.isinf(value):
        return 'Infinity' if value > 0 else '-Infinity'
    token = format(value, JSON_FLOAT_FORMAT)
    # keep integral values typed as floats
    return token if any(ch in token for ch in '.e') else f'{token}.0'


def _mark_floats(value: Any) -> Any:
    if isinstance(value, float):
        return f'{_MARK}{_float_token(value)}{_MARK}'
    if isinstance(value, dict):
        return {key: _mark_floats(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_mark_floats(item) for item in value]
    return value


def dumps(document: Any, indent: int | None = None) -> str:
    """``json.dumps`` with every float written to 17 significant digits."""
    return _MARKED_FLOAT.sub(r'\1', json.dumps(_mark_floats(document), indent=indent))


def write_json(document: dict[str, Any], out: str) -> None:
    emit(dumps(document, indent=2) + '\n', out)


def write_csv(frame: pd.DataFrame, out: str) -> None:
    emit(frame.to_csv(index=False, float_format=CSV_FLOAT_FORMAT), out)


def cells_frame(reports: Iterable[CMReport]) -> pd.DataFrame:
    """One row per (k, x) cell of every report, labelled by its case."""
    rows = []
    for report in reports:
        p, m, n, q = report.params.index.as_tuple()
        for cell in report.cells:
            rows.append(
                {
                    'clause': report.clause or '',
                    'p': p,
                    'm': m,
                    'n': n,
                    'q': q,
                    's': report.params.s,
                    'c': report.params.c,
                    'sign': report.sign,
                    'k': cell.k,
                    'x': cell.x,
                    'value': cell.value,
                    'scale': cell.scale,
                    'pass': cell.passes(report.tol),
                }
            )
    return pd.DataFrame(rows, columns=CELL_COLUMNS)


def records_frame(records: Iterable[BaseModel | dict[str, Any]]) -> pd.DataFrame:
    """Flatten nested records into dotted columns, e.g. ``params.index.p``."""
    return pd.json_normalize(
        [r.model_dump(mode='json') if isinstance(r, BaseModel) else r for r in records]
    )
