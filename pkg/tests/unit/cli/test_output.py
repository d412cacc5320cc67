import json
import math

import pandas as pd

from cmkit import __version__
from cmkit.cli.output import (
    cells_frame,
    dumps,
    records_frame,
    report_document,
    write_csv,
    write_json,
)
from cmkit.cli.settings import RunConfig
from cmkit.verifier import GridSpec, check_cm


def test_report_document_layout(params_at_alpha):
    document = report_document(RunConfig(), [params_at_alpha], {'cases': 1})
    assert list(document) == ['tool_version', 'config', 'results', 'summary']
    assert document['tool_version'] == __version__
    assert document['results'][0]['index']['p'] == 3
    assert document['config']['max_index'] == 4


def test_cells_frame_has_one_row_per_cell(params_at_alpha):
    grid = GridSpec(x_min=0.5, x_max=2.0, points=3)
    report = check_cm(params_at_alpha, 'plus', grid=grid, max_order=2, keep_cells=True)
    frame = cells_frame([report])
    assert list(frame.columns) == [
        'clause', 'p', 'm', 'n', 'q', 's', 'c', 'sign', 'k', 'x', 'value', 'scale', 'pass'
    ]
    assert len(frame) == 9
    assert frame['pass'].all()


def test_records_frame_flattens_nested_fields(params_at_alpha):
    frame = records_frame([params_at_alpha])
    assert frame.loc[0, 'index.q'] == 1
    assert frame.loc[0, 'c'] == 0.5


def test_csv_floats_round_trip(tmp_path):
    value = 0.1 + 0.2
    path = tmp_path / 'cells.csv'
    write_csv(pd.DataFrame({'value': [value]}), str(path))
    assert pd.read_csv(path, float_precision='round_trip')['value'][0] == value


def test_json_written_to_file(tmp_path):
    path = tmp_path / 'doc.json'
    write_json({'summary': {'value': 1.5}}, str(path))
    assert path.read_text().endswith('\n')
    assert '"value": 1.5' in path.read_text()


def test_stdout_target(capsys):
    write_csv(pd.DataFrame({'k': [1]}), '-')
    assert capsys.readouterr().out == 'k\n1\n'


def test_json_floats_use_seventeen_digits():
    """Test JSON floats carry 17 significant digits and read back bit-exactly."""
    value = 0.1 + 0.2
    text = dumps({'value': value, 'grid': [0.1, 2.0], 'k': 3, 'label': 'a'})
    assert '"value": 0.30000000000000004' in text
    assert '"grid": [0.10000000000000001, 2.0]' in text
    loaded = json.loads(text)
    assert loaded['value'] == value
    assert loaded['grid'] == [0.1, 2.0]
    assert isinstance(loaded['grid'][1], float)
    assert loaded['k'] == 3 and loaded['label'] == 'a'


def test_json_non_finite_floats():
    loaded = json.loads(dumps({'nan': math.nan, 'low': -math.inf}))
    assert math.isnan(loaded['nan'])
    assert loaded['low'] == -math.inf
