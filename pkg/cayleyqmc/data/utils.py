"""File formats of the command-line surface: observable files in, CSV and
JSON records out."""
import csv
import json
import math

import numpy as np

from cayleyqmc.src.boundary import is_admissible
from cayleyqmc.src.errors import ObservableParseError
from cayleyqmc.src.state import parse_observable

ORBIT_COLUMNS = ('step', 'x', 'y', 'admissible')
FREE_ENERGY_COLUMNS = ('beta', 'F_n', 'F_limit', 'abs_gap')
TERMINATION_TRAILER = 'termination={}'


def read_observable_file(path):
    """Parse an observable JSON file.

    :raises ObservableParseError: with line and column on malformed JSON.

    :rtype: :class:`cayleyqmc.src.state.ProductObservable`
    """
    try:
        with open(path) as f:
            document = json.load(f)
    except OSError as e:
        raise ObservableParseError(f'{path}: {e.strerror}')
    except json.JSONDecodeError as e:
        raise ObservableParseError(
            f'{path}: line {e.lineno} column {e.colno}: {e.msg}')
    try:
        return parse_observable(document)
    except ObservableParseError as e:
        raise ObservableParseError(f'{path}: {e}')


def format_number(value):
    """Round-trip representation with 17 significant digits."""
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f'Refusing to emit non-finite value {value}')
    return f'{value:.17g}'


def jsonable(value):
    """Convert complex numbers and arrays to nested [re, im] lists."""
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return jsonable(value.tolist())
    if isinstance(value, (complex, np.complexfloating)):
        return [float(value.real), float(value.imag)]
    if isinstance(value, (np.bool_, bool)):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    return value


def write_json(document, stream):
    stream.write(json.dumps(jsonable(document), indent=2, sort_keys=True,
                            allow_nan=False))
    stream.write('\n')


def write_csv(header, rows, stream, trailer=None):
    """Write ``rows`` of numbers under ``header``; integers stay integers."""
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow(
            [v if isinstance(v, (int, np.integer)) else format_number(v)
             for v in row])
    if trailer is not None:
        stream.write(f'{trailer}\n')


def orbit_rows(result):
    """Rows step, x, y, admissible of an orbit; admissible is 1 where the
    pull-up is defined."""
    return [(step, p.x, p.y, int(is_admissible(p, result.beta)))
            for step, p in enumerate(result.points)]


def write_orbit_csv(result, stream):
    write_csv(ORBIT_COLUMNS, orbit_rows(result), stream,
              trailer=TERMINATION_TRAILER.format(result.label))
