"""Deterministic, exact JSON serialization of report payloads.

Reports are plain dictionaries.  Before printing they are normalized to
JSON-native values so that re-reading the emitted JSON reproduces the
in-memory report field-for-field:

* rational numbers with denominator 1 become JSON integers, all other
  rationals become exact strings such as ``"3/2"``;
* cyclotomic numbers become their exact power-basis strings such as
  ``"z5^2 - z5"`` (rational ones fall back to the rational rule);
* matrices become nested lists of normalized entries;
* tuples become lists; dictionary keys become strings.

Floats are rejected outright — every value in a report is exact.
"""

import json
from fractions import Fraction

from .cyclotomic import Cyclo
from .linalg import QMat


def _fraction_value(q):
    if q.denominator == 1:
        return int(q)
    return str(q)


def jsonable(value):
    """Normalize ``value`` to JSON-native types, exactly and recursively."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return int(value)
    if isinstance(value, str):
        return value
    if isinstance(value, Fraction):
        return _fraction_value(value)
    if isinstance(value, Cyclo):
        if value.is_rational():
            return _fraction_value(value.as_fraction())
        return str(value)
    if isinstance(value, QMat):
        return [[jsonable(x) for x in row] for row in value.rows]
    if isinstance(value, (list, tuple)):
        return [jsonable(x) for x in value]
    if isinstance(value, dict):
        out = {}
        for k, v in value.items():
            if isinstance(k, bool) or not isinstance(k, (str, int)):
                raise TypeError(f"report keys must be strings or integers, got {k!r}")
            key = k if isinstance(k, str) else str(k)
            if key in out:
                raise TypeError(f"duplicate report key after normalization: {key!r}")
            out[key] = jsonable(v)
        return out
    if isinstance(value, float):
        raise TypeError("floats are not allowed in reports; use exact values")
    raise TypeError(f"cannot serialize {type(value).__name__} in a report")


def dumps(report):
    """Canonical text form of a report: indented JSON, trailing newline.

    Key order is the (deterministic) construction order of the report, so
    two runs over the same input produce byte-identical text.
    """
    return json.dumps(jsonable(report), indent=2, ensure_ascii=True) + "\n"


def loads(text):
    return json.loads(text)


def write_report(report, path):
    text = dumps(report)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return text
