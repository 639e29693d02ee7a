"""JSON helpers: rational-safe number encoding and atomic report writes."""

from __future__ import annotations

import json
import os
import tempfile
from fractions import Fraction


def num_json(x):
    """Encode a number for JSON: Fractions become 'p/q' strings."""
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, bool) or isinstance(x, int):
        return x
    if x is None:
        return None
    return float(x)


def dumps(payload) -> str:
    """Deterministic JSON bytes for reproducible reports."""
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def write_atomic(path: str, text: str):
    """Write a report via a temp file + rename, so readers never see partial output."""
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".report-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
