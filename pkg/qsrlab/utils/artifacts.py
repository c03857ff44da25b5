#!/usr/bin/env python3
"""
CSV and JSON artifact writers.

Numbers are written with 17 significant digits so identical runs produce
byte-identical files; missing values are written as ``nan``.
"""

import csv
import io
import json
import logging
import math
import sys
from pathlib import Path
from typing import Any, Iterable, List, Optional, Sequence

logger = logging.getLogger(__name__)


def format_float(value: float) -> str:
    """Round-trip decimal representation of a float ('nan' for missing)."""
    if math.isnan(value):
        return 'nan'
    return f"{value:.17g}"


def render_csv(header: Sequence[str], rows: Iterable[Sequence[Any]],
               footer: Optional[List[str]] = None) -> str:
    """
    Render rows as CSV text.

    Floats go through :func:`format_float`; other values are written as is.
    Footer lines are appended as ``#`` comments.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_float(v) if isinstance(v, float) else v for v in row])
    for line in footer or []:
        buffer.write(f"# {line}\n")
    return buffer.getvalue()


def render_json(data: Any) -> str:
    """Deterministic JSON text (NaN becomes null)."""
    return json.dumps(_nan_to_none(data), indent=2) + '\n'


def _nan_to_none(data: Any) -> Any:
    if isinstance(data, float) and math.isnan(data):
        return None
    if isinstance(data, dict):
        return {key: _nan_to_none(value) for key, value in data.items()}
    if isinstance(data, (list, tuple)):
        return [_nan_to_none(value) for value in data]
    return data


def emit(text: str, directory: Optional[str], filename: str) -> Optional[Path]:
    """
    Write text to directory/filename, or to stdout when no directory is set.

    Returns:
        Path written, or None for stdout
    """
    if directory is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return None
    path = Path(directory)
    path.mkdir(parents=True, exist_ok=True)
    target = path / filename
    target.write_text(text, encoding='utf-8')
    logger.info("Wrote %s", target)
    return target
