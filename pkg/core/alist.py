#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
AQNCC Toolkit - Alist Codec
MacKay's sparse "alist" text format for parity-check matrices
"""

import logging
from pathlib import Path
from typing import List, Union

import numpy as np

from core.errors import FormatError
from core.gf2 import BinMatrix
from storage.file_engine import FileEngine

logger = logging.getLogger(__name__)


def _line(values) -> str:
    return " ".join(str(int(v)) for v in values)


def dumps_alist(m: BinMatrix) -> str:
    """Serialize a matrix; supports are 1-based and zero-padded to the max degree"""
    col_weights = m.col_weights()
    row_weights = m.row_weights()
    max_col = int(col_weights.max()) if m.n_cols else 0
    max_row = int(row_weights.max()) if m.n_rows else 0

    lines = [
        _line((m.n_cols, m.n_rows)),
        _line((max_col, max_row)),
        _line(col_weights),
        _line(row_weights),
    ]

    column_support = [np.flatnonzero(col) for col in m.dense.T]
    for support in column_support:
        padded = list(support + 1) + [0] * (max_col - len(support))
        lines.append(_line(padded))

    for support in m.row_support:
        padded = list(support + 1) + [0] * (max_row - len(support))
        lines.append(_line(padded))

    return "\n".join(lines) + "\n"


def _ints(line: str, where: str) -> List[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError as e:
        raise FormatError(f"non-integer entry on {where}: {line!r}") from e


def loads_alist(text: str) -> BinMatrix:
    """Parse alist text; the row section is optional but must agree when present"""
    lines = text.splitlines()
    if len(lines) < 4:
        raise FormatError("alist needs at least four header lines")

    header = _ints(lines[0], "line 1")
    degrees = _ints(lines[1], "line 2")
    if len(header) != 2 or len(degrees) != 2:
        raise FormatError("alist lines 1 and 2 must hold two integers each")
    n_cols, n_rows = header
    max_col, max_row = degrees

    col_weights = _ints(lines[2], "line 3")
    row_weights = _ints(lines[3], "line 4")
    if len(col_weights) != n_cols or len(row_weights) != n_rows:
        raise FormatError("degree lists do not match the header dimensions")
    if (col_weights and max(col_weights) != max_col) or (row_weights and max(row_weights) != max_row):
        raise FormatError("maximum degrees do not match the degree lists")

    body = lines[4:]
    while len(body) > n_cols + n_rows and not body[-1].strip():
        body.pop()
    if len(body) < n_cols:
        body = body + [""] * (n_cols - len(body))

    dense = np.zeros((n_rows, n_cols), dtype=np.uint8)
    for col in range(n_cols):
        entries = [v for v in _ints(body[col], f"column {col + 1}") if v != 0]
        if len(entries) != col_weights[col]:
            raise FormatError(f"column {col + 1} lists {len(entries)} entries, degree says {col_weights[col]}")
        for row in entries:
            if not 1 <= row <= n_rows:
                raise FormatError(f"column {col + 1} references row {row} outside 1..{n_rows}")
            dense[row - 1, col] = 1

    row_lines = body[n_cols:]
    if row_lines:
        if len(row_lines) < n_rows:
            row_lines = row_lines + [""] * (n_rows - len(row_lines))
        for row in range(n_rows):
            entries = sorted(v for v in _ints(row_lines[row], f"row {row + 1}") if v != 0)
            expected = list(np.flatnonzero(dense[row]) + 1)
            if entries != expected:
                raise FormatError(f"row {row + 1} disagrees with the column section")

    return BinMatrix.from_dense(dense)


def save_alist(file_path: Union[str, Path], m: BinMatrix) -> Path:
    return FileEngine.save_text(file_path, dumps_alist(m))


def load_alist(file_path: Union[str, Path]) -> BinMatrix:
    matrix = loads_alist(FileEngine.load_text(file_path))
    logger.debug(f"Loaded {matrix} from {file_path}")
    return matrix
