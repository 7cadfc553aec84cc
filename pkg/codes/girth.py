#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
AQNCC Toolkit - Girth
Short-cycle detection on parity-check matrices
"""

import logging
from typing import Union

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from core.gf2 import BinMatrix

logger = logging.getLogger(__name__)

GIRTH_AT_LEAST_EIGHT = ">=8"
ACYCLIC = "acyclic"

Girth = Union[int, str]

_ORDER = {4: 0, 6: 1, GIRTH_AT_LEAST_EIGHT: 2, ACYCLIC: 3}


def _is_forest(m: BinMatrix) -> bool:
    rows, cols = m.edges
    n_nodes = m.n_rows + m.n_cols
    graph = coo_matrix(
        (np.ones(rows.size), (rows, cols + m.n_rows)),
        shape=(n_nodes, n_nodes),
    )
    n_components, _ = connected_components(graph, directed=False)
    return rows.size == n_nodes - n_components


def girth(m: BinMatrix) -> Girth:
    """4, 6, ">=8" or "acyclic" for the Tanner graph of m

    A 4-cycle is a pair of rows sharing two columns. Without those, every
    triangle of the row-overlap graph either meets in one common column or
    is a 6-cycle, so 6-cycles are counted as surplus triangles.
    """
    if m.n_rows == 0 or m.n_cols == 0 or not m.bits.any():
        return ACYCLIC

    dense = m.dense.astype(np.float64)
    overlap = dense @ dense.T
    np.fill_diagonal(overlap, 0.0)
    if (overlap >= 2.0).any():
        return 4

    adjacency = (overlap > 0.0).astype(np.float64)
    triangles = round(float(((adjacency @ adjacency) * adjacency).sum()) / 6.0)
    weights = m.col_weights()
    column_triangles = int((weights * (weights - 1) * (weights - 2) // 6).sum())
    if triangles > column_triangles:
        return 6

    return ACYCLIC if _is_forest(m) else GIRTH_AT_LEAST_EIGHT


def shortest(*values: Girth) -> Girth:
    return min(values, key=_ORDER.__getitem__)


def at_least_six(value: Girth) -> bool:
    return value != 4
