#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
AQNCC Toolkit - Circulant Layers
Expand CDM rows into layers of circulant permutation matrices
"""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from core.errors import InvalidDesignError
from core.gf2 import BinMatrix, hstack, vstack
from designs.cdm import Cdm, cdm_verify

logger = logging.getLogger(__name__)


def circulant(x: int, p: int) -> BinMatrix:
    """I(x): row y holds its single one at column (x + y) mod p"""
    if p < 1:
        raise InvalidDesignError(f"circulant size must be positive, got {p}")
    if not 0 <= x < p:
        raise InvalidDesignError(f"shift {x} outside [0, {p - 1}]")
    return BinMatrix.from_supports(p, [((x + y) % p,) for y in range(p)])


@dataclass(frozen=True, eq=False)
class Layer:
    """p x p^2 block row; label is the generator a of the CDM row r_a"""

    matrix: BinMatrix
    label: int
    p: int

    def __post_init__(self):
        p = self.p
        if self.matrix.shape != (p, p * p):
            raise InvalidDesignError(f"layer must be {p}x{p * p}, got {self.matrix.shape}")
        if not (self.matrix.row_weights() == p).all() or not (self.matrix.col_weights() == 1).all():
            raise InvalidDesignError(f"layer r_{self.label} is not a row of circulant permutations")

    def __repr__(self) -> str:
        return f"Layer(r_{self.label}, p={self.p})"


def expand_row(row: Sequence[int], p: int, label: int) -> Layer:
    return Layer(hstack(*(circulant(int(x), p) for x in row)), label=label, p=p)


def expand(m: Cdm) -> List[Layer]:
    """One layer per CDM row, I(x) substituted for every entry x"""
    if not cdm_verify(m):
        raise InvalidDesignError(f"the {m.mu}x{m.v} matrix is not a cyclic difference matrix")
    return [expand_row(row, m.v, label) for row, label in zip(m.entries, m.labels)]


def layer_of_row(a: int, p: int) -> Layer:
    """Layer of r_a = (0, a, 2a, ..., (p-1)a)"""
    return expand_row([(a * j) % p for j in range(p)], p, label=a % p)


def stack_layers(layers: Sequence[Layer], p: int) -> BinMatrix:
    if not layers:
        return BinMatrix.zeros(0, p * p)
    return vstack(*(layer.matrix for layer in layers))


# ----------------------------------------------------------------------
# Isomorphism witnesses
# ----------------------------------------------------------------------
def reflection_permutations(p: int) -> Tuple[np.ndarray, np.ndarray]:
    """Column map (j, c) -> (j, -c) and row map y -> -y, both mod p

    Carries the layer of r_{p-a} onto the layer of r_a.
    """
    blocks, offsets = np.divmod(np.arange(p * p), p)
    columns = blocks * p + (-offsets) % p
    rows = (-np.arange(p)) % p
    return columns, rows


def shear_permutation(p: int, t: int) -> np.ndarray:
    """Column map (j, c) -> (j, c + t*j) mod p; carries r_a onto r_{a+t}, rows in place"""
    blocks, offsets = np.divmod(np.arange(p * p), p)
    return blocks * p + (offsets + t * blocks) % p


def reflect_layer(layer: Layer) -> Layer:
    columns, rows = reflection_permutations(layer.p)
    matrix = layer.matrix.permute_columns(columns).permute_rows(rows)
    return Layer(matrix, label=(-layer.label) % layer.p, p=layer.p)
