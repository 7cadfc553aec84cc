#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
AQNCC Toolkit - Cyclic Difference Matrices
Build, verify and serialize (v, mu) CDMs over Z_v
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Tuple, Union

import numpy as np

from core.errors import FormatError, InvalidDesignError
from storage.file_engine import FileEngine

logger = logging.getLogger(__name__)


def is_odd_prime(n: int) -> bool:
    if n < 3 or n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Cdm:
    """mu x v matrix over Z_v; labels name the generator of each row"""

    v: int
    entries: Tuple[Tuple[int, ...], ...]
    askew: bool = False
    labels: Optional[Tuple[int, ...]] = field(default=None)

    def __post_init__(self):
        if self.v < 1:
            raise InvalidDesignError(f"order v must be positive, got {self.v}")

        entries = tuple(tuple(int(x) for x in row) for row in self.entries)
        for index, row in enumerate(entries):
            if len(row) != self.v:
                raise InvalidDesignError(f"row {index} has {len(row)} entries, expected v = {self.v}")
            if any(x < 0 or x >= self.v for x in row):
                raise InvalidDesignError(f"row {index} has entries outside [0, {self.v - 1}]")
        object.__setattr__(self, 'entries', entries)

        labels = tuple(range(len(entries))) if self.labels is None else tuple(int(a) for a in self.labels)
        if len(labels) != len(entries):
            raise InvalidDesignError("one label per row is required")
        object.__setattr__(self, 'labels', labels)

    @property
    def mu(self) -> int:
        return len(self.entries)

    def as_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64).reshape(self.mu, self.v)


def cdm_build(p: int, askew: bool = False) -> Cdm:
    """Rows r_a = (0, a, 2a, ..., (p-1)a) mod p for a = 1..p-1, plus r_0 on top when askew"""
    if not is_odd_prime(p):
        raise InvalidDesignError(f"p must be an odd prime, got {p}")
    if not askew and p < 5:
        raise InvalidDesignError(f"p must be at least 5 for the symmetric family, got {p}")

    generators = range(0 if askew else 1, p)
    entries = tuple(tuple((a * j) % p for j in range(p)) for a in generators)
    return Cdm(v=p, entries=entries, askew=askew, labels=tuple(generators))


def cdm_verify(m: Cdm) -> bool:
    """True iff every row pair's coordinate-wise differences cover Z_v"""
    arr = m.as_array()
    full = np.arange(m.v)
    for i in range(m.mu):
        for j in range(i + 1, m.mu):
            differences = np.sort((arr[i] - arr[j]) % m.v)
            if not np.array_equal(differences, full):
                logger.debug(f"rows {i} and {j} miss some difference mod {m.v}")
                return False
    return True


def dumps_cdm(m: Cdm) -> str:
    """First line "v mu askew", then mu rows of v residues"""
    lines = [f"{m.v} {m.mu} {int(m.askew)}"]
    lines.extend(" ".join(str(x) for x in row) for row in m.entries)
    return "\n".join(lines) + "\n"


def loads_cdm(text: str) -> Cdm:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise FormatError("empty CDM text")

    try:
        v, mu, askew = (int(tok) for tok in lines[0].split())
        rows = tuple(tuple(int(tok) for tok in line.split()) for line in lines[1:])
    except ValueError as e:
        raise FormatError(f"malformed CDM text: {e}") from e

    if len(rows) != mu:
        raise FormatError(f"header announces {mu} rows, found {len(rows)}")
    if askew not in (0, 1):
        raise FormatError(f"askew flag must be 0 or 1, got {askew}")

    labels = None
    built = cdm_build(v, bool(askew)) if is_odd_prime(v) and (askew or v >= 5) else None
    if built is not None and built.entries == rows:
        labels = built.labels
    return Cdm(v=v, entries=rows, askew=bool(askew), labels=labels)


def save_cdm(file_path: Union[str, Path], m: Cdm) -> Path:
    return FileEngine.save_text(file_path, dumps_cdm(m))


def load_cdm(file_path: Union[str, Path]) -> Cdm:
    return loads_cdm(FileEngine.load_text(file_path))
