#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
AQNCC Toolkit - Asymmetric Pauli Channel
Independent bit-flip and phase-flip sampling with a time-varying phase rate
"""

import logging
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from core.errors import InvalidConfigError

logger = logging.getLogger(__name__)


def _check_probability(name: str, value: float):
    if not 0.0 <= value < 0.5:
        raise InvalidConfigError(f"{name} = {value} outside [0, 0.5)")


@dataclass(frozen=True)
class PauliPattern:
    """Bit flips e_x and phase flips e_z; a Y error sets both"""

    e_x: np.ndarray
    e_z: np.ndarray

    def __post_init__(self):
        if self.e_x.shape != self.e_z.shape:
            raise InvalidConfigError("e_x and e_z must have the same length")

    @property
    def n(self) -> int:
        return self.e_x.size

    @property
    def y_count(self) -> int:
        return int((self.e_x & self.e_z).sum())


def sample_error(n: int, px: float, pz: float, rng: np.random.Generator) -> PauliPattern:
    """Every e_x bit is Bernoulli(px), every e_z bit Bernoulli(pz), independently

    Both vectors always consume n uniforms each, in that order, so replay
    under a fixed generator state is exact regardless of the probabilities.
    """
    _check_probability("px", px)
    _check_probability("pz", pz)
    e_x = (rng.random(n) < px).astype(np.uint8)
    e_z = (rng.random(n) < pz).astype(np.uint8)
    return PauliPattern(e_x, e_z)


@dataclass(frozen=True)
class PzProcess:
    """Constant pz, or pz redrawn uniformly on [lo, hi] every period blocks"""

    pz: Optional[float] = None
    period: int = 100
    lo: float = 0.0
    hi: float = 0.03

    def __post_init__(self):
        if self.pz is not None:
            _check_probability("pz", self.pz)
            return
        if self.period < 1:
            raise InvalidConfigError(f"period = {self.period} must be at least 1")
        _check_probability("pz lower bound", self.lo)
        _check_probability("pz upper bound", self.hi)
        if self.lo > self.hi:
            raise InvalidConfigError(f"pz range [{self.lo}, {self.hi}] is empty")

    @classmethod
    def constant(cls, pz: float) -> 'PzProcess':
        return cls(pz=pz)

    @property
    def is_constant(self) -> bool:
        return self.pz is not None

    @property
    def midpoint(self) -> float:
        return self.pz if self.is_constant else 0.5 * (self.lo + self.hi)

    def stream(self, rng: np.random.Generator) -> Iterator[float]:
        """pz for block 0, 1, 2, ...; one uniform draw per period"""
        block = 0
        current = self.pz
        while True:
            if not self.is_constant and block % self.period == 0:
                current = float(rng.uniform(self.lo, self.hi))
            yield current
            block += 1

    def as_dict(self) -> dict:
        if self.is_constant:
            return {'kind': 'constant', 'pz': self.pz}
        return {'kind': 'piecewise_uniform', 'period': self.period, 'lo': self.lo, 'hi': self.hi}


@dataclass(frozen=True)
class ChannelModel:
    px: float
    pz_process: PzProcess
    seed: int = 0

    def __post_init__(self):
        _check_probability("px", self.px)

    def as_dict(self) -> dict:
        return {'px': self.px, 'pz_process': self.pz_process.as_dict(), 'seed': self.seed}
