#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
AQNCC Toolkit - Code Family
Assemble phase/bit check-matrix pairs from CDM layers, rebalance them
and compute their entanglement-assisted parameters
"""

import dataclasses
import logging
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import numpy as np

from config import Config
from core.alist import save_alist
from core.errors import InvalidConfigError
from core.gf2 import BinMatrix, mul_transpose, rank
from codes.girth import Girth, girth, shortest
from designs.cdm import Cdm, cdm_build, is_odd_prime, save_cdm
from designs.layers import Layer, expand, stack_layers
from storage.file_engine import FileEngine

logger = logging.getLogger(__name__)

IRREGULAR = "irregular"


@dataclass(frozen=True)
class AqnccConfig:
    """Family (p, i, askew) at rebalance level r"""

    p: int
    i: int = 0
    r: int = 0
    askew: bool = False

    def __post_init__(self):
        if not is_odd_prime(self.p):
            raise InvalidConfigError(f"p = {self.p} is not an odd prime")
        if not self.askew and self.p < 5:
            raise InvalidConfigError(f"p = {self.p} violates p >= 5 (use askew for p = 3)")
        if not 0 <= self.i <= self.i_max:
            raise InvalidConfigError(
                f"i = {self.i} violates 0 <= i <= {self.i_max} for p = {self.p}"
                f"{' (askew)' if self.askew else ''}"
            )
        if not 0 <= self.r <= self.r_max:
            raise InvalidConfigError(
                f"r = {self.r} violates 0 <= r <= {self.r_max} "
                f"(the bit side must keep at least one layer)"
            )

    @property
    def half(self) -> int:
        return (self.p - 1) // 2

    @property
    def i_max(self) -> int:
        return (self.p - 3) // 2 if self.askew else (self.p - 5) // 2

    @property
    def bit_layer_count(self) -> int:
        """Bit-side layers after discarding, before any move"""
        return self.half - self.i

    @property
    def r_max(self) -> int:
        return self.bit_layer_count - 1

    @property
    def r_values(self) -> range:
        return range(0, self.r_max + 1)

    @property
    def n(self) -> int:
        return self.p * self.p

    @property
    def formula_k(self) -> int:
        """Closed-form dimension stated for the family"""
        if self.askew:
            return (2 * self.i + 3) * (self.p - 1)
        return 2 * (self.i + 1) * (self.p - 1)

    def with_r(self, r: int) -> 'AqnccConfig':
        return dataclasses.replace(self, r=r)


@dataclass(frozen=True, eq=False)
class CodePair:
    """Phase-side H1' and bit-side H2' with layer bookkeeping"""

    config: AqnccConfig
    h1: BinMatrix
    h2: BinMatrix
    phase_labels: Tuple[int, ...]
    bit_labels: Tuple[int, ...]
    moved_labels: Tuple[int, ...]
    discarded_labels: Tuple[int, ...]
    moved: BinMatrix

    def __post_init__(self):
        n = self.config.n
        if self.h1.n_cols != n or self.h2.n_cols != n:
            raise InvalidConfigError(f"both sides must have p^2 = {n} columns")
        p = self.config.p
        if self.h1.n_rows != p * len(self.phase_labels) or self.h2.n_rows != p * len(self.bit_labels):
            raise InvalidConfigError("each side must consist of whole layers")

    @property
    def layer_assignment(self) -> Dict[str, List[int]]:
        return {
            'phase': list(self.phase_labels),
            'bit': list(self.bit_labels),
            'moved': list(self.moved_labels),
            'discarded': list(self.discarded_labels),
        }


@dataclass(frozen=True)
class CodeParams:
    """[[n, k; c]] plus ranks, girth and weight regularity"""

    n: int
    k: int
    c: int
    rank_h1: int
    rank_h2: int
    girth: Girth
    girth_phase: Girth
    girth_bit: Girth
    row_weight: Union[int, str]
    col_weight_phase: Union[int, str]
    col_weight_bit: Union[int, str]
    formula_k: int

    @property
    def formula_matches(self) -> bool:
        return self.k == self.formula_k

    @property
    def notation(self) -> str:
        return f"[[{self.n},{self.k};{self.c}]]"

    def as_dict(self) -> Dict[str, Any]:
        data = dataclasses.asdict(self)
        data['formula_matches'] = self.formula_matches
        data['notation'] = self.notation
        return data


@lru_cache(maxsize=None)
def family_cdm(p: int, askew: bool) -> Cdm:
    return cdm_build(p, askew)


@lru_cache(maxsize=None)
def family_layers(p: int, askew: bool) -> Tuple[Layer, ...]:
    return tuple(expand(family_cdm(p, askew)))


def split_labels(cfg: AqnccConfig) -> Tuple[List[int], List[int], List[int], List[int]]:
    """(phase, bit, moved, discarded) generator labels for a configuration

    Discarded layers come off the tail of each side; moved layers are the
    leading layers of the bit side and are appended to the phase side.
    """
    h = cfg.half
    phase = list(range(1, h + 1))
    bit = list(range(h + 1, cfg.p))

    discarded = []
    if cfg.i:
        discarded = phase[h - cfg.i:] + bit[h - cfg.i:]
        phase = phase[:h - cfg.i]
        bit = bit[:h - cfg.i]

    if cfg.askew:
        phase = [0] + phase

    moved = bit[:cfg.r]
    return phase + moved, bit[cfg.r:], moved, discarded


@lru_cache(maxsize=256)
def assemble(cfg: AqnccConfig) -> CodePair:
    """Build H1' and H2' for the configuration"""
    layers = {layer.label: layer for layer in family_layers(cfg.p, cfg.askew)}
    phase, bit, moved, discarded = split_labels(cfg)

    pair = CodePair(
        config=cfg,
        h1=stack_layers([layers[a] for a in phase], cfg.p),
        h2=stack_layers([layers[a] for a in bit], cfg.p),
        phase_labels=tuple(phase),
        bit_labels=tuple(bit),
        moved_labels=tuple(moved),
        discarded_labels=tuple(discarded),
        moved=stack_layers([layers[a] for a in moved], cfg.p),
    )
    logger.debug(f"Assembled p={cfg.p} i={cfg.i} r={cfg.r} askew={cfg.askew}: "
                 f"phase {phase}, bit {bit}")
    return pair


def rebalance(pair: CodePair, new_r: int) -> CodePair:
    """Re-assemble the pair's family at level new_r"""
    return assemble(pair.config.with_r(new_r))


def _uniform(weights: np.ndarray) -> Union[int, str]:
    values = np.unique(weights)
    if values.size == 1:
        return int(values[0])
    return IRREGULAR if values.size else 0


def params(pair: CodePair) -> CodeParams:
    """Parameters from numerically computed GF(2) ranks"""
    cfg = pair.config
    rank_h1 = rank(pair.h1)
    rank_h2 = rank(pair.h2)
    c = rank(mul_transpose(pair.h1, pair.h2))
    k = cfg.n - rank_h1 - rank_h2 + c

    girth_phase = girth(pair.h1)
    girth_bit = girth(pair.h2)

    result = CodeParams(
        n=cfg.n,
        k=k,
        c=c,
        rank_h1=rank_h1,
        rank_h2=rank_h2,
        girth=shortest(girth_phase, girth_bit),
        girth_phase=girth_phase,
        girth_bit=girth_bit,
        row_weight=_uniform(np.concatenate([pair.h1.row_weights(), pair.h2.row_weights()])),
        col_weight_phase=_uniform(pair.h1.col_weights()),
        col_weight_bit=_uniform(pair.h2.col_weights()),
        formula_k=cfg.formula_k,
    )

    if not result.formula_matches:
        logger.warning(f"Computed k = {k} differs from the closed form {cfg.formula_k} "
                       f"for p={cfg.p} i={cfg.i} askew={cfg.askew}")
    return result


def export_pair(pair: CodePair, directory: Union[str, Path],
                code_params: Optional[CodeParams] = None,
                run_config: Optional[Dict[str, Any]] = None) -> Dict[str, Path]:
    """Write h1.alist, h2.alist, cdm.txt and metadata.json into directory"""
    directory = Path(directory)
    code_params = code_params or params(pair)
    cfg = pair.config

    written = {
        'h1': save_alist(directory / "h1.alist", pair.h1),
        'h2': save_alist(directory / "h2.alist", pair.h2),
        'cdm': save_cdm(directory / "cdm.txt", family_cdm(cfg.p, cfg.askew)),
    }
    metadata = {
        'tool': Config.get_tool_info(),
        'config': dataclasses.asdict(cfg),
        'layer_assignment': pair.layer_assignment,
        'params': code_params.as_dict(),
    }
    if run_config is not None:
        metadata['run_config'] = run_config
    written['metadata'] = FileEngine.save_json(directory / "metadata.json", metadata)

    logger.info(f"Exported {code_params.notation} code to {directory}")
    return written
