"""
AQNCC Toolkit - Core Module
Exact GF(2) linear algebra and the alist codec
"""

__version__ = "1.0.0"

from .errors import (
    AqnccError,
    DimensionMismatchError,
    InvalidDesignError,
    InvalidConfigError,
    DecoderInputError,
    FormatError,
)
from .gf2 import BinMatrix, rank, mul_transpose, in_rowspace, vstack, hstack, syndrome

__all__ = [
    'AqnccError',
    'DimensionMismatchError',
    'InvalidDesignError',
    'InvalidConfigError',
    'DecoderInputError',
    'FormatError',
    'BinMatrix',
    'rank',
    'mul_transpose',
    'in_rowspace',
    'vstack',
    'hstack',
    'syndrome',
]
