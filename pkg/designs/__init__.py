"""
AQNCC Toolkit - Designs Module
Cyclic difference matrices and their circulant expansion
"""

__version__ = "1.0.0"

from .cdm import Cdm, cdm_build, cdm_verify, dumps_cdm, loads_cdm, save_cdm, load_cdm
from .layers import (
    Layer,
    circulant,
    expand,
    layer_of_row,
    stack_layers,
    reflection_permutations,
    shear_permutation,
    reflect_layer,
)

__all__ = [
    'Cdm',
    'cdm_build',
    'cdm_verify',
    'dumps_cdm',
    'loads_cdm',
    'save_cdm',
    'load_cdm',
    'Layer',
    'circulant',
    'expand',
    'layer_of_row',
    'stack_layers',
    'reflection_permutations',
    'shear_permutation',
    'reflect_layer',
]
