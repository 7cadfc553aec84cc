"""
AQNCC Toolkit - Codes Module
Code-family assembly, parameters, girth and criteria audit
"""

__version__ = "1.0.0"

from .girth import girth, GIRTH_AT_LEAST_EIGHT, ACYCLIC
from .family import (
    AqnccConfig,
    CodePair,
    CodeParams,
    assemble,
    rebalance,
    params,
    export_pair,
)
from .criteria import CriteriaReport, CriterionResult, check_criteria

__all__ = [
    'girth',
    'GIRTH_AT_LEAST_EIGHT',
    'ACYCLIC',
    'AqnccConfig',
    'CodePair',
    'CodeParams',
    'assemble',
    'rebalance',
    'params',
    'export_pair',
    'CriteriaReport',
    'CriterionResult',
    'check_criteria',
]
