"""
AQNCC Toolkit - Decoding Module
Syndrome-based sum-product decoding
"""

__version__ = "1.0.0"

from .bp_decoder import DecodeOutcome, SumProductDecoder, bp_syndrome_decode

__all__ = [
    'DecodeOutcome',
    'SumProductDecoder',
    'bp_syndrome_decode',
]
