"""
AQNCC Toolkit - Storage Module
Atomic artifact persistence
"""

__version__ = "1.0.0"

from .file_engine import FileEngine

__all__ = [
    'FileEngine',
]
