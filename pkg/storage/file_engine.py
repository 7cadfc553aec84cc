#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
AQNCC Toolkit - File Engine
Artifact file management with atomic writes and locking
"""

import dataclasses
import json
import os
import logging
import threading
import tempfile
from enum import Enum
from pathlib import Path
from typing import Any, Union

import numpy as np

from core.errors import FormatError

logger = logging.getLogger(__name__)

class FileEngine:
    """Artifact File Management Engine"""

    # Thread lock for file operations
    _file_locks = {}
    _global_lock = threading.RLock()

    @staticmethod
    def load_json(file_path: Union[str, Path]) -> Any:
        """Load a JSON file, raising FormatError when it cannot be parsed"""
        file_path = Path(file_path)
        try:
            with FileEngine._get_file_lock(file_path):
                with open(file_path, 'r', encoding='utf-8') as f:
                    data = json.load(f)
        except json.JSONDecodeError as e:
            logger.error(f"JSON decode error in {file_path}: {e}")
            raise FormatError(f"{file_path} is not valid JSON: {e}") from e

        logger.debug(f"Loaded JSON: {file_path}")
        return data

    @staticmethod
    def load_text(file_path: Union[str, Path]) -> str:
        """Load a UTF-8 text file"""
        file_path = Path(file_path)
        with FileEngine._get_file_lock(file_path):
            with open(file_path, 'r', encoding='utf-8') as f:
                return f.read()

    @staticmethod
    def save_json(file_path: Union[str, Path], data: Any, indent: int = 2) -> Path:
        """Save data to a JSON file with atomic write"""
        text = json.dumps(data, indent=indent, ensure_ascii=False,
                          default=FileEngine._json_serializer)
        return FileEngine.save_text(file_path, text + "\n")

    @staticmethod
    def save_text(file_path: Union[str, Path], text: str) -> Path:
        """Save text through a temporary file and an atomic replace"""
        file_path = Path(file_path)

        # Create directory if it doesn't exist
        file_path.parent.mkdir(parents=True, exist_ok=True)

        with FileEngine._get_file_lock(file_path):
            temp_fd, temp_path = tempfile.mkstemp(
                prefix=f".{file_path.stem}_",
                suffix=".tmp",
                dir=file_path.parent
            )

            try:
                # newline='' keeps CSV line endings byte-identical across platforms
                with os.fdopen(temp_fd, 'w', encoding='utf-8', newline='') as f:
                    f.write(text)

                # Atomic replace
                os.replace(temp_path, file_path)

            except BaseException:
                # Clean up temp file on error
                try:
                    os.unlink(temp_path)
                except OSError:
                    pass
                raise

        logger.debug(f"Saved: {file_path}")
        return file_path

    @staticmethod
    def _json_serializer(obj):
        """Custom JSON serializer for unsupported types"""
        if isinstance(obj, Path):
            return str(obj)
        elif isinstance(obj, Enum):
            return obj.value
        elif isinstance(obj, np.integer):
            return int(obj)
        elif isinstance(obj, np.floating):
            return float(obj)
        elif isinstance(obj, np.bool_):
            return bool(obj)
        elif isinstance(obj, np.ndarray):
            return obj.tolist()
        elif dataclasses.is_dataclass(obj) and not isinstance(obj, type):
            return dataclasses.asdict(obj)
        elif isinstance(obj, (set, frozenset)):
            return sorted(obj)
        else:
            raise TypeError(f"Object of type {type(obj).__name__} is not JSON serializable")

    @staticmethod
    def _get_file_lock(file_path: Path) -> threading.RLock:
        """Get or create lock for a file"""
        lock_key = str(file_path.absolute())

        with FileEngine._global_lock:
            if lock_key not in FileEngine._file_locks:
                FileEngine._file_locks[lock_key] = threading.RLock()

            return FileEngine._file_locks[lock_key]
