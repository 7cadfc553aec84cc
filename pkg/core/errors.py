#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
AQNCC Toolkit - Errors
Exception hierarchy shared by every module
"""


class AqnccError(Exception):
    """Base class for all toolkit errors"""


class DimensionMismatchError(AqnccError, ValueError):
    """Operand shapes do not agree"""


class InvalidDesignError(AqnccError, ValueError):
    """A cyclic difference matrix or layer violates its defining property"""


class InvalidConfigError(AqnccError, ValueError):
    """A family, channel or run parameter is out of bounds"""


class DecoderInputError(AqnccError, ValueError):
    """Syndrome or prior handed to the decoder is malformed"""


class FormatError(AqnccError, ValueError):
    """An alist, CDM or config file could not be parsed"""
