# SPDX-FileCopyrightText: 2025 Battelle Memorial Institute
# SPDX-License-Identifier: BSD-2-Clause
r"""Exceptions raised by splitline"""

__all__ = [
    "AccessibilityError",
    "ConsistencyError",
    "DegenerateDenominatorError",
    "GenericityError",
    "HypothesisError",
    "InsufficientWindowError",
    "InvalidInputError",
    "PreconditionError",
    "SplitlineError",
]


class SplitlineError(Exception):
    """Base class for all domain errors"""


class InvalidInputError(SplitlineError, ValueError):
    """Malformed arguments, such as an empty degree list or a cyclic tree"""


class DegenerateDenominatorError(InvalidInputError):
    """Numerology parameters for which a formula's denominator vanishes"""


class InsufficientWindowError(InvalidInputError):
    """An enumeration range too short to produce a stable summary"""


class PreconditionError(SplitlineError):
    """A lemma was applied outside of its hypotheses"""


class HypothesisError(PreconditionError):
    """A comb violates the hypotheses of the smoothing reduction"""


class AccessibilityError(PreconditionError):
    """The fang construction admits no balanced extension for the parameters"""


class GenericityError(SplitlineError):
    """No general choice was found, or none can exist"""


class ConsistencyError(SplitlineError):
    """Two computations of the same quantity disagree, such as a degree lost in bookkeeping"""
