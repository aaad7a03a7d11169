"""
Error hierarchy for semsim.

Every error derives from SemsimError (a ValueError) and carries the exit code the
CLI uses for it: 2 = usage / bad input, 3 = lookup failure, 4 = empty result.
"""
from __future__ import annotations

from typing import Optional


class SemsimError(ValueError):
    exit_code = 2

    def __init__(self, message: str = "") -> None:
        super().__init__(message)
        self.message = message

    @property
    def name(self) -> str:
        return type(self).__name__


# =======================
# Taxonomy construction
# =======================

class TaxonomyError(SemsimError):
    pass


class CycleDetected(TaxonomyError):
    pass


class DuplicateId(TaxonomyError):
    pass


class DuplicateEdge(TaxonomyError):
    pass


class UnknownEndpoint(TaxonomyError):
    pass


class MultipleRoots(TaxonomyError):
    pass


class NoRoot(TaxonomyError):
    pass


class InvalidConcept(TaxonomyError):
    pass


class DegenerateTaxonomy(TaxonomyError):
    pass


# =======================
# Lookups
# =======================

class LookupFailure(SemsimError):
    exit_code = 3


class UnknownConcept(LookupFailure):
    pass


class UnknownWord(LookupFailure):
    pass


class UnknownMeasure(LookupFailure):
    pass


# =======================
# Parsers
# =======================

class ParseError(SemsimError):
    """Malformed input line. `line` is 1-based (None when not line-specific)."""

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class MissingParentCode(ParseError):
    pass


class DuplicateCode(ParseError):
    pass


class NegativeCount(ParseError):
    pass


class RatingOutOfScale(ParseError):
    pass


class TooFewPairs(SemsimError):
    pass


# =======================
# Information content / measures
# =======================

class EmptyCorpus(SemsimError):
    pass


class ZeroFrequencyConcept(SemsimError):
    pass


class UndefinedRatio(SemsimError):
    pass


class BothSetsEmpty(SemsimError):
    pass


class ComponentUndefined(SemsimError):
    pass


class InvalidParam(SemsimError):
    pass


class UnnormalizedIC(SemsimError):
    pass


class MissingICProvider(SemsimError):
    pass


# =======================
# Bench
# =======================

class LengthMismatch(SemsimError):
    pass


class ConstantSequence(SemsimError):
    pass


class NoCoveredPairs(SemsimError):
    exit_code = 4
