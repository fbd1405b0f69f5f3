# -*- coding: utf-8 -*-
"""
Error types for the quasi-ordinary lct toolkit.
Every error path has a stable machine-readable code and an exit status.
"""

from typing import Any, Dict, Optional

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_INTERNAL_ERROR = 3


class QoLctError(Exception):
    code = "E_QOLCT"
    exit_status = EXIT_INPUT_ERROR

    def __init__(self, message: str, locus: Optional[str] = None):
        super().__init__(message)
        self.message = message
        self.locus = locus

    def to_dict(self) -> Dict[str, Any]:
        return {"error": {"code": self.code, "message": self.message, "locus": self.locus}}


# ---------------------------------------------------------------------
# INPUT / DOCUMENT
# ---------------------------------------------------------------------
class MalformedDocument(QoLctError):
    code = "E_MALFORMED_DOCUMENT"


class MalformedRational(QoLctError):
    code = "E_MALFORMED_RATIONAL"


class RaggedRows(QoLctError):
    code = "E_RAGGED_ROW"


class InvalidDimension(QoLctError):
    code = "E_BAD_DIMENSION"


class NegativeCoordinate(QoLctError):
    code = "E_NEGATIVE_COORDINATE"


class DimensionMismatch(QoLctError):
    code = "E_DIMENSION_MISMATCH"


class IOFailure(QoLctError):
    """An input or output file could not be read or written; the locus is the path."""

    code = "E_IO"


# ---------------------------------------------------------------------
# LATTICES
# ---------------------------------------------------------------------
class RankDeficient(QoLctError):
    code = "E_RANK_DEFICIENT"


class NotSublattice(QoLctError):
    code = "E_NOT_SUBLATTICE"


class NonIntegerIndex(QoLctError):
    """Covolume ratio of a sublattice was not an integer; cannot happen for valid inputs."""

    code = "E_NON_INTEGER_INDEX"
    exit_status = EXIT_INTERNAL_ERROR


# ---------------------------------------------------------------------
# CHARACTERISTIC EXPONENTS
# ---------------------------------------------------------------------
class NotWeaklyIncreasing(QoLctError):
    code = "E_NOT_WEAKLY_INCREASING"

    def __init__(self, j: int):
        super().__init__(f"lambda_{j - 1} is not <= lambda_{j} componentwise", locus=f"exponents[{j - 1}]")
        self.j = j


class InLattice(QoLctError):
    code = "E_IN_LATTICE"

    def __init__(self, j: int):
        super().__init__(f"lambda_{j} belongs to M_{j - 1}", locus=f"exponents[{j - 1}]")
        self.j = j


class NotLexOrdered(QoLctError):
    code = "E_NOT_LEX_ORDERED"


class PreconditionFailed(QoLctError):
    code = "E_PRECONDITION_FAILED"


class GenerationExhausted(QoLctError):
    code = "E_GENERATION_EXHAUSTED"


class InternalInconsistency(QoLctError):
    code = "E_INTERNAL"
    exit_status = EXIT_INTERNAL_ERROR
