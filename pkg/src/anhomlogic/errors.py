"""Exception hierarchy shared by every module."""

from __future__ import annotations


class AnhomError(Exception):
    """Base class for all library errors."""


class ShapeError(AnhomError, ValueError):
    """Matrix or vector dimensions do not conform."""


class CapacityError(AnhomError, ValueError):
    """Requested size exceeds what the routine can enumerate."""


class DisjointnessError(AnhomError, ValueError):
    """Events that must be disjoint overlap."""


class ArgumentError(AnhomError, ValueError):
    """Malformed argument, e.g. repeated outcomes in an interference tuple."""


class NotAdditiveError(AnhomError):
    pass


class NotMultiplicativeError(AnhomError):
    pass


class DegenerateError(AnhomError):
    """The zero function has no additive or multiplicative decomposition."""


class NotACoeventError(AnhomError):
    """A truth table disagrees with its degree-2 reconstruction.

    ``witness`` is an event on which the two differ.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotIdempotentError(AnhomError):
    """``witness`` is a basis index ``c`` with ``M(M e_c) != M e_c``."""

    def __init__(self, message: str, witness: int | None = None):
        super().__init__(message)
        self.witness = witness


class IncompatibleError(AnhomError):
    """Operation needs commuting projections."""


class ParseError(AnhomError, ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


class IndexRangeError(ParseError):
    """An outcome index outside 1..n."""
