"""Exception hierarchy shared by all modules.

The CLI maps these onto exit codes: ParseError -> 2, ValidationError -> 3,
EngineInconsistencyError -> 4.
"""


class PQError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(PQError):
    """Malformed input text (cycle notation, .pq files, row files, polynomials)."""


class ValidationError(PQError):
    """Input is well-formed but violates a mathematical precondition."""


class EngineInconsistencyError(PQError):
    """An internal consistency gate failed; signals a bug, not bad input."""
