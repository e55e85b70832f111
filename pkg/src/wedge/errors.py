"""Exception hierarchy shared by every wedge module."""

from __future__ import annotations


class WedgeError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(WedgeError, ValueError):
    """An argument lies outside the domain of the operation."""


class ParseError(WedgeError, ValueError):
    """Malformed text input.

    ``offset`` is a 0-based character offset (sexagesimal literals);
    ``line``/``column`` are 1-based (construction scripts).
    """

    def __init__(self, message, *, offset=None, line=None, column=None, token=None):
        self.message = message
        self.offset = offset
        self.line = line
        self.column = column
        self.token = token
        super().__init__(str(self))

    def __str__(self):
        where = []
        if self.line is not None:
            where.append(f"{self.line}:{self.column}")
        if self.offset is not None:
            where.append(f"offset {self.offset}")
        prefix = f"{' '.join(where)}: " if where else ""
        suffix = f" (at {self.token!r})" if self.token is not None else ""
        return f"{prefix}{self.message}{suffix}"


class GeometryError(WedgeError):
    """A construction step has no well-defined result."""


class DegenerateLineError(GeometryError):
    pass


class ParallelLinesError(GeometryError):
    pass


class CoincidentLinesError(GeometryError):
    pass


class VerificationError(WedgeError):
    """An identity that must hold exactly did not hold."""

    def __init__(self, identity, lhs, rhs):
        self.identity = identity
        self.lhs = lhs
        self.rhs = rhs
        super().__init__(f"identity {identity!r} failed: {lhs} != {rhs}")


class InapplicableStepError(WedgeError):
    """A descent step was requested for a pair whose first entry is odd."""

    def __init__(self, pair, parity_witness):
        self.pair = pair
        self.parity_witness = parity_witness
        super().__init__(
            f"descent step inapplicable to (H={pair.H}, S={pair.S}): "
            f"H is odd (H^2 = {parity_witness})"
        )


class FalsificationError(WedgeError):
    """An exhaustive search found an integer solution of H^2 = n S^2 for non-square n."""
