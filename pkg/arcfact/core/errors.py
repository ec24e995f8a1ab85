"""
Exception taxonomy for arcfact.
Every error carries the process exit code the CLI maps it to.
"""

from typing import Optional


class ArcfactError(Exception):
    """Base class for every error raised by the engine."""
    exit_code = 1
    kind = "error"


class InvalidArgumentError(ArcfactError, ValueError):
    """Bad input: wrong degree, non-prime modulus, unknown case id, ..."""
    exit_code = 3
    kind = "invalid-argument"


class PreconditionError(InvalidArgumentError):
    """An operation was called on an object that does not meet its precondition."""
    kind = "precondition-violation"


class ParseError(InvalidArgumentError):
    """Malformed cycle string or group spec."""
    kind = "parse-error"

    def __init__(self, message: str, text: str, offset: int):
        super().__init__(f"{message} at offset {offset}: {text!r}")
        self.text = text
        self.offset = offset


class InvalidPermutationError(InvalidArgumentError):
    """Images do not form a bijection."""
    kind = "invalid-permutation"


class DegenerateDigraphError(InvalidArgumentError):
    """Connecting element lies in the vertex stabilizer, so the base arc is a loop."""
    kind = "degenerate"


class NotADigraphError(InvalidArgumentError):
    """The coset relation is symmetric: h * g * h2 = g^-1 for some h, h2 in H."""
    kind = "not-a-digraph"

    def __init__(self, message: str, h=None, h2=None):
        super().__init__(message)
        self.h = h
        self.h2 = h2


class ResourceLimitError(ArcfactError):
    """A configured bound was hit; the computation was abandoned, never truncated."""
    exit_code = 2
    kind = "resource-limit"

    def __init__(self, bound_name: str, bound: int, requested: Optional[int] = None):
        detail = f" (needed {requested})" if requested is not None else ""
        super().__init__(f"bound '{bound_name}' = {bound} exceeded{detail}")
        self.bound_name = bound_name
        self.bound = bound
        self.requested = requested


class InternalInvariantError(ArcfactError):
    """Two independent computations disagreed. Results cannot be trusted."""
    exit_code = 1
    kind = "internal-error"
