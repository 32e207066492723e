"""Custom exception hierarchy for ktile.

This module defines the base exception class and the specific error types
raised by the sequence evaluators, the tiling model, the proof
decompositions and the identity harness.
"""


class KtileError(Exception):
    """Base exception for all ktile errors.

    Catching this exception will catch every error raised by the library.

    Attributes:
        message (str): Explanation of the error.
    """
    def __init__(self, message: str):
        self.message = message
        super().__init__(self.message)


class ConfigError(KtileError):
    """Raised when an environment override cannot be parsed."""
    pass


class InvalidArgumentError(KtileError):
    """Raised for out-of-domain arguments.

    Covers k < 2, n < 0 and empty grid ranges.
    """
    pass


# Cache

class CacheError(KtileError):
    """Base class for sequence cache failures."""
    pass


class CacheConflictError(CacheError):
    """Raised when a cache key would be rewritten with a different value."""
    pass


class CacheFormatError(CacheError):
    """Raised when a cache file line is not `kind,k,n,value`."""
    pass


# Tilings

class TilingError(KtileError):
    """Base class for tiling model failures."""
    pass


class MalformedCodeError(TilingError):
    """Raised when a code string holds characters outside {w, b, g}."""
    pass


class InvariantViolationError(TilingError):
    """Raised when a piece sequence is not a type-A tiling of its board.

    This covers a width sum that differs from the board length, a missing or
    repeated black square, and a black square beyond cell k.
    """
    pass


class EnumerationLimitError(TilingError):
    """Raised when n exceeds the configured enumeration bound."""
    pass


class NotTypeBError(TilingError):
    """Raised when an operation needs a type-B tiling and got another."""
    pass


class BoardTooSmallError(TilingError):
    """Raised when the board is too short for the requested structure."""
    pass


# Decompositions

class DecompositionError(KtileError):
    """Base class for proof-decomposition failures."""
    pass


class NoGrayError(DecompositionError):
    """Raised when a decomposition needs a gray rectangle and none exists."""
    pass


class FewerThanTwoGraysError(DecompositionError):
    """Raised when fewer than two gray rectangles are present."""
    pass


class NoPieceBeforeTailError(DecompositionError):
    """Raised when the tail covers the whole tiling."""
    pass


class ReducedTilingNotTypeBError(DecompositionError):
    """Raised when removing the piece before the tail leaves a non type-B tiling.

    Attributes:
        decomposition: The decomposition whose remainder failed the check.
    """
    def __init__(self, message: str, decomposition=None):
        super().__init__(message)
        self.decomposition = decomposition


# Identities

class IdentityError(KtileError):
    """Base class for identity harness failures."""
    pass


class NotApplicableError(IdentityError):
    """Raised when an identity is evaluated outside its range."""
    pass


class UnknownIdentityError(IdentityError):
    """Raised when a selection names an identity that is not registered."""
    pass


class EvaluatorDisagreementError(IdentityError):
    """Raised when the two independent right-hand-side routes differ."""
    pass
