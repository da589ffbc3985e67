"""Exception types shared across the engine."""

from __future__ import annotations


class EngineError(Exception):
    """Base class for all engine-level failures."""


class NotFiniteType(EngineError):
    """The Cartan matrix is not of finite type; root generation would not terminate."""


class NotDominant(EngineError):
    """A weight violates a dominance precondition."""


class NotDecomposable(EngineError):
    """A character is not a nonnegative sum of irreducible characters."""


class GuardrailExceeded(EngineError):
    """A character support grew past the configured safety bound."""


class NonIntegralPlethysm(EngineError):
    """A Newton-identity division left a remainder; the input was not a genuine character."""


class ParseError(EngineError):
    """Expression text failed to parse.

    Carries the 0-based offset of the offending character and a
    description of what was expected there.
    """

    def __init__(self, position: int, expected: str):
        self.position = position
        self.expected = expected
        super().__init__(f"parse error at position {position}: expected {expected}")
