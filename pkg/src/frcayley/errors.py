"""Shared exception and warning types."""

from __future__ import annotations


class FrCayleyError(Exception):
    """Base class for all errors raised by this package."""


class InvalidGroupError(FrCayleyError, ValueError):
    """A group description is malformed (empty, or a factor order below 2)."""


class SpecFormatError(FrCayleyError, ValueError):
    """A JSON document does not have the expected structure."""


class ZeroInSetError(FrCayleyError, ValueError):
    """A connection set contains the identity element."""


class AsymmetricSetError(FrCayleyError, ValueError):
    """A connection set is not closed under negation."""


class NotInvolutionError(FrCayleyError, ValueError):
    """An element expected to have order two does not."""


class NonIntegralSpectrumError(FrCayleyError, ValueError):
    """An operation requiring an integer spectrum was given a non-integral one."""


class NotClassFunctionError(FrCayleyError, ValueError):
    """A group function is not constant on the unit-multiplication orbits."""


class HypothesisViolationError(FrCayleyError, ValueError):
    """A family builder was called with parameters outside its hypotheses."""


class OracleDimensionError(FrCayleyError, ValueError):
    """A dense numeric check was requested beyond its size guard."""


class DisconnectedGraphWarning(UserWarning):
    """The connection set does not generate the whole group."""
