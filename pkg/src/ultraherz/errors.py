"""Exception types shared across the package."""

from __future__ import annotations


class UltraherzError(Exception):
    """Base class for every error raised by this package."""


class DomainError(UltraherzError):
    """A mathematical precondition was violated (non-integrable tail, bad prime, ...)."""


class TailCombinationError(UltraherzError):
    """Two tails with different power-law rates cannot be added exactly.

    Carries both rates so callers can see what clashed. The usual fix is to
    widen the explicit windows until the offending region is materialized as
    plain shell coefficients.
    """

    def __init__(self, side: str, rate_a: float, rate_b: float):
        self.side = side
        self.rate_a = rate_a
        self.rate_b = rate_b
        super().__init__(
            f"{side} tails have different rates ({rate_a} vs {rate_b}) and both "
            "amplitudes are nonzero; the sum is not a single power law. Widen the "
            "explicit windows so the clashing region is covered by shell coefficients."
        )


class ClassClosureError(UltraherzError):
    """An operator output would leave the radial-step-with-power-tails class."""


class HypothesisViolationError(UltraherzError):
    """A theorem-harness hypothesis failed. Carries the full check report."""

    def __init__(self, message: str, report=None):
        self.report = report
        super().__init__(message)


class SerializationError(UltraherzError):
    """A JSON document could not be parsed into a package object."""

    def __init__(self, message: str, path: str | None = None, field: str | None = None):
        self.path = path
        self.field = field
        loc = ""
        if path:
            loc += f" in {path}"
        if field:
            loc += f" at field '{field}'"
        super().__init__(message + loc)
