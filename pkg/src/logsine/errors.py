"""Failure types shared across the numeric modules."""


class CertificationError(Exception):
    """A requested absolute-error tolerance cannot be certified.

    Raised when the achievable certified bound (including the final
    double-rounding floor) exceeds the caller's target.
    """


class RefinementExhausted(CertificationError):
    """Quadrature refinement hit max depth before certifying the tolerance."""
