"""Riemann zeta values: exact rational-times-pi-power form at even integer
arguments, and certified numeric evaluation at any integer argument >= 2.

Even arguments come from the Bernoulli bridge

    zeta(2k) = (-1)^(k+1) (2 pi)^(2k) B_{2k} / (2 (2k)!)

whose pi-free coefficient is carried exactly.  Numeric evaluation sums the
defining series sum_{l>=1} l^(-s) to a cutoff N and replaces the tail by
the integral estimate N^(1-s)/(s-1) plus endpoint corrections (the usual
Euler-Maclaurin ladder, with exact Bernoulli coefficients); the remainder
after m correction pairs is bounded by the first omitted correction term,
which fixes N and m for any requested tolerance.  The double-precision
constants used downstream (math.pi, math.log) are good to >= 15 significant
digits; certified bounds here always include the final rounding to double.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ._precision import dps_for, float_with_bound, mp, mp_round_slack, mpf, workdps
from .errors import CertificationError
from .exact_core import BernoulliTable, bernoulli_table

__all__ = [
    "RealApprox",
    "ZetaEvenValue",
    "zeta_even_exact",
    "zeta_series_partial",
    "zeta_numeric",
]


@dataclass(frozen=True)
class RealApprox:
    """A double plus a certified absolute error bound.

    The represented true quantity lies in [value - abs_error, value + abs_error].
    """

    value: float
    abs_error: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.abs_error) or self.abs_error < 0:
            raise ValueError("abs_error must be finite and nonnegative")


@dataclass(frozen=True)
class ZetaEvenValue:
    """zeta(2k) = coefficient * pi^(2k) with an exact positive coefficient."""

    k: int
    pi_power: int
    coefficient: Fraction

    def float_value(self) -> float:
        """Double-precision zeta(2k) from the exact coefficient."""
        return float(self.coefficient) * math.pi ** self.pi_power


def zeta_even_exact(k: int, table: BernoulliTable) -> ZetaEvenValue:
    """Exact zeta(2k)/pi^(2k) via the Bernoulli bridge; requires B_{2k}."""
    if k < 1:
        raise ValueError("require k >= 1")
    if table.max_index < 2 * k:
        raise ValueError(f"table holds B_0..B_{table.max_index}, need B_{2 * k}")
    coeff = (
        Fraction((-1) ** (k + 1) * 2 ** (2 * k), 2 * math.factorial(2 * k))
        * table[2 * k]
    )
    return ZetaEvenValue(k=k, pi_power=2 * k, coefficient=coeff)


def zeta_series_partial(s: float, terms: int) -> float:
    """Partial sum sum_{l=1}^{terms} l^(-s) of the defining series (s > 1).

    Exactly-rounded summation, so the result is nondecreasing in ``terms``
    and always approaches the limit from below.
    """
    if not s > 1:
        raise ValueError("the series converges only for s > 1")
    if terms < 1:
        raise ValueError("terms must be positive")
    return math.fsum(l ** (-s) for l in range(1, terms + 1))


def _euler_maclaurin(s: int, n_head: int) -> tuple[mpf, mpf]:
    """Series head + integral tail + correction ladder at the current mp
    precision.  Returns (value, analytic remainder bound).

    Correction pairs are added until the next one drops below the working
    precision; the remainder is bounded by twice the first omitted term
    (the exact remainder has the magnitude and sign of that term for this
    completely monotone summand; the factor 2 is slack).
    """
    head = mpf(0)
    for l in range(1, n_head):
        head += mpf(l) ** (-s)
    big_n = mpf(n_head)
    value = head + big_n ** (1 - s) / (s - 1) + big_n ** (-s) / 2
    threshold = mpf(10) ** (-(mp.dps + 6))
    j = 0
    term = mpf(0)
    while True:
        j += 1
        if j > 60:
            raise CertificationError("correction ladder failed to close")
        b2j = bernoulli_table(2 * j + 2)[2 * j]
        rising = math.prod(range(s, s + 2 * j - 1))
        term = (
            mpf(b2j.numerator)
            / b2j.denominator
            / math.factorial(2 * j)
            * rising
            * big_n ** (-s - 2 * j + 1)
        )
        if abs(term) <= threshold:
            break
        value += term
    return value, 2 * abs(term)


def _zeta_mpf(s: int) -> tuple[mpf, mpf]:
    """zeta(s) at the current mp precision: (value, analytic bound)."""
    return _euler_maclaurin(s, n_head=max(64, mp.dps))


def zeta_numeric(s: int, target_abs_error: float) -> RealApprox:
    """Certified zeta(s) for integer s >= 2.

    Raises CertificationError when the target undercuts what a double can
    carry (about half an ulp of the result).
    """
    if isinstance(s, bool) or not isinstance(s, int):
        raise ValueError("s must be an integer")
    if s < 2:
        raise ValueError("require integer s >= 2")
    if not target_abs_error > 0:
        raise ValueError("target absolute error must be positive")
    dps = dps_for(target_abs_error)
    with workdps(dps):
        value_mp, analytic = _zeta_mpf(s)
        internal = analytic + mp_round_slack(mpf(2), dps)
        value, bound = float_with_bound(value_mp, internal)
    if bound > target_abs_error:
        raise CertificationError(
            f"zeta({s}) certified to {bound:.3e}, target {target_abs_error:.3e}"
        )
    return RealApprox(value=value, abs_error=bound)
