"""Fourier-series route to the same integrals: partial sums of the
log-sine and sawtooth series, the orthogonality shortcut to
int_0^{pi/2} (log(2 sin x))^2 dx, and an independent derivation of the
log-sine closed form by repeated integration by parts.

Restricting the power series of log(1 - z) to the unit circle and
splitting real from imaginary parts gives, for theta in (0, 2pi):

    log(2 |sin(theta/2)|) = -sum_{l>=1} cos(l theta)/l
    (theta - pi)/2        = -sum_{l>=1} sin(l theta)/l

The first series squares and integrates, via cosine orthogonality, to
(pi/4) sum 1/l^2 = pi^3/24.  Multiplied by theta^n and integrated by
parts it instead descends in cos -> sin -> cos couplets, the power of
theta falling by two per couplet with endpoint contributions only on the
second beat; unrolling that cadence reproduces the closed-form
coefficients of I_n by a wholly different route.

Both series diverge on the lattice theta = 0 mod 2pi; angles within
1e-9 of it are rejected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .logsine_closed_form import SymbolicLogSine

__all__ = [
    "FourierPartialSum",
    "logsin_partial_sum",
    "sawtooth_partial_sum",
    "logsin_series_partial",
    "sawtooth_series_partial",
    "parseval_logsquared",
    "logsine_via_fourier",
]

_LATTICE_RADIUS = 1e-9


def _validate_theta(theta: float) -> None:
    if not (0.0 < theta < 2.0 * math.pi):
        raise ValueError("theta must lie strictly inside (0, 2*pi)")
    if theta <= _LATTICE_RADIUS or theta >= 2.0 * math.pi - _LATTICE_RADIUS:
        raise ValueError("theta too close to the divergent lattice 0 mod 2*pi")


def _validate_terms(terms: int) -> None:
    if terms < 1:
        raise ValueError("terms must be positive")


def logsin_series_partial(theta: float, terms: int) -> float:
    """-sum_{l=1}^{terms} cos(l*theta)/l, the log(2|sin(theta/2)|) series."""
    _validate_theta(theta)
    _validate_terms(terms)
    l = np.arange(1, terms + 1, dtype=np.float64)
    return float(-np.sum(np.cos(l * theta) / l))


def sawtooth_series_partial(theta: float, terms: int) -> float:
    """-sum_{l=1}^{terms} sin(l*theta)/l, the (theta - pi)/2 series."""
    _validate_theta(theta)
    _validate_terms(terms)
    l = np.arange(1, terms + 1, dtype=np.float64)
    return float(-np.sum(np.sin(l * theta) / l))


@dataclass(frozen=True)
class FourierPartialSum:
    """A fixed-length partial sum, evaluated pointwise on (0, 2pi)."""

    terms: int
    evaluate: Callable[[float], float]

    def __call__(self, theta: float) -> float:
        return self.evaluate(theta)


def logsin_partial_sum(terms: int) -> FourierPartialSum:
    _validate_terms(terms)
    return FourierPartialSum(
        terms=terms, evaluate=lambda theta: logsin_series_partial(theta, terms)
    )


def sawtooth_partial_sum(terms: int) -> FourierPartialSum:
    _validate_terms(terms)
    return FourierPartialSum(
        terms=terms, evaluate=lambda theta: sawtooth_series_partial(theta, terms)
    )


def parseval_logsquared(terms: int) -> float:
    """(pi/4) sum_{l=1}^{terms} 1/l^2: the orthogonality route to
    int_0^{pi/2} (log(2 sin x))^2 dx.

    Strictly increasing in ``terms`` with limit pi^3/24; the tail after N
    terms is below (pi/4)/N.
    """
    _validate_terms(terms)
    l = np.arange(1, terms + 1, dtype=np.float64)
    return float(math.pi / 4 * np.sum(1.0 / (l * l)))


def _theta_cosine_moments(n: int) -> dict[int, Fraction]:
    """Coefficients c_k with int_0^pi theta^p cos(2l theta) dtheta
    = sum_k c_k pi^(p-2k+1) / l^(2k), unrolled from the two-step descent

        M_p = (p/4) pi^(p-1) u - (p(p-1)/4) u M_{p-2},   u = 1/l^2,

    whose terminal moments M_0 and M_1 both vanish (the plain and
    theta-weighted cosine moments over a whole number of periods).
    """
    table: list[dict[int, Fraction]] = [{}, {}]
    for p in range(2, n + 1):
        step: dict[int, Fraction] = {1: Fraction(p, 4)}
        for k, c in table[p - 2].items():
            step[k + 1] = step.get(k + 1, Fraction(0)) - Fraction(p * (p - 1), 4) * c
        table.append({k: c for k, c in step.items() if c != 0})
    return table[n]


def logsine_via_fourier(n: int) -> SymbolicLogSine:
    """Closed-form coefficients of I_n rebuilt from the integration-by-parts
    cadence instead of the direct formula.

    Writing log(sin theta) = -log 2 - sum_l cos(2l theta)/l and unrolling
    the theta^n moments termwise turns sum_l 1/l^(2k+1) into zeta(2k+1);
    the result must agree with logsine_symbolic(n) field by field.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    moments = _theta_cosine_moments(n) if n >= 2 else {}
    terms = tuple((2 * k + 1, -c) for k, c in sorted(moments.items()))
    return SymbolicLogSine(
        n=n, log2_coefficient=Fraction(-1, n + 1), zeta_terms=terms
    )
