"""Closed-form evaluation of I_n = int_0^pi x^n log(sin x) dx.

Every I_n is an exact rational combination of pi^(n+1) log 2 and the odd
zeta values:

    I_n = -(pi^(n+1)/(n+1)) log 2
          + (n!/2^(n+1)) sum_{k=1}^{floor(n/2)} (-1)^k (2 pi)^(n-2k+1)
                                                 / (n-2k+1)!  *  zeta(2k+1)

The decomposition is carried exactly (SymbolicLogSine); floating-point
enters only in the final substitution of pi, log 2 and zeta(2k+1), which
keeps the numeric error budget auditable.  The n = 0 and n = 1 cases have
empty zeta sums and reduce to -pi log 2 and -(pi^2/2) log 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from ._precision import float_with_bound, mp, mpf, workdps
from .errors import CertificationError
from .exact_core import rational_str
from .zeta_engine import RealApprox, _zeta_mpf

__all__ = [
    "SymbolicLogSine",
    "logsine_symbolic",
    "logsine_numeric",
    "symbolic_to_json",
]


@dataclass(frozen=True)
class SymbolicLogSine:
    """Exact coefficients of I_n over {pi^(n+1) log 2, pi^(n-2k+1) zeta(2k+1)}.

    ``zeta_terms`` maps each odd argument 2k+1 (k = 1..floor(n/2), in
    increasing order) to the exact coefficient of pi^(n-2k+1) zeta(2k+1).
    """

    n: int
    log2_coefficient: Fraction
    zeta_terms: tuple[tuple[int, Fraction], ...]

    def pi_power(self, zeta_argument: int) -> int:
        """Power of pi multiplying the given zeta(2k+1) term."""
        return self.n - zeta_argument + 2


def logsine_symbolic(n: int) -> SymbolicLogSine:
    """Exact decomposition of I_n (empty zeta sum for n in {0, 1})."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    terms = []
    for k in range(1, n // 2 + 1):
        coeff = Fraction(
            (-1) ** k * math.factorial(n) * 2 ** (n - 2 * k + 1),
            2 ** (n + 1) * math.factorial(n - 2 * k + 1),
        )
        terms.append((2 * k + 1, coeff))
    return SymbolicLogSine(
        n=n, log2_coefficient=Fraction(-1, n + 1), zeta_terms=tuple(terms)
    )


def logsine_numeric(n: int, target_abs_error: float) -> RealApprox:
    """Evaluate the closed form of I_n with a certified absolute bound.

    The budget is split evenly across the floor(n/2)+1 summands; each
    zeta(2k+1) substitution must fit its share, and the final rounding to
    double must fit the total, else CertificationError.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not (math.isfinite(target_abs_error) and target_abs_error > 0):
        raise ValueError("target absolute error must be positive and finite")
    sym = logsine_symbolic(n)
    share = target_abs_error / (n // 2 + 1)
    digits = -math.log10(target_abs_error) if target_abs_error < 1 else 0.0
    dps = max(30, int(math.ceil(digits)) + 25)
    with workdps(dps):
        eps = mpf(10) ** (-dps + 4)
        pi = +mp.pi
        c0 = sym.log2_coefficient
        total = mpf(c0.numerator) / c0.denominator * pi ** (n + 1) * mp.log(2)
        internal = abs(total) * eps
        if internal > share:
            raise CertificationError("log-2 term exceeds its error share")
        for arg, coeff in sym.zeta_terms:
            zeta_mp, zeta_bound = _zeta_mpf(arg)
            scale = mpf(coeff.numerator) / coeff.denominator * pi ** sym.pi_power(arg)
            term = scale * zeta_mp
            term_err = abs(scale) * zeta_bound + abs(term) * eps
            if term_err > share:
                raise CertificationError(
                    f"zeta({arg}) term exceeds its error share {share:.3e}"
                )
            total += term
            internal += term_err
        value, bound = float_with_bound(total, internal)
    if bound > target_abs_error:
        raise CertificationError(
            f"I_{n} certified to {bound:.3e}, target {target_abs_error:.3e}"
        )
    return RealApprox(value=value, abs_error=bound)


def symbolic_to_json(sym: SymbolicLogSine) -> dict[str, Any]:
    """JSON form with rationals as exact decimal-free "p/q" strings."""
    return {
        "n": sym.n,
        "log2_coeff": rational_str(sym.log2_coefficient),
        "pi_power_log2": sym.n + 1,
        "zeta_terms": [
            {
                "arg": arg,
                "coeff": rational_str(coeff),
                "pi_power": sym.pi_power(arg),
            }
            for arg, coeff in sym.zeta_terms
        ],
    }
