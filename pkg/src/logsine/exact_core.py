"""Exact rational arithmetic: binomials, Bernoulli numbers, and the
combinatorial identities built from them.

Everything in this module is exact.  Rationals are ``fractions.Fraction``
(arbitrary-precision, always in lowest terms, positive denominator), so no
rounding can occur anywhere; equality checks below are true identities, not
approximate comparisons.

The Bernoulli numbers are generated from the binomial-weighted sum rule

    sum_{k=0}^{n-1} C(n,k) * B_k = 0        (n >= 2)

with B_0 = 1, which forces B_1 = -1/2 and every later odd-index value to
vanish.  Solving the rule at n = m+1 for the single unknown B_m gives each
new entry in O(m) rational operations:

    B_m = -(1/(m+1)) * sum_{k=0}^{m-1} C(m+1,k) * B_k
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

# All exact coefficients in this package are plain Fractions.
ExactRational = Fraction

__all__ = [
    "ExactRational",
    "BernoulliTable",
    "binomial",
    "bernoulli_table",
    "verify_recurrence",
    "verify_binomial_identity",
    "rational_str",
]


def rational_str(q: Fraction) -> str:
    """Render a rational as a decimal-free ``p/q`` string (``p`` if integral)."""
    return str(q)


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient C(n, k), with C(n, k) = 0 whenever k > n.

    The k > n convention keeps index-window sweeps total; both arguments
    must be nonnegative.
    """
    if n < 0 or k < 0:
        raise ValueError("binomial requires nonnegative arguments")
    return math.comb(n, k)


@dataclass(frozen=True)
class BernoulliTable:
    """Bernoulli numbers B_0 .. B_max_index as exact rationals."""

    max_index: int
    values: tuple[Fraction, ...]

    def __getitem__(self, k: int) -> Fraction:
        if not 0 <= k <= self.max_index:
            raise IndexError(f"B_{k} not in table (max index {self.max_index})")
        return self.values[k]

    def __len__(self) -> int:
        return self.max_index + 1


@lru_cache(maxsize=None)
def bernoulli_table(max_index: int) -> BernoulliTable:
    """Generate B_0 .. B_max_index by solving the sum rule for each new index.

    Deterministic and pure: equal arguments always produce equal tables.
    """
    if max_index < 0:
        raise ValueError("max_index must be nonnegative")
    values: list[Fraction] = [Fraction(1)]
    for m in range(1, max_index + 1):
        acc = Fraction(0)
        for k in range(m):
            acc += binomial(m + 1, k) * values[k]
        values.append(-acc / (m + 1))
    return BernoulliTable(max_index=max_index, values=tuple(values))


def verify_recurrence(n: int, table: BernoulliTable) -> bool:
    """Exact check of sum_{k=0}^{n-1} C(n,k) B_k = 0 for a given n >= 2."""
    if n < 2:
        raise ValueError("the binomial-weighted sum rule holds only for n >= 2")
    if table.max_index < n - 1:
        raise ValueError(f"table holds B_0..B_{table.max_index}, need B_{n - 1}")
    acc = Fraction(0)
    for k in range(n):
        acc += binomial(n, k) * table[k]
    return acc == 0


def verify_binomial_identity(n: int, k: int) -> bool:
    """Exact check of the index-shift identity used to collapse the
    even-index Bernoulli sum:

        C(n,2k) / ((k+1)(2k+1)) = C(n+2,2k+2) * 2 / ((n+1)(n+2))

    Admissible only for n >= 1, k >= 0 with 2k <= n.
    """
    if n < 1 or k < 0:
        raise ValueError("require n >= 1 and k >= 0")
    if 2 * k > n:
        raise ValueError("require 2k <= n")
    lhs = Fraction(binomial(n, 2 * k), (k + 1) * (2 * k + 1))
    rhs = Fraction(2 * binomial(n + 2, 2 * k + 2), (n + 1) * (n + 2))
    return lhs == rhs
