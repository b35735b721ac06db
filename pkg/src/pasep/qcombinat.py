"""Binomial coefficients, q-integers and Gaussian (q-)binomials.

Out-of-range binomials return 0 rather than raising: several of the
alternating closed forms in this package evaluate binomials at a negative
lower index and rely on that convention.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .laurent import ONE, ZERO, LaurentPoly


def binomial(n: int, k: int) -> int:
    """binom(n, k), defined as 0 outside 0 <= k <= n."""
    if 0 <= k <= n:
        return comb(n, k)
    return 0


@lru_cache(maxsize=None)
def q_int(n: int) -> LaurentPoly:
    """[n]_q = 1 + q + ... + q^(n-1); [0]_q = 0."""
    if n < 0:
        raise ValueError("q_int requires n >= 0")
    return LaurentPoly({(i, 0): 1 for i in range(n)})


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> LaurentPoly:
    """Gaussian binomial [n k]_q, 0 outside 0 <= k <= n.

    Computed by the Pascal recurrence [n k] = [n-1 k-1] + q^k [n-1 k].
    """
    if k < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    return q_binomial(n - 1, k - 1) + LaurentPoly.monomial(1, k, 0) * q_binomial(
        n - 1, k
    )


def catalan(n: int) -> int:
    """The n-th Catalan number."""
    return comb(2 * n, n) // (n + 1)


__all__ = ["binomial", "q_int", "q_binomial", "catalan"]
