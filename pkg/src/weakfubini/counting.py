"""Exact counts: Fibonacci, Stirling and Fubini numbers, Boolean interval
counts by rank, totals, and per-minimum fiber sizes.

All values are Python ints, so nothing is ever truncated.
"""

from functools import lru_cache
from math import comb, factorial

from . import perm as P
from .errors import IndexOutOfRange


def fibonacci(ell):
    """F_ell with F_1 = F_2 = 1."""
    if ell < 1:
        raise ValueError("Fibonacci index must be at least 1")
    a, b = 1, 1
    for _ in range(ell - 1):
        a, b = b, a + b
    return a


@lru_cache(maxsize=None)
def stirling2(n, k):
    if n < 0 or k < 0:
        raise ValueError("Stirling numbers need n, k >= 0")
    if n == 0 or k == 0:
        return 1 if n == k else 0
    if k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def fubini_number(n):
    """Number of rankings of n competitors with ties, sum_k k! S(n, k)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return sum(factorial(k) * stirling2(n, k) for k in range(1, n + 1))


def f_closed(n, k):
    """Boolean intervals of rank k in W(S_n), equal to n! / 2^k * C(n-k, k).

    Evaluated as C(n-k, k) (n-2k)! prod_{i<k} C(n-2i, 2), which counts unit
    Fubini rankings with n-k distinct ranks block by block and never divides.
    """
    if n < 0 or k < 0:
        raise ValueError("n, k must be nonnegative")
    if 2 * k > n:
        return 0
    total = comb(n - k, k) * factorial(n - 2 * k)
    for i in range(k):
        total *= comb(n - 2 * i, 2)
    return total


def f_total(n):
    """Total Boolean intervals in W(S_n) via f(n+1) = (n+1) f(n) + C(n+1, 2) f(n-1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    prev, cur = 1, 1  # f(0), f(1)
    if n == 0:
        return prev
    for m in range(1, n):
        prev, cur = cur, (m + 1) * cur + comb(m + 1, 2) * prev
    return cur


def fiber_count(p):
    """Number of Boolean intervals with minimum ``p``: prod over ascent blocks of F_{|b|+2}."""
    total = 1
    for block in P.ascent_blocks(p):
        total *= fibonacci(len(block) + 2)
    return total


def fiber_count_nontrivial(p):
    """Same as :func:`fiber_count` but without the one-element interval [p, p]."""
    return fiber_count(p) - 1


def generator_fiber_count(n, i):
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"s_{i} is not defined in S_{n}")
    return fibonacci(i + 1) * fibonacci(n - i + 1)


def weakly_increasing_ufr_count(n):
    if n < 1:
        raise ValueError("n must be at least 1")
    return fibonacci(n + 1)
