"""Classical integer sequences, each from its own textbook recurrence.

These deliberately do not go through :mod:`tribcirc.recurrence`; they are
the independent side of the named-sequence norm identities.
"""

from __future__ import annotations


def _run(seed, coeffs, count):
    # coeffs[0] multiplies the most recent term
    terms = list(seed[:count])
    while len(terms) < count:
        terms.append(sum(c * t for c, t in zip(coeffs, reversed(terms))))
    return terms


def tribonacci(count):
    """0, 1, 1, 2, 4, 7, 13, ..."""
    return _run([0, 1, 1], [1, 1, 1], count)


def padovan(count):
    """1, 1, 1, 2, 2, 3, 4, 5, 7, ..."""
    return _run([1, 1, 1], [0, 1, 1], count)


def fibonacci(count):
    return _run([0, 1], [1, 1], count)


def k_fibonacci(k, count):
    """F(k, n) = k F(k, n-1) + F(k, n-2) with F(k, 0) = 0, F(k, 1) = 1."""
    return _run([0, 1], [k, 1], count)


def pell(count):
    return _run([0, 1], [2, 1], count)


def jacobsthal(count):
    """0, 1, 1, 3, 5, 11, 21, ..."""
    return _run([0, 1], [1, 2], count)


def tribonacci_lucas(count):
    """3, 1, 3, 7, 11, 21, 39, ..."""
    return _run([3, 1, 3], [1, 1, 1], count)


def perrin(count):
    """3, 0, 2, 3, 2, 5, 5, 7, ..."""
    return _run([3, 0, 2], [0, 1, 1], count)
