"""Exact arithmetic and number-theoretic helpers shared by all counting formulas.

Counts are plain Python ints (arbitrary precision). Intermediate values that
carry fractional prefactors are ``fractions.Fraction``. Everything downstream
relies on two conventions fixed here:

  - a factorial of a negative integer appearing in a summand denominator is a
    pole, and the whole summand vanishes (``factorial_or_zero_reciprocal``);
  - a Jordan totient evaluated at a non-integral argument is zero
    (``jordan_totient_or_zero``).

With these, every summand of every closed-form formula is total, and final
integrality can be asserted instead of assumed.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import cache
from typing import List, Sequence, Tuple

# Type aliases used across the package. An arbitrary-precision int is the
# carrier for every final count; a reduced Fraction for every intermediate.
BigCount = int
ExactRational = Fraction


# ============================================================
# Factorials and binomials
# ============================================================


@cache
def factorial(n: int) -> BigCount:
    """Return n! for n >= 0.

    Memoized: the census formulas reuse the same arguments across genera.
    """
    if n < 0:
        raise ValueError(f"factorial is undefined for negative n (got {n})")
    return math.factorial(n)


def factorial_or_zero_reciprocal(n: int) -> ExactRational:
    """Return 1/n! for n >= 0, and 0 for n < 0 (reciprocal-of-pole convention).

    Summands containing a negative-argument factorial in the denominator are
    defined to vanish; multiplying by this guard implements that totally.
    """
    if n < 0:
        return Fraction(0)
    return Fraction(1, factorial(n))


def binomial(n: int, k: int) -> BigCount:
    """Return C(n, k) for n >= 0, with C(n, k) = 0 when k < 0 or k > n."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0 (got n={n})")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def require_integer(value: ExactRational, context: str = "value") -> BigCount:
    """Convert an exact rational that must be integral into an int.

    Raises ArithmeticError otherwise: a non-integral final count means a
    formula was assembled wrongly, never that rounding is wanted.
    """
    if value.denominator != 1:
        raise ArithmeticError(f"{context} is not an integer: {value}")
    return int(value)


# ============================================================
# Totients
# ============================================================


def prime_factorization(n: int) -> List[Tuple[int, int]]:
    """Return the prime factorization of n >= 1 as (prime, exponent) pairs.

    Plain trial division; adequate for the arguments these formulas produce
    (homeomorphism periods, small lcms).
    """
    if n < 1:
        raise ValueError(f"factorization requires n >= 1 (got {n})")
    out: List[Tuple[int, int]] = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            a = 0
            while m % p == 0:
                m //= p
                a += 1
            out.append((p, a))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return out


def euler_phi(n: int) -> BigCount:
    """Return the Euler totient of n >= 1."""
    if n < 1:
        raise ValueError(f"euler_phi requires n >= 1 (got {n})")
    out = 1
    for p, a in prime_factorization(n):
        out *= p ** a - p ** (a - 1)
    return out


def jordan_totient_or_zero(k: int, num: int, den: int) -> BigCount:
    """Return the Jordan totient J_k(num/den), or 0 if den does not divide num.

    J_k(m) = prod over p^a || m of (p^{ak} - p^{(a-1)k}); J_k(1) = 1 for all k,
    and J_0(m) is the indicator of m = 1. The zero convention for non-integral
    arguments is what makes the epimorphism closed forms total.
    """
    if k < 0:
        raise ValueError(f"jordan totient order must be >= 0 (got {k})")
    if num < 1 or den < 1:
        raise ValueError(f"jordan totient argument must be positive (got {num}/{den})")
    if num % den != 0:
        return 0
    m = num // den
    if k == 0:
        return 1 if m == 1 else 0
    out = 1
    for p, a in prime_factorization(m):
        out *= p ** (a * k) - p ** ((a - 1) * k)
    return out


def lcm_list(values: Sequence[int]) -> BigCount:
    """Return lcm of the given positive integers; lcm of the empty list is 1."""
    for v in values:
        if v < 1:
            raise ValueError(f"lcm_list requires positive integers (got {v})")
    return math.lcm(*values)
