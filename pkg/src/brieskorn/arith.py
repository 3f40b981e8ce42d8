"""Exact arithmetic helpers: rationals, negative continued fractions, congruences.

Rationals are :class:`fractions.Fraction` throughout; they are immutable,
always reduced and carry a positive denominator, which is exactly the value
semantics the rest of the package relies on.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import DomainError

Rational = Fraction

#: Framings of one leg of a plumbing graph, every entry <= -2.
FramingChain = tuple[int, ...]


def as_rational(x) -> Fraction:
    """Coerce ints, strings like ``"7/11"`` and Fractions to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted")
    return Fraction(x)


def neg_continued_fraction(r) -> FramingChain:
    """Expand ``-1/r`` as ``[m1, ..., mk]`` with every ``mi <= -2``.

    The chain satisfies ``m1 - 1/(m2 - 1/(... - 1/mk)) == -1/r``.

    >>> neg_continued_fraction(Fraction(7, 11))
    (-2, -3, -2, -2)
    """
    r = as_rational(r)
    if not 0 < r < 1:
        raise DomainError(f"multiplier {r} is not in the open interval (0, 1)")
    # work with x = 1/r = p/q > 1 and peel off ceilings
    p, q = r.denominator, r.numerator
    chain = []
    while q:
        c = -(-p // q)
        chain.append(-c)
        p, q = q, c * q - p
    return tuple(chain)


def check_chain(chain) -> FramingChain:
    chain = tuple(int(m) for m in chain)
    if not chain:
        raise DomainError("framing chain must be nonempty")
    if any(m > -2 for m in chain):
        raise DomainError(f"framing chain {chain} has an entry above -2")
    return chain


def cf_evaluate(chain) -> Fraction:
    """Inverse of :func:`neg_continued_fraction`: return ``r`` in (0, 1)."""
    chain = check_chain(chain)
    x = Fraction(chain[-1])
    for m in reversed(chain[:-1]):
        x = m - 1 / x
    return -1 / x


def solve_congruence(coeff: int, rhs: int, modulus: int) -> int:
    """Least nonnegative ``x`` with ``coeff*x == rhs (mod modulus)``."""
    if modulus < 2:
        raise DomainError("modulus must be at least 2")
    g = gcd(coeff, modulus)
    if rhs % g:
        raise DomainError(f"{coeff}*x = {rhs} (mod {modulus}) has no solution")
    m = modulus // g
    if m == 1:
        return 0
    x = (rhs // g) * pow(coeff // g, -1, m) % m
    return x
