"""Seifert presentations M(e0; r1, ..., rn) and Brieskorn exponents."""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, prod

from .arith import as_rational, solve_congruence
from .errors import DomainError


@dataclass(frozen=True)
class BrieskornIndex:
    """Sorted, pairwise coprime exponents naming Sigma(a1, ..., an)."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(sorted(int(a) for a in self.exponents))
        if len(exps) < 3:
            raise DomainError("a Brieskorn sphere needs at least three exponents")
        if any(a < 2 for a in exps):
            raise DomainError(f"exponents must be >= 2, got {exps}")
        for a, b in combinations(exps, 2):
            if gcd(a, b) != 1:
                raise DomainError(f"exponents {a} and {b} are not coprime")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def of(cls, *exponents: int) -> "BrieskornIndex":
        return cls(tuple(exponents))

    @property
    def product(self) -> int:
        return prod(self.exponents)

    def __str__(self):
        return "Sigma(" + ",".join(map(str, self.exponents)) + ")"


@dataclass(frozen=True)
class SeifertData:
    """Normalized Seifert invariants with every multiplier in (0, 1)."""

    e0: int
    multipliers: tuple[Fraction, ...] = ()

    def __post_init__(self):
        mults = tuple(as_rational(r) for r in self.multipliers)
        for r in mults:
            if not 0 < r < 1:
                raise DomainError(f"multiplier {r} is not in (0, 1)")
        object.__setattr__(self, "e0", int(self.e0))
        object.__setattr__(self, "multipliers", mults)

    def __str__(self):
        return format_seifert(self)


def from_brieskorn(idx: BrieskornIndex) -> SeifertData:
    """Seifert data of Sigma(a1..an), oriented so that e = -1/(a1*...*an).

    For each exponent we solve ``(A/ai)*bi = -1 (mod ai)`` and then read
    off the central framing from the Euler number.
    """
    A = idx.product
    mults = []
    for a in idx.exponents:
        beta = solve_congruence(A // a, -1, a)
        mults.append(Fraction(beta, a))
    e0 = Fraction(-1, A) - sum(mults, Fraction(0))
    if e0.denominator != 1:
        raise AssertionError(f"non-integral central framing {e0} for {idx}")
    return SeifertData(int(e0), tuple(mults))


def euler_number(m: SeifertData) -> Fraction:
    return m.e0 + sum(m.multipliers, Fraction(0))


def reverse_orientation(m: SeifertData) -> SeifertData:
    """M(e0; r1..rn) -> M(-n - e0; 1 - r1, ..., 1 - rn)."""
    n = len(m.multipliers)
    return SeifertData(-n - m.e0, tuple(1 - r for r in m.multipliers))


def h1_order(m: SeifertData) -> int:
    """Order of H1 (0 when infinite), cross-checked against det of the plumbing.

    The closed form is ``|e| * prod(q_i)`` with q_i the multiplier
    denominators.
    """
    from .plumbing import determinant, intersection_matrix, standard_graph

    closed = abs(euler_number(m) * prod(r.denominator for r in m.multipliers))
    if closed.denominator != 1:
        raise AssertionError(f"|e| * prod(q) = {closed} is not an integer")
    det = abs(determinant(intersection_matrix(standard_graph(m))))
    if det != closed:
        raise AssertionError(f"|H1| mismatch: closed form {closed}, determinant {det}")
    return int(closed)


def format_seifert(m: SeifertData) -> str:
    return f"M({m.e0}; " + ", ".join(f"{r.numerator}/{r.denominator}" for r in m.multipliers) + ")"


_SEIFERT_RE = re.compile(r"^\s*M\(\s*([+-]?\d+)\s*;\s*(.*?)\s*\)\s*$")
_FRACTION_RE = re.compile(r"^([+-]?\d+)\s*/\s*(\d+)$")


def parse_seifert(text: str) -> SeifertData:
    """Parse ``"M(e0; p1/q1, ..., pn/qn)"``; every fraction must be reduced."""
    match = _SEIFERT_RE.match(text)
    if not match:
        raise DomainError(f"cannot parse Seifert data {text!r}")
    e0 = int(match.group(1))
    body = match.group(2)
    mults = []
    if body:
        for item in body.split(","):
            fm = _FRACTION_RE.match(item.strip())
            if not fm:
                raise DomainError(f"bad multiplier {item.strip()!r}")
            p, q = int(fm.group(1)), int(fm.group(2))
            if q == 0 or gcd(p, q) != 1:
                raise DomainError(f"multiplier {p}/{q} is not a reduced fraction")
            mults.append(Fraction(p, q))
    return SeifertData(e0, tuple(mults))
