"""Unit-fraction and admissible-triple enumerations, each with a brute-force oracle.

The closed searches follow the divisor reductions; the oracles scan boxes
directly and share no code with them beyond the property predicates.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd

import numpy as np


def _coprime(*xs: int) -> bool:
    return all(gcd(a, b) == 1 for a, b in combinations(xs, 2))


def divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


@dataclass(frozen=True)
class AdmissibleTriple:
    a: int
    b: int
    u: int
    v: int

    @property
    def c(self) -> int:
        return self.u * self.v - 1

    @property
    def x(self) -> int:
        return self.a * self.b - self.a - self.b

    @property
    def exponents(self) -> tuple[int, int, int]:
        return tuple(sorted((self.a, self.b, self.c)))

    def property1(self) -> bool:
        return _coprime(self.a, self.b, self.c)

    def property2(self) -> bool:
        return Fraction(1, self.a) + Fraction(1, self.b) + Fraction(self.v, self.c) > 1

    def property3(self) -> bool:
        return self.v * self.a * self.b - 1 == self.c * self.x

    def property4(self) -> bool:
        lhs = self.a + self.b + self.u + self.v
        return lhs == 4 + (self.v - 1) * (self.a * self.b - (self.u - 1) * self.x)

    def bitmask(self) -> int:
        checks = (self.property1(), self.property2(), self.property3(), self.property4())
        return sum(1 << i for i, ok in enumerate(checks) if ok)

    def is_admissible(self) -> bool:
        return self.b > self.a >= 2 and self.property1() and self.property2() and self.property3()

    def key(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


@dataclass(frozen=True)
class TripleFamily:
    """The infinite u = 6 family (2, 3, 6v - 1), v >= 2."""

    descriptor: str = "(2,3,6v-1), v >= 2"

    def instantiate(self, v_max: int) -> tuple[AdmissibleTriple, ...]:
        return tuple(AdmissibleTriple(2, 3, 6, v) for v in range(2, v_max + 1))


@dataclass(frozen=True)
class SolutionSet:
    finite: tuple = ()
    family: TripleFamily | None = None
    family_members: tuple = ()
    audit: tuple[str, ...] = field(default=(), compare=False)

    def all_members(self) -> tuple:
        return self.finite + self.family_members


def _sorted_triples(items) -> tuple[AdmissibleTriple, ...]:
    uniq = {t.key(): t for t in items}
    return tuple(uniq[k] for k in sorted(uniq))


def _unit_equation(a: int, b: int, c: int, d: int) -> bool:
    # 1/a + 1/b + 1/c + 1/d == 1 + 1/(abcd), cleared of denominators
    return b * c * d + a * c * d + a * b * d + a * b * c == a * b * c * d + 1


def quadruples_unit() -> SolutionSet:
    """Pairwise coprime d > c > b > a >= 2 with sum of reciprocals 1 + 1/abcd."""
    # a >= 3 forces the sum below 1 (1/3+1/4+1/5+1/7), b >= 4 likewise
    assert Fraction(1, 3) + Fraction(1, 4) + Fraction(1, 5) + Fraction(1, 7) < 1
    assert Fraction(1, 2) + Fraction(1, 5) + Fraction(1, 7) + Fraction(1, 9) < 1
    a, b = 2, 3
    # with a, b = 2, 3 the equation reads (c - 6)(d - 6) = 35
    found = []
    for p in divisors(35):
        q = 35 // p
        c, d = 6 + p, 6 + q
        if not c < d:
            continue
        if gcd(c, 6) != 1 or gcd(d, 6) != 1:
            continue
        if _coprime(a, b, c, d) and _unit_equation(a, b, c, d):
            found.append((a, b, c, d))
    return SolutionSet(finite=tuple(sorted(found)))


def quadruples_unit_oracle(bound: int) -> SolutionSet:
    """Scan every 2 <= a < b < c < d <= bound."""
    found = []
    ds = np.arange(0, bound + 1, dtype=object)
    for a in range(2, bound + 1):
        for b in range(a + 1, bound + 1):
            for c in range(b + 1, bound):
                d = ds[c + 1 :]
                abc = a * b * c
                hits = np.nonzero((b * c + a * c + a * b) * d + abc == abc * d + 1)[0]
                for i in hits:
                    quad = (a, b, c, int(d[i]))
                    if _coprime(*quad):
                        found.append(quad)
    return SolutionSet(finite=tuple(sorted(found)))


def prop_new_check(bound: int) -> SolutionSet:
    """Solutions of 1/a + 1/b + 1/c + (d+1)/(2d) = 2 + 1/(abcd), c > b > a >= 2, d >= 3.

    For each (a, b, c) the equation is linear in d:
    ``d (3abc - 2ab - 2ac - 2bc) = abc - 2``.
    """
    found = []
    for a in range(2, bound + 1):
        for b in range(a + 1, bound + 1):
            for c in range(b + 1, bound + 1):
                abc = a * b * c
                coeff = 3 * abc - 2 * a * b - 2 * a * c - 2 * b * c
                rhs = abc - 2
                if a == 2:
                    # the a = 2 reduction: d (3abc - ...) = abc - 2  <=>  2d(bc - b - c) = bc - 1
                    assert coeff == 4 * (b * c - b - c) and rhs == 2 * (b * c - 1)
                if coeff <= 0 or rhs % coeff:
                    continue
                d = rhs // coeff
                if d < 3:
                    continue
                lhs = Fraction(1, a) + Fraction(1, b) + Fraction(1, c) + Fraction(d + 1, 2 * d)
                if lhs == 2 + Fraction(1, abc * d):
                    found.append((a, b, c, d))
    return SolutionSet(finite=tuple(found))


def _u2_branch(audit: list[str]) -> list[AdmissibleTriple]:
    out = []
    for a in (3, 4, 5):
        for t in divisors(a * a - a + 2):
            num = t + a - 1
            if num % (a - 2) or num // (a - 2) < 2:
                audit.append(f"u=2 a={a} t={t}: v not an integer >= 2")
                continue
            v = num // (a - 2)
            n_v = 4 * v * v - 5 * v + 2
            if (v - 1) * a - (2 * v - 1) != t or n_v % t:
                audit.append(f"u=2 a={a} t={t} v={v}: t is not a factor of N(v)")
                continue
            num_b = n_v // t + 2 * v - 1
            if num_b % (v - 1):
                audit.append(f"u=2 a={a} t={t} v={v}: b not integral")
                continue
            triple = AdmissibleTriple(a, num_b // (v - 1), 2, v)
            if triple.is_admissible():
                out.append(triple)
            else:
                audit.append(f"u=2 a={a} t={t} v={v} b={triple.b}: fails properties 1-3")
    return out


def _u3_branch(audit: list[str]) -> list[AdmissibleTriple]:
    out = []
    for a in (2, 3):
        for t in divisors(a * a - 2 * a + 3):
            num = t + a - 1
            if num % (2 * a - 3) or num // (2 * a - 3) < 2:
                audit.append(f"u=3 a={a} t={t}: v not an integer >= 2")
                continue
            v = num // (2 * a - 3)
            n_v = 9 * v * v - 8 * v + 2
            if (2 * v - 1) * a - (3 * v - 1) != t or n_v % t:
                audit.append(f"u=3 a={a} t={t} v={v}: t is not a factor of N(v)")
                continue
            num_b = n_v // t + 3 * v - 1
            if num_b % (2 * v - 1):
                audit.append(f"u=3 a={a} t={t} v={v}: b not integral")
                continue
            triple = AdmissibleTriple(a, num_b // (2 * v - 1), 3, v)
            if triple.is_admissible():
                out.append(triple)
            else:
                audit.append(f"u=3 a={a} t={t} v={v} b={triple.b}: fails properties 1-3")
    return out


def spades_b(u: int, v: int) -> Fraction:
    """b forced by property 3 when a = 2: (2uv - 3) / (v(u - 2) - 1)."""
    return Fraction(2 * u * v - 3, v * (u - 2) - 1)


def admissible_triples(v_bound: int) -> SolutionSet:
    """All admissible triples: the u in {2, 3} finite part plus the u = 6 family."""
    audit: list[str] = []
    for u in (4, 5):
        # a = 2 is forced; b from the closed formula must never be an integer > 2
        for v in range(2, 64):
            b = spades_b(u, v)
            assert b.denominator != 1 or b <= 2, (u, v)
    family = TripleFamily()
    members = family.instantiate(v_bound)
    assert all(t.is_admissible() and spades_b(6, t.v) == 3 for t in members)
    finite = _sorted_triples(_u2_branch(audit) + _u3_branch(audit))
    return SolutionSet(finite=finite, family=family, family_members=members, audit=tuple(audit))


def admissible_triples_oracle(a_bound: int, v_bound: int) -> SolutionSet:
    """Test properties 1-3 directly on 2 <= a < b <= a_bound*v_bound, u <= a_bound, v <= v_bound.

    Property 3 is linear in b, so each (a, u, v) admits at most one b;
    numpy scans the whole b range at once.
    """
    b_max = a_bound * v_bound
    bs = np.arange(b_max + 1, dtype=np.int64)
    finite, family = [], []
    for a in range(2, b_max):
        b = bs[a + 1 :]
        for u in range(2, a_bound + 1):
            for v in range(2, v_bound + 1):
                c = u * v - 1
                hits = np.nonzero(v * a * b - 1 == c * (a * b - a - b))[0]
                for i in hits:
                    triple = AdmissibleTriple(a, int(b[i]), u, v)
                    if triple.property1() and triple.property2():
                        (family if u == 6 and (a, triple.b) == (2, 3) else finite).append(triple)
    fam = TripleFamily() if family else None
    return SolutionSet(finite=_sorted_triples(finite), family=fam, family_members=_sorted_triples(family))


def property4_filter(s: SolutionSet) -> SolutionSet:
    keep = tuple(t for t in s.all_members() if t.property4())
    return SolutionSet(finite=_sorted_triples(keep))


def triples_tsv(s: SolutionSet) -> str:
    lines = ["a\tb\tu\tv\tuv-1\tproperties"]
    for t in s.finite:
        lines.append(f"{t.a}\t{t.b}\t{t.u}\t{t.v}\t{t.c}\t{t.bitmask():04b}")
    if s.family is not None:
        for t in s.family_members:
            lines.append(f"FAMILY\t{t.a}\t{t.b}\t{t.u}\t{t.v}\t{t.c}\t{t.bitmask():04b}")
        lines.append(f"FAMILY\t{s.family.descriptor}")
    return "\n".join(lines)


def quadruples_tsv(s: SolutionSet) -> str:
    return "\n".join(["a\tb\tc\td"] + ["\t".join(map(str, q)) for q in s.finite])
