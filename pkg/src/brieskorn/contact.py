"""Fillable-structure counts, the canonical covector and d3 of xi_can."""
from __future__ import annotations

from fractions import Fraction
from math import prod

from .errors import DomainError, NotApplicable
from .plumbing import PlumbingGraph, intersection_matrix, inverse_square

#: Evaluations <K, v> of a characteristic covector, in canonical vertex order.
CharVector = tuple[int, ...]

DELEGATED_FLAG = "e0 = -1 case delegated to [ACM, Prop. 2.2]"


def check_characteristic(g: PlumbingGraph, k) -> CharVector:
    k = tuple(int(x) for x in k)
    if len(k) != g.size:
        raise DomainError(f"vector has {len(k)} entries, graph has {g.size} vertices")
    for i, (x, m) in enumerate(zip(k, g.framings)):
        if (x - m) % 2:
            raise DomainError(f"entry {i} = {x} has the wrong parity for framing {m}")
    return k


def fillable_count(g: PlumbingGraph) -> int:
    """Number of fillable structures, ``|e0 + 1| * prod |m + 1|`` over leg vertices.

    Only defined when every framing, the center included, is at most -2.
    """
    if g.center_framing >= -1:
        raise NotApplicable(
            f"center framing {g.center_framing} needs a blow-down", flag=DELEGATED_FLAG
        )
    return abs(g.center_framing + 1) * prod(abs(m + 1) for leg in g.legs for m in leg)


def canonical_vector(g: PlumbingGraph) -> CharVector:
    framings = g.framings
    threes = [i for i, m in enumerate(framings) if m == -3]
    if len(threes) != 1 or any(m not in (-2, -3) for m in framings):
        raise NotApplicable("canonical vector needs one -3 vertex and all others -2")
    k = [0] * g.size
    k[threes[0]] = -1
    return tuple(k)


def d3(g: PlumbingGraph, v) -> Fraction:
    """``(v^T Q^-1 v + |Gamma|) / 4`` for a characteristic covector ``v``."""
    v = check_characteristic(g, v)
    return (inverse_square(intersection_matrix(g), v) + g.size) / 4


def d3_quadruple_closed(a: int, b: int, c: int, d: int) -> Fraction:
    return Fraction(-a * b * c * d + a + b + c + d - 3, 4)


def d3_e0m2_closed(s: int, t: int, a: int, b: int) -> Fraction:
    x = a * b - a - b
    return Fraction(s + t + a + b - (t + 1) * (a * b - (s + 1) * x), 4)


def h1_e0m2_closed(s: int, t: int, a: int, b: int) -> int:
    x = a * b - a - b
    return (t + 2) * a * b - ((s + 2) * (t + 2) - 1) * x
