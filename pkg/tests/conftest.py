"""Independent reference implementations shared by the test modules.

Nothing here calls into the package's elimination or path-walking code:
determinants and inverses use textbook Gaussian elimination over Fraction,
and the reference correction term walks paths by adding rows of Q.
"""
from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from brieskorn.plumbing import PlumbingGraph


def frac_det(rows) -> Fraction:
    a = [[Fraction(x) for x in r] for r in rows]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def frac_inverse(rows):
    n = len(rows)
    a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def graph_matrix(g: PlumbingGraph):
    """Q built from the parent list, not from intersection_matrix."""
    n = g.size
    q = [[0] * n for _ in range(n)]
    for i, (m, p) in enumerate(zip(g.framings, g.parents)):
        q[i][i] = m
        if p >= 0:
            q[i][p] = q[p][i] = 1
    return q


def leading_minors_negative_definite(rows) -> bool:
    n = len(rows)
    for k in range(1, n + 1):
        d = frac_det([r[:k] for r in rows[:k]])
        if d == 0 or (d < 0) != (k % 2 == 1):
            return False
    return True


def reference_square(inv, k) -> Fraction:
    return sum(k[i] * inv[i][j] * k[j] for i in range(len(k)) for j in range(len(k)))


def reference_path_ends_correctly(q, k) -> bool:
    """Full path with reflections K -> K + 2 Q[v]; lowest index first."""
    k = list(k)
    n = len(k)
    for _ in range(100000):
        m = [q[i][i] for i in range(n)]
        if any(x > -mi or x < mi for x, mi in zip(k, m)):
            return False
        v = next((i for i in range(n) if k[i] == -m[i]), None)
        if v is None:
            return True
        k = [x + 2 * y for x, y in zip(k, q[v])]
    raise AssertionError("reference path did not terminate")


def reference_correction_term(g: PlumbingGraph) -> Fraction:
    q = graph_matrix(g)
    inv = frac_inverse(q)
    best = None
    windows = [range(m + 2, -m + 1, 2) for m in g.framings]
    for k in itertools.product(*windows):
        if reference_path_ends_correctly(q, k):
            grading = (reference_square(inv, k) + g.size) / 4
            if best is None or grading > best:
                best = grading
    return best


def compositions(total: int):
    """Leg-length tuples (sorted, nonincreasing) summing to ``total``."""
    if total == 0:
        yield ()
        return

    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    yield from rec(total, total)


def star_graphs(n_vertices: int, framings=(-2, -3, -4)):
    """Every star graph with the given vertex count and framings from a set."""
    for shape in compositions(n_vertices - 1):
        for values in itertools.product(framings, repeat=n_vertices):
            legs, pos = [], 1
            for length in shape:
                legs.append(values[pos : pos + length])
                pos += length
            yield PlumbingGraph(values[0], tuple(legs))


def random_star_graph(rng: random.Random, n_vertices: int, framings=(-2, -3, -4)) -> PlumbingGraph:
    n_legs = rng.randint(1, min(5, n_vertices - 1))
    cuts = sorted(rng.sample(range(1, n_vertices - 1), n_legs - 1))
    lengths = [b - a for a, b in zip([0] + cuts, cuts + [n_vertices - 1])]
    legs = tuple(tuple(rng.choice(framings) for _ in range(L)) for L in lengths)
    return PlumbingGraph(rng.choice(framings), legs)


@pytest.fixture
def rng():
    return random.Random(20240611)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance():
    """Record one PASS/FAIL line per acceptance criterion."""

    def record(name: str, passed: bool, detail: str) -> bool:
        line = f"{name} {'PASS' if passed else 'FAIL'} {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
