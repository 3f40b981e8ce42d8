"""Full-path algorithm and Heegaard Floer correction terms of plumbings.

An *initial* characteristic covector K satisfies ``m + 2 <= K(v) <= -m``
at every vertex (m the framing).  Its full path repeatedly replaces K by
``K + 2 PD[v]`` for a vertex with ``K(v) == -m(v)``; the path ends
correctly once ``m <= K(v) <= -m - 2`` everywhere and fails as soon as a
value leaves the window.  The correction term is the largest grading
``(K^2 + |G|)/4`` over initial vectors whose path ends correctly.

The grading is constant along a path, so the maximum is found by visiting
initial vectors in descending grading and stopping at the first one that
ends correctly.  Visiting in that order uses an exact Fincke-Pohst
enumeration of the positive definite form ``-Q^-1``.
"""
from __future__ import annotations

import enum
import functools
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm, prod
from pathlib import Path

from .contact import CharVector, check_characteristic
from .errors import DomainError
from .plumbing import (
    PlumbingGraph,
    adjugate,
    intersection_matrix,
    inverse_square,
    is_negative_definite,
)

DEFAULT_BUDGET = 10**7


class PathStatus(enum.Enum):
    ENDS_CORRECTLY = "EndsCorrectly"
    FAILS = "Fails"


@dataclass(frozen=True)
class PathOutcome:
    status: PathStatus
    steps: int
    final: CharVector

    @property
    def ends_correctly(self) -> bool:
        return self.status is PathStatus.ENDS_CORRECTLY


@dataclass(frozen=True)
class GradedVector:
    vector: CharVector
    grading: Fraction


@dataclass(frozen=True)
class BudgetExceeded:
    """Search space larger than the budget; carries the best verified bound."""

    initial_count: int
    budget: int
    lower_bound: Fraction | None = None
    witness: CharVector | None = None


@dataclass(frozen=True)
class SearchResult:
    """Outcome of an exhaustive descending-grading search."""

    d: Fraction
    maximizer: CharVector
    initial_count: int
    paths_run: int
    candidates_enumerated: int
    outcome: PathOutcome = field(repr=False)


def initial_count(g: PlumbingGraph) -> int:
    """Number of initial vectors: each vertex admits ``|m|`` values."""
    return prod(abs(m) for m in g.framings)


def is_initial(g: PlumbingGraph, k) -> bool:
    k = check_characteristic(g, k)
    return all(m + 2 <= x <= -m for x, m in zip(k, g.framings))


@functools.lru_cache(maxsize=4096)
def _definite(g: PlumbingGraph) -> bool:
    return is_negative_definite(intersection_matrix(g))


def _require_negative_definite(g: PlumbingGraph) -> None:
    if not _definite(g):
        raise DomainError("full-path algorithm needs a negative-definite plumbing")


def step_bound(g: PlumbingGraph) -> int:
    return 4 * g.size * g.size * max(abs(m) for m in g.framings)


def _walk(framings, nbrs, k: list[int], limit: int) -> tuple[PathStatus, int]:
    """Run the path in place on ``k`` (lowest-index vertex first)."""
    n = len(framings)
    steps = 0
    while True:
        push = -1
        for i in range(n):
            x, m = k[i], framings[i]
            if x > -m or x < m:
                return PathStatus.FAILS, steps
            if x == -m and push < 0:
                push = i
        if push < 0:
            return PathStatus.ENDS_CORRECTLY, steps
        k[push] += 2 * framings[push]
        for j in nbrs[push]:
            k[j] += 2
        steps += 1
        if steps > limit:
            raise AssertionError(f"full path exceeded the step bound {limit}")


def full_path(g: PlumbingGraph, k, *, check_grading: bool = False) -> PathOutcome:
    """Walk the full path of ``k``.

    With ``check_grading`` the square ``k^T Q^-1 k`` is recomputed after
    every reflection and asserted unchanged.
    """
    _require_negative_definite(g)
    k = list(check_characteristic(g, k))
    framings, nbrs = g.framings, g.neighbors()
    if not check_grading:
        status, steps = _walk(framings, nbrs, k, step_bound(g))
        return PathOutcome(status, steps, tuple(k))
    q = intersection_matrix(g)
    square = inverse_square(q, k)
    steps = 0
    limit = step_bound(g)
    while True:
        bad = any(x > -m or x < m for x, m in zip(k, framings))
        if bad:
            return PathOutcome(PathStatus.FAILS, steps, tuple(k))
        pushable = [i for i, (x, m) in enumerate(zip(k, framings)) if x == -m]
        if not pushable:
            return PathOutcome(PathStatus.ENDS_CORRECTLY, steps, tuple(k))
        v = pushable[0]
        k[v] += 2 * framings[v]
        for j in nbrs[v]:
            k[j] += 2
        steps += 1
        if inverse_square(q, k) != square:
            raise AssertionError("grading changed along the full path")
        if steps > limit:
            raise AssertionError(f"full path exceeded the step bound {limit}")


def path_statuses_all_orders(g: PlumbingGraph, k) -> set[PathStatus]:
    """Every terminal status reachable by any choice of vertex at each step."""
    _require_negative_definite(g)
    framings, nbrs = g.framings, g.neighbors()
    seen: dict[tuple[int, ...], frozenset] = {}

    def explore(state: tuple[int, ...]) -> frozenset:
        if state in seen:
            return seen[state]
        seen[state] = frozenset()  # guards against cycles; none expected
        if any(x > -m or x < m for x, m in zip(state, framings)):
            out = frozenset({PathStatus.FAILS})
        else:
            pushable = [i for i, (x, m) in enumerate(zip(state, framings)) if x == -m]
            if not pushable:
                out = frozenset({PathStatus.ENDS_CORRECTLY})
            else:
                acc: set = set()
                for v in pushable:
                    nxt = list(state)
                    nxt[v] += 2 * framings[v]
                    for j in nbrs[v]:
                        nxt[j] += 2
                    acc |= explore(tuple(nxt))
                out = frozenset(acc)
        seen[state] = out
        return out

    return set(explore(check_characteristic(g, k)))


def maslov_grading(g: PlumbingGraph, k) -> Fraction:
    k = check_characteristic(g, k)
    return (inverse_square(intersection_matrix(g), k) + g.size) / 4


def verify_vector(g: PlumbingGraph, k) -> tuple[GradedVector, PathOutcome]:
    k = check_characteristic(g, k)
    outcome = full_path(g, k)
    return GradedVector(k, maslov_grading(g, k)), outcome


class _Enumerator:
    """Initial vectors with ``-K^T Q^-1 K <= bound``, exactly.

    With B = -|det Q| Q^-1 (a positive definite integer matrix) and R its
    fraction-free upper-triangular reduction, ``x^T B x`` equals
    ``sum_k w_k^2 / (delta_{k-1} delta_k)`` where ``w_k = sum_{j>=k} R_kj x_j``
    and delta_k are the leading minors.  Coordinates are fixed from the last
    to the first; every term is nonnegative, so a partial sum above the bound
    prunes the whole subtree.  Everything is scaled to integers.
    """

    def __init__(self, g: PlumbingGraph):
        q = intersection_matrix(g)
        adj, det = adjugate(q)
        n = g.size
        self.n = n
        self.scale_det = abs(det)
        # vertex order for the enumeration: center enumerated first
        order = list(range(1, n)) + [0]
        self.order = order
        sgn = -1 if det > 0 else 1
        b = [[sgn * adj[order[i]][order[j]] for j in range(n)] for i in range(n)]
        r = [row[:] for row in b]
        prev = 1
        deltas = [1]
        for k in range(n):
            pivot = r[k][k]
            if pivot <= 0:
                raise DomainError("form is not positive definite")
            deltas.append(pivot)
            for i in range(k + 1, n):
                f = r[i][k]
                for j in range(k + 1, n):
                    r[i][j] = (pivot * r[i][j] - f * r[k][j]) // prev
                r[i][k] = 0
            prev = pivot
        self.r = r
        denoms = [deltas[k] * deltas[k + 1] for k in range(n)]
        self.mult = lcm(*denoms)
        self.weights = [self.mult // d for d in denoms]
        framings = g.framings
        self.values = [list(range(framings[order[i]] + 2, -framings[order[i]] + 1, 2)) for i in range(n)]

    def scaled(self, f_bound: Fraction) -> int:
        """Integer bound S with ``x^T B x * mult <= S`` iff ``f <= f_bound``."""
        # f = x^T B x / |det|
        val = f_bound * self.scale_det * self.mult
        return val.numerator // val.denominator

    def enumerate(self, f_bound: Fraction):
        """Yield ``(f, K)`` for every initial K with f(K) <= f_bound."""
        n, r, w, values, order = self.n, self.r, self.weights, self.values, self.order
        bound = self.scaled(f_bound)
        x = [0] * n
        partial = [0] * n  # partial[k] = sum_{j > current} r[k][j] * x[j]
        denom = self.scale_det * self.mult

        def rec(level: int, acc: int):
            row_diag = r[level][level]
            base = partial[level]
            for val in values[level]:
                wk = base + row_diag * val
                total = acc + w[level] * wk * wk
                if total > bound:
                    continue
                x[level] = val
                if level == 0:
                    k = [0] * n
                    for i in range(n):
                        k[order[i]] = x[i]
                    yield Fraction(total, denom), tuple(k)
                    continue
                for i in range(level):
                    partial[i] += r[i][level] * val
                yield from rec(level - 1, total)
                for i in range(level):
                    partial[i] -= r[i][level] * val

        yield from rec(n - 1, 0)


def search_correction_term(g: PlumbingGraph) -> SearchResult:
    """Exhaustive, exact maximization of the grading over good initial vectors."""
    _require_negative_definite(g)
    en = _Enumerator(g)
    framings, nbrs = g.framings, g.neighbors()
    limit = step_bound(g)
    size = g.size
    done: set[CharVector] = set()
    paths_run = 0
    enumerated = 0
    f_bound = Fraction(max(size, 4))
    while True:
        batch = sorted(en.enumerate(f_bound))
        enumerated += len(batch)
        for f, k in batch:
            if k in done:
                continue
            done.add(k)
            work = list(k)
            status, steps = _walk(framings, nbrs, work, limit)
            paths_run += 1
            if status is PathStatus.ENDS_CORRECTLY:
                outcome = PathOutcome(status, steps, tuple(work))
                return SearchResult((size - f) / 4, k, initial_count(g), paths_run, enumerated, outcome)
        if len(done) >= initial_count(g):
            raise AssertionError("no initial vector ends correctly")
        f_bound *= 4


def correction_term(g: PlumbingGraph, budget: int = DEFAULT_BUDGET, witnesses=()):
    """d of the boundary of a negative-definite star plumbing.

    Returns a Fraction, or :class:`BudgetExceeded` when the initial-vector
    space exceeds ``budget``; in that case the supplied ``witnesses`` are
    verified and the best correctly-ending one gives the lower bound.
    """
    _require_negative_definite(g)
    count = initial_count(g)
    if count <= budget:
        return search_correction_term(g).d
    best, best_k = None, None
    for k in witnesses:
        graded, outcome = verify_vector(g, k)
        if outcome.ends_correctly and (best is None or graded.grading > best):
            best, best_k = graded.grading, graded.vector
    return BudgetExceeded(count, budget, best, best_k)


def brute_force_correction_term(g: PlumbingGraph) -> Fraction:
    """Reference value: run every initial vector, keep the best grading."""
    _require_negative_definite(g)
    windows = [range(m + 2, -m + 1, 2) for m in g.framings]
    framings, nbrs = g.framings, g.neighbors()
    limit = step_bound(g)
    q = intersection_matrix(g)
    adjugate(q)  # warm the cache: every initial vector is graded
    best = None
    for k in itertools.product(*windows):
        status, _ = _walk(framings, nbrs, list(k), limit)
        if status is PathStatus.ENDS_CORRECTLY:
            grading = (inverse_square(q, k) + g.size) / 4
            if best is None or grading > best:
                best = grading
    return best


def apply_ordering(vector, ordering) -> CharVector:
    """Reindex a vector given in another vertex order.

    ``ordering[i]`` is the canonical index of the vertex listed i-th.
    """
    vector, ordering = list(vector), list(ordering)
    if sorted(ordering) != list(range(len(vector))):
        raise DomainError("ordering is not a permutation of the vertex indices")
    out = [0] * len(vector)
    for i, j in enumerate(ordering):
        out[j] = vector[i]
    return tuple(out)


def leg_order_permutation(g: PlumbingGraph, leg_order) -> list[int]:
    """Ordering map for a listing that puts the legs in ``leg_order``."""
    offsets = g.leg_offsets()
    out = [0]
    for leg in leg_order:
        out.extend(range(offsets[leg], offsets[leg] + len(g.legs[leg])))
    return out


def _int_lines(path: Path):
    for line in Path(path).read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            yield [int(tok) for tok in line.replace(",", " ").split()]


def read_vectors(path) -> list[list[int]]:
    return list(_int_lines(path))


def read_ordering(path) -> list[int]:
    return [i for row in _int_lines(path) for i in row]
