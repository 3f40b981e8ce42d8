"""Star-shaped plumbing graphs and their intersection forms.

Vertices are ordered canonically: the center is index 0, then each leg in
the order of the Seifert multipliers, traversed from the center outwards.
Every covector in the package (characteristic vectors, path states) is
indexed in this order.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from .arith import FramingChain, check_chain, neg_continued_fraction
from .errors import DomainError
from .linalg import adjugate_and_det, bareiss_determinant, leading_minors
from .seifert import SeifertData


@dataclass(frozen=True)
class PlumbingGraph:
    center_framing: int
    legs: tuple[FramingChain, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "center_framing", int(self.center_framing))
        object.__setattr__(self, "legs", tuple(check_chain(leg) for leg in self.legs))

    @property
    def size(self) -> int:
        return 1 + sum(len(leg) for leg in self.legs)

    @property
    def framings(self) -> tuple[int, ...]:
        out = [self.center_framing]
        for leg in self.legs:
            out.extend(leg)
        return tuple(out)

    @property
    def parents(self) -> tuple[int, ...]:
        """Parent index of each vertex, -1 for the center."""
        out = [-1]
        for leg in self.legs:
            parent = 0
            for _ in leg:
                out.append(parent)
                parent = len(out) - 1
        return tuple(out)

    def leg_offsets(self) -> list[int]:
        """Index of the first vertex of each leg."""
        offsets, pos = [], 1
        for leg in self.legs:
            offsets.append(pos)
            pos += len(leg)
        return offsets

    def edges(self) -> list[tuple[int, int]]:
        return [(p, i) for i, p in enumerate(self.parents) if p >= 0]

    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.size)]
        for p, c in self.edges():
            nbrs[p].append(c)
            nbrs[c].append(p)
        return tuple(tuple(x) for x in nbrs)

    def dump(self) -> str:
        """One ``index framing parent`` line per vertex."""
        return "\n".join(f"{i} {m} {p}" for i, (m, p) in enumerate(zip(self.framings, self.parents)))


@dataclass(frozen=True)
class IntersectionForm:
    matrix: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.matrix)


def standard_graph(m: SeifertData) -> PlumbingGraph:
    return PlumbingGraph(m.e0, tuple(neg_continued_fraction(r) for r in m.multipliers))


def intersection_matrix(g: PlumbingGraph) -> IntersectionForm:
    n = g.size
    q = [[0] * n for _ in range(n)]
    for i, m in enumerate(g.framings):
        q[i][i] = m
    for p, c in g.edges():
        q[p][c] = q[c][p] = 1
    return IntersectionForm(tuple(tuple(r) for r in q))


def _peel(q: IntersectionForm):
    """Leaf-first elimination of a forest-shaped form.

    Returns ``(order, pivots, later)`` where ``later[v]`` lists the
    neighbours of ``v`` eliminated after it, or None when Q is not a forest
    or a zero pivot appears.  Eliminating a leaf only changes the diagonal
    entry of its neighbour, so the whole pass is linear in the size.
    """
    n = q.size
    mat = q.matrix
    adj = [[j for j in range(n) if j != i and mat[i][j]] for i in range(n)]
    if sum(len(a) for a in adj) // 2 > n - 1:
        return None
    diag = [Fraction(mat[i][i]) for i in range(n)]
    degree = [len(a) for a in adj]
    done = [False] * n
    stack = [i for i in range(n) if degree[i] <= 1]
    order, pivots, later = [], [None] * n, [()] * n
    while stack:
        v = stack.pop()
        if done[v]:
            continue
        done[v] = True
        p = diag[v]
        if p == 0:
            return None
        order.append(v)
        pivots[v] = p
        later[v] = tuple(w for w in adj[v] if not done[w])
        for w in later[v]:
            diag[w] -= Fraction(mat[v][w] * mat[w][v]) / p
            degree[w] -= 1
            if degree[w] <= 1:
                stack.append(w)
    if len(order) != n:
        return None  # a cycle survived the peeling
    return order, pivots, later


def tree_pivots(q: IntersectionForm) -> list[Fraction] | None:
    """Pivots of exact leaf-first elimination, or None if Q is not a forest."""
    peeled = _peel(q)
    if peeled is None:
        return None
    order, pivots, _ = peeled
    return [pivots[v] for v in order]


def tree_solve(q: IntersectionForm, rhs) -> list[Fraction] | None:
    """Exact solution of ``Q x = rhs`` by leaf elimination; None off forests."""
    peeled = _peel(q)
    if peeled is None:
        return None
    order, pivots, later = peeled
    mat = q.matrix
    b = [Fraction(x) for x in rhs]
    for v in order:
        for w in later[v]:
            b[w] -= mat[w][v] * b[v] / pivots[v]
    x: list[Fraction] = [Fraction(0)] * q.size
    for v in reversed(order):
        x[v] = (b[v] - sum(mat[v][w] * x[w] for w in later[v])) / pivots[v]
    return x


def determinant(q: IntersectionForm) -> int:
    pivots = tree_pivots(q)
    if pivots is None:
        return bareiss_determinant(q.matrix)
    det = Fraction(1)
    for p in pivots:
        det *= p
    assert det.denominator == 1
    return int(det)


def is_negative_definite(q: IntersectionForm) -> bool:
    """True iff every leading principal minor has sign (-1)^k.

    On trees this is read off the elimination pivots (all negative); other
    matrices go through the leading minors directly.
    """
    pivots = tree_pivots(q)
    if pivots is not None:
        return all(p < 0 for p in pivots)
    if any(q.matrix[i][i] == 0 for i in range(q.size)):
        return False
    return all((d < 0) if k % 2 == 0 else (d > 0) for k, d in enumerate(leading_minors(q.matrix)))


_inverse_lock = threading.Lock()
_inverse_cache: dict[IntersectionForm, tuple[tuple[tuple[int, ...], ...], int]] = {}


def adjugate(q: IntersectionForm) -> tuple[tuple[tuple[int, ...], ...], int]:
    """Cached ``(adj Q, det Q)``; computed once per form, under a lock."""
    hit = _inverse_cache.get(q)
    if hit is not None:
        return hit
    with _inverse_lock:
        hit = _inverse_cache.get(q)
        if hit is None:
            try:
                adj, det = adjugate_and_det(q.matrix)
            except DomainError:
                raise DomainError("intersection form is singular") from None
            hit = (tuple(tuple(r) for r in adj), det)
            _inverse_cache[q] = hit
    return hit


def exact_inverse(q: IntersectionForm) -> tuple[tuple[Fraction, ...], ...]:
    adj, det = adjugate(q)
    return tuple(tuple(Fraction(x, det) for x in row) for row in adj)


def inverse_square(q: IntersectionForm, k) -> Fraction:
    """``k^T Q^-1 k``, exact.

    Uses the cached integer adjugate when one exists; otherwise a tree is
    solved directly, which avoids the cubic adjugate for one-off queries.
    """
    if q not in _inverse_cache:
        x = tree_solve(q, k)
        if x is not None:
            return sum((a * b for a, b in zip(k, x)), Fraction(0))
    adj, det = adjugate(q)
    total = 0
    nz = [(i, x) for i, x in enumerate(k) if x]
    for i, x in nz:
        row = adj[i]
        total += x * sum(y * row[j] for j, y in nz)
    return Fraction(total, det)
