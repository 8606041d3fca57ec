"""Bipartite multigraph enumeration behind the self-transvectant constant.

Expanding omega^(2p) Q(x)^e Q(y)^e by the Leibniz rule and restricting to
the diagonal turns the computation into a weighted sum over bipartite
multigraphs: an e x e matrix (m_ij) of edge multiplicities with every row
and column sum at most 2 and total 2p.  Components of such a graph are
cycles or chains; chains joining the two sides cancel out and are excluded
from the sum.  This module enumerates the matrices, classifies components
and evaluates the weighted sum; it is pure integer combinatorics (the
matching symbolic identity is checked in :mod:`transvect.verify`).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterator

from .poly import Rational

__all__ = [
    "BipartiteMultigraph",
    "ComponentReport",
    "enumerate_graphs",
    "components",
    "weight",
    "self_coeff_graphs",
]


@dataclass(frozen=True)
class BipartiteMultigraph:
    """Edge-multiplicity matrix between e left and e right vertices."""

    e: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.e <= 0:
            raise ValueError("need a positive number of vertices per side")
        if len(self.rows) != self.e or any(len(r) != self.e for r in self.rows):
            raise ValueError(f"matrix must be {self.e}x{self.e}")
        if any(m < 0 for r in self.rows for m in r):
            raise ValueError("edge multiplicities must be nonnegative")
        if any(sum(r) > 2 for r in self.rows):
            raise ValueError("row sum exceeds 2")
        if any(sum(r[j] for r in self.rows) > 2 for j in range(self.e)):
            raise ValueError("column sum exceeds 2")

    @property
    def total_edges(self) -> int:
        return sum(sum(r) for r in self.rows)

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(r) for r in self.rows)

    def col_sums(self) -> tuple[int, ...]:
        return tuple(sum(r[j] for r in self.rows) for j in range(self.e))

    def to_record(self) -> dict:
        return {"e": self.e, "p": self.total_edges // 2, "rows": [list(r) for r in self.rows]}


@dataclass(frozen=True)
class ComponentReport:
    """Connected components by kind; chains of zero edges are the isolated
    vertices (kind LL on the left side, RR on the right)."""

    kinds: tuple[str, ...]
    edge_counts: tuple[int, ...]

    @property
    def cycles(self) -> int:
        return sum(1 for k in self.kinds if k == "cycle")

    def count(self, kind: str) -> int:
        return sum(1 for k in self.kinds if k == kind)


def enumerate_graphs(e: int, p: int) -> Iterator[BipartiteMultigraph]:
    """Yield every admissible matrix exactly once, in row-major
    lexicographic order."""
    if e <= 0:
        raise ValueError("e must be positive")
    if p < 0 or 2 * p > 2 * e:
        raise ValueError(f"p={p} out of range for e={e}")
    target = 2 * p

    def gen(rows_left: int, col_room: tuple[int, ...], budget: int):
        if rows_left == 0:
            if budget == 0:
                yield ()
            return
        if budget > 2 * rows_left or budget < 0:
            return
        for row in _row_options(col_room):
            s = sum(row)
            if s > budget:
                continue
            new_room = tuple(c - m for c, m in zip(col_room, row))
            for rest in gen(rows_left - 1, new_room, budget - s):
                yield (row,) + rest

    for rows in gen(e, (2,) * e, target):
        yield BipartiteMultigraph(e, rows)


def _row_options(col_room: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All rows with entries <= column room and row sum <= 2, lexicographic."""
    e = len(col_room)
    out: list[tuple[int, ...]] = []

    def rec(j: int, row: list[int], total: int):
        if j == e:
            out.append(tuple(row))
            return
        for m in range(min(2 - total, col_room[j]) + 1):
            row.append(m)
            rec(j + 1, row, total + m)
            row.pop()

    rec(0, [], 0)
    return out


def components(g: BipartiteMultigraph) -> ComponentReport:
    """Connected-component decomposition with kinds.

    Vertices are L0..L(e-1) and R0..R(e-1); parallel edges count toward
    vertex degree.  A component is a cycle when every vertex has degree 2,
    otherwise it is a chain whose kind is fixed by the sides of its
    endpoints (degree < 2), an isolated vertex being a zero-edge chain.
    """
    e = g.e
    n = 2 * e  # vertices: 0..e-1 left, e..2e-1 right
    adj: list[list[int]] = [[] for _ in range(n)]
    degree = [0] * n
    for i, row in enumerate(g.rows):
        for j, m in enumerate(row):
            if m:
                adj[i].append(e + j)
                adj[e + j].append(i)
                degree[i] += m
                degree[e + j] += m

    seen = [False] * n
    kinds: list[str] = []
    edge_counts: list[int] = []
    for start in range(n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        edges = sum(g.rows[v][w - e] for v in comp if v < e for w in adj[v])
        if all(degree[v] == 2 for v in comp) and edges:
            kinds.append("cycle")
        else:
            ends = [v for v in comp if degree[v] < 2]
            if len(comp) == 1 and degree[comp[0]] == 0:
                kinds.append("chain-LL" if comp[0] < e else "chain-RR")
            else:
                if len(ends) != 2:
                    raise RuntimeError(f"chain with {len(ends)} endpoints in {g}")
                left_ends = sum(1 for v in ends if v < e)
                kinds.append(("chain-RR", "chain-LR", "chain-LL")[left_ends])
        edge_counts.append(edges)
    return ComponentReport(tuple(kinds), tuple(edge_counts))


def weight(g: BipartiteMultigraph) -> Rational:
    """Combinatorial weight (2p)! 2^(2e) / (prod m_ij! prod (2-l_i)! prod (2-c_j)!)."""
    two_p = g.total_edges
    den = 1
    for row in g.rows:
        for m in row:
            den *= factorial(m)
    for s in g.row_sums():
        den *= factorial(2 - s)
    for s in g.col_sums():
        den *= factorial(2 - s)
    return Rational(factorial(two_p) * 4**g.e, den)


def self_coeff_graphs(e: int, p: int) -> Rational:
    """Graph-sum route to the self-transvectant constant.

    Sums (2p)! 2^(2e-2p+C(G)) / (prod m_ij! prod (2-l_i)! prod (2-c_j)!)
    over admissible graphs: those without a chain component joining the two
    sides.  Each summand equals weight(g) * 2^(C(G)-2p).
    """
    if p < 0 or p > e:
        raise ValueError(f"p={p} out of range for e={e}")
    total = Rational(0)
    scale = Rational(1, 4**p)
    for g in enumerate_graphs(e, p):
        report = components(g)
        if report.count("chain-LR"):
            continue
        total += weight(g) * scale * 2 ** report.cycles
    return total
