"""Shared oracles and generators for the test suite.

The oracles deliberately avoid the package's own elimination code: ranks go
through sympy's DomainMatrix, determinants through cofactor expansion.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

import pytest
from sympy import QQ, GF
from sympy.polys.matrices import DomainMatrix

from rankvc import exact_linalg as la
from rankvc.exact_linalg import ExactMatrix
from rankvc.graph import Graph
from rankvc.instance import GraphMatroidPair
from rankvc.matroid import LinearMatroid


def _sympy_domain(domain):
    if domain == la.RATIONAL:
        return QQ
    return GF(domain.q)


def oracle_rank(m: ExactMatrix, cols=None) -> int:
    """Rank of the selected columns computed by sympy."""
    cols = range(m.ncols) if cols is None else list(cols)
    if not cols or m.nrows == 0:
        return 0
    dom = _sympy_domain(m.domain)
    rows = [[dom(int(x)) if dom != QQ else QQ(x.numerator, x.denominator)
             for x in (row[j] for j in cols)] for row in m.rows]
    return DomainMatrix(rows, (m.nrows, len(cols)), dom).rank()


def cofactor_det(rows, reduce=lambda x: x):
    """Laplace expansion along the first row."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return reduce(rows[0][0])
    total = 0
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * cofactor_det(minor, reduce)
    return reduce(total)


def independent_by_minors(m: ExactMatrix, cols) -> bool:
    """Column set independent iff some maximal minor is nonzero."""
    cols = list(cols)
    if not cols:
        return True
    if len(cols) > m.nrows:
        return False
    red = m.domain.reduce
    for rs in combinations(range(m.nrows), len(cols)):
        sub = [[m.rows[i][j] for j in cols] for i in rs]
        if red(cofactor_det(sub, red)):
            return True
    return False


def random_matrix(rng: random.Random, r: int, n: int, domain=la.RATIONAL,
                  lo: int = -3, hi: int = 3, zero_prob: float = 0.3) -> ExactMatrix:
    rows = []
    for _ in range(r):
        row = []
        for _ in range(n):
            if rng.random() < zero_prob:
                row.append(0)
            elif domain == la.RATIONAL and rng.random() < 0.2:
                row.append(Fraction(rng.randint(lo, hi), rng.randint(1, 4)))
            else:
                row.append(rng.randint(lo, hi))
        rows.append(row)
    return ExactMatrix(rows, domain, ncols=n)


def random_matroid(rng, n, r=None, domain=la.RATIONAL, **kw) -> LinearMatroid:
    r = rng.randint(1, n) if r is None else r
    return LinearMatroid(random_matrix(rng, r, n, domain, **kw), list(range(1, n + 1)))


def random_graph(rng, n, p) -> Graph:
    verts = range(1, n + 1)
    edges = [(u, v) for u, v in combinations(verts, 2) if rng.random() < p]
    return Graph(verts, edges)


def random_pair(rng, n, p=0.5, r=None, domain=la.RATIONAL, **kw) -> GraphMatroidPair:
    return GraphMatroidPair(random_graph(rng, n, p), random_matroid(rng, n, r, domain, **kw))


def tau_by_subsets(p: GraphMatroidPair) -> int:
    """tau over every vertex subset, not just the minimal covers."""
    g = p.graph
    verts = g.sorted_vertices()
    best = None
    for size in range(len(verts) + 1):
        for c in combinations(verts, size):
            cs = set(c)
            if all(u in cs or v in cs for u, v in g.edges):
                r = oracle_rank(p.matroid.rep, [p.matroid.index(x) for x in c])
                best = r if best is None else min(best, r)
    return best


def beta_by_subsets(g: Graph) -> int:
    verts = g.sorted_vertices()
    for size in range(len(verts) + 1):
        for c in combinations(verts, size):
            cs = set(c)
            if all(u in cs or v in cs for u, v in g.edges):
                return size
    raise AssertionError("unreachable")


def matching_by_subsets(g: Graph) -> int:
    """Largest matching by enumerating every matching (branch on the least
    free vertex: leave it unmatched or pair it with a free neighbour)."""
    adj = {v: set(g.neighbors(v)) for v in g.vertices}

    def best(free):
        if not free:
            return 0
        v = min(free)
        rest = free - {v}
        out = best(rest)
        for u in adj[v] & rest:
            out = max(out, 1 + best(rest - {u}))
        return out

    return best(frozenset(g.vertices))


@pytest.fixture
def rng():
    return random.Random(12345)
