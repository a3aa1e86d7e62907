"""
Simple undirected graphs: matchings, vertex covers, DIMACS input and output.

Vertices are ints.  DIMACS files number them from 1 and `parse_dimacs` keeps
those numbers; `emit_dimacs` renames to ``1..n`` in sorted order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable

import networkx as nx

from .errors import InputError

__all__ = [
    "Graph",
    "Exact",
    "MatchingApprox",
    "Provided",
    "maximum_matching",
    "vertex_cover",
    "is_vertex_cover",
    "parse_dimacs",
    "emit_dimacs",
    "gnp",
]


def _edge(u: int, v: int) -> tuple[int, int]:
    if u == v:
        raise InputError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.  Edges are stored as sorted pairs."""

    vertices: frozenset = frozenset()
    edges: frozenset = frozenset()

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()):
        vs = frozenset(vertices)
        es = set()
        for u, v in edges:
            e = _edge(u, v)
            if u not in vs or v not in vs:
                raise InputError(f"edge {e} has an endpoint outside the vertex set")
            es.add(e)
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", frozenset(es))

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], vertices: Iterable[int] = ()) -> "Graph":
        edges = list(edges)
        vs = set(vertices)
        for u, v in edges:
            vs.update((u, v))
        return cls(vs, edges)

    # named families use vertices 1..n, like DIMACS and gnp
    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(range(1, n + 1), [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls(range(1, n + 1), [(i, i % n + 1) for i in range(1, n + 1)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(range(1, n + 1), [(i, i + 1) for i in range(1, n)])

    @cached_property
    def _adj(self) -> dict:
        adj = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(ns) for v, ns in adj.items()}

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_vertices(self) -> list[int]:
        return sorted(self.vertices)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def _check_vertex(self, v):
        if v not in self.vertices:
            raise InputError(f"unknown vertex {v!r}")

    def neighbors(self, v) -> frozenset:
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v) -> int:
        return len(self.neighbors(v))

    def isolated(self) -> list[int]:
        return sorted(v for v in self.vertices if not self._adj[v])

    def has_edge(self, u, v) -> bool:
        return u != v and _edge(u, v) in self.edges

    def delete_vertex(self, v) -> "Graph":
        self._check_vertex(v)
        return Graph(self.vertices - {v}, [e for e in self.edges if v not in e])

    def delete_vertices(self, vs: Iterable[int]) -> "Graph":
        vs = set(vs)
        for v in vs:
            self._check_vertex(v)
        return Graph(self.vertices - vs, [e for e in self.edges if not vs.intersection(e)])

    def delete_edge(self, u, v) -> "Graph":
        e = _edge(u, v)
        if e not in self.edges:
            raise InputError(f"unknown edge {e}")
        return Graph(self.vertices, self.edges - {e})

    def delete_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        drop = {_edge(u, v) for u, v in edges}
        missing = drop - self.edges
        if missing:
            raise InputError(f"unknown edges {sorted(missing)}")
        return Graph(self.vertices, self.edges - drop)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.sorted_vertices())
        g.add_edges_from(self.sorted_edges())
        return g

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m}, edges={self.sorted_edges()})"


# ---------------------------------------------------------------------------
# matching and vertex cover
# ---------------------------------------------------------------------------

def maximum_matching(g: Graph) -> frozenset:
    """Maximum-cardinality matching of a general graph (Edmonds' blossom
    algorithm via networkx).  Returns a set of sorted vertex pairs."""
    if not g.edges:
        return frozenset()
    mate = nx.max_weight_matching(g.to_networkx(), maxcardinality=True, weight=None)
    return frozenset(_edge(u, v) for u, v in mate)


def is_vertex_cover(g: Graph, cover: Iterable[int]) -> bool:
    cover = set(cover)
    return all(u in cover or v in cover for u, v in g.edges)


@dataclass(frozen=True)
class Exact:
    """Minimum vertex cover by branch and bound; gives up above ``bound``."""

    bound: int | None = None


@dataclass(frozen=True)
class MatchingApprox:
    """Both endpoints of a greedy maximal matching (at most twice optimal)."""


@dataclass(frozen=True)
class Provided:
    """A caller-supplied cover, validated and echoed back."""

    cover: frozenset = field(default_factory=frozenset)

    def __init__(self, cover: Iterable[int] = ()):
        object.__setattr__(self, "cover", frozenset(cover))


def vertex_cover(g: Graph, strategy=Exact()) -> frozenset | None:
    """Vertex cover of ``g`` according to ``strategy``.

    For `Exact` returns a minimum cover, or ``None`` when every cover is
    larger than ``strategy.bound``.
    """
    if isinstance(strategy, Exact):
        return _min_cover(g, strategy.bound)
    if isinstance(strategy, MatchingApprox):
        cover = set()
        for u, v in g.sorted_edges():
            if u not in cover and v not in cover:
                cover.update((u, v))
        return frozenset(cover)
    if isinstance(strategy, Provided):
        if not strategy.cover <= g.vertices:
            raise InputError("provided cover contains unknown vertices")
        if not is_vertex_cover(g, strategy.cover):
            raise InputError("provided set is not a vertex cover")
        return strategy.cover
    raise InputError(f"unknown vertex cover strategy {strategy!r}")


def _min_cover(g: Graph, bound: int | None) -> frozenset | None:
    adj = {v: set(ns) for v, ns in g._adj.items() if ns}
    # greedy upper bound
    best = set(vertex_cover(g, MatchingApprox()))
    limit = len(best) if bound is None else min(len(best), bound + 1)
    found = best if bound is None or len(best) <= bound else None

    def solve(adj, chosen):
        nonlocal found, limit
        # degree-one rule: take the neighbour
        chosen = list(chosen)
        adj = {v: set(ns) for v, ns in adj.items()}
        changed = True
        while changed:
            changed = False
            for v in sorted(adj):
                if v in adj and len(adj[v]) == 1:
                    (u,) = adj[v]
                    chosen.append(u)
                    _remove(adj, u)
                    changed = True
        if len(chosen) >= limit:
            return
        if not adj:
            found, limit = set(chosen), len(chosen)
            return
        # a matching-style lower bound: every vertex covers <= maxdeg edges
        m = sum(len(ns) for ns in adj.values()) // 2
        maxdeg = max(len(ns) for ns in adj.values())
        if len(chosen) + -(-m // maxdeg) >= limit:
            return
        v = max(sorted(adj), key=lambda x: len(adj[x]))
        nbrs = sorted(adj[v])
        sub = {x: set(ns) for x, ns in adj.items()}
        _remove(sub, v)
        solve(sub, chosen + [v])
        sub = {x: set(ns) for x, ns in adj.items()}
        for u in nbrs:
            _remove(sub, u)
        solve(sub, chosen + nbrs)

    solve(adj, [])
    if found is None or (bound is not None and len(found) > bound):
        return None
    return frozenset(found)


def _remove(adj: dict, v) -> None:
    for u in adj.pop(v, ()):
        ns = adj[u]
        ns.discard(v)
        if not ns:
            del adj[u]


# ---------------------------------------------------------------------------
# DIMACS
# ---------------------------------------------------------------------------

def parse_dimacs(text: str) -> Graph:
    """Parse the DIMACS edge format (``p edge n m`` then ``e u v`` lines)."""
    n = m = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        tok = raw.split()
        if not tok or tok[0] == "c":
            continue
        if tok[0] == "p":
            if n is not None:
                raise InputError(f"line {lineno}: duplicate problem line")
            if len(tok) != 4 or tok[1] not in ("edge", "col"):
                raise InputError(f"line {lineno}: malformed problem line {raw!r}")
            n, m = _nonneg(tok[2], lineno), _nonneg(tok[3], lineno)
        elif tok[0] == "e":
            if n is None:
                raise InputError(f"line {lineno}: edge before problem line")
            if len(tok) != 3:
                raise InputError(f"line {lineno}: malformed edge line {raw!r}")
            u, v = _nonneg(tok[1], lineno), _nonneg(tok[2], lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise InputError(f"line {lineno}: endpoint out of range 1..{n}")
            if u == v:
                raise InputError(f"line {lineno}: self-loop at {u}")
            e = _edge(u, v)
            if e in seen:
                raise InputError(f"line {lineno}: duplicate edge {u} {v}")
            seen.add(e)
            edges.append(e)
        else:
            raise InputError(f"line {lineno}: unknown line type {tok[0]!r}")
    if n is None:
        raise InputError("missing problem line")
    if len(edges) != m:
        raise InputError(f"header declares {m} edges, found {len(edges)}")
    return Graph(range(1, n + 1), edges)


def _nonneg(tok: str, lineno: int) -> int:
    if not tok.isdigit():
        raise InputError(f"line {lineno}: expected a non-negative integer, got {tok!r}")
    return int(tok)


def emit_dimacs(g: Graph) -> str:
    """Canonical DIMACS text; vertices renamed to 1..n in sorted order."""
    rename = {v: i for i, v in enumerate(g.sorted_vertices(), 1)}
    edges = sorted(_edge(rename[u], rename[v]) for u, v in g.edges)
    lines = [f"p edge {g.n} {g.m}"]
    lines += [f"e {u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def gnp(n: int, p, rng: random.Random) -> Graph:
    """Erdos-Renyi G(n, p) on vertices 1..n; ``p`` may be a Fraction."""
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise InputError(f"edge probability {p} outside [0, 1]")
    if n < 0:
        raise InputError("n must be non-negative")
    edges = []
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            # exact Bernoulli(p) for rational p
            if rng.randrange(p.denominator) < p.numerator:
                edges.append((u, v))
    return Graph(range(1, n + 1), edges)
