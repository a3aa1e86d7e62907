"""
Second compression step: thin out the edges with the symmetric square.

Edge ``{u, v}`` is represented by the symmetric matrix ``u v^T + v u^T``
flattened to its upper triangle (row-major, diagonal included), so a rank-r
matroid gives vectors of length r(r+1)/2.  An edge in the span of the other
edge vectors can be deleted without changing tau; keeping one greedy basis
therefore leaves at most r(r+1)/2 edges.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import exact_linalg as la
from .errors import InputError
from .exact_linalg import ExactMatrix
from .instance import GraphMatroidPair
from .matroid import LinearMatroid

__all__ = ["sym_square", "EdgeMatroid", "build_edge_matroid", "reduce_edges",
           "remove_isolated"]


def sym_square(u, v, domain=la.RATIONAL) -> tuple:
    """Upper triangle of ``u v^T + v u^T``: slot (i, i) holds 2 u_i v_i and
    slot (i, j), i < j, holds u_i v_j + u_j v_i."""
    if len(u) != len(v):
        raise InputError(f"vectors of length {len(u)} and {len(v)}")
    red = domain.reduce
    r = len(u)
    out = []
    for i in range(r):
        out.append(red(2 * u[i] * v[i]))
        for j in range(i + 1, r):
            out.append(red(u[i] * v[j] + u[j] * v[i]))
    return tuple(out)


@dataclass(frozen=True)
class EdgeMatroid:
    """Column matroid of the edge vectors, labelled by edge, in canonical
    (lexicographic) edge order."""

    pair: GraphMatroidPair
    matroid: LinearMatroid

    @property
    def edges(self) -> tuple:
        return self.matroid.labels


def build_edge_matroid(p: GraphMatroidPair) -> EdgeMatroid:
    x = p.matroid
    r = x.rep.nrows
    edges = p.graph.sorted_edges()
    cols = [sym_square(x.column(u), x.column(v), x.domain) for u, v in edges]
    rep = ExactMatrix.from_columns(cols, x.domain, nrows=r * (r + 1) // 2)
    return EdgeMatroid(p, LinearMatroid(rep, edges))


def reduce_edges(p: GraphMatroidPair) -> GraphMatroidPair:
    """Keep a greedy basis of the edge matroid (canonical order) and delete
    every other edge.  The matroid itself is untouched."""
    em = build_edge_matroid(p)
    rep = em.matroid.rep
    ech = la._Echelon(rep.domain, rep.nrows)
    drop = [e for j, e in enumerate(em.edges) if not ech.add(rep.column(j))]
    if not drop:
        return p
    return p.delete_edges(drop)


def remove_isolated(p: GraphMatroidPair, budget: int):
    """Delete every degree-0 vertex from graph and matroid; the budget is
    unchanged.  The representation is trimmed back to a row basis."""
    iso = p.graph.isolated()
    if not iso:
        return p, budget
    q = p.delete_vertices(iso)
    return GraphMatroidPair(q.graph, q.matroid.compact()), budget
