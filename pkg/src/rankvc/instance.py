"""
Rank Vertex Cover instances, exhaustive decision oracles and the RVC1 format.

A `GraphMatroidPair` binds every graph vertex to the matroid element with the
same label.  tau(P) is the least matroid rank of a vertex cover; an instance
``(P, budget)`` is a YES instance iff tau(P) <= budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import networkx as nx

from . import exact_linalg as la
from .errors import InputError, OracleLimitError, PreconditionError
from .exact_linalg import ExactMatrix, PrimeField
from .graph import Graph, maximum_matching
from .matroid import LinearMatroid

ORACLE_LIMIT = 16

__all__ = [
    "ORACLE_LIMIT",
    "GraphMatroidPair",
    "RvcInstance",
    "lift_from_vc_above_mm",
    "minimal_vertex_covers",
    "tau_bruteforce",
    "decide_bruteforce",
    "vertex_cover_number",
    "verify_general_position",
    "serialize",
    "deserialize",
    "constant_instance",
]


@dataclass(frozen=True)
class GraphMatroidPair:
    graph: Graph
    matroid: LinearMatroid

    def __post_init__(self):
        if set(self.matroid.labels) != set(self.graph.vertices):
            raise InputError("matroid labels must coincide with the graph's vertices")

    def delete_vertex(self, v) -> "GraphMatroidPair":
        return GraphMatroidPair(self.graph.delete_vertex(v), self.matroid.delete(v))

    def delete_vertices(self, vs) -> "GraphMatroidPair":
        vs = set(vs)
        keep = [e for e in self.matroid.labels if e not in vs]
        return GraphMatroidPair(self.graph.delete_vertices(vs), self.matroid.restrict(keep))

    def contract_vertex(self, v) -> "GraphMatroidPair":
        return GraphMatroidPair(self.graph.delete_vertex(v), self.matroid.contract(v))

    def delete_edges(self, edges) -> "GraphMatroidPair":
        return GraphMatroidPair(self.graph.delete_edges(edges), self.matroid)


@dataclass(frozen=True)
class RvcInstance:
    pair: GraphMatroidPair
    budget: int

    def __post_init__(self):
        if isinstance(self.budget, bool) or not isinstance(self.budget, int) or self.budget < 0:
            raise InputError(f"budget must be a non-negative int, got {self.budget!r}")

    @property
    def graph(self) -> Graph:
        return self.pair.graph

    @property
    def matroid(self) -> LinearMatroid:
        return self.pair.matroid


def lift_from_vc_above_mm(g: Graph, k: int, domain=la.RATIONAL) -> RvcInstance:
    """(G, k) -> (G, I_n, mu(G) + k), columns in ascending vertex order."""
    if k < 0:
        raise InputError("k must be non-negative")
    mu = len(maximum_matching(g))
    matroid = LinearMatroid.identity(g.sorted_vertices(), domain)
    return RvcInstance(GraphMatroidPair(g, matroid), mu + k)


def constant_instance(yes: bool, domain=la.RATIONAL) -> RvcInstance:
    """Fixed tiny instance with the requested answer.

    YES: the empty graph with an empty matroid and budget 0.
    NO: a single edge whose endpoints are parallel non-loops, budget 0.
    """
    if yes:
        m = LinearMatroid(ExactMatrix((), domain, ncols=0), ())
        return RvcInstance(GraphMatroidPair(Graph(), m), 0)
    m = LinearMatroid(ExactMatrix([[1, 1]], domain), (1, 2))
    return RvcInstance(GraphMatroidPair(Graph((1, 2), [(1, 2)]), m), 0)


# ---------------------------------------------------------------------------
# exhaustive oracles
# ---------------------------------------------------------------------------

def _check_limit(n: int, limit: int):
    if n > limit:
        raise OracleLimitError(f"{n} vertices exceeds the oracle limit of {limit}")


def minimal_vertex_covers(g: Graph):
    """Yield every inclusion-minimal vertex cover of ``g``.

    These are the complements of maximal independent sets, i.e. of maximal
    cliques of the complement graph.
    """
    if not g.vertices:
        yield frozenset()
        return
    comp = nx.complement(g.to_networkx())
    for clique in nx.find_cliques(comp):
        yield g.vertices - frozenset(clique)


def tau_bruteforce(p: GraphMatroidPair, limit: int = ORACLE_LIMIT) -> int:
    """Least rank of a vertex cover.  Minimal covers suffice since rank is
    monotone."""
    _check_limit(p.graph.n, limit)
    return min(p.matroid.rank_of(c) for c in minimal_vertex_covers(p.graph))


def decide_bruteforce(inst: RvcInstance, limit: int = ORACLE_LIMIT) -> bool:
    return tau_bruteforce(inst.pair, limit) <= inst.budget


def vertex_cover_number(g: Graph, limit: int = ORACLE_LIMIT) -> int:
    """beta(G) by enumerating minimal covers."""
    _check_limit(g.n, limit)
    return min(len(c) for c in minimal_vertex_covers(g))


def verify_general_position(x: LinearMatroid, e, flat_generators,
                            limit: int = ORACLE_LIMIT) -> bool:
    """Exhaustive check that every independent set I (e not in I) which does
    not span the flat of ``flat_generators`` stays independent with e added.
    """
    _check_limit(len(x), limit)
    gens = list(flat_generators)
    if e in gens:
        raise PreconditionError("the moved element must not generate the flat")
    x.index(e)
    others = [a for a in x.labels if a != e]
    for size in range(min(len(others), x.rank) + 1):
        for I in combinations(others, size):
            if not x.is_independent(I):
                continue
            if x.rank_of(I + tuple(gens)) == len(I):
                continue  # I spans the flat
            if not x.is_independent(I + (e,)):
                return False
    return True


# ---------------------------------------------------------------------------
# RVC1 text format
# ---------------------------------------------------------------------------

MAGIC = "RVC1"


def _fmt(x) -> str:
    return str(x)


def serialize(inst: RvcInstance) -> str:
    """RVC1 text.  Layout::

        RVC1
        domain rational | domain gfp <q>
        n <vertices> m <edges> r <rows> l <budget>
        v <label> ...
        e <u> <v>            (one line per edge, lexicographic)
        <label> <x_1> ... <x_r>   (one line per column, vertex order)
    """
    g, mat = inst.graph, inst.matroid
    rep = mat.rep
    lines = [MAGIC, f"domain {rep.domain}",
             f"n {g.n} m {g.m} r {rep.nrows} l {inst.budget}",
             " ".join(["v"] + [str(v) for v in g.sorted_vertices()])]
    lines += [f"e {u} {v}" for u, v in g.sorted_edges()]
    for v in g.sorted_vertices():
        col = mat.column(v)
        lines.append(" ".join([str(v)] + [_fmt(x) for x in col]))
    return "\n".join(lines) + "\n"


def deserialize(text: str) -> RvcInstance:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0].strip() != MAGIC:
        raise InputError(f"not an {MAGIC} file (bad or missing header)")
    if len(lines) < 4:
        raise InputError("truncated RVC1 file")
    tok = lines[1].split()
    if tok == ["domain", "rational"]:
        domain = la.RATIONAL
    elif len(tok) == 3 and tok[:2] == ["domain", "gfp"]:
        domain = PrimeField(_int(tok[2], 2))
    else:
        raise InputError(f"line 2: bad domain line {lines[1]!r}")
    tok = lines[2].split()
    if len(tok) != 8 or tok[0::2] != ["n", "m", "r", "l"]:
        raise InputError(f"line 3: bad size line {lines[2]!r}")
    n, m, r, budget = (_int(t, 3) for t in tok[1::2])
    tok = lines[3].split()
    if not tok or tok[0] != "v" or len(tok) != n + 1:
        raise InputError(f"line 4: expected 'v' followed by {n} labels")
    verts = [_int(t, 4, signed=True) for t in tok[1:]]
    if len(set(verts)) != n:
        raise InputError("line 4: duplicate vertex labels")
    if len(lines) != 4 + m + n:
        raise InputError(f"expected {4 + m + n} lines, found {len(lines)}")
    edges = []
    for i in range(m):
        lineno = 5 + i
        tok = lines[4 + i].split()
        if len(tok) != 3 or tok[0] != "e":
            raise InputError(f"line {lineno}: bad edge line")
        edges.append((_int(tok[1], lineno, True), _int(tok[2], lineno, True)))
    try:
        g = Graph(verts, edges)
    except InputError as exc:
        raise InputError(f"edge list: {exc}") from None
    if g.m != m:
        raise InputError("duplicate edges in edge list")
    cols = {}
    for i in range(n):
        lineno = 5 + m + i
        tok = lines[4 + m + i].split()
        if not tok or len(tok) != r + 1:
            raise InputError(f"line {lineno}: expected a label and {r} entries")
        label = _int(tok[0], lineno, True)
        if label not in g.vertices or label in cols:
            raise InputError(f"line {lineno}: column label {label} not a fresh vertex")
        try:
            cols[label] = [_entry(t, domain) for t in tok[1:]]
        except (InputError, ValueError, ZeroDivisionError) as exc:
            raise InputError(f"line {lineno}: {exc}") from None
    labels = sorted(cols)
    rep = ExactMatrix.from_columns([cols[v] for v in labels], domain, nrows=r)
    return RvcInstance(GraphMatroidPair(g, LinearMatroid(rep, labels)), budget)


def _int(tok: str, lineno: int, signed: bool = False) -> int:
    body = tok[1:] if signed and tok.startswith("-") else tok
    if not body.isdigit():
        raise InputError(f"line {lineno}: expected an integer, got {tok!r}")
    return int(tok)


def _entry(tok: str, domain):
    if domain == la.RATIONAL:
        num, _, den = tok.partition("/")
        _int(num, 0, True)
        if den:
            _int(den, 0)
            if int(den) == 0:
                raise InputError("zero denominator")
        x = Fraction(tok)
        if den and (x.denominator != int(den) or x.numerator != int(num)):
            raise InputError(f"rational {tok} not in lowest terms")
        return x
    if not tok.isdigit() or int(tok) >= domain.q:
        raise InputError(f"{tok!r} is not a residue modulo {domain.q}")
    return int(tok)
