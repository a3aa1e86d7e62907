"""
First compression step: shrink the matroid rank of ``(G, I_n, mu + k)``.

For a vertex ``v`` whose column is a co-loop, the vertex rule moves that
column to a random combination of its neighbours' columns (a point in
general position on their flat, with high probability), contracts it and
removes ``v`` from the graph.  The rank drops by exactly two and tau by one,
so the budget drops by one.  `batch_reduce` applies the rule to every vertex
outside a vertex cover Y; those vertices form an independent set, so each
one is still a co-loop when its turn comes.

Two arithmetic modes:

``fast``
    The whole run lives in one GF(q) with q of about 62 bits and
    coefficients uniform over GF(q).
``faithful``
    Rule applications are exact over Q with integer coefficients from
    ``[1, p]``, ``p > 2**(n+1) / a`` for a per-application failure allowance
    ``a``.  After each application the matrix is reduced modulo a fresh
    random prime below `entry_bound`; the last reduction is the emitted
    representation.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import exact_linalg as la
from .errors import (BitControlError, ContractLoopError, DegenerateFlat,
                     DenominatorCollision, InputError, PreconditionError,
                     RankVCError, SchwartzZippelFailure)
from .exact_linalg import ExactMatrix, PrimeField
from .instance import GraphMatroidPair, RvcInstance, constant_instance
from .matroid import LinearMatroid

FAST = "fast"
FAITHFUL = "faithful"

__all__ = [
    "FAST",
    "FAITHFUL",
    "RandomnessBudget",
    "StepTrace",
    "BatchReport",
    "general_position_vector",
    "apply_vertex_rule",
    "entry_bound",
    "bit_control",
    "loop_vertex_elim",
    "batch_reduce",
]


@dataclass
class RandomnessBudget:
    """Failure probability handed out to rule applications.

    ``epsilon`` is the total reserved for the rule applications and every
    application is charged ``per_step``; charges never exceed the total.
    """

    epsilon: Fraction
    per_step: Fraction
    mode: str = FAST
    spent: Fraction = Fraction(0)

    def __post_init__(self):
        self.epsilon = Fraction(self.epsilon)
        self.per_step = Fraction(self.per_step)
        if not 0 < self.epsilon < 1:
            raise InputError(f"epsilon must lie in (0, 1), got {self.epsilon}")
        if not 0 < self.per_step <= self.epsilon:
            raise InputError("per-step budget must lie in (0, epsilon]")
        if self.mode not in (FAST, FAITHFUL):
            raise InputError(f"unknown mode {self.mode!r}")

    @classmethod
    def split(cls, eps_hat, n: int, mode: str = FAST,
              randomized_cover: bool = False) -> "RandomnessBudget":
        """Half of ``eps_hat`` goes to a randomized cover strategy; a
        deterministic strategy hands it back.  The rest is spread over at
        most ``n`` rule applications."""
        eps_hat = Fraction(eps_hat)
        steps = eps_hat / 2 if randomized_cover else eps_hat
        return cls(steps, steps / max(n, 1), mode)

    @property
    def remaining(self) -> Fraction:
        return self.epsilon - self.spent

    def charge(self) -> Fraction:
        if self.spent + self.per_step > self.epsilon:
            raise PreconditionError("randomness budget exhausted")
        self.spent += self.per_step
        return self.per_step


@dataclass
class StepTrace:
    vertex: int
    action: str                      # "rule", "isolated", "loops" or "reduce"
    rank_before: int
    rank_after: int
    budget_before: int
    budget_after: int
    eps_before: Fraction = Fraction(0)
    eps_after: Fraction = Fraction(0)
    coefficients: tuple = ()
    vector: tuple = ()
    removed: tuple = ()              # vertices deleted by this step
    prime: int | None = None         # faithful: modulus of the reduction
    entry_bound: int | None = None   # faithful: B(n, r, eps) for that prime
    max_entry: int | None = None     # faithful: largest residue after it


@dataclass
class BatchReport:
    steps: list = field(default_factory=list)
    cover_size: int = 0
    s_size: int = 0
    applied: int = 0
    isolated: int = 0
    loops_removed: int = 0
    rank_before: int = 0
    rank_after: int = 0
    budget_before: int = 0
    budget_after: int = 0
    trivial_no: bool = False
    failed: bool = False
    failure: str = ""


def general_position_vector(x: LinearMatroid, flat_generators, rng=None, *,
                            coeff_range: range | None = None,
                            coefficients=None) -> tuple:
    """Random point sum(c_h * h) of the flat spanned by ``flat_generators``.

    Coefficients are drawn uniformly from ``coeff_range`` (default: all of
    GF(q) for a prime-field matroid) unless given explicitly.
    """
    gens = list(flat_generators)
    if not gens or all(x.is_loop(h) for h in gens):
        raise DegenerateFlat("flat generators are empty or all loops")
    if coefficients is None:
        if coeff_range is None:
            if not isinstance(x.domain, PrimeField):
                raise InputError("a coefficient range is required over Q")
            coeff_range = range(x.domain.q)
        coefficients = [rng.randrange(coeff_range.start, coeff_range.stop)
                        for _ in gens]
    if len(coefficients) != len(gens):
        raise InputError("one coefficient per generator is required")
    dom = x.domain
    vec = [dom.zero] * x.rep.nrows
    for c, h in zip(coefficients, gens):
        c = dom.coerce(c)
        if c:
            vec = [dom.reduce(a + c * b) for a, b in zip(vec, x.column(h))]
    return tuple(vec)


def _coeff_range(x: LinearMatroid, mode: str, allowance: Fraction) -> range:
    if mode == FAST:
        if not isinstance(x.domain, PrimeField):
            raise InputError("fast mode needs a prime-field matroid")
        return range(x.domain.q)
    # Schwartz-Zippel over at most 2**n independent sets: failure <= allowance/2
    p = (2 ** (len(x) + 1)) * allowance.denominator // allowance.numerator + 1
    return range(1, p + 1)


def apply_vertex_rule(p: GraphMatroidPair, v, budget: int, rng: random.Random,
                      rb: RandomnessBudget, coefficients=None):
    """One application of the vertex rule at ``v``.

    Returns ``(pair, budget - 1, trace)``.  Raises `PreconditionError` if
    ``v`` is not a co-loop, `DegenerateFlat` if its neighbourhood spans
    nothing and `SchwartzZippelFailure` if the drawn vector is zero.
    """
    x = p.matroid
    if not x.is_coloop(v):
        raise PreconditionError(f"vertex {v!r} is not a co-loop")
    nbrs = sorted(p.graph.neighbors(v))
    if not nbrs or all(x.is_loop(h) for h in nbrs):
        raise DegenerateFlat(f"neighbourhood of {v!r} spans the zero flat")
    eps_before = rb.remaining
    allowance = rb.charge()
    if coefficients is None:
        rng_range = _coeff_range(x, rb.mode, allowance)
        coefficients = [rng.randrange(rng_range.start, rng_range.stop) for _ in nbrs]
    vec = general_position_vector(x, nbrs, coefficients=coefficients)
    if not any(vec):
        raise SchwartzZippelFailure(f"random combination at {v!r} vanished")
    r0 = x.rank
    contracted = x.move_column(v, vec).contract(v)
    r1 = contracted.rank
    if r1 != r0 - 2:
        raise RankVCError(f"rank went {r0} -> {r1} at {v!r}, expected a drop of 2")
    out = GraphMatroidPair(p.graph.delete_vertex(v), contracted)
    trace = StepTrace(vertex=v, action="rule", rank_before=r0, rank_after=r1,
                      budget_before=budget, budget_after=budget - 1,
                      eps_before=eps_before, eps_after=rb.remaining,
                      coefficients=tuple(coefficients), vector=vec, removed=(v,))
    return out, budget - 1, trace


def entry_bound(n: int, r: int, eps) -> int:
    """B(n, r, eps) = C n^(2r+3) (n log2 n + log2(1/eps))^2 / eps with
    C = max(2, ceil(log2(1/eps))), rounded up and never below 3."""
    eps = Fraction(eps)
    if not 0 < eps < 1:
        raise InputError(f"epsilon must lie in (0, 1), got {eps}")
    n = max(n, 1)
    lg = math.log2(1 / eps)
    c = max(2, math.ceil(lg))
    inner = Fraction(n * math.log2(n) + lg)
    return max(3, math.ceil(c * n ** (2 * r + 3) * inner * inner / eps))


def bit_control(m: ExactMatrix, eps, rng: random.Random,
                max_retries: int = 32) -> ExactMatrix:
    """Reduce a rational matrix modulo a random odd prime below
    ``entry_bound(cols, rank, eps)``; redraws on denominator collisions."""
    if m.domain != la.RATIONAL:
        raise InputError("bit_control expects a rational matrix")
    bound = entry_bound(m.ncols, la.rank(m), eps)
    tried = []
    for _ in range(max_retries):
        q = la.random_prime(3, bound, rng)
        tried.append(q)
        try:
            return la.mod_reduce(m, q)
        except DenominatorCollision:
            continue
    raise BitControlError(f"{max_retries} primes below {bound} all divided a denominator",
                          tried)


def loop_vertex_elim(p: GraphMatroidPair, budget: int, vertices=None):
    """Delete loop vertices (all of them, or the given ones) together with
    their edges.  A loop adds nothing to the rank of a cover, so tau and the
    budget are unchanged."""
    x = p.matroid
    if vertices is None:
        vertices = [e for e in x.labels if x.is_loop(e)]
    else:
        vertices = list(vertices)
        for e in vertices:
            if not x.is_loop(e):
                raise PreconditionError(f"{e!r} is not a loop")
    if not vertices:
        return p, budget
    return p.delete_vertices(vertices), budget


def batch_reduce(inst: RvcInstance, cover, rb: RandomnessBudget,
                 rng: random.Random, prime_rng: random.Random | None = None):
    """Apply the vertex rule to every vertex outside ``cover``, ascending.

    Degenerate vertices are handled without the rule: a vertex whose
    neighbours are all loops has those loops deleted first, and a vertex
    left without neighbours is deleted outright (budget unchanged).

    Returns ``(instance, BatchReport)``.  On a randomized failure the
    instance is the constant YES instance and ``report.failed`` is set.  If
    the budget ends up negative the constant NO instance is returned.
    """
    prime_rng = prime_rng or rng
    g = inst.graph
    cover = frozenset(cover)
    if not cover <= g.vertices or any(u not in cover and v not in cover for u, v in g.edges):
        raise PreconditionError("cover is not a vertex cover of the graph")
    x = inst.matroid
    if x.rank != len(x):
        raise PreconditionError("every element must start out as a co-loop")
    if rb.mode == FAITHFUL and x.domain != la.RATIONAL:
        raise InputError("faithful mode runs over the rationals")

    pair, budget = inst.pair, inst.budget
    rep = BatchReport(cover_size=len(cover), s_size=g.n - len(cover),
                      rank_before=x.rank, budget_before=budget)
    image = None
    try:
        for s in sorted(g.vertices - cover):
            nbrs = pair.graph.neighbors(s)
            if nbrs and all(pair.matroid.is_loop(h) for h in nbrs):
                r0 = pair.matroid.rank
                before = pair.graph.vertices
                pair, budget = loop_vertex_elim(pair, budget)
                gone = tuple(sorted(before - pair.graph.vertices))
                rep.loops_removed += len(gone)
                rep.steps.append(StepTrace(s, "loops", r0, pair.matroid.rank, budget, budget,
                                           rb.remaining, rb.remaining, removed=gone))
                image = None
            if not pair.graph.neighbors(s):
                r0 = pair.matroid.rank
                pair = pair.delete_vertex(s)
                pair = GraphMatroidPair(pair.graph, pair.matroid.compact())
                rep.isolated += 1
                rep.steps.append(StepTrace(s, "isolated", r0, pair.matroid.rank, budget, budget,
                                           rb.remaining, rb.remaining, removed=(s,)))
                image = None
                continue
            pair, budget, trace = apply_vertex_rule(pair, s, budget, rng, rb)
            rep.applied += 1
            if rb.mode == FAITHFUL:
                image = _reduce_step(pair.matroid, rb.per_step, prime_rng, trace)
            rep.steps.append(trace)
        if rb.mode == FAITHFUL and image is None:
            r = pair.matroid.rank
            trace = StepTrace(-1, "reduce", r, r, budget, budget, rb.remaining, rb.remaining)
            image = _reduce_step(pair.matroid, rb.per_step, prime_rng, trace)
            rep.steps.append(trace)
    except (SchwartzZippelFailure, BitControlError, ContractLoopError) as exc:
        rep.failed = True
        rep.failure = f"{type(exc).__name__}: {exc}"
        rep.rank_after = pair.matroid.rank
        rep.budget_after = budget
        return constant_instance(True, x.domain), rep

    rep.rank_after = pair.matroid.rank
    rep.budget_after = budget
    if image is not None:
        pair = GraphMatroidPair(pair.graph, LinearMatroid(image, pair.matroid.labels))
    if budget < 0:
        rep.trivial_no = True
        return constant_instance(False, pair.matroid.domain), rep
    return RvcInstance(pair, budget), rep


def _reduce_step(x: LinearMatroid, allowance: Fraction, rng, trace: StepTrace):
    # failure of the reduction is at most eps / n = allowance / 2
    eps = allowance * max(len(x), 1) / 2
    eps = min(eps, Fraction(1, 2))
    image = bit_control(x.rep, eps, rng)
    trace.prime = image.domain.q
    trace.entry_bound = entry_bound(x.rep.ncols, x.rank, eps)
    trace.max_entry = image.max_abs_entry()
    return image
