"""
End-to-end compression of a Vertex Cover Above MM instance ``(G, k)``.

    lift -> [shortcut] -> vertex cover Y -> batch_reduce over V \\ Y
         -> reduce_edges -> remove_isolated

Randomness comes from per-stage streams derived from the seed, so a run is
a pure function of ``(G, k, config)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import exact_linalg as la
from .errors import InputError
from .graph import Exact, Graph, MatchingApprox, Provided, maximum_matching, vertex_cover
from .graph_reduction import reduce_edges, remove_isolated
from .instance import (ORACLE_LIMIT, RvcInstance, constant_instance, decide_bruteforce,
                       lift_from_vc_above_mm, vertex_cover_number)
from .rank_reduction import FAITHFUL, FAST, RandomnessBudget, batch_reduce

__all__ = ["PipelineConfig", "CompressionReport", "compress", "verify_equivalence",
           "stream"]

FIELD_BITS = 62


def stream(seed: int, stage: str) -> random.Random:
    """Independent generator for one pipeline stage.

    String seeds are hashed with SHA-512 by `random.Random`, so the stream
    depends only on ``(seed, stage)``.
    """
    return random.Random(f"rankvc/{seed}/{stage}")


@dataclass(frozen=True)
class PipelineConfig:
    epsilon: Fraction = Fraction(1, 20)
    mode: str = FAST
    vc_strategy: object = Exact()
    seed: int = 0
    oracle_verify: bool = False
    shortcut: bool = True
    oracle_limit: int = ORACLE_LIMIT

    def __post_init__(self):
        object.__setattr__(self, "epsilon", Fraction(self.epsilon))
        if not 0 < self.epsilon < 1:
            raise InputError(f"epsilon must lie in (0, 1), got {self.epsilon}")
        if self.mode not in (FAST, FAITHFUL):
            raise InputError(f"unknown mode {self.mode!r}")
        if not isinstance(self.vc_strategy, (Exact, MatchingApprox, Provided)):
            raise InputError(f"unknown vertex cover strategy {self.vc_strategy!r}")
        if not 0 <= self.seed < 2 ** 64:
            raise InputError("seed must be an unsigned 64-bit integer")


@dataclass
class CompressionReport:
    n: int
    m: int
    mu: int
    k: int
    budget_in: int
    mode: str
    strategy: str
    epsilon: Fraction
    seed: int
    field_prime: int | None = None
    shortcut: bool = False
    shortcut_answer: bool | None = None
    cover_size: int | None = None
    s_size: int | None = None
    applied: int = 0
    isolated: int = 0
    loops_removed: int = 0
    rank_after_reduction: int | None = None
    budget_after_reduction: int | None = None
    edges_removed: int = 0
    steps: list = field(default_factory=list)
    constant_output: bool = False
    trivial_no: bool = False
    failed: bool = False
    failure: str = ""
    n_out: int = 0
    m_out: int = 0
    r_out: int = 0
    l_out: int = 0
    max_entry_bits: int = 0
    output_domain: str = ""
    oracle_equivalent: bool | None = None

    def to_text(self) -> str:
        """Line-oriented ``key=value`` block with a fixed key order."""
        def fmt(v):
            if v is None:
                return "none"
            if isinstance(v, bool):
                return "true" if v else "false"
            return str(v)

        keys = ["n", "m", "mu", "k", "budget_in", "mode", "strategy", "epsilon", "seed",
                "field_prime", "shortcut", "shortcut_answer", "cover_size", "s_size",
                "applied", "isolated", "loops_removed", "rank_after_reduction",
                "budget_after_reduction", "edges_removed", "constant_output", "trivial_no",
                "failed", "failure", "n_out", "m_out", "r_out", "l_out", "max_entry_bits",
                "output_domain", "oracle_equivalent"]
        lines = [f"{k}={fmt(getattr(self, k))}" for k in keys]
        lines.append(f"steps={len(self.steps)}")
        for i, t in enumerate(self.steps):
            p = f"step.{i}."
            lines.append(f"{p}action={t.action}")
            lines.append(f"{p}vertex={'none' if t.vertex == -1 else t.vertex}")
            lines.append(f"{p}rank={t.rank_before}->{t.rank_after}")
            lines.append(f"{p}budget={t.budget_before}->{t.budget_after}")
            lines.append(f"{p}eps={t.eps_before}->{t.eps_after}")
            if t.removed:
                lines.append(f"{p}removed={','.join(map(str, t.removed))}")
            if t.coefficients:
                lines.append(f"{p}coefficients={','.join(map(str, t.coefficients))}")
            if t.prime is not None:
                lines.append(f"{p}prime={t.prime}")
                lines.append(f"{p}entry_bound={t.entry_bound}")
                lines.append(f"{p}max_entry={t.max_entry}")
        return "\n".join(lines) + "\n"


def _strategy_name(s) -> str:
    if isinstance(s, Exact):
        return "exact" if s.bound is None else f"exact({s.bound})"
    if isinstance(s, MatchingApprox):
        return "matching"
    return "provided"


def compress(g: Graph, k: int, cfg: PipelineConfig = PipelineConfig()):
    """Compress ``(g, k)`` into an equivalent Rank Vertex Cover instance.

    Returns ``(instance, report)``.  Equivalence holds except with
    probability at most ``cfg.epsilon``; a detected randomized failure yields
    the constant YES instance with ``report.failed`` set.
    """
    if isinstance(k, bool) or not isinstance(k, int) or k < 0:
        raise InputError("k must be a non-negative int")
    n = g.n
    mu = len(maximum_matching(g))
    if cfg.mode == FAST:
        domain = la.PrimeField(la.random_prime(2 ** (FIELD_BITS - 1), 2 ** FIELD_BITS,
                                               stream(cfg.seed, "field")))
    else:
        domain = la.RATIONAL
    rep = CompressionReport(n=n, m=g.m, mu=mu, k=k, budget_in=mu + k, mode=cfg.mode,
                            strategy=_strategy_name(cfg.vc_strategy), epsilon=cfg.epsilon,
                            seed=cfg.seed,
                            field_prime=getattr(domain, "q", None))
    inst = lift_from_vc_above_mm(g, k, domain)

    if not g.edges:
        out = constant_instance(True, domain)
        rep.constant_output = True
    elif cfg.shortcut and (n <= 1 or 2 ** k <= n):
        # k <= log2 n: decide exactly instead of compressing
        rep.shortcut = True
        rep.shortcut_answer = vertex_cover(g, Exact(mu + k)) is not None
        out = constant_instance(rep.shortcut_answer, domain)
        rep.constant_output = True
    else:
        out = _reduce(g, inst, cfg, rep)

    rep.n_out, rep.m_out = out.graph.n, out.graph.m
    rep.r_out, rep.l_out = out.matroid.rank, out.budget
    rep.max_entry_bits = out.matroid.rep.max_entry_bits()
    rep.output_domain = str(out.matroid.domain)
    if cfg.oracle_verify and n <= cfg.oracle_limit and out.graph.n <= cfg.oracle_limit:
        rep.oracle_equivalent = verify_equivalence(g, k, out, cfg.oracle_limit)
    return out, rep


def _reduce(g: Graph, inst: RvcInstance, cfg: PipelineConfig, rep: CompressionReport):
    cover = vertex_cover(g, cfg.vc_strategy)
    if cover is None:
        rep.failed = True
        rep.failure = "vertex cover strategy exceeded its bound"
        rep.constant_output = True
        return constant_instance(True, inst.matroid.domain)
    rep.cover_size, rep.s_size = len(cover), g.n - len(cover)
    rb = RandomnessBudget.split(cfg.epsilon, g.n, cfg.mode)
    out, batch = batch_reduce(inst, cover, rb, stream(cfg.seed, "coefficients"),
                              stream(cfg.seed, "primes"))
    rep.steps = batch.steps
    rep.applied, rep.isolated, rep.loops_removed = batch.applied, batch.isolated, batch.loops_removed
    rep.rank_after_reduction = batch.rank_after
    rep.budget_after_reduction = batch.budget_after
    if batch.failed or batch.trivial_no:
        rep.failed, rep.failure, rep.trivial_no = batch.failed, batch.failure, batch.trivial_no
        rep.constant_output = True
        return out
    pair = reduce_edges(out.pair)
    rep.edges_removed = out.graph.m - pair.graph.m
    pair, budget = remove_isolated(pair, out.budget)
    return RvcInstance(pair, budget)


def verify_equivalence(g: Graph, k: int, out: RvcInstance,
                       limit: int = ORACLE_LIMIT) -> bool:
    """Brute force: (beta(g) <= mu(g) + k) == decide(out)."""
    yes_in = vertex_cover_number(g, limit) <= len(maximum_matching(g)) + k
    return yes_in == decide_bruteforce(out, limit)
