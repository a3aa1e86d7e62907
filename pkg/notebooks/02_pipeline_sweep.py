"""
Compressing random graphs
=========================

Run the full pipeline on a handful of G(n, p) graphs and compare the
brute-force answers before and after.
"""

from fractions import Fraction

from rankvc.graph import gnp
from rankvc.pipeline import PipelineConfig, compress, stream

print(f"{'seed':>4} {'n':>3} {'m':>3} {'k':>2} | {'n_out':>5} {'m_out':>5} "
      f"{'r_out':>5} {'l_out':>5} | same answer")
for seed in range(12):
    rng = stream(seed, "graph")
    n = rng.randint(6, 11)
    g = gnp(n, Fraction(2, 5), rng)
    k = 4
    # shortcut=False forces the algebraic reductions even when 2**k <= n
    cfg = PipelineConfig(seed=seed, shortcut=False, oracle_verify=True)
    out, rep = compress(g, k, cfg)
    print(f"{seed:>4} {g.n:>3} {g.m:>3} {k:>2} | {rep.n_out:>5} {rep.m_out:>5} "
          f"{rep.r_out:>5} {rep.l_out:>5} | {rep.oracle_equivalent}")
