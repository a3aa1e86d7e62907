"""
Keeping entries small with a random prime
=========================================

Over the rationals, repeated contractions grow the entries.  Reducing modulo
a random prime below an explicit bound keeps them short and, with high
probability, keeps every subset rank.
"""

import random
from fractions import Fraction
from itertools import combinations

from rankvc import exact_linalg as la
from rankvc.exact_linalg import ExactMatrix
from rankvc.graph import Graph
from rankvc.pipeline import PipelineConfig, compress
from rankvc.rank_reduction import bit_control, entry_bound


def subset_ranks(m):
    return [la.rank(m, c) for s in range(m.ncols + 1) for c in combinations(range(m.ncols), s)]


rng = random.Random(1)
m = ExactMatrix([[Fraction(rng.randint(-50, 50), rng.randint(1, 9)) for _ in range(6)]
                 for _ in range(3)])
print("largest entry before:", m.max_entry_bits(), "bits")
eps = Fraction(1, 20)
img = bit_control(m, eps, rng)
print("prime:", img.domain.q, " bound:", entry_bound(6, la.rank(m), eps))
print("subset ranks preserved:", subset_ranks(img) == subset_ranks(m))

# Lifting residues back to integers is not safe: parallel columns (1,3) and
# (2,6) reduce mod 5 to (1,3) and (2,1), which are independent over Q.
par = ExactMatrix.from_columns([(1, 3), (2, 6)], nrows=2)
red = la.mod_reduce(par, 5)
print("rank over Q:", la.rank(par), " mod 5:", la.rank(red),
      " integer lift:", la.rank(ExactMatrix(red.rows)))

# The faithful pipeline therefore ends over GF(q).
out, rep = compress(Graph.cycle(7), 3, PipelineConfig(mode="faithful", shortcut=False))
print("faithful output domain:", rep.output_domain, " entry bits:", rep.max_entry_bits)
for t in rep.steps:
    if t.prime is not None:
        print(f"  step {t.action:<6} prime {t.prime.bit_length():>3} bits, "
              f"largest residue {t.max_entry.bit_length():>3} bits")
