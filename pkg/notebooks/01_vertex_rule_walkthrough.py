"""
One vertex rule, step by step
=============================

Lift a small graph to a Rank Vertex Cover instance, apply the vertex rule at
a single vertex and watch the rank and tau move.
"""

import random
from fractions import Fraction

from rankvc.exact_linalg import PrimeField
from rankvc.graph import Graph
from rankvc.instance import lift_from_vc_above_mm, tau_bruteforce, verify_general_position
from rankvc.rank_reduction import RandomnessBudget, apply_vertex_rule

# A 4-cycle: matching number 2, vertex cover number 2.
g = Graph.cycle(4)
field = PrimeField(2 ** 61 - 1)
inst = lift_from_vc_above_mm(g, k=0, domain=field)
print("budget:", inst.budget, " rank:", inst.matroid.rank, " tau:", tau_bruteforce(inst.pair))

# Vertex 1 is a co-loop of the identity matroid.  Move it to a random point of
# the flat spanned by its neighbours 2 and 4, then contract it.
rb = RandomnessBudget.split(Fraction(1, 20), g.n)
pair, budget, trace = apply_vertex_rule(inst.pair, 1, inst.budget, random.Random(0), rb)
print("coefficients:", trace.coefficients)
print("rank", trace.rank_before, "->", trace.rank_after, " budget", budget)
print("tau after:", tau_bruteforce(pair))

# The drawn vector is in general position on that flat: no independent set
# that fails to span the flat becomes dependent when the vector joins it.
moved = inst.matroid.move_column(1, trace.vector)
print("general position:", verify_general_position(moved, 1, [2, 4]))
