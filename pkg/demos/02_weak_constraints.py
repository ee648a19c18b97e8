"""Weak constraints: every answer set gets a cost, higher levels dominate.

Run: python demos/02_weak_constraints.py
"""

from dlpa import programs as P
from dlpa.grounder import ground
from dlpa.model import format_interpretation
from dlpa.parser import parse_program
from dlpa.solver import cost_of, enumerate_answer_sets, level_factors, optimal_answer_sets

g = ground(parse_program(P.P5))
print(P.P5)
f = level_factors(g.weak_constraints)
print("level factors:", f)

for a in enumerate_answer_sets(g):
    c = cost_of(g, a)
    levels = ", ".join(f"level {lv}: {w}" for lv, w in c.per_level)
    print(f"{format_interpretation(a):12} H={c.scalar:3}   ({levels})")

for a, c in optimal_answer_sets(g):
    print("optimal:", format_interpretation(a), "with H =", c.scalar)
