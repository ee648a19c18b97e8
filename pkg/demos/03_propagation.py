"""Deterministic consequences, step by step.

Aggregates propagate in both directions: once an aggregate atom is known
false, the set elements that would make it true are fixed. On this program
no guess is needed at all.

Run: python demos/03_propagation.py
"""

from dlpa import programs as P
from dlpa.grounder import naive_ground
from dlpa.model import Atom, format_interpretation
from dlpa.parser import parse_program
from dlpa.solver import deterministic_consequences

print(P.PROPAGATION)
g = naive_ground(parse_program(P.PROPAGATION))
pi = deterministic_consequences(g)
for step, (atom, value, reason) in enumerate(pi.trail, 1):
    print(f"{step:2}. {str(atom):45} {'true' if value else 'false':5}  [{reason.kind}]")

true = {a for a, v in pi.values.items() if isinstance(a, Atom) and v}
print("\nresult:", format_interpretation(true))
