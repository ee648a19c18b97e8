"""Answer sets, reducts and why a candidate fails.

Run: python demos/01_answer_sets.py
"""

from dlpa import programs as P
from dlpa.model import format_interpretation
from dlpa.parser import parse_atom, parse_program
from dlpa.grounder import naive_ground
from dlpa.solver import answer_set_witness, enumerate_answer_sets, reduct

# A disjunction plus a constraint: the solver picks the minimal choices.
g = naive_ground(parse_program(P.P2))
print("program:\n" + P.P2)
for a in enumerate_answer_sets(g):
    print("answer set", format_interpretation(a))

# With aggregates in the body, the reduct removes rules whose negative or
# aggregate literals fail and strips those that hold.
print("\nprogram:\n" + P.P4)
g = naive_ground(parse_program(P.P4))
for text in (["b", "d(1)"], ["a", "d(1)"], ["c", "d(1)"]):
    x = {parse_atom(t) for t in text}
    print("candidate", format_interpretation(x))
    print("  reduct:", " ".join(sorted(str(r) for r in reduct(g, x))))
    w = answer_set_witness(g, x)
    if w is None:
        print("  -> answer set")
    elif w[0] == "unsatisfied":
        print("  -> not a model, violates", w[1])
    else:
        print("  -> not minimal, smaller model", format_interpretation(w[1]))

print("\nall answer sets:", [format_interpretation(a) for a in enumerate_answer_sets(g)])
