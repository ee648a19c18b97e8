"""How much smaller the ground program gets with an aggregate.

"Each guest sits at exactly one table" as one #count constraint needs one
ground instance per guest. Without the aggregate it needs a pairwise
exclusion per guest and pair of tables, plus a support rule.

Run: python demos/05_seating_size.py
"""

from dlpa import programs as P
from dlpa.parser import parse_rule
from dlpa.pipeline import ground_text, load


def instances(encoding, rules, k, m):
    text = encoding + P.seating_instance(k, m, k)
    prog = load(text)
    g = ground_text(text)
    stmts = [str(s) for s in prog.statements()]
    return sum(len(g.instances_of(stmts.index(str(parse_rule(r))))) for r in rules)


print(f"{'guests':>6} {'tables':>6} {'aggregate':>10} {'elements':>9} {'rewritten':>10} {'k*m*(m-1)+k*m+k':>17}")
for k, m in [(8, 2), (12, 3), (16, 4), (20, 5)]:
    agg = instances(P.SEATING, [P.SEATING_AGGREGATE_CONSTRAINT], k, m)
    rw = instances(P.SEATING_REWRITTEN, P.SEATING_REWRITTEN_RULES, k, m)
    print(f"{k:>6} {m:>6} {agg:>10} {k * m:>9} {rw:>10} {k * m * (m - 1) + k * m + k:>17}")
