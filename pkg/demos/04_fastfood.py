"""Depot placement: branch and bound against exhaustive search.

Restaurants sit on a line; k of them become depots and every restaurant is
served by the closest depot. The weak constraint charges each distance.

Run: python demos/04_fastfood.py
"""

import itertools
import time

from dlpa import programs as P
from dlpa.pipeline import ground_text
from dlpa.solver import optimal_answer_sets

positions = [1, 2, 4, 8, 16, 32]
print("restaurants at", positions)
for k in range(len(positions) + 1):
    t = time.perf_counter()
    g = ground_text(P.FASTFOOD + P.fastfood_instance(positions, k=k))
    results = list(optimal_answer_sets(g))
    elapsed = time.perf_counter() - t
    brute = min(P.fastfood_cost(positions, c)
                for c in itertools.combinations(range(len(positions)), k))
    depots = sorted(int(a.args[1]) for a in results[0][0] if a.predicate == "depot")
    print(f"k={k}: cost {results[0][1].scalar:3} (exhaustive {brute:3}), "
          f"{len(results)} optimal placement(s), e.g. {depots}  [{elapsed:.2f}s]")
