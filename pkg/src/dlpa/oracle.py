"""Brute-force reference semantics for small ground programs.

Every interpretation over the atoms of a ground program is evaluated at
once with numpy bit arithmetic.  Aggregate values are recomputed here from
the set definitions, so the oracle shares no evaluation code with the
solver.
"""

from __future__ import annotations

import random

import numpy as np

import dataclasses

from .grounder import GroundProgram
from .model import INF, AggregateAtom, Atom, GroundSet, Literal, SetElement, is_natural

MAX_ATOMS = 16


class OracleTooLarge(ValueError):
    pass


def _atoms(g: GroundProgram):
    """Atoms left open; facts are true in every model and every submodel."""
    atoms = sorted(set(g.atoms()) - set(g.facts), key=Atom.sort_key)
    if len(atoms) > MAX_ATOMS:
        raise OracleTooLarge(f"{len(atoms)} atoms exceed the oracle limit of {MAX_ATOMS}")
    return atoms


class _Table:
    """Truth arrays over all ``2**n`` interpretations of the open atoms."""

    def __init__(self, atoms, facts=()):
        self.atoms = atoms
        self.facts = frozenset(facts)
        self.index = {a: i for i, a in enumerate(atoms)}
        self.masks = np.arange(1 << len(atoms), dtype=np.int64)
        self.bits = [((self.masks >> i) & 1).astype(bool) for i in range(len(atoms))]
        self.cache = {}

    def atom(self, a) -> np.ndarray:
        if a in self.facts:
            return np.ones(len(self.masks), dtype=bool)
        return self.bits[self.index[a]]

    def literal(self, lit) -> np.ndarray:
        arr = self.aggregate(lit.atom) if lit.is_aggregate else self.atom(lit.atom)
        return arr if lit.positive else ~arr

    def conj(self, lits) -> np.ndarray:
        out = np.ones(len(self.masks), dtype=bool)
        for l in lits:
            out &= self.literal(l)
        return out

    def aggregate(self, agg) -> np.ndarray:
        if agg in self.cache:
            return self.cache[agg]
        size = len(self.masks)
        present = {}
        for e in agg.set.elements:
            present[e.terms] = present.get(e.terms, np.zeros(size, dtype=bool)) | self.conj(e.conj)
        fn = agg.function
        bottom = np.zeros(size, dtype=bool)
        if fn != "count":
            for terms, p in present.items():
                if not is_natural(terms[0]):
                    bottom |= p
        nat = [(terms[0], p) for terms, p in present.items() if is_natural(terms[0])]
        if fn == "count":
            value = np.zeros(size, dtype=object)
            for p in present.values():
                value = value + p.astype(np.int64)
        elif fn == "sum":
            value = np.zeros(size, dtype=object)
            for v, p in nat:
                value = value + np.where(p, v, 0).astype(object)
        elif fn == "times":
            value = np.ones(size, dtype=object)
            for v, p in nat:
                value = value * np.where(p, v, 1).astype(object)
        else:
            any_present = np.zeros(size, dtype=bool)
            for p in present.values():
                any_present |= p
            bottom |= ~any_present
            value = np.full(size, None, dtype=object)
            for v, p in nat:
                for k in np.nonzero(p)[0]:
                    cur = value[k]
                    if cur is None or (v < cur if fn == "min" else v > cur):
                        value[k] = v
        lo, hi = agg.lower, agg.upper
        ok = np.array([x is not None and x >= lo and (hi is INF or x <= hi) for x in value],
                      dtype=bool)
        result = ok & ~bottom
        self.cache[agg] = result
        return result


def _rules(g: GroundProgram):
    return list(g.rules)


def unfold_aux(g: GroundProgram) -> GroundProgram:
    """Replace auxiliary set atoms by the bodies of their single defining rules.

    Auxiliary atoms are defined by one non-disjunctive rule each and occur
    only inside aggregate sets, so unfolding them keeps the answer sets
    (restricted to ordinary atoms) while shrinking the search space.
    """
    defs = {}
    for r in g.rules:
        if len(r.head) == 1 and r.head[0].is_aux and r.head[0] not in g.facts:
            defs.setdefault(r.head[0], []).append(r.body)
    if not defs and not any(a.is_aux for a in g.facts):
        return g

    def unfold_element(e):
        out = [[]]
        for l in e.conj:
            if not (l.positive and l.atom.is_aux):
                out = [c + [l] for c in out]
            elif l.atom in g.facts:
                continue
            else:
                bodies = defs.get(l.atom, [])
                out = [c + list(b) for c in out for b in bodies]
        return [SetElement(e.terms, tuple(c)) for c in out]

    def unfold_literal(l):
        if not l.is_aggregate:
            return l
        a = l.atom
        elements = [x for e in a.set.elements for x in unfold_element(e)]
        agg = AggregateAtom(a.function, GroundSet(tuple(elements)), a.lower, a.lower_op,
                            a.upper, a.upper_op)
        return Literal(agg, l.positive)

    def unfold(st):
        return dataclasses.replace(st, body=tuple(unfold_literal(l) for l in st.body))

    rules = tuple(unfold(r) for r in g.rules if not (len(r.head) == 1 and r.head[0] in defs))
    weak = tuple(unfold(w) for w in g.weak_constraints)
    used = set()
    for st in rules + weak:
        for l in st.body:
            used |= {l.atom} if not l.is_aggregate else l.atom.set.atoms()
    facts = frozenset(a for a in g.facts if not a.is_aux or a in used)
    return dataclasses.replace(g, rules=rules, weak_constraints=weak, facts=facts,
                               origins=())


def oracle_answer_sets(g: GroundProgram) -> list:
    """All answer sets, sorted by their printed form."""
    atoms = _atoms(g)
    t = _Table(atoms, g.facts)
    rules = _rules(g)
    model = np.ones(len(t.masks), dtype=bool)
    for r in rules:
        head = np.zeros(len(t.masks), dtype=bool)
        for a in r.head:
            head |= t.atom(a)
        model &= ~t.conj(r.body) | head
    found = []
    for x in t.masks[model]:
        x = int(x)
        # reduct as (positive body mask, head mask) pairs
        red = []
        for r in rules:
            keep = True
            body = 0
            for l in r.body:
                if l.is_aggregate or not l.positive:
                    if not bool(t.literal(l)[x]):
                        keep = False
                        break
                elif l.atom not in t.facts:
                    body |= 1 << t.index[l.atom]
            if keep and not any(a in t.facts for a in r.head):
                head = 0
                for a in r.head:
                    head |= 1 << t.index[a]
                red.append((body, head))
        subs = t.masks[((t.masks & ~x) == 0) & (t.masks != x)]
        sat = np.ones(len(subs), dtype=bool)
        for body, head in red:
            sat &= ((subs & body) != body) | ((subs & head) != 0)
        if not sat.any():
            found.append(frozenset(atoms[i] for i in range(len(atoms)) if x >> i & 1) | t.facts)
    return sorted(found, key=lambda s: sorted(a.sort_key() for a in s))


def oracle_cost(g: GroundProgram, a) -> int:
    weak = g.weak_constraints
    if not weak:
        return 0
    lmax = max(w.level for w in weak)
    wmax = max(w.weight for w in weak)
    factor = [0, 1]
    for _ in range(2, lmax + 1):
        factor.append(factor[-1] * len(weak) * wmax + 1)
    a = frozenset(a)
    atoms = _atoms(g)
    t = _Table(atoms, g.facts)
    x = sum(1 << t.index[b] for b in a if b in t.index)
    total = 0
    for w in weak:
        if bool(t.conj(w.body)[x]):
            total += factor[w.level] * w.weight
    return total


def oracle_optimal(g: GroundProgram) -> list:
    """Pairs ``(answer set, H)`` for every answer set of minimal H."""
    sets = oracle_answer_sets(g)
    costs = [oracle_cost(g, s) for s in sets]
    best = min(costs, default=None)
    return [(s, c) for s, c in zip(sets, costs) if c == best]


# ---------------------------------------------------------------------------
# random programs

_FUNCTIONS = ("count", "sum", "times", "min", "max")


def _random_aggregate(rng: random.Random, lower_atoms) -> str:
    fn = rng.choice(_FUNCTIONS)
    elements = []
    for _ in range(rng.randint(0, 4)):
        value = rng.randint(0, 3)
        if fn != "count" and rng.random() < 0.05:
            value = "z"
        conj = []
        for _ in range(rng.randint(1, 2)):
            a = rng.choice(lower_atoms)
            conj.append(("not " if rng.random() < 0.25 else "") + a)
        elements.append(f"<{value}:{', '.join(conj)}>")
    agg = f"#{fn}{{{', '.join(elements)}}}"
    k = rng.randint(0, 4)
    form = rng.randrange(5)
    if form == 0:
        return f"{k} <= {agg}"
    if form == 1:
        return f"{agg} <= {k}"
    if form == 2:
        return f"{k} < {agg} < {k + rng.randint(1, 3)}"
    if form == 3:
        return f"{agg} = {k}"
    return f"{agg} > {k}"


def random_ground_program(rng: random.Random, max_atoms: int = 12, max_rules: int = 15,
                          max_aggregates: int = 3, max_weak: int = 4) -> str:
    """Program text over propositional atoms with aggregates in a lower stratum."""
    n = rng.randint(2, max_atoms)
    n_low = rng.randint(1, max(1, n // 2))
    lower = [f"l{i}" for i in range(n_low)]
    upper = [f"u{i}" for i in range(n - n_low)] or ["u0"]
    everything = lower + upper
    lines = []
    n_rules = rng.randint(1, max_rules)
    budget = rng.randint(0, max_aggregates)

    def lits(pool, k):
        out = []
        for _ in range(k):
            a = rng.choice(pool)
            out.append(("not " if rng.random() < 0.3 else "") + a)
        return out

    for _ in range(n_rules):
        upper_rule = rng.random() < 0.6
        pool = everything if upper_rule else lower
        head_pool = upper if upper_rule else lower
        kind = rng.random()
        head = [] if kind < 0.15 else sorted(set(rng.sample(head_pool, min(len(head_pool),
                                                                           rng.randint(1, 3)))))
        body = lits(pool, rng.randint(0 if head else 1, 3))
        if upper_rule and budget and rng.random() < 0.5:
            budget -= 1
            agg = _random_aggregate(rng, lower)
            body.append(("not " if rng.random() < 0.2 else "") + agg)
        if not head and not body:
            continue
        text = " v ".join(head)
        if body:
            text += (" " if text else "") + ":- " + ", ".join(body)
        lines.append(text + ".")
    for _ in range(rng.randint(0, max_weak)):
        body = lits(everything, rng.randint(1, 2))
        lines.append(f":~ {', '.join(body)}. [{rng.randint(1, 3)}:{rng.randint(1, 2)}]")
    return "\n".join(lines) + "\n"


__all__ = ["MAX_ATOMS", "OracleTooLarge", "unfold_aux", "oracle_answer_sets", "oracle_cost", "oracle_optimal",
           "random_ground_program"]
