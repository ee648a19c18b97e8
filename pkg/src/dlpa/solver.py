"""Answer-set search over ground programs.

The search assigns truth values to standard atoms and to aggregate atoms
alike.  Each assignment is propagated to a fixpoint (rule propagation,
support reasoning, and forward/backward reasoning on aggregate bounds);
total assignments are then checked for stability against the reduct.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

import networkx as nx

from .aggregates import BOTTOM, eval_aggregate_atom, eval_literal
from .grounder import GroundProgram
from .model import INF, Atom, Literal, Rule, constant_key, is_natural


# ---------------------------------------------------------------------------
# declarative checks

def _ground_rules(g: GroundProgram):
    for a in sorted(g.facts, key=Atom.sort_key):
        yield Rule((a,))
    yield from g.rules


def reduct(g: GroundProgram, x) -> list:
    """Positive program left after deleting rules with a false negative or aggregate literal."""
    x = frozenset(x)
    out = []
    for r in _ground_rules(g):
        keep = True
        body = []
        for l in r.body:
            if l.is_aggregate or not l.positive:
                if not eval_literal(l, x):
                    keep = False
                    break
            else:
                body.append(l)
        if keep:
            out.append(Rule(r.head, tuple(body), line=r.line))
    return out


def is_model(rules, x) -> bool:
    x = frozenset(x)
    for r in rules:
        if all(eval_literal(l, x) for l in r.body) and not any(a in x for a in r.head):
            return False
    return True


def unsatisfied_rule(rules, x):
    x = frozenset(x)
    for r in rules:
        if all(eval_literal(l, x) for l in r.body) and not any(a in x for a in r.head):
            return r
    return None


def _restricted(positive_rules, x):
    """Rules able to fire inside ``x``, with heads cut down to ``x``."""
    out = []
    for r in positive_rules:
        if all(l.atom in x for l in r.body):
            out.append((tuple(a for a in r.head if a in x), tuple(l.atom for l in r.body)))
    return out


def is_head_cycle_free(rules) -> bool:
    """No positive dependency cycle joins two atoms of one head.

    Accepts ``Rule`` objects or ``(head, body_atoms)`` pairs.
    """
    rules = [(r.head, tuple(l.atom for l in r.body if l.positive and not l.is_aggregate))
             if isinstance(r, Rule) else r for r in rules]
    g = nx.DiGraph()
    for head, body in rules:
        g.add_nodes_from(head)
        g.add_edges_from((b, h) for h in head for b in body)
    comp = {}
    for i, c in enumerate(nx.strongly_connected_components(g)):
        for a in c:
            comp[a] = i
    for head, _ in rules:
        comps = [comp[h] for h in head]
        if len(set(comps)) < len(comps):
            return False
    return True


def _least_model_shifted(rules, x):
    """Least model of the definite program keeping rules whose head meets ``x`` once."""
    definite = [(head[0], body) for head, body in rules if len(head) == 1]
    model = set()
    changed = True
    while changed:
        changed = False
        for h, body in definite:
            if h not in model and all(b in model for b in body):
                model.add(h)
                changed = True
    return model


def _find_submodel(rules, x):
    """A model of ``rules`` strictly inside ``x``, or ``None`` (clause search)."""
    atoms = sorted(x, key=Atom.sort_key)
    idx = {a: i for i, a in enumerate(atoms)}
    clauses = []
    for head, body in rules:
        clauses.append([(idx[b], False) for b in body] + [(idx[h], True) for h in head])
    clauses.append([(i, False) for i in range(len(atoms))])
    val = [None] * len(atoms)
    occ = [[] for _ in atoms]
    for ci, c in enumerate(clauses):
        for v, _ in c:
            occ[v].append(ci)

    def propagate(trail, start):
        q = start
        while q < len(trail):
            v = trail[q]
            q += 1
            for ci in occ[v]:
                unassigned, sat = None, False
                count = 0
                for w, pol in clauses[ci]:
                    if val[w] is None:
                        count += 1
                        unassigned = (w, pol)
                    elif val[w] == pol:
                        sat = True
                        break
                if sat:
                    continue
                if count == 0:
                    return False
                if count == 1:
                    w, pol = unassigned
                    val[w] = pol
                    trail.append(w)
        return True

    trail = []
    # initial units
    for c in clauses:
        if len(c) == 1:
            w, pol = c[0]
            if val[w] is None:
                val[w] = pol
                trail.append(w)
            elif val[w] != pol:
                return None
    if not clauses[-1]:
        return None
    ok = propagate(trail, 0) and all(_clause_ok(c, val) for c in clauses)
    stack = []
    while True:
        if ok:
            free = next((i for i in range(len(atoms)) if val[i] is None), None)
            if free is None:
                return {atoms[i] for i in range(len(atoms)) if val[i]}
            stack.append((free, len(trail), False))
            val[free] = False
            trail.append(free)
            ok = propagate(trail, len(trail) - 1)
            continue
        while stack and stack[-1][2]:
            _, tl, _ = stack.pop()
            for w in trail[tl:]:
                val[w] = None
            del trail[tl:]
        if not stack:
            return None
        v, tl, _ = stack.pop()
        for w in trail[tl:]:
            val[w] = None
        del trail[tl:]
        stack.append((v, tl, True))
        val[v] = True
        trail.append(v)
        ok = propagate(trail, len(trail) - 1)


def _clause_ok(c, val):
    return any(val[w] is None or val[w] == pol for w, pol in c)


def minimality_witness(positive_rules, x, method: str = "auto"):
    """A proper subset of ``x`` that is a model of the positive rules, if any."""
    x = frozenset(x)
    rules = _restricted(positive_rules, x)
    if method == "auto":
        method = "hcf" if is_head_cycle_free(rules) else "search"
    if method == "hcf":
        least = _least_model_shifted(rules, x)
        if least == set(x):
            return None
        # the least model of the shifted program is a model of the reduct
        # only in the head-cycle-free case; report a verified witness
        witness = _find_submodel(rules, x)
        return witness if witness is not None else set(least)
    return _find_submodel(rules, x)


def answer_set_witness(g: GroundProgram, x):
    """``None`` for an answer set, else ``("unsatisfied", rule)`` or ``("not-minimal", subset)``."""
    x = frozenset(x)
    rules = list(_ground_rules(g))
    bad = unsatisfied_rule(rules, x)
    if bad is not None:
        return ("unsatisfied", bad)
    sub = minimality_witness(reduct(g, x), x)
    if sub is not None:
        return ("not-minimal", frozenset(sub))
    return None


def is_answer_set(g: GroundProgram, x, method: str = "auto") -> bool:
    x = frozenset(x)
    rules = list(_ground_rules(g))
    if not is_model(rules, x):
        return False
    red = reduct(g, x)
    if method == "auto":
        return minimality_witness(red, x) is None
    restricted = _restricted(red, x)
    if method == "hcf":
        return _least_model_shifted(restricted, x) == set(x)
    return _find_submodel(restricted, x) is None


# ---------------------------------------------------------------------------
# costs

@dataclass(frozen=True)
class CostVector:
    per_level: tuple      # ((level, weight), ...) ascending by level
    scalar: int

    def weight(self, level) -> int:
        return dict(self.per_level).get(level, 0)


def level_factors(weak) -> dict:
    """``f(1) = 1`` and ``f(n) = f(n-1) * |WC| * wmax + 1``."""
    if not weak:
        return {}
    lmax = max(w.level for w in weak)
    wmax = max(w.weight for w in weak)
    f = {1: 1}
    for n in range(2, lmax + 1):
        f[n] = f[n - 1] * len(weak) * wmax + 1
    return f


def cost_of(g: GroundProgram, a) -> CostVector:
    a = frozenset(a)
    weak = g.weak_constraints
    levels = sorted({w.level for w in weak})
    per = {lv: 0 for lv in levels}
    for w in weak:
        if all(eval_literal(l, a) for l in w.body):
            per[w.level] += w.weight
    f = level_factors(weak)
    scalar = sum(f[lv] * per[lv] for lv in levels)
    return CostVector(tuple(sorted(per.items())), scalar)


# ---------------------------------------------------------------------------
# propagation state

@dataclass(frozen=True)
class Reason:
    kind: str          # decision, rule, contraposition, support, single-support,
    source: object = None   # aggregate-forward, aggregate-backward


class Conflict(Exception):
    def __init__(self, atom, reasons):
        self.atom = atom
        self.reasons = reasons
        super().__init__(f"conflict on {atom}: {reasons}")


@dataclass
class PartialInterpretation:
    values: dict = field(default_factory=dict)     # atom -> True/False (absent = undefined)
    trail: list = field(default_factory=list)      # (atom, value, Reason)

    def true_atoms(self) -> frozenset:
        return frozenset(a for a, v in self.values.items() if v and isinstance(a, Atom))

    def value(self, atom):
        return self.values.get(atom)


@dataclass
class AggregateWatch:
    lower: object          # smallest reachable value (None if only undefined is reachable)
    upper: object          # largest reachable value, may be INF-free int
    guards: tuple
    may_be_undefined: bool
    min_true: object = None
    min_undef: object = None
    max_true: object = None
    max_undef: object = None


class _Agg:
    __slots__ = ("atom", "function", "lo", "hi", "tuples")

    def __init__(self, atom, function, lo, hi, tuples):
        self.atom, self.function, self.lo, self.hi, self.tuples = atom, function, lo, hi, tuples


def _in_guards(v, lo, hi):
    return is_natural(v) and v >= lo and (hi is INF or v <= hi)


def _reachable(function, true_vals, undef_vals):
    """Over-approximate the values a set can still take.

    Returns ``(values, interval, bottom)``: an exact set of reachable values
    (count, min, max) or an interval (sum, times), and whether the
    undefined result remains possible.  ``values`` is ``None`` when an
    interval is used.
    """
    if function == "count":
        n = len(true_vals)
        return set(range(n, n + len(undef_vals) + 1)), None, False
    if any(not is_natural(v) for v in true_vals):
        return set(), None, True
    bottom = any(not is_natural(v) for v in undef_vals)
    nat_u = [v for v in undef_vals if is_natural(v)]
    if function == "sum":
        s = sum(true_vals)
        return None, (s, s + sum(nat_u)), bottom
    if function == "times":
        p = 1
        for v in true_vals:
            p *= v
        if p == 0:
            return None, (0, 0), bottom
        lo = 0 if 0 in nat_u else p
        hi = p
        for v in nat_u:
            if v >= 1:
                hi *= v
        return None, (lo, hi), bottom
    if function == "min":
        if true_vals:
            m = min(true_vals)
            return {m} | {u for u in nat_u if u < m}, None, bottom
        return set(nat_u), None, True
    if function == "max":
        if true_vals:
            m = max(true_vals)
            return {m} | {u for u in nat_u if u > m}, None, bottom
        return set(nat_u), None, True
    raise ValueError(function)


def _possibilities(function, lo, hi, true_vals, undef_vals):
    """``(can_be_true, can_be_false)`` for the aggregate atom."""
    values, interval, bottom = _reachable(function, true_vals, undef_vals)
    if values is not None:
        can_true = any(_in_guards(v, lo, hi) for v in values)
        can_false = bottom or any(not _in_guards(v, lo, hi) for v in values)
        return can_true, can_false
    a, b = interval
    if hi is not INF and lo > hi:
        return False, True
    top = b if hi is INF else min(b, hi)
    can_true = max(a, lo) <= top
    can_false = bottom or a < lo or (hi is not INF and b > hi)
    return can_true, can_false


class Solver:
    """Search state for one ground program."""

    def __init__(self, g: GroundProgram):
        self.g = g
        atoms = sorted(g.atoms(), key=Atom.sort_key)
        self.atoms = atoms
        self.n = len(atoms)
        index = {a: i for i, a in enumerate(atoms)}
        self.aggs = []
        agg_index = {}
        for agg in g.aggregate_atoms():
            agg_index[agg] = self.n + len(self.aggs)
            tuples = {}
            for e in agg.set.elements:
                tuples.setdefault(e.terms, []).append(
                    tuple((index[l.atom], l.positive) for l in e.conj))
            tl = [(terms[0], elems) for terms, elems in tuples.items()]
            tl.sort(key=lambda t: constant_key(t[0]), reverse=True)
            self.aggs.append(_Agg(agg, agg.function, agg.lower, agg.upper, tl))
        self.index = index
        self.agg_index = agg_index
        nvars = self.n + len(self.aggs)
        self.val = [None] * nvars
        self.reason = [None] * nvars
        self.trail = []

        def lit(l):
            v = agg_index[l.atom] if l.is_aggregate else index[l.atom]
            return (v, l.positive)

        self.rules = []
        self.rule_src = []
        for r in _ground_rules(g):
            self.rules.append((tuple(index[a] for a in r.head), tuple(lit(l) for l in r.body)))
            self.rule_src.append(r)
        self.weak = [(tuple(lit(l) for l in w.body), w.weight, w.level) for w in g.weak_constraints]
        self.factors = level_factors(g.weak_constraints)

        self.occ = [[] for _ in range(nvars)]           # rules mentioning the variable
        self.head_of = [[] for _ in range(self.n)]      # rules with the atom in the head
        for ri, (head, body) in enumerate(self.rules):
            for h in head:
                self.occ[h].append(ri)
                self.head_of[h].append(ri)
            for v, _ in body:
                self.occ[v].append(ri)
        for lst in self.occ:
            lst[:] = sorted(set(lst))
        self.agg_occ = [[] for _ in range(nvars)]
        for j, a in enumerate(self.aggs):
            seen = set()
            for _, elems in a.tuples:
                for conj in elems:
                    for v, _ in conj:
                        if v not in seen:
                            seen.add(v)
                            self.agg_occ[v].append(j)
        counts = [0] * self.n
        for _, body in self.rules:
            for v, _ in body:
                if v < self.n:
                    counts[v] += 1
        for a in self.aggs:
            for _, elems in a.tuples:
                for conj in elems:
                    for v, _ in conj:
                        counts[v] += 1
        self.order = sorted(range(self.n), key=lambda v: (-counts[v], v))
        self.queue = deque()
        self.queued = set()
        self.stats = {"decisions": 0, "conflicts": 0, "models_checked": 0}

    # -- assignment ----------------------------------------------------------
    def name(self, v):
        return self.atoms[v] if v < self.n else self.aggs[v - self.n].atom

    def assign(self, v, value, reason):
        cur = self.val[v]
        if cur is not None:
            if cur != value:
                raise Conflict(self.name(v), (self.reason[v], reason))
            return
        self.val[v] = value
        self.reason[v] = reason
        self.trail.append(v)
        self._touch(v)

    def _touch(self, v):
        push = self._push
        for ri in self.occ[v]:
            push(("r", ri))
            for h in self.rules[ri][0]:
                push(("s", h))
        for j in self.agg_occ[v]:
            push(("a", j))
        if v >= self.n:
            push(("a", v - self.n))
        else:
            push(("s", v))

    def _push(self, item):
        if item not in self.queued:
            self.queued.add(item)
            self.queue.append(item)

    def undo(self, length):
        while len(self.trail) > length:
            v = self.trail.pop()
            self.val[v] = None
            self.reason[v] = None

    def lit_value(self, v, pol):
        x = self.val[v]
        return None if x is None else (x == pol)

    # -- propagation --------------------------------------------------------
    def propagate(self) -> bool:
        try:
            while self.queue:
                item = self.queue.popleft()
                self.queued.discard(item)
                kind, k = item
                if kind == "r":
                    self._rule(k)
                elif kind == "s":
                    self._support(k)
                else:
                    self._aggregate(k)
            return True
        except Conflict:
            self.queue.clear()
            self.queued.clear()
            self.stats["conflicts"] += 1
            return False

    def seed(self):
        for ri in range(len(self.rules)):
            self._push(("r", ri))
        for j in range(len(self.aggs)):
            self._push(("a", j))
        for v in range(self.n):
            self._push(("s", v))

    def _rule(self, ri):
        head, body = self.rules[ri]
        undef_body = None
        n_undef = 0
        for v, pol in body:
            x = self.lit_value(v, pol)
            if x is False:
                return
            if x is None:
                n_undef += 1
                undef_body = (v, pol)
        undef_head = None
        n_head = 0
        for h in head:
            x = self.val[h]
            if x is True:
                return
            if x is None:
                n_head += 1
                undef_head = h
        if n_undef == 0:
            if n_head == 0:
                raise Conflict(self.rule_src[ri], ("rule",))
            if n_head == 1:
                self.assign(undef_head, True, Reason("rule", ri))
        elif n_head == 0 and n_undef == 1:
            v, pol = undef_body
            self.assign(v, not pol, Reason("contraposition", ri))

    def _can_support(self, ri, atom):
        head, body = self.rules[ri]
        for v, pol in body:
            if self.lit_value(v, pol) is False:
                return False
        for h in head:
            if h != atom and self.val[h] is True:
                return False
        return True

    def _support(self, v):
        if self.val[v] is False:
            return
        supports = [ri for ri in self.head_of[v] if self._can_support(ri, v)]
        if not supports:
            self.assign(v, False, Reason("support", v))
            return
        if self.val[v] is True and len(supports) == 1:
            ri = supports[0]
            head, body = self.rules[ri]
            for w, pol in body:
                if self.val[w] is None:
                    self.assign(w, pol, Reason("single-support", ri))
            for h in head:
                if h != v and self.val[h] is None:
                    self.assign(h, False, Reason("single-support", ri))

    def _tuple_status(self, elems):
        any_undef = False
        for conj in elems:
            st = True
            for v, pol in conj:
                x = self.lit_value(v, pol)
                if x is False:
                    st = False
                    break
                if x is None:
                    st = None
            if st is True:
                return True
            if st is None:
                any_undef = True
        return None if any_undef else False

    def _split(self, a):
        true_vals, undef = [], []
        for value, elems in a.tuples:
            st = self._tuple_status(elems)
            if st is True:
                true_vals.append(value)
            elif st is None:
                undef.append((value, elems))
        return true_vals, undef

    def _aggregate(self, j):
        a = self.aggs[j]
        var = self.n + j
        true_vals, undef = self._split(a)
        undef_vals = [u for u, _ in undef]
        can_true, can_false = _possibilities(a.function, a.lo, a.hi, true_vals, undef_vals)
        cur = self.val[var]
        if cur is None:
            if not can_true:
                self.assign(var, False, Reason("aggregate-forward", a.atom))
            elif not can_false:
                self.assign(var, True, Reason("aggregate-forward", a.atom))
            return
        if cur and not can_true or (not cur and not can_false):
            raise Conflict(a.atom, ("aggregate",))
        # backward: test each undefined tuple, largest value first
        want_true = cur
        for i, (value, elems) in enumerate(undef):
            rest = undef_vals[:i] + undef_vals[i + 1:]
            ok_in = _possibilities(a.function, a.lo, a.hi, true_vals + [value], rest)
            if not (ok_in[0] if want_true else ok_in[1]):
                if self._force_tuple(elems, False, a.atom):
                    return
                continue
            ok_out = _possibilities(a.function, a.lo, a.hi, true_vals, rest)
            if not (ok_out[0] if want_true else ok_out[1]):
                if self._force_tuple(elems, True, a.atom):
                    return

    def _force_tuple(self, elems, make_true, source) -> bool:
        """Push a tuple towards ``make_true``; returns True if something was assigned."""
        reason = Reason("aggregate-backward", source)
        before = len(self.trail)
        if make_true:
            alive = [conj for conj in elems
                     if all(self.lit_value(v, pol) is not False for v, pol in conj)]
            if len(alive) == 1:
                for v, pol in alive[0]:
                    if self.val[v] is None:
                        self.assign(v, pol, reason)
        else:
            for conj in elems:
                undef = [(v, pol) for v, pol in conj if self.val[v] is None]
                if any(self.lit_value(v, pol) is False for v, pol in conj):
                    continue
                if len(undef) == 1:
                    v, pol = undef[0]
                    self.assign(v, not pol, reason)
        return len(self.trail) > before

    # -- inspection ---------------------------------------------------------
    def watch(self, agg) -> AggregateWatch:
        j = self.agg_index[agg] - self.n
        a = self.aggs[j]
        true_vals, undef = self._split(a)
        undef_vals = [u for u, _ in undef]
        values, interval, bottom = _reachable(a.function, true_vals, undef_vals)
        if values is not None:
            nums = [v for v in values if is_natural(v)]
            lower = min(nums) if nums else None
            upper = max(nums) if nums else None
        else:
            lower, upper = interval
        nt = [v for v in true_vals if is_natural(v)]
        nu = [v for v in undef_vals if is_natural(v)]
        return AggregateWatch(lower, upper, (a.lo, a.hi), bottom,
                              min(nt) if nt else INF, min(nu) if nu else INF,
                              max(nt) if nt else None, max(nu) if nu else None)

    def partial(self) -> PartialInterpretation:
        values = {self.name(v): self.val[v] for v in range(len(self.val)) if self.val[v] is not None}
        trail = [(self.name(v), self.val[v], self.reason[v]) for v in self.trail]
        return PartialInterpretation(values, trail)

    def true_atoms(self) -> frozenset:
        return frozenset(self.atoms[v] for v in range(self.n) if self.val[v])

    def partial_cost(self) -> int:
        total = 0
        for lits, w, lv in self.weak:
            if all(self.lit_value(v, pol) is True for v, pol in lits):
                total += self.factors[lv] * w
        return total

    def choose(self):
        for v in self.order:
            if self.val[v] is None:
                return v
        return None

    # -- search ---------------------------------------------------------------
    def _leaf_ok(self) -> bool:
        self.stats["models_checked"] += 1
        x = self.true_atoms()
        for j, a in enumerate(self.aggs):
            if self.val[self.n + j] is None or eval_aggregate_atom(a.atom, x) != self.val[self.n + j]:
                return False
        return is_answer_set(self.g, x)

    def search(self, bound=None):
        """Yield answer sets; ``bound`` is a callable giving the current cost ceiling."""
        self.seed()
        ok = self.propagate()
        decisions = []
        while True:
            if ok and bound is not None:
                ceiling = bound()
                if ceiling is not None and self.partial_cost() > ceiling:
                    ok = False
            if ok:
                v = self.choose()
                if v is None:
                    # aggregates over fully decided sets are closed by forward propagation
                    if all(x is not None for x in self.val) and self._leaf_ok():
                        yield self.true_atoms()
                    ok = False
                    continue
                self.stats["decisions"] += 1
                decisions.append([v, len(self.trail), False])
                ok = self._decide(v, True)
                continue
            while decisions and decisions[-1][2]:
                _, tl, _ = decisions.pop()
                self.undo(tl)
            if not decisions:
                return
            d = decisions[-1]
            self.undo(d[1])
            d[2] = True
            ok = self._decide(d[0], False)

    def _decide(self, v, value) -> bool:
        try:
            self.assign(v, value, Reason("decision"))
        except Conflict:
            return False
        return self.propagate()


def deterministic_consequences(g: GroundProgram, pi: PartialInterpretation | None = None
                               ) -> PartialInterpretation:
    """Fixpoint of propagation from ``pi``; raises :class:`Conflict` on inconsistency."""
    s = Solver(g)
    s.seed()
    try:
        for atom, value in (pi.values.items() if pi else ()):
            v = s.agg_index.get(atom) if not isinstance(atom, Atom) else s.index.get(atom)
            if v is None:
                if value and isinstance(atom, Atom):
                    raise Conflict(atom, ("unknown atom assumed true",))
                continue
            s.assign(v, value, Reason("assumption"))
        while s.queue:
            item = s.queue.popleft()
            s.queued.discard(item)
            kind, k = item
            if kind == "r":
                s._rule(k)
            elif kind == "s":
                s._support(k)
            else:
                s._aggregate(k)
    finally:
        s.queue.clear()
        s.queued.clear()
    return s.partial()


def enumerate_answer_sets(g: GroundProgram, limit: int = 0):
    """Answer sets in search order; ``limit`` 0 means all."""
    s = Solver(g)
    yield from itertools.islice(s.search(), limit or None)


def optimal_answer_sets(g: GroundProgram, limit: int = 0):
    """Answer sets of minimal cost, as ``(atoms, CostVector)`` pairs."""
    if not g.weak_constraints:
        for a in enumerate_answer_sets(g, limit):
            yield a, cost_of(g, a)
        return
    s = Solver(g)
    best = [None]
    found = []
    for a in s.search(bound=lambda: best[0]):
        c = cost_of(g, a)
        if best[0] is None or c.scalar < best[0]:
            best[0] = c.scalar
            found = [(a, c)]
        elif c.scalar == best[0]:
            found.append((a, c))
    yield from itertools.islice(found, limit or None)


def solve(g: GroundProgram, limit: int = 0):
    """Plain enumeration without weak constraints, optimization with them."""
    return optimal_answer_sets(g, limit)


__all__ = [
    "reduct", "is_model", "is_answer_set", "answer_set_witness", "minimality_witness",
    "is_head_cycle_free", "CostVector", "level_factors", "cost_of", "Reason", "Conflict",
    "PartialInterpretation", "AggregateWatch", "Solver", "deterministic_consequences",
    "enumerate_answer_sets", "optimal_answer_sets", "solve", "BOTTOM", "Literal",
]
