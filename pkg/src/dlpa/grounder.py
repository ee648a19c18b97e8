"""From a validated program to an equivalent variable-free one.

Two instantiation strategies are provided.  :func:`naive_ground` builds every
instance over the Herbrand universe and is meant as a reference.
:func:`intelligent_ground` walks the predicate components bottom-up,
only emits instances whose positive body can still become true, and
partially evaluates everything already decided.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field

import networkx as nx

from .aggregates import BOTTOM, GuardError, apply_function, eval_aggregate_atom, guard_range, valuate_set
from .analysis import assignment_form, classify_variables, detect_assignment_aggregates
from .model import (
    AUX_PREFIX,
    INF,
    AggregateAtom,
    Atom,
    GroundSet,
    Literal,
    Program,
    Rule,
    SetElement,
    SymbolicSet,
    Variable,
    WeakConstraint,
    constant_key,
    format_interpretation,
    is_natural,
)

log = logging.getLogger(__name__)

TRUE, UNDEF, FALSE = "true", "potentially-true", "false"
DEFAULT_CAP = 10 ** 6
DEFAULT_MAXINT = 1024

#: always-true atom standing in for a body that was entirely evaluated away
TRUE_ATOM = Atom(AUX_PREFIX + "true")

Substitution = dict


def compose(first: dict, second: dict) -> dict:
    """Apply ``first`` then ``second``."""
    out = {v: (second.get(t, t) if isinstance(t, Variable) else t) for v, t in first.items()}
    for v, t in second.items():
        out.setdefault(v, t)
    return out


class GroundingError(Exception):
    """Raised on size-cap overflow or on a run-time error such as a symbolic guard."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report or {}


# ---------------------------------------------------------------------------
# built-ins

def eval_builtin(atom: Atom, maxint: int = DEFAULT_MAXINT) -> bool:
    p, a = atom.predicate, atom.args
    if p in ("+", "*"):
        if not all(is_natural(x) and x <= maxint for x in a):
            return False
        return a[0] == (a[1] + a[2] if p == "+" else a[1] * a[2])
    left, right = constant_key(a[0]), constant_key(a[1])
    return {"=": left == right, "!=": left != right, "<": left < right,
            "<=": left <= right, ">": left > right, ">=": left >= right}[p]


def solve_arithmetic(atom: Atom, subst: dict, maxint: int):
    """Values for the single unbound variable of an arithmetic atom."""
    args = [subst.get(t, t) if isinstance(t, Variable) else t for t in atom.args]
    free = [i for i, t in enumerate(args) if isinstance(t, Variable)]
    if len(free) != 1:
        return []
    i = free[0]
    others = [t for j, t in enumerate(args) if j != i]
    if not all(is_natural(t) and t <= maxint for t in others):
        return []
    x, y, d = args
    if atom.predicate == "+":
        if i == 0:
            cands = [y + d]
        elif i == 1:
            cands = [x - d]
        else:
            cands = [x - y]
    else:
        if i == 0:
            cands = [y * d]
        else:
            k = d if i == 1 else y
            if k == 0:
                cands = list(range(maxint + 1)) if x == 0 else []
            else:
                cands = [x // k] if x % k == 0 else []
    return [c for c in cands if is_natural(c) and c <= maxint]


# ---------------------------------------------------------------------------
# standardization

def _normalize_constant_guards(agg: AggregateAtom) -> AggregateAtom:
    """Rewrite numeric guards into the inclusive ``lo <= f <= hi`` form."""
    guards = [agg.lower, agg.upper]
    if not all(is_natural(g) or g is INF for g in guards):
        return agg
    lo, hi = guard_range(agg)
    return AggregateAtom(agg.function, agg.set, lo, "<=", hi, "<=")


def standardize(program: Program) -> Program:
    """Inclusive numeric guards everywhere and one atom per symbolic set.

    A set conjunction that is not a single positive standard literal is
    replaced by a fresh ``#aux`` atom over the conjunction's variables, with
    the defining rule appended after the original rules.  An unsatisfiable
    guard such as ``< 0`` turns into the empty range ``1 <= f <= 0``.
    """
    taken = set(program.predicates())
    counter = itertools.count(1)
    aux_rules = []

    def fresh():
        while True:
            name = f"{AUX_PREFIX}{next(counter)}"
            if name not in taken:
                taken.add(name)
                return name

    def fix_literal(lit: Literal, line: int) -> Literal:
        if not lit.is_aggregate:
            return lit
        agg = _normalize_constant_guards(lit.atom)
        s = agg.set
        if isinstance(s, SymbolicSet):
            single = len(s.conj) == 1 and s.conj[0].positive and not s.conj[0].atom.is_builtin
            if not single:
                seen = []
                for l in s.conj:
                    for t in l.atom.args:
                        if isinstance(t, Variable) and t not in seen:
                            seen.append(t)
                head = Atom(fresh(), tuple(seen))
                aux_rules.append(Rule((head,), s.conj, line=line))
                agg = agg.with_set(SymbolicSet(s.variables, (Literal(head),)))
        return Literal(agg, lit.positive)

    rules = []
    for r in program.rules:
        rules.append(Rule(r.head, tuple(fix_literal(l, r.line) for l in r.body), line=r.line))
    weak = []
    for w in program.weak_constraints:
        weak.append(WeakConstraint(tuple(fix_literal(l, w.line) for l in w.body),
                                   w.weight, w.level, line=w.line))
    return Program(tuple(rules) + tuple(aux_rules), tuple(weak))


# ---------------------------------------------------------------------------
# ground program containers

class SetTable:
    """Registry of the ground sets referenced by aggregate atoms.

    With sharing enabled, structurally equal sets map to one stored
    instance; otherwise every occurrence gets its own entry.
    """

    def __init__(self, share: bool = True):
        self.share = share
        self.sets = []
        self.refcounts = []
        self._index = {}

    def intern(self, s: GroundSet) -> GroundSet:
        if self.share:
            idx = self._index.get(s)
            if idx is not None:
                self.refcounts[idx] += 1
                return self.sets[idx]
            self._index[s] = len(self.sets)
        self.sets.append(s)
        self.refcounts.append(1)
        return s

    def __len__(self):
        return len(self.sets)


def _map_aggregates(lits, fn):
    return tuple(Literal(fn(l.atom), l.positive) if l.is_aggregate else l for l in lits)


@dataclass
class GroundProgram:
    rules: tuple = ()
    weak_constraints: tuple = ()
    facts: frozenset = frozenset()
    set_table: SetTable = field(default_factory=SetTable)
    origins: tuple = ()           # statement index per rule, -1 when unknown
    stats: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)

    def atoms(self) -> set:
        out = set(self.facts)
        for r in self.rules:
            out.update(r.head)
            for l in r.body:
                out |= _literal_atoms(l)
        for w in self.weak_constraints:
            for l in w.body:
                out |= _literal_atoms(l)
        return out

    def aggregate_atoms(self) -> list:
        seen, out = set(), []
        for st in itertools.chain(self.rules, self.weak_constraints):
            for l in st.body:
                if l.is_aggregate and l.atom not in seen:
                    seen.add(l.atom)
                    out.append(l.atom)
        return out

    def as_program(self) -> Program:
        facts = tuple(Rule((a,)) for a in sorted(self.facts, key=Atom.sort_key))
        return Program(facts + tuple(self.rules), tuple(self.weak_constraints))

    def instances_of(self, origin: int) -> list:
        return [r for r, o in zip(self.rules, self.origins) if o == origin]

    def __str__(self):
        return str(self.as_program())


def _literal_atoms(l: Literal) -> set:
    if not l.is_aggregate:
        return {l.atom}
    return l.atom.set.atoms()


def dedup_sets(g: GroundProgram, share: bool = True) -> GroundProgram:
    """Rebuild ``g`` so that equal ground sets are one shared instance."""
    table = SetTable(share)

    def fix(agg):
        return agg.with_set(table.intern(agg.set))

    rules = tuple(Rule(r.head, _map_aggregates(r.body, fix), line=r.line) for r in g.rules)
    weak = tuple(WeakConstraint(_map_aggregates(w.body, fix), w.weight, w.level, line=w.line)
                 for w in g.weak_constraints)
    stats = dict(g.stats)
    stats["set_occurrences"] = sum(table.refcounts)
    stats["sets_stored"] = len(table)
    return GroundProgram(rules, weak, g.facts, table, g.origins, stats, list(g.warnings))


def _ground_aggregate(agg: AggregateAtom, elements, strict: bool) -> AggregateAtom:
    """Normalize guards of an aggregate whose set is now ``elements``."""
    try:
        lo, hi = guard_range(agg, strict=strict)
    except GuardError as exc:
        raise GroundingError(str(exc)) from exc
    return AggregateAtom(agg.function, GroundSet(tuple(elements)), lo, "<=", hi, "<=")


# ---------------------------------------------------------------------------
# naive instantiation

def _statement_parts(st):
    head = st.head if isinstance(st, Rule) else ()
    return head, st.body


def _has_arithmetic(program: Program) -> bool:
    for st in program.statements():
        for l in st.body:
            lits = l.atom.set.conj if l.is_aggregate and isinstance(l.atom.set, SymbolicSet) else (l,)
            if any(not x.is_aggregate and x.atom.predicate in ("+", "*") for x in lits):
                return True
    return False


def naive_universe(program: Program, maxint: int = DEFAULT_MAXINT, extra=()) -> list:
    """Constants substituted by :func:`naive_ground`.

    This is ``U_P`` plus ``extra`` (values produced by assignment
    aggregates), plus the whole range ``0..maxint`` when the program uses
    arithmetic built-ins, since those range over that interval.
    """
    consts = set(program.herbrand_universe()[0]) | set(extra)
    if _has_arithmetic(program):
        consts |= set(range(maxint + 1))
    return sorted(consts, key=constant_key)


def _enumerate(variables, builtins, domain, subst, maxint):
    """All extensions of ``subst`` to ``variables`` satisfying ``builtins``.

    Arithmetic atoms compute their free variable directly, which equals
    enumerating it over the domain and filtering.
    """
    variables = [v for v in variables if v not in subst]
    if not variables:
        if all(eval_builtin(b.substitute(subst), maxint) for b in builtins):
            yield subst
        return
    # check already-decided built-ins first
    for b in builtins:
        if b.variables() <= subst.keys() and not eval_builtin(b.substitute(subst), maxint):
            return
    for b in builtins:
        if b.predicate in ("+", "*"):
            free = [t for t in b.variables() if t not in subst]
            if len(free) == 1 and free[0] in variables:
                for val in solve_arithmetic(b, subst, maxint):
                    yield from _enumerate(variables, builtins, domain, {**subst, free[0]: val}, maxint)
                return
    v = variables[0]
    for c in domain:
        yield from _enumerate(variables, builtins, domain, {**subst, v: c}, maxint)


def _sorted_vars(vs):
    return sorted(vs, key=lambda v: v.name)


def instantiate_symbolic_set(s: SymbolicSet, subst: dict, status=None, domain=(),
                             maxint: int = DEFAULT_MAXINT):
    """Ground a symbolic set under the global substitution ``subst``.

    Without ``status`` every local substitution over ``domain`` yields a
    pair.  With ``status`` (a callable from ground atom to
    ``TRUE``/``UNDEF``/``FALSE``), only pairs whose conjunction can still
    be true are kept and decided literals are dropped from them.
    """
    local = _sorted_vars(s.all_variables() - subst.keys())
    builtins = [l.atom for l in s.conj if not l.is_aggregate and l.atom.is_builtin]
    elements = []
    for g in _enumerate(local, builtins, list(domain), dict(subst), maxint):
        terms = tuple(g[v] for v in s.variables)
        conj = []
        dead = False
        for l in s.conj:
            if l.atom.is_builtin:
                continue
            atom = l.atom.substitute(g)
            if status is not None:
                st = status(atom)
                if (st == TRUE) == l.positive and st != UNDEF:
                    continue
                if st != UNDEF:
                    dead = True
                    break
            conj.append(Literal(atom, l.positive))
        if not dead:
            elements.append(SetElement(terms, tuple(conj)))
    return GroundSet(tuple(elements))


def naive_ground(program: Program, maxint: int = DEFAULT_MAXINT, extra_constants=(),
                 cap: int = DEFAULT_CAP, dedup: bool = True, standardized: bool = False) -> GroundProgram:
    """All instances of every rule and weak constraint over the universe.

    Built-in literals are evaluated away: an instance with a false built-in
    is left out, since its body can never hold.
    """
    prog = program if standardized else standardize(program)
    domain = naive_universe(program, maxint, extra_constants)
    rules, origins, weak, warnings = [], [], [], []
    facts = set()
    agg_cache = {}
    count = 0
    for idx, st in enumerate(prog.statements()):
        glob, _ = classify_variables(st)
        head, body = _statement_parts(st)
        builtins = [l.atom for l in body if not l.is_aggregate and l.atom.is_builtin]
        for subst in _enumerate(_sorted_vars(glob), builtins, domain, {}, maxint):
            count += 1
            if count > cap:
                raise GroundingError(f"ground program exceeds the cap of {cap} instances",
                                     {"instances": count, "cap": cap})
            new_body = []
            for l in body:
                if l.is_aggregate:
                    agg = l.atom.substitute(subst)
                    # depends only on the aggregate's own global bindings
                    ground_agg = agg_cache.get(agg)
                    if ground_agg is None:
                        if isinstance(agg.set, SymbolicSet):
                            gs = instantiate_symbolic_set(agg.set, subst, None, domain, maxint)
                        else:
                            gs = agg.set
                        ground_agg = _ground_aggregate(agg, gs.elements, strict=False)
                        agg_cache[agg] = ground_agg
                    new_body.append(Literal(ground_agg, l.positive))
                elif not l.atom.is_builtin:
                    new_body.append(l.substitute(subst))
            if not new_body and not head:
                new_body = [Literal(TRUE_ATOM)]
                facts.add(TRUE_ATOM)
            if isinstance(st, Rule):
                rules.append(Rule(tuple(a.substitute(subst) for a in head), tuple(new_body),
                                  line=st.line))
                origins.append(idx)
            else:
                w, lv = (subst.get(t, t) if isinstance(t, Variable) else t
                         for t in (st.weight, st.level))
                if not (is_natural(w) and is_natural(lv) and lv >= 1):
                    continue
                weak.append(WeakConstraint(tuple(new_body), w, lv, line=st.line))
    g = GroundProgram(tuple(rules), tuple(weak), frozenset(facts), SetTable(), tuple(origins),
                      {"mode": "naive", "instances": count, "universe": len(domain)}, warnings)
    return dedup_sets(g, share=dedup)


# ---------------------------------------------------------------------------
# intelligent instantiation

class Extension:
    """Ground atoms derived so far, per predicate, with lookup indexes."""

    def __init__(self):
        self.table = {}        # predicate -> {args: status}
        self.indexes = {}      # (predicate, positions) -> {key: [args]}

    def status(self, atom: Atom):
        return self.table.get(atom.predicate, {}).get(atom.args)

    def add(self, atom: Atom, status: str) -> bool:
        """Insert or upgrade; returns True when the atom is new."""
        tab = self.table.setdefault(atom.predicate, {})
        old = tab.get(atom.args)
        if old is None:
            tab[atom.args] = status
            for (pred, positions), index in self.indexes.items():
                if pred == atom.predicate:
                    index.setdefault(tuple(atom.args[i] for i in positions), []).append(atom.args)
            return True
        if old == UNDEF and status == TRUE:
            tab[atom.args] = TRUE
        return False

    def candidates(self, predicate: str, positions: tuple, key: tuple):
        tab = self.table.get(predicate, {})
        if not positions:
            return list(tab)
        index = self.indexes.get((predicate, positions))
        if index is None:
            index = {}
            for args in tab:
                index.setdefault(tuple(args[i] for i in positions), []).append(args)
            self.indexes[(predicate, positions)] = index
        return list(index.get(key, ()))


def _unify(pattern: Atom, args: tuple, subst: dict):
    new = None
    for t, c in zip(pattern.args, args):
        if isinstance(t, Variable):
            bound = (new or subst).get(t)
            if bound is None:
                if new is None:
                    new = dict(subst)
                new[t] = c
            elif bound != c:
                return None
        elif t != c:
            return None
    return new if new is not None else dict(subst)


class _Step:
    __slots__ = ("kind", "pos", "lit")

    def __init__(self, kind, pos, lit):
        self.kind, self.pos, self.lit = kind, pos, lit


def _plan(body, prebound, assignments, glob, first=None):
    """Order body literals for a left-to-right join.

    ``kind`` is one of ``match`` (positive standard literal), ``arith``,
    ``test`` (comparison), ``assign`` (assignment aggregate) or ``late``
    (negative literal or plain aggregate, evaluated once all globals are
    bound).
    """
    bound = set(prebound)
    todo = list(range(len(body)))
    steps = []

    def take(i, kind):
        steps.append(_Step(kind, i, body[i]))
        todo.remove(i)

    if first is not None:
        take(first, "match")
        bound |= body[first].atom.variables()
    while True:
        progress = True
        while progress:
            progress = False
            for i in list(todo):
                l = body[i]
                if l.is_aggregate:
                    if i in assignments:
                        var = assignment_form(l.atom)
                        if l.atom.set.all_variables() & glob <= bound:
                            take(i, "assign")
                            bound.add(var)
                            progress = True
                    continue
                if not l.positive or not l.atom.is_builtin:
                    continue
                free = l.atom.variables() - bound
                if not free:
                    take(i, "arith" if l.atom.predicate in ("+", "*") else "test")
                    progress = True
                elif l.atom.predicate in ("+", "*") and len(free) == 1:
                    take(i, "arith")
                    bound |= free
                    progress = True
        matches = [i for i in todo if not body[i].is_aggregate and body[i].positive
                   and not body[i].atom.is_builtin]
        if not matches:
            break
        best = min(matches, key=lambda i: (len(body[i].atom.variables() - bound), i))
        take(best, "match")
        bound |= body[best].atom.variables()
    for i in list(todo):
        take(i, "late")
    return steps


class _Instantiator:
    def __init__(self, program: Program, maxint: int, cap: int):
        self.program = program
        self.maxint = maxint
        self.cap = cap
        self.ext = Extension()
        self.complete = set()
        self.current = set()
        self.rules = []
        self.origins = []
        self.weak = []
        self.facts = set()
        self.emitted = set()
        self.instances = 0
        self.warnings = []
        self.enriched = set()
        self.statements = list(program.statements())
        self.assignments = {}
        for idx, pos in detect_assignment_aggregates(program):
            self.assignments.setdefault(idx, set()).add(pos)
        self.aux_rules = {}
        for idx, st in enumerate(self.statements):
            if isinstance(st, Rule) and len(st.head) == 1 and st.head[0].is_aux:
                self.aux_rules[st.head[0].predicate] = idx
        self.aux_done = set()
        self.plans = {}

    # -- status -------------------------------------------------------------
    def status(self, atom: Atom):
        st = self.ext.status(atom)
        if st is not None:
            return st
        if atom.predicate in self.complete:
            return FALSE
        return None

    def set_status(self, atom: Atom) -> str:
        """Status of an atom nested in an aggregate; its predicate is complete."""
        if atom.is_aux:
            return self.ext.status(atom) or FALSE
        return self.status(atom) or FALSE

    # -- emission -----------------------------------------------------------
    def _count(self):
        self.instances += 1
        if self.instances > self.cap:
            raise GroundingError(f"ground program exceeds the cap of {self.cap} instances",
                                 {"instances": self.instances, "cap": self.cap})

    def emit_rule(self, idx, head, body, new_atoms):
        """Record an instance; returns atoms that became newly known."""
        self._count()
        if not head:
            self._emit_constraint(idx, body)
            return
        if any(self.ext.status(a) == TRUE for a in head):
            return
        if not body and len(head) == 1:
            a = head[0]
            if self.ext.add(a, TRUE):
                new_atoms.append(a)
            self.facts.add(a)
            return
        rule = Rule(head, body, line=self.statements[idx].line)
        if rule in self.emitted:
            return
        self.emitted.add(rule)
        self.rules.append(rule)
        self.origins.append(idx)
        for a in head:
            if self.ext.add(a, UNDEF):
                new_atoms.append(a)

    def _emit_constraint(self, idx, body):
        if not body:
            body = (Literal(TRUE_ATOM),)
            self.facts.add(TRUE_ATOM)
        rule = Rule((), body, line=self.statements[idx].line)
        if rule not in self.emitted:
            self.emitted.add(rule)
            self.rules.append(rule)
            self.origins.append(idx)

    # -- joins --------------------------------------------------------------
    def plan(self, idx, first=None, prebound=frozenset()):
        key = (idx, first, prebound)
        p = self.plans.get(key)
        if p is None:
            st = self.statements[idx]
            glob, _ = classify_variables(st)
            p = _plan(st.body, prebound, self.assignments.get(idx, ()), glob, first)
            self.plans[key] = p
        return p

    def solutions(self, idx, steps, subst, delta=None):
        """Yield ``(subst, residual)`` pairs; residual holds undecided literals."""
        yield from self._join(idx, steps, 0, subst, [], delta)

    def _join(self, idx, steps, k, subst, residual, delta):
        if k == len(steps):
            yield subst, residual
            return
        step = steps[k]
        lit = step.lit
        if step.kind == "match":
            pattern = lit.atom
            if k == 0 and delta is not None:
                cands = [(args, self.ext.table[pattern.predicate][args]) for args in delta]
                for args, st in cands:
                    if st == FALSE:
                        continue
                    new = _unify(pattern, args, subst)
                    if new is not None:
                        extra = [] if st == TRUE else [Literal(Atom(pattern.predicate, args))]
                        yield from self._join(idx, steps, k + 1, new, residual + extra, delta)
                return
            positions = tuple(i for i, t in enumerate(pattern.args)
                              if not isinstance(t, Variable) or t in subst)
            key = tuple(subst.get(pattern.args[i], pattern.args[i]) for i in positions)
            tab = self.ext.table.get(pattern.predicate, {})
            for args in self.ext.candidates(pattern.predicate, positions, key):
                st = tab.get(args)
                if st == FALSE or st is None:
                    continue
                new = _unify(pattern, args, subst)
                if new is None:
                    continue
                extra = [] if st == TRUE else [Literal(Atom(pattern.predicate, args))]
                yield from self._join(idx, steps, k + 1, new, residual + extra, delta)
            return
        if step.kind == "test":
            if eval_builtin(lit.atom.substitute(subst), self.maxint):
                yield from self._join(idx, steps, k + 1, subst, residual, delta)
            return
        if step.kind == "arith":
            atom = lit.atom
            free = [t for t in atom.variables() if t not in subst]
            if not free:
                if eval_builtin(atom.substitute(subst), self.maxint):
                    yield from self._join(idx, steps, k + 1, subst, residual, delta)
                return
            for val in solve_arithmetic(atom, subst, self.maxint):
                yield from self._join(idx, steps, k + 1, {**subst, free[0]: val}, residual, delta)
            return
        if step.kind == "assign":
            var = assignment_form(lit.atom)
            value = self._assign(lit.atom, subst)
            if value is None:
                return
            if var in subst:
                if subst[var] != value:
                    return
                new = subst
            else:
                new = {**subst, var: value}
            yield from self._join(idx, steps, k + 1, new, residual, delta)
            return
        # late literal: every global variable is bound by now
        outcome = self._late(lit, subst)
        if outcome is False:
            return
        extra = [] if outcome is True else [outcome]
        yield from self._join(idx, steps, k + 1, subst, residual + extra, delta)

    def _late(self, lit: Literal, subst):
        """``True`` if decided true, ``False`` if decided false, else a residual literal."""
        if lit.is_aggregate:
            agg = self._ground_set_of(lit.atom, subst)
            if all(not e.conj for e in agg.set.elements):
                truth = eval_aggregate_atom(agg, frozenset())
                return truth == lit.positive
            return Literal(agg, lit.positive)
        atom = lit.atom.substitute(subst)
        if not atom.is_ground():
            raise GroundingError(f"unsafe literal {lit} reached instantiation unbound")
        if atom.is_builtin:
            return eval_builtin(atom, self.maxint) == lit.positive
        st = self.status(atom)
        if st == TRUE:
            return lit.positive
        if st == FALSE or (st is None and atom.predicate in self.complete):
            return not lit.positive
        return Literal(atom, lit.positive)

    def _ground_set_of(self, agg: AggregateAtom, subst) -> AggregateAtom:
        agg = agg.substitute(subst)
        s = agg.set
        if isinstance(s, SymbolicSet):
            pattern = s.conj[0].atom
            if pattern.is_aux:
                self._ground_aux(pattern, subst)
            elements = []
            positions = tuple(i for i, t in enumerate(pattern.args) if not isinstance(t, Variable))
            key = tuple(pattern.args[i] for i in positions)
            tab = self.ext.table.get(pattern.predicate, {})
            for args in self.ext.candidates(pattern.predicate, positions, key):
                st = tab.get(args)
                if st is None or st == FALSE:
                    continue
                g = _unify(pattern, args, {})
                if g is None:
                    continue
                terms = tuple(g[v] for v in s.variables)
                conj = () if st == TRUE else (Literal(Atom(pattern.predicate, args)),)
                elements.append(SetElement(terms, conj))
        else:
            elements = []
            for e in s.elements:
                conj, dead = [], False
                for l in e.conj:
                    st = self.set_status(l.atom)
                    if st == UNDEF:
                        conj.append(l)
                    elif (st == TRUE) != l.positive:
                        dead = True
                        break
                if not dead:
                    elements.append(SetElement(e.terms, tuple(conj)))
        return _ground_aggregate(agg, elements, strict=True)

    def _assign(self, agg: AggregateAtom, subst):
        # evaluate the set with the guard left open
        ground = self._ground_set_of(AggregateAtom(agg.function, agg.set), subst)
        if any(e.conj for e in ground.set.elements):
            raise GroundingError(f"assignment aggregate {agg} has undecided elements")
        value = apply_function(agg.function, valuate_set(ground.set, frozenset()))
        if value is BOTTOM:
            return None
        self.enriched.add(value)
        return value

    def _ground_aux(self, pattern: Atom, subst):
        """Instantiate the defining rule of an aux atom for one binding of its globals."""
        idx = self.aux_rules[pattern.predicate]
        rule = self.statements[idx]
        head = rule.head[0]
        pre = {}
        for t_rule, t_pat in zip(head.args, pattern.args):
            if not isinstance(t_pat, Variable):
                pre[t_rule] = t_pat
        key = (pattern.predicate, tuple(sorted((v.name, c) for v, c in pre.items())))
        if key in self.aux_done:
            return
        self.aux_done.add(key)
        steps = self.plan(idx, None, frozenset(pre))
        for g, residual in list(self.solutions(idx, steps, dict(pre))):
            self.emit_rule(idx, (head.substitute(g),), tuple(residual), [])

    # -- driver -------------------------------------------------------------
    def components(self):
        order = {}
        g = nx.DiGraph()
        for st in self.statements:
            for a in _statement_atoms(st):
                order.setdefault(a.predicate, len(order))
                g.add_node(a.predicate)
        for idx, st in enumerate(self.statements):
            if not isinstance(st, Rule) or not st.head:
                continue
            heads = [a.predicate for a in st.head]
            for a in heads:
                for b in heads:
                    if a != b:
                        g.add_edge(a, b)
            for l in st.body:
                for atom in _literal_pattern_atoms(l):
                    for h in heads:
                        g.add_edge(atom.predicate, h)
        cond = nx.condensation(g)
        keyf = {c: min(order[p] for p in cond.nodes[c]["members"]) for c in cond.nodes}
        for c in nx.lexicographical_topological_sort(cond, key=lambda c: keyf[c]):
            yield sorted(cond.nodes[c]["members"], key=order.get)

    def run(self):
        rules_by_pred = {}
        for idx, st in enumerate(self.statements):
            if isinstance(st, Rule) and st.head and not st.head[0].is_aux:
                rules_by_pred.setdefault(st.head[0].predicate, []).append(idx)
        for comp in self.components():
            if all(p.startswith(AUX_PREFIX) for p in comp):
                continue
            self.current = set(comp)
            idxs = sorted({i for p in comp for i in rules_by_pred.get(p, ())})
            self._component(idxs)
            self.complete |= self.current
            self.current = set()
        for idx, st in enumerate(self.statements):
            if isinstance(st, Rule) and not st.head:
                steps = self.plan(idx)
                for _, residual in list(self.solutions(idx, steps, {})):
                    self.emit_rule(idx, (), tuple(residual), [])
            elif isinstance(st, WeakConstraint):
                steps = self.plan(idx)
                for g, residual in list(self.solutions(idx, steps, {})):
                    self._emit_weak(st, g, residual)

    def _emit_weak(self, st, g, residual):
        self._count()
        w, lv = (g.get(t, t) if isinstance(t, Variable) else t for t in (st.weight, st.level))
        if not (is_natural(w) and is_natural(lv) and lv >= 1):
            raise GroundingError(f"weak constraint {st} instantiated with weight {w} "
                                 f"and level {lv}; both must be natural, level at least 1")
        body = tuple(residual)
        if not body:
            body = (Literal(TRUE_ATOM),)
            self.facts.add(TRUE_ATOM)
        self.weak.append(WeakConstraint(body, w, lv, line=st.line))

    def _component(self, idxs):
        delta = None
        first_round = True
        while True:
            new_atoms = []
            for idx in idxs:
                st = self.statements[idx]
                if first_round:
                    variants = [(self.plan(idx), None)]
                else:
                    variants = []
                    for pos, l in enumerate(st.body):
                        if (not l.is_aggregate and l.positive and not l.atom.is_builtin
                                and l.atom.predicate in self.current
                                and delta.get(l.atom.predicate)):
                            variants.append((self.plan(idx, pos), delta[l.atom.predicate]))
                for steps, dl in variants:
                    for g, residual in list(self.solutions(idx, steps, {}, dl)):
                        head = tuple(a.substitute(g) for a in st.head)
                        self.emit_rule(idx, head, tuple(residual), new_atoms)
            first_round = False
            if not new_atoms:
                return
            delta = {}
            for a in new_atoms:
                delta.setdefault(a.predicate, []).append(a.args)


def _statement_atoms(st):
    if isinstance(st, Rule):
        yield from st.head
    for l in st.body:
        yield from _literal_pattern_atoms(l)


def _literal_pattern_atoms(l: Literal):
    if not l.is_aggregate:
        if not l.atom.is_builtin:
            yield l.atom
        return
    s = l.atom.set
    conj = s.conj if isinstance(s, SymbolicSet) else [x for e in s.elements for x in e.conj]
    for x in conj:
        if not x.atom.is_builtin:
            yield x.atom


# ---------------------------------------------------------------------------
# simplification

def simplify(rules, origins, weak, facts):
    """Propagate decided atoms through a ground program until nothing changes.

    Facts are true; atoms with no head occurrence left are false.  True body
    literals disappear, rules with a false body literal or a true head atom
    disappear, and aggregates with every element decided are evaluated.
    """
    rules = list(rules)
    origins = list(origins)
    weak = list(weak)
    true = set(facts)
    changed = True
    while changed:
        changed = False
        heads = {a for r in rules for a in r.head}

        def value(atom):
            if atom in true:
                return True
            if atom not in heads:
                return False
            return None

        new_rules, new_origins = [], []
        for r, o in zip(rules, origins):
            if any(a in true for a in r.head):
                changed = True
                continue
            body = _reduce_body(r.body, value)
            if body is None:
                changed = True
                continue
            if not body:
                if len(r.head) == 1:
                    true.add(r.head[0])
                    changed = True
                    continue
                if not r.head:
                    body = (Literal(TRUE_ATOM),)
                    true.add(TRUE_ATOM)
            if body != r.body:
                changed = True
            new_rules.append(Rule(r.head, body, line=r.line))
            new_origins.append(o)
        rules, origins = new_rules, new_origins
        new_weak = []
        for w in weak:
            body = _reduce_body(w.body, value)
            if body is None:
                changed = True
                continue
            if not body:
                body = (Literal(TRUE_ATOM),)
                true.add(TRUE_ATOM)
            if body != w.body:
                changed = True
            new_weak.append(WeakConstraint(body, w.weight, w.level, line=w.line))
        weak = new_weak
    # keep TRUE_ATOM only while something refers to it
    used = any(l.atom == TRUE_ATOM for st in itertools.chain(rules, weak) for l in st.body)
    if not used:
        true.discard(TRUE_ATOM)
    return rules, origins, weak, frozenset(true)


def _reduce_body(body, value):
    """Drop true literals; ``None`` when some literal is false."""
    out = []
    for l in body:
        if l.is_aggregate:
            agg = l.atom
            elements = []
            for e in agg.set.elements:
                conj, dead = [], False
                for x in e.conj:
                    v = value(x.atom)
                    if v is None:
                        conj.append(x)
                    elif v != x.positive:
                        dead = True
                        break
                if not dead:
                    elements.append(SetElement(e.terms, tuple(conj)))
            new = agg.with_set(GroundSet(tuple(elements)))
            if all(not e.conj for e in new.set.elements):
                if eval_aggregate_atom(new, frozenset()) != l.positive:
                    return None
                continue
            out.append(Literal(new, l.positive) if new != agg else l)
            continue
        v = value(l.atom)
        if v is None:
            out.append(l)
        elif v != l.positive:
            return None
    return tuple(out)


def intelligent_ground(program: Program, maxint: int = DEFAULT_MAXINT, cap: int = DEFAULT_CAP,
                       dedup: bool = True, standardized: bool = False):
    """Ground ``program`` bottom-up; returns ``(GroundProgram, atom status map)``."""
    prog = program if standardized else standardize(program)
    inst = _Instantiator(prog, maxint, cap)
    inst.run()
    rules, origins, weak, facts = simplify(inst.rules, inst.origins, inst.weak, inst.facts)
    status = {}
    for pred, tab in inst.ext.table.items():
        for args in tab:
            status[Atom(pred, args)] = FALSE
    g = GroundProgram(tuple(rules), tuple(weak), facts, SetTable(), tuple(origins),
                      {"mode": "intelligent", "instances": inst.instances,
                       "enriched": sorted(inst.enriched)}, inst.warnings)
    for a in g.atoms():
        status[a] = UNDEF
    for a in facts:
        status[a] = TRUE
    for w in inst.warnings:
        log.warning(w)
    return dedup_sets(g, share=dedup), status


def ground(program: Program, mode: str = "intelligent", **kw) -> GroundProgram:
    if mode == "naive":
        return naive_ground(program, **kw)
    return intelligent_ground(program, **kw)[0]


__all__ = [
    "TRUE", "UNDEF", "FALSE", "TRUE_ATOM", "GroundingError", "GroundProgram", "SetTable",
    "Substitution", "compose", "eval_builtin", "standardize", "naive_ground", "naive_universe",
    "intelligent_ground", "instantiate_symbolic_set", "dedup_sets", "simplify", "ground",
    "format_interpretation",
]
