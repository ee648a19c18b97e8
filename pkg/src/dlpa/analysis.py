"""Static checks: safety, negation/aggregate stratification, assignment aggregates."""

from __future__ import annotations

from dataclasses import dataclass, field

import networkx as nx

from .model import INF, Atom, Program, Rule, SymbolicSet, Variable, WeakConstraint

POSITIVE, NEGATIVE, AGGREGATE, HEAD_SHARED = (
    "positive-body", "negative-body", "aggregate-body", "head-shared")


@dataclass
class DependencyGraph:
    nodes: set = field(default_factory=set)
    edges: set = field(default_factory=set)
    # aggregate-body edges whose nested occurrence sits under a negation,
    # either of the aggregate literal or of the literal inside the set
    negated_nested: set = field(default_factory=set)

    @classmethod
    def of(cls, program: Program) -> "DependencyGraph":
        g = cls()
        for st in program.statements():
            heads = [a.predicate for a in st.head] if isinstance(st, Rule) else []
            g.nodes.update(heads)
            for lit in st.body:
                if not lit.is_aggregate:
                    if lit.atom.is_builtin:
                        continue
                    p = lit.atom.predicate
                    g.nodes.add(p)
                    label = POSITIVE if lit.positive else NEGATIVE
                    g.edges.update((p, h, label) for h in heads)
                    continue
                for inner_positive, atom in _nested(lit.atom):
                    if atom.is_builtin:
                        continue
                    p = atom.predicate
                    g.nodes.add(p)
                    for h in heads:
                        g.edges.add((p, h, AGGREGATE))
                        if not (lit.positive and inner_positive):
                            g.negated_nested.add((p, h))
            for a in heads:
                for b in heads:
                    if a != b:
                        g.edges.add((a, b, HEAD_SHARED))
        return g


def _nested(agg):
    s = agg.set
    if isinstance(s, SymbolicSet):
        for l in s.conj:
            yield l.positive, l.atom
    else:
        for e in s.elements:
            for l in e.conj:
                yield l.positive, l.atom


@dataclass
class StratificationResult:
    ok: bool
    levels: dict = None
    witness_cycle: list = None


def _stratify(nodes, weighted_edges) -> StratificationResult:
    """Level mapping for edges ``(u, v, strict)``: ``u <= v``, strictly if flagged."""
    g = nx.DiGraph()
    g.add_nodes_from(sorted(nodes))
    for u, v, strict in weighted_edges:
        if g.has_edge(u, v):
            g[u][v]["strict"] |= strict
        else:
            g.add_edge(u, v, strict=strict)
    comp_of = {}
    for i, comp in enumerate(nx.strongly_connected_components(g)):
        for n in comp:
            comp_of[n] = i
    best = None
    for u, v, data in g.edges(data=True):
        if data["strict"] and comp_of[u] == comp_of[v]:
            path = [u] if u == v else [u] + nx.shortest_path(g, v, u)[:-1]
            if best is None or len(path) < len(best) or (len(path) == len(best) and path < best):
                best = path
    if best is not None:
        return StratificationResult(False, witness_cycle=best)
    cond = nx.condensation(g, scc=[{n for n in comp_of if comp_of[n] == i}
                                   for i in range(len(set(comp_of.values())))])
    level = {}
    for c in nx.topological_sort(cond):
        lv = 0
        for pc in cond.predecessors(c):
            step = 0
            for u in cond.nodes[pc]["members"]:
                for v in cond.nodes[c]["members"]:
                    if g.has_edge(u, v) and g[u][v]["strict"]:
                        step = 1
            lv = max(lv, level[pc] + step)
        level[c] = lv
    levels = {n: level[cond.graph["mapping"][n]] for n in g.nodes}
    return StratificationResult(True, levels=levels)


def check_aggregate_stratification(program: Program) -> StratificationResult:
    dg = DependencyGraph.of(program)
    edges = [(u, v, label == AGGREGATE) for u, v, label in dg.edges]
    return _stratify(dg.nodes, edges)


def check_negation_stratification(program: Program) -> StratificationResult:
    dg = DependencyGraph.of(program)
    edges = []
    for u, v, label in dg.edges:
        strict = label == NEGATIVE or (label == AGGREGATE and (u, v) in dg.negated_nested)
        edges.append((u, v, strict))
    return _stratify(dg.nodes, edges)


def levels_satisfy(program: Program, levels: dict, kind: str) -> bool:
    """Check a level mapping against the three conditions rule by rule."""
    for st in program.statements():
        if not isinstance(st, Rule):
            continue
        heads = [a.predicate for a in st.head]
        for a in heads:
            for b in heads:
                if levels[a] != levels[b]:
                    return False
        for lit in st.body:
            if not lit.is_aggregate:
                if lit.atom.is_builtin:
                    continue
                strict = kind == "negation" and not lit.positive
                preds = [(lit.atom.predicate, strict)]
            else:
                preds = []
                for inner_pos, atom in _nested(lit.atom):
                    if atom.is_builtin:
                        continue
                    if kind == "aggregate":
                        preds.append((atom.predicate, True))
                    else:
                        preds.append((atom.predicate, not (lit.positive and inner_pos)))
            for p, strict in preds:
                for h in heads:
                    if strict and not levels[p] < levels[h]:
                        return False
                    if not strict and not levels[p] <= levels[h]:
                        return False
    return True


def classify_variables(statement):
    """Return ``(global, local)`` variable sets of a rule or weak constraint."""
    outside, inside = set(), set()
    if isinstance(statement, Rule):
        for a in statement.head:
            outside |= a.variables()
    else:
        outside |= {t for t in (statement.weight, statement.level) if isinstance(t, Variable)}
    for lit in statement.body:
        if lit.is_aggregate:
            outside |= lit.atom.guard_variables()
            inside |= lit.atom.set.all_variables()
        else:
            outside |= lit.variables()
    local = inside - outside
    return (outside | inside) - local, local


def _arith_closure(bound: set, atoms) -> set:
    bound = set(bound)
    changed = True
    while changed:
        changed = False
        for atom in atoms:
            if atom.predicate not in ("+", "*"):
                continue
            free = [a for a in atom.args if isinstance(a, Variable) and a not in bound]
            if len(free) == 1:
                bound.add(free[0])
                changed = True
    return bound


def assignment_form(agg):
    """The assigned variable if ``agg`` has the shape ``X = f(S)`` / ``f(S) = X``."""
    lower_default = agg.lower == 0 and agg.lower_op == "<="
    upper_default = agg.upper is INF and agg.upper_op == "<="
    var = None
    if agg.lower_op == "=" and isinstance(agg.lower, Variable) and upper_default:
        var = agg.lower
    elif agg.upper_op == "=" and isinstance(agg.upper, Variable) and lower_default:
        var = agg.upper
    if var is None or not isinstance(agg.set, SymbolicSet) or var in agg.set.all_variables():
        return None
    return var


@dataclass
class SafetyReport:
    # statement index (rules first, then weak constraints) -> (safe, {(var, "i"|"ii")})
    per_rule: dict = field(default_factory=dict)

    @property
    def safe(self) -> bool:
        return all(ok for ok, _ in self.per_rule.values())

    def violations(self):
        for idx, (ok, bad) in sorted(self.per_rule.items()):
            if not ok:
                yield idx, sorted(bad, key=lambda vb: (vb[1], vb[0].name))


def bound_variables(statement, assignments=frozenset()) -> set:
    """Global variables made range restricted by the body of ``statement``.

    ``assignments`` holds body positions of assignment aggregates; their
    guard variable becomes bound once every other variable of the set that is
    global is bound.
    """
    glob, _ = classify_variables(statement)
    bound = set()
    builtin_atoms = []
    for lit in statement.body:
        if lit.is_aggregate or not lit.positive:
            continue
        if lit.atom.is_builtin:
            builtin_atoms.append(lit.atom)
        else:
            bound |= lit.atom.variables()
    while True:
        before = len(bound)
        bound = _arith_closure(bound, builtin_atoms)
        for pos in assignments:
            agg = statement.body[pos].atom
            var = assignment_form(agg)
            needed = agg.set.all_variables() & glob
            if var is not None and needed <= bound:
                bound.add(var)
        if len(bound) == before:
            return bound


def _statement_safety(statement, assignments) -> set:
    glob, local = classify_variables(statement)
    bad = set()
    bound = bound_variables(statement, assignments)
    for v in glob - bound:
        bad.add((v, "i"))
    for lit in statement.body:
        if not lit.is_aggregate or not isinstance(lit.atom.set, SymbolicSet):
            continue
        s = lit.atom.set
        inner = set()
        builtin_atoms = []
        for l in s.conj:
            if not l.positive:
                continue
            if l.atom.is_builtin:
                builtin_atoms.append(l.atom)
            else:
                inner |= l.atom.variables()
        inner = _arith_closure(inner | (glob & bound), builtin_atoms)
        for v in s.all_variables() & local:
            if v not in inner:
                bad.add((v, "ii"))
    return bad


def check_safety(program: Program, relaxed: bool = True) -> SafetyReport:
    assigned = {}
    if relaxed:
        for idx, pos in detect_assignment_aggregates(program):
            assigned.setdefault(idx, set()).add(pos)
    report = SafetyReport()
    for idx, st in enumerate(program.statements()):
        bad = _statement_safety(st, assigned.get(idx, ()))
        report.per_rule[idx] = (not bad, bad)
    return report


def defining_program(program: Program, predicate: str) -> list:
    """``def_P(p)``: rules defining ``p`` and, transitively, their body predicates."""
    by_head = {}
    for r in program.rules:
        for a in r.head:
            by_head.setdefault(a.predicate, []).append(r)
    seen, todo, out = set(), [predicate], []
    while todo:
        p = todo.pop()
        if p in seen:
            continue
        seen.add(p)
        for r in by_head.get(p, ()):
            if r not in out:
                out.append(r)
            for lit in r.body:
                if lit.is_aggregate:
                    todo.extend(a.predicate for _, a in _nested(lit.atom) if not a.is_builtin)
                elif not lit.atom.is_builtin:
                    todo.append(lit.atom.predicate)
    return out


def is_deterministic(program: Program, predicate: str) -> bool:
    rules = defining_program(program, predicate)
    if any(r.is_disjunctive for r in rules):
        return False
    return check_negation_stratification(Program(tuple(rules))).ok


def detect_assignment_aggregates(program: Program) -> set:
    """Body positions ``(statement index, literal position)`` of assignment aggregates."""
    out = set()
    cache = {}
    for idx, st in enumerate(program.statements()):
        for pos, lit in enumerate(st.body):
            if not lit.is_aggregate or not lit.positive:
                continue
            if assignment_form(lit.atom) is None:
                continue
            preds = {a.predicate for _, a in _nested(lit.atom) if not a.is_builtin}
            ok = True
            for p in preds:
                if p not in cache:
                    cache[p] = is_deterministic(program, p)
                ok = ok and cache[p]
            if ok:
                out.add((idx, pos))
    return out


@dataclass(frozen=True)
class Diagnostic:
    kind: str
    message: str
    line: int = 0

    def __str__(self):
        where = f"line {self.line}: " if self.line else ""
        return f"error: {self.kind}: {where}{self.message}"


class AnalysisError(Exception):
    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("\n".join(map(str, self.diagnostics)))


def validate(program: Program) -> None:
    """Reject programs that are unsafe (relaxed safety) or aggregate-unstratified."""
    diags = []
    statements = list(program.statements())
    report = check_safety(program, relaxed=True)
    for idx, bad in report.violations():
        st = statements[idx]
        detail = ", ".join(f"{v} violates condition ({cond})" for v, cond in bad)
        diags.append(Diagnostic("unsafe", f"{st}: {detail}", st.line))
    strat = check_aggregate_stratification(program)
    if not strat.ok:
        cycle = " -> ".join(strat.witness_cycle + strat.witness_cycle[:1])
        diags.append(Diagnostic("aggregate-unstratified", f"recursion through an aggregate: {cycle}"))
    if diags:
        raise AnalysisError(diags)


__all__ = [
    "DependencyGraph", "StratificationResult", "SafetyReport", "AnalysisError", "Diagnostic",
    "check_aggregate_stratification", "check_negation_stratification", "classify_variables",
    "check_safety", "detect_assignment_aggregates", "defining_program", "is_deterministic",
    "levels_satisfy", "validate", "assignment_form", "bound_variables",
    "Atom", "WeakConstraint",
]
