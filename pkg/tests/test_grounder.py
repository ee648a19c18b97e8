import random

import pytest

from dlpa.grounder import (FALSE, UNDEF, GroundingError, eval_builtin, instantiate_symbolic_set,
                           intelligent_ground, naive_ground, standardize)
from dlpa.model import Atom, Literal, Variable
from dlpa.oracle import oracle_answer_sets, random_ground_program, unfold_aux
from dlpa.parser import parse_atom, parse_program, parse_rule
from dlpa import programs as P

from conftest import grounded, shown, visible


def rule_strings(g):
    return {str(r) for r in g.as_program().statements()}


def test_naive_grounding_of_p1():
    g = naive_ground(parse_program(P.P1))
    assert rule_strings(g) == {
        "q(1) v p(2,2).",
        "q(2) v p(2,1).",
        "t(1) :- q(1), 2<=#sum{<1:p(1,1)>, <2:p(1,2)>}.",
        "t(2) :- q(2), 2<=#sum{<1:p(2,1)>, <2:p(2,2)>}.",
    }


def test_standardization_example():
    prog = standardize(parse_program("p(X) :- q(X), 1 < #count{Y: a(X,Y), not b(Y)}."))
    assert [str(s) for s in prog.statements()] == [
        "p(X) :- q(X), 2<=#count{Y:#aux1(X,Y)}.",
        "#aux1(X,Y) :- a(X,Y), not b(Y).",
    ]


def test_standardization_is_idempotent():
    once = standardize(parse_program(P.TEAM_BUILDING))
    assert standardize(once) == once


def test_equality_guard_becomes_range():
    prog = standardize(parse_program("p :- #sum{X: q(X)} = 3."))
    assert str(prog).strip() == "p :- 3<=#sum{X:q(X)}<=3."


def test_naive_set_instantiation():
    s = parse_rule(":- #sum{Y: p(1,Y)} > 1.").body[0].atom.set
    gs = instantiate_symbolic_set(s, {}, None, [1, 2])
    assert str(gs) == "{<1:p(1,1)>, <2:p(1,2)>}"


def test_set_instantiation_uses_potentially_true_atoms():
    s = parse_rule(":- #count{Y: #aux1(X,Y)} > 1.").body[0].atom.set
    table = {Atom("#aux1", (1, "a")): UNDEF, Atom("#aux1", (1, "b")): UNDEF,
             Atom("#aux1", (2, "c")): UNDEF}
    domain = [1, 2, 3, "a", "b", "c"]

    def status(atom):
        return table.get(atom, FALSE)
    gs = instantiate_symbolic_set(s, {Variable("X"): 1}, status, domain)
    assert str(gs) == "{<a:#aux1(1,a)>, <b:#aux1(1,b)>}"
    assert len(instantiate_symbolic_set(s, {Variable("X"): 3}, status, domain)) == 0


def test_intelligent_grounding_of_the_aux_example():
    text = ("q(1) v z. q(2) v z. a(1,a) v z. a(1,b) v z. a(2,c) v z.\n"
            "p(X) :- q(X), 1 < #count{Y: a(X,Y), not b(Y)}.\n")
    g = grounded(text)
    p_rules = sorted(str(r) for r in g.rules if r.head and r.head[0].predicate == "p")
    assert p_rules == [
        "p(1) :- q(1), 2<=#count{<a:#aux1(1,a)>, <b:#aux1(1,b)>}.",
        "p(2) :- q(2), 2<=#count{<c:#aux1(2,c)>}.",
    ]


def test_naive_on_ground_program_is_identity():
    prog = parse_program("a v b. c :- a, not b. :- c, b.")
    assert rule_strings(naive_ground(prog)) == {str(s) for s in prog.statements()}


def test_naive_single_rule():
    g = naive_ground(parse_program("p(X) :- q(X). q(1) v q(2)."))
    assert {str(r) for r in g.rules if r.head[0].predicate == "p"} == {"p(1) :- q(1).",
                                                                     "p(2) :- q(2)."}


def test_assignment_enriches_universe():
    g, _ = intelligent_ground(parse_program(P.INPUT_CARDINALITY))
    assert "cardinality_p(2)" in {str(a) for a in g.facts}
    assert not g.rules
    g, _ = intelligent_ground(parse_program(P.TOTAL_SALARY))
    assert Atom("total", (3500,)) in g.facts


def test_input_cardinality_matches_enriched_naive_oracle():
    prog = parse_program(P.INPUT_CARDINALITY)
    naive = naive_ground(prog, extra_constants=[2])
    assert shown(oracle_answer_sets(naive)) == shown([grounded(P.INPUT_CARDINALITY).facts])


def test_stratified_program_is_fully_evaluated():
    text = "e(1,2). e(2,3). e(3,1). e(4,5).\nr(X,Y) :- e(X,Y).\nr(X,Z) :- r(X,Y), e(Y,Z).\n" \
           "un(X,Y) :- e(X,Z), e(W,Y), not r(X,Y).\n"
    g, status = intelligent_ground(parse_program(text))
    assert not g.rules and not g.weak_constraints
    assert Atom("r", (1, 1)) in g.facts and Atom("un", (4, 1)) in g.facts
    assert Atom("un", (1, 2)) not in g.facts


def test_builtins():
    assert eval_builtin(Atom("+", (5, 2, 3)), 10)
    assert not eval_builtin(Atom("+", (12, 7, 5)), 10)
    assert eval_builtin(Atom("<", (1, "a")), 10)
    g = grounded(P.fastfood_instance([3, 7]) + P.FASTFOOD.split("\n", 4)[-1])
    assert Atom("distance", (7, 3, 4)) in g.facts


def test_dedup_shares_equal_sets():
    base = "d(1,a) v e. d(7,b) v e. d(12,c) v e.\n"
    g = grounded(base + ":- 10 <= #max{V: d(V,X)}.\n:- #min{Y: d(Y,Z)} <= 5.\n")
    assert g.stats["set_occurrences"] == 2 and g.stats["sets_stored"] == 1
    n = 5
    facts = " ".join(f"p({i}) v f." for i in range(n))
    g = grounded(base + facts + "\n:- p(T), 10 <= #max{V: d(V,X)}.\n:- p(T), #min{Y: d(Y,Z)} <= 5.\n")
    assert g.stats["set_occurrences"] == 2 * n and g.stats["sets_stored"] == 1
    off = grounded(base + facts + "\n:- p(T), 10 <= #max{V: d(V,X)}.\n", dedup=False)
    assert off.stats["sets_stored"] == off.stats["set_occurrences"] == n


def test_distinct_sets_are_untouched():
    g = grounded("a v b.\n:- #count{<1:a>} = 1.\n:- #count{<1:b>} = 1.\n")
    assert g.stats["sets_stored"] == g.stats["set_occurrences"] == 2


def test_grounding_cap():
    text = "n(1..0).".replace("n(1..0).", " ".join(f"n({i})." for i in range(30)))
    text += "\np(X,Y,Z) v q(X,Y,Z) :- n(X), n(Y), n(Z).\n"
    with pytest.raises(GroundingError) as exc:
        grounded(text, cap=1000)
    assert exc.value.report["cap"] == 1000


def test_symbolic_guard_is_a_runtime_error():
    with pytest.raises(GroundingError):
        grounded("g(a). p(1) v p(2).\n:- g(X), #count{Y: p(Y)} > X.\n")


def test_no_false_atom_survives():
    for seed in range(30):
        prog = parse_program(random_ground_program(random.Random(seed)))
        g, status = intelligent_ground(prog)
        false = {a for a, s in status.items() if s == FALSE}
        assert not (g.atoms() & false)


def _naive_rules_without_builtins(prog):
    return {(r.head, frozenset(r.body)) for r in naive_ground(prog).rules}


@pytest.mark.parametrize("text", [
    "e(1,2). e(2,3). r(X,Y) :- e(X,Y). r(X,Z) :- r(X,Y), e(Y,Z), not s(X).\ns(X) v t(X) :- e(X,Y).",
    "a(1) v a(2). b(X) :- a(X), not c(X). c(X) v d(X) :- b(X).",
])
def test_intelligent_rules_extend_to_naive_rules(text):
    prog = parse_program(text)
    g = grounded(text)
    naive = _naive_rules_without_builtins(prog)
    for r in g.rules:
        assert any(r.head == h and frozenset(r.body) <= body for h, body in naive), str(r)


@pytest.mark.parametrize("seed", range(40))
def test_intelligent_equals_naive(seed):
    prog = parse_program(random_ground_program(random.Random(1000 + seed)))
    naive = naive_ground(prog)
    smart, _ = intelligent_ground(prog)
    assert shown(map(visible, oracle_answer_sets(naive))) == \
        shown(map(visible, oracle_answer_sets(unfold_aux(smart))))


@pytest.mark.parametrize("text", [
    P.P4, "a(1) v a(2). a(3) v b. p :- #count{X: a(X), not b} >= 2.",
    "q(1). q(2). r(1) v r(2). s(X) :- q(X), #sum{Y: r(Y), not t(X,Y)} < 2.\nt(1,2) v u.",
])
def test_standardize_preserves_answer_sets(text):
    prog = parse_program(text)
    plain = naive_ground(prog, standardized=True)
    std = naive_ground(standardize(prog), standardized=True)
    assert any(a.is_aux for a in std.atoms()) or text == P.P4
    assert shown(map(visible, oracle_answer_sets(plain))) == \
        shown(map(visible, oracle_answer_sets(std)))


def test_deterministic_grounding():
    text = P.FASTFOOD + P.fastfood_instance([1, 3, 6, 10], k=2)
    assert str(grounded(text)) == str(grounded(text))
