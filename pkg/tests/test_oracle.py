import random

import pytest

from dlpa.grounder import naive_ground
from dlpa.model import GroundSet
from dlpa.oracle import (MAX_ATOMS, OracleTooLarge, oracle_answer_sets, oracle_cost,
                         oracle_optimal, random_ground_program, unfold_aux)
from dlpa.parser import parse_program
from dlpa.analysis import check_aggregate_stratification, check_safety
from dlpa.solver import enumerate_answer_sets
from dlpa import programs as P

from conftest import grounded, shown, visible


def test_p2():
    assert shown(oracle_answer_sets(grounded(P.P2, "naive"))) == ["{b}", "{c}"]


def test_p4():
    assert shown(oracle_answer_sets(grounded(P.P4, "naive"))) == ["{b, d(1)}"]


def test_self_support_is_not_enough():
    assert oracle_answer_sets(grounded("a :- a.", "naive")) == [frozenset()]


def test_p5_optimum():
    [(best, h)] = oracle_optimal(grounded(P.P5))
    assert shown([best]) == ["{a, c, d}"] and h == 3


def test_no_weak_constraints_means_zero_cost():
    g = grounded(P.P2, "naive")
    assert [h for _, h in oracle_optimal(g)] == [0, 0]
    assert all(oracle_cost(g, a) == 0 for a in oracle_answer_sets(g))


def test_cap_is_enforced():
    text = " ".join(f"a{i} v b{i}." for i in range(MAX_ATOMS))
    with pytest.raises(OracleTooLarge):
        oracle_answer_sets(grounded(text, "naive"))


def _shuffled(text, rng):
    prog = parse_program(text)
    rules = list(prog.rules)
    rng.shuffle(rules)
    shuffled = []
    for r in rules:
        body = list(r.body)
        rng.shuffle(body)
        new_body = []
        for l in body:
            if l.is_aggregate and isinstance(l.atom.set, GroundSet):
                elems = list(l.atom.set.elements)
                rng.shuffle(elems)
                l = type(l)(l.atom.with_set(GroundSet(tuple(elems))), l.positive)
            new_body.append(l)
        shuffled.append(type(r)(tuple(reversed(r.head)), tuple(new_body)))
    return type(prog)(tuple(shuffled), prog.weak_constraints)


@pytest.mark.parametrize("seed", range(20))
def test_order_insensitivity(seed):
    rng = random.Random(seed)
    text = random_ground_program(rng)
    a = naive_ground(parse_program(text))
    b = naive_ground(_shuffled(text, rng))
    assert shown(oracle_answer_sets(a)) == shown(oracle_answer_sets(b))
    assert [h for _, h in oracle_optimal(a)] == [h for _, h in oracle_optimal(b)]


@pytest.mark.parametrize("seed", range(30))
def test_generator_stays_in_language(seed):
    prog = parse_program(random_ground_program(random.Random(seed)))
    assert check_aggregate_stratification(prog).ok
    assert check_safety(prog).safe
    g = naive_ground(prog)
    assert len({a for a in g.atoms() if not a.is_aux}) <= 12


def test_unfolding_keeps_answer_sets():
    text = P.TEAM_BUILDING + P.random_team(random.Random(1), 3)
    g = grounded(text)
    small = unfold_aux(g)
    assert not any(a.is_aux for a in small.atoms())
    assert shown(map(visible, oracle_answer_sets(small))) == \
        shown(map(visible, enumerate_answer_sets(g)))
