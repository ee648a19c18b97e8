"""Worked programs and instance generators used by tests and demos."""

from __future__ import annotations

import random

P1 = """\
q(1) v p(2,2).
q(2) v p(2,1).
t(X) :- q(X), #sum{Y: p(X,Y)} > 1.
"""

P2 = """\
a v b v c.
:- a.
"""

P3 = """\
a v b v c.
:- a.
b :- c.
c :- b.
"""

P4 = """\
d(1).
a v b :- c.
b :- not a, not c, #count{Y: d(Y)} > 0.
a v c :- not b, #sum{Y: d(Y)} > 1.
"""

P5 = """\
a v b.
b v c.
d v nd :- a, c.
:~ #sum{<4:b>} > 3. [1:2]
:~ a, nd. [4:1]
:~ c, d. [3:1]
"""

STRATIFIED = """\
q(X) :- p(X), #count{Y: a(Y,X), b(X)} <= 2.
p(X) :- q(X), b(X).
"""

UNSTRATIFIED = STRATIFIED + "b(X) :- p(X).\n"

SAFETY = """\
p(X) :- q(X,Y,V), Y < #max{Z: r(Z), not a(Z,V)}.
p(X) :- q(X,Y,V), Y < #sum{Z: not a(Z,S)}.
p(X) :- q(X,Y,V), T < #min{Z: r(Z), not a(Z,V)}.
"""

# ground program whose propagation alone determines the answer set
PROPAGATION = """\
a(1) v b(1).
a(2) v b(2).
:- #sum{<1:a(1)>, <2:a(2)>} < 3.
cs :- #count{<1:a(1)>, <2:a(2)>} >= 2.
c(1) :- cs.
c(2) v c(3) :- cs.
:- c(1), d(1).
d(2) :- #min{<1:c(1)>, <2:c(2)>, <3:c(3)>} < 2.
d(1) :- #max{<1:c(1)>, <2:c(2)>, <3:c(3)>} >= 3.
"""

# the interpretation used to illustrate aggregate valuation
VALUATION_INTERPRETATION = ["f(1)", "g(1,2)", "g(1,3)", "g(1,4)", "g(2,4)", "h(2)", "h(3)", "h(4)"]
VALUATION_ATOMS = [
    ("#count{X: g(X,Y)} > 2", False),
    ("#count{X,Y: g(X,Y)} > 2", True),
    ("23 < #times{Y: f(X), g(X,Y)} <= 24", True),
    ("#sum{A: g(A,B), h(B)} <= 3", True),
    ("#sum{A,B: g(A,B), h(B)} <= 3", False),
    ("#min{X: f(X), g(X)} >= 2", False),
]

TEAM_BUILDING = """\
in(I) v out(I) :- emp(I,Sx,Sk,Sa).
:- nEmp(N), not #count{I: in(I)} = N.
:- nSkill(M), not #count{Sk: emp(I,Sx,Sk,Sa), in(I)} >= M.
:- budget(B), not #sum{Sa,I: emp(I,Sx,Sk,Sa), in(I)} <= B.
:- maxSal(M), not #max{Sa: emp(I,Sx,Sk,Sa), in(I)} <= M.
:- women(W), not #count{I: emp(I,f,Sk,Sa), in(I)} >= W.
"""

SEATING = """\
at(P,T) v not_at(P,T) :- person(P), table(T).
:- table(T), nChairs(C), not #count{P: at(P,T)} <= C.
:- person(P), not #count{T: at(P,T)} = 1.
:- like(P1,P2), at(P1,T), not at(P2,T).
:- dislike(P1,P2), at(P1,T), at(P2,T).
"""

# the one-table-per-person requirement without the aggregate
SEATING_REWRITTEN = """\
at(P,T) v not_at(P,T) :- person(P), table(T).
:- table(T), nChairs(C), not #count{P: at(P,T)} <= C.
:- person(P), at(P,T), at(P,T1), T != T1.
seated(P) :- at(P,T).
:- person(P), not seated(P).
:- like(P1,P2), at(P1,T), not at(P2,T).
:- dislike(P1,P2), at(P1,T), at(P2,T).
"""

SEATING_AGGREGATE_CONSTRAINT = ":- person(P), not #count{T: at(P,T)} = 1."
SEATING_REWRITTEN_RULES = (
    ":- person(P), at(P,T), at(P,T1), T!=T1.",
    "seated(P) :- at(P,T).",
    ":- person(P), not seated(P).",
)

FASTFOOD = """\
depot(Res,D) v notdepot(Res,D) :- restaurant(Res,D).
:- nDepots(K), not #count{Dep,D: depot(Dep,D)} = K.
serves(Dep,Res,D) :- restaurant(Res,ResD), depot(Dep,DepD), distance(ResD,DepD,D),
    #min{Y: depot(Dep1,DepD1), distance(DepD1,ResD,Y)} = D.
:~ serves(Dep,Res,D). [D:]
distance(X,Y,D) :- restaurant(Res1,X), restaurant(Res2,Y), X > Y, X = Y + D.
distance(X,Y,D) :- restaurant(Res1,X), restaurant(Res2,Y), X <= Y, Y = X + D.
"""

FASTFOOD_CHECK = """\
altdepot(Res,D) v notaltdepot(Res,D) :- restaurant(Res,D).
:- #count{Dep,D: depot(Dep,D)} = N, not #count{Dep,D: altdepot(Dep,D)} = N.
serves(Dep,Res,D) :- restaurant(Res,ResD), depot(Dep,DepD), distance(ResD,DepD,D),
    #min{Y: depot(Dep1,DepD1), distance(DepD1,ResD,Y)} = D.
altserves(Dep,Res,D) :- restaurant(Res,ResD), altdepot(Dep,DepD), distance(ResD,DepD,D),
    #min{Y: altdepot(Dep1,DepD1), distance(DepD1,ResD,Y)} = D.
:- #sum{D,Res: serves(Dep,Res,D)} = Cost, #sum{D,Res: altserves(Dep,Res,D)} >= Cost.
distance(X,Y,D) :- restaurant(Res1,X), restaurant(Res2,Y), X > Y, X = Y + D.
distance(X,Y,D) :- restaurant(Res1,X), restaurant(Res2,Y), X <= Y, Y = X + D.
"""

INPUT_CARDINALITY = """\
p(1). p(2).
cardinality_p(C) :- #count{X: p(X)} = C.
"""

TOTAL_SALARY = """\
employee(1,ann,1000). employee(2,bob,1000). employee(3,cid,1500).
total(T) :- T = #sum{S,I: employee(I,N,S)}.
"""


def team_building_instance(employees, n_emp, n_skill, budget, max_sal, women) -> str:
    """``employees`` is a list of ``(id, sex, skill, salary)`` tuples."""
    facts = [f"emp({i},{sx},{sk},{sa})." for i, sx, sk, sa in employees]
    facts += [f"nEmp({n_emp}).", f"nSkill({n_skill}).", f"budget({budget}).",
              f"maxSal({max_sal}).", f"women({women})."]
    return "\n".join(facts) + "\n"


def seating_instance(guests: int, tables: int, chairs: int, like=(), dislike=()) -> str:
    facts = [f"person(p{i})." for i in range(1, guests + 1)]
    facts += [f"table({t})." for t in range(1, tables + 1)]
    facts.append(f"nChairs({chairs}).")
    facts += [f"like(p{a},p{b})." for a, b in like]
    facts += [f"dislike(p{a},p{b})." for a, b in dislike]
    return "\n".join(facts) + "\n"


def fastfood_instance(positions, k=None, depots=None) -> str:
    """Restaurants ``r1..rn`` at ``positions``; either ``k`` or fixed ``depots``."""
    facts = [f"restaurant(r{i},{d})." for i, d in enumerate(positions, 1)]
    if k is not None:
        facts.append(f"nDepots({k}).")
    for i in depots or ():
        facts.append(f"depot(r{i},{positions[i - 1]}).")
    return "\n".join(facts) + "\n"


def fastfood_cost(positions, chosen) -> int:
    """Total distance from every restaurant to its closest depot (0 with no depots)."""
    if not chosen:
        return 0
    return sum(min(abs(p - positions[c]) for c in chosen) for p in positions)


def random_team(rng: random.Random, n: int):
    emps = []
    for i in range(1, n + 1):
        emps.append((i, rng.choice("fm"), rng.choice(["sk1", "sk2", "sk3"]), rng.choice([1, 2, 3])))
    return team_building_instance(emps, rng.randint(1, n), rng.randint(1, 2),
                                  rng.randint(2, 6), rng.randint(1, 3), rng.randint(0, 1))
