"""Syntactic objects of DLP^A programs and their canonical printer.

Terms are either :class:`Variable` instances or constants.  Constants are
plain Python values: ``int`` for natural numbers and ``str`` for symbolic
constants.  Keeping constants unboxed makes ground atoms cheap to hash and
compare, which matters once grounding produces thousands of them.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Union

VARIABLE_RE = re.compile(r"[A-Z][A-Za-z0-9_]*\Z")
SYMBOL_RE = re.compile(r"[a-z][A-Za-z0-9_]*\Z")

COMPARISONS = frozenset({"=", "!=", "<", "<=", ">", ">="})
ARITHMETIC = frozenset({"+", "*"})
BUILTINS = COMPARISONS | ARITHMETIC
AGGREGATE_FUNCTIONS = ("count", "sum", "times", "min", "max")
AUX_PREFIX = "#aux"


@dataclass(frozen=True, slots=True)
class Variable:
    name: str

    def __post_init__(self):
        if not VARIABLE_RE.match(self.name):
            raise ValueError(f"invalid variable name {self.name!r}")

    def __str__(self):
        return self.name


class _Infinity:
    """The ``+inf`` guard.  Compares greater than every natural number."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    __str__ = __repr__

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()

Constant = Union[int, str]
Term = Union[Variable, int, str]


def is_constant(t) -> bool:
    return isinstance(t, (int, str)) and not isinstance(t, bool)


def is_natural(t) -> bool:
    return isinstance(t, int) and not isinstance(t, bool) and t >= 0


def constant_key(c):
    """Total order on constants: naturals first (numerically), then symbols."""
    if isinstance(c, int):
        return (0, c, "")
    if isinstance(c, str):
        return (1, 0, c)
    if isinstance(c, Variable):
        return (2, 0, c.name)
    return (3, 0, str(c))


def term_str(t) -> str:
    return str(t)


@dataclass(frozen=True, slots=True)
class Atom:
    """A standard atom ``p(t1,...,tn)``.

    Built-in relations use the operator as predicate name.  Arithmetic
    atoms store the result first: ``X = Y + D`` is ``Atom("+", (X, Y, D))``.
    """

    predicate: str
    args: tuple = ()

    @property
    def arity(self) -> int:
        return len(self.args)

    @property
    def is_builtin(self) -> bool:
        return self.predicate in BUILTINS

    @property
    def is_aux(self) -> bool:
        return self.predicate.startswith(AUX_PREFIX)

    def is_ground(self) -> bool:
        return not any(isinstance(a, Variable) for a in self.args)

    def variables(self) -> set:
        return {a for a in self.args if isinstance(a, Variable)}

    def substitute(self, subst) -> "Atom":
        return Atom(self.predicate, tuple(subst.get(a, a) if isinstance(a, Variable) else a
                                          for a in self.args))

    def sort_key(self):
        return (self.predicate, len(self.args), tuple(constant_key(a) for a in self.args))

    def __str__(self):
        p, a = self.predicate, self.args
        if p in COMPARISONS:
            return f"{a[0]}{p}{a[1]}"
        if p in ARITHMETIC:
            return f"{a[0]}={a[1]}{p}{a[2]}"
        if not a:
            return p
        return f"{p}({','.join(map(str, a))})"


@dataclass(frozen=True, slots=True)
class Literal:
    atom: Union[Atom, "AggregateAtom"]
    positive: bool = True

    def is_ground(self) -> bool:
        return self.atom.is_ground()

    @property
    def is_aggregate(self) -> bool:
        return isinstance(self.atom, AggregateAtom)

    def variables(self) -> set:
        return self.atom.variables()

    def substitute(self, subst) -> "Literal":
        return Literal(self.atom.substitute(subst), self.positive)

    def sort_key(self):
        if isinstance(self.atom, Atom):
            return (0, not self.positive, self.atom.sort_key())
        return (1, not self.positive, str(self.atom))

    def __str__(self):
        return str(self.atom) if self.positive else f"not {self.atom}"


def conj_str(conj) -> str:
    return ", ".join(map(str, conj))


@dataclass(frozen=True, slots=True)
class SymbolicSet:
    """``{Vars : Conj}``."""

    variables: tuple
    conj: tuple

    def is_ground(self) -> bool:
        return False

    def all_variables(self) -> set:
        out = set(self.variables)
        for lit in self.conj:
            out |= lit.variables()
        return out

    def unbound_set_variables(self) -> set:
        """Variables of ``Vars`` that do not occur in ``Conj``."""
        inner = set()
        for lit in self.conj:
            inner |= lit.variables()
        return set(self.variables) - inner

    def substitute(self, subst) -> "SymbolicSet":
        # only global variables may be substituted; the caller guarantees
        # ``subst`` never binds a local variable
        return SymbolicSet(self.variables, tuple(l.substitute(subst) for l in self.conj))

    def __str__(self):
        return "{" + ",".join(map(str, self.variables)) + ":" + conj_str(self.conj) + "}"


@dataclass(frozen=True, slots=True)
class SetElement:
    terms: tuple
    conj: tuple = ()

    def sort_key(self):
        return (tuple(constant_key(t) for t in self.terms),
                tuple(l.sort_key() for l in self.conj))

    def __str__(self):
        return "<" + ",".join(map(str, self.terms)) + ":" + conj_str(self.conj) + ">"


@dataclass(frozen=True, slots=True)
class GroundSet:
    """A set of ``<tuple : Conj>`` pairs, kept sorted and duplicate free."""

    elements: tuple = ()

    def __post_init__(self):
        elems = sorted(set(self.elements), key=SetElement.sort_key)
        widths = {len(e.terms) for e in elems}
        if len(widths) > 1:
            raise ValueError("all tuples of a ground set must have equal length")
        object.__setattr__(self, "elements", tuple(elems))

    @classmethod
    def of(cls, pairs: Iterable) -> "GroundSet":
        return cls(tuple(p if isinstance(p, SetElement) else SetElement(tuple(p[0]), tuple(p[1]))
                         for p in pairs))

    def is_ground(self) -> bool:
        return True

    def all_variables(self) -> set:
        return set()

    def substitute(self, subst) -> "GroundSet":
        return self

    def atoms(self) -> set:
        return {l.atom for e in self.elements for l in e.conj}

    def __len__(self):
        return len(self.elements)

    def __str__(self):
        return "{" + ", ".join(map(str, self.elements)) + "}"


_FLIP = {">": "<", ">=": "<="}


@dataclass(frozen=True, slots=True)
class AggregateAtom:
    """``Lg op1 f(S) op2 Rg``.

    Both guards are always present: a missing left guard is ``0 <=`` and a
    missing right guard is ``<= INF``.  ``lower_op`` reads "lower op value"
    and ``upper_op`` reads "value op upper"; both range over ``<``, ``<=``
    and ``=``.
    """

    function: str
    set: Union[SymbolicSet, GroundSet]
    lower: object = 0
    lower_op: str = "<="
    upper: object = INF
    upper_op: str = "<="

    def __post_init__(self):
        if self.function not in AGGREGATE_FUNCTIONS:
            raise ValueError(f"unknown aggregate function {self.function!r}")
        for op in (self.lower_op, self.upper_op):
            if op not in ("<", "<=", "="):
                raise ValueError(f"guard operator {op!r} not normalized")

    @property
    def normalized(self) -> bool:
        return (self.lower_op == "<=" and self.upper_op == "<="
                and is_natural(self.lower) and (self.upper is INF or is_natural(self.upper)))

    def guard_variables(self) -> set:
        return {g for g in (self.lower, self.upper) if isinstance(g, Variable)}

    def is_ground(self) -> bool:
        return self.set.is_ground() and not self.guard_variables()

    def variables(self) -> set:
        return self.guard_variables() | self.set.all_variables()

    def substitute(self, subst) -> "AggregateAtom":
        def g(t):
            return subst.get(t, t) if isinstance(t, Variable) else t
        return AggregateAtom(self.function, self.set.substitute(subst),
                             g(self.lower), self.lower_op, g(self.upper), self.upper_op)

    def with_set(self, s) -> "AggregateAtom":
        return AggregateAtom(self.function, s, self.lower, self.lower_op, self.upper, self.upper_op)

    def __str__(self):
        core = f"#{self.function}{self.set}"
        left = not (self.lower == 0 and self.lower_op == "<=")
        right = self.upper is not INF
        if not left and not right:
            left = True
        out = core
        if left:
            out = f"{self.lower}{self.lower_op}{out}"
        if right:
            out = f"{out}{self.upper_op}{self.upper}"
        return out


def make_aggregate(function, aggset, left=None, right=None) -> AggregateAtom:
    """Build an aggregate atom from the guards as written in the source.

    ``left`` is ``(term, op)`` for ``term op f(S)`` and ``right`` is
    ``(op, term)`` for ``f(S) op term``.  Operators ``>``/``>=`` are moved to
    the other side so the stored form only uses ``<``, ``<=`` and ``=``.
    Raises ``ValueError`` on the guard combinations the language forbids.
    """
    if left is None and right is None:
        raise ValueError("aggregate atom without guards")
    if left is not None and right is not None:
        lop, rop = left[1], right[0]
        if lop == "=" or rop == "=":
            raise ValueError("'=' cannot be combined with a second guard")
        if (lop in ("<", "<=")) != (rop in ("<", "<=")):
            raise ValueError("guards must both be lower-or-equal style or both greater style")
    lower, lower_op, upper, upper_op = 0, "<=", INF, "<="
    slots = {}
    if left is not None:
        term, op = left
        if op in _FLIP:
            slots["upper"] = (term, _FLIP[op])       # Lg > f  ==  f < Lg
        else:
            slots["lower"] = (term, op)
    if right is not None:
        op, term = right
        if op in _FLIP:
            slots["lower"] = (term, _FLIP[op])       # f > Rg  ==  Rg < f
        else:
            slots["upper"] = (term, op)
    if "lower" in slots:
        lower, lower_op = slots["lower"]
    if "upper" in slots:
        upper, upper_op = slots["upper"]
    return AggregateAtom(function, aggset, lower, lower_op, upper, upper_op)


def _body_str(body) -> str:
    return conj_str(body)


@dataclass(frozen=True, slots=True)
class Rule:
    head: tuple = ()
    body: tuple = ()
    line: int = field(default=0, compare=False)

    def __post_init__(self):
        if not self.head and not self.body:
            raise ValueError("a rule needs a head or a body")
        for a in self.head:
            if not isinstance(a, Atom) or a.is_builtin:
                raise ValueError(f"invalid head atom {a}")

    @property
    def is_constraint(self) -> bool:
        return not self.head

    @property
    def is_fact(self) -> bool:
        return len(self.head) == 1 and not self.body

    @property
    def is_disjunctive(self) -> bool:
        return len(self.head) > 1

    def positive_body(self):
        return tuple(l for l in self.body if l.positive)

    def negative_body(self):
        return tuple(l for l in self.body if not l.positive)

    def aggregates(self):
        return tuple(l.atom for l in self.body if l.is_aggregate)

    def variables(self) -> set:
        out = set()
        for a in self.head:
            out |= a.variables()
        for l in self.body:
            out |= l.variables()
        return out

    def is_ground(self) -> bool:
        return all(a.is_ground() for a in self.head) and all(l.is_ground() for l in self.body)

    def __str__(self):
        head = " v ".join(map(str, self.head))
        if not self.body:
            return f"{head}."
        if not self.head:
            return f":- {_body_str(self.body)}."
        return f"{head} :- {_body_str(self.body)}."


@dataclass(frozen=True, slots=True)
class WeakConstraint:
    body: tuple
    weight: object = 1
    level: object = 1
    line: int = field(default=0, compare=False)

    def variables(self) -> set:
        out = {t for t in (self.weight, self.level) if isinstance(t, Variable)}
        for l in self.body:
            out |= l.variables()
        return out

    def is_ground(self) -> bool:
        return all(l.is_ground() for l in self.body) and is_constant(self.weight) \
            and is_constant(self.level)

    def aggregates(self):
        return tuple(l.atom for l in self.body if l.is_aggregate)

    def __str__(self):
        return f":~ {_body_str(self.body)}. [{self.weight}:{self.level}]"


@dataclass(frozen=True)
class Program:
    rules: tuple = ()
    weak_constraints: tuple = ()

    def statements(self) -> Iterator:
        yield from self.rules
        yield from self.weak_constraints

    def predicates(self) -> dict:
        """Map of every non-built-in predicate name to its arity."""
        out = {}
        for atom in iter_atoms(self):
            if not atom.is_builtin:
                out.setdefault(atom.predicate, atom.arity)
        return out

    def herbrand_universe(self):
        """Return ``(U_P, U_P^N)``: all constants, and the naturals among them."""
        consts = set()
        for st in self.statements():
            consts |= _statement_constants(st)
        return consts, {c for c in consts if isinstance(c, int)}

    def herbrand_base(self) -> Iterator[Atom]:
        """Enumerate ``B_P`` in canonical order."""
        consts = sorted(self.herbrand_universe()[0], key=constant_key)
        for pred, arity in sorted(self.predicates().items()):
            for args in itertools.product(consts, repeat=arity):
                yield Atom(pred, args)

    def __add__(self, other: "Program") -> "Program":
        return Program(self.rules + other.rules, self.weak_constraints + other.weak_constraints)

    def __str__(self):
        return "\n".join(str(s) for s in self.statements()) + ("\n" if self.rules or self.weak_constraints else "")


def _term_constants(terms) -> set:
    return {t for t in terms if is_constant(t)}


def _literal_constants(lit: Literal) -> set:
    atom = lit.atom
    if isinstance(atom, Atom):
        return _term_constants(atom.args)
    out = set()
    if not (atom.lower == 0 and atom.lower_op == "<="):  # defaulted guard
        out |= _term_constants((atom.lower,))
    if atom.upper is not INF:
        out |= _term_constants((atom.upper,))
    if isinstance(atom.set, SymbolicSet):
        for l in atom.set.conj:
            out |= _literal_constants(l)
    else:
        for e in atom.set.elements:
            out |= _term_constants(e.terms)
            for l in e.conj:
                out |= _literal_constants(l)
    return out


def _statement_constants(st) -> set:
    out = set()
    if isinstance(st, Rule):
        for a in st.head:
            out |= _term_constants(a.args)
    for l in st.body:
        out |= _literal_constants(l)
    return out


def iter_atoms(program: Program) -> Iterator[Atom]:
    """Every standard atom of the program, nested ones included."""
    for st in program.statements():
        if isinstance(st, Rule):
            yield from st.head
        for lit in st.body:
            yield from literal_atoms(lit)


def literal_atoms(lit: Literal) -> Iterator[Atom]:
    if isinstance(lit.atom, Atom):
        yield lit.atom
        return
    s = lit.atom.set
    if isinstance(s, SymbolicSet):
        for l in s.conj:
            yield l.atom
    else:
        for e in s.elements:
            for l in e.conj:
                yield l.atom


def truth_of_conjunction(conj, interpretation) -> bool:
    """Truth of a ground conjunction of standard literals w.r.t. a set of true atoms."""
    for lit in conj:
        if not isinstance(lit.atom, Atom) or not lit.atom.is_ground():
            raise ValueError(f"not a ground standard literal: {lit}")
        if (lit.atom in interpretation) != lit.positive:
            return False
    return True


def format_interpretation(atoms, hide_aux=True) -> str:
    shown = sorted((a for a in atoms if not (hide_aux and a.is_aux)), key=Atom.sort_key)
    return "{" + ", ".join(map(str, shown)) + "}"
