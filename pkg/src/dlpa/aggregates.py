"""Valuation of ground sets, aggregate functions and aggregate atoms."""

from __future__ import annotations

import math

from .model import INF, AggregateAtom, Atom, GroundSet, constant_key, is_natural


class GuardError(ValueError):
    """A guard of a ground aggregate atom is not a natural number."""


class _Bottom:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "BOTTOM"

    def __reduce__(self):
        return (_Bottom, ())


#: value of an aggregate function applied outside its domain
BOTTOM = _Bottom()


class Multiset(tuple):
    """Sorted tuple of constants; equality ignores the original order."""

    def __new__(cls, items=()):
        return super().__new__(cls, sorted(items, key=constant_key))

    def __repr__(self):
        return "[" + ", ".join(map(str, self)) + "]"


def true_tuples(s: GroundSet, interpretation) -> set:
    """``S_I``: tuples with at least one conjunction true in the interpretation."""
    out = set()
    for e in s.elements:
        if e.terms in out:
            continue
        if all((l.atom in interpretation) == l.positive for l in e.conj):
            out.add(e.terms)
    return out


def valuate_set(s: GroundSet, interpretation) -> Multiset:
    """``I(S)``: projection of ``S_I`` on the first constant of each tuple."""
    return Multiset(t[0] for t in true_tuples(s, interpretation))


def apply_function(function: str, values) -> object:
    """Apply an aggregate function to a multiset, returning ``BOTTOM`` off-domain."""
    values = list(values)
    if function == "count":
        return len(values)
    if not all(is_natural(v) for v in values):
        return BOTTOM
    if function == "sum":
        return sum(values)
    if function == "times":
        return math.prod(values)
    if not values:
        return BOTTOM
    if function == "min":
        return min(values)
    if function == "max":
        return max(values)
    raise ValueError(f"unknown aggregate function {function!r}")


def guard_range(atom: AggregateAtom, strict: bool = True):
    """Inclusive natural-number range ``(lo, hi)`` accepted by the guards.

    ``hi`` may be ``INF``.  An empty range comes back with ``lo > hi``.
    With ``strict`` a non-numeric guard raises :class:`GuardError`;
    otherwise it is compared under the built-in constant order, where every
    number precedes every symbol.
    """
    lo, hi = 0, INF

    def bad(g):
        if strict:
            raise GuardError(f"guard {g} of {atom} is not a natural number")

    g, op = atom.lower, atom.lower_op
    if is_natural(g):
        lo = g + 1 if op == "<" else g
        if op == "=":
            hi = g
    else:
        bad(g)
        return 1, 0                      # symbol <= value never holds
    g, op = atom.upper, atom.upper_op
    if g is INF:
        if op == "=":
            return 1, 0
        up = INF
    elif is_natural(g):
        up = g - 1 if op == "<" else g
        if op == "=":
            lo = max(lo, g)
    else:
        bad(g)
        if op == "=":
            return 1, 0
        up = INF                         # value < symbol always holds
    if hi is INF:
        hi = up
    elif up is not INF:
        hi = min(hi, up)
    return lo, hi


def in_range(value, lo, hi) -> bool:
    return lo <= value and (hi is INF or value <= hi)


def eval_aggregate_atom(atom: AggregateAtom, interpretation) -> bool:
    """Truth of a ground aggregate atom: value defined and within both guards."""
    if not isinstance(atom.set, GroundSet):
        raise ValueError(f"aggregate atom is not ground: {atom}")
    lo, hi = guard_range(atom)
    value = apply_function(atom.function, valuate_set(atom.set, interpretation))
    if value is BOTTOM:
        return False
    return in_range(value, lo, hi)


def eval_literal(literal, interpretation) -> bool:
    """Truth of any ground literal, standard or aggregate."""
    atom = literal.atom
    if isinstance(atom, Atom):
        truth = atom in interpretation
    else:
        truth = eval_aggregate_atom(atom, interpretation)
    return truth == literal.positive
