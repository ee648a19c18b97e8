"""Parse, validate, ground and solve in one call."""

from __future__ import annotations

from .analysis import validate
from .grounder import DEFAULT_CAP, DEFAULT_MAXINT, GroundProgram, ground
from .model import Program
from .parser import parse_program
from .solver import optimal_answer_sets


def load(text: str) -> Program:
    """Parse program text and reject unsafe or aggregate-unstratified input."""
    program = parse_program(text)
    validate(program)
    return program


def ground_text(text: str, mode: str = "intelligent", maxint: int = DEFAULT_MAXINT,
                dedup: bool = True, cap: int = DEFAULT_CAP) -> GroundProgram:
    return ground(load(text), mode=mode, maxint=maxint, dedup=dedup, cap=cap)


def answer_sets(text: str, limit: int = 0, mode: str = "intelligent",
                maxint: int = DEFAULT_MAXINT, dedup: bool = True, hide_aux: bool = True):
    """Answer sets of ``text`` as frozensets; only optimal ones when weak constraints exist."""
    g = ground_text(text, mode=mode, maxint=maxint, dedup=dedup)
    out = []
    for atoms, _ in optimal_answer_sets(g, limit):
        out.append(frozenset(a for a in atoms if not (hide_aux and a.is_aux)))
    return out


__all__ = ["load", "ground_text", "answer_sets"]
