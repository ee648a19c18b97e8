"""Command-line driver: ``dlpa [flags] FILE...``.

Exit status is 0 when at least one (optimal) answer set exists, 1 when
there is none, and 2 on usage, syntax, analysis or grounding errors.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field

from .analysis import AnalysisError, validate
from .grounder import DEFAULT_CAP, DEFAULT_MAXINT, GroundingError, ground
from .model import Atom, format_interpretation
from .oracle import OracleTooLarge, oracle_optimal, unfold_aux
from .parser import ParseError, parse_interpretation, parse_program
from .solver import answer_set_witness, cost_of, optimal_answer_sets

FOUND, NONE, ERROR = 0, 1, 2


@dataclass
class RunConfig:
    input_paths: list
    n: int = 0
    maxint: int = DEFAULT_MAXINT
    filter_predicates: tuple | None = None
    mode: str = "solve"                # solve | ground-only | check | oracle
    check_path: str | None = None
    dedup: bool = True
    stats: bool = False
    tagged: bool = False
    cap: int = DEFAULT_CAP
    out: object = field(default=None, repr=False)     # None: the current sys.stdout
    err: object = field(default=None, repr=False)


class _Sources:
    """Concatenated input files, with line numbers mapped back to files."""

    def __init__(self, paths):
        self.text = ""
        self.spans = []
        line = 1
        for p in paths:
            with open(p, encoding="utf-8") as fh:
                chunk = fh.read()
            if chunk and not chunk.endswith("\n"):
                chunk += "\n"
            n = chunk.count("\n")
            self.spans.append((line, line + n, p))
            self.text += chunk
            line += n

    def locate(self, line):
        for start, end, path in self.spans:
            if start <= line < end:
                return path, line - start + 1
        return (self.spans[-1][2] if self.spans else "<input>"), line


def _emit_diagnostics(cfg, items):
    """``items`` holds ``(kind, path, line, column, message)`` tuples."""
    for kind, path, line, col, msg in items:
        if cfg.tagged:
            print(f"error\t{kind}\t{path}\t{line}\t{col}\t{msg}", file=cfg.err)
        else:
            if line:
                where = f"{path}:{line}:{col}: " if col else f"{path}:{line}: "
            else:
                where = f"{path}: " if path else ""
            print(f"error: {kind}: {where}{msg}", file=cfg.err)


def _project(atoms, preds):
    if preds is None:
        return atoms
    return [a for a in atoms if a.predicate in preds]


def _print_set(cfg, atoms):
    print(format_interpretation(_project(sorted(atoms, key=Atom.sort_key), cfg.filter_predicates)),
          file=cfg.out)


def _print_cost(cfg, cost):
    pairs = " ".join(f"level={lv} weight={w}" for lv, w in cost.per_level)
    print(f"COST {pairs}", file=cfg.out)


def _print_stats(cfg, g):
    s = g.stats
    lines = [
        f"rules={len(g.rules)}",
        f"facts={len(g.facts)}",
        f"weak_constraints={len(g.weak_constraints)}",
        f"atoms={len([a for a in g.atoms() if not a.is_aux])}",
        f"aux_atoms={len([a for a in g.atoms() if a.is_aux])}",
        f"aggregate_atoms={len(g.aggregate_atoms())}",
        f"sets_before_dedup={s.get('set_occurrences', 0)}",
        f"sets_after_dedup={s.get('sets_stored', 0)}",
    ]
    print("% stats: " + " ".join(lines), file=cfg.err)


def run(cfg: RunConfig) -> int:
    cfg.out = cfg.out or sys.stdout
    cfg.err = cfg.err or sys.stderr
    try:
        src = _Sources(cfg.input_paths)
    except OSError as exc:
        _emit_diagnostics(cfg, [("io", exc.filename or "", 0, 0, exc.strerror or str(exc))])
        return ERROR
    try:
        program = parse_program(src.text)
    except ParseError as exc:
        items = []
        for d in exc.diagnostics:
            path, line = src.locate(d.line)
            items.append(("syntax", path, line, d.column, d.message))
        _emit_diagnostics(cfg, items)
        return ERROR
    try:
        validate(program)
    except AnalysisError as exc:
        items = []
        for d in exc.diagnostics:
            path, line = src.locate(d.line) if d.line else ("", 0)
            items.append((d.kind, path, line, 0, d.message))
        _emit_diagnostics(cfg, items)
        return ERROR
    try:
        g = ground(program, mode="intelligent", maxint=cfg.maxint, dedup=cfg.dedup, cap=cfg.cap)
    except GroundingError as exc:
        _emit_diagnostics(cfg, [("grounding", "", 0, 0, str(exc))])
        return ERROR
    for w in g.warnings:
        print(f"warning: {w}", file=cfg.err)
    if cfg.stats:
        _print_stats(cfg, g)

    if cfg.mode == "ground-only":
        print(str(g), end="" if str(g).endswith("\n") else "\n", file=cfg.out)
        return FOUND
    if cfg.mode == "check":
        return _check(cfg, g)
    if cfg.mode == "oracle":
        return _oracle(cfg, g)

    found = 0
    for atoms, cost in optimal_answer_sets(g, cfg.n):
        found += 1
        _print_set(cfg, atoms)
        if g.weak_constraints:
            _print_cost(cfg, cost)
    return FOUND if found else NONE


def _aux_closure(g, x):
    """Complete a user interpretation with the auxiliary atoms it implies."""
    x = set(x) | {a for a in g.facts if a.is_aux}
    changed = True
    while changed:
        changed = False
        for r in g.rules:
            if len(r.head) == 1 and r.head[0].is_aux and r.head[0] not in x:
                if all((l.atom in x) == l.positive for l in r.body):
                    x.add(r.head[0])
                    changed = True
    return frozenset(x)


def _check(cfg, g) -> int:
    try:
        with open(cfg.check_path, encoding="utf-8") as fh:
            interp = parse_interpretation(fh.read())
    except OSError as exc:
        _emit_diagnostics(cfg, [("io", cfg.check_path, 0, 0, exc.strerror or str(exc))])
        return ERROR
    except ParseError as exc:
        _emit_diagnostics(cfg, [("syntax", cfg.check_path, d.line, d.column, d.message)
                                for d in exc.diagnostics])
        return ERROR
    x = _aux_closure(g, interp)
    witness = answer_set_witness(g, x)
    if witness is None:
        print("ANSWER SET", file=cfg.out)
        if g.weak_constraints:
            _print_cost(cfg, cost_of(g, x))
        return FOUND
    print("NOT AN ANSWER SET", file=cfg.out)
    kind, what = witness
    if kind == "unsatisfied":
        print(f"witness: violated rule {what}", file=cfg.out)
    else:
        print(f"witness: smaller model of the reduct {format_interpretation(what)}", file=cfg.out)
    return NONE


def _oracle(cfg, g) -> int:
    small = unfold_aux(g)
    try:
        sets = [s for s, _ in oracle_optimal(small)]
    except OracleTooLarge as exc:
        _emit_diagnostics(cfg, [("oracle", "", 0, 0, str(exc))])
        return ERROR
    if cfg.n:
        sets = sets[:cfg.n]
    for s in sets:
        _print_set(cfg, s)
        if small.weak_constraints:
            _print_cost(cfg, cost_of(small, s))
    return FOUND if sets else NONE


def _parse_count(text, flag, minimum):
    text = text[1:] if text.startswith("=") else text
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{flag} expects an integer, got {text!r}")
    if value < minimum:
        raise argparse.ArgumentTypeError(f"{flag} must be at least {minimum}")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dlpa", description="Disjunctive logic programs with "
                                "aggregates and weak constraints.")
    p.add_argument("files", nargs="+", help="program files, concatenated in order")
    p.add_argument("-n", dest="n", default=0, metavar="=K",
                   type=lambda s: _parse_count(s, "-n", 0),
                   help="stop after K answer sets (0 = all)")
    p.add_argument("--maxint", default=DEFAULT_MAXINT, type=lambda s: _parse_count(s, "--maxint", 1),
                   help="largest integer for arithmetic built-ins")
    p.add_argument("--filter", default=None, help="comma-separated predicates to print")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--ground-only", action="store_true", help="print the ground program")
    mode.add_argument("--oracle", action="store_true", help="enumerate by brute force")
    mode.add_argument("--check", metavar="FILE", help="check whether FILE is an answer set")
    p.add_argument("--no-dedup", action="store_true", help="store every ground set separately")
    p.add_argument("--stats", action="store_true", help="print grounding statistics to stderr")
    p.add_argument("--diagnostics", choices=["tagged"], help="tab-separated diagnostics")
    return p


def config_from_args(argv=None) -> RunConfig:
    a = build_parser().parse_args(argv)
    mode = "ground-only" if a.ground_only else "oracle" if a.oracle else \
        "check" if a.check else "solve"
    preds = tuple(x.strip() for x in a.filter.split(",") if x.strip()) if a.filter else None
    return RunConfig(a.files, n=a.n, maxint=a.maxint, filter_predicates=preds, mode=mode,
                     check_path=a.check, dedup=not a.no_dedup, stats=a.stats,
                     tagged=a.diagnostics == "tagged")


def main(argv=None) -> int:
    try:
        cfg = config_from_args(argv)
    except SystemExit as exc:
        return ERROR if exc.code else 0
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
