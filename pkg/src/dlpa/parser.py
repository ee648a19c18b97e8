"""Recursive-descent parser for DLP^A program text.

The accepted token set is documented in ``docs/language.md``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .model import (
    AGGREGATE_FUNCTIONS,
    Atom,
    GroundSet,
    Literal,
    Program,
    Rule,
    SetElement,
    SymbolicSet,
    Variable,
    WeakConstraint,
    make_aggregate,
)


@dataclass(frozen=True)
class ParseDiagnostic:
    severity: str
    line: int
    column: int
    message: str

    def __str__(self):
        return f"{self.line}:{self.column}: {self.severity}: {self.message}"


class ParseError(Exception):
    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("\n".join(map(str, self.diagnostics)))


_TOKEN_SPEC = [
    ("WS", r"[ \t\r\n]+"),
    ("COMMENT", r"%[^\n]*"),
    ("IF", r":-"),
    ("WEAK", r":~"),
    ("AGG", r"#(?:count|sum|times|min|max)\b"),
    ("AUX", r"#aux[A-Za-z0-9_]*"),
    ("OP", r"<=|>=|!=|<>|==|<|>|="),
    ("NUMBER", r"[0-9]+"),
    ("VAR", r"[A-Z][A-Za-z0-9_]*"),
    ("IDENT", r"[a-z][A-Za-z0-9_]*"),
    ("ANON", r"_[A-Za-z0-9_]*"),
    ("PUNCT", r"[(){}\[\],.:|+*]"),
]
_TOKEN_RE = re.compile("|".join(f"(?P<{n}>{p})" for n, p in _TOKEN_SPEC))
_OP_ALIASES = {"<>": "!=", "==": "="}


@dataclass
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str):
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise ParseError([ParseDiagnostic("error", line, col,
                                              f"unexpected character {text[pos]!r}")])
        kind, value = m.lastgroup, m.group()
        if kind == "ANON":
            raise ParseError([ParseDiagnostic("error", line, col,
                                              "anonymous variables are not supported")])
        if kind not in ("WS", "COMMENT"):
            if kind == "OP":
                value = _OP_ALIASES.get(value, value)
            tokens.append(Token(kind, value, line, col))
        newlines = value.count("\n") if kind == "WS" else 0
        if newlines:
            line += newlines
            line_start = pos + value.rindex("\n") + 1
        pos = m.end()
    tokens.append(Token("EOF", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0
        self.arities = {}

    # -- token helpers ---------------------------------------------------
    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def peek(self, k=1) -> Token:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def error(self, message, tok=None):
        tok = tok or self.tok
        raise ParseError([ParseDiagnostic("error", tok.line, tok.column, message)])

    def at(self, kind, text=None) -> bool:
        t = self.tok
        return t.kind == kind and (text is None or t.text == text)

    def accept(self, kind, text=None):
        if self.at(kind, text):
            t = self.tok
            self.i += 1
            return t
        return None

    def expect(self, kind, text=None) -> Token:
        t = self.accept(kind, text)
        if t is None:
            want = text or kind.lower()
            got = self.tok.text or "end of input"
            self.error(f"expected {want!r}, found {got!r}")
        return t

    # -- grammar ---------------------------------------------------------
    def program(self) -> Program:
        rules, weak = [], []
        while not self.at("EOF"):
            if self.at("WEAK"):
                weak.append(self.weak_constraint())
            else:
                rules.append(self.rule())
        return Program(tuple(rules), tuple(weak))

    def rule(self) -> Rule:
        start = self.tok
        head = []
        if not self.at("IF"):
            head.append(self.head_atom())
            while self.at("PUNCT", "|") or self._at_disjunction_v():
                self.i += 1
                head.append(self.head_atom())
        body = []
        if self.accept("IF"):
            body = self.body()
            if not body:
                self.error("empty rule body")
        self.expect("PUNCT", ".")
        if not head and not body:
            self.error("empty rule", start)
        return Rule(tuple(head), tuple(body), line=start.line)

    def _at_disjunction_v(self) -> bool:
        if not self.at("IDENT", "v"):
            return False
        nxt = self.peek()
        return nxt.kind in ("IDENT", "AUX")

    def weak_constraint(self) -> WeakConstraint:
        start = self.expect("WEAK")
        body = self.body()
        if not body:
            self.error("empty weak constraint body")
        self.expect("PUNCT", ".")
        weight, level = 1, 1
        if self.accept("PUNCT", "["):
            if not self.at("PUNCT", ":") and not self.at("PUNCT", "]"):
                weight = self.weight_term()
            if self.accept("PUNCT", ":"):
                if not self.at("PUNCT", "]"):
                    level = self.weight_term()
            self.expect("PUNCT", "]")
        return WeakConstraint(tuple(body), weight, level, line=start.line)

    def weight_term(self):
        t = self.tok
        if t.kind == "NUMBER":
            self.i += 1
            return int(t.text)
        if t.kind == "VAR":
            self.i += 1
            return Variable(t.text)
        self.error("weight and level must be integers or variables")

    def body(self):
        lits = [self.literal()]
        while self.accept("PUNCT", ","):
            lits.append(self.literal())
        return lits

    def head_atom(self) -> Atom:
        if self.at("AGG"):
            self.error("aggregate atoms cannot occur in rule heads")
        if not (self.at("IDENT") or self.at("AUX")):
            self.error(f"expected an atom, found {self.tok.text or 'end of input'!r}")
        atom = self.atom()
        if self.at("OP"):
            self.error("built-in atoms cannot occur in rule heads")
        return atom

    def atom(self) -> Atom:
        t = self.tok
        self.i += 1
        args = []
        if self.accept("PUNCT", "("):
            args.append(self.term())
            while self.accept("PUNCT", ","):
                args.append(self.term())
            self.expect("PUNCT", ")")
        name, arity = t.text, len(args)
        known = self.arities.setdefault(name, (arity, t))
        if known[0] != arity:
            self.error(f"predicate {name} used with arity {arity} but first used with "
                       f"arity {known[0]} at line {known[1].line}", t)
        return Atom(name, tuple(args))

    def term(self):
        t = self.tok
        if t.kind == "NUMBER":
            self.i += 1
            return int(t.text)
        if t.kind == "VAR":
            self.i += 1
            return Variable(t.text)
        if t.kind == "IDENT":
            self.i += 1
            return t.text
        self.error(f"expected a term, found {t.text or 'end of input'!r}")

    def literal(self) -> Literal:
        if self.at("IDENT", "not") and self.peek().kind in ("IDENT", "AUX", "AGG", "VAR", "NUMBER"):
            self.i += 1
            lit = self.positive_literal(negated=True)
            return Literal(lit.atom, False)
        return self.positive_literal(negated=False)

    def positive_literal(self, negated: bool) -> Literal:
        t = self.tok
        if t.kind == "AGG":
            return Literal(self.aggregate(None))
        if t.kind in ("IDENT", "AUX") and not (self.peek().kind == "OP"):
            return Literal(self.atom())
        # a term: either a built-in or the left guard of an aggregate
        left = self.term()
        op_tok = self.expect("OP")
        if self.at("AGG"):
            return Literal(self.aggregate((left, op_tok.text)))
        if negated:
            self.error("built-in atoms cannot be negated", t)
        right = self.term()
        if op_tok.text == "=" and self.at("PUNCT") and self.tok.text in "+*":
            arith = self.tok.text
            self.i += 1
            third = self.term()
            return Literal(Atom(arith, (left, right, third)))
        return Literal(Atom(op_tok.text, (left, right)))

    def aggregate(self, left):
        fn_tok = self.expect("AGG")
        function = fn_tok.text[1:]
        aggset = self.aggregate_set()
        right = None
        if self.at("OP"):
            op = self.tok.text
            self.i += 1
            right = (op, self.term())
        if left is None and right is None:
            self.error("aggregate atom needs at least one guard", fn_tok)
        for op in (left[1] if left else None, right[0] if right else None):
            if op == "!=":
                self.error("'!=' is not a guard operator", fn_tok)
        try:
            return make_aggregate(function, aggset, left, right)
        except ValueError as exc:
            self.error(str(exc), fn_tok)

    def aggregate_set(self):
        self.expect("PUNCT", "{")
        if self.accept("PUNCT", "}"):
            return GroundSet(())
        if self.at("OP", "<"):
            elements = [self.ground_element()]
            while self.accept("PUNCT", ","):
                elements.append(self.ground_element())
            self.expect("PUNCT", "}")
            try:
                return GroundSet(tuple(elements))
            except ValueError as exc:
                self.error(str(exc))
        variables = [Variable(self.expect("VAR").text)]
        while self.accept("PUNCT", ","):
            variables.append(Variable(self.expect("VAR").text))
        self.expect("PUNCT", ":")
        conj = self.body()
        self.expect("PUNCT", "}")
        return SymbolicSet(tuple(variables), tuple(conj))

    def ground_element(self) -> SetElement:
        self.expect("OP", "<")
        terms = [self.term()]
        while self.accept("PUNCT", ","):
            terms.append(self.term())
        self.expect("PUNCT", ":")
        conj = []
        if not self.at("OP", ">"):
            conj.append(self.ground_literal())
            while self.accept("PUNCT", ","):
                conj.append(self.ground_literal())
        self.expect("OP", ">")
        if any(not isinstance(t, (int, str)) for t in terms):
            self.error("ground set tuples must be constants")
        return SetElement(tuple(terms), tuple(conj))

    def ground_literal(self) -> Literal:
        positive = True
        if self.at("IDENT", "not") and self.peek().kind in ("IDENT", "AUX"):
            self.i += 1
            positive = False
        if not (self.at("IDENT") or self.at("AUX")):
            self.error("expected a standard atom inside a ground set")
        atom = self.atom()
        if not atom.is_ground():
            self.error(f"atom {atom} inside a ground set is not ground")
        return Literal(atom, positive)


def parse_program(text: str) -> Program:
    """Parse program text; raises :class:`ParseError` with located diagnostics."""
    return _Parser(text).program()


def parse_rule(text: str):
    """Parse a single rule or weak constraint."""
    prog = parse_program(text)
    stmts = list(prog.statements())
    if len(stmts) != 1:
        raise ValueError(f"expected exactly one statement, got {len(stmts)}")
    return stmts[0]


def parse_atom(text: str) -> Atom:
    p = _Parser(text)
    if not (p.at("IDENT") or p.at("AUX")):
        p.error("expected an atom")
    atom = p.atom()
    p.accept("PUNCT", ".")
    if not p.at("EOF"):
        p.error("trailing input after atom")
    if not atom.is_ground():
        p.error(f"atom {atom} is not ground")
    return atom


def parse_interpretation(text: str) -> frozenset:
    """One ground atom per line; blank lines and ``%`` comments are skipped."""
    atoms = set()
    for raw in text.splitlines():
        line = raw.split("%", 1)[0].strip()
        if line:
            atoms.add(parse_atom(line))
    return frozenset(atoms)


__all__ = ["ParseDiagnostic", "ParseError", "parse_program", "parse_rule", "parse_atom",
           "parse_interpretation", "AGGREGATE_FUNCTIONS"]
