"""Text format for ground programs and theories.

Program syntax::

    % comment
    #atoms a, b, c.
    p ; not b :- c, not d.
    a, b :- not (c ; not d).
    :- q.
    p.

``not`` binds tighter than ``,`` which binds tighter than ``;``.  Theory mode
additionally accepts ``L`` and ``M`` (unary), ``~`` (strong negation),
``<-`` (rule conditional as a formula), ``<->``, and the material connectives
``=>`` / ``<=>``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError
from .syntax import (
    BOT,
    TOP,
    And,
    Arrow,
    Atom,
    Bot,
    Equiv,
    Formula,
    Iff,
    Implies,
    L,
    M,
    Neg,
    Not,
    Or,
    Program,
    Rule,
    Signature,
    Theory,
    Top,
    atoms,
    is_nested_expr,
)

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+|%[^\n]*)
  | (?P<directive>\#[a-z]+)
  | (?P<punct><->|<=>|<-|=>|:-|[.,;()~])
  | (?P<ident>[A-Za-z][A-Za-z0-9_]*)
    """,
    re.VERBOSE,
)

KEYWORDS = {"not", "true", "false"}
THEORY_KEYWORDS = {"L", "M"}


@dataclass
class Token:
    kind: str
    text: str
    offset: int


class _Parser:
    def __init__(self, text: str, theory: bool):
        self.text = text
        self.theory = theory
        self.tokens = self._tokenize(text)
        self.pos = 0

    def error(self, message: str, offset=None):
        if offset is None:
            offset = self.peek().offset
        line = self.text.count("\n", 0, offset) + 1
        column = offset - (self.text.rfind("\n", 0, offset) + 1) + 1
        raise ParseError(line, column, message, offset)

    def _tokenize(self, text):
        tokens = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:
                self.error(f"unexpected character {text[pos]!r}", pos)
            kind = m.lastgroup
            if kind != "ws":
                tokens.append(Token(kind, m.group(), pos))
            pos = m.end()
        tokens.append(Token("eof", "", len(text)))
        return tokens

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def at(self, text: str) -> bool:
        tok = self.peek()
        return tok.kind in ("punct", "ident", "directive") and tok.text == text

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, text: str) -> Token:
        if not self.at(text):
            found = self.peek().text or "end of input"
            self.error(f"expected {text!r}, found {found!r}")
        return self.advance()

    # statements

    def parse(self):
        names = []
        items = []
        while self.peek().kind != "eof":
            if self.peek().kind == "directive":
                self.directive(names)
                continue
            item = self.statement()
            items.append(item)
            names.extend(atoms(item.as_formula() if isinstance(item, Rule) else item))
        signature = Signature(tuple(dict.fromkeys(names)))
        if self.theory:
            return Theory(signature, tuple(items))
        return Program(signature, tuple(items))

    def directive(self, names):
        tok = self.advance()
        if tok.text != "#atoms":
            self.error(f"unknown directive {tok.text!r}", tok.offset)
        if not self.at("."):
            names.append(self.atom_name())
            while self.at(","):
                self.advance()
                names.append(self.atom_name())
        self.expect(".")

    def atom_name(self) -> str:
        tok = self.peek()
        if tok.kind != "ident" or tok.text in KEYWORDS or not tok.text[0].islower():
            self.error(f"expected an atom name, found {tok.text or 'end of input'!r}")
        self.advance()
        return tok.text

    def statement(self):
        if self.at(":-"):
            self.advance()
            head, body = BOT, self.expr()
        else:
            head = self.expr()
            body = TOP
            if self.at(":-"):
                self.advance()
                body = self.expr()
            elif self.theory:
                self.expect(".")
                return head
        self.expect(".")
        if self.theory:
            return Arrow(head, body)
        return Rule(head, body)

    # expressions, lowest precedence first

    def expr(self) -> Formula:
        if not self.theory:
            return self.disj()
        left = self.arrow()
        if self.at("<->") or self.at("<=>"):
            op = self.advance().text
            right = self.arrow()
            left = Iff(left, right) if op == "<->" else Equiv(left, right)
            if self.at("<->") or self.at("<=>"):
                self.error("'<->' and '<=>' do not chain; add parentheses")
        return left

    def arrow(self) -> Formula:
        left = self.disj()
        if self.at("<-") or self.at("=>"):
            op = self.advance().text
            right = self.disj()
            left = Arrow(left, right) if op == "<-" else Implies(left, right)
            if self.at("<-") or self.at("=>"):
                self.error("'<-' and '=>' do not chain; add parentheses")
        return left

    def disj(self) -> Formula:
        left = self.conj()
        while self.at(";"):
            self.advance()
            left = Or(left, self.conj())
        return left

    def conj(self) -> Formula:
        left = self.unary()
        while self.at(","):
            self.advance()
            left = And(left, self.unary())
        return left

    def unary(self) -> Formula:
        if self.at("not"):
            self.advance()
            return Not(self.unary())
        if self.theory:
            if self.at("L"):
                self.advance()
                return L(self.unary())
            if self.at("M"):
                self.advance()
                return M(self.unary())
            if self.at("~"):
                self.advance()
                return Neg(self.unary())
        return self.primary()

    def primary(self) -> Formula:
        tok = self.peek()
        if self.at("("):
            self.advance()
            inner = self.expr()
            self.expect(")")
            return inner
        if self.at("true"):
            self.advance()
            return TOP
        if self.at("false"):
            self.advance()
            return BOT
        if tok.kind == "ident" and tok.text not in KEYWORDS and tok.text[0].islower():
            self.advance()
            return Atom(tok.text)
        self.error(f"unexpected {tok.text or 'end of input'!r}")


def parse_program(text: str) -> Program:
    """Parse a program; raises ParseError on malformed input."""
    return _Parser(text, theory=False).parse()


def parse_theory(text: str) -> Theory:
    """Parse a theory of arbitrary formulas (one per ``.``-terminated statement)."""
    return _Parser(text, theory=True).parse()


def parse_formula(text: str) -> Formula:
    theory = parse_theory(text.rstrip().rstrip(".") + ".")
    if len(theory.formulas) != 1:
        raise ValueError("expected exactly one formula")
    return theory.formulas[0]


# -- printing ----------------------------------------------------------------

_LEVEL = {Iff: 0, Equiv: 0, Arrow: 1, Implies: 1, Or: 2, And: 3}
_SYMBOL = {Iff: " <-> ", Equiv: " <=> ", Arrow: " <- ", Implies: " => ", Or: " ; ", And: ", "}
_PREFIX = {Not: "not ", L: "L ", M: "M ", Neg: "~"}
_UNARY_LEVEL = 4
_ATOMIC_LEVEL = 5


def _level(f: Formula) -> int:
    return _LEVEL.get(type(f), _UNARY_LEVEL if type(f) in _PREFIX else _ATOMIC_LEVEL)


def format_formula(f: Formula) -> str:
    """Render with the fewest parentheses that still re-parse to ``f``."""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Top):
        return "true"
    if isinstance(f, Bot):
        return "false"
    kind = type(f)
    if kind in _PREFIX:
        inner = format_formula(f.child)
        if _level(f.child) < _UNARY_LEVEL:
            inner = f"({inner})"
        return _PREFIX[kind] + inner
    if kind in _LEVEL:
        lvl = _LEVEL[kind]
        left, right = (f.head, f.body) if kind is Arrow else (f.left, f.right)
        # ';' and ',' associate to the left; the rest do not associate
        left_ok = _level(left) > lvl or (_level(left) == lvl and kind in (And, Or))
        ls = format_formula(left)
        rs = format_formula(right)
        if not left_ok:
            ls = f"({ls})"
        if _level(right) <= lvl:
            rs = f"({rs})"
        return ls + _SYMBOL[kind] + rs
    raise TypeError(f"not a formula: {f!r}")


def format_rule(rule: Rule) -> str:
    if isinstance(rule.head, Bot):
        return f":- {format_formula(rule.body)}."
    if isinstance(rule.body, Top):
        return f"{format_formula(rule.head)}."
    return f"{format_formula(rule.head)} :- {format_formula(rule.body)}."


def _needs_directive(signature: Signature, mentioned: list[str]) -> bool:
    return tuple(dict.fromkeys(mentioned)) != signature.atoms


def print_program(program: Program) -> str:
    """Canonical text; ``parse_program(print_program(p)) == p``."""
    lines = []
    mentioned = [a for r in program.rules for a in atoms(r.as_formula())]
    if _needs_directive(program.signature, mentioned):
        lines.append(f"#atoms {', '.join(program.signature.atoms)}.")
    lines.extend(format_rule(r) for r in program.rules)
    return "\n".join(lines)


def print_theory(theory: Theory) -> str:
    lines = []
    mentioned = [a for f in theory.formulas for a in atoms(f)]
    if _needs_directive(theory.signature, mentioned):
        lines.append(f"#atoms {', '.join(theory.signature.atoms)}.")
    for f in theory.formulas:
        if isinstance(f, Arrow) and is_nested_expr(f.head) and is_nested_expr(f.body):
            if isinstance(f.body, Top) and not isinstance(f.head, Bot):
                # a bare "h." would read back as the formula h, not h <- true
                lines.append(f"{format_formula(f.head)} :- true.")
            else:
                lines.append(format_rule(Rule(f.head, f.body)))
        else:
            lines.append(f"{format_formula(f)}.")
    return "\n".join(lines)
