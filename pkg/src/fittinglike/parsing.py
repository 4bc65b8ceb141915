"""Parsers for ``.grp`` group files and functorial expressions.

Group files::

    # comment
    degree: 3
    gen: (1 2 3)
    gen: (1 2)

Functorial expressions (``^`` binds tightest, then ``*``/``o`` which are
left-associative at one level, then ``&``, then ``|``)::

    expr   := meet ('|' meet)*
    meet   := term ('&' term)*
    term   := factor (('*' | 'o') factor)*
    factor := atom ('^' (INT | 'inf'))?
    atom   := F | Fstar | Ftilde | Phi | Phi_pi{p,q,...} | Soc | Triv | Id | '(' expr ')'
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .config import GroupError
from .functorials import Builtin, Circ, Expr, Join, Meet, Omega, Power, Star
from .group import Group
from .perm import Permutation, parse_cycles


class ParseError(GroupError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


# --- .grp files ---------------------------------------------------------------------

def parse_group_file(text: str) -> Group:
    degree: int | None = None
    gens: list[tuple[int, int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise ParseError(f"expected 'key: value', got {line!r}", lineno, 1)
        key = key.strip()
        col = raw.index(":") + 2
        if key == "degree":
            if degree is not None:
                raise ParseError("degree given twice", lineno, 1)
            try:
                degree = int(value)
            except ValueError:
                raise ParseError(f"degree must be an integer, got {value.strip()!r}", lineno, col) from None
            if degree < 1:
                raise ParseError("degree must be positive", lineno, col)
        elif key == "gen":
            gens.append((lineno, col, value.strip()))
        else:
            raise ParseError(f"unknown key {key!r}", lineno, 1)
    if degree is None:
        raise ParseError("missing 'degree:' line")
    perms = []
    for lineno, col, value in gens:
        try:
            cycles = parse_cycles(value)
        except GroupError as exc:
            raise ParseError(str(exc), lineno, col) from None
        for c in cycles:
            for x in c:
                if x > degree:
                    raise ParseError(f"point {x} exceeds degree {degree}", lineno, col)
        perms.append(Permutation.from_cycles(cycles, degree))
    return Group(perms, degree)


def format_group_file(g: Group, comment: str | None = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines.append(f"degree: {g.degree}")
    lines.extend(f"gen: {p}" for p in g.generators)
    return "\n".join(lines) + "\n"


# --- functorial expressions ---------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_]+)|(?P<brace>\{[^}]*\})|(?P<op>[()&|*^]))")


@dataclass
class _Tok:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[0]!r}", 1, pos + 1)
        kind = m.lastgroup
        toks.append(_Tok(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


_ATOMS = {"F", "Fstar", "Ftilde", "Phi", "Soc", "Triv", "Id"}


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, msg: str, tok: _Tok | None = None) -> ParseError:
        tok = tok or self.peek()
        return ParseError(msg, 1, tok.pos + 1)

    def expect_op(self, op: str) -> None:
        tok = self.take()
        if tok.text != op:
            raise self.error(f"expected {op!r}, got {tok.text or 'end of input'!r}", tok)

    def parse(self) -> Expr:
        e = self.expr()
        if self.peek().kind != "end":
            raise self.error(f"unexpected {self.peek().text!r}")
        return e

    def expr(self) -> Expr:
        items = [self.meet()]
        while self.peek().text == "|":
            self.take()
            items.append(self.meet())
        return items[0] if len(items) == 1 else Join(tuple(items))

    def meet(self) -> Expr:
        items = [self.term()]
        while self.peek().text == "&":
            self.take()
            items.append(self.term())
        return items[0] if len(items) == 1 else Meet(tuple(items))

    def term(self) -> Expr:
        e = self.factor()
        while self.peek().text in ("*", "o"):
            op = self.take().text
            rhs = self.factor()
            e = Star(e, rhs) if op == "*" else Circ(e, rhs)
        return e

    def factor(self) -> Expr:
        base = self.atom()
        if self.peek().text == "^":
            self.take()
            tok = self.take()
            if tok.kind == "num":
                k = int(tok.text)
                if k < 1:
                    raise self.error("exponent must be at least 1", tok)
                return Power(base, k)
            if tok.text == "inf":
                return Omega(base)
            raise self.error(f"expected an integer or 'inf' after '^', got {tok.text!r}", tok)
        return base

    def atom(self) -> Expr:
        tok = self.take()
        if tok.text == "(":
            e = self.expr()
            self.expect_op(")")
            return e
        if tok.kind == "name":
            if tok.text in _ATOMS:
                return Builtin(tok.text)
            if tok.text == "Phi_pi":
                brace = self.take()
                if brace.kind != "brace":
                    raise self.error("expected '{primes}' after Phi_pi", brace)
                body = brace.text[1:-1].replace(",", " ").split()
                if not body:
                    raise self.error("empty prime set in Phi_pi{}", brace)
                try:
                    primes = frozenset(int(x) for x in body)
                except ValueError:
                    raise self.error(f"bad prime list {brace.text!r}", brace) from None
                for p in primes:
                    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
                        raise self.error(f"{p} is not a prime", brace)
                return Builtin("PhiPi", primes)
            raise self.error(f"unknown atom {tok.text!r}", tok)
        raise self.error(f"expected a functorial, got {tok.text or 'end of input'!r}", tok)


def parse_functorial(text: str) -> Expr:
    return _Parser(text).parse()
