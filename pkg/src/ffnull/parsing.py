"""Recursive-descent parser for the polynomial text grammar.

The grammar is ring-agnostic::

    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := power (['*'] power)*          # '*' may be omitted
    power   := atom [('^'|'**') INT]
    atom    := INT | NAME | '(' expr ')'

Atoms are turned into values by two callbacks supplied by the caller, and the
values are combined with the ordinary Python operators ``+ - * **``.  The field
module uses it for element literals in ``t``; the polynomial ring uses it for
polynomials in ``x0..xN``.
"""

import re

from .errors import PolySyntaxError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*^()]))")


def tokenize(text):
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolySyntaxError(f"unexpected character {text[bad]!r}", bad, text)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            op = "^" if m.group(3) == "**" else m.group(3)
            tokens.append(("op", op, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, number, symbol):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0
        self.number = number
        self.symbol = symbol

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise PolySyntaxError(message, tok[2], self.text)

    def parse(self):
        if self.peek()[0] == "end":
            self.fail("empty expression")
        value = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected token {self.peek()[1]!r}")
        return value

    def expr(self):
        negate = False
        if self.peek()[:2] in (("op", "+"), ("op", "-")):
            negate = self.take()[1] == "-"
        value = self.term()
        if negate:
            value = -value
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def _starts_atom(self):
        kind, val, _ = self.peek()
        return kind in ("int", "name") or (kind, val) == ("op", "(")

    def term(self):
        value = self.power()
        while True:
            if self.peek()[:2] == ("op", "*"):
                self.take()
                value = value * self.power()
            elif self._starts_atom():
                value = value * self.power()
            else:
                return value

    def power(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "int":
                self.fail("exponent must be a nonnegative integer", tok)
            base = base ** int(tok[1])
        return base

    def atom(self):
        tok = self.take()
        kind, val, pos = tok
        if kind == "int":
            return self.number(int(val), pos)
        if kind == "name":
            return self.symbol(val, pos)
        if (kind, val) == ("op", "("):
            value = self.expr()
            if self.peek()[:2] != ("op", ")"):
                self.fail("expected ')'")
            self.take()
            return value
        self.fail(f"unexpected token {val!r}" if kind != "end" else "unexpected end of input", tok)


def parse_expression(text, number, symbol):
    """Parse ``text`` using ``number(value, pos)`` and ``symbol(name, pos)`` for atoms."""
    return _Parser(text, number, symbol).parse()
