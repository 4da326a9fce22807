"""Surface syntax for umbral expressions.

Grammar (dot is left-associative, ``+`` binds loosest)::

    expr     := term ('+' term)*
    term     := dotchain
    dotchain := atom ('.' atom)*
    atom     := '-' atom | INT | INT '/' INT | NAME | 'x'
              | '(' expr ')' | 'adj(' expr ')' | 'inv(' expr ')' | 'D(' expr ')'

A minus sign directly before an integer is part of the literal, so ``-1.-chi``
reads as ``(-1).(-chi)``.  Any other leading minus negates the following atom.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import DslSyntaxError, UnknownName
from .series import DEFAULT_ORDER, format_rational
from .umbra import (
    ALIASES,
    SPECIAL_NAMES,
    Adjoint,
    CompInverse,
    Const,
    Derivative,
    Dot,
    Leaf,
    Scale,
    Sum,
    Var,
    special,
)

DSL_NAMES = ("eps", "u", "chi", "bell", "iota", "ubar", "delta")
FUNCTIONS = {"adj": Adjoint, "inv": CompInverse, "D": Derivative}

_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S)")


def tokenize(src):
    tokens = []
    pos = 0
    while True:
        while pos < len(src) and src[pos].isspace():
            pos += 1
        if pos >= len(src):
            break
        m = _TOKEN.match(src, pos)
        start = pos
        if m.group(1) is not None:
            tokens.append(("INT", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("NAME", m.group(2), start))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-.()/":
                raise DslSyntaxError(f"unexpected character {ch!r}", start)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("EOF", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src, order, env):
        self.src = src
        self.tokens = tokenize(src)
        self.i = 0
        self.order = order
        self.env = env or {}

    def peek(self, k=0):
        return self.tokens[self.i + k]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "EOF" else repr(tok[1])
            raise DslSyntaxError(f"expected {kind!r}, found {what}", tok[2])
        self.i += 1
        return tok

    def parse(self):
        if self.peek()[0] == "EOF":
            raise DslSyntaxError("empty expression", 0)
        e = self.expr()
        tok = self.peek()
        if tok[0] != "EOF":
            raise DslSyntaxError(f"unexpected {tok[1]!r}", tok[2])
        return e

    def expr(self):
        start = self.peek()[2]
        terms = [self.dotchain()]
        while self.peek()[0] == "+":
            self.take()
            terms.append(self.dotchain())
        if len(terms) == 1:
            return terms[0]
        return Sum(tuple(terms), span=(start, self.peek()[2]))

    def dotchain(self):
        start = self.peek()[2]
        e = self.atom()
        while self.peek()[0] == ".":
            self.take()
            right = self.atom()
            e = Dot(e, right, span=(start, self.peek()[2]))
        return e

    def _number(self, negative):
        tok = self.take("INT")
        value = Fraction(int(tok[1]))
        if self.peek()[0] == "/" and self.peek(1)[0] == "INT":
            self.take()
            den = int(self.take("INT")[1])
            if den == 0:
                raise DslSyntaxError("zero denominator", tok[2])
            value = value / den
        return -value if negative else value

    def atom(self):
        tok = self.peek()
        start = tok[2]
        kind = tok[0]
        if kind == "-":
            self.take()
            if self.peek()[0] == "INT":
                return Const(self._number(True), span=(start, self.peek()[2]))
            return Scale(Fraction(-1), self.atom(), span=(start, self.peek()[2]))
        if kind == "INT":
            return Const(self._number(False), span=(start, self.peek()[2]))
        if kind == "(":
            self.take()
            e = self.expr()
            self.take(")")
            return e
        if kind == "NAME":
            name = tok[1]
            if name in FUNCTIONS and self.peek(1)[0] == "(":
                self.take()
                self.take("(")
                arg = self.expr()
                self.take(")")
                return FUNCTIONS[name](arg, span=(start, self.peek()[2]))
            if name in FUNCTIONS and name not in self.env:
                raise DslSyntaxError(f"expected '(' after {name!r}", self.peek(1)[2])
            self.take()
            span = (start, start + len(name))
            if name == "x":
                return Var(span=span)
            if name in self.env:
                return Leaf(self.env[name].fresh(), name, span=span)
            key = ALIASES.get(name, name)
            if key not in SPECIAL_NAMES:
                raise UnknownName(f"unknown umbra {name!r} at position {start}")
            return Leaf(special(key, self.order), name, span=span)
        what = "end of input" if kind == "EOF" else repr(tok[1])
        raise DslSyntaxError(f"unexpected {what}", start)


def parse(src, order=DEFAULT_ORDER, env=None):
    """Parse ``src`` into an :class:`~umbral.umbra.UmbralExpr`.

    Every occurrence of a name becomes a fresh, uncorrelated leaf.  ``env``
    maps extra names to umbrae.
    """
    return _Parser(src, order, env).parse()


def _atom_source(e):
    if isinstance(e, (Sum, Dot)):
        return f"({to_source(e)})"
    return to_source(e)


def to_source(e):
    """Canonical source text; ``parse(to_source(e)) == e`` for parsed trees."""
    if isinstance(e, Leaf):
        return e.name
    if isinstance(e, Var):
        return "x"
    if isinstance(e, Const):
        return format_rational(e.value)
    if isinstance(e, Sum):
        return " + ".join(f"({to_source(t)})" if isinstance(t, Sum) else to_source(t) for t in e.terms)
    if isinstance(e, Scale):
        if e.factor == -1:
            arg = e.arg
            if isinstance(arg, Const) and arg.value >= 0:
                return f"-({to_source(arg)})"
            return "-" + _atom_source(arg)
        return f"{_atom_source(e.arg)}.{_const_source(e.factor)}"
    if isinstance(e, Dot):
        left = f"({to_source(e.left)})" if isinstance(e.left, Sum) else to_source(e.left)
        return f"{left}.{_atom_source(e.right)}"
    for name, cls in FUNCTIONS.items():
        if type(e) is cls:
            return f"{name}({to_source(e.arg)})"
    raise TypeError(f"cannot print {e!r}")


def _const_source(c):
    return format_rational(c)
