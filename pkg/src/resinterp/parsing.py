"""Text syntax for polynomials and scalars.

Grammar::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := ('+'|'-') factor | atom (('^'|'**') INT)?
    atom   := NUMBER | 'i' | NAME | '(' expr ')'

Numbers are integers or finite decimals (read exactly); ``a/b`` is ordinary
division by a nonzero constant; ``i`` is the imaginary unit and therefore
cannot be used as a variable name.
"""

import re
from fractions import Fraction

from .poly import Ring
from .scalar import I, Scalar


class ParseError(ValueError):
    def __init__(self, message, text="", pos=None):
        self.text = text
        self.pos = pos
        if pos is not None:
            message = f"{message} at column {pos + 1}"
        super().__init__(message)


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d*)?|\.\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>\*\*|[-+*/^()]))"
)


def _tokenize(text):
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        start = m.start(m.lastgroup)
        kind = m.lastgroup
        value = m.group(kind)
        tokens.append((kind, value, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, ring):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0
        self.index = {name: j for j, name in enumerate(ring.names)}
        if "i" in self.index:
            raise ParseError("'i' is reserved for the imaginary unit and cannot be a variable")

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, v, pos = self.take()
        if v != value:
            raise ParseError(f"expected {value!r}", self.text, pos)

    def parse(self):
        if self.peek()[0] == "end":
            raise ParseError("empty expression", self.text, 0)
        p = self.expr()
        kind, v, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {v!r}", self.text, pos)
        return p

    def expr(self):
        p = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.factor()
        while self.peek()[1] in ("*", "/"):
            _, op, pos = self.take()
            q = self.factor()
            if op == "*":
                p = p * q
            else:
                if not q.is_constant() or q.is_zero():
                    raise ParseError("division only by nonzero constants", self.text, pos)
                p = p / q
        return p

    def factor(self):
        kind, v, pos = self.peek()
        if v in ("+", "-"):
            self.take()
            f = self.factor()
            return f if v == "+" else -f
        base = self.atom()
        if self.peek()[1] in ("^", "**"):
            self.take()
            kind, v, pos = self.take()
            if kind != "num" or not v.isdigit():
                raise ParseError("exponent must be a non-negative integer", self.text, pos)
            base = base ** int(v)
        return base

    def atom(self):
        kind, v, pos = self.take()
        if kind == "num":
            return self.ring.const(Scalar(Fraction(v)))
        if kind == "name":
            if v == "i":
                return self.ring.const(I)
            if v not in self.index:
                raise ParseError(f"unknown variable {v!r}", self.text, pos)
            return self.ring.var(self.index[v])
        if v == "(":
            p = self.expr()
            self.expect(")")
            return p
        if kind == "end":
            raise ParseError("unexpected end of input", self.text, pos)
        raise ParseError(f"unexpected {v!r}", self.text, pos)


def parse_poly(text, ring):
    """Parse ``text`` as a polynomial in ``ring``."""
    if isinstance(ring, (list, tuple)):
        ring = Ring(ring)
    return _Parser(text, ring).parse()


_EMPTY = Ring(())


def parse_scalar(text):
    """Parse a constant expression such as ``-1/2+3*i``."""
    return _Parser(text, _EMPTY).parse().constant_value()


def parse_point(text):
    """Parse ``(a, b, ...)`` (parentheses optional) into a tuple of Scalars."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if not s.strip():
        raise ParseError("empty point", text, 0)
    return tuple(parse_scalar(part) for part in s.split(","))
