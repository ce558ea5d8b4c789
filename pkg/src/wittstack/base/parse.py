"""Literal parsing for polynomials and rational functions in one variable.

Accepted syntax: integers, the variable, ``+ - * / ^``, parentheses and
implicit multiplication (``3x^2``, ``2t^-1``).  Exponents are integers and
may be negative.
"""
from __future__ import annotations

import re

from ..errors import ParseError
from .poly import Poly, RatFunc

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]\w*)|(.))")


def _tokens(text):
    out = []
    for m in _TOKEN.finditer(text):
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif name is not None:
            out.append(("name", name))
        elif op is not None and not op.isspace():
            out.append(("op", op))
    return out


class _Parser:
    def __init__(self, text, p, var):
        self.toks = _tokens(text)
        self.i = 0
        self.p = p
        self.var = var
        self.text = text

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, op):
        kind, val = self.take()
        if (kind, val) != ("op", op):
            raise ParseError(f"expected {op!r} in {self.text!r}")

    def parse(self):
        if not self.toks:
            raise ParseError("empty expression")
        val = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input in {self.text!r}")
        return val

    def expr(self):
        val = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.take()
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.unary()
        while True:
            kind, tok = self.peek()
            if (kind, tok) == ("op", "*"):
                self.take()
                val = val * self.unary()
            elif (kind, tok) == ("op", "/"):
                self.take()
                rhs = self.unary()
                if rhs.is_zero():
                    raise ParseError(f"division by zero in {self.text!r}")
                val = val / rhs
            elif kind in ("num", "name") or (kind, tok) == ("op", "("):
                val = val * self.power()
            else:
                return val

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() in (("op", "-"), ("op", "+")):
                sign = -1 if self.take()[1] == "-" else 1
            kind, val = self.take()
            if kind != "num":
                raise ParseError(f"integer exponent expected in {self.text!r}")
            e = sign * val
            if e < 0 and base.is_zero():
                raise ParseError("negative power of zero")
            return base ** e
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return RatFunc.from_int(val, self.p)
        if kind == "name":
            if val != self.var:
                raise ParseError(f"unknown symbol {val!r} (variable is {self.var!r})")
            return RatFunc(Poly.x(self.p))
        if (kind, val) == ("op", "("):
            inner = self.expr()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected token {val!r} in {self.text!r}")


def parse_ratfunc(text: str, p: int, var: str = "x") -> RatFunc:
    return _Parser(text, p, var).parse()


def split_components(text: str) -> list[str]:
    """Split ``"(a, b, c)"`` or ``"a,b,c"`` at top-level commas."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        depth = 0
        wraps = True
        for k, ch in enumerate(s):
            depth += ch == "("
            depth -= ch == ")"
            if depth == 0 and k < len(s) - 1:
                wraps = False
                break
        if wraps:
            s = s[1:-1]
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch == "," and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
            continue
        depth += ch == "("
        depth -= ch == ")"
        cur.append(ch)
    parts.append("".join(cur).strip())
    if any(not part for part in parts):
        raise ParseError(f"empty component in {text!r}")
    return parts
