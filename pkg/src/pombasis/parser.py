"""Ideal description files and report serialization.

File format (UTF-8, line oriented)::

    # comment
    ring: x, y, z
    poly: x^2 - 1/2*y*z
    poly: (x + y)^3

``#`` lines are comments.  A comment of the form ``# expect: key=value ...``
records expected invariants used by ``verify``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .poly import Polynomial, VariableContext


class ParseError(ValueError):
    """Structured parse failure carrying a 1-based line and column."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}" if line else message)

    def as_dict(self) -> dict:
        return {"error": "parse", "message": self.message, "line": self.line, "column": self.column}


@dataclass
class IdealInput:
    ctx: VariableContext
    generators: list[Polynomial]
    source_name: str = "<string>"
    original_order: list[int] = field(default_factory=list)
    expect: dict[str, str] = field(default_factory=dict)

    @property
    def degrees(self) -> list[int]:
        return [g.total_degree for g in self.generators]


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


class _ExprParser:
    """Recursive descent over ``+ - * ^ ( )``, integers and ``a/b`` literals."""

    def __init__(self, text: str, ctx: VariableContext, line: int, col0: int):
        self.ctx = ctx
        self.index = {name: i for i, name in enumerate(ctx.names)}
        self.line = line
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            mt = _TOKEN.match(text, pos)
            if mt is None:
                break
            if mt.group(1) is not None:
                self.tokens.append(("num", mt.group(1), col0 + mt.start(1)))
            elif mt.group(2) is not None:
                self.tokens.append(("id", mt.group(2), col0 + mt.start(2)))
            elif mt.group(3) is not None:
                self.tokens.append(("op", mt.group(3), col0 + mt.start(3)))
            pos = mt.end()
        self.end_col = col0 + len(text.rstrip())
        self.pos = 0

    def error(self, msg: str, col: int | None = None):
        if col is None:
            col = self.tokens[self.pos][2] if self.pos < len(self.tokens) else self.end_col
        raise ParseError(msg, self.line, col + 1)

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect_op(self, op: str):
        tok = self.peek()
        if tok is None or tok[0] != "op" or tok[1] != op:
            self.error(f"expected {op!r}")
        self.pos += 1

    def parse(self) -> Polynomial:
        if not self.tokens:
            self.error("empty expression")
        f = self.expr()
        if self.peek() is not None:
            tok = self.peek()
            if tok[0] in ("num", "id") or tok[1] == "(":
                self.error("implicit multiplication is not allowed; use '*'")
            self.error(f"unexpected {tok[1]!r}")
        return f

    def expr(self) -> Polynomial:
        f = self.term()
        while (tok := self.peek()) is not None and tok[0] == "op" and tok[1] in "+-":
            self.pos += 1
            g = self.term()
            f = f + g if tok[1] == "+" else f - g
        return f

    def term(self) -> Polynomial:
        f = self.unary()
        while (tok := self.peek()) is not None and tok[0] == "op" and tok[1] == "*":
            self.pos += 1
            f = f * self.unary()
        return f

    def unary(self) -> Polynomial:
        tok = self.peek()
        if tok is not None and tok[0] == "op" and tok[1] in "+-":
            self.pos += 1
            f = self.unary()
            return -f if tok[1] == "-" else f
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        tok = self.peek()
        if tok is not None and tok[0] == "op" and tok[1] == "^":
            self.pos += 1
            etok = self.take()
            if etok is None or etok[0] != "num":
                self.error("exponent must be a positive integer literal", None if etok is None else etok[2])
            e = int(etok[1])
            if e < 1:
                self.error("exponent must be a positive integer", etok[2])
            nxt = self.peek()
            if nxt is not None and nxt[0] == "op" and nxt[1] == "^":
                self.error("chained exponents are ambiguous; use parentheses")
            return base**e
        return base

    def atom(self) -> Polynomial:
        tok = self.take()
        if tok is None:
            self.error("unexpected end of expression")
        kind, text, col = tok
        if kind == "num":
            value = Fraction(int(text))
            nxt = self.peek()
            if nxt is not None and nxt[0] == "op" and nxt[1] == "/":
                self.pos += 1
                den = self.take()
                if den is None or den[0] != "num":
                    self.error("rational literal needs an integer denominator", None if den is None else den[2])
                if int(den[1]) == 0:
                    self.error("zero denominator", den[2])
                value = Fraction(int(text), int(den[1]))
            nxt = self.peek()
            if nxt is not None and (nxt[0] in ("num", "id") or nxt[1] == "("):
                self.error("implicit multiplication is not allowed; use '*'", nxt[2])
            return Polynomial.constant(self.ctx, value)
        if kind == "id":
            if text not in self.index:
                self.error(f"unknown variable {text!r}", col)
            nxt = self.peek()
            if nxt is not None and (nxt[0] in ("num", "id") or nxt[1] == "("):
                self.error("implicit multiplication is not allowed; use '*'", nxt[2])
            return Polynomial.variable(self.ctx, self.index[text] + 1)
        if text == "(":
            f = self.expr()
            self.expect_op(")")
            return f
        self.error(f"unexpected {text!r}", col)


def parse_polynomial(text: str, ctx: VariableContext, line: int = 1, column: int = 0) -> Polynomial:
    return _ExprParser(text, ctx, line, column).parse()


_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*\Z")


def parse_ideal(text: str, source_name: str = "<string>") -> IdealInput:
    ctx: VariableContext | None = None
    polys: list[Polynomial] = []
    expect: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            body = stripped[1:].strip()
            if body.startswith("expect:"):
                for item in body[len("expect:"):].split():
                    if "=" not in item:
                        raise ParseError(f"malformed expectation {item!r}", lineno, raw.find(item) + 1)
                    key, value = item.split("=", 1)
                    expect[key] = value
            continue
        head, sep, rest = raw.partition(":")
        key = head.strip()
        col0 = len(head) + 1
        if not sep or key not in ("ring", "poly"):
            raise ParseError("expected 'ring:' or 'poly:' line", lineno, len(raw) - len(raw.lstrip()) + 1)
        if key == "ring":
            if ctx is not None:
                raise ParseError("duplicate 'ring:' line", lineno, 1)
            names = [s.strip() for s in rest.split(",")]
            offset = col0
            for name in names:
                where = rest.find(name) + offset + 1 if name else offset + 1
                if not _IDENT.match(name):
                    raise ParseError(f"invalid variable name {name!r}", lineno, where)
            if len(set(names)) != len(names):
                raise ParseError("duplicate variable name", lineno, col0 + 1)
            ctx = VariableContext(tuple(names))
            continue
        if ctx is None:
            raise ParseError("'poly:' before 'ring:'", lineno, 1)
        f = parse_polynomial(rest, ctx, lineno, col0)
        if f.is_zero():
            raise ParseError("zero generator", lineno, col0 + 1)
        if not f.homogeneous:
            raise ParseError("non-homogeneous generator", lineno, col0 + 1)
        polys.append(f)
    if ctx is None:
        raise ParseError("missing 'ring:' line", 1, 1)
    if not polys:
        raise ParseError("empty generator list", 1, 1)
    order = sorted(range(len(polys)), key=lambda i: -polys[i].total_degree)
    return IdealInput(ctx, [polys[i] for i in order], source_name, order, expect)


def read_ideal(path) -> IdealInput:
    with open(path, encoding="utf-8") as fh:
        return parse_ideal(fh.read(), str(path))


# -- rendering ----------------------------------------------------------------


def render_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render_monomial(m, names) -> str:
    parts = []
    for e, name in zip(m, names):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def render_polynomial(f: Polynomial) -> str:
    if f.is_zero():
        return "0"
    out = []
    for i, (m, c) in enumerate(f.terms):
        sign = "-" if c < 0 else "+"
        a = -c if c < 0 else c
        mono = render_monomial(m, f.ctx.names)
        if not mono:
            body = render_coefficient(a)
        elif a == 1:
            body = mono
        else:
            body = f"{render_coefficient(a)}*{mono}"
        if i == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def render_ideal(ideal: IdealInput) -> str:
    lines = [f"ring: {', '.join(ideal.ctx.names)}"]
    lines += [f"poly: {render_polynomial(g)}" for g in ideal.generators]
    return "\n".join(lines) + "\n"


def render_univariate(coeffs, var: str = "t") -> str:
    """Ascending coefficient list to ``1 + 2t - t^2`` style text."""
    out = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        a = abs(c)
        a_txt = render_coefficient(Fraction(a))
        if i == 0:
            body = a_txt
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if a == 1 else f"{a_txt}{mono}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f" {'+' if c > 0 else '-'} {body}")
    return "".join(out) or "0"


def render_hilbert_series(numerator, dimension: int) -> str:
    return f"({render_univariate(numerator)}) / (1 - t)^{dimension}"


# -- reports ------------------------------------------------------------------


def _jsonable(value):
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else render_coefficient(value)
    if isinstance(value, Polynomial):
        return render_polynomial(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _text_lines(value, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for k in sorted(value):
            v = value[k]
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines += _text_lines(v, indent + 1)
            else:
                lines.append(f"{pad}{k}: {_scalar_text(v)}")
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, (dict, list)) and v:
                sub = _text_lines(v, indent + 1)
                lines.append(f"{pad}- {sub[0].strip()}")
                lines += sub[1:]
            else:
                lines.append(f"{pad}- {_scalar_text(v)}")
    else:
        lines.append(pad + _scalar_text(value))
    return lines


def _scalar_text(v) -> str:
    if v is None:
        return "n/a"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (dict, list)):
        return "{}" if isinstance(v, dict) else "[]"
    return str(v)


def emit_report(doc: dict, fmt: str = "json") -> str:
    data = _jsonable(doc)
    if fmt == "json":
        return json.dumps(data, sort_keys=True, indent=2) + "\n"
    if fmt == "text":
        return "\n".join(_text_lines(data)) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
