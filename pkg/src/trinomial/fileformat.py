"""Text formats: spec files, curve files and abc files.

Spec file::

    type = 2
    block = 2 4
    block = 6
    block = 8

Curve file::

    ext i = i^2 + 1
    var = x
    T[0][1] = (1 + i)*x^3 - 1/2

``#`` starts a comment everywhere.  Generators must be declared by an
``ext`` line before they are used.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError, ShapeMismatch, ValidationError
from .model import Curve, TrinomialSpec
from .tower import AlgNum, Tower, adjoin, format_poly
from .upoly import UPoly

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")
_COORD = re.compile(r"T\[(\d+)\]\[(\d+)\]$")


def _lines(text):
    """Yield (line number, stripped content) with comments and blanks removed."""
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _key_value(line, no):
    if "=" not in line:
        raise ParseError(f"expected 'key = value', got {line!r}", no)
    key, value = line.split("=", 1)
    return key.strip(), value.strip()


# -- spec files ------------------------------------------------------------------

def parse_spec(text):
    kind = None
    blocks = []
    for no, line in _lines(text):
        key, value = _key_value(line, no)
        if key == "type":
            if kind is not None:
                raise ParseError("duplicate type line", no)
            if value not in ("1", "2"):
                raise ValidationError(f"type must be 1 or 2, got {value!r}", no)
            kind = int(value)
        elif key == "block":
            parts = value.split(" ")
            if not value or any(not re.fullmatch(r"-?\d+", p) for p in parts):
                raise ParseError(f"block entries must be integers separated by single spaces: {value!r}", no)
            exps = [int(p) for p in parts]
            if any(e < 1 for e in exps):
                raise ValidationError(f"block exponents must be positive: {value!r}", no)
            blocks.append(tuple(exps))
        else:
            raise ParseError(f"unknown key {key!r}", no)
    if kind is None:
        raise ValidationError("missing 'type' line")
    want = 2 if kind == 1 else 3
    if len(blocks) != want:
        raise ValidationError(f"type {kind} needs exactly {want} block lines, got {len(blocks)}")
    return TrinomialSpec(kind, tuple(blocks))


def format_spec(spec):
    lines = [f"type = {spec.kind}"]
    lines += ["block = " + " ".join(map(str, b)) for b in spec.blocks]
    return "\n".join(lines) + "\n"


# -- expressions -------------------------------------------------------------------

class _Parser:
    """Recursive descent over the expression grammar; values are UPolys."""

    def __init__(self, text, tower, var, no):
        self.tokens = self._tokenize(text, no)
        self.pos = 0
        self.tower = tower
        self.var = var
        self.no = no

    @staticmethod
    def _tokenize(text, no):
        out = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:
                raise ParseError(f"cannot tokenize {text[pos:]!r}", no)
            num, name, sym = m.groups()
            if num is not None:
                out.append(("num", num))
            elif name is not None:
                out.append(("name", name))
            else:
                if sym not in "+-*^()":
                    raise ParseError(f"unexpected character {sym!r}", no)
                out.append(("sym", sym))
            pos = m.end()
        return out

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self, sym=None):
        tok = self.peek()
        if tok[0] is None:
            raise ParseError("unexpected end of expression", self.no)
        if sym is not None and tok != ("sym", sym):
            raise ParseError(f"expected {sym!r}, got {tok[1]!r}", self.no)
        self.pos += 1
        return tok

    def parse(self):
        if not self.tokens:
            raise ParseError("empty expression", self.no)
        value = self.expr()
        if self.pos != len(self.tokens):
            raise ParseError(f"unexpected token {self.peek()[1]!r}", self.no)
        return value

    def expr(self):
        neg = False
        if self.peek() == ("sym", "-"):
            self.take()
            neg = True
        value = self.term()
        if neg:
            value = -value
        while self.peek() in (("sym", "+"), ("sym", "-")):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek() == ("sym", "*"):
            self.take()
            value = value * self.factor()
        return value

    def factor(self):
        base = self.atom()
        if self.peek() == ("sym", "^"):
            self.take()
            kind, tok = self.take()
            if kind != "num" or "/" in tok:
                raise ParseError(f"exponent must be a non-negative integer, got {tok!r}", self.no)
            base = base ** int(tok)
        return base

    def atom(self):
        kind, tok = self.take()
        if kind == "num":
            return UPoly.const(self.tower, Fraction(tok))
        if kind == "name":
            if tok == self.var:
                return UPoly.x(self.tower)
            if tok in self.tower.names:
                return UPoly.const(self.tower, AlgNum.gen(self.tower, tok))
            raise ParseError(f"undeclared name {tok!r}", self.no)
        if tok == "(":
            value = self.expr()
            self.take(")")
            return value
        raise ParseError(f"unexpected token {tok!r}", self.no)


def parse_expr(text, tower=Tower(), var="x", line=None):
    """Parse one polynomial expression in ``var`` over ``tower``."""
    return _Parser(text, tower, var, line).parse()


def _read_ext(tower, value, no):
    m = re.fullmatch(r"([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(.+)", value)
    if m is None:
        raise ParseError("expected 'ext <name> = <polynomial>'", no)
    name, body = m.groups()
    if name in tower.names:
        raise ParseError(f"generator {name!r} declared twice", no)
    poly = parse_expr(body, tower, name, no)
    try:
        return adjoin(tower, name, poly)
    except ValidationError as exc:
        raise ValidationError(str(exc), no) from exc


def _read_header(text):
    """Split a curve-like file into (tower, var, assignments)."""
    tower = Tower()
    var = None
    body = []
    for no, line in _lines(text):
        if line.startswith("ext ") or line.startswith("ext\t"):
            if body:
                raise ParseError("ext lines must precede the coordinates", no)
            tower = _read_ext(tower, line[3:].strip(), no)
            continue
        key, value = _key_value(line, no)
        if key == "var":
            if var is not None or body:
                raise ParseError("'var' must appear once, before the coordinates", no)
            if not _IDENT.match(value) or value in tower.names:
                raise ParseError(f"invalid variable name {value!r}", no)
            var = value
        else:
            body.append((no, key, value))
    return tower, var or "x", body


def parse_curve(text, spec):
    """Read a curve file for ``spec``; every coordinate must appear exactly once."""
    tower, var, body = _read_header(text)
    off = spec.label_offset
    coords = [[None] * len(b) for b in spec.blocks]
    for no, key, value in body:
        m = _COORD.match(key)
        if m is None:
            raise ParseError(f"expected T[i][j], got {key!r}", no)
        i, j = int(m.group(1)) - off, int(m.group(2)) - 1
        if not (0 <= i < len(coords) and 0 <= j < len(coords[i])):
            raise ShapeMismatch(f"line {no}: coordinate {key} is not a variable of the spec")
        if coords[i][j] is not None:
            raise ShapeMismatch(f"line {no}: coordinate {key} given twice")
        coords[i][j] = parse_expr(value, tower, var, no)
    missing = [f"T[{i + off}][{j + 1}]" for i, b in enumerate(coords) for j, p in enumerate(b) if p is None]
    if missing:
        raise ShapeMismatch("missing coordinates: " + ", ".join(missing))
    return Curve(coords, tower, var)


def format_tower(tower):
    lines = []
    for k, lv in enumerate(tower.levels, start=1):
        if lv.degree < 2:
            raise ValidationError(f"generator {lv.name!r} has a linear modulus and cannot be written out")
        lines.append(f"ext {lv.name} = {format_poly(lv.modulus, tower, lv.name, k - 1)}")
    return lines


def format_curve(spec, curve, comments=()):
    """Serialize a curve; ``comments`` become leading ``#`` lines."""
    curve.check_shape(spec)
    off = spec.label_offset
    lines = [f"# {c}" for c in comments]
    lines += format_tower(curve.tower)
    lines.append(f"var = {curve.var}")
    for i, b in enumerate(curve.coords):
        for j, p in enumerate(b):
            lines.append(f"T[{i + off}][{j + 1}] = {p.format(curve.var)}")
    return "\n".join(lines) + "\n"


def parse_abc(text):
    """Three polynomials from lines ``a = ...``, ``b = ...``, ``c = ...``."""
    tower, var, body = _read_header(text)
    found = {}
    for no, key, value in body:
        if key not in ("a", "b", "c"):
            raise ParseError(f"expected a, b or c, got {key!r}", no)
        if key in found:
            raise ParseError(f"{key} given twice", no)
        found[key] = parse_expr(value, tower, var, no)
    missing = [k for k in "abc" if k not in found]
    if missing:
        raise ValidationError("missing " + ", ".join(missing))
    return found["a"], found["b"], found["c"]
