"""ASCII input format for rings, ideals and presentations.

Grammar sketch:

    ring x, y | relations: x^3 - y^2 | order: degrevlex
    ideal: x^3, y^3
    generators: x^2, x*y^2, y^4
    relations-matrix:
      y^2, 0
      -x, y^2
      0, -x

Variables are `[a-zA-Z][a-zA-Z0-9_]*`, coefficients are integers or p/q
fractions, `^` is power and `*` between factors is optional.  Errors carry
line and column positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .groebner import Ideal
from .modules import Presentation
from .orders import DEGREVLEX, parse_order
from .poly import CoordinateRing, Polynomial


class ParseError(ValueError):
    def __init__(self, message, line, column):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass
class _Scanner:
    text: str
    line: int
    pos: int = 0

    def peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def error(self, message):
        raise ParseError(message, self.line, self.pos + 1)


def _parse_number(s: _Scanner) -> Fraction:
    start = s.pos
    while s.peek().isdigit():
        s.pos += 1
    if s.pos == start:
        s.error("expected a digit")
    num = int(s.text[start: s.pos])
    if s.peek() == "/":
        s.pos += 1
        dstart = s.pos
        while s.peek().isdigit():
            s.pos += 1
        if s.pos == dstart:
            s.error("expected a denominator")
        return Fraction(num, int(s.text[dstart: s.pos]))
    return Fraction(num)


def _parse_name(s: _Scanner) -> str:
    start = s.pos
    if not (s.peek().isalpha()):
        s.error("expected a variable name")
    s.pos += 1
    while s.peek().isalnum() or s.peek() == "_":
        s.pos += 1
    return s.text[start: s.pos]


def _parse_power(s: _Scanner) -> int:
    s.skip_ws()
    if s.peek() != "^":
        return 1
    s.pos += 1
    s.skip_ws()
    if s.peek() == "^":
        s.error("unexpected second '^'")
    if not s.peek().isdigit():
        s.error("expected an exponent")
    start = s.pos
    while s.peek().isdigit():
        s.pos += 1
    return int(s.text[start: s.pos])


def _parse_term(s: _Scanner, ring: CoordinateRing) -> Polynomial:
    """One signless term: optional coefficient followed by variable powers."""
    coeff = Fraction(1)
    exps = [0] * len(ring.variables)
    saw = False
    s.skip_ws()
    if s.peek().isdigit():
        coeff = _parse_number(s)
        saw = True
    while True:
        s.skip_ws()
        if s.peek() == "*":
            s.pos += 1
            s.skip_ws()
        if s.peek().isdigit():
            coeff *= _parse_number(s)
            saw = True
            continue
        if s.peek().isalpha():
            name = _parse_name(s)
            if name not in ring.variables:
                s.error(f"unknown variable {name!r}")
            exps[ring.index(name)] += _parse_power(s)
            saw = True
            continue
        break
    if not saw:
        s.error("expected a term")
    return Polynomial(ring, {tuple(exps): coeff} if coeff else {})


def parse_polynomial(text: str, ring: CoordinateRing, line=1) -> Polynomial:
    s = _Scanner(text, line)
    total = ring.zero()
    sign = 1
    s.skip_ws()
    if s.peek() == "-":
        sign = -1
        s.pos += 1
    elif s.peek() == "+":
        s.pos += 1
    while True:
        term = _parse_term(s, ring)
        total = total + sign * term
        s.skip_ws()
        if s.peek() == "+":
            sign = 1
            s.pos += 1
        elif s.peek() == "-":
            sign = -1
            s.pos += 1
        else:
            break
    s.skip_ws()
    if s.pos != len(s.text):
        s.error(f"unexpected character {s.peek()!r}")
    return total


def _split_top(text, sep=","):
    return [p.strip() for p in text.split(sep) if p.strip()]


def parse_ring(line_text: str, line=1) -> CoordinateRing:
    parts = [p.strip() for p in line_text.split("|")]
    head = parts[0]
    if not head.startswith("ring"):
        raise ParseError("expected 'ring'", line, 1)
    variables = _split_top(head[len("ring"):])
    if not variables:
        raise ParseError("expected at least one variable", line, len("ring") + 1)
    order = DEGREVLEX
    relation_texts = []
    for part in parts[1:]:
        if part.startswith("relations:"):
            relation_texts = _split_top(part[len("relations:"):])
        elif part.startswith("order:"):
            order = parse_order(part[len("order:"):])
        else:
            raise ParseError(f"unknown ring clause {part!r}", line, 1)
    free = CoordinateRing(variables, order)
    if not relation_texts:
        return free
    rels = [parse_polynomial(t, free, line) for t in relation_texts]
    return free.quotient(rels)


@dataclass
class ParsedInput:
    ring: CoordinateRing
    ideal: Ideal | None = None
    presentation: Presentation | None = None
    generators: list | None = None


def parse_input(text: str) -> ParsedInput:
    """Parse a full input file: ring header plus an ideal or a presentation."""
    lines = text.splitlines()
    ring = None
    ideal = None
    generators = None
    matrix_rows = None
    in_matrix = False
    for lineno, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if in_matrix:
            if ":" in stripped and not stripped[0].isdigit() and stripped[0] not in "+-":
                in_matrix = False
            else:
                matrix_rows.append(
                    [parse_polynomial(t, ring, lineno) for t in _split_top(stripped)]
                )
                continue
        if stripped.startswith("ring"):
            ring = parse_ring(stripped, lineno)
        elif stripped.startswith("ideal:"):
            if ring is None:
                raise ParseError("ideal before ring header", lineno, 1)
            ideal = Ideal(ring, [
                parse_polynomial(t, ring, lineno) for t in _split_top(stripped[len("ideal:"):])
            ])
        elif stripped.startswith("generators:"):
            if ring is None:
                raise ParseError("generators before ring header", lineno, 1)
            generators = [
                parse_polynomial(t, ring, lineno)
                for t in _split_top(stripped[len("generators:"):])
            ]
        elif stripped.startswith("relations-matrix:"):
            if generators is None:
                raise ParseError("relations-matrix before generators", lineno, 1)
            matrix_rows = []
            in_matrix = True
        else:
            raise ParseError(f"unrecognized directive {stripped.split(':')[0]!r}", lineno, 1)
    if ring is None:
        raise ParseError("missing ring header", 1, 1)
    presentation = None
    if generators is not None:
        if matrix_rows is None:
            matrix_rows = [[] for _ in generators]
        if len(matrix_rows) != len(generators):
            raise ParseError(
                f"relations-matrix has {len(matrix_rows)} rows for {len(generators)} generators",
                len(lines), 1,
            )
        presentation = Presentation(ring, len(generators), matrix_rows)
    return ParsedInput(ring=ring, ideal=ideal, presentation=presentation, generators=generators)
