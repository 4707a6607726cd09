"""Infix expression language for multivectors.

Grammar (juxtaposition is not multiplication; '*' is required):

    expr    := term (('+' | '-') term)*
    term    := factor ('*' factor)*
    factor  := ('-' | '+')* power
    power   := atom ('^' integer)?
    atom    := rational | blade | '(' expr ')'

Rationals are written ``a`` or ``a/b`` (no spaces around '/', b nonzero).
Blades are ``e`` (identity), ``e1``, ``e23`` ... with strictly increasing
single-digit indices; indices above 9 are parenthesized, e.g. ``e(10)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Multivector, Signature
from .recursive import _normalize


class ExpressionError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


@dataclass(frozen=True)
class _Token:
    kind: str  # NUMBER, BLADE, OP, LPAREN, RPAREN, EOF
    value: object
    pos: int


def _lex_blade(text: str, start: int, n: int) -> tuple[int, int]:
    """Scan blade indices after 'e'; returns (bits, next_pos)."""
    i = start
    indices: list[int] = []
    while i < len(text):
        ch = text[i]
        if ch.isdigit():
            indices.append(int(ch))
            i += 1
        elif ch == "(" and i + 1 < len(text) and text[i + 1].isdigit():
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            if j >= len(text) or text[j] != ")":
                raise ExpressionError("unterminated blade index", i)
            indices.append(int(text[i + 1 : j]))
            i = j + 1
        else:
            break
    bits = 0
    prev = 0
    for idx in indices:
        if idx <= prev:
            raise ExpressionError(f"blade indices must strictly increase, got index {idx}", start)
        if not 1 <= idx <= n:
            raise ExpressionError(f"blade index {idx} out of range 1..{n}", start)
        bits |= 1 << (idx - 1)
        prev = idx
    return bits, i


def _tokenize(text: str, sig: Signature) -> list[_Token]:
    tokens = []
    i = 0
    length = len(text)
    while i < length:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < length and text[j].isdigit():
                j += 1
            num = int(text[i:j])
            den = 1
            if j < length and text[j] == "/":
                k = j + 1
                if k >= length or not text[k].isdigit():
                    raise ExpressionError("expected digits after '/'", j)
                m = k
                while m < length and text[m].isdigit():
                    m += 1
                den = int(text[k:m])
                if den == 0:
                    raise ExpressionError("zero denominator", k)
                j = m
            tokens.append(_Token("NUMBER", Fraction(num, den), i))
            i = j
        elif ch == "e":
            bits, j = _lex_blade(text, i + 1, sig.n)
            tokens.append(_Token("BLADE", bits, i))
            i = j
        elif ch in "+-*^":
            tokens.append(_Token("OP", ch, i))
            i += 1
        elif ch == "(":
            tokens.append(_Token("LPAREN", ch, i))
            i += 1
        elif ch == ")":
            tokens.append(_Token("RPAREN", ch, i))
            i += 1
        else:
            raise ExpressionError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("EOF", None, length))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], sig: Signature):
        self.tokens = tokens
        self.sig = sig
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self) -> Multivector:
        value = self.expr()
        tok = self.peek()
        if tok.kind != "EOF":
            raise ExpressionError(f"unexpected {tok.value!r}", tok.pos)
        return value

    def expr(self) -> Multivector:
        value = self.term()
        while self.peek().kind == "OP" and self.peek().value in "+-":
            op = self.advance().value
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Multivector:
        value = self.factor()
        while self.peek().kind == "OP" and self.peek().value == "*":
            self.advance()
            value = value * self.factor()
        return value

    def factor(self) -> Multivector:
        negate = False
        while self.peek().kind == "OP" and self.peek().value in "+-":
            if self.advance().value == "-":
                negate = not negate
        value = self.power()
        return -value if negate else value

    def power(self) -> Multivector:
        value = self.atom()
        if self.peek().kind == "OP" and self.peek().value == "^":
            self.advance()
            tok = self.peek()
            if tok.kind != "NUMBER" or Fraction(tok.value).denominator != 1:
                raise ExpressionError("exponent must be a nonnegative integer", tok.pos)
            self.advance()
            value = value ** int(tok.value)
        return value

    def atom(self) -> Multivector:
        tok = self.advance()
        if tok.kind == "NUMBER":
            return Multivector.scalar(self.sig, _normalize(tok.value))
        if tok.kind == "BLADE":
            return Multivector.basis_blade(self.sig, tok.value)
        if tok.kind == "LPAREN":
            value = self.expr()
            closing = self.advance()
            if closing.kind != "RPAREN":
                raise ExpressionError("expected ')'", closing.pos)
            return value
        if tok.kind == "EOF":
            raise ExpressionError("unexpected end of expression", tok.pos)
        raise ExpressionError(f"expected a value, got {tok.value!r}", tok.pos)


def parse_expression(text: str, sig: Signature) -> Multivector:
    """Evaluate an expression in Cl(p,q) exactly."""
    return _Parser(_tokenize(text, sig), sig).parse()


def format_rational(x) -> str:
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def blade_name(bits: int) -> str:
    if bits == 0:
        return "e"
    parts = []
    a = 1
    while bits:
        if bits & 1:
            parts.append(str(a) if a <= 9 else f"({a})")
        bits >>= 1
        a += 1
    return "e" + "".join(parts)


def format_multivector(u: Multivector) -> str:
    """Canonical text form: blades in increasing bit order, zeros omitted.

    The output reparses to the same element under parse_expression.
    """
    parts = []
    for bits, c in enumerate(u.coeffs):
        if c == 0:
            continue
        f = Fraction(c)
        mag = format_rational(abs(f))
        if bits == 0:
            body = mag
        elif abs(f) == 1:
            body = blade_name(bits)
        else:
            body = f"{mag}*{blade_name(bits)}"
        parts.append(("-" if f < 0 else "+", body))
    if not parts:
        return "0"
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
