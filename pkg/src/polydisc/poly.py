"""Exact integer polynomials in one variable: parsing, printing, evaluation.

A polynomial is stored as an ascending coefficient tuple with no trailing
zeros, so structural equality is value equality. All arithmetic is on
Python ints and therefore exact at any size.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional


class PolynomialSyntaxError(ValueError):
    """Raised on malformed polynomial text; carries the 0-based position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class Polynomial:
    """Dense integer polynomial; coeffs[i] multiplies x**i."""

    coeffs: tuple[int, ...]

    @staticmethod
    def from_coeffs(coeffs: Iterable[int]) -> "Polynomial":
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        return Polynomial(tuple(cs))

    @staticmethod
    def constant(c: int) -> "Polynomial":
        return Polynomial.from_coeffs([c])

    @staticmethod
    def x() -> "Polynomial":
        return Polynomial((0, 1))

    @property
    def degree(self) -> Optional[int]:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def evaluate_mod(self, x: int, m: int) -> int:
        """Value mod m, reduced per Horner step; result in [0, m)."""
        if m < 1:
            raise ValueError("modulus must be >= 1")
        x %= m
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % m
        return acc

    def scale(self, c: int) -> "Polynomial":
        """Multiply every coefficient by a nonzero constant."""
        if c == 0:
            raise ValueError("scale factor must be nonzero")
        return Polynomial(tuple(c * a for a in self.coeffs))

    def compose(self, other: "Polynomial") -> "Polynomial":
        """self(other(x)), expanded and normalized."""
        acc = Polynomial(())
        for c in reversed(self.coeffs):
            acc = acc * other + Polynomial.constant(c)
        return acc

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial.from_coeffs(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero() or other.is_zero():
            return Polynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial.from_coeffs(out)

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative exponent")
        result = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)


# --- recursive-descent parser ---------------------------------------------
#
# expr   := term (('+' | '-') term)*
# term   := factor ('*' factor)*
# factor := '-' factor | power
# power  := primary ('^' INT)?
# primary:= INT | 'x' | '(' expr ')'
#
# Exponents must be literal nonnegative integers; implicit multiplication
# is rejected so the grammar stays unambiguous.

_SYMBOLS = "+-*^()"


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
        elif ch in _SYMBOLS:
            tokens.append((ch, ch, i))
            i += 1
        elif ch.isalpha():
            if ch != "x":
                raise PolynomialSyntaxError(f"unknown variable {ch!r}, only x is allowed", i)
            tokens.append(("x", ch, i))
            i += 1
        else:
            raise PolynomialSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens: list[tuple[str, str, int]]):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expr(self) -> Polynomial:
        acc = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while self.peek()[0] == "*":
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self) -> Polynomial:
        if self.peek()[0] == "-":
            self.take()
            return -self.factor()
        return self.power()

    def power(self) -> Polynomial:
        base = self.primary()
        if self.peek()[0] == "^":
            self.take()
            kind, value, pos = self.take()
            if kind != "int":
                raise PolynomialSyntaxError("exponent must be a nonnegative integer literal", pos)
            base = base ** int(value)
        return base

    def primary(self) -> Polynomial:
        kind, value, pos = self.take()
        if kind == "int":
            return Polynomial.constant(int(value))
        if kind == "x":
            return Polynomial.x()
        if kind == "(":
            inner = self.expr()
            kind2, _, pos2 = self.take()
            if kind2 != ")":
                raise PolynomialSyntaxError("expected ')'", pos2)
            return inner
        raise PolynomialSyntaxError(f"unexpected token {value!r}" if value else "unexpected end of input", pos)


def parse_polynomial(text: str) -> Polynomial:
    """Parse an expression over integers, x, + - * ^ and parentheses."""
    parser = _Parser(_tokenize(text))
    poly = parser.expr()
    kind, value, pos = parser.peek()
    if kind != "end":
        raise PolynomialSyntaxError(f"unexpected trailing token {value!r}", pos)
    return poly


def parse_poly_input(text: str) -> Polynomial:
    """Parse either expression text or the `coeffs:a,b,c` ascending list form."""
    stripped = text.strip()
    if stripped.startswith("coeffs:"):
        body = stripped[len("coeffs:"):]
        try:
            coeffs = [int(part.strip()) for part in body.split(",")] if body.strip() else []
        except ValueError as exc:
            raise PolynomialSyntaxError(f"bad coefficient list: {exc}", len("coeffs:")) from None
        return Polynomial.from_coeffs(coeffs)
    return parse_polynomial(stripped)
