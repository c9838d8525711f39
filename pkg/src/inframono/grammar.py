"""Shared text grammar for multivector polynomials.

Accepted terms look like ``3/2*x1^2*x2*e12``: an optional rational, ``x<i>``
variable powers joined by ``*``, and blade factors ``e<digits>`` (one digit
per index; ``e{1,12}`` brace syntax covers indices beyond 9).  Terms are
joined by ``+`` / ``-``; a sign may also precede a parenthesised group.
Unsorted blade indices are accepted and normalised with the correct sign.
Printing (``str`` on the value types) always produces grammar-conforming,
canonically ordered text, so parse(print(p)) == p.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .algebra import Multivector, blade_sign, _check_dim
from .polynomials import CliffordPolynomial

_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<int>\d+)"
    r"|(?P<var>x\d+)"
    r"|(?P<blade_braced>e\{[^{}]*\})"
    r"|(?P<blade>e\d*)"
    r"|(?P<op>[-+*/^()])"
)


class PolynomialSyntaxError(ValueError):
    """Malformed polynomial text; carries the 0-based offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens: list[tuple[str, str, int]] = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise PolynomialSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = match.lastgroup or ""
        if kind != "ws":
            tokens.append((kind, match.group(), pos))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, tokens: list[tuple[str, str, int]], length: int, m: int):
        self._tokens = tokens
        self._length = length
        self._m = m
        self._i = 0

    def _peek(self) -> tuple[str, str, int] | None:
        return self._tokens[self._i] if self._i < len(self._tokens) else None

    def _next(self) -> tuple[str, str, int]:
        tok = self._peek()
        if tok is None:
            raise PolynomialSyntaxError("unexpected end of input", self._length)
        self._i += 1
        return tok

    def _accept_op(self, *ops: str) -> str | None:
        tok = self._peek()
        if tok is not None and tok[0] == "op" and tok[1] in ops:
            self._i += 1
            return tok[1]
        return None

    def parse_poly(self) -> CliffordPolynomial:
        total = CliffordPolynomial.zero(self._m)
        first = True
        while True:
            sign = 1
            if first:
                op = self._accept_op("+", "-")
                if op == "-":
                    sign = -1
            else:
                tok = self._peek()
                if tok is None or (tok[0] == "op" and tok[1] == ")"):
                    break
                op = self._accept_op("+", "-")
                if op is None:
                    raise PolynomialSyntaxError("expected '+' or '-' between terms", tok[2])
                if op == "-":
                    sign = -1
            if self._accept_op("("):
                inner = self.parse_poly()
                tok = self._peek()
                if not self._accept_op(")"):
                    raise PolynomialSyntaxError(
                        "expected ')'", tok[2] if tok else self._length
                    )
                total = total + inner * sign
            else:
                total = total + self._parse_term() * sign
            first = False
        return total

    def _parse_rational(self, first: tuple[str, str, int]) -> Fraction:
        value = Fraction(int(first[1]))
        if self._accept_op("/"):
            tok = self._next()
            if tok[0] != "int":
                raise PolynomialSyntaxError("expected an integer denominator", tok[2])
            if int(tok[1]) == 0:
                raise PolynomialSyntaxError("zero denominator", tok[2])
            value /= int(tok[1])
        return value

    def _blade_indices(self, tok: tuple[str, str, int]) -> list[int]:
        kind, text, pos = tok
        if kind == "blade":
            return [int(ch) for ch in text[1:]]
        body = text[2:-1].strip()
        if not body:
            return []
        indices = []
        for piece in body.split(","):
            piece = piece.strip()
            if not piece.isdigit():
                raise PolynomialSyntaxError(f"bad blade index {piece!r}", pos)
            indices.append(int(piece))
        return indices

    def _parse_term(self) -> CliffordPolynomial:
        coeff = Fraction(1)
        exponents = [0] * self._m
        mask = 0
        sign = 1
        while True:
            tok = self._peek()
            if tok is None:
                raise PolynomialSyntaxError("expected a factor", self._length)
            kind, text, pos = tok
            if kind == "int":
                self._i += 1
                coeff *= self._parse_rational(tok)
            elif kind == "var":
                self._i += 1
                j = int(text[1:])
                if not 1 <= j <= self._m:
                    raise PolynomialSyntaxError(
                        f"variable index {j} out of range for m={self._m}", pos
                    )
                power = 1
                if self._accept_op("^"):
                    power_tok = self._next()
                    if power_tok[0] != "int":
                        raise PolynomialSyntaxError("expected an integer exponent", power_tok[2])
                    power = int(power_tok[1])
                exponents[j - 1] += power
            elif kind in ("blade", "blade_braced"):
                self._i += 1
                seen: set[int] = set()
                for j in self._blade_indices(tok):
                    if not 1 <= j <= self._m:
                        raise PolynomialSyntaxError(
                            f"blade index {j} out of range for m={self._m}", pos
                        )
                    if j in seen:
                        raise PolynomialSyntaxError(f"repeated blade index {j}", pos)
                    seen.add(j)
                    bit = 1 << (j - 1)
                    sign *= blade_sign(mask, bit)
                    mask ^= bit
            else:
                raise PolynomialSyntaxError(f"expected a factor, found {text!r}", pos)
            if not self._accept_op("*"):
                break
        coefficient = Multivector(self._m, {mask: coeff * sign})
        return CliffordPolynomial(self._m, {tuple(exponents): coefficient})

    def expect_end(self) -> None:
        tok = self._peek()
        if tok is not None:
            raise PolynomialSyntaxError(f"unexpected trailing input {tok[1]!r}", tok[2])


def parse_polynomial(text: str, m: int) -> CliffordPolynomial:
    """Parse grammar text into a polynomial over Cl(0, m).

    Raises PolynomialSyntaxError (with position) for malformed text and
    for variable or blade indices outside 1..m.
    """
    _check_dim(m)
    tokens = _tokenize(text)
    if not tokens:
        raise PolynomialSyntaxError("empty input", 0)
    parser = _Parser(tokens, len(text), m)
    poly = parser.parse_poly()
    parser.expect_end()
    return poly
