#!/usr/bin/env python3

"""Tokenizer and recursive-descent parser for polynomial expressions.

Grammar (whitespace ignored)::

    expr   = term { ("+" | "-") term }
    term   = unary { "*" unary }
    unary  = ("-" | "+") unary | power
    power  = atom [ "^" INT ]
    atom   = INT [ "/" INT ] | IDENT | "(" expr ")"
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..errors import NullcertError, ParseError
from ..fields import FieldDesc
from ..mpoly import MultiPoly


MAX_DEPTH = 100
MAX_EXPONENT = 100_000
MAX_LITERAL_DIGITS = 1000
MAX_PRODUCT_WORK = 250_000
MAX_RATIONAL_BITS = 1 << 16

GENERATOR = "t"

_TOKEN_RE = re.compile(r"\s+|(?P<num>\d+)|(?P<id>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^(),])")


@dataclass(frozen=True)
class Token:
    kind: str  # num | id | op | end
    text: str
    column: int


def tokenize(text: str, *, line: int = 0, col_offset: int = 0) -> List[Token]:
    """Split ``text`` into tokens; columns are 1-based within the line."""
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line=line, column=col_offset + pos + 1)
        if match.lastgroup is not None:
            tokens.append(Token(match.lastgroup, match.group(), col_offset + pos + 1))
        pos = match.end()
    tokens.append(Token("end", "", col_offset + len(text) + 1))
    return tokens


class ExprParser:
    """Parse expressions over ``field`` in the declared variables."""

    def __init__(
        self,
        text: str,
        field: FieldDesc,
        var_names: Sequence[str],
        *,
        line: int = 0,
        col_offset: int = 0,
    ) -> None:
        """
        初始化对象。

        Args:
            text: Source text (one line).
            field: Coefficient field.
            var_names: Declared variables, in order.
            line: Line number used in error messages.
            col_offset: Column of ``text[0]`` minus one.
        """
        self.field = field
        self.nvars = len(var_names)
        self.index: Dict[str, int] = {name: i for i, name in enumerate(var_names)}
        self.line = line
        self.tokens = tokenize(text, line=line, col_offset=col_offset)
        self.pos = 0
        self.depth = 0

    # -- token helpers -----------------------------------------------------------

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "end":
            self.pos += 1
        return tok

    def accept(self, text: str) -> bool:
        tok = self.peek()
        if tok.kind == "op" and tok.text == text:
            self.pos += 1
            return True
        return False

    def expect(self, text: str) -> Token:
        tok = self.peek()
        if tok.kind != "op" or tok.text != text:
            raise self.error(f"expected {text!r}", tok)
        return self.advance()

    def at_end(self) -> bool:
        return self.peek().kind == "end"

    def error(self, message: str, tok: Optional[Token] = None) -> ParseError:
        tok = tok or self.peek()
        found = "end of line" if tok.kind == "end" else repr(tok.text)
        return ParseError(f"{message}, found {found}", line=self.line, column=tok.column)

    def finish(self) -> None:
        if not self.at_end():
            raise self.error("unexpected trailing input")

    # -- guarded arithmetic ------------------------------------------------------

    def _check_size(self, poly: MultiPoly, tok: Token) -> MultiPoly:
        if self.field.kind == "rationals":
            for c in poly.terms.values():
                if max(c.numerator.bit_length(), c.denominator.bit_length()) > MAX_RATIONAL_BITS:
                    raise ParseError("number too large", line=self.line, column=tok.column)
        return poly

    def _mul(self, a: MultiPoly, b: MultiPoly, tok: Token) -> MultiPoly:
        if len(a) * len(b) > MAX_PRODUCT_WORK:
            raise ParseError("expression too large to expand", line=self.line, column=tok.column)
        return self._check_size(a * b, tok)

    def _pow(self, base: MultiPoly, e: int, tok: Token) -> MultiPoly:
        if e > MAX_EXPONENT:
            raise ParseError(f"exponent {e} exceeds {MAX_EXPONENT}", line=self.line, column=tok.column)
        if len(base) == 1:
            ((mono, coeff),) = base.terms.items()
            if self.field.kind == "rationals" and abs(coeff) != 1 and e * max(coeff.numerator.bit_length(), coeff.denominator.bit_length()) > MAX_RATIONAL_BITS:
                raise ParseError("number too large", line=self.line, column=tok.column)
            return MultiPoly(
                self.field,
                self.nvars,
                {tuple(x * e for x in mono): self.field.pow(coeff, e)},
            )
        result = MultiPoly.one(self.field, self.nvars)
        while e:
            if e & 1:
                result = self._mul(result, base, tok)
            e >>= 1
            if e:
                base = self._mul(base, base, tok)
        return result

    # -- grammar -------------------------------------------------------------------

    def _enter(self) -> None:
        self.depth += 1
        if self.depth > MAX_DEPTH:
            raise self.error(f"nesting deeper than {MAX_DEPTH}")

    def parse_expr(self) -> MultiPoly:
        self._enter()
        left = self.parse_term()
        while True:
            if self.accept("+"):
                left = left + self.parse_term()
            elif self.accept("-"):
                left = left - self.parse_term()
            else:
                break
        self.depth -= 1
        return left

    def parse_term(self) -> MultiPoly:
        left = self.parse_unary()
        while True:
            tok = self.peek()
            if self.accept("*"):
                left = self._mul(left, self.parse_unary(), tok)
            elif tok.kind == "op" and tok.text == "/":
                raise self.error("division is only allowed inside a rational literal")
            else:
                return left

    def parse_unary(self) -> MultiPoly:
        if self.accept("-"):
            self._enter()
            value = -self.parse_unary()
            self.depth -= 1
            return value
        if self.accept("+"):
            self._enter()
            value = self.parse_unary()
            self.depth -= 1
            return value
        return self.parse_power()

    def parse_power(self) -> MultiPoly:
        base = self.parse_atom()
        if self.accept("^"):
            exp_tok = self.advance()
            if exp_tok.kind != "num":
                raise self.error("exponent must be a nonnegative integer literal", exp_tok)
            base = self._pow(base, self._int(exp_tok), exp_tok)
        return base

    def _int(self, tok: Token) -> int:
        if len(tok.text) > MAX_LITERAL_DIGITS:
            raise ParseError("integer literal too long", line=self.line, column=tok.column)
        return int(tok.text)

    def _constant(self, value: Any) -> MultiPoly:
        return MultiPoly.constant(self.field, self.nvars, value)

    def parse_atom(self) -> MultiPoly:
        tok = self.advance()
        if tok.kind == "num":
            num = self._int(tok)
            if self.accept("/"):
                den_tok = self.advance()
                if den_tok.kind != "num":
                    raise self.error("expected a denominator", den_tok)
                if self.field.kind != "rationals":
                    raise ParseError(
                        f"rational literals are not elements of {self.field}; use residues",
                        line=self.line,
                        column=tok.column,
                    )
                den = self._int(den_tok)
                if den == 0:
                    raise ParseError("zero denominator", line=self.line, column=den_tok.column)
                return self._constant(Fraction(num, den))
            return self._constant(self.field.from_int(num))
        if tok.kind == "id":
            if tok.text in self.index:
                return MultiPoly.variable(self.field, self.nvars, self.index[tok.text])
            if tok.text == GENERATOR:
                if self.field.kind != "extension":
                    raise ParseError(f"{GENERATOR} is only defined in extension fields", line=self.line, column=tok.column)
                return self._constant(self.field.generator())
            raise ParseError(f"undeclared variable {tok.text}", line=self.line, column=tok.column)
        if tok.kind == "op" and tok.text == "(":
            value = self.parse_expr()
            self.expect(")")
            return value
        raise self.error("expected a number, variable or '('", tok)

    # -- constants and lists -------------------------------------------------------

    def parse_constant(self) -> Any:
        """One expression that must not involve variables; returns a raw value."""
        tok = self.peek()
        poly = self.parse_expr()
        if not poly.is_constant():
            raise ParseError("expected a constant", line=self.line, column=tok.column)
        return poly.coefficient((0,) * self.nvars)

    def parse_value_list(self) -> List[Any]:
        """``value { "," value }`` up to the end of input."""
        values = [self.parse_constant()]
        while self.accept(","):
            values.append(self.parse_constant())
        self.finish()
        return values

    def parse_point_list(self, arity: int) -> List[Tuple[Any, ...]]:
        """``"(" value {"," value} ")" { "," ... }`` up to the end of input."""
        points = []
        while True:
            start = self.expect("(")
            coords = [self.parse_constant()]
            while self.accept(","):
                coords.append(self.parse_constant())
            self.expect(")")
            if len(coords) != arity:
                raise ParseError(
                    f"point has {len(coords)} coordinates, expected {arity}",
                    line=self.line,
                    column=start.column,
                )
            points.append(tuple(coords))
            if self.at_end():
                return points
            self.expect(",")


def parse_poly(
    text: str,
    field: FieldDesc,
    var_names: Sequence[str],
    *,
    line: int = 0,
    col_offset: int = 0,
) -> MultiPoly:
    """Parse a full expression.

    Raises:
        ParseError: Syntax error, undeclared variable or value outside the field.
    """
    parser = ExprParser(text, field, var_names, line=line, col_offset=col_offset)
    try:
        if parser.at_end():
            raise parser.error("expected an expression")
        poly = parser.parse_expr()
        parser.finish()
    except ParseError:
        raise
    except NullcertError as exc:
        raise ParseError(str(exc), line=line, column=parser.peek().column) from exc
    return poly
