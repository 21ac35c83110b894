"""Recursive-descent parser for algebra expressions.

Grammar (whitespace separates tokens; juxtaposition multiplies)::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/' | <juxtaposition>) unary)*
    unary   := '-' unary | '+' unary | power
    power   := atom ('^' ['-'] INT)?
    atom    := INT | 'r' | 's' | 'q' | e<i> | f<i> | w<i> | w<i>'
             | '(' expr ')' | '[' expr ',' expr ']'

``[x, y]`` is ``xy - yx``.  Division is only allowed by scalars, negative
powers only for scalars and torus monomials.  A multi-line input is read as
the sum of its lines, which makes printed elements parse back.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .algebra import E, F, W, WP, Element, Letter, canonical_word, const
from .scalars import ONE, R, S, Scalar

__all__ = ["ParseError", "UnknownGenerator", "parse_expression", "parse_scalar", "tokenize"]


class ParseError(SyntaxError):
    def __init__(self, message: str, pos: int, text: str = ""):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos
        self.text = text


class UnknownGenerator(ParseError):
    pass


@dataclass(frozen=True)
class Token:
    kind: str  # INT, NAME, GEN, OP, END
    value: str
    pos: int


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<INT>\d+)|(?P<GEN>[efw]\d+'?)|(?P<NAME>[A-Za-z_]\w*'?)|(?P<OP>[-+*/^()\[\],]))"
)


def tokenize(text: str) -> list[Token]:
    out: list[Token] = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        out.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(Token("END", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, rank: int, allow_q: bool):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0
        self.rank = rank
        self.allow_q = allow_q

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def error(self, message: str, tok: Token | None = None) -> ParseError:
        tok = tok or self.tok
        return ParseError(message, tok.pos, self.text)

    def expect(self, value: str) -> None:
        if self.tok.kind != "OP" or self.tok.value != value:
            found = self.tok.value or "end of input"
            raise self.error(f"expected {value!r}, found {found!r}")
        self.advance()

    def parse(self) -> Element:
        if self.tok.kind == "END":
            raise self.error("empty expression")
        x = self.expr()
        if self.tok.kind != "END":
            raise self.error(f"unexpected {self.tok.value!r}")
        return x

    def expr(self) -> Element:
        x = self.term()
        while self.tok.kind == "OP" and self.tok.value in "+-":
            op = self.advance().value
            y = self.term()
            x = x + y if op == "+" else x - y
        return x

    def _starts_factor(self) -> bool:
        t = self.tok
        return t.kind in ("INT", "GEN", "NAME") or (t.kind == "OP" and t.value in "([")

    def term(self) -> Element:
        x = self.unary()
        while True:
            t = self.tok
            if t.kind == "OP" and t.value == "*":
                self.advance()
                x = x * self.unary()
            elif t.kind == "OP" and t.value == "/":
                self.advance()
                y = self.unary()
                c = _as_scalar(y)
                if c is None:
                    raise self.error("can only divide by a scalar", t)
                if c.is_zero():
                    raise self.error("division by zero", t)
                x = x.scale(c.inverse())
            elif self._starts_factor():
                x = x * self.power()
            else:
                return x

    def unary(self) -> Element:
        t = self.tok
        if t.kind == "OP" and t.value == "-":
            self.advance()
            return -self.unary()
        if t.kind == "OP" and t.value == "+":
            self.advance()
            return self.unary()
        return self.power()

    def _exponent(self) -> int:
        sign = 1
        if self.tok.kind == "OP" and self.tok.value in "+-":
            sign = -1 if self.advance().value == "-" else 1
        if self.tok.kind != "INT":
            raise self.error("expected an integer exponent")
        return sign * int(self.advance().value)

    def power(self) -> Element:
        start = self.tok
        base = self.atom()
        if not (self.tok.kind == "OP" and self.tok.value == "^"):
            return base
        self.advance()
        k = self._exponent()
        if start.kind == "GEN" and start.value[0] == "w" and len(base.terms) == 1:
            (word, c), = base.terms.items()
            (letter,) = word
            if k == 0:
                raise self.error("torus exponent must be nonzero", start)
            return Element({(Letter(letter.kind, letter.index, k),): c})
        if k >= 0:
            return base ** k
        c = _as_scalar(base)
        if c is not None:
            if c.is_zero():
                raise self.error("zero to a negative power", start)
            return const(c.inverse() ** (-k))
        inv = _torus_inverse(base)
        if inv is None:
            raise self.error("negative powers need a scalar or a torus monomial", start)
        return inv ** (-k)

    def atom(self) -> Element:
        t = self.tok
        if t.kind == "INT":
            self.advance()
            return const(int(t.value))
        if t.kind == "NAME":
            self.advance()
            if t.value == "r":
                return const(R)
            if t.value == "s":
                return const(S)
            if t.value == "q":
                if not self.allow_q:
                    raise self.error("'q' is only available under --specialize", t)
                return const(R)
            raise self.error(f"unknown name {t.value!r}", t)
        if t.kind == "GEN":
            self.advance()
            return self._generator(t)
        if t.kind == "OP" and t.value == "(":
            self.advance()
            x = self.expr()
            self.expect(")")
            return x
        if t.kind == "OP" and t.value == "[":
            self.advance()
            x = self.expr()
            self.expect(",")
            y = self.expr()
            self.expect("]")
            return x * y - y * x
        found = t.value or "end of input"
        raise self.error(f"unexpected {found!r}", t)

    def _generator(self, t: Token) -> Element:
        name = t.value
        primed = name.endswith("'")
        idx = int(name[1:-1] if primed else name[1:])
        if primed and name[0] != "w":
            raise ParseError(f"only torus letters take a prime: {name!r}", t.pos, self.text)
        if not 1 <= idx <= self.rank:
            raise UnknownGenerator(f"generator {name!r} outside rank {self.rank}", t.pos, self.text)
        kind = {"e": E, "f": F}.get(name[0], WP if primed else W)
        return Element({(Letter(kind, idx),): ONE}, _clean=True)


def _as_scalar(x: Element) -> Scalar | None:
    if not x.terms:
        return Scalar.from_int(0)
    if set(x.terms) == {()}:
        return x.terms[()]
    return None


def _torus_inverse(x: Element) -> Element | None:
    if len(x.terms) != 1:
        return None
    (word, c), = x.terms.items()
    if any(not let.is_torus() for let in word) or c.is_zero():
        return None
    inv = canonical_word(Letter(l.kind, l.index, -l.exp) for l in word)
    return Element({inv: c.inverse()})


def parse_expression(text: str, rank: int, *, allow_q: bool = False) -> Element:
    """Parse ``text`` into an element over generators of index ``1..rank``."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) > 1:
        total = Element()
        offset = 0
        for ln in text.splitlines(keepends=True):
            if ln.strip():
                try:
                    total = total + _Parser(ln, rank, allow_q).parse()
                except ParseError as exc:
                    cls = type(exc)
                    raise cls(str(exc).rsplit(" at position", 1)[0], offset + exc.pos, text) from None
            offset += len(ln)
        return total
    return _Parser(text, rank, allow_q).parse()


def parse_scalar(text: str, *, allow_q: bool = False) -> Scalar:
    x = _Parser(text, 0, allow_q).parse()
    c = _as_scalar(x)
    if c is None:
        raise ParseError("expected a scalar", 0, text)
    return c
