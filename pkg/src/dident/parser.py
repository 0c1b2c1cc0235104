"""Text syntax for UDEs and group-algebra polynomials.

Formula grammar (whitespace is insignificant)::

    formula  := item ('|' item)*
    item     := macro | word '=' word | '(' formula ')'
    word     := factor (('*')? factor)*
    factor   := primary ('^' (int | primary))*
    primary  := var | '1' | '(' word ')' | '[' word ',' word ']' | '~' factor
    macro    := omega(n) | theta(w, w, w) | in_cyc(w, w, lo, hi)

Variables are ``x1, x2, ...`` (bare ``x`` means ``x1``).  In polynomial mode
``y1, y2, ...`` are also allowed, and an expression is a sum of signed terms,
each a product of parenthesized polynomials and words.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .formula import UDE, Equation, FormulaError, Membership, Omega
from .words import ONE, Commutator, Conjugate, Inverse, Power, Var, Word, product, substitute


class ParseError(FormulaError):
    def __init__(self, message: str, column: int, text: str = ""):
        super().__init__(f"{message} at column {column}")
        self.column = column
        self.text = text


_TOKENS = re.compile(r"""
    (?P<ws>\s+)
  | (?P<var>[xy]\d*)
  | (?P<name>[a-z_][a-z_0-9]*)
  | (?P<int>\d+)
  | (?P<op>[|=*^~()\[\],+\-])
""", re.VERBOSE)


@dataclass(frozen=True)
class Tok:
    kind: str
    text: str
    pos: int  # 0-based


def tokenize(text: str, allow_y: bool = False) -> list[Tok]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKENS.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos + 1, text)
        kind = m.lastgroup
        if kind == "var" and m.group().startswith("y") and not allow_y:
            kind = "name"
        if kind != "ws":
            out.append(Tok(kind, m.group(), pos))
        pos = m.end()
    # errors at the end of input point at the last character
    out.append(Tok("end", "", max(len(text.rstrip()) - 1, 0)))
    return out


class _Fail(Exception):
    def __init__(self, message, pos):
        self.message, self.pos = message, pos


class Parser:
    def __init__(self, text: str, allow_y: bool = False):
        self.text = text
        self.toks = tokenize(text, allow_y)
        self.i = 0
        self.best: _Fail | None = None

    # -- helpers
    def peek(self) -> Tok:
        return self.toks[self.i]

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        err = _Fail(message, tok.pos)
        if self.best is None or err.pos >= self.best.pos:
            self.best = err
        raise err

    def expect(self, text: str) -> Tok:
        tok = self.peek()
        if tok.text != text or tok.kind == "end":
            shown = repr(tok.text) if tok.kind != "end" else "end of input"
            self.fail(f"expected {text!r}, found {shown}")
        self.i += 1
        return tok

    def accept(self, text: str) -> bool:
        if self.peek().kind in ("op", "name") and self.peek().text == text:
            self.i += 1
            return True
        return False

    def attempt(self, fn):
        save = self.i
        try:
            return fn()
        except _Fail:
            self.i = save
            return None

    def raise_best(self):
        err = self.best or _Fail("syntax error", self.peek().pos)
        raise ParseError(err.message, err.pos + 1, self.text)

    # -- formula level
    def formula(self):
        items = [self.item()]
        while self.accept("|"):
            items.append(self.item())
        clauses, omegas = [], []
        for c, o in items:
            clauses += c
            omegas += o
        return clauses, omegas

    def item(self):
        tok = self.peek()
        if tok.kind == "name" and tok.text in MACROS:
            return self.macro()
        save = self.i
        try:
            return self.equation()
        except _Fail:
            self.i = save
        if tok.text == "(":
            self.i += 1
            inner = self.formula()
            self.expect(")")
            return inner
        return self.equation()

    def equation(self):
        left = self.word()
        self.expect("=")
        right = self.word()
        return [Equation.of(left, right)], []

    def macro(self):
        tok = self.peek()
        self.i += 1
        self.expect("(")
        if tok.text == "omega":
            n = self.integer()
            self.expect(")")
            return [], [Omega(n)]
        if tok.text == "theta":
            args = [self.word()]
            for _ in range(2):
                self.expect(",")
                args.append(self.word())
            self.expect(")")
            return theta_clauses(*args), []
        if tok.text == "in_cyc":
            a = self.word()
            self.expect(",")
            b = self.word()
            self.expect(",")
            lo = self.integer()
            self.expect(",")
            hi = self.integer()
            self.expect(")")
            if lo > hi:
                self.fail("in_cyc needs lo <= hi", tok)
            return [Membership(a, b, lo, hi)], []
        self.fail(f"unknown macro {tok.text!r}", tok)

    def integer(self) -> int:
        neg = self.accept("-")
        tok = self.peek()
        if tok.kind != "int":
            self.fail("expected an integer")
        self.i += 1
        return -int(tok.text) if neg else int(tok.text)

    # -- words
    def word(self) -> Word:
        factors = [self.factor()]
        while True:
            if self.accept("*"):
                factors.append(self.factor())
                continue
            tok = self.peek()
            if tok.kind in ("var", "int") or tok.text in ("(", "[", "~"):
                if tok.kind == "int" and tok.text != "1":
                    break
                save = self.i
                try:
                    factors.append(self.factor())
                except _Fail:
                    self.i = save
                    break
                continue
            break
        return product(*factors) if len(factors) > 1 else factors[0]

    def factor(self) -> Word:
        w = self.primary()
        while self.accept("^"):
            tok = self.peek()
            if tok.kind == "int" or tok.text == "-":
                w = Power(w, self.integer())
            else:
                w = Conjugate(w, self.primary())
        return w

    def primary(self) -> Word:
        tok = self.peek()
        if tok.kind == "var":
            self.i += 1
            idx = int(tok.text[1:]) if len(tok.text) > 1 else 1
            if idx < 1:
                self.fail("variable indices start at 1", tok)
            return Var(idx, tok.text[0])
        if tok.kind == "int":
            if tok.text != "1":
                self.fail(f"unexpected number {tok.text}", tok)
            self.i += 1
            return ONE
        if tok.text == "(":
            self.i += 1
            w = self.word()
            self.expect(")")
            return w
        if tok.text == "[":
            self.i += 1
            a = self.word()
            self.expect(",")
            b = self.word()
            self.expect("]")
            return Commutator(a, b)
        if tok.text == "~":
            self.i += 1
            return Inverse(self.factor())
        if tok.kind == "name" and tok.text in MACROS:
            self.fail(f"macro {tok.text!r} is not a word", tok)
        if tok.kind == "name":
            self.fail(f"unknown name {tok.text!r}", tok)
        shown = repr(tok.text) if tok.kind != "end" else "end of input"
        self.fail(f"expected a word, found {shown}")

    # -- polynomials (group-algebra elements)
    def polynomial(self):
        """``("sum", [(coef, [factor, ...]), ...])``; a factor is a nested sum
        or ``("word", Word)``."""
        terms = []
        sign = -1 if self.accept("-") else 1
        if sign == 1:
            self.accept("+")
        terms.append(self.term(sign))
        while True:
            if self.accept("+"):
                terms.append(self.term(1))
            elif self.accept("-"):
                terms.append(self.term(-1))
            else:
                return ("sum", terms)

    def term(self, sign: int):
        coef = 1
        tok = self.peek()
        if tok.kind == "int" and tok.text != "1":
            coef = int(tok.text)
            self.i += 1
            self.accept("*")
        factors = []
        while True:
            tok = self.peek()
            if tok.text == "(":
                sub = self.attempt(self._paren_poly)
                if sub is not None:
                    factors.append(sub)
                    continue
            if tok.kind == "var" or tok.text in ("(", "[", "~") or (tok.kind == "int" and tok.text == "1"):
                factors.append(("word", self.factor()))
                self.accept("*")
                continue
            break
        if not factors:
            self.fail("expected a term")
        return sign * coef, factors

    def _paren_poly(self):
        self.expect("(")
        inner = self.polynomial()
        self.expect(")")
        if self.peek().text == "^":
            self.fail("exponent applies to a word")
        self.accept("*")
        return inner


MACROS = ("omega", "theta", "in_cyc")


def theta_clauses(a: Word, b: Word, c: Word) -> list[Membership]:
    """The 18 membership clauses: ``x_i ∈ <x_j>`` (i ≠ j), ``x_σ1 ∈ <x_σ2 x_σ3>``
    and ``x_σ1 x_σ2 ∈ <x_σ2 x_σ3>`` over all permutations σ, exponents 0..3."""
    xs = (a, b, c)
    out = [Membership(xs[i], xs[j], 0, 3) for i in range(3) for j in range(3) if i != j]
    perms = [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)]
    out += [Membership(xs[p], product(xs[q], xs[r]), 0, 3) for p, q, r in perms]
    out += [Membership(product(xs[p], xs[q]), product(xs[q], xs[r]), 0, 3) for p, q, r in perms]
    return out


def parse_formula(text: str) -> UDE:
    p = Parser(text)
    try:
        clauses, omegas = p.formula()
        if p.peek().kind != "end":
            p.fail(f"unexpected {p.peek().text!r}")
    except _Fail:
        p.raise_best()
    return UDE(clauses, omegas, text=text)


def parse_word(text: str, allow_y: bool = False) -> Word:
    p = Parser(text, allow_y)
    try:
        w = p.word()
        if p.peek().kind != "end":
            p.fail(f"unexpected {p.peek().text!r}")
    except _Fail:
        p.raise_best()
    return w


def parse_polynomial(text: str):
    """Parse a group-algebra expression such as ``((x1^2)^y1 - 1)(x2^4 - 1)``."""
    p = Parser(text, allow_y=True)
    try:
        terms = p.polynomial()
        if p.peek().kind != "end":
            p.fail(f"unexpected {p.peek().text!r}")
    except _Fail:
        p.raise_best()
    return terms


def rename(ude: UDE, mapping) -> UDE:
    return UDE([c.substitute(mapping) for c in ude.clauses], list(ude.omegas))
