"""Free-group words: AST, normalization, printing and evaluation in a group.

Conventions: ``a^b = b^-1 a b`` and ``[a, b] = a^-1 b^-1 a b``.  Variables are
1-based; ``Var(3, "y")`` is a conjugator variable in representation identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np


class Word:
    __slots__ = ()

    def __mul__(self, other: Word) -> Word:
        return Product((self, other))

    def __pow__(self, k: int) -> Word:
        return Power(self, k)

    def __invert__(self) -> Word:
        return Inverse(self)

    def __str__(self) -> str:
        return format_word(self)


@dataclass(frozen=True, slots=True)
class Identity(Word):
    pass


@dataclass(frozen=True, slots=True)
class Var(Word):
    index: int
    kind: str = "x"


@dataclass(frozen=True, slots=True)
class Inverse(Word):
    word: Word


@dataclass(frozen=True, slots=True)
class Power(Word):
    word: Word
    k: int


@dataclass(frozen=True, slots=True)
class Product(Word):
    factors: tuple


@dataclass(frozen=True, slots=True)
class Conjugate(Word):
    word: Word
    by: Word


@dataclass(frozen=True, slots=True)
class Commutator(Word):
    left: Word
    right: Word


ONE = Identity()


def x(i: int) -> Var:
    return Var(i, "x")


def product(*ws: Word) -> Word:
    ws = tuple(w for w in ws if not isinstance(w, Identity))
    if not ws:
        return ONE
    if len(ws) == 1:
        return ws[0]
    return Product(ws)


# -- structure ---------------------------------------------------------------

def variables(w: Word, kind: str | None = None) -> set[int]:
    out: set[int] = set()
    _collect(w, out, kind)
    return out


def _collect(w, out, kind):
    if isinstance(w, Var):
        if kind is None or w.kind == kind:
            out.add(w.index)
    elif isinstance(w, (Inverse, Power)):
        _collect(w.word, out, kind)
    elif isinstance(w, Product):
        for f in w.factors:
            _collect(f, out, kind)
    elif isinstance(w, Conjugate):
        _collect(w.word, out, kind)
        _collect(w.by, out, kind)
    elif isinstance(w, Commutator):
        _collect(w.left, out, kind)
        _collect(w.right, out, kind)


def var_keys(w: Word) -> set[tuple[str, int]]:
    out: set[tuple[str, int]] = set()

    def walk(u):
        if isinstance(u, Var):
            out.add((u.kind, u.index))
        elif isinstance(u, (Inverse, Power)):
            walk(u.word)
        elif isinstance(u, Product):
            for f in u.factors:
                walk(f)
        elif isinstance(u, Conjugate):
            walk(u.word)
            walk(u.by)
        elif isinstance(u, Commutator):
            walk(u.left)
            walk(u.right)
    walk(w)
    return out


def substitute(w: Word, mapping) -> Word:
    """Replace variables by words; ``mapping`` is keyed by index or (kind, index)."""
    if isinstance(w, Var):
        key = (w.kind, w.index)
        if key in mapping:
            return mapping[key]
        if w.kind == "x" and w.index in mapping:
            return mapping[w.index]
        return w
    if isinstance(w, Identity):
        return w
    if isinstance(w, Inverse):
        return Inverse(substitute(w.word, mapping))
    if isinstance(w, Power):
        return Power(substitute(w.word, mapping), w.k)
    if isinstance(w, Product):
        return Product(tuple(substitute(f, mapping) for f in w.factors))
    if isinstance(w, Conjugate):
        return Conjugate(substitute(w.word, mapping), substitute(w.by, mapping))
    if isinstance(w, Commutator):
        return Commutator(substitute(w.left, mapping), substitute(w.right, mapping))
    raise TypeError(f"not a word: {w!r}")


# -- normalization -------------------------------------------------------------

Letter = tuple  # ((kind, index), +1 | -1)


def flatten(w: Word) -> tuple[Letter, ...]:
    """Freely reduced letter sequence of ``w``."""
    out: list[Letter] = []
    for letter in _letters(w):
        if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def _inv_letters(seq):
    return [(v, -e) for v, e in reversed(seq)]


def _letters(w: Word) -> list[Letter]:
    if isinstance(w, Identity):
        return []
    if isinstance(w, Var):
        return [((w.kind, w.index), 1)]
    if isinstance(w, Inverse):
        return _inv_letters(_letters(w.word))
    if isinstance(w, Power):
        base = _letters(w.word)
        if w.k < 0:
            base = _inv_letters(base)
        return base * abs(w.k)
    if isinstance(w, Product):
        return [c for f in w.factors for c in _letters(f)]
    if isinstance(w, Conjugate):
        b = _letters(w.by)
        return _inv_letters(b) + _letters(w.word) + b
    if isinstance(w, Commutator):
        a, b = _letters(w.left), _letters(w.right)
        return _inv_letters(a) + _inv_letters(b) + a + b
    raise TypeError(f"not a word: {w!r}")


def from_letters(seq) -> Word:
    factors = []
    for (kind, i), e in seq:
        v = Var(i, kind)
        factors.append(v if e == 1 else Inverse(v))
    return product(*factors)


# -- printing ----------------------------------------------------------------------

def _var_name(v: Var) -> str:
    return f"{v.kind}{v.index}"


def format_word(w: Word) -> str:
    """DSL text that parses back to an equivalent word."""
    if isinstance(w, Identity):
        return "1"
    if isinstance(w, Var):
        return _var_name(w)
    if isinstance(w, Inverse):
        return "~" + _atom(w.word)
    if isinstance(w, Power):
        return f"{_atom(w.word)}^{w.k}"
    if isinstance(w, Product):
        parts = []
        for f in w.factors:
            s = format_word(f) if not isinstance(f, Product) else "(" + format_word(f) + ")"
            if parts and parts[-1][-1].isdigit() and s[0].isdigit():
                parts.append("*")
            parts.append(s)
        return "".join(parts)
    if isinstance(w, Conjugate):
        return f"{_atom(w.word)}^{_atom(w.by)}"
    if isinstance(w, Commutator):
        return f"[{format_word(w.left)},{format_word(w.right)}]"
    raise TypeError(f"not a word: {w!r}")


def _atom(w: Word) -> str:
    if isinstance(w, (Var, Identity, Commutator)):
        return format_word(w)
    return "(" + format_word(w) + ")"


# -- evaluation ---------------------------------------------------------------------

class EvalError(KeyError):
    pass


def _lookup(assignment, v: Var):
    key = (v.kind, v.index)
    if key in assignment:
        return assignment[key]
    if v.kind == "x" and v.index in assignment:
        return assignment[v.index]
    raise EvalError(f"variable {_var_name(v)} is not assigned")


def eval_word(G, w: Word, assignment) -> int:
    """Element id of ``w`` under ``assignment`` (index or (kind, index) -> id)."""
    return int(_eval(G, w, assignment))


def eval_batch(G, w: Word, assignment):
    """Vectorized evaluation: assignment values may be ints or numpy arrays."""
    return _eval(G, w, assignment)


def _eval(G, w, a):
    if isinstance(w, Var):
        return _lookup(a, w)
    if isinstance(w, Identity):
        return 0
    if isinstance(w, Inverse):
        return G.inv[_eval(G, w.word, a)]
    if isinstance(w, Power):
        return G.pow_table[_eval(G, w.word, a), w.k % G.exponent]
    if isinstance(w, Product):
        vals = [_eval(G, f, a) for f in w.factors]
        return reduce(lambda p, q: G.mul[p, q], vals)
    if isinstance(w, Conjugate):
        g = _eval(G, w.word, a)
        b = _eval(G, w.by, a)
        return G.mul[G.mul[G.inv[b], g], b]
    if isinstance(w, Commutator):
        p = _eval(G, w.left, a)
        q = _eval(G, w.right, a)
        return G.mul[G.mul[G.inv[p], G.inv[q]], G.mul[p, q]]
    raise TypeError(f"not a word: {w!r}")


def eval_flat(G, w: Word, assignment) -> int:
    """Evaluate via the freely reduced letter sequence, one letter at a time.

    Shares no code with :func:`eval_word`; used to re-check counterexamples.
    """
    acc = 0
    mul, inv = G.mul_list, G.inv_list
    for (kind, i), e in flatten(w):
        g = int(_lookup(assignment, Var(i, kind)))
        acc = mul[acc][g if e == 1 else inv[g]]
    return acc


def solvability_word(s: int, start: int = 1) -> Word:
    """``v_1 = [x1, x2]``, ``v_{s+1} = [v_s(first half), v_s(second half)]``."""
    if s < 1:
        raise ValueError("solvability class must be >= 1")
    if s == 1:
        return Commutator(x(start), x(start + 1))
    half = 2 ** (s - 1)
    return Commutator(solvability_word(s - 1, start), solvability_word(s - 1, start + half))
