"""Permutations on {1..n} with left-to-right composition.

Products are read left to right: in ``a * b`` the left factor acts first,
so ``(a * b)(i) == b(a(i))``.  With this convention
``(1 2 3)(1 2 4) == (1 4)(2 3)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import lcm


class PermError(ValueError):
    pass


@dataclass(frozen=True)
class Perm:
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise PermError(f"not a bijection on 1..{len(self.images)}: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> Perm:
        return cls(tuple(range(1, degree + 1)))

    @classmethod
    def from_cycles(cls, cycles, degree: int) -> Perm:
        images = list(range(1, degree + 1))
        seen = set()
        for cyc in cycles:
            for p in cyc:
                if not 1 <= p <= degree:
                    raise PermError(f"point {p} outside 1..{degree}")
                if p in seen:
                    raise PermError(f"point {p} repeated in cycle notation")
                seen.add(p)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a - 1] = b
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> Perm:
        cycles = parse_cycles(text)
        top = max((p for c in cycles for p in c), default=1)
        if degree is None:
            degree = top
        return cls.from_cycles(cycles, degree)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Perm) -> Perm:
        return perm_compose(self, other)

    def inverse(self) -> Perm:
        inv = [0] * self.degree
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Perm(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen or self(start) == start:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def order(self) -> int:
        return lcm(*self.cycle_type()) if self.cycles() else 1

    def support(self) -> frozenset[int]:
        return frozenset(i for i in range(1, self.degree + 1) if self(i) != i)

    def is_even(self) -> bool:
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    def extend(self, degree: int) -> Perm:
        if degree < self.degree:
            raise PermError("cannot shrink a permutation")
        return Perm(self.images + tuple(range(self.degree + 1, degree + 1)))

    def __str__(self) -> str:
        return format_cycles(self)


def perm_compose(a: Perm, b: Perm) -> Perm:
    """Product ``a*b``: apply ``a`` first, then ``b``."""
    if a.degree != b.degree:
        raise PermError(f"degree mismatch: {a.degree} vs {b.degree}")
    return Perm(tuple(b.images[i - 1] for i in a.images))


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> list[list[int]]:
    """Parse "(1 2 3)(4 5)", compact "(123)(45)", or "1"/"()" for the identity."""
    s = text.strip()
    if s in ("", "1", "()", "e", "id"):
        return []
    pos = 0
    cycles = []
    for m in _CYCLE.finditer(s):
        if s[pos:m.start()].strip():
            raise PermError(f"bad cycle notation: {text!r}")
        pos = m.end()
        body = m.group(1).strip()
        if not body:
            continue
        if "," in body or re.search(r"\s", body):
            pts = [int(t) for t in re.split(r"[\s,]+", body) if t]
        elif body.isdigit():
            pts = [int(ch) for ch in body]
        else:
            raise PermError(f"bad cycle {body!r} in {text!r}")
        cycles.append(pts)
    if s[pos:].strip():
        raise PermError(f"bad cycle notation: {text!r}")
    return cycles


def format_cycles(p: Perm) -> str:
    cycs = p.cycles()
    if not cycs:
        return "1"
    sep = "" if p.degree <= 9 else " "
    return "".join("(" + sep.join(str(i) for i in c) + ")" for c in cycs)
