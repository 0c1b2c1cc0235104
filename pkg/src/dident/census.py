"""Census of small groups: every group of order <= 24 up to isomorphism, plus
the larger named groups needed by the verification campaigns.

Each entry is a construction expression (see :mod:`dident.construct`), so the
census carries no opaque tables.
"""

from __future__ import annotations

import re
import time
from dataclasses import dataclass
from functools import lru_cache

from .construct import build_named
from .groups import FiniteGroup, GroupError
from .structure import (center, is_isomorphic, is_normal, normal_subgroups, order_spectrum,
                        quotient, subgroups)

CENSUS_MAX_ORDER = 24
EXPECTED_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2, 10: 2, 11: 1, 12: 5,
                   13: 1, 14: 2, 15: 1, 16: 14, 17: 1, 18: 5, 19: 1, 20: 5, 21: 2, 22: 2,
                   23: 1, 24: 15}


@dataclass(frozen=True)
class GroupCatalogEntry:
    name: str
    order: int
    construction: str
    aliases: tuple = ()
    note: str = ""

    def build(self) -> FiniteGroup:
        return build_named(self.construction, self.name)


def _e(name, order, construction, aliases=(), note=""):
    return GroupCatalogEntry(name, order, construction, tuple(aliases), note)


_SMALL = [
    _e("Z1", 1, "trivial()", ["1", "trivial"]),
    _e("Z2", 2, "cyclic(2)", ["S2"]),
    _e("Z3", 3, "cyclic(3)", ["A3"]),
    _e("Z4", 4, "cyclic(4)"),
    _e("Z2^2", 4, "elementary_abelian(2, 2)", ["Z2xZ2", "V4", "D4"]),
    _e("Z5", 5, "cyclic(5)"),
    _e("Z6", 6, "cyclic(6)", ["Z2xZ3", "Z3xZ2"]),
    _e("S3", 6, "symmetric(3)", ["D6"]),
    _e("Z7", 7, "cyclic(7)"),
    _e("Z8", 8, "cyclic(8)"),
    _e("Z4xZ2", 8, "direct_product(cyclic(4), cyclic(2))", ["Z2xZ4"]),
    _e("Z2^3", 8, "elementary_abelian(2, 3)", ["Z2xZ2xZ2"]),
    _e("D8", 8, "dihedral(8)"),
    _e("Q8", 8, "quaternion8()"),
    _e("Z9", 9, "cyclic(9)"),
    _e("Z3xZ3", 9, "direct_product(cyclic(3), cyclic(3))", ["Z3^2"]),
    _e("Z10", 10, "cyclic(10)"),
    _e("D10", 10, "dihedral(10)"),
    _e("Z11", 11, "cyclic(11)"),
    _e("Z12", 12, "cyclic(12)"),
    _e("Z2xZ6", 12, "direct_product(cyclic(2), cyclic(6))", ["Z6xZ2", "Z2xZ2xZ3"]),
    _e("A4", 12, "alternating(4)"),
    _e("D12", 12, "dihedral(12)", ["Z2xS3"]),
    _e("Z3:Z4", 12, 'semidirect(cyclic(3), cyclic(4), ["g1^-1"])', ["Dic12"]),
    _e("Z13", 13, "cyclic(13)"),
    _e("Z14", 14, "cyclic(14)"),
    _e("D14", 14, "dihedral(14)"),
    _e("Z15", 15, "cyclic(15)"),
    _e("Z16", 16, "cyclic(16)"),
    _e("Z4xZ4", 16, "direct_product(cyclic(4), cyclic(4))"),
    _e("Z8xZ2", 16, "direct_product(cyclic(8), cyclic(2))", ["Z2xZ8"]),
    _e("Z4xZ2^2", 16, "direct_product(cyclic(4), cyclic(2), cyclic(2))", ["Z4xZ2xZ2"]),
    _e("Z2^4", 16, "elementary_abelian(2, 4)"),
    _e("D16", 16, "dihedral(16)"),
    _e("Q16", 16, "dicyclic(16)"),
    _e("SD16", 16, 'semidirect(cyclic(8), cyclic(2), ["g1^3"])'),
    _e("M16", 16, 'semidirect(cyclic(8), cyclic(2), ["g1^5"])'),
    _e("D8xZ2", 16, "direct_product(dihedral(8), cyclic(2))", ["Z2xD8"]),
    _e("Q8xZ2", 16, "direct_product(quaternion8(), cyclic(2))", ["Z2xQ8"]),
    _e("Z4:Z4", 16, 'semidirect(cyclic(4), cyclic(4), ["g1^-1"])'),
    _e("(Z4xZ2):Z2", 16, 'semidirect(direct_product(cyclic(4), cyclic(2)), cyclic(2), ["g1 g2", "g2"])',
       ["Z2^2:Z4"]),
    _e("Pauli", 16, 'semidirect(direct_product(cyclic(4), cyclic(2)), cyclic(2), ["g1", "g1^2 g2"])',
       ["D8oZ4", "Q8oZ4"], "central product of D8 and Z4"),
    _e("Z17", 17, "cyclic(17)"),
    _e("Z18", 18, "cyclic(18)"),
    _e("Z6xZ3", 18, "direct_product(cyclic(6), cyclic(3))", ["Z3xZ6"]),
    _e("D18", 18, "dihedral(18)"),
    _e("Z3xS3", 18, "direct_product(cyclic(3), symmetric(3))", ["S3xZ3"]),
    _e("Z3^2:Z2", 18, 'semidirect(direct_product(cyclic(3), cyclic(3)), cyclic(2), ["g1^-1", "g2^-1"])',
       ["(Z3xZ3):Z2"], "inversion action; the perm group <(123),(456),(12)(45)>"),
    _e("Z19", 19, "cyclic(19)"),
    _e("Z20", 20, "cyclic(20)"),
    _e("Z10xZ2", 20, "direct_product(cyclic(10), cyclic(2))", ["Z2xZ10", "Z5xZ2^2"]),
    _e("D20", 20, "dihedral(20)"),
    _e("Dic20", 20, 'semidirect(cyclic(5), cyclic(4), ["g1^-1"])', ["Z5:Z4"]),
    _e("F20", 20, 'semidirect(cyclic(5), cyclic(4), ["g1^2"])', ["Z5:Z4(a^b=a^2)", "AGL(1,5)"],
       "Frobenius group <a, b | a^5 = b^4 = 1, a^b = a^2>"),
    _e("Z21", 21, "cyclic(21)"),
    _e("Z7:Z3", 21, 'semidirect(cyclic(7), cyclic(3), ["g1^2"])'),
    _e("Z22", 22, "cyclic(22)"),
    _e("D22", 22, "dihedral(22)"),
    _e("Z23", 23, "cyclic(23)"),
    _e("Z24", 24, "cyclic(24)"),
    _e("Z12xZ2", 24, "direct_product(cyclic(12), cyclic(2))", ["Z2xZ12"]),
    _e("Z6xZ2^2", 24, "direct_product(cyclic(6), cyclic(2), cyclic(2))", ["Z2^2xZ6"]),
    _e("S4", 24, "symmetric(4)"),
    _e("SL(2,3)", 24, "matrix_group(3, [[[1, 1], [0, 1]], [[0, 2], [1, 0]]])", ["SL23"]),
    _e("Z3:Z8", 24, 'semidirect(cyclic(3), cyclic(8), ["g1^-1"])'),
    _e("Dic24", 24, 'semidirect(cyclic(3), quaternion8(), [["g1^-1"], ["g1"]])', ["Z3:Q8"]),
    _e("Z4xS3", 24, "direct_product(cyclic(4), symmetric(3))", ["S3xZ4"]),
    _e("D24", 24, "dihedral(24)"),
    _e("Z2xDic12", 24, 'direct_product(cyclic(2), semidirect(cyclic(3), cyclic(4), ["g1^-1"]))'),
    _e("Z3:D8", 24, 'semidirect(cyclic(3), dihedral(8), [["g1^-1"], ["g1"]])', ["(Z6xZ2):Z2"]),
    _e("Z3xD8", 24, "direct_product(cyclic(3), dihedral(8))", ["D8xZ3"]),
    _e("Z3xQ8", 24, "direct_product(cyclic(3), quaternion8())", ["Q8xZ3"]),
    _e("Z2xA4", 24, "direct_product(cyclic(2), alternating(4))", ["A4xZ2"]),
    _e("Z2^2xS3", 24, "direct_product(cyclic(2), dihedral(12))", ["Z2xD12", "D12xZ2"]),
]

_LARGE = [
    _e("Z5xZ5", 25, "direct_product(cyclic(5), cyclic(5))", ["Z5^2"]),
    _e("Heis27", 27, 'semidirect(direct_product(cyclic(3), cyclic(3)), cyclic(3), ["g1", "g1 g2"])',
       ["UT(3,3)", "3^(1+2)"], "nonabelian group of order 27 and exponent 3"),
    _e("Z3^3", 27, "elementary_abelian(3, 3)"),
    _e("Z3^2:Z4", 36, 'semidirect(direct_product(cyclic(3), cyclic(3)), cyclic(4), ["g2", "g1^-1"])',
       ["(Z3xZ3):Z4"], "a1^b = a2, a2^b = a1^-1; realized in A6 by (123), (456), (1425)(36)"),
    _e("A5", 60, "alternating(5)"),
    _e("S4:Z3", 72, 'semidirect(symmetric(4), cyclic(3), conjugation_images(symmetric(4), "(123)"))',
       ["S4xZ3"], "S4 extended by b acting as conjugation by (123)"),
    _e("S5", 120, "symmetric(5)"),
    _e("SL(2,5)", 120, "matrix_group(5, [[[1, 1], [0, 1]], [[0, 4], [1, 0]]])", ["SL25"]),
    _e("A5xZ2", 120, "direct_product(alternating(5), cyclic(2))", ["Z2xA5"]),
    _e("A5xZ3", 180, "direct_product(alternating(5), cyclic(3))", ["Z3xA5"]),
    _e("A6", 360, "alternating(6)"),
    _e("S6", 720, "symmetric(6)"),
]


def census_entries(include_large: bool = True) -> list[GroupCatalogEntry]:
    return list(_SMALL) + (list(_LARGE) if include_large else [])


def _norm(name: str) -> str:
    s = name.strip().replace("×", "x").replace("⋊", ":").replace(" ", "")
    s = s.replace("_", "").replace("{", "").replace("}", "")
    return s.lower()


@lru_cache(maxsize=None)
def _index() -> dict[str, GroupCatalogEntry]:
    out = {}
    for e in census_entries():
        for key in (e.name,) + e.aliases:
            out.setdefault(_norm(key), e)
    return out


def find_entry(name: str) -> GroupCatalogEntry:
    try:
        return _index()[_norm(name)]
    except KeyError:
        raise GroupError(f"unknown group {name!r}") from None


_PATTERNS = [
    (re.compile(r"z(\d+)"), lambda m: f"cyclic({m[1]})"),
    (re.compile(r"c(\d+)"), lambda m: f"cyclic({m[1]})"),
    (re.compile(r"d(\d+)"), lambda m: f"dihedral({m[1]})"),
    (re.compile(r"s(\d+)"), lambda m: f"symmetric({m[1]})"),
    (re.compile(r"a(\d+)"), lambda m: f"alternating({m[1]})"),
    (re.compile(r"z(\d+)\^(\d+)"), lambda m: f"direct_product({', '.join(['cyclic(' + m[1] + ')'] * int(m[2]))})"),
]


@lru_cache(maxsize=None)
def named_group(name: str) -> FiniteGroup:
    """Census group by name or alias; also accepts generic names such as ``Z7``,
    ``D14``, ``S5``, ``Z7xZ7`` or a construction expression."""
    try:
        return find_entry(name).build()
    except GroupError:
        pass
    key = _norm(name)
    parts = key.split("x")
    exprs = []
    for part in parts:
        for pat, make in _PATTERNS:
            m = pat.fullmatch(part)
            if m:
                exprs.append(make(m))
                break
        else:
            exprs = []
            break
    if exprs:
        expr = exprs[0] if len(exprs) == 1 else f"direct_product({', '.join(exprs)})"
        return build_named(expr, name)
    if "(" in name:
        return build_named(name)
    raise GroupError(f"unknown group {name!r}")


@lru_cache(maxsize=None)
def groups_of_order(n: int) -> tuple[FiniteGroup, ...]:
    if not 1 <= n <= CENSUS_MAX_ORDER:
        raise GroupError(f"census covers orders 1..{CENSUS_MAX_ORDER}, not {n}")
    return tuple(named_group(e.name) for e in _SMALL if e.order == n)


def all_census_groups(max_order: int = CENSUS_MAX_ORDER) -> list[FiniteGroup]:
    return [G for n in range(1, max_order + 1) for G in groups_of_order(n)]


# -- self-check -----------------------------------------------------------------------

def _has_abelian_section_of_order(G: FiniteGroup, k: int) -> bool:
    subs = subgroups(G, max_gens=None)
    for H in subs:
        if H.order % k:
            continue
        hg = H.as_group()
        pos = {g: i for i, g in enumerate(H.members)}
        for K in subs:
            if K.order * k != H.order or (K.mask & ~H.mask):
                continue
            local = [pos[x] for x in K.members]
            if is_normal(hg, local) and quotient(hg, local).is_abelian():
                return True
    return False


def census_selfcheck(max_order: int = CENSUS_MAX_ORDER, include_large: bool = True) -> dict:
    """Rebuild the census and check counts, orders, pairwise non-isomorphism and
    the structural facts the campaigns rely on.  Returns a report dict."""
    t0 = time.perf_counter()
    items = []

    def item(name, ok, detail=""):
        items.append({"check": name, "pass": bool(ok), "detail": detail})

    for n in range(1, max_order + 1):
        gs = groups_of_order(n)
        item(f"count[{n}]", len(gs) == EXPECTED_COUNTS[n], f"{len(gs)} groups, expected {EXPECTED_COUNTS[n]}")
        for G in gs:
            item(f"order[{G.name}]", G.order == n, f"|{G.name}| = {G.order}")
        dup = [(a.name, b.name) for i, a in enumerate(gs) for b in gs[i + 1:]
               if is_isomorphic(a, b) is not None]
        item(f"distinct[{n}]", not dup, f"isomorphic pairs: {dup}" if dup else "pairwise non-isomorphic")
    if include_large:
        for e in _LARGE:
            G = named_group(e.name)
            item(f"order[{e.name}]", G.order == e.order, f"|{e.name}| = {G.order}")

    def spectrum(name):
        return order_spectrum(named_group(name))

    if max_order >= 8:
        for name in ("Z4xZ2", "Q8"):
            item(f"three elements of order 4 in {name}", spectrum(name).get(4, 0) >= 3,
                 f"spectrum {spectrum(name)}")
    if max_order >= 24:
        no6 = [G for G in groups_of_order(24) if 6 not in order_spectrum(G)]
        s4 = named_group("S4")
        ok = len(no6) == 1 and is_isomorphic(no6[0], s4) is not None
        item("order 24 without elements of order 6 is S4", ok, f"found {[G.name for G in no6]}")
    if max_order >= 16:
        bad = [G.name for G in groups_of_order(16) if not _has_abelian_section_of_order(G, 8)]
        item("every group of order 16 has an abelian section of order 8", not bad, f"exceptions: {bad}")
    if include_large:
        sl25 = spectrum("SL(2,5)")
        item("SL(2,5) has exactly one involution", sl25.get(2) == 1, f"spectrum {sl25}")
        item("A5xZ3 has an element of order 15", 15 in spectrum("A5xZ3"), f"spectrum {spectrum('A5xZ3')}")
        ext = named_group("S4:Z3")
        g = ext.op(ext.element("((12),1)"), ext.element("(1,a)"))
        item("S4:Z3 has order 72 and (12)b has order 6",
             ext.order == 72 and int(ext.orders[g]) == 6,
             f"order {ext.order}")
        heis = named_group("Heis27")
        item("Heis27 is nonabelian of exponent 3", heis.exponent == 3 and not heis.is_abelian(),
             f"exponent {heis.exponent}")
        for name, gens in (("Z3^2:Z4", ["(123)", "(456)", "(1425)(36)"]),):
            from .groups import perm_group
            P = perm_group(gens, 6)
            item(f"{name} realized inside A6", is_isomorphic(named_group(name), P) is not None,
                 f"perm group order {P.order}")
        item("center of D8 has order 2", center(named_group("D8")).order == 2)
        item("S4 has 4 normal subgroups", len(normal_subgroups(named_group("S4"))) == 4)
    passed = all(i["pass"] for i in items)
    return {"claim": "census-selfcheck", "pass": passed, "items": items,
            "seconds": round(time.perf_counter() - t0, 3)}
