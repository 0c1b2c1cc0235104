"""Catalog of named UDEs, keyed by their display ids ("2.4", "3.7", "4.6a", ...).

Each entry records where it is expected to hold and, where known, groups in
which it fails together with a falsifying assignment (element labels of the
named census group, in variable order).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product as iproduct

from .formula import UDE, Equation, FormulaError, Membership, Omega
from .parser import parse_formula, theta_clauses
from .words import Power, Var, product, substitute


@dataclass(frozen=True)
class FormulaCatalogEntry:
    id: str
    ude: UDE = field(compare=False, repr=False)
    claimed_valid_in: tuple = ()
    known_failures: tuple = ()  # (group name, witness labels)
    note: str = ""
    variant_of: str | None = None
    params: tuple = ()
    disputed: bool = False  # variants whose validity is adjudicated by search

    @property
    def text(self) -> str:
        return str(self.ude)


def _or(*parts: str) -> str:
    return " | ".join(parts)


def _nonzero_vectors(n: int):
    return [v for v in iproduct((0, 1), repeat=n) if any(v)]


def _x(i: int) -> str:
    return f"x{i}"


# -- fixed formulas -------------------------------------------------------------

def _theta_in_y() -> str:
    return "theta(x1^15, x2^15, x3^15)"


def _build_texts() -> dict[str, str]:
    t: dict[str, str] = {}
    t["2.1"] = "omega(8)"
    t["2.2"] = "x1^4 = 1"
    t["2.3"] = _or("(x1^2 = 1)", "(x2^2 = 1)", "(x3^2 = 1)", "(x1 = x2)", "(x1 = x3)", "(x2 = x3)")
    t["2.4"] = "theta(x1, x2, x3)"
    t["2.5"] = _or("in_cyc(x1, x2, 0, 3)", "in_cyc(x2, x1, 0, 3)", "(x1^2x2^2 = 1)")
    pairs = [(i, j) for i in (1, 2, 3) for j in (1, 2, 3) if i != j]
    t["2.6"] = _or(*[f"in_cyc(x{i}, x{j}, 0, 3)" for i, j in pairs], "(x1x2 = x3)", "(x1x2 = ~x3)")
    t["2.7"] = "(x1^2 = 1) | (x1^3 = 1)"
    t["2.8"] = "(x1^3 = 1) | (x2^3 = 1) | ((x1x2)^2 = 1)"
    t["2.9"] = _or(*[
        "(" + " * ".join(f"x{i + 1}^{3}" for i, k in enumerate(v) if k) + " = 1)"
        for v in _nonzero_vectors(3)])
    t["2.10"] = "(x1^4 = 1) | (x2^4 = 1) | ((x1x2)^4 = 1) | ((x1x2^2)^4 = 1)"
    t["2.11"] = "(x1^3 = 1) | (x1^4 = 1)"
    t["2.12"] = "(x1^6 = 1) | (x2^6 = 1) | (x1 = x2) | (x1x2 = 1) | ((x1x2)^3 = 1)"
    t["2.13"] = _or("(x1^3 = 1)", "(x2^3 = 1)", "(x3^3 = 1)",
                    "((~x1 x2)^3 = 1)", "((~x1 x3)^3 = 1)", "((~x2 x3)^3 = 1)",
                    "theta(x1, x2, x3)")
    t["pk9"] = _or(*[f"(x{i}^3 = 1)" for i in range(1, 10)],
                   *[f"((x{i} ~x{j})^3 = 1)" for i in range(1, 10) for j in range(i + 1, 10)])

    t["3.1"] = "(x1^2 = 1) | (x1^3 = 1) | (x1^5 = 1)"
    t["3.2"] = _or(*[f"(x{i}^15 = 1)" for i in (1, 2, 3)],
                   *[f"((x{i}x{j})^15 = 1)" for i in (1, 2, 3) for j in (1, 2, 3) if i < j],
                   *["(" + " ".join(f"x{i + 1}" for i, k in enumerate(v) if k) + " = 1)"
                     for v in _nonzero_vectors(3)])
    t["3.3"] = "(x1^10 = 1) | (x2^10 = 1) | (x1 = x2) | ((x1x2)^10 = 1) | ((x1^2x2)^2 = 1)"
    t["3.4"] = _or("(x1^6 = 1)", "(x2^6 = 1)", *[f"((x1x2^{d})^6 = 1)" for d in (1, 2, 3, 4)])
    t["3.5"] = "(x1^4 = 1) | (x1^5 = 1) | (x1^6 = 1)"
    t["3.6"] = _or("(x1^30 = 1)", "(x2^30 = 1)", *[f"((x1x2^{d})^15 = 1)" for d in (1, 2, 3)])
    y = {i: f"(x{i}^15)" for i in (1, 2, 3)}
    idx = (1, 2, 3)
    t["3.7"] = _or(
        _theta_in_y(),
        *[f"({y[i]} = 1)" for i in idx],
        *[f"(({y[i]}{y[j]})^15 = 1)" for i in idx for j in idx if i != j],
        *[f"(({y[i]}{y[j]}{y[k]})^15 = 1)" for i in idx for j in idx for k in idx
          if j != i and k != i],
        *[f"(({y[i]}{y[j]}{y[k]}{y[j]})^15 = 1)" for i in idx for j in idx for k in idx
          if j != i and k != i])
    t["3.8"] = "(x1^20 = 1) | (x2^20 = 1) | (x1^2 = x2^2) | ((x1^2x2^2)^5 = 1) | ((x1^4x2^2)^2 = 1)"
    t["3.8a"] = "(x1^20 = 1) | (x2^20 = 1) | (x1^2 = x2^2) | ((x1^2x2^2)^10 = 1) | ((x1^4x2^2)^2 = 1)"
    t["3.9"] = _or("(x1^15 = 1)", "(x2^15 = 1)", "(x1^4 = 1)", "(x2^4 = 1)",
                   "((x1x2)^15 = 1)", "((x1x2)^4 = 1)")
    t["3.10"] = _or("(x1^10 = 1)", "(x2^10 = 1)", "(x1^4 = x2^4)", "(x1^6 = x2^6)",
                    "((x1^2x2^2)^3 = 1)", "((x1^2x2^2)^4 = 1)", "((x1^2x2^2)^5 = 1)")
    t["3.11"] = _or("(x1^12 = 1)", "(x2^12 = 1)", *[f"((x1x2^{d})^12 = 1)" for d in (1, 2, 3, 4)])
    t["3.12"] = _or("(x1^3 = 1)", "(x2^3 = 1)", "(x1^5 = 1)", "(x2^5 = 1)", "(x1^4 = x2^4)",
                    "((x1x2)^3 = 1)", "((x1x2)^4 = 1)", "((x1x2)^5 = 1)")

    t["4.1"] = "omega(360)"
    t["4.2"] = "(x1^3 = 1) | (x1^4 = 1) | (x1^5 = 1)"
    r9 = range(1, 10)
    t["4.3"] = _or(*[f"(x{i}^20 = 1)" for i in r9],
                   *[f"(x{i} = x{j})" for i in r9 for j in r9 if i < j],
                   *[f"((x{i}x{j})^20 = 1)" for i in r9 for j in r9 if i < j],
                   *[f"((x{i}x{j}^2)^20 = 1)" for i in r9 for j in r9 if i < j])
    t["4.4"] = t["3.6"]
    t["4.5"] = _or("theta(x1, x2, x3)", *[f"(x{i}^15 = 1)" for i in idx],
                   *[f"((x{i}x{j}{e})^15 = 1)" for e in ("", "^2", "^3")
                     for i in idx for j in idx if i != j])
    head46 = ["(x1^12 = 1)", "(x2^30 = 1)", "((x1 x1^x2)^12 = 1)", "((x1 (x1^3)^x2)^12 = 1)"]
    t["4.6"] = _or(*head46, "([x1^2, x1^x2]^12 = 1)")
    t["4.6a"] = _or(*head46, "((x1^2 x1^x2)^12 = 1)")
    t["4.7"] = t["3.11"]
    return t


# -- dihedral family ------------------------------------------------------------------

def prime_factors(m: int) -> list[int]:
    out, p = [], 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


def split_prime(m: int, p: int) -> tuple[int, int]:
    """``m = p^k * m_p`` with ``p ∤ m_p``; returns ``(p^k, m_p)``."""
    pk = 1
    while m % p == 0:
        m //= p
        pk *= p
    return pk, m


def _pw(var: str, e: int) -> str:
    return var if e == 1 else f"{var}^{e}"


def _ppw(word: str, e: int) -> str:
    return word if e == 1 else f"({word})^{e}"


def dihedral_text(fid: str, m: int, p: int | None = None) -> str:
    """Text of a dihedral-family formula instantiated for ``D_2m`` (and prime ``p``)."""
    if fid == "5.1":
        return "(x1^2 = 1) | (x2^2 = 1) | (x1x2 = x2x1)"
    if fid == "5.2":
        return f"x1^{m} = 1"
    if fid == "5.2'":
        return f"(x1^2 = 1) | (x1^{m} = 1)"
    if fid == "5.6":
        return f"(x1^{m} = 1) | (x2^{m} = 1) | ((x1x2)^{m} = 1)"
    if fid in ("5.3", "5.3a"):
        if p is None or m % p:
            raise FormulaError(f"{fid} needs a prime divisor p of m")
        pk, mp = split_prime(m, p)
        lo = 1 if fid == "5.3" else 0
        a, b = _pw("x1", mp), _pw("x2", mp)
        return _or("(x1^2 = 1)", "(x2^2 = 1)", f"in_cyc({a}, {b}, {lo}, {pk - 1})",
                   f"in_cyc({b}, {a}, {lo}, {pk - 1})")
    if fid == "5.4":
        if m % 2:
            raise FormulaError("5.4 needs even m")
        tk, m2 = split_prime(m, 2)
        top = tk - 1
        xs = {i: _pw(f"x{i}", m2) for i in (1, 2, 3)}
        parts = [f"in_cyc({xs[i]}, {xs[j]}, 0, {top})" for i in (1, 2, 3) for j in (1, 2, 3) if i != j]
        for s in permutations((1, 2, 3)):
            parts.append(f"in_cyc({xs[s[0]]}, {_ppw(f'x{s[1]}x{s[2]}', m2)}, 0, {top})")
        for s in permutations((1, 2, 3)):
            parts.append(f"in_cyc({_ppw(f'x{s[0]}x{s[1]}', m2)}, {_ppw(f'x{s[1]}x{s[2]}', m2)}, 0, {top})")
        return _or(*parts)
    if fid == "5.5":
        if m % 2 or p is None or p == 2 or m % p:
            raise FormulaError("5.5 needs even m and an odd prime divisor p")
        _, mp = split_prime(m, p)
        tk, m2 = split_prime(m, 2)
        a = _pw("x1", mp)
        b, c = _pw("x2", m2), _pw("x3", m2)
        return _or(f"(({a})^x2 = x1^-{mp})", f"(({a})^x3 = x1^-{mp})",
                   f"in_cyc({b}, {c}, 0, {tk - 1})", f"in_cyc({c}, {b}, 0, {tk - 1})")
    raise FormulaError(f"unknown dihedral-family formula {fid!r}")


def dihedral_formula(fid: str, m: int, p: int | None = None) -> UDE:
    return parse_formula(dihedral_text(fid, m, p))


DIHEDRAL_IDS = ("5.1", "5.2", "5.2'", "5.3", "5.3a", "5.4", "5.5", "5.6")
_DIHEDRAL_DEFAULTS = {"5.1": (6, None), "5.2": (6, None), "5.2'": (3, None), "5.3": (6, 2),
                      "5.3a": (6, 2), "5.4": (6, None), "5.5": (6, 3), "5.6": (3, None)}


# -- catalog -------------------------------------------------------------------------------

_Z2_3_BASIS = ("a", "b", "c")

_META = {
    "2.1": (("D8",), (), "pigeonhole bound for order 8"),
    "2.2": (("D8", "Q8"), (("Z8", ("a",)),), "exponent divides 4"),
    "2.3": (("D8",), (("Z4xZ2", ("a", "a^3", "ab")),), "at most two elements of order > 2"),
    "2.4": (("D8",), (("Z2^3", _Z2_3_BASIS),), "eliminates Z2^3 against D8"),
    "2.5": (("Q8",), (("D8", ("a", "b")), ("Z4xZ2", ("a", "b"))), "eliminates D8 and Z4xZ2 against Q8"),
    "2.6": (("Q8",), (("Z2^3", _Z2_3_BASIS),), "eliminates Z2^3 against Q8"),
    "2.7": (("A4",), (), "element orders 1, 2, 3"),
    "2.8": (("A4",), (("S3", ("(12)", "(13)")),), "eliminates S3 against A4"),
    "2.9": (("A4",), (("Z2^3", _Z2_3_BASIS),), "cubes lie in the Klein four-group"),
    "2.10": (("S4", "A4"), (("Z3xZ3", ("a", "b")),), "eliminates groups of order 9"),
    "2.11": (("S4",), (), "element orders divide 3 or 4"),
    "2.12": (("S4",), (("Z4xZ2", ("a", "ab")), ("Q8", ("i", "j"))), "eliminates Z4xZ2 and Q8 against S4"),
    "2.13": (("S4",), (("Z2^3", _Z2_3_BASIS),), "eliminates Z2^3 against S4"),
    "pk9": (("S4",), (), "nine-variable cube formula from an earlier weak-basis claim for S4"),
    "3.1": (("A5",), (), "element orders of A5"),
    "3.2": (("A5",), (("Z2^3", _Z2_3_BASIS),), "eliminates Z2^3 against A5"),
    "3.3": (("A5",), (("Z3xZ3", ("a", "b")),), "eliminates groups of order 9 against A5"),
    "3.4": (("A5",), (("Z5xZ5", ("b", "a")),), "eliminates groups of order 25 against A5"),
    "3.5": (("S5",), (), "element orders of S5"),
    "3.6": (("S5", "A6"), (("Z4xZ2", ("a", "ab")), ("Q8", ("i", "j"))), "eliminates Z4xZ2 and Q8 against S5"),
    "3.7": (("S5",), (("Z2^3", _Z2_3_BASIS),), "eliminates Z2^3 against S5"),
    "3.8": (("S5",), (("Z3xZ3", ("a", "b")),), "groups of order 9 against S5, exponent 5 as printed"),
    "3.8a": (("S5",), (("Z3xZ3", ("a", "b")),), "groups of order 9 against S5, squares substituted into 3.3"),
    "3.9": (("S5",), (("Z2xZ6", ("b", "ab")),), "eliminates Z2xZ6 against S5"),
    "3.10": (("S5",), (("Z3:Z4", ("a", "b")),), "eliminates Z3:Z4 against S5"),
    "3.11": (("S5", "S6"), (("Z5xZ5", ("b", "a")),), "eliminates groups of order 25 against S5"),
    "3.12": ((), (("S5", ("(123)(45)", "(14)(25)")),), "formula from an earlier weak-basis list for S5"),
    "4.1": (("A6",), (), "pigeonhole bound for order 360"),
    "4.2": (("A6",), (("Z6", ("a",)),), "element orders of A6"),
    "4.3": (("A6",), (("Heis27", ("a", "b", "c", "ab", "ab^2", "ac", "bc", "abc", "a^2bc")),),
            "eliminates the exponent-3 groups of order 27"),
    "4.4": (("A6", "S5"), (("Z4xZ2", ("a", "ab")), ("Q8", ("i", "j"))), "same formula as 3.6"),
    "4.5": (("A6",), (("Z2^3", _Z2_3_BASIS),), "eliminates Z2^3 against A6"),
    "4.6": (("A6",), (), "eliminates the Frobenius group of order 20; commutator reading of the comma"),
    "4.6a": (("A6",), (("F20", ("a", "b")),), "eliminates the Frobenius group of order 20; product reading"),
    "4.7": (("A6", "S5", "S6"), (("Z5xZ5", ("b", "a")),), "same formula as 3.11"),
}

_VARIANTS = {"3.8a": "3.8", "4.6a": "4.6", "5.3a": "5.3"}
_DISPUTED = {"3.8", "3.8a", "4.6", "4.6a", "5.3", "5.3a"}


@lru_cache(maxsize=None)
def _fixed_entries() -> dict[str, FormulaCatalogEntry]:
    out = {}
    for fid, text in _build_texts().items():
        claimed, failures, note = _META[fid]
        out[fid] = FormulaCatalogEntry(fid, parse_formula(text), claimed, failures, note,
                                       _VARIANTS.get(fid), (), fid in _DISPUTED)
    for fid in DIHEDRAL_IDS:
        m, p = _DIHEDRAL_DEFAULTS[fid]
        params = (("m", m),) + ((("p", p),) if p else ())
        out[fid] = FormulaCatalogEntry(
            fid, dihedral_formula(fid, m, p), (f"D{2 * m}",), (),
            "dihedral family, default instance", _VARIANTS.get(fid), params, fid in _DISPUTED)
    return out


def catalog() -> list[FormulaCatalogEntry]:
    return list(_fixed_entries().values())


def catalog_ids() -> list[str]:
    return list(_fixed_entries())


def get_entry(fid: str) -> FormulaCatalogEntry:
    fid = fid.removeprefix("paper:")
    try:
        return _fixed_entries()[fid]
    except KeyError:
        raise FormulaError(f"unknown formula id {fid!r}") from None


def get_formula(ref: str) -> UDE:
    """Resolve a catalog id (optionally ``paper:``-prefixed), a dihedral-family
    instance like ``5.3a[m=12,p=3]``, or literal formula text."""
    ref = ref.strip()
    bare = ref.removeprefix("paper:")
    if "[" in bare and bare.endswith("]"):
        fid, args = bare[:-1].split("[", 1)
        kv = dict(part.split("=") for part in args.split(",") if part)
        return dihedral_formula(fid, int(kv["m"]), int(kv["p"]) if "p" in kv else None)
    if bare in _fixed_entries():
        return _fixed_entries()[bare].ude
    if ref.startswith("paper:"):
        raise FormulaError(f"unknown formula id {bare!r}")
    return parse_formula(ref)


def literal_omega(n: int) -> UDE:
    """``omega(n)`` written out as pairwise equalities over ``n + 1`` variables."""
    return UDE(Omega(n).literal())


def membership_literal(a, b, lo, hi) -> UDE:
    return UDE(Membership(a, b, lo, hi).equations())


__all__ = ["FormulaCatalogEntry", "catalog", "catalog_ids", "get_entry", "get_formula",
           "dihedral_formula", "dihedral_text", "prime_factors", "split_prime", "literal_omega",
           "theta_clauses", "Equation", "Power", "Var", "product", "substitute"]
