"""Subgroups, quotients, isomorphism and sections of table-backed groups."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import lcm

import numpy as np

from .groups import (BudgetError, FiniteGroup, GroupError, extend_hom, mask_members,
                     subgroup_as_group)

DEFAULT_MAX_GENS = 3
SUBGROUP_BUDGET = 20000


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup = field(repr=False, compare=False)
    members: tuple[int, ...]
    generators: tuple[int, ...] = field(compare=False)

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def mask(self) -> int:
        m = 0
        for g in self.members:
            m |= 1 << g
        return m

    def __contains__(self, g) -> bool:
        return g in set(self.members)

    def as_group(self, name: str | None = None) -> FiniteGroup:
        return subgroup_as_group(self.parent, self.members, name=name)

    def labels(self) -> list[str]:
        return [self.parent.labels[g] for g in self.members]


def make_subgroup(G: FiniteGroup, gens) -> Subgroup:
    gens = tuple(int(g) for g in gens)
    return Subgroup(G, tuple(mask_members(G.closure(gens))), gens)


def _from_mask(G: FiniteGroup, mask: int, gens) -> Subgroup:
    return Subgroup(G, tuple(mask_members(mask)), tuple(gens))


# -- element-level invariants -----------------------------------------------

def element_order(G: FiniteGroup, g: int) -> int:
    return int(G.orders[g])


def exponent(G: FiniteGroup) -> int:
    return G.exponent


def order_spectrum(G: FiniteGroup) -> dict[int, int]:
    return dict(sorted(Counter(G.orders.tolist()).items()))


def conjugacy_classes(G: FiniteGroup) -> list[tuple[int, ...]]:
    seen = np.zeros(G.order, dtype=bool)
    classes = []
    for g in range(G.order):
        if seen[g]:
            continue
        cls = np.unique(G.mul[G.inv, G.mul[g]])
        seen[cls] = True
        classes.append(tuple(cls.tolist()))
    return classes


def class_size_map(G: FiniteGroup) -> list[int]:
    sizes = [0] * G.order
    for cls in conjugacy_classes(G):
        for g in cls:
            sizes[g] = len(cls)
    return sizes


def center(G: FiniteGroup) -> Subgroup:
    members = np.nonzero((G.mul == G.mul.T).all(axis=1))[0].tolist()
    return Subgroup(G, tuple(members), tuple(members))


def _derived_mask(G: FiniteGroup, members: list[int]) -> int:
    idx = np.array(members, dtype=np.intp)
    inv = G.inv[idx]
    m = G.mul
    comm = m[m[m[inv[:, None], inv[None, :]], idx[:, None]], idx[None, :]]
    return G.closure(np.unique(comm).tolist())


def derived_series(G: FiniteGroup) -> list[Subgroup]:
    series = [Subgroup(G, tuple(range(G.order)), tuple(G.generators))]
    while True:
        mask = _derived_mask(G, list(series[-1].members))
        if mask == series[-1].mask:
            return series
        series.append(_from_mask(G, mask, ()))


def derived_length(G: FiniteGroup) -> int | None:
    series = derived_series(G)
    return len(series) - 1 if series[-1].order == 1 else None


def is_solvable(G: FiniteGroup) -> bool:
    return derived_length(G) is not None


# -- subgroup enumeration ------------------------------------------------------

def cyclic_subgroups(G: FiniteGroup) -> list[Subgroup]:
    seen = {}
    for g in range(G.order):
        mask = G.closure([g])
        seen.setdefault(mask, g)
    return [_from_mask(G, mk, (g,) if g else ()) for mk, g in seen.items()]


def subgroups(G: FiniteGroup, max_gens: int | None = DEFAULT_MAX_GENS,
              budget: int = SUBGROUP_BUDGET) -> list[Subgroup]:
    """All subgroups generated by at most ``max_gens`` elements.

    ``max_gens=None`` keeps adjoining generators until nothing new appears,
    which yields every subgroup.
    """
    if max_gens is not None and max_gens < 1:
        raise GroupError("max_gens must be >= 1")
    found: dict[int, tuple[int, ...]] = {}
    for s in cyclic_subgroups(G):
        found[s.mask] = s.generators
    frontier = list(found.items())
    level = 1
    while frontier and (max_gens is None or level < max_gens):
        level += 1
        nxt = []
        for mask, gens in frontier:
            for g in range(1, G.order):
                if (mask >> g) & 1:
                    continue
                new_gens = gens + (g,)
                m2 = G.closure(new_gens)
                if m2 not in found:
                    found[m2] = new_gens
                    nxt.append((m2, new_gens))
                    if len(found) > budget:
                        raise BudgetError(f"more than {budget} subgroups")
        frontier = nxt
    subs = [_from_mask(G, mk, gens) for mk, gens in found.items()]
    subs.sort(key=lambda s: (s.order, s.members))
    return subs


def all_subgroups(G: FiniteGroup) -> list[Subgroup]:
    return subgroups(G, max_gens=None)


def is_normal(G: FiniteGroup, members, mask: int | None = None) -> bool:
    if mask is None:
        mask = 0
        for h in members:
            mask |= 1 << int(h)
    idx = np.array(members, dtype=np.intp)
    for g in G.generators:
        conj = G.mul[G.mul[G.inv[g], idx], g]
        for c in conj.tolist():
            if not (mask >> c) & 1:
                return False
    return True


def normal_subgroups(G: FiniteGroup, subs: list[Subgroup] | None = None) -> list[Subgroup]:
    if subs is None:
        subs = all_subgroups(G)
    return [s for s in subs if is_normal(G, s.members, s.mask)]


# -- quotients -------------------------------------------------------------------

def quotient(G: FiniteGroup, K: Subgroup | tuple | list) -> FiniteGroup:
    members = list(K.members) if isinstance(K, Subgroup) else sorted(int(k) for k in K)
    if not is_normal(G, members):
        raise GroupError("quotient requires a normal subgroup")
    coset_of = [-1] * G.order
    reps: list[int] = []
    kidx = np.array(members, dtype=np.intp)
    for g in range(G.order):
        if coset_of[g] >= 0:
            continue
        c = len(reps)
        reps.append(g)
        for x in G.mul[kidx, g].tolist():
            coset_of[x] = c
    n = len(reps)
    ra = np.array(reps, dtype=np.intp)
    co = np.array(coset_of, dtype=np.intp)
    mul = co[G.mul[ra[:, None], ra[None, :]]]
    labels = ["1" if r == 0 else f"[{G.labels[r]}]" for r in reps]
    name = f"{G.name}/{len(members)}" if G.name else None
    return FiniteGroup(mul, labels, name=name, check=n <= 64)


# -- isomorphism -------------------------------------------------------------------

@dataclass
class IsoWitness:
    generator_images: dict[int, int]
    mapping: list[int] = field(repr=False)

    def describe(self, G: FiniteGroup, H: FiniteGroup) -> dict[str, str]:
        return {G.labels[s]: H.labels[t] for s, t in self.generator_images.items()}

    def verify(self, G: FiniteGroup, H: FiniteGroup, injective_only: bool = False) -> bool:
        phi = extend_hom(G, list(self.generator_images), H, list(self.generator_images.values()))
        if phi is None or phi != self.mapping:
            return False
        if len(set(phi)) != G.order:
            return False
        return injective_only or G.order == H.order


def _invariants(G: FiniteGroup):
    sizes = class_size_map(G)
    joint = Counter(zip(G.orders.tolist(), sizes))
    return (G.order, tuple(sorted(joint.items())), center(G).order)


def _min_generators(G: FiniteGroup) -> list[int]:
    orders = G.orders.tolist()
    ranked = sorted(range(1, G.order), key=lambda g: (-orders[g], g))
    full = (1 << G.order) - 1
    gens: list[int] = []
    mask = 1
    for g in ranked:
        if mask == full:
            break
        if not (mask >> g) & 1:
            gens.append(g)
            mask = G.closure(gens)
    return gens


def _hom_search(G: FiniteGroup, H: FiniteGroup, bijective: bool) -> IsoWitness | None:
    """Injective homomorphism G -> H (bijective when orders agree)."""
    if G.order == 1:
        return IsoWitness({}, [0])
    gens = _min_generators(G)
    g_orders = G.orders.tolist()
    h_orders = H.orders.tolist()
    g_sizes = class_size_map(G)
    h_sizes = class_size_map(H)
    reps = {cls[0] for cls in conjugacy_classes(H)}
    cands = []
    for k, s in enumerate(gens):
        pool = [t for t in range(H.order) if h_orders[t] == g_orders[s]
                and (not bijective or h_sizes[t] == g_sizes[s])]
        if k == 0:
            pool = [t for t in pool if t in reps]
        cands.append(pool)
    prefix_orders = [mask_popcount(G.closure(gens[:k + 1])) for k in range(len(gens))]
    gm, hm = G.mul_list, H.mul_list
    images: list[int] = []

    def rec(k: int):
        if k == len(gens):
            phi = extend_hom(G, gens, H, images)
            if phi is not None and len(set(phi)) == G.order:
                return IsoWitness(dict(zip(gens, images)), phi)
            return None
        s = gens[k]
        for t in cands[k]:
            ok = True
            for j in range(k):
                if g_orders[gm[gens[j]][s]] != h_orders[hm[images[j]][t]]:
                    ok = False
                    break
            if not ok:
                continue
            images.append(t)
            if mask_popcount(H.closure(images)) == prefix_orders[k]:
                w = rec(k + 1)
                if w is not None:
                    return w
            images.pop()
        return None

    return rec(0)


def mask_popcount(mask: int) -> int:
    return bin(mask).count("1")


def is_isomorphic(G: FiniteGroup, H: FiniteGroup) -> IsoWitness | None:
    if G.order != H.order:
        return None
    if _invariants(G) != _invariants(H):
        return None
    return _hom_search(G, H, bijective=True)


def find_embedding(T: FiniteGroup, G: FiniteGroup) -> IsoWitness | None:
    """Injective homomorphism ``T -> G`` if one exists."""
    if G.order % T.order:
        return None
    t_spec = Counter(T.orders.tolist())
    g_spec = Counter(G.orders.tolist())
    if any(g_spec[o] < c for o, c in t_spec.items()):
        return None
    return _hom_search(T, G, bijective=False)


# -- sections --------------------------------------------------------------------------

def is_section(G: FiniteGroup, T: FiniteGroup, max_gens: int | None = None,
               budget: int = SUBGROUP_BUDGET) -> tuple[Subgroup, Subgroup] | None:
    """Find ``K ⊲ H <= G`` with ``H/K ≅ T``, or None.

    Tries an embedding first; otherwise scans subgroups (all of them when
    ``max_gens`` is None, else those generated by at most ``max_gens`` elements).
    """
    if G.order % T.order:
        return None
    emb = find_embedding(T, G)
    if emb is not None:
        H = make_subgroup(G, emb.generator_images.values())
        return H, Subgroup(G, (0,), ())
    subs = subgroups(G, max_gens=max_gens, budget=budget)
    for H in subs:
        if H.order <= T.order or H.order % T.order:
            continue
        kord = H.order // T.order
        hmask = H.mask
        hgroup = None
        for K in subs:
            if K.order != kord or (K.mask & ~hmask):
                continue
            if hgroup is None:
                hgroup = H.as_group()
                pos = {g: i for i, g in enumerate(H.members)}
            local = [pos[k] for k in K.members]
            if not is_normal(hgroup, local):
                continue
            if is_isomorphic(quotient(hgroup, local), T) is not None:
                return H, K
    return None


def sections(G: FiniteGroup) -> list[FiniteGroup]:
    """All sections of G up to isomorphism."""
    subs = all_subgroups(G)
    out: list[FiniteGroup] = []
    for H in subs:
        hg = H.as_group()
        pos = {g: i for i, g in enumerate(H.members)}
        hmask = H.mask
        for K in subs:
            if K.mask & ~hmask:
                continue
            local = [pos[k] for k in K.members]
            if not is_normal(hg, local):
                continue
            Q = quotient(hg, local)
            if not any(is_isomorphic(Q, R) is not None for R in out):
                Q.name = f"{G.name or 'G'}:{H.order}/{K.order}#{len(out)}"
                out.append(Q)
    return out


# -- Sylow subgroups ---------------------------------------------------------------------

def _p_part(n: int, p: int) -> int:
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def sylow_subgroup(G: FiniteGroup, p: int) -> Subgroup:
    target = _p_part(G.order, p)
    orders = G.orders.tolist()
    p_elems = [g for g in range(1, G.order) if _p_part(orders[g], p) == orders[g]]
    gens: list[int] = []
    mask = 1
    while mask_popcount(mask) < target:
        members = mask_members(mask)
        for x in p_elems:
            if (mask >> x) & 1:
                continue
            if is_normal_by(G, members, mask, x):
                gens.append(x)
                mask = G.closure(gens)
                break
        else:
            raise GroupError("Sylow growth stalled")
    return _from_mask(G, mask, gens)


def is_normal_by(G: FiniteGroup, members, mask: int, x: int) -> bool:
    idx = np.array(members, dtype=np.intp)
    conj = G.mul[G.mul[G.inv[x], idx], x]
    return all((mask >> c) & 1 for c in conj.tolist())


def sylow_subgroups(G: FiniteGroup, p: int) -> list[Subgroup]:
    P = sylow_subgroup(G, p)
    idx = np.array(P.members, dtype=np.intp)
    seen = {}
    for g in range(G.order):
        conj = np.unique(G.mul[G.mul[G.inv[g], idx], g])
        key = tuple(conj.tolist())
        seen.setdefault(key, None)
    return [Subgroup(G, k, ()) for k in sorted(seen)]


def lcm_of_orders(G: FiniteGroup) -> int:
    return lcm(*G.orders.tolist())
