"""Table-backed finite groups and their elementary constructions.

Elements are integer ids ``0..order-1`` with id 0 the identity.  The table
``mul[a, b]`` is the product ``a*b`` read left to right (for permutation
groups the left factor acts first).
"""

from __future__ import annotations

from collections import deque
from functools import cached_property
from math import lcm

import numpy as np

from .perm import Perm, format_cycles

MAX_ORDER = 5000


class GroupError(ValueError):
    pass


class BudgetError(RuntimeError):
    """A search or construction exceeded its configured size bound."""


class FiniteGroup:
    def __init__(self, mul, labels=None, *, name=None, perm_images=None,
                 generators=None, letters=None, check=True):
        mul = np.ascontiguousarray(np.asarray(mul, dtype=np.intp))
        if mul.ndim != 2 or mul.shape[0] != mul.shape[1] or mul.shape[0] == 0:
            raise GroupError("multiplication table must be a nonempty square array")
        n = mul.shape[0]
        self.order = n
        self.mul = mul
        self.mul.setflags(write=False)
        self.labels = list(labels) if labels is not None else [str(i) for i in range(n)]
        if len(self.labels) != n:
            raise GroupError("one label per element required")
        self.name = name
        self.perm_images = list(perm_images) if perm_images is not None else None
        self.letters = letters
        inv = np.empty(n, dtype=np.intp)
        rows, cols = np.nonzero(mul == 0)
        if len(rows) != n:
            raise GroupError("identity must be id 0 and every element needs one inverse")
        inv[rows] = cols
        self.inv = inv
        self.inv.setflags(write=False)
        if generators is None:
            generators = self._greedy_generators()
        self.generators = list(generators)
        if check:
            self.validate()

    def __repr__(self):
        return f"<FiniteGroup {self.name or '?'} order={self.order}>"

    def __len__(self):
        return self.order

    # -- validation ---------------------------------------------------
    def validate(self, full_scan_limit: int = 64):
        n, m = self.order, self.mul
        ar = np.arange(n)
        if not (np.array_equal(m[0], ar) and np.array_equal(m[:, 0], ar)):
            raise GroupError("id 0 is not a two-sided identity")
        srt = np.sort(m, axis=1)
        if not (srt == ar).all() or not (np.sort(m, axis=0) == ar[:, None]).all():
            raise GroupError("multiplication table is not a Latin square")
        if not (m[ar, self.inv] == 0).all() or not (m[self.inv, ar] == 0).all():
            raise GroupError("inverse table inconsistent")
        if n <= full_scan_limit:
            left = m[m[:, :, None], ar[None, None, :]]
            right = m[ar[:, None, None], m[None, :, :]]
            if not np.array_equal(left, right):
                raise GroupError("multiplication is not associative")
        else:
            # (ab)s == a(bs) for s in a generating set implies associativity
            if self.closure(self.generators) != (1 << n) - 1:
                raise GroupError("designated generators do not generate the group")
            for s in self.generators:
                if not np.array_equal(m[m, s], m[:, m[:, s]]):
                    raise GroupError("multiplication is not associative")

    # -- cached tables ------------------------------------------------
    @cached_property
    def mul_list(self) -> list[list[int]]:
        return self.mul.tolist()

    @cached_property
    def inv_list(self) -> list[int]:
        return self.inv.tolist()

    @cached_property
    def orders(self) -> np.ndarray:
        n = self.order
        orders = np.zeros(n, dtype=np.intp)
        cur = np.arange(n)
        k = 1
        while (orders == 0).any():
            hit = (cur == 0) & (orders == 0)
            orders[hit] = k
            cur = self.mul[cur, np.arange(n)]
            k += 1
        orders.setflags(write=False)
        return orders

    @cached_property
    def exponent(self) -> int:
        return lcm(*self.orders.tolist())

    @cached_property
    def pow_table(self) -> np.ndarray:
        """``pow_table[g, j] == g**j`` for ``0 <= j < exponent``."""
        e = self.exponent
        n = self.order
        tab = np.empty((n, e), dtype=np.intp)
        tab[:, 0] = 0
        ar = np.arange(n)
        for j in range(1, e):
            tab[:, j] = self.mul[tab[:, j - 1], ar]
        tab.setflags(write=False)
        return tab

    @cached_property
    def label_index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    @cached_property
    def perm_index(self) -> dict[tuple[int, ...], int]:
        if self.perm_images is None:
            return {}
        return {p.images: i for i, p in enumerate(self.perm_images)}

    @property
    def degree(self) -> int | None:
        return self.perm_images[0].degree if self.perm_images else None

    # -- element arithmetic ---------------------------------------------
    def op(self, a: int, b: int) -> int:
        return self.mul_list[a][b]

    def power(self, g: int, k: int) -> int:
        return int(self.pow_table[g, k % self.exponent])

    def conj(self, g: int, by: int) -> int:
        """``g^by = by^-1 g by``."""
        return self.mul_list[self.mul_list[self.inv_list[by]][g]][by]

    def commutator(self, a: int, b: int) -> int:
        """``[a, b] = a^-1 b^-1 a b``."""
        m, inv = self.mul_list, self.inv_list
        return m[m[m[inv[a]][inv[b]]][a]][b]

    def element(self, ref) -> int:
        """Resolve an element by id, label, or cycle notation."""
        if isinstance(ref, (int, np.integer)):
            if not 0 <= int(ref) < self.order:
                raise GroupError(f"element id {ref} out of range")
            return int(ref)
        if isinstance(ref, Perm):
            return self._perm_lookup(ref)
        text = str(ref).strip()
        if text in self.label_index:
            return self.label_index[text]
        if self.perm_images is not None and (text.startswith("(") or text == "1"):
            return self._perm_lookup(Perm.parse(text, self.degree))
        raise GroupError(f"unknown element {ref!r} in {self.name or 'group'}")

    def _perm_lookup(self, p: Perm) -> int:
        if self.perm_images is None:
            raise GroupError("group has no permutation images")
        if p.degree < self.degree:
            p = p.extend(self.degree)
        try:
            return self.perm_index[p.images]
        except KeyError:
            raise GroupError(f"{p} is not an element of {self.name or 'group'}") from None

    def label(self, g: int) -> str:
        return self.labels[g]

    # -- closures -------------------------------------------------------
    def closure(self, gens) -> int:
        """Bitmask of the subgroup generated by ``gens``."""
        m = self.mul_list
        gens = [g for g in set(int(g) for g in gens) if g != 0]
        mask = 1
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                row = m[x]
                for s in gens:
                    y = row[s]
                    if not (mask >> y) & 1:
                        mask |= 1 << y
                        nxt.append(y)
            frontier = nxt
        return mask

    def _greedy_generators(self) -> list[int]:
        if self.order == 1:
            return []
        order_of = self._orders_quick()
        ranked = sorted(range(1, self.order), key=lambda g: (-order_of[g], g))
        full = (1 << self.order) - 1
        gens: list[int] = []
        mask = 1
        for g in ranked:
            if not (mask >> g) & 1:
                gens.append(g)
                mask = self.closure(gens)
                if mask == full:
                    break
        return gens

    def _orders_quick(self) -> list[int]:
        m = self.mul_list
        out = [1] * self.order
        for g in range(1, self.order):
            k, x = 1, g
            while x != 0:
                x = m[x][g]
                k += 1
            out[g] = k
        return out

    def is_abelian(self) -> bool:
        return bool((self.mul == self.mul.T).all())

    def renamed(self, name: str) -> FiniteGroup:
        g = object.__new__(FiniteGroup)
        g.__dict__.update(self.__dict__)
        g.name = name
        return g


def mask_members(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


# -- homomorphisms --------------------------------------------------------

def extend_hom(src: FiniteGroup, gens, dst: FiniteGroup, images) -> list[int] | None:
    """Extend ``gens[i] -> images[i]`` to a homomorphism, or None if impossible.

    ``gens`` must generate ``src``.
    """
    sm, dm = src.mul_list, dst.mul_list
    phi = [-1] * src.order
    phi[0] = 0
    queue = deque([0])
    pairs = list(zip([int(g) for g in gens], [int(h) for h in images]))
    while queue:
        x = queue.popleft()
        for s, t in pairs:
            y = sm[x][s]
            if phi[y] < 0:
                phi[y] = dm[phi[x]][t]
                queue.append(y)
    if min(phi) < 0:
        raise GroupError("generators do not generate the source group")
    for x in range(src.order):
        px = phi[x]
        for s, t in pairs:
            if phi[sm[x][s]] != dm[px][t]:
                return None
    return phi


# -- constructions --------------------------------------------------------

def _word_label(parts) -> str:
    """Join (letter, exponent) parts into a label like ``a^2b``."""
    out = []
    for letter, e in parts:
        if e == 0:
            continue
        out.append(letter if e == 1 else f"{letter}^{e}")
    return "".join(out) or "1"


def _shift_label(label: str, offset: int) -> str:
    if offset == 0 or label == "1":
        return label
    return "".join(chr(ord(ch) + offset) if "a" <= ch <= "z" else ch for ch in label)


def trivial_group() -> FiniteGroup:
    return FiniteGroup([[0]], ["1"], name="1", generators=[], letters=[])


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError("cyclic group order must be positive")
    ar = np.arange(n)
    mul = (ar[:, None] + ar[None, :]) % n
    labels = [_word_label([("a", i)]) for i in range(n)]
    return FiniteGroup(mul, labels, name=f"Z{n}", generators=[1] if n > 1 else [],
                       letters=["a"] if n > 1 else [], check=False)


def direct_product(*groups: FiniteGroup) -> FiniteGroup:
    if not groups:
        return trivial_group()
    if len(groups) == 1:
        return groups[0]
    G = groups[0]
    for H in groups[1:]:
        G = _direct2(G, H)
    G.name = "x".join(g.name or "?" for g in groups)
    return G


def _direct2(A: FiniteGroup, B: FiniteGroup) -> FiniteGroup:
    nA, nB = A.order, B.order
    a = np.repeat(np.arange(nA), nB)
    b = np.tile(np.arange(nB), nA)
    mul = A.mul[a[:, None], a[None, :]] * nB + B.mul[b[:, None], b[None, :]]
    if A.letters is not None and B.letters is not None:
        off = len(A.letters)
        labels = []
        for x, y in zip(a.tolist(), b.tolist()):
            la, lb = A.labels[x], _shift_label(B.labels[y], off)
            labels.append("1" if la == lb == "1" else (la if lb == "1" else (lb if la == "1" else la + lb)))
        letters = A.letters + [chr(ord("a") + off + i) for i in range(len(B.letters))]
    else:
        labels = [f"({A.labels[x]},{B.labels[y]})" for x, y in zip(a.tolist(), b.tolist())]
        letters = None
    gens = [g * nB for g in A.generators] + [h for h in B.generators]
    perms = None
    if A.perm_images is not None and B.perm_images is not None:
        dA = A.degree
        perms = []
        for x, y in zip(a.tolist(), b.tolist()):
            pa, pb = A.perm_images[x].images, B.perm_images[y].images
            perms.append(Perm(pa + tuple(dA + i for i in pb)))
        labels = [format_cycles(p) for p in perms]
        letters = None
    return FiniteGroup(mul, labels, name=f"{A.name}x{B.name}", perm_images=perms,
                       generators=gens, letters=letters, check=False)


def automorphism_from_images(A: FiniteGroup, images) -> list[int]:
    """Automorphism of ``A`` sending its designated generators to ``images``."""
    if len(images) != len(A.generators):
        raise GroupError(f"need {len(A.generators)} generator images, got {len(images)}")
    phi = extend_hom(A, A.generators, A, images)
    if phi is None:
        raise GroupError("action image does not define a homomorphism")
    if len(set(phi)) != A.order:
        raise GroupError("action image is not an automorphism (not bijective)")
    return phi


def semidirect(A: FiniteGroup, B: FiniteGroup, action) -> FiniteGroup:
    """``A ⋊ B`` where ``action[k]`` lists the images under conjugation by the
    k-th generator of ``B`` of the generators of ``A`` (``a^b = b^-1 a b``).
    """
    if len(action) != len(B.generators):
        raise GroupError(f"need an action for each of the {len(B.generators)} generators of B")
    gen_auts = [automorphism_from_images(A, imgs) for imgs in action]
    nA, nB = A.order, B.order
    bm = B.mul_list
    phi: list[list[int] | None] = [None] * nB
    phi[0] = list(range(nA))
    queue = deque([0])
    while queue:
        b = queue.popleft()
        for s, aut in zip(B.generators, gen_auts):
            bs = bm[b][s]
            composed = [aut[x] for x in phi[b]]  # apply phi_b first, then phi_s
            if phi[bs] is None:
                phi[bs] = composed
                queue.append(bs)
            elif phi[bs] != composed:
                raise GroupError("action inconsistent with the relations of B")
    phi_arr = np.array(phi, dtype=np.intp)
    a = np.repeat(np.arange(nA), nB)
    b = np.tile(np.arange(nB), nA)
    # (a1,b1)(a2,b2) = (a1 * a2^(b1^-1), b1 b2)
    a2_twisted = phi_arr[B.inv[b][:, None], a[None, :]]
    newa = A.mul[a[:, None], a2_twisted]
    newb = B.mul[b[:, None], b[None, :]]
    mul = newa * nB + newb
    if A.letters is not None and B.letters is not None:
        off = len(A.letters)
        labels = []
        for x, y in zip(a.tolist(), b.tolist()):
            la, lb = A.labels[x], _shift_label(B.labels[y], off)
            labels.append("1" if la == lb == "1" else (la if lb == "1" else (lb if la == "1" else la + lb)))
        letters = A.letters + [chr(ord("a") + off + i) for i in range(len(B.letters))]
    else:
        labels = [f"({A.labels[x]},{B.labels[y]})" for x, y in zip(a.tolist(), b.tolist())]
        letters = None
    gens = [g * nB for g in A.generators] + list(B.generators)
    return FiniteGroup(mul, labels, name=f"{A.name}:{B.name}", generators=gens,
                       letters=letters, check=A.order * B.order <= 64)


def dihedral(order: int) -> FiniteGroup:
    """Dihedral group of the given order ``2m``: ``<a, b | a^m = b^2 = 1, a^b = a^-1>``."""
    if order < 2 or order % 2:
        raise GroupError("dihedral group order must be even and >= 2")
    m = order // 2
    G = cyclic(2) if m == 1 else semidirect(cyclic(m), cyclic(2), [[m - 1]])
    G.name = f"D{order}"
    return G


def dicyclic(order: int) -> FiniteGroup:
    """``<a, b | a^2n = 1, b^2 = a^n, a^b = a^-1>`` of order 4n (Q8, Q16, ...)."""
    if order < 4 or order % 4:
        raise GroupError("dicyclic group order must be a multiple of 4")
    n = order // 4
    m = 2 * n
    elems = [(i, j) for j in (0, 1) for i in range(m)]
    index = {e: k for k, e in enumerate(elems)}

    def mult(x, y):
        (i, j), (k, l) = x, y
        if j == 0:
            return ((i + k) % m, l)
        # b a^k = a^-k b
        if l == 0:
            return ((i - k) % m, 1)
        return ((i - k + n) % m, 0)

    mul = [[index[mult(x, y)] for y in elems] for x in elems]
    labels = [_word_label([("a", i), ("b", j)]) for i, j in elems]
    return FiniteGroup(mul, labels, name=f"Q{order}" if order & (order - 1) == 0 else f"Dic{order}",
                       generators=[index[(1, 0)], index[(0, 1)]], letters=["a", "b"])


def quaternion8() -> FiniteGroup:
    units = ["1", "i", "j", "k"]
    table = {  # unit products (sign, unit)
        ("1", u): (1, u) for u in units}
    table.update({(u, "1"): (1, u) for u in units})
    table.update({
        ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"), ("j", "i"): (-1, "k"),
        ("j", "k"): (1, "i"), ("k", "j"): (-1, "i"),
        ("k", "i"): (1, "j"), ("i", "k"): (-1, "j"),
    })
    elems = [(1, "1"), (-1, "1"), (1, "i"), (-1, "i"), (1, "j"), (-1, "j"), (1, "k"), (-1, "k")]
    index = {e: k for k, e in enumerate(elems)}
    mul = []
    for s1, u1 in elems:
        row = []
        for s2, u2 in elems:
            s, u = table[(u1, u2)]
            row.append(index[(s1 * s2 * s, u)])
        mul.append(row)
    labels = [("" if s > 0 else "-") + u for s, u in elems]
    return FiniteGroup(mul, labels, name="Q8", generators=[index[(1, "i")], index[(1, "j")]])


def elementary_abelian(p: int, k: int) -> FiniteGroup:
    if k == 0:
        return trivial_group()
    G = direct_product(*[cyclic(p) for _ in range(k)])
    G.name = f"Z{p}^{k}" if k > 1 else f"Z{p}"
    return G


def perm_group(gens, degree: int | None = None, name: str | None = None,
               max_order: int = MAX_ORDER) -> FiniteGroup:
    """Closure of permutation generators; ids follow discovery order."""
    gens = [g if isinstance(g, Perm) else Perm.parse(g, degree) for g in gens]
    if not gens:
        raise GroupError("need at least one generator")
    deg = max(g.degree for g in gens) if degree is None else degree
    gens = [g.extend(deg) if g.degree < deg else g for g in gens]
    if any(g.degree != deg for g in gens):
        raise GroupError("generators have unequal degrees")
    ident = Perm.identity(deg)
    elems = [ident.images]
    seen = {ident.images: 0}
    gen_imgs = [g.images for g in gens]
    i = 0
    while i < len(elems):
        cur = elems[i]
        for g in gen_imgs:
            nxt = tuple(g[c - 1] for c in cur)  # cur first, then g
            if nxt not in seen:
                seen[nxt] = len(elems)
                elems.append(nxt)
                if len(elems) > max_order:
                    raise BudgetError(f"closure exceeds {max_order} elements")
        i += 1
    P = np.array(elems, dtype=np.intp) - 1  # 0-based images
    n = len(elems)
    weights = deg ** np.arange(deg, dtype=np.int64)
    codes = P.astype(np.int64) @ weights
    order_idx = np.argsort(codes)
    sorted_codes = codes[order_idx]
    mul = np.empty((n, n), dtype=np.intp)
    for a in range(n):
        comp = P[:, P[a]]  # row b: b(a(i))  == a*b
        c = comp.astype(np.int64) @ weights
        mul[a] = order_idx[np.searchsorted(sorted_codes, c)]
    perms = [Perm(e) for e in elems]
    gen_ids = [seen[g] for g in gen_imgs if seen[g] != 0]
    return FiniteGroup(mul, [format_cycles(p) for p in perms], name=name,
                       perm_images=perms, generators=gen_ids, check=n <= 64)


def symmetric(n: int) -> FiniteGroup:
    if n <= 1:
        return trivial_group()
    gens = [Perm.from_cycles([list(range(1, n + 1))], n)]
    if n > 2:
        gens.append(Perm.from_cycles([[1, 2]], n))
    return perm_group(gens, n, name=f"S{n}")


def alternating(n: int) -> FiniteGroup:
    if n <= 2:
        return trivial_group()
    gens = [Perm.from_cycles([[1, 2, k]], n) for k in range(3, n + 1)]
    return perm_group(gens, n, name=f"A{n}")


def matrix_group(p: int, gens, name: str | None = None, max_order: int = MAX_ORDER) -> FiniteGroup:
    """Closure of square matrices over the field of ``p`` elements."""
    gens = [tuple(tuple(int(x) % p for x in row) for row in g) for g in gens]
    d = len(gens[0])
    ident = tuple(tuple(int(i == j) for j in range(d)) for i in range(d))

    def mm(x, y):
        return tuple(tuple(sum(x[i][k] * y[k][j] for k in range(d)) % p for j in range(d))
                     for i in range(d))

    elems = [ident]
    seen = {ident: 0}
    i = 0
    while i < len(elems):
        for g in gens:
            nxt = mm(elems[i], g)
            if nxt not in seen:
                seen[nxt] = len(elems)
                elems.append(nxt)
                if len(elems) > max_order:
                    raise BudgetError(f"closure exceeds {max_order} elements")
        i += 1
    mul = [[seen[mm(x, y)] for y in elems] for x in elems]
    labels = ["1" if x == ident else "[" + ",".join("[" + ",".join(map(str, r)) + "]" for r in x) + "]"
              for x in elems]
    return FiniteGroup(mul, labels, name=name, generators=[seen[g] for g in gens if seen[g]],
                       check=len(elems) <= 64)


def from_table(table, name: str | None = None, labels=None) -> FiniteGroup:
    table = np.asarray(table, dtype=np.intp)
    return FiniteGroup(table, labels, name=name, check=True)


def subgroup_as_group(G: FiniteGroup, members, name: str | None = None) -> FiniteGroup:
    """Standalone group on a subgroup's members (identity first, id order kept)."""
    members = sorted(int(x) for x in members)
    if members[0] != 0:
        raise GroupError("subgroup must contain the identity")
    pos = {g: i for i, g in enumerate(members)}
    sub = G.mul[np.ix_(members, members)]
    try:
        mul = np.vectorize(pos.__getitem__)(sub) if len(members) > 1 else np.zeros((1, 1), dtype=np.intp)
    except KeyError:
        raise GroupError("member set is not closed under multiplication") from None
    perms = [G.perm_images[g] for g in members] if G.perm_images is not None else None
    return FiniteGroup(mul, [G.labels[g] for g in members], name=name, perm_images=perms,
                       check=len(members) <= 64)

