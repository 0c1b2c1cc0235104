"""Independent brute-force oracles used to cross-check the library."""

from __future__ import annotations

from itertools import combinations, product


def group_tables(n: int):
    """One Cayley table per isomorphism class of groups of order n.

    Plain backtracking over Latin squares with identity 0, pruned by
    associativity on every triple whose products are known, then deduplicated
    by a canonical relabelling.  Shares no code with the library.
    """
    if n == 1:
        yield [[0]]
        return
    seen = set()
    for m in [d for d in range(n, 1, -1) if n % d == 0]:
        yield from _tables_with_max_order(n, m, seen)


def _tables_with_max_order(n, m, seen):
    """Labelling normal form: element 1 has the maximal order m, and right
    multiplication by 1 cycles each block of m consecutive labels."""
    T = [[None] * n for _ in range(n)]
    for i in range(n):
        T[0][i] = i
        T[i][0] = i
    for s in range(0, n, m):
        for i in range(m):
            T[s + i][1] = s + (i + 1) % m
    cells = [(a, b) for a in range(1, n) for b in range(2, n)]

    def consistent(a, b):
        c = T[a][b]
        for z in range(n):
            # (a b) z = a (b z)
            bz = T[b][z]
            if bz is not None and T[c][z] is not None and T[a][bz] is not None and T[c][z] != T[a][bz]:
                return False
            # (z a) b = z (a b)
            za = T[z][a]
            if za is not None and T[za][b] is not None and T[z][c] is not None and T[za][b] != T[z][c]:
                return False
        for x in range(n):
            for y in range(n):
                # (x y) b = x (y b) with x y = a
                if T[x][y] == a and T[y][b] is not None and T[x][T[y][b]] is not None \
                        and T[x][T[y][b]] != c:
                    return False
                # a (x y) = (a x) y with x y = b
                if T[x][y] == b and T[a][x] is not None and T[T[a][x]][y] is not None \
                        and T[T[a][x]][y] != c:
                    return False
        return True

    def rec(k):
        if k == len(cells):
            if not is_associative(T) or max(_orders(T, n)) != m:
                return
            key = canonical(T, n)
            if key not in seen:
                seen.add(key)
                yield [row[:] for row in T]
            return
        a, b = cells[k]
        used_row = set(T[a])
        used_col = {T[i][b] for i in range(n)}
        for c in range(n):
            if c in used_row or c in used_col:
                continue
            T[a][b] = c
            if consistent(a, b):
                yield from rec(k + 1)
            T[a][b] = None

    if all(consistent(i, 1) for i in range(1, n)):
        yield from rec(0)


def _orders(T, n):
    out = []
    for g in range(n):
        x, k = g, 1
        while x != 0:
            x, k = T[x][g], k + 1
        out.append(k)
    return out


def canonical(T, n):
    """Isomorphism-invariant key: over every generating tuple of minimal
    length, relabel elements in breadth-first order of right multiplication by
    the tuple and take the least resulting table."""
    for k in range(0, n):
        tuples = [t for t in product(range(1, n), repeat=k) if len(_close(T, {0, *t})) == n]
        if tuples:
            break
    best = None
    for t in tuples:
        order = [0]
        pos = {0: 0}
        i = 0
        while i < len(order):
            for g in t:
                y = T[order[i]][g]
                if y not in pos:
                    pos[y] = len(order)
                    order.append(y)
            i += 1
        key = tuple(pos[T[order[i]][order[j]]] for i in range(n) for j in range(n))
        if best is None or key < best:
            best = key
    return best


def _close(T, s):
    s = set(s)
    while True:
        new = {T[a][b] for a in s for b in s} - s
        if not new:
            return s
        s |= new


def is_associative(T) -> bool:
    n = len(T)
    return all(T[T[a][b]][c] == T[a][T[b][c]] for a in range(n) for b in range(n) for c in range(n))


def subgroups_bruteforce(G) -> set[frozenset]:
    """All subgroups by closing every subset of size <= 3 of generators."""
    out = set()
    elems = range(G.order)
    for k in range(0, 4):
        for gens in combinations(elems, k):
            s = {0} | set(gens)
            while True:
                new = {int(G.mul[a, b]) for a in s for b in s} - s
                if not new:
                    break
                s |= new
            out.add(frozenset(s))
    return out
