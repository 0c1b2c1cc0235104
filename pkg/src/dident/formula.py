"""Universal disjunctions of equations (UDEs) and their validity in finite groups.

A UDE holds in ``G`` when every assignment of group elements to its variables
satisfies at least one clause.  Deciding it means searching for a falsifying
assignment, either by brute force or by a pruned backtracking search.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .groups import FiniteGroup
from .structure import conjugacy_classes
from .words import (ONE, Inverse, Power, Product, Var, Word, eval_batch, eval_flat,
                    format_word, product, substitute, variables)

EXHAUSTIVE_BUDGET = 10 ** 7
NODE_BUDGET = 5 * 10 ** 7
BLOCK = 1 << 16


class FormulaError(ValueError):
    pass


# -- clauses ------------------------------------------------------------------------

@dataclass(frozen=True)
class Equation:
    """``lhs = 1``; ``source`` keeps the written sides for display."""
    lhs: Word
    source: tuple | None = None

    @classmethod
    def of(cls, left: Word, right: Word = ONE) -> Equation:
        if right == ONE:
            return cls(left, (left, right))
        return cls(product(left, Inverse(right)), (left, right))

    def variables(self) -> set[int]:
        return variables(self.lhs)

    def holds(self, G, a):
        return eval_batch(G, self.lhs, a) == 0

    def holds_flat(self, G, a) -> bool:
        return eval_flat(G, self.lhs, a) == 0

    def equations(self) -> list[Equation]:
        return [self]

    def substitute(self, mapping) -> Equation:
        src = None
        if self.source:
            src = tuple(substitute(w, mapping) for w in self.source)
        return Equation(substitute(self.lhs, mapping), src)

    def __str__(self) -> str:
        left, right = self.source or (self.lhs, ONE)
        return f"({format_word(left)} = {format_word(right)})"


@dataclass(frozen=True)
class Membership:
    """``a ∈ <b>`` restricted to exponents ``lo..hi``: some ``a = b^i``."""
    a: Word
    b: Word
    lo: int
    hi: int

    def variables(self) -> set[int]:
        return variables(self.a) | variables(self.b)

    def holds(self, G, env):
        av = eval_batch(G, self.a, env)
        bv = eval_batch(G, self.b, env)
        e = G.exponent
        out = np.zeros(np.broadcast(av, bv).shape, dtype=bool)
        for i in range(self.lo, self.hi + 1):
            out |= G.pow_table[bv, i % e] == av
        return out if out.shape else bool(out)

    def equations(self) -> list[Equation]:
        return [Equation.of(self.a, Power(self.b, i) if i != 1 else self.b) if i else Equation.of(self.a)
                for i in range(self.lo, self.hi + 1)]

    def holds_flat(self, G, env) -> bool:
        return any(eq.holds_flat(G, env) for eq in self.equations())

    def substitute(self, mapping) -> Membership:
        return Membership(substitute(self.a, mapping), substitute(self.b, mapping), self.lo, self.hi)

    def __str__(self) -> str:
        return f"in_cyc({format_word(self.a)}, {format_word(self.b)}, {self.lo}, {self.hi})"


@dataclass(frozen=True)
class Omega:
    """Pigeonhole clause over ``n + 1`` dedicated variables: two of them coincide."""
    n: int

    def __str__(self) -> str:
        return f"omega({self.n})"

    def literal(self) -> list[Equation]:
        return [Equation.of(Var(i + 1), Var(j + 1))
                for i in range(self.n + 1) for j in range(i + 1, self.n + 1)]


Clause = Equation | Membership


@dataclass
class UDE:
    clauses: list
    omegas: list = field(default_factory=list)
    variable_count: int = 0
    text: str | None = None

    def __post_init__(self):
        used = set()
        for c in self.clauses:
            used |= c.variables()
        n = max(used, default=0)
        if used != set(range(1, n + 1)):
            missing = sorted(set(range(1, n + 1)) - used)
            raise FormulaError(f"variables must be contiguous from x1; missing x{missing[0]}")
        self.variable_count = n
        for om in self.omegas:
            if om.n < 1:
                raise FormulaError("omega(n) needs n >= 1")

    @property
    def total_variables(self) -> int:
        return self.variable_count + sum(o.n + 1 for o in self.omegas)

    def equations(self) -> list[Equation]:
        """Clauses with every membership expanded into its equations."""
        return [eq for c in self.clauses for eq in c.equations()]

    def expand_omegas(self) -> UDE:
        """Literal form: each omega becomes its pairwise equalities on fresh variables."""
        clauses = list(self.clauses)
        offset = self.variable_count
        for om in self.omegas:
            shift = {i + 1: Var(offset + i + 1) for i in range(om.n + 1)}
            clauses += [eq.substitute(shift) for eq in om.literal()]
            offset += om.n + 1
        return UDE(clauses)

    def __str__(self) -> str:
        parts = [str(o) for o in self.omegas] + [str(c) for c in self.clauses]
        return " | ".join(parts) if parts else "(empty)"


def disjunction(*udes: UDE) -> UDE:
    """Disjunction of UDEs sharing variable names."""
    return UDE([c for u in udes for c in u.clauses], [o for u in udes for o in u.omegas])


# -- verdicts ---------------------------------------------------------------------------

@dataclass
class Verdict:
    status: str  # valid | invalid | indeterminate
    counterexample: dict | None = None  # variable name -> element label
    counterexample_ids: tuple | None = None
    nodes: int = 0
    seconds: float = 0.0
    strategy: str = ""
    reason: str = ""

    @property
    def valid(self) -> bool:
        return self.status == "valid"

    def to_dict(self, timing: bool = True) -> dict:
        d = {"status": self.status, "strategy": self.strategy, "nodes": self.nodes}
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        if self.reason:
            d["reason"] = self.reason
        if timing:
            d["seconds"] = round(self.seconds, 4)
        return d


class SearchAborted(Exception):
    pass


def falsifies(G: FiniteGroup, ude: UDE, ids) -> bool:
    """Independent check that ``ids`` (values of x1..xn, then omega variables)
    falsifies every clause; uses flat-word evaluation."""
    env = {i + 1: int(g) for i, g in enumerate(ids)}
    if any(c.holds_flat(G, env) for c in ude.clauses):
        return False
    offset = ude.variable_count
    for om in ude.omegas:
        vals = ids[offset:offset + om.n + 1]
        if len(set(vals)) != len(vals):
            return False
        offset += om.n + 1
    return True


def _labels(G: FiniteGroup, ude: UDE, ids) -> dict:
    return {f"x{i + 1}": G.labels[g] for i, g in enumerate(ids)}


def omega_valid(G: FiniteGroup, n: int) -> Verdict:
    if n < 1:
        raise FormulaError("omega(n) needs n >= 1")
    t0 = time.perf_counter()
    if G.order <= n:
        return Verdict("valid", strategy="pigeonhole", seconds=time.perf_counter() - t0)
    ids = tuple(range(n + 1))
    return Verdict("invalid", {f"x{i + 1}": G.labels[g] for i, g in enumerate(ids)}, ids,
                   strategy="pigeonhole", seconds=time.perf_counter() - t0)


# -- main entry -----------------------------------------------------------------------------

def is_didentity(G: FiniteGroup, ude: UDE, strategy: str = "auto", *,
                 exhaustive_budget: int = EXHAUSTIVE_BUDGET, node_budget: int = NODE_BUDGET,
                 timeout: float | None = None, workers: int = 1) -> Verdict:
    if strategy not in ("auto", "exhaustive", "backtrack"):
        raise FormulaError(f"unknown strategy {strategy!r}")
    t0 = time.perf_counter()
    n = ude.variable_count
    if ude.omegas and G.order <= min(o.n for o in ude.omegas):
        return Verdict("valid", strategy="pigeonhole", seconds=time.perf_counter() - t0)
    size = G.order ** n
    if strategy == "auto":
        strategy = "exhaustive" if size <= exhaustive_budget else "backtrack"
    try:
        if strategy == "exhaustive":
            if size > exhaustive_budget:
                return Verdict("indeterminate", strategy=strategy,
                               seconds=time.perf_counter() - t0,
                               reason=f"budget exceeded: {G.order}^{n} assignments > {exhaustive_budget}")
            found, nodes = _exhaustive(G, ude.clauses, n)
        else:
            deadline = None if timeout is None else t0 + timeout
            found, nodes = _backtrack(G, ude.clauses, n, node_budget, deadline, workers)
    except SearchAborted as exc:
        return Verdict("indeterminate", strategy=strategy, seconds=time.perf_counter() - t0,
                       reason=str(exc))
    dt = time.perf_counter() - t0
    if found is None:
        return Verdict("valid", nodes=nodes, seconds=dt, strategy=strategy)
    ids = tuple(found)
    for om in ude.omegas:
        ids += tuple(range(om.n + 1))
    if not falsifies(G, ude, ids):
        raise AssertionError(f"search emitted a non-falsifying assignment {ids}")
    return Verdict("invalid", _labels(G, ude, ids), ids, nodes, dt, strategy)


# -- exhaustive ---------------------------------------------------------------------------

def _exhaustive(G: FiniteGroup, clauses, n: int):
    """Lexicographically least falsifying id tuple, by brute force."""
    if n == 0:
        env: dict = {}
        return (None if any(bool(c.holds(G, env)) for c in clauses) else ()), 1
    N = G.order
    t = 1
    while t < n and N ** (t + 1) <= BLOCK:
        t += 1
    tail = np.indices((N,) * t).reshape(t, -1)
    nodes = 0
    head_count = N ** (n - t)
    for h in range(head_count):
        head = np.unravel_index(h, (N,) * (n - t)) if n > t else ()
        env = {i + 1: int(head[i]) for i in range(n - t)}
        for j in range(t):
            env[n - t + j + 1] = tail[j]
        alive = np.ones(tail.shape[1], dtype=bool)
        for c in clauses:
            alive &= ~np.asarray(c.holds(G, env), dtype=bool)
            if not alive.any():
                break
        nodes += tail.shape[1]
        if alive.any():
            k = int(np.argmax(alive))
            return tuple(int(v) for v in head) + tuple(int(tail[j, k]) for j in range(t)), nodes
    return None, nodes


# -- backtracking ---------------------------------------------------------------------------

class _Plan:
    """Static analysis of a UDE for the backtracker."""

    def __init__(self, G: FiniteGroup, clauses, n: int):
        self.n = n
        domains = [np.arange(G.order) for _ in range(n)]
        rest = []
        for c in clauses:
            vs = c.variables()
            if not vs:
                if bool(c.holds(G, {})):
                    self.trivially_valid = True
                    return
                continue
            if len(vs) == 1:
                (v,) = vs
                ok = ~np.asarray(c.holds(G, {v: np.arange(G.order)}), dtype=bool)
                domains[v - 1] = domains[v - 1][ok[domains[v - 1]]]
            else:
                rest.append(c)
        self.trivially_valid = False
        # search order: smaller domains first, ties by index
        self.order = sorted(range(1, n + 1), key=lambda v: (len(domains[v - 1]), v))
        pos = {v: k for k, v in enumerate(self.order)}
        self.domains = [domains[v - 1] for v in self.order]
        # checks[k]: clauses becoming checkable once positions < k are assigned,
        # grouped by the single unassigned position they filter
        self.checks: list[dict[int, list]] = [dict() for _ in range(n + 1)]
        for c in rest:
            ps = sorted(pos[v] for v in c.variables())
            target = ps[-1]
            trigger = ps[-2] + 1  # once everything but the last is assigned
            self.checks[trigger].setdefault(target, []).append(c)


def _class_reps(G: FiniteGroup, domain) -> np.ndarray:
    dom = set(int(g) for g in domain)
    reps = [cls[0] for cls in conjugacy_classes(G) if cls[0] in dom]
    return np.array(sorted(reps), dtype=np.intp)


def _backtrack(G: FiniteGroup, clauses, n: int, node_budget: int, deadline, workers: int):
    if n == 0:
        return _exhaustive(G, clauses, 0)
    plan = _Plan(G, clauses, n)
    if plan.trivially_valid:
        return None, 0
    first = _class_reps(G, plan.domains[0])
    if workers > 1 and len(first) > 1:
        chunks = [first[i::workers] for i in range(workers)]
        chunks = [c for c in chunks if len(c)]
        with ProcessPoolExecutor(max_workers=len(chunks)) as ex:
            futs = [ex.submit(_run_chunk, G, clauses, n, c, node_budget, deadline) for c in chunks]
            results = [f.result() for f in futs]
        for r in results:
            if isinstance(r, str):
                raise SearchAborted(r)
        finds = [r[0] for r in results if r[0] is not None]
        nodes = sum(r[1] for r in results)
        return (min(finds) if finds else None), nodes
    return _search(G, plan, first, node_budget, deadline)


def _run_chunk(G, clauses, n, first, node_budget, deadline):
    plan = _Plan(G, clauses, n)
    try:
        return _search(G, plan, first, node_budget, deadline)
    except SearchAborted as exc:
        return str(exc)


def _search(G: FiniteGroup, plan: _Plan, first, node_budget: int, deadline):
    n = plan.n
    order = plan.order
    values = [0] * n
    counter = [0]

    def filtered(k: int, domains):
        """Apply the checks triggered by assigning position k - 1."""
        env = {order[p]: values[p] for p in range(k)}
        out = list(domains)
        for target, cs in plan.checks[k].items():
            cand = out[target]
            if not len(cand):
                return None
            env[order[target]] = cand
            keep = np.ones(len(cand), dtype=bool)
            for c in cs:
                keep &= ~np.asarray(c.holds(G, env), dtype=bool)
            del env[order[target]]
            cand = cand[keep]
            if not len(cand):
                return None
            out[target] = cand
        return out

    def rec(k: int, domains):
        if k == n:
            return True
        counter[0] += 1
        if counter[0] > node_budget:
            raise SearchAborted(f"budget exceeded: more than {node_budget} search nodes")
        if deadline is not None and counter[0] % 256 == 0 and time.perf_counter() > deadline:
            raise SearchAborted("timeout exceeded")
        for g in domains[k].tolist():
            values[k] = g
            nxt = filtered(k + 1, domains)
            if nxt is not None and rec(k + 1, nxt):
                return True
        return False

    domains = list(plan.domains)
    domains[0] = np.asarray(first, dtype=np.intp)
    if rec(0, domains):
        ids = [0] * n
        for p, v in enumerate(order):
            ids[v - 1] = values[p]
        return tuple(ids), counter[0]
    return None, counter[0]


# -- helpers ---------------------------------------------------------------------------------

def check_equivalent_on(G: FiniteGroup, u1: UDE, u2: UDE,
                        budget: int = EXHAUSTIVE_BUDGET) -> bool:
    """True iff both UDEs are falsified by exactly the same assignments."""
    a, b = u1.expand_omegas(), u2.expand_omegas()
    n = max(a.variable_count, b.variable_count)
    if G.order ** n > budget:
        raise FormulaError(f"budget exceeded: {G.order}^{n} assignments > {budget}")
    return bool(np.array_equal(falsifier_mask(G, a, n), falsifier_mask(G, b, n)))


def falsifier_mask(G: FiniteGroup, ude: UDE, n: int | None = None) -> np.ndarray:
    """Boolean array over all assignments (C order) marking falsifiers."""
    n = ude.variable_count if n is None else n
    grid = np.indices((G.order,) * n).reshape(n, -1) if n else np.zeros((0, 1), dtype=np.intp)
    env = {i + 1: grid[i] for i in range(n)}
    alive = np.ones(grid.shape[1], dtype=bool)
    for c in ude.clauses:
        alive &= ~np.asarray(c.holds(G, env), dtype=bool)
    return alive


def assignment_ids(G: FiniteGroup, values) -> tuple[int, ...]:
    """Resolve element references (ids, labels, permutations) to ids."""
    return tuple(G.element(v) for v in values)


def clause_count(ude: UDE) -> int:
    return len(ude.clauses) + len(ude.omegas)


def max_falsifier_search_size(G: FiniteGroup, ude: UDE) -> int:
    return math.prod([G.order] * ude.variable_count)
