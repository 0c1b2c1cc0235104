"""Invariants from the module contracts, checked under a fixed hypothesis seed."""

import numpy as np
import pytest
from hypothesis import given, strategies as st

from dident.basisver import dihedral_basis, get_claim, run_claim, verify_basis_exhaustive
from dident.census import all_census_groups, census_entries, named_group
from dident.formula import EXHAUSTIVE_BUDGET, disjunction, falsifies, is_didentity, omega_valid
from dident.formulas import catalog, get_formula
from dident.parser import parse_formula
from dident.structure import is_section, sections

UP_TO_12 = all_census_groups(12)
AGREE_FORMULAS = [e for e in catalog() if not e.ude.omegas]


def _affordable(G, u):
    return G.order ** u.variable_count <= EXHAUSTIVE_BUDGET // 10


@pytest.mark.parametrize("entry", AGREE_FORMULAS, ids=lambda e: e.id)
def test_strategy_agreement(entry):
    for G in UP_TO_12:
        if not _affordable(G, entry.ude):
            continue
        a = is_didentity(G, entry.ude, "exhaustive")
        b = is_didentity(G, entry.ude, "backtrack")
        assert a.status == b.status, (entry.id, G.name)
        if b.status == "invalid":
            assert falsifies(G, entry.ude, b.counterexample_ids)


CLAUSE_WORDS = [(e.id, eq.lhs) for e in catalog() for eq in e.ude.equations()[:4]
                if e.ude.variable_count <= 3]


@given(st.sampled_from(["S4", "D8", "Q8", "A4", "S3", "Z3:Z4", "SL(2,3)"]), st.sampled_from(CLAUSE_WORDS),
       st.integers(0, 2 ** 31))
def test_conjugation_invariance(gname, clause, seed):
    from dident.words import eval_word, variables
    G = named_group(gname)
    _, w = clause
    rng = np.random.default_rng(seed)
    env = {i: int(rng.integers(G.order)) for i in variables(w)}
    g = int(rng.integers(G.order))
    env_g = {i: G.conj(v, g) for i, v in env.items()}
    assert (eval_word(G, w, env) == 0) == (eval_word(G, w, env_g) == 0)


@pytest.mark.parametrize("gname", ["D8", "Q8", "A4", "S4"])
def test_hs_closure(gname):
    """A formula valid in G stays valid in every section of G."""
    G = named_group(gname)
    valid = [e for e in catalog() if e.ude.variable_count <= 3 and is_didentity(G, e.ude).valid]
    assert valid
    for T in sections(G):
        for e in valid:
            assert is_didentity(T, e.ude).valid, (gname, T.name, e.id)


GROUPS_FOR_OMEGA = [named_group(e.name) for e in census_entries() if e.order <= 120]


@given(st.sampled_from(GROUPS_FOR_OMEGA), st.integers(1, 25))
def test_pigeonhole(G, n):
    assert omega_valid(G, n).valid == (G.order <= n)
    assert is_didentity(G, parse_formula(f"omega({n})")).valid == (G.order <= n)


@given(st.sampled_from(UP_TO_12), st.sampled_from(AGREE_FORMULAS), st.sampled_from(AGREE_FORMULAS))
def test_monotonicity(G, e1, e2):
    """Adding clauses never turns a valid formula invalid."""
    if not (_affordable(G, e1.ude) and _affordable(G, e2.ude)):
        return
    if is_didentity(G, e1.ude).valid:
        assert is_didentity(G, disjunction(e1.ude, e2.ude)).valid


@pytest.mark.parametrize("name", ["prop1", "prop2", "prop3"])
def test_section_dichotomy_soundness(name):
    """Every group reported as a section really is one and satisfies all formulas."""
    rep = run_claim(name)
    claim = get_claim(name)
    T = named_group(claim.target)
    seen = 0
    for item in rep.items:
        if item.get("disposition") == "section":
            H = named_group(item["group"])
            assert is_section(T, H) is not None
            assert all(is_didentity(H, get_formula(f)).valid for f in claim.formulas)
        if item.get("disposition") == "fails":
            H = named_group(item["group"])
            assert is_didentity(H, get_formula(item["failed_formula"])).status == "invalid"
            seen += 1
    assert seen > 0


def test_dihedral_cross_consistency():
    """At m = 4 the Prop-1 list and the generated dihedral basis both pass over orders 1..8."""
    a = run_claim("prop1")
    claim = dihedral_basis(4)
    claim.scope_orders = list(range(1, 9))
    b = verify_basis_exhaustive(claim)
    assert a.passed and b.passed
