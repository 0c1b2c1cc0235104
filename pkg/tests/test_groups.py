import numpy as np
import pytest
from hypothesis import given, strategies as st

from dident.census import all_census_groups, named_group
from dident.construct import build_named, group_from_json
from dident.groups import (BudgetError, GroupError, cyclic, dihedral, direct_product, elementary_abelian,
                           matrix_group, perm_group, quaternion8, symmetric)
from dident.perm import Perm
from dident.structure import (center, conjugacy_classes, derived_length, element_order, is_isomorphic,
                              is_normal, is_section, normal_subgroups, order_spectrum, quotient, subgroups,
                              sylow_subgroups)
from oracles import is_associative, subgroups_bruteforce

SMALL = [G for G in all_census_groups(16)]


def test_closure_of_three_cycle():
    G = perm_group([Perm.parse("(123)", 3)])
    assert G.order == 3


def test_closure_budget():
    with pytest.raises((BudgetError, GroupError)):
        perm_group([Perm.parse("(12)", 7), Perm.parse("(1234567)", 7)], max_order=100)


def test_builders_orders():
    assert build_named('semidirect(cyclic(3), cyclic(4), ["g1^-1"])').order == 12
    assert build_named('semidirect(cyclic(5), cyclic(4), ["g1^2"])').order == 20
    V = direct_product(cyclic(2), cyclic(2))
    assert V.order == 4 and V.exponent == 2


def test_matrix_group_sl25():
    G = matrix_group(5, [[[1, 1], [0, 1]], [[0, 4], [1, 0]]])
    assert G.order == 120
    assert order_spectrum(G)[2] == 1


@pytest.mark.parametrize("G", SMALL, ids=lambda G: G.name)
def test_latin_square_and_associativity(G):
    if G.order > 16:
        return
    m = G.mul
    full = np.arange(G.order)
    assert all((np.sort(m[i]) == full).all() and (np.sort(m[:, i]) == full).all() for i in range(G.order))
    assert is_associative(m.tolist())


@pytest.mark.parametrize("G", SMALL, ids=lambda G: G.name)
def test_element_order_divides_exponent(G):
    assert all(G.exponent % element_order(G, g) == 0 for g in range(G.order))


def test_eval_in_s4():
    S4 = symmetric(4)
    a, b = S4.element("(123)"), S4.element("(124)")
    assert S4.labels[S4.op(a, b)] == "(14)(23)"


def test_conjugation_convention():
    S3 = symmetric(3)
    # x^y = y^-1 x y
    assert S3.labels[S3.conj(S3.element("(12)"), S3.element("(13)"))] == "(23)"


def test_subgroup_counts_match_bruteforce():
    for name, count in (("Q8", 6), ("A4", 10), ("D8", 10), ("S3", 6)):
        G = named_group(name)
        subs = {frozenset(H.members) for H in subgroups(G, max_gens=None)}
        assert subs == subgroups_bruteforce(G)
        assert len(subs) == count


def test_normal_subgroups():
    assert len(normal_subgroups(symmetric(4))) == 4
    Z6 = cyclic(6)
    assert len(normal_subgroups(Z6)) == len(subgroups(Z6, max_gens=None))


def test_quotients():
    A4 = named_group("A4")
    V4 = [A4.element(x) for x in ("1", "(12)(34)", "(13)(24)", "(14)(23)")]
    assert is_normal(A4, V4)
    assert is_isomorphic(quotient(A4, V4), cyclic(3))
    for G in SMALL[:20]:
        assert is_isomorphic(quotient(G, [0]), G)
        assert quotient(G, list(range(G.order))).order == 1


def test_center_and_derived_length():
    assert center(dihedral(8)).order == 2
    assert derived_length(symmetric(4)) == 3
    assert derived_length(named_group("A5")) is None


def test_sylow():
    A6 = named_group("A6")
    syl = sylow_subgroups(A6, 3)
    assert len(syl) == 10 and all(P.order == 9 for P in syl)


def test_sections():
    S4 = symmetric(4)
    assert is_section(S4, dihedral(8)) is not None
    assert is_section(S4, quaternion8()) is None
    assert is_section(S4, symmetric(3)) is not None


def test_conjugacy_classes_s5():
    assert sorted(len(c) for c in conjugacy_classes(symmetric(5))) == [1, 10, 15, 20, 20, 24, 30]


def test_group_json():
    G = group_from_json({"name": "T", "construction": {"perm_generators": ["(12)", "(123)"]}})
    assert G.order == 6
    H = group_from_json({"name": "Q", "construction": "quaternion8()"})
    assert is_isomorphic(H, quaternion8())


ISO_GROUPS = [G for G in all_census_groups(16)]


@given(st.sampled_from(ISO_GROUPS), st.sampled_from(ISO_GROUPS))
def test_isomorphism_reflexive_symmetric(G, H):
    assert is_isomorphic(G, G) is not None
    assert (is_isomorphic(G, H) is None) == (is_isomorphic(H, G) is None)


def test_elementary_abelian():
    assert order_spectrum(elementary_abelian(2, 3)) == {1: 1, 2: 7}
