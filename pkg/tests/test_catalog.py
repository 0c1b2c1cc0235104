import pytest

from dident.census import (EXPECTED_COUNTS, all_census_groups, census_entries, census_selfcheck,
                           groups_of_order, named_group)
from dident.construct import build_named
from dident.formula import falsifies, is_didentity
from dident.formulas import catalog, catalog_ids, get_entry, get_formula
from dident.groups import GroupError
from dident.structure import is_isomorphic, order_spectrum
from oracles import group_tables
from dident.groups import from_table


# -- formula catalog ---------------------------------------------------------------------

def test_catalog_ids_unique_and_complete():
    ids = catalog_ids()
    assert len(ids) == len(set(ids))
    expected = [f"2.{i}" for i in range(1, 14)] + [f"3.{i}" for i in range(1, 13)] + \
               [f"4.{i}" for i in range(1, 8)] + ["3.8a", "4.6a"]
    assert set(expected) <= set(ids)
    for fid in ("5.1", "5.2", "5.3", "5.4", "5.5", "5.6"):
        assert fid in ids
    assert all(e.note for e in catalog())


def test_catalog_entries():
    assert get_entry("3.12").known_failures == (("S5", ("(123)(45)", "(14)(25)")),)
    assert get_entry("4.6a").variant_of == "4.6"
    assert get_entry("3.8a").variant_of == "3.8"
    assert len(get_entry("2.4").ude.clauses) == 18
    assert get_entry("paper:2.4").id == "2.4"


def test_dihedral_instances_parse():
    u = get_formula("5.3a[m=12,p=3]")
    assert u.variable_count >= 2
    assert get_formula("paper:5.1[m=6]").variable_count >= 1


@pytest.mark.parametrize("entry", [e for e in catalog() if e.known_failures], ids=lambda e: e.id)
def test_known_failure_witnesses(entry):
    for gname, witness in entry.known_failures:
        G = named_group(gname)
        ids = [G.element(w) for w in witness]
        assert falsifies(G, entry.ude, ids), (entry.id, gname)


SMALL_VALID = [(e.id, g) for e in catalog() for g in e.claimed_valid_in
               if g in ("D8", "Q8", "A4", "S4")]


@pytest.mark.parametrize("fid,gname", SMALL_VALID)
def test_claimed_validity_small(fid, gname):
    assert is_didentity(named_group(gname), get_formula(fid)).valid


# -- group census ------------------------------------------------------------------------

def test_counts():
    for n, k in EXPECTED_COUNTS.items():
        assert len(groups_of_order(n)) == k
    assert [G.name for G in groups_of_order(8)] == ["Z8", "Z4xZ2", "Z2^3", "D8", "Q8"]
    assert len(groups_of_order(16)) == 14
    assert len(groups_of_order(24)) == 15


def test_out_of_range():
    with pytest.raises(GroupError):
        groups_of_order(25)
    with pytest.raises(GroupError):
        named_group("NoSuchGroup")


def test_named_large_groups():
    assert order_spectrum(named_group("SL(2,5)"))[2] == 1
    assert 15 in order_spectrum(named_group("A5xZ3"))
    assert named_group("S6").order == 720
    assert named_group("A5xZ2").order == 120
    assert named_group("F20").order == 20


def test_aliases():
    assert is_isomorphic(named_group("Z2xZ2xZ2"), named_group("Z2^3"))
    assert named_group("D8") is named_group("D8")


def test_construction_idempotent():
    for e in census_entries(include_large=False):
        a, b = e.build(), build_named(e.construction, e.name)
        assert a.labels == b.labels and (a.mul == b.mul).all()


@pytest.mark.parametrize("n", range(1, 11))
def test_cayley_table_oracle(n):
    """Every group found by brute-force table enumeration is in the census, and vice versa."""
    found = [from_table(T) for T in group_tables(n)]
    census = groups_of_order(n)
    assert len(found) == len(census)
    for H in found:
        assert sum(is_isomorphic(H, G) is not None for G in census) == 1


def test_census_selfcheck():
    rep = census_selfcheck()
    assert rep["pass"], [i for i in rep["items"] if not i["pass"]]
    names = {i["check"] for i in rep["items"]}
    assert "order 24 without elements of order 6 is S4" in names


def test_order_facts():
    assert order_spectrum(named_group("Z4xZ2"))[4] >= 3
    assert order_spectrum(named_group("Q8"))[4] >= 3
    no6 = [G for G in groups_of_order(24) if 6 not in order_spectrum(G)]
    assert len(no6) == 1 and is_isomorphic(no6[0], named_group("S4"))
    assert len(all_census_groups(24)) == sum(EXPECTED_COUNTS.values())
