import pytest
from hypothesis import given, strategies as st

from dident.perm import Perm, PermError, format_cycles, parse_cycles, perm_compose


def test_parse_compact_and_spaced():
    assert parse_cycles("(123)(45)") == [[1, 2, 3], [4, 5]]
    assert parse_cycles("(1 2 3)") == [[1, 2, 3]]
    assert parse_cycles("1") == []


def test_bad_cycle_notation():
    with pytest.raises(PermError):
        parse_cycles("(12)x")


def test_compose_left_to_right():
    # apply (12) first, then (13): 1 -> 2 -> 2, 2 -> 1 -> 3, 3 -> 3 -> 1
    p = perm_compose(Perm.parse("(12)", 3), Perm.parse("(13)", 3))
    assert str(p) == "(123)"


def test_order_and_parity():
    p = Perm.parse("(123)(45)", 5)
    assert p.order() == 6
    assert not p.is_even()
    assert p.cycle_type() == (3, 2)


def test_format_roundtrip():
    p = Perm.parse("(14)(25)", 5)
    assert Perm.parse(format_cycles(p), 5) == p


perms5 = st.permutations(list(range(1, 6))).map(lambda xs: Perm(tuple(xs)))


@given(perms5, perms5)
def test_mul_matches_compose(a, b):
    assert a * b == perm_compose(a, b)


@given(perms5)
def test_inverse(a):
    assert a * a.inverse() == Perm.identity(5)
