import itertools

import pytest

from dident.census import named_group
from dident.formula import (FormulaError, UDE, check_equivalent_on, falsifies, is_didentity,
                            omega_valid)
from dident.formulas import get_formula, literal_omega, membership_literal
from dident.groups import cyclic, dihedral
from dident.parser import ParseError, parse_formula, parse_word
from dident.words import Var, eval_flat, eval_word, flatten, format_word


def test_parse_three_clauses():
    u = parse_formula("(x1^2 = 1) | (x2^2 = 1) | ([x1,x2] = 1)")
    assert len(u.clauses) == 3 and u.variable_count == 2


def test_theta_has_eighteen_clauses():
    u = parse_formula("theta(x1,x2,x3)")
    assert len(u.clauses) == 18 and u.variable_count == 3


def test_syntax_error_column():
    with pytest.raises(ParseError) as exc:
        parse_formula("(x1^2 = 1")
    assert exc.value.column == 9


def test_unknown_macro_and_gap():
    with pytest.raises(ParseError):
        parse_formula("foo(x1)")
    with pytest.raises(FormulaError):
        parse_formula("x1 = x3")


def _letters(w):
    return tuple((v[1], e) for v, e in flatten(w))


def test_word_normalisation():
    assert _letters(parse_word("[x1,x2]")) == ((1, -1), (2, -1), (1, 1), (2, 1))
    assert _letters(parse_word("x1^x2")) == ((2, -1), (1, 1), (2, 1))
    assert _letters(parse_word("(x1x2)^-1")) == ((2, -1), (1, -1))


def test_eval_examples():
    S4 = named_group("S4")
    w = parse_word("x1x2")
    assert S4.labels[eval_word(S4, w, {1: S4.element("(123)"), 2: S4.element("(124)")})] == "(14)(23)"
    S3 = named_group("S3")
    v = eval_word(S3, parse_word("x1^x2"), {1: S3.element("(12)"), 2: S3.element("(13)")})
    assert S3.labels[v] == "(23)"
    A5 = named_group("A5")
    assert A5.labels[eval_word(A5, parse_word("x1^3"), {1: A5.element("(12345)")})] == "(14253)"


def test_eval_flat_agrees_with_tree():
    G = named_group("S4")
    w = parse_word("[x1^2, x2^x3]^3 x1^-2")
    for vals in itertools.islice(itertools.product(range(24), repeat=3), 0, 2000, 37):
        env = dict(zip((1, 2, 3), vals))
        assert eval_word(G, w, env) == eval_flat(G, w, env)


def test_unassigned_variable():
    with pytest.raises(KeyError):
        eval_word(cyclic(3), Var(2), {1: 0})


def test_didentity_examples():
    D8 = named_group("D8")
    assert is_didentity(D8, get_formula("2.2")).valid
    v = is_didentity(D8, get_formula("2.5"))
    assert v.status == "invalid"
    assert set(v.counterexample.values()) == {"a", "b"}
    v = is_didentity(named_group("Z2^3"), get_formula("2.4"))
    assert v.status == "invalid" and len(set(v.counterexample.values())) == 3


def test_s5_312_paper_witness_falsifies():
    S5 = named_group("S5")
    u = get_formula("3.12")
    assert falsifies(S5, u, [S5.element("(123)(45)"), S5.element("(14)(25)")])
    assert is_didentity(S5, u, "backtrack").status == "invalid"


def test_exhaustive_budget_indeterminate():
    v = is_didentity(named_group("A6"), get_formula("4.3"), "exhaustive")
    assert v.status == "indeterminate" and "budget" in v.reason


def test_omega():
    assert omega_valid(dihedral(8), 8).valid
    v = omega_valid(cyclic(9), 8)
    assert v.status == "invalid" and len(set(v.counterexample.values())) == 9
    assert omega_valid(cyclic(2), 1).status == "invalid"
    with pytest.raises(FormulaError):
        omega_valid(cyclic(2), 0)


def test_check_equivalent_on():
    assert check_equivalent_on(cyclic(4), parse_formula("omega(3)").expand_omegas(), literal_omega(3))
    D8 = named_group("D8")
    x, y = Var(1), Var(2)
    hand = parse_formula("(x1 = 1) | (x1 = x2) | (x1 = x2^2) | (x1 = x2^3)")
    assert check_equivalent_on(D8, membership_literal(x, y, 0, 3), hand)
    assert check_equivalent_on(D8, hand, parse_formula("in_cyc(x1, x2, 0, 3)"))
    assert not check_equivalent_on(D8, hand, parse_formula("in_cyc(x1, x2, 1, 3)"))


def test_lex_least_counterexample():
    # x1^2 = 1 fails first at the least id of order > 2
    G = cyclic(6)
    v = is_didentity(G, parse_formula("x1^2 = 1"), "exhaustive")
    assert v.counterexample_ids == (min(g for g in range(6) if G.orders[g] > 2),)


def test_workers_merge_deterministic():
    S5 = named_group("S5")
    u = get_formula("3.12")
    a = is_didentity(S5, u, "backtrack", workers=1)
    b = is_didentity(S5, u, "backtrack", workers=2)
    assert a.status == b.status == "invalid"
    assert a.counterexample == b.counterexample


def test_format_word_roundtrip():
    for text in ("x1^2x2", "[x1,x2]^3", "(x1x2^2)^20"):
        w = parse_word(text)
        assert flatten(parse_word(format_word(w))) == flatten(w)


def test_ude_str_reparses():
    u = get_formula("2.12")
    again = parse_formula(str(u))
    assert isinstance(again, UDE) and len(again.clauses) == len(u.clauses)
