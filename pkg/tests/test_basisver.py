import json

import pytest

from dident.basisver import (BasisClaim, VerificationReport, adjudicate, claim_names, dihedral_basis,
                             dihedral_formula_refs, get_claim, has_cyclic_center, lemma7_obstructions,
                             load_claim_file, replay, run_claim, verify_basis_exhaustive,
                             verify_lemma_instances)
from dident.census import named_group


def test_claim_names():
    names = claim_names()
    for n in ("prop1", "prop2", "prop3", "prop4", "prop5", "prop6", "prop7", "thm1", "thm2", "thm3",
              "thm4", "note-s4-pk"):
        assert n in names
    with pytest.raises(ValueError):
        get_claim("nope")


def test_prop1_and_replay():
    rep = run_claim("prop1")
    assert rep.passed
    assert replay(rep)
    assert replay(json.loads(rep.to_json()))


def test_negative_control_gap_is_z2_cubed():
    rep = run_claim("prop1-control")
    gaps = [i for i in rep.items if i.get("disposition") == "gap"]
    assert [i["group"] for i in gaps] == ["Z2^3"]


def test_claim_without_expected_gap_fails():
    c = get_claim("prop1-control")
    bare = BasisClaim("bare", c.target, c.formulas, c.scope_orders)
    assert not verify_basis_exhaustive(bare).passed


def test_weak_exemption():
    assert not has_cyclic_center(named_group("Z2^3"))
    assert has_cyclic_center(named_group("Q8"))
    assert run_claim("prop1-weak").passed


def test_adjudication_binds_unique_reading():
    rep = adjudicate("S5", "3.8", "3.8a", [("Z3xZ3", ("a", "b"))])
    bound = [i for i in rep.items if "bound" in i]
    assert bound and bound[-1]["bound"] == "3.8a"


def test_report_json_roundtrip():
    rep = run_claim("prop2")
    text = rep.to_json()
    assert json.dumps(json.loads(text), sort_keys=True, indent=2) == text


def test_report_replay_detects_tampering():
    rep = run_claim("prop1").to_dict()
    for item in rep["items"]:
        if item.get("counterexample") and "formula" in item:
            item["counterexample"] = {k: "1" for k in item["counterexample"]}
            break
    assert not replay(rep)


def test_claim_file(tmp_path):
    p = tmp_path / "claim.json"
    p.write_text(json.dumps({"target": "D8", "formulas": ["2.1", "2.2", "2.3", "2.4"],
                             "scope_orders": [1, 2, 3, 4, 5, 6, 7, 8],
                             "eliminations": [["Z2^3", "2.4", ["a", "b", "c"]]], "weak": False}))
    claim = load_claim_file(p)
    assert run_claim(claim).passed
    assert BasisClaim.from_dict(claim.to_dict()).to_dict() == claim.to_dict()


def test_dihedral_refs():
    assert dihedral_formula_refs(6)[0] == "omega(12)"
    assert any(r.startswith("5.6") for r in dihedral_formula_refs(5))
    assert dihedral_basis(3).target == "D6"
    assert len(lemma7_obstructions(6)) == 4


@pytest.mark.parametrize("lemma", ["L1", "L2", "L3", "L4", "L5s4", "L5s5", "L7"])
def test_lemma_sweeps(lemma):
    rep = verify_lemma_instances(lemma)
    assert rep.passed, rep.failures()


def test_report_text():
    rep = VerificationReport("x")
    rep.add(check="thing", **{"pass": True})
    assert "PASS" in rep.to_text()
