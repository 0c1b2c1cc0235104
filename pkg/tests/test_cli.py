import json

import pytest

from dident.cli import main
from dident.config import ConfigError, RunConfig, load_config, parse_config_text


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_formula_check_invalid_s5(capsys):
    code, out, _ = run(capsys, "formula", "check", "paper:3.12", "--group", "S5")
    assert code == 1
    assert "x1 = (" in out and "x2 = (" in out


def test_formula_check_valid(capsys):
    assert run(capsys, "formula", "check", "paper:2.2", "--group", "D8")[0] == 0


def test_formula_check_budget(capsys):
    code, out, _ = run(capsys, "formula", "check", "paper:4.3", "--group", "A6", "--strategy", "exhaustive")
    assert code == 2 and "budget" in out


def test_unknown_inputs(capsys):
    code, _, err = run(capsys, "formula", "check", "paper:9.9", "--group", "D8")
    assert code == 2 and "unknown formula" in err
    code, _, err = run(capsys, "formula", "check", "paper:2.2", "--group", "Nope")
    assert code == 2 and "unknown group" in err


def test_formula_file_and_group_file(tmp_path, capsys):
    f = tmp_path / "f.txt"
    f.write_text("# exponent four\nx1^4 = 1\n", encoding="utf-8")
    g = tmp_path / "g.json"
    g.write_text(json.dumps({"name": "Dih8", "construction": "dihedral(8)"}))
    assert run(capsys, "formula", "check", str(f), "--group", str(g))[0] == 0


def test_basis_verify(capsys):
    code, out, _ = run(capsys, "basis", "verify", "prop1")
    assert code == 0 and "PASS" in out


def test_dihedral_lists_formulas(capsys):
    code, out, _ = run(capsys, "dihedral", "6", "--verify")
    assert code == 0
    assert "omega(12)" in out and "5.1[m=6]" in out


def test_translate(capsys):
    code, out, _ = run(capsys, "--json", "translate", "paper:2.10")
    assert code == 0
    assert json.loads(out)["translation"]["factors"] == 4


def test_rep_check(capsys):
    code, _, _ = run(capsys, "rep", "check", "--group", "D8", "--prime", "3", "--identity", "paper:6.3",
                     "--mode", "certified")
    assert code == 0
    code, _, err = run(capsys, "rep", "check", "--group", "D8", "--prime", "2", "--identity", "paper:6.3")
    assert code == 2 and "divides" in err


def test_groups_list(capsys):
    code, out, _ = run(capsys, "groups", "list", "--order", "8")
    assert code == 0 and len(out.strip().splitlines()) == 5
    code, out, _ = run(capsys, "groups", "list", "--order", "8", "--json")
    rows = json.loads(out)["groups"]
    assert {r["name"] for r in rows} == {"Z8", "Z4xZ2", "Z2^3", "D8", "Q8"}
    assert set(rows[0]) == {"name", "order", "spectrum", "construction"}


def test_json_roundtrip_byte_identical(capsys):
    _, out, _ = run(capsys, "basis", "verify", "prop2", "--json")
    assert json.dumps(json.loads(out), sort_keys=True, indent=2) + "\n" == out


def test_reproducible_apart_from_timing(capsys):
    _, a, _ = run(capsys, "basis", "verify", "prop5", "--json", "--no-timing", "--seed", "3")
    _, b, _ = run(capsys, "basis", "verify", "prop5", "--json", "--no-timing", "--seed", "3")
    assert a == b
    _, c, _ = run(capsys, "rep", "check", "--group", "S4", "--prime", "5", "--identity", "paper:6.5",
                  "--mode", "sampled", "--samples", "50", "--json", "--seed", "9")
    _, d, _ = run(capsys, "rep", "check", "--group", "S4", "--prime", "5", "--identity", "paper:6.5",
                  "--mode", "sampled", "--samples", "50", "--json", "--seed", "9")
    strip = lambda s: {k: v for k, v in json.loads(s)["verdict"].items() if k != "seconds"}
    assert strip(c) == strip(d)


def test_config_layers(tmp_path, monkeypatch):
    cfg = tmp_path / "run.conf"
    cfg.write_text("# comment\nbudget = 5000\nseed = 4\ntimeout = 2.5\nformat = \"json\"\n")
    c = load_config(cfg, env={})
    assert (c.budget, c.seed, c.timeout, c.format) == (5000, 4, 2.5, "json")
    c = load_config(cfg, env={"DIDENT_SEED": "8", "DIDENT_BUDGET": "100"})
    assert (c.seed, c.budget) == (8, 100)
    c = load_config(cfg, env={"DIDENT_SEED": "8"}, seed=1)
    assert c.seed == 1
    assert RunConfig(budget=10).search_kwargs()["node_budget"] == 10


def test_config_errors():
    with pytest.raises(ConfigError):
        parse_config_text("colour = red")
    with pytest.raises(ConfigError):
        parse_config_text("budget = lots")
    with pytest.raises(ConfigError):
        RunConfig(format="xml")


def test_budget_flag_and_env(capsys, monkeypatch):
    monkeypatch.setenv("DIDENT_BUDGET", "10")
    code, out, _ = run(capsys, "formula", "check", "paper:2.3", "--group", "S4", "--strategy", "exhaustive")
    assert code == 2
    code, _, _ = run(capsys, "formula", "check", "paper:2.3", "--group", "S4", "--budget", "100000000")
    assert code == 1


def test_config_flag(tmp_path, capsys):
    cfg = tmp_path / "c.conf"
    cfg.write_text("format = json\ntiming = false\n")
    code, out, _ = run(capsys, "formula", "check", "paper:2.2", "--group", "D8", "--config", str(cfg))
    d = json.loads(out)
    assert code == 0 and "seconds" not in d["verdict"]
