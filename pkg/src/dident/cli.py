"""``dident`` command line.

Exit codes: 0 valid / pass, 1 invalid / fail, 2 indeterminate or error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import basisver as bv
from . import repalg as ra
from .census import census_entries, census_selfcheck, named_group
from .config import ConfigError, RunConfig, load_config
from .construct import load_group_file
from .formula import FormulaError, is_didentity
from .formulas import catalog, get_formula
from .groups import BudgetError, GroupError
from .structure import order_spectrum

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


class CliError(Exception):
    pass


# -- resolution helpers -----------------------------------------------------------------------

def resolve_group(spec: str):
    """Census name, generic name, construction expression or JSON group file."""
    path = Path(spec)
    if spec.endswith(".json") and path.is_file():
        return load_group_file(path)
    return named_group(spec)


def resolve_formula(spec: str):
    """Returns (reference, UDE).  A file holds one formula or one ``paper:`` reference."""
    path = Path(spec)
    if not spec.startswith("paper:") and path.is_file():
        lines = [ln.strip() for ln in path.read_text(encoding="utf-8").splitlines()]
        text = " ".join(ln for ln in lines if ln and not ln.startswith("#"))
        return text, get_formula(text)
    return spec, get_formula(spec)


def emit(cfg: RunConfig, payload: dict, text: str) -> None:
    if cfg.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(text)


def _strip_timing(d):
    if isinstance(d, dict):
        return {k: _strip_timing(v) for k, v in d.items() if k != "seconds"}
    if isinstance(d, list):
        return [_strip_timing(v) for v in d]
    return d


def _report_payload(cfg: RunConfig, rep: bv.VerificationReport) -> dict:
    d = rep.to_dict(timing=cfg.timing)
    return d if cfg.timing else _strip_timing(d)


# -- commands ------------------------------------------------------------------------------------

def cmd_formula_check(args, cfg: RunConfig) -> int:
    ref, ude = resolve_formula(args.formula)
    G = resolve_group(args.group)
    v = is_didentity(G, ude, args.strategy, **cfg.search_kwargs())
    payload = {"command": "formula check", "formula": ref, "text": str(ude), "group": G.name,
               "order": G.order, "verdict": v.to_dict(timing=cfg.timing)}
    lines = [f"{ref} in {G.name}: {v.status.upper()} (strategy {v.strategy}, {v.nodes} nodes"
             + (f", {v.seconds:.3f}s)" if cfg.timing else ")")]
    if v.counterexample:
        lines.append("counterexample: " + ", ".join(f"{k} = {val}" for k, val in v.counterexample.items()))
    if v.reason:
        lines.append(f"reason: {v.reason}")
    emit(cfg, payload, "\n".join(lines))
    return {"valid": EXIT_OK, "invalid": EXIT_FAIL}.get(v.status, EXIT_ERROR)


def cmd_formula_list(args, cfg: RunConfig) -> int:
    rows = [{"id": e.id, "text": e.text, "valid_in": list(e.claimed_valid_in),
             "variant_of": e.variant_of, "note": e.note} for e in catalog()]
    text = "\n".join(f"{r['id']:<6} {', '.join(r['valid_in']) or '-':<12} {r['text'][:90]}" for r in rows)
    emit(cfg, {"formulas": rows}, text)
    return EXIT_OK


def _search_for_claims(cfg: RunConfig) -> dict:
    kw = cfg.search_kwargs()
    kw.pop("exhaustive_budget", None)  # campaigns need the default brute-force budget on census groups
    return kw


def cmd_basis_verify(args, cfg: RunConfig) -> int:
    target = args.claim
    path = Path(target)
    if target.endswith(".json") and path.is_file():
        claim = bv.load_claim_file(path)
        rep = bv.run_claim(claim, **_search_for_claims(cfg))
    elif target in bv.REP_CLAIMS:
        rep = bv.run_rep_claim(target, seed=cfg.seed)
    else:
        if target not in bv.claim_names():
            raise CliError(f"unknown claim {target!r}; choose from {', '.join(bv.claim_names())}")
        rep = bv.run_claim(target, **_search_for_claims(cfg))
    emit(cfg, _report_payload(cfg, rep), rep.to_text())
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_basis_list(args, cfg: RunConfig) -> int:
    names = bv.claim_names()
    emit(cfg, {"claims": names}, "\n".join(names))
    return EXIT_OK


def cmd_dihedral(args, cfg: RunConfig) -> int:
    m = args.m
    refs = bv.dihedral_formula_refs(m)
    formulas = [{"ref": r, "text": str(get_formula(r))} for r in refs]
    lines = [f"basis for D{2 * m}:"] + [f"  {f['ref']}: {f['text']}" for f in formulas]
    payload = {"m": m, "group": f"D{2 * m}", "formulas": formulas}
    code = EXIT_OK
    if args.verify:
        rep = bv.verify_dihedral(m, **_search_for_claims(cfg))
        payload["report"] = _report_payload(cfg, rep)
        lines.append(rep.to_text())
        code = EXIT_OK if rep.passed else EXIT_FAIL
    emit(cfg, payload, "\n".join(lines))
    return code


def cmd_translate(args, cfg: RunConfig) -> int:
    ref, ude = resolve_formula(args.formula)
    ri = ra.translate(ude)
    payload = {"formula": ref, "ude": str(ude), "translation": ri.describe()}
    emit(cfg, payload, f"{ref}: {ude}\n  translates to {ri}\n  ({ri.variable_count} variables, "
                       f"{len(ri.binomials)} factors)")
    return EXIT_OK


def cmd_rep_check(args, cfg: RunConfig) -> int:
    G = resolve_group(args.group)
    ri = ra.get_rep_identity(args.identity)
    v = ra.is_rep_identity(G, args.prime, ri, args.mode, samples=args.samples, seed=cfg.seed,
                           **({"budget": cfg.budget} if cfg.budget else {}))
    p = args.prime or ra.default_prime(G)
    payload = {"command": "rep check", "identity": args.identity, "group": G.name, "prime": p,
               "form": ri.describe(), "verdict": v.to_dict(timing=cfg.timing)}
    lines = [f"{args.identity} on Reg {G.name} over F{p}: {v.status.upper()} (mode {v.mode}, "
             f"{v.evaluations} evaluations)"]
    if v.witness:
        lines.append("witness: " + ", ".join(f"{k} = {val}" for k, val in v.witness.items()))
    if v.reason:
        lines.append(f"reason: {v.reason}")
    emit(cfg, payload, "\n".join(lines))
    return {"identity": EXIT_OK, "not_identity": EXIT_FAIL}.get(v.status, EXIT_ERROR)


def cmd_groups_list(args, cfg: RunConfig) -> int:
    rows = []
    for e in census_entries():
        if args.order is not None and e.order != args.order:
            continue
        G = named_group(e.name)
        rows.append({"name": e.name, "order": e.order, "construction": e.construction,
                     "spectrum": {str(k): v for k, v in sorted(order_spectrum(G).items())}})
    text = "\n".join(f"{r['name']:<12} {r['order']:>4}  "
                     f"{' '.join(f'{k}:{v}' for k, v in r['spectrum'].items()):<36} {r['construction']}"
                     for r in rows)
    emit(cfg, {"groups": rows}, text)
    return EXIT_OK


def cmd_groups_check(args, cfg: RunConfig) -> int:
    rep = census_selfcheck()
    if not cfg.timing:
        rep = _strip_timing(rep)
    text = "\n".join([f"census self-check: {'PASS' if rep['pass'] else 'FAIL'}"]
                     + [f"  [{'ok  ' if i['pass'] else 'FAIL'}] {i['check']}" for i in rep["items"]])
    emit(cfg, rep, text)
    return EXIT_OK if rep["pass"] else EXIT_FAIL


# -- parser ---------------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="JSON output")
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS, help="search node/assignment limit")
    common.add_argument("--timeout", type=float, default=argparse.SUPPRESS, help="seconds per search")
    common.add_argument("--workers", type=int, default=argparse.SUPPRESS, help="parallel search workers")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for sampled modes")
    common.add_argument("--config", default=argparse.SUPPRESS, help="key = value config file")
    common.add_argument("--no-timing", action="store_true", default=argparse.SUPPRESS,
                        help="omit wall-clock fields from reports")

    p = argparse.ArgumentParser(prog="dident", parents=[common],
                                description="d-identities of finite groups and identities of "
                                            "regular representations")
    sub = p.add_subparsers(dest="command", required=True)

    f = sub.add_parser("formula", parents=[common], help="decide formulas in a group")
    fsub = f.add_subparsers(dest="action", required=True)
    fc = fsub.add_parser("check", parents=[common])
    fc.add_argument("formula", help="catalog id (paper:2.4), formula text or file")
    fc.add_argument("--group", required=True)
    fc.add_argument("--strategy", default="auto", choices=["auto", "exhaustive", "backtrack"])
    fc.set_defaults(func=cmd_formula_check)
    fl = fsub.add_parser("list", parents=[common])
    fl.set_defaults(func=cmd_formula_list)

    b = sub.add_parser("basis", parents=[common], help="verification campaigns")
    bsub = b.add_subparsers(dest="action", required=True)
    bvp = bsub.add_parser("verify", parents=[common])
    bvp.add_argument("claim", help="built-in claim name or claim JSON file")
    bvp.set_defaults(func=cmd_basis_verify)
    bl = bsub.add_parser("list", parents=[common])
    bl.set_defaults(func=cmd_basis_list)

    d = sub.add_parser("dihedral", parents=[common], help="basis of D_2m")
    d.add_argument("m", type=int)
    d.add_argument("--verify", action="store_true")
    d.set_defaults(func=cmd_dihedral)

    t = sub.add_parser("translate", parents=[common], help="formula to representation identity")
    t.add_argument("formula")
    t.set_defaults(func=cmd_translate)

    r = sub.add_parser("rep", parents=[common], help="identities of regular representations")
    rsub = r.add_subparsers(dest="action", required=True)
    rc = rsub.add_parser("check", parents=[common])
    rc.add_argument("--group", required=True)
    rc.add_argument("--prime", type=int, default=None)
    rc.add_argument("--identity", required=True)
    rc.add_argument("--mode", default="exhaustive", choices=["exhaustive", "certified", "sampled"])
    rc.add_argument("--samples", type=int, default=1000)
    rc.set_defaults(func=cmd_rep_check)

    g = sub.add_parser("groups", parents=[common], help="group census")
    gsub = g.add_subparsers(dest="action", required=True)
    gl = gsub.add_parser("list", parents=[common])
    gl.add_argument("--order", type=int, default=None)
    gl.set_defaults(func=cmd_groups_list)
    gc = gsub.add_parser("check", parents=[common])
    gc.set_defaults(func=cmd_groups_check)
    return p


def config_from_args(args) -> RunConfig:
    return load_config(getattr(args, "config", None),
                       budget=getattr(args, "budget", None),
                       timeout=getattr(args, "timeout", None),
                       workers=getattr(args, "workers", None),
                       seed=getattr(args, "seed", None),
                       format="json" if getattr(args, "json", False) else None,
                       timing=False if getattr(args, "no_timing", False) else None)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        return args.func(args, cfg)
    except (CliError, ConfigError, FormulaError, GroupError, BudgetError, ra.RepError,
            ValueError, OSError) as exc:
        print(f"dident: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
