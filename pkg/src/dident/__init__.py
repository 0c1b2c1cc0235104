"""Disjunctive identities of finite groups and identities of regular representations."""

from .basisver import BasisClaim, VerificationReport, claim_names, dihedral_basis, replay, run_claim
from .census import census_selfcheck, groups_of_order, named_group
from .config import RunConfig, load_config
from .formula import UDE, Verdict, check_equivalent_on, is_didentity, omega_valid
from .formulas import catalog, get_formula
from .groups import FiniteGroup
from .parser import parse_formula
from .repalg import get_rep_identity, is_rep_identity, translate
from .words import eval_word

__version__ = "0.1.0"

__all__ = ["BasisClaim", "VerificationReport", "claim_names", "dihedral_basis", "replay", "run_claim",
           "census_selfcheck", "groups_of_order", "named_group", "RunConfig", "load_config", "UDE",
           "Verdict", "check_equivalent_on", "is_didentity", "omega_valid", "catalog", "get_formula",
           "FiniteGroup", "parse_formula", "get_rep_identity", "is_rep_identity", "translate", "eval_word"]
