"""Well-founded and stable semantics for defeasible theories (NDL, ADL) and normal programs."""

from .core import (
    BOTTOM,
    DefeasibleTheory,
    DLRule,
    Interpretation,
    Literal,
    LPRule,
    NormalProgram,
    RuleKind,
    complement,
    lit,
    lits,
    validate_theory,
)
from .dl_semantics import ADL, NDL, Logic, entails, refutes, wfm_dl
from .lp_semantics import gamma, stable_models_lp, wfm_lp, wfm_via_gamma
from .operators import alpha, beta, stable_sets, wfm_alpha, wfm_beta, x_limit
from .proof import ArgumentTree, prove, validate_tree
from .syntax import parse_program, parse_theory, serialize_program, serialize_theory
from .transform import (
    close_conflicts,
    dl_to_lp,
    eliminate_defeaters_priorities,
    explicit_version,
    lp_to_dl,
)

__version__ = "0.1.0"
