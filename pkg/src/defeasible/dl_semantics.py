"""Well-founded models of defeasible theories under NDL and ADL.

The two logics differ only in which rules may defeat a defeasible rule
``r`` when showing a literal unfounded: under NDL any rule not inferior to
``r``; under ADL only strict rules or rules superior to ``r``.
"""

from __future__ import annotations

from enum import Enum

from .core import BOTTOM, DefeasibleTheory, DLRule, Interpretation, Literal
from .errors import PreconditionError


class Logic(str, Enum):
    NDL = "ndl"
    ADL = "adl"

    @classmethod
    def coerce(cls, value) -> "Logic":
        if isinstance(value, Logic):
            return value
        return cls(str(value).lower())


NDL = Logic.NDL
ADL = Logic.ADL


def can_defeat(theory: DefeasibleTheory, s: DLRule, r: DLRule, logic: Logic) -> bool:
    """Whether an applicable rule ``s`` for a rival literal blocks defeasible rule ``r``."""
    if logic is Logic.NDL:
        return not theory.prec(s, r)
    return s.is_strict or theory.prec(r, s)


def _defeated_by(theory, T, r: DLRule, logic: Logic) -> bool:
    # some conflict set of head(r) is fully covered by rules applicable in T able to defeat r
    p = r.head
    for c in theory.conflicts_of(p):
        if all(
            any(s.body <= T and can_defeat(theory, s, r, logic) for s in theory.rules_for(q))
            for q in c - {p}
        ):
            return True
    return False


def is_unfounded_set(theory: DefeasibleTheory, interp: Interpretation, S, logic) -> bool:
    logic = Logic.coerce(logic)
    S = frozenset(S)
    if not S <= theory.literals:
        raise ValueError(f"candidate set is not a subset of Lit(D): {sorted(map(str, S - theory.literals))}")
    T, F = interp.well_founded, interp.unfounded
    blocked = F | S
    for p in S:
        for r in theory.strict_for(p):
            if not (r.body & blocked):
                return False
        for r in theory.defeasible_for(p):
            if not (r.body & blocked) and not _defeated_by(theory, T, r, logic):
                return False
    return True


def greatest_unfounded_dl(theory: DefeasibleTheory, interp: Interpretation, logic) -> frozenset:
    """Greatest unfounded set via deletion of supported literals (greatest fixpoint)."""
    logic = Logic.coerce(logic)
    T, F = interp.well_founded, interp.unfounded
    support = [
        r
        for r in theory.ordered_rules
        if r.is_strict or (r.is_defeasible and not _defeated_by(theory, T, r, logic))
    ]
    support = [r for r in support if not (r.body & F)]
    candidate = set(theory.literals)
    changed = True
    while changed:
        changed = False
        for r in support:
            if r.head in candidate and not (r.body & candidate):
                candidate.discard(r.head)
                changed = True
    return frozenset(candidate)


def is_witness(theory: DefeasibleTheory, interp: Interpretation, r: DLRule) -> bool:
    T, F = interp.well_founded, interp.unfounded
    if r.is_defeater or not r.body <= T:
        return False
    if r.is_strict:
        return True
    p = r.head
    return all(
        any(
            all(theory.prec(s, r) or (s.body & F) for s in theory.rules_for(q))
            for q in c - {p}
        )
        for c in theory.conflicts_of(p)
    )


def immediate_consequences_dl(theory: DefeasibleTheory, interp: Interpretation, logic=None) -> frozenset:
    """``T_D``; the same for NDL and ADL, ``logic`` is accepted for symmetry only."""
    return frozenset(r.head for r in theory.ordered_rules if is_witness(theory, interp, r))


def wfm_step_dl(theory, interp, logic) -> Interpretation:
    return Interpretation(
        immediate_consequences_dl(theory, interp),
        greatest_unfounded_dl(theory, interp, logic),
    )


def wfm_sequence_dl(theory: DefeasibleTheory, logic) -> list[Interpretation]:
    logic = Logic.coerce(logic)
    seq = [BOTTOM]
    while True:
        nxt = wfm_step_dl(theory, seq[-1], logic)
        if nxt == seq[-1]:
            return seq
        seq.append(nxt)


def wfm_dl(theory: DefeasibleTheory, logic) -> Interpretation:
    return wfm_sequence_dl(theory, logic)[-1]


def _check_literal(theory, p: Literal):
    if p not in theory.literals:
        raise PreconditionError(f"literal {p} does not occur in the theory")


def entails(theory: DefeasibleTheory, logic, p: Literal, model: Interpretation | None = None) -> bool:
    _check_literal(theory, p)
    model = model or wfm_dl(theory, logic)
    return p in model.well_founded


def refutes(theory: DefeasibleTheory, logic, p: Literal, model: Interpretation | None = None) -> bool:
    _check_literal(theory, p)
    model = model or wfm_dl(theory, logic)
    return p in model.unfounded
