"""The antimonotone operators alpha (ambiguity propagating) and beta (blocking).

Both are the closure of a reduct of the theory. Their squares are monotone,
and iterating the square from the empty set gives the ``X`` sequence whose
limit is the well-founded part; fixpoints of the operators themselves are the
stable sets.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable

from .core import DefeasibleTheory, DLRule, Interpretation, Literal
from .errors import PreconditionError
from .lp_semantics import DEFAULT_CAP, closure, enumerate_fixpoints
from .transform import require_plain


class Operator(str, Enum):
    ALPHA = "alpha"
    BETA = "beta"

    @classmethod
    def coerce(cls, value) -> "Operator":
        return value if isinstance(value, Operator) else cls(str(value).lower())


def alpha_reduct(theory: DefeasibleTheory, S) -> frozenset:
    require_plain(theory, "the alpha operator")
    S = frozenset(S)
    kept = [r for r in theory.ordered_rules if r.is_strict]
    for r in theory.defeasible_rules():
        p = r.head
        if all(any(q not in S for q in c - {p}) for c in theory.conflicts_of(p)):
            kept.append(r)
    return frozenset(kept)


def beta_reduct(theory: DefeasibleTheory, S) -> frozenset:
    S = frozenset(S)
    kept = [r for r in theory.ordered_rules if r.is_strict]
    for r in theory.defeasible_rules():
        p = r.head
        if all(
            any(
                all(not (s.body <= S) or theory.prec(s, r) for s in theory.rules_for(q))
                for q in c - {p}
            )
            for c in theory.conflicts_of(p)
        ):
            kept.append(r)
    return frozenset(kept)


def rule_closure(rules: Iterable[DLRule]) -> frozenset:
    """Least set closed under the given strict and defeasible rules."""
    rules = list(rules)
    if any(r.is_defeater for r in rules):
        raise PreconditionError("defeaters have no detachable heads and cannot be closed over")
    return closure((r.body, r.head) for r in rules)


def alpha(theory: DefeasibleTheory, S) -> frozenset:
    return rule_closure(alpha_reduct(theory, S))


def beta(theory: DefeasibleTheory, S) -> frozenset:
    return rule_closure(beta_reduct(theory, S))


def _op(op):
    return alpha if Operator.coerce(op) is Operator.ALPHA else beta


def x_limit(theory: DefeasibleTheory, op) -> tuple[frozenset, list[frozenset]]:
    """Iterate ``S -> op(op(S))`` from the empty set; return the limit and the full trace."""
    f = _op(op)
    trace = [frozenset()]
    while True:
        nxt = f(theory, f(theory, trace[-1]))
        if nxt == trace[-1]:
            return nxt, trace
        trace.append(nxt)


def wfm_beta(theory: DefeasibleTheory) -> Interpretation:
    limit, _ = x_limit(theory, Operator.BETA)
    return Interpretation(limit, theory.literals - beta(theory, limit))


def wfm_alpha(theory: DefeasibleTheory) -> Interpretation:
    limit, _ = x_limit(theory, Operator.ALPHA)
    return Interpretation(limit, theory.literals - alpha(theory, limit))


def stable_sets(theory: DefeasibleTheory, op, cap: int = DEFAULT_CAP) -> list[frozenset]:
    op = Operator.coerce(op)
    if op is Operator.ALPHA:
        require_plain(theory, "the alpha operator")
    f = _op(op)
    heads = {r.head for r in theory.rules if not r.is_defeater}
    return enumerate_fixpoints(lambda S: f(theory, S), heads, len(theory.literals), cap)


def _check(theory, p: Literal):
    if p not in theory.literals:
        raise PreconditionError(f"literal {p} does not occur in the theory")


def entails_stable(theory: DefeasibleTheory, op, p: Literal, sets=None, cap: int = DEFAULT_CAP) -> bool:
    _check(theory, p)
    sets = stable_sets(theory, op, cap) if sets is None else sets
    return all(p in S for S in sets)


def refutes_stable(theory: DefeasibleTheory, op, p: Literal, sets=None, cap: int = DEFAULT_CAP) -> bool:
    _check(theory, p)
    sets = stable_sets(theory, op, cap) if sets is None else sets
    return all(p not in S for S in sets)
