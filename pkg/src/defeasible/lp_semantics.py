"""Well-founded and stable-model semantics for ground normal programs.

Classically negated literals (``-a``) are opaque atoms here: ``a`` and ``-a``
are unrelated as far as these operators are concerned.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .core import BOTTOM, Interpretation, Literal, LPRule, NormalProgram
from .errors import CapExceeded, PreconditionError

DEFAULT_CAP = 20


def _universe(program: NormalProgram, universe) -> frozenset:
    return program.literals if universe is None else program.literals | frozenset(universe)


def immediate_consequences_lp(program: NormalProgram, interp: Interpretation) -> frozenset:
    T, F = interp.well_founded, interp.unfounded
    return frozenset(
        r.head for r in program.rules if r.pos_body <= T and r.neg_body <= F
    )


def greatest_unfounded_lp(
    program: NormalProgram, interp: Interpretation, universe: Iterable[Literal] | None = None
) -> frozenset:
    """Greatest unfounded set, by deleting literals that still have a usable rule.

    A rule for ``p`` keeps ``p`` out of the candidate set while none of its
    positive body literals lies in ``F`` or the candidate and none of its
    default-negated literals is in ``T``.
    """
    T, F = interp.well_founded, interp.unfounded
    # rules whose negative body is not blocked by T are the only possible support
    live = [r for r in program.rules if not (r.neg_body & T)]
    candidate = set(_universe(program, universe))
    changed = True
    while changed:
        changed = False
        for r in live:
            if r.head in candidate and not (r.pos_body & F) and not (r.pos_body & candidate):
                candidate.discard(r.head)
                changed = True
    return frozenset(candidate)


def is_unfounded_set_lp(program: NormalProgram, interp: Interpretation, candidate) -> bool:
    T, F = interp.well_founded, interp.unfounded
    S = frozenset(candidate)
    for r in program.rules:
        if r.head in S and not (r.pos_body & (F | S)) and not (r.neg_body & T):
            return False
    return True


def wfm_step_lp(program, interp, universe=None) -> Interpretation:
    return Interpretation(
        immediate_consequences_lp(program, interp),
        greatest_unfounded_lp(program, interp, universe),
    )


def wfm_sequence_lp(program: NormalProgram, universe=None) -> list[Interpretation]:
    """``I_0 = <{}, {}>, I_{k+1} = W(I_k)`` up to and including the fixpoint."""
    seq = [BOTTOM]
    while True:
        nxt = wfm_step_lp(program, seq[-1], universe)
        if nxt == seq[-1]:
            return seq
        seq.append(nxt)


def wfm_lp(program: NormalProgram, universe: Iterable[Literal] | None = None) -> Interpretation:
    """Well-founded model. ``universe`` adds literals that occur in no rule (they end up unfounded)."""
    return wfm_sequence_lp(program, universe)[-1]


def gl_reduct(program: NormalProgram, S) -> NormalProgram:
    S = frozenset(S)
    return NormalProgram(
        LPRule(r.head, r.pos_body, frozenset(), r.source)
        for r in program.rules
        if not (r.neg_body & S)
    )


def closure(rules: Iterable[tuple[frozenset, Literal]]) -> frozenset:
    """Least set closed under ``(body, head)`` pairs (linear-time counting)."""
    waiting: dict = {}
    pending = []
    derived: set = set()
    for body, head in rules:
        if body:
            entry = [len(body), head]
            pending.append(entry)
            for q in body:
                waiting.setdefault(q, []).append(entry)
        elif head not in derived:
            derived.add(head)
    queue = list(derived)
    while queue:
        q = queue.pop()
        for entry in waiting.get(q, ()):
            entry[0] -= 1
            if entry[0] == 0 and entry[1] not in derived:
                derived.add(entry[1])
                queue.append(entry[1])
    return frozenset(derived)


def definite_closure(program: NormalProgram) -> frozenset:
    if not program.is_definite:
        raise PreconditionError("definite_closure needs a program without default negation")
    return closure((r.pos_body, r.head) for r in program.rules)


def gamma(program: NormalProgram, S) -> frozenset:
    S = frozenset(S)
    return closure((r.pos_body, r.head) for r in program.rules if not (r.neg_body & S))


def wfm_via_gamma(program: NormalProgram, universe: Iterable[Literal] | None = None) -> Interpretation:
    """Alternating fixpoint: ``T = lfp(gamma^2)``, ``F = universe - gamma(T)``."""
    T: frozenset = frozenset()
    while True:
        nxt = gamma(program, gamma(program, T))
        if nxt == T:
            break
        T = nxt
    return Interpretation(T, _universe(program, universe) - gamma(program, T))


def enumerate_fixpoints(operator, candidates, universe_size: int, cap: int) -> list[frozenset]:
    """All ``S`` drawn from subsets of ``candidates`` with ``operator(S) == S``.

    Any fixpoint of a closure-style operator lies inside the set of rule
    heads, so ``candidates`` is usually the head set rather than the whole
    literal universe. ``cap`` bounds the literal universe.
    """
    if universe_size > cap:
        raise CapExceeded(
            f"literal universe has {universe_size} elements, above the enumeration cap {cap}"
        )
    pool = sorted(candidates, key=lambda q: q.sort_key)
    found = []
    for k in range(len(pool) + 1):
        for combo in combinations(pool, k):
            S = frozenset(combo)
            if operator(S) == S:
                found.append(S)
    return found


def stable_models_lp(program: NormalProgram, cap: int = DEFAULT_CAP) -> list[frozenset]:
    heads = {r.head for r in program.rules}
    return enumerate_fixpoints(
        lambda S: gamma(program, S), heads, len(program.literals), cap
    )
