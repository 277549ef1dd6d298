"""Translations between defeasible theories and normal programs, and theory compilers."""

from __future__ import annotations

from itertools import product

from .core import (
    DefeasibleTheory,
    DLRule,
    Literal,
    LPRule,
    NormalProgram,
    RuleKind,
    sorted_lits,
)
from .errors import CapExceeded, PreconditionError

DEFAULT_PRODUCT_CAP = 100_000
NEG_SUFFIX = "__neg"
SU_PREFIX = "su__"
FI_PREFIX = "fi__"


def close_conflicts(theory: DefeasibleTheory) -> DefeasibleTheory:
    """Close conflict sets under strict rules.

    For every conflict set ``c`` and strict rule ``A -> p`` with ``p`` in ``c``,
    ``A | (c - {p})`` is added. Results with fewer than two literals are not
    conflict sets and are dropped.
    """
    conflicts = set(theory.conflicts)
    strict_rules = list(theory.strict_rules())
    queue = list(conflicts)
    while queue:
        c = queue.pop()
        for r in strict_rules:
            if r.head in c:
                new = r.body | (c - {r.head})
                if len(new) >= 2 and new not in conflicts:
                    conflicts.add(new)
                    queue.append(new)
    return theory.replace(conflicts=conflicts)


def prod_conflicts(theory: DefeasibleTheory, p: Literal, cap: int = DEFAULT_PRODUCT_CAP) -> frozenset:
    """Every set formed by picking one literal other than ``p`` from each conflict set of ``p``."""
    choices = [sorted_lits(c - {p}) for c in theory.conflicts_of(p)]
    size = 1
    for ch in choices:
        size *= len(ch)
    if size > cap:
        raise CapExceeded(f"Prod(C[{p}]) has {size} combinations, above the cap {cap}")
    return frozenset(frozenset(combo) for combo in product(*choices))


def require_plain(theory: DefeasibleTheory, what: str) -> None:
    """Raise unless the theory has no defeaters and an empty priority relation."""
    if theory.has_defeaters:
        raise PreconditionError(f"{what} is undefined for theories with defeaters")
    if theory.priority:
        raise PreconditionError(f"{what} is undefined for theories with rule priorities")


def dl_to_lp(theory: DefeasibleTheory, cap: int = DEFAULT_PRODUCT_CAP) -> NormalProgram:
    require_plain(theory, "the logic program translation")
    out = []
    for r in theory.ordered_rules:
        if r.is_strict:
            out.append(LPRule(r.head, r.body, frozenset(), r.id))
        else:
            for rivals in prod_conflicts(theory, r.head, cap):
                out.append(LPRule(r.head, r.body, rivals, r.id))
    return NormalProgram(out)


def trans(program: NormalProgram, rule_id: str) -> frozenset:
    """The program rules emitted for the theory rule ``rule_id``."""
    return frozenset(r for r in program.rules if r.source == rule_id)


def encode_negative_atoms(program: NormalProgram) -> NormalProgram:
    """Rename every ``-a`` to the fresh positive atom ``a__neg`` (reversible)."""
    clash = {a for a in program.atoms if a.endswith(NEG_SUFFIX)}
    if clash:
        raise PreconditionError(f"atoms already use the reserved suffix {NEG_SUFFIX}: {sorted(clash)}")

    def enc(q: Literal) -> Literal:
        return q if q.positive else Literal(q.atom + NEG_SUFFIX)

    return NormalProgram(
        LPRule(enc(r.head), frozenset(map(enc, r.pos_body)), frozenset(map(enc, r.neg_body)), r.source)
        for r in program.rules
    )


def decode_literal(q: Literal) -> Literal:
    if q.atom.endswith(NEG_SUFFIX):
        return Literal(q.atom[: -len(NEG_SUFFIX)], not q.positive)
    return q


def decode_negative_atoms(program: NormalProgram) -> NormalProgram:
    """Inverse of :func:`encode_negative_atoms` on programs that only use encoded atoms positively."""
    return NormalProgram(
        LPRule(
            decode_literal(r.head),
            frozenset(map(decode_literal, r.pos_body)),
            frozenset(map(decode_literal, r.neg_body)),
            r.source,
        )
        for r in program.rules
    )


def _require_positive(program: NormalProgram, what: str) -> None:
    if not program.is_positive:
        bad = sorted(str(q) for q in program.literals if not q.positive)
        raise PreconditionError(
            f"{what} needs a program over positive atoms; found {', '.join(bad)} "
            "(use encode_negative_atoms first)"
        )


def explicit_version(program: NormalProgram) -> NormalProgram:
    """Replace each ``not b`` by the literal ``-b`` and add ``-p :- not p`` for every atom."""
    _require_positive(program, "the explicit version")
    out = [
        LPRule(r.head, r.pos_body | {q.complement() for q in r.neg_body}, frozenset(), r.source)
        for r in program.rules
    ]
    out += [LPRule(Literal(a, False), frozenset(), {Literal(a)}) for a in sorted(program.atoms)]
    return NormalProgram(out)


def lp_to_dl(program: NormalProgram) -> DefeasibleTheory:
    """Program rules become strict rules; each atom gets the presumption ``=> -p``."""
    _require_positive(program, "the defeasible theory translation")
    rules = []
    for i, r in enumerate(program.ordered_rules, 1):
        body = r.pos_body | {q.complement() for q in r.neg_body}
        rules.append(DLRule(f"s{i}", RuleKind.STRICT, body, r.head))
    for a in sorted(program.atoms):
        rules.append(DLRule(f"cwa_{a}", RuleKind.DEFEASIBLE, frozenset(), Literal(a, False)))
    return DefeasibleTheory(rules)


def su(rule_id: str) -> Literal:
    return Literal(SU_PREFIX + rule_id)


def fi(rule_id: str) -> Literal:
    return Literal(FI_PREFIX + rule_id)


def eliminate_defeaters_priorities(
    theory: DefeasibleTheory, cap: int = DEFAULT_PRODUCT_CAP
) -> DefeasibleTheory:
    """Compile to an equivalent theory without defeaters, priorities or extended conflicts.

    For each rule ``r: A ~~> p`` three rules are emitted: ``A -> su(r)``,
    ``{su(r)} ~~> fi(r)`` (strict iff ``r`` is) and, unless ``r`` is a
    defeater, ``{fi(r)} -> p``. Every way a conflict set of ``p`` can be
    filled by rules not inferior to a defeasible ``r`` yields a rule for
    ``-fi(r)``; it is strict when each chosen rule is strict or superior to ``r``.
    """
    reserved = {a for a in theory.atoms if a.startswith((SU_PREFIX, FI_PREFIX))}
    if reserved:
        raise PreconditionError(f"atoms collide with compiler-generated names: {sorted(reserved)}")
    out: list[DLRule] = []
    for r in theory.ordered_rules:
        out.append(DLRule(f"{r.id}__su", RuleKind.STRICT, r.body, su(r.id)))
        kind = RuleKind.STRICT if r.is_strict else RuleKind.DEFEASIBLE
        out.append(DLRule(f"{r.id}__fi", kind, {su(r.id)}, fi(r.id)))
        if not r.is_defeater:
            out.append(DLRule(f"{r.id}__do", RuleKind.STRICT, {fi(r.id)}, r.head))

    budget = cap
    for r in theory.defeasible_rules():
        p = r.head
        seen: set = set()
        k = 0
        for c in theory.conflicts_of(p):
            options = []
            for q in sorted_lits(c - {p}):
                options.append([s for s in theory.rules_for(q) if not theory.prec(s, r)])
            count = 1
            for opt in options:
                count *= len(opt)
            budget -= count
            if budget < 0:
                raise CapExceeded(f"defeat-rule product exceeds the cap {cap}")
            for choice in product(*options):
                body = frozenset(su(s.id) for s in choice)
                strong = all(s.is_strict or theory.prec(r, s) for s in choice)
                key = (body, strong)
                if key in seen:
                    continue
                seen.add(key)
                k += 1
                kind = RuleKind.STRICT if strong else RuleKind.DEFEASIBLE
                out.append(DLRule(f"{r.id}__x{k}", kind, body, fi(r.id).complement()))

    minimal = [frozenset({Literal(a), Literal(a, False)}) for a in theory.atoms]
    return DefeasibleTheory(out, minimal, ())
