"""Ground syntax shared by every semantics: literals, rules, theories, programs.

All values are immutable. A :class:`DefeasibleTheory` always contains the
minimal conflict set ``{p, -p}`` for every atom it mentions; callers never
have to supply those.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator, Mapping

_ATOM_RE = re.compile(r"[A-Za-z0-9_]+\Z")
_NUM_RE = re.compile(r"(\d+)")


@dataclass(frozen=True)
class Literal:
    atom: str
    positive: bool = True

    def __post_init__(self):
        if not isinstance(self.atom, str) or not _ATOM_RE.match(self.atom):
            raise ValueError(f"invalid atom name: {self.atom!r}")

    @classmethod
    def parse(cls, text: str) -> "Literal":
        text = text.strip()
        if text.startswith("-"):
            return cls(text[1:].strip(), False)
        return cls(text, True)

    def complement(self) -> "Literal":
        return Literal(self.atom, not self.positive)

    @property
    def sort_key(self):
        return (self.atom, not self.positive)

    def __lt__(self, other):
        if not isinstance(other, Literal):
            return NotImplemented
        return self.sort_key < other.sort_key

    def __str__(self):
        return self.atom if self.positive else "-" + self.atom

    def __repr__(self):
        return f"Literal({str(self)!r})"


def complement(p: Literal) -> Literal:
    return p.complement()


def lit(text: str) -> Literal:
    """Shorthand used throughout the tests: ``lit("-p")``."""
    return Literal.parse(text)


def lits(*texts: str) -> frozenset[Literal]:
    return frozenset(Literal.parse(t) for t in texts)


def sorted_lits(items: Iterable[Literal]) -> list[Literal]:
    return sorted(items, key=lambda q: q.sort_key)


def fmt_lits(items: Iterable[Literal]) -> str:
    return "{" + ", ".join(str(q) for q in sorted_lits(items)) + "}"


def natural_key(text: str):
    """Sort key that orders ``r2`` before ``r10``."""
    return [int(part) if part.isdigit() else part for part in _NUM_RE.split(text)]


class RuleKind(str, Enum):
    STRICT = "strict"
    DEFEASIBLE = "defeasible"
    DEFEATER = "defeater"

    @property
    def arrow(self) -> str:
        return _ARROWS[self]


_ARROWS = {RuleKind.STRICT: "->", RuleKind.DEFEASIBLE: "=>", RuleKind.DEFEATER: "~>"}


@dataclass(frozen=True)
class DLRule:
    id: str
    kind: RuleKind
    body: frozenset
    head: Literal

    def __post_init__(self):
        object.__setattr__(self, "kind", RuleKind(self.kind))
        object.__setattr__(self, "body", frozenset(self.body))

    @property
    def is_strict(self) -> bool:
        return self.kind is RuleKind.STRICT

    @property
    def is_defeasible(self) -> bool:
        return self.kind is RuleKind.DEFEASIBLE

    @property
    def is_defeater(self) -> bool:
        return self.kind is RuleKind.DEFEATER

    def __str__(self):
        body = ", ".join(str(q) for q in sorted_lits(self.body))
        return f"{self.id}: {body}{' ' if body else ''}{self.kind.arrow} {self.head}"


def strict(rid, body, head) -> DLRule:
    return DLRule(rid, RuleKind.STRICT, _as_lits(body), _as_lit(head))


def defeasible(rid, body, head) -> DLRule:
    return DLRule(rid, RuleKind.DEFEASIBLE, _as_lits(body), _as_lit(head))


def defeater(rid, body, head) -> DLRule:
    return DLRule(rid, RuleKind.DEFEATER, _as_lits(body), _as_lit(head))


def _as_lit(x) -> Literal:
    return x if isinstance(x, Literal) else Literal.parse(x)


def _as_lits(xs) -> frozenset:
    if isinstance(xs, str):
        xs = [xs] if xs else []
    return frozenset(_as_lit(x) for x in xs)


@dataclass(frozen=True, eq=False)
class DefeasibleTheory:
    """``<R, C, prec>``. ``priority`` holds pairs ``(inferior, superior)`` of rule ids.

    Two theories are equal when their rule sets, conflict sets and priority
    pairs coincide; rule order is not significant.
    """

    rules: frozenset = frozenset()
    conflicts: frozenset = frozenset()
    priority: frozenset = frozenset()

    def __post_init__(self):
        rules = frozenset(self.rules)
        conflicts = {frozenset(_as_lit(q) for q in c) for c in self.conflicts}
        atoms = {q.atom for r in rules for q in (r.head, *r.body)}
        atoms.update(q.atom for c in conflicts for q in c)
        conflicts.update(frozenset({Literal(a), Literal(a, False)}) for a in atoms)
        object.__setattr__(self, "rules", rules)
        object.__setattr__(self, "conflicts", frozenset(conflicts))
        object.__setattr__(self, "priority", frozenset((str(s), str(r)) for s, r in self.priority))

    def __eq__(self, other):
        if not isinstance(other, DefeasibleTheory):
            return NotImplemented
        return (self.rules, self.conflicts, self.priority) == (
            other.rules,
            other.conflicts,
            other.priority,
        )

    def __hash__(self):
        return hash((self.rules, self.conflicts, self.priority))

    @cached_property
    def ordered_rules(self) -> tuple:
        return tuple(sorted(self.rules, key=lambda r: (natural_key(r.id), str(r))))

    @cached_property
    def atoms(self) -> frozenset:
        return frozenset(q.atom for c in self.conflicts for q in c)

    @cached_property
    def literals(self) -> frozenset:
        return frozenset(Literal(a, s) for a in self.atoms for s in (True, False))

    @cached_property
    def rule_by_id(self) -> Mapping[str, DLRule]:
        return {r.id: r for r in self.ordered_rules}

    @cached_property
    def _by_head(self):
        idx: dict = {}
        for r in self.ordered_rules:
            idx.setdefault(r.head, []).append(r)
        return {k: tuple(v) for k, v in idx.items()}

    def rules_for(self, p: Literal) -> tuple:
        """``R[p]``: every rule with head ``p``, defeaters included."""
        return self._by_head.get(p, ())

    def strict_for(self, p: Literal) -> tuple:
        return tuple(r for r in self.rules_for(p) if r.is_strict)

    def defeasible_for(self, p: Literal) -> tuple:
        return tuple(r for r in self.rules_for(p) if r.is_defeasible)

    @cached_property
    def _conflicts_of(self):
        idx: dict = {}
        for c in sorted(self.conflicts, key=lambda c: sorted(q.sort_key for q in c)):
            for q in c:
                idx.setdefault(q, []).append(c)
        return {k: tuple(v) for k, v in idx.items()}

    def conflicts_of(self, p: Literal) -> tuple:
        """``C[p]``."""
        return self._conflicts_of.get(p, ())

    def prec(self, s: DLRule | str, r: DLRule | str) -> bool:
        """``s < r``: ``r`` is superior to ``s``."""
        sid = s if isinstance(s, str) else s.id
        rid = r if isinstance(r, str) else r.id
        return (sid, rid) in self.priority

    @property
    def has_defeaters(self) -> bool:
        return any(r.is_defeater for r in self.rules)

    @cached_property
    def minimal_conflicts(self) -> bool:
        return all(len(c) == 2 and len({q.atom for q in c}) == 1 for c in self.conflicts)

    def strict_rules(self) -> Iterator[DLRule]:
        return (r for r in self.ordered_rules if r.is_strict)

    def defeasible_rules(self) -> Iterator[DLRule]:
        return (r for r in self.ordered_rules if r.is_defeasible)

    def replace(self, rules=None, conflicts=None, priority=None) -> "DefeasibleTheory":
        return DefeasibleTheory(
            self.rules if rules is None else rules,
            self.conflicts if conflicts is None else conflicts,
            self.priority if priority is None else priority,
        )

    def __str__(self):
        from .syntax import serialize_theory

        return serialize_theory(self)


def validate_theory(theory: DefeasibleTheory) -> list[str]:
    """Return a list of human-readable violations; empty iff the theory is admissible."""
    problems: list[str] = []
    seen: dict = {}
    for r in sorted(theory.rules, key=lambda r: (natural_key(r.id), str(r))):
        if r.id in seen:
            problems.append(f"duplicate rule id {r.id!r}: {seen[r.id]} / {r}")
        else:
            seen[r.id] = r
    ids = theory.rule_by_id
    for s, r in sorted(theory.priority, key=lambda pr: (natural_key(pr[0]), natural_key(pr[1]))):
        for rid in (s, r):
            if rid not in ids:
                problems.append(f"priority {r} > {s} references unknown rule {rid!r}")
            elif ids[rid].is_strict:
                problems.append(f"priority {r} > {s} involves strict rule {rid!r}")
    cycle = _find_cycle(theory.priority)
    if cycle:
        problems.append("priority cycle: " + " < ".join(cycle))
    for a in sorted(theory.atoms):
        if frozenset({Literal(a), Literal(a, False)}) not in theory.conflicts:
            problems.append(f"missing minimal conflict set for atom {a!r}")
    for c in sorted(theory.conflicts, key=lambda c: sorted(q.sort_key for q in c)):
        if len(c) < 2:
            problems.append(f"conflict set {fmt_lits(c)} has fewer than two literals")
    return problems


def _find_cycle(pairs) -> list[str] | None:
    succ: dict = {}
    for s, r in pairs:
        succ.setdefault(s, set()).add(r)
    state: dict = {}
    stack: list = []

    def visit(u):
        state[u] = 1
        stack.append(u)
        for v in sorted(succ.get(u, ()), key=natural_key):
            if state.get(v) == 1:
                return stack[stack.index(v):] + [v]
            if v not in state:
                found = visit(v)
                if found:
                    return found
        stack.pop()
        state[u] = 2
        return None

    for u in sorted(succ, key=natural_key):
        if u not in state:
            found = visit(u)
            if found:
                return found
    return None


@dataclass(frozen=True)
class LPRule:
    """``head <- pos_body, not neg_body``. ``source`` records the originating DL rule id."""

    head: Literal
    pos_body: frozenset = frozenset()
    neg_body: frozenset = frozenset()
    source: str | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "head", _as_lit(self.head))
        object.__setattr__(self, "pos_body", _as_lits(self.pos_body))
        object.__setattr__(self, "neg_body", _as_lits(self.neg_body))

    @property
    def sort_key(self):
        return (
            self.head.sort_key,
            sorted(q.sort_key for q in self.pos_body),
            sorted(q.sort_key for q in self.neg_body),
        )

    def literals(self) -> Iterator[Literal]:
        yield self.head
        yield from self.pos_body
        yield from self.neg_body

    def __str__(self):
        parts = [str(q) for q in sorted_lits(self.pos_body)]
        parts += ["not " + str(q) for q in sorted_lits(self.neg_body)]
        return f"{self.head} :- {', '.join(parts)}." if parts else f"{self.head}."


def rule(head, pos=(), neg=(), source=None) -> LPRule:
    return LPRule(_as_lit(head), _as_lits(pos), _as_lits(neg), source)


@dataclass(frozen=True)
class NormalProgram:
    """A finite set of :class:`LPRule`. ``-a`` literals are treated as opaque atoms."""

    rules: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "rules", frozenset(self.rules))

    @cached_property
    def ordered_rules(self) -> tuple:
        return tuple(sorted(self.rules, key=lambda r: r.sort_key))

    @cached_property
    def literals(self) -> frozenset:
        """Every literal occurring in the program (its Herbrand base)."""
        return frozenset(q for r in self.rules for q in r.literals())

    @cached_property
    def atoms(self) -> frozenset:
        return frozenset(q.atom for q in self.literals)

    @property
    def is_definite(self) -> bool:
        return all(not r.neg_body for r in self.rules)

    @property
    def is_positive(self) -> bool:
        """True when no classically negated literal occurs anywhere."""
        return all(q.positive for q in self.literals)

    @cached_property
    def by_head(self):
        idx: dict = {}
        for r in self.ordered_rules:
            idx.setdefault(r.head, []).append(r)
        return {k: tuple(v) for k, v in idx.items()}

    def __str__(self):
        from .syntax import serialize_program

        return serialize_program(self)


@dataclass(frozen=True)
class Interpretation:
    """``<T, F>``: well-founded and unfounded literals."""

    well_founded: frozenset = frozenset()
    unfounded: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "well_founded", frozenset(self.well_founded))
        object.__setattr__(self, "unfounded", frozenset(self.unfounded))

    @property
    def T(self) -> frozenset:
        return self.well_founded

    @property
    def F(self) -> frozenset:
        return self.unfounded

    def __le__(self, other: "Interpretation") -> bool:
        return self.well_founded <= other.well_founded and self.unfounded <= other.unfounded

    leq = __le__

    @property
    def coherent(self) -> bool:
        return not (self.well_founded & self.unfounded)

    def ambiguous(self, universe: Iterable[Literal]) -> frozenset:
        return frozenset(universe) - self.well_founded - self.unfounded

    def restrict(self, universe: Iterable[Literal]) -> "Interpretation":
        u = frozenset(universe)
        return Interpretation(self.well_founded & u, self.unfounded & u)

    def __str__(self):
        return f"<{fmt_lits(self.well_founded)}, {fmt_lits(self.unfounded)}>"


BOTTOM = Interpretation()
