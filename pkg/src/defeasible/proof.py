"""Argument-tree proofs for NDL and ADL.

A node labelled ``+p`` or ``-p`` is justified by its children. A negative
node may also close a loop: it is accepted when an ancestor carries the same
negative label and every node in between is negative (failure-by-looping).

Search state for a goal is the set of positive literals on the branch and
the run of negative literals since the last positive node. Those two sets
fully determine whether a subtree exists, so they are the memo key.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .core import DefeasibleTheory, Literal, sorted_lits
from .dl_semantics import Logic, can_defeat
from .errors import BudgetExhausted, PreconditionError

DEFAULT_BUDGET = 10**6

POS = "+"
NEG = "-"


@dataclass(frozen=True)
class ArgumentTree:
    sign: str
    literal: Literal
    children: tuple = field(default=())

    def __post_init__(self):
        if self.sign not in (POS, NEG):
            raise ValueError(f"node sign must be '+' or '-', got {self.sign!r}")
        object.__setattr__(self, "children", tuple(self.children))

    @property
    def label(self) -> str:
        return f"{self.sign}{self.literal}"

    @property
    def positive(self) -> bool:
        return self.sign == POS

    def nodes(self):
        yield self
        for child in self.children:
            yield from child.nodes()

    def size(self) -> int:
        return sum(1 for _ in self.nodes())

    def depth(self) -> int:
        return 1 + max((c.depth() for c in self.children), default=0)

    def to_dict(self) -> dict:
        return {"label": self.label, "children": [c.to_dict() for c in self.children]}

    @classmethod
    def from_dict(cls, data: dict) -> "ArgumentTree":
        label = data["label"]
        return cls(label[0], Literal.parse(label[1:]), [cls.from_dict(c) for c in data.get("children", ())])

    def to_text(self, indent: str = "  ") -> str:
        lines: list[str] = []

        def walk(node, depth):
            lines.append(indent * depth + node.label)
            for child in node.children:
                walk(child, depth + 1)

        walk(self, 0)
        return "\n".join(lines)

    @classmethod
    def from_text(cls, text: str, indent: str = "  ") -> "ArgumentTree":
        """Inverse of :meth:`to_text`."""
        stack: list[tuple[int, list]] = []
        root = None
        for raw in text.splitlines():
            if not raw.strip():
                continue
            stripped = raw.lstrip(" ")
            depth = (len(raw) - len(stripped)) // len(indent)
            entry = [stripped.strip(), []]
            while stack and stack[-1][0] >= depth:
                stack.pop()
            if stack:
                stack[-1][1][1].append(entry)
            elif root is None:
                root = entry
            else:
                raise ValueError("argument tree text has more than one root")
            stack.append((depth, entry))
        if root is None:
            raise ValueError("empty argument tree")

        def build(entry):
            label, kids = entry
            return cls(label[0], Literal.parse(label[1:]), [build(k) for k in kids])

        return build(root)

    def __str__(self):
        return self.to_text()


def dep_set(theory: DefeasibleTheory, p: Literal) -> frozenset:
    """Smallest set holding ``p`` and closed under conflict-set and rule-body inclusion."""
    if p not in theory.literals:
        raise PreconditionError(f"literal {p} does not occur in the theory")
    seen = {p}
    queue = [p]
    while queue:
        q = queue.pop()
        nxt = [x for c in theory.conflicts_of(q) for x in c]
        nxt += [x for r in theory.rules_for(q) for x in r.body]
        for x in nxt:
            if x not in seen:
                seen.add(x)
                queue.append(x)
    return frozenset(seen)


def is_locally_finite(theory: DefeasibleTheory) -> bool:
    # every dependency set of a finite theory is finite; computing them keeps the check honest
    return all(len(dep_set(theory, p)) <= len(theory.literals) for p in theory.literals)


@dataclass
class TreeCheck:
    ok: bool
    problems: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def validate_tree(theory: DefeasibleTheory, logic, tree: ArgumentTree) -> TreeCheck:
    """Check every node of ``tree`` against the proof conditions of ``logic``."""
    logic = Logic.coerce(logic)
    problems: list[str] = []

    def check(node: ArgumentTree, ancestors: list, path: str):
        p = node.literal
        if p not in theory.literals:
            raise PreconditionError(f"node {path} is labelled with foreign literal {p}")
        plus = {c.literal for c in node.children if c.positive}
        minus = {c.literal for c in node.children if not c.positive}
        if node.positive:
            ok = _positive_holds(theory, p, plus, minus)
        else:
            ok = _negative_holds(theory, logic, p, plus, minus) or _loop_closes(p, ancestors)
        if not ok:
            problems.append(f"{path}: {node.label} is not justified by its children")
        for i, child in enumerate(node.children):
            check(child, ancestors + [node], f"{path}.{i}")

    check(tree, [], "root")
    return TreeCheck(not problems, problems)


def _positive_holds(theory, p, plus, minus) -> bool:
    for r in theory.strict_for(p):
        if r.body <= plus:
            return True
    for r in theory.defeasible_for(p):
        if r.body <= plus and all(
            any(
                all((s.body & minus) or theory.prec(s, r) for s in theory.rules_for(q))
                for q in c - {p}
            )
            for c in theory.conflicts_of(p)
        ):
            return True
    return False


def _negative_holds(theory, logic, p, plus, minus) -> bool:
    if any(not (r.body & minus) for r in theory.strict_for(p)):
        return False
    for r in theory.defeasible_for(p):
        if r.body & minus:
            continue
        if not any(
            all(
                any(s.body <= plus and can_defeat(theory, s, r, logic) for s in theory.rules_for(q))
                for q in c - {p}
            )
            for c in theory.conflicts_of(p)
        ):
            return False
    return True


def _loop_closes(p, ancestors) -> bool:
    for anc in reversed(ancestors):
        if anc.positive:
            return False
        if anc.literal == p:
            return True
    return False


class Prover:
    """Goal-directed depth-first search for argument trees; one instance per (theory, logic)."""

    def __init__(self, theory: DefeasibleTheory, logic, budget: int = DEFAULT_BUDGET):
        self.theory = theory
        self.logic = Logic.coerce(logic)
        self.budget = budget
        self.expanded = 0
        self._memo: dict = {}

    def prove(self, goal) -> ArgumentTree | None:
        """``goal`` is ``"+p"``/``"-p"`` or a ``(sign, Literal)`` pair."""
        sign, p = parse_goal(goal)
        if p not in self.theory.literals:
            raise PreconditionError(f"literal {p} does not occur in the theory")
        return self._search(sign, p, frozenset(), frozenset())

    def _search(self, sign, p, pos, run):
        if sign == POS:
            if p in pos:
                return None
            key = (POS, p, pos)
        else:
            if p in run:
                return ArgumentTree(NEG, p)
            key = (NEG, p, pos, run)
        if key in self._memo:
            return self._memo[key]
        self.expanded += 1
        if self.expanded > self.budget:
            raise BudgetExhausted(f"proof search expanded more than {self.budget} nodes")
        if sign == POS:
            tree = self._expand_positive(p, pos | {p})
        else:
            tree = self._expand_negative(p, pos, run | {p})
        self._memo[key] = tree
        return tree

    def _expand_positive(self, p, pos):
        theory = self.theory

        def sub(sign, q):
            return self._search(sign, q, pos, frozenset())

        for r in theory.strict_for(p):
            kids = self._all(POS, r.body, sub)
            if kids is not None:
                return ArgumentTree(POS, p, _dedupe(kids))
        for r in theory.defeasible_for(p):
            kids = self._all(POS, r.body, sub)
            if kids is None:
                continue
            for c in theory.conflicts_of(p):
                found = None
                for q in sorted_lits(c - {p}):
                    found = self._rival_fails(q, r, sub)
                    if found is not None:
                        break
                if found is None:
                    kids = None
                    break
                kids.extend(found)
            if kids is not None:
                return ArgumentTree(POS, p, _dedupe(kids))
        return None

    def _rival_fails(self, q, r, sub):
        # every rule for q is inferior to r or has a refuted body literal
        out = []
        for s in self.theory.rules_for(q):
            if self.theory.prec(s, r):
                continue
            hit = self._any(NEG, s.body, sub)
            if hit is None:
                return None
            out.append(hit)
        return out

    def _expand_negative(self, p, pos, run):
        theory = self.theory

        def sub(sign, q):
            return self._search(sign, q, pos, run)

        kids: list = []
        for r in theory.strict_for(p):
            hit = self._any(NEG, r.body, sub)
            if hit is None:
                return None
            kids.append(hit)
        for r in theory.defeasible_for(p):
            hit = self._any(NEG, r.body, sub)
            if hit is not None:
                kids.append(hit)
                continue
            defeat = self._defeating_cover(p, r, sub)
            if defeat is None:
                return None
            kids.extend(defeat)
        return ArgumentTree(NEG, p, _dedupe(kids))

    def _defeating_cover(self, p, r, sub):
        theory = self.theory
        for c in theory.conflicts_of(p):
            chosen: list = []
            for q in sorted_lits(c - {p}):
                got = None
                for s in theory.rules_for(q):
                    if not can_defeat(theory, s, r, self.logic):
                        continue
                    got = self._all(POS, s.body, sub)
                    if got is not None:
                        break
                if got is None:
                    chosen = None
                    break
                chosen.extend(got)
            if chosen is not None:
                return chosen
        return None

    @staticmethod
    def _all(sign, body, sub):
        kids = []
        for q in sorted_lits(body):
            t = sub(sign, q)
            if t is None:
                return None
            kids.append(t)
        return kids

    @staticmethod
    def _any(sign, body, sub):
        for q in sorted_lits(body):
            t = sub(sign, q)
            if t is not None:
                return t
        return None


def _dedupe(trees: Iterable[ArgumentTree]) -> list:
    out: dict = {}
    for t in trees:
        out.setdefault(t.label, t)
    return list(out.values())


def parse_goal(goal) -> tuple[str, Literal]:
    if isinstance(goal, tuple):
        sign, p = goal
        return sign, p if isinstance(p, Literal) else Literal.parse(p)
    text = str(goal).strip()
    if text.startswith("+"):
        return POS, Literal.parse(text[1:])
    if text.startswith("-"):
        # the first sign is the goal's: "-p" refutes p, "--p" refutes -p
        return NEG, Literal.parse(text[1:])
    return POS, Literal.parse(text)


def prove(theory: DefeasibleTheory, logic, goal, budget: int = DEFAULT_BUDGET) -> ArgumentTree | None:
    return Prover(theory, logic, budget).prove(goal)
