"""Random small theories and programs for differential and property testing."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import DefeasibleTheory, DLRule, Literal, LPRule, NormalProgram, RuleKind


@dataclass(frozen=True)
class TheoryShape:
    atoms: int = 4
    max_rules: int = 7
    max_body: int = 2
    defeaters: bool = True
    priorities: bool = True
    extended_conflicts: bool = True


def _atoms(n: int) -> list[str]:
    return [chr(ord("a") + i) for i in range(n)]


def random_theory(rng: random.Random, shape: TheoryShape = TheoryShape()) -> DefeasibleTheory:
    atoms = _atoms(rng.randint(1, shape.atoms))
    universe = [Literal(a, s) for a in atoms for s in (True, False)]
    kinds = [RuleKind.STRICT, RuleKind.DEFEASIBLE, RuleKind.DEFEASIBLE]
    if shape.defeaters:
        kinds.append(RuleKind.DEFEATER)
    rules = []
    for i in range(1, rng.randint(1, shape.max_rules) + 1):
        head = rng.choice(universe)
        body = frozenset(rng.sample(universe, rng.randint(0, min(shape.max_body, len(universe)))))
        rules.append(DLRule(f"r{i}", rng.choice(kinds), body, head))
    conflicts = []
    if shape.extended_conflicts and len(universe) > 2:
        for _ in range(rng.randint(0, 2)):
            size = rng.randint(2, min(3, len(universe)))
            conflicts.append(frozenset(rng.sample(universe, size)))
    priority = set()
    if shape.priorities:
        ranked = [r.id for r in rules if not r.is_strict]
        rng.shuffle(ranked)
        # drawing pairs along one random order keeps the relation acyclic
        for _ in range(rng.randint(0, 3)):
            if len(ranked) >= 2:
                i, j = sorted(rng.sample(range(len(ranked)), 2))
                priority.add((ranked[i], ranked[j]))
    return DefeasibleTheory(rules, conflicts, priority)


def plain(theory: DefeasibleTheory, minimal: bool = False) -> DefeasibleTheory:
    """Drop defeaters and priorities (and optionally extended conflict sets)."""
    rules = [r for r in theory.rules if not r.is_defeater]
    return DefeasibleTheory(rules, () if minimal else theory.conflicts, ())


def random_program(
    rng: random.Random, atoms: int = 4, max_rules: int = 6, max_body: int = 3, signed: bool = False
) -> NormalProgram:
    names = _atoms(rng.randint(1, atoms))
    universe = [Literal(a, s) for a in names for s in ((True, False) if signed else (True,))]
    rules = []
    for _ in range(rng.randint(1, max_rules)):
        head = rng.choice(universe)
        k = rng.randint(0, min(max_body, len(universe)))
        body = rng.sample(universe, k)
        cut = rng.randint(0, k)
        rules.append(LPRule(head, frozenset(body[:cut]), frozenset(body[cut:])))
    return NormalProgram(rules)


def theory_corpus(count: int, seed: int = 0, shape: TheoryShape = TheoryShape()) -> list[DefeasibleTheory]:
    rng = random.Random(seed)
    return [random_theory(rng, shape) for _ in range(count)]


def program_corpus(count: int, seed: int = 0, **kwargs) -> list[NormalProgram]:
    rng = random.Random(seed)
    return [random_program(rng, **kwargs) for _ in range(count)]
