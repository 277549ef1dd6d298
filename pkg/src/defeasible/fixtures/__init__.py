"""Small worked theories and programs shipped with the package.

``load("fix_amb")`` returns a :class:`DefeasibleTheory` for ``.dfl`` files and
a :class:`NormalProgram` for ``.lp`` files; ``chain(n)`` builds the finite
truncation of the descending-chain program.
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from ..core import DefeasibleTheory, Literal, LPRule, NormalProgram
from ..syntax import parse_program, parse_theory

THEORIES = ("fix_amb", "fix_amb_prio", "fix_strict", "fix_nixon", "fix_joint", "fix_contra", "fix_bach", "fix_selfloop")
PROGRAMS = ("fix_loop", "fix_contra")


def source(name: str, suffix: str) -> str:
    return resources.files(__name__).joinpath(f"{name}.{suffix}").read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def theory(name: str) -> DefeasibleTheory:
    return parse_theory(source(name, "dfl"))


@lru_cache(maxsize=None)
def program(name: str) -> NormalProgram:
    return parse_program(source(name, "lp"))


def chain(n: int) -> NormalProgram:
    """``p :- not q0`` and ``q_k :- q_{k+1}`` for ``k < n``; nothing supports ``q_n``."""
    if n < 0:
        raise ValueError("chain length must be non-negative")
    rules = [LPRule(Literal("p"), frozenset(), {Literal("q0")})]
    rules += [LPRule(Literal(f"q{k}"), {Literal(f"q{k + 1}")}) for k in range(n)]
    return NormalProgram(rules)


FIX_AMB = "fix_amb"
FIX_STRICT = "fix_strict"
FIX_NIXON = "fix_nixon"
FIX_JOINT = "fix_joint"
FIX_LOOP = "fix_loop"
FIX_CONTRA = "fix_contra"
FIX_BACH = "fix_bach"
