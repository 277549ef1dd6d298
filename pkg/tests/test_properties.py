"""Hypothesis-driven invariants over small theories and programs."""

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from defeasible import ADL, NDL, dl_to_lp, wfm_dl
from defeasible.core import DefeasibleTheory, DLRule, Literal, LPRule, NormalProgram, RuleKind
from defeasible.dl_semantics import greatest_unfounded_dl, is_unfounded_set, wfm_sequence_dl
from defeasible.lp_semantics import (
    gamma,
    greatest_unfounded_lp,
    immediate_consequences_lp,
    is_unfounded_set_lp,
    stable_models_lp,
    wfm_lp,
    wfm_sequence_lp,
    wfm_via_gamma,
)
from defeasible.operators import alpha, beta
from defeasible.syntax import parse_program, parse_theory, serialize_program, serialize_theory
from defeasible.transform import close_conflicts

import checks
import oracles

ATOMS = ["a", "b", "c", "d"]
literals = st.builds(Literal, st.sampled_from(ATOMS), st.booleans())
bodies = st.frozensets(literals, max_size=2)

FAST = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@st.composite
def theories(draw, defeaters=True, priorities=True, extended=True):
    kinds = [RuleKind.STRICT, RuleKind.DEFEASIBLE] + ([RuleKind.DEFEATER] if defeaters else [])
    specs = draw(st.lists(st.tuples(st.sampled_from(kinds), bodies, literals), min_size=1, max_size=6))
    rules = [DLRule(f"r{i}", k, b, h) for i, (k, b, h) in enumerate(specs, 1)]
    conflicts = []
    if extended:
        conflicts = draw(st.lists(st.frozensets(literals, min_size=2, max_size=3), max_size=2))
    priority = set()
    if priorities:
        ranked = [r.id for r in rules if not r.is_strict]
        order = draw(st.permutations(ranked)) if ranked else []
        pairs = draw(st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5)), max_size=3))
        for i, j in pairs:
            if i < j < len(order):
                priority.add((order[i], order[j]))
    return DefeasibleTheory(rules, conflicts, priority)


@st.composite
def programs(draw, signed=True):
    lits_ = literals if signed else st.builds(Literal, st.sampled_from(ATOMS))
    specs = draw(
        st.lists(st.tuples(lits_, st.frozensets(lits_, max_size=2), st.frozensets(lits_, max_size=2)), min_size=1, max_size=6)
    )
    return NormalProgram(LPRule(h, p, n) for h, p, n in specs)


@FAST
@given(theories())
def test_theory_serialization_round_trip(D):
    assert parse_theory(serialize_theory(D)) == D


@FAST
@given(programs())
def test_program_serialization_round_trip(P):
    assert parse_program(serialize_program(P)) == P


@FAST
@given(programs())
def test_gamma_antimonotone(P):
    subsets = list(oracles.subsets(P.literals))[:64]
    for S1 in subsets[::3]:
        for S2 in subsets[::5]:
            if S1 <= S2:
                assert gamma(P, S2) <= gamma(P, S1)


@FAST
@given(programs(), st.randoms(use_true_random=False))
def test_lp_unfounded_matches_oracle_and_unions(P, rng):
    I = oracles.random_interpretation(rng, P.literals)
    U = greatest_unfounded_lp(P, I)
    assert U == oracles.lp_greatest_unfounded(P, I, P.literals)
    assert is_unfounded_set_lp(P, I, U)
    small = [S for S in list(oracles.subsets(P.literals))[:32] if is_unfounded_set_lp(P, I, S)]
    for S1 in small:
        for S2 in small:
            assert is_unfounded_set_lp(P, I, S1 | S2)


@FAST
@given(programs())
def test_wfm_lp_sequence(P):
    seq = wfm_sequence_lp(P)
    assert all(a <= b for a, b in zip(seq, seq[1:]))
    for I in seq:
        assert not (immediate_consequences_lp(P, I) & greatest_unfounded_lp(P, I))
    assert wfm_lp(P) == wfm_via_gamma(P)
    m = wfm_lp(P)
    for S in stable_models_lp(P):
        assert m.T <= S and not (m.F & S)


@FAST
@given(theories(), st.sampled_from([NDL, ADL]), st.randoms(use_true_random=False))
def test_dl_unfounded_matches_oracle(D, logic, rng):
    I = oracles.random_interpretation(rng, D.literals)
    U = greatest_unfounded_dl(D, I, logic)
    assert U == oracles.dl_greatest_unfounded(D, I, logic.value)
    assert is_unfounded_set(D, I, U, logic)


@FAST
@given(theories())
def test_dl_sequence_coherent_and_monotone(D):
    for logic in (NDL, ADL):
        seq = wfm_sequence_dl(D, logic)
        assert all(a <= b for a, b in zip(seq, seq[1:]))
        assert all(I.coherent for I in seq)


@FAST
@given(theories())
def test_cross_logic_properties(D):
    assert checks.adl_conservative(D) == []
    assert checks.beta_wfm_is_ndl(D) == []
    assert checks.compile_preserves_wfm(D) == []


@FAST
@given(theories(defeaters=False, priorities=False))
def test_plain_theory_properties(D):
    assert checks.adl_sound_for_wfs(D) == []
    program = dl_to_lp(D)
    for S in list(oracles.subsets(D.literals))[::7]:
        assert alpha(D, S) == gamma(program, S)


@FAST
@given(theories(defeaters=False, priorities=False, extended=False))
def test_minimal_conflict_completeness(D):
    assert checks.adl_complete_for_wfs(D) == []


@FAST
@given(programs(signed=False))
def test_program_translation_properties(P):
    for check in (checks.explicit_negation_mirrors, checks.explicit_version_agrees, checks.presumption_theory_symmetric, checks.presumption_theory_matches_wfs, checks.stable_models_biject):
        assert check(P) == []


@FAST
@given(theories())
def test_beta_antimonotone(D):
    subsets = list(oracles.subsets(D.literals))[:40]
    for S1 in subsets[::3]:
        for S2 in subsets[::4]:
            if S1 <= S2:
                assert beta(D, S2) <= beta(D, S1)


@FAST
@given(theories())
def test_close_conflicts_closure(D):
    once = close_conflicts(D)
    assert D.conflicts <= once.conflicts
    assert close_conflicts(once).conflicts == once.conflicts
