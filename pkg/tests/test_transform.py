import pytest

from defeasible import ADL, NDL, wfm_dl, wfm_lp
from defeasible.core import (
    DefeasibleTheory,
    Interpretation,
    LPRule,
    NormalProgram,
    RuleKind,
    defeasible,
    defeater,
    lit,
    lits,
    strict,
)
from defeasible.errors import CapExceeded, PreconditionError
from defeasible.fixtures import FIX_AMB, FIX_BACH, FIX_LOOP, FIX_NIXON, FIX_STRICT, chain, program, theory
from defeasible.syntax import parse_program
from defeasible.transform import (
    close_conflicts,
    decode_negative_atoms,
    dl_to_lp,
    eliminate_defeaters_priorities,
    encode_negative_atoms,
    explicit_version,
    fi,
    lp_to_dl,
    prod_conflicts,
    su,
    trans,
)


def R(head, pos=(), neg=()):
    return LPRule(lit(head), lits(*pos), lits(*neg))


def test_close_conflicts_bach():
    D = theory(FIX_BACH).replace(conflicts=())
    assert lits("married", "bachelor") in close_conflicts(D).conflicts


def test_close_conflicts_strict_fixture():
    D = theory(FIX_STRICT).replace(conflicts=())
    assert lits("q", "-p") in close_conflicts(D).conflicts


def test_close_conflicts_without_strict_rules():
    D = theory(FIX_AMB)
    assert close_conflicts(D).conflicts == D.conflicts


def test_close_conflicts_is_a_closure():
    D = theory(FIX_NIXON)
    once = close_conflicts(D)
    assert D.conflicts <= once.conflicts
    assert close_conflicts(once).conflicts == once.conflicts


def test_prod_examples():
    assert prod_conflicts(theory(FIX_AMB), lit("p")) == {lits("-p")}
    assert prod_conflicts(theory(FIX_STRICT), lit("q")) == {lits("-q", "-p")}
    D = DefeasibleTheory([defeasible("r", [], "p")], conflicts=[lits("p", "a"), lits("p", "b", "c")])
    assert prod_conflicts(D, lit("p")) == {lits("-p", "a", "b"), lits("-p", "a", "c")}


def test_prod_without_minimal_conflict():
    # the same product with the auto-inserted {p, -p} factored out
    D = DefeasibleTheory([defeasible("r", [], "p")], conflicts=[lits("p", "a"), lits("p", "b", "c")])
    got = {S - lits("-p") for S in prod_conflicts(D, lit("p"))}
    assert got == {lits("a", "b"), lits("a", "c")}


def test_prod_cap():
    D = DefeasibleTheory(
        [defeasible("r", [], "p")], conflicts=[lits("p", f"a{i}", f"b{i}") for i in range(12)]
    )
    with pytest.raises(CapExceeded):
        prod_conflicts(D, lit("p"), cap=1000)


def test_dl_to_lp_amb():
    got = dl_to_lp(theory(FIX_AMB)).rules
    assert got == {R("p", neg=["-p"]), R("-p", neg=["p"]), R("-q", ["p"], ["q"]), R("q", neg=["-q"])}


def test_dl_to_lp_strict():
    # the conflict set {q, -p} also puts q into the default-negated body of -p
    got = dl_to_lp(theory(FIX_STRICT)).rules
    assert got == {R("p"), R("-p", neg=["p", "q"]), R("q", neg=["-q", "-p"]), R("p", ["q"])}


def test_dl_to_lp_nixon():
    got = dl_to_lp(theory(FIX_NIXON)).rules
    want = {
        R("nixon"),
        R("republican", ["nixon"]),
        R("quaker", ["nixon"]),
        R("dove", ["quaker"], ["-dove", "hawk"]),
        R("hawk", ["republican"], ["-hawk", "dove"]),
        R("-dove", ["hawk"]),
        R("-hawk", ["dove"]),
        R("extremist", ["hawk"], ["-extremist"]),
        R("extremist", ["dove"], ["-extremist"]),
    }
    assert got == want


def test_trans_recovers_provenance():
    P = dl_to_lp(theory(FIX_NIXON))
    assert {r.head for r in trans(P, "r9")} == lits("extremist")


def test_dl_to_lp_rejects_defeaters_and_priorities():
    with pytest.raises(PreconditionError):
        dl_to_lp(theory("fix_amb_prio"))
    with pytest.raises(PreconditionError):
        dl_to_lp(DefeasibleTheory([defeater("d", [], "p")]))


def test_explicit_version_examples():
    assert explicit_version(program(FIX_LOOP)).rules == {
        R("p", ["-q"]), R("q", ["-p"]), R("-q", neg=["q"]), R("-p", neg=["p"]),
    }
    assert explicit_version(parse_program("p.")).rules == {R("p"), R("-p", neg=["p"])}
    assert explicit_version(chain(1)).rules == {
        R("p", ["-q0"]), R("q0", ["q1"]), R("-p", neg=["p"]), R("-q0", neg=["q0"]), R("-q1", neg=["q1"]),
    }


def test_lp_to_dl_examples():
    D = lp_to_dl(parse_program("p."))
    assert {(r.kind, r.body, r.head) for r in D.rules} == {
        (RuleKind.STRICT, frozenset(), lit("p")),
        (RuleKind.DEFEASIBLE, frozenset(), lit("-p")),
    }
    assert D.minimal_conflicts and not D.priority


def test_round_trip_loop():
    P = program(FIX_LOOP)
    assert dl_to_lp(lp_to_dl(P)).rules == explicit_version(P).rules


def test_signed_programs_need_encoding():
    P = program("fix_contra")
    with pytest.raises(PreconditionError):
        explicit_version(P)
    E = encode_negative_atoms(P)
    assert E.is_positive
    assert decode_negative_atoms(E) == P
    assert lit("p__neg") in E.literals


def test_compile_priority_example():
    D = DefeasibleTheory(
        [defeasible("r", [], "p"), defeasible("s", [], "-p")], priority=[("s", "r")]
    )
    E = eliminate_defeaters_priorities(D)
    assert not E.priority and not E.has_defeaters and E.minimal_conflicts
    assert not E.rules_for(fi("r").complement())
    (blocker,) = E.rules_for(fi("s").complement())
    assert blocker.is_strict and blocker.body == {su("r")}
    for logic in (NDL, ADL):
        m = wfm_dl(E, logic)
        assert lit("p") in m.T and lit("-p") in m.F


def test_compile_defeater_example():
    D = DefeasibleTheory([defeater("r", [], "-f"), defeasible("t", [], "f")])
    E = eliminate_defeaters_priorities(D)
    assert E.rules_for(su("r")) and E.rules_for(fi("r"))
    assert not [x for x in E.rules_for(lit("-f"))]
    for logic in (NDL, ADL):
        assert lit("f") not in wfm_dl(E, logic).T


def test_compile_rule_shapes():
    D = DefeasibleTheory([strict("a", ["x"], "p"), defeasible("b", [], "x")])
    E = eliminate_defeaters_priorities(D)
    (fi_a,) = E.rules_for(fi("a"))
    (fi_b,) = E.rules_for(fi("b"))
    assert fi_a.is_strict and fi_b.is_defeasible


@pytest.mark.parametrize("name", ["fix_amb", "fix_amb_prio", "fix_nixon", "fix_strict", "fix_bach"])
def test_compile_preserves_wfm(name):
    D = theory(name)
    E = eliminate_defeaters_priorities(D)
    for logic in (NDL, ADL):
        assert wfm_dl(E, logic).restrict(D.literals) == wfm_dl(D, logic)


def test_compile_rejects_reserved_names():
    with pytest.raises(PreconditionError):
        eliminate_defeaters_priorities(DefeasibleTheory([defeasible("r", [], "su__x")]))


def test_explicit_version_on_chain():
    P = chain(3)
    phi = wfm_lp(explicit_version(P))
    assert phi.restrict(P.literals) == wfm_lp(P)
    assert lit("-p") in phi.F and lit("-q0") in phi.T
