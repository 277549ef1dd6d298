import pytest

from defeasible import ADL, NDL, lp_to_dl, wfm_dl
from defeasible.core import DefeasibleTheory, lit, lits, strict
from defeasible.errors import BudgetExhausted, PreconditionError
from defeasible.fixtures import FIX_AMB, FIX_BACH, FIX_NIXON, chain, theory
from defeasible.proof import (
    ArgumentTree,
    Prover,
    dep_set,
    is_locally_finite,
    parse_goal,
    prove,
    validate_tree,
)

SELF_LOOP = DefeasibleTheory([strict("r1", ["p"], "p")])


def node(label, *children):
    return ArgumentTree(label[0], lit(label[1:]), children)


def test_dep_set_examples():
    D = theory(FIX_AMB)
    assert dep_set(D, lit("p")) == lits("p", "-p")
    assert dep_set(D, lit("-q")) == lits("-q", "q", "p", "-p")
    fact = DefeasibleTheory([strict("f", [], "p")])
    assert dep_set(fact, lit("p")) == lits("p", "-p")
    with pytest.raises(PreconditionError):
        dep_set(D, lit("zzz"))


def test_locally_finite():
    assert is_locally_finite(theory(FIX_AMB))
    assert is_locally_finite(theory(FIX_NIXON))
    from defeasible.transform import encode_negative_atoms

    assert is_locally_finite(lp_to_dl(encode_negative_atoms(chain(5))))


def test_failure_by_looping():
    tree = node("-p", node("-p"))
    for logic in (NDL, ADL):
        assert validate_tree(SELF_LOOP, logic, tree)
        assert prove(SELF_LOOP, logic, "+p") is None
        assert prove(SELF_LOOP, logic, "-p") is not None


def test_loop_needs_negative_path():
    # +p between the two -p nodes breaks the loop condition
    tree = node("-p", node("+p", node("-p")))
    assert not validate_tree(SELF_LOOP, NDL, tree)


def test_hand_built_amb_tree():
    tree = node("+q", node("-p"))
    assert validate_tree(theory(FIX_AMB), NDL, tree)
    check = validate_tree(theory(FIX_AMB), ADL, tree)
    assert not check and check.problems


def test_prove_amb():
    D = theory(FIX_AMB)
    for goal in ("+q", "--q"):
        tree = prove(D, NDL, goal)
        assert tree is not None and validate_tree(D, NDL, tree)
    assert prove(D, ADL, "+q") is None


def test_foreign_labels_rejected():
    with pytest.raises(PreconditionError):
        validate_tree(theory(FIX_AMB), NDL, node("+zzz"))
    with pytest.raises(PreconditionError):
        prove(theory(FIX_AMB), NDL, "+zzz")


def test_budget_exhaustion_is_distinct():
    with pytest.raises(BudgetExhausted):
        Prover(theory(FIX_NIXON), NDL, budget=2).prove("-extremist")


@pytest.mark.parametrize("name", ["fix_amb", "fix_amb_prio", "fix_nixon", "fix_strict", "fix_bach", "fix_joint", "fix_contra", "fix_selfloop"])
def test_prover_agrees_with_wfm(name):
    D = theory(name)
    for logic in (NDL, ADL):
        m = wfm_dl(D, logic)
        prover = Prover(D, logic)
        for p in D.literals:
            plus, minus = prover.prove(("+", p)), prover.prove(("-", p))
            assert (plus is not None) == (p in m.T)
            assert (minus is not None) == (p in m.F)
            for t in (plus, minus):
                if t is not None:
                    assert validate_tree(D, logic, t)


def test_bach_refutation_tree():
    tree = prove(theory(FIX_BACH), NDL, "-married")
    assert tree is not None and tree.label == "-married"


def test_tree_serialization_round_trip():
    tree = prove(theory(FIX_NIXON), NDL, "-extremist")
    assert ArgumentTree.from_text(tree.to_text()) == tree
    assert ArgumentTree.from_dict(tree.to_dict()) == tree
    assert tree.size() >= tree.depth() >= 1


def test_goal_parsing():
    assert parse_goal("-p") == ("-", lit("p"))
    assert parse_goal("--p") == ("-", lit("-p"))
    assert parse_goal("+-p") == ("+", lit("-p"))
    assert parse_goal("p") == ("+", lit("p"))
