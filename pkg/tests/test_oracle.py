import random

import pytest

from conftest import problem
from tableaux.engine import BranchLast, FirstComposite, Manual, RandomChoice
from tableaux.errors import TooManyLetters
from tableaux.formula import F, PartialModel, T, Var
from tableaux.generate import random_gamma
from tableaux.oracle import assignments, check_equivalence, truth_table_models

p = Var("p")


def test_truth_table_examples():
    assert truth_table_models(problem("T: p & ~q\nF: p & q")) == {PartialModel({"p": True, "q": False})}
    assert truth_table_models([]) == {PartialModel()}
    assert truth_table_models([T(p), F(p)]) == frozenset()


def test_assignment_order():
    got = [a.render() for a in assignments({"q", "p"})]
    assert got == ["p=F q=F", "p=F q=T", "p=T q=F", "p=T q=T"]


def test_letter_bound():
    gamma = [T(Var(f"x{i}")) for i in range(21)]
    with pytest.raises(TooManyLetters):
        truth_table_models(gamma)
    with pytest.raises(TooManyLetters):
        truth_table_models(gamma[:4], max_letters=3)
    assert len(truth_table_models(gamma[:4], max_letters=4)) == 1


def test_no_pruning_size_bound():
    gamma = [F(Var("p")), F(Var("q")), F(Var("r"))]
    assert len(list(assignments({"p", "q", "r"}))) == 8
    assert truth_table_models(gamma) == {PartialModel({"p": False, "q": False, "r": False})}


@pytest.mark.parametrize("strategy", [BranchLast, FirstComposite, lambda: Manual([1, 0, 2, 0, 2])])
def test_check_equivalence_example(strategy):
    assert check_equivalence(problem("T: p & ~q\nF: p & q"), strategy())


def test_check_equivalence_empty():
    assert check_equivalence([])


def test_check_equivalence_random():
    rng = random.Random(2024)
    for i in range(300):
        gamma = random_gamma(rng, 4, ["p", "q", "r"])
        for s in (BranchLast(), FirstComposite(), RandomChoice(i)):
            assert check_equivalence(gamma, s)
