from itertools import product

import pytest
from hypothesis import given, settings

from conftest import LETTERS, formulas, signed_formulas
from tableaux.engine import decompose
from tableaux.errors import MissingLetter
from tableaux.formula import (
    And,
    F,
    Not,
    PartialModel,
    Sign,
    SignedFormula,
    T,
    Var,
    evaluate,
    letters_of,
    mean,
    measure,
    opposite,
    satisfies,
    satisfies_set,
)

p, q, r = Var("p"), Var("q"), Var("r")


def all_assignments(letters):
    for values in product((False, True), repeat=len(letters)):
        yield dict(zip(letters, values))


def test_opposite():
    assert opposite(Sign.T) is Sign.F
    assert opposite(Sign.F) is Sign.T
    assert opposite(opposite(Sign.T)) is Sign.T


def test_mean():
    assert mean(Sign.T) is True
    assert mean(Sign.F) is False
    assert mean(opposite(Sign.T)) is False


def test_letter_names():
    assert Var("p") == Var("p")
    assert Var("p") != Var("P")
    Var("x_1")
    for bad in ["", "1p", "_p", "p-q", "p q"]:
        with pytest.raises(ValueError):
            Var(bad)


def test_evaluate_examples():
    assert evaluate(p, {"p": True}) is True
    assert evaluate(Not(p), {"p": True}) is False
    assert evaluate(And(p, Not(q)), {"p": True, "q": False}) is True


def test_evaluate_missing_letter():
    with pytest.raises(MissingLetter) as info:
        evaluate(And(p, q), {"p": False})
    assert info.value.letter == "q"


def test_satisfies_examples():
    assert satisfies({"p": True}, T(p))
    assert satisfies({"p": True}, F(Not(p)))
    assert satisfies({"p": True, "q": False}, F(And(p, q)))


def test_satisfies_set_examples():
    assert satisfies_set({}, [])
    assert satisfies_set({"p": True, "q": False}, [T(And(p, Not(q))), F(And(p, q))])
    assert not satisfies_set({"p": True}, [T(p), F(p)])


def test_satisfies_set_reports_missing_letter_after_false_member():
    with pytest.raises(MissingLetter):
        satisfies_set({"p": True}, [F(p), T(q)])


def test_letters_of():
    assert letters_of([T(And(p, Not(q))), F(And(p, q))]) == {"p", "q"}
    assert letters_of([]) == set()
    assert letters_of([T(Not(Not(r)))]) == {"r"}


def test_measure():
    assert measure(T(p)) == 0
    assert measure(F(And(p, q))) == 1
    assert measure(T(And(p, Not(q)))) == 2


def test_partial_model_is_hashable_mapping():
    a = PartialModel({"p": True, "q": False})
    b = PartialModel({"q": False, "p": True})
    assert a == b and hash(a) == hash(b)
    assert len({a, b}) == 1
    assert a.render() == "p=T q=F"
    assert PartialModel().render() == "(all interpretations)"
    assert a.extends(PartialModel({"p": True}))
    assert not PartialModel({"p": True}).extends(a)
    with pytest.raises(TypeError):
        PartialModel({"p": 1})


def truth_table_value(f, env):
    # independent reference: compile to a Python boolean expression
    def py(g):
        if isinstance(g, Var):
            return f"env[{g.name!r}]"
        if isinstance(g, Not):
            return f"(not {py(g.body)})"
        return f"({py(g.left)} and {py(g.right)})"
    return eval(py(f), {"env": env})


@given(formulas())
def test_evaluate_agrees_with_truth_table(f):
    for env in all_assignments(LETTERS):
        assert evaluate(f, env) == truth_table_value(f, env)


@given(formulas(), formulas(max_leaves=6))
@settings(max_examples=200)
def test_characterisation_equations(a, b):
    for env in all_assignments(LETTERS):
        for s in Sign:
            assert satisfies(env, SignedFormula(s, Not(a))) == satisfies(env, SignedFormula(opposite(s), a))
        assert satisfies(env, T(And(a, b))) == (satisfies(env, T(a)) and satisfies(env, T(b)))
        assert satisfies(env, F(And(a, b))) == (satisfies(env, F(a)) or satisfies(env, F(b)))


@given(signed_formulas())
def test_decomposition_decreases_measure(sf):
    if sf.is_literal:
        return
    _, successors = decompose(sf)
    for produced in successors:
        assert sum(measure(x) for x in produced) < measure(sf)
