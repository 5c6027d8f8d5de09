from itertools import product

import pytest
from hypothesis import given, settings

from conftest import gammas, problem
from tableaux.engine import (
    BranchLast,
    Expansion,
    FirstComposite,
    Manual,
    RandomChoice,
    Rule,
    entails,
    expand,
    expand_partial_models,
    is_literal_set,
    is_satisfiable,
    is_valid,
    lmods,
    models,
    select_formula,
    split,
    subsume,
)
from tableaux.errors import (
    DomainExceedsLetters,
    ManualChoiceInvalid,
    NotComposite,
    NotLiteralSet,
    NotMember,
)
from tableaux.formula import And, F, Not, PartialModel, T, Var, letters_of, satisfies_set, total_measure

p, q = Var("p"), Var("q")
PM = PartialModel


def test_split():
    assert split([T(p), F(q)], T(p)) == (F(q),)
    assert split([T(p)], T(p)) == ()
    with pytest.raises(NotMember):
        split([T(p)], F(p))


def test_is_literal_set():
    assert is_literal_set([T(p), F(q)])
    assert not is_literal_set([T(And(p, q))])
    assert is_literal_set([])


def test_lmods():
    assert lmods([T(p), F(p)]) == frozenset()
    assert lmods([T(p), F(q)]) == {PM({"p": True, "q": False})}
    assert lmods([]) == {PM()}
    with pytest.raises(NotLiteralSet):
        lmods([T(Not(p))])


def test_expand_false_conjunction():
    e = expand([T(And(p, Not(q))), F(And(p, q))], F(And(p, q)))
    assert e.rule is Rule.F_AND
    assert e.successors == ((T(And(p, Not(q))), F(p)), (T(And(p, Not(q))), F(q)))


def test_expand_true_conjunction_appends_products():
    e = expand([T(And(p, Not(q))), F(p)], T(And(p, Not(q))))
    assert e.rule is Rule.T_AND
    assert e.successors == ((F(p), T(p), T(Not(q))),)
    assert set(e.successors[0]) == {T(p), T(Not(q)), F(p)}


def test_expand_negation():
    e = expand([T(Not(q)), T(p)], T(Not(q)))
    assert e.rule is Rule.NEG
    assert e.successors == ((T(p), F(q)),)


def test_expand_deduplicates():
    e = expand([T(Not(p)), F(p)], T(Not(p)))
    assert e.successors == ((F(p),),)


def test_expand_errors():
    with pytest.raises(NotComposite):
        expand([T(p)], T(p))
    with pytest.raises(NotMember):
        expand([T(p)], T(Not(p)))


def test_expansion_arity():
    for sf, n in [(T(And(p, q)), 1), (F(And(p, q)), 2), (T(Not(p)), 1), (F(Not(p)), 1)]:
        assert len(expand([sf], sf).successors) == n


def test_select_formula():
    gamma = [F(And(p, q)), T(And(p, Not(q)))]
    assert select_formula(gamma, BranchLast()) == T(And(p, Not(q)))
    assert select_formula(gamma, FirstComposite()) == F(And(p, q))
    for s in (BranchLast(), FirstComposite(), Manual([0]), RandomChoice(1)):
        assert select_formula([T(p), F(q)], s) is None
    assert select_formula([F(And(p, q))], BranchLast()) == F(And(p, q))


def test_manual_strategy():
    gamma = [T(p), F(And(p, q))]
    m = Manual([1])
    assert select_formula(gamma, m) == F(And(p, q))
    assert m.exhausted
    with pytest.raises(ManualChoiceInvalid):
        select_formula(gamma, Manual([0]))
    with pytest.raises(ManualChoiceInvalid):
        select_formula(gamma, Manual([5]))
    with pytest.raises(ManualChoiceInvalid):
        select_formula(gamma, Manual([]))


@given(gammas())
def test_branch_last_postpones_branching(gamma):
    chosen = select_formula(gamma, BranchLast())
    non_branching = [sf for sf in gamma if not sf.is_literal and not (isinstance(sf.formula, And) and sf.sign.value == "F")]
    if non_branching:
        assert chosen == non_branching[0]


def brute_models(gamma, letters):
    # independent of the tableaux.oracle module on purpose
    out = set()
    for values in product((False, True), repeat=len(letters)):
        env = dict(zip(letters, values))
        if satisfies_set(env, gamma):
            out.add(PM(env))
    return out


def test_models_example_example():
    gamma = problem("T: p & ~q\nF: p & q")
    assert models(gamma) == {PM({"p": True, "q": False})}


def test_models_empty():
    assert models([]) == {PM()}


def test_models_false_conjunction():
    # brute force over {p, q}: FF, FT and TF satisfy F(p & q)
    assert brute_models([F(And(p, q))], ["p", "q"]) == {
        PM({"p": False, "q": False}), PM({"p": False, "q": True}), PM({"p": True, "q": False})}
    found = models([F(And(p, q))])
    assert found == {PM({"p": False}), PM({"q": False})}
    assert expand_partial_models(found, ["p", "q"]) == brute_models([F(And(p, q))], ["p", "q"])


def test_models_are_strategy_independent_at_total_level():
    gamma = [F(And(p, q)), T(And(p, Not(q)))]
    expected = expand_partial_models(models(gamma, BranchLast()), "pq")
    for s in (FirstComposite(), RandomChoice(3), Manual([0, 0, 2, 0, 2])):
        assert expand_partial_models(models(gamma, s), "pq") == expected


def test_expand_partial_models():
    assert expand_partial_models({PM({"p": True})}, {"p", "q"}) == {
        PM({"p": True, "q": True}), PM({"p": True, "q": False})}
    assert expand_partial_models(frozenset(), {"p"}) == frozenset()
    assert expand_partial_models({PM()}, {"p"}) == {PM({"p": True}), PM({"p": False})}
    with pytest.raises(DomainExceedsLetters):
        expand_partial_models({PM({"r": True})}, {"p"})


def test_queries():
    assert not is_satisfiable([T(p), F(p)])
    assert is_valid(Not(And(p, Not(p))))
    assert not is_valid(p)
    assert entails([T(p)], p)
    assert not entails([T(p)], q)


def test_subsume():
    a, b = PM({"p": True}), PM({"p": True, "q": False})
    assert subsume({a, b}) == {a}
    c = PM({"q": False})
    assert subsume({a, c}) == {a, c}
    assert subsume(frozenset()) == frozenset()


@given(gammas())
@settings(max_examples=300)
def test_engine_matches_brute_force(gamma):
    letters = sorted(letters_of(gamma))
    expected = brute_models(gamma, letters)
    for s in (BranchLast(), FirstComposite(), RandomChoice(0)):
        found = models(gamma, s)
        assert expand_partial_models(found, letters) == expected
        assert expand_partial_models(subsume(found), letters) == expected
        # every member is sound whichever way it is extended
        for total in expand_partial_models(found, letters):
            assert satisfies_set(total, gamma)
    assert expand_partial_models(models(gamma, early_closure=True), letters) == expected


@given(gammas())
def test_measure_strictly_decreases(gamma):
    current = list(gamma)
    strategy = FirstComposite()
    stack = [tuple(current)]
    while stack:
        g = stack.pop()
        i = strategy.select(g)
        if i is None:
            continue
        e = expand(g, g[i])
        assert isinstance(e, Expansion)
        for succ in e.successors:
            assert total_measure(succ) < total_measure(g)
            stack.append(succ)


@given(gammas())
def test_lmods_dichotomy(gamma):
    literals = [sf for sf in gamma if sf.is_literal]
    result = lmods(literals)
    assert len(result) in (0, 1)
    contradictory = any(T(sf.formula) in literals and F(sf.formula) in literals for sf in literals)
    assert (len(result) == 0) == contradictory


def test_total_measure_beyond_recursion_limit():
    # a single branch 10,000 expansions deep
    gamma = []
    for i in range(200):
        f = Var(f"x{i}")
        for _ in range(50):
            f = Not(f)
        gamma.append(T(f))
    assert total_measure(gamma) == 10_000
    assert models(gamma) == {PM({f"x{i}": True for i in range(200)})}
