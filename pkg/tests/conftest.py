import hypothesis.strategies as st
import pytest

from tableaux.formula import And, Not, Sign, SignedFormula, Var
from tableaux.parser import parse_problem

LETTERS = ["p", "q", "r"]


def formulas(letters=LETTERS, max_leaves=12):
    return st.recursive(
        st.sampled_from(letters).map(Var),
        lambda inner: st.one_of(inner.map(Not), st.tuples(inner, inner).map(lambda t: And(*t))),
        max_leaves=max_leaves,
    )


def signed_formulas(letters=LETTERS, max_leaves=12):
    return st.builds(SignedFormula, st.sampled_from([Sign.T, Sign.F]), formulas(letters, max_leaves))


def gammas(letters=LETTERS, max_size=3, max_leaves=8):
    return st.lists(signed_formulas(letters, max_leaves), max_size=max_size, unique=True)


def problem(text):
    return list(parse_problem(text).assumptions)


@pytest.fixture
def example_gamma():
    return problem("T: p & ~q\nF: p & q")


# indices into the current set, depth first: F(p&q) at the root, then the
# true conjunction and the negation on each branch
EXAMPLE_CHOICES = [1, 0, 2, 0, 2]


# -- acceptance summary -------------------------------------------------------

_acceptance = {}


def pytest_collection_modifyitems(items):
    for item in items:
        if item.module.__name__.endswith("test_acceptance"):
            doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
            _acceptance[item.nodeid] = [doc, None]


def pytest_runtest_logreport(report):
    entry = _acceptance.get(report.nodeid)
    if entry is None:
        return
    if report.when == "call" or report.outcome != "passed":
        if entry[1] != "FAIL":
            entry[1] = "PASS" if report.outcome == "passed" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    ran = [(doc, result) for doc, result in _acceptance.values() if result]
    if not ran:
        return
    terminalreporter.section("acceptance")
    for doc, result in ran:
        terminalreporter.write_line(f"{result}  {doc}")
