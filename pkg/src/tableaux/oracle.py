"""Brute-force ground truth: try every assignment to the mentioned letters.

Deliberately naive.  Nothing here may use the decomposition rules; only
evaluation from :mod:`tableaux.formula` is shared with the engine.
"""

from itertools import product

from .errors import TooManyLetters
from .formula import PartialModel, letters_of, satisfies_set

DEFAULT_MAX_LETTERS = 20

# A total assignment is a PartialModel whose domain is exactly the letter set
# under consideration.
TotalAssignment = PartialModel


def assignments(letters, max_letters=DEFAULT_MAX_LETTERS):
    """All assignments over ``letters``: names sorted, False before True."""
    names = sorted(set(letters))
    if len(names) > max_letters:
        raise TooManyLetters(f"{len(names)} letters exceed the limit of {max_letters}")
    for values in product((False, True), repeat=len(names)):
        yield TotalAssignment(zip(names, values))


def truth_table_models(gamma, max_letters=DEFAULT_MAX_LETTERS):
    gamma = list(gamma)
    return frozenset(a for a in assignments(letters_of(gamma), max_letters)
                     if satisfies_set(a, gamma))


def check_equivalence(gamma, strategy=None, max_letters=DEFAULT_MAX_LETTERS, **kwargs):
    """Does the engine agree with the truth table on ``gamma``?"""
    from .engine import expand_partial_models, models

    gamma = list(gamma)
    expected = truth_table_models(gamma, max_letters)
    found = models(gamma, strategy, **kwargs)
    return expand_partial_models(found, letters_of(gamma)) == expected
