"""Formulae over the connectives {~, &}, signs, partial models and satisfaction.

Interpretations are represented by :class:`PartialModel`, a finite mapping
from letter names to booleans.  A partial model stands for every total
interpretation that agrees with it on its domain, so the empty model stands
for all interpretations.  Evaluation never defaults a missing letter; it
raises :class:`~tableaux.errors.MissingLetter` instead.
"""

from __future__ import annotations

import enum
import re
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from typing import Union

from .errors import MissingLetter

LETTER_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class Sign(enum.Enum):
    T = "T"
    F = "F"

    def __str__(self):
        return self.value


def opposite(s: Sign) -> Sign:
    return Sign.F if s is Sign.T else Sign.T


def mean(s: Sign) -> bool:
    """The boolean value a sign asserts."""
    return s is Sign.T


class Node:
    """Hash computed once at construction from the children's cached hashes.

    Sets of formulae are hashed constantly by the engine, and the generated
    dataclass hash would walk the whole tree each time.
    """

    __slots__ = ()

    def _cache_hash(self, *parts):
        object.__setattr__(self, "_hash", hash((type(self).__name__,) + parts))

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if type(other) is not type(self) or other._hash != self._hash:
            return False
        return self._fields() == other._fields()

    def __ne__(self, other):
        return not self == other


@dataclass(frozen=True, eq=False)
class Var(Node):
    name: str
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.name, str) or not LETTER_RE.match(self.name):
            raise ValueError(f"invalid letter name: {self.name!r}")
        self._cache_hash(self.name)

    def _fields(self):
        return (self.name,)


@dataclass(frozen=True, eq=False)
class Not(Node):
    body: "Formula"
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        self._cache_hash(self.body._hash)

    def _fields(self):
        return (self.body,)


@dataclass(frozen=True, eq=False)
class And(Node):
    left: "Formula"
    right: "Formula"
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        self._cache_hash(self.left._hash, self.right._hash)

    def _fields(self):
        return (self.left, self.right)


Formula = Union[Var, Not, And]


@dataclass(frozen=True, eq=False)
class SignedFormula(Node):
    sign: Sign
    formula: Formula
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        self._cache_hash(self.sign.value, self.formula._hash)

    def _fields(self):
        return (self.sign, self.formula)

    @property
    def is_literal(self) -> bool:
        return isinstance(self.formula, Var)

    def __str__(self):
        from .parser import render

        return f"{self.sign}: {render(self.formula)}"


def T(formula: Formula) -> SignedFormula:
    return SignedFormula(Sign.T, formula)


def F(formula: Formula) -> SignedFormula:
    return SignedFormula(Sign.F, formula)


class PartialModel(Mapping):
    """Immutable, hashable mapping from letter names to booleans."""

    __slots__ = ("_items", "_hash")

    def __init__(self, assignment=()):
        items = dict(assignment)
        for name, value in items.items():
            if not isinstance(value, bool):
                raise TypeError(f"value for {name!r} must be a bool, got {value!r}")
        self._items = items
        self._hash = None

    def __getitem__(self, name):
        return self._items[name]

    def __iter__(self):
        return iter(self._items)

    def __len__(self):
        return len(self._items)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._items.items()))
        return self._hash

    def __repr__(self):
        return f"PartialModel({self.render()!r})"

    def extends(self, other: "PartialModel") -> bool:
        """True if this model agrees with ``other`` on all of ``other``'s domain."""
        return all(name in self._items and self._items[name] == value
                   for name, value in other.items())

    def sort_key(self):
        return tuple(sorted(self._items.items()))

    def render(self) -> str:
        if not self._items:
            return "(all interpretations)"
        return " ".join(f"{name}={'T' if self._items[name] else 'F'}"
                        for name in sorted(self._items))


def evaluate(formula: Formula, model: Mapping) -> bool:
    """Truth value of ``formula`` under ``model``."""
    if isinstance(formula, Var):
        try:
            return model[formula.name]
        except KeyError:
            raise MissingLetter(formula.name) from None
    if isinstance(formula, Not):
        return not evaluate(formula.body, model)
    if isinstance(formula, And):
        # both sides are evaluated so a missing letter is reported even when
        # the left conjunct is already false
        left = evaluate(formula.left, model)
        right = evaluate(formula.right, model)
        return left and right
    raise TypeError(f"not a core formula: {formula!r}")


def satisfies(model: Mapping, sf: SignedFormula) -> bool:
    return evaluate(sf.formula, model) == mean(sf.sign)


def satisfies_set(model: Mapping, gamma: Iterable[SignedFormula]) -> bool:
    # evaluate every member first so MissingLetter is not masked by an early False
    results = [satisfies(model, sf) for sf in gamma]
    return all(results)


def formula_letters(formula: Formula) -> set[str]:
    found = set()
    stack = [formula]
    while stack:
        f = stack.pop()
        if isinstance(f, Var):
            found.add(f.name)
        elif isinstance(f, Not):
            stack.append(f.body)
        else:
            stack.append(f.left)
            stack.append(f.right)
    return found


def letters_of(gamma: Iterable[SignedFormula]) -> set[str]:
    found = set()
    for sf in gamma:
        found |= formula_letters(sf.formula)
    return found


def formula_size(formula: Formula) -> int:
    """Number of connectives in ``formula``."""
    count = 0
    stack = [formula]
    while stack:
        f = stack.pop()
        if isinstance(f, Not):
            count += 1
            stack.append(f.body)
        elif isinstance(f, And):
            count += 1
            stack.append(f.left)
            stack.append(f.right)
    return count


def measure(sf: SignedFormula) -> int:
    """Termination measure: the connective count of the signed formula."""
    return formula_size(sf.formula)


def total_measure(gamma: Iterable[SignedFormula]) -> int:
    return sum(measure(sf) for sf in gamma)


def depth(formula: Formula) -> int:
    """Nesting depth; letters have depth 0."""
    if isinstance(formula, Var):
        return 0
    if isinstance(formula, Not):
        return 1 + depth(formula.body)
    return 1 + max(depth(formula.left), depth(formula.right))
