"""Computing the set of all models of a finite set of signed formulae.

Sets of signed formulae are duplicate-free tuples.  A union appends the
formulae not already present at the tail, so every run is deterministic.
The recursion over the decomposition rules runs on an explicit work stack,
so deep inputs cannot overflow the interpreter stack.

Answers are ``frozenset``\\s of :class:`~tableaux.formula.PartialModel`.
Members may overlap; :func:`subsume` removes members that extend others.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional, Sequence

from .errors import (
    DomainExceedsLetters,
    ManualChoiceInvalid,
    NotComposite,
    NotLiteralSet,
    NotMember,
)
from .formula import (
    And,
    Formula,
    Not,
    PartialModel,
    Sign,
    SignedFormula,
    mean,
    opposite,
)

ModelSet = frozenset


class Rule(enum.Enum):
    """Names of the decomposition equations, valued by their JSON labels."""

    T_AND = "T&"
    F_AND = "F&"
    NEG = "~"
    LIT = "lit"

    @property
    def title(self):
        return {"T&": "ReqTAnd", "F&": "ReqFAnd", "~": "ReqNeg", "lit": "ReqLit"}[self.value]


def rule_for(sf: SignedFormula) -> Rule:
    f = sf.formula
    if isinstance(f, Not):
        return Rule.NEG
    if isinstance(f, And):
        return Rule.T_AND if sf.sign is Sign.T else Rule.F_AND
    return Rule.LIT


@dataclass(frozen=True)
class Expansion:
    used: SignedFormula
    rule: Rule
    # the newly produced formulae of each successor, in equation order
    explicit: tuple
    successors: tuple


def union(gamma: Sequence[SignedFormula], new: Iterable[SignedFormula]) -> tuple:
    out = list(gamma)
    seen = set(out)
    for sf in new:
        if sf not in seen:
            seen.add(sf)
            out.append(sf)
    return tuple(out)


def split(gamma: Sequence[SignedFormula], sigma: SignedFormula) -> tuple:
    """Return ``gamma`` without ``sigma``."""
    if sigma not in gamma:
        raise NotMember(f"{sigma} is not a member of the set")
    return tuple(sf for sf in gamma if sf != sigma)


def is_literal_set(gamma: Iterable[SignedFormula]) -> bool:
    return all(sf.is_literal for sf in gamma)


def has_complementary_pair(gamma: Iterable[SignedFormula]) -> bool:
    seen = {}
    for sf in gamma:
        if not sf.is_literal:
            continue
        name = sf.formula.name
        if seen.setdefault(name, sf.sign) is not sf.sign:
            return True
    return False


def lmods(gamma: Sequence[SignedFormula]) -> ModelSet:
    """Models of a set of literals: empty if it is contradictory, else one partial model."""
    if not is_literal_set(gamma):
        raise NotLiteralSet("lmods needs a set of literals")
    if has_complementary_pair(gamma):
        return ModelSet()
    return ModelSet([PartialModel({sf.formula.name: mean(sf.sign) for sf in gamma})])


def decompose(sigma: SignedFormula) -> tuple[Rule, tuple]:
    """The formulae each successor gains when ``sigma`` is used."""
    f = sigma.formula
    if isinstance(f, Not):
        return Rule.NEG, ((SignedFormula(opposite(sigma.sign), f.body),),)
    if isinstance(f, And):
        if sigma.sign is Sign.T:
            return Rule.T_AND, ((SignedFormula(Sign.T, f.left), SignedFormula(Sign.T, f.right)),)
        return Rule.F_AND, ((SignedFormula(Sign.F, f.left),), (SignedFormula(Sign.F, f.right),))
    raise NotComposite(f"{sigma} is a literal")


def expand(gamma: Sequence[SignedFormula], sigma: SignedFormula) -> Expansion:
    if sigma.is_literal:
        raise NotComposite(f"{sigma} is a literal")
    delta = split(gamma, sigma)
    rule, explicit = decompose(sigma)
    return Expansion(sigma, rule, explicit, tuple(union(delta, e) for e in explicit))


# -- selection strategies ---------------------------------------------------
#
# A strategy maps a set to the index of the composite formula to use next, or
# None when the set is all literals.  Manual and RandomChoice are stateful and
# consume/record choices in the order the builders ask for them (depth first,
# left successor first).


class Strategy:
    name = "strategy"

    def select(self, gamma: Sequence[SignedFormula]) -> Optional[int]:
        raise NotImplementedError


class FirstComposite(Strategy):
    name = "first"

    def select(self, gamma):
        for i, sf in enumerate(gamma):
            if not sf.is_literal:
                return i
        return None


class BranchLast(Strategy):
    """Use every non-branching formula before any false conjunction."""

    name = "branch-last"

    def select(self, gamma):
        branching = None
        for i, sf in enumerate(gamma):
            if sf.is_literal:
                continue
            if rule_for(sf) is Rule.F_AND:
                if branching is None:
                    branching = i
            else:
                return i
        return branching


class Manual(Strategy):
    """Replays an externally supplied sequence of indices."""

    name = "manual"

    def __init__(self, choices: Iterable[int]):
        self.choices = list(choices)
        self.position = 0

    def select(self, gamma):
        if is_literal_set(gamma):
            return None
        if self.position >= len(self.choices):
            raise ManualChoiceInvalid(f"choice sequence exhausted after {self.position} choices")
        index = self.choices[self.position]
        if not isinstance(index, int) or not 0 <= index < len(gamma):
            raise ManualChoiceInvalid(f"choice {self.position}: index {index!r} out of range")
        if gamma[index].is_literal:
            raise ManualChoiceInvalid(f"choice {self.position}: {gamma[index]} is a literal")
        self.position += 1
        return index

    @property
    def exhausted(self):
        return self.position >= len(self.choices)


class RandomChoice(Strategy):
    """Uniformly random composite; the picks are kept in ``record`` for replay."""

    name = "random"

    def __init__(self, seed=None):
        self.rng = random.Random(seed)
        self.record = []

    def select(self, gamma):
        candidates = [i for i, sf in enumerate(gamma) if not sf.is_literal]
        if not candidates:
            return None
        index = self.rng.choice(candidates)
        self.record.append(index)
        return index


STRATEGIES = {"branch-last": BranchLast, "first": FirstComposite}


def make_strategy(name: str, choices: Iterable[int] = ()) -> Strategy:
    if name == "manual":
        return Manual(choices)
    try:
        return STRATEGIES[name]()
    except KeyError:
        raise ValueError(f"unknown strategy {name!r}") from None


def select_formula(gamma: Sequence[SignedFormula], strategy: Optional[Strategy] = None) -> Optional[SignedFormula]:
    strategy = strategy or BranchLast()
    index = strategy.select(gamma)
    return None if index is None else gamma[index]


# -- the recursion ----------------------------------------------------------


def models(gamma: Sequence[SignedFormula], strategy: Optional[Strategy] = None,
           early_closure: bool = False) -> ModelSet:
    """All models of ``gamma``, as a set of partial models.

    With ``early_closure`` a set already holding a complementary pair of
    literals is abandoned without decomposing its remaining formulae.
    """
    strategy = strategy or BranchLast()
    gamma = union((), gamma)
    found = set()
    stack = [gamma]
    while stack:
        current = stack.pop()
        if early_closure and has_complementary_pair(current):
            continue
        index = strategy.select(current)
        if index is None:
            found |= lmods(current)
            continue
        expansion = expand(current, current[index])
        # pushed in reverse so the left successor is explored first
        stack.extend(reversed(expansion.successors))
    return ModelSet(found)


def models_of_formulas(formulas: Iterable[SignedFormula], **kwargs) -> ModelSet:
    return models(tuple(formulas), **kwargs)


def expand_partial_models(ms: Iterable[PartialModel], letters: Iterable[str]) -> frozenset:
    """All total assignments over ``letters`` that extend some member of ``ms``."""
    letters = sorted(set(letters))
    out = set()
    for pm in ms:
        extra = set(pm) - set(letters)
        if extra:
            raise DomainExceedsLetters(f"model assigns letters outside the set: {sorted(extra)}")
        free = [name for name in letters if name not in pm]
        for values in product((False, True), repeat=len(free)):
            assignment = dict(pm)
            assignment.update(zip(free, values))
            out.add(PartialModel(assignment))
    return frozenset(out)


def is_satisfiable(gamma, **kwargs) -> bool:
    return bool(models(gamma, **kwargs))


def is_valid(alpha: Formula, **kwargs) -> bool:
    return not models((SignedFormula(Sign.F, alpha),), **kwargs)


def entails(gamma, alpha: Formula, **kwargs) -> bool:
    return not models(union(gamma, [SignedFormula(Sign.F, alpha)]), **kwargs)


def countermodels(gamma, alpha: Formula, **kwargs) -> ModelSet:
    """Models of ``gamma`` in which ``alpha`` is false."""
    return models(union(gamma, [SignedFormula(Sign.F, alpha)]), **kwargs)


def subsume(ms: Iterable[PartialModel]) -> ModelSet:
    """Drop every member that strictly extends another member."""
    members = list(set(ms))
    keep = [pm for pm in members
            if not any(len(other) < len(pm) and pm.extends(other) for other in members)]
    return ModelSet(keep)


def sorted_models(ms: Iterable[PartialModel]) -> list:
    return sorted(ms, key=lambda pm: pm.sort_key())
