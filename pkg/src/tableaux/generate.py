"""Seeded random and exhaustive formula generators for tests and benchmarks."""

import random
import string
from itertools import combinations

from .formula import And, Not, Sign, SignedFormula, Var
from .parser import Iff, Implies, Or


def letter_names(n):
    if n <= 26:
        return list(string.ascii_lowercase[15:] + string.ascii_lowercase[:15])[:n]
    return [f"p{i}" for i in range(n)]


def random_formula(rng, depth, letters, leaf_bias=0.25):
    """A core formula of depth at most ``depth``."""
    if depth <= 0 or rng.random() < leaf_bias:
        return Var(rng.choice(letters))
    if rng.random() < 0.35:
        return Not(random_formula(rng, depth - 1, letters, leaf_bias))
    return And(random_formula(rng, depth - 1, letters, leaf_bias),
               random_formula(rng, depth - 1, letters, leaf_bias))


def random_signed(rng, depth, letters, leaf_bias=0.25):
    return SignedFormula(rng.choice((Sign.T, Sign.F)), random_formula(rng, depth, letters, leaf_bias))


def random_gamma(rng, depth, letters, max_size=3, min_size=0):
    """A duplicate-free list of signed formulae."""
    size = rng.randint(min_size, max_size)
    out = []
    for _ in range(size):
        sf = random_signed(rng, rng.randint(0, depth), letters)
        if sf not in out:
            out.append(sf)
    return out


def random_corpus(seed, count, depth, n_letters, max_size=3):
    rng = random.Random(seed)
    letters = letter_names(n_letters)
    return [random_gamma(rng, depth, letters, max_size=max_size, min_size=1) for _ in range(count)]


def all_formulas(depth, letters):
    """Every core formula of depth at most ``depth``."""
    level = [Var(name) for name in letters]
    for _ in range(depth):
        level = ([Var(name) for name in letters]
                 + [Not(f) for f in level]
                 + [And(a, b) for a in level for b in level])
    return level


def all_gammas(depth, letters, max_size=2):
    """Every set of at most ``max_size`` distinct signed formulae."""
    signed = [SignedFormula(s, f) for f in all_formulas(depth, letters) for s in (Sign.T, Sign.F)]
    for size in range(max_size + 1):
        for combo in combinations(signed, size):
            yield list(combo)


def all_surface(depth, letters):
    """Every surface formula of depth at most ``depth``."""
    level = [Var(name) for name in letters]
    for _ in range(depth):
        binary = [cls(a, b) for cls in (And, Or, Implies, Iff) for a in level for b in level]
        level = [Var(name) for name in letters] + [Not(f) for f in level] + binary
    return level


def random_surface(rng, depth, letters):
    if depth <= 0 or rng.random() < 0.2:
        return Var(rng.choice(letters))
    if rng.random() < 0.2:
        return Not(random_surface(rng, depth - 1, letters))
    cls = rng.choice((And, Or, Implies, Iff))
    return cls(random_surface(rng, depth - 1, letters), random_surface(rng, depth - 1, letters))
