"""Execution traces of the models computation.

Three structures record a run:

* the flat trace, a sequence of worklists ("list of lists") rewritten one
  expansion at a time;
* :class:`TreeOfLists`, whose every node carries its full formula list and
  whose internal nodes are labelled with the rule and formula used;
* :class:`Tableau`, the tree of formulae, which stores at each non-root node
  only the formulae produced by the parent's used formula (the explicit
  set).  The full (implicit) set of a node is recomputed on demand.

Nodes are addressed by paths: tuples of child indices from the root, 0 being
the left successor.  Every builder asks the strategy for choices depth first,
left successor first, which is also the order in which the flat trace
processes its leftmost unfinished list; one :class:`~tableaux.engine.Manual`
choice sequence therefore drives all three structures identically.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence

from .engine import (
    BranchLast,
    ModelSet,
    Rule,
    Strategy,
    expand,
    has_complementary_pair,
    is_literal_set,
    lmods,
    rule_for,
    union,
)
from .errors import BadPath, IncompleteTableau, IncompleteTree
from .formula import And, Not, Sign, SignedFormula, opposite


def _closed(gamma):
    return has_complementary_pair(gamma)


def _finished(gamma, early_closure):
    return is_literal_set(gamma) or (early_closure and _closed(gamma))


# -- list of lists ------------------------------------------------------------


@dataclass(frozen=True)
class FlatAction:
    rule: Rule
    used: SignedFormula
    list_index: int


@dataclass(frozen=True)
class FlatTraceStep:
    worklist: tuple
    action: Optional[FlatAction] = None


def run_flat_trace(gamma: Sequence[SignedFormula], strategy: Optional[Strategy] = None,
                   early_closure: bool = False) -> list:
    """Rewrite ``[gamma]`` until every list is finished, recording each step.

    The leftmost unfinished list is always the one rewritten; an expansion
    replaces it in place by its one or two successors.
    """
    strategy = strategy or BranchLast()
    worklist = [union((), gamma)]
    steps = [FlatTraceStep(tuple(worklist))]
    while True:
        for i, current in enumerate(worklist):
            if not _finished(current, early_closure):
                break
        else:
            return steps
        index = strategy.select(current)
        expansion = expand(current, current[index])
        worklist[i:i + 1] = expansion.successors
        steps.append(FlatTraceStep(tuple(worklist), FlatAction(expansion.rule, expansion.used, i)))


def flat_trace_models(steps: Sequence[FlatTraceStep]) -> ModelSet:
    found = set()
    for final in steps[-1].worklist:
        if is_literal_set(final):
            found |= lmods(final)
        elif not _closed(final):
            raise IncompleteTree("the trace ends with an unfinished list")
    return ModelSet(found)


# -- tree of lists --------------------------------------------------------------


@dataclass(frozen=True)
class TreeOfLists:
    content: tuple
    rule: Rule = Rule.LIT
    used: Optional[SignedFormula] = None
    children: tuple = ()

    @property
    def is_leaf(self):
        return not self.children


class _Draft:
    __slots__ = ("content", "explicit", "rule", "used", "children")

    def __init__(self, content, explicit=()):
        self.content = content
        self.explicit = explicit
        self.rule = Rule.LIT
        self.used = None
        self.children = []


def _freeze(order, make):
    """Build immutable nodes from drafts listed in preorder; returns the root."""
    frozen = {}
    for draft in reversed(order):
        frozen[id(draft)] = make(draft, tuple(frozen.pop(id(c)) for c in draft.children))
    return frozen[id(order[0])]


def build_tree_of_lists(gamma: Sequence[SignedFormula], strategy: Optional[Strategy] = None,
                        early_closure: bool = False) -> TreeOfLists:
    strategy = strategy or BranchLast()
    root = _Draft(union((), gamma))
    order = []
    stack = [root]
    while stack:
        node = stack.pop()
        order.append(node)
        if _finished(node.content, early_closure):
            continue
        expansion = expand(node.content, node.content[strategy.select(node.content)])
        node.rule = expansion.rule
        node.used = expansion.used
        node.children = [_Draft(s) for s in expansion.successors]
        stack.extend(reversed(node.children))
    return _freeze(order, lambda d, kids: TreeOfLists(d.content, d.rule, d.used, kids))


def iter_nodes(tree):
    """Yield ``(path, node)`` pairs of any tree form in preorder."""
    stack = [((), tree)]
    while stack:
        path, node = stack.pop()
        yield path, node
        for i in reversed(range(len(node.children))):
            stack.append((path + (i,), node.children[i]))


def tree_leaves(t: TreeOfLists) -> list:
    return [node.content for _, node in iter_nodes(t) if not node.children]


def tree_models(t: TreeOfLists) -> ModelSet:
    """Union of the models of the leaves.

    A leaf still holding composite formulae is accepted only when it already
    contains a complementary pair (it was cut short by early closure).
    """
    found = set()
    for content in tree_leaves(t):
        if is_literal_set(content):
            found |= lmods(content)
        elif not _closed(content):
            raise IncompleteTree("a leaf still contains composite formulae")
    return ModelSet(found)


# -- tree of formulae -------------------------------------------------------


@dataclass(frozen=True)
class Tableau:
    explicit: tuple
    used: Optional[SignedFormula] = None
    children: tuple = ()

    @property
    def is_leaf(self):
        return not self.children


def extension_sets(sigma: SignedFormula) -> tuple:
    """Explicit sets of the children created when ``sigma`` is used."""
    f = sigma.formula
    if isinstance(f, And) and sigma.sign is Sign.T:
        return ((SignedFormula(Sign.T, f.left), SignedFormula(Sign.T, f.right)),)
    if isinstance(f, And):
        return ((SignedFormula(Sign.F, f.left),), (SignedFormula(Sign.F, f.right),))
    if isinstance(f, Not):
        return ((SignedFormula(opposite(sigma.sign), f.body),),)
    raise ValueError(f"{sigma} cannot be used: it is a literal")


def child_implicit(parent_implicit: Sequence[SignedFormula], used: SignedFormula,
                   explicit: Sequence[SignedFormula]) -> tuple:
    """Implicit set of a child: the parent's set minus the used formula, plus E."""
    return union([sf for sf in parent_implicit if sf != used], explicit)


def _grow(draft, strategy, early_closure, order):
    """Extend ``draft`` (whose ``content`` is its implicit set) to completion."""
    stack = [draft]
    while stack:
        node = stack.pop()
        order.append(node)
        if _finished(node.content, early_closure):
            continue
        sigma = node.content[strategy.select(node.content)]
        node.used = sigma
        node.children = [_Draft(child_implicit(node.content, sigma, e), e) for e in extension_sets(sigma)]
        stack.extend(reversed(node.children))


def _make_tableau(draft, kids):
    return Tableau(draft.explicit, draft.used, kids)


def build_tableau(gamma: Sequence[SignedFormula], strategy: Optional[Strategy] = None,
                  early_closure: bool = False) -> Tableau:
    """Build a fully extended tableau rooted at ``gamma``.

    With ``early_closure`` a branch stops as soon as its implicit set holds a
    complementary pair of literals, even if composites remain.
    """
    strategy = strategy or BranchLast()
    gamma = union((), gamma)
    order = []
    _grow(_Draft(gamma, gamma), strategy, early_closure, order)
    return _freeze(order, _make_tableau)


def node_at(t, path):
    node = t
    for depth, i in enumerate(path):
        if not isinstance(i, int) or not 0 <= i < len(node.children):
            raise BadPath(f"no child {i!r} at depth {depth} of path {tuple(path)}")
        node = node.children[i]
    return node


def implicit_set(t: Tableau, path: Sequence[int] = ()) -> tuple:
    node = t
    gamma = union((), t.explicit)
    for depth, i in enumerate(path):
        if not isinstance(i, int) or not 0 <= i < len(node.children):
            raise BadPath(f"no child {i!r} at depth {depth} of path {tuple(path)}")
        child = node.children[i]
        gamma = child_implicit(gamma, node.used, child.explicit)
        node = child
    return gamma


def iter_implicit(t: Tableau):
    """Yield ``(path, node, implicit set)`` in preorder without recomputing prefixes."""
    stack = [((), t, union((), t.explicit))]
    while stack:
        path, node, gamma = stack.pop()
        yield path, node, gamma
        for i in reversed(range(len(node.children))):
            child = node.children[i]
            stack.append((path + (i,), child, child_implicit(gamma, node.used, child.explicit)))


def leaf_paths(t) -> list:
    return [path for path, node in iter_nodes(t) if not node.children]


def branch_union_check(t: Tableau, path: Sequence[int]) -> tuple:
    """Union of the explicit sets along a branch minus the formulae used on it."""
    node = t
    collected = list(t.explicit)
    used = set()
    for depth, i in enumerate(path):
        if not 0 <= i < len(node.children):
            raise BadPath(f"no child {i!r} at depth {depth} of path {tuple(path)}")
        used.add(node.used)
        node = node.children[i]
        collected.extend(node.explicit)
    if node.children:
        raise BadPath(f"path {tuple(path)} does not end at a leaf")
    return union((), [sf for sf in collected if sf not in used])


class BranchStatus(enum.Enum):
    OPEN = "open"
    CLOSED = "closed"
    INCOMPLETE = "incomplete"


def status_of(gamma: Sequence[SignedFormula]) -> BranchStatus:
    # a complementary pair closes the branch whatever else it holds
    if _closed(gamma):
        return BranchStatus.CLOSED
    if not is_literal_set(gamma):
        return BranchStatus.INCOMPLETE
    return BranchStatus.OPEN


def branch_status(t: Tableau, path: Sequence[int]) -> BranchStatus:
    if node_at(t, path).children:
        raise BadPath(f"path {tuple(path)} does not end at a leaf")
    return status_of(implicit_set(t, path))


def tableau_models(t: Tableau) -> ModelSet:
    found = set()
    for _, node, gamma in iter_implicit(t):
        if node.children:
            continue
        status = status_of(gamma)
        if status is BranchStatus.INCOMPLETE:
            raise IncompleteTableau("a branch is not completed")
        if status is BranchStatus.OPEN:
            found |= lmods(gamma)
    return ModelSet(found)


def is_closed(t: Tableau) -> bool:
    """True if every branch is closed."""
    return all(status_of(gamma) is BranchStatus.CLOSED
               for _, node, gamma in iter_implicit(t) if not node.children)


def to_tree_of_lists(t: Tableau) -> TreeOfLists:
    order = []
    drafts = {}
    for path, node, gamma in iter_implicit(t):
        draft = _Draft(gamma)
        if node.children:
            draft.rule = rule_for(node.used)
            draft.used = node.used
        elif not is_literal_set(gamma) and not _closed(gamma):
            raise IncompleteTableau(f"leaf {path} is not completed")
        drafts[path] = draft
        if path:
            drafts[path[:-1]].children.append(draft)
        order.append(draft)
    return _freeze(order, lambda d, kids: TreeOfLists(d.content, d.rule, d.used, kids))


def same_tree(a: TreeOfLists, b: TreeOfLists) -> bool:
    """Node-for-node comparison: set-equal contents, equal labels and arity."""
    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        if (frozenset(x.content) != frozenset(y.content) or x.rule is not y.rule
                or x.used != y.used or len(x.children) != len(y.children)):
            return False
        stack.extend(zip(x.children, y.children))
    return True


# -- incremental extension, used by the stepping session --------------------


def _replace_at(t, path, new):
    if not path:
        return new
    i = path[0]
    kids = list(t.children)
    kids[i] = _replace_at(kids[i], path[1:], new)
    return Tableau(t.explicit, t.used, tuple(kids))


def extend_leaf(t: Tableau, path: Sequence[int], index: int) -> Tableau:
    """Use formula ``index`` of the leaf's implicit set; returns a new tableau."""
    leaf = node_at(t, path)
    if leaf.children:
        raise BadPath(f"path {tuple(path)} does not end at a leaf")
    gamma = implicit_set(t, path)
    if not 0 <= index < len(gamma):
        raise IndexError(f"formula index {index} out of range")
    sigma = gamma[index]
    if sigma.is_literal:
        raise ValueError(f"{sigma} is a literal and cannot be used")
    kids = tuple(Tableau(e) for e in extension_sets(sigma))
    return _replace_at(t, tuple(path), Tableau(leaf.explicit, sigma, kids))


def complete(t: Tableau, strategy: Optional[Strategy] = None, early_closure: bool = False) -> Tableau:
    """Extend every unfinished leaf of ``t`` with ``strategy``."""
    strategy = strategy or BranchLast()
    for path, node, gamma in list(iter_implicit(t)):
        if node.children or _finished(gamma, early_closure):
            continue
        order = []
        _grow(_Draft(gamma, node.explicit), strategy, early_closure, order)
        t = _replace_at(t, path, _freeze(order, _make_tableau))
    return t


# -- statistics -------------------------------------------------------------


def tree_stats(t) -> dict:
    """Node, leaf, closed-leaf and expansion counts of either tree form."""
    if isinstance(t, Tableau):
        leaves = [gamma for _, node, gamma in iter_implicit(t) if not node.children]
        nodes = sum(1 for _ in iter_nodes(t))
    else:
        leaves = tree_leaves(t)
        nodes = sum(1 for _ in iter_nodes(t))
    closed = sum(1 for gamma in leaves if _closed(gamma))
    return {
        "nodes": nodes,
        "leaves": len(leaves),
        "closed": closed,
        "expansions": nodes - len(leaves),
    }
