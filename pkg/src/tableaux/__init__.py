"""Model enumeration for signed propositional formulae by analytic tableaux."""

from .engine import (
    BranchLast,
    FirstComposite,
    Manual,
    RandomChoice,
    Rule,
    entails,
    expand,
    expand_partial_models,
    is_satisfiable,
    is_valid,
    lmods,
    models,
    select_formula,
    split,
    subsume,
)
from .export import from_json, render_ascii, to_dict, to_dot, to_json
from .formula import (
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
from .oracle import check_equivalence, truth_table_models
from .parser import desugar, parse_core, parse_formula, parse_problem, render
from .trace import (
    Tableau,
    TreeOfLists,
    branch_status,
    branch_union_check,
    build_tableau,
    build_tree_of_lists,
    implicit_set,
    run_flat_trace,
    tableau_models,
    to_tree_of_lists,
    tree_models,
)

__version__ = "0.1.0"
