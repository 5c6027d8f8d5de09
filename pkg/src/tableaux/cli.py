"""Command-line front end.

Exit codes: 0 for an affirmative answer (models exist, SAT, VALID,
ENTAILED) or plain success, 1 for a negative one, 2 for bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from . import engine, export, trace
from .engine import make_strategy, sorted_models, subsume
from .errors import TableauError
from .formula import letters_of
from .generate import random_corpus
from .oracle import DEFAULT_MAX_LETTERS, check_equivalence
from .parser import Problem, parse_core, parse_problem, render_signed

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2


@dataclass
class RunConfig:
    strategy: str = "branch-last"
    choices: list = field(default_factory=list)
    early_closure: bool = False
    full_expansion: bool = False
    subsume: bool = False
    format: str = "text"
    tree_of_lists: bool = False
    seed: int = 42
    max_letters: int = DEFAULT_MAX_LETTERS
    input_path: Optional[str] = None
    inline: list = field(default_factory=list)

    def make_strategy(self):
        return make_strategy(self.strategy, self.choices)

    @property
    def tree_early_closure(self):
        # trees are fully expanded unless early closure is asked for and
        # --full-expansion does not override it
        return self.early_closure and not self.full_expansion


class InputError(Exception):
    pass


def load_problem(config: RunConfig, required=True) -> Problem:
    if config.input_path is not None and config.inline:
        raise InputError("give either a problem file or --assume formulas, not both")
    if config.input_path is not None:
        if config.input_path == "-":
            text = sys.stdin.read()
        else:
            try:
                text = Path(config.input_path).read_text(encoding="utf-8")
            except OSError as exc:
                raise InputError(f"cannot read {config.input_path}: {exc.strerror}") from None
        problem = parse_problem(text)
    elif config.inline:
        problem = parse_problem("\n".join(config.inline))
    elif required:
        raise InputError("no input: give a problem file or --assume formulas")
    else:
        problem = Problem()
    for warning in problem.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    return problem


def compute_models(gamma, config: RunConfig):
    ms = engine.models(gamma, config.make_strategy(), early_closure=config.early_closure)
    return subsume(ms) if config.subsume else ms


def format_models(ms) -> list:
    if not ms:
        return ["UNSATISFIABLE"]
    return [pm.render() for pm in sorted_models(ms)]


def cmd_models(config: RunConfig, out=sys.stdout) -> int:
    problem = load_problem(config)
    ms = compute_models(problem.assumptions, config)
    if config.format == "json":
        json.dump({"satisfiable": bool(ms),
                   "models": [dict(sorted(pm.items())) for pm in sorted_models(ms)]},
                  out, indent=2)
        out.write("\n")
    else:
        for line in format_models(ms):
            print(line, file=out)
    return EXIT_YES if ms else EXIT_NO


def cmd_sat(config: RunConfig, out=sys.stdout) -> int:
    problem = load_problem(config)
    sat = engine.is_satisfiable(problem.assumptions, strategy=config.make_strategy(),
                                early_closure=config.early_closure)
    print("SAT" if sat else "UNSAT", file=out)
    return EXIT_YES if sat else EXIT_NO


def _countermodel_line(ms):
    return "countermodel: " + sorted_models(subsume(ms))[0].render()


def cmd_valid(config: RunConfig, goal: str, out=sys.stdout) -> int:
    alpha = parse_core(goal)
    counter = engine.countermodels((), alpha, strategy=config.make_strategy(),
                                   early_closure=config.early_closure)
    if not counter:
        print("VALID", file=out)
        return EXIT_YES
    print("INVALID", file=out)
    print(_countermodel_line(counter), file=out)
    return EXIT_NO


def cmd_entails(config: RunConfig, goal: str, out=sys.stdout) -> int:
    problem = load_problem(config, required=False)
    alpha = parse_core(goal)
    counter = engine.countermodels(problem.assumptions, alpha, strategy=config.make_strategy(),
                                   early_closure=config.early_closure)
    if not counter:
        print("ENTAILED", file=out)
        return EXIT_YES
    print("NOT ENTAILED", file=out)
    print(_countermodel_line(counter), file=out)
    return EXIT_NO


def build_tree(gamma, config: RunConfig):
    strategy = config.make_strategy()
    if config.tree_of_lists:
        return trace.build_tree_of_lists(gamma, strategy, early_closure=config.tree_early_closure)
    return trace.build_tableau(gamma, strategy, early_closure=config.tree_early_closure)


def tree_models(tree):
    if isinstance(tree, trace.Tableau):
        return trace.tableau_models(tree)
    return trace.tree_models(tree)


def emit_tree(tree, ms, fmt, out):
    if fmt == "json":
        out.write(export.to_json(tree, ms) + "\n")
    elif fmt == "dot":
        out.write(export.to_dot(tree))
    else:
        out.write(export.render_ascii(tree))
        out.write("models:\n")
        for line in format_models(ms):
            out.write(f"  {line}\n")


def cmd_tableau(config: RunConfig, out=sys.stdout) -> int:
    problem = load_problem(config)
    tree = build_tree(problem.assumptions, config)
    ms = tree_models(tree)
    if config.subsume:
        ms = subsume(ms)
    emit_tree(tree, ms, config.format, out)
    return EXIT_YES


# -- stepping session -------------------------------------------------------

STEP_HELP = """commands:
  use L.F   use formula F of leaf L (both numbered from 1)
  auto      finish every leaf with the default strategy
  show      redraw the current leaves
  undo      take back the last step
  export [text|json|dot]   print the tableau
  quit      leave the session"""


class StepSession:
    """State of an interactive tableau construction.

    Leaves are numbered from 1 in left-to-right order; the formulae of a
    leaf's implicit set are numbered from 1 as listed.
    """

    def __init__(self, gamma, early_closure=False, out=sys.stdout):
        self.tableau = trace.Tableau(engine.union((), gamma))
        self.history = []
        self.early_closure = early_closure
        self.out = out

    def say(self, text=""):
        print(text, file=self.out)

    def leaves(self):
        return [(path, gamma) for path, node, gamma in trace.iter_implicit(self.tableau)
                if not node.children]

    def finished(self, gamma):
        return trace._finished(gamma, self.early_closure)

    @property
    def done(self):
        return all(self.finished(gamma) for _, gamma in self.leaves())

    def show(self):
        for n, (path, gamma) in enumerate(self.leaves(), start=1):
            status = trace.status_of(gamma)
            tag = "" if not self.finished(gamma) else f"  ({status.value})"
            self.say(f"leaf {n}{tag}")
            for i, sf in enumerate(gamma, start=1):
                mark = "   " if sf.is_literal else f"{i:>2}."
                self.say(f"  {mark} {render_signed(sf)}")
        if self.done:
            self.report()

    def report(self):
        ms = trace.tableau_models(self.tableau) if not self.early_closure else self._models_early()
        self.say("complete. models:")
        for line in format_models(ms):
            self.say(f"  {line}")
        self.say("type 'export text|json|dot' to print the tableau, or 'quit'")

    def _models_early(self):
        found = set()
        for _, gamma in self.leaves():
            if engine.is_literal_set(gamma) and not engine.has_complementary_pair(gamma):
                found |= engine.lmods(gamma)
        return engine.ModelSet(found)

    def use(self, arg):
        try:
            leaf_text, formula_text = arg.split(".")
            leaf_no, formula_no = int(leaf_text), int(formula_text)
        except ValueError:
            self.say("error: expected 'use LEAF.FORMULA', e.g. 'use 1.2'")
            return
        leaves = self.leaves()
        if not 1 <= leaf_no <= len(leaves):
            self.say(f"error: there is no leaf {leaf_no}")
            return
        path, gamma = leaves[leaf_no - 1]
        if self.finished(gamma):
            self.say(f"error: leaf {leaf_no} is already finished")
            return
        if not 1 <= formula_no <= len(gamma):
            self.say(f"error: leaf {leaf_no} has no formula {formula_no}")
            return
        sigma = gamma[formula_no - 1]
        if sigma.is_literal:
            self.say(f"error: {render_signed(sigma)} is a literal; nothing to apply")
            return
        # the step must agree with the engine's own expansion of this set
        expansion = engine.expand(gamma, sigma)
        extended = trace.extend_leaf(self.tableau, path, formula_no - 1)
        produced = [trace.implicit_set(extended, path + (i,)) for i in range(len(expansion.successors))]
        assert produced == list(expansion.successors)
        self.history.append(self.tableau)
        self.tableau = extended
        self.say(f"applied {expansion.rule.title} to {render_signed(sigma)}")
        self.show()

    def auto(self):
        self.history.append(self.tableau)
        self.tableau = trace.complete(self.tableau, engine.BranchLast(), early_closure=self.early_closure)
        self.show()

    def undo(self):
        if not self.history:
            self.say("error: nothing to undo")
            return
        self.tableau = self.history.pop()
        self.show()

    def export(self, fmt):
        fmt = fmt or "text"
        if fmt not in ("text", "json", "dot"):
            self.say("error: export format must be text, json or dot")
            return
        ms = self._models_early() if self.early_closure else None
        if ms is None:
            try:
                ms = trace.tableau_models(self.tableau)
            except TableauError:
                ms = None
        if fmt == "json":
            self.out.write(export.to_json(self.tableau, ms) + "\n")
        elif fmt == "dot":
            self.out.write(export.to_dot(self.tableau))
        else:
            self.out.write(export.render_ascii(self.tableau))

    def handle(self, line) -> bool:
        """Run one command; False means the session is over."""
        words = line.split()
        if not words:
            return True
        cmd, args = words[0], words[1:]
        if cmd in ("quit", "exit", "q"):
            return False
        if cmd == "use" and len(args) == 1:
            self.use(args[0])
        elif cmd == "auto":
            self.auto()
        elif cmd == "show":
            self.show()
        elif cmd == "undo":
            self.undo()
        elif cmd == "export":
            self.export(args[0] if args else None)
        elif cmd == "help":
            self.say(STEP_HELP)
        else:
            self.say(f"error: unknown command {line.strip()!r}; type 'help'")
        return True


def cmd_step(config: RunConfig, inp=sys.stdin, out=sys.stdout) -> int:
    problem = load_problem(config)
    session = StepSession(problem.assumptions, early_closure=config.tree_early_closure, out=out)
    interactive = inp.isatty()
    if interactive:
        session.say(STEP_HELP)
    session.show()
    while True:
        if interactive:
            out.write("> ")
            out.flush()
        line = inp.readline()
        if not line:
            break
        if not interactive:
            session.say(f"> {line.strip()}")
        if not session.handle(line):
            break
    return EXIT_YES


# -- benchmark --------------------------------------------------------------

BENCH_STRATEGIES = ("branch-last", "first")
BENCH_FIELDS = ("nodes", "leaves", "closed", "expansions")


def load_corpus(path: str) -> list:
    p = Path(path)
    if p.is_dir():
        files = sorted(f for f in p.iterdir() if f.is_file() and not f.name.startswith("."))
    elif p.is_file():
        files = [p]
    else:
        raise InputError(f"no such corpus: {path}")
    corpus = []
    for f in files:
        try:
            corpus.append(list(parse_problem(f.read_text(encoding="utf-8")).assumptions))
        except (TableauError, UnicodeDecodeError) as exc:
            raise InputError(f"{f}: {exc}") from None
    return corpus


def bench_table(corpus, config: RunConfig) -> list:
    rows = []
    if not corpus:
        return rows
    for name in BENCH_STRATEGIES:
        totals = dict.fromkeys(BENCH_FIELDS, 0)
        for gamma in corpus:
            tree = trace.build_tableau(gamma, make_strategy(name), early_closure=config.tree_early_closure)
            for key, value in trace.tree_stats(tree).items():
                totals[key] += value
        rows.append({"strategy": name, "problems": len(corpus), **totals})
    return rows


def cmd_bench(config: RunConfig, corpus_path=None, count=100, depth=4, letters=3, out=sys.stdout) -> int:
    if corpus_path is not None:
        corpus = load_corpus(corpus_path)
    else:
        corpus = random_corpus(config.seed, count, depth, letters)
    rows = bench_table(corpus, config)
    if config.format == "json":
        json.dump(rows, out, indent=2)
        out.write("\n")
        return EXIT_YES
    header = ("strategy", "problems") + BENCH_FIELDS
    widths = [max([len(h)] + [len(str(r[h])) for r in rows]) for h in header]
    print("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip(), file=out)
    for r in rows:
        print("  ".join(str(r[h]).ljust(w) for h, w in zip(header, widths)).rstrip(), file=out)
    return EXIT_YES


def cmd_check(config: RunConfig, out=sys.stdout) -> int:
    """Cross-check the engine against the truth table on the given problem."""
    problem = load_problem(config)
    gamma = list(problem.assumptions)
    n = len(letters_of(gamma))
    ok = check_equivalence(gamma, config.make_strategy(), max_letters=config.max_letters,
                           early_closure=config.early_closure)
    print(f"{'AGREE' if ok else 'DISAGREE'} ({n} letters)", file=out)
    return EXIT_YES if ok else EXIT_NO


# -- argument parsing -------------------------------------------------------


def _common_options():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--strategy", choices=("branch-last", "first", "manual"), default="branch-last")
    common.add_argument("--choices", default="",
                        help="comma separated formula indices (from 0) for --strategy manual")
    common.add_argument("--early-closure", action="store_true",
                        help="abandon a branch as soon as it holds a complementary pair")
    common.add_argument("--full-expansion", action="store_true",
                        help="expand trees to literal leaves even with --early-closure")
    common.add_argument("--subsume", action="store_true", help="drop models that extend other models")
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")
    common.add_argument("--tree-of-lists", action="store_true",
                        help="draw the tree of lists instead of the tree of formulae")
    common.add_argument("--seed", type=int, default=42)
    common.add_argument("--max-letters", type=int, default=DEFAULT_MAX_LETTERS)
    return common


def _input_options(p, optional_file=True):
    p.add_argument("file", nargs="?" if optional_file else None,
                   help="problem file, one 'T: formula' or 'F: formula' per line ('-' for stdin)")
    p.add_argument("-a", "--assume", action="append", default=[], metavar="SIGNED",
                   help="inline signed formula such as 'T: p & ~q'; repeatable")


def build_parser():
    common = _common_options()
    parser = argparse.ArgumentParser(prog="tableaux",
                                     description="Enumerate the models of signed propositional formulae.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, text in (("models", "print every model"),
                       ("sat", "decide satisfiability"),
                       ("tableau", "print the tableau"),
                       ("step", "build a tableau by hand"),
                       ("check", "compare the engine with the truth table")):
        _input_options(sub.add_parser(name, parents=[common], help=text))
    p = sub.add_parser("valid", parents=[common], help="decide validity of a formula")
    p.add_argument("goal")
    p = sub.add_parser("entails", parents=[common], help="decide whether assumptions entail a goal")
    p.add_argument("goal")
    _input_options(p)
    p = sub.add_parser("bench", parents=[common], help="compare strategies on a corpus")
    p.add_argument("corpus", nargs="?", help="problem file or directory of problem files")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--depth", type=int, default=4)
    p.add_argument("--letters", type=int, default=3)
    return parser


def config_from_args(args) -> RunConfig:
    choices = []
    if args.choices:
        try:
            choices = [int(c) for c in args.choices.replace(" ", "").split(",") if c]
        except ValueError:
            raise InputError(f"bad --choices value {args.choices!r}") from None
    return RunConfig(
        strategy=args.strategy,
        choices=choices,
        early_closure=args.early_closure,
        full_expansion=args.full_expansion,
        subsume=args.subsume,
        format=args.format,
        tree_of_lists=args.tree_of_lists,
        seed=args.seed,
        max_letters=args.max_letters,
        input_path=getattr(args, "file", None),
        inline=getattr(args, "assume", []),
    )


def main(argv=None, out=None, inp=None) -> int:
    out = out or sys.stdout
    inp = inp or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_YES
    try:
        config = config_from_args(args)
        if args.command == "models":
            return cmd_models(config, out)
        if args.command == "sat":
            return cmd_sat(config, out)
        if args.command == "valid":
            return cmd_valid(config, args.goal, out)
        if args.command == "entails":
            return cmd_entails(config, args.goal, out)
        if args.command == "tableau":
            return cmd_tableau(config, out)
        if args.command == "step":
            return cmd_step(config, inp, out)
        if args.command == "check":
            return cmd_check(config, out)
        return cmd_bench(config, args.corpus, args.count, args.depth, args.letters, out)
    except (InputError, TableauError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
