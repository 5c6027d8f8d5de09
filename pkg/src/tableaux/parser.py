"""Concrete syntax: formula strings, problem files and rendering.

Grammar, loosest binding first::

    iff   := imp ('<->' iff)?          right associative
    imp   := or ('->' imp)?            right associative
    or    := and ('|' and)*            left associative
    and   := unary ('&' unary)*        left associative
    unary := '~' unary | atom
    atom  := LETTER | '(' iff ')'

Surface connectives (``|``, ``->``, ``<->``) are removed by :func:`desugar`;
the rest of the package only sees ``Var``, ``Not`` and ``And``.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from typing import Optional, Union

from .errors import FormulaSyntaxError, MissingSign
from .formula import And, Formula, Not, Sign, SignedFormula, Var, Node

log = logging.getLogger(__name__)


class _Binary(Node):
    __slots__ = ()

    def __post_init__(self):
        self._cache_hash(self.left._hash, self.right._hash)

    def _fields(self):
        return (self.left, self.right)


@dataclass(frozen=True, eq=False)
class Or(_Binary):
    left: "SurfaceFormula"
    right: "SurfaceFormula"
    _hash: int = field(init=False, repr=False, compare=False)


@dataclass(frozen=True, eq=False)
class Implies(_Binary):
    left: "SurfaceFormula"
    right: "SurfaceFormula"
    _hash: int = field(init=False, repr=False, compare=False)


@dataclass(frozen=True, eq=False)
class Iff(_Binary):
    left: "SurfaceFormula"
    right: "SurfaceFormula"
    _hash: int = field(init=False, repr=False, compare=False)


# Var, Not and And double as surface nodes.
SurfaceFormula = Union[Var, Not, And, Or, Implies, Iff]

_TOKEN_RE = re.compile(r"\s*(?:(<->)|(->)|([~&|()])|([A-Za-z][A-Za-z0-9_]*))")


def _tokenize(text):
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", pos,
                                     "a letter, '~', '(' or a connective")
        kind = m.lastindex
        value = m.group(kind)
        start = m.start(kind)
        tokens.append(("id" if kind == 4 else value, value, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, expected):
        kind, value, pos = self.peek()
        found = "end of input" if kind == "end" else repr(value)
        raise FormulaSyntaxError(f"unexpected {found}", pos, expected)

    def parse(self):
        result = self.iff()
        if self.peek()[0] != "end":
            self.fail("a connective or end of input")
        return result

    def iff(self):
        left = self.imp()
        if self.peek()[0] == "<->":
            self.advance()
            return Iff(left, self.iff())
        return left

    def imp(self):
        left = self.disj()
        if self.peek()[0] == "->":
            self.advance()
            return Implies(left, self.imp())
        return left

    def disj(self):
        left = self.conj()
        while self.peek()[0] == "|":
            self.advance()
            left = Or(left, self.conj())
        return left

    def conj(self):
        left = self.unary()
        while self.peek()[0] == "&":
            self.advance()
            left = And(left, self.unary())
        return left

    def unary(self):
        if self.peek()[0] == "~":
            self.advance()
            return Not(self.unary())
        return self.atom()

    def atom(self):
        kind, value, _ = self.peek()
        if kind == "id":
            self.advance()
            return Var(value)
        if kind == "(":
            self.advance()
            inner = self.iff()
            if self.peek()[0] != ")":
                self.fail("')'")
            self.advance()
            return inner
        self.fail("a letter, '~' or '('")


def parse_formula(text: str) -> SurfaceFormula:
    """Parse a formula string into a surface syntax tree."""
    return _Parser(text).parse()


def desugar(sf: SurfaceFormula) -> Formula:
    """Rewrite surface connectives in terms of ``~`` and ``&``."""
    if isinstance(sf, Var):
        return sf
    if isinstance(sf, Not):
        return Not(desugar(sf.body))
    if isinstance(sf, And):
        return And(desugar(sf.left), desugar(sf.right))
    a, b = desugar(sf.left), desugar(sf.right)
    if isinstance(sf, Or):
        return Not(And(Not(a), Not(b)))
    if isinstance(sf, Implies):
        return Not(And(a, Not(b)))
    if isinstance(sf, Iff):
        return And(Not(And(a, Not(b))), Not(And(b, Not(a))))
    raise TypeError(f"not a surface formula: {sf!r}")


def parse_core(text: str) -> Formula:
    return desugar(parse_formula(text))


def surface_value(sf: SurfaceFormula, assignment) -> bool:
    """Standard two-valued semantics of a surface formula."""
    if isinstance(sf, Var):
        return assignment[sf.name]
    if isinstance(sf, Not):
        return not surface_value(sf.body, assignment)
    a = surface_value(sf.left, assignment)
    b = surface_value(sf.right, assignment)
    if isinstance(sf, And):
        return a and b
    if isinstance(sf, Or):
        return a or b
    if isinstance(sf, Implies):
        return (not a) or b
    return a == b


def render(f: Formula) -> str:
    """Render a core formula with the fewest parentheses that parse back to it."""
    if isinstance(f, Var):
        return f.name
    if isinstance(f, Not):
        body = render(f.body)
        if isinstance(f.body, And):
            body = f"({body})"
        return "~" + body
    left = render(f.left)
    right = render(f.right)
    # '&' is left associative, so only a conjunction on the right needs parentheses
    if isinstance(f.right, And):
        right = f"({right})"
    return f"{left} & {right}"


def render_signed(sf: SignedFormula) -> str:
    return f"{sf.sign}: {render(sf.formula)}"


_SIGN_RE = re.compile(r"\s*([TF])\s*:")


def parse_signed(text: str, line: Optional[int] = None) -> SignedFormula:
    """Parse ``"T: formula"`` or ``"F: formula"``."""
    m = _SIGN_RE.match(text)
    if m is None:
        raise MissingSign(line if line is not None else 1)
    offset = m.end()
    try:
        formula = parse_core(text[offset:])
    except FormulaSyntaxError as exc:
        raise FormulaSyntaxError(exc.message, exc.position + offset, exc.expected, line) from None
    return SignedFormula(Sign(m.group(1)), formula)


@dataclass
class Problem:
    assumptions: tuple = ()
    name: Optional[str] = None
    warnings: list = field(default_factory=list, compare=False)

    def __iter__(self):
        return iter(self.assumptions)

    def __len__(self):
        return len(self.assumptions)


def parse_problem(text: str) -> Problem:
    """Parse a problem file: one signed formula per line, ``#`` comments.

    A leading ``# name: ...`` comment sets the problem name.  Duplicate
    assumptions are dropped with a logged warning.
    """
    if text.startswith("\ufeff"):
        text = text[1:]
    assumptions = []
    seen = set()
    name = None
    warnings = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            m = re.match(r"#\s*name\s*:\s*(.*)", stripped)
            if m and name is None and not assumptions:
                name = m.group(1).strip() or None
            continue
        sf = parse_signed(raw, line=lineno)
        if sf in seen:
            msg = f"line {lineno}: duplicate assumption {render_signed(sf)!r} dropped"
            log.warning(msg)
            warnings.append(msg)
            continue
        seen.add(sf)
        assumptions.append(sf)
    return Problem(tuple(assumptions), name, warnings)
