"""First-order terms and formulas.

Bound variables are de Bruijn indices, so formulas that differ only in the
names written after their quantifiers are structurally equal.  Substitution
into a quantified body never needs to rename anything.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

NEG = "~"
CONJ = "&"
DISJ = "|"
IMP = "-->"
IFF = "<->"
CONNECTIVES = (NEG, CONJ, DISJ, IMP, IFF)

ALL = "ALL"
EXISTS = "EXISTS"
QUANTIFIERS = (ALL, EXISTS)


@dataclass(frozen=True)
class Var:
    """Metavariable, printed with a leading question mark."""

    name: str


@dataclass(frozen=True)
class Param:
    """Parameter (eigenvariable); deps lists the metavariables it must avoid."""

    name: str
    deps: tuple[str, ...]


@dataclass(frozen=True)
class Bound:
    """de Bruijn index referring to the nth enclosing quantifier."""

    index: int


@dataclass(frozen=True)
class Fun:
    """Function application; a constant is a Fun with no arguments."""

    name: str
    args: tuple["Term", ...]


Term = Union[Var, Param, Bound, Fun]


@dataclass(frozen=True)
class Pred:
    name: str
    args: tuple[Term, ...]


@dataclass(frozen=True)
class Conn:
    """Connective application: op is one of ~ & | --> <->."""

    op: str
    args: tuple["Formula", ...]


@dataclass(frozen=True)
class Quant:
    """Quantified formula.  The bound-variable name is display only and is
    excluded from equality."""

    kind: str
    var: str = field(compare=False)
    body: "Formula" = None  # type: ignore[assignment]


Formula = Union[Pred, Conn, Quant]


def _replace_in_term(t: Term, old: Term, new: Term) -> Term:
    if t == old:
        return new
    if isinstance(t, Fun):
        return Fun(t.name, tuple(_replace_in_term(a, old, new) for a in t.args))
    return t


def _map_formula_depth(fm: Formula, f, depth: int) -> Formula:
    """Apply f(term, depth) to every term of fm; depth counts enclosing
    quantifiers."""
    if isinstance(fm, Pred):
        return Pred(fm.name, tuple(f(t, depth) for t in fm.args))
    if isinstance(fm, Conn):
        return Conn(fm.op, tuple(_map_formula_depth(a, f, depth) for a in fm.args))
    return Quant(fm.kind, fm.var, _map_formula_depth(fm.body, f, depth + 1))


def abstract(fm: Formula, t: Term) -> Formula:
    """Replace occurrences of t in fm by the bound variable of an enclosing
    quantifier about to be wrapped around fm."""

    def go(u: Term, depth: int) -> Term:
        return _replace_in_term(u, t, Bound(depth))

    return _map_formula_depth(fm, go, 0)


def subst_bound(fm: Formula, t: Term) -> Formula:
    """Replace the outermost bound variable of a quantifier body by t.

    t contains no bound variables of its own, so no index shifting is
    needed when it lands under an inner quantifier.
    """

    def go(u: Term, depth: int) -> Term:
        return _replace_in_term(u, Bound(depth), t)

    return _map_formula_depth(fm, go, 0)


def replace_term(fm: Formula, old: Term, new: Term) -> Formula:
    """Replace old by new throughout fm; no index adjustment is required
    because old and new never contain bound variables."""

    def go(u: Term, depth: int) -> Term:
        return _replace_in_term(u, old, new)

    return _map_formula_depth(fm, go, 0)


def _ins(x: str, xs: tuple[str, ...]) -> tuple[str, ...]:
    return xs if x in xs else (x,) + xs


def vars_in_term(t: Term, acc: tuple[str, ...]) -> tuple[str, ...]:
    """Accumulate the metavariables occurring in t onto acc, newest first.

    A parameter's dependency list is a side condition, not a set of
    occurrences, so parameters contribute nothing here.
    """
    if isinstance(t, Var):
        return _ins(t.name, acc)
    if isinstance(t, Fun):
        for arg in t.args:
            acc = vars_in_term(arg, acc)
        return acc
    return acc


def vars_in_formula(fm: Formula, acc: tuple[str, ...]) -> tuple[str, ...]:
    if isinstance(fm, Pred):
        for arg in fm.args:
            acc = vars_in_term(arg, acc)
        return acc
    if isinstance(fm, Conn):
        for a in fm.args:
            acc = vars_in_formula(a, acc)
        return acc
    return vars_in_formula(fm.body, acc)


_LETTERS = "abcdefghijklmnopqrstuvwxyz"


def _varname(n: int) -> str:
    s = _LETTERS[n % 26]
    while n >= 26:
        n //= 26
        s = _LETTERS[n % 26] + s
    return s


@dataclass(frozen=True)
class NameSupply:
    """Deterministic source of fresh names: a, b, ..., z, ba, bb, ..."""

    count: int = 0

    def fresh(self) -> tuple[str, "NameSupply"]:
        return _varname(self.count), NameSupply(self.count + 1)
