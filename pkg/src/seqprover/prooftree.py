"""Explicit proof trees and their text form.

A tree node carries the rule name, the full sequent it concludes, the
premise subtrees, and for quantifier rules the witness term.  The text form
is a parenthesized prefix notation:

    tree    = "(" rule "[" fmlist "|-" fmlist "]" witness? tree* ")"
    fmlist  = formula (";" formula)*  or empty
    witness = "{" term "}"

Formulas serialize parameters as name[?a,?b]; a bare name would read back
as a constant and the eigenvariable condition could no longer be checked.
"""

from __future__ import annotations

from dataclasses import dataclass

from .syntax import Parser, SyntaxError_, format_formula, format_term, scan
from .terms import Conn, Formula, Fun, Param, Pred, Quant, Term, Var
from .unify import Environment, instantiate_formula, instantiate_term

BASIC = "basic"


@dataclass(frozen=True)
class ProofTree:
    rule: str
    lefts: tuple[Formula, ...]
    rights: tuple[Formula, ...]
    premises: tuple["ProofTree", ...] = ()
    witness: Term | None = None


def format_tree(tree: ProofTree, indent: int = 0) -> str:
    pad = "  " * indent
    lefts = "; ".join(format_formula(a, show_deps=True) for a in tree.lefts)
    rights = "; ".join(format_formula(b, show_deps=True) for b in tree.rights)
    head = f"{pad}({tree.rule} [{lefts} |- {rights}]"
    if tree.witness is not None:
        head += " {" + format_term(tree.witness, show_deps=True) + "}"
    if not tree.premises:
        return head + ")"
    lines = [head]
    for p in tree.premises:
        lines.append(format_tree(p, indent + 1))
    return "\n".join(lines) + ")"


def _parse_tree(p: Parser) -> ProofTree:
    p.expect_key("(")
    label = []
    while not p.at_key("["):
        label.append(p.next().text)
    if not label:
        raise SyntaxError_("missing rule name")
    rule = "".join(label)
    p.expect_key("[")
    lefts = p.parse_formula_list(";")
    p.parse_turnstile()
    rights = p.parse_formula_list(";")
    p.expect_key("]")
    witness = None
    if p.at_key("{"):
        p.next()
        witness = p.parse_term()
        p.expect_key("}")
    premises = []
    while p.at_key("("):
        premises.append(_parse_tree(p))
    p.expect_key(")")
    return ProofTree(rule, lefts, rights, tuple(premises), witness)


def parse_tree(text: str) -> ProofTree:
    p = Parser(scan(text), allow_params=True)
    tree = _parse_tree(p)
    if not p.at_end():
        raise SyntaxError_(f"leftover input at {p.peek().text!r}")
    return tree


def instantiate_tree(env: Environment, tree: ProofTree) -> ProofTree:
    if not env:
        return tree
    return ProofTree(
        tree.rule,
        tuple(instantiate_formula(env, a) for a in tree.lefts),
        tuple(instantiate_formula(env, b) for b in tree.rights),
        tuple(instantiate_tree(env, p) for p in tree.premises),
        None if tree.witness is None else instantiate_term(env, tree.witness),
    )


def _ground_term(t: Term) -> Term:
    if isinstance(t, Var):
        return Fun(t.name, ())
    if isinstance(t, Param):
        return Param(t.name, ())
    if isinstance(t, Fun):
        return Fun(t.name, tuple(_ground_term(a) for a in t.args))
    return t


def _ground_formula(fm: Formula) -> Formula:
    if isinstance(fm, Pred):
        return Pred(fm.name, tuple(_ground_term(t) for t in fm.args))
    if isinstance(fm, Conn):
        return Conn(fm.op, tuple(_ground_formula(a) for a in fm.args))
    return Quant(fm.kind, fm.var, _ground_formula(fm.body))


def ground_tree(tree: ProofTree) -> ProofTree:
    """Turn leftover metavariables into constants of the same name and drop
    parameter dependency lists; a finished proof has no live variables for
    the dependencies to constrain."""
    return ProofTree(
        tree.rule,
        tuple(_ground_formula(a) for a in tree.lefts),
        tuple(_ground_formula(b) for b in tree.rights),
        tuple(ground_tree(p) for p in tree.premises),
        None if tree.witness is None else _ground_term(tree.witness),
    )
