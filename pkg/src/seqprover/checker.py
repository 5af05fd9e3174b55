"""Proof checking, independent of the prover and of unification.

Every node of a tree is revalidated from scratch: its sequent must be the
premise sequents transformed by exactly the rule named, compared side by
side as multisets.  Sequents and witnesses must be fully concrete: no
metavariables, no dangling bound-variable indices.
"""

from __future__ import annotations

from collections import Counter

from .prooftree import BASIC, ProofTree
from .terms import (
    ALL,
    EXISTS,
    Bound,
    Conn,
    Formula,
    Fun,
    Param,
    Pred,
    Quant,
    Term,
    Var,
    subst_bound,
)

LEFT = "left"
RIGHT = "right"


class CheckFailure(Exception):
    """The tree is not a proof; the message says where it broke."""


# rule name -> (connective, principal side, per-premise additions);
# each addition is (side, argument index of the principal formula)
_CONN_RULES: dict[str, tuple[str, str, list[list[tuple[str, int]]]]] = {
    "~:left": ("~", LEFT, [[(RIGHT, 0)]]),
    "~:right": ("~", RIGHT, [[(LEFT, 0)]]),
    "&:left": ("&", LEFT, [[(LEFT, 0), (LEFT, 1)]]),
    "&:right": ("&", RIGHT, [[(RIGHT, 0)], [(RIGHT, 1)]]),
    "|:left": ("|", LEFT, [[(LEFT, 0)], [(LEFT, 1)]]),
    "|:right": ("|", RIGHT, [[(RIGHT, 0), (RIGHT, 1)]]),
    "-->:left": ("-->", LEFT, [[(RIGHT, 0)], [(LEFT, 1)]]),
    "-->:right": ("-->", RIGHT, [[(LEFT, 0), (RIGHT, 1)]]),
    "<->:left": ("<->", LEFT, [[(LEFT, 0), (LEFT, 1)], [(RIGHT, 0), (RIGHT, 1)]]),
    "<->:right": ("<->", RIGHT, [[(LEFT, 0), (RIGHT, 1)], [(RIGHT, 0), (LEFT, 1)]]),
}

# rule name -> (quantifier, principal side, eigenvariable rule)
_QUANT_RULES: dict[str, tuple[str, str, bool]] = {
    "ALL:right": (ALL, RIGHT, True),
    "EXISTS:left": (EXISTS, LEFT, True),
    "ALL:left": (ALL, LEFT, False),
    "EXISTS:right": (EXISTS, RIGHT, False),
}


def _check_term(t: Term, depth: int, where: str) -> None:
    if isinstance(t, Var):
        raise CheckFailure(f"metavariable ?{t.name} in {where}")
    if isinstance(t, Bound):
        if t.index >= depth:
            raise CheckFailure(f"dangling bound index {t.index} in {where}")
        return
    if isinstance(t, Fun):
        for a in t.args:
            _check_term(a, depth, where)


def _check_formula(fm: Formula, depth: int, where: str) -> None:
    if isinstance(fm, Pred):
        for t in fm.args:
            _check_term(t, depth, where)
    elif isinstance(fm, Conn):
        for a in fm.args:
            _check_formula(a, depth, where)
    else:
        _check_formula(fm.body, depth + 1, where)


def _param_names_in_term(t: Term, acc: set[str]) -> None:
    if isinstance(t, Param):
        acc.add(t.name)
    elif isinstance(t, Fun):
        for a in t.args:
            _param_names_in_term(a, acc)


def _sequent_str(node: ProofTree) -> str:
    from .syntax import format_sequent

    return format_sequent(node.lefts, node.rights, show_deps=True)


def _expect(cond: bool, msg: str) -> None:
    if not cond:
        raise CheckFailure(msg)


def _match_premise(premise: ProofTree, lefts: Counter, rights: Counter) -> bool:
    return Counter(premise.lefts) == lefts and Counter(premise.rights) == rights


def _removed(base: tuple[Formula, ...], fm: Formula) -> Counter:
    c = Counter(base)
    c[fm] -= 1
    if c[fm] == 0:
        del c[fm]
    return c


def _added(c: Counter, fms: list[Formula]) -> Counter:
    c = Counter(c)
    for fm in fms:
        c[fm] += 1
    return c


def check_proof(tree: ProofTree) -> None:
    """Validate every node; raises CheckFailure on the first bad one."""
    where = _sequent_str(tree)
    for fm in tree.lefts + tree.rights:
        _check_formula(fm, 0, where)

    rule = tree.rule
    if rule == BASIC:
        _expect(not tree.premises, f"basic node with premises at {where}")
        _expect(tree.witness is None, f"basic node with a witness at {where}")
        common = set(tree.lefts) & set(tree.rights)
        _expect(bool(common), f"no shared formula at basic node {where}")
    elif rule in _CONN_RULES:
        op, side, additions = _CONN_RULES[rule]
        _expect(tree.witness is None, f"{rule} takes no witness, at {where}")
        _expect(
            len(tree.premises) == len(additions),
            f"{rule} needs {len(additions)} premises, at {where}",
        )
        _check_rule_fit(tree, op, side, additions, where)
    elif rule in _QUANT_RULES:
        kind, side, eigen = _QUANT_RULES[rule]
        _expect(len(tree.premises) == 1, f"{rule} needs one premise, at {where}")
        _expect(tree.witness is not None, f"{rule} needs a witness, at {where}")
        _check_quant_fit(tree, kind, side, eigen, where)
    else:
        raise CheckFailure(f"unknown rule {rule!r} at {where}")

    for p in tree.premises:
        check_proof(p)


def _candidates(fms: tuple[Formula, ...], want) -> list[Formula]:
    seen: list[Formula] = []
    for fm in fms:
        if want(fm) and fm not in seen:
            seen.append(fm)
    return seen


def _check_rule_fit(tree, op, side, additions, where) -> None:
    principal_pool = tree.lefts if side == LEFT else tree.rights
    for c in _candidates(
        principal_pool, lambda f: isinstance(f, Conn) and f.op == op
    ):
        if _fits_conn(tree, c, side, additions):
            return
    raise CheckFailure(f"premises do not fit {tree.rule} at {where}")


def _fits_conn(tree, c: Conn, side, additions) -> bool:
    base_l = _removed(tree.lefts, c) if side == LEFT else Counter(tree.lefts)
    base_r = _removed(tree.rights, c) if side == RIGHT else Counter(tree.rights)
    for premise, adds in zip(tree.premises, additions):
        want_l, want_r = Counter(base_l), Counter(base_r)
        for add_side, idx in adds:
            if add_side == LEFT:
                want_l[c.args[idx]] += 1
            else:
                want_r[c.args[idx]] += 1
        if not _match_premise(premise, want_l, want_r):
            return False
    return True


def _check_quant_fit(tree, kind, side, eigen, where) -> None:
    w = tree.witness
    if eigen:
        _expect(isinstance(w, Param), f"{tree.rule} witness must be a parameter, at {where}")
        conclusion_params: set[str] = set()
        _collect_params(tree.lefts + tree.rights, conclusion_params)
        _expect(
            w.name not in conclusion_params,
            f"parameter {w.name} already occurs in the conclusion, at {where}",
        )
    else:
        _check_term(w, 0, f"witness of {tree.rule} at {where}")

    pool = tree.lefts if side == LEFT else tree.rights
    (premise,) = tree.premises
    for c in _candidates(pool, lambda f: isinstance(f, Quant) and f.kind == kind):
        inst = subst_bound(c.body, w)
        if eigen:
            base_l = _removed(tree.lefts, c) if side == LEFT else Counter(tree.lefts)
            base_r = _removed(tree.rights, c) if side == RIGHT else Counter(tree.rights)
        else:
            # the quantified formula stays available in the premise
            base_l, base_r = Counter(tree.lefts), Counter(tree.rights)
        if side == LEFT:
            base_l = _added(base_l, [inst])
        else:
            base_r = _added(base_r, [inst])
        if _match_premise(premise, base_l, base_r):
            return
    raise CheckFailure(f"premise does not fit {tree.rule} at {where}")


def _collect_params(fms: tuple[Formula, ...], acc: set[str]) -> None:
    for fm in fms:
        if isinstance(fm, Pred):
            for t in fm.args:
                _param_names_in_term(t, acc)
        elif isinstance(fm, Conn):
            _collect_params(fm.args, acc)
        else:
            _collect_params((fm.body,), acc)
