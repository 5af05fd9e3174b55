"""Depth-first proof search with backtracking and explicit proof output.

Unlike the step engine, which commits to every unification it finds, this
search treats each closable atom pair as a choice point and backtracks on
failure.  The choice of which formula to reduce stays committed: the
propositional rules all keep the full context, so trying them in cost order
loses nothing.  The budget bounds the rounds of blanket quantifier
expansion, each of which instantiates every top-level ALL on the left and
EXISTS on the right with a fresh variable.
"""

from __future__ import annotations

from typing import Iterator

from .prooftree import BASIC, ProofTree, ground_tree, instantiate_tree
from .prover import LEFT, RIGHT, cost_of
from .terms import (
    ALL,
    CONJ,
    DISJ,
    EXISTS,
    IFF,
    IMP,
    NEG,
    Conn,
    Formula,
    NameSupply,
    Param,
    Pred,
    Quant,
    Var,
    subst_bound,
    vars_in_formula,
)
from .unify import Environment, instantiate_formula, unify_atoms

Outcome = tuple[ProofTree, Environment, NameSupply]


def _live_vars(lefts, rights, env: Environment) -> tuple[str, ...]:
    acc: tuple[str, ...] = ()
    for fm in lefts + rights:
        acc = vars_in_formula(instantiate_formula(env, fm), acc)
    return acc


def _pick(lefts, rights):
    for cost_class in (1, 2):
        for side, fms in ((LEFT, lefts), (RIGHT, rights)):
            for i, fm in enumerate(fms):
                if cost_of(side, fm) == cost_class:
                    return side, i, fm
    return None


def _without(fms: tuple[Formula, ...], i: int) -> tuple[Formula, ...]:
    return fms[:i] + fms[i + 1 :]


def _attempts(
    lefts: tuple[Formula, ...],
    rights: tuple[Formula, ...],
    budget: int,
    env: Environment,
    names: NameSupply,
) -> Iterator[Outcome]:
    for la in lefts:
        if not isinstance(la, Pred):
            continue
        for ra in rights:
            if not isinstance(ra, Pred):
                continue
            closed = unify_atoms(la, ra, env)
            if closed is not None:
                yield ProofTree(BASIC, lefts, rights), closed, names

    pick = _pick(lefts, rights)
    if pick is not None:
        yield from _reduce(pick, lefts, rights, budget, env, names)
        return
    if budget > 0:
        yield from _blanket(lefts, rights, budget, env, names)


def _conclude(rule, lefts, rights, specs, budget, env, names, witness=None):
    """Prove each premise sequent in turn, threading bindings and names, and
    wrap the results in a node for this rule."""
    for trees, env2, names2 in _conj(specs, budget, env, names):
        yield ProofTree(rule, lefts, rights, trees, witness), env2, names2


def _conj(specs, budget, env, names):
    if not specs:
        yield (), env, names
        return
    (l, r), rest = specs[0], specs[1:]
    for tree, env1, names1 in _attempts(l, r, budget, env, names):
        for trees, env2, names2 in _conj(rest, budget, env1, names1):
            yield (tree,) + trees, env2, names2


def _reduce(pick, lefts, rights, budget, env, names) -> Iterator[Outcome]:
    side, i, fm = pick
    if isinstance(fm, Quant):
        # cost-1 quantifier rules: ALL:right and EXISTS:left
        fresh, names = names.fresh()
        param = Param(fresh, _live_vars(lefts, rights, env))
        inst = subst_bound(fm.body, param)
        if side == LEFT:
            specs = [(_without(lefts, i) + (inst,), rights)]
        else:
            specs = [(lefts, _without(rights, i) + (inst,))]
        rule = f"{fm.kind}:{side}"
        yield from _conclude(rule, lefts, rights, specs, budget, env, names, param)
        return

    op = fm.op
    a = fm.args[0]
    b = fm.args[1] if len(fm.args) > 1 else None
    l0 = _without(lefts, i) if side == LEFT else lefts
    r0 = _without(rights, i) if side == RIGHT else rights
    if op == NEG:
        specs = [(l0 + (a,), r0) if side == RIGHT else (l0, r0 + (a,))]
    elif op == CONJ:
        specs = [(l0 + (a, b), r0)] if side == LEFT else [(l0, r0 + (a,)), (l0, r0 + (b,))]
    elif op == DISJ:
        specs = [(l0 + (a,), r0), (l0 + (b,), r0)] if side == LEFT else [(l0, r0 + (a, b))]
    elif op == IMP:
        specs = [(l0, r0 + (a,)), (l0 + (b,), r0)] if side == LEFT else [(l0 + (a,), r0 + (b,))]
    else:  # IFF
        if side == LEFT:
            specs = [(l0 + (a, b), r0), (l0, r0 + (a, b))]
        else:
            specs = [(l0 + (a,), r0 + (b,)), (l0 + (b,), r0 + (a,))]
    yield from _conclude(f"{op}:{side}", lefts, rights, specs, budget, env, names)


def _blanket(lefts, rights, budget, env, names) -> Iterator[Outcome]:
    chain = []  # (rule, conclusion lefts, conclusion rights, witness)
    cur_l, cur_r = lefts, rights
    for fm in lefts:
        if isinstance(fm, Quant) and fm.kind == ALL:
            fresh, names = names.fresh()
            chain.append(("ALL:left", cur_l, cur_r, Var(fresh)))
            cur_l = cur_l + (subst_bound(fm.body, Var(fresh)),)
    for fm in rights:
        if isinstance(fm, Quant) and fm.kind == EXISTS:
            fresh, names = names.fresh()
            chain.append(("EXISTS:right", cur_l, cur_r, Var(fresh)))
            cur_r = cur_r + (subst_bound(fm.body, Var(fresh)),)
    if not chain:
        return
    for tree, env2, names2 in _attempts(cur_l, cur_r, budget - 1, env, names):
        for rule, cl, cr, w in reversed(chain):
            tree = ProofTree(rule, cl, cr, (tree,), w)
        yield tree, env2, names2


def prove_bounded(lefts, rights, budget: int = 0) -> ProofTree | None:
    """Search with a fixed quantifier budget; the returned tree is fully
    instantiated and self-contained."""
    lefts, rights = tuple(lefts), tuple(rights)
    for tree, env, _ in _attempts(lefts, rights, budget, Environment(), NameSupply()):
        return ground_tree(instantiate_tree(env, tree))
    return None


def prove(lefts, rights, max_budget: int = 8) -> ProofTree | None:
    """Iterative deepening over the quantifier budget."""
    for budget in range(max_budget + 1):
        tree = prove_bounded(lefts, rights, budget)
        if tree is not None:
            return tree
    return None
