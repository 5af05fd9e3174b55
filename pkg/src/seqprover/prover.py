"""Backwards sequent prover over a table of goals.

A goal is a sequence of entries, each a formula tagged with its side and a
cost; cheap entries sit near the front and are reduced first.  Costs: 1 for
one-premise rules, 2 for two-premise rules, 3 for the quantifier rules that
must retain their formula, 4 for atoms.  The table is a stack: new subgoals
go on the front.
"""

from __future__ import annotations

from dataclasses import dataclass

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
    Fun,
    NameSupply,
    Param,
    Pred,
    Quant,
    Var,
    subst_bound,
    vars_in_formula,
)
from .unify import Environment, instantiate_formula, unify_atoms

LEFT = "left"
RIGHT = "right"


class NoRuleApplies(Exception):
    """The front goal holds only atoms and cannot be reduced."""


class EmptyGoalError(Exception):
    """The front goal has no formulas at all, so it can never be proved."""


@dataclass(frozen=True)
class Entry:
    cost: int
    side: str
    formula: Formula


Goal = tuple[Entry, ...]
GoalTable = tuple[Goal, ...]

_COST = {
    (LEFT, NEG): 1,
    (RIGHT, NEG): 1,
    (LEFT, CONJ): 1,
    (RIGHT, CONJ): 2,
    (LEFT, DISJ): 2,
    (RIGHT, DISJ): 1,
    (LEFT, IMP): 2,
    (RIGHT, IMP): 1,
    (LEFT, IFF): 2,
    (RIGHT, IFF): 2,
    (LEFT, ALL): 3,
    (RIGHT, ALL): 1,
    (LEFT, EXISTS): 1,
    (RIGHT, EXISTS): 3,
}


def cost_of(side: str, fm: Formula) -> int:
    if isinstance(fm, Conn):
        return _COST[(side, fm.op)]
    if isinstance(fm, Quant):
        return _COST[(side, fm.kind)]
    return 4


def make_entry(side: str, fm: Formula) -> Entry:
    return Entry(cost_of(side, fm), side, fm)


def insert_early(entry: Entry, goal: Goal) -> Goal:
    """Insert before the first entry of equal or greater cost."""
    for i, e in enumerate(goal):
        if entry.cost <= e.cost:
            return goal[:i] + (entry,) + goal[i:]
    return goal + (entry,)


def insert_late(entry: Entry, goal: Goal) -> Goal:
    """Insert after all entries of equal cost."""
    for i, e in enumerate(goal):
        if entry.cost < e.cost:
            return goal[:i] + (entry,) + goal[i:]
    return goal + (entry,)


def extend_goal(goal: Goal, pairs: list[tuple[str, Formula]]) -> Goal:
    for side, fm in pairs:
        goal = insert_early(make_entry(side, fm), goal)
    return goal


def make_goal(lefts, rights) -> Goal:
    """Build a fresh goal; inputs are each reversed so that repeated front
    insertion restores their order."""
    pairs = [(LEFT, a) for a in reversed(tuple(lefts))]
    pairs += [(RIGHT, b) for b in reversed(tuple(rights))]
    return extend_goal((), pairs)


def split_goal(goal: Goal) -> tuple[tuple[Formula, ...], tuple[Formula, ...]]:
    lefts = tuple(e.formula for e in goal if e.side == LEFT)
    rights = tuple(e.formula for e in goal if e.side == RIGHT)
    return lefts, rights


def solve_goal(goal: Goal) -> tuple[Formula, Environment] | None:
    """Find a left atom unifiable with a right atom; the returned formula is
    the left atom, reported as the reason the goal closed."""
    lefts = [e.formula for e in goal if e.side == LEFT and isinstance(e.formula, Pred)]
    rights = [e.formula for e in goal if e.side == RIGHT and isinstance(e.formula, Pred)]
    for a in lefts:
        for b in rights:
            env = unify_atoms(a, b)
            if env is not None:
                return a, env
    return None


def _instantiate_goal(env: Environment, goal: Goal) -> Goal:
    if not env:
        return goal
    return tuple(Entry(e.cost, e.side, instantiate_formula(env, e.formula)) for e in goal)


def insert_goals(
    goals: list[Goal], closed: tuple[Formula, ...], tab: GoalTable
) -> tuple[tuple[Formula, ...], GoalTable]:
    """Push unsolved goals onto the table front; a goal that closes applies
    its unifier to everything still pending.  closed collects the unifying
    formulas, newest first."""
    for i, goal in enumerate(goals):
        solved = solve_goal(goal)
        if solved is not None:
            fm, env = solved
            rest = [_instantiate_goal(env, g) for g in goals[i + 1 :]]
            closed = (instantiate_formula(env, fm),) + tuple(
                instantiate_formula(env, c) for c in closed
            )
            tab = tuple(_instantiate_goal(env, g) for g in tab)
            return insert_goals(rest, closed, tab)
        tab = (goal,) + tab
    return closed, tab


def _vars_in_goal(goal: Goal, acc: tuple[str, ...]) -> tuple[str, ...]:
    for e in goal:
        acc = vars_in_formula(e.formula, acc)
    return acc


def reduce_goal(goal: Goal, names: NameSupply) -> tuple[list[Goal], str, NameSupply]:
    """Apply the one rule chosen by the front entry of the goal.

    Returns the subgoals, the rule name, and the advanced name supply.
    Raises NoRuleApplies when the front entry is an atom.
    """
    head, rest = goal[0], goal[1:]
    side, fm = head.side, head.formula

    if isinstance(fm, Conn):
        op = fm.op
        if op == NEG:
            (a,) = fm.args
            flipped = RIGHT if side == LEFT else LEFT
            subgoals = [extend_goal(rest, [(flipped, a)])]
        else:
            a, b = fm.args
            if op == CONJ:
                if side == LEFT:
                    subgoals = [extend_goal(rest, [(LEFT, a), (LEFT, b)])]
                else:
                    subgoals = [
                        extend_goal(rest, [(RIGHT, a)]),
                        extend_goal(rest, [(RIGHT, b)]),
                    ]
            elif op == DISJ:
                if side == LEFT:
                    subgoals = [
                        extend_goal(rest, [(LEFT, a)]),
                        extend_goal(rest, [(LEFT, b)]),
                    ]
                else:
                    subgoals = [extend_goal(rest, [(RIGHT, a), (RIGHT, b)])]
            elif op == IMP:
                if side == LEFT:
                    subgoals = [
                        extend_goal(rest, [(RIGHT, a)]),
                        extend_goal(rest, [(LEFT, b)]),
                    ]
                else:
                    subgoals = [extend_goal(rest, [(LEFT, a), (RIGHT, b)])]
            else:  # IFF
                if side == LEFT:
                    subgoals = [
                        extend_goal(rest, [(LEFT, a), (LEFT, b)]),
                        extend_goal(rest, [(RIGHT, a), (RIGHT, b)]),
                    ]
                else:
                    subgoals = [
                        extend_goal(rest, [(LEFT, a), (RIGHT, b)]),
                        extend_goal(rest, [(RIGHT, a), (LEFT, b)]),
                    ]
        return subgoals, f"{op}:{side}", names

    if isinstance(fm, Quant):
        body = fm.body
        rule = f"{fm.kind}:{side}"
        fresh, names = names.fresh()
        if (fm.kind, side) in ((ALL, RIGHT), (EXISTS, LEFT)):
            # eigenvariable: the new parameter must avoid every variable
            # free in the goal, including those of the body itself
            deps = _vars_in_goal(rest, vars_in_formula(body, ()))
            inst = subst_bound(body, Param(fresh, deps))
            return [extend_goal(rest, [(side, inst)])], rule, names
        # ALL:left / EXISTS:right: instantiate with a fresh variable and
        # retain the quantified formula for later reuse, behind its peers
        inst = subst_bound(body, Var(fresh))
        subgoal = insert_early(
            make_entry(side, inst), insert_late(head, rest)
        )
        return [subgoal], rule, names

    raise NoRuleApplies()


@dataclass(frozen=True)
class TraceEvent:
    """One reduction: the rule used, the number of goals set aside at that
    moment (used for indentation), and the formulas that closed subgoals,
    oldest first."""

    rule: str
    indent: int
    closed: tuple[Formula, ...]


def proof_step(
    tab: GoalTable, names: NameSupply
) -> tuple[TraceEvent | None, GoalTable, NameSupply]:
    if not tab:
        return None, tab, names
    goal, rest = tab[0], tab[1:]
    if not goal:
        raise EmptyGoalError("Empty goal")
    subgoals, rule, names = reduce_goal(goal, names)
    closed, tab = insert_goals(subgoals, (), rest)
    event = TraceEvent(rule, len(rest), tuple(reversed(closed)))
    return event, tab, names


PROVED = "proved"
OPEN = "open"
STUCK = "stuck"


def proof_steps(
    tab: GoalTable, names: NameSupply, limit: int | None = None
) -> tuple[list[TraceEvent], GoalTable, NameSupply, str]:
    """Run proof_step until the table empties, the step limit runs out, or
    no rule applies to the front goal."""
    events: list[TraceEvent] = []
    remaining = limit
    while tab:
        if remaining is not None and remaining <= 0:
            return events, tab, names, OPEN
        try:
            event, tab, names = proof_step(tab, names)
        except NoRuleApplies:
            return events, tab, names, STUCK
        if event is not None:
            events.append(event)
        if remaining is not None:
            remaining -= 1
    return events, tab, names, PROVED


def initial_table(lefts, rights) -> GoalTable:
    """Table for a fresh sequent; a goal that is already basic closes at
    once and is dropped."""
    _, tab = insert_goals([make_goal(lefts, rights)], (), ())
    return tab


def params_in_table(tab: GoalTable) -> tuple[Param, ...]:
    """Every parameter occurring in the table, oldest first."""

    def ins(p: Param, ps: tuple[Param, ...]) -> tuple[Param, ...]:
        return ps if p in ps else (p,) + ps

    def from_term(t, ps):
        if isinstance(t, Param):
            return ins(t, ps)
        if isinstance(t, Fun):
            for a in t.args:
                ps = from_term(a, ps)
        return ps

    def from_formula(fm, ps):
        if isinstance(fm, Pred):
            for t in fm.args:
                ps = from_term(t, ps)
            return ps
        if isinstance(fm, Conn):
            for a in fm.args:
                ps = from_formula(a, ps)
            return ps
        return from_formula(fm.body, ps)

    ps: tuple[Param, ...] = ()
    for goal in tab:
        for e in goal:
            ps = from_formula(e.formula, ps)
    return ps
