"""Tactics: lazy, possibly multi-outcome proof state transformers.

A tactic maps a state to an iterator of successor states.  Yielding nothing
is failure; laziness keeps combinators cheap when only the first outcome is
wanted.  Combinators never inspect states, so they work over any state type;
the tests exercise them over plain integers as well as proof states.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, TypeVar

from .prover import (
    GoalTable,
    NoRuleApplies,
    proof_step,
)
from .terms import NameSupply

S = TypeVar("S")
Tactic = Callable[[S], Iterator[S]]


@dataclass(frozen=True)
class ProofState:
    """What a proof tactic transforms: the goal table plus the name supply,
    so fresh names stay deterministic under backtracking."""

    table: GoalTable
    names: NameSupply = NameSupply()

    @property
    def finished(self) -> bool:
        return not self.table


def engine_step_tactic(state: ProofState) -> Iterator[ProofState]:
    """One step of the cost-ordered engine; fails on a finished state and
    when no rule applies."""
    if not state.table:
        return
    try:
        _, tab, names = proof_step(state.table, state.names)
    except NoRuleApplies:
        return
    yield ProofState(tab, names)


def all_tac(state: S) -> Iterator[S]:
    yield state


def no_tac(state: S) -> Iterator[S]:
    return
    yield  # makes this a generator


def then_tac(t1: Tactic, t2: Tactic) -> Tactic:
    def run(state):
        for s1 in t1(state):
            yield from t2(s1)

    return run


def orelse_tac(t1: Tactic, t2: Tactic) -> Tactic:
    """t1 if it has any outcome at all, otherwise t2."""

    def run(state):
        it = iter(t1(state))
        try:
            first = next(it)
        except StopIteration:
            yield from t2(state)
            return
        yield first
        yield from it

    return run


def append_tac(t1: Tactic, t2: Tactic) -> Tactic:
    """All outcomes of t1, then all outcomes of t2."""

    def run(state):
        yield from t1(state)
        yield from t2(state)

    return run


def try_tac(t: Tactic) -> Tactic:
    return orelse_tac(t, all_tac)


def repeat_tac(t: Tactic) -> Tactic:
    """Apply t as often as it keeps succeeding; outcomes that went deepest
    come first, and the unchanged state comes last."""

    def run(state):
        return orelse_tac(then_tac(t, run), all_tac)(state)

    return run


def depth_first(t: Tactic, success: Callable[[S], bool]) -> Tactic:
    """Search by iterated t for states satisfying success; a hit is yielded
    and not expanded further."""

    def run(state):
        if success(state):
            yield state
            return
        yield from then_tac(t, run)(state)

    return run


def solve_tactic() -> Tactic:
    """Depth-first engine search for a finished proof state."""
    return depth_first(engine_step_tactic, lambda s: s.finished)
