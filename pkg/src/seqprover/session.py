"""Interactive proving sessions and their exact display format.

All output is returned as strings so the command line, the tests, and any
embedding can print or inspect transcripts identically.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import search as search_mod
from .checker import CheckFailure, check_proof
from .prooftree import ProofTree, format_tree
from .prover import (
    EmptyGoalError,
    GoalTable,
    STUCK,
    TraceEvent,
    initial_table,
    params_in_table,
    proof_steps,
    split_goal,
)
from .syntax import SyntaxError_, format_formula, format_sequent, parse_sequent
from .terms import Formula, NameSupply

STUCK_MESSAGE = "**No proof rules applicable**"
FINISHED_MESSAGE = "No more goals: proof finished"


def format_goal(goal) -> str:
    lefts, rights = split_goal(goal)
    return format_sequent(lefts, rights)


def format_trace_line(event: TraceEvent) -> str:
    line = " " * event.indent + event.rule
    for fm in event.closed:
        line += "  " + format_formula(fm)
    return line


def format_table(tab: GoalTable) -> str:
    if not tab:
        return FINISHED_MESSAGE
    lines = [""]
    for goal in tab:
        lines.append(format_goal(goal))
        lines.append("")
    if len(tab) != 1:
        lines.append(f"{len(tab)} goals")
    params = params_in_table(tab)
    if params:
        lines.append("Param" + " " * 10 + "Not allowed in")
        for p in params:
            deps = "(" + ",".join("?" + d for d in p.deps) + ")" if p.deps else ""
            lines.append(p.name + " " * 10 + deps)
        lines.append("")
    return "\n".join(lines)


class SessionError(Exception):
    pass


@dataclass
class Session:
    """Holds the goal table between commands, like a small proof shell."""

    table: GoalTable = ()
    names: NameSupply = NameSupply()
    lefts: tuple[Formula, ...] = ()
    rights: tuple[Formula, ...] = ()
    last_tree: ProofTree | None = field(default=None, repr=False)

    def goal(self, text: str) -> str:
        """Read a sequent (or a lone formula to prove) and reset the table."""
        self.lefts, self.rights = parse_sequent(text)
        self.names = NameSupply()
        self.table = initial_table(self.lefts, self.rights)
        return format_table(self.table)

    def step(self, n: int = 1) -> str:
        return self._advance(max(n, 0))

    def run(self) -> str:
        return self._advance(None)

    def _advance(self, limit: int | None) -> str:
        try:
            events, self.table, self.names, status = proof_steps(
                self.table, self.names, limit
            )
        except EmptyGoalError:
            raise SessionError("Empty goal")
        lines = [format_trace_line(e) for e in events]
        if status == STUCK:
            lines.append("")
            lines.append(STUCK_MESSAGE)
            lines.append("")
        lines.append(format_table(self.table))
        return "\n".join(lines)

    def expect_fail(self, n: int, text: str) -> str:
        """Prove for n steps and insist the goal is still open."""
        self.goal(text)
        out = self.step(n)
        if not self.table:
            raise SessionError("This proof should have failed!")
        return out + "\nFailed, as expected"

    def search(self, max_budget: int = 8) -> str:
        """Backtracking search on the current sequent; keeps the tree."""
        tree = search_mod.prove(self.lefts, self.rights, max_budget)
        if tree is None:
            self.last_tree = None
            return f"No proof found within budget {max_budget}"
        self.last_tree = tree
        try:
            check_proof(tree)
        except CheckFailure as e:  # would be a bug, but never hide it
            return format_tree(tree) + f"\nWARNING: emitted proof failed its check: {e}"
        return format_tree(tree) + "\nProof found and checked"


def check_text(text: str) -> str:
    """Parse and check a serialized proof; returns a verdict line."""
    from .prooftree import parse_tree

    try:
        tree = parse_tree(text)
    except SyntaxError_ as e:
        return f"Unreadable proof: {e}"
    try:
        check_proof(tree)
    except CheckFailure as e:
        return f"Proof rejected: {e}"
    lefts, rights = tree.lefts, tree.rights
    return "Proof accepted: " + format_sequent(lefts, rights)
