"""Sequent calculus theorem proving for classical first-order logic.

The step engine (prover) reduces a cost-ordered goal table and commits to
every unification it makes; the search module backtracks instead and emits
proof trees that the independent checker validates.
"""

from .checker import CheckFailure, check_proof
from .prooftree import ProofTree, format_tree, parse_tree
from .prover import (
    OPEN,
    PROVED,
    STUCK,
    EmptyGoalError,
    Entry,
    GoalTable,
    NoRuleApplies,
    TraceEvent,
    initial_table,
    proof_step,
    proof_steps,
)
from .search import prove, prove_bounded
from .session import Session, format_table, format_trace_line
from .syntax import (
    SyntaxError_,
    format_formula,
    format_sequent,
    format_term,
    parse_formula,
    parse_sequent,
)
from .tactics import (
    ProofState,
    all_tac,
    append_tac,
    depth_first,
    engine_step_tactic,
    no_tac,
    orelse_tac,
    repeat_tac,
    solve_tactic,
    then_tac,
    try_tac,
)
from .terms import (
    Bound,
    Conn,
    Formula,
    Fun,
    NameSupply,
    Param,
    Pred,
    Quant,
    Term,
    Var,
    abstract,
    subst_bound,
)
from .unify import Environment, instantiate_formula, instantiate_term, unify_atoms

__version__ = "0.1.0"

__all__ = [
    "CheckFailure",
    "check_proof",
    "ProofTree",
    "format_tree",
    "parse_tree",
    "OPEN",
    "PROVED",
    "STUCK",
    "EmptyGoalError",
    "Entry",
    "GoalTable",
    "NoRuleApplies",
    "TraceEvent",
    "initial_table",
    "proof_step",
    "proof_steps",
    "prove",
    "prove_bounded",
    "Session",
    "format_table",
    "format_trace_line",
    "SyntaxError_",
    "format_formula",
    "format_sequent",
    "format_term",
    "parse_formula",
    "parse_sequent",
    "ProofState",
    "all_tac",
    "append_tac",
    "depth_first",
    "engine_step_tactic",
    "no_tac",
    "orelse_tac",
    "repeat_tac",
    "solve_tactic",
    "then_tac",
    "try_tac",
    "Bound",
    "Conn",
    "Formula",
    "Fun",
    "NameSupply",
    "Param",
    "Pred",
    "Quant",
    "Term",
    "Var",
    "abstract",
    "subst_bound",
    "Environment",
    "instantiate_formula",
    "instantiate_term",
    "unify_atoms",
    "__version__",
]
