"""Tests for the cost-ordered goal table and the step engine."""

import pytest

from seqprover.prover import (
    LEFT,
    OPEN,
    PROVED,
    RIGHT,
    STUCK,
    EmptyGoalError,
    Entry,
    cost_of,
    initial_table,
    insert_early,
    insert_late,
    make_entry,
    make_goal,
    params_in_table,
    proof_step,
    proof_steps,
    reduce_goal,
    solve_goal,
    split_goal,
)
from seqprover.syntax import parse_formula, parse_sequent
from seqprover.terms import (
    ALL,
    Bound,
    NameSupply,
    Param,
    Pred,
    Quant,
    Var,
)

P = Pred("P", ())
Q = Pred("Q", ())


def goal_for(text):
    lefts, rights = parse_sequent(text)
    return make_goal(lefts, rights)


def test_costs_count_premises_and_quantifier_reuse():
    cases = [
        ("~ P", 1, 1),
        ("P & Q", 1, 2),
        ("P | Q", 2, 1),
        ("P --> Q", 2, 1),
        ("P <-> Q", 2, 2),
        ("ALL x. P(x)", 3, 1),
        ("EXISTS x. P(x)", 1, 3),
        ("P", 4, 4),
    ]
    for text, left_cost, right_cost in cases:
        fm = parse_formula(text)
        assert cost_of(LEFT, fm) == left_cost, text
        assert cost_of(RIGHT, fm) == right_cost, text


def test_make_goal_sorts_by_cost_keeping_input_order_within_a_cost():
    goal = goal_for("P, ~ Q, ALL x. R(x) |- Q | P, S")
    assert [(e.cost, e.side) for e in goal] == [
        (1, RIGHT),  # Q | P
        (1, LEFT),  # ~ Q
        (3, LEFT),  # ALL x. R(x)
        (4, RIGHT),  # S
        (4, LEFT),  # P
    ]


def test_insert_early_goes_before_equal_cost():
    goal = (make_entry(LEFT, parse_formula("~ P")),)
    new = make_entry(LEFT, parse_formula("~ Q"))
    assert insert_early(new, goal)[0] is new


def test_insert_late_goes_after_equal_cost():
    goal = (make_entry(LEFT, parse_formula("ALL x. R(x)")),)
    new = make_entry(LEFT, parse_formula("ALL x. S(x)"))
    out = insert_late(new, goal)
    assert out[1] is new
    # but still before anything strictly more expensive
    atom_goal = (make_entry(LEFT, P),)
    assert insert_late(new, atom_goal)[0] is new


def test_split_goal_separates_sides_in_goal_order():
    goal = goal_for("P, ~ Q |- S")
    lefts, rights = split_goal(goal)
    assert lefts == (parse_formula("~ Q"), P)
    assert rights == (Pred("S", ()),)


def test_solve_goal_takes_first_left_right_pair_in_goal_order():
    b = Param("b", ())
    a = Param("a", ())
    goal = make_goal((Pred("P", (b,)), Pred("P", (a,))), (Pred("P", (Var("x"),)),))
    solved = solve_goal(goal)
    assert solved is not None
    fm, env = solved
    assert fm == Pred("P", (b,))
    assert env.lookup("x") == b


def test_solve_goal_needs_unifiable_atoms():
    assert solve_goal(goal_for("P |- Q")) is None
    assert solve_goal(goal_for("P --> Q |- P --> Q")) is None


def test_initial_table_closes_basic_sequents_immediately():
    assert initial_table((P,), (P,)) == ()
    assert initial_table((P,), (Q,)) != ()


def test_reduce_goal_eigen_parameter_collects_goal_variables():
    body = Pred("R", (Bound(0), Var("z")))
    goal = make_goal((), (Quant(ALL, "x", body),))
    subgoals, rule, names = reduce_goal(goal, NameSupply())
    assert rule == "ALL:right"
    (sub,) = subgoals
    assert sub[0].formula == Pred("R", (Param("a", ("z",)), Var("z")))
    assert names.fresh()[0] == "b"


def test_reduce_goal_retains_universal_assumption_behind_peers():
    goal = goal_for("ALL x. P(x) |- Q")
    (sub,), rule, _ = reduce_goal(goal, NameSupply())
    assert rule == "ALL:left"
    kinds = [type(e.formula).__name__ for e in sub]
    assert kinds == ["Quant", "Pred", "Pred"]
    assert sub[1].formula == Pred("P", (Var("a"),))
    assert sub[0].formula == goal[0].formula


def test_proof_step_reports_indent_and_chronological_closures():
    tab = initial_table(*parse_sequent("P & Q |- Q & P"))
    event, tab, names = proof_step(tab, NameSupply())
    assert event.rule == "&:left"
    assert event.indent == 0
    event, tab, _ = proof_step(tab, names)
    assert event.rule == "&:right"
    assert event.closed == (Q, P)
    assert tab == ()


def test_proof_step_raises_on_empty_goal():
    with pytest.raises(EmptyGoalError):
        proof_step(((),), NameSupply())


def test_proof_steps_statuses():
    _, tab, _, status = proof_steps(
        initial_table(*parse_sequent("P & Q |- P")), NameSupply()
    )
    assert status == PROVED and tab == ()

    _, tab, _, status = proof_steps(initial_table((P,), (Q,)), NameSupply())
    assert status == STUCK and tab != ()

    _, tab, _, status = proof_steps(
        initial_table(*parse_sequent("P & Q |- P")), NameSupply(), 0
    )
    assert status == OPEN and tab != ()


def test_distributive_law_takes_six_steps():
    tab = initial_table(*parse_sequent("(P | Q) & (P | R) --> P | (Q & R)"))
    events, tab, _, status = proof_steps(tab, NameSupply())
    assert status == PROVED
    assert [e.rule for e in events] == [
        "-->:right",
        "|:right",
        "&:left",
        "|:left",
        "|:left",
        "&:right",
    ]


def test_params_in_table_reports_oldest_first():
    tab = initial_table(*parse_sequent("ALL x.R(x,x) |- EXISTS y. ALL x. R(x,y)"))
    names = NameSupply()
    for _ in range(2):  # EXISTS:right then ALL:right
        _, tab, names = proof_step(tab, names)
    assert params_in_table(tab) == (Param("b", ("a",)),)
