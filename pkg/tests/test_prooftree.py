"""Tests for proof tree text form, instantiation, and grounding."""

import pytest

from seqprover.prooftree import (
    BASIC,
    ProofTree,
    format_tree,
    ground_tree,
    instantiate_tree,
    parse_tree,
)
from seqprover.syntax import SyntaxError_, parse_formula
from seqprover.terms import Fun, Param, Pred, Var
from seqprover.unify import Environment

P = Pred("P", ())
Q = Pred("Q", ())
R = Pred("R", ())


def test_leaf_formats_on_one_line():
    leaf = ProofTree(BASIC, (P, Q), (P,))
    assert format_tree(leaf) == "(basic [P; Q |- P])"


def test_nested_tree_layout():
    tree = ProofTree(
        "&:right",
        (P,),
        (parse_formula("Q & R"),),
        (ProofTree(BASIC, (P,), (Q,)), ProofTree(BASIC, (P,), (R,))),
    )
    assert format_tree(tree) == (
        "(&:right [P |- Q & R]\n  (basic [P |- Q])\n  (basic [P |- R]))"
    )


def test_witness_prints_between_sequent_and_premises():
    body = parse_formula("ALL x. P(x)")
    prem = ProofTree(BASIC, (), (Pred("P", (Param("b", ()),)),))
    tree = ProofTree("ALL:right", (), (body,), (prem,), Param("b", ()))
    text = format_tree(tree)
    assert text.splitlines()[0] == "(ALL:right [ |- ALL x. P(x)] {b[]}"
    assert parse_tree(text) == tree


def test_round_trip_preserves_params_witnesses_and_shape():
    text = (
        "(-->:left [P(c[]) --> Q(?a); P(c[]) |- R]\n"
        "  (basic [P(c[]) |- P(c[]); R])\n"
        "  (ALL:left [Q(?a); ALL y. R |- R] {f(c[])}\n"
        "    (basic [R; Q(?a); ALL y. R |- R])))"
    )
    tree = parse_tree(text)
    assert tree.rule == "-->:left"
    assert tree.premises[1].witness == Fun("f", (Param("c", ()),))
    assert parse_tree(format_tree(tree)) == tree


def test_rule_name_may_span_several_tokens():
    tree = parse_tree("(<->:right [ |- P <-> Q] (basic [P |- Q]) (basic [Q |- P]))")
    assert tree.rule == "<->:right"


def test_param_dependencies_survive_the_round_trip():
    leaf = ProofTree(BASIC, (Pred("P", (Param("b", ("a", "c")),)),), (Q,))
    assert "b[?a,?c]" in format_tree(leaf)
    assert parse_tree(format_tree(leaf)) == leaf


def test_parse_rejects_malformed_trees():
    for text in [
        "( [P |- P])",  # no rule name
        "(basic [P |- P]",  # unclosed
        "(basic [P |- P]) junk",  # leftover input
        "(basic P |- P)",  # missing brackets
        "(basic [P |- P] {})",  # empty witness
    ]:
        with pytest.raises(SyntaxError_):
            parse_tree(text)


def test_instantiate_tree_applies_bindings_everywhere():
    env = Environment().bind("a", Fun("c", ()))
    tree = ProofTree(
        "ALL:left",
        (Pred("P", (Var("a"),)),),
        (Q,),
        (ProofTree(BASIC, (Pred("P", (Var("a"),)),), (Q,)),),
        Var("a"),
    )
    out = instantiate_tree(env, tree)
    assert out.witness == Fun("c", ())
    assert out.lefts[0] == Pred("P", (Fun("c", ()),))
    assert out.premises[0].lefts[0] == Pred("P", (Fun("c", ()),))


def test_instantiate_tree_with_empty_environment_is_identity():
    tree = ProofTree(BASIC, (P,), (P,))
    assert instantiate_tree(Environment(), tree) is tree


def test_ground_tree_freezes_variables_and_drops_dependencies():
    tree = ProofTree(
        "EXISTS:right",
        (),
        (Pred("P", (Var("a"),)),),
        (ProofTree(BASIC, (Pred("Q", (Param("b", ("a",)),)),), (P,)),),
        Var("a"),
    )
    out = ground_tree(tree)
    assert out.witness == Fun("a", ())
    assert out.rights[0] == Pred("P", (Fun("a", ()),))
    assert out.premises[0].lefts[0] == Pred("Q", (Param("b", ()),))
