"""Tests for environments, unification, and instantiation."""

from seqprover.terms import Fun, Param, Pred, Var
from seqprover.unify import (
    Environment,
    chase,
    instantiate_formula,
    instantiate_term,
    unify_atoms,
    unify_terms,
)


def c(name):
    return Fun(name, ())


def f(*args):
    return Fun("f", args)


def g(*args):
    return Fun("g", args)


def test_environment_lookup_and_bind():
    env = Environment().bind("a", c("k"))
    assert env.lookup("a") == c("k")
    assert env.lookup("b") is None
    assert not Environment()
    assert env


def test_chase_follows_variable_chains_only():
    env = Environment().bind("a", Var("b")).bind("b", f(Var("z")))
    assert chase(env, Var("a")) == f(Var("z"))
    assert chase(env, Var("z")) == Var("z")
    assert chase(env, f(Var("a"))) == f(Var("a"))


def test_unify_distinct_constants_fails_via_shared_variable():
    # g(a,c) and g(?b,?b) forces a = c
    assert unify_terms(g(c("a"), c("c")), g(Var("b"), Var("b")), Environment()) is None


def test_unify_occurs_check_through_shared_variable():
    # g(?a,f(?a)) and g(?b,?b) forces ?b = f(?b)
    assert unify_terms(g(Var("a"), f(Var("a"))), g(Var("b"), Var("b")), Environment()) is None


def test_unify_threads_bindings_across_arguments():
    # h(?a,f(?a),?d) with h(g(0,?d),?b,?c)
    t = Fun("h", (Var("a"), f(Var("a")), Var("d")))
    u = Fun("h", (g(c("0"), Var("d")), Var("b"), Var("c")))
    env = unify_terms(t, u, Environment())
    assert env is not None
    assert instantiate_term(env, Var("a")) == g(c("0"), Var("c"))
    assert instantiate_term(env, Var("b")) == f(g(c("0"), Var("c")))
    assert instantiate_term(env, Var("d")) == Var("c")


def test_direct_occurs_check():
    assert unify_terms(Var("a"), f(Var("a")), Environment()) is None
    assert unify_terms(f(Var("a")), Var("a"), Environment()) is None


def test_unify_variable_with_itself_adds_nothing():
    env = unify_terms(Var("a"), Var("a"), Environment())
    assert env == Environment()


def test_parameter_dependencies_block_circular_assignment():
    # binding ?a := g(?c) makes ?c := b[?a] circular
    lhs = Pred("P", (Var("a"), Var("c")))
    rhs = Pred("P", (g(Var("c")), Param("b", ("a",))))
    assert unify_atoms(lhs, rhs) is None


def test_parameters_inside_assignments_are_opaque():
    # with ?a := d[?c] the assignment ?c := b[?a] is fine: a dependency on
    # a parameter can never become a dependency on a variable
    lhs = Pred("P", (Var("a"), Var("c")))
    rhs = Pred("P", (Param("d", ("c",)), Param("b", ("a",))))
    env = unify_atoms(lhs, rhs)
    assert env is not None
    assert instantiate_term(env, Var("a")) == Param("d", ())
    assert instantiate_term(env, Var("c")) == Param("b", ())


def test_parameter_dependency_on_constant_target_is_fine():
    lhs = Pred("P", (Var("a"), Var("c")))
    rhs = Pred("P", (c("d"), Param("b", ("a",))))
    env = unify_atoms(lhs, rhs)
    assert env is not None
    assert instantiate_term(env, Var("c")) == Param("b", ())


def test_instantiation_rebuilds_dependency_lists():
    # a dependency whose target still contains variables keeps exactly those
    env = Environment().bind("a", g(Var("x"), Var("y")))
    t = Param("b", ("a", "z"))
    assert instantiate_term(env, t) == Param("b", ("z", "y", "x"))


def test_unify_parameters_by_name_only():
    assert unify_terms(Param("b", ()), Param("b", ("a",)), Environment()) is not None
    assert unify_terms(Param("b", ()), Param("e", ()), Environment()) is None


def test_unify_function_clash():
    assert unify_terms(f(c("a")), g(c("a"), c("a")), Environment()) is None
    assert unify_terms(c("a"), c("b"), Environment()) is None


def test_unify_atoms_checks_name_and_arity():
    assert unify_atoms(Pred("P", ()), Pred("Q", ())) is None
    assert unify_atoms(Pred("P", (c("a"),)), Pred("P", ())) is None
    env = unify_atoms(Pred("P", (Var("x"),)), Pred("P", (c("a"),)))
    assert env is not None and env.lookup("x") == c("a")


def test_unifier_stays_most_general():
    env = unify_atoms(Pred("P", (Var("x"),)), Pred("P", (f(Var("y")),)))
    assert instantiate_term(env, Var("x")) == f(Var("y"))
    assert env.lookup("y") is None


def test_instantiate_formula_empty_environment_is_identity():
    fm = Pred("P", (Var("x"),))
    assert instantiate_formula(Environment(), fm) is fm
