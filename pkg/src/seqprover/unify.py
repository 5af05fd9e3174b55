"""Unification of atomic formulas under an environment of bindings.

Bindings are never applied eagerly; terms are instantiated on demand by
chasing variable assignments.  The occurs check extends through parameter
dependency lists: a parameter occurrence contributes the variables its deps
may still become, but parameters inside an assignment are opaque, since a
dependency on a parameter can never turn into a dependency on a variable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .terms import (
    Bound,
    Conn,
    Formula,
    Fun,
    Param,
    Pred,
    Quant,
    Term,
    Var,
    vars_in_term,
)


@dataclass(frozen=True)
class Environment:
    """Ordered variable bindings, newest first."""

    assignments: tuple[tuple[str, Term], ...] = ()

    def lookup(self, name: str) -> Term | None:
        for a, t in self.assignments:
            if a == name:
                return t
        return None

    def bind(self, name: str, t: Term) -> "Environment":
        return Environment(((name, t),) + self.assignments)

    def __bool__(self) -> bool:
        return bool(self.assignments)


def chase(env: Environment, t: Term) -> Term:
    """Follow variable assignments until an unassigned variable or a
    non-variable term."""
    while isinstance(t, Var):
        u = env.lookup(t.name)
        if u is None:
            return t
        t = u
    return t


def _occurs(env: Environment, name: str, t: Term) -> bool:
    if isinstance(t, Fun):
        return any(_occurs(env, name, a) for a in t.args)
    if isinstance(t, Param):
        return any(_occurs_var(env, name, d) for d in t.deps)
    if isinstance(t, Var):
        if t.name == name:
            return True
        u = env.lookup(t.name)
        return u is not None and _occurs(env, name, u)
    return False


def _occurs_var(env: Environment, name: str, dep: str) -> bool:
    """Does name appear among the variables dep may still become?"""
    if dep == name:
        return True
    u = env.lookup(dep)
    return u is not None and _occurs_in_vars(env, name, u)


def _occurs_in_vars(env: Environment, name: str, t: Term) -> bool:
    if isinstance(t, Fun):
        return any(_occurs_in_vars(env, name, a) for a in t.args)
    if isinstance(t, Var):
        return _occurs_var(env, name, t.name)
    return False  # parameters are opaque here


def unify_terms(t: Term, u: Term, env: Environment) -> Environment | None:
    t = chase(env, t)
    u = chase(env, u)
    if isinstance(t, Var):
        if isinstance(u, Var) and t.name == u.name:
            return env
        if _occurs(env, t.name, u):
            return None
        return env.bind(t.name, u)
    if isinstance(u, Var):
        if _occurs(env, u.name, t):
            return None
        return env.bind(u.name, t)
    if isinstance(t, Param) and isinstance(u, Param):
        return env if t.name == u.name else None
    if isinstance(t, Fun) and isinstance(u, Fun):
        if t.name != u.name or len(t.args) != len(u.args):
            return None
        for a, b in zip(t.args, u.args):
            result = unify_terms(a, b, env)
            if result is None:
                return None
            env = result
        return env
    if isinstance(t, Bound) and isinstance(u, Bound):
        return env if t.index == u.index else None
    return None


def unify_atoms(a: Formula, b: Formula, env: Environment | None = None) -> Environment | None:
    """Unify two atomic formulas; None on failure."""
    if env is None:
        env = Environment()
    if not (isinstance(a, Pred) and isinstance(b, Pred)):
        return None
    if a.name != b.name or len(a.args) != len(b.args):
        return None
    for t, u in zip(a.args, b.args):
        result = unify_terms(t, u, env)
        if result is None:
            return None
        env = result
    return env


def instantiate_term(env: Environment, t: Term) -> Term:
    if isinstance(t, Fun):
        return Fun(t.name, tuple(instantiate_term(env, a) for a in t.args))
    if isinstance(t, Param):
        acc: tuple[str, ...] = ()
        for d in t.deps:
            acc = vars_in_term(instantiate_term(env, Var(d)), acc)
        return Param(t.name, acc)
    if isinstance(t, Var):
        u = env.lookup(t.name)
        return t if u is None else instantiate_term(env, u)
    return t


def instantiate_formula(env: Environment, fm: Formula) -> Formula:
    if not env:
        return fm
    if isinstance(fm, Pred):
        return Pred(fm.name, tuple(instantiate_term(env, t) for t in fm.args))
    if isinstance(fm, Conn):
        return Conn(fm.op, tuple(instantiate_formula(env, a) for a in fm.args))
    return Quant(fm.kind, fm.var, instantiate_formula(env, fm.body))
