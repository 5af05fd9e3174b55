"""Concrete syntax: scanner, parser, and printer.

Grammar, tightest first: ~ binds at 4, & at 3, | at 2, --> and <-> at 1.
Binary connectives associate to the right.  A quantifier's scope extends as
far to the right as possible, so ALL x. P(x) --> Q means ALL x. (P(x) --> Q),
and a negated quantifier must be written ~ (ALL x. P(x)).

The printer emits only strings the parser maps back to the same formula;
equal-precedence operands are parenthesized on both sides.
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
    Bound,
    Conn,
    Formula,
    Fun,
    Param,
    Pred,
    Quant,
    Term,
    Var,
    abstract,
    subst_bound,
)


class SyntaxError_(Exception):
    """Raised on bad input text; carries a plain message."""


@dataclass(frozen=True)
class Token:
    kind: str  # "id" or "key"
    text: str


def _is_word_char(c: str) -> bool:
    return c.isascii() and (c.isalpha() or c.isdigit())


def scan(text: str) -> list[Token]:
    """Split text into identifier and key tokens, dropping whitespace."""
    toks: list[Token] = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c in " \t\n\r":
            i += 1
        elif _is_word_char(c):
            j = i
            while j < n and _is_word_char(text[j]):
                j += 1
            word = text[i:j]
            kind = "key" if word in (ALL, EXISTS) else "id"
            toks.append(Token(kind, word))
            i = j
        elif text[i : i + 3] in (IMP, IFF):
            toks.append(Token("key", text[i : i + 3]))
            i += 3
        else:
            toks.append(Token("key", c))
            i += 1
    return toks


_PRECEDENCE = {NEG: 4, CONJ: 3, DISJ: 2, IMP: 1, IFF: 1}


def prec_of(op: str) -> int:
    return _PRECEDENCE.get(op, -1)


class Parser:
    """Recursive-descent parser over a token list.

    allow_params also accepts name[?a,?b] parameter terms; that form only
    occurs in serialized proofs, never in user input.
    """

    def __init__(self, tokens: list[Token], allow_params: bool = False):
        self.tokens = tokens
        self.pos = 0
        self.allow_params = allow_params

    def peek(self) -> Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self) -> Token:
        tok = self.peek()
        if tok is None:
            raise SyntaxError_("unexpected end of input")
        self.pos += 1
        return tok

    def at_key(self, text: str) -> bool:
        tok = self.peek()
        return tok is not None and tok.kind == "key" and tok.text == text

    def expect_key(self, text: str) -> None:
        tok = self.peek()
        if tok is None or tok.kind != "key" or tok.text != text:
            found = "end of input" if tok is None else repr(tok.text)
            raise SyntaxError_(f"expected {text!r}, found {found}")
        self.pos += 1

    def expect_id(self) -> str:
        tok = self.next()
        if tok.kind != "id":
            raise SyntaxError_(f"expected an identifier, found {tok.text!r}")
        return tok.text

    def at_end(self) -> bool:
        return self.pos >= len(self.tokens)

    def parse_term(self) -> Term:
        if self.at_key("?"):
            self.next()
            return Var(self.expect_id())
        name = self.expect_id()
        if self.at_key("("):
            self.next()
            args = [self.parse_term()]
            while self.at_key(","):
                self.next()
                args.append(self.parse_term())
            self.expect_key(")")
            return Fun(name, tuple(args))
        if self.allow_params and self.at_key("["):
            self.next()
            deps: list[str] = []
            if not self.at_key("]"):
                self.expect_key("?")
                deps.append(self.expect_id())
                while self.at_key(","):
                    self.next()
                    self.expect_key("?")
                    deps.append(self.expect_id())
            self.expect_key("]")
            return Param(name, tuple(deps))
        return Fun(name, ())

    def _starts_formula(self) -> bool:
        tok = self.peek()
        if tok is None:
            return False
        if tok.kind == "id":
            return True
        return tok.text in (NEG, "(", "?", ALL, EXISTS)

    def parse_formula(self, prec: int = 0) -> Formula:
        tok = self.peek()
        if tok is not None and tok.kind == "key" and tok.text in (ALL, EXISTS):
            kind = self.next().text
            var = self.expect_id()
            self.expect_key(".")
            body = self.parse_formula(0)
            return Quant(kind, var, abstract(body, Fun(var, ())))
        fm = self._parse_atom()
        while True:
            tok = self.peek()
            if tok is None or tok.kind != "key":
                return fm
            p = prec_of(tok.text)
            if p < 0 or p < prec or tok.text == NEG:
                return fm
            if tok.text == DISJ and self.at_turnstile():
                return fm
            self.next()
            rhs = self.parse_formula(p)
            fm = Conn(tok.text, (fm, rhs))

    def _parse_atom(self) -> Formula:
        tok = self.peek()
        if tok is None:
            raise SyntaxError_("unexpected end of input")
        if tok.kind == "key" and tok.text == NEG:
            self.next()
            return Conn(NEG, (self._parse_atom(),))
        if tok.kind == "key" and tok.text == "(":
            self.next()
            fm = self.parse_formula(0)
            self.expect_key(")")
            return fm
        if tok.kind == "id":
            name = self.next().text
            args: tuple[Term, ...] = ()
            if self.at_key("("):
                self.next()
                arglist = [self.parse_term()]
                while self.at_key(","):
                    self.next()
                    arglist.append(self.parse_term())
                self.expect_key(")")
                args = tuple(arglist)
            return Pred(name, args)
        raise SyntaxError_(f"unexpected token {tok.text!r}")

    def parse_formula_list(self, seps: str = ",;") -> tuple[Formula, ...]:
        """Separator-joined formulas; empty when nothing ahead can start one.

        seps holds the accepted single-character separators."""
        if not self._starts_formula():
            return ()
        fms = [self.parse_formula(0)]
        while any(self.at_key(s) for s in seps):
            self.next()
            fms.append(self.parse_formula(0))
        return tuple(fms)

    def parse_turnstile(self) -> None:
        self.expect_key("|")
        self.expect_key("-")

    def at_turnstile(self) -> bool:
        return (
            self.at_key("|")
            and self.pos + 1 < len(self.tokens)
            and self.tokens[self.pos + 1] == Token("key", "-")
        )


def parse_formula(text: str) -> Formula:
    p = Parser(scan(text))
    fm = p.parse_formula(0)
    if not p.at_end():
        raise SyntaxError_(f"leftover input at {p.peek().text!r}")
    return fm


def parse_sequent(text: str) -> tuple[tuple[Formula, ...], tuple[Formula, ...]]:
    """Parse "A1, ..., Am |- B1, ..., Bn"; without a turnstile the whole
    input is the right side.  Formulas separate with "," or ";"."""
    p = Parser(scan(text))
    first = p.parse_formula_list()
    if p.at_end():
        return (), first
    p.parse_turnstile()
    rights = p.parse_formula_list()
    if not p.at_end():
        raise SyntaxError_(f"leftover input at {p.peek().text!r}")
    return first, rights


def format_term(t: Term, show_deps: bool = False) -> str:
    """Print a term; show_deps serializes parameters as name[?a,?b] for
    proof files (bare names would read back as constants)."""
    if isinstance(t, Var):
        return "?" + t.name
    if isinstance(t, Param):
        if show_deps:
            return t.name + "[" + ",".join("?" + d for d in t.deps) + "]"
        return t.name
    if isinstance(t, Bound):
        return f"B.{t.index}"
    args = t.args
    if not args:
        return t.name
    return t.name + "(" + ",".join(format_term(a, show_deps) for a in args) + ")"


def _format(fm: Formula, prec: int, show_deps: bool) -> str:
    if isinstance(fm, Pred):
        if not fm.args:
            return fm.name
        inner = ",".join(format_term(a, show_deps) for a in fm.args)
        return fm.name + "(" + inner + ")"
    if isinstance(fm, Conn):
        if fm.op == NEG:
            return "~ " + _format(fm.args[0], prec_of(NEG), show_deps)
        p = prec_of(fm.op)
        a, b = fm.args
        s = _format(a, p, show_deps) + " " + fm.op + " " + _format(b, p, show_deps)
        return "(" + s + ")" if p <= prec else s
    body = subst_bound(fm.body, Fun(fm.var, ()))
    s = fm.kind + " " + fm.var + ". " + _format(body, 0, show_deps)
    return "(" + s + ")" if prec > 0 else s


def format_formula(fm: Formula, show_deps: bool = False) -> str:
    return _format(fm, 0, show_deps)


def format_sequent(
    lefts: tuple[Formula, ...], rights: tuple[Formula, ...], show_deps: bool = False
) -> str:
    left = ", ".join(format_formula(a, show_deps) for a in lefts) if lefts else "empty"
    right = ", ".join(format_formula(b, show_deps) for b in rights)
    return left + " |- " + right
