"""First-order formulas over a lattice signature, with a Tarskian
evaluator.  Used to cross-validate the direct special-element checks:
the defining condition of each special element kind is built here as a
formula object and evaluated independently.

Concrete syntax (for files and the command line):

    forall y. forall z. ((x ^ y) | z) = ((x ^ z) | (y ^ z))

with ^ meet, | join, = and <= as atoms, not/and/or/->, forall/exists.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .lattice import FiniteLattice


class FormulaError(ValueError):
    pass


# terms -----------------------------------------------------------------

@dataclass(frozen=True)
class TVar:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class TOp:
    op: str  # "meet" or "join"
    left: "LatTerm"
    right: "LatTerm"

    def __str__(self):
        sym = "^" if self.op == "meet" else "|"
        return f"({self.left} {sym} {self.right})"


LatTerm = Union[TVar, TOp]


# formulas --------------------------------------------------------------

@dataclass(frozen=True)
class Atom:
    rel: str  # "eq" or "le"
    left: LatTerm
    right: LatTerm

    def __str__(self):
        return f"{self.left} {'=' if self.rel == 'eq' else '<='} {self.right}"


@dataclass(frozen=True)
class Not:
    body: "Formula"

    def __str__(self):
        return f"not ({self.body})"


@dataclass(frozen=True)
class BinOp:
    op: str  # "and", "or", "implies"
    left: "Formula"
    right: "Formula"

    def __str__(self):
        sym = {"and": "and", "or": "or", "implies": "->"}[self.op]
        return f"({self.left} {sym} {self.right})"


@dataclass(frozen=True)
class Quant:
    kind: str  # "forall" or "exists"
    var: str
    body: "Formula"

    def __str__(self):
        return f"{self.kind} {self.var}. {self.body}"


Formula = Union[Atom, Not, BinOp, Quant]


def free_variables(phi) -> frozenset:
    if isinstance(phi, TVar):
        return frozenset([phi.name])
    if isinstance(phi, TOp):
        return free_variables(phi.left) | free_variables(phi.right)
    if isinstance(phi, Atom):
        return free_variables(phi.left) | free_variables(phi.right)
    if isinstance(phi, Not):
        return free_variables(phi.body)
    if isinstance(phi, BinOp):
        return free_variables(phi.left) | free_variables(phi.right)
    if isinstance(phi, Quant):
        return free_variables(phi.body) - {phi.var}
    raise TypeError(type(phi))


def _eval_term(L, t, env):
    if isinstance(t, TVar):
        try:
            return env[t.name]
        except KeyError:
            raise FormulaError(f"unbound variable {t.name}") from None
    val_l = _eval_term(L, t.left, env)
    val_r = _eval_term(L, t.right, env)
    table = L.meet_table if t.op == "meet" else L.join_table
    return table[val_l][val_r]


def fo_eval(L: FiniteLattice, phi: Formula, env=None) -> bool:
    env = dict(env or {})
    if isinstance(phi, Atom):
        a = _eval_term(L, phi.left, env)
        b = _eval_term(L, phi.right, env)
        return a == b if phi.rel == "eq" else L.leq(a, b)
    if isinstance(phi, Not):
        return not fo_eval(L, phi.body, env)
    if isinstance(phi, BinOp):
        if phi.op == "and":
            return fo_eval(L, phi.left, env) and fo_eval(L, phi.right, env)
        if phi.op == "or":
            return fo_eval(L, phi.left, env) or fo_eval(L, phi.right, env)
        return (not fo_eval(L, phi.left, env)) or fo_eval(L, phi.right, env)
    if isinstance(phi, Quant):
        values = range(L.size)
        if phi.kind == "forall":
            return all(fo_eval(L, phi.body, {**env, phi.var: a})
                       for a in values)
        return any(fo_eval(L, phi.body, {**env, phi.var: a}) for a in values)
    raise TypeError(type(phi))


def defined_set(L: FiniteLattice, phi: Formula, var: str) -> frozenset:
    extra = free_variables(phi) - {var}
    if extra:
        raise FormulaError(f"formula has extra free variables {sorted(extra)}")
    return frozenset(a for a in range(L.size) if fo_eval(L, phi, {var: a}))


# dualization -----------------------------------------------------------

def dualize(phi):
    """Swap meet with join and reverse the order relation."""
    if isinstance(phi, TVar):
        return phi
    if isinstance(phi, TOp):
        return TOp("join" if phi.op == "meet" else "meet",
                   dualize(phi.left), dualize(phi.right))
    if isinstance(phi, Atom):
        if phi.rel == "le":
            return Atom("le", dualize(phi.right), dualize(phi.left))
        return Atom("eq", dualize(phi.left), dualize(phi.right))
    if isinstance(phi, Not):
        return Not(dualize(phi.body))
    if isinstance(phi, BinOp):
        return BinOp(phi.op, dualize(phi.left), dualize(phi.right))
    if isinstance(phi, Quant):
        return Quant(phi.kind, phi.var, dualize(phi.body))
    raise TypeError(type(phi))


# defining formulas -----------------------------------------------------

def _m(a, b):
    return TOp("meet", a, b)


def _j(a, b):
    return TOp("join", a, b)


def special_formula(kind: str, var: str = "x") -> Formula:
    """Defining first-order condition for each special element kind,
    with the element as the single free variable."""
    x, y, z = TVar(var), TVar("y_"), TVar("z_")
    if kind == "neutral":
        body = Atom("eq",
                    _m(_m(_j(x, y), _j(y, z)), _j(z, x)),
                    _j(_j(_m(x, y), _m(y, z)), _m(z, x)))
    elif kind == "standard":
        body = Atom("eq", _m(_j(x, y), z), _j(_m(x, z), _m(y, z)))
    elif kind == "distributive":
        body = Atom("eq", _j(x, _m(y, z)), _m(_j(x, y), _j(x, z)))
    elif kind == "modular":
        body = BinOp("implies", Atom("le", y, z),
                     Atom("eq", _m(_j(x, y), z), _j(_m(x, z), y)))
    elif kind == "upper_modular":
        body = BinOp("implies", Atom("le", y, x),
                     Atom("eq", _m(_j(z, y), x), _j(_m(z, x), y)))
    elif kind in ("costandard", "codistributive", "lower_modular"):
        primal = {"costandard": "standard",
                  "codistributive": "distributive",
                  "lower_modular": "upper_modular"}[kind]
        return dualize(special_formula(primal, var))
    else:
        raise ValueError(f"unknown special element kind {kind!r}")
    return Quant("forall", "y_", Quant("forall", "z_", body))


# parsing ---------------------------------------------------------------

_FO_TOKEN = re.compile(r"\s*(?:(?P<kw>forall|exists|not|and|or)\b"
                       r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
                       r"|(?P<sym><=|->|[().^|=]))")


def _fo_tokenize(text):
    pos, out = 0, []
    while pos < len(text):
        m = _FO_TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            if text[pos:].strip() == "":
                break
            raise FormulaError(f"bad character {text[pos:].strip()[0]!r}")
        if m.group("kw"):
            out.append((m.group("kw"), None))
        elif m.group("name"):
            out.append(("name", m.group("name")))
        else:
            out.append((m.group("sym"), None))
        pos = m.end()
    out.append(("end", None))
    return out


class _FoParser:
    def __init__(self, text):
        self.toks = _fo_tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i][0]

    def next(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            raise FormulaError(f"expected {kind!r}, found {tok[0]!r}")
        return tok

    def formula(self):
        if self.peek() in ("forall", "exists"):
            kind = self.next()[0]
            var = self.expect("name")[1]
            self.expect(".")
            return Quant(kind, var, self.formula())
        return self.implication()

    def implication(self):
        left = self.disjunction()
        if self.peek() == "->":
            self.next()
            return BinOp("implies", left, self.implication())
        return left

    def disjunction(self):
        left = self.conjunction()
        while self.peek() == "or":
            self.next()
            left = BinOp("or", left, self.conjunction())
        return left

    def conjunction(self):
        left = self.negation()
        while self.peek() == "and":
            self.next()
            left = BinOp("and", left, self.negation())
        return left

    def negation(self):
        if self.peek() == "not":
            self.next()
            return Not(self.negation())
        return self.atom()

    def atom(self):
        mark = self.i
        try:
            left = self.term()
            rel = self.next()
            if rel[0] not in ("=", "<="):
                raise FormulaError("expected '=' or '<='")
            right = self.term()
            return Atom("eq" if rel[0] == "=" else "le", left, right)
        except FormulaError:
            self.i = mark
        self.expect("(")
        phi = self.formula()
        self.expect(")")
        return phi

    def term(self):
        left = self.term_primary()
        while self.peek() in ("^", "|"):
            op = self.next()[0]
            left = TOp("meet" if op == "^" else "join",
                       left, self.term_primary())
        return left

    def term_primary(self):
        if self.peek() == "(":
            self.next()
            t = self.term()
            self.expect(")")
            return t
        return TVar(self.expect("name")[1])


def parse_formula(text: str) -> Formula:
    p = _FoParser(text)
    phi = p.formula()
    p.expect("end")
    return phi
