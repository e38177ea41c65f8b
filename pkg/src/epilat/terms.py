"""Words over a unary semigroup signature and identities between them.

A term is a nonempty product of factors; a factor is a letter or the
unary operation ``~(...)`` applied to a term.  ``(u)^w`` is accepted as
sugar for ``u ~(u)``.  Products are kept flattened, so structural
equality of terms is equality modulo associativity.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from math import inf
from typing import Iterable, Mapping, Optional, Union


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class SubstitutionError(KeyError):
    pass


@dataclass(frozen=True)
class Letter:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class PseudoInverse:
    arg: "Term"

    def __str__(self) -> str:
        return "~(" + str(self.arg) + ")"


@dataclass(frozen=True)
class Product:
    factors: tuple  # length >= 2, members are Letter or PseudoInverse

    def __str__(self) -> str:
        return " ".join(str(f) for f in self.factors)


Term = Union[Letter, PseudoInverse, Product]


def factors(t: Term) -> tuple:
    """Factor sequence of t; a single atom yields a 1-tuple."""
    if isinstance(t, Product):
        return t.factors
    return (t,)


def mk_product(parts: Iterable[Term]) -> Term:
    """Build a product, flattening nested products. Requires >= 1 part."""
    flat = []
    for p in parts:
        flat.extend(factors(p))
    if not flat:
        raise ValueError("empty product")
    if len(flat) == 1:
        return flat[0]
    return Product(tuple(flat))


def omega(t: Term) -> Term:
    """The idempotent power t^w, i.e. t ~(t)."""
    return mk_product([t, PseudoInverse(t)])


# ---------------------------------------------------------------------------
# parsing

_TOKEN_RE = re.compile(r"\s*(?:(?P<letter>[A-Za-z_][A-Za-z_0-9]*)"
                       r"|(?P<zero>0)"
                       r"|(?P<pinv>~\()"
                       r"|(?P<lpar>\()"
                       r"|(?P<rpar>\)\^w|\))"
                       r"|(?P<eq>=))")


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected character {text[pos:].strip()[0]!r}", pos)
        for kind in ("letter", "zero", "pinv", "lpar", "rpar", "eq"):
            if m.group(kind) is not None:
                out.append((kind, m.group(kind), m.start(kind)))
                break
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str):
        tok = self.next()
        if tok[0] != kind:
            raise ParseError(f"expected {kind}, found {tok[1]!r}", tok[2])
        return tok

    def term(self) -> Term:
        parts = [self.factor()]
        while self.peek()[0] in ("letter", "pinv", "lpar"):
            parts.append(self.factor())
        return mk_product(parts)

    def factor(self) -> Term:
        kind, value, pos = self.next()
        if kind == "letter":
            return Letter(value)
        if kind == "pinv":
            inner = self.term()
            close = self.expect("rpar")
            if close[1] != ")":
                raise ParseError("'^w' cannot follow '~(...)'", close[2])
            return PseudoInverse(inner)
        if kind == "lpar":
            inner = self.term()
            close = self.expect("rpar")
            if close[1] == ")^w":
                return omega(inner)
            return inner
        raise ParseError(f"expected a factor, found {value!r}", pos)


def parse_term(text: str) -> Term:
    p = _Parser(text)
    t = p.term()
    p.expect("end")
    return t


def format_term(t: Term) -> str:
    return str(t)


# ---------------------------------------------------------------------------
# identities

@dataclass(frozen=True)
class Identity:
    """lhs = rhs, or the zero identity lhs = 0 when rhs is None.

    The zero identity w = 0 abbreviates the pair w x = w, x w = w for a
    letter x not occurring in w.
    """
    lhs: Term
    rhs: Optional[Term]

    @property
    def is_zero(self) -> bool:
        return self.rhs is None

    def __str__(self) -> str:
        return f"{self.lhs} = {'0' if self.rhs is None else self.rhs}"


def parse_identity(text: str) -> Identity:
    p = _Parser(text)
    lhs = p.term()
    p.expect("eq")
    if p.peek()[0] == "zero":
        p.next()
        p.expect("end")
        return Identity(lhs, None)
    rhs = p.term()
    p.expect("end")
    return Identity(lhs, rhs)


def fresh_letter(used: Iterable[str], base: str = "t") -> str:
    used = set(used)
    if base not in used:
        return base
    i = 0
    while f"{base}{i}" in used:
        i += 1
    return f"{base}{i}"


def expand_zero(ident: Identity) -> tuple:
    """Defining pair (w x = w, x w = w) of a zero identity, x fresh."""
    if not ident.is_zero:
        raise ValueError("not a zero identity")
    w = ident.lhs
    x = Letter(fresh_letter(content(w)))
    return (Identity(mk_product([w, x]), w), Identity(mk_product([x, w]), w))


# ---------------------------------------------------------------------------
# statistics and classification

def occurrences(t: Term) -> Counter:
    """Number of occurrences of each letter, including under ~()."""
    if isinstance(t, Letter):
        return Counter([t.name])
    if isinstance(t, PseudoInverse):
        return occurrences(t.arg)
    total = Counter()
    for f in t.factors:
        total += occurrences(f)
    return total


def content(t: Term) -> frozenset:
    return frozenset(occurrences(t))


def is_semigroup_word(t: Term) -> bool:
    if isinstance(t, Letter):
        return True
    if isinstance(t, PseudoInverse):
        return False
    return all(isinstance(f, Letter) for f in t.factors)


def letter_sequence(t: Term) -> tuple:
    """Letter names of a semigroup word, in order."""
    if not is_semigroup_word(t):
        raise ValueError(f"not a semigroup word: {t}")
    return tuple(f.name for f in factors(t))


def last_letter(t: Term) -> str:
    if isinstance(t, Letter):
        return t.name
    if isinstance(t, PseudoInverse):
        return last_letter(t.arg)
    return last_letter(t.factors[-1])


def first_letter(t: Term) -> str:
    if isinstance(t, Letter):
        return t.name
    if isinstance(t, PseudoInverse):
        return first_letter(t.arg)
    return first_letter(t.factors[0])


@dataclass(frozen=True)
class TermStats:
    content: frozenset
    length: float              # letter count; inf when ~() occurs
    last_letter: str
    first_letter: str
    simple_letters: frozenset  # letters occurring exactly once
    multiple_letters: frozenset
    is_linear: bool
    is_semigroup_word: bool


def term_stats(t: Term) -> TermStats:
    occ = occurrences(t)
    sg = is_semigroup_word(t)
    simple = frozenset(a for a, k in occ.items() if k == 1)
    multiple = frozenset(a for a, k in occ.items() if k > 1)
    return TermStats(
        content=frozenset(occ),
        length=float(sum(occ.values())) if sg else inf,
        last_letter=last_letter(t),
        first_letter=first_letter(t),
        simple_letters=simple,
        multiple_letters=multiple,
        is_linear=sg and not multiple,
        is_semigroup_word=sg,
    )


@dataclass(frozen=True)
class IdentityClass:
    kind: str  # "semigroup", "mixed" or "unary"
    balanced: bool
    substitutive: bool
    permutative: bool
    strongly_permutative: bool
    zero_reduced: bool


def rename(t: Term, mapping: Mapping[str, str]) -> Term:
    return substitute(t, {a: Letter(b) for a, b in mapping.items()})


def _permutations(seq):
    import itertools
    return itertools.permutations(seq)


def classify_identity(ident: Identity) -> IdentityClass:
    if ident.is_zero:
        kind = "semigroup" if is_semigroup_word(ident.lhs) else "unary"
        return IdentityClass(kind, False, False, False, False, True)

    u, v = ident.lhs, ident.rhs
    su, sv = is_semigroup_word(u), is_semigroup_word(v)
    kind = "semigroup" if su and sv else ("unary" if not su and not sv else "mixed")
    ou, ov = occurrences(u), occurrences(v)
    balanced = su and sv and ou == ov

    substitutive = False
    if su and sv and frozenset(ou) == frozenset(ov) and sum(ou.values()) == sum(ov.values()):
        letters = sorted(ou)
        for image in _permutations(letters):
            if rename(u, dict(zip(letters, image))) == v:
                substitutive = True
                break

    permutative = False
    strongly = False
    if su and sv:
        stu, stv = term_stats(u), term_stats(v)
        if (stu.is_linear and stv.is_linear and stu.content == stv.content
                and stu.length == stv.length and u != v):
            permutative = True
            lu, lv = letter_sequence(u), letter_sequence(v)
            strongly = lu[0] != lv[0] and lu[-1] != lv[-1]

    return IdentityClass(kind, balanced, substitutive, permutative, strongly, False)


def k_sigma_is_variety(sigma: Iterable[Identity]) -> bool:
    """Whether the class of epigroups satisfying sigma is closed under the
    variety operations: true iff sigma contains a non-balanced semigroup
    identity or a mixed identity (zero identities count via their
    defining pair)."""
    for ident in sigma:
        if ident.is_zero:
            if is_semigroup_word(ident.lhs):
                return True
            continue
        cls = classify_identity(ident)
        if cls.kind == "mixed":
            return True
        if cls.kind == "semigroup" and not cls.balanced:
            return True
    return False


def substitute(t: Term, mapping: Mapping[str, Term]) -> Term:
    """Apply a letter substitution; every letter of t must be mapped."""
    if isinstance(t, Letter):
        try:
            return mapping[t.name]
        except KeyError:
            raise SubstitutionError(t.name) from None
    if isinstance(t, PseudoInverse):
        return PseudoInverse(substitute(t.arg, mapping))
    return mk_product([substitute(f, mapping) for f in t.factors])


def word(letters: str) -> Term:
    """Shorthand: word("xxy") is the product of single-character letters."""
    return mk_product([Letter(c) for c in letters])
