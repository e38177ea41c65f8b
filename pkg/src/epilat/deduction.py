"""Equational deduction over unary-semigroup words.

A step replaces one factor w = p * s(lhs) * q by p * s(rhs) * q for an
identity of the theory, in either orientation; rewriting is also
allowed inside arguments of ~() (equational logic is a congruence for
the unary operation).  Matching is modulo associativity only; a theory
that needs commutativity must say so with an identity.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .terms import (Identity, Letter, Product, PseudoInverse, Term, content,
                    expand_zero, factors, mk_product, occurrences, substitute)

# identities holding in every epigroup, quotable by name
EPI_AXIOMS = (
    Identity(PseudoInverse(Letter("x")),
             mk_product([Letter("x"), PseudoInverse(Letter("x")),
                         PseudoInverse(Letter("x"))])),
    Identity(mk_product([Letter("x"), PseudoInverse(Letter("x"))]),
             mk_product([PseudoInverse(Letter("x")), Letter("x")])),
    Identity(PseudoInverse(PseudoInverse(Letter("x"))),
             mk_product([PseudoInverse(PseudoInverse(Letter("x"))),
                         PseudoInverse(Letter("x")), Letter("x")])),
)


@dataclass(frozen=True)
class Theory:
    name: str
    identities: tuple
    includes_epi_axioms: bool = False

    def effective_identities(self) -> tuple:
        out = []
        for ident in self.identities:
            if ident.is_zero:
                out.extend(expand_zero(ident))
            else:
                out.append(ident)
        if self.includes_epi_axioms:
            out.extend(EPI_AXIOMS)
        return tuple(out)


def theory(name: str, identities: Iterable[Identity],
           epi_axioms: bool = False) -> Theory:
    return Theory(name, tuple(identities), epi_axioms)


def named_theory(name: str) -> Theory:
    """Resolve a theory name used in deduction files.

    "epi" is the implicit-axiom theory, "cr" adds x = ~~x, "stable(m)"
    is x^m = x^(m+1) together with its consequence ~x = x^m; any other
    name is looked up in the variety registry and carries that basis.
    """
    from .terms import parse_identity
    if name == "epi":
        return Theory("epi", (), True)
    if name == "cr":
        return Theory("cr", (parse_identity("x = ~(~(x))"),), True)
    m = re.fullmatch(r"stable\((\d+)\)", name)
    if m:
        k = int(m.group(1))
        if k < 1:
            raise ValueError("stable(m) needs m >= 1")
        xs = " ".join(["x"] * k)
        return Theory(name,
                      (parse_identity(f"{xs} = {xs} x"),
                       parse_identity(f"~(x) = {xs}")), True)
    from .varieties import basis, parse_variety
    return Theory(name, basis(parse_variety(name)), True)


def parse_deduction_file(text: str):
    """Header line "theories: NAME NAME ...", then one term per line;
    blank lines and # comments are skipped."""
    from .terms import parse_term
    theories = None
    terms = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if theories is None:
            if not line.startswith("theories:"):
                raise ValueError("deduction file must start with a "
                                 "'theories:' header")
            names = line[len("theories:"):].replace(",", " ").split()
            if not names:
                raise ValueError("the 'theories:' header names no theory")
            theories = [named_theory(n) for n in names]
            continue
        terms.append(parse_term(line))
    if theories is None:
        raise ValueError("missing 'theories:' header")
    return theories, terms


# ---------------------------------------------------------------------------
# matching

def _match_seq(pfs, tfs, binding, pi, pos, out):
    if pi == len(pfs):
        if pos == len(tfs):
            out.append(dict(binding))
        return
    pf = pfs[pi]
    if isinstance(pf, Letter):
        bound = binding.get(pf.name)
        if bound is not None:
            bf = factors(bound)
            if tfs[pos:pos + len(bf)] == bf:
                _match_seq(pfs, tfs, binding, pi + 1, pos + len(bf), out)
            return
        # shortest spans first; every nonempty span is a candidate
        for end in range(pos + 1, len(tfs) + 1):
            binding[pf.name] = mk_product(tfs[pos:end])
            _match_seq(pfs, tfs, binding, pi + 1, end, out)
            del binding[pf.name]
        return
    # pf is a pseudoinversion node: it can only match one of the same shape
    if pos < len(tfs) and isinstance(tfs[pos], PseudoInverse):
        inner = []
        _match_seq(factors(pf.arg), factors(tfs[pos].arg), binding, 0, 0, inner)
        for b in inner:
            merged = dict(binding)
            merged.update(b)
            saved = dict(binding)
            binding.clear()
            binding.update(merged)
            _match_seq(pfs, tfs, binding, pi + 1, pos + 1, out)
            binding.clear()
            binding.update(saved)


def match_instance(pattern: Term, target: Term):
    """All substitutions s with substitute(pattern, s) == target, modulo
    product flattening."""
    out: list = []
    _match_seq(factors(pattern), factors(target), {}, 0, 0, out)
    return out


# ---------------------------------------------------------------------------
# single steps

@dataclass(frozen=True)
class DeductionStep:
    start: Term
    end: Term
    theory: str
    identity: Identity
    forward: bool            # False when the identity was used right-to-left
    substitution: dict = field(compare=False)
    position: tuple = field(compare=False)  # factor span or ("pinv", index)


def _span_rewrites(t: Term, lhs: Term, rhs: Term):
    """(result, substitution, position) for every single application."""
    tf = factors(t)
    n = len(tf)
    for i in range(n):
        for j in range(i + 1, n + 1):
            segment = mk_product(tf[i:j])
            for sub in match_instance(lhs, segment):
                if any(a not in sub for a in content(rhs)):
                    continue
                image = substitute(rhs, sub)
                parts = list(tf[:i]) + [image] + list(tf[j:])
                yield mk_product(parts), sub, (i, j)
    for idx, f in enumerate(tf):
        if isinstance(f, PseudoInverse):
            for inner, sub, pos in _span_rewrites(f.arg, lhs, rhs):
                parts = list(tf)
                parts[idx] = PseudoInverse(inner)
                yield mk_product(parts), sub, ("pinv", idx) + (pos,)


def one_step(w: Term, w2: Term, th: Theory) -> Optional[DeductionStep]:
    """A witness that w rewrites to w2 by one identity of th."""
    for ident in th.effective_identities():
        for forward, (a, b) in ((True, (ident.lhs, ident.rhs)),
                                (False, (ident.rhs, ident.lhs))):
            if not content(b) <= content(a):
                continue  # orientation would leave letters uninstantiated
            for result, sub, pos in _span_rewrites(w, a, b):
                if result == w2:
                    return DeductionStep(w, w2, th.name, ident, forward,
                                         sub, pos)
    return None


@dataclass
class DeductionReport:
    valid: bool
    steps: list                      # DeductionStep per adjacent pair
    failed_at: Optional[int] = None  # index of the first unprovable pair

    def __bool__(self):
        return self.valid


def verify_deduction(seq: Sequence[Term],
                     theories: Sequence[Theory]) -> DeductionReport:
    """Validate that each adjacent pair is a one_step under some theory."""
    if len(seq) < 2:
        raise ValueError("a deduction needs at least two terms")
    steps = []
    for i in range(len(seq) - 1):
        step = None
        for th in theories:
            step = one_step(seq[i], seq[i + 1], th)
            if step is not None:
                break
        if step is None:
            return DeductionReport(False, steps, i)
        steps.append(step)
    return DeductionReport(True, steps)


# ---------------------------------------------------------------------------
# bounded search

@dataclass
class SearchResult:
    sequence: Optional[list]
    space_exhausted: bool  # True: no deduction exists within the size cap

    def __bool__(self):
        return self.sequence is not None


def _term_size(t: Term) -> int:
    return sum(occurrences(t).values())


def search_deduction(u: Term, v: Term, th: Theory, depth: int = 6,
                     size_cap: int = 12) -> SearchResult:
    """Breadth-first search for a deduction u -> ... -> v, visiting only
    terms with at most size_cap letter occurrences."""
    idents = th.effective_identities()
    if u == v:
        return SearchResult([u, v], False)
    parent = {u: None}
    frontier = deque([u])
    for _ in range(depth):
        if not frontier:
            return SearchResult(None, True)
        next_frontier = deque()
        while frontier:
            w = frontier.popleft()
            for ident in idents:
                for a, b in ((ident.lhs, ident.rhs), (ident.rhs, ident.lhs)):
                    if not content(b) <= content(a):
                        continue
                    for result, _sub, _pos in _span_rewrites(w, a, b):
                        if result in parent or _term_size(result) > size_cap:
                            continue
                        parent[result] = w
                        if result == v:
                            path = [result]
                            while path[-1] is not None:
                                prev = parent[path[-1]]
                                if prev is None:
                                    break
                                path.append(prev)
                            path.reverse()
                            return SearchResult(path, False)
                        next_frontier.append(result)
        frontier = next_frontier
    return SearchResult(None, not frontier)
