"""Finite epigroups given by Cayley tables.

Every finite semigroup is an epigroup: some power of each element lies
in a subgroup.  The unary operation sends x to the group inverse of
x * x^w inside the maximal subgroup around the idempotent power x^w of
x; both maps are computed inside the monogenic subsemigroup generated
by x, no Green's relation machinery is needed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .terms import (Identity, Letter, Product, PseudoInverse, Term, content,
                    expand_zero)


class NotAssociativeError(ValueError):
    pass


class CayleyFormatError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteEpigroup:
    name: str
    elements: tuple            # element names, index = internal id
    table: tuple               # table[i][j] = id of product
    omega_map: tuple = field(compare=False)
    pinv_map: tuple = field(compare=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def mult(self, i: int, j: int) -> int:
        return self.table[i][j]

    def index(self, name: str) -> int:
        return self.elements.index(name)

    def __repr__(self):
        return f"FiniteEpigroup({self.name!r}, order={self.order})"


def _check_associative(table: Sequence[Sequence[int]]) -> None:
    n = len(table)
    rng = range(n)
    for i in rng:
        ti = table[i]
        for j in rng:
            tij = table[ti[j]]
            tj = table[j]
            for k in rng:
                if tij[k] != ti[tj[k]]:
                    raise NotAssociativeError(
                        f"(a{i} a{j}) a{k} != a{i} (a{j} a{k})")


def _monogenic_data(table, x):
    """(omega, pinv) of x, via the cycle of powers of x."""
    powers = [x]
    seen = {x: 0}
    while True:
        nxt = table[powers[-1]][x]
        if nxt in seen:
            start = seen[nxt]
            break
        seen[nxt] = len(powers)
        powers.append(nxt)
    kernel = powers[start:]
    om = next(e for e in kernel if table[e][e] == e)
    xe = table[x][om]
    pinv = next(g for g in kernel if table[g][xe] == om and table[xe][g] == om)
    return om, pinv


def from_table(name: str, elements: Sequence[str],
               table: Sequence[Sequence[int]]) -> FiniteEpigroup:
    n = len(elements)
    if len(set(elements)) != n:
        raise CayleyFormatError("duplicate element names")
    if len(table) != n or any(len(row) != n for row in table):
        raise CayleyFormatError("table is not square")
    if any(not (0 <= v < n) for row in table for v in row):
        raise CayleyFormatError("table entry out of range")
    _check_associative(table)
    omega_map, pinv_map = [], []
    for x in range(n):
        om, pv = _monogenic_data(table, x)
        omega_map.append(om)
        pinv_map.append(pv)
    return FiniteEpigroup(name, tuple(elements),
                          tuple(tuple(row) for row in table),
                          tuple(omega_map), tuple(pinv_map))


def from_cayley(name: str, elements: Sequence[str],
                rows: Sequence[Sequence[str]]) -> FiniteEpigroup:
    """Build from a table whose entries are element names."""
    idx = {e: i for i, e in enumerate(elements)}
    try:
        table = [[idx[v] for v in row] for row in rows]
    except KeyError as exc:
        raise CayleyFormatError(f"unknown element {exc.args[0]!r}") from None
    return from_table(name, elements, table)


def parse_cayley_file(text: str, name: str = "cayley") -> FiniteEpigroup:
    """First non-comment line: element names; then one row per element."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise CayleyFormatError("empty table file")
    elements = lines[0].split()
    rows = [ln.split() for ln in lines[1:]]
    if len(rows) != len(elements):
        raise CayleyFormatError(
            f"expected {len(elements)} rows, found {len(rows)}")
    return from_cayley(name, elements, rows)


# ---------------------------------------------------------------------------
# evaluation

def eval_term(S: FiniteEpigroup, t: Term, assignment: dict) -> int:
    """Value of t under an assignment of letter names to element ids."""
    if isinstance(t, Letter):
        return assignment[t.name]
    if isinstance(t, PseudoInverse):
        return S.pinv_map[eval_term(S, t.arg, assignment)]
    val = eval_term(S, t.factors[0], assignment)
    for f in t.factors[1:]:
        val = S.table[val][eval_term(S, f, assignment)]
    return val


def satisfies(S: FiniteEpigroup, ident: Identity) -> bool:
    """Whether the identity holds under every assignment."""
    if ident.is_zero:
        return all(satisfies(S, part) for part in expand_zero(ident))
    letters = sorted(content(ident.lhs) | content(ident.rhs))
    for values in itertools.product(range(S.order), repeat=len(letters)):
        assignment = dict(zip(letters, values))
        if eval_term(S, ident.lhs, assignment) != eval_term(S, ident.rhs, assignment):
            return False
    return True


# ---------------------------------------------------------------------------
# structural classification

@dataclass(frozen=True)
class EpigroupClass:
    is_completely_regular: bool  # x = ~(~(x)) everywhere
    is_combinatorial: bool       # all subgroups trivial: ~(x) = x^w
    is_nil: bool                 # zero element and ~(x) = 0
    is_group: bool
    is_semilattice: bool
    is_commutative: bool
    zero: Optional[int]
    idempotents: frozenset
    group_elements: frozenset


def classify_epigroup(S: FiniteEpigroup) -> EpigroupClass:
    n = S.order
    idempotents = frozenset(i for i in range(n) if S.mult(i, i) == i)
    group_elements = frozenset(i for i in range(n)
                               if S.mult(i, S.omega_map[i]) == i)
    zero = None
    for z in idempotents:
        if all(S.mult(z, i) == z and S.mult(i, z) == z for i in range(n)):
            zero = z
            break
    commutative = all(S.mult(i, j) == S.mult(j, i)
                      for i in range(n) for j in range(n))
    cr = all(S.pinv_map[S.pinv_map[i]] == i for i in range(n))
    combinatorial = all(S.pinv_map[i] == S.omega_map[i] for i in range(n))
    is_nil = zero is not None and all(S.pinv_map[i] == zero for i in range(n))
    is_group = len(idempotents) == 1 and len(group_elements) == n
    is_semilattice = commutative and len(idempotents) == n
    return EpigroupClass(cr, combinatorial, is_nil, is_group, is_semilattice,
                         commutative, zero, idempotents, group_elements)


# ---------------------------------------------------------------------------
# builtins and products

def _builtin_sl2():
    return from_table("SL2", ("e", "f"), [[0, 1], [1, 1]])


def _builtin_null2():
    return from_table("NULL2", ("0", "a"), [[0, 0], [0, 0]])


def _builtin_lz2():
    return from_table("LZ2", ("a", "b"), [[0, 0], [1, 1]])


def _builtin_rz2():
    return from_table("RZ2", ("a", "b"), [[0, 1], [0, 1]])


def _builtin_cm(m: int):
    """Cyclic combinatorial monoid of index m: 1, c, ..., c^m, c^(m+1) = c^m."""
    if m < 0:
        raise ValueError("Cm requires m >= 0")
    names = ["1"] + [f"c{k}" if k > 1 else "c" for k in range(1, m + 1)]
    table = [[min(i + j, m) for j in range(m + 1)] for i in range(m + 1)]
    return from_table(f"Cm({m})", names, table)


def _builtin_dm(m: int):
    """Monogenic combinatorial semigroup d, d^2, ..., d^m with d^(m+1) = d^m."""
    if m < 1:
        raise ValueError("Dm requires m >= 1")
    names = [f"d{k}" if k > 1 else "d" for k in range(1, m + 1)]
    table = [[min(i + j + 2, m) - 1 for j in range(m)] for i in range(m)]
    return from_table(f"Dm({m})", names, table)


def _builtin_zn(n: int):
    if n < 1:
        raise ValueError("Zn requires n >= 1")
    names = [f"g{k}" if k else "1" for k in range(n)]
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return from_table(f"Zn({n})", names, table)


_BUILTINS = {
    "SL2": (_builtin_sl2, False),
    "NULL2": (_builtin_null2, False),
    "LZ2": (_builtin_lz2, False),
    "RZ2": (_builtin_rz2, False),
    "Cm": (_builtin_cm, True),
    "Dm": (_builtin_dm, True),
    "Zn": (_builtin_zn, True),
}


def builtin(name: str, param: Optional[int] = None) -> FiniteEpigroup:
    try:
        factory, wants_param = _BUILTINS[name]
    except KeyError:
        raise ValueError(f"unknown builtin {name!r}") from None
    if wants_param:
        if param is None:
            raise ValueError(f"builtin {name} needs a parameter")
        return factory(param)
    if param is not None:
        raise ValueError(f"builtin {name} takes no parameter")
    return factory()


def builtin_names():
    return tuple(_BUILTINS)


def direct_product(A: FiniteEpigroup, B: FiniteEpigroup) -> FiniteEpigroup:
    pairs = list(itertools.product(range(A.order), range(B.order)))
    idx = {p: i for i, p in enumerate(pairs)}
    names = tuple(f"({A.elements[a]},{B.elements[b]})" for a, b in pairs)
    table = [[idx[(A.mult(a, c), B.mult(b, d))] for (c, d) in pairs]
             for (a, b) in pairs]
    S = from_table(f"{A.name}x{B.name}", names, table)
    # unary structure must be computed componentwise; cross-check it
    for (a, b) in pairs:
        assert S.omega_map[idx[(a, b)]] == idx[(A.omega_map[a], B.omega_map[b])]
        assert S.pinv_map[idx[(a, b)]] == idx[(A.pinv_map[a], B.pinv_map[b])]
    return S
