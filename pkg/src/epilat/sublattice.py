"""Sublattices of the variety lattice built from the registry.

build_LI assembles the subvariety lattice of the largest commutative
variety in the registry satisfying x^2 y = x y^2: four chains indexed
by nilpotency degree with four limit varieties on top.  build_sublattice
closes a seed set under formal joins and orders the nodes with the
decision procedures; comparisons outside their reach must be supplied
as facts, otherwise construction fails loudly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import inf
from typing import Iterable, Optional, Sequence

from . import varieties as V
from .lattice import FiniteLattice, lattice_from_leq
from .terms import Identity, word
from .varieties import VarietyId, contains, contains_atom, decide


class UnresolvableOrderError(ValueError):
    pass


# ---------------------------------------------------------------------------
# the four-chain lattice

_COLS = ("L", "K", "J", "I")
_MIN_ROW = {"L": 1, "K": 3, "J": 4, "I": 4}
_CHAIN = {"L": V.Ln, "K": V.Kn, "J": V.Jn, "I": V.In}
_TOP = {"L": V.L, "K": V.K, "J": V.J, "I": V.I}


@dataclass(frozen=True)
class VarietyLattice:
    lattice: FiniteLattice
    varieties: tuple  # VarietyId per lattice element, aligned with labels

    def variety(self, label) -> VarietyId:
        return self.varieties[self.lattice.index(label)]


def _li_members(n_max: int):
    out = []
    for col in _COLS:
        for row in range(_MIN_ROW[col], n_max + 1):
            out.append((col, row, _CHAIN[col](row)))
        out.append((col, inf, _TOP[col]))
    return out


def build_LI(n_max: int) -> VarietyLattice:
    """Chains and limits up to degree n_max, ordered by the decision
    procedures themselves."""
    if n_max < 4:
        raise ValueError("build_LI needs n_max >= 4")
    members = _li_members(n_max)
    labels = tuple(str(v) for _, _, v in members)
    vs = tuple(v for _, _, v in members)
    return VarietyLattice(
        lattice_from_leq(labels, lambda i, j: contains(vs[j], vs[i])), vs)


def expected_LI(n_max: int) -> VarietyLattice:
    """Same members, ordered combinatorially: componentwise on
    (chain position, degree row)."""
    if n_max < 4:
        raise ValueError("expected_LI needs n_max >= 4")
    members = _li_members(n_max)
    coord = [(_COLS.index(col), row) for col, row, _ in members]
    labels = tuple(str(v) for _, _, v in members)
    vs = tuple(v for _, _, v in members)
    return VarietyLattice(
        lattice_from_leq(labels,
                         lambda i, j: (coord[i][0] <= coord[j][0]
                                       and coord[i][1] <= coord[j][1])), vs)


def label_isomorphic(A: VarietyLattice, B: VarietyLattice) -> bool:
    """Same labels and the label bijection preserves the order."""
    la, lb = A.lattice, B.lattice
    if sorted(la.labels) != sorted(lb.labels):
        return False
    to_b = {i: lb.index(lab) for i, lab in enumerate(la.labels)}
    return all(la.leq(i, j) == lb.leq(to_b[i], to_b[j])
               for i in range(la.size) for j in range(la.size))


# ---------------------------------------------------------------------------
# seeded sublattices

@dataclass(frozen=True)
class VarietyNode:
    """Formal join of registered varieties; parts form an antichain."""
    parts: frozenset

    def __str__(self):
        return " v ".join(sorted(str(p) for p in self.parts))


_SEPARATION_LETTERS = "xyz"
_SEPARATION_LENGTH = 4


def _separation_universe():
    words = []
    for k in range(1, _SEPARATION_LENGTH + 1):
        for seq in itertools.product(_SEPARATION_LETTERS, repeat=k):
            words.append(word("".join(seq)))
    idents = [Identity(w, None) for w in words]
    idents += [Identity(u, v) for u, v in itertools.combinations(words, 2)]
    return idents


_SEPARATION_CACHE: list = []


def _separating_identity(A: VarietyId, parts) -> Optional[Identity]:
    """An identity holding in every part of the join but failing in A;
    its existence refutes A <= join(parts)."""
    if not _SEPARATION_CACHE:
        _SEPARATION_CACHE.extend(_separation_universe())
    for ident in _SEPARATION_CACHE:
        if not decide(A, ident) and all(decide(B, ident) for B in parts):
            return ident
    return None


class _Order:
    def __init__(self, facts=None):
        self.facts = dict(facts or {})
        self._single_cache = {}

    def single_leq_node(self, A: VarietyId, node: VarietyNode) -> bool:
        key = (A, node.parts)
        if key in self._single_cache:
            return self._single_cache[key]
        self._single_cache[key] = result = self._resolve(A, node)
        return result

    def _resolve(self, A, node):
        if decide(A, Identity(word("x"), word("y"))):
            return True  # the trivial variety sits below everything
        if any(contains(B, A) for B in node.parts):
            return True
        for atom in (V.SL, V.ZM):
            if V.variety_equal(A, atom):
                # an atom lies under a join iff under some joinand
                return any(contains_atom(B, atom) for B in node.parts)
        fact = self.facts.get((str(A), frozenset(str(B) for B in node.parts)))
        if fact is not None:
            return fact
        if _separating_identity(A, node.parts) is not None:
            return False
        raise UnresolvableOrderError(
            f"cannot decide {A} <= {node}; supply a fact entry")

    def node_leq(self, a: VarietyNode, b: VarietyNode) -> bool:
        return all(self.single_leq_node(A, b) for A in a.parts)

    def make_node(self, parts: Iterable) -> VarietyNode:
        parts = list(parts)
        keep = []
        for i, A in enumerate(parts):
            rest = parts[:i] + parts[i + 1:]
            if rest and self.single_leq_node(A, VarietyNode(frozenset(rest))):
                continue
            keep.append(A)
        return VarietyNode(frozenset(keep))


def build_sublattice(seeds: Sequence[VarietyId],
                     facts=None) -> VarietyLattice:
    """Close the seeds under formal join and order the resulting nodes.

    facts maps (variety name, frozenset of joinand names) to a bool and
    settles containments the decision procedures cannot.  The result is
    checked to be a lattice; a missing meet aborts the construction.
    """
    order = _Order(facts)
    nodes = {order.make_node([s]) for s in seeds}
    changed = True
    while changed:
        changed = False
        for a, b in itertools.combinations(list(nodes), 2):
            j = order.make_node(list(a.parts | b.parts))
            if j not in nodes:
                nodes.add(j)
                changed = True
    node_list = sorted(nodes, key=str)
    labels = tuple(str(n) for n in node_list)
    lat = lattice_from_leq(
        labels, lambda i, j: order.node_leq(node_list[i], node_list[j]))
    return VarietyLattice(lat, tuple(node_list))
