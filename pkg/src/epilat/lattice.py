"""Finite lattices: special elements, global structure, enumeration.

Elements are ids 0..n-1; order is kept as per-element bitmasks, so the
order-theoretic work is cheap integer arithmetic.  All eight special
element notions are evaluated from the primal definitions; each dual
notion is evaluated by running the primal check on the dual lattice,
never by a second hand-written formula.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence


class LatticeError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteLattice:
    labels: tuple
    up: tuple      # up[i] = bitmask of j with i <= j (includes i)
    down: tuple    # down[i] = bitmask of j with j <= i
    meet_table: tuple = field(compare=False)
    join_table: tuple = field(compare=False)
    bottom: int = field(compare=False, default=0)
    top: int = field(compare=False, default=0)
    tags: dict = field(compare=False, default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.labels)

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def meet(self, i: int, j: int) -> int:
        return self.meet_table[i][j]

    def join(self, i: int, j: int) -> int:
        return self.join_table[i][j]

    def index(self, label) -> int:
        return self.labels.index(label)

    def covers(self):
        """Pairs (i, j) with j covering i."""
        out = []
        for i in range(self.size):
            strict_up = self.up[i] & ~(1 << i)
            for j in _bits(strict_up):
                between = self.up[i] & self.down[j] & ~(1 << i) & ~(1 << j)
                if between == 0:
                    out.append((i, j))
        return out

    def dual(self) -> "FiniteLattice":
        return FiniteLattice(self.labels, self.down, self.up,
                             self.join_table, self.meet_table,
                             self.top, self.bottom, self.tags)

    def __repr__(self):
        return f"FiniteLattice(size={self.size})"


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _bound(masks, i, j, kind):
    common = masks[i] & masks[j]
    for m in _bits(common):
        if masks[m] == common:
            return m
    return None


def lattice_from_leq(labels: Sequence, leq) -> FiniteLattice:
    """Build from a predicate leq(i, j); verifies the lattice axioms."""
    n = len(labels)
    up = [0] * n
    down = [0] * n
    for i in range(n):
        for j in range(n):
            if leq(i, j):
                up[i] |= 1 << j
                down[j] |= 1 << i
    for i in range(n):
        if not up[i] >> i & 1:
            raise LatticeError(f"order not reflexive at {labels[i]}")
        for j in _bits(up[i]):
            if i != j and up[j] >> i & 1:
                raise LatticeError(f"order not antisymmetric on "
                                   f"{labels[i]}, {labels[j]}")
            if up[j] & ~up[i]:
                raise LatticeError(f"order not transitive above {labels[i]}")
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            m = _bound(down, i, j, "meet")
            jn = _bound(up, i, j, "join")
            if m is None:
                raise LatticeError(f"no meet of {labels[i]}, {labels[j]}")
            if jn is None:
                raise LatticeError(f"no join of {labels[i]}, {labels[j]}")
            meet[i][j] = m
            join[i][j] = jn
    bottom = next(i for i in range(n) if down[i] == 1 << i)
    top = next(i for i in range(n) if up[i] == 1 << i)
    return FiniteLattice(tuple(labels), tuple(up), tuple(down),
                         tuple(tuple(r) for r in meet),
                         tuple(tuple(r) for r in join), bottom, top)


def lattice_from_covers(labels: Sequence, covers: Iterable) -> FiniteLattice:
    """Build from cover pairs (lower, upper) given as labels or ids."""
    labels = list(labels)
    idx = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    up = [1 << i for i in range(n)]
    edges = []
    for lo, hi in covers:
        a = idx[lo] if lo in idx else lo
        b = idx[hi] if hi in idx else hi
        edges.append((a, b))
    changed = True
    while changed:  # transitive closure
        changed = False
        for a, b in edges:
            new = up[a] | up[b]
            if new != up[a]:
                up[a] = new
                changed = True
        for i in range(n):
            for j in _bits(up[i]):
                if up[j] & ~up[i]:
                    up[i] |= up[j]
                    changed = True
    for a, b in edges:
        if up[b] >> a & 1:
            raise LatticeError("cover relation has a cycle")
    return lattice_from_leq(labels, lambda i, j: bool(up[i] >> j & 1))


# ---------------------------------------------------------------------------
# special elements

_PRIMAL = ("neutral", "standard", "distributive", "modular", "upper_modular")
_DUAL_OF = {"costandard": "standard", "codistributive": "distributive",
            "lower_modular": "upper_modular"}
SPECIAL_KINDS = ("neutral", "standard", "costandard", "distributive",
                 "codistributive", "modular", "lower_modular", "upper_modular")


def _primal_witness(L: FiniteLattice, kind: str, x: int):
    """First (y, z) violating the primal law, or None."""
    n = L.size
    mt, jt = L.meet_table, L.join_table
    for y in range(n):
        for z in range(n):
            if kind == "neutral":
                lhs = mt[mt[jt[x][y]][jt[y][z]]][jt[z][x]]
                rhs = jt[jt[mt[x][y]][mt[y][z]]][mt[z][x]]
            elif kind == "standard":
                lhs = mt[jt[x][y]][z]
                rhs = jt[mt[x][z]][mt[y][z]]
            elif kind == "distributive":
                lhs = jt[x][mt[y][z]]
                rhs = mt[jt[x][y]][jt[x][z]]
            elif kind == "modular":
                if not L.leq(y, z):
                    continue
                lhs = mt[jt[x][y]][z]
                rhs = jt[mt[x][z]][y]
            elif kind == "upper_modular":
                if not L.leq(y, x):
                    continue
                lhs = mt[jt[z][y]][x]
                rhs = jt[mt[z][x]][y]
            else:
                raise ValueError(kind)
            if lhs != rhs:
                return (y, z)
    return None


def special_witness(L: FiniteLattice, kind: str, x: int):
    if kind in _DUAL_OF:
        return _primal_witness(L.dual(), _DUAL_OF[kind], x)
    return _primal_witness(L, kind, x)


def is_special(L: FiniteLattice, kind: str, x: int) -> bool:
    return special_witness(L, kind, x) is None


@dataclass(frozen=True)
class SpecialProfile:
    element: int
    flags: dict = field(compare=False)
    witnesses: dict = field(compare=False)

    def __getitem__(self, kind):
        return self.flags[kind]


def special_profile(L: FiniteLattice, x: int) -> SpecialProfile:
    flags, witnesses = {}, {}
    for kind in SPECIAL_KINDS:
        w = special_witness(L, kind, x)
        flags[kind] = w is None
        witnesses[kind] = w
    return SpecialProfile(x, flags, witnesses)


# ---------------------------------------------------------------------------
# global structure

@dataclass(frozen=True)
class LatticeProps:
    is_modular: bool
    is_distributive: bool
    pentagon: Optional[tuple]   # N5 witness as 5 element ids
    diamond: Optional[tuple]    # M3 witness as 5 element ids


def _find_pentagon(L: FiniteLattice):
    n = L.size
    mt, jt = L.meet_table, L.join_table
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if not L.leq(y, z):
                    continue
                a = jt[mt[x][z]][y]
                b = mt[jt[x][y]][z]
                if a == b:
                    continue
                p, q = mt[x][b], jt[x][a]
                if (len({p, x, a, b, q}) == 5 and mt[x][a] == p
                        and jt[x][b] == q and L.leq(a, b)):
                    return (p, x, a, b, q)
    return None


def _find_diamond(L: FiniteLattice):
    n = L.size
    mt, jt = L.meet_table, L.join_table
    for x, y, z in itertools.combinations(range(n), 3):
        p = jt[jt[mt[x][y]][mt[y][z]]][mt[z][x]]
        q = mt[mt[jt[x][y]][jt[y][z]]][jt[z][x]]
        if p == q:
            continue
        mx = jt[mt[x][q]][p]
        my = jt[mt[y][q]][p]
        mz = jt[mt[z][q]][p]
        mids = (mx, my, mz)
        if (len({p, q, mx, my, mz}) == 5
                and all(mt[a][b] == p and jt[a][b] == q
                        for a, b in itertools.combinations(mids, 2))):
            return (p, mx, my, mz, q)
    return None


def lattice_props(L: FiniteLattice) -> LatticeProps:
    pentagon = _find_pentagon(L)
    if pentagon is not None:
        return LatticeProps(False, False, pentagon, None)
    diamond = _find_diamond(L)
    return LatticeProps(True, diamond is None, None, diamond)


@dataclass(frozen=True)
class SubdirectReport:
    ok: bool
    reason: str


def neutral_subdirect_check(L: FiniteLattice, x: int) -> SubdirectReport:
    """Check that y -> (y & x, y | x) embeds L into (x] times [x)
    subdirectly, the decomposition a neutral element induces."""
    n = L.size
    mt, jt = L.meet_table, L.join_table
    images = {}
    for y in range(n):
        img = (mt[y][x], jt[y][x])
        if img in images:
            return SubdirectReport(
                False, f"not injective: elements {images[img]} and {y} "
                       f"share image {img}")
        images[img] = y
    for y in range(n):
        for z in range(n):
            m = mt[y][z]
            if (mt[m][x], jt[m][x]) != (mt[mt[y][x]][mt[z][x]],
                                        mt[jt[y][x]][jt[z][x]]):
                return SubdirectReport(False,
                                       f"meet not preserved at ({y}, {z})")
            j = jt[y][z]
            if (mt[j][x], jt[j][x]) != (jt[mt[y][x]][mt[z][x]],
                                        jt[jt[y][x]][jt[z][x]]):
                return SubdirectReport(False,
                                       f"join not preserved at ({y}, {z})")
    below = set(_bits(L.down[x]))
    above = set(_bits(L.up[x]))
    if {img[0] for img in images} != below:
        return SubdirectReport(False, "first coordinate not onto (x]")
    if {img[1] for img in images} != above:
        return SubdirectReport(False, "second coordinate not onto [x)")
    return SubdirectReport(True, "")


# ---------------------------------------------------------------------------
# enumeration up to isomorphism

def _topo_posets(n: int):
    """Strict down-set masks of all posets on 0..n-1, labels topologically
    sorted, with 0 the unique minimal element."""
    down = [0] * n

    def rec(j):
        if j == n:
            yield tuple(down)
            return
        options = [0] if j == 0 else range(1, 1 << j)
        for s in options:
            ok = True
            rest = s
            while rest:
                low = rest & -rest
                if down[low.bit_length() - 1] & ~s:
                    ok = False
                    break
                rest ^= low
            if ok:
                down[j] = s
                yield from rec(j + 1)

    yield from rec(0)


def _is_lattice_masks(n, up, down):
    for i in range(n):
        for j in range(i + 1, n):
            if _bound(up, i, j, "join") is None:
                return False
            if _bound(down, i, j, "meet") is None:
                return False
    return True


def _canonical_key(n, up):
    down = [0] * n
    for i in range(n):
        for j in _bits(up[i]):
            down[j] |= 1 << i
    inv = [(bin(up[i]).count("1"), bin(down[i]).count("1")) for i in range(n)]
    for _ in range(3):  # refine by neighbour multisets
        inv = [(inv[i],
                tuple(sorted(inv[j] for j in _bits(up[i]) if j != i)),
                tuple(sorted(inv[j] for j in _bits(down[i]) if j != i)))
               for i in range(n)]
    order = sorted(range(n), key=lambda i: (inv[i], 0))
    classes = []
    for i in order:
        if classes and inv[classes[-1][-1]] == inv[i]:
            classes[-1].append(i)
        else:
            classes.append([i])
    best = None
    for perm_parts in itertools.product(*[itertools.permutations(c)
                                          for c in classes]):
        seq = [i for part in perm_parts for i in part]
        pos = {old: new for new, old in enumerate(seq)}
        key = tuple(sum(1 << pos[j] for j in _bits(up[old]))
                    for old in seq)
        if best is None or key < best:
            best = key
    return best


def enumerate_lattices(n: int):
    """All lattices with n elements, one per isomorphism class."""
    if not 1 <= n <= 7:
        raise ValueError("enumeration supported for 1 <= n <= 7")
    if n == 1:
        return [lattice_from_leq(("e0",), lambda i, j: True)]
    seen = {}
    for downs in _topo_posets(n):
        up = [1 << i for i in range(n)]
        for j in range(n):
            for i in _bits(downs[j]):
                up[i] |= 1 << j
        if bin(up[0]).count("1") != n:   # 0 must be the bottom
            continue
        tops = [i for i in range(n) if up[i] == 1 << i]
        if len(tops) != 1:
            continue
        down_full = [downs[i] | 1 << i for i in range(n)]
        if not _is_lattice_masks(n, up, down_full):
            continue
        key = _canonical_key(n, up)
        if key not in seen:
            seen[key] = up
    out = []
    for up in seen.values():
        out.append(lattice_from_leq(tuple(f"e{i}" for i in range(n)),
                                    lambda i, j, u=up: bool(u[i] >> j & 1)))
    return out


# ---------------------------------------------------------------------------
# files and DOT

def parse_lattice_file(text: str) -> FiniteLattice:
    """Line format: 'elements: a b c', 'cover: a < b', 'label: a = SL'."""
    elements = None
    covers = []
    tags = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("elements:"):
            elements = line[len("elements:"):].split()
        elif line.startswith("cover:"):
            body = line[len("cover:"):]
            parts = [p.strip() for p in body.split("<")]
            if len(parts) != 2 or not all(parts):
                raise LatticeError(f"line {lineno}: malformed cover")
            covers.append((parts[0], parts[1]))
        elif line.startswith("label:"):
            body = line[len("label:"):]
            parts = [p.strip() for p in body.split("=")]
            if len(parts) != 2 or not all(parts):
                raise LatticeError(f"line {lineno}: malformed label")
            tags[parts[0]] = parts[1]
        else:
            raise LatticeError(f"line {lineno}: unrecognized directive")
    if elements is None:
        raise LatticeError("missing 'elements:' line")
    unknown = ({a for a, _ in covers} | {b for _, b in covers}
               | set(tags)) - set(elements)
    if unknown:
        raise LatticeError(f"undeclared elements: {sorted(unknown)}")
    L = lattice_from_covers(elements, covers)
    L.tags.update(tags)
    return L


def to_dot(L: FiniteLattice, name: str = "lattice") -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i, lab in enumerate(L.labels):
        tag = L.tags.get(lab)
        text = f"{lab} = {tag}" if tag else str(lab)
        lines.append(f'  n{i} [label="{text}"];')
    for i, j in L.covers():
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines)
