"""Decision procedures for a registry of epigroup varieties.

Each registered variety carries a finite identity basis and a word
problem solver: decide(V, u = v) answers whether the identity holds in
V.  For nil varieties the solver goes through a normal form which is
either the distinguished Zero or a canonical word; two words are equal
exactly when their normal forms coincide.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from math import inf
from typing import Iterable, Optional, Sequence

from . import epigroups
from .terms import (Identity, Letter, Product, PseudoInverse, Term, content,
                    expand_zero, first_letter, is_semigroup_word, last_letter,
                    letter_sequence, mk_product, omega, parse_identity,
                    parse_term, word)


class UnknownVarietyError(ValueError):
    pass


class NotNilVarietyError(ValueError):
    pass


@dataclass(frozen=True)
class VarietyId:
    family: str
    param: Optional[int] = None
    words: tuple = ()

    def __str__(self) -> str:
        if self.family == "ZR":
            return "zr[" + "; ".join(str(w) for w in self.words) + "]"
        if self.family == "CN":
            return "cn[" + "; ".join(str(w) for w in self.words) + "]"
        if self.param is None:
            return self.family
        base = {"C": "C", "A": "A", "Qn": "Q", "Rn": "R", "In": "I",
                "Jn": "J", "Kn": "K", "Ln": "L", "W": "W"}[self.family]
        return f"{base}({self.param})"


T = VarietyId("T")
SL = VarietyId("SL")
ZM = VarietyId("ZM")
LZ = VarietyId("LZ")
RZ = VarietyId("RZ")
LZM = VarietyId("LZM")
RZM = VarietyId("RZM")
P = VarietyId("P")
PBAR = VarietyId("Pbar")
Q = VarietyId("Q")
R = VarietyId("R")
I = VarietyId("I")
J = VarietyId("J")
K = VarietyId("K")
L = VarietyId("L")


def _param(family, n, minimum):
    if n < minimum:
        raise ValueError(f"{family} requires parameter >= {minimum}, got {n}")
    return VarietyId(family, n)


def C(m: int) -> VarietyId:
    return _param("C", m, 0)


def A(n: int) -> VarietyId:
    return _param("A", n, 0)


def Qn(n: int) -> VarietyId:
    return _param("Qn", n, 1)


def Rn(n: int) -> VarietyId:
    return _param("Rn", n, 1)


def In(n: int) -> VarietyId:
    return _param("In", n, 1)


def Jn(n: int) -> VarietyId:
    return _param("Jn", n, 1)


def Kn(n: int) -> VarietyId:
    return _param("Kn", n, 1)


def Ln(n: int) -> VarietyId:
    return _param("Ln", n, 1)


def W(n: int) -> VarietyId:
    return _param("W", n, 1)


def zero_reduced(words: Sequence[Term]) -> VarietyId:
    """var{w = 0 : w in words}.  The basis must force nilness, which for
    a semigroup-word basis is automatic; other bases are rejected."""
    ws = tuple(words)
    if not ws or not all(is_semigroup_word(w) for w in ws):
        raise ValueError("zero_reduced needs a nonempty semigroup-word basis")
    return VarietyId("ZR", None, ws)


def commutative_nil(words: Sequence[Term]) -> VarietyId:
    """var({w = 0 : w in words} + commutativity)."""
    ws = tuple(words)
    if not ws or not all(is_semigroup_word(w) for w in ws):
        raise ValueError("commutative_nil needs a nonempty semigroup-word basis")
    return VarietyId("CN", None, ws)


_NIL_FAMILIES = frozenset({"ZM", "Q", "Qn", "R", "Rn", "I", "In", "J", "Jn",
                           "K", "Kn", "L", "Ln", "W", "ZR", "CN"})
_COMM_NIL_FAMILIES = frozenset({"I", "In", "J", "Jn", "K", "Kn", "L", "Ln",
                                "W", "CN"})


def linear_word(n: int) -> Term:
    return mk_product([Letter(f"x{i}") for i in range(1, n + 1)])


def _power(letter: str, k: int) -> Term:
    return mk_product([Letter(letter)] * k)


# ---------------------------------------------------------------------------
# identity bases

def basis(V: VarietyId) -> tuple:
    fam, n = V.family, V.param
    zid = lambda w: Identity(w, None)
    eq = lambda a, b: Identity(word(a), word(b))
    comm = eq("xy", "yx")
    if fam == "T":
        return (Identity(Letter("x"), Letter("y")),)
    if fam == "SL":
        return (eq("xx", "x"), comm)
    if fam == "ZM":
        return (zid(word("xy")),)
    if fam == "LZ":
        return (eq("xy", "x"),)
    if fam == "RZ":
        return (eq("xy", "y"),)
    if fam == "LZM":
        return (eq("xyz", "xy"),)
    if fam == "RZM":
        return (eq("xyz", "yz"),)
    if fam == "P":
        return (eq("xy", "xxy"), eq("xxyy", "yyxx"))
    if fam == "Pbar":
        return (eq("xy", "xyy"), eq("xxyy", "yyxx"))
    if fam == "C":
        if n == 0:
            return (Identity(Letter("x"), Letter("y")),)
        return (Identity(_power("x", n), _power("x", n + 1)), comm)
    if fam == "A":
        if n == 0:
            return (comm, Identity(mk_product([Letter("x"), Letter("y"),
                                               PseudoInverse(Letter("y"))]),
                                   Letter("x")))
        # x^n y = y forces x^n to act as a global identity, so members
        # are exactly the abelian groups of exponent dividing n
        return (Identity(mk_product([_power("x", n), Letter("y")]),
                         Letter("y")), comm)
    if fam == "Q":
        return (zid(word("xxy")), zid(word("xyx")), zid(word("yxx")))
    if fam == "Qn":
        return basis(Q) + (zid(linear_word(n)),)
    if fam == "R":
        return (zid(word("xx")), zid(word("xyx")))
    if fam == "Rn":
        return basis(R) + (zid(linear_word(n)),)
    if fam == "I":
        return (eq("xxy", "xyy"), comm, zid(word("xxyz")))
    if fam == "In":
        return basis(I) + (zid(linear_word(n)),)
    if fam == "J":
        return basis(I) + (zid(word("xxx")),)
    if fam == "Jn":
        return basis(J) + (zid(linear_word(n)),)
    if fam == "K":
        return (zid(word("xxy")), comm)
    if fam == "Kn":
        return basis(K) + (zid(linear_word(n)),)
    if fam == "L":
        return (zid(word("xx")), comm)
    if fam == "Ln":
        return basis(L) + (zid(linear_word(n)),)
    if fam == "W":
        return (zid(word("xx")), zid(linear_word(n + 1)), comm)
    if fam == "ZR":
        return tuple(zid(w) for w in V.words)
    if fam == "CN":
        return tuple(zid(w) for w in V.words) + (comm,)
    raise UnknownVarietyError(fam)


# ---------------------------------------------------------------------------
# word problem: per-family term signatures

def _square_pinv(t: Term) -> Term:
    """Eliminate ~() in varieties satisfying x^2 = x^3, where ~(u) = u^2."""
    if isinstance(t, Letter):
        return t
    if isinstance(t, PseudoInverse):
        s = _square_pinv(t.arg)
        return mk_product([s, s])
    return mk_product([_square_pinv(f) for f in t.factors])


def _exp_vector(t: Term) -> Counter:
    """Signed letter exponents; ~() inverts, as in any group."""
    if isinstance(t, Letter):
        return Counter([t.name])
    if isinstance(t, PseudoInverse):
        return Counter({a: -k for a, k in _exp_vector(t.arg).items()})
    total = Counter()
    for f in t.factors:
        total.update(_exp_vector(f))
    return total


def _capped_exp(t: Term, m: int) -> dict:
    """Letter exponents capped at m; ~(u) contributes u^m (x^m = x^(m+1))."""
    if isinstance(t, Letter):
        return {t.name: 1}
    if isinstance(t, PseudoInverse):
        return {a: m for a in content(t.arg)}
    total: dict = {}
    for f in t.factors:
        for a, k in _capped_exp(f, m).items():
            total[a] = min(m, total.get(a, 0) + k)
    return total


class _ZeroNF:
    __slots__ = ()

    def __repr__(self):
        return "Zero"


Zero = _ZeroNF()


def _contains_instance(seq: tuple, pat: tuple) -> bool:
    """Does seq have a factor that is a substitution instance of pat?

    pat is a letter sequence; a substitution assigns a nonempty letter
    sequence to each pattern letter.
    """
    n, k = len(seq), len(pat)

    def match(pi, pos, binding):
        if pi == k:
            return True
        a = pat[pi]
        if a in binding:
            seg = binding[a]
            return (seq[pos:pos + len(seg)] == seg
                    and match(pi + 1, pos + len(seg), binding))
        for end in range(pos + 1, n + 1):
            binding[a] = seq[pos:end]
            if match(pi + 1, end, binding):
                return True
            del binding[a]
        return False

    return any(match(0, i, {}) for i in range(n))


def _dominates_instance(exp: Counter, pat: Counter) -> bool:
    """Commutative analogue: some substitution instance of pat divides
    the word with exponent vector exp.  Single-letter substitutions
    suffice because any image can be shrunk letter by letter."""
    weights = sorted(pat.values(), reverse=True)
    caps = sorted(exp.values(), reverse=True)
    if sum(weights) > sum(caps):
        return False

    # pack the pattern exponents into the capacities; letters of equal
    # exponent are interchangeable, so only bin loads matter
    def place(i, caps):
        if i == len(weights):
            return True
        seen = set()
        for b, c in enumerate(caps):
            if c < weights[i] or c in seen:
                continue
            seen.add(c)
            rest = list(caps)
            rest[b] -= weights[i]
            if place(i + 1, tuple(sorted(rest, reverse=True))):
                return True
        return False

    return place(0, tuple(caps))


def _zero_patterns(V: VarietyId):
    """Letter sequences of the basis words forced to zero."""
    fam, n = V.family, V.param
    if fam == "ZM":
        pats = [("x", "y")]
    elif fam == "Q":
        pats = [("x", "x", "y"), ("x", "y", "x"), ("y", "x", "x")]
    elif fam == "Qn":
        pats = _zero_patterns(Q) + [tuple(f"x{i}" for i in range(n))]
    elif fam == "R":
        pats = [("x", "x"), ("x", "y", "x")]
    elif fam == "Rn":
        pats = _zero_patterns(R) + [tuple(f"x{i}" for i in range(n))]
    elif fam == "I":
        pats = [("x", "x", "y", "z")]
    elif fam == "In":
        pats = _zero_patterns(I) + [tuple(f"x{i}" for i in range(n))]
    elif fam == "J":
        pats = _zero_patterns(I) + [("x", "x", "x")]
    elif fam == "Jn":
        pats = _zero_patterns(J) + [tuple(f"x{i}" for i in range(n))]
    elif fam == "K":
        pats = [("x", "x", "y")]
    elif fam == "Kn":
        pats = _zero_patterns(K) + [tuple(f"x{i}" for i in range(n))]
    elif fam == "L":
        pats = [("x", "x")]
    elif fam == "Ln":
        pats = _zero_patterns(L) + [tuple(f"x{i}" for i in range(n))]
    elif fam == "W":
        pats = [("x", "x"), tuple(f"x{i}" for i in range(n + 1))]
    elif fam in ("ZR", "CN"):
        pats = [letter_sequence(w) for w in V.words]
    else:
        raise NotNilVarietyError(V.family)
    return pats


def normal_form(V: VarietyId, t: Term):
    """Normal form of t in a nil variety: Zero, or a canonical hashable
    object distinguishing the nonzero classes."""
    if V.family not in _NIL_FAMILIES:
        raise NotNilVarietyError(f"{V} is not a registered nil variety")
    if not is_semigroup_word(t):
        # ~(u) is the zero of every nil semigroup, and absorbs products
        return Zero
    seq = letter_sequence(t)
    fam = V.family
    commutative = fam in _COMM_NIL_FAMILIES
    if commutative:
        exp = Counter(seq)
        if any(_dominates_instance(exp, Counter(p)) for p in _zero_patterns(V)):
            return Zero
        if fam in ("I", "In", "J", "Jn") and sorted(exp.values()) == [1, 2]:
            # x^2 y = x y^2 identifies the two exponent assignments
            return ("deg3", frozenset(exp))
        return ("comm", tuple(sorted(exp.items())))
    if any(_contains_instance(seq, p) for p in _zero_patterns(V)):
        return Zero
    return ("word", seq)


def _signature(V: VarietyId, t: Term):
    """Canonical invariant with sig(u) == sig(v) iff u = v holds in V."""
    fam, n = V.family, V.param
    if fam == "T":
        return 0
    if fam in _NIL_FAMILIES:
        nf = normal_form(V, t)
        return "0" if nf is Zero else nf
    if fam == "SL":
        return content(t)
    if fam == "LZ":
        return first_letter(t)
    if fam == "RZ":
        return last_letter(t)
    if fam == "LZM":
        return letter_sequence(_square_pinv(t))[:2]
    if fam == "RZM":
        return letter_sequence(_square_pinv(t))[-2:]
    if fam in ("P", "Pbar"):
        seq = letter_sequence(_square_pinv(t))
        marked = seq[-1] if fam == "P" else seq[0]
        if seq.count(marked) > 1:
            return (frozenset(seq), "multiple")
        return (frozenset(seq), "simple", marked)
    if fam == "C":
        if n == 0:
            return 0
        return tuple(sorted(_capped_exp(t, n).items()))
    if fam == "A":
        vec = _exp_vector(t)
        if n == 0:
            return tuple(sorted((a, k) for a, k in vec.items() if k != 0))
        return tuple(sorted((a, k % n) for a, k in vec.items() if k % n != 0))
    raise UnknownVarietyError(fam)


def decide(V: VarietyId, ident: Identity) -> bool:
    """Whether the identity holds in every member of V."""
    if V.family == "T":
        return True
    if ident.is_zero:
        if V.family in _NIL_FAMILIES:
            return normal_form(V, ident.lhs) is Zero
        return all(decide(V, part) for part in expand_zero(ident))
    return _signature(V, ident.lhs) == _signature(V, ident.rhs)


def contains(V: VarietyId, X: VarietyId) -> bool:
    """Whether X is a subvariety of V, i.e. X satisfies the basis of V."""
    return all(decide(X, b) for b in basis(V))


def variety_equal(V: VarietyId, X: VarietyId) -> bool:
    return contains(V, X) and contains(X, V)


_SL_TEST = Identity(omega(mk_product([omega(Letter("x")), omega(Letter("y")),
                                      omega(Letter("x"))])),
                    omega(Letter("x")))
_ZM_TEST = Identity(Letter("x"), PseudoInverse(PseudoInverse(Letter("x"))))


def contains_atom(V: VarietyId, atom: VarietyId) -> bool:
    """Whether the atom SL or ZM lies in V, via the two witness
    identities: SL escapes exactly when (x^w y^w x^w)^w = x^w fails, ZM
    exactly when V is not completely regular."""
    if atom == SL:
        return not decide(V, _SL_TEST)
    if atom == ZM:
        return not decide(V, _ZM_TEST)
    raise ValueError("contains_atom supports the atoms SL and ZM")


def degree(V: VarietyId, cap: int = 32):
    """Nilpotency degree bound of V: least n such that V does not
    contain var{x^2 = x_1...x_(n+1) = 0, xy = yx}; inf when the witness
    family is contained for every n up to cap."""
    for n in range(1, cap + 1):
        if not contains(V, W(n)):
            return n
    return inf


# ---------------------------------------------------------------------------
# generators and oracle checks

def generator(V: VarietyId) -> Optional[epigroups.FiniteEpigroup]:
    """A finite epigroup generating V, when one is registered."""
    fam, n = V.family, V.param
    if fam == "T":
        return epigroups.builtin("Zn", 1)
    if fam == "SL":
        return epigroups.builtin("SL2")
    if fam == "ZM":
        return epigroups.builtin("NULL2")
    if fam == "LZ":
        return epigroups.builtin("LZ2")
    if fam == "RZ":
        return epigroups.builtin("RZ2")
    if fam == "C":
        return epigroups.builtin("Cm", n)
    if fam == "A" and n >= 1:
        return epigroups.builtin("Zn", n)
    return None


def enumerate_terms(letters: str = "xyz", max_length: int = 5,
                    pinv_depth: int = 1):
    """All terms over the given letters with at most max_length letter
    occurrences and ~() nested to at most the given depth (0 or 1)."""
    alphabet = list(letters)
    sg_words = {1: [Letter(a) for a in alphabet]}
    for k in range(2, max_length + 1):
        sg_words[k] = [mk_product(list(p)) for p in
                       itertools.product([Letter(a) for a in alphabet],
                                         repeat=k)]
    atoms = {k: list(ws) if k == 1 else [] for k, ws in sg_words.items()}
    if pinv_depth >= 1:
        for k, ws in sg_words.items():
            atoms.setdefault(k, [])
            atoms[k].extend(PseudoInverse(w) for w in ws)

    out = []

    def extend(prefix, remaining):
        for k in sorted(atoms):
            if k > remaining:
                break
            for a in atoms[k]:
                seq = prefix + [a]
                out.append(mk_product(seq))
                extend(seq, remaining - k)

    extend([], max_length)
    return out


@dataclass
class OracleReport:
    variety: VarietyId
    mode: str                 # "two-sided" or "one-sided"
    terms_checked: int
    mismatches: list          # pairs of terms whose status disagrees
    models_used: int = 0

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _value_vector(S, t, assignments):
    return tuple(epigroups.eval_term(S, t, a) for a in assignments)


def oracle_check(V: VarietyId, letters: str = "xyz", max_length: int = 5,
                 pinv_depth: int = 1, max_model_order: int = 3) -> OracleReport:
    """Cross-validate decide(V, -) against finite models.

    With a registered generator the check is two-sided: u = v holds in V
    iff it holds in the generator.  Otherwise every identity that decide
    accepts is checked against all models of the basis of order at most
    max_model_order (one-sided soundness).
    """
    terms = enumerate_terms(letters, max_length, pinv_depth)
    gen = generator(V)
    mismatches = []
    if gen is not None:
        assignments = [dict(zip(letters, vals)) for vals in
                       itertools.product(range(gen.order), repeat=len(letters))]
        by_value = {}
        by_sig = {}
        for t in terms:
            val = _value_vector(gen, t, assignments)
            sig = _signature(V, t)
            by_value.setdefault(val, []).append((sig, t))
            by_sig.setdefault(sig, []).append((val, t))
        for group in by_value.values():
            sig0, t0 = group[0]
            for sig, t in group[1:]:
                if sig != sig0:
                    mismatches.append((t0, t))
                    break
        for group in by_sig.values():
            val0, t0 = group[0]
            for val, t in group[1:]:
                if val != val0:
                    mismatches.append((t0, t))
                    break
        return OracleReport(V, "two-sided", len(terms), mismatches)

    models = [S for S in _small_semigroups(max_model_order)
              if all(epigroups.satisfies(S, b) for b in basis(V))]
    for S in models:
        assignments = [dict(zip(letters, vals)) for vals in
                       itertools.product(range(S.order), repeat=len(letters))]
        by_sig = {}
        for t in terms:
            by_sig.setdefault(_signature(V, t), []).append(t)
        for group in by_sig.values():
            val0 = _value_vector(S, group[0], assignments)
            for t in group[1:]:
                if _value_vector(S, t, assignments) != val0:
                    mismatches.append((group[0], t))
                    break
    return OracleReport(V, "one-sided", len(terms), mismatches, len(models))


_SMALL_CACHE: dict = {}


def _small_semigroups(max_order: int):
    """All semigroups on {0..n-1} for n <= max_order, as epigroups."""
    if max_order in _SMALL_CACHE:
        return _SMALL_CACHE[max_order]
    out = []
    for n in range(1, max_order + 1):
        rng = range(n)
        for flat in itertools.product(rng, repeat=n * n):
            table = [flat[i * n:(i + 1) * n] for i in rng]
            ok = True
            for i in rng:
                ti = table[i]
                for j in rng:
                    tij = table[ti[j]]
                    tj = table[j]
                    for k in rng:
                        if tij[k] != ti[tj[k]]:
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    break
            if ok:
                out.append(epigroups.from_table(
                    f"S{n}_{len(out)}", tuple(str(i) for i in rng), table))
    _SMALL_CACHE[max_order] = out
    return out


# ---------------------------------------------------------------------------
# classification records

@dataclass(frozen=True)
class ClassificationRecord:
    """Special-element verdicts for a variety inside the big lattice.
    None marks a field whose classification hypotheses do not apply."""
    is_neutral: Optional[bool]
    is_standard: Optional[bool]
    is_costandard: Optional[bool]
    is_distributive: Optional[bool]
    is_codistributive: Optional[bool]
    is_modular: Optional[bool]
    is_lower_modular: Optional[bool]
    is_upper_modular: Optional[bool]


_COMM = parse_identity("x y = y x")
_XXY_ZERO = Identity(word("xxy"), None)
_XXY_XYY = parse_identity("x x y = x y y")


def _zr_matches_qr(V: VarietyId) -> bool:
    cap = max(len(letter_sequence(w)) for w in V.words) + 1
    candidates = [Q, R] + [Qn(k) for k in range(1, cap + 1)] \
        + [Rn(k) for k in range(1, cap + 1)]
    return any(variety_equal(V, X) for X in candidates)


def theorem_status(V: VarietyId) -> ClassificationRecord:
    trivial = decide(V, Identity(Letter("x"), Letter("y")))
    eq_sl = False if trivial else variety_equal(V, SL)
    eq_zm = False if trivial else variety_equal(V, ZM)
    commutative = decide(V, _COMM)
    nil = V.family in _NIL_FAMILIES
    zero_red = (trivial or eq_zm
                or V.family in ("ZM", "Q", "Qn", "R", "Rn", "ZR"))

    neutral = trivial or eq_sl or eq_zm
    distributive = (trivial or eq_sl or eq_zm
                    or V.family in ("Q", "Qn", "R", "Rn")
                    or (V.family == "ZR" and _zr_matches_qr(V)))
    lower_modular = trivial or eq_sl or zero_red

    if trivial or eq_sl or zero_red:
        modular: Optional[bool] = True
    elif nil and commutative:
        modular = decide(V, _XXY_ZERO)
    else:
        # remaining families all fail the necessary join shape
        modular = False

    if not commutative:
        upper_modular: Optional[bool] = None
        codistributive: Optional[bool] = None
    else:
        if trivial or eq_sl:
            upper_modular = True
        elif nil:
            upper_modular = decide(V, _XXY_XYY)
        elif V.family == "C":
            upper_modular = V.param <= 2
        elif V.family == "A":
            upper_modular = True
        else:
            upper_modular = None
        codistributive = (trivial or eq_sl or eq_zm or V.family == "A")

    return ClassificationRecord(
        is_neutral=neutral,
        is_standard=distributive,
        is_costandard=neutral,
        is_distributive=distributive,
        is_codistributive=codistributive,
        is_modular=modular,
        is_lower_modular=lower_modular,
        is_upper_modular=upper_modular,
    )


# ---------------------------------------------------------------------------
# family meets (used by the degree calculus)

_GRID_LKJI = {"Ln": 0, "L": 0, "Kn": 1, "K": 1, "Jn": 2, "J": 2,
              "In": 3, "I": 3}
_GRID_QR = {"Rn": 0, "R": 0, "Qn": 1, "Q": 1}
_GRID_MINROW = {0: 1, 1: 3, 2: 4, 3: 4}


def _grid_coord(V, grid):
    col = grid.get(V.family)
    if col is None:
        return None
    return (col, inf if V.param is None else V.param)


def family_meet(Va: VarietyId, Vb: VarietyId) -> Optional[VarietyId]:
    """Meet of two registered varieties when it is itself registered:
    within the four nil chains above, or within the Q/R chains, the
    meet is the componentwise minimum."""
    for grid, make in ((_GRID_LKJI, _make_lkji), (_GRID_QR, _make_qr)):
        ca, cb = _grid_coord(Va, grid), _grid_coord(Vb, grid)
        if ca is not None and cb is not None:
            col = min(ca[0], cb[0])
            row = min(ca[1], cb[1])
            return make(col, row)
    if contains(Va, Vb):
        return Vb
    if contains(Vb, Va):
        return Va
    return None


def _make_lkji(col, row):
    tops = [L, K, J, I]
    fams = [Ln, Kn, Jn, In]
    if row == inf:
        return tops[col]
    return fams[col](int(row))


def _make_qr(col, row):
    if row == inf:
        return R if col == 0 else Q
    return Rn(int(row)) if col == 0 else Qn(int(row))


# ---------------------------------------------------------------------------
# CLI names

def parse_variety(name: str) -> VarietyId:
    """Parse a variety name as used on the command line: T, SL, ZM, LZ,
    RZ, LZM, RZM, P, Pbar, C(m), A(n), Q, Q(n), R, R(n), I, I(n), J,
    J(n), K, K(n), L, L(n), W(n), or zr[w1; w2; ...]."""
    name = name.strip()
    bare = {"T": T, "SL": SL, "ZM": ZM, "LZ": LZ, "RZ": RZ, "LZM": LZM,
            "RZM": RZM, "P": P, "Pbar": PBAR, "Q": Q, "R": R, "I": I,
            "J": J, "K": K, "L": L}
    if name in bare:
        return bare[name]
    if name.startswith("zr[") and name.endswith("]"):
        ws = [parse_term(w) for w in name[3:-1].split(";") if w.strip()]
        return zero_reduced(ws)
    import re
    m = re.fullmatch(r"([A-Za-z]+)\((\d+)\)", name)
    if m:
        fam, n = m.group(1), int(m.group(2))
        makers = {"C": C, "A": A, "Q": Qn, "R": Rn, "I": In, "J": Jn,
                  "K": Kn, "L": Ln, "W": W}
        if fam in makers:
            return makers[fam](n)
    raise UnknownVarietyError(f"cannot parse variety name {name!r}")


def default_registry() -> list:
    """A representative sample of registered varieties, for sweeps."""
    out = [T, SL, ZM, LZ, RZ, LZM, RZM, P, PBAR, Q, R, I, J, K, L]
    out += [C(m) for m in (0, 1, 2, 3)]
    out += [A(n) for n in (0, 1, 2, 3, 4)]
    out += [Qn(n) for n in (2, 3, 4)]
    out += [Rn(n) for n in (2, 3, 4)]
    out += [In(n) for n in (4, 5)]
    out += [Jn(n) for n in (4, 5)]
    out += [Kn(n) for n in (3, 4)]
    out += [Ln(n) for n in (1, 2, 3, 4)]
    out += [W(n) for n in (1, 2, 3)]
    out += [zero_reduced([word("xyz")]),
            commutative_nil([word("xxx")])]
    return out
