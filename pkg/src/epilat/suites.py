"""One-shot verification suites tying the modules together.

Each suite exhaustively checks a family of claims at desk scale and
reports failures with enough context to replay them by hand.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from math import inf

from . import varieties as V
from .deduction import Theory, search_deduction, theory, verify_deduction
from .epigroups import (FiniteEpigroup, builtin, classify_epigroup,
                        direct_product, satisfies)
from .lattice import (SPECIAL_KINDS, enumerate_lattices, lattice_props,
                      neutral_subdirect_check, special_profile)
from .sublattice import build_LI, build_sublattice, expected_LI, label_isomorphic
from .terms import (Identity, Letter, PseudoInverse, mk_product, omega,
                    parse_identity, parse_term, word)
from .varieties import contains, decide, degree, family_meet, parse_variety


@dataclass
class SuiteReport:
    name: str
    checks: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, condition: bool, witness: str):
        self.checks += 1
        if not condition:
            self.failures.append(witness)


SUITE_NAMES = ("lattice-lemmas", "word-problems", "figure2",
               "epigroup-lemmas", "degree-calculus",
               "theorem-necessary-conditions")

# expected counts of pairwise non-isomorphic lattices by size
LATTICE_COUNTS = (1, 1, 1, 2, 5, 15)

# implications between special element kinds (edges of the inclusion
# diagram between the eight types)
KIND_IMPLICATIONS = (
    ("neutral", "standard"),
    ("neutral", "costandard"),
    ("standard", "distributive"),
    ("costandard", "codistributive"),
    ("standard", "modular"),
    ("costandard", "modular"),
    ("distributive", "lower_modular"),
    ("codistributive", "upper_modular"),
)


def _lattice_tag(n, idx):
    return f"lattice(size={n},#{idx})"


def suite_lattice_lemmas(n_max: int = 6) -> SuiteReport:
    rep = SuiteReport("lattice-lemmas")
    t0 = time.monotonic()
    for n in range(1, n_max + 1):
        lats = enumerate_lattices(n)
        if n <= len(LATTICE_COUNTS):
            rep.check(len(lats) == LATTICE_COUNTS[n - 1],
                      f"count(size={n}) = {len(lats)}, "
                      f"expected {LATTICE_COUNTS[n - 1]}")
        for idx, L in enumerate(lats):
            profiles = [special_profile(L, x) for x in range(L.size)]
            atoms = [j for (i, j) in L.covers() if i == L.bottom]
            for x, prof in enumerate(profiles):
                tag = f"{_lattice_tag(n, idx)} elem {x}"
                for src, dst in KIND_IMPLICATIONS:
                    rep.check(not prof[src] or prof[dst],
                              f"{tag}: {src} without {dst}")
                rep.check(prof["standard"]
                          == (prof["distributive"] and prof["modular"]),
                          f"{tag}: standard vs distributive+modular")
                rep.check(prof["neutral"]
                          == (prof["distributive"] and prof["codistributive"]
                              and prof["modular"]),
                          f"{tag}: neutral vs distr+codistr+modular")
                if prof["neutral"]:
                    sub = neutral_subdirect_check(L, x)
                    rep.check(sub.ok, f"{tag}: subdirect embedding: "
                                      f"{sub.reason}")
            for a in atoms:
                if not profiles[a]["neutral"]:
                    continue
                for x in range(L.size):
                    xa = L.join(x, a)
                    for kind in SPECIAL_KINDS:
                        rep.check(profiles[x][kind] == profiles[xa][kind],
                                  f"{_lattice_tag(n, idx)}: {kind} differs "
                                  f"between {x} and {x} v atom {a}")
    rep.seconds = time.monotonic() - t0
    return rep


_ORACLE_TARGETS = (V.SL, V.C(2), V.ZM, V.A(1), V.A(2), V.A(3), V.A(4))


def suite_word_problems(max_length: int = 5) -> SuiteReport:
    rep = SuiteReport("word-problems")
    t0 = time.monotonic()
    for var in _ORACLE_TARGETS:
        r = V.oracle_check(var, letters="xyz", max_length=max_length,
                           pinv_depth=1)
        rep.check(r.mode == "two-sided", f"{var}: no generator registered")
        rep.check(r.ok, f"{var}: {len(r.mismatches)} oracle mismatches, "
                        f"first {r.mismatches[:1]}")
    rep.seconds = time.monotonic() - t0
    return rep


def suite_figure2(n_max: int = 8) -> SuiteReport:
    rep = SuiteReport("figure2")
    t0 = time.monotonic()
    built = build_LI(n_max)
    expected = expected_LI(n_max)
    rep.check(label_isomorphic(built, expected),
              "built four-chain lattice differs from the expected order")
    props = lattice_props(built.lattice)
    rep.check(props.is_distributive,
              f"four-chain lattice not distributive: N5={props.pentagon} "
              f"M3={props.diamond}")
    for col, maker, lo in (("L", V.Ln, 1), ("K", V.Kn, 3),
                           ("J", V.Jn, 4), ("I", V.In, 4)):
        labels = [str(maker(k)) for k in range(lo, n_max + 1)] + [col]
        idxs = [built.lattice.index(lab) for lab in labels]
        covers = set(built.lattice.covers())
        for a, b in zip(idxs, idxs[1:]):
            rep.check((a, b) in covers,
                      f"{built.lattice.labels[b]} should cover "
                      f"{built.lattice.labels[a]}")
    for k in range(1, n_max + 1):
        rep.check(degree(V.Ln(k)) == k, f"degree(L({k})) != {k}")
    for top in (V.L, V.K, V.J, V.I):
        rep.check(degree(top) == inf, f"degree({top}) != inf")
    rep.seconds = time.monotonic() - t0
    return rep


def _builtin_zoo():
    zoo = [builtin("SL2"), builtin("NULL2"), builtin("LZ2"), builtin("RZ2")]
    zoo += [builtin("Cm", m) for m in (1, 2, 3)]
    zoo += [builtin("Dm", m) for m in (2, 3, 4)]
    zoo += [builtin("Zn", n) for n in (1, 2, 3, 4)]
    return zoo


_X = Letter("x")
_CR_ID = Identity(_X, PseudoInverse(PseudoInverse(_X)))
_NIL_ID = Identity(PseudoInverse(_X), None)
_PINV_FIX = Identity(PseudoInverse(_X),
                     mk_product([_X, PseudoInverse(_X), PseudoInverse(_X)]))


def _power_term(k: int):
    return _X if k == 1 else mk_product([_X] * k)


def suite_epigroup_lemmas(max_product_order: int = 12) -> SuiteReport:
    rep = SuiteReport("epigroup-lemmas")
    t0 = time.monotonic()
    zoo = _builtin_zoo()
    pool = list(zoo)
    for a, b in itertools.combinations_with_replacement(zoo, 2):
        if a.order * b.order <= max_product_order:
            pool.append(direct_product(a, b))
    for S in pool:
        cls = classify_epigroup(S)
        rep.check(satisfies(S, _CR_ID) == cls.is_completely_regular,
                  f"{S.name}: x = ~~x vs completely regular")
        rep.check(satisfies(S, _NIL_ID) == cls.is_nil,
                  f"{S.name}: ~x = 0 vs nil")
        rep.check(satisfies(S, _PINV_FIX), f"{S.name}: ~x = x ~x ~x fails")
        for m in range(1, S.order + 2):
            if satisfies(S, Identity(_power_term(m), _power_term(m + 1))):
                xm = _power_term(m)
                for lhs in (omega(_X), PseudoInverse(_X),
                            PseudoInverse(PseudoInverse(_X))):
                    rep.check(satisfies(S, Identity(lhs, xm)),
                              f"{S.name}: x^{m} = x^{m + 1} but "
                              f"{lhs} != x^{m}")
                break
    rep.seconds = time.monotonic() - t0
    return rep


def _lkji_members(n_max: int):
    out = [V.Ln(k) for k in range(1, n_max + 1)] + [V.L]
    out += [V.Kn(k) for k in range(3, n_max + 1)] + [V.K]
    out += [V.Jn(k) for k in range(4, n_max + 1)] + [V.J]
    out += [V.In(k) for k in range(4, n_max + 1)] + [V.I]
    return out


def _qr_members(n_max: int):
    out = [V.Rn(k) for k in range(2, n_max + 1)] + [V.R]
    out += [V.Qn(k) for k in range(2, n_max + 1)] + [V.Q]
    return out


def suite_degree_calculus(n_max: int = 8) -> SuiteReport:
    rep = SuiteReport("degree-calculus")
    t0 = time.monotonic()
    for members in (_lkji_members(n_max), _qr_members(n_max)):
        for a, b in itertools.combinations_with_replacement(members, 2):
            m = family_meet(a, b)
            rep.check(m is not None, f"family_meet({a}, {b}) undefined")
            if m is not None:
                rep.check(degree(m) == min(degree(a), degree(b)),
                          f"degree({a} ^ {b}) = {degree(m)} != "
                          f"min({degree(a)}, {degree(b)})")
    nil_members = _lkji_members(n_max) + _qr_members(n_max) + [V.ZM]
    for var in nil_members:
        d = degree(var)
        for n in range(1, n_max + 1):
            rep.check((d <= n) == (not contains(var, V.W(n))),
                      f"{var}: degree bound {n} disagrees with the "
                      f"witness family")
    rep.check(degree(V.P) == 2, f"degree(P) = {degree(V.P)} != 2")
    rep.seconds = time.monotonic() - t0
    return rep


def suite_theorem_necessary_conditions() -> SuiteReport:
    rep = SuiteReport("theorem-necessary-conditions")
    t0 = time.monotonic()
    core = ("T", "SL", "ZM", "SL v ZM")
    for seeds in ([V.T, V.SL, V.ZM],
                  [V.T, V.SL, V.ZM, V.Kn(3), V.Kn(4)]):
        sub = build_sublattice(seeds)
        for lab in core:
            x = sub.lattice.index(lab)
            prof = special_profile(sub.lattice, x)
            rep.check(prof["neutral"],
                      f"{lab} not neutral in sublattice of "
                      f"{sub.lattice.size} elements: "
                      f"{prof.witnesses['neutral']}")
    li = build_LI(8)
    for x in range(li.lattice.size):
        prof = special_profile(li.lattice, x)
        rep.check(prof["modular"],
                  f"{li.lattice.labels[x]} not modular in the four-chain "
                  f"lattice")
        rep.check(prof["neutral"],
                  f"{li.lattice.labels[x]} not neutral in the four-chain "
                  f"lattice")
    rep.seconds = time.monotonic() - t0
    return rep


_SUITES = {
    "lattice-lemmas": suite_lattice_lemmas,
    "word-problems": suite_word_problems,
    "figure2": suite_figure2,
    "epigroup-lemmas": suite_epigroup_lemmas,
    "degree-calculus": suite_degree_calculus,
    "theorem-necessary-conditions": suite_theorem_necessary_conditions,
}


def run_suite(name: str, **params) -> SuiteReport:
    try:
        fn = _SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; "
                         f"choose from {', '.join(SUITE_NAMES)}") from None
    return fn(**params)


def format_report(rep: SuiteReport) -> str:
    lines = [f"suite {rep.name}: {'PASS' if rep.ok else 'FAIL'} "
             f"({rep.checks} checks, {len(rep.failures)} failures, "
             f"{rep.seconds:.2f}s)",
             "#suite\tchecks\tfailures\tseconds",
             f"{rep.name}\t{rep.checks}\t{len(rep.failures)}"
             f"\t{rep.seconds:.2f}"]
    for f in rep.failures:
        lines.append(f"FAIL\t{f}")
    return "\n".join(lines)
