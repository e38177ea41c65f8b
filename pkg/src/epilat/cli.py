"""Command-line front end.

Exit codes: 0 on success, 1 when a requested check fails, 2 on usage or
parse errors.  EPILAT_SEED fixes the seed of any randomized sampling.
"""

from __future__ import annotations

import argparse
import inspect
import json
import os
import random
import sys

from . import suites
from .deduction import parse_deduction_file, verify_deduction
from .epigroups import classify_epigroup, parse_cayley_file
from .formulas import defined_set, parse_formula
from .lattice import (SPECIAL_KINDS, lattice_props, parse_lattice_file,
                      special_profile, special_witness, to_dot)
from .sublattice import build_LI, build_sublattice
from .terms import ParseError, format_term, parse_identity
from .varieties import decide, parse_variety

_CRITERIA = {
    "T": "trivial variety",
    "SL": "content comparison",
    "C": "capped exponent maps",
    "A": "signed exponents modulo n",
    "P": "content and last-letter test",
    "Pbar": "content and first-letter test",
    "LZ": "first letter",
    "RZ": "last letter",
    "LZM": "leading pair after squaring",
    "RZM": "trailing pair after squaring",
}


def _criterion(V) -> str:
    return _CRITERIA.get(V.family, "nil normal forms")


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_lattice(path: str):
    return parse_lattice_file(_read(path))


def _print_lattice(L):
    print("elements:", " ".join(str(lab) for lab in L.labels))
    for i, j in L.covers():
        print(f"cover: {L.labels[i]} < {L.labels[j]}")


def cmd_check(args) -> int:
    V = parse_variety(args.variety)
    ident = parse_identity(args.identity)
    verdict = decide(V, ident)
    print(f"{'holds' if verdict else 'fails'} in {V} ({_criterion(V)})")
    return 0 if verdict else 1


def cmd_lattice(args) -> int:
    L = _load_lattice(args.file)
    if args.sub == "dot":
        print(to_dot(L))
        return 0
    if args.sub == "props":
        props = lattice_props(L)
        print(f"modular: {str(props.is_modular).lower()}")
        print(f"distributive: {str(props.is_distributive).lower()}")
        for name, wit in (("N5", props.pentagon), ("M3", props.diamond)):
            if wit is not None:
                print(f"{name} witness: "
                      + " ".join(str(L.labels[i]) for i in wit))
        return 0
    if args.sub == "profile":
        x = L.index(args.element)
        prof = special_profile(L, x)
        for kind in SPECIAL_KINDS:
            line = f"{kind}: {str(prof[kind]).lower()}"
            wit = prof.witnesses[kind]
            if wit is not None:
                line += " witness " + str(tuple(str(L.labels[i])
                                                for i in wit))
            print(line)
        return 0
    # fo
    phi = parse_formula(_read(args.formula))
    result = defined_set(L, phi, args.var)
    print("defined set:",
          " ".join(sorted(str(L.labels[i]) for i in result)))
    return 0


def cmd_semigroup(args) -> int:
    S = parse_cayley_file(_read(args.file))
    cls = classify_epigroup(S)
    print(f"order: {S.order}")
    print("elements:", " ".join(S.elements))
    print("omega:", " ".join(S.elements[S.omega_map[i]]
                             for i in range(S.order)))
    print("pinv:", " ".join(S.elements[S.pinv_map[i]]
                            for i in range(S.order)))
    for label, value in (("completely regular", cls.is_completely_regular),
                         ("combinatorial", cls.is_combinatorial),
                         ("nil", cls.is_nil),
                         ("group", cls.is_group),
                         ("semilattice", cls.is_semilattice),
                         ("commutative", cls.is_commutative)):
        print(f"{label}: {str(value).lower()}")
    return 0


def cmd_li(args) -> int:
    vl = build_LI(args.n_max)
    if args.dot:
        print(to_dot(vl.lattice))
    else:
        _print_lattice(vl.lattice)
    return 0


def _load_facts(path):
    entries = json.loads(_read(path))
    facts = {}
    for e in entries:
        facts[(e["variety"], frozenset(e["parts"]))] = bool(e["leq"])
    return facts


def cmd_sublattice(args) -> int:
    seeds = [parse_variety(s) for s in args.seeds.split(",") if s.strip()]
    facts = _load_facts(args.facts) if args.facts else None
    vl = build_sublattice(seeds, facts)
    if args.dot:
        print(to_dot(vl.lattice))
    else:
        _print_lattice(vl.lattice)
    return 0


def cmd_deduce(args) -> int:
    theories, terms = parse_deduction_file(_read(args.file))
    report = verify_deduction(terms, theories)
    print("#step\ttheory\tidentity\tdirection\tresult")
    for i, step in enumerate(report.steps):
        arrow = "l->r" if step.forward else "r->l"
        print(f"{i + 1}\t{step.theory}\t{step.identity}\t{arrow}"
              f"\t{format_term(step.end)}")
    if report.valid:
        print("valid deduction")
        return 0
    print(f"invalid: no single step from "
          f"{format_term(terms[report.failed_at])} to "
          f"{format_term(terms[report.failed_at + 1])}")
    return 1


def cmd_suite(args) -> int:
    fn = suites._SUITES.get(args.name)
    if fn is None:
        raise ValueError(f"unknown suite {args.name!r}")
    accepted = set(inspect.signature(fn).parameters)
    params = {}
    for key in ("n_max", "max_length", "max_product_order"):
        value = getattr(args, key)
        if value is not None:
            if key not in accepted:
                raise ValueError(f"suite {args.name} takes no --"
                                 + key.replace("_", "-"))
            params[key] = value
    rep = suites.run_suite(args.name, **params)
    print(suites.format_report(rep))
    return 0 if rep.ok else 1


def _build_parser():
    p = argparse.ArgumentParser(prog="epilat")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="decide an identity in a variety")
    c.add_argument("variety")
    c.add_argument("identity")
    c.set_defaults(fn=cmd_check)

    lat = sub.add_parser("lattice", help="inspect a lattice file")
    lsub = lat.add_subparsers(dest="sub", required=True)
    for name in ("props", "dot"):
        s = lsub.add_parser(name)
        s.add_argument("file")
        s.set_defaults(fn=cmd_lattice)
    s = lsub.add_parser("profile")
    s.add_argument("file")
    s.add_argument("element")
    s.set_defaults(fn=cmd_lattice)
    s = lsub.add_parser("fo")
    s.add_argument("file")
    s.add_argument("formula", help="file containing one formula")
    s.add_argument("--var", default="x")
    s.set_defaults(fn=cmd_lattice)

    sg = sub.add_parser("semigroup")
    sgsub = sg.add_subparsers(dest="sub", required=True)
    s = sgsub.add_parser("info")
    s.add_argument("file")
    s.set_defaults(fn=cmd_semigroup)

    li = sub.add_parser("li")
    lisub = li.add_subparsers(dest="sub", required=True)
    s = lisub.add_parser("build")
    s.add_argument("n_max", type=int)
    s.add_argument("--dot", action="store_true")
    s.set_defaults(fn=cmd_li)

    s = sub.add_parser("sublattice")
    s.add_argument("--seeds", required=True,
                   help="comma-separated variety names")
    s.add_argument("--facts", help="JSON file of containment facts")
    s.add_argument("--dot", action="store_true")
    s.set_defaults(fn=cmd_sublattice)

    d = sub.add_parser("deduce")
    dsub = d.add_subparsers(dest="sub", required=True)
    s = dsub.add_parser("verify")
    s.add_argument("file")
    s.set_defaults(fn=cmd_deduce)

    s = sub.add_parser("suite")
    s.add_argument("name", choices=suites.SUITE_NAMES)
    s.add_argument("--n-max", dest="n_max", type=int)
    s.add_argument("--max-length", dest="max_length", type=int)
    s.add_argument("--max-product-order", dest="max_product_order", type=int)
    s.set_defaults(fn=cmd_suite)

    return p


def main(argv=None) -> int:
    seed = os.environ.get("EPILAT_SEED")
    if seed is not None:
        random.seed(int(seed))
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (ParseError, ValueError, OSError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
