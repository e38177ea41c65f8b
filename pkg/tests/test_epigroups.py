import itertools

import pytest

from epilat.epigroups import (NotAssociativeError, builtin, builtin_names,
                              classify_epigroup, direct_product, eval_term,
                              from_table, parse_cayley_file, satisfies)
from epilat.terms import (Identity, Letter, PseudoInverse, omega,
                          parse_identity, parse_term)


def test_associativity_enforced():
    with pytest.raises(NotAssociativeError):
        from_table("bad", ("a", "b"), [[0, 1], [0, 0]])


def test_sl2_structure():
    S = builtin("SL2")
    cls = classify_epigroup(S)
    assert cls.is_semilattice and cls.is_completely_regular
    assert S.pinv_map == tuple(range(S.order))  # idempotents are self-inverse


def test_null2_is_nil():
    S = builtin("NULL2")
    cls = classify_epigroup(S)
    assert cls.is_nil and cls.zero is not None
    assert all(p == cls.zero for p in S.pinv_map)


def test_cm_monoid():
    # the 3-element combinatorial cyclic monoid: 1, c, c^2 = c^3
    S = builtin("Cm", 2)
    assert S.order == 3
    assert satisfies(S, parse_identity("x x = x x x"))
    assert not satisfies(S, parse_identity("x = x x"))
    assert satisfies(S, parse_identity("x y = y x"))


def test_dm_nilpotent_chain():
    S = builtin("Dm", 3)
    cls = classify_epigroup(S)
    assert cls.is_nil
    x = Letter("x")
    three = parse_term("x x x")
    # generator cubed is the zero
    g = 0
    val = S.mult(S.mult(g, g), g)
    assert val == cls.zero


def test_zn_group():
    S = builtin("Zn", 4)
    cls = classify_epigroup(S)
    assert cls.is_group and cls.is_commutative
    assert satisfies(S, parse_identity("x x x x y = y"))
    assert not satisfies(S, parse_identity("x x y = y"))


def test_pinv_axioms_hold_everywhere():
    axioms = [
        Identity(PseudoInverse(Letter("x")), parse_term("x ~(x) ~(x)")),
        parse_identity("x ~(x) = ~(x) x"),
        Identity(parse_term("~(~(x))"), parse_term("~(~(x)) ~(x) x")),
    ]
    zoo = [builtin("SL2"), builtin("NULL2"), builtin("LZ2"), builtin("RZ2"),
           builtin("Cm", 2), builtin("Dm", 3), builtin("Zn", 3)]
    for S in zoo:
        for ax in axioms:
            assert satisfies(S, ax), (S.name, ax)


def test_omega_is_idempotent_power():
    for name in ("SL2", "NULL2", "LZ2", "RZ2"):
        S = builtin(name)
        for i in range(S.order):
            e = S.omega_map[i]
            assert S.mult(e, e) == e


def test_zero_identity_semantics():
    S = builtin("NULL2")
    assert satisfies(S, parse_identity("x y = 0"))
    assert not satisfies(builtin("SL2"), parse_identity("x y = 0"))


def test_eval_term_with_pinv():
    S = builtin("Cm", 2)
    # in C2 the pseudoinverse of the generator c equals c^2
    c = 1 if S.elements[0] == "1" else 0
    for i in range(S.order):
        assert eval_term(S, parse_term("~(x)"), {"x": i}) == S.pinv_map[i]


def test_direct_product_componentwise():
    A, B = builtin("SL2"), builtin("Zn", 2)
    P = direct_product(A, B)
    assert P.order == 4
    ident = parse_identity("x x x = x")
    assert satisfies(P, ident) == (satisfies(A, ident) and satisfies(B, ident))


def test_parse_cayley_roundtrip():
    text = "e a\n# table rows\ne a\na a\n"
    S = parse_cayley_file(text)
    assert S.order == 2
    assert S.elements == ("e", "a")
    assert S.mult(1, 1) == 1


def test_builtin_names_exposed():
    names = builtin_names()
    assert "SL2" in names and "Cm" in names and "Zn" in names
    with pytest.raises(ValueError):
        builtin("nope")
