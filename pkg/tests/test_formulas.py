import pytest

from epilat.formulas import (Atom, BinOp, FormulaError, Not, Quant, TOp,
                             TVar, defined_set, dualize, fo_eval,
                             free_variables, parse_formula, special_formula)
from epilat.lattice import (SPECIAL_KINDS, enumerate_lattices,
                            lattice_from_covers, special_profile)


def pentagon():
    covers = [("0", "x"), ("0", "a"), ("a", "b"), ("x", "1"), ("b", "1")]
    return lattice_from_covers(("0", "x", "a", "b", "1"), covers)


def test_eval_atoms():
    L = pentagon()
    x, one = L.index("x"), L.index("1")
    phi = Atom("le", TVar("u"), TVar("v"))
    assert fo_eval(L, phi, {"u": x, "v": one})
    assert not fo_eval(L, phi, {"u": one, "v": x})


def test_quantifiers():
    L = pentagon()
    # everything sits below the top
    phi = Quant("forall", "y",
                Atom("le", TVar("y"), TVar("t")))
    assert fo_eval(L, phi, {"t": L.top})
    assert not fo_eval(L, phi, {"t": L.index("x")})
    ex = Quant("exists", "y", Atom("eq", TOp("meet", TVar("y"), TVar("t")),
                                   TVar("t")))
    assert fo_eval(L, ex, {"t": L.bottom})


def test_unbound_variable_raises():
    L = pentagon()
    with pytest.raises(FormulaError):
        fo_eval(L, Atom("eq", TVar("u"), TVar("v")), {"u": 0})


def test_free_variables():
    phi = Quant("forall", "y", Atom("le", TVar("x"), TVar("y")))
    assert free_variables(phi) == frozenset({"x"})


def test_defined_set_requires_single_free_var():
    L = pentagon()
    with pytest.raises(FormulaError):
        defined_set(L, Atom("le", TVar("x"), TVar("y")), "x")


def test_dualize_swaps_operations():
    t = TOp("meet", TVar("x"), TVar("y"))
    d = dualize(Atom("le", TVar("x"), t))
    assert d.left == TOp("join", TVar("x"), TVar("y"))
    assert d.right == TVar("x")


def test_parse_formula_roundtrip():
    text = "forall y. forall z. ((x ^ y) | z) = ((x | z) ^ (y | z))"
    phi = parse_formula(text)
    assert parse_formula(str(phi)) == phi


def test_parse_connectives():
    phi = parse_formula("x <= y -> not (x = y) or y <= x")
    assert isinstance(phi, BinOp) and phi.op == "implies"


def test_parse_errors():
    with pytest.raises(FormulaError):
        parse_formula("forall . x = y")
    with pytest.raises(FormulaError):
        parse_formula("x ^")


def test_special_formulas_have_one_free_variable():
    for kind in SPECIAL_KINDS:
        phi = special_formula(kind)
        assert free_variables(phi) == frozenset({"x"})


def test_special_formula_unknown_kind():
    with pytest.raises(ValueError):
        special_formula("central")


def test_formulas_agree_with_profiles_on_pentagon():
    L = pentagon()
    for kind in SPECIAL_KINDS:
        via_formula = defined_set(L, special_formula(kind), "x")
        direct = frozenset(x for x in range(L.size)
                           if special_profile(L, x)[kind])
        assert via_formula == direct, kind


def test_dual_formula_on_dual_lattice():
    L = pentagon()
    D = L.dual()
    for kind in ("standard", "distributive", "upper_modular"):
        phi = special_formula(kind)
        for x in range(L.size):
            assert fo_eval(D, dualize(phi), {"x": x}) \
                == fo_eval(L, phi, {"x": x})
