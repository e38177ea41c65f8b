import pytest

from epilat.deduction import (EPI_AXIOMS, Theory, match_instance, named_theory,
                              one_step, parse_deduction_file, search_deduction,
                              theory, verify_deduction)
from epilat.epigroups import builtin, satisfies
from epilat.terms import (Identity, parse_identity, parse_term, substitute,
                          word)
from epilat.varieties import K, Q, basis


def T(s):
    return parse_term(s)


def test_match_instance_associative():
    subs = match_instance(word("xy"), word("abc"))
    # x y against a b c: two ways to split
    assert len(subs) == 2
    for s in subs:
        assert substitute(word("xy"), s) == word("abc")


def test_match_repeated_letter():
    subs = match_instance(word("xx"), word("abab"))
    assert len(subs) == 1
    assert substitute(word("xx"), subs[0]) == word("abab")
    assert match_instance(word("xx"), word("aba")) == []


def test_match_pinv_shapes():
    subs = match_instance(T("~(x)"), T("~(a b)"))
    assert len(subs) == 1
    assert subs[0]["x"] == word("ab")
    # a pseudoinversion pattern never matches a plain word
    assert match_instance(T("~(x)"), word("ab")) == []


def test_zero_identities_become_pairs():
    th = Theory("K", basis(K))
    idents = th.effective_identities()
    assert all(not i.is_zero for i in idents)
    # x^2 y = 0 contributes both an absorbing right and left pair
    assert len(idents) > len(basis(K))


def test_epi_axioms_flag():
    th = Theory("epi", (), includes_epi_axioms=True)
    assert th.effective_identities() == EPI_AXIOMS
    for S in (builtin("SL2"), builtin("Cm", 2), builtin("Zn", 3)):
        for ax in EPI_AXIOMS:
            assert satisfies(S, ax)


def test_one_step_inside_pinv_argument():
    th = theory("sq", [parse_identity("x x = x x x")])
    step = one_step(T("~(y y)"), T("~(y y y)"), th)
    assert step is not None and step.forward


def test_one_step_reversed_orientation():
    th = theory("sq", [parse_identity("x x = x x x")])
    step = one_step(T("y y y"), T("y y"), th)
    assert step is not None and not step.forward


def test_one_step_skips_unbindable_orientation():
    # using x^2 y z = x^2 y right-to-left would invent z from nothing
    th = Theory("K", basis(K))
    assert one_step(T("x x"), T("x x x x"), th) is None


def test_verify_chain_of_double_bars():
    cr = named_theory("cr")
    seq = [T("x x"), T("~(~(x)) x"), T("~(~(x)) ~(~(x))")]
    rep = verify_deduction(seq, [cr])
    assert rep.valid and len(rep.steps) == 2
    assert all(s.theory == "cr" for s in rep.steps)


def test_verify_single_step_double_bar_of_square():
    cr = named_theory("cr")
    rep = verify_deduction([T("x x"), T("~(~(x x))")], [cr])
    assert rep.valid


def test_verify_collapse_in_k():
    th = Theory("K", basis(K))
    assert verify_deduction([T("x x x t"), T("x x x")], [th]).valid
    assert verify_deduction([T("t x x x"), T("x x x")], [th]).valid


def test_verify_pinv_elimination_under_stability():
    st2 = named_theory("stable(2)")
    assert verify_deduction([T("~(x) y"), T("x x y")], [st2]).valid
    assert verify_deduction([T("~(x)"), T("x x")], [st2]).valid


def test_verify_reports_first_failure():
    cr = named_theory("cr")
    rep = verify_deduction([T("x"), T("y")], [cr])
    assert not rep.valid and rep.failed_at == 0


def test_verify_needs_two_terms():
    with pytest.raises(ValueError):
        verify_deduction([T("x")], [named_theory("cr")])


def test_search_finds_power_collapse():
    th = Theory("K", basis(K))
    res = search_deduction(T("x x x x"), T("x x x"), th)
    assert res and res.sequence[0] == T("x x x x")
    assert res.sequence[-1] == T("x x x")


def test_search_square_not_zero_in_q():
    th = Theory("Q", basis(Q))
    for u in (T("x x t"), T("t x x")):
        res = search_deduction(u, T("x x"), th)
        assert res.sequence is None
        assert res.space_exhausted  # the whole bounded space was explored


def test_search_reports_bound_exhaustion():
    grow = theory("grow", [parse_identity("x = x x")])
    res = search_deduction(T("x"), T("y"), grow, depth=2, size_cap=8)
    assert res.sequence is None
    assert not res.space_exhausted  # stopped on depth, not on emptiness


def test_parse_deduction_file():
    text = """
    # collapse
    theories: K
    x x x t
    x x x
    """
    theories, terms = parse_deduction_file(text)
    assert [t.name for t in theories] == ["K"]
    assert terms == [T("x x x t"), T("x x x")]
    assert verify_deduction(terms, theories).valid


def test_parse_deduction_file_requires_header():
    with pytest.raises(ValueError):
        parse_deduction_file("x x\nx\n")


def test_named_theory_lookup():
    assert named_theory("epi").includes_epi_axioms
    assert named_theory("stable(2)").name == "stable(2)"
    th = named_theory("K(3)")
    assert th.identities == basis(parse_term_variety("K(3)"))


def parse_term_variety(name):
    from epilat.varieties import parse_variety
    return parse_variety(name)
