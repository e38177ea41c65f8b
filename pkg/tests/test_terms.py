import pytest
from hypothesis import given, strategies as st

from epilat.terms import (Identity, Letter, ParseError, Product,
                          PseudoInverse, classify_identity, content,
                          expand_zero, factors, first_letter, format_term,
                          is_semigroup_word, k_sigma_is_variety, last_letter,
                          letter_sequence, mk_product, occurrences, omega,
                          parse_identity, parse_term, substitute, term_stats,
                          word)


def test_parse_simple_product():
    t = parse_term("x y x")
    assert isinstance(t, Product)
    assert letter_sequence(t) == ("x", "y", "x")


def test_parse_pinv_and_omega():
    t = parse_term("~(x y)")
    assert isinstance(t, PseudoInverse)
    # u^w is sugar for u ~(u)
    w = parse_term("(x)^w")
    assert w == mk_product([Letter("x"), PseudoInverse(Letter("x"))])
    assert w == omega(Letter("x"))


def test_products_flatten():
    t = mk_product([mk_product([word("xy"), Letter("z")]), Letter("t")])
    assert letter_sequence(t) == ("x", "y", "z", "t")
    assert all(not isinstance(f, Product) for f in factors(t))


def test_omega_after_pinv_rejected():
    with pytest.raises(ParseError):
        parse_term("~(x)^w")


def test_parse_errors_have_position():
    with pytest.raises(ParseError):
        parse_term("x (")
    with pytest.raises(ParseError):
        parse_term("")


def test_zero_identity_expansion():
    ident = parse_identity("x x y = 0")
    assert ident.is_zero
    left, right = expand_zero(ident)
    assert not left.is_zero and not right.is_zero
    extra = content(left.lhs) - content(ident.lhs)
    assert len(extra) == 1  # one fresh letter, shared by both directions


def test_occurrences_counts_under_pinv():
    t = parse_term("x ~(x y) y")
    assert occurrences(t) == {"x": 2, "y": 2}
    assert content(t) == frozenset("xy")


def test_semigroup_word_detection():
    assert is_semigroup_word(word("xyzx"))
    assert not is_semigroup_word(parse_term("x ~(y)"))


def test_edge_letters_see_through_pinv():
    t = parse_term("~(x y) z")
    assert first_letter(t) == "x"
    assert last_letter(t) == "z"


def test_term_stats_length_infinite_with_pinv():
    s = term_stats(parse_term("x ~(y)"))
    assert s.length == float("inf")
    st_plain = term_stats(word("xxy"))
    assert st_plain.length == 3
    assert st_plain.is_linear is False


def test_classify_substitutive():
    c = classify_identity(parse_identity("x y x = y x y"))
    assert c.substitutive
    c2 = classify_identity(parse_identity("x y = y x"))
    assert c2.permutative and c2.balanced


def test_classify_zero_reduced():
    c = classify_identity(parse_identity("x x y = 0"))
    assert c.zero_reduced and not c.balanced


def test_balanced_single_identity_is_no_variety():
    # one balanced non-trivial identity never cuts out an epigroup variety
    assert not k_sigma_is_variety([parse_identity("x y = y x")])
    assert k_sigma_is_variety([parse_identity("x x y = 0")])


def test_substitute_flattens():
    t = substitute(word("xy"), {"x": word("ab"), "y": Letter("c")})
    assert letter_sequence(t) == ("a", "b", "c")


_letters = st.sampled_from("xyz")
_words = st.text(alphabet="xyz", min_size=1, max_size=6)


@given(_words)
def test_parse_format_roundtrip(s):
    t = word(s)
    assert parse_term(format_term(t)) == t


@given(_words, _words)
def test_substitution_into_pinv(a, b):
    t = PseudoInverse(word(a))
    image = substitute(t, {c: word(b) for c in set(a)})
    assert isinstance(image, PseudoInverse)


@given(_words)
def test_occurrences_match_sequence(s):
    t = word(s)
    occ = occurrences(t)
    assert sum(occ.values()) == len(s)
    assert set(occ) == set(s)
