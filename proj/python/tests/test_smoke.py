import pytest

import ajfilt


def test_witt_and_lyndon():
    assert [ajfilt.witt_rank(2, s) for s in range(1, 11)] == [2, 1, 2, 3, 6, 9, 18, 30, 56, 99]
    assert ajfilt.lyndon_words(2, 3) == [(1, 1, 2), (1, 2, 2)]
    assert ajfilt.bracketing(2, [1, 1, 2]) == "[x1,[x1,x2]]"
    assert ajfilt.witt_rank(2, 60) > 2**50


def test_lie_round_trip():
    t = ajfilt.expand_lyndon(2, [1, 1, 2])
    assert t == {(1, 1, 2): 1, (1, 2, 1): -2, (2, 1, 1): 1}
    assert ajfilt.lie_to_lyndon(2, 3, t) == {(1, 1, 2): 1}
    with pytest.raises(ajfilt.NotLieElement):
        ajfilt.lie_to_lyndon(2, 2, {(1, 2): 1, (2, 1): 1})


def test_words_and_magnus():
    assert ajfilt.reduce_word(2, "x1 x2 x2^-1 x1^-1") == "1"
    m = ajfilt.magnus_expand(2, "[x1,x2]", 2)
    assert m == {(): 1, (1, 2): 1, (2, 1): -1}
    assert ajfilt.filtration_degree(2, "[[x1,x2],x2]", 4) == 3
    assert ajfilt.filtration_degree(2, "1", 4) is None
    assert ajfilt.leading_lie(2, "[x1,x2]", 2) == {(1, 2): 1}
    with pytest.raises(ajfilt.ParseError):
        ajfilt.reduce_word(2, "x1 x3")
    with pytest.raises(ajfilt.NotInFiltration):
        ajfilt.leading_lie(2, "x1", 2)


def test_automorphisms_and_tau():
    assert ajfilt.compile_aut(3, "a(3,1)*a(3,2)")[2] == "x1 x2 x3 x2^-1 x1^-1"
    assert ajfilt.johnson_degree(3, "[a(3,1),a(3,2)]") == 2
    t = ajfilt.tau(3, "[a(3,1),a(3,2)]", 2)
    assert t[0] == {} and t[1] == {}
    assert t[2] == {(1, 2, 3): 1, (1, 3, 2): 1}
    with pytest.raises(ValueError):
        ajfilt.tau(3, "a(3,3)", 1)


def test_verification_suites():
    assert ajfilt.verify_mccool(4)["failures"] == 0
    assert ajfilt.verify_prop62(3, 3, [1, 2])["holds"]
    assert ajfilt.verify_prop62(3, 3, [1, 1])["vacuous"]
    r = ajfilt.injectivity(4, 3, 2)
    assert r["ok"] and r["rank"] == r["expected"] == 2
    assert ajfilt.verify_lie_morphism(10, 3) == 0


def test_ranks():
    assert ajfilt.gr_rank_psn(4, 3) == 10
    assert ajfilt.summand_ranks(4, 3, 2) == [1, 2, 1]
    assert ajfilt.hi_lower_bound(4, 3, 1) == 8
    assert ajfilt.ep_coeffs(3, 3) == [9, 24, 54]
    g = ajfilt.growth_check(3, 1, 2, 6)
    assert g["bounds"] == [1, 2, 3, 6, 9] and g["passes"]
    with pytest.raises(ValueError):
        ajfilt.hi_lower_bound(4, 2, 3)
