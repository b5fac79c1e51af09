import pytest

from bracelab.catalog import cyclic_table, trivial_brace
from bracelab.core import direct_sum, split_index
from bracelab.series import (
    annihilator,
    centre,
    is_m_left_nil,
    is_m_right_nil,
    left_annihilator,
    left_series,
    multipermutation_level,
    nilpotency_class,
    nilpotency_report,
    right_series,
    socle,
    socle_series,
)
from bracelab.substructure import additive_subgroups, enumerate_subbraces, from_mask, is_dedekind, is_ideal

from oracles import brute_socle

ONE = trivial_brace(cyclic_table(1))


def fs(*xs):
    return frozenset(xs)


def test_left_series_examples(B4, Z2):
    assert left_series(Z2).terms == (fs(0, 1), fs(0))
    assert left_series(B4).terms == (fs(0, 1, 2, 3), fs(0, 2), fs(0))
    assert left_series(ONE).terms == (fs(0),)
    assert left_series(B4).stabilized


def test_right_series_examples(B4, Z2):
    assert right_series(Z2).terms == (fs(0, 1), fs(0))
    assert right_series(B4).terms == (fs(0, 1, 2, 3), fs(0, 2), fs(0))
    assert right_series(ONE).terms == (fs(0),)
    t6 = trivial_brace(cyclic_table(6))
    assert right_series(t6).terms == (frozenset(range(6)), fs(0))


def test_b6_is_not_left_nilpotent(B6):
    # A * {0,2,4} = {0,2,4}: lambda_odd negates the even elements
    assert left_series(B6).terms == (frozenset(range(6)), fs(0, 2, 4))
    assert nilpotency_class(left_series(B6)) is None


def test_nil_conditions(B4, Z2):
    assert is_m_right_nil(Z2, 2) and is_m_left_nil(Z2, 2)
    assert not is_m_right_nil(B4, 2) and not is_m_left_nil(B4, 2)
    assert is_m_right_nil(B4, 3) and is_m_left_nil(B4, 3)
    assert not is_m_right_nil(Z2, 1)
    with pytest.raises(ValueError):
        is_m_right_nil(B4, 0)


def test_annihilators(B4, Z2):
    assert left_annihilator(Z2, Z2.elements) == fs(0, 1)
    assert left_annihilator(B4, B4.elements) == fs(0, 2)
    assert annihilator(B4, B4.elements) == fs(0, 2)


def test_socle_centre(B4, B6, Z2):
    assert socle(Z2) == fs(0, 1)
    assert socle(B4) == fs(0, 2)
    assert centre(B6) <= socle(B6)
    # 3 does not commute with 2 in B6: 3.2 = 1, 2.3 = 5
    assert centre(B6) == fs(0)


def test_socle_matches_bruteforce(small_braces):
    for A in small_braces:
        assert socle(A) == brute_socle(A.add_table, A.mul_table)


def test_abelian_iff_centre_is_everything(small_braces):
    for A in small_braces:
        assert A.is_abelian() == (centre(A) == frozenset(A.elements))


def test_socle_series_examples(B4, Z2):
    assert socle_series(Z2).terms == (fs(0), fs(0, 1))
    assert multipermutation_level(Z2) == 1
    assert socle_series(B4).terms == (fs(0), fs(0, 2), fs(0, 1, 2, 3))
    assert multipermutation_level(B4) == 2
    assert socle_series(ONE).terms == (fs(0),)
    assert multipermutation_level(ONE) == 0


def test_nilpotency_report(B4, B6, Z2):
    r = nilpotency_report(Z2)
    assert r.left_nilpotent and r.right_nilpotent and r.centrally_nilpotent
    assert r.multipermutation_level == 1
    r = nilpotency_report(B4)
    assert (r.left_class, r.right_class, r.centrally_nilpotent, r.multipermutation_level) == (3, 3, True, 2)
    r = nilpotency_report(B6)
    assert r.right_nilpotent and not r.left_nilpotent and not r.centrally_nilpotent
    assert r.multipermutation_level == 2


def test_series_terms_are_ideals_and_monotone(small_braces):
    for A in small_braces:
        for chain in (left_series(A), right_series(A)):
            for big, small in zip(chain.terms, chain.terms[1:]):
                assert small < big
            for t in chain.terms:
                assert is_ideal(A, t)
        soc = socle_series(A)
        for small, big in zip(soc.terms, soc.terms[1:]):
            assert small < big
        for t in soc.terms:
            assert is_ideal(A, t)


def test_right_nilpotent_iff_finite_level(small_braces):
    for A in small_braces:
        r = nilpotency_report(A)
        assert r.right_nilpotent == (r.multipermutation_level is not None)


def test_annihilators_of_ideals_are_normal(small_braces):
    for A in small_braces:
        for S in enumerate_subbraces(A):
            if not is_ideal(A, S):
                continue
            for ann in (left_annihilator(A, S), annihilator(A, S)):
                for x in ann:
                    assert A.inv(x) in ann
                    for y in ann:
                        assert A.mul(x, y) in ann
                    for g in A.elements:
                        assert A.mul(A.mul(g, x), A.inv(g)) in ann


def test_dedekind_socle_subgroups_are_ideals(small_braces):
    for A in small_braces:
        if not is_dedekind(A):
            continue
        soc = socle(A)
        for H in additive_subgroups(A):
            H = from_mask(H)
            if set(H) <= soc:
                assert is_ideal(A, H)


def test_direct_sum_socle_and_centre(catalog):
    pairs = [("neg-Z4", "trivial-Z2"), ("neg-Z6", "trivial-Z2"), ("neg-Z4", "neg-Z4"), ("trivial-Klein", "neg-Z4")]
    for a, b in pairs:
        A, B = catalog[a], catalog[b]
        D = direct_sum(A, B)
        for f in (socle, centre):
            expected = {x for x in D.elements
                        if split_index(B, x)[0] in f(A) and split_index(B, x)[1] in f(B)}
            assert f(D) == expected
