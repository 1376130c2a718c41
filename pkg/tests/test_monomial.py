from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from smult.errors import NotArtinian, StructuralError
from smult.monomial import (
    MonomialIdeal,
    bracket_power,
    brute_force_colength,
    colength,
    contains,
    format_ideal,
    ideal_product,
    is_artinian,
    krull_dimension,
    minimalize,
    ordinary_power,
    parse_ideal,
    standard_monomials,
)


def ideal(text, n=2):
    return parse_ideal(text, n)


def brute_contains(gens, m):
    return any(all(a <= b for a, b in zip(g, m)) for g in gens)


# ------------------------------------------------------------ examples


def test_minimalize_examples():
    assert set(minimalize({(2, 0), (3, 0), (0, 1)}, 2).gens) == {(2, 0), (0, 1)}
    assert minimalize(set(), 2).is_zero
    assert set(minimalize({(1, 1), (2, 1), (1, 2)}, 2).gens) == {(1, 1)}


def test_generators_are_minimal_and_sorted():
    I = MonomialIdeal(2, ((3, 0), (1, 1), (2, 0), (1, 1)))
    assert I.gens == tuple(sorted({(2, 0), (1, 1)}))


def test_bracket_power_examples():
    assert bracket_power(ideal("(x1^2, x1*x2)"), 3) == ideal("(x1^6, x1^3*x2^3)")
    I = ideal("(x1^2, x2^5)")
    assert bracket_power(I, 1) == I
    assert bracket_power(MonomialIdeal.maximal(2), 2) == ideal("(x1^2, x2^2)")


def test_ordinary_power_examples():
    assert ordinary_power(MonomialIdeal.maximal(2), 2) == ideal("(x1^2, x1*x2, x2^2)")
    I = ideal("(x1^3, x1*x2)")
    assert ordinary_power(I, 1) == I
    got = ordinary_power(ideal("(x1^2, x2)"), 3)
    assert got == ideal("(x1^6, x1^4*x2, x1^2*x2^2, x2^3)")
    # membership oracle: every 3-fold product lies in the result, and every generator is one
    gens = [(2, 0), (0, 1)]
    products = {tuple(map(sum, zip(*c))) for c in itertools.combinations_with_replacement(gens, 3)}
    assert all(contains(got, m) for m in products)
    assert set(got.gens) <= products
    assert ordinary_power(I, 0).is_unit


def test_sum_examples():
    assert ideal("(x1^2)") + ideal("(x2^3)") == ideal("(x1^2, x2^3)")
    I = ideal("(x1^2, x1*x2)")
    assert I + MonomialIdeal.zero(2) == I
    assert ideal("(x1^2, x1*x2)") + ideal("(x2^2)") == ideal("(x1^2, x1*x2, x2^2)")


def test_contains_examples():
    I = ideal("(x1^2, x2)")
    assert contains(I, (3, 1))
    assert not contains(I, (1, 0))
    assert not contains(MonomialIdeal.zero(2), (0, 0))


def test_is_artinian_examples():
    assert is_artinian(ideal("(x1^2, x2^3)"))
    assert not is_artinian(ideal("(x1*x2)"))
    assert is_artinian(MonomialIdeal.unit(2))


def test_colength_examples():
    assert colength(ideal("(x1^2, x2^3)")) == 6
    assert colength(ideal("(x1^2, x1*x2, x2^3)")) == 4
    assert set(standard_monomials(ideal("(x1^2, x1*x2, x2^3)"))) == {(0, 0), (1, 0), (0, 1), (0, 2)}
    assert colength(MonomialIdeal.zero(2), degree_cap=3) == 6


def test_colength_rejects_infinite_quotient():
    with pytest.raises(NotArtinian):
        colength(ideal("(x1*x2)"))


def test_colength_partial_cap():
    # cap only on x1: k[x1,x2]/(x2^3) with deg_x1 < 4 gives 4 * 3
    assert colength(ideal("(x2^3)"), degree_cap=4, cap_vars=(0,)) == 12


def test_krull_dimension_examples():
    assert krull_dimension(ideal("(x1*x2)")) == 1
    assert krull_dimension(MonomialIdeal.zero(3)) == 3
    I = ideal("(x1^2, x1*x2, x2^3)")
    assert krull_dimension(I) == 0 and is_artinian(I)
    assert krull_dimension(parse_ideal("(x1*x2, x3)", 4)) == 2


def test_parse_format_round_trip():
    I = parse_ideal("(x1^2, x2*x3, x3^4)", 3)
    assert parse_ideal(format_ideal(I), 3) == I
    assert parse_ideal("()", 3).is_zero
    assert parse_ideal("(0)", 3).is_zero
    assert parse_ideal("(1)", 3).is_unit


@pytest.mark.parametrize("bad", ["(y^2)", "(x4)", "(x1^-1)", "x1^2, x2"])
def test_parse_errors(bad):
    with pytest.raises(StructuralError):
        parse_ideal(bad, 3)


def test_mixed_ambient_rejected():
    with pytest.raises(StructuralError):
        ideal("(x1)") + parse_ideal("(x1)", 3)


# ------------------------------------------------------------ properties


def monomials(n, top=4):
    return st.tuples(*[st.integers(0, top)] * n)


@st.composite
def artinian_ideals(draw, n=None, box=12):
    n = n if n is not None else draw(st.integers(1, 3))
    pure = [tuple(draw(st.integers(1, box)) if j == i else 0 for j in range(n)) for i in range(n)]
    extra = draw(st.lists(monomials(n, box - 1), max_size=4))
    return MonomialIdeal(n, tuple(pure) + tuple(extra))


@st.composite
def small_ideals(draw, n=2):
    gens = draw(st.lists(monomials(n, 3).filter(any), min_size=1, max_size=3))
    return MonomialIdeal(n, tuple(gens))


@settings(max_examples=150, deadline=None)
@given(artinian_ideals())
def test_colength_matches_brute_force_box(I):
    assert colength(I) == brute_force_colength(I)
    if I.is_unit:
        assert colength(I) == 0
        return
    box = I.pure_power_exponents()
    count = sum(1 for m in itertools.product(*[range(b) for b in box])
                if not brute_contains(I.gens, m))
    assert colength(I) == count


@settings(max_examples=100, deadline=None)
@given(small_ideals(), st.integers(1, 4), st.integers(1, 4))
def test_bracket_power_composes(I, q1, q2):
    assert bracket_power(bracket_power(I, q1), q2) == bracket_power(I, q1 * q2)


@settings(max_examples=60, deadline=None)
@given(small_ideals(), st.integers(0, 3), st.integers(0, 3))
def test_ordinary_power_adds(I, a, b):
    assert ordinary_power(I, a + b) == ideal_product(ordinary_power(I, a), ordinary_power(I, b))


@settings(max_examples=100, deadline=None)
@given(artinian_ideals(n=2, box=8), st.lists(monomials(2, 7), max_size=3))
def test_colength_monotone(I, more):
    bigger = I + MonomialIdeal(2, tuple(more))
    assert I <= bigger
    assert colength(I) >= colength(bigger)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 3).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(monomials(n, 4).filter(any), max_size=3))), st.integers(0, 6))
def test_cap_equals_adding_maximal_power(data, cap):
    n, gens = data
    I = MonomialIdeal(n, tuple(gens))
    expected = colength(I + ordinary_power(MonomialIdeal.maximal(n), cap))
    assert colength(I, degree_cap=cap) == expected


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 3).flatmap(lambda n: st.lists(monomials(n, 3).filter(any), max_size=3)
                                 .map(lambda g: MonomialIdeal(n, tuple(g)))))
def test_krull_zero_iff_artinian(I):
    assert (krull_dimension(I) == 0) == is_artinian(I)
