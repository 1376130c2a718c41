from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from smult.errors import ConfigError, ModulusMismatch, StructuralError
from smult.limits import lattice_count
from smult.modp import dense_rank
from smult.monomial import MonomialIdeal, bracket_power, colength, ordinary_power, parse_ideal
from smult.ring import (
    ExpandedIdeal,
    ModuleSpec,
    PolyRelation,
    RingPresentation,
    expand_pair,
    format_ring,
    module_length,
    parse_poly,
    parse_ring,
    quadric,
    quotient_length,
)


def ideal(text, n=2):
    return parse_ideal(text, n)


def node(p=3):
    return RingPresentation.monomial(p, ideal("(x1*x2)"))


def hand_length(ring, A, box):
    """Length by explicit box enumeration and a dense rank of the f*m rows."""
    gens = (ring.monomial_relations + A).gens

    def dead(m):
        return any(all(a <= b for a, b in zip(g, m)) for g in gens)

    basis = [m for m in itertools.product(*[range(b) for b in box]) if not dead(m)]
    index = {m: i for i, m in enumerate(basis)}
    rows = []
    for f in ring.poly_relations:
        for m in basis:
            row = [0] * len(basis)
            for t, c in f.terms:
                prod = tuple(a + b for a, b in zip(t, m))
                if prod in index:
                    row[index[prod]] = (row[index[prod]] + c) % ring.p
            rows.append(row)
    return len(basis) - (dense_rank(rows, ring.p) if rows and basis else 0)


# ------------------------------------------------------------ examples


def test_quotient_length_examples():
    assert quotient_length(node(), ideal("(x1^3, x2^3)")) == 5
    assert quotient_length(RingPresentation.polynomial(3, 1), parse_ideal("(x1^4)", 1)) == 4


def test_quadric_hypersurface_length():
    # k[x,y]/(x^2+y^2) at p = 3 modulo (x^3, y^3): the images of f*m span
    # x^2+y^2, xy^2, x^2y, x^2y^2, so the length is 9 - 4 = 5
    R = RingPresentation(3, 2, MonomialIdeal.zero(2), 1, (parse_poly("x1^2+x2^2", 3, 2),), True)
    A = ideal("(x1^3, x2^3)")
    assert hand_length(R, A, (3, 3)) == 5
    assert quotient_length(R, A) == 5


def test_module_length_examples():
    R = RingPresentation.polynomial(3, 2)
    A = ideal("(x1^2, x2^2)")
    assert module_length(R, ModuleSpec.free(2), A) == quotient_length(R, A)
    assert module_length(R, ModuleSpec((ideal("(x1)"),)), A) == 2
    both = ModuleSpec((MonomialIdeal.zero(2), ideal("(x1)")))
    assert module_length(R, both, A) == quotient_length(R, A) + 2


def test_expand_pair_examples():
    x = parse_ideal("(x1)", 1)
    A = expand_pair(x, x, 1, 3)
    assert A.materialize() == parse_ideal("(x1^3)", 1)
    m = MonomialIdeal.maximal(2)
    A = expand_pair(m, ideal("(x1, x2)"), Fraction(1, 2), 9)
    assert A.cap == 5 and A.cap_vars is None
    assert A.ideal == ideal("(x1^9, x2^9)")
    I, J = ideal("(x1^2, x2)"), ideal("(x1, x2^2)")
    A = expand_pair(I, J, 2, 2)
    expected = ordinary_power(I, 4) + ideal("(x1^2, x2^4)")
    assert A.materialize() == expected
    # membership: a monomial lies in A iff it lies in I^4 or in J^[2]
    for m in itertools.product(range(10), range(6)):
        in_power = m in ordinary_power(I, 4)
        in_bracket = m[0] >= 2 or m[1] >= 4
        assert (m in A.materialize()) == (in_power or in_bracket)


def test_expand_pair_rejects_bad_input():
    m = MonomialIdeal.maximal(2)
    with pytest.raises(StructuralError):
        expand_pair(m, m, 0, 3)
    with pytest.raises(StructuralError):
        expand_pair(m, m, 1, 0)


def test_partial_variable_cap():
    # I = (x1), J = (x2), s = 5/3, q = 3: I^5 + (x2^3) has colength 5 * 3
    R = RingPresentation.polynomial(3, 2)
    A = expand_pair(ideal("(x1)"), ideal("(x2)"), Fraction(5, 3), 3)
    assert A.cap == 5 and A.cap_vars == (0,)
    assert quotient_length(R, A) == colength(A.materialize()) == 15


def test_quotient_length_degree_cap_combinations():
    R = RingPresentation.polynomial(3, 2)
    A = ExpandedIdeal(ideal("(x2^4)"), 3, (0,))
    for cap in range(0, 7):
        expected = colength(A.materialize() + ordinary_power(MonomialIdeal.maximal(2), cap))
        assert quotient_length(R, A, degree_cap=cap) == expected


def test_ring_parse_round_trip():
    R = parse_ring("p=5; n=3; mono=(x1*x2, x3^2); dim=1")
    assert R.p == 5 and R.nvars == 3 and R.dim == 1
    assert parse_ring(format_ring(R)) == R
    Q = quadric(3, 2)
    assert parse_ring(format_ring(Q)) == Q


def test_declared_dim_rules():
    with pytest.raises(ConfigError):
        parse_ring("p=3; n=2; mono=(x1*x2); dim=2")
    with pytest.raises(ConfigError):
        parse_ring("p=3; n=2; poly=x1^2+x2^2; dim=2")
    R = parse_ring("p=3; n=2; poly=x1^2+x2^2; param=1; dim=1")
    assert R.dim == 1 and R.parameters
    assert parse_ring("p=3; n=2; mono=(x1*x2)").dim == 1


def test_bad_inputs():
    with pytest.raises(StructuralError):
        RingPresentation.polynomial(4, 2)
    with pytest.raises(ModulusMismatch):
        RingPresentation(3, 2, MonomialIdeal.zero(2), 1, (parse_poly("x1^2+x2^2", 5, 2),), True)
    with pytest.raises(ConfigError):
        parse_ring("p=3; n=2; bogus=1")
    with pytest.raises(StructuralError):
        quotient_length(node(), parse_ideal("(x1)", 3))


def test_quadric_shape():
    Q = quadric(3, 2)
    assert Q.nvars == 3 and Q.dim == 2 and len(Q.poly_relations) == 1
    assert Q.poly_relations[0].is_homogeneous()


# ------------------------------------------------------------ properties


@st.composite
def monomial_rings(draw):
    n = draw(st.integers(1, 3))
    gens = draw(st.lists(st.tuples(*[st.integers(0, 3)] * n).filter(any), max_size=2))
    return RingPresentation.monomial(draw(st.sampled_from([2, 3, 5])), MonomialIdeal(n, tuple(gens)))


@st.composite
def artinian(draw, n, top=6):
    pure = tuple(tuple(draw(st.integers(1, top)) if j == i else 0 for j in range(n))
                 for i in range(n))
    extra = tuple(draw(st.lists(st.tuples(*[st.integers(0, top)] * n), max_size=3)))
    return MonomialIdeal(n, pure + extra)


@settings(max_examples=80, deadline=None)
@given(monomial_rings().flatmap(lambda R: st.tuples(st.just(R), artinian(R.nvars))))
def test_monomial_ring_length_is_colength(case):
    R, A = case
    assert quotient_length(R, A) == colength(R.monomial_relations + A)


@settings(max_examples=80, deadline=None)
@given(monomial_rings().flatmap(lambda R: st.tuples(
    st.just(R), artinian(R.nvars), st.lists(st.tuples(*[st.integers(0, 5)] * R.nvars), max_size=3))))
def test_length_antitone(case):
    R, A, extra = case
    bigger = A + MonomialIdeal(R.nvars, tuple(extra))
    assert quotient_length(R, A) >= quotient_length(R, bigger)


@st.composite
def poly_cases(draw):
    p = draw(st.sampled_from([2, 3, 5]))
    n = draw(st.integers(1, 3))
    box = tuple(draw(st.integers(1, 4)) for _ in range(n))
    A = MonomialIdeal(n, tuple(tuple(box[i] if j == i else 0 for j in range(n)) for i in range(n)))
    terms = draw(st.lists(st.tuples(st.tuples(*[st.integers(0, 3)] * n), st.integers(1, p - 1)),
                          min_size=1, max_size=3, unique_by=lambda t: t[0]))
    f = PolyRelation(p, n, tuple(terms))
    return RingPresentation(p, n, MonomialIdeal.zero(n), max(n - 1, 0), (f,), True), A, box


@settings(max_examples=80, deadline=None)
@given(poly_cases())
def test_poly_length_matches_dense_oracle(case):
    R, A, box = case
    assert quotient_length(R, A) == hand_length(R, A, box)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3), st.integers(1, 3))
def test_relation_inside_ideal_contributes_nothing(n, top):
    # every term of f lies in B, so the rank contribution is zero
    A = MonomialIdeal(n, tuple(tuple(top if j == i else 0 for j in range(n)) for i in range(n)))
    terms = tuple((tuple(top + k if j == 0 else 0 for j in range(n)), 1) for k in range(2))
    R = RingPresentation(3, n, MonomialIdeal.zero(n), n - 1, (PolyRelation(3, n, terms),), True)
    assert quotient_length(R, A) == colength(A)


@pytest.mark.parametrize("d", [1, 2, 3])
@pytest.mark.parametrize("s", [Fraction(1, 4), Fraction(1, 2), Fraction(1), Fraction(3, 2), 2, 3])
def test_regular_lengths_are_lattice_counts(d, s):
    R = RingPresentation.polynomial(3, d)
    m = R.maximal_ideal()
    for q in (3, 9):
        A = expand_pair(m, m, s, q)
        c = -(-Fraction(s) * q // 1)
        assert quotient_length(R, A) == lattice_count(q, d, int(c))


def test_bracket_power_of_maximal_ideal_is_box():
    R = RingPresentation.polynomial(2, 3)
    assert quotient_length(R, bracket_power(R.maximal_ideal(), 4)) == 64
