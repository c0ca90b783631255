import random

import pytest

from curvemat.scalars import gq
from curvemat.unipoly import RatFunc
from curvemat.multipoly import (
    MultiPoly,
    bareiss_generic_rank,
    buchberger,
    multiplication_matrix,
    normal_form,
    standard_monomials,
)


def mp(nvars, terms):
    return MultiPoly(nvars, terms)


def rand_mp(rng, nvars=2, max_terms=4, max_deg=3, span=3):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        e = tuple(rng.randint(0, max_deg) for _ in range(nvars))
        terms[e] = gq(rng.randint(-span, span), rng.randint(-1, 1))
    return MultiPoly(nvars, terms)


def test_ring_axioms_random_triples():
    rng = random.Random(11)
    for _ in range(200):
        a, b, c = rand_mp(rng), rand_mp(rng), rand_mp(rng)
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        assert a - a == mp(2, {})


def test_no_zero_coefficients_stored():
    p = mp(2, {(1, 0): gq(1)}) + mp(2, {(1, 0): gq(-1)})
    assert p.terms == {}


def test_buchberger_linear_ideal():
    x = MultiPoly.variable(2, 0)
    y = MultiPoly.variable(2, 1)
    basis = buchberger([x, y])
    assert sorted(g.leading()[0] for g in basis) == [(0, 1), (1, 0)]
    assert standard_monomials(basis) == [(0, 0)]


def test_buchberger_two_points():
    # {x^2 - 1, y - x}: the two points (1, 1), (-1, -1)
    x2m1 = mp(2, {(2, 0): gq(1), (0, 0): gq(-1)})
    ymx = mp(2, {(0, 1): gq(1), (1, 0): gq(-1)})
    basis = buchberger([x2m1, ymx])
    std = standard_monomials(basis)
    # with x1 > x2 the relation y - x rewrites x, leaving {1, y}; the
    # quotient dimension is the number of points either way
    assert std == [(0, 0), (0, 1)]
    assert len(std) == 2
    for pt in [(gq(1), gq(1)), (gq(-1), gq(-1))]:
        for g in basis:
            assert not g.evaluate(pt)


def test_buchberger_quartic_curve_fiber():
    # generators x*y - t, t^2*y - x^3, t*y^2 - x^2, y^3 - x over Q(i)(t)
    t = RatFunc.t()
    one = RatFunc(1)

    def q(terms):
        return MultiPoly(2, terms, RatFunc)

    gens = [
        q({(1, 1): one, (0, 0): -t}),
        q({(0, 1): t * t, (3, 0): -one}),
        q({(0, 2): t, (2, 0): -one}),
        q({(0, 3): one, (1, 0): -one}),
    ]
    basis = buchberger(gens)
    std = standard_monomials(basis)
    assert std == [(0, 0), (1, 0), (0, 1), (0, 2)]
    for g in gens:
        assert normal_form(g, basis).is_zero()


def test_normal_form_idempotent_and_membership():
    rng = random.Random(12)
    x2m1 = mp(2, {(2, 0): gq(1), (0, 0): gq(-1)})
    ymx = mp(2, {(0, 1): gq(1), (1, 0): gq(-1)})
    basis = buchberger([x2m1, ymx])
    for _ in range(50):
        p = rand_mp(rng)
        nf = normal_form(p, basis)
        assert normal_form(nf, basis) == nf
        assert normal_form(p - nf, basis).is_zero()


def test_standard_monomial_cap():
    x = MultiPoly.variable(2, 0)
    with pytest.raises(ValueError):
        standard_monomials(buchberger([x]), cap=8)


def test_multiplication_matrices_commute():
    # {x^2 - 1, y - x}: mult-by-x has eigenvalues +-1 and equals mult-by-y
    x2m1 = mp(2, {(2, 0): gq(1), (0, 0): gq(-1)})
    ymx = mp(2, {(0, 1): gq(1), (1, 0): gq(-1)})
    basis = buchberger([x2m1, ymx])
    std = standard_monomials(basis)
    mx = multiplication_matrix(0, basis, std)
    my = multiplication_matrix(1, basis, std)
    assert mx == my
    assert mx * my == my * mx
    # x * 1 = x, x * x = 1
    assert mx.column(0) == (gq(0), gq(1))
    assert mx.column(1) == (gq(1), gq(0))


def test_bareiss_generic_rank():
    # rows (v1, v2), (v2, v1): generically rank 2
    v1 = MultiPoly.variable(2, 0)
    v2 = MultiPoly.variable(2, 1)
    assert bareiss_generic_rank([[v1, v2], [v2, v1]]) == 2
    # rows (v1, v2), (v1, v2): rank 1 for every specialization
    assert bareiss_generic_rank([[v1, v2], [v1, v2]]) == 1
    zero = MultiPoly(2, {})
    assert bareiss_generic_rank([[zero, zero]]) == 0
