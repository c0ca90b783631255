import random
from fractions import Fraction

import pytest

from curvemat.scalars import gq
from curvemat.unipoly import UniPoly, RatFunc
from curvemat.linalg import (
    FieldMatrix,
    SignatureReport,
    char_poly,
    commutator,
    inertia,
    minors_gcd,
    rank_everywhere,
    rank_kernel,
)


def rand_matrix(rng, n, m=None, span=3):
    m = m or n
    return FieldMatrix(
        [[gq(rng.randint(-span, span), rng.randint(-1, 1)) for _ in range(m)] for _ in range(n)]
    )


def test_rank_kernel_identity_and_zero():
    rank, basis = rank_kernel(FieldMatrix.identity(3))
    assert rank == 3 and basis == []
    rank, basis = rank_kernel(FieldMatrix.zeros(2, 4))
    assert rank == 0 and len(basis) == 4


def test_rank_kernel_over_function_field():
    t = RatFunc.t()
    m = FieldMatrix([[RatFunc(1), t], [t, t * t]], RatFunc)
    rank, basis = rank_kernel(m)
    assert rank == 1
    assert len(basis) == 1
    v = basis[0]
    # kernel spanned by (-t, 1)
    scale = v[1]
    assert (v[0] / scale, v[1] / scale) == (-t, RatFunc(1))
    assert all(not x for x in m.apply(v))


def test_rank_plus_nullity_and_exact_kernel():
    rng = random.Random(7)
    for _ in range(100):
        m = rand_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        rank, basis = rank_kernel(m)
        assert rank + len(basis) == m.ncols
        for v in basis:
            assert all(not x for x in m.apply(v))
        # independent elimination order: reverse the columns
        rev = m.submatrix(range(m.nrows), range(m.ncols - 1, -1, -1))
        assert rev.rank() == rank


def test_inverse_and_solve():
    rng = random.Random(8)
    for _ in range(50):
        n = rng.randint(1, 4)
        m = rand_matrix(rng, n)
        if m.rank() < n:
            continue
        inv = m.inverse()
        assert m * inv == FieldMatrix.identity(n)
        rhs = tuple(gq(rng.randint(-3, 3)) for _ in range(n))
        x = m.solve(rhs)
        assert m.apply(x) == rhs


def test_det_multiplicative():
    rng = random.Random(9)
    for _ in range(50):
        n = rng.randint(1, 4)
        a, b = rand_matrix(rng, n), rand_matrix(rng, n)
        assert (a * b).det() == a.det() * b.det()


def test_char_poly_companion():
    # companion of t^3 - 2t + 5
    m = FieldMatrix([[0, 0, -5], [1, 0, 2], [0, 1, 0]])
    assert char_poly(m) == UniPoly((5, -2, 0, 1))


def test_inertia_trivial_cases():
    assert inertia(FieldMatrix.diagonal([gq(1), gq(-1), gq(0)])) == (1, 1, 1)
    assert inertia([[0, 1], [1, 0]]) == (1, 1, 0)


def test_inertia_rejects_nonsymmetric():
    with pytest.raises(ValueError):
        inertia([[0, 1], [2, 0]])


def test_inertia_congruence_invariance():
    rng = random.Random(10)
    base = [[Fraction(rng.randint(-4, 4)) for _ in range(5)] for _ in range(5)]
    sym = [[base[i][j] + base[j][i] for j in range(5)] for i in range(5)]
    expected = inertia(sym).as_tuple()
    trials = 0
    while trials < 50:
        p = [[Fraction(rng.randint(-3, 3)) for _ in range(5)] for _ in range(5)]
        pm = FieldMatrix([[gq(v) for v in row] for row in p])
        if pm.rank() < 5:
            continue
        trials += 1
        ptsp = [
            [sum(p[k][i] * sym[k][l] * p[l][j] for k in range(5) for l in range(5)) for j in range(5)]
            for i in range(5)
        ]
        assert inertia(ptsp).as_tuple() == expected


def test_signature_report_totals():
    rep = SignatureReport(2, 1, 1)
    assert rep.dimension == 4
    assert rep == (2, 1, 1)


def test_minors_gcd_and_rank_everywhere():
    t = RatFunc.t()
    # [[1, t], [t, t^2]] has every 2x2 minor zero, rank 1 everywhere except nowhere
    m = FieldMatrix([[RatFunc(1), t], [t, t * t]], RatFunc)
    assert minors_gcd(m, 2).is_zero()
    ok, g = rank_everywhere(m, 1)
    assert ok and g.degree == 0
    # diag(t, 1) drops rank at t = 0
    d = FieldMatrix([[t, RatFunc(0)], [RatFunc(0), RatFunc(1)]], RatFunc)
    ok, g = rank_everywhere(d, 2)
    assert not ok
    assert g == UniPoly((0, 1))


def test_commutator_and_trace():
    a = FieldMatrix([[0, 1], [0, 0]])
    b = FieldMatrix([[0, 0], [1, 0]])
    c = commutator(a, b)
    assert c == FieldMatrix.diagonal([gq(1), gq(-1)])
    assert not c.trace()
