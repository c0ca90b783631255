import random

import pytest

from curvemat.scalars import GaussianRational, gq
from curvemat.unipoly import UniPoly, RatFunc
from curvemat.linalg import FieldMatrix, commutator
from curvemat.multipoly import MultiPoly
from curvemat.curves import (
    CurveIdeal,
    MatPolyModel,
    SplittingType,
    basis_transition,
    cohomological_obstruction,
    fiber_algebra,
    genus_from_splitting,
    ideal_at_infinity,
    infinity_chart,
    model_transition,
    project_model,
    splitting_from_exponents,
    splitting_type,
    verify_model,
    verify_polynomial_pair,
)
from curvemat import fixtures


def t_power(k):
    return RatFunc(UniPoly.monomial(max(k, 0)), UniPoly.monomial(max(-k, 0)))


def laurent_diag(exponents):
    return FieldMatrix.diagonal([t_power(e) for e in exponents], RatFunc)


class TestFiberAlgebra:
    def test_quartic_recovers_displayed_pair(self):
        res = fiber_algebra(fixtures.quartic_ideal())
        assert res.ok
        assert res.std_monomials == ((0, 0), (1, 0), (0, 1), (0, 2))
        a, b = fixtures.quartic_pair()
        assert res.model.mats[0] == a
        assert res.model.mats[1] == b
        assert res.model.k == (0, 1, 1, 1)

    def test_two_point_cover_companion(self):
        # x^2 = t^2: two points per fiber, multiplication by x is the companion
        one = RatFunc(1)
        tt = RatFunc.t()
        gen = MultiPoly(1, {(2,): one, (0,): -(tt * tt)}, RatFunc)
        res = fiber_algebra(CurveIdeal(2, [gen]))
        assert res.ok
        m = res.model.mats[0]
        assert m[0, 1] == UniPoly((0, 0, 1))
        assert m[1, 0] == UniPoly(1)

    def test_quadric_intersection_basis_and_k(self):
        res = fiber_algebra(fixtures.quadric_intersection_ideal())
        assert res.ok
        assert res.std_monomials == ((0, 0), (1, 0), (0, 1), (0, 2))
        assert res.model.k == (0, 1, 1, 2)

    def test_non_flat_input_reported(self):
        # x^2 = t x: fiber length collapses at t = 0... the generic fiber has
        # standard basis {1, x} but multiplication needs no denominators; use
        # a genuinely non-clearing example instead: x^2 = 1/t.
        one = RatFunc(1)
        tt = RatFunc.t()
        gen = MultiPoly(1, {(2,): tt, (0,): -one}, RatFunc)
        res = fiber_algebra(CurveIdeal(2, [gen]))
        assert not res.ok
        assert any(c["check"] == "denominators-clear" and not c["pass"] for c in res.checks)


class TestInfinityChart:
    def test_constant_size_one(self):
        m = FieldMatrix([[UniPoly(5)]], UniPoly)
        model = MatPolyModel(1, 2, (0,), (m,))
        assert infinity_chart(model)[0] == m

    def test_twisted_cubic_polynomial_at_infinity(self):
        from curvemat.moduli import twisted_cubic_model
        a, b = twisted_cubic_model(fixtures.twisted_cubic_params())
        model = MatPolyModel(3, 3, (0, 1, 1), (a, b))
        for mat in infinity_chart(model):
            for _, _, v in mat.iter_nonzero():
                assert isinstance(v, UniPoly)

    def test_quartic_infinity_values(self):
        model = fixtures.quartic_model()
        inf = infinity_chart(model)
        a0 = inf[0].map(lambda p: p(gq(0)), GaussianRational)
        b0 = inf[1].map(lambda p: p(gq(0)), GaussianRational)
        # at s = 0 multiplication by x degenerates to the nilpotent cycle
        assert a0.column(0) == (gq(0), gq(1), gq(0), gq(0))
        assert b0.column(0) == (gq(0), gq(0), gq(1), gq(0))

    def test_degree_pattern_violation_raises(self):
        tt = UniPoly.t()
        m = FieldMatrix([[UniPoly(0), tt * tt * tt], [UniPoly(1), UniPoly(0)]], UniPoly)
        model = MatPolyModel(2, 2, (0, 1), (m,))
        with pytest.raises(ValueError):
            infinity_chart(model)


class TestVerifyModel:
    def test_quartic_passes(self):
        report = verify_model(fixtures.quartic_model())
        assert report["pass"], report

    def test_perturbed_quartic_fails_with_witness(self):
        a, b = fixtures.quartic_pair()
        rows = [list(r) for r in a.rows]
        rows[0][2] = UniPoly((1, 1))  # t -> t + 1
        bad = MatPolyModel(4, 3, (0, 1, 1, 1), (FieldMatrix(rows, UniPoly), b))
        report = verify_model(bad)
        assert not report["pass"]
        assert any(c["check"] == "commutation" and not c["pass"] for c in report["checks"])

    def test_trivial_model_passes(self):
        m = FieldMatrix([[UniPoly(7)]], UniPoly)
        report = verify_model(MatPolyModel(1, 2, (0,), (m,)))
        assert report["pass"]

    def test_verify_pair_infers_exponents(self):
        a, b = fixtures.quartic_pair()
        report = verify_polynomial_pair(a, b)
        assert report["pass"]
        assert report["inferred_k"] == [0, 1, 1, 1]


class TestSplittingType:
    def test_diagonal(self):
        st = splitting_type(laurent_diag([0, 1, 1, 2]))
        assert st == (0, -1, -1, -2)
        st2 = splitting_type(laurent_diag([-2, 0, 3]))
        assert st2 == (2, 0, -3)

    def test_rejects_non_monomial_determinant(self):
        tt = RatFunc.t()
        bad = FieldMatrix([[tt + 1, RatFunc(0)], [RatFunc(0), RatFunc(1)]], RatFunc)
        with pytest.raises(ValueError):
            splitting_type(bad)

    def test_unimodular_twist_invariance(self):
        # conjugating the gluing by polynomial unimodular matrices on either
        # side cannot change the splitting
        base = laurent_diag([0, 1, 2])
        tt = RatFunc.t()
        u = FieldMatrix([[RatFunc(1), tt, RatFunc(0)], [RatFunc(0), RatFunc(1), tt * tt],
                         [RatFunc(0), RatFunc(0), RatFunc(1)]], RatFunc)
        assert splitting_type(u * base) == (0, -1, -2)

    def test_direct_sum_is_multiset_union(self):
        rng = random.Random(24)
        for _ in range(20):
            e1 = [rng.randint(-2, 2) for _ in range(rng.randint(1, 2))]
            e2 = [rng.randint(-2, 2) for _ in range(rng.randint(1, 2))]
            st = splitting_type(laurent_diag(e1 + e2))
            expect = sorted([-v for v in e1] + [-v for v in e2], reverse=True)
            assert st == tuple(expect)

    def test_quartic_two_chart_transition(self):
        ci = fixtures.quartic_ideal()
        res = fiber_algebra(ci)
        tr = basis_transition(ci, list(res.std_monomials), fixtures.quartic_s_basis())
        st = splitting_type(tr)
        assert st == (0, -1, -1, -1)

    def test_quadric_two_chart_transition(self):
        ci = fixtures.quadric_intersection_ideal()
        res = fiber_algebra(ci)
        tr = basis_transition(ci, list(res.std_monomials), fixtures.quadric_s_basis())
        st = splitting_type(tr)
        assert st == (0, -1, -1, -2)

    def test_model_transition_matches_negated_exponents(self):
        models = [fixtures.quartic_model()]
        for ci in (
            fixtures.quadric_intersection_ideal(),
            fixtures.canonical_quartic_ideal(),
            fixtures.quartic_p4_ideal(),
        ):
            res = fiber_algebra(ci)
            assert res.ok and verify_model(res.model)["pass"]
            models.append(res.model)
        for model in models:
            st = splitting_type(model_transition(model))
            assert st == splitting_from_exponents(model.k)


class TestGenus:
    def test_examples(self):
        assert genus_from_splitting(SplittingType([0, -1, -1])) == (3, 0)
        assert genus_from_splitting(SplittingType([0, -1, -1, -2])) == (4, 1)
        assert genus_from_splitting(SplittingType([0])) == (1, 0)

    def test_positive_summand_rejected(self):
        with pytest.raises(ValueError):
            genus_from_splitting(SplittingType([0, 1, -1]))
        with pytest.raises(ValueError):
            genus_from_splitting(SplittingType([0, 0, -1]))


class TestObstruction:
    def test_paper_adjacent_example(self):
        rep = cohomological_obstruction({1: 2, 2: 1})
        assert (rep["a"], rep["b"], rep["c"]) == (1, 9, 6)
        assert rep["obstruction"] == 2
        assert not rep["stable_possible"]

    def test_three_lines_case(self):
        rep = cohomological_obstruction({1: 3})
        assert rep["obstruction"] == 2 * 3 - 9
        assert rep["stable_possible"]

    def test_empty(self):
        rep = cohomological_obstruction({})
        assert rep == {"a": 0, "b": 0, "c": 0, "obstruction": 0, "stable_possible": True}

    def test_identity_on_random_multisets(self):
        rng = random.Random(25)
        for _ in range(500):
            m = {i: rng.randint(0, 3) for i in range(1, rng.randint(2, 5))}
            rep = cohomological_obstruction(m)
            closed = sum((i + 1) * v for i, v in m.items()) - sum(v * v for v in m.values())
            assert rep["obstruction"] == closed

    def test_small_multiplicity_curves_obstructed(self):
        rng = random.Random(26)
        found = 0
        while found < 50:
            m = {i: rng.randint(0, i + 1) for i in range(1, 5)}
            if not any(v for v in m.values()):
                continue
            if all(v <= i + 1 for i, v in m.items()) and any(1 <= v <= i for i, v in m.items()):
                rep = cohomological_obstruction(m)
                assert rep["obstruction"] > 0
                found += 1


class TestProjection:
    def test_identity_projection(self):
        model = fixtures.quartic_model()
        projected, report = project_model(model, 3)
        assert projected == model and report["pass"]

    def test_lift_projects_to_displayed_pair(self):
        res = fiber_algebra(fixtures.quartic_p4_ideal())
        assert res.ok
        projected, report = project_model(res.model, 3)
        assert report["pass"]
        a, b = fixtures.quartic_pair()
        assert projected.mats == (a, b)

    def test_canonical_curve_projection_keeps_conditions(self):
        res = fiber_algebra(fixtures.canonical_quartic_ideal())
        assert res.ok
        assert res.model.k == (0, 1, 1, 1)
        projected, report = project_model(res.model, 3)
        assert report["pass"]
        for m in projected.mats:
            assert m.column(0)[1:3] in (((UniPoly(1), UniPoly())), (UniPoly(), UniPoly(1)))

    def test_degenerate_projection_reported(self):
        res = fiber_algebra(fixtures.degenerate_projection_ideal())
        assert res.ok
        projected, report = project_model(res.model, 3)
        assert projected is None
        assert not report["pass"]


class TestModelInvariants:
    def test_commutators_vanish_identically_on_fixture_models(self):
        for ci in (fixtures.quartic_ideal(), fixtures.quadric_intersection_ideal(),
                   fixtures.canonical_quartic_ideal()):
            res = fiber_algebra(ci)
            assert res.ok
            mats = res.model.mats
            for p in range(len(mats)):
                for q in range(p + 1, len(mats)):
                    assert commutator(mats[p], mats[q]).is_zero()

    def test_infinity_ideal_of_quartic(self):
        gens = ideal_at_infinity(fixtures.quartic_ideal())
        # x y - t becomes x' y' - s
        g0 = gens[0]
        s = RatFunc.t()
        assert g0.terms[(1, 1)] == RatFunc(1)
        assert g0.terms[(0, 0)] == -s
