"""Built-in example curves and models used by tests, the CLI and the service.

All fixtures are embedded; nothing is fetched. They cover: the degree-4
rational space curve with its explicit pair of 4x4 matrix polynomials, its
lift to ambient dimension 4, the generic degree-4 curve in that ambient
space, an intersection of two quadrics (arithmetic genus 1), and the
degree-3 family with its real form.
"""

from __future__ import annotations

from .scalars import gq
from .unipoly import UniPoly, RatFunc
from .linalg import FieldMatrix
from .multipoly import MultiPoly
from .curves import CurveIdeal, MatPolyModel


def t() -> UniPoly:
    return UniPoly.t()


def _u(c) -> UniPoly:
    return UniPoly(c)


def quartic_pair() -> tuple[FieldMatrix, FieldMatrix]:
    """The 4x4 multiplication pair of the rational quartic, basis (1, x, y, y^2).

    x y = t, t^2 y = x^3, t y^2 = x^2, y^3 = x; the curve is parametrized by
    [u^3 v, u v^3, u^4, v^4].
    """
    z, o, tt = _u(0), _u(1), t()
    a = FieldMatrix(
        [
            [z, z, tt, z],
            [o, z, z, z],
            [z, z, z, tt],
            [z, tt, z, z],
        ],
        UniPoly,
    )
    b = FieldMatrix(
        [
            [z, tt, z, z],
            [z, z, z, o],
            [o, z, z, z],
            [z, z, o, z],
        ],
        UniPoly,
    )
    return a, b


def quartic_model() -> MatPolyModel:
    a, b = quartic_pair()
    return MatPolyModel(4, 3, (0, 1, 1, 1), (a, b))


def quartic_ideal() -> CurveIdeal:
    """Ideal of the rational quartic in the finite chart, over Q(i)(t)."""
    one = RatFunc(1)
    tt = RatFunc.t()

    def q(terms):
        return MultiPoly(2, terms, RatFunc)

    return CurveIdeal(
        3,
        [
            q({(1, 1): one, (0, 0): -tt}),
            q({(0, 1): tt * tt, (3, 0): -one}),
            q({(0, 2): tt, (2, 0): -one}),
            q({(0, 3): one, (1, 0): -one}),
        ],
    )


def quartic_s_basis() -> list[MultiPoly]:
    """The infinity-chart fiber basis (1, x', y', x'^2) of the quartic."""
    one = RatFunc(1)

    def q(terms):
        return MultiPoly(2, terms, RatFunc)

    return [q({(0, 0): one}), q({(1, 0): one}), q({(0, 1): one}), q({(2, 0): one})]


def quartic_p4_ideal() -> CurveIdeal:
    """The quartic lifted to ambient dimension 4: coordinates (w^3, w, w^2, w^4).

    Generators x2^2 - x3, x2 x3 - x1, x3^2 - t; projecting away the third
    coordinate recovers the quartic pair exactly.
    """
    one = RatFunc(1)
    tt = RatFunc.t()

    def q(terms):
        return MultiPoly(3, terms, RatFunc)

    return CurveIdeal(
        4,
        [
            q({(0, 2, 0): one, (0, 0, 1): -one}),
            q({(0, 1, 1): one, (1, 0, 0): -one}),
            q({(0, 0, 2): one, (0, 0, 0): -tt}),
        ],
    )


def canonical_quartic_ideal() -> CurveIdeal:
    """A degree-4 curve in ambient dimension 4 with projection w -> w^4 + w.

    Coordinates (w^3, w^2, w); every fiber, including infinity, has length 4,
    the basis (1, x1, x2, x3) trivializes the direct image, and dropping the
    last coordinate still leaves fiber generators everywhere, so the model
    projects cleanly to ambient dimension 3.
    """
    one = RatFunc(1)
    tt = RatFunc.t()

    def q(terms):
        return MultiPoly(3, terms, RatFunc)

    return CurveIdeal(
        4,
        [
            q({(0, 0, 2): one, (0, 1, 0): -one}),
            q({(0, 1, 1): one, (1, 0, 0): -one}),
            q({(0, 2, 0): one, (0, 0, 1): one, (0, 0, 0): -tt}),
        ],
    )


def degenerate_projection_ideal() -> CurveIdeal:
    """The rational normal quartic with coordinates (w^3, w^2, w): its projection
    to ambient dimension 3 drops the fiber algebra at t = 0."""
    one = RatFunc(1)
    tt = RatFunc.t()

    def q(terms):
        return MultiPoly(3, terms, RatFunc)

    return CurveIdeal(
        4,
        [
            q({(0, 0, 2): one, (0, 1, 0): -one}),
            q({(0, 1, 1): one, (1, 0, 0): -one}),
            q({(0, 2, 0): one, (0, 0, 0): -tt}),
        ],
    )


def quadric_intersection_ideal() -> CurveIdeal:
    """Intersection of x^2 - y^2 = t and x y = 1: degree 4, arithmetic genus 1."""
    one = RatFunc(1)
    tt = RatFunc.t()

    def q(terms):
        return MultiPoly(2, terms, RatFunc)

    return CurveIdeal(
        3,
        [
            q({(2, 0): one, (0, 2): -one, (0, 0): -tt}),
            q({(1, 1): one, (0, 0): -one}),
        ],
    )


def quadric_s_basis() -> list[MultiPoly]:
    """(1, x', y', x'^2 + y'^2): the quadratic form independent of both defining
    quadrics trivializes the last summand at infinity."""
    one = RatFunc(1)

    def q(terms):
        return MultiPoly(2, terms, RatFunc)

    return [
        q({(0, 0): one}),
        q({(1, 0): one}),
        q({(0, 1): one}),
        q({(2, 0): one, (0, 2): one}),
    ]


def twisted_cubic_params(rng=None) -> tuple:
    """Six fixed small-integer linear forms for the degree-3 family."""
    if rng is None:
        vals = [(1, 2), (0, -1), (2, 1), (1, 1), (-1, 0), (0, 1)]
    else:
        vals = [(rng.randint(-2, 2), rng.randint(-2, 2)) for _ in range(6)]
    return tuple(UniPoly((gq(a), gq(b))) for a, b in vals)
