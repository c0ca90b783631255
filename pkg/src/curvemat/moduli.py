"""Moduli of rational space curves as matrix quadruples with a moment map.

A degree-d rational curve avoiding a line corresponds, up to a nonreductive
gauge group, to a quadruple (X0, X1, Y0, Y1) of (d-1)x(d-1) matrices such
that the pencil (X(t), Y(t)) = (X0 + t X1, Y0 + t Y1) is framed-stable for
every t, satisfies two entry alignments, and kills the three-component
moment map built from the commutators' lower rows. This module implements
the membership tests, the group action and its infinitesimal fields, the
moment map, pointwise smoothness/nondegeneracy classification, the real
structure with its parity obstruction, and exact signatures of the real
locus metric.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .scalars import GaussianRational, gq
from .unipoly import UniPoly
from .linalg import FieldMatrix, SignatureReport, commutator, inertia, polynomial_rank_everywhere
from .points import invariant_span
from .biquat import TangentQuad, metric_g, subspace_analysis
from .curves import _check, _poly_witness


class MPoint:
    """A quadruple (X0, X1, Y0, Y1) of (d-1) x (d-1) matrices over Q(i)."""

    __slots__ = ("d", "x0", "x1", "y0", "y1")

    def __init__(self, d: int, x0, x1, y0, y1):
        if d < 3:
            raise ValueError("degree must be at least 3")
        n = d - 1
        for m in (x0, x1, y0, y1):
            if m.shape != (n, n):
                raise ValueError(f"blocks must be {n} x {n}")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "x0", x0)
        object.__setattr__(self, "x1", x1)
        object.__setattr__(self, "y0", y0)
        object.__setattr__(self, "y1", y1)

    def __setattr__(self, name, value):
        raise AttributeError("MPoint is immutable")

    @property
    def n(self) -> int:
        return self.d - 1

    def x_at(self, t0) -> FieldMatrix:
        return self.x0 + self.x1 * t0

    def y_at(self, t0) -> FieldMatrix:
        return self.y0 + self.y1 * t0

    def x_poly(self) -> FieldMatrix:
        return _pencil(self.x0, self.x1)

    def y_poly(self) -> FieldMatrix:
        return _pencil(self.y0, self.y1)

    def blocks(self):
        return (self.x0, self.x1, self.y0, self.y1)

    def __eq__(self, other):
        if not isinstance(other, MPoint):
            return NotImplemented
        return self.d == other.d and self.blocks() == other.blocks()

    def __hash__(self):
        return hash((self.d,) + self.blocks())


def _pencil(m0: FieldMatrix, m1: FieldMatrix) -> FieldMatrix:
    rows = []
    for r0, r1 in zip(m0.rows, m1.rows):
        rows.append([UniPoly((a, b)) for a, b in zip(r0, r1)])
    return FieldMatrix(rows, UniPoly)


class GroupElem:
    """(g0, u): g0 invertible with first two columns e1, e2; u linear polynomials.

    Composition is (g0, u)(h0, w) = (g0 h0, w + u h0), matching conjugation
    by the block matrices (1 u; 0 g0).
    """

    __slots__ = ("d", "g0", "u")

    def __init__(self, d: int, g0: FieldMatrix, u):
        n = d - 1
        u = tuple(p if isinstance(p, UniPoly) else UniPoly(p) for p in u)
        if g0.shape != (n, n):
            raise ValueError("g0 has the wrong size")
        if len(u) != d - 3:
            raise ValueError("u must have d-3 components")
        for p in u:
            if p.degree > 1:
                raise ValueError("u components must be linear in t")
        for col, unit in ((0, 0), (1, 1)):
            for r in range(n):
                expected = GaussianRational(1 if r == unit else 0)
                if g0[r, col] != expected:
                    raise ValueError("first two columns of g0 must be e1, e2")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "g0", g0)
        object.__setattr__(self, "u", u)

    def __setattr__(self, name, value):
        raise AttributeError("GroupElem is immutable")

    @classmethod
    def identity(cls, d: int) -> "GroupElem":
        return cls(d, FieldMatrix.identity(d - 1), (UniPoly(),) * (d - 3))

    def compose(self, other: "GroupElem") -> "GroupElem":
        if self.d != other.d:
            raise ValueError("size mismatch")
        new_u = []
        srow = _pad_u(self.u, self.d)
        for j in range(2, self.d - 1):
            acc = UniPoly(other.u[j - 2].coeffs)
            for i in range(self.d - 1):
                if srow[i] and other.g0[i, j]:
                    acc = acc + srow[i] * other.g0[i, j]
            new_u.append(acc)
        return GroupElem(self.d, self.g0 * other.g0, tuple(new_u))

    def inverse(self) -> "GroupElem":
        gi = self.g0.inverse()
        srow = _pad_u(self.u, self.d)
        new_u = []
        for j in range(2, self.d - 1):
            acc = UniPoly()
            for i in range(self.d - 1):
                if srow[i] and gi[i, j]:
                    acc = acc - srow[i] * gi[i, j]
            new_u.append(acc)
        return GroupElem(self.d, gi, tuple(new_u))


class LieElem:
    """(h, u): h with first two columns zero, u a row of d-3 linear polynomials."""

    __slots__ = ("d", "h", "u")

    def __init__(self, d: int, h: FieldMatrix, u):
        n = d - 1
        u = tuple(p if isinstance(p, UniPoly) else UniPoly(p) for p in u)
        if h.shape != (n, n):
            raise ValueError("h has the wrong size")
        if len(u) != d - 3:
            raise ValueError("u must have d-3 components")
        for p in u:
            if p.degree > 1:
                raise ValueError("u components must be linear in t")
        for col in (0, 1):
            for r in range(n):
                if h[r, col]:
                    raise ValueError("first two columns of h must vanish")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "u", u)

    def __setattr__(self, name, value):
        raise AttributeError("LieElem is immutable")


def _pad_u(u, d: int):
    """(0, 0, u_1, ..., u_{d-3}) as a row of polynomials of length d-1."""
    return (UniPoly(), UniPoly()) + tuple(u)


def _u_coeff(u, d: int, power: int):
    """Scalar row of length d-1: the t^power coefficients of the padded row."""
    row = []
    for p in _pad_u(u, d):
        row.append(p.coeff(power))
    return tuple(row)


def _rank_one(col_index: int, row, n: int) -> FieldMatrix:
    """e_{col_index} tensor row (as a matrix with a single nonzero row)."""
    zero = GaussianRational(0)
    rows = []
    for r in range(n):
        rows.append(tuple(row) if r == col_index else (zero,) * n)
    return FieldMatrix(rows)


def apply_action(g0: FieldMatrix, u, d: int, blocks):
    """The gauge action on coefficient blocks, generic over the scalar field.

    X(t) -> g0 X(t) g0^{-1} - e1 u(t) g0^{-1} and the same for Y with e2.
    """
    x0, x1, y0, y1 = blocks
    n = d - 1
    gi = g0.inverse()
    u0 = _u_coeff(u, d, 0)
    u1 = _u_coeff(u, d, 1)
    u0g = gi.transpose().apply(u0)
    u1g = gi.transpose().apply(u1)
    return (
        g0 * x0 * gi - _rank_one(0, u0g, n),
        g0 * x1 * gi - _rank_one(0, u1g, n),
        g0 * y0 * gi - _rank_one(1, u0g, n),
        g0 * y1 * gi - _rank_one(1, u1g, n),
    )


def act(g: GroupElem, p: MPoint) -> MPoint:
    if g.d != p.d:
        raise ValueError("size mismatch")
    return MPoint(p.d, *apply_action(g.g0, g.u, g.d, p.blocks()))


def fundamental_field(rho: LieElem, p: MPoint) -> TangentQuad:
    """Infinitesimal action: dX(t) = [h, X(t)] - e1 u(t), dY(t) = [h, Y(t)] - e2 u(t)."""
    if rho.d != p.d:
        raise ValueError("size mismatch")
    n = p.n
    u0 = _u_coeff(rho.u, rho.d, 0)
    u1 = _u_coeff(rho.u, rho.d, 1)
    return TangentQuad(
        commutator(rho.h, p.x0) - _rank_one(0, u0, n),
        commutator(rho.h, p.x1) - _rank_one(0, u1, n),
        commutator(rho.h, p.y0) - _rank_one(1, u0, n),
        commutator(rho.h, p.y1) - _rank_one(1, u1, n),
    )


# -- the moment map -----------------------------------------------------------


class MomentValue:
    """Three components; each has a lower-rows matrix part and a translation part.

    The translation part pairs with a row of linear polynomials by matching
    coefficients, so it is stored as a vector of polynomials of degree <= 1
    (rows 3..d-1 of the relevant column expressions).
    """

    __slots__ = ("d", "m11", "m21", "m12")

    def __init__(self, d: int, m11, m21, m12):
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "m11", m11)
        object.__setattr__(self, "m21", m21)
        object.__setattr__(self, "m12", m12)

    def __setattr__(self, name, value):
        raise AttributeError("MomentValue is immutable")

    def components(self):
        return {"11": self.m11, "21": self.m21, "12": self.m12}

    def is_zero(self) -> bool:
        for mat, vec in (self.m11, self.m21, self.m12):
            if not mat.is_zero():
                return False
            if any(p for p in vec):
                return False
        return True


def _lower_rows(m: FieldMatrix, d: int) -> FieldMatrix:
    return m.submatrix(range(2, d - 1), range(d - 1))


def moment(p: MPoint) -> MomentValue:
    """The three-component moment value of a quadruple.

    Component 11: (pi([X0,Y1] + [X1,Y0]), (X1 + t X0) e2 - (Y1 + t Y0) e1) / 2,
    component 21: (pi([X0,Y0]), X0 e2 - Y0 e1),
    component 12: (pi([X1,Y1]), t (X1 e2 - Y1 e1)),
    where pi keeps rows 3..d-1; translation parts are also restricted to
    those rows.
    """
    d = p.d
    half = GaussianRational(Fraction(1, 2))

    def col_diff(xm, ym):
        return [xm[r, 1] - ym[r, 0] for r in range(2, d - 1)]

    c0 = col_diff(p.x0, p.y0)
    c1 = col_diff(p.x1, p.y1)

    m11_mat = _lower_rows(commutator(p.x0, p.y1) + commutator(p.x1, p.y0), d) * half
    m11_vec = tuple(UniPoly((a * half, b * half)) for a, b in zip(c1, c0))
    m21_mat = _lower_rows(commutator(p.x0, p.y0), d)
    m21_vec = tuple(UniPoly((a,)) for a in c0)
    m12_mat = _lower_rows(commutator(p.x1, p.y1), d)
    m12_vec = tuple(UniPoly((GaussianRational(0), a)) for a in c1)
    return MomentValue(d, (m11_mat, m11_vec), (m21_mat, m21_vec), (m12_mat, m12_vec))


def fiber_moment(p: MPoint, t0) -> tuple:
    """Moment of the fixed-parameter symplectic form at t0: lower commutator rows
    and the lower rows of X(t0) e2 - Y(t0) e1."""
    x, y = p.x_at(t0), p.y_at(t0)
    c = commutator(x, y)
    return _lower_rows(c, p.d), tuple(x[r, 1] - y[r, 0] for r in range(2, p.d - 1))


def lemma_conditions(p: MPoint) -> bool:
    """For all t: X(t) e2 = Y(t) e1 and [X(t), Y(t)] supported in the top two rows."""
    n = p.n
    for (xm, ym) in ((p.x0, p.y0), (p.x1, p.y1)):
        for r in range(n):
            if xm[r, 1] != ym[r, 0]:
                return False
    xp, yp = p.x_poly(), p.y_poly()
    c = commutator(xp, yp)
    for r in range(2, n):
        for j in range(n):
            if c[r, j]:
                return False
    return True


def condition_entries(p: MPoint) -> bool:
    """The two entry alignments X12(t) = Y11(t), X22(t) = Y21(t), coefficientwise."""
    return all(
        xm[r, 1] == ym[r, 0]
        for (xm, ym) in ((p.x0, p.y0), (p.x1, p.y1))
        for r in (0, 1)
    )


def md_check(p: MPoint) -> dict:
    """Membership report: entry alignments plus framed stability for every t.

    Stability at finite t: the columns {w(X(t), Y(t)) e_s : s = 1, 2, words w
    of length <= d-3} span for all t (constant gcd of maximal minors).
    At infinity: the constant pair (X1, Y1) is framed-stable.
    """
    checks = [_check("entry-alignment", condition_entries(p))]
    n = p.n
    xp, yp = p.x_poly(), p.y_poly()
    words = [FieldMatrix.identity(n, UniPoly)]
    frontier = [words[0]]
    for _ in range(p.d - 3):
        nxt = []
        for w in frontier:
            nxt.append(xp * w)
            nxt.append(yp * w)
        words.extend(nxt)
        frontier = nxt
    cols = []
    for w in words:
        cols.append(w.column(0))
        cols.append(w.column(1))
    ok, g = polynomial_rank_everywhere(FieldMatrix.from_columns(cols, UniPoly), n)
    checks.append(_check("stable-finite-chart", ok, None if ok else (g and _poly_witness(g))))
    frame = [tuple(GaussianRational(1 if r == s else 0) for r in range(n)) for s in (0, 1)]
    inf_ok = len(invariant_span([p.x1, p.y1], frame)) == n
    checks.append(_check("stable-at-infinity", inf_ok))
    return {"pass": all(c["pass"] for c in checks), "checks": checks}


# -- Lie algebra bases and classification -------------------------------------


def g0_basis(d: int) -> list[LieElem]:
    """Matrices with first two columns zero: dimension (d-1)(d-3)."""
    n = d - 1
    out = []
    for j in range(2, n):
        for i in range(n):
            h = FieldMatrix(
                [[GaussianRational(1 if (r, c) == (i, j) else 0) for c in range(n)] for r in range(n)]
            )
            out.append(LieElem(d, h, (UniPoly(),) * (d - 3)))
    return out


def l_basis(d: int) -> list[LieElem]:
    """Constant and t-proportional translations: dimension 2(d-3)."""
    n = d - 1
    zero_h = FieldMatrix.zeros(n, n)
    out = []
    for k in range(d - 3):
        for power in (0, 1):
            u = tuple(
                UniPoly.monomial(power) if k == m else UniPoly() for m in range(d - 3)
            )
            out.append(LieElem(d, zero_h, u))
    return out


def classify_point(p: MPoint) -> dict:
    """Smoothness and nondegeneracy of the reduced space at a moment zero.

    smooth: the span of I, J, K applied to the symmetry fields has dimension
    3 (d-1)(d-3); nondegenerate: the radical of the combined field span
    equals the translation-field span.
    """
    if not moment(p).is_zero():
        raise ValueError("point is not a moment zero")
    d = p.d
    span_h = [fundamental_field(rho, p) for rho in g0_basis(d)]
    span_l = [fundamental_field(rho, p) for rho in l_basis(d)]
    analysis = subspace_analysis(span_h, span_l, n=p.n)
    dim_h = (d - 1) * (d - 3)
    dim_l = 2 * (d - 3)
    smooth = analysis["dims"]["ijk_h_span"] == 3 * dim_h
    nondegenerate = analysis["radical_equals_l"]
    membership = md_check(p)
    return {
        "smooth": smooth,
        "nondegenerate": nondegenerate,
        "dims": dict(analysis["dims"], g0=dim_h, l=dim_l),
        "mat2_invariant_radical": analysis["mat2_invariant"],
        "in_model_space": membership["pass"],
    }


def sample_moment_zero(d: int, rng: random.Random, span: int = 2) -> MPoint:
    """A random exact moment zero: draw (X0, X1), solve the linear system for Y.

    The entry alignments and the full zero conditions (first Y columns equal
    to the second X columns, lower commutator rows zero) are linear in
    (Y0, Y1); a particular solution is mixed with a random kernel element.
    """
    n = d - 1
    while True:
        x0 = FieldMatrix([[gq(rng.randint(-span, span)) for _ in range(n)] for _ in range(n)])
        x1 = FieldMatrix([[gq(rng.randint(-span, span)) for _ in range(n)] for _ in range(n)])
        unknowns = 2 * n * n

        def unit(idx):
            which, pos = divmod(idx, n * n)
            r, c = divmod(pos, n)
            m = FieldMatrix(
                [[GaussianRational(1 if (rr, cc) == (r, c) else 0) for cc in range(n)] for rr in range(n)]
            )
            z = FieldMatrix.zeros(n, n)
            return (m, z) if which == 0 else (z, m)

        rows = []
        rhs = []

        def add_rows(fn, target):
            nonlocal rows, rhs
            cols = []
            for idx in range(unknowns):
                y0u, y1u = unit(idx)
                cols.append(fn(y0u, y1u))
            mat = FieldMatrix.from_columns(cols)
            rows += [list(r) for r in mat.rows]
            rhs += list(target)

        # first columns of Y0, Y1 match second columns of X0, X1
        add_rows(lambda y0u, y1u: tuple(y0u[r, 0] for r in range(n)),
                 tuple(x0[r, 1] for r in range(n)))
        add_rows(lambda y0u, y1u: tuple(y1u[r, 0] for r in range(n)),
                 tuple(x1[r, 1] for r in range(n)))
        # lower rows of [X0,Y0], [X1,Y1], [X0,Y1]+[X1,Y0] vanish
        zero_rows = tuple(GaussianRational(0) for _ in range((n - 2) * n))

        def flat_lower(m):
            return tuple(v for row in m.rows[2:] for v in row)

        add_rows(lambda y0u, y1u: flat_lower(commutator(x0, y0u)), zero_rows)
        add_rows(lambda y0u, y1u: flat_lower(commutator(x1, y1u)), zero_rows)
        add_rows(lambda y0u, y1u: flat_lower(commutator(x0, y1u) + commutator(x1, y0u)), zero_rows)

        system = FieldMatrix(rows)
        sol = system.solve(tuple(rhs))
        if sol is None:
            continue
        kernel = system.kernel_basis()
        mixed = list(sol)
        for kv in kernel:
            c = rng.randint(-1, 1)
            if c:
                mixed = [m + gq(c) * v for m, v in zip(mixed, kv)]
        y0 = FieldMatrix([[mixed[r * n + c] for c in range(n)] for r in range(n)])
        y1 = FieldMatrix([[mixed[n * n + r * n + c] for c in range(n)] for r in range(n)])
        p = MPoint(d, x0, x1, y0, y1)
        if not moment(p).is_zero():
            raise ArithmeticError("solved point fails the moment equations")
        return p


# -- real structures -----------------------------------------------------------


def tau_matrix(n: int) -> FieldMatrix:
    """The block antidiagonal pairing: -1 at (i, i+1) for odd i, +1 at (i, i-1)
    for even i (1-indexed); requires even size."""
    if n % 2:
        raise ValueError("pairing needs an even size")
    rows = []
    for i in range(n):
        row = [GaussianRational(0)] * n
        if i % 2 == 0:
            row[i + 1] = GaussianRational(-1)
        else:
            row[i - 1] = GaussianRational(1)
        rows.append(row)
    return FieldMatrix(rows)


def _conj(m: FieldMatrix) -> FieldMatrix:
    return m.map(lambda v: v.conj())


def sigma(p: MPoint) -> MPoint:
    """The antiholomorphic involution (X0,X1,Y0,Y1) -> (-tAY1t, tAY0t, tAX1t, -tAX0t)
    with tA the conjugated tau-twist; only odd degrees admit it."""
    if p.d % 2 == 0:
        raise ValueError("no real points in even degree: the real locus is empty")
    tau = tau_matrix(p.n)
    tw = lambda m: tau * _conj(m) * tau
    return MPoint(p.d, -tw(p.y1), tw(p.y0), tw(p.x1), -tw(p.x0))


def sigma_fixed(x0: FieldMatrix, x1: FieldMatrix, d: int) -> MPoint:
    """The fixed-locus point determined by (X0, X1): Y0 = tw(X1), Y1 = -tw(X0)."""
    tau = tau_matrix(d - 1)
    tw = lambda m: tau * _conj(m) * tau
    return MPoint(d, x0, x1, tw(x1), -tw(x0))


def sigma_prime_coords(z) -> tuple:
    """The second involution on ambient homogeneous coordinates:
    [z0, z1, z2, z3] -> [conj z1, conj z0, conj z3, conj z2]."""
    if len(z) != 4:
        raise ValueError("expected 4 homogeneous coordinates")
    w = [v if isinstance(v, GaussianRational) else GaussianRational(v) for v in z]
    return (w[1].conj(), w[0].conj(), w[3].conj(), w[2].conj())


def real_signature(d: int) -> SignatureReport:
    """Exact inertia of the metric on the real locus, parameters (X0, X1).

    Coordinates are the real and imaginary parts of all X0, X1 entries; the
    entry alignments (with Y determined by the fixed-point equations) cut
    out real-linear constraints, solved exactly; the Gram matrix of the
    pairing on the constrained tangent space is assembled and reduced by
    congruence.
    """
    if d % 2 == 0:
        raise ValueError("no real points in even degree: the real locus is empty")
    if d < 3:
        raise ValueError("degree must be at least 3")
    n = d - 1
    tau = tau_matrix(n)
    ncoords = 4 * n * n

    def quad_from_coords(coords) -> TangentQuad:
        def block(offset):
            rows = []
            for r in range(n):
                row = []
                for c in range(n):
                    base = offset + 2 * (r * n + c)
                    row.append(GaussianRational(Fraction(coords[base]), Fraction(coords[base + 1])))
                rows.append(row)
            return FieldMatrix(rows)

        dx0 = block(0)
        dx1 = block(2 * n * n)
        dy0 = tau * _conj(dx1) * tau
        dy1 = -(tau * _conj(dx0) * tau)
        return TangentQuad(dx0, dx1, dy0, dy1)

    cols = []
    for a in range(ncoords):
        unit = [Fraction(0)] * ncoords
        unit[a] = Fraction(1)
        q = quad_from_coords(unit)
        vals = [
            q.dx0[0, 1] - q.dy0[0, 0],
            q.dx1[0, 1] - q.dy1[0, 0],
            q.dx0[1, 1] - q.dy0[1, 0],
            q.dx1[1, 1] - q.dy1[1, 0],
        ]
        col = []
        for v in vals:
            col.append(v.re)
            col.append(v.im)
        cols.append(col)
    constraints = FieldMatrix.from_columns(cols, Fraction)
    kernel = constraints.kernel_basis()
    quads = [quad_from_coords(kv) for kv in kernel]
    gram = []
    for i, qi in enumerate(quads):
        row = []
        for j, qj in enumerate(quads):
            if j < i:
                row.append(gram[j][i])
                continue
            v = metric_g(qi, qj)
            if v.im != 0:
                raise ArithmeticError("metric is not real on the fixed locus")
            row.append(v.re)
        gram.append(row)
    return inertia(gram)


# -- the degree-3 family ------------------------------------------------------


def twisted_cubic_model(a) -> tuple[FieldMatrix, FieldMatrix]:
    """The explicit 3x3 model of a degree-3 rational curve from six linear forms.

    a = (a11, a12, a21, a22, a31, a32), each a polynomial of degree <= 1. The
    returned matrices have first columns e2, e3 and commute identically; the
    top-row entries are the 2x2 minors of the 3x2 parameter matrix.
    """
    a11, a12, a21, a22, a31, a32 = (p if isinstance(p, UniPoly) else UniPoly(p) for p in a)
    m1 = a21 * a32 - a22 * a31
    m2 = a11 * a32 - a12 * a31
    m3 = a11 * a22 - a12 * a21
    zero, one = UniPoly(), UniPoly(1)
    am = FieldMatrix(
        [
            [zero, -m3, -m2],
            [one, a11 + a22, a32],
            [zero, -a12, a11],
        ],
        UniPoly,
    )
    bm = FieldMatrix(
        [
            [zero, -m2, -m1],
            [zero, a32, -a31],
            [one, a11, a21 + a32],
        ],
        UniPoly,
    )
    return am, bm


def twisted_cubic_mpoint(a) -> MPoint:
    """The quadruple behind the degree-3 model: the lower 2x2 blocks of (A, B)."""
    a11, a12, a21, a22, a31, a32 = (p if isinstance(p, UniPoly) else UniPoly(p) for p in a)

    def block(p11, p12, p21, p22, power):
        return FieldMatrix(
            [
                [p11.coeff(power), p12.coeff(power)],
                [p21.coeff(power), p22.coeff(power)],
            ]
        )

    x11, x12, x21, x22 = a11 + a22, a32, -a12, a11
    y11, y12, y21, y22 = a32, -a31, a11, a21 + a32
    return MPoint(
        3,
        block(x11, x12, x21, x22, 0),
        block(x11, x12, x21, x22, 1),
        block(y11, y12, y21, y22, 0),
        block(y11, y12, y21, y22, 1),
    )


def _op_linear(p: UniPoly) -> UniPoly:
    """p(t) = alpha + beta t  ->  t conj(p(-1/conj t)) = -conj(beta) + conj(alpha) t."""
    alpha, beta = p.coeff(0), p.coeff(1)
    return UniPoly((-beta.conj(), alpha.conj()))


def twisted_cubic_sigma(a) -> tuple:
    """The conjugation rule on the six linear forms induced by the real structure."""
    a11, a12, a21, a22, a31, a32 = (p if isinstance(p, UniPoly) else UniPoly(p) for p in a)
    return (
        _op_linear(a32),
        _op_linear(a31),
        -_op_linear(a22),
        _op_linear(a21),
        -_op_linear(a12),
        -_op_linear(a11),
    )


def twisted_cubic_fixed(a22: UniPoly, a31: UniPoly, a32: UniPoly) -> tuple:
    """The sigma-fixed six-tuple determined by the three free linear forms."""
    return (
        _op_linear(a32),
        _op_linear(a31),
        -_op_linear(a22),
        a22,
        a31,
        a32,
    )


def twisted_cubic_real_signature() -> SignatureReport:
    """Inertia of the pairing on the sigma-fixed parameters of the degree-3 family.

    Real coordinates: (re, im) of both coefficients of a22, a31, a32; the
    remaining forms are determined by the conjugation rule. The tangent map
    into quadruples is real-linear, so the Gram matrix is assembled on the
    12 coordinate directions.
    """
    zero3 = (UniPoly(), UniPoly(), UniPoly())

    def quad_at(coords) -> TangentQuad:
        frs = [Fraction(c) for c in coords]
        free = []
        for k in range(3):
            alpha = GaussianRational(frs[4 * k], frs[4 * k + 1])
            beta = GaussianRational(frs[4 * k + 2], frs[4 * k + 3])
            free.append(UniPoly((alpha, beta)))
        a = twisted_cubic_fixed(free[0], free[1], free[2])
        p = twisted_cubic_mpoint(a)
        return TangentQuad(p.x0, p.x1, p.y0, p.y1)

    quads = []
    for a in range(12):
        unit = [Fraction(0)] * 12
        unit[a] = Fraction(1)
        quads.append(quad_at(unit))
    gram = []
    for i, qi in enumerate(quads):
        row = []
        for j, qj in enumerate(quads):
            if j < i:
                row.append(gram[j][i])
                continue
            v = metric_g(qi, qj)
            if v.im != 0:
                raise ArithmeticError("pairing is not real on the fixed parameters")
            row.append(v.re)
        gram.append(row)
    return inertia(gram)
