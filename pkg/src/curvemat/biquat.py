"""Flat biquaternionic linear algebra on tangent quadruples.

Tangent vectors to the space of matrix quadruples (X0, X1, Y0, Y1) carry a
left action of 2x2 complex matrices, a holomorphic symmetric pairing g, and
the associated family of 2-forms. The quotient criteria reduce to exact
rank computations on spans of such quadruples, implemented here.
"""

from __future__ import annotations

from .scalars import GaussianRational, gq
from .linalg import FieldMatrix


class Mat2:
    """A 2x2 matrix (a b; c d) over Q(i) acting on quadruples blockwise."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        for name, v in (("a", a), ("b", b), ("c", c), ("d", d)):
            object.__setattr__(self, name, v if isinstance(v, GaussianRational) else GaussianRational(v))

    def __setattr__(self, name, value):
        raise AttributeError("Mat2 is immutable")

    def adjugate(self) -> "Mat2":
        return Mat2(self.d, -self.b, -self.c, self.a)

    def trace(self) -> GaussianRational:
        return self.a + self.d

    def __mul__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __add__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def __neg__(self):
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def __eq__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return (self.a, self.b, self.c, self.d) == (other.a, other.b, other.c, other.d)

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def __repr__(self):
        return f"Mat2({self.a!r}, {self.b!r}, {self.c!r}, {self.d!r})"


IDENT2 = Mat2(1, 0, 0, 1)
I_HAT = Mat2(gq(0, 1), 0, 0, gq(0, -1))
J_HAT = Mat2(0, 1, -1, 0)
K_HAT = Mat2(0, gq(0, 1), gq(0, 1), 0)
MAT2_BASIS = (Mat2(1, 0, 0, 0), Mat2(0, 1, 0, 0), Mat2(0, 0, 1, 0), Mat2(0, 0, 0, 1))


class TangentQuad:
    """Four (d-1) x (d-1) matrices (dX0, dX1, dY0, dY1) over Q(i)."""

    __slots__ = ("n", "dx0", "dx1", "dy0", "dy1")

    def __init__(self, dx0: FieldMatrix, dx1: FieldMatrix, dy0: FieldMatrix, dy1: FieldMatrix):
        n = dx0.nrows
        for m in (dx0, dx1, dy0, dy1):
            if m.shape != (n, n):
                raise ValueError("blocks must be square matrices of equal size")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "dx0", dx0)
        object.__setattr__(self, "dx1", dx1)
        object.__setattr__(self, "dy0", dy0)
        object.__setattr__(self, "dy1", dy1)

    def __setattr__(self, name, value):
        raise AttributeError("TangentQuad is immutable")

    @classmethod
    def zero(cls, n: int) -> "TangentQuad":
        z = FieldMatrix.zeros(n, n)
        return cls(z, z, z, z)

    @classmethod
    def from_flat(cls, flat, n: int) -> "TangentQuad":
        flat = list(flat)
        if len(flat) != 4 * n * n:
            raise ValueError("flat vector has wrong length")
        blocks = []
        for b in range(4):
            rows = [
                [_as_gq(flat[b * n * n + r * n + c]) for c in range(n)]
                for r in range(n)
            ]
            blocks.append(FieldMatrix(rows))
        return cls(*blocks)

    def flatten(self):
        out = []
        for m in (self.dx0, self.dx1, self.dy0, self.dy1):
            out.extend(v for row in m.rows for v in row)
        return tuple(out)

    def blocks(self):
        return (self.dx0, self.dx1, self.dy0, self.dy1)

    def __add__(self, other):
        if not isinstance(other, TangentQuad):
            return NotImplemented
        return TangentQuad(*(a + b for a, b in zip(self.blocks(), other.blocks())))

    def __sub__(self, other):
        if not isinstance(other, TangentQuad):
            return NotImplemented
        return TangentQuad(*(a - b for a, b in zip(self.blocks(), other.blocks())))

    def __neg__(self):
        return TangentQuad(*(-b for b in self.blocks()))

    def scale(self, c) -> "TangentQuad":
        return TangentQuad(*(b * c for b in self.blocks()))

    def is_zero(self) -> bool:
        return all(b.is_zero() for b in self.blocks())

    def __eq__(self, other):
        if not isinstance(other, TangentQuad):
            return NotImplemented
        return self.blocks() == other.blocks()

    def __hash__(self):
        return hash(self.blocks())


def _as_gq(v):
    return v if isinstance(v, GaussianRational) else GaussianRational(v)


def mat2_act(m: Mat2, v: TangentQuad) -> TangentQuad:
    """Blockwise left action: (X0, X1) -> (aX0 + bX1, cX0 + dX1), same for Y."""
    return TangentQuad(
        v.dx0 * m.a + v.dx1 * m.b,
        v.dx0 * m.c + v.dx1 * m.d,
        v.dy0 * m.a + v.dy1 * m.b,
        v.dy0 * m.c + v.dy1 * m.d,
    )


def _trace_product(a: FieldMatrix, b: FieldMatrix) -> GaussianRational:
    """tr(a*b) scanning only the nonzero entries of a."""
    total = GaussianRational(0)
    for i, j, v in a.iter_nonzero():
        w = b[j, i]
        if w:
            total = total + v * w
    return total


def metric_g(v: TangentQuad, w: TangentQuad) -> GaussianRational:
    """The symmetric pairing with quadratic part tr(dX1 dY0 - dX0 dY1).

    Polarized with the factor 1/2, so metric_g(v, v) recovers exactly that
    quadratic form.
    """
    if v.n != w.n:
        raise ValueError("tangent quadruples live on different sizes")
    s = (
        _trace_product(v.dx1, w.dy0)
        + _trace_product(w.dx1, v.dy0)
        - _trace_product(v.dx0, w.dy1)
        - _trace_product(w.dx0, v.dy1)
    )
    return s / 2


def omega(m: Mat2, v: TangentQuad, w: TangentQuad) -> GaussianRational:
    """The 2-form g(m . v, w); antisymmetric exactly when m is traceless."""
    if m.trace():
        raise ValueError("omega is defined for traceless coefficients only")
    return metric_g(mat2_act(m, v), w)


class Subspace:
    """Span of tangent quadruples, stored as a reduced-echelon flat basis."""

    __slots__ = ("n", "basis")

    def __init__(self, quads, n: int | None = None):
        quads = list(quads)
        if n is None:
            if not quads:
                raise ValueError("need the block size for an empty subspace")
            n = quads[0].n
        rows = [q.flatten() for q in quads]
        if rows:
            red, pivots = FieldMatrix(rows).rref()
            basis = tuple(red.rows[i] for i in range(len(pivots)))
        else:
            basis = ()
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "basis", basis)

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def quads(self):
        return [TangentQuad.from_flat(row, self.n) for row in self.basis]

    def contains(self, q: TangentQuad) -> bool:
        rows = list(self.basis) + [q.flatten()]
        return FieldMatrix(rows).rank() == self.dim

    def intersect(self, other: "Subspace") -> "Subspace":
        """Exact intersection via the kernel of the stacked coordinate matrix."""
        if not self.basis or not other.basis:
            return Subspace([], self.n)
        cols = [list(b) for b in self.basis] + [[-v for v in b] for b in other.basis]
        stacked = FieldMatrix.from_columns(cols)
        out = []
        for kv in stacked.kernel_basis():
            flat = [GaussianRational(0)] * (4 * self.n * self.n)
            for i, b in enumerate(self.basis):
                if kv[i]:
                    flat = [f + kv[i] * v for f, v in zip(flat, b)]
            out.append(TangentQuad.from_flat(flat, self.n))
        return Subspace(out, self.n)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.n == other.n and self.basis == other.basis

    def __hash__(self):
        return hash((self.n, self.basis))


def g_perp(space: Subspace) -> Subspace:
    """Orthogonal complement in the ambient quadruple space, w.r.t. metric_g."""
    n = space.n
    total = 4 * n * n
    if not space.basis:
        units = []
        for a in range(total):
            flat = [GaussianRational(1 if i == a else 0) for i in range(total)]
            units.append(TangentQuad.from_flat(flat, n))
        return Subspace(units, n)
    rows = []
    for b in space.quads():
        row = []
        for a in range(total):
            unit = TangentQuad.from_flat(
                [GaussianRational(1 if i == a else 0) for i in range(total)], n
            )
            row.append(metric_g(b, unit))
        rows.append(row)
    kernel = FieldMatrix(rows).kernel_basis()
    return Subspace([TangentQuad.from_flat(v, n) for v in kernel], n)


def mat2_invariant(space: Subspace) -> bool:
    """Closure of the span under the four elementary blockwise actions."""
    for q in space.quads():
        for gen in MAT2_BASIS:
            if not space.contains(mat2_act(gen, q)):
                return False
    return True


def subspace_analysis(span_h, span_l, n: int | None = None) -> dict:
    """Exact quotient diagnostics for spans of fundamental directions.

    span_h, span_l: lists of TangentQuad (the symmetry directions and the
    translation-type directions). Reports the orthogonal complement, the
    radical of the combined span, its blockwise invariance, the dimension of
    I.span_h + J.span_h + K.span_h, and whether the radical equals span_l.
    """
    s_h = Subspace(span_h, n)
    n = s_h.n
    s_l = Subspace(span_l, n)
    s_total = Subspace(list(span_h) + list(span_l), n)
    perp = g_perp(s_total)
    radical = s_total.intersect(perp)
    ijk = []
    for q in span_h:
        for m in (I_HAT, J_HAT, K_HAT):
            ijk.append(mat2_act(m, q))
    ijk_dim = Subspace(ijk, n).dim
    return {
        "dims": {
            "h_span": s_h.dim,
            "l_span": s_l.dim,
            "total_span": s_total.dim,
            "perp": perp.dim,
            "radical": radical.dim,
            "ijk_h_span": ijk_dim,
        },
        "radical": radical,
        "perp": perp,
        "mat2_invariant": mat2_invariant(radical),
        "radical_equals_l": radical == s_l,
    }


def quotient_dimension(dim_m: int, dim_h: int, dim_l: int) -> int:
    """dim M - 4 dim H - 2 dim L, the dimension of the reduced space."""
    if min(dim_m, dim_h, dim_l) < 0:
        raise ValueError("dimensions must be nonnegative")
    return dim_m - 4 * dim_h - 2 * dim_l
