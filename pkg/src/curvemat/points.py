"""Plane point schemes as commuting matrix pairs.

A length-n subscheme of the plane is encoded by the pair of multiplication
operators on its coordinate algebra. This module provides both directions of
that dictionary, the gauge-fixed normal form under the stabilizer of e1, the
framed quadruples (X, Y, i, j) with their hat extension to one dimension
more, and the exact stability / cyclicity tests that tie the two pictures
together.
"""

from __future__ import annotations

import random

from .scalars import GaussianRational
from .linalg import FieldMatrix, char_poly, commutator, rank_kernel, vectorize
from .multipoly import MultiPoly, bareiss_generic_rank, buchberger, multiplication_matrix, standard_monomials
from .unipoly import gaussian_roots


class CommPair:
    """A pair (A, B) of n x n matrices over Q(i), usually commuting."""

    __slots__ = ("n", "a", "b")

    def __init__(self, a: FieldMatrix, b: FieldMatrix):
        if a.nrows != a.ncols or b.nrows != b.ncols or a.nrows != b.nrows:
            raise ValueError("pair must consist of square matrices of equal size")
        object.__setattr__(self, "n", a.nrows)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, name, value):
        raise AttributeError("CommPair is immutable")

    def commutes(self) -> bool:
        return commutator(self.a, self.b).is_zero()

    def require_commuting(self):
        if not self.commutes():
            raise ValueError("matrices do not commute")

    def conjugate(self, g: FieldMatrix) -> "CommPair":
        gi = g.inverse()
        return CommPair(gi * self.a * g, gi * self.b * g)

    def __eq__(self, other):
        if not isinstance(other, CommPair):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f"CommPair(n={self.n})"


class ADHMData:
    """Quadruple (X, Y, i, j): X, Y are k x k, i is k x 2, j is 2 x k."""

    __slots__ = ("k", "x", "y", "i", "j")

    def __init__(self, x: FieldMatrix, y: FieldMatrix, i: FieldMatrix, j: FieldMatrix):
        k = x.nrows
        if x.shape != (k, k) or y.shape != (k, k) or i.shape != (k, 2) or j.shape != (2, k):
            raise ValueError("inconsistent shapes for framed quadruple")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "i", i)
        object.__setattr__(self, "j", j)

    def __setattr__(self, name, value):
        raise AttributeError("ADHMData is immutable")

    def residual(self) -> FieldMatrix:
        """[X, Y] + i*j, the k x k defect of the framed equation."""
        return commutator(self.x, self.y) + self.i * self.j

    def __eq__(self, other):
        if not isinstance(other, ADHMData):
            return NotImplemented
        return (self.x, self.y, self.i, self.j) == (other.x, other.y, other.i, other.j)

    def __hash__(self):
        return hash((self.x, self.y, self.i, self.j))


class HatPair:
    """A pair of (k+1) x (k+1) matrices with first columns (0, i1), (0, i2)."""

    __slots__ = ("size", "x_hat", "y_hat")

    def __init__(self, x_hat: FieldMatrix, y_hat: FieldMatrix):
        if x_hat.shape != y_hat.shape or x_hat.nrows != x_hat.ncols:
            raise ValueError("hat pair must be square matrices of equal size")
        object.__setattr__(self, "size", x_hat.nrows)
        object.__setattr__(self, "x_hat", x_hat)
        object.__setattr__(self, "y_hat", y_hat)

    def __setattr__(self, name, value):
        raise AttributeError("HatPair is immutable")

    def __eq__(self, other):
        if not isinstance(other, HatPair):
            return NotImplemented
        return self.x_hat == other.x_hat and self.y_hat == other.y_hat

    def __hash__(self):
        return hash((self.x_hat, self.y_hat))


# -- construction from points and ideals ----------------------------------


def mult_matrices_from_points(points, normalize: bool = False) -> CommPair:
    """Multiplication operators of a reduced point set, in the indicator basis.

    A is diagonal with the first coordinates, B with the second. With
    `normalize`, the pair is conjugated into the frame where e1 is cyclic
    (the greedy Krylov frame of an explicit cyclic vector), which exists
    because the points are distinct.
    """
    pts = [(_coerce_scalar(p[0]), _coerce_scalar(p[1])) for p in points]
    if len(set(pts)) != len(pts):
        raise ValueError("points must be pairwise distinct")
    if not pts:
        raise ValueError("empty point set")
    a = FieldMatrix.diagonal([p[0] for p in pts])
    b = FieldMatrix.diagonal([p[1] for p in pts])
    pair = CommPair(a, b)
    if not normalize:
        return pair
    n = len(pts)
    ones = tuple(GaussianRational(1) for _ in range(n))
    basis = _krylov_vectors(a, b, ones)
    if basis is None:
        raise ArithmeticError("all-ones vector unexpectedly not cyclic for distinct points")
    g = FieldMatrix.from_columns(basis)
    return pair.conjugate(g)


def _coerce_scalar(v) -> GaussianRational:
    return v if isinstance(v, GaussianRational) else GaussianRational(v)


def mult_matrices_from_ideal(gens) -> list[FieldMatrix]:
    """Multiplication matrices of Q(i)[x1..xk]/I in the standard monomial basis.

    The ideal must be zero-dimensional; its length is the common size of the
    returned matrices, which commute pairwise by construction.
    """
    basis = buchberger(gens)
    try:
        std = standard_monomials(basis)
    except ValueError as exc:
        raise ValueError(f"ideal is not zero-dimensional: {exc}") from exc
    if not std:
        raise ValueError("ideal is the unit ideal; no points")
    nvars = basis[0].nvars
    mats = [multiplication_matrix(v, basis, std) for v in range(nvars)]
    for p in range(len(mats)):
        for q in range(p + 1, len(mats)):
            if not commutator(mats[p], mats[q]).is_zero():
                raise ArithmeticError("multiplication matrices fail to commute")
    return mats


# -- invariants of a pair ---------------------------------------------------


def _word_powers(pair: CommPair):
    """All A^i B^j with 0 <= i, j <= n-1 (enough by Cayley-Hamilton)."""
    n = pair.n
    a_pows = [FieldMatrix.identity(n)]
    for _ in range(n - 1):
        a_pows.append(a_pows[-1] * pair.a)
    words = []
    for i in range(n):
        w = a_pows[i]
        for j in range(n):
            words.append(w)
            if j < n - 1:
                w = w * pair.b
    return words


def algebra_dim(pair: CommPair) -> int:
    """Dimension of the unital algebra generated by a commuting pair."""
    pair.require_commuting()
    rows = [vectorize(w) for w in _word_powers(pair)]
    return FieldMatrix(rows).rank()


def centralizer_dim(pair: CommPair) -> int:
    """Dimension of {C : [A, C] = [B, C] = 0}."""
    pair.require_commuting()
    n = pair.n
    cols = []
    for k in range(n):
        for l in range(n):
            e = FieldMatrix(
                [[GaussianRational(1) if (r, c) == (k, l) else GaussianRational(0) for c in range(n)] for r in range(n)]
            )
            cols.append(vectorize(commutator(pair.a, e)) + vectorize(commutator(pair.b, e)))
    _, kernel = rank_kernel(FieldMatrix.from_columns(cols))
    return len(kernel)


def word_matrix_basis(mats) -> list[FieldMatrix]:
    """A spanning list for the unital algebra generated by `mats` (saturation)."""
    if not mats:
        raise ValueError("need at least one matrix")
    n = mats[0].nrows
    basis_vecs: list[tuple] = []
    basis_mats: list[FieldMatrix] = []
    frontier = [FieldMatrix.identity(n)]
    while frontier:
        m = frontier.pop(0)
        v = vectorize(m)
        if FieldMatrix(basis_vecs + [v]).rank() == len(basis_vecs):
            continue
        basis_vecs.append(v)
        basis_mats.append(m)
        frontier.extend(g * m for g in mats)
    return basis_mats


def algebra_dim_tuple(mats) -> int:
    """Dimension of the unital algebra generated by any tuple of matrices."""
    return len(word_matrix_basis(mats))


def invariant_span(mats, seeds) -> list[tuple]:
    """Basis of the smallest subspace containing `seeds` and invariant under `mats`."""
    basis: list[tuple] = []
    frontier = [tuple(s) for s in seeds]
    while frontier:
        v = frontier.pop(0)
        if FieldMatrix(basis + [v]).rank() == len(basis):
            continue
        basis.append(v)
        frontier.extend(m.apply(v) for m in mats)
    return basis


def cyclic_vector(pair: CommPair, rng: random.Random | None = None):
    """A vector whose orbit under words in (A, B) spans everything, or None.

    Sweeps the standard basis and a few random small-integer vectors; before
    answering None it certifies non-existence exactly: the orbit matrix of a
    symbolic vector has generic rank <= n-1, and specialization can only
    drop rank.
    """
    rng = rng or random.Random(0)
    n = pair.n
    mats = [pair.a, pair.b]
    candidates = [tuple(GaussianRational(1 if i == k else 0) for i in range(n)) for k in range(n)]
    for _ in range(20):
        candidates.append(tuple(GaussianRational(rng.randint(-3, 3)) for _ in range(n)))
    for v in candidates:
        if len(invariant_span(mats, [v])) == n:
            return v
    words = word_matrix_basis(mats)
    sym_rows = []
    for w in words:
        row = []
        for r in range(n):
            terms = {}
            for c in range(n):
                coeff = w[r, c]
                if coeff:
                    e = tuple(1 if k == c else 0 for k in range(n))
                    terms[e] = coeff
            row.append(MultiPoly(n, terms))
        sym_rows.append(row)
    # transpose: rows of the orbit matrix are the vectors w*v
    if bareiss_generic_rank(sym_rows) <= n - 1:
        return None
    for attempt in range(1000):
        v = tuple(GaussianRational(rng.randint(-10, 10)) for _ in range(n))
        if len(invariant_span(mats, [v])) == n:
            return v
    raise ArithmeticError("generic vector is cyclic but none was found in the search budget")


def moment_G(a: FieldMatrix, b: FieldMatrix) -> FieldMatrix:
    """Rows 2..n of [A, B]: the moment of the stabilizer of e1."""
    c = commutator(a, b)
    return c.submatrix(range(1, c.nrows), range(c.ncols))


def _word_order(n: int):
    """Exponent pairs (i, j) for A^i B^j, graded with A-heavy words first."""
    out = []
    for total in range(0, 2 * n):
        for i in range(total, -1, -1):
            j = total - i
            if i <= n and j <= n:
                out.append((i, j))
    return out


def _krylov_vectors(a: FieldMatrix, b: FieldMatrix, v):
    """Greedy Krylov basis {A^i B^j v} in graded order, or None if not cyclic."""
    n = a.nrows
    cache = {(0, 0): tuple(v)}

    def vec(i, j):
        if (i, j) in cache:
            return cache[(i, j)]
        if i > 0:
            w = a.apply(vec(i - 1, j))
        else:
            w = b.apply(vec(i, j - 1))
        cache[(i, j)] = w
        return w

    basis = []
    for (i, j) in _word_order(n):
        w = vec(i, j)
        if FieldMatrix(basis + [w]).rank() == len(basis):
            continue
        basis.append(w)
        if len(basis) == n:
            return basis
    return None


def krylov_canonical_form(pair: CommPair) -> CommPair:
    """Complete invariant for the orbit under the stabilizer of e1.

    Conjugates by the matrix sending the standard basis to the greedy Krylov
    basis of e1 (words graded, ties broken A before B). Two commuting pairs
    with e1 cyclic are conjugate by a first-column-e1 element if and only if
    the canonical forms agree entrywise.
    """
    pair.require_commuting()
    n = pair.n
    e1 = tuple(GaussianRational(1 if k == 0 else 0) for k in range(n))
    basis = _krylov_vectors(pair.a, pair.b, e1)
    if basis is None:
        raise ValueError("e1 is not cyclic for the pair")
    g = FieldMatrix.from_columns(basis)
    return pair.conjugate(g)


# -- framed quadruples and the hat construction -----------------------------


def hat_pair(data: ADHMData) -> HatPair:
    """Extend (X, Y, i, j) to the (k+1)-size pair with first row/column framing."""
    k = data.k
    zero = GaussianRational(0)
    i1 = data.i.column(0)
    i2 = data.i.column(1)
    j1 = data.j.row(0)
    j2 = data.j.row(1)
    x_rows = [(zero,) + tuple(-v for v in j2)]
    y_rows = [(zero,) + tuple(j1)]
    for r in range(k):
        x_rows.append((i1[r],) + tuple(data.x.row(r)))
        y_rows.append((i2[r],) + tuple(data.y.row(r)))
    return HatPair(FieldMatrix(x_rows), FieldMatrix(y_rows))


def unhat(hp: HatPair) -> ADHMData:
    """Inverse of hat_pair; requires the (0, 0) corners to vanish."""
    k = hp.size - 1
    if hp.x_hat[0, 0] or hp.y_hat[0, 0]:
        raise ValueError("hat pair must have zero upper-left corners")
    x = hp.x_hat.submatrix(range(1, k + 1), range(1, k + 1))
    y = hp.y_hat.submatrix(range(1, k + 1), range(1, k + 1))
    i = FieldMatrix.from_columns(
        [
            [hp.x_hat[r, 0] for r in range(1, k + 1)],
            [hp.y_hat[r, 0] for r in range(1, k + 1)],
        ]
    )
    j = FieldMatrix(
        [
            [hp.y_hat[0, c] for c in range(1, k + 1)],
            [-hp.x_hat[0, c] for c in range(1, k + 1)],
        ]
    )
    return ADHMData(x, y, i, j)


def is_stable(x: FieldMatrix, y: FieldMatrix, i: FieldMatrix) -> bool:
    """No proper subspace contains im(i) and is invariant under X and Y."""
    k = x.nrows
    seeds = [i.column(c) for c in range(i.ncols)]
    return len(invariant_span([x, y], seeds)) == k


def standard_frame(k: int) -> FieldMatrix:
    """The k x 2 frame whose columns are e1, e2."""
    return FieldMatrix.from_columns(
        [
            [GaussianRational(1 if r == 0 else 0) for r in range(k)],
            [GaussianRational(1 if r == 1 else 0) for r in range(k)],
        ]
    )


def hat_moment(x: FieldMatrix, y: FieldMatrix):
    """Moment data for pairs with the two entry alignments X12=Y11, X22=Y21.

    Returns (last k-2 rows of [X, Y], the column X_{s2} - Y_{s1} for rows
    s >= 3). Both vanish exactly when the associated hat pair commutes.
    """
    k = x.nrows
    if k < 2:
        raise ValueError("need size at least 2")
    if x[0, 1] != y[0, 0] or x[1, 1] != y[1, 0]:
        raise ValueError("entry conditions X12=Y11, X22=Y21 are violated")
    c = commutator(x, y)
    moment_part = c.submatrix(range(2, k), range(k))
    alpha = tuple(x[r, 1] - y[r, 0] for r in range(2, k))
    return moment_part, alpha


def v0s_hat(x: FieldMatrix, y: FieldMatrix) -> HatPair:
    """Hat pair of (X, Y) framed by e1, e2 with j recovered from commutator rows.

    j is the first two rows of [Y, X]: the unique choice cancelling rows 1-2
    of [X, Y] + i*j, so the residual support collapses to rows >= 3.
    """
    k = x.nrows
    c = commutator(y, x)
    j = FieldMatrix([list(c.row(0)), list(c.row(1))])
    return hat_pair(ADHMData(x, y, standard_frame(k), j))


def line_test(pair: CommPair) -> bool:
    """True when no nonzero c0 + c1*A + c2*B vanishes: the scheme spans no line."""
    pair.require_commuting()
    rows = [
        vectorize(FieldMatrix.identity(pair.n)),
        vectorize(pair.a),
        vectorize(pair.b),
    ]
    return FieldMatrix(rows).rank() == 3


# -- recovery of points -----------------------------------------------------


def recover_points(pair: CommPair):
    """Joint spectrum with multiplicities, for pairs split over Q(i).

    Returns a list of ((x, y), multiplicity) sorted lexicographically. Fat
    points are reported through their multiplicity only. Raises if some
    eigenvalue lies outside Q(i).
    """
    pair.require_commuting()
    n = pair.n
    lams = sorted(set(gaussian_roots(char_poly(pair.a))), key=_sort_key)
    mus = sorted(set(gaussian_roots(char_poly(pair.b))), key=_sort_key)
    if _root_count(char_poly(pair.a)) != n or _root_count(char_poly(pair.b)) != n:
        raise ValueError("spectrum does not split over Q(i)")
    ident = FieldMatrix.identity(n)
    out = []
    total = 0
    for lam in lams:
        an = _nilpotent_power(pair.a - ident * lam, n)
        for mu in mus:
            bn = _nilpotent_power(pair.b - ident * mu, n)
            stacked = FieldMatrix(list(an.rows) + list(bn.rows))
            mult = len(stacked.kernel_basis())
            if mult:
                out.append(((lam, mu), mult))
                total += mult
    if total != n:
        raise ArithmeticError("joint spectrum does not account for the full length")
    out.sort(key=lambda pm: (_sort_key(pm[0][0]), _sort_key(pm[0][1])))
    return out


def _nilpotent_power(m: FieldMatrix, n: int) -> FieldMatrix:
    out = m
    for _ in range(n - 1):
        out = out * m
    return out


def _root_count(p) -> int:
    return len(gaussian_roots(p))


def _sort_key(z: GaussianRational):
    return (z.re, z.im)
