"""Dense exact linear algebra over an arbitrary field.

A FieldMatrix carries its field as a callable (GaussianRational, RatFunc,
Fraction, ...) used only to manufacture 0 and 1; all other arithmetic goes
through the entries' own operators, so the same elimination code serves
Q(i), Q(i)(t) and the dual numbers.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .scalars import GaussianRational
from .unipoly import UniPoly, RatFunc, poly_gcd


class FieldMatrix:
    __slots__ = ("rows", "nrows", "ncols", "field")

    def __init__(self, rows, field=GaussianRational):
        rows = tuple(tuple(r) for r in rows)
        if rows:
            w = len(rows[0])
            if any(len(r) != w for r in rows):
                raise ValueError("ragged rows")
        else:
            w = 0
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", w)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("FieldMatrix is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def identity(cls, n: int, field=GaussianRational) -> "FieldMatrix":
        one, zero = field(1), field(0)
        return cls(tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)), field)

    @classmethod
    def zeros(cls, nrows: int, ncols: int, field=GaussianRational) -> "FieldMatrix":
        zero = field(0)
        return cls(tuple((zero,) * ncols for _ in range(nrows)), field)

    @classmethod
    def diagonal(cls, entries, field=GaussianRational) -> "FieldMatrix":
        entries = tuple(entries)
        zero = field(0)
        n = len(entries)
        return cls(tuple(tuple(entries[i] if i == j else zero for j in range(n)) for i in range(n)), field)

    @classmethod
    def from_columns(cls, cols, field=GaussianRational) -> "FieldMatrix":
        cols = [tuple(c) for c in cols]
        if not cols:
            return cls((), field)
        return cls(tuple(zip(*cols)), field)

    # -- access ----------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i):
        return self.rows[i]

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def tolist(self):
        return [list(r) for r in self.rows]

    def iter_nonzero(self):
        for i, row in enumerate(self.rows):
            for j, v in enumerate(row):
                if v:
                    yield i, j, v

    def map(self, fn, field=None) -> "FieldMatrix":
        return FieldMatrix(tuple(tuple(fn(v) for v in row) for row in self.rows), field or self.field)

    def submatrix(self, row_idx, col_idx) -> "FieldMatrix":
        return FieldMatrix(tuple(tuple(self.rows[i][j] for j in col_idx) for i in row_idx), self.field)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        return FieldMatrix(
            tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)),
            self.field,
        )

    def __sub__(self, other):
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        return FieldMatrix(
            tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)),
            self.field,
        )

    def __neg__(self):
        return self.map(lambda v: -v)

    def __mul__(self, other):
        if isinstance(other, FieldMatrix):
            if self.ncols != other.nrows:
                raise ValueError(f"shape mismatch {self.shape} * {other.shape}")
            cols = other.columns()
            zero = self.field(0)
            return FieldMatrix(
                tuple(
                    tuple(_dot(row, col, zero) for col in cols)
                    for row in self.rows
                ),
                self.field,
            )
        return self.map(lambda v: v * other)

    def __rmul__(self, other):
        return self.map(lambda v: other * v)

    def apply(self, vec):
        """Matrix times column vector (any sequence); returns a tuple."""
        zero = self.field(0)
        return tuple(_dot(row, vec, zero) for row in self.rows)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def transpose(self) -> "FieldMatrix":
        return FieldMatrix(tuple(zip(*self.rows)) if self.rows else (), self.field)

    def trace(self):
        s = self.field(0)
        for i in range(min(self.nrows, self.ncols)):
            s = s + self.rows[i][i]
        return s

    def is_zero(self) -> bool:
        return all(not v for row in self.rows for v in row)

    def __eq__(self, other):
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb)
        )

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "\n ".join(str(list(r)) for r in self.rows)
        return f"FieldMatrix[\n {body}\n]"

    # -- elimination -------------------------------------------------------

    def rref(self):
        """Reduced row echelon form; returns (matrix, pivot column list)."""
        rows = [list(r) for r in self.rows]
        pivots = []
        r = 0
        for c in range(self.ncols):
            pr = None
            for i in range(r, self.nrows):
                if rows[i][c]:
                    pr = i
                    break
            if pr is None:
                continue
            rows[r], rows[pr] = rows[pr], rows[r]
            inv = self.field(1) / rows[r][c]
            rows[r] = [v * inv for v in rows[r]]
            for i in range(self.nrows):
                if i != r and rows[i][c]:
                    f = rows[i][c]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == self.nrows:
                break
        return FieldMatrix(rows, self.field), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self):
        """Basis of the right kernel as a list of tuples (length = ncols)."""
        red, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in pivots]
        zero, one = self.field(0), self.field(1)
        basis = []
        for fc in free:
            v = [zero] * self.ncols
            v[fc] = one
            for r, pc in enumerate(pivots):
                v[pc] = -red.rows[r][fc]
            basis.append(tuple(v))
        return basis

    def solve(self, rhs):
        """One solution x of self * x = rhs, or None if inconsistent."""
        zero = self.field(0)
        aug = FieldMatrix(
            tuple(tuple(row) + (b,) for row, b in zip(self.rows, rhs)), self.field
        )
        red, pivots = aug.rref()
        if self.ncols in pivots:
            return None
        x = [zero] * self.ncols
        for r, pc in enumerate(pivots):
            x[pc] = red.rows[r][self.ncols]
        return tuple(x)

    def inverse(self) -> "FieldMatrix":
        if self.nrows != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        one, zero = self.field(1), self.field(0)
        aug = FieldMatrix(
            tuple(
                tuple(self.rows[i]) + tuple(one if i == j else zero for j in range(n))
                for i in range(n)
            ),
            self.field,
        )
        red, pivots = aug.rref()
        if pivots != list(range(n)):
            raise ValueError("matrix is singular")
        return FieldMatrix(tuple(r[n:] for r in red.rows), self.field)

    def det(self):
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        rows = [list(r) for r in self.rows]
        n = self.nrows
        det = self.field(1)
        for c in range(n):
            pr = None
            for i in range(c, n):
                if rows[i][c]:
                    pr = i
                    break
            if pr is None:
                return self.field(0)
            if pr != c:
                rows[c], rows[pr] = rows[pr], rows[c]
                det = -det
            det = det * rows[c][c]
            inv = self.field(1) / rows[c][c]
            for i in range(c + 1, n):
                if rows[i][c]:
                    f = rows[i][c] * inv
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
        return det


def _dot(row, col, zero):
    s = zero
    for a, b in zip(row, col):
        if a and b:
            s = s + a * b
    return s


def commutator(a: FieldMatrix, b: FieldMatrix) -> FieldMatrix:
    return a * b - b * a


def vectorize(m: FieldMatrix):
    """Row-major flattening as a tuple."""
    return tuple(v for row in m.rows for v in row)


def rank_kernel(m: FieldMatrix):
    """(rank, kernel basis) computed in one elimination."""
    red, pivots = m.rref()
    free = [c for c in range(m.ncols) if c not in pivots]
    zero, one = m.field(0), m.field(1)
    basis = []
    for fc in free:
        v = [zero] * m.ncols
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = -red.rows[r][fc]
        basis.append(tuple(v))
    return len(pivots), basis


def span_rank(vectors, field=GaussianRational) -> int:
    if not vectors:
        return 0
    return FieldMatrix(vectors, field).rank()


def char_poly(m: FieldMatrix) -> UniPoly:
    """Characteristic polynomial det(t*I - m) by Faddeev-LeVerrier."""
    n = m.nrows
    if n != m.ncols:
        raise ValueError("characteristic polynomial of a non-square matrix")
    coeffs = [m.field(0)] * (n + 1)
    coeffs[n] = m.field(1)
    mk = FieldMatrix.identity(n, m.field)
    for k in range(1, n + 1):
        mk = m * mk
        c = -(mk.trace() / k)
        coeffs[n - k] = c
        if k < n:
            mk = mk + FieldMatrix.diagonal([c] * n, m.field)
    return UniPoly(coeffs)


# -- exact inertia of a rational symmetric form ---------------------------


class SignatureReport:
    """Counts of positive, negative and zero eigenvalues of a symmetric form."""

    __slots__ = ("positive", "negative", "zero")

    def __init__(self, positive: int, negative: int, zero: int):
        object.__setattr__(self, "positive", positive)
        object.__setattr__(self, "negative", negative)
        object.__setattr__(self, "zero", zero)

    def __setattr__(self, name, value):
        raise AttributeError("SignatureReport is immutable")

    @property
    def dimension(self) -> int:
        return self.positive + self.negative + self.zero

    def as_tuple(self):
        return (self.positive, self.negative, self.zero)

    def __eq__(self, other):
        if isinstance(other, tuple):
            return self.as_tuple() == other
        if isinstance(other, SignatureReport):
            return self.as_tuple() == other.as_tuple()
        return NotImplemented

    def __hash__(self):
        return hash(self.as_tuple())

    def __repr__(self):
        return f"SignatureReport(positive={self.positive}, negative={self.negative}, zero={self.zero})"


def inertia(matrix) -> SignatureReport:
    """Exact Sylvester inertia of a symmetric matrix with rational entries.

    Accepts a FieldMatrix over Q(i) with purely real entries, or nested
    lists of Fractions/ints. Works by symmetric Gaussian elimination:
    congruence transforms preserve the inertia, and when no diagonal pivot
    is available a row/column addition creates one (2*S[i][j] != 0 in
    characteristic 0).
    """
    rows = _to_fraction_rows(matrix)
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise ValueError("inertia needs a square matrix")
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise ValueError(f"matrix is not symmetric at ({i}, {j})")
    pos = neg = 0
    live = list(range(n))
    while live:
        piv = None
        for idx, i in enumerate(live):
            if rows[i][i] != 0:
                piv = idx
                break
        if piv is None:
            off = None
            for ai, i in enumerate(live):
                for j in live[ai + 1:]:
                    if rows[i][j] != 0:
                        off = (i, j)
                        break
                if off:
                    break
            if off is None:
                break
            i, j = off
            # congruence by e_i -> e_i + e_j makes the (i,i) entry 2*S[i][j]
            for k in range(n):
                rows[i][k] += rows[j][k]
            for k in range(n):
                rows[k][i] += rows[k][j]
            continue
        i = live.pop(piv)
        d = rows[i][i]
        if d > 0:
            pos += 1
        else:
            neg += 1
        for r in live:
            if rows[r][i] != 0:
                f = rows[r][i] / d
                for c in live:
                    rows[r][c] -= f * rows[i][c]
                rows[r][i] = Fraction(0)
        for c in live:
            rows[i][c] = Fraction(0)
    zero = n - pos - neg
    return SignatureReport(pos, neg, zero)


def _to_fraction_rows(matrix):
    if isinstance(matrix, FieldMatrix):
        out = []
        for row in matrix.rows:
            fr = []
            for v in row:
                if isinstance(v, GaussianRational):
                    if v.im != 0:
                        raise ValueError("inertia requires real (rational) entries")
                    fr.append(Fraction(v.re))
                else:
                    fr.append(Fraction(v))
            out.append(fr)
        return out
    return [[Fraction(v) for v in row] for row in matrix]


# -- gcd of maximal minors of polynomial matrices --------------------------


def minors_gcd(m: FieldMatrix, size: int, limit: int | None = None) -> UniPoly:
    """Monic gcd of all size x size minors of a matrix over Q(i)(t).

    Stops early once the running gcd is 1 (the generic situation). Entries
    must be polynomial (RatFunc with trivial denominator or UniPoly); the
    result is the gcd as a polynomial in t, or the zero polynomial when all
    minors vanish identically.
    """
    g = UniPoly()
    count = 0
    for ri in itertools.combinations(range(m.nrows), size):
        for ci in itertools.combinations(range(m.ncols), size):
            sub = m.submatrix(ri, ci)
            d = sub.det()
            if isinstance(d, RatFunc):
                d = d.as_unipoly()
            if d.is_zero():
                continue
            g = poly_gcd(g, d)
            count += 1
            if g.degree == 0:
                return g
            if limit is not None and count >= limit:
                return g
    return g


def rank_everywhere(m: FieldMatrix, rank: int):
    """Decide whether a matrix over Q(i)(t) has the given rank for every t.

    Returns (ok, witness_gcd): ok is True when the generic rank equals
    `rank` and the gcd of all rank-minors is a nonzero constant; otherwise
    witness_gcd is the offending gcd (roots = parameters where rank drops),
    or None when even the generic rank is too small.
    """
    generic = m.rank()
    if generic < rank:
        return False, None
    g = minors_gcd(m, rank)
    if g.degree == 0 and not g.is_zero():
        return True, g
    return False, g


def diagonal_form(m: FieldMatrix) -> list[UniPoly]:
    """Nonzero diagonal of a polynomial matrix under unimodular row/column ops.

    Degree-descent elimination: pivot on a minimal-degree entry, reduce its
    row and column with polynomial division, restart on a nonzero remainder.
    The multiset of determinantal divisors is preserved, so ranks at every
    parameter can be read off the returned polynomials.
    """
    rows = [[p if isinstance(p, UniPoly) else UniPoly(p) for p in row] for row in m.rows]
    diag: list[UniPoly] = []
    while rows and rows[0]:
        piv = None
        for i, row in enumerate(rows):
            for j, p in enumerate(row):
                if p and (piv is None or p.degree < rows[piv[0]][piv[1]].degree):
                    piv = (i, j)
        if piv is None:
            break
        i0, j0 = piv
        rows[0], rows[i0] = rows[i0], rows[0]
        for row in rows:
            row[0], row[j0] = row[j0], row[0]
        restart = False
        while True:
            pivot = rows[0][0]
            cleaned = True
            for i in range(1, len(rows)):
                if rows[i][0]:
                    q, rem = rows[i][0].divmod(pivot)
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[0])]
                    if rem:
                        rows[0], rows[i] = rows[i], rows[0]
                        cleaned = False
                        break
            if not cleaned:
                continue
            for j in range(1, len(rows[0])):
                if rows[0][j]:
                    q, rem = rows[0][j].divmod(pivot)
                    for row in rows:
                        row[j] = row[j] - q * row[0]
                    if rem:
                        for row in rows:
                            row[0], row[j] = row[j], row[0]
                        cleaned = False
                        break
            if cleaned:
                break
        diag.append(rows[0][0])
        rows = [row[1:] for row in rows[1:]]
    return diag


def polynomial_rank_everywhere(m: FieldMatrix, size: int):
    """'rank >= size at every t' for a matrix with UniPoly entries.

    Diagonalizes by unimodular operations; the gcd of all size-minors is the
    gcd of size-fold products of the diagonal. Returns (ok, gcd_or_None);
    a non-constant gcd carries the bad parameters as its roots.
    """
    diag = diagonal_form(m)
    if len(diag) < size:
        return False, None
    units = sum(1 for p in diag if p.degree == 0)
    needed = size - units
    if needed <= 0:
        return True, UniPoly((1,))
    nonunits = [p for p in diag if p.degree > 0]
    g = UniPoly()
    for combo in itertools.combinations(nonunits, needed):
        prod = UniPoly((1,))
        for p in combo:
            prod = prod * p
        g = poly_gcd(g, prod)
        if g.degree == 0:
            return True, g
    return (g.degree == 0 and not g.is_zero()), g
