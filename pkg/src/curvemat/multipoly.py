"""Sparse multivariate polynomials and Buchberger's algorithm.

Coefficients live in any exact field (Q(i) for point schemes, Q(i)(t) for
curve fibers). Zero-dimensionality is detected through the staircase of the
reduced basis, guarded by a configurable cap on the number of standard
monomials.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .scalars import GaussianRational
from .linalg import FieldMatrix

GRLEX = "grlex"
LEX = "lex"

DEFAULT_QUOTIENT_CAP = 64


def _order_key(order: str):
    if order == GRLEX:
        return lambda e: (sum(e), e)
    if order == LEX:
        return lambda e: e
    raise ValueError(f"unknown monomial order {order!r}")


class MultiPoly:
    """sum of coeff * x^exps over `nvars` variables x1 > x2 > ... (left to right)."""

    __slots__ = ("nvars", "terms", "field")

    def __init__(self, nvars: int, terms=None, field=GaussianRational):
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for {nvars} variables")
            if isinstance(c, (int, Fraction)) and field is GaussianRational:
                c = GaussianRational(c)
            if not c:
                continue
            if exps in clean:
                c = clean[exps] + c
                if not c:
                    del clean[exps]
                    continue
            clean[exps] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    @classmethod
    def variable(cls, nvars: int, index: int, field=GaussianRational) -> "MultiPoly":
        exps = tuple(1 if k == index else 0 for k in range(nvars))
        return cls(nvars, {exps: field(1)}, field)

    @classmethod
    def const(cls, nvars: int, c, field=GaussianRational) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c}, field)

    @classmethod
    def monomial(cls, nvars: int, exps, c=1, field=GaussianRational) -> "MultiPoly":
        return cls(nvars, {tuple(exps): field(c) if isinstance(c, (int, Fraction)) else c}, field)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            if e in terms:
                s = terms[e] + c
                if s:
                    terms[e] = s
                else:
                    del terms[e]
            else:
                terms[e] = c
        return MultiPoly(self.nvars, terms, self.field)

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()}, self.field)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                if e in terms:
                    s = terms[e] + c
                    if s:
                        terms[e] = s
                    else:
                        del terms[e]
                elif c:
                    terms[e] = c
        return MultiPoly(self.nvars, terms, self.field)

    def scale(self, c) -> "MultiPoly":
        if not c:
            return MultiPoly(self.nvars, {}, self.field)
        return MultiPoly(self.nvars, {e: v * c for e, v in self.terms.items()}, self.field)

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, tuple(sorted(self.terms.items(), key=lambda kv: kv[0]))))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def leading(self, order: str = GRLEX):
        """(exponent vector, coefficient) of the leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = _order_key(order)
        e = max(self.terms, key=key)
        return e, self.terms[e]

    def evaluate(self, point):
        """Evaluate at a tuple of field elements."""
        if len(point) != self.nvars:
            raise ValueError("point has wrong length")
        total = self.field(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                for _ in range(k):
                    v = v * x
            total = total + v
        return total

    def exact_div(self, other: "MultiPoly") -> "MultiPoly":
        """Exact quotient self / other; raises if the division is not exact."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = self
        q_terms: dict = {}
        le, lc = other.leading(GRLEX)
        while rem.terms:
            re_, rc = rem.leading(GRLEX)
            qe = tuple(a - b for a, b in zip(re_, le))
            if any(x < 0 for x in qe):
                raise ArithmeticError("inexact polynomial division")
            qc = rc / lc
            q_terms[qe] = q_terms.get(qe, other.field(0)) + qc
            rem = rem - MultiPoly(rem.nvars, {qe: qc}, rem.field) * other
        return MultiPoly(self.nvars, q_terms, self.field)

    def __repr__(self):
        if not self.terms:
            return "0"
        key = _order_key(GRLEX)
        parts = []
        for e in sorted(self.terms, key=key, reverse=True):
            c = self.terms[e]
            mono = "*".join(f"x{k + 1}^{p}" if p > 1 else f"x{k + 1}" for k, p in enumerate(e) if p)
            parts.append(f"({c!r})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


def _divides(e1, e2) -> bool:
    return all(a <= b for a, b in zip(e1, e2))


def _lcm(e1, e2):
    return tuple(max(a, b) for a, b in zip(e1, e2))


def normal_form(p: MultiPoly, basis, order: str = GRLEX) -> MultiPoly:
    """Remainder of p under multivariate division by the basis."""
    key = _order_key(order)
    leads = [(g.leading(order), g) for g in basis if not g.is_zero()]
    rem_terms: dict = {}
    work = p
    while work.terms:
        e = max(work.terms, key=key)
        c = work.terms[e]
        hit = None
        for (le, lc), g in leads:
            if _divides(le, e):
                hit = (le, lc, g)
                break
        if hit is None:
            rem_terms[e] = c
            work = work - MultiPoly(work.nvars, {e: c}, work.field)
        else:
            le, lc, g = hit
            qe = tuple(a - b for a, b in zip(e, le))
            work = work - MultiPoly(work.nvars, {qe: c / lc}, work.field) * g
    return MultiPoly(p.nvars, rem_terms, p.field)


def s_polynomial(f: MultiPoly, g: MultiPoly, order: str = GRLEX) -> MultiPoly:
    (ef, cf), (eg, cg) = f.leading(order), g.leading(order)
    lcm = _lcm(ef, eg)
    mf = MultiPoly(f.nvars, {tuple(a - b for a, b in zip(lcm, ef)): f.field(1) / cf}, f.field)
    mg = MultiPoly(g.nvars, {tuple(a - b for a, b in zip(lcm, eg)): g.field(1) / cg}, g.field)
    return mf * f - mg * g


def buchberger(gens, order: str = GRLEX) -> list[MultiPoly]:
    """Reduced Groebner basis of the ideal generated by `gens`.

    Pairs whose leading monomials are coprime are skipped (Buchberger's
    first criterion); termination is guaranteed by Dickson's lemma.
    """
    basis = [g for g in gens if not g.is_zero()]
    if not basis:
        raise ValueError("no nonzero generators")
    pairs = list(itertools.combinations(range(len(basis)), 2))
    while pairs:
        i, j = pairs.pop()
        ei, _ = basis[i].leading(order)
        ej, _ = basis[j].leading(order)
        if all(a == 0 or b == 0 for a, b in zip(ei, ej)):
            continue
        h = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        if not h.is_zero():
            basis.append(h)
            pairs.extend((k, len(basis) - 1) for k in range(len(basis) - 1))
    return reduce_basis(basis, order)


def reduce_basis(basis, order: str = GRLEX) -> list[MultiPoly]:
    """Minimal, fully interreduced basis with monic leading coefficients."""
    key = _order_key(order)
    leads = [g.leading(order)[0] for g in basis]
    keep = []
    for i, g in enumerate(basis):
        le = leads[i]
        if any(j != i and _divides(leads[j], le) and (leads[j] != le or j < i) for j in range(len(basis))):
            continue
        keep.append(g)
    out = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        r = normal_form(g, others, order) if others else g
        if r.is_zero():
            continue
        _, lc = r.leading(order)
        out.append(r.scale(r.field(1) / lc))
    out.sort(key=lambda g: key(g.leading(order)[0]))
    return out


def standard_monomials(basis, order: str = GRLEX, cap: int = DEFAULT_QUOTIENT_CAP):
    """Monomials under the staircase of a Groebner basis, sorted increasingly.

    Raises ValueError when the count exceeds `cap`, which in particular
    flags ideals that are not zero-dimensional.
    """
    if not basis:
        raise ValueError("empty basis")
    nvars = basis[0].nvars
    leads = [g.leading(order)[0] for g in basis]
    if any(sum(e) == 0 for e in leads):
        return []  # ideal is the whole ring
    key = _order_key(order)
    seen = {(0,) * nvars}
    frontier = [(0,) * nvars]
    std = []
    while frontier:
        e = frontier.pop()
        if any(_divides(le, e) for le in leads):
            continue
        std.append(e)
        if len(std) > cap:
            raise ValueError(
                f"more than {cap} standard monomials; ideal is not zero-dimensional at this scale"
            )
        for k in range(nvars):
            e2 = tuple(v + 1 if i == k else v for i, v in enumerate(e))
            if e2 not in seen:
                seen.add(e2)
                frontier.append(e2)
    # basis order: degree first, earlier variables first within a degree,
    # so bases read (1, x1, x2, ..., x1^2, x1 x2, ...)
    std.sort(key=lambda e: (sum(e), tuple(-v for v in e)))
    return std


def multiplication_matrix(var_index: int, basis, std, order: str = GRLEX) -> FieldMatrix:
    """Matrix of multiplication by x_{var_index+1} on the quotient algebra.

    Columns are indexed by the standard monomials `std`; entry (i, j) is the
    coefficient of std[i] in the normal form of x * std[j].
    """
    if not basis:
        raise ValueError("empty basis")
    field = basis[0].field
    nvars = basis[0].nvars
    index = {e: i for i, e in enumerate(std)}
    cols = []
    for e in std:
        shifted = tuple(v + 1 if k == var_index else v for k, v in enumerate(e))
        nf = normal_form(MultiPoly(nvars, {shifted: field(1)}, field), basis, order)
        col = [field(0)] * len(std)
        for me, c in nf.terms.items():
            if me not in index:
                raise ArithmeticError("normal form escaped the standard monomial basis")
            col[index[me]] = c
        cols.append(col)
    return FieldMatrix.from_columns(cols, field)


def bareiss_generic_rank(rows, field=GaussianRational) -> int:
    """Rank of a matrix of MultiPoly entries over the fraction field.

    Fraction-free Bareiss elimination; the Sylvester identity guarantees the
    interior divisions are exact, so only MultiPoly.exact_div is needed.
    """
    m = [list(r) for r in rows]
    if not m:
        return 0
    nr, nc = len(m), len(m[0])
    nvars = None
    for row in m:
        for v in row:
            nvars = v.nvars
            break
        if nvars is not None:
            break
    if nvars is None:
        return 0
    one = MultiPoly.const(nvars, field(1), field)
    prev = one
    rank = 0
    for col in range(nc):
        piv = None
        for r in range(rank, nr):
            if not m[r][col].is_zero():
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, nr):
            for c in range(col + 1, nc):
                num = m[r][c] * p - m[r][col] * m[rank][c]
                m[r][c] = num.exact_div(prev) if not num.is_zero() else num
            m[r][col] = MultiPoly(nvars, {}, field)
        prev = p
        rank += 1
        if rank == nr:
            break
    return rank
