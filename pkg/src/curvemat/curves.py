"""Space curves flat over the line, as tuples of commuting matrix polynomials.

A degree-d curve with a flat degree-d projection to the line corresponds to
d x d matrix polynomials A_2(t), ..., A_r(t) whose first columns are the
constant vectors e_2, ..., e_r, whose entry degrees obey the pattern
deg (A_l)_{ij} <= k_j - k_i + k_l for splitting exponents k, and whose values
generate a d-dimensional algebra with e_1 cyclic at every parameter,
including infinity. This module computes such models from ideals, changes
chart at infinity, verifies every condition exactly, and extracts splitting
types and the stability obstruction arithmetic of direct-image bundles.
"""

from __future__ import annotations

import itertools

from .scalars import GaussianRational
from .unipoly import UniPoly, RatFunc, gaussian_roots
from .linalg import FieldMatrix, commutator, polynomial_rank_everywhere
from .multipoly import MultiPoly, buchberger, multiplication_matrix, normal_form, standard_monomials


class CurveIdeal:
    """Generators of a curve ideal in x_1..x_{r-1}, coefficients in Q(i)(t)."""

    __slots__ = ("r", "gens")

    def __init__(self, r: int, gens):
        gens = list(gens)
        if r < 2:
            raise ValueError("ambient projective dimension must be at least 2")
        if not gens:
            raise ValueError("need at least one generator")
        nvars = r - 1
        for g in gens:
            if not isinstance(g, MultiPoly) or g.nvars != nvars:
                raise ValueError(f"generators must have {nvars} variables")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "gens", tuple(gens))

    def __setattr__(self, name, value):
        raise AttributeError("CurveIdeal is immutable")


class MatPolyModel:
    """Matrices A_2(t)..A_r(t) with splitting exponents k = (0, k_2, ..., k_d)."""

    __slots__ = ("d", "r", "k", "mats")

    def __init__(self, d: int, r: int, k, mats):
        mats = tuple(mats)
        k = tuple(int(v) for v in k)
        if len(mats) != r - 1:
            raise ValueError("expected r-1 matrices")
        if len(k) != d or k[0] != 0:
            raise ValueError("k must have length d and start with 0")
        for m in mats:
            if m.shape != (d, d):
                raise ValueError("matrices must be d x d")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "mats", mats)

    def __setattr__(self, name, value):
        raise AttributeError("MatPolyModel is immutable")

    def at(self, t0) -> list[FieldMatrix]:
        """Evaluate every matrix at a parameter value."""
        return [m.map(lambda p: p(t0), GaussianRational) for m in self.mats]

    def __eq__(self, other):
        if not isinstance(other, MatPolyModel):
            return NotImplemented
        return (self.d, self.r, self.k, self.mats) == (other.d, other.r, other.k, other.mats)


class SplittingType:
    """Multiset of line-bundle degrees a_1 >= ... >= a_d of a bundle on the line."""

    __slots__ = ("degrees",)

    def __init__(self, degrees):
        object.__setattr__(self, "degrees", tuple(sorted((int(a) for a in degrees), reverse=True)))

    def __setattr__(self, name, value):
        raise AttributeError("SplittingType is immutable")

    @property
    def rank(self) -> int:
        return len(self.degrees)

    @property
    def total_degree(self) -> int:
        return sum(self.degrees)

    def h0(self, m: int = 0) -> int:
        return sum(max(a + m + 1, 0) for a in self.degrees)

    def __eq__(self, other):
        if isinstance(other, SplittingType):
            return self.degrees == other.degrees
        if isinstance(other, (tuple, list, set)):
            return self.degrees == tuple(sorted((int(a) for a in other), reverse=True))
        return NotImplemented

    def __hash__(self):
        return hash(self.degrees)

    def __repr__(self):
        return f"SplittingType{self.degrees}"


class SplitMultiset:
    """Multiplicities m_i of the O(-i) summands (i >= 1) of a direct image."""

    __slots__ = ("m",)

    def __init__(self, m):
        clean = {}
        for i, v in dict(m).items():
            i, v = int(i), int(v)
            if i < 1 or v < 0:
                raise ValueError("need i >= 1 and m_i >= 0")
            if v:
                clean[i] = v
        object.__setattr__(self, "m", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SplitMultiset is immutable")

    @classmethod
    def from_splitting(cls, st: SplittingType) -> "SplitMultiset":
        m: dict = {}
        zeros = 0
        for a in st.degrees:
            if a == 0:
                zeros += 1
            elif a < 0:
                m[-a] = m.get(-a, 0) + 1
            else:
                raise ValueError("direct images here have no positive summands")
        if zeros != 1:
            raise ValueError("expected exactly one trivial summand")
        return cls(m)

    def items(self):
        return sorted(self.m.items())


# -- report plumbing ---------------------------------------------------------


def _check(name: str, passed: bool, witness=None) -> dict:
    out = {"check": name, "pass": bool(passed)}
    if witness is not None:
        out["witness"] = witness
    return out


def _poly_witness(p: UniPoly) -> dict:
    roots = []
    if not p.is_zero():
        roots = gaussian_roots(p)
    return {
        "polynomial": [[str(c.re), str(c.im)] for c in p.coeffs],
        "roots": [[str(z.re), str(z.im)] for z in roots],
    }


# -- fiber algebras ----------------------------------------------------------


class FiberResult:
    __slots__ = ("model", "std_monomials", "checks", "ok")

    def __init__(self, model, std_monomials, checks):
        object.__setattr__(self, "model", model)
        object.__setattr__(self, "std_monomials", tuple(std_monomials))
        object.__setattr__(self, "checks", list(checks))
        object.__setattr__(self, "ok", model is not None and all(c["pass"] for c in checks))

    def __setattr__(self, name, value):
        raise AttributeError("FiberResult is immutable")


def fiber_algebra(ci: CurveIdeal) -> FiberResult:
    """Multiplication matrices of the generic fiber algebra, t cleared to polynomials.

    Runs Buchberger over Q(i)(t), takes the standard monomial basis, and
    builds one multiplication matrix per coordinate. Denominators that do
    not clear, or a basis not starting with 1, x_1, ..., x_{r-1}, are
    reported as flatness failures with the offending parameter values.
    """
    checks = []
    basis = buchberger(list(ci.gens))
    try:
        std = standard_monomials(basis)
    except ValueError as exc:
        return FiberResult(None, [], [_check("zero-dimensional-fiber", False, str(exc))])
    d = len(std)
    nvars = ci.r - 1
    expected_head = [tuple(0 for _ in range(nvars))] + [
        tuple(1 if v == i else 0 for v in range(nvars)) for i in range(nvars)
    ]
    head_ok = list(std[: nvars + 1]) == expected_head
    checks.append(_check("basis-starts-with-coordinates", head_ok, [list(e) for e in std]))
    if not head_ok:
        return FiberResult(None, std, checks)

    mats_rf = [multiplication_matrix(v, basis, std) for v in range(nvars)]
    bad_entries = []
    for l, m in enumerate(mats_rf):
        for i, j, v in m.iter_nonzero():
            if not v.is_polynomial():
                bad_entries.append({"matrix": l, "entry": [i, j], "denominator": _poly_witness(v.den)})
    checks.append(_check("denominators-clear", not bad_entries, bad_entries or None))
    if bad_entries:
        return FiberResult(None, std, checks)

    mats = [m.map(lambda v: v.as_unipoly(), UniPoly) for m in mats_rf]
    model, kcheck = _fit_model(d, ci.r, mats)
    checks.append(kcheck)
    return FiberResult(model, std, checks)


def _fit_model(d: int, r: int, mats) -> tuple:
    """Find splitting exponents making the degree pattern and both charts work."""
    for k in _candidate_exponents(d, r, mats):
        model = MatPolyModel(d, r, k, mats)
        report = verify_model(model)
        if report["pass"]:
            return model, _check("splitting-exponents", True, list(k))
    return None, _check("splitting-exponents", False, "no exponent vector satisfies the chart conditions")


def _candidate_exponents(d: int, r: int, mats):
    """Exponent vectors (0, 1, ..., 1, k_r+1..k_d), smallest total degree first.

    Lower bounds come from the degree constraints k_j >= deg + k_i - k_l with
    the first r entries pinned; the enumeration then pads upward within a
    small window, since validation at infinity rejects wrong guesses.
    """
    base = [0] + [1] * (r - 1) + [1] * (d - r)
    if d == r:
        yield tuple(base)
        return
    max_deg = 0
    for l, m in enumerate(mats):
        for _, _, v in m.iter_nonzero():
            max_deg = max(max_deg, v.degree)
    lows = list(base)
    for _ in range(d):
        for l, m in enumerate(mats):
            for i, j, v in m.iter_nonzero():
                if j >= r:
                    lows[j] = max(lows[j], v.degree + lows[i] - lows[l + 1])
    hi = max(max_deg + 1, max(lows[r:]) if d > r else 1)
    free = d - r
    for combo in sorted(itertools.product(range(1, hi + 1), repeat=free), key=lambda c: (sum(c), c)):
        k = base[:r] + list(combo)
        if all(combo[i] >= lows[r + i] for i in range(free)):
            yield tuple(k)


# -- chart at infinity -------------------------------------------------------


def _twist(model: MatPolyModel, l: int) -> int:
    """Twist of the l-th matrix: its splitting exponent, 0 in the degenerate
    case of more coordinates than fiber length (a single-point cover)."""
    return model.k[l + 1] if l + 1 < model.d else 0


def infinity_chart(model: MatPolyModel) -> list[FieldMatrix]:
    """Matrices in the coordinate s = 1/t: conjugate by diag(t^k), divide by t^{k_l}.

    Entry (i, j) of A_l picks up t^{k_i - k_j - k_l}; the result is polynomial
    in s exactly when the degree pattern holds. Offending entries raise with
    their positions.
    """
    out = []
    bad = []
    for l, m in enumerate(model.mats):
        k_l = _twist(model, l)
        rows = []
        for i in range(model.d):
            row = []
            for j in range(model.d):
                p = m[i, j]
                shift = model.k[j] + k_l - model.k[i]
                coeffs = [GaussianRational(0)] * (shift + 1 if shift >= 0 else 0)
                ok = True
                for e, c in enumerate(p.coeffs):
                    if not c:
                        continue
                    spow = shift - e
                    if spow < 0:
                        ok = False
                        bad.append({"matrix": l, "entry": [i, j], "negative_power": spow})
                        continue
                    while len(coeffs) <= spow:
                        coeffs.append(GaussianRational(0))
                    coeffs[spow] = coeffs[spow] + c
                row.append(UniPoly(coeffs) if ok else UniPoly())
            rows.append(row)
        out.append(FieldMatrix(rows, UniPoly))
    if bad:
        raise ValueError(f"degree pattern violated; negative powers remain: {bad}")
    return out


# -- full verification -------------------------------------------------------


def _word_products(mats, d: int) -> list[FieldMatrix]:
    """All products prod A_l^{e_l} with 0 <= e_l <= d-1 (Cayley-Hamilton bound)."""
    words = {(0,) * len(mats): FieldMatrix.identity(d, UniPoly)}
    order = sorted(itertools.product(range(d), repeat=len(mats)), key=lambda e: (sum(e), e))
    for e in order:
        if e in words:
            continue
        l = next(i for i, v in enumerate(e) if v > 0)
        prev = tuple(v - 1 if i == l else v for i, v in enumerate(e))
        words[e] = mats[l] * words[prev]
    return [words[e] for e in order]


def verify_model(model: MatPolyModel) -> dict:
    """Check every defining condition of a model, at all parameters at once.

    Conditions: constant first columns e_l, entry degree pattern, pairwise
    commutation as polynomial identities, and on both charts a word matrix of
    generic rank d with constant minor gcd plus e_1 cyclic everywhere.
    Returns {"pass": bool, "checks": [...]} with bad-parameter witnesses.
    """
    checks = []
    d, r = model.d, model.r

    first_ok, first_witness = True, []
    for l, m in enumerate(model.mats):
        if l + 1 >= d:
            continue  # vacuous for single-point covers
        for i in range(d):
            expected = UniPoly(1) if i == l + 1 else UniPoly()
            if m[i, 0] != expected:
                first_ok = False
                first_witness.append({"matrix": l, "row": i})
    checks.append(_check("first-columns", first_ok, first_witness or None))

    deg_ok, deg_witness = True, []
    for l, m in enumerate(model.mats):
        for i, j, v in m.iter_nonzero():
            bound = model.k[j] - model.k[i] + _twist(model, l)
            if v.degree > bound:
                deg_ok = False
                deg_witness.append({"matrix": l, "entry": [i, j], "degree": v.degree, "bound": bound})
    checks.append(_check("degree-pattern", deg_ok, deg_witness or None))

    comm_ok, comm_witness = True, None
    for p in range(len(model.mats)):
        for q in range(p + 1, len(model.mats)):
            c = commutator(model.mats[p], model.mats[q])
            if not c.is_zero():
                comm_ok = False
                i, j, v = next(c.iter_nonzero())
                comm_witness = {"matrices": [p, q], "entry": [i, j]}
    checks.append(_check("commutation", comm_ok, comm_witness))

    if not (first_ok and deg_ok and comm_ok):
        return {"pass": False, "checks": checks}

    charts = [("finite-chart", list(model.mats))]
    try:
        charts.append(("infinity-chart", infinity_chart(model)))
    except ValueError as exc:
        checks.append(_check("infinity-chart-polynomial", False, str(exc)))
        return {"pass": False, "checks": checks}

    for label, mats in charts:
        words = _word_products(mats, d)
        rows = [tuple(v for row in w.rows for v in row) for w in words]
        word_matrix = FieldMatrix(rows, UniPoly)
        ok, g = polynomial_rank_everywhere(word_matrix, d)
        checks.append(_check(f"{label}-algebra-dimension", ok, None if ok else (g and _poly_witness(g))))
        cols = [w.column(0) for w in words]
        krylov = FieldMatrix.from_columns(cols, UniPoly)
        ok2, g2 = polynomial_rank_everywhere(krylov, d)
        checks.append(_check(f"{label}-e1-cyclic", ok2, None if ok2 else (g2 and _poly_witness(g2))))

    return {"pass": all(c["pass"] for c in checks), "checks": checks}


def verify_polynomial_pair(a: FieldMatrix, b: FieldMatrix, k=None) -> dict:
    """Model verification for a bare pair of matrix polynomials.

    When k is omitted, exponents are inferred the same way fiber_algebra does
    (for the ambient-3 shape with first columns e_2, e_3).
    """
    d = a.nrows
    mats = [a.map(lambda v: v if isinstance(v, UniPoly) else UniPoly(v), UniPoly),
            b.map(lambda v: v if isinstance(v, UniPoly) else UniPoly(v), UniPoly)]
    if k is not None:
        return verify_model(MatPolyModel(d, 3, k, mats))
    model, kcheck = _fit_model(d, 3, mats)
    if model is None:
        return {"pass": False, "checks": [kcheck]}
    report = verify_model(model)
    report["checks"].insert(0, kcheck)
    report["inferred_k"] = list(model.k)
    return report


# -- splitting types ---------------------------------------------------------


def _laurent_range(m: FieldMatrix):
    """(min, max) exponent over the Laurent entries of a RatFunc matrix."""
    lo, hi = 0, 0
    for _, _, v in m.iter_nonzero():
        den = v.den
        if len([c for c in den.coeffs if c]) != 1:
            raise ValueError("entries must be Laurent: denominators must be powers of t")
        shift = den.degree
        lo = min(lo, v.num.lowest_power() - shift)
        hi = max(hi, v.num.degree - shift)
    return lo, hi


def _laurent_coeff(v: RatFunc, e: int) -> GaussianRational:
    shift = v.den.degree
    c = v.num.coeff(e + shift)
    lead = v.den.coeffs[shift]
    return c / lead


def splitting_type(transition: FieldMatrix) -> SplittingType:
    """Splitting degrees of the bundle glued by a transition matrix.

    The transition expresses the finite-chart frame in the infinity-chart
    frame; the line bundle of degree a has transition t^(-a). Solves the
    exact section-counting systems h0(m) over a certified window and inverts
    h0(m) = sum max(a_i + m + 1, 0). Inputs must be invertible away from
    t = 0: the determinant has to be a nonzero monomial.
    """
    d = transition.nrows
    if d != transition.ncols:
        raise ValueError("transition must be square")
    t_mat = transition.map(lambda v: v if isinstance(v, RatFunc) else RatFunc(v), RatFunc)
    det = t_mat.det()
    det_terms = [(e, c) for e, c in enumerate(det.num.coeffs) if c]
    if len(det_terms) != 1:
        raise ValueError("transition is not invertible for all t != 0 (det is not a monomial)")
    det_exp = det_terms[0][0] - det.den.degree
    inv = t_mat.inverse()
    lo1, hi1 = _laurent_range(t_mat)
    lo2, hi2 = _laurent_range(inv)
    spread = (hi1 - lo1) + (hi2 - lo2)
    window = max(spread, abs(det_exp), 1) + 1

    h0 = {}
    for m in range(-window - 2, window + 1):
        h0[m] = _section_count(t_mat, m, spread, lo1, hi1)
    # N(c) = #{a_i >= c} = h0(-c) - h0(-c - 1); multiplicities are N(c) - N(c+1)
    n_of = {c: h0[-c] - h0[-c - 1] for c in range(-window, window + 2)}
    degrees = []
    for c in range(window, -window - 1, -1):
        mult = n_of[c] - (n_of[c + 1] if c + 1 in n_of else 0)
        if mult < 0:
            raise ArithmeticError("section profile is not monotone; window too small")
        degrees.extend([c] * mult)
    st = SplittingType(degrees)
    if st.rank != d:
        raise ArithmeticError("section profile does not resolve the full rank; window too small")
    if st.total_degree != -det_exp:
        raise ArithmeticError("splitting degrees disagree with the determinant exponent")
    for m, value in h0.items():
        if st.h0(m) != value:
            raise ArithmeticError(f"section count at twist {m} is inconsistent with the splitting")
    return st


def _section_count(t_mat: FieldMatrix, m: int, spread: int, lo: int, hi: int) -> int:
    """dim of {polynomial vectors f, deg <= D : t^(-m) T f has no positive powers}."""
    d = t_mat.nrows
    big_d = spread + abs(m) + 1
    ncols = d * (big_d + 1)
    top = hi + big_d - m
    if top < 1:
        return ncols
    rows = []
    for j in range(1, top + 1):
        for i in range(d):
            row = [GaussianRational(0)] * ncols
            hit = False
            for col in range(d):
                v = t_mat[i, col]
                if not v:
                    continue
                for deg in range(big_d + 1):
                    e = j + m - deg
                    if lo <= e <= hi:
                        c = _laurent_coeff(v, e)
                        if c:
                            row[col * (big_d + 1) + deg] = c
                            hit = True
            if hit:
                rows.append(tuple(row))
    if not rows:
        return ncols
    return ncols - FieldMatrix(rows, GaussianRational).rank()


def model_transition(model: MatPolyModel) -> FieldMatrix:
    """diag(t^{k_i}): the gluing matrix of the model's direct-image bundle."""
    return FieldMatrix.diagonal([RatFunc(UniPoly.monomial(k)) for k in model.k], RatFunc)


def splitting_from_exponents(k) -> SplittingType:
    return SplittingType([-v for v in k])


def genus_from_splitting(st: SplittingType) -> tuple[int, int]:
    """(degree of the projection, arithmetic genus) from the direct image."""
    zeros = sum(1 for a in st.degrees if a == 0)
    if zeros != 1 or any(a > 0 for a in st.degrees):
        raise ValueError("expected exactly one trivial summand and the rest negative")
    d = st.rank
    g = -st.total_degree - d + 1
    return d, g


# -- cohomological stability arithmetic --------------------------------------


def cohomological_obstruction(multiset) -> dict:
    """The three section counts (a, b, c) of a split direct image and 2c-a-b.

    a = sum_{j >= i+2} (j-i-1) m_i m_j + sum_{i >= 2} (i-1) m_i
    b = sum_{j >= i} (j-i+1) m_i m_j
    c = sum_{j >= i+1} (j-i) m_i m_j + sum_i i m_i
    A curve whose direct image realizes the multiset cannot be
    cohomologically stable when 2c - a - b > 0; the closed form
    2c - a - b = sum (i+1) m_i - sum m_i^2 is checked exactly.
    """
    ms = multiset if isinstance(multiset, SplitMultiset) else SplitMultiset(multiset)
    items = ms.items()
    a = sum((j - i - 1) * mi * mj for i, mi in items for j, mj in items if j >= i + 2)
    a += sum((i - 1) * mi for i, mi in items if i >= 2)
    b = sum((j - i + 1) * mi * mj for i, mi in items for j, mj in items if j >= i)
    c = sum((j - i) * mi * mj for i, mi in items for j, mj in items if j >= i + 1)
    c += sum(i * mi for i, mi in items)
    obstruction = 2 * c - a - b
    closed_form = sum((i + 1) * mi for i, mi in items) - sum(mi * mi for _, mi in items)
    if obstruction != closed_form:
        raise ArithmeticError("the two expressions for 2c - a - b disagree")
    return {
        "a": a,
        "b": b,
        "c": c,
        "obstruction": obstruction,
        "stable_possible": obstruction <= 0,
    }


# -- projections --------------------------------------------------------------


def project_model(model: MatPolyModel, r_new: int) -> tuple:
    """Drop the matrices beyond ambient dimension r_new and re-verify.

    Returns (model or None, report). The splitting exponents are kept: a
    projection that is injective on the curve does not change the direct
    image.
    """
    if r_new < 3:
        raise ValueError("target ambient dimension must be at least 3")
    if r_new > model.r:
        raise ValueError("cannot project to a larger ambient space")
    projected = MatPolyModel(model.d, r_new, model.k, model.mats[: r_new - 1])
    report = verify_model(projected)
    if not report["pass"]:
        return None, report
    return projected, report


# -- transitions between explicit fiber bases ---------------------------------


def ratfunc_invert_var(v: RatFunc) -> RatFunc:
    """Substitute t -> 1/s: p(1/s)/q(1/s) as a rational function of s."""
    p, q = v.num, v.den
    if p.is_zero():
        return RatFunc(0)
    rp = UniPoly(tuple(reversed(p.coeffs)))
    rq = UniPoly(tuple(reversed(q.coeffs)))
    shift = q.degree - p.degree
    if shift >= 0:
        return RatFunc(rp.shift(shift), rq)
    return RatFunc(rp, rq.shift(-shift))


def ideal_at_infinity(ci: CurveIdeal) -> list[MultiPoly]:
    """Generators in the chart at infinity: x -> x'/s, t -> 1/s, cleared.

    The primed coordinates x'_i = x_i / t are the affine coordinates of the
    chart where s = 1/t is finite.
    """
    out = []
    for g in ci.gens:
        mdeg = max(sum(e) for e in g.terms)
        terms = {}
        for e, c in g.terms.items():
            c_s = ratfunc_invert_var(c if isinstance(c, RatFunc) else RatFunc(c))
            scale = RatFunc(UniPoly.monomial(mdeg - sum(e)))
            terms[e] = c_s * scale
        out.append(MultiPoly(g.nvars, terms, RatFunc))
    return out


def basis_transition(ci: CurveIdeal, t_basis, s_basis) -> FieldMatrix:
    """Transition matrix expressing given t-chart basis in a given s-chart basis.

    t_basis: exponent tuples (monomials in the unprimed coordinates);
    s_basis: MultiPoly in the primed coordinates with Q(i)(s) coefficients.
    Entry (i, j): coefficient of s_basis[i] in the function t_basis[j],
    written as a Laurent element of Q(i)(t). Fails when a coordinate is not
    Laurent (denominator with roots away from the origin: a genuine basis
    breakdown on the overlap).
    """
    gens_inf = ideal_at_infinity(ci)
    gb = buchberger(gens_inf)
    std = standard_monomials(gb)
    d = len(std)
    if len(t_basis) != d or len(s_basis) != d:
        raise ValueError("bases must match the fiber length")
    index = {e: i for i, e in enumerate(std)}

    def coords(p: MultiPoly):
        nf = normal_form(p, gb)
        col = [RatFunc(0)] * d
        for e, c in nf.terms.items():
            if e not in index:
                raise ArithmeticError("normal form escaped the standard basis")
            col[index[e]] = c
        return col

    c_mat = FieldMatrix.from_columns([coords(p) for p in s_basis], RatFunc)
    c_inv = c_mat.inverse()
    cols = []
    for e in t_basis:
        # x^e = s^{-|e|} x'^e as a function on the overlap
        total = sum(e)
        image = MultiPoly(ci.r - 1, {tuple(e): RatFunc(1) / RatFunc(UniPoly.monomial(total))}, RatFunc)
        cols.append(c_inv.apply(coords(image)))
    rows = []
    for i in range(d):
        row = []
        for j in range(d):
            v = cols[j][i]
            den_terms = [(k, c) for k, c in enumerate(v.den.coeffs) if c]
            if len(den_terms) > 1:
                raise ValueError("transition coordinate is not Laurent; bases do not glue")
            row.append(_s_laurent_to_t(v))
        rows.append(row)
    return FieldMatrix(rows, RatFunc)


def _s_laurent_to_t(v: RatFunc) -> RatFunc:
    """Rewrite a Laurent function of s as a Laurent function of t = 1/s."""
    if not v:
        return RatFunc(0)
    shift = v.den.degree
    lead = v.den.coeffs[shift]
    coeffs = {e - shift: c / lead for e, c in enumerate(v.num.coeffs) if c}
    hi = max(coeffs)
    den_pow = max(hi, 0)
    num = [GaussianRational(0)] * (den_pow - min(coeffs) + 1)
    for e, c in coeffs.items():
        num[den_pow - e] = c
    return RatFunc(UniPoly(num), UniPoly.monomial(den_pow))
