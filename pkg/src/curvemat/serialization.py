"""JSON encoding of every exchanged value.

Scalars are strings in lowest terms ("p/q"); polynomials are coefficient
arrays, lowest power first; matrices are row-major nested arrays. Decoding
errors carry the JSON path of the offending element.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import GaussianRational
from .unipoly import UniPoly, RatFunc
from .linalg import FieldMatrix, SignatureReport
from .multipoly import MultiPoly
from .points import ADHMData, CommPair
from .curves import CurveIdeal, MatPolyModel, SplitMultiset, SplittingType
from .moduli import GroupElem, MPoint


class InputError(ValueError):
    """Malformed input; `path` points at the offending JSON element."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.message = message


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def encode_scalar(z: GaussianRational) -> dict:
    return {"re": _frac_str(z.re), "im": _frac_str(z.im)}


def decode_scalar(obj, path: str = "$") -> GaussianRational:
    if isinstance(obj, bool):
        raise InputError(path, "expected a scalar, got a boolean")
    if isinstance(obj, int):
        return GaussianRational(obj)
    if isinstance(obj, str):
        try:
            return GaussianRational(Fraction(obj))
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(path, f"bad rational literal {obj!r}: {exc}") from None
    if isinstance(obj, dict):
        try:
            re = Fraction(obj.get("re", 0))
            im = Fraction(obj.get("im", 0))
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise InputError(path, f"bad scalar object: {exc}") from None
        return GaussianRational(re, im)
    raise InputError(path, f"cannot read a scalar from {type(obj).__name__}")


def encode_poly(p: UniPoly) -> list:
    return [encode_scalar(c) for c in p.coeffs]


def decode_poly(obj, path: str = "$") -> UniPoly:
    if isinstance(obj, (int, str, dict)):
        return UniPoly((decode_scalar(obj, path),))
    if not isinstance(obj, list):
        raise InputError(path, "expected a coefficient array")
    return UniPoly(tuple(decode_scalar(c, f"{path}[{i}]") for i, c in enumerate(obj)))


def encode_ratfunc(v: RatFunc) -> dict:
    return {"num": encode_poly(v.num), "den": encode_poly(v.den)}


def decode_ratfunc(obj, path: str = "$") -> RatFunc:
    if isinstance(obj, dict) and ("num" in obj or "den" in obj):
        num = decode_poly(obj.get("num", []), f"{path}.num")
        den = decode_poly(obj.get("den", [1]), f"{path}.den")
        if den.is_zero():
            raise InputError(f"{path}.den", "zero denominator")
        return RatFunc(num, den)
    return RatFunc(decode_poly(obj, path))


def encode_matrix(m: FieldMatrix, entry=encode_scalar) -> list:
    return [[entry(v) for v in row] for row in m.rows]


def decode_matrix(obj, path: str = "$", entry=decode_scalar, field=GaussianRational) -> FieldMatrix:
    if not isinstance(obj, list) or not obj or not all(isinstance(r, list) for r in obj):
        raise InputError(path, "expected a nested array (row-major matrix)")
    width = len(obj[0])
    rows = []
    for i, r in enumerate(obj):
        if len(r) != width:
            raise InputError(f"{path}[{i}]", "ragged matrix rows")
        rows.append([entry(v, f"{path}[{i}][{j}]") for j, v in enumerate(r)])
    return FieldMatrix(rows, field)


def decode_poly_matrix(obj, path: str = "$") -> FieldMatrix:
    return decode_matrix(obj, path, entry=decode_poly, field=UniPoly)


def encode_multipoly(p: MultiPoly) -> list:
    out = []
    for e in sorted(p.terms, key=lambda e: (sum(e), e)):
        c = p.terms[e]
        coeff = encode_ratfunc(c) if isinstance(c, RatFunc) else encode_scalar(c)
        out.append({"exps": list(e), "coeff": coeff})
    return out


def decode_multipoly(obj, nvars: int, path: str = "$", field=GaussianRational) -> MultiPoly:
    if not isinstance(obj, list):
        raise InputError(path, "expected a term list")
    terms = {}
    for i, term in enumerate(obj):
        if not isinstance(term, dict) or "exps" not in term or "coeff" not in term:
            raise InputError(f"{path}[{i}]", "terms need 'exps' and 'coeff'")
        exps = term["exps"]
        if not isinstance(exps, list) or len(exps) != nvars or any(
            not isinstance(e, int) or e < 0 for e in exps
        ):
            raise InputError(f"{path}[{i}].exps", f"expected {nvars} nonnegative exponents")
        if field is RatFunc:
            coeff = decode_ratfunc(term["coeff"], f"{path}[{i}].coeff")
        else:
            coeff = decode_scalar(term["coeff"], f"{path}[{i}].coeff")
        key = tuple(exps)
        terms[key] = terms.get(key, field(0)) + coeff
    return MultiPoly(nvars, terms, field)


# -- composite objects ---------------------------------------------------------


def encode_comm_pair(pair: CommPair) -> dict:
    return {"n": pair.n, "A": encode_matrix(pair.a), "B": encode_matrix(pair.b)}


def decode_comm_pair(obj, path: str = "$") -> CommPair:
    _need_keys(obj, ("A", "B"), path)
    a = decode_matrix(obj["A"], f"{path}.A")
    b = decode_matrix(obj["B"], f"{path}.B")
    if "n" in obj and obj["n"] != a.nrows:
        raise InputError(f"{path}.n", "declared size disagrees with the matrices")
    try:
        return CommPair(a, b)
    except ValueError as exc:
        raise InputError(path, str(exc)) from None


def encode_adhm(data: ADHMData) -> dict:
    return {
        "k": data.k,
        "X": encode_matrix(data.x),
        "Y": encode_matrix(data.y),
        "i": encode_matrix(data.i),
        "j": encode_matrix(data.j),
    }


def decode_adhm(obj, path: str = "$") -> ADHMData:
    _need_keys(obj, ("X", "Y", "i", "j"), path)
    try:
        return ADHMData(
            decode_matrix(obj["X"], f"{path}.X"),
            decode_matrix(obj["Y"], f"{path}.Y"),
            decode_matrix(obj["i"], f"{path}.i"),
            decode_matrix(obj["j"], f"{path}.j"),
        )
    except ValueError as exc:
        raise InputError(path, str(exc)) from None


def encode_model(model: MatPolyModel) -> dict:
    return {
        "d": model.d,
        "r": model.r,
        "k": list(model.k),
        "mats": [encode_matrix(m, encode_poly) for m in model.mats],
    }


def decode_model(obj, path: str = "$") -> MatPolyModel:
    _need_keys(obj, ("d", "r", "k", "mats"), path)
    mats = [decode_poly_matrix(m, f"{path}.mats[{i}]") for i, m in enumerate(obj["mats"])]
    try:
        return MatPolyModel(obj["d"], obj["r"], obj["k"], mats)
    except (ValueError, TypeError) as exc:
        raise InputError(path, str(exc)) from None


def encode_curve_ideal(ci: CurveIdeal) -> dict:
    return {"r": ci.r, "gens": [encode_multipoly(g) for g in ci.gens]}


def decode_curve_ideal(obj, path: str = "$") -> CurveIdeal:
    _need_keys(obj, ("r", "gens"), path)
    r = obj["r"]
    if not isinstance(r, int) or r < 2:
        raise InputError(f"{path}.r", "ambient dimension must be an integer >= 2")
    gens = [
        decode_multipoly(g, r - 1, f"{path}.gens[{i}]", RatFunc) for i, g in enumerate(obj["gens"])
    ]
    try:
        return CurveIdeal(r, gens)
    except ValueError as exc:
        raise InputError(path, str(exc)) from None


def encode_mpoint(p: MPoint) -> dict:
    return {
        "d": p.d,
        "X0": encode_matrix(p.x0),
        "X1": encode_matrix(p.x1),
        "Y0": encode_matrix(p.y0),
        "Y1": encode_matrix(p.y1),
    }


def decode_mpoint(obj, path: str = "$") -> MPoint:
    _need_keys(obj, ("d", "X0", "X1", "Y0", "Y1"), path)
    try:
        return MPoint(
            obj["d"],
            decode_matrix(obj["X0"], f"{path}.X0"),
            decode_matrix(obj["X1"], f"{path}.X1"),
            decode_matrix(obj["Y0"], f"{path}.Y0"),
            decode_matrix(obj["Y1"], f"{path}.Y1"),
        )
    except (ValueError, TypeError) as exc:
        raise InputError(path, str(exc)) from None


def encode_group_elem(g: GroupElem) -> dict:
    return {"g0": encode_matrix(g.g0), "u": [encode_poly(p) for p in g.u]}


def decode_group_elem(obj, d: int, path: str = "$") -> GroupElem:
    _need_keys(obj, ("g0",), path)
    g0 = decode_matrix(obj["g0"], f"{path}.g0")
    u = [decode_poly(p, f"{path}.u[{i}]") for i, p in enumerate(obj.get("u", []))]
    try:
        return GroupElem(d, g0, u)
    except ValueError as exc:
        raise InputError(path, str(exc)) from None


def encode_signature(rep: SignatureReport) -> dict:
    return {"positive": rep.positive, "negative": rep.negative, "zero": rep.zero}


def encode_splitting(st: SplittingType) -> dict:
    return {"type": list(st.degrees)}


def decode_split_multiset(obj, path: str = "$") -> SplitMultiset:
    if not isinstance(obj, dict):
        raise InputError(path, "expected an object of multiplicities {i: m_i}")
    try:
        return SplitMultiset({int(k): int(v) for k, v in obj.items()})
    except (ValueError, TypeError) as exc:
        raise InputError(path, f"bad multiplicity table: {exc}") from None


def decode_transition(obj, path: str = "$") -> FieldMatrix:
    return decode_matrix(obj, path, entry=decode_ratfunc, field=RatFunc)


def _need_keys(obj, keys, path: str):
    if not isinstance(obj, dict):
        raise InputError(path, "expected an object")
    for k in keys:
        if k not in obj:
            raise InputError(f"{path}.{k}", "missing required field")
