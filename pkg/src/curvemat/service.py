"""The verification service: one handler per command, exposed over HTTP.

Handlers are plain functions from JSON payloads to report dictionaries; the
FastAPI routes and the command line dispatch to the same registry, so both
fronts stay byte-compatible.
"""

from __future__ import annotations

import time

from fastapi import FastAPI, HTTPException

from . import fixtures as fx
from . import schemas
from .curves import (
    cohomological_obstruction,
    fiber_algebra,
    genus_from_splitting,
    model_transition,
    project_model,
    splitting_from_exponents,
    splitting_type,
    verify_model,
    verify_polynomial_pair,
    basis_transition,
)
from .linalg import commutator
from .moduli import (
    classify_point,
    lemma_conditions,
    md_check,
    moment,
    real_signature,
    twisted_cubic_model,
    twisted_cubic_mpoint,
    twisted_cubic_real_signature,
)
from .points import algebra_dim, centralizer_dim, cyclic_vector, line_test, mult_matrices_from_ideal, mult_matrices_from_points
from .serialization import (
    InputError,
    decode_comm_pair,
    decode_curve_ideal,
    decode_model,
    decode_mpoint,
    decode_multipoly,
    decode_poly,
    decode_poly_matrix,
    decode_scalar,
    decode_split_multiset,
    decode_transition,
    encode_comm_pair,
    encode_matrix,
    encode_model,
    encode_poly,
    encode_signature,
    encode_splitting,
)

SCHEMA_TAG = "curvemat.report/1"


def _report(command, ok, checks=None, result=None, error=None, seed=None, timing_ms=None):
    return {
        "schema": SCHEMA_TAG,
        "command": command,
        "ok": bool(ok),
        "checks": checks or [],
        "result": result,
        "error": error,
        "seed": seed,
        "timing_ms": timing_ms,
    }


def _passforward(report):
    return report["pass"], report["checks"]


# -- handlers ------------------------------------------------------------------


def points2mat(payload: dict) -> dict:
    pts = payload.get("points")
    if not isinstance(pts, list) or any(not isinstance(p, (list, tuple)) or len(p) != 2 for p in pts):
        raise InputError("$.points", "expected a list of [x, y] pairs")
    decoded = [
        (decode_scalar(p[0], f"$.points[{i}][0]"), decode_scalar(p[1], f"$.points[{i}][1]"))
        for i, p in enumerate(pts)
    ]
    pair = mult_matrices_from_points(decoded, normalize=bool(payload.get("normalize", False)))
    checks = [
        {"check": "commuting", "pass": pair.commutes()},
        {"check": "full-algebra", "pass": algebra_dim(pair) == pair.n},
    ]
    return {
        "ok": all(c["pass"] for c in checks),
        "checks": checks,
        "result": {"pair": encode_comm_pair(pair), "line_test": line_test(pair)},
    }


def ideal2mat(payload: dict) -> dict:
    nvars = payload.get("nvars")
    if not isinstance(nvars, int) or nvars < 1:
        raise InputError("$.nvars", "expected a positive integer")
    gens = [
        decode_multipoly(g, nvars, f"$.gens[{i}]") for i, g in enumerate(payload.get("gens", []))
    ]
    if not gens:
        raise InputError("$.gens", "need at least one generator")
    mats = mult_matrices_from_ideal(gens)
    n = mats[0].nrows
    checks = [{"check": "zero-dimensional", "pass": True, "witness": {"length": n}}]
    return {
        "ok": True,
        "checks": checks,
        "result": {"length": n, "matrices": [encode_matrix(m) for m in mats]},
    }


def verify_pair(payload: dict) -> dict:
    a = decode_poly_matrix(payload.get("A"), "$.A")
    b = decode_poly_matrix(payload.get("B"), "$.B")
    k = payload.get("k")
    report = verify_polynomial_pair(a, b, k=tuple(k) if k else None)
    out = {"ok": report["pass"], "checks": report["checks"], "result": {}}
    if "inferred_k" in report:
        out["result"]["inferred_k"] = report["inferred_k"]
    constant = all(p.degree <= 0 for m in (a, b) for _, _, p in m.iter_nonzero())
    if constant:
        pair = decode_comm_pair(
            {"A": [[_const(p) for p in row] for row in a.rows],
             "B": [[_const(p) for p in row] for row in b.rows]}
        )
        if pair.commutes():
            out["result"]["algebra_dim"] = algebra_dim(pair)
            out["result"]["centralizer_dim"] = centralizer_dim(pair)
            out["result"]["line_test"] = line_test(pair)
            out["result"]["cyclic_vector_exists"] = cyclic_vector(pair) is not None
    return out


def _const(p):
    c = p.coeff(0)
    return {"re": f"{c.re.numerator}/{c.re.denominator}", "im": f"{c.im.numerator}/{c.im.denominator}"}


def curve2mat(payload: dict) -> dict:
    ci = decode_curve_ideal(payload, "$")
    res = fiber_algebra(ci)
    out = {"ok": res.ok, "checks": list(res.checks), "result": {
        "standard_monomials": [list(e) for e in res.std_monomials],
    }}
    if res.model is not None:
        out["result"]["model"] = encode_model(res.model)
        report = verify_model(res.model)
        out["checks"] += report["checks"]
        out["ok"] = out["ok"] and report["pass"]
    return out


def verify_model_cmd(payload: dict) -> dict:
    model = decode_model(payload, "$")
    report = verify_model(model)
    return {"ok": report["pass"], "checks": report["checks"], "result": {"k": list(model.k)}}


def splitting(payload: dict) -> dict:
    if "transition" not in payload:
        raise InputError("$.transition", "missing required field")
    tr = decode_transition(payload["transition"], "$.transition")
    st = splitting_type(tr)
    result = encode_splitting(st)
    try:
        d, g = genus_from_splitting(st)
        result["degree"] = d
        result["genus"] = g
    except ValueError:
        pass
    return {"ok": True, "checks": [], "result": result}


def obstruction(payload: dict) -> dict:
    ms = decode_split_multiset(payload.get("m", {}), "$.m")
    rep = cohomological_obstruction(ms)
    return {"ok": True, "checks": [], "result": rep}


def moment_cmd(payload: dict) -> dict:
    p = decode_mpoint(payload, "$")
    mv = moment(p)
    zero = mv.is_zero()
    agree = zero == lemma_conditions(p)
    components = {}
    for name, (mat, vec) in mv.components().items():
        components[name] = {
            "matrix": encode_matrix(mat),
            "translation": [encode_poly(q) for q in vec],
        }
    return {
        "ok": agree,
        "checks": [{"check": "pencil-characterization-agrees", "pass": agree}],
        "result": {"zero": zero, "components": components},
    }


def md_check_cmd(payload: dict) -> dict:
    p = decode_mpoint(payload, "$")
    report = md_check(p)
    return {"ok": report["pass"], "checks": report["checks"], "result": None}


def classify(payload: dict) -> dict:
    p = decode_mpoint(payload, "$")
    rep = classify_point(p)
    checks = [
        {"check": "smooth", "pass": rep["smooth"]},
        {"check": "nondegenerate", "pass": rep["nondegenerate"]},
    ]
    return {"ok": all(c["pass"] for c in checks), "checks": checks, "result": rep}


def signature(payload: dict) -> dict:
    d = payload.get("d")
    if not isinstance(d, int) or d < 3:
        raise InputError("$.d", "expected an integer degree >= 3")
    rep = real_signature(d)
    checks = [
        {"check": "no-null-directions", "pass": rep.zero == 0},
        {"check": "full-dimension", "pass": rep.dimension == 4 * (d - 1) ** 2 - 4},
    ]
    return {"ok": all(c["pass"] for c in checks), "checks": checks, "result": encode_signature(rep)}


def twisted_cubic(payload: dict) -> dict:
    a_raw = payload.get("a")
    if a_raw is None:
        params = fx.twisted_cubic_params()
    else:
        if not isinstance(a_raw, list) or len(a_raw) != 6:
            raise InputError("$.a", "expected six linear polynomials")
        params = tuple(decode_poly(p, f"$.a[{i}]") for i, p in enumerate(a_raw))
        for i, p in enumerate(params):
            if p.degree > 1:
                raise InputError(f"$.a[{i}]", "parameters must be linear in t")
    am, bm = twisted_cubic_model(params)
    commutes = commutator(am, bm).is_zero()
    membership = md_check(twisted_cubic_mpoint(params))
    rep = twisted_cubic_real_signature()
    checks = [
        {"check": "commutation", "pass": commutes},
        {"check": "model-membership", "pass": membership["pass"]},
        {"check": "real-signature-8-4", "pass": rep == (8, 4, 0)},
    ]
    return {
        "ok": all(c["pass"] for c in checks),
        "checks": checks,
        "result": {
            "A": encode_matrix(am, encode_poly),
            "B": encode_matrix(bm, encode_poly),
            "sigma_signature": encode_signature(rep),
        },
    }


def fixtures_cmd(payload: dict) -> dict:
    checks = []

    quartic = fx.quartic_model()
    checks.append({"check": "quartic-model-verifies", "pass": verify_model(quartic)["pass"]})
    res_p4 = fiber_algebra(fx.quartic_p4_ideal())
    projected, proj_report = project_model(res_p4.model, 3) if res_p4.ok else (None, {"pass": False})
    checks.append({
        "check": "quartic-lift-projects-to-displayed-pair",
        "pass": bool(res_p4.ok and proj_report["pass"] and projected.mats == quartic.mats),
    })

    res_canon = fiber_algebra(fx.canonical_quartic_ideal())
    canon_ok = res_canon.ok and project_model(res_canon.model, 3)[1]["pass"]
    checks.append({"check": "canonical-quartic-projects", "pass": bool(canon_ok)})

    res_quadric = fiber_algebra(fx.quadric_intersection_ideal())
    quadric_ok = bool(res_quadric.ok)
    st = None
    if quadric_ok:
        tr = basis_transition(fx.quadric_intersection_ideal(), list(res_quadric.std_monomials), fx.quadric_s_basis())
        st = splitting_type(tr)
        quadric_ok = st == (0, -1, -1, -2) and genus_from_splitting(st) == (4, 1)
        quadric_ok = quadric_ok and splitting_type(model_transition(res_quadric.model)) == splitting_from_exponents(res_quadric.model.k)
    checks.append({"check": "quadric-splitting-0-1-1-2-genus-1", "pass": quadric_ok})
    obs = cohomological_obstruction({1: 2, 2: 1})
    checks.append({
        "check": "quadric-obstruction-positive",
        "pass": obs["a"] == 1 and obs["b"] == 9 and obs["c"] == 6 and not obs["stable_possible"],
    })

    checks.append({"check": "cubic-family-signature-8-4", "pass": twisted_cubic_real_signature() == (8, 4, 0)})
    checks.append({"check": "real-signature-d3", "pass": real_signature(3) == (8, 4, 0)})
    checks.append({"check": "real-signature-d5", "pass": real_signature(5) == (36, 24, 0)})

    return {"ok": all(c["pass"] for c in checks), "checks": checks, "result": None}


HANDLERS = {
    "points2mat": points2mat,
    "ideal2mat": ideal2mat,
    "verify-pair": verify_pair,
    "curve2mat": curve2mat,
    "verify-model": verify_model_cmd,
    "splitting": splitting,
    "obstruction": obstruction,
    "moment": moment_cmd,
    "md-check": md_check_cmd,
    "classify": classify,
    "signature": signature,
    "twisted-cubic": twisted_cubic,
    "fixtures": fixtures_cmd,
}


def run_command(command: str, payload: dict, seed: int | None = None, timing: bool = False) -> dict:
    """Dispatch to a handler and wrap the outcome in the report envelope.

    Domain failures (a verification that fails, a rejected value) come back
    as ok=False reports; malformed input raises InputError.
    """
    if command not in HANDLERS:
        raise InputError("$.command", f"unknown command {command!r}")
    if not isinstance(payload, dict):
        raise InputError("$", "payload must be an object")
    start = time.monotonic()
    try:
        body = HANDLERS[command](payload)
    except InputError:
        raise
    except (ValueError, ArithmeticError, ZeroDivisionError) as exc:
        body = {"ok": False, "checks": [], "result": None, "error": str(exc)}
    elapsed = (time.monotonic() - start) * 1000.0 if timing else None
    return _report(
        command,
        body["ok"],
        checks=body.get("checks"),
        result=body.get("result"),
        error=body.get("error"),
        seed=seed,
        timing_ms=elapsed,
    )


# -- HTTP front ----------------------------------------------------------------

app = FastAPI(
    title="curvemat",
    description="Exact verification of curve / commuting-matrix models, splitting types and real signatures.",
)


def _route(command: str, payload: dict, timing: bool = False):
    seed = payload.pop("seed", None) if isinstance(payload, dict) else None
    try:
        return run_command(command, payload, seed=seed, timing=timing)
    except InputError as exc:
        raise HTTPException(status_code=422, detail={"path": exc.path, "message": exc.message})


@app.get("/health")
def health():
    return {"status": "ok", "schema": SCHEMA_TAG}


@app.get("/commands")
def commands():
    return {"commands": sorted(HANDLERS)}


@app.post("/points2mat", response_model=schemas.Report, response_model_by_alias=True)
def points2mat_route(req: schemas.PointsRequest, timing: bool = False):
    return _route("points2mat", req.model_dump(exclude_none=True), timing)


@app.post("/ideal2mat", response_model=schemas.Report, response_model_by_alias=True)
def ideal2mat_route(req: schemas.IdealRequest, timing: bool = False):
    return _route("ideal2mat", req.model_dump(exclude_none=True), timing)


@app.post("/verify-pair", response_model=schemas.Report, response_model_by_alias=True)
def verify_pair_route(req: schemas.PairRequest, timing: bool = False):
    return _route("verify-pair", req.model_dump(exclude_none=True), timing)


@app.post("/curve2mat", response_model=schemas.Report, response_model_by_alias=True)
def curve2mat_route(req: schemas.CurveRequest, timing: bool = False):
    return _route("curve2mat", req.model_dump(exclude_none=True), timing)


@app.post("/verify-model", response_model=schemas.Report, response_model_by_alias=True)
def verify_model_route(req: schemas.ModelRequest, timing: bool = False):
    return _route("verify-model", req.model_dump(exclude_none=True), timing)


@app.post("/splitting", response_model=schemas.Report, response_model_by_alias=True)
def splitting_route(req: schemas.TransitionRequest, timing: bool = False):
    return _route("splitting", req.model_dump(exclude_none=True), timing)


@app.post("/obstruction", response_model=schemas.Report, response_model_by_alias=True)
def obstruction_route(req: schemas.ObstructionRequest, timing: bool = False):
    return _route("obstruction", req.model_dump(exclude_none=True), timing)


@app.post("/moment", response_model=schemas.Report, response_model_by_alias=True)
def moment_route(req: schemas.MPointRequest, timing: bool = False):
    return _route("moment", req.model_dump(exclude_none=True), timing)


@app.post("/md-check", response_model=schemas.Report, response_model_by_alias=True)
def md_check_route(req: schemas.MPointRequest, timing: bool = False):
    return _route("md-check", req.model_dump(exclude_none=True), timing)


@app.post("/classify", response_model=schemas.Report, response_model_by_alias=True)
def classify_route(req: schemas.MPointRequest, timing: bool = False):
    return _route("classify", req.model_dump(exclude_none=True), timing)


@app.post("/signature", response_model=schemas.Report, response_model_by_alias=True)
def signature_route(req: schemas.SignatureRequest, timing: bool = False):
    return _route("signature", req.model_dump(exclude_none=True), timing)


@app.post("/twisted-cubic", response_model=schemas.Report, response_model_by_alias=True)
def twisted_cubic_route(req: schemas.TwistedCubicRequest, timing: bool = False):
    return _route("twisted-cubic", req.model_dump(exclude_none=True), timing)


@app.post("/fixtures", response_model=schemas.Report, response_model_by_alias=True)
def fixtures_route(req: schemas.FixturesRequest, timing: bool = False):
    return _route("fixtures", req.model_dump(exclude_none=True), timing)
