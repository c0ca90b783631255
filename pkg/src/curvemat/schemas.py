"""Pydantic request/response models for the verification service."""

from __future__ import annotations

from typing import Any, Optional

from pydantic import BaseModel, Field


class PointsRequest(BaseModel):
    points: list[list[Any]]
    normalize: bool = False
    seed: Optional[int] = None


class IdealRequest(BaseModel):
    nvars: int = Field(ge=1)
    gens: list[Any]
    seed: Optional[int] = None


class PairRequest(BaseModel):
    A: list[list[Any]]
    B: list[list[Any]]
    k: Optional[list[int]] = None
    seed: Optional[int] = None


class CurveRequest(BaseModel):
    r: int = Field(ge=2)
    gens: list[Any]
    seed: Optional[int] = None


class ModelRequest(BaseModel):
    d: int = Field(ge=1)
    r: int = Field(ge=2)
    k: list[int]
    mats: list[Any]
    seed: Optional[int] = None


class TransitionRequest(BaseModel):
    transition: list[list[Any]]
    seed: Optional[int] = None


class ObstructionRequest(BaseModel):
    m: dict[str, int]
    seed: Optional[int] = None


class MPointRequest(BaseModel):
    d: int = Field(ge=3)
    X0: list[list[Any]]
    X1: list[list[Any]]
    Y0: list[list[Any]]
    Y1: list[list[Any]]
    seed: Optional[int] = None


class SignatureRequest(BaseModel):
    d: int = Field(ge=3)
    seed: Optional[int] = None


class TwistedCubicRequest(BaseModel):
    a: Optional[list[Any]] = None
    seed: Optional[int] = None


class FixturesRequest(BaseModel):
    seed: Optional[int] = None


class CheckResult(BaseModel):
    check: str
    passed: bool = Field(alias="pass")
    witness: Any = None

    model_config = {"populate_by_name": True}


class Report(BaseModel):
    schema_version: str = Field(alias="schema", default="curvemat.report/1")
    command: str
    ok: bool
    checks: list[CheckResult] = []
    result: Any = None
    error: Optional[str] = None
    seed: Optional[int] = None
    timing_ms: Optional[float] = None

    model_config = {"populate_by_name": True}
