# -*- coding: utf-8 -*-
from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, BeforeValidator, ConfigDict, Field, model_validator
from typing_extensions import Annotated


# 유리수는 항상 문자열 ("3/2", "inf")
Rational = Annotated[str, BeforeValidator(lambda v: str(v))]
OutputFormat = Literal["json", "csv", "dot"]


class EdgeItem(BaseModel):
    u: str
    v: str
    sigma: Rational
    key: Optional[str] = None


class ComplexFile(BaseModel):
    vertices: List[str]
    edges: List[EdgeItem]


class ContactItem(BaseModel):
    first: int = Field(ge=1)
    second: int = Field(ge=1)
    orders: List[Rational] = Field(min_length=1)


class SnakeFile(BaseModel):
    beta: Rational
    word: List[str] = Field(min_length=1)
    spectra: Dict[str, List[Rational]]
    segment_contacts: List[ContactItem] = []


class ZoneItem(BaseModel):
    kind: Literal["nodal", "segment"]
    span: List[int] = Field(min_length=2, max_length=2)
    name: str
    node: Optional[str] = None


class ModelFile(BaseModel):
    beta: Rational
    arcs: List[str] = Field(min_length=1)
    matrix: List[List[Rational]]
    closed: bool = False
    edge_exponents: Optional[List[Rational]] = None
    zones: List[ZoneItem] = []
    assumptions: List[str] = []


class TermItem(BaseModel):
    axis: int = Field(ge=1)
    coeff: Rational
    exp: Rational


class ArcItem(BaseModel):
    name: str
    terms: List[TermItem]


class ArcFile(BaseModel):
    beta: Rational
    arcs: List[ArcItem] = Field(min_length=1)
    closed: bool = False
    dimension: Optional[int] = None
    zones: List[ZoneItem] = []


class ProfileInterval(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    lo: Rational = Field(alias="from")
    hi: Rational = Field(alias="to")
    rank: int = Field(ge=0)


class ProfileFile(BaseModel):
    """[{from, to, rank}, …, {at_infinity: n}] 목록을 구간과 ∞ 값으로 나눠 읽는다."""
    intervals: List[ProfileInterval] = Field(min_length=1)
    at_infinity: int = Field(ge=0)

    @model_validator(mode="before")
    @classmethod
    def _split_records(cls, data):
        if not isinstance(data, list):
            return data
        tail = [r for r in data if isinstance(r, dict) and "at_infinity" in r]
        body = [r for r in data if not (isinstance(r, dict) and "at_infinity" in r)]
        return {"intervals": body, "at_infinity": tail[-1]["at_infinity"] if tail else None}

    def to_cases(self) -> List[Tuple[str, str, int]]:
        return [(i.lo, i.hi, i.rank) for i in self.intervals]


class TraceStep(BaseModel):
    operation: Literal["A_b", "B_b"]
    site: List[str]
    complex: ComplexFile


class VerdictFile(BaseModel):
    verdict: Literal["guaranteed-equal", "not-guaranteed"]
    reasons: List[str]
    assumptions: List[str] = Field(min_length=1)
    failing_pair: Optional[List[str]] = None


class NumericEstimate(BaseModel):
    pair: List[str]
    symbolic: Rational
    estimate: float  # 추정값 (부동소수점)


class RunReport(BaseModel):
    command: str
    input_digest: Optional[str] = None
    assumptions: List[str] = []
    rank: Optional[int] = None
    profiles: Dict[str, List[Dict[str, Any]]] = {}
    trace: Optional[List[TraceStep]] = None
    verdict: Optional[VerdictFile] = None
    data: Optional[Dict[str, Any]] = None
    numeric_estimates: Optional[List[NumericEstimate]] = None
    timing: Optional[Dict[str, float]] = None


class IsoResult(BaseModel):
    isomorphic: bool
    mapping: Optional[Dict[str, str]] = None


class OracleResult(BaseModel):
    b: Rational
    rank: int
    components: int
    classes: Dict[str, str]


