"""Pydantic request/response models for the service endpoints."""

from __future__ import annotations

from pydantic import BaseModel, Field, field_validator

from ..blocks import validate_word
from ..cpoly import CPoly


class TermModel(BaseModel):
    coeff: str
    exps: list[int]


class PolynomialModel(BaseModel):
    """Wire form of a sparse rational polynomial.

    Matches the library serialization: exact fraction strings, terms
    sorted lexicographically by exponent vector.
    """

    vars: int
    terms: list[TermModel]

    @classmethod
    def from_cpoly(cls, poly: CPoly) -> "PolynomialModel":
        data = poly.to_dict()
        return cls(vars=data["vars"], terms=[TermModel(**t) for t in data["terms"]])

    def to_cpoly(self) -> CPoly:
        return CPoly.from_dict(self.model_dump())


class WordRequest(BaseModel):
    word: str = Field(min_length=1)

    @field_validator("word")
    @classmethod
    def _check_word(cls, v: str) -> str:
        validate_word(v)
        return v


class DecomposeResponse(BaseModel):
    word: str
    blocks: list[str]
    epsilon: int
    lengths: list[int]
    tuple_repr: str
    block_degree: int
    framed_block_degree: int
    weight: int
    depth: int


class PiblResponse(BaseModel):
    word: str
    monomial: str
    polynomial: PolynomialModel


class InvertRequest(BaseModel):
    monomial: str = Field(min_length=1)


class InvertResponse(BaseModel):
    monomial: str
    word: str


class GeneratorRequest(BaseModel):
    weight: int = Field(ge=3)
    reduced: bool = False
    as_q: bool = False

    @field_validator("weight")
    @classmethod
    def _check_weight(cls, v: int) -> int:
        if v % 2 == 0:
            raise ValueError("generator weight must be odd")
        return v


class GeneratorResponse(BaseModel):
    weight: int
    k: int
    form: str
    polynomial: PolynomialModel
    rendered: str


class BracketRequest(BaseModel):
    weights: list[int] = Field(min_length=1)
    reduced: bool = False

    @field_validator("weights")
    @classmethod
    def _check_weights(cls, v: list[int]) -> list[int]:
        for w in v:
            if w < 3 or w % 2 == 0:
                raise ValueError(f"generator weights must be odd and >= 3, got {w}")
        return v


class BracketResponse(BaseModel):
    weights: list[int]
    reduced: bool
    weight: int
    block_degree: int
    polynomial: PolynomialModel
    rendered: str


class CoactionRequest(BaseModel):
    word: str = Field(min_length=1)
    r: int = Field(ge=1)

    @field_validator("word")
    @classmethod
    def _check_word(cls, v: str) -> str:
        validate_word(v)
        return v


class CoactionTermModel(BaseModel):
    coeff: str
    left: str
    right: str


class CoactionResponse(BaseModel):
    word: str
    r: int
    count: int
    terms: list[CoactionTermModel]


class DimsCellModel(BaseModel):
    weight: int
    block_degree: int
    dimension: int


class HoffmanCellModel(BaseModel):
    weight: int
    level: int
    count: int


class DimsResponse(BaseModel):
    max_weight: int
    max_block_degree: int
    lyndon: list[DimsCellModel]
    hoffman: list[HoffmanCellModel]


class VerifyRequest(BaseModel):
    suites: list[str] | None = None
    max_weight: int | None = Field(default=None, ge=3)
    max_block_degree: int | None = Field(default=None, ge=1)


class SuiteReportModel(BaseModel):
    relation_name: str
    parameters: dict
    instances_checked: int
    status: str
    failures: list[dict]
    engine_notes: list[str]


class VerifyResponse(BaseModel):
    version: str
    config: dict
    all_pass: bool
    reports: list[SuiteReportModel]


class ServiceInfo(BaseModel):
    name: str
    version: str
    suites: list[str]
