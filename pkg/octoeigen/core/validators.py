"""
Parsing and validation of matrix files and octonion literals.
"""

from __future__ import annotations

import json
import math
import re
from pathlib import Path
from typing import Annotated, Any, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, FiniteFloat, ValidationError, model_validator

from .catalog import ExampleCase, build_example
from .eigen import EigenPair
from .errors import OctoEigenError
from .jordan import JordanMatrix, OctVec3
from .octonion import BASIS_NAMES, MultiplicationTable, Octonion, mul

Coefficients = Annotated[List[float], Field(min_length=8, max_length=8)]
FiniteCoefficients = Annotated[List[FiniteFloat], Field(min_length=8, max_length=8)]


class ParseError(OctoEigenError):
    """Invalid matrix file or octonion literal."""

    def __init__(self, field: str, message: str, value: Optional[Any] = None, line: Optional[int] = None):
        """
        Args:
            field: The field (or input name) that failed to parse
            message: Error message
            value: The offending value (optional)
            line: 1-based line in the source document (optional)
        """
        self.field = field
        self.message = message
        self.value = value
        self.line = line

        error_msg = f"Parse error for '{field}': {message}"
        if line is not None:
            error_msg += f" (line {line})"
        if value is not None:
            error_msg += f" (value: {value!r})"

        super().__init__(error_msg)


class OctonionModel(BaseModel):
    """Octonion JSON form: 8 coefficients in basis order [1, i, j, k, kl, jl, il, l]."""

    coeffs: FiniteCoefficients

    @classmethod
    def from_octonion(cls, value: Octonion) -> "OctonionModel":
        return cls(coeffs=value.to_list())

    def to_octonion(self) -> Octonion:
        return Octonion(self.coeffs)


class OctVec3Model(BaseModel):
    x: Coefficients
    y: Coefficients
    z: Coefficients

    @classmethod
    def from_vector(cls, v: OctVec3) -> "OctVec3Model":
        return cls(x=v.x.to_list(), y=v.y.to_list(), z=v.z.to_list())

    def to_vector(self) -> OctVec3:
        return OctVec3(Octonion(self.x), Octonion(self.y), Octonion(self.z))


class JordanMatrixModel(BaseModel):
    p: float
    m: float
    n: float
    a: Coefficients
    b: Coefficients
    c: Coefficients

    @classmethod
    def from_matrix(cls, matrix: JordanMatrix) -> "JordanMatrixModel":
        return cls(
            p=matrix.p, m=matrix.m, n=matrix.n,
            a=matrix.a.to_list(), b=matrix.b.to_list(), c=matrix.c.to_list(),
        )


class RealFamilyModel(BaseModel):
    r: float
    lambdas: List[float]
    nullities: List[int]


class EigenPairModel(BaseModel):
    lam: Coefficients
    v: OctVec3Model
    residual: float
    iterations: int

    @classmethod
    def from_pair(cls, pair: EigenPair) -> "EigenPairModel":
        return cls(
            lam=pair.lam.to_list(), v=OctVec3Model.from_vector(pair.v),
            residual=pair.residual, iterations=pair.iterations,
        )


class EigsReport(BaseModel):
    table_convention: str
    matrix: JordanMatrixModel
    families: List[RealFamilyModel]
    nonreal: List[EigenPairModel] = Field(default_factory=list)


class NullityReport(BaseModel):
    table_convention: str
    lam: Coefficients
    nullity: int
    tolerance: float


class MatrixFile(BaseModel):
    """
    Either explicit entries ``{"p", "m", "n", "a", "b", "c"}`` or a built-in
    example ``{"example": 1|2|3, "p", "q", "theta"}``. ``NaN`` and
    ``Infinity`` are rejected everywhere.
    """

    model_config = ConfigDict(extra="forbid", allow_inf_nan=False)

    example: Optional[Literal[1, 2, 3]] = None
    p: Optional[FiniteFloat] = None
    m: Optional[FiniteFloat] = None
    n: Optional[FiniteFloat] = None
    q: FiniteFloat = 1.0
    theta: FiniteFloat = 0.0
    a: Optional[FiniteCoefficients] = None
    b: Optional[FiniteCoefficients] = None
    c: Optional[FiniteCoefficients] = None

    @model_validator(mode="after")
    def _check_shape(self) -> "MatrixFile":
        if self.example is None:
            missing = [name for name in ("p", "m", "n") if getattr(self, name) is None]
            if missing:
                raise ValueError(f"explicit matrices need diagonal entries {', '.join(missing)}")
        else:
            extra = [name for name in ("m", "n", "a", "b", "c") if getattr(self, name) is not None]
            if extra:
                raise ValueError(f"example matrices take only p, q, theta (got {', '.join(extra)})")
        return self

    def to_example(self, table: Optional[MultiplicationTable] = None) -> Optional[ExampleCase]:
        if self.example is None:
            return None
        return build_example(self.example, self.p or 0.0, self.q, self.theta, table)

    def to_matrix(self, table: Optional[MultiplicationTable] = None) -> JordanMatrix:
        case = self.to_example(table)
        if case is not None:
            return case.matrix
        zeros = [0.0] * 8
        return JordanMatrix(
            self.p, self.m, self.n,
            Octonion(self.a or zeros), Octonion(self.b or zeros), Octonion(self.c or zeros),
        )


def _line_of(text: str, key: str) -> Optional[int]:
    match = re.search(rf'"{re.escape(key)}"\s*:', text)
    if match is None:
        return None
    return text.count("\n", 0, match.start()) + 1


def parse_matrix_text(text: str, source: str = "<input>") -> MatrixFile:
    """Validate a MatrixFile document, reporting the failing field and line."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(source, f"invalid JSON: {e.msg}", line=e.lineno) from e
    if not isinstance(data, dict):
        raise ParseError(source, "top-level JSON value must be an object", type(data).__name__, line=1)
    try:
        return MatrixFile.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        location = [str(part) for part in first.get("loc", ())]
        field = location[0] if location else source
        line = _line_of(text, field) if location else None
        value = data.get(field) if location else None
        raise ParseError(".".join(location) or source, first.get("msg", "invalid value"), value, line) from e


def with_overrides(document: MatrixFile, **overrides: Optional[float]) -> MatrixFile:
    """
    Re-validate ``document`` with the non-None ``overrides`` applied.

    Args:
        document: A validated MatrixFile
        **overrides: Replacement values such as ``p=0.0``

    Returns:
        A new MatrixFile

    Raises:
        ParseError: If an override is not finite or breaks the document shape
    """
    data = document.model_dump(exclude_none=True)
    data.update({key: value for key, value in overrides.items() if value is not None})
    try:
        return MatrixFile.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        location = [str(part) for part in first.get("loc", ())]
        field = location[0] if location else "options"
        raise ParseError(field, first.get("msg", "invalid value"), data.get(field)) from e


def parse_matrix_file(path: Union[str, Path]) -> MatrixFile:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise ParseError("file", f"cannot read {path}: {e.strerror}", str(path)) from e
    return parse_matrix_text(text, source=str(path))


_TERM = re.compile(
    r"\s*([+-])?\s*"
    r"((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?"
    r"\s*\*?\s*"
    r"([ijkl]+)?\s*"
)


def _unit_word(word: str, table: Optional[MultiplicationTable]) -> Octonion:
    """A basis name such as ``kl``, or a left-to-right product such as ``lk``."""
    if word in BASIS_NAMES:
        return Octonion.unit(word)
    result = Octonion.unit(word[0])
    for letter in word[1:]:
        result = mul(result, Octonion.unit(letter), table)
    return result


def parse_octonion_expression(text: str, table: Optional[MultiplicationTable] = None) -> Octonion:
    """
    Parse sums like ``0.5 - 0.25kl + 2*i + lk``. Unit words that are not
    basis names multiply left to right.
    """
    source = text.strip()
    if not source:
        raise ParseError("lambda", "empty octonion expression", text)
    total = Octonion()
    position = 0
    first = True
    while position < len(source):
        match = _TERM.match(source, position)
        sign, number, word = match.groups()
        if match.end() == position or (number is None and word is None):
            raise ParseError("lambda", f"unexpected input at offset {position}", text)
        if sign is None and not first:
            raise ParseError("lambda", f"missing '+' or '-' before term at offset {position}", text)
        coefficient = float(number) if number is not None else 1.0
        if not math.isfinite(coefficient):
            raise ParseError("lambda", f"coefficient {number} at offset {position} is not finite", text)
        if sign == "-":
            coefficient = -coefficient
        unit = _unit_word(word, table) if word else Octonion.real(1.0)
        total = total + coefficient * unit
        position = match.end()
        first = False
    return total


def parse_octonion(text: str, table: Optional[MultiplicationTable] = None) -> Octonion:
    """A JSON array of 8 coefficients, or an expression (see :func:`parse_octonion_expression`)."""
    stripped = text.strip()
    if stripped.startswith("["):
        try:
            data = json.loads(stripped)
            return OctonionModel(coeffs=data).to_octonion()
        except (json.JSONDecodeError, ValidationError) as e:
            raise ParseError("lambda", "expected a JSON array of 8 numbers", text) from e
    return parse_octonion_expression(stripped, table)
