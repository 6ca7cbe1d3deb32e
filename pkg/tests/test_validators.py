"""Tests for matrix file parsing and octonion literals."""

import json

import pytest
from pydantic import ValidationError

from octoeigen.core.catalog import example1
from octoeigen.core.eigen import EigenPair
from octoeigen.core.errors import OctoEigenError
from octoeigen.core.jordan import JordanMatrix, OctVec3
from octoeigen.core.octonion import I, J, K, KL, L, Octonion
from octoeigen.core.validators import (
    EigenPairModel,
    JordanMatrixModel,
    MatrixFile,
    OctonionModel,
    ParseError,
    parse_matrix_file,
    parse_matrix_text,
    parse_octonion,
    parse_octonion_expression,
    with_overrides,
)

EXPLICIT = {"p": 1.0, "m": 2.0, "n": 3.0, "a": [0, 1, 0, 0, 0, 0, 0, 0]}


class TestParseError:
    def test_message(self):
        error = ParseError("a", "too short", [1, 2], line=4)
        assert str(error) == "Parse error for 'a': too short (line 4) (value: [1, 2])"
        assert isinstance(error, OctoEigenError)
        assert error.field == "a"
        assert error.line == 4

    def test_message_without_extras(self):
        assert str(ParseError("lambda", "empty")) == "Parse error for 'lambda': empty"


class TestMatrixFile:
    def test_explicit(self):
        matrix = MatrixFile.model_validate(EXPLICIT).to_matrix()
        assert (matrix.p, matrix.m, matrix.n) == (1.0, 2.0, 3.0)
        assert matrix.a.isclose(I)
        assert matrix.b.isclose(0.0)

    def test_example(self):
        document = MatrixFile(example=1, p=1.0, q=2.0, theta=0.5)
        expected = example1(1.0, 2.0, 0.5).matrix
        assert (document.to_matrix() - expected).to_matrix().norm() == 0.0
        assert document.to_example().name == "example1"

    def test_example_defaults(self):
        matrix = MatrixFile(example=3).to_matrix()
        assert matrix.p == 0.0
        assert matrix.a.isclose(I)

    def test_explicit_needs_diagonal(self):
        with pytest.raises(ValidationError, match="m, n"):
            MatrixFile(p=1.0)

    def test_example_rejects_entries(self):
        with pytest.raises(ValidationError, match="got m"):
            MatrixFile(example=2, m=1.0)

    def test_unknown_example(self):
        with pytest.raises(ValidationError):
            MatrixFile(example=4)

    @pytest.mark.parametrize("field", ["p", "q", "theta"])
    @pytest.mark.parametrize("value", [float("nan"), float("inf"), float("-inf")])
    def test_example_rejects_non_finite(self, field, value):
        with pytest.raises(ValidationError, match="finite"):
            MatrixFile(example=1, **{field: value})

    def test_explicit_rejects_non_finite(self):
        with pytest.raises(ValidationError, match="finite"):
            MatrixFile(p=1.0, m=float("nan"), n=3.0)
        with pytest.raises(ValidationError, match="finite"):
            MatrixFile(p=1.0, m=2.0, n=3.0, b=[0, 0, float("inf"), 0, 0, 0, 0, 0])

    def test_with_overrides(self):
        document = with_overrides(MatrixFile(example=1, p=5.0, q=2.0), p=0.0, theta=None)
        assert (document.p, document.q, document.theta) == (0.0, 2.0, 0.0)

    @pytest.mark.parametrize("value", [float("nan"), float("inf")])
    def test_with_overrides_rejects_non_finite(self, value):
        with pytest.raises(ParseError, match="finite") as info:
            with_overrides(MatrixFile(example=2), q=value)
        assert info.value.field == "q"


class TestParseMatrixText:
    def test_valid(self, matrix_file):
        path = matrix_file(EXPLICIT)
        assert parse_matrix_file(path).m == 2.0

    def test_short_coefficients(self, matrix_file):
        path = matrix_file({"p": 1, "m": 2, "n": 3, "a": [1, 2]})
        with pytest.raises(ParseError) as info:
            parse_matrix_file(path)
        assert info.value.field == "a"
        assert info.value.line == 5
        assert info.value.value == [1, 2]

    def test_unknown_key(self):
        text = json.dumps({"p": 1, "m": 2, "n": 3, "foo": 1}, indent=2)
        with pytest.raises(ParseError, match="'foo'") as info:
            parse_matrix_text(text)
        assert info.value.line == 5

    def test_bad_type(self):
        text = '{\n  "example": 1,\n  "theta": "wide"\n}'
        with pytest.raises(ParseError) as info:
            parse_matrix_text(text)
        assert info.value.field == "theta"
        assert info.value.line == 3
        assert info.value.value == "wide"

    def test_invalid_json(self):
        with pytest.raises(ParseError, match="invalid JSON") as info:
            parse_matrix_text('{\n  "p": 1,,\n}', source="broken.json")
        assert info.value.field == "broken.json"
        assert info.value.line == 2

    def test_not_an_object(self):
        with pytest.raises(ParseError, match="must be an object") as info:
            parse_matrix_text("[1, 2, 3]")
        assert info.value.line == 1

    def test_model_level_error(self):
        with pytest.raises(ParseError, match="example matrices take only"):
            parse_matrix_text('{"example": 1, "n": 2}', source="doc")

    def test_missing_file(self, tmp_path):
        with pytest.raises(ParseError, match="cannot read") as info:
            parse_matrix_file(tmp_path / "absent.json")
        assert info.value.field == "file"

    def test_nan_in_document(self):
        text = '{\n  "example": 1,\n  "p": NaN\n}'
        with pytest.raises(ParseError, match="finite") as info:
            parse_matrix_text(text)
        assert info.value.field == "p"
        assert info.value.line == 3

    def test_infinite_coefficient(self):
        text = json.dumps({"p": 1, "m": 2, "n": 3, "a": [0, float("inf"), 0, 0, 0, 0, 0, 0]}, indent=2)
        with pytest.raises(ParseError, match="finite") as info:
            parse_matrix_text(text)
        assert info.value.field == "a.1"


class TestOctonionLiterals:
    """Expressions and JSON arrays for --lambda."""

    @pytest.mark.parametrize(
        "text,expected",
        [
            ("1", Octonion.real(1.0)),
            ("-i", -1.0 * I),
            ("+3", Octonion.real(3.0)),
            ("2*i + j", 2.0 * I + J),
            ("0.5 - 0.25kl", 0.5 - 0.25 * KL),
            ("1e-3l", 1e-3 * L),
            (" .5k ", 0.5 * K),
        ],
    )
    def test_expressions(self, text, expected):
        assert parse_octonion_expression(text).isclose(expected)

    def test_product_words(self):
        assert parse_octonion_expression("ij").isclose(K)
        assert parse_octonion_expression("lk").isclose(-1.0 * KL)
        assert parse_octonion_expression("0.5 - 0.25kl + 2*i + lk").isclose(0.5 + 2.0 * I - 1.25 * KL)

    @pytest.mark.parametrize("text,message", [("", "empty"), ("   ", "empty"), ("x", "offset 0"), ("2 3", "missing '\\+'")])
    def test_expression_errors(self, text, message):
        with pytest.raises(ParseError, match=message) as info:
            parse_octonion_expression(text)
        assert info.value.field == "lambda"

    def test_json_array(self):
        assert parse_octonion("[1, 0, 0, 0, 2, 0, 0, 0]").isclose(1.0 + 2.0 * KL)

    @pytest.mark.parametrize("text", ["[1, 2]", "[1, 2,", '["a", 0, 0, 0, 0, 0, 0, 0]'])
    def test_bad_json_array(self, text):
        with pytest.raises(ParseError, match="JSON array of 8 numbers"):
            parse_octonion(text)

    def test_expression_fallback(self):
        assert parse_octonion(" 1 - 2kl ").isclose(1.0 - 2.0 * KL)

    def test_non_finite_literals(self):
        with pytest.raises(ParseError, match="not finite"):
            parse_octonion_expression("1 + 1e999kl")
        with pytest.raises(ParseError, match="JSON array of 8 numbers"):
            parse_octonion("[NaN, 0, 0, 0, 0, 0, 0, 0]")
        with pytest.raises(ValidationError, match="finite"):
            OctonionModel(coeffs=[float("inf")] + [0.0] * 7)


class TestReportModels:
    def test_octonion_model(self):
        assert OctonionModel.from_octonion(I + L).to_octonion().isclose(I + L)
        with pytest.raises(ValidationError):
            OctonionModel(coeffs=[1.0] * 7)

    def test_matrix_model(self):
        model = JordanMatrixModel.from_matrix(JordanMatrix(1.0, 2.0, 3.0, c=K))
        assert model.c == [0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0]
        assert json.loads(model.model_dump_json())["n"] == 3.0

    def test_eigenpair_model(self):
        matrix = JordanMatrix.diag(1.0, 2.0, 3.0)
        pair = EigenPair.evaluate(matrix, OctVec3(0.0, 1.0, 0.0), 2.0, iterations=3)
        model = EigenPairModel.from_pair(pair)
        assert model.lam[0] == 2.0
        assert model.residual == 0.0
        assert model.iterations == 3
        assert model.v.to_vector().isclose(pair.v)
