"""Pytest configuration and fixtures."""

import json
import math

import numpy as np
import pytest
from typer.testing import CliRunner

from octoeigen.core.calibration import calibrate_table
from octoeigen.core.catalog import example1, example2, example3
from octoeigen.core.jordan import JordanMatrix


@pytest.fixture(scope="session")
def table():
    """Multiplication table that satisfies every listed example eigenpair."""
    return calibrate_table().table


@pytest.fixture
def rng():
    """Seeded generator so every sampled test is reproducible."""
    return np.random.default_rng(20240611)


@pytest.fixture
def runner():
    try:
        return CliRunner(mix_stderr=False)
    except TypeError:
        # click >= 8.2 always keeps stderr apart
        return CliRunner()


@pytest.fixture
def diag123():
    return JordanMatrix.diag(1.0, 2.0, 3.0)


@pytest.fixture
def example1_case(table):
    """Example 1 at p=1, q=2, theta=pi/5."""
    return example1(1.0, 2.0, math.pi / 5.0, table)


@pytest.fixture
def example1_quaternionic(table):
    """Example 1 at p=0, q=1, theta=0."""
    return example1(0.0, 1.0, 0.0, table)


@pytest.fixture
def example2_case(table):
    return example2(1.0, 2.0, table)


@pytest.fixture
def example3_case(table):
    return example3(0.0, 1.0, table)


@pytest.fixture
def matrix_file(tmp_path):
    """Write a MatrixFile document and return its path."""

    def write(document, name="matrix.json"):
        path = tmp_path / name
        path.write_text(document if isinstance(document, str) else json.dumps(document, indent=2))
        return path

    return write
