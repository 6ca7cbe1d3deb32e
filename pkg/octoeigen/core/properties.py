"""
Randomized identity suites.

Each suite draws its samples from ``numpy.random.default_rng([seed, index])``
so a report depends only on ``(trials, seed, table)``. Octonion identities use
``trials`` unit samples; Jordan-matrix and vector identities use a tenth of
that (at least one), since each sample costs a few dozen products.
"""

from __future__ import annotations

import logging
from typing import Callable, List, Optional

import numpy as np
from pydantic import BaseModel

from .eigen import identity_checks
from .jordan import (
    char_residual,
    det,
    det_freudenthal,
    power3_both,
    random_jordan,
    random_vector,
    sigma,
    sigma_from_traces,
)
from .octonion import (
    FloatArray,
    MultiplicationTable,
    Octonion,
    _resolve,
    batch_associator,
    batch_conj,
    batch_dot,
    batch_mul,
    batch_norm,
    random_octonions,
)

logger = logging.getLogger(__name__)


class IdentityResult(BaseModel):
    name: str
    max_deviation: float
    tolerance: float
    samples: int
    passed: bool


class PropertyReport(BaseModel):
    table_convention: str
    seed: int
    trials: int
    results: List[IdentityResult]

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)


def _max(values: FloatArray) -> float:
    return float(np.max(values)) if np.size(values) else 0.0


# Octonion identities on (N, 8) batches of unit octonions.


def dot_transfer_deviation(rng: np.random.Generator, count: int, table: Optional[MultiplicationTable] = None) -> float:
    """``a.(x b) = b.(conj(x) a)``."""
    a, b, x = (random_octonions(rng, count) for _ in range(3))
    left = batch_dot(a, batch_mul(x, b, table))
    right = batch_dot(b, batch_mul(batch_conj(x), a, table))
    return _max(np.abs(left - right))


def dot_scaling_deviation(rng: np.random.Generator, count: int, table: Optional[MultiplicationTable] = None) -> float:
    """``(a x).(b x) = |x|^2 a.b``."""
    a, b, x = (random_octonions(rng, count) for _ in range(3))
    left = batch_dot(batch_mul(a, x, table), batch_mul(b, x, table))
    right = batch_dot(x, x) * batch_dot(a, b)
    return _max(np.abs(left - right))


def norm_product_deviation(rng: np.random.Generator, count: int, table: Optional[MultiplicationTable] = None) -> float:
    """``|a b| = |a| |b|``."""
    a = random_octonions(rng, count, unit=False)
    b = random_octonions(rng, count, unit=False)
    sizes = batch_norm(a) * batch_norm(b)
    return _max(np.abs(batch_norm(batch_mul(a, b, table)) - sizes) / sizes)


def alternativity_deviation(rng: np.random.Generator, count: int, table: Optional[MultiplicationTable] = None) -> float:
    """``[b, a, a] = 0 = [b, a, conj(a)]``."""
    a, b = random_octonions(rng, count), random_octonions(rng, count)
    first = batch_norm(batch_associator(b, a, a, table))
    second = batch_norm(batch_associator(b, a, batch_conj(a), table))
    return max(_max(first), _max(second))


def associator_expansion_deviation(
    rng: np.random.Generator, count: int, table: Optional[MultiplicationTable] = None
) -> float:
    """``[a,b,c]d + a[b,c,d] = [ab,c,d] - [a,bc,d] + [a,b,cd]``."""
    a, b, c, d = (random_octonions(rng, count) for _ in range(4))
    assoc = batch_associator
    left = batch_mul(assoc(a, b, c, table), d, table) + batch_mul(a, assoc(b, c, d, table), table)
    right = (
        assoc(batch_mul(a, b, table), c, d, table)
        - assoc(a, batch_mul(b, c, table), d, table)
        + assoc(a, b, batch_mul(c, d, table), table)
    )
    return _max(batch_norm(left - right))


def conjugation_deviation(rng: np.random.Generator, count: int, table: Optional[MultiplicationTable] = None) -> float:
    """``conj(a b) = conj(b) conj(a)``."""
    a, b = random_octonions(rng, count), random_octonions(rng, count)
    left = batch_conj(batch_mul(a, b, table))
    right = batch_mul(batch_conj(b), batch_conj(a), table)
    return _max(batch_norm(left - right))


def associator_antisymmetry_deviation(
    rng: np.random.Generator, count: int, table: Optional[MultiplicationTable] = None
) -> float:
    """Sign changes under transpositions and a vanishing real part."""
    a, b, c = (random_octonions(rng, count) for _ in range(3))
    base = batch_associator(a, b, c, table)
    deviations = [
        batch_norm(base + batch_associator(b, a, c, table)),
        batch_norm(base + batch_associator(a, c, b, table)),
        batch_norm(base + batch_associator(c, b, a, table)),
        batch_norm(base - batch_associator(b, c, a, table)),
        np.abs(base[:, 0]),
    ]
    return max(_max(item) for item in deviations)


# Jordan identities, scaled by max(1, largest entry norm)**k.


def _jordan_suite(
    rng: np.random.Generator, count: int, measure: Callable[..., float], table: Optional[MultiplicationTable]
) -> float:
    worst = 0.0
    for _ in range(count):
        matrix = random_jordan(rng)
        worst = max(worst, measure(matrix, table))
    return worst


def power_associativity_deviation(
    rng: np.random.Generator, count: int, table: Optional[MultiplicationTable] = None
) -> float:
    """``A^2 o A = A o A^2``."""

    def measure(matrix, table):
        first, second = power3_both(matrix, table)
        return (first - second).to_matrix().norm() / matrix.scale() ** 3

    return _jordan_suite(rng, count, measure, table)


def characteristic_deviation(rng: np.random.Generator, count: int, table: Optional[MultiplicationTable] = None) -> float:
    """``A^3 - tr(A) A^2 + sigma(A) A - det(A) I = 0``."""

    def measure(matrix, table):
        return char_residual(matrix, table).max_entry_norm() / matrix.scale() ** 3

    return _jordan_suite(rng, count, measure, table)


def sigma_agreement_deviation(rng: np.random.Generator, count: int, table: Optional[MultiplicationTable] = None) -> float:
    """Closed-form sigma against ``((tr A)^2 - tr(A^2)) / 2``."""

    def measure(matrix, table):
        return abs(sigma(matrix) - sigma_from_traces(matrix, table)) / matrix.scale() ** 2

    return _jordan_suite(rng, count, measure, table)


def det_agreement_deviation(rng: np.random.Generator, count: int, table: Optional[MultiplicationTable] = None) -> float:
    """Closed-form det against ``tr((A*A) o A) / 3``."""

    def measure(matrix, table):
        return abs(det(matrix, table) - det_freudenthal(matrix, table)) / matrix.scale() ** 3

    return _jordan_suite(rng, count, measure, table)


# Vector identities that hold for every v and lambda.


def _vector_suite(rng: np.random.Generator, count: int, table: Optional[MultiplicationTable], index: int, normalized: bool) -> float:
    worst = 0.0
    for _ in range(count):
        v = random_vector(rng, normalized=normalized)
        lam = Octonion(rng.standard_normal(8))
        deviation = identity_checks(v, lam, table)[index]
        worst = max(worst, deviation / max(1.0, lam.norm()) / max(1.0, v.norm2()))
    return worst


def projector_identity_deviation(
    rng: np.random.Generator, count: int, table: Optional[MultiplicationTable] = None
) -> float:
    """``((v lam) v^dagger) v = v lam`` for normalized v."""
    return _vector_suite(rng, count, table, 0, True)


def gram_associator_deviation(rng: np.random.Generator, count: int, table: Optional[MultiplicationTable] = None) -> float:
    """``(v^dagger v) lam = v^dagger (v lam)`` for arbitrary v."""
    return _vector_suite(rng, count, table, 1, False)


# name, measure, tolerance, uses reduced sample count
SUITES = (
    ("algebra.conjugation_antiautomorphism", conjugation_deviation, 1e-12, False),
    ("algebra.dot_transfer", dot_transfer_deviation, 1e-12, False),
    ("algebra.dot_scaling", dot_scaling_deviation, 1e-12, False),
    ("algebra.norm_product", norm_product_deviation, 1e-12, False),
    ("algebra.associator_antisymmetry", associator_antisymmetry_deviation, 1e-12, False),
    ("algebra.alternativity", alternativity_deviation, 1e-12, False),
    ("algebra.associator_expansion", associator_expansion_deviation, 1e-12, False),
    ("jordan.power_associativity", power_associativity_deviation, 1e-12, True),
    ("jordan.characteristic_identity", characteristic_deviation, 1e-10, True),
    ("jordan.sigma_agreement", sigma_agreement_deviation, 1e-12, True),
    ("jordan.det_agreement", det_agreement_deviation, 1e-12, True),
    ("theorem.gram_associator", gram_associator_deviation, 1e-12, True),
    ("theorem.projector_identity", projector_identity_deviation, 1e-12, True),
)


def reduced_count(trials: int) -> int:
    return max(1, trials // 10)


def run_property_suite(
    trials: int, seed: int, table: Optional[MultiplicationTable] = None
) -> PropertyReport:
    """Run every suite; results are in a fixed order and bit-reproducible."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    results = []
    for index, (name, measure, tolerance, reduced) in enumerate(SUITES):
        rng = np.random.default_rng([seed, index])
        count = reduced_count(trials) if reduced else trials
        deviation = measure(rng, count, table)
        logger.debug("%s: max deviation %.3g over %d samples", name, deviation, count)
        results.append(
            IdentityResult(
                name=name,
                max_deviation=deviation,
                tolerance=tolerance,
                samples=count,
                passed=deviation <= tolerance,
            )
        )
    return PropertyReport(
        table_convention=_resolve(table).describe(), seed=seed, trials=trials, results=results
    )
