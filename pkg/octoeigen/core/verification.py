"""
Verification harness for the worked examples and identities.

:class:`ExampleVerifier` runs every acceptance check and collects
:class:`CheckResult` entries into a :class:`VerificationReport`. A check that
raises is recorded as a failure rather than aborting the run.
"""

from __future__ import annotations

import itertools
import logging
import math
from typing import Callable, Dict, List, Literal, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, Field

from .calibration import NoConsistentTable, calibrate_table
from .catalog import (
    EXAMPLE3_A,
    EXAMPLE3_B,
    EXAMPLE3_C,
    ExampleCase,
    example1,
    example2,
    example2_printed_real_eigenvalues,
    example2_real_eigenvalues,
    example3,
)
from .eigen import (
    EigenPair,
    ZeroComponent,
    a_form_ortho_check,
    char3_sides,
    combined_lambda,
    decomposition_checks,
    eigen_search,
    eigenspace_basis,
    eigenspace_dim,
    eigenspaces,
    hermitian_sandwich,
    im_lambda_formula,
    lambda_from_vector,
    lform_beta,
    matrix_form_checks,
    new_ortho_check,
    ortho_check,
    orthogonal_triple_search,
    re_lambda_formula,
    real_eigen_families,
    residual_norm,
    six_square_sum,
)
from .errors import OctoEigenError
from .jordan import JordanMatrix, OctMatrix3, random_jordan, random_vector, trace
from .octonion import K, KL, L, MultiplicationTable, Octonion, associator
from .properties import (
    alternativity_deviation,
    associator_expansion_deviation,
    characteristic_deviation,
    det_agreement_deviation,
    dot_scaling_deviation,
    dot_transfer_deviation,
    gram_associator_deviation,
    norm_product_deviation,
    power_associativity_deviation,
    projector_identity_deviation,
    sigma_agreement_deviation,
)
from .settings import DEFAULT_SETTINGS, SolverSettings

logger = logging.getLogger(__name__)

Status = Literal["pass", "fail", "discrepancy"]


class CheckResult(BaseModel):
    name: str
    criterion: int
    status: Status
    measured: List[float] = Field(default_factory=list)
    expected: List[float] = Field(default_factory=list)
    tolerance: float = 0.0
    provenance: str
    note: Optional[str] = None


class VerificationReport(BaseModel):
    table_convention: str
    seed: int
    checks: List[CheckResult]
    counts: Dict[str, int]

    @property
    def failed(self) -> List[CheckResult]:
        return [check for check in self.checks if check.status == "fail"]

    @property
    def exit_code(self) -> int:
        return 1 if self.failed else 0


def _status(ok: bool) -> Status:
    return "pass" if ok else "fail"


def _relative(value: Octonion, target: Octonion) -> float:
    return (value - target).norm() / max(1.0, target.norm())


class ExampleVerifier:
    """Runs the example and identity checks against one multiplication table."""

    def __init__(
        self,
        seed: int = 0,
        settings: SolverSettings = DEFAULT_SETTINGS,
        table: Optional[MultiplicationTable] = None,
        identity_trials: int = 10_000,
        jordan_trials: int = 1_000,
        random_matrices: int = 100,
    ):
        self.seed = seed
        self.settings = settings
        self.table = table
        self.identity_trials = identity_trials
        self.jordan_trials = jordan_trials
        self.random_matrices = random_matrices
        self.checks: List[CheckResult] = []
        self.convention = ""
        # (label, matrix, normalized pair) for the formula checks
        self.verified: List[Tuple[str, JordanMatrix, EigenPair]] = []

    def run(self) -> VerificationReport:
        self._check_calibration()
        steps: Sequence[Callable[[], None]] = (
            self._check_algebra_identities,
            self._check_jordan_identities,
            self._check_example1_eigenpairs,
            self._check_example1_eigenspaces,
            self._check_example1_decomposition,
            self._check_lform_family,
            self._check_example2,
            self._check_example2_triple,
            self._check_example2_decomposition,
            self._check_orthogonality_forms,
            self._check_example3,
            self._check_real_solver,
            self._check_eigenvalue_formulas,
            self._check_theorems,
            self._check_discrepancies,
        )
        for step in steps:
            try:
                step()
            except OctoEigenError as e:
                logger.warning("%s raised %s", step.__name__, e)
                self._record(step.__name__.lstrip("_"), 0, False, note=f"raised {type(e).__name__}: {e}")

        checks = sorted(self.checks, key=lambda check: check.name)
        counts = {status: sum(1 for check in checks if check.status == status) for status in ("pass", "fail", "discrepancy")}
        return VerificationReport(table_convention=self.convention, seed=self.seed, checks=checks, counts=counts)

    def _record(
        self,
        name: str,
        criterion: int,
        ok: bool,
        measured: Sequence[float] = (),
        expected: Sequence[float] = (),
        tolerance: float = 0.0,
        provenance: str = "published",
        note: Optional[str] = None,
        status: Optional[Status] = None,
    ) -> None:
        result = CheckResult(
            name=name,
            criterion=criterion,
            status=status or _status(ok),
            measured=[float(value) for value in measured],
            expected=[float(value) for value in expected],
            tolerance=tolerance,
            provenance=provenance,
            note=note,
        )
        logger.debug("%s: %s %s", name, result.status, result.measured)
        self.checks.append(result)

    def _rng(self, index: int) -> np.random.Generator:
        return np.random.default_rng([self.seed, index])

    # 9: multiplication table

    def _check_calibration(self) -> None:
        try:
            result = calibrate_table()
        except NoConsistentTable as e:
            self.convention = "none"
            self._record("table_calibration", 9, False, note=str(e), provenance="derived")
            return
        if self.table is None:
            self.table = result.table
        self.convention = self.table.describe()
        self._record(
            "table_calibration",
            9,
            True,
            measured=[1.0 if result.default_passed else 0.0, float(len(result.passing))],
            expected=[1.0, 1.0],
            provenance="derived",
            note="default Cayley-Dickson table satisfies every listed eigenpair"
            if result.default_passed
            else "default table rejected; using first passing orientation",
        )

    # 1, 2: identity suites

    def _check_algebra_identities(self) -> None:
        suites = (
            ("algebra_dot_transfer", dot_transfer_deviation),
            ("algebra_dot_scaling", dot_scaling_deviation),
            ("algebra_norm_product", norm_product_deviation),
            ("algebra_alternativity", alternativity_deviation),
            ("algebra_associator_expansion", associator_expansion_deviation),
        )
        for index, (name, measure) in enumerate(suites):
            deviation = measure(self._rng(100 + index), self.identity_trials, self.table)
            self._record(name, 1, deviation <= 1e-12, [deviation], [0.0], 1e-12, note=f"{self.identity_trials} samples")

    def _check_jordan_identities(self) -> None:
        suites = (
            ("jordan_power_associativity", power_associativity_deviation, 1e-12),
            ("jordan_characteristic_identity", characteristic_deviation, 1e-10),
            ("jordan_sigma_agreement", sigma_agreement_deviation, 1e-12),
            ("jordan_det_agreement", det_agreement_deviation, 1e-12),
        )
        for index, (name, measure, tolerance) in enumerate(suites):
            deviation = measure(self._rng(200 + index), self.jordan_trials, self.table)
            self._record(name, 2, deviation <= tolerance, [deviation], [0.0], tolerance, note=f"{self.jordan_trials} matrices, scaled")

    # 3, 4, 5: Example 1

    def _check_example1_eigenpairs(self) -> None:
        worst = 0.0
        for (p, q), theta in itertools.product(((0.0, 1.0), (1.0, 2.0)), (0.0, math.pi / 5.0, math.pi / 3.0)):
            case = example1(p, q, theta, self.table)
            for pair in case.pairs:
                worst = max(worst, residual_norm(case.matrix, pair.unit, pair.lam, self.table))
        self._record("example1_eigenpairs", 3, worst <= 1e-12, [worst], [0.0], 1e-12, note="36 pairs, normalized vectors")
        case = example1(1.0, 2.0, math.pi / 5.0, self.table)
        self._collect(case)

    def _check_example1_eigenspaces(self) -> None:
        case = example1(1.0, 2.0, math.pi / 5.0, self.table)
        tol = self.settings.nullity_tol
        for label, pair_name, expected in (("w", "w_plus", 1), ("u", "u_plus", 5)):
            lam = case.pair(pair_name).lam
            dims = [eigenspace_dim(case.matrix, lam, tol, self.table)]
            dims.append(eigenspace_dim(case.matrix, case.pair(pair_name.replace("plus", "minus")).lam, tol, self.table))
            self._record(
                f"example1_nullity_{label}",
                4,
                all(dim == expected for dim in dims),
                dims,
                [expected, expected],
                tol,
                note="eigenvalues of the + and - pairs, p=1, q=2, theta=pi/5",
            )

    def _example1_groupings(self, case: ExampleCase) -> List[Tuple[str, Tuple[float, float, float, float], float]]:
        out = []
        for signs in itertools.product(("plus", "minus"), repeat=3):
            pairs = [
                EigenPair.evaluate(case.matrix, case.pair(f"{kind}_{sign}").unit, case.pair(f"{kind}_{sign}").lam, self.table)
                for kind, sign in zip("uvw", signs)
            ]
            deviations = decomposition_checks(case.matrix, pairs, self.table)
            label = "".join("+" if sign == "plus" else "-" for sign in signs)
            out.append((label, tuple(deviations), matrix_form_checks(case.matrix, pairs, self.table)))
        return out

    def _check_example1_decomposition(self) -> None:
        case = example1(1.0, 2.0, math.pi / 5.0, self.table)
        groupings = self._example1_groupings(case)
        passing = [label for label, deviations, _ in groupings if max(deviations) <= 1e-10]
        best_label, best, best_au = min(groupings, key=lambda item: max(item[1]))
        note = f"sign groupings (u,v,w) passing all four: {', '.join(passing) or 'none'}; shown: {best_label}"
        names = ("example1_weighted_sum", "example1_scaled_sum", "example1_unitarity", "example1_associativity")
        for name, value in zip(names, best):
            self._record(name, 5, value <= 1e-10, [value], [0.0], 1e-10, note=note)
        self._record(
            "example1_au_equals_ud", 5, best_au <= 1e-10, [best_au], [0.0], 1e-10, provenance="derived", note=f"grouping {best_label}"
        )

    # 6: the (p + rho) - beta kl family

    def _check_lform_family(self) -> None:
        q = 1.0
        boundary = [abs(beta) for rho in (q, -q, 2.0 * q, -2.0 * q) for beta in lform_beta(rho, q)]
        self._record("lform_beta_boundaries", 6, all(value == 0.0 for value in boundary), boundary, [0.0] * len(boundary), 0.0)

        case = example1(1.0, q, 0.0, self.table)
        rho = math.sqrt(2.5) * q
        residuals, dims = [], []
        for beta in lform_beta(rho, q):
            lam = (case.matrix.p + rho) - beta * KL
            pair = eigen_search(case.matrix, lam, settings=self.settings, table=self.table)
            residuals.append(pair.residual)
            dims.append(eigenspace_dim(case.matrix, lam, self.settings.nullity_tol, self.table))
            if pair.residual <= 1e-8:
                self.verified.append((f"lform beta={beta:+.5f}", case.matrix, pair))
        self._record(
            "lform_search_residual", 6, max(residuals) <= 1e-8, residuals, [0.0, 0.0], 1e-8,
            note="example 1 at theta=0, p=1, q=1, rho^2 = 2.5 q^2, both beta signs",
        )
        self._record("lform_eigenspace_dim", 6, all(dim == 3 for dim in dims), dims, [3, 3], self.settings.nullity_tol)

    # 7, 8: Example 2

    def _check_example2(self) -> None:
        case = example2(1.0, 2.0, self.table)
        worst = max(residual_norm(case.matrix, pair.unit, pair.lam, self.table) for pair in case.pairs)
        self._record("example2_eigenpairs", 7, worst <= 1e-10, [worst], [0.0], 1e-10, note="six listed pairs, p=1, q=2")
        self._collect(case)

        total = six_square_sum([pair.unit for pair in case.pairs], self.table)
        deviation = (total - OctMatrix3.identity() * 2.0).norm()
        self._record("example2_six_square_sum", 7, deviation <= 1e-10, [deviation], [0.0], 1e-10)

        u1, v1, w1 = (case.pair(name) for name in ("u1", "v1", "w1"))
        for name, first, second, orthogonal in (
            ("example2_ortho_v1_u1", v1, u1, True),
            ("example2_ortho_v1_w1", v1, w1, True),
            ("example2_nonortho_u1_w1", u1, w1, False),
        ):
            value = ortho_check(first.unit, second.unit, self.table)
            weighted = new_ortho_check(first.unit, first.lam, second.unit, self.table)
            ok = value <= 1e-10 if orthogonal else value >= 0.05
            self._record(
                name, 7, ok, [value], [0.0], 1e-10 if orthogonal else 0.05,
                note=f"lambda-weighted variant ((v lam) v^dagger) w: {weighted:.3e}",
            )

        lam = case.pair("w1").lam
        dims = [eigenspace_dim(case.matrix, pair.lam, self.settings.nullity_tol, self.table) for pair in case.pairs]
        self._record(
            "example2_nullity_interpretive", 7, True, dims, [2.0] * len(dims), self.settings.nullity_tol,
            provenance="interpretive",
            note=f"'at most 2 free parameters' read as nullity <= 2; lambda_w1 nullity {eigenspace_dim(case.matrix, lam, self.settings.nullity_tol, self.table)}; reported as data",
        )

        families = real_eigen_families(example2(0.0, 1.0, self.table).matrix, self.settings, self.table)
        solved = sorted(sorted(family.lambdas) for family in families)
        corrected = sorted(sorted(values) for values in example2_real_eigenvalues(0.0, 1.0))
        gap = max(abs(a - b) for got, want in zip(solved, corrected) for a, b in zip(got, want)) if all(
            len(family) == 3 for family in solved
        ) else math.inf
        self._record(
            "example2_real_families", 10, gap <= 1e-9, [value for family in solved for value in family],
            [value for family in corrected for value in family], 1e-9, provenance="derived",
            note="p=0, q=1; third values p -+ (q/2)(1 - sqrt 3)",
        )

    def _check_example2_triple(self) -> None:
        case = example2(1.0, 2.0, self.table)
        fixed = EigenPair.evaluate(case.matrix, case.pair("w1").unit, case.pair("w1").lam, self.table)
        lambdas: List = [pair.lam for pair in case.pairs]
        for family in real_eigen_families(case.matrix, self.settings, self.table):
            lambdas.extend(family.lambdas)
        spaces = eigenspaces(case.matrix, lambdas, self.settings.nullity_tol, self.table)
        restarts = self.settings.triple_restarts
        best = orthogonal_triple_search(case.matrix, fixed, spaces, restarts, self.seed, self.settings, self.table)
        self._record(
            "example2_no_orthogonal_triple", 8, best > 0.01, [best], [0.01], 0.01, provenance="evidence",
            note=f"best max pairwise residual over {restarts} restarts and {len(spaces)} eigenspaces",
        )

    def _check_example2_decomposition(self) -> None:
        case = example2(1.0, 2.0, self.table)
        pairs = [
            EigenPair.evaluate(case.matrix, case.pair(name).unit, case.pair(name).lam, self.table)
            for name in ("u1", "v1", "w1")
        ]
        deviations = decomposition_checks(case.matrix, pairs, self.table)
        self._record(
            "example2_no_decomposition", 8, min(deviations.weighted_sum, deviations.scaled_sum) > 0.01, list(deviations),
            [0.01, 0.01], 0.01, provenance="evidence",
            note=(
                "normalized {u1, v1, w1}: weighted sum, scaled sum, UU^dagger - I, (AU)U^dagger - A(UU^dagger); "
                f"regrouping {'differs' if deviations.associativity > 1e-10 else 'agrees'}"
            ),
        )

    # A-form against lambda-form orthogonality

    def _real_eigenspaces(self, matrix: JordanMatrix) -> List[Tuple[float, List]]:
        lambdas: List[float] = []
        for family in real_eigen_families(matrix, self.settings, self.table):
            lambdas.extend(family.lambdas)
        lambdas.sort()
        distinct = [lam for index, lam in enumerate(lambdas) if index == 0 or lam - lambdas[index - 1] > 1e-9]
        return [(lam, eigenspace_basis(matrix, lam, self.settings.nullity_tol, self.table)) for lam in distinct]

    def _check_orthogonality_forms(self) -> None:
        gap, compared, orthogonal, disagreements = 0.0, 0, 0, 0
        rng = self._rng(500)
        for case in (example1(0.0, 1.0, 0.0, self.table), example2(0.0, 1.0, self.table)):
            matrix = case.matrix
            spaces = self._real_eigenspaces(matrix)
            targets = [v for _, basis in spaces for v in basis[:2]] + [random_vector(rng) for _ in range(3)]
            for lam, basis in spaces:
                weight = abs(lam) if lam != 0.0 else 1.0
                for v in basis[:2]:
                    for w in targets:
                        a_form = a_form_ortho_check(matrix, v, w, self.table) * matrix.scale()
                        lam_form = new_ortho_check(v, lam, w, self.table) * weight
                        gap = max(gap, abs(a_form - lam_form))
                        compared += 1
                        orthogonal += a_form <= 1e-6 and lam_form <= 1e-6
                        disagreements += (a_form <= 1e-6) != (lam_form <= 1e-6)
        self._record(
            "orthogonality_a_form_agreement", 12, gap <= 1e-6 and compared > 0,
            [gap, compared, orthogonal, disagreements], [0.0], 1e-6, provenance="derived",
            note="|((Av)v^dagger)w| against |((v lam)v^dagger)w| on real eigenpairs of examples 1 (theta=0) and 2: "
            "max gap, pairs compared, orthogonal under both, classified differently; double roots are accurate to about 1e-8",
        )

    # 9: Example 3

    def _check_example3(self) -> None:
        case = example3(0.0, 1.0, self.table)
        pair = case.pair("v")
        value = residual_norm(case.matrix, pair.unit, pair.lam, self.table)
        self._record("example3_eigenpair", 9, value <= 1e-12, [value], [0.0], 1e-12, note="v = (j, l, 0), lambda = p + q lk")
        self._collect(example3(1.0, 2.0, self.table))

        found = associator(EXAMPLE3_A, EXAMPLE3_B, EXAMPLE3_C, self.table)
        target = 2.0 * (L - K)
        sign = 1.0 if (found - target).norm() <= (found + target).norm() else -1.0
        gap = (found - sign * target).norm()
        self._record(
            "example3_associator", 9, gap <= 1e-12, found.to_list(), (sign * target).to_list(), 1e-12,
            note=f"orientation sign {sign:+.0f}",
        )

    def _collect(self, case: ExampleCase) -> None:
        for pair in case.pairs:
            self.verified.append(
                (f"{case.name}:{pair.name}", case.matrix, EigenPair.evaluate(case.matrix, pair.unit, pair.lam, self.table))
            )

    # 10: real eigenvalue families

    def _check_real_solver(self) -> None:
        example = example1(0.0, 1.0, 0.0, self.table)
        families = real_eigen_families(example.matrix, self.settings, self.table)
        solved = [list(family.lambdas) for family in families]
        expected = [[-2.0, 1.0, 1.0], [-1.0, -1.0, 2.0]]
        gap = max(abs(a - b) for got, want in zip(solved, expected) for a, b in zip(got, want)) if all(
            len(values) == 3 for values in solved
        ) else math.inf
        self._record(
            "example1_real_families", 10, gap <= 1e-6, [value for values in solved for value in values],
            [value for values in expected for value in values], 1e-6, provenance="derived",
            note="p=0, q=1, theta=0; multipliers " + ", ".join(f"{family.r:.6g}" for family in families),
        )

        rng = self._rng(300)
        worst_trace, worst_count, min_nullity = 0.0, 0, 24
        for _ in range(self.random_matrices):
            matrix = random_jordan(rng)
            try:
                families = real_eigen_families(matrix, self.settings, self.table)
            except OctoEigenError as e:
                logger.warning("random matrix rejected: %s", e)
                worst_count = max(worst_count, 3)
                continue
            worst_count = max(worst_count, len({family.r for family in families}))
            for family in families:
                worst_trace = max(worst_trace, abs(sum(family.lambdas) - trace(matrix)) if len(family.lambdas) == 3 else math.inf)
                min_nullity = min([min_nullity, *family.nullities])
        ok = worst_count <= 2 and min_nullity >= 1 and worst_trace <= 1e-9
        self._record(
            "real_solver_random", 10, ok, [worst_count, min_nullity, worst_trace], [2, 1, 0.0], 1e-9, provenance="derived",
            note=f"{self.random_matrices} random matrices: max multipliers, min nullity, max |sum - trace|",
        )

    # 11: eigenvalue formulas on verified pairs

    def _check_eigenvalue_formulas(self) -> None:
        sandwich_gap = real_gap = imaginary_gap = char_gap = 0.0
        applicable = 0
        for _, matrix, pair in self.verified:
            v, lam = pair.v, pair.lam
            sandwich_gap = max(sandwich_gap, (hermitian_sandwich(matrix, v, self.table) + 2.0 * lam.im()).norm())
            imaginary_gap = max(imaginary_gap, (im_lambda_formula(matrix, v, self.table) - lam.im()).norm())
            for index in range(3):
                try:
                    value = re_lambda_formula(matrix, v, index, self.table)
                except ZeroComponent:
                    continue
                applicable += 1
                real_gap = max(real_gap, abs(value - lam.re()))
            lhs, rhs = char3_sides(matrix, v, lam, self.table)
            char_gap = max(char_gap, (lhs - rhs).norm() / matrix.scale() ** 3)
        count = len(self.verified)
        self._record("formula_hermitian_sandwich", 11, sandwich_gap <= 1e-8, [sandwich_gap], [0.0], 1e-8, note=f"{count} pairs")
        self._record("formula_real_part", 11, real_gap <= 1e-8, [real_gap], [0.0], 1e-8, note=f"{applicable} applicable cyclic forms")
        self._record("formula_imaginary_part", 11, imaginary_gap <= 1e-8, [imaginary_gap], [0.0], 1e-8, note=f"{count} pairs")
        self._record(
            "formula_characteristic_sides", 11, char_gap <= 1e-8, [char_gap], [0.0], 1e-8, note="scaled by max(1, entry norm)^3"
        )

        lambda_gap = max(
            (_relative(lambda_from_vector(matrix, pair.v, self.table), pair.lam) for _, matrix, pair in self.verified),
            default=0.0,
        )
        self._record(
            "formula_lambda_from_vector", 11, lambda_gap <= 1e-10, [lambda_gap], [0.0], 1e-10, provenance="derived",
            note="v^dagger (A v) against listed lambda",
        )

    # 12: identities for all v, lambda

    def _check_theorems(self) -> None:
        count = self.jordan_trials
        first = gram_associator_deviation(self._rng(400), count, self.table)
        second = projector_identity_deviation(self._rng(401), count, self.table)
        self._record("theorem_gram_associator", 12, first <= 1e-12, [first], [0.0], 1e-12, note=f"{count} random (v, lambda)")
        self._record("theorem_projector_identity", 12, second <= 1e-12, [second], [0.0], 1e-12, note=f"{count} random (v, lambda)")

    # 13: printed values that disagree with their derivations

    def _check_discrepancies(self) -> None:
        printed_dev, plus_dev, used = 0.0, 0.0, 0
        for _, matrix, pair in self.verified:
            printed = combined_lambda(matrix, pair.v, "printed", self.table)
            plus = combined_lambda(matrix, pair.v, "all_plus", self.table)
            if printed is None or plus is None:
                continue
            used += 1
            printed_dev = max(printed_dev, _relative(printed, pair.lam))
            plus_dev = max(plus_dev, _relative(plus, pair.lam))
        if printed_dev <= 1e-8 < plus_dev:
            verdict = "printed signs match, all-plus does not"
        elif plus_dev <= 1e-8 < printed_dev:
            verdict = "all-plus matches, printed signs do not"
        else:
            verdict = "no single variant decides"
        self._record(
            "combined_lambda_printed_form", 13, False, [printed_dev, plus_dev], [0.0, 0.0], 1e-8, provenance="discrepancy",
            status="discrepancy",
            note=f"sign pattern (+,+,-) against all-plus on {used} verified pairs: {verdict}",
        )

        printed = example2_printed_real_eigenvalues(0.0, 1.0)
        families = real_eigen_families(example2(0.0, 1.0, self.table).matrix, self.settings, self.table)
        solved = sorted(sorted(family.lambdas) for family in families)
        trace_gaps = [abs(sum(values)) for values in printed]  # tr = 0 at p = 0
        self._record(
            "example2_real_eigenvalues_printed", 13, False,
            [value for values in solved for value in values],
            [value for values in printed for value in values],
            1e-9,
            provenance="discrepancy",
            status="discrepancy",
            note=(
                "printed third value p -+ (q/2)(1 - sqrt(3)/2) breaks the trace sum "
                f"(printed families miss tr by {max(trace_gaps):.4f}); solver gives p -+ (q/2)(1 - sqrt 3)"
            ),
        )
