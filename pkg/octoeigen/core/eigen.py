"""
Right eigenvalue problem ``A v = v lambda`` for 3x3 octonionic Hermitian matrices.

Residuals, the generalized characteristic equation, the two real eigenvalue
families, a numerical search for non-real eigenpairs, and the
orthogonality / decomposition checkers built on outer products.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass, field
from typing import List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import least_squares

from .errors import OctoEigenError
from .jordan import (
    JordanMatrix,
    OctLike,
    OctMatrix3,
    OctVec3,
    _as_octonion,
    _conj_array,
    det,
    matvec,
    outer,
    outer_scaled,
    sigma,
    trace,
)
from .octonion import (
    KL,
    FloatArray,
    MultiplicationTable,
    Octonion,
    _resolve,
    associator,
    conj,
    dot,
    mul,
)
from .realops import (
    cubic_residual,
    cubic_roots,
    jacobi_svd,
    linearize_oct_map,
    min_norm_solve,
    null_space,
    nullity,
    orthonormal_columns,
    project_onto,
    real_eigenvalues,
)
from .settings import DEFAULT_SETTINGS, SolverSettings

logger = logging.getLogger(__name__)

_NORMALIZATION_TOL = 1e-9


class NotNormalized(OctoEigenError):
    """A routine that needs ``|v| = 1`` got a vector of another length."""

    def __init__(self, norm: float):
        self.norm = norm
        super().__init__(f"vector must be normalized (|v| = {norm:.12g})")


class ZeroComponent(OctoEigenError):
    """A cyclic Re(lambda) formula would divide by a vanishing component."""

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"component {'xyz'[index]} of the eigenvector vanishes")


class UnexpectedMultiplierCount(OctoEigenError):
    """More than two distinct real multipliers survived deduplication."""

    def __init__(self, values: Sequence[float]):
        self.values = list(values)
        super().__init__(f"expected at most 2 real multipliers, found {len(self.values)}: {self.values}")


class OutOfRange(OctoEigenError):
    """``(rho, q)`` violates ``q^2 <= rho^2 <= 4 q^2``."""

    def __init__(self, rho: float, q: float):
        self.rho = rho
        self.q = q
        super().__init__(f"rho={rho} is outside q^2 <= rho^2 <= 4q^2 for q={q}")


@dataclass(frozen=True)
class EigenPair:
    """A candidate right eigenpair and its residual ``|Av - v lam|``."""

    lam: Octonion
    v: OctVec3
    residual: float
    iterations: int = 0

    @classmethod
    def evaluate(
        cls,
        matrix: JordanMatrix,
        v: OctVec3,
        lam: OctLike,
        table: Optional[MultiplicationTable] = None,
        iterations: int = 0,
    ) -> "EigenPair":
        lam = _as_octonion(lam)
        return cls(lam=lam, v=v, residual=residual(matrix, v, lam, table).norm(), iterations=iterations)

    def normalized(self, matrix: JordanMatrix, table: Optional[MultiplicationTable] = None) -> "EigenPair":
        return EigenPair.evaluate(matrix, self.v.normalized(), self.lam, table, self.iterations)


@dataclass(frozen=True)
class RealEigenFamily:
    """Roots of ``x^3 - tr(A) x^2 + sigma(A) x - (det(A) + r)`` for one real multiplier r."""

    r: float
    lambdas: Tuple[float, ...]
    nullities: Tuple[int, ...] = field(default=())

    def coefficients(self, matrix: JordanMatrix, table: Optional[MultiplicationTable] = None) -> Tuple[float, float, float]:
        return -trace(matrix), sigma(matrix), -(det(matrix, table) + self.r)

    def max_cubic_residual(self, matrix: JordanMatrix, table: Optional[MultiplicationTable] = None) -> float:
        t2, t1, t0 = self.coefficients(matrix, table)
        return max((cubic_residual(t2, t1, t0, lam) for lam in self.lambdas), default=0.0)


@dataclass(frozen=True)
class LformParams:
    """Parameters of ``lambda = (p + rho) - beta kl``."""

    rho: float
    beta: float
    q: float

    def eigenvalue(self, p: float) -> Octonion:
        return (p + self.rho) - self.beta * KL

    def relation_residual(self) -> float:
        root = math.sqrt(32.0 * self.rho ** 2 - 7.0 * self.q ** 2)
        return abs(32.0 * self.beta ** 2 - (root - 5.0 * self.q) * (11.0 * self.q - root))


class DecompositionDeviations(NamedTuple):
    weighted_sum: float
    scaled_sum: float
    unitarity: float
    associativity: float


class IdentityDeviations(NamedTuple):
    projector: float
    associator: float


# Residual and linearization


def residual(
    matrix: JordanMatrix, v: OctVec3, lam: OctLike, table: Optional[MultiplicationTable] = None
) -> OctVec3:
    """
    ``A v - v lam``.

    Args:
        matrix: Hermitian matrix A
        v: Candidate eigenvector (any length)
        lam: Candidate eigenvalue, an Octonion or a real number
        table: Multiplication table (default table when None)

    Returns:
        The residual vector; its norm is zero for an exact eigenpair
    """
    return matvec(matrix, v, table) - v.right_mul(lam, table)


def residual_norm(
    matrix: JordanMatrix, v: OctVec3, lam: OctLike, table: Optional[MultiplicationTable] = None
) -> float:
    return residual(matrix, v, lam, table).norm()


def right_mul_operator(lam: OctLike, table: Optional[MultiplicationTable] = None) -> FloatArray:
    """8x8 matrix of ``z -> z lam``."""
    lam = _as_octonion(lam)
    return np.einsum("r,qrs->sq", lam.coeffs, _resolve(table).tensor)


def shifted_operator(
    matrix: JordanMatrix, lam: OctLike, table: Optional[MultiplicationTable] = None
) -> FloatArray:
    """
    24x24 real matrix M(lam) of ``v -> A v - v lam``.

    Same matrix as ``linearize_vec_map`` applied to that map, built directly
    from the structure constants.
    """
    tensor = _resolve(table).tensor
    left = np.einsum("ijq,qrs->isjr", matrix.to_matrix().data, tensor).reshape(24, 24)
    return left - np.kron(np.eye(3), right_mul_operator(lam, table))


def _lambda_jacobian(v: OctVec3, table: Optional[MultiplicationTable]) -> FloatArray:
    # d(v lam)/d lam as a 24x8 matrix
    return np.einsum("iq,qrs->isr", v.data, _resolve(table).tensor).reshape(24, 8)


def _require_normalized(v: OctVec3) -> None:
    size = v.norm()
    if abs(size - 1.0) > _NORMALIZATION_TOL:
        raise NotNormalized(size)


# Eigenvalue formulas


def lambda_from_vector(
    matrix: JordanMatrix, v: OctVec3, table: Optional[MultiplicationTable] = None
) -> Octonion:
    """
    ``v^dagger (A v)`` for a normalized ``v``.

    Args:
        matrix: Hermitian matrix A
        v: Unit vector
        table: Multiplication table (default table when None)

    Returns:
        The eigenvalue estimate; it equals lam whenever ``(v, lam)`` is an eigenpair

    Raises:
        NotNormalized: If ``|v|`` differs from 1 by more than 1e-9
    """
    _require_normalized(v)
    return v.dagger_dot(matvec(matrix, v, table), table)


def hermitian_sandwich(
    matrix: JordanMatrix, v: OctVec3, table: Optional[MultiplicationTable] = None
) -> Octonion:
    """
    The associator ``[v^dagger, A, v] = (v^dagger A) v - v^dagger (A v)``.

    Args:
        matrix: Hermitian matrix A
        v: Unit vector
        table: Multiplication table (default table when None)

    Returns:
        A purely imaginary octonion, zero when the entries of A and v
        generate an associative subalgebra

    Raises:
        NotNormalized: If ``|v|`` differs from 1 by more than 1e-9
    """
    _require_normalized(v)
    tensor = _resolve(table).tensor
    row = np.einsum("iq,ijr,qrs->js", _conj_array(v.data), matrix.to_matrix().data, tensor)
    left = np.einsum("jq,jr,qrs->s", row, v.data, tensor)
    return Octonion(left) - v.dagger_dot(matvec(matrix, v, table), table)


def re_lambda_formula(
    matrix: JordanMatrix,
    v: OctVec3,
    index: int,
    table: Optional[MultiplicationTable] = None,
    zero_tol: float = 1e-12,
) -> float:
    """
    One cyclic form of Re(lambda), taking the dot product of component
    ``index`` with its own eigen-equation:

    * 0: ``(x.(a y) + z.(b x) + p|x|^2) / |x|^2``
    * 1: ``(y.(c z) + x.(a y) + m|y|^2) / |y|^2``
    * 2: ``(z.(b x) + y.(c z) + n|z|^2) / |z|^2``

    Args:
        matrix: Hermitian matrix A
        v: Eigenvector (need not be normalized)
        index: 0, 1 or 2 for the x, y or z form
        table: Multiplication table (default table when None)
        zero_tol: Relative size below which the component counts as zero

    Returns:
        Re(lambda) computed from that component

    Raises:
        ZeroComponent: If component ``index`` vanishes
    """
    A = matrix
    x, y, z = v.components()
    component = (x, y, z)[index]
    size2 = component.norm2()
    if size2 <= (zero_tol * max(v.norm(), 1.0)) ** 2:
        raise ZeroComponent(index)
    xay = dot(x, mul(A.a, y, table))
    zbx = dot(z, mul(A.b, x, table))
    ycz = dot(y, mul(A.c, z, table))
    numerators = (
        xay + zbx + A.p * size2,
        ycz + xay + A.m * size2,
        zbx + ycz + A.n * size2,
    )
    return numerators[index] / size2


def re_lambda_formulas(
    matrix: JordanMatrix, v: OctVec3, table: Optional[MultiplicationTable] = None
) -> Tuple[Optional[float], Optional[float], Optional[float]]:
    """All three cyclic Re(lambda) forms; ``None`` where the component vanishes."""
    values: List[Optional[float]] = []
    for index in range(3):
        try:
            values.append(re_lambda_formula(matrix, v, index, table))
        except ZeroComponent:
            values.append(None)
    return values[0], values[1], values[2]


def im_lambda_formula(
    matrix: JordanMatrix, v: OctVec3, table: Optional[MultiplicationTable] = None
) -> Octonion:
    """
    ``[x, a, y] + [z, b, x] + [y, c, z]`` for a normalized ``v``.

    Raises:
        NotNormalized: If ``|v|`` differs from 1 by more than 1e-9
    """
    _require_normalized(v)
    A = matrix
    x, y, z = v.components()
    return associator(x, A.a, y, table) + associator(z, A.b, x, table) + associator(y, A.c, z, table)


def combined_lambda(
    matrix: JordanMatrix,
    v: OctVec3,
    variant: str = "printed",
    table: Optional[MultiplicationTable] = None,
    zero_tol: float = 1e-9,
) -> Optional[Octonion]:
    """
    Combined expression for lambda from inserting the eigen-equations into
    ``v^dagger (A v)``.

    ``printed``:  (p|x|^2 + m|y|^2 - n|z|^2 + 2 x.(ay)) / (|x|^2 + |y|^2 - |z|^2)
    ``all_plus``: (p|x|^2 + m|y|^2 + n|z|^2 + 2 x.(ay)) / (|x|^2 + |y|^2 + |z|^2)

    Both add ``([x,a,y] + [z,b,x] + [y,c,z]) / |v|^2``.

    Args:
        matrix: Hermitian matrix A
        v: Eigenvector (need not be normalized)
        variant: ``"printed"`` or ``"all_plus"``
        table: Multiplication table (default table when None)
        zero_tol: Relative size below which the denominator counts as zero

    Returns:
        The combined lambda, or ``None`` when the real part's denominator vanishes

    Raises:
        ValueError: If ``variant`` is unknown
    """
    if variant not in ("printed", "all_plus"):
        raise ValueError(f"unknown variant {variant!r}")
    A = matrix
    x, y, z = v.components()
    nx, ny, nz = x.norm2(), y.norm2(), z.norm2()
    sign = -1.0 if variant == "printed" else 1.0
    denominator = nx + ny + sign * nz
    if abs(denominator) <= zero_tol * v.norm2():
        return None
    real_part = (A.p * nx + A.m * ny + sign * A.n * nz + 2.0 * dot(x, mul(A.a, y, table))) / denominator
    imaginary = associator(x, A.a, y, table) + associator(z, A.b, x, table) + associator(y, A.c, z, table)
    return real_part + imaginary / v.norm2()


# Generalized characteristic equation


def _cubic_in(lam: Octonion, matrix: JordanMatrix, table: Optional[MultiplicationTable]) -> Octonion:
    square = mul(lam, lam, table)
    cube = mul(square, lam, table)
    return cube - trace(matrix) * square + sigma(matrix) * lam - det(matrix, table)


def char3_sides(
    matrix: JordanMatrix, v: OctVec3, lam: OctLike, table: Optional[MultiplicationTable] = None
) -> Tuple[Octonion, Octonion]:
    """
    Both sides of the generalized characteristic equation for the z component.

    Args:
        matrix: Hermitian matrix A
        v: Eigenvector ``(x, y, z)``
        lam: Its eigenvalue
        table: Multiplication table (default table when None)

    Returns:
        ``(lhs, rhs)`` with ``lhs = z (lam^3 - tr(A) lam^2 + sigma(A) lam - det(A))``;
        the two agree for every eigenpair
    """
    lam = _as_octonion(lam)
    A = matrix
    a, b, c = A.a, A.b, A.c
    ab, bb, cb = conj(a), conj(b), conj(c)
    x, y, z = v.components()

    def m(u: Octonion, w: Octonion) -> Octonion:
        return mul(u, w, table)

    def assoc(u: Octonion, w: Octonion, t: Octonion) -> Octonion:
        return associator(u, w, t, table)

    lhs = m(z, _cubic_in(lam, A, table))
    bac = m(b, m(a, c))
    cab = m(m(cb, ab), bb)
    rhs = (
        m(b, m(a, m(c, z)))
        + m(cb, m(ab, m(bb, z)))
        - m(bac + cab, z)
        + m(b, assoc(a, y, lam))
        + assoc(b, m(a, y), lam)
        + m(assoc(b, x, lam), lam - A.m)
        + m(cb, assoc(ab, x, lam))
        + assoc(cb, m(ab, x), lam)
        + m(assoc(cb, y, lam), lam - A.p)
    )
    return lhs, rhs


def rhs_multiplier_operator(matrix: JordanMatrix, table: Optional[MultiplicationTable] = None) -> FloatArray:
    """8x8 matrix of ``z -> b(a(cz)) + c~(a~(b~z)) - (b(ac) + (c~a~)b~) z``."""
    a, b, c = matrix.a, matrix.b, matrix.c
    ab, bb, cb = conj(a), conj(b), conj(c)
    shift = mul(b, mul(a, c, table), table) + mul(mul(cb, ab, table), bb, table)

    def apply(z: Octonion) -> Octonion:
        return (
            mul(b, mul(a, mul(c, z, table), table), table)
            + mul(cb, mul(ab, mul(bb, z, table), table), table)
            - mul(shift, z, table)
        )

    return linearize_oct_map(apply)


def real_eigen_families(
    matrix: JordanMatrix,
    settings: SolverSettings = DEFAULT_SETTINGS,
    table: Optional[MultiplicationTable] = None,
) -> Tuple[RealEigenFamily, RealEigenFamily]:
    """
    The two families of real eigenvalues, one per real multiplier r.

    When only one multiplier survives deduplication it serves both families.

    Args:
        matrix: Hermitian matrix A
        settings: Deduplication and nullity tolerances
        table: Multiplication table (default table when None)

    Returns:
        Both families, ordered by r, each with its roots and their nullities

    Raises:
        UnexpectedMultiplierCount: If more than two real multipliers remain
    """
    multipliers = real_eigenvalues(rhs_multiplier_operator(matrix, table), settings.dedup_tol)
    logger.debug("real multipliers: %s", multipliers)
    if len(multipliers) > 2:
        raise UnexpectedMultiplierCount(multipliers)
    if len(multipliers) == 1:
        multipliers = multipliers * 2

    t2, t1, base = -trace(matrix), sigma(matrix), det(matrix, table)
    families = []
    for r in sorted(multipliers):
        roots = cubic_roots(t2, t1, -(base + r))
        if len(roots) < 3:
            logger.warning("family r=%.6g has only %d real roots", r, len(roots))
        nullities = tuple(eigenspace_dim(matrix, root, settings.nullity_tol, table) for root in roots)
        families.append(RealEigenFamily(r=r, lambdas=tuple(roots), nullities=nullities))
    return families[0], families[1]


# Eigen search


def _pick_null_vector(
    values: FloatArray, right: FloatArray, previous: Optional[FloatArray], tie_tol: float
) -> FloatArray:
    candidate = right[:, -1]
    if previous is None:
        return candidate
    cutoff = values[-1] + tie_tol * float(values[0])
    cluster = right[:, values <= cutoff]
    if cluster.shape[1] > 1:
        projected = project_onto(cluster, previous)
        if projected is not None:
            candidate = projected
    if candidate @ previous < 0.0:
        candidate = -candidate
    return candidate


def _polish(
    matrix: JordanMatrix,
    pair: EigenPair,
    table: Optional[MultiplicationTable],
    steps: int = 8,
) -> EigenPair:
    """Gauss-Newton on ``(A v - v lam, |v|^2 - 1)``, keeping only improving steps."""
    best = pair
    for _ in range(steps):
        v, lam = best.v, best.lam
        jacobian = np.zeros((25, 32))
        jacobian[:24, :24] = shifted_operator(matrix, lam, table)
        jacobian[:24, 24:] = -_lambda_jacobian(v, table)
        jacobian[24, :24] = 2.0 * v.flat
        value = np.concatenate([residual(matrix, v, lam, table).flat, [v.norm2() - 1.0]])
        step = min_norm_solve(jacobian, -value)
        moved = OctVec3.from_array(v.flat + step[:24]).normalized()
        candidates = [EigenPair.evaluate(matrix, moved, Octonion(lam.coeffs + step[24:]), table)]
        candidates.append(EigenPair.evaluate(matrix, moved, lambda_from_vector(matrix, moved, table), table))
        improved = min(candidates, key=lambda item: item.residual)
        if improved.residual >= best.residual:
            break
        best = EigenPair(improved.lam, improved.v, improved.residual, pair.iterations)
    return best


def eigen_search(
    matrix: JordanMatrix,
    lam0: OctLike,
    max_iter: Optional[int] = None,
    tol: Optional[float] = None,
    settings: SolverSettings = DEFAULT_SETTINGS,
    table: Optional[MultiplicationTable] = None,
) -> EigenPair:
    """
    Alternating search for a right eigenpair near ``lam0``.

    Each iteration takes v as the smallest right-singular vector of M(lam)
    (ties broken by overlap with the previous v) and then sets
    ``lam = v^dagger (A v)``. Convergence is not guaranteed; the returned
    pair is the best one seen and its residual is the result.

    Args:
        matrix: Hermitian matrix A
        lam0: Starting eigenvalue guess
        max_iter: Iteration cap (``settings.max_iter`` when None)
        tol: Residual at which to stop (``settings.search_tol`` when None)
        settings: Solver settings
        table: Multiplication table (default table when None)

    Returns:
        The lowest-residual pair found, with a unit eigenvector
    """
    max_iter = settings.max_iter if max_iter is None else max_iter
    tol = settings.search_tol if tol is None else tol
    lam = _as_octonion(lam0)
    previous: Optional[FloatArray] = None
    best: Optional[EigenPair] = None
    polished_at = math.inf

    for iteration in range(1, max_iter + 1):
        _, values, right = jacobi_svd(shifted_operator(matrix, lam, table))
        flat = _pick_null_vector(values, right, previous, settings.tie_tol)
        v = OctVec3.from_array(flat).normalized()
        lam = lambda_from_vector(matrix, v, table)
        current = EigenPair.evaluate(matrix, v, lam, table, iteration)

        if current.residual < settings.polish_threshold and current.residual < polished_at:
            polished_at = current.residual
            current = _polish(matrix, current, table)
            lam, v = current.lam, current.v

        if best is None or current.residual < best.residual:
            best = current
        if best.residual < tol:
            break
        previous = v.flat

    assert best is not None
    if best.residual >= tol:
        logger.warning("eigen_search stopped at residual %.3g after %d iterations", best.residual, max_iter)
    else:
        logger.debug("eigen_search converged: residual %.3g after %d iterations", best.residual, best.iterations)
    return best


def search_nonreal(
    matrix: JordanMatrix,
    starts: int,
    seed: int = 0,
    accept: float = 1e-8,
    merge: float = 1e-6,
    settings: SolverSettings = DEFAULT_SETTINGS,
    table: Optional[MultiplicationTable] = None,
) -> List[EigenPair]:
    """
    Run :func:`eigen_search` from ``starts`` random eigenvalue guesses.

    Start ``k`` is drawn from ``default_rng([seed, k])`` around ``tr(A)/3``
    with spread ``scale(A)``. Pairs with residual above ``accept`` or a real
    eigenvalue are dropped; eigenvalues closer than ``merge`` are merged,
    keeping the lower residual.
    """
    found: List[EigenPair] = []
    center, spread = trace(matrix) / 3.0, matrix.scale()
    for start in range(starts):
        rng = np.random.default_rng([seed, start])
        lam0 = center + Octonion(spread * rng.standard_normal(8))
        pair = eigen_search(matrix, lam0, settings=settings, table=table)
        if pair.residual > accept or pair.lam.is_real(atol=merge):
            continue
        for index, known in enumerate(found):
            if (known.lam - pair.lam).norm() < merge:
                if pair.residual < known.residual:
                    found[index] = pair
                break
        else:
            found.append(pair)
    logger.debug("search_nonreal kept %d eigenvalues from %d starts", len(found), starts)
    return sorted(found, key=lambda pair: tuple(pair.lam.coeffs))


# (p + rho) - beta kl family


def lform_beta(rho: float, q: float) -> Tuple[float, float]:
    """
    The two beta values with ``32 beta^2 = (R - 5q)(11q - R)``, ``R = sqrt(32 rho^2 - 7 q^2)``.

    Raises:
        OutOfRange: If ``q^2 <= rho^2 <= 4 q^2`` fails or the right side is negative
    """
    if not q ** 2 <= rho ** 2 <= 4.0 * q ** 2:
        raise OutOfRange(rho, q)
    root = math.sqrt(32.0 * rho ** 2 - 7.0 * q ** 2)
    rhs = (root - 5.0 * q) * (11.0 * q - root)
    if rhs < -1e-12 * q ** 2:
        raise OutOfRange(rho, q)
    beta = math.sqrt(max(rhs, 0.0) / 32.0)
    return beta, -beta


def lform_params(rho: float, q: float) -> Tuple[LformParams, LformParams]:
    plus, minus = lform_beta(rho, q)
    return LformParams(rho, plus, q), LformParams(rho, minus, q)


# Eigenspaces


def eigenspace_dim(
    matrix: JordanMatrix,
    lam: OctLike,
    tol: float = DEFAULT_SETTINGS.nullity_tol,
    table: Optional[MultiplicationTable] = None,
) -> int:
    """
    Real dimension of the null space of M(lam).

    Args:
        matrix: Hermitian matrix A
        lam: Eigenvalue candidate
        tol: Singular values at or below ``tol * sigma_max`` count as zero
        table: Multiplication table (default table when None)

    Returns:
        An integer in ``[0, 24]``; 0 means lam is not an eigenvalue
    """
    return nullity(shifted_operator(matrix, lam, table), tol)


def eigenspace_basis(
    matrix: JordanMatrix,
    lam: OctLike,
    tol: float = DEFAULT_SETTINGS.nullity_tol,
    table: Optional[MultiplicationTable] = None,
) -> List[OctVec3]:
    """Orthonormal real basis of the numerical eigenspace of ``lam``."""
    basis = null_space(shifted_operator(matrix, lam, table), tol)
    return [OctVec3.from_array(column) for column in basis.T]


# Orthogonality and decompositions


def ortho_check(v: OctVec3, w: OctVec3, table: Optional[MultiplicationTable] = None) -> float:
    """``|(v v^dagger) w| / (|v|^2 |w|)``; zero for generalized-orthogonal vectors."""
    scale = v.norm2() * w.norm()
    if scale == 0.0:
        return 0.0
    return outer(v, v, table).matvec(w, table).norm() / scale


def new_ortho_check(
    v: OctVec3, lam: OctLike, w: OctVec3, table: Optional[MultiplicationTable] = None
) -> float:
    """``|((v lam) v^dagger) w| / (|v|^2 |lam| |w|)``."""
    lam = _as_octonion(lam)
    scale = v.norm2() * w.norm() * (lam.norm() if lam.norm() > 0.0 else 1.0)
    if scale == 0.0:
        return 0.0
    return outer_scaled(v, lam, table).matvec(w, table).norm() / scale


def a_form_ortho_check(
    matrix: JordanMatrix, v: OctVec3, w: OctVec3, table: Optional[MultiplicationTable] = None
) -> float:
    """
    ``|((A v) v^dagger) w|``, scaled like :func:`ortho_check` and by ``scale(A)``.

    For an eigenpair ``(v, lam)`` this matches ``new_ortho_check(v, lam, w)``
    up to the factor ``|lam| / scale(A)``.

    Returns:
        The scaled norm, or 0.0 when v, w or A is zero
    """
    scale = v.norm2() * w.norm() * matrix.scale()
    if scale == 0.0:
        return 0.0
    return outer(matvec(matrix, v, table), v, table).matvec(w, table).norm() / scale


def _eigen_matrix(pairs: Sequence[EigenPair]) -> OctMatrix3:
    if len(pairs) != 3:
        raise ValueError(f"expected 3 eigenpairs, got {len(pairs)}")
    return OctMatrix3.from_columns([pair.v for pair in pairs])


def decomposition_checks(
    matrix: JordanMatrix, pairs: Sequence[EigenPair], table: Optional[MultiplicationTable] = None
) -> DecompositionDeviations:
    """
    Deviations of ``A = sum lam (v v^dagger)``, ``A = sum (v lam) v^dagger``,
    ``U U^dagger = I`` and ``(A U) U^dagger = A (U U^dagger)``. The two sums
    and the last deviation are divided by ``scale(A)``.

    Args:
        matrix: Hermitian matrix A
        pairs: Exactly three eigenpairs, the columns of U
        table: Multiplication table (default table when None)

    Returns:
        The four deviations

    Raises:
        ValueError: If ``pairs`` does not hold three eigenpairs
    """
    scale = matrix.scale()
    full = matrix.to_matrix()
    left_sum = OctMatrix3.zeros()
    right_sum = OctMatrix3.zeros()
    for pair in pairs:
        left_sum = left_sum + outer(pair.v, pair.v, table).left_scale(pair.lam, table)
        right_sum = right_sum + outer_scaled(pair.v, pair.lam, table)
    u = _eigen_matrix(pairs)
    u_dagger = u.dagger()
    uu = u.matmul(u_dagger, table)
    regrouped = full.matmul(u, table).matmul(u_dagger, table) - full.matmul(uu, table)
    return DecompositionDeviations(
        weighted_sum=(full - left_sum).norm() / scale,
        scaled_sum=(full - right_sum).norm() / scale,
        unitarity=(uu - OctMatrix3.identity()).norm(),
        associativity=regrouped.norm() / scale,
    )


def matrix_form_checks(
    matrix: JordanMatrix, pairs: Sequence[EigenPair], table: Optional[MultiplicationTable] = None
) -> float:
    """``|A U - U D| / scale(A)`` with ``D = diag(lam)`` multiplying columns on the right."""
    u = _eigen_matrix(pairs)
    au = matrix.to_matrix().matmul(u, table)
    ud = OctMatrix3.from_columns([pair.v.right_mul(pair.lam, table) for pair in pairs])
    return (au - ud).norm() / matrix.scale()


def six_square_sum(vectors: Sequence[OctVec3], table: Optional[MultiplicationTable] = None) -> OctMatrix3:
    """``sum v v^dagger`` over (normalized) vectors."""
    total = OctMatrix3.zeros()
    for v in vectors:
        total = total + outer(v, v, table)
    return total


def identity_checks(
    v: OctVec3, lam: OctLike, table: Optional[MultiplicationTable] = None
) -> IdentityDeviations:
    """
    Deviations of ``((v lam) v^dagger) v = v lam`` (normalized v) and
    ``(v^dagger v) lam = v^dagger (v lam)`` (any v).
    """
    lam = _as_octonion(lam)
    v_lam = v.right_mul(lam, table)
    unit = v.normalized() if v.norm() > 0.0 else v
    unit_lam = unit.right_mul(lam, table)
    projector = (outer_scaled(unit, lam, table).matvec(unit, table) - unit_lam).norm()
    gram = v.dagger_dot(v, table)
    associated = (mul(gram, lam, table) - v.dagger_dot(v_lam, table)).norm()
    return IdentityDeviations(projector=projector, associator=associated)


# Orthogonal triple search


def _triple_residual_vector(
    fixed: OctVec3, u: OctVec3, w: OctVec3, table: Optional[MultiplicationTable]
) -> FloatArray:
    members = (fixed, u, w)
    parts = []
    for first, second in itertools.permutations(range(3), 2):
        v, target = members[first], members[second]
        parts.append(outer(v, v, table).matvec(target, table).flat)
    return np.concatenate(parts)


def triple_residual(
    fixed: OctVec3, u: OctVec3, w: OctVec3, table: Optional[MultiplicationTable] = None
) -> float:
    """Largest pairwise :func:`ortho_check` over the six ordered pairs of a triple."""
    members = (fixed, u, w)
    return max(
        ortho_check(members[first], members[second], table)
        for first, second in itertools.permutations(range(3), 2)
    )


def orthogonal_triple_search(
    matrix: JordanMatrix,
    fixed: EigenPair,
    others: Sequence[Tuple[Octonion, FloatArray]],
    restarts: Optional[int] = None,
    seed: int = 0,
    settings: SolverSettings = DEFAULT_SETTINGS,
    table: Optional[MultiplicationTable] = None,
) -> float:
    """
    Best (lowest) pairwise orthogonality residual over triples
    ``{fixed, u, w}`` with u and w taken from the given eigenspaces.

    ``others`` holds ``(lam, basis)`` with ``basis`` a 24 x k matrix of
    orthonormal columns. Restarts cycle through the pairs of spaces (with
    repetition); each draws its start from ``default_rng([seed, restart])``
    and is refined by ``scipy.optimize.least_squares``.

    Args:
        matrix: Hermitian matrix A
        fixed: Eigenpair kept as the first member of every triple
        others: Eigenspaces to draw u and w from
        restarts: Number of restarts (``settings.triple_restarts`` when None)
        seed: Seed for the starting points
        settings: Solver settings
        table: Multiplication table (default table when None)

    Returns:
        The best residual, or ``inf`` when every eigenspace is empty
    """
    restarts = settings.triple_restarts if restarts is None else restarts
    bases = [orthonormal_columns(basis) for _, basis in others]
    bases = [basis for basis in bases if basis.shape[1] > 0]
    if not bases:
        return math.inf
    fixed_v = fixed.v.normalized()
    pairs = list(itertools.combinations_with_replacement(range(len(bases)), 2))
    best = math.inf

    for restart in range(restarts):
        rng = np.random.default_rng([seed, restart])
        first, second = (bases[index] for index in pairs[restart % len(pairs)])
        split = first.shape[1]

        def vectors(params: FloatArray) -> Tuple[OctVec3, OctVec3]:
            u = first @ params[:split]
            w = second @ params[split:]
            nu, nw = np.sqrt(u @ u), np.sqrt(w @ w)
            u = u / nu if nu > 0.0 else u
            w = w / nw if nw > 0.0 else w
            return OctVec3.from_array(u), OctVec3.from_array(w)

        def objective(params: FloatArray) -> FloatArray:
            u, w = vectors(params)
            return _triple_residual_vector(fixed_v, u, w, table)

        start = rng.standard_normal(split + second.shape[1])
        try:
            result = least_squares(objective, start, max_nfev=200, xtol=1e-14, ftol=1e-14, gtol=1e-14)
            params = result.x
        except ValueError:
            params = start
        u, w = vectors(params)
        if u.norm() == 0.0 or w.norm() == 0.0:
            continue
        best = min(best, triple_residual(fixed_v, u, w, table))
        if best <= 1e-12:
            break

    logger.debug("orthogonal_triple_search best residual %.3g over %d restarts", best, restarts)
    return best


def eigenspaces(
    matrix: JordanMatrix,
    lambdas: Sequence[OctLike],
    tol: float = DEFAULT_SETTINGS.nullity_tol,
    table: Optional[MultiplicationTable] = None,
) -> List[Tuple[Octonion, FloatArray]]:
    """``(lam, basis)`` pairs suitable for :func:`orthogonal_triple_search`."""
    spaces = []
    for lam in lambdas:
        lam = _as_octonion(lam)
        spaces.append((lam, null_space(shifted_operator(matrix, lam, table), tol)))
    return spaces
