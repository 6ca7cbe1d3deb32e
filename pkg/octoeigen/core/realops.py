"""
Dense real kernels for the small linear problems behind the eigen solvers.

Octonion-linear maps are linearized into real matrices of size 8x8 (one
octonion) or 24x24 (an OctVec3). The factorizations are written directly on
numpy arrays:

* one-sided (Hestenes) Jacobi SVD, rotating disjoint column pairs in
  round-robin order so each round is a single vectorized update;
* Householder Hessenberg reduction and QR;
* Francis double-shift QR iteration for eigenvalues;
* the trigonometric method for real cubic roots.
"""

from __future__ import annotations

import logging
import math
from typing import Callable, List, Optional, Tuple

import numpy as np

from .errors import OctoEigenError
from .jordan import OctVec3
from .octonion import FloatArray, Octonion

logger = logging.getLogger(__name__)

_EPS = np.finfo(float).eps
_TINY = np.finfo(float).tiny
_JACOBI_TOL = 1e-15
_MAX_SWEEPS = 60


def _norm(data: FloatArray) -> float:
    """Euclidean (Frobenius for matrices) norm."""
    return float(np.sqrt(np.sum(np.square(data))))


class NoConvergence(OctoEigenError):
    """An iterative kernel exhausted its iteration budget."""

    def __init__(self, kernel: str, iterations: int, size: int):
        self.kernel = kernel
        self.iterations = iterations
        self.size = size
        super().__init__(f"{kernel} did not converge after {iterations} iterations (size {size})")


# Linearization


def linearize_oct_map(f: Callable[[Octonion], Octonion]) -> FloatArray:
    """8x8 matrix whose column q is the coefficient vector of ``f(e_q)``."""
    eye = np.eye(8)
    return np.column_stack([f(Octonion(eye[q])).coeffs for q in range(8)])


def linearize_vec_map(f: Callable[[OctVec3], OctVec3]) -> FloatArray:
    """24x24 matrix of a real-linear map on OctVec3, ordered as ``OctVec3.flat``."""
    eye = np.eye(24)
    return np.column_stack([f(OctVec3.from_array(eye[q])).flat for q in range(24)])


# Singular values


def _round_robin(n: int) -> List[Tuple[np.ndarray, np.ndarray]]:
    """Disjoint pair schedule covering every column pair once per sweep."""
    players = list(range(n if n % 2 == 0 else n + 1))
    size = len(players)
    rounds = []
    for _ in range(size - 1):
        left, right = [], []
        for k in range(size // 2):
            a, b = players[k], players[size - 1 - k]
            if a < n and b < n:
                left.append(min(a, b))
                right.append(max(a, b))
        rounds.append((np.array(left, dtype=int), np.array(right, dtype=int)))
        players = [players[0]] + [players[-1]] + players[1:-1]
    return rounds


def jacobi_svd(matrix: FloatArray) -> Tuple[FloatArray, FloatArray, FloatArray]:
    """
    Thin SVD ``M = U diag(s) V^T`` by one-sided Jacobi rotations.

    A column pair is rotated while its inner product exceeds both
    ``1e-15 * |c_i| |c_j|`` and ``eps * |M|_F^2``; the absolute floor stops
    the sweeps once only numerically null columns remain coupled.

    Args:
        matrix: Real matrix with rows >= cols

    Returns:
        ``(U, s, V)`` with singular values in descending order. Columns of U
        for zero singular values are left as zero vectors.

    Raises:
        ValueError: If the matrix is wider than it is tall
    """
    work = np.array(matrix, dtype=float, copy=True)
    rows, cols = work.shape
    if rows < cols:
        raise ValueError(f"jacobi_svd needs rows >= cols, got {rows}x{cols}")
    right = np.eye(cols)
    schedule = _round_robin(cols)
    floor = _EPS * float(np.einsum("ij,ij->", work, work))

    for sweep in range(_MAX_SWEEPS):
        rotated = False
        for first, second in schedule:
            if first.size == 0:
                continue
            col_i, col_j = work[:, first], work[:, second]
            alpha = np.einsum("ij,ij->j", col_i, col_i)
            beta = np.einsum("ij,ij->j", col_j, col_j)
            gamma = np.einsum("ij,ij->j", col_i, col_j)
            active = np.abs(gamma) > np.maximum(_JACOBI_TOL * np.sqrt(alpha * beta), floor)
            if not np.any(active):
                continue
            rotated = True
            safe_gamma = np.where(active, gamma, 1.0)
            zeta = (beta - alpha) / (2.0 * safe_gamma)
            sign = np.where(zeta >= 0.0, 1.0, -1.0)
            t = sign / (np.abs(zeta) + np.hypot(1.0, zeta))
            c = np.where(active, 1.0 / np.hypot(1.0, t), 1.0)
            s = np.where(active, c * t, 0.0)

            work[:, first], work[:, second] = c * col_i - s * col_j, s * col_i + c * col_j
            v_i, v_j = right[:, first], right[:, second]
            right[:, first], right[:, second] = c * v_i - s * v_j, s * v_i + c * v_j
        if not rotated:
            break
    else:
        logger.warning("jacobi_svd stopped after %d sweeps on a %dx%d matrix", _MAX_SWEEPS, rows, cols)

    values = np.sqrt(np.einsum("ij,ij->j", work, work))
    order = np.argsort(-values, kind="stable")
    values = values[order]
    work = work[:, order]
    right = right[:, order]
    left = np.zeros_like(work)
    nonzero = values > 0.0
    left[:, nonzero] = work[:, nonzero] / values[nonzero]
    return left, values, right


def singular_values(matrix: FloatArray) -> FloatArray:
    rows, cols = matrix.shape
    source = matrix if rows >= cols else matrix.T
    return jacobi_svd(source)[1]


def smallest_singular(matrix: FloatArray) -> Tuple[float, FloatArray]:
    """
    Smallest singular value and its right-singular vector.

    Args:
        matrix: Real matrix with rows >= cols

    Returns:
        ``(sigma_min, v)`` with ``v`` a unit vector minimizing ``|M v|``
    """
    _, values, right = jacobi_svd(matrix)
    return float(values[-1]), right[:, -1].copy()


def _threshold(values: FloatArray, tol: float) -> float:
    top = float(values[0]) if values.size else 0.0
    return max(tol * top, _TINY)


def nullity(matrix: FloatArray, tol: float = 1e-7) -> int:
    """
    Numerical dimension of the null space.

    Args:
        matrix: Real square (or tall) matrix
        tol: Relative cutoff; singular values below ``tol * sigma_max`` count as zero

    Returns:
        Number of singular values under the cutoff. A zero matrix has full nullity.
    """
    values = singular_values(matrix)
    return int(np.sum(values < _threshold(values, tol)))


def null_space(matrix: FloatArray, tol: float = 1e-7) -> FloatArray:
    """Orthonormal columns spanning the numerical null space (same cutoff as :func:`nullity`)."""
    _, values, right = jacobi_svd(matrix)
    keep = values < _threshold(values, tol)
    return right[:, keep].copy()


def min_norm_solve(matrix: FloatArray, rhs: FloatArray, rcond: float = 1e-12) -> FloatArray:
    """Minimum-norm least-squares solution through the Jacobi SVD pseudo-inverse."""
    rows, cols = matrix.shape
    if rows >= cols:
        left, values, right = jacobi_svd(matrix)
    else:
        right, values, left = jacobi_svd(matrix.T)
    cutoff = rcond * (values[0] if values.size else 0.0)
    inverse = np.where(values > cutoff, 1.0 / np.where(values > cutoff, values, 1.0), 0.0)
    return right @ (inverse * (left.T @ rhs))


# Eigenvalues


def householder_vector(x: FloatArray) -> Tuple[FloatArray, float]:
    """Unit ``v`` and ``beta = 2`` (or 0) with ``(I - beta v v^T) x`` along e_1."""
    size = _norm(x)
    if size == 0.0:
        return np.zeros_like(x), 0.0
    v = np.array(x, dtype=float, copy=True)
    v[0] += math.copysign(size, x[0]) if x[0] != 0.0 else size
    length = _norm(v)
    if length == 0.0:
        return np.zeros_like(x), 0.0
    return v / length, 2.0


def hessenberg(matrix: FloatArray) -> FloatArray:
    """Upper Hessenberg matrix similar to ``matrix`` via Householder reflections."""
    work = np.array(matrix, dtype=float, copy=True)
    size = work.shape[0]
    for k in range(size - 2):
        v, beta = householder_vector(work[k + 1 :, k])
        if beta == 0.0:
            continue
        work[k + 1 :, :] -= beta * np.outer(v, v @ work[k + 1 :, :])
        work[:, k + 1 :] -= beta * np.outer(work[:, k + 1 :] @ v, v)
        work[k + 2 :, k] = 0.0
    return work


def householder_qr(matrix: FloatArray) -> Tuple[FloatArray, FloatArray]:
    """``(Q, R)`` with Q orthogonal (rows x rows) and R upper triangular."""
    r = np.array(matrix, dtype=float, copy=True)
    rows, cols = r.shape
    q = np.eye(rows)
    for k in range(min(rows - 1, cols)):
        v, beta = householder_vector(r[k:, k])
        if beta == 0.0:
            continue
        r[k:, :] -= beta * np.outer(v, v @ r[k:, :])
        q[:, k:] -= beta * np.outer(q[:, k:] @ v, v)
        r[k + 1 :, k] = 0.0
    return q, r


def _eig2x2(block: FloatArray) -> List[complex]:
    a, b = block[0]
    c, d = block[1]
    mid = 0.5 * (a + d)
    disc = 0.25 * (a - d) ** 2 + b * c
    if disc >= 0.0:
        root = math.sqrt(disc)
        return [complex(mid + root), complex(mid - root)]
    root = math.sqrt(-disc)
    return [complex(mid, root), complex(mid, -root)]


def eigenvalues(matrix: FloatArray, max_iter: int = 100) -> List[complex]:
    """
    All eigenvalues of a small real square matrix.

    Francis double-shift QR on the Hessenberg form; 1x1 and 2x2 blocks are
    deflated when the subdiagonal falls below machine precision relative to
    its neighbours.

    Args:
        matrix: Real square matrix
        max_iter: Iterations allowed per deflated block

    Returns:
        Eigenvalues as complex numbers, in deflation order

    Raises:
        NoConvergence: If a block needs more than ``max_iter`` iterations
    """
    h = hessenberg(matrix)
    size = h.shape[0]
    scale_norm = float(np.max(np.abs(h))) if size else 0.0
    found: List[complex] = []
    hi = size - 1
    iterations = 0
    while hi >= 0:
        lo = hi
        while lo > 0:
            local = abs(h[lo - 1, lo - 1]) + abs(h[lo, lo])
            if local == 0.0:
                local = scale_norm
            if abs(h[lo, lo - 1]) <= _EPS * local:
                h[lo, lo - 1] = 0.0
                break
            lo -= 1

        if lo == hi:
            found.append(complex(h[hi, hi]))
            hi -= 1
            iterations = 0
            continue
        if lo == hi - 1:
            found.extend(_eig2x2(h[lo : hi + 1, lo : hi + 1]))
            hi -= 2
            iterations = 0
            continue

        iterations += 1
        if iterations > max_iter:
            raise NoConvergence("francis_qr", max_iter, size)

        window = h[lo : hi + 1, lo : hi + 1]
        if iterations % 10 == 0:
            # exceptional shift
            x = abs(window[-1, -2]) + abs(window[-2, -3])
            trace_shift, det_shift = 1.5 * x, x * x
        else:
            trace_shift = window[-2, -2] + window[-1, -1]
            det_shift = window[-2, -2] * window[-1, -1] - window[-2, -1] * window[-1, -2]
        shifted = window @ window - trace_shift * window + det_shift * np.eye(window.shape[0])
        q, _ = householder_qr(shifted)
        h[lo : hi + 1, lo : hi + 1] = hessenberg(q.T @ window @ q)
    return found


def _deduplicate(values: List[float], tol: float) -> List[float]:
    clusters: List[List[float]] = []
    for value in sorted(values):
        if clusters and value - clusters[-1][-1] <= tol:
            clusters[-1].append(value)
        else:
            clusters.append([value])
    return [float(np.mean(cluster)) for cluster in clusters]


def real_eigenvalues(matrix: FloatArray, tol: float = 1e-7, max_iter: int = 100) -> List[float]:
    """
    Real eigenvalues, deduplicated.

    Args:
        matrix: Real square matrix
        tol: Relative threshold. An eigenvalue counts as real when its
            imaginary part is below ``tol * |M|_F``; sorted values closer
            than the same amount merge into their mean.
        max_iter: Passed to :func:`eigenvalues`

    Returns:
        Distinct real eigenvalues in ascending order

    Raises:
        NoConvergence: If the QR iteration runs out of budget
    """
    spread = max(tol * _norm(matrix), _TINY)
    reals = [value.real for value in eigenvalues(matrix, max_iter) if abs(value.imag) < spread]
    return _deduplicate(reals, spread)


# Cubics


def _cubic_value(t2: float, t1: float, t0: float, x: float) -> Tuple[float, float]:
    value = ((x + t2) * x + t1) * x + t0
    slope = (3.0 * x + 2.0 * t2) * x + t1
    return value, slope


def _polish(t2: float, t1: float, t0: float, root: float, steps: int = 3) -> float:
    value, slope = _cubic_value(t2, t1, t0, root)
    for _ in range(steps):
        if slope == 0.0 or value == 0.0:
            break
        candidate = root - value / slope
        new_value, new_slope = _cubic_value(t2, t1, t0, candidate)
        if abs(new_value) >= abs(value):
            break
        root, value, slope = candidate, new_value, new_slope
    return root


def cubic_roots(t2: float, t1: float, t0: float) -> List[float]:
    """
    Real roots of ``x^3 + t2 x^2 + t1 x + t0``, ascending, with multiplicity.

    The variable is first rescaled by ``max(|t2|, |t1|^(1/2), |t0|^(1/3))`` so
    the thresholds below see a cubic with coefficients of order one. Three
    roots come from the trigonometric form whenever the discriminant allows
    it (a slightly negative discriminant from roundoff is clamped so double
    roots are not lost); otherwise the single real root comes from the
    hyperbolic forms.

    Args:
        t2: Coefficient of ``x^2``
        t1: Coefficient of ``x``
        t0: Constant term

    Returns:
        One or three real roots, each polished by Newton steps
    """
    unit = max(abs(t2), math.sqrt(abs(t1)), float(np.cbrt(abs(t0))))
    if unit == 0.0:
        return [0.0, 0.0, 0.0]
    u2, u1, u0 = t2 / unit, t1 / unit ** 2, t0 / unit ** 3
    shift = u2 / 3.0
    p = u1 - u2 * u2 / 3.0
    q = 2.0 * u2 ** 3 / 27.0 - u2 * u1 / 3.0 + u0

    if abs(p) <= 1e-14:
        if abs(q) <= 1e-14:
            depressed = [0.0, 0.0, 0.0]
        else:
            depressed = [float(np.cbrt(-q))]
    elif p < 0.0:
        radius = 2.0 * math.sqrt(-p / 3.0)
        arg = (3.0 * q / (2.0 * p)) * math.sqrt(-3.0 / p)
        if abs(arg) <= 1.0 + 1e-10:
            angle = math.acos(max(-1.0, min(1.0, arg))) / 3.0
            depressed = [radius * math.cos(angle - 2.0 * math.pi * k / 3.0) for k in range(3)]
        else:
            depressed = [
                -math.copysign(1.0, q) * radius * math.cosh(math.acosh(abs(arg)) / 3.0)
            ]
    else:
        radius = 2.0 * math.sqrt(p / 3.0)
        arg = (3.0 * q / (2.0 * p)) * math.sqrt(3.0 / p)
        depressed = [-radius * math.sinh(math.asinh(arg) / 3.0)]

    roots = [_polish(t2, t1, t0, unit * (t - shift)) for t in depressed]
    return sorted(roots)


def cubic_residual(t2: float, t1: float, t0: float, root: float) -> float:
    return abs(_cubic_value(t2, t1, t0, root)[0])


def orthonormal_columns(columns: FloatArray, tol: float = 1e-12) -> FloatArray:
    """Orthonormal basis of the column span (modified Gram-Schmidt, rank-revealing)."""
    basis: List[FloatArray] = []
    for column in np.asarray(columns, dtype=float).T:
        work = column.copy()
        for _ in range(2):
            for vector in basis:
                work -= (vector @ work) * vector
        size = _norm(work)
        if size > tol * max(1.0, _norm(column)):
            basis.append(work / size)
    if not basis:
        return np.zeros((np.asarray(columns).shape[0], 0))
    return np.column_stack(basis)


def project_onto(basis: FloatArray, vector: FloatArray) -> Optional[FloatArray]:
    """Unit projection of ``vector`` onto an orthonormal ``basis``; None if it vanishes."""
    projected = basis @ (basis.T @ vector)
    size = _norm(projected)
    if size <= 1e-12:
        return None
    return projected / size
