"""
The exceptional Jordan algebra of 3x3 octonionic Hermitian matrices.

A :class:`JordanMatrix` stores only ``(p, m, n, a, b, c)`` and is laid out as::

    | p        a        conj(b) |
    | conj(a)  m        c       |
    | b        conj(c)  n       |

General 3x3 octonionic matrices (:class:`OctMatrix3`) and column vectors
(:class:`OctVec3`) are arrays of coefficients of shape (3, 3, 8) and (3, 8).
Every product keeps the entry of the left factor on the left.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from .octonion import (
    FloatArray,
    MultiplicationTable,
    Octonion,
    Real,
    ZERO,
    _resolve,
    conj,
    mul,
)

OctLike = Union[Octonion, Real]


def _as_octonion(value: OctLike) -> Octonion:
    return value if isinstance(value, Octonion) else Octonion.real(value)


def _conj_array(data: FloatArray) -> FloatArray:
    out = -data
    out[..., 0] = data[..., 0]
    return out


class OctVec3:
    """A column vector ``(x, y, z)`` of three octonions."""

    __slots__ = ("_data",)
    __array_ufunc__ = None

    def __init__(self, x: OctLike = 0.0, y: OctLike = 0.0, z: OctLike = 0.0):
        data = np.stack([_as_octonion(x).coeffs, _as_octonion(y).coeffs, _as_octonion(z).coeffs])
        data.setflags(write=False)
        self._data = data

    @classmethod
    def from_array(cls, data: Sequence[float]) -> "OctVec3":
        arr = np.array(data, dtype=float).reshape(3, 8)
        return cls(Octonion(arr[0]), Octonion(arr[1]), Octonion(arr[2]))

    @classmethod
    def basis(cls, slot: int, unit: OctLike = 1.0) -> "OctVec3":
        parts: list = [0.0, 0.0, 0.0]
        parts[slot] = unit
        return cls(*parts)

    @property
    def data(self) -> FloatArray:
        return self._data

    @property
    def flat(self) -> FloatArray:
        return self._data.reshape(24)

    @property
    def x(self) -> Octonion:
        return Octonion(self._data[0])

    @property
    def y(self) -> Octonion:
        return Octonion(self._data[1])

    @property
    def z(self) -> Octonion:
        return Octonion(self._data[2])

    def components(self) -> Tuple[Octonion, Octonion, Octonion]:
        return self.x, self.y, self.z

    def __add__(self, other: "OctVec3") -> "OctVec3":
        return OctVec3.from_array(self._data + other._data)

    def __sub__(self, other: "OctVec3") -> "OctVec3":
        return OctVec3.from_array(self._data - other._data)

    def __neg__(self) -> "OctVec3":
        return OctVec3.from_array(-self._data)

    def __mul__(self, scalar: Real) -> "OctVec3":
        return OctVec3.from_array(self._data * float(scalar))

    __rmul__ = __mul__

    def __truediv__(self, scalar: Real) -> "OctVec3":
        return OctVec3.from_array(self._data / float(scalar))

    def right_mul(self, lam: OctLike, table: Optional[MultiplicationTable] = None) -> "OctVec3":
        """``v lam``, each component multiplied by ``lam`` on the right."""
        lam = _as_octonion(lam)
        data = np.einsum("iq,r,qrs->is", self._data, lam.coeffs, _resolve(table).tensor)
        return OctVec3.from_array(data)

    def dagger_dot(self, other: "OctVec3", table: Optional[MultiplicationTable] = None) -> Octonion:
        """``v^dagger w = sum_i conj(v_i) w_i``."""
        total = np.einsum(
            "iq,ir,qrs->s", _conj_array(self._data), other._data, _resolve(table).tensor
        )
        return Octonion(total)

    def norm2(self) -> float:
        return float(np.sum(self._data * self._data))

    def norm(self) -> float:
        return math.sqrt(self.norm2())

    def normalized(self) -> "OctVec3":
        """
        Returns:
            ``v / |v|``

        Raises:
            ZeroDivisionError: If v is the zero vector
        """
        size = self.norm()
        if size == 0.0:
            raise ZeroDivisionError("cannot normalize the zero vector")
        return self / size

    def isclose(self, other: "OctVec3", atol: float = 1e-12) -> bool:
        return float(np.linalg.norm(self._data - other._data)) <= atol

    def __repr__(self) -> str:
        return f"OctVec3(x={self.x!r}, y={self.y!r}, z={self.z!r})"


class OctMatrix3:
    """A general (not necessarily Hermitian) 3x3 octonionic matrix."""

    __slots__ = ("_data",)
    __array_ufunc__ = None

    def __init__(self, data: Sequence[float]):
        arr = np.array(data, dtype=float).reshape(3, 3, 8)
        arr.setflags(write=False)
        self._data = arr

    @classmethod
    def from_entries(cls, rows: Sequence[Sequence[OctLike]]) -> "OctMatrix3":
        data = np.zeros((3, 3, 8))
        for i, row in enumerate(rows):
            for j, entry in enumerate(row):
                data[i, j] = _as_octonion(entry).coeffs
        return cls(data)

    @classmethod
    def zeros(cls) -> "OctMatrix3":
        return cls(np.zeros((3, 3, 8)))

    @classmethod
    def identity(cls) -> "OctMatrix3":
        data = np.zeros((3, 3, 8))
        for i in range(3):
            data[i, i, 0] = 1.0
        return cls(data)

    @classmethod
    def from_columns(cls, columns: Sequence[OctVec3]) -> "OctMatrix3":
        """The matrix U whose columns are the given vectors."""
        data = np.zeros((3, 3, 8))
        for j, column in enumerate(columns):
            data[:, j] = column.data
        return cls(data)

    @classmethod
    def diagonal(cls, entries: Sequence[OctLike]) -> "OctMatrix3":
        data = np.zeros((3, 3, 8))
        for i, entry in enumerate(entries):
            data[i, i] = _as_octonion(entry).coeffs
        return cls(data)

    @property
    def data(self) -> FloatArray:
        return self._data

    def entry(self, i: int, j: int) -> Octonion:
        return Octonion(self._data[i, j])

    def __add__(self, other: "OctMatrix3") -> "OctMatrix3":
        return OctMatrix3(self._data + other._data)

    def __sub__(self, other: "OctMatrix3") -> "OctMatrix3":
        return OctMatrix3(self._data - other._data)

    def __neg__(self) -> "OctMatrix3":
        return OctMatrix3(-self._data)

    def __mul__(self, scalar: Real) -> "OctMatrix3":
        return OctMatrix3(self._data * float(scalar))

    __rmul__ = __mul__

    def left_scale(self, lam: OctLike, table: Optional[MultiplicationTable] = None) -> "OctMatrix3":
        """Entrywise ``lam M_ij``."""
        lam = _as_octonion(lam)
        return OctMatrix3(np.einsum("q,ijr,qrs->ijs", lam.coeffs, self._data, _resolve(table).tensor))

    def dagger(self) -> "OctMatrix3":
        return OctMatrix3(_conj_array(np.transpose(self._data, (1, 0, 2))))

    def matmul(self, other: "OctMatrix3", table: Optional[MultiplicationTable] = None) -> "OctMatrix3":
        return gen_matmul(self, other, table)

    def matvec(self, v: OctVec3, table: Optional[MultiplicationTable] = None) -> OctVec3:
        data = np.einsum("ijq,jr,qrs->is", self._data, v.data, _resolve(table).tensor)
        return OctVec3.from_array(data)

    def norm(self) -> float:
        """Frobenius norm over all 72 real coefficients."""
        return float(np.sqrt(np.sum(self._data * self._data)))

    def max_entry_norm(self) -> float:
        return float(np.max(np.sqrt(np.sum(self._data * self._data, axis=2))))

    def is_hermitian(self, atol: float = 1e-12) -> bool:
        return float(np.max(np.abs(self._data - self.dagger().data))) <= atol

    def __repr__(self) -> str:
        rows = [[self.entry(i, j) for j in range(3)] for i in range(3)]
        return f"OctMatrix3({rows!r})"


@dataclass(frozen=True)
class JordanMatrix:
    """A 3x3 octonionic Hermitian matrix, Hermitian by construction."""

    p: float
    m: float
    n: float
    a: Octonion = ZERO
    b: Octonion = ZERO
    c: Octonion = ZERO

    def __post_init__(self) -> None:
        for name in ("p", "m", "n"):
            object.__setattr__(self, name, float(getattr(self, name)))
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, _as_octonion(getattr(self, name)))

    @classmethod
    def diag(cls, p: Real, m: Real, n: Real) -> "JordanMatrix":
        return cls(p, m, n)

    @classmethod
    def identity(cls) -> "JordanMatrix":
        return cls(1.0, 1.0, 1.0)

    @classmethod
    def from_matrix(cls, matrix: OctMatrix3) -> "JordanMatrix":
        """Hermitian part of ``matrix`` read back into Jordan form."""
        e = matrix.entry
        return cls(
            p=e(0, 0).re(),
            m=e(1, 1).re(),
            n=e(2, 2).re(),
            a=0.5 * (e(0, 1) + conj(e(1, 0))),
            b=0.5 * (e(2, 0) + conj(e(0, 2))),
            c=0.5 * (e(1, 2) + conj(e(2, 1))),
        )

    def to_matrix(self) -> OctMatrix3:
        return OctMatrix3.from_entries(
            [
                [self.p, self.a, conj(self.b)],
                [conj(self.a), self.m, self.c],
                [self.b, conj(self.c), self.n],
            ]
        )

    def __add__(self, other: "JordanMatrix") -> "JordanMatrix":
        return JordanMatrix(
            self.p + other.p, self.m + other.m, self.n + other.n,
            self.a + other.a, self.b + other.b, self.c + other.c,
        )

    def __sub__(self, other: "JordanMatrix") -> "JordanMatrix":
        return self + (-1.0) * other

    def __mul__(self, scalar: Real) -> "JordanMatrix":
        s = float(scalar)
        return JordanMatrix(self.p * s, self.m * s, self.n * s, self.a * s, self.b * s, self.c * s)

    __rmul__ = __mul__

    def scale(self) -> float:
        """``max(1, largest entry norm)``; tolerances of cubic identities grow as its cube."""
        return max(1.0, abs(self.p), abs(self.m), abs(self.n), self.a.norm(), self.b.norm(), self.c.norm())

    def max_entry_norm(self) -> float:
        return max(abs(self.p), abs(self.m), abs(self.n), self.a.norm(), self.b.norm(), self.c.norm())


def gen_matmul(
    left: OctMatrix3, right: OctMatrix3, table: Optional[MultiplicationTable] = None
) -> OctMatrix3:
    """
    Row-by-column product; entries of ``left`` multiply on the left.

    Args:
        left: Left factor
        right: Right factor
        table: Multiplication table (default table when None)

    Returns:
        ``(left right)_ik = sum_j left_ij right_jk``; not associative in general
    """
    partial = np.einsum("ijq,qrs->ijrs", left.data, _resolve(table).tensor)
    data = np.einsum("ijrs,jkr->iks", partial, right.data)
    return OctMatrix3(data)


def jordan_product(
    first: JordanMatrix, second: JordanMatrix, table: Optional[MultiplicationTable] = None
) -> JordanMatrix:
    """
    ``A o B = 1/2 (AB + BA)``.

    Args:
        first: A
        second: B
        table: Multiplication table (default table when None)

    Returns:
        The Jordan product, Hermitian again
    """
    ma, mb = first.to_matrix(), second.to_matrix()
    total = gen_matmul(ma, mb, table) + gen_matmul(mb, ma, table)
    return JordanMatrix.from_matrix(total * 0.5)


def power2(matrix: JordanMatrix, table: Optional[MultiplicationTable] = None) -> JordanMatrix:
    return jordan_product(matrix, matrix, table)


def power3_both(
    matrix: JordanMatrix, table: Optional[MultiplicationTable] = None
) -> Tuple[JordanMatrix, JordanMatrix]:
    """``(A^2 o A, A o A^2)``; equal by power-associativity."""
    square = power2(matrix, table)
    return jordan_product(square, matrix, table), jordan_product(matrix, square, table)


def power3(matrix: JordanMatrix, table: Optional[MultiplicationTable] = None) -> JordanMatrix:
    return power3_both(matrix, table)[0]


def trace(matrix: JordanMatrix) -> float:
    return matrix.p + matrix.m + matrix.n


def sigma(matrix: JordanMatrix) -> float:
    """Closed form ``pm + pn + mn - |a|^2 - |b|^2 - |c|^2``."""
    A = matrix
    return A.p * A.m + A.p * A.n + A.m * A.n - A.a.norm2() - A.b.norm2() - A.c.norm2()


def sigma_from_traces(matrix: JordanMatrix, table: Optional[MultiplicationTable] = None) -> float:
    """``1/2 ((tr A)^2 - tr(A^2))``."""
    return 0.5 * (trace(matrix) ** 2 - trace(power2(matrix, table)))


def det(matrix: JordanMatrix, table: Optional[MultiplicationTable] = None) -> float:
    """
    Closed form ``pmn + 2 Re(b(ac)) - n|a|^2 - m|b|^2 - p|c|^2``.

    Args:
        matrix: Hermitian matrix A
        table: Multiplication table (default table when None)

    Returns:
        det(A); agrees with :func:`det_freudenthal`
    """
    A = matrix
    bac = mul(A.b, mul(A.a, A.c, table), table)
    return (
        A.p * A.m * A.n
        + 2.0 * bac.re()
        - A.n * A.a.norm2()
        - A.m * A.b.norm2()
        - A.p * A.c.norm2()
    )


def freudenthal(
    first: JordanMatrix, second: JordanMatrix, table: Optional[MultiplicationTable] = None
) -> JordanMatrix:
    """``A*B = AoB - 1/2 (A tr B + B tr A) + 1/2 (tr A tr B - tr(AoB)) I``."""
    product = jordan_product(first, second, table)
    tr_a, tr_b = trace(first), trace(second)
    shift = 0.5 * (tr_a * tr_b - trace(product))
    return product - 0.5 * (first * tr_b + second * tr_a) + JordanMatrix.identity() * shift


def det_freudenthal(matrix: JordanMatrix, table: Optional[MultiplicationTable] = None) -> float:
    """``1/3 tr((A*A) o A)``."""
    adjugate = freudenthal(matrix, matrix, table)
    return trace(jordan_product(adjugate, matrix, table)) / 3.0


def char_residual(matrix: JordanMatrix, table: Optional[MultiplicationTable] = None) -> JordanMatrix:
    """``A^3 - (tr A) A^2 + sigma(A) A - (det A) I``; zero for every Jordan matrix."""
    square = power2(matrix, table)
    cube = jordan_product(square, matrix, table)
    return (
        cube
        - square * trace(matrix)
        + matrix * sigma(matrix)
        - JordanMatrix.identity() * det(matrix, table)
    )


def matvec(matrix: JordanMatrix, v: OctVec3, table: Optional[MultiplicationTable] = None) -> OctVec3:
    """
    ``A v`` with the matrix entry on the left of each product.

    Args:
        matrix: Hermitian matrix A
        v: Column vector
        table: Multiplication table (default table when None)

    Returns:
        ``(A v)_i = sum_j A_ij v_j``
    """
    return matrix.to_matrix().matvec(v, table)


def outer(v: OctVec3, w: OctVec3, table: Optional[MultiplicationTable] = None) -> OctMatrix3:
    """``v w^dagger``, entries ``v_i conj(w_j)``."""
    data = np.einsum("iq,jr,qrs->ijs", v.data, _conj_array(w.data), _resolve(table).tensor)
    return OctMatrix3(data)


def outer_scaled(v: OctVec3, lam: OctLike, table: Optional[MultiplicationTable] = None) -> OctMatrix3:
    """``(v lam) v^dagger``, entries ``(v_i lam) conj(v_j)``."""
    return outer(v.right_mul(lam, table), v, table)


def random_jordan(rng: np.random.Generator, low: float = -1.0, high: float = 1.0) -> JordanMatrix:
    """
    A matrix with every real coefficient uniform in ``[low, high]``.

    Args:
        rng: Source of randomness
        low: Lower bound of each coefficient
        high: Upper bound of each coefficient

    Returns:
        A JordanMatrix with 27 independent coefficients
    """
    diag = rng.uniform(low, high, 3)
    off = rng.uniform(low, high, (3, 8))
    return JordanMatrix(diag[0], diag[1], diag[2], Octonion(off[0]), Octonion(off[1]), Octonion(off[2]))


def random_vector(rng: np.random.Generator, normalized: bool = True) -> OctVec3:
    """Standard normal coefficients, scaled to unit length unless ``normalized`` is False."""
    v =OctVec3.from_array(rng.standard_normal(24))
    return v.normalized() if normalized else v
