"""
Octonion arithmetic.

Octonions are stored as 8 real coefficients over the basis
``{1, i, j, k, kl, jl, il, l}``. Multiplication goes through an (8, 8, 8)
structure-constant tensor held by a :class:`MultiplicationTable`; the default
table comes from Cayley-Dickson doubling of the quaternions with doubling
unit ``l``::

    (a + b l)(c + d l) = (a c - conj(d) b) + (d a + b conj(c)) l
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Dict, Iterator, Optional, Sequence, Tuple, Union

import numpy as np
import numpy.typing as npt

FloatArray = npt.NDArray[np.float64]
Real = Union[int, float]

BASIS_NAMES: Tuple[str, ...] = ("1", "i", "j", "k", "kl", "jl", "il", "l")

# Coefficient slots of the quaternion b in a + b l, ordered (1, i, j, k).
_DOUBLED_SLOTS = [7, 6, 5, 4]


def _quat_mul(a: FloatArray, b: FloatArray) -> FloatArray:
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return np.array(
        [
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        ]
    )


def _quat_conj(a: FloatArray) -> FloatArray:
    return np.array([a[0], -a[1], -a[2], -a[3]])


def _cayley_dickson_product(x: FloatArray, y: FloatArray) -> FloatArray:
    a, b = x[:4], x[_DOUBLED_SLOTS]
    c, d = y[:4], y[_DOUBLED_SLOTS]
    out = np.zeros(8)
    out[:4] = _quat_mul(a, c) - _quat_mul(_quat_conj(d), b)
    out[_DOUBLED_SLOTS] = _quat_mul(d, a) + _quat_mul(b, _quat_conj(c))
    return out


Triple = Tuple[int, int, int]


@dataclass(frozen=True)
class MultiplicationTable:
    """
    Octonion multiplication encoded by 7 oriented Fano lines.

    Each triple ``(q, r, s)`` uses 1-based basis indices (1 is the real unit)
    and means ``e_q e_r = e_s`` together with its cyclic shifts; reversing
    any two factors flips the sign.
    """

    name: str
    triples: Tuple[Triple, ...]
    tensor: FloatArray = field(repr=False, compare=False)

    @classmethod
    def from_triples(cls, triples: Sequence[Triple], name: str) -> "MultiplicationTable":
        if len(triples) != 7:
            raise ValueError(f"expected 7 oriented lines, got {len(triples)}")
        tensor = np.zeros((8, 8, 8))
        for q in range(8):
            tensor[0, q, q] = 1.0
            tensor[q, 0, q] = 1.0
        for q in range(1, 8):
            tensor[q, q, 0] = -1.0
        for line in triples:
            q, r, s = (index - 1 for index in line)
            for x, y, z in ((q, r, s), (r, s, q), (s, q, r)):
                tensor[x, y, z] = 1.0
                tensor[y, x, z] = -1.0
        tensor.setflags(write=False)
        return cls(name=name, triples=tuple(tuple(t) for t in triples), tensor=tensor)

    @classmethod
    def cayley_dickson(cls) -> "MultiplicationTable":
        """The default table: Cayley-Dickson doubling of H with unit l."""
        eye = np.eye(8)
        triples = []
        seen = set()
        for q, r in itertools.combinations(range(1, 8), 2):
            product = _cayley_dickson_product(eye[q], eye[r])
            s = int(np.argmax(np.abs(product)))
            line = frozenset((q, r, s))
            if line in seen:
                continue
            seen.add(line)
            oriented = (q, r, s) if product[s] > 0 else (r, q, s)
            triples.append(tuple(index + 1 for index in oriented))
        return cls.from_triples(triples, name="cayley-dickson (a+bl)(c+dl)=(ac-conj(d)b)+(da+b conj(c))l")

    def lines(self) -> Tuple[frozenset, ...]:
        """The unoriented Fano lines."""
        return tuple(frozenset(t) for t in self.triples)

    def with_orientation(self, flips: int) -> "MultiplicationTable":
        """Reverse every line whose bit is set in the 7-bit mask ``flips``."""
        triples = []
        for bit, (q, r, s) in enumerate(self.triples):
            triples.append((r, q, s) if flips >> bit & 1 else (q, r, s))
        return MultiplicationTable.from_triples(triples, name=f"{self.name} flips={flips:07b}")

    def orientations(self) -> Iterator["MultiplicationTable"]:
        """All 2**7 orientation assignments of this table's lines."""
        for flips in range(1 << 7):
            yield self.with_orientation(flips)

    def describe(self) -> str:
        names = ", ".join(
            f"{BASIS_NAMES[q - 1]}*{BASIS_NAMES[r - 1]}={BASIS_NAMES[s - 1]}"
            for q, r, s in self.triples
        )
        return f"{self.name} [{names}]"

    def is_alternative(self, atol: float = 1e-12) -> bool:
        """Check [b, a, a] = 0 on basis elements and e_q**2 = -1."""
        eye = np.eye(8)
        for q in range(1, 8):
            square = _raw_mul(eye[q], eye[q], self.tensor)
            if not np.allclose(square, -eye[0], atol=atol):
                return False
        for q, r in itertools.product(range(8), repeat=2):
            a, b = eye[q] + eye[r], eye[r]
            left = _raw_mul(_raw_mul(b, a, self.tensor), a, self.tensor)
            right = _raw_mul(b, _raw_mul(a, a, self.tensor), self.tensor)
            if not np.allclose(left, right, atol=atol):
                return False
        return True


def _raw_mul(a: FloatArray, b: FloatArray, tensor: FloatArray) -> FloatArray:
    return b @ (a @ tensor.reshape(8, 64)).reshape(8, 8)


DEFAULT_TABLE = MultiplicationTable.cayley_dickson()


def _resolve(table: Optional[MultiplicationTable]) -> MultiplicationTable:
    return DEFAULT_TABLE if table is None else table


class Octonion:
    """An immutable octonion with 8 real coefficients."""

    __slots__ = ("_coeffs",)
    __array_ufunc__ = None

    def __init__(self, coeffs: Optional[Sequence[float]] = None):
        if coeffs is None:
            data = np.zeros(8)
        else:
            data = np.array(coeffs, dtype=float).reshape(8)
        data.setflags(write=False)
        self._coeffs = data

    @classmethod
    def real(cls, value: Real) -> "Octonion":
        data = np.zeros(8)
        data[0] = value
        return cls(data)

    @classmethod
    def unit(cls, name: Union[str, int]) -> "Octonion":
        index = BASIS_NAMES.index(name) if isinstance(name, str) else int(name)
        data = np.zeros(8)
        data[index] = 1.0
        return cls(data)

    @classmethod
    def from_terms(cls, terms: Dict[str, float]) -> "Octonion":
        data = np.zeros(8)
        for name, value in terms.items():
            data[BASIS_NAMES.index(name)] += value
        return cls(data)

    @property
    def coeffs(self) -> FloatArray:
        return self._coeffs

    def to_list(self) -> list:
        return [float(c) for c in self._coeffs]

    def __add__(self, other: Union["Octonion", Real]) -> "Octonion":
        if isinstance(other, Octonion):
            return Octonion(self._coeffs + other._coeffs)
        return self + Octonion.real(other)

    __radd__ = __add__

    def __sub__(self, other: Union["Octonion", Real]) -> "Octonion":
        if isinstance(other, Octonion):
            return Octonion(self._coeffs - other._coeffs)
        return self - Octonion.real(other)

    def __rsub__(self, other: Real) -> "Octonion":
        return Octonion.real(other) - self

    def __neg__(self) -> "Octonion":
        return Octonion(-self._coeffs)

    def __mul__(self, other: Union["Octonion", Real]) -> "Octonion":
        if isinstance(other, Octonion):
            return mul(self, other)
        return Octonion(self._coeffs * float(other))

    def __rmul__(self, other: Real) -> "Octonion":
        return Octonion(self._coeffs * float(other))

    def __truediv__(self, other: Real) -> "Octonion":
        return Octonion(self._coeffs / float(other))

    def conj(self) -> "Octonion":
        return conj(self)

    def re(self) -> float:
        return float(self._coeffs[0])

    def im(self) -> "Octonion":
        return im(self)

    def norm(self) -> float:
        return norm(self)

    def norm2(self) -> float:
        return float(self._coeffs @ self._coeffs)

    def dot(self, other: "Octonion") -> float:
        return dot(self, other)

    def is_real(self, atol: float = 1e-12) -> bool:
        return bool(np.max(np.abs(self._coeffs[1:])) <= atol)

    def isclose(self, other: Union["Octonion", Real], rtol: float = 1e-12, atol: float = 1e-12) -> bool:
        """Approximate comparison; there is deliberately no exact ``__eq__``."""
        if not isinstance(other, Octonion):
            other = Octonion.real(other)
        gap = float(np.linalg.norm(self._coeffs - other._coeffs))
        return gap <= atol + rtol * max(self.norm(), other.norm())

    def __repr__(self) -> str:
        terms = []
        for name, value in zip(BASIS_NAMES, self._coeffs):
            if value == 0.0:
                continue
            label = "" if name == "1" else name
            terms.append(f"{value:+.6g}{label}")
        body = " ".join(terms) if terms else "0"
        return f"Octonion({body})"


ONE = Octonion.unit("1")
I = Octonion.unit("i")
J = Octonion.unit("j")
K = Octonion.unit("k")
KL = Octonion.unit("kl")
JL = Octonion.unit("jl")
IL = Octonion.unit("il")
L = Octonion.unit("l")
ZERO = Octonion()


def mul(a: Octonion, b: Octonion, table: Optional[MultiplicationTable] = None) -> Octonion:
    """The product ``a b`` under ``table`` (default: Cayley-Dickson)."""
    return Octonion(_raw_mul(a.coeffs, b.coeffs, _resolve(table).tensor))


def conj(a: Octonion) -> Octonion:
    data = -a.coeffs
    data[0] = a.coeffs[0]
    return Octonion(data)


def re(a: Octonion) -> float:
    return a.re()


def im(a: Octonion) -> Octonion:
    data = a.coeffs.copy()
    data[0] = 0.0
    return Octonion(data)


def dot(a: Octonion, b: Octonion) -> float:
    """Euclidean inner product inherited from R^8."""
    return float(a.coeffs @ b.coeffs)


def dot_via_products(a: Octonion, b: Octonion, table: Optional[MultiplicationTable] = None) -> float:
    """``Re(1/2 (a conj(b) + b conj(a)))`` computed with octonion products."""
    total = mul(a, conj(b), table) + mul(b, conj(a), table)
    return 0.5 * total.re()


def norm(a: Octonion) -> float:
    return math.sqrt(a.norm2())


def associator(
    a: Octonion, b: Octonion, c: Octonion, table: Optional[MultiplicationTable] = None
) -> Octonion:
    """``[a, b, c] = (a b) c - a (b c)``."""
    return mul(mul(a, b, table), c, table) - mul(a, mul(b, c, table), table)


# Batched kernels over arrays of shape (N, 8); used by the identity suites.


def batch_mul(a: FloatArray, b: FloatArray, table: Optional[MultiplicationTable] = None) -> FloatArray:
    return np.einsum("nq,nr,qrs->ns", a, b, _resolve(table).tensor, optimize=True)


def batch_conj(a: FloatArray) -> FloatArray:
    out = -a
    out[:, 0] = a[:, 0]
    return out


def batch_dot(a: FloatArray, b: FloatArray) -> FloatArray:
    return np.einsum("nq,nq->n", a, b)


def batch_norm(a: FloatArray) -> FloatArray:
    return np.sqrt(batch_dot(a, a))


def batch_associator(
    a: FloatArray, b: FloatArray, c: FloatArray, table: Optional[MultiplicationTable] = None
) -> FloatArray:
    return batch_mul(batch_mul(a, b, table), c, table) - batch_mul(a, batch_mul(b, c, table), table)


def random_octonions(rng: np.random.Generator, count: int, unit: bool = True) -> FloatArray:
    """Gaussian samples, optionally projected to the unit sphere."""
    data = rng.standard_normal((count, 8))
    if unit:
        data /= batch_norm(data)[:, None]
    return data
