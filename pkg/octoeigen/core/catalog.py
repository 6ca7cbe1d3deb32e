"""
Built-in example matrices and their listed eigenpairs.

Entries are transcribed from the printed matrices; the Jordan layout stores
``a`` = (1,2) entry, ``b`` = (3,1) entry, ``c`` = (2,3) entry, so the printed
(1,3) entry is ``conj(b)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .jordan import JordanMatrix, OctVec3
from .octonion import I, IL, J, JL, K, KL, L, ONE, MultiplicationTable, Octonion, conj, mul

SQRT5 = math.sqrt(5.0)


@dataclass(frozen=True)
class ListedPair:
    """An eigenvector as printed (not normalized) with its printed eigenvalue."""

    name: str
    v: OctVec3
    lam: Octonion

    @property
    def unit(self) -> OctVec3:
        return self.v.normalized()


@dataclass(frozen=True)
class ExampleCase:
    name: str
    matrix: JordanMatrix
    params: Dict[str, float]
    pairs: Tuple[ListedPair, ...] = field(default=())

    def pair(self, name: str) -> ListedPair:
        for item in self.pairs:
            if item.name == name:
                return item
        raise KeyError(f"{self.name} has no listed eigenpair {name!r}")

    def names(self) -> List[str]:
        return [item.name for item in self.pairs]


def example1_s(theta: float) -> Octonion:
    """``s = cos(theta) + kl sin(theta)``."""
    return math.cos(theta) + math.sin(theta) * KL


def example1(
    p: float = 0.0, q: float = 1.0, theta: float = 0.0, table: Optional[MultiplicationTable] = None
) -> ExampleCase:
    """
    B with rows ``(p, iq, kqs) / (-iq, p, jq) / (-kqs, -jq, p)``.

    Listed pairs: ``u+-`` = (i, 0, j) S+-, ``v+-`` = (j, 2ks, i) S+- with
    lambda = p +- q conj(s), and ``w+-`` = (j, -ks, i) S+- with
    lambda = p -+ 2q conj(s), where S+ = -kl and S- = 1.
    """
    s = example1_s(theta)
    ks = mul(K, s, table)
    matrix = JordanMatrix(p, p, p, a=q * I, b=conj(q * ks), c=q * J)
    s_bar = conj(s)
    pairs = []
    for sign, label, unit in ((1.0, "plus", -1.0 * KL), (-1.0, "minus", ONE)):
        u = OctVec3(I, 0.0, J).right_mul(unit, table)
        v = OctVec3(J, 2.0 * ks, I).right_mul(unit, table)
        w = OctVec3(J, -1.0 * ks, I).right_mul(unit, table)
        pairs.append(ListedPair(f"u_{label}", u, p + sign * q * s_bar))
        pairs.append(ListedPair(f"v_{label}", v, p + sign * q * s_bar))
        pairs.append(ListedPair(f"w_{label}", w, p - sign * 2.0 * q * s_bar))
    return ExampleCase("example1", matrix, {"p": p, "q": q, "theta": theta}, tuple(pairs))


EXAMPLE2_S = SQRT5 / 3.0 - (2.0 / 3.0) * KL


def example2(p: float = 0.0, q: float = 1.0, table: Optional[MultiplicationTable] = None) -> ExampleCase:
    """
    B-hat: as Example 1 with the (1,3) and (2,3) entries halved and
    ``s = sqrt(5)/3 - (2/3) kl``, i.e. (1,3) entry ``(q/6)(sqrt(5) k + 2l)``.
    """
    ks = mul(K, EXAMPLE2_S, table)
    matrix = JordanMatrix(p, p, p, a=q * I, b=conj(0.5 * q * ks), c=0.5 * q * J)
    sj_il = SQRT5 * J - 2.0 * IL
    sk_l = SQRT5 * K + 2.0 * L
    pairs = (
        ListedPair("u1", OctVec3(3.0 * K, sj_il, 1.0 + SQRT5 * KL), (p + SQRT5 / 2.0 * q) - (q / 2.0) * KL),
        ListedPair("u2", OctVec3(sk_l, 3.0 * J, SQRT5 - KL), (p + SQRT5 / 2.0 * q) + (q / 2.0) * KL),
        ListedPair("v1", OctVec3(sj_il, 3.0 * K, 0.0), (p - SQRT5 / 3.0 * q) + (2.0 * q / 3.0) * KL),
        ListedPair("v2", OctVec3(3.0 * J, sk_l, 0.0), (p - SQRT5 / 3.0 * q) - (2.0 * q / 3.0) * KL),
        ListedPair("w1", OctVec3(3.0 * K, sj_il, -7.0 - SQRT5 * KL), (p - SQRT5 / 6.0 * q) - (q / 6.0) * KL),
        ListedPair("w2", OctVec3(sk_l, 3.0 * J, -3.0 * SQRT5 - 3.0 * KL), (p - SQRT5 / 6.0 * q) + (q / 6.0) * KL),
    )
    return ExampleCase("example2", matrix, {"p": p, "q": q}, pairs)


def example2_printed_real_eigenvalues(p: float = 0.0, q: float = 1.0) -> Tuple[Tuple[float, ...], Tuple[float, ...]]:
    """The two real families exactly as printed, third value included."""
    third = 0.5 * q * (1.0 - math.sqrt(3.0) / 2.0)
    return (
        (p + q, p - 0.5 * q * (1.0 + math.sqrt(3.0)), p - third),
        (p - q, p + 0.5 * q * (1.0 + math.sqrt(3.0)), p + third),
    )


def example2_real_eigenvalues(p: float = 0.0, q: float = 1.0) -> Tuple[Tuple[float, ...], Tuple[float, ...]]:
    """The families with the third value ``p -+ (q/2)(1 - sqrt(3))``, which respects the trace."""
    third = 0.5 * q * (1.0 - math.sqrt(3.0))
    return (
        (p + q, p - 0.5 * q * (1.0 + math.sqrt(3.0)), p - third),
        (p - q, p + 0.5 * q * (1.0 + math.sqrt(3.0)), p + third),
    )


EXAMPLE3_A = I
EXAMPLE3_B = J - IL - JL
EXAMPLE3_C = 1.0 + K + L


def example3(p: float = 0.0, q: float = 1.0, table: Optional[MultiplicationTable] = None) -> ExampleCase:
    """
    C with ``a = iq``, ``b = q(j - il - jl)``, ``c = q(1 + k + l)``.

    The printed (3,2) entry carries a minus sign that would break
    Hermiticity; the Hermitian value ``conj(c) = q(1 - k - l)`` is used.
    The listed eigenpair is ``v = (j, l, 0)`` with ``lambda = p + q lk``.
    """
    matrix = JordanMatrix(p, p, p, a=q * EXAMPLE3_A, b=q * EXAMPLE3_B, c=q * EXAMPLE3_C)
    lk = mul(L, K, table)
    pairs = (ListedPair("v", OctVec3(J, L, 0.0), p + q * lk),)
    return ExampleCase("example3", matrix, {"p": p, "q": q}, pairs)


def build_example(
    number: int,
    p: float = 0.0,
    q: float = 1.0,
    theta: float = 0.0,
    table: Optional[MultiplicationTable] = None,
) -> ExampleCase:
    if number == 1:
        return example1(p, q, theta, table)
    if number == 2:
        return example2(p, q, table)
    if number == 3:
        return example3(p, q, table)
    raise ValueError(f"unknown example {number}; expected 1, 2 or 3")
