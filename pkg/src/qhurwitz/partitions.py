"""Integer partitions and the scalar combinatorics attached to them.

A :class:`Partition` is a weakly decreasing tuple of positive integers;
the empty partition is the unique partition of 0.  Partitions index
conjugacy classes, irreducible representations, path signatures and
ramification profiles throughout the package, and the canonical ordering
everywhere is reverse-lexicographic: for weight 3 that is
``(3), (2,1), (1,1,1)``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import BoundExceededError, WeightMismatchError
from .scalars import Poly, Scalar, make_params

#: Default ceiling for partition enumeration.
PARTITION_BOUND = 12


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p <= 0:
                raise ValueError(f"partition parts must be positive: {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts must weakly decrease: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> dict[int, int]:
        """Map part value -> number of occurrences."""
        mult: dict[int, int] = {}
        for p in self:
            mult[p] = mult.get(p, 0) + 1
        return mult

    def contents(self) -> list[int]:
        """Cell contents j - i, rows before columns, both 1-based."""
        return [j - i for i, part in enumerate(self, 1) for j in range(1, part + 1)]

    def __repr__(self):
        return f"Partition{tuple(self)!r}"


EMPTY = Partition()


def enumerate_partitions(n: int, bound: int = PARTITION_BOUND) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order, largest first.

    >>> enumerate_partitions(3)
    [Partition(3,), Partition(2, 1), Partition(1, 1, 1)]
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > bound:
        raise BoundExceededError(
            f"n={n} exceeds the partition enumeration bound {bound}"
        )
    return [Partition(p) for p in _partitions_raw(n, n)]


@lru_cache(maxsize=None)
def _partitions_raw(n: int, cap: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, cap), 0, -1):
        for rest in _partitions_raw(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def dominance_less(mu: Partition, lam: Partition) -> bool:
    """Strict dominance: every partial sum of mu is <= that of lam, mu != lam."""
    if sum(mu) != sum(lam):
        raise WeightMismatchError(
            f"dominance needs equal weights: {mu} vs {lam}"
        )
    if tuple(mu) == tuple(lam):
        return False
    acc_mu = acc_lam = 0
    for i in range(max(len(mu), len(lam))):
        acc_mu += mu[i] if i < len(mu) else 0
        acc_lam += lam[i] if i < len(lam) else 0
        if acc_mu > acc_lam:
            return False
    return True


def z_mu(mu: Partition) -> Fraction:
    """Order of the centralizer of a permutation of cycle type mu."""
    value = 1
    for part, mult in Partition(mu).multiplicities().items():
        value *= part**mult * math.factorial(mult)
    return Fraction(value)


def class_size(n: int, mu: Partition) -> int:
    """Number of elements of cycle type mu in the symmetric group on n."""
    if sum(mu) != n:
        raise WeightMismatchError(f"{mu} is not a partition of {n}")
    return math.factorial(n) // int(z_mu(mu))


_QT = make_params(("q", "t"))


def z_mu_qt(mu: Partition, q: Scalar | None = None, t: Scalar | None = None) -> Scalar:
    """Two-parameter deformation of z_mu.

    Multiplies z_mu by the product over parts m of (1 - q^m)/(1 - t^m).
    With no arguments the result lives in the symbolic (q, t) context.
    """
    if q is None:
        q = Scalar.param(_QT, "q")
    if t is None:
        t = Scalar.param(_QT, "t")
    params = q.params
    one = Scalar.one(params)
    value = Scalar.from_fraction(params, z_mu(mu))
    for part in mu:
        value = value * (one - q**part) / (one - t**part)
    return value


def colength(mu: Partition) -> int:
    """Weight minus length: transpositions needed to build the class."""
    return sum(mu) - len(mu)


def aut_order(lam: Partition) -> int:
    """Order of the automorphism group: product of multiplicity factorials."""
    value = 1
    for mult in Partition(lam).multiplicities().values():
        value *= math.factorial(mult)
    return value


def contents(lam: Partition) -> list[int]:
    return Partition(lam).contents()


def hook_product(lam: Partition) -> int:
    """Product of the hook lengths, via the inverse-factorial determinant.

    The reciprocal of det(1/(lam_i - i + j)!) over 1 <= i, j <= length.
    """
    lam = Partition(lam)
    ell = len(lam)
    if ell == 0:
        return 1
    matrix = []
    for i in range(1, ell + 1):
        row = []
        for j in range(1, ell + 1):
            k = lam[i - 1] - i + j
            row.append(Fraction(0) if k < 0 else Fraction(1, math.factorial(k)))
        matrix.append(row)
    det = _det_fraction(matrix)
    if det == 0:
        raise ArithmeticError(f"singular hook determinant for {lam}")
    value = 1 / det
    assert value.denominator == 1
    return int(value)


def _det_fraction(matrix: list[list[Fraction]]) -> Fraction:
    """Fraction-exact determinant by Gaussian elimination."""
    m = [row[:] for row in matrix]
    size = len(m)
    det = Fraction(1)
    for col in range(size):
        pivot = next(
            (r for r in range(col, size) if m[r][col] != 0), None
        )
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, size):
            factor = m[r][col] * inv
            if factor == 0:
                continue
            for c in range(col, size):
                m[r][c] -= factor * m[col][c]
    return det


_U = make_params(("u",))


def pochhammer_partition(lam: Partition) -> Scalar:
    """Partition Pochhammer symbol: product of (u + content) over cells.

    A polynomial in u of degree equal to the weight.
    """
    u = Poly.variable(_U, "u")
    value = Poly.constant(_U, 1)
    for c in Partition(lam).contents():
        value = value * (u + Poly.constant(_U, c))
    return Scalar.from_poly(value)


def partitions_leq_weight(n_max: int, bound: int = PARTITION_BOUND) -> list[Partition]:
    """All partitions of weight 0..n_max, ordered by weight then revlex."""
    out: list[Partition] = []
    for n in range(n_max + 1):
        out.extend(enumerate_partitions(n, bound))
    return out
