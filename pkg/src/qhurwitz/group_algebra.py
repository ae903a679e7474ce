"""The center of the symmetric-group algebra, modeled explicitly.

Two bases are used, both indexed by partitions of n: the cycle-type sums
(basis tag ``C``) and the orthogonal projectors onto isotypic components
(basis tag ``F``).  The change of basis is the character transform; all
central multiplication is performed diagonally in the F basis.

Symmetric functions of the commuting star-transposition sums J_b (the sum
of transpositions (a b) with a < b) are central; their F-basis eigenvalue
at shape lambda is the symmetric function evaluated on the multiset of
cell contents of lambda.  That fact is the bridge between the algebraic
route and the exhaustive Cayley-graph walk counts computed here.

The walk counter has two interchangeable kernels: a compiled extension
and a pure-Python fallback, selected at import.  Walks are counted from
one representative per start class and scaled by the class size.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .characters import char_table
from .errors import BoundExceededError, ContextMismatchError, WeightMismatchError
from .partitions import (
    Partition,
    class_size,
    enumerate_partitions,
    z_mu,
)
from .scalars import Scalar
from .symfunc import SymmetricFunction, convert, p_eval

try:  # compiled kernel if the extension was built
    from ._pathcount import count_matrix as _count_matrix

    PATH_KERNEL = "cython"
except ImportError:  # pragma: no cover - depends on build environment
    from .pathcount_py import count_matrix as _count_matrix

    PATH_KERNEL = "python"

#: Hard bounds for exhaustive walk enumeration.
PATH_N_BOUND = 6
PATH_D_BOUND = 5


def path_kernel_name() -> str:
    """Which walk-counting kernel is active: 'cython' or 'python'."""
    return PATH_KERNEL


# ---------------------------------------------------------------------------
# Permutations (one-line notation, 0-based)
# ---------------------------------------------------------------------------


class Permutation(tuple):
    """A bijection of {0, ..., n-1} in one-line notation."""

    def __new__(cls, images):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        return super().__new__(cls, images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition self after other."""
        return Permutation(tuple(self[x] for x in other))

    def inverse(self) -> "Permutation":
        out = [0] * len(self)
        for i, v in enumerate(self):
            out[v] = i
        return Permutation(out)

    def cycle_type(self) -> Partition:
        n = len(self)
        seen = [False] * n
        cycles = []
        for i in range(n):
            if seen[i]:
                continue
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = self[j]
                length += 1
            cycles.append(length)
        return Partition(sorted(cycles, reverse=True))


def identity_permutation(n: int) -> Permutation:
    return Permutation(range(n))


def class_representative(mu) -> Permutation:
    """Canonical representative: consecutive cycles of the given lengths."""
    images = []
    offset = 0
    for part in Partition(mu):
        images.extend(list(range(offset + 1, offset + part)) + [offset])
        offset += part
    return Permutation(images)


def elements_of_class(mu, n: int) -> list[Permutation]:
    """All group elements of the given cycle type (brute force; small n)."""
    import itertools

    mu = Partition(mu)
    if mu.weight != n:
        raise WeightMismatchError(f"{mu} is not a partition of {n}")
    return [
        Permutation(p)
        for p in itertools.permutations(range(n))
        if Permutation(p).cycle_type() == mu
    ]


# ---------------------------------------------------------------------------
# Central elements
# ---------------------------------------------------------------------------


class CentralElement:
    """Element of the center, as a coefficient map over one basis."""

    __slots__ = ("n", "basis", "params", "coeffs")

    def __init__(self, n: int, basis: str, params, coeffs):
        if basis not in ("C", "F"):
            raise ValueError(f"unknown central basis {basis!r}")
        clean = {}
        for mu, value in coeffs.items():
            mu = Partition(mu)
            if mu.weight != n:
                raise WeightMismatchError(f"{mu} is not a partition of {n}")
            if value.params != params:
                raise ContextMismatchError("coefficient parameter sets disagree")
            if not value.is_zero():
                clean[mu] = value
        self.n = n
        self.basis = basis
        self.params = params
        self.coeffs = clean

    @classmethod
    def class_sum(cls, n: int, mu, params=()) -> "CentralElement":
        """The sum of all elements of cycle type mu, as a basis vector."""
        return cls(n, "C", params, {Partition(mu): Scalar.one(params)})

    @classmethod
    def identity(cls, n: int, params=()) -> "CentralElement":
        return cls.class_sum(n, Partition([1] * n) if n else Partition(), params)

    def coefficient(self, mu) -> Scalar:
        return self.coeffs.get(Partition(mu), Scalar.zero(self.params))

    def _check_compatible(self, other: "CentralElement"):
        if self.n != other.n:
            raise WeightMismatchError(
                f"central elements for different n: {self.n} vs {other.n}"
            )
        if self.params != other.params:
            raise ContextMismatchError("central elements in different contexts")

    def __add__(self, other: "CentralElement") -> "CentralElement":
        self._check_compatible(other)
        if self.basis != other.basis:
            other = other.to_basis(self.basis)
        coeffs = dict(self.coeffs)
        for mu, value in other.coeffs.items():
            coeffs[mu] = coeffs.get(mu, Scalar.zero(self.params)) + value
        return CentralElement(self.n, self.basis, self.params, coeffs)

    def __sub__(self, other: "CentralElement") -> "CentralElement":
        return self + other.scale_scalar(Scalar.from_fraction(self.params, -1))

    def scale_scalar(self, value: Scalar) -> "CentralElement":
        return CentralElement(
            self.n, self.basis, self.params,
            {mu: v * value for mu, v in self.coeffs.items()},
        )

    def to_basis(self, target: str) -> "CentralElement":
        """Character change of basis between C and F (round trip exact)."""
        if target == self.basis:
            return self
        table = char_table(self.n)
        from .partitions import hook_product

        out: dict[Partition, Scalar] = {}
        if self.basis == "C" and target == "F":
            # F-coefficient at lam of C_mu is the central character
            for mu, value in self.coeffs.items():
                zmu = z_mu(mu)
                for lam in table.irreps:
                    chi = table.value(lam, mu)
                    if chi:
                        inc = value.scale(
                            Fraction(hook_product(lam) * chi) / zmu
                        )
                        out[lam] = out.get(lam, Scalar.zero(self.params)) + inc
        elif self.basis == "F" and target == "C":
            for lam, value in self.coeffs.items():
                hinv = Fraction(1, hook_product(lam))
                for mu in table.classes:
                    chi = table.value(lam, mu)
                    if chi:
                        inc = value.scale(Fraction(chi) * hinv)
                        out[mu] = out.get(mu, Scalar.zero(self.params)) + inc
        else:
            raise ValueError(f"unknown central basis {target!r}")
        return CentralElement(self.n, target, self.params, out)

    def __eq__(self, other):
        if not isinstance(other, CentralElement):
            return NotImplemented
        if self.n != other.n or self.params != other.params:
            return False
        if self.basis != other.basis:
            other = other.to_basis(self.basis)
        return self.coeffs == other.coeffs

    def __repr__(self):
        body = ", ".join(
            f"{tuple(mu)}: {value}"
            for mu, value in sorted(self.coeffs.items())
        )
        return f"CentralElement(n={self.n}, basis={self.basis}, {{{body}}})"


def class_basis_change(x: CentralElement, target: str) -> CentralElement:
    return x.to_basis(target)


def central_multiply(x: CentralElement, y: CentralElement) -> CentralElement:
    """Product, computed diagonally in the projector basis."""
    x._check_compatible(y)
    keep_f = x.basis == "F" and y.basis == "F"
    xf = x.to_basis("F")
    yf = y.to_basis("F")
    coeffs = {}
    for lam, value in xf.coeffs.items():
        other = yf.coeffs.get(lam)
        if other is not None:
            coeffs[lam] = value * other
    product = CentralElement(x.n, "F", x.params, coeffs)
    return product if keep_f else product.to_basis("C")


@lru_cache(maxsize=None)
def _content_power_sums(lam: Partition, n: int) -> tuple[Fraction, ...]:
    """p_k of the cell contents of lam, k = 0..n (index 0 unused)."""
    cells = lam.contents()
    return tuple(
        Fraction(sum(c**k for c in cells)) for k in range(n + 1)
    )


def jm_symmetric_apply(f: SymmetricFunction, n: int) -> CentralElement:
    """Central element f(J_1, ..., J_n), in the projector basis.

    The coefficient at shape lambda is f evaluated on the contents of
    lambda (padded with zeros to n values, which the power-sum route makes
    automatic).
    """
    fp = convert(f, "p")
    params = f.params
    coeffs = {}
    for lam in enumerate_partitions(n):
        powers = _content_power_sums(lam, max(n, f.degree))
        value = Scalar.zero(params)
        for mu, coeff in fp.coeffs.items():
            factor = Fraction(1)
            for part in mu:
                factor *= powers[part]
            if factor:
                value = value + coeff.scale(factor)
        if not value.is_zero():
            coeffs[lam] = value
    return CentralElement(n, "F", params, coeffs)


# ---------------------------------------------------------------------------
# Cayley-graph walk counts
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PathCountMatrix:
    """Raw walk counts: (signature, start class, end class) -> count.

    The count is the total number of d-step transposition sequences taking
    any element of the start class into the end class with the given
    signature (start elements included in the count).
    """

    n: int
    d: int
    counts: dict

    def total(self, nu) -> int:
        """All walks from class nu, any signature and end class."""
        nu = Partition(nu)
        return sum(
            c for (sig, start, end), c in self.counts.items() if start == nu
        )

    def to_json_dict(self) -> dict:
        entries = [
            {"sig": list(sig), "from": list(start), "to": list(end), "count": c}
            for (sig, start, end), c in sorted(self.counts.items())
        ]
        return {"n": self.n, "d": self.d, "counts": entries}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))


@lru_cache(maxsize=None)
def enumerate_paths(n: int, d: int) -> PathCountMatrix:
    """Exhaustive signature-resolved walk counts between classes.

    One representative per start class is enumerated and the count scaled
    by the class size; walk counts are class functions of the start.
    """
    if n > PATH_N_BOUND or d > PATH_D_BOUND:
        raise BoundExceededError(
            f"(n={n}, d={d}) exceeds walk enumeration bounds "
            f"(n <= {PATH_N_BOUND}, d <= {PATH_D_BOUND})"
        )
    classes = enumerate_partitions(n)
    sigs = [
        sig for sig in enumerate_partitions(d) if len(sig) <= max(n - 1, 0)
    ] or [Partition()]
    class_tuples = [tuple(c) for c in classes]
    sig_tuples = [tuple(s) for s in sigs]
    counts: dict = {}
    for nu in classes:
        rep = class_representative(nu)
        size = class_size(n, nu)
        matrix = _count_matrix(tuple(rep), d, class_tuples, sig_tuples)
        for ci, mu in enumerate(classes):
            for si, sig in enumerate(sigs):
                value = matrix[ci][si]
                if value:
                    counts[(sig, nu, mu)] = size * int(value)
    return PathCountMatrix(n=n, d=d, counts=counts)


def normalized_path_count(paths: PathCountMatrix, sig, mu, nu) -> Fraction:
    """The walk count rescaled by (prod of signature-part factorials)/d!.

    This is the normalization under which the walk-transfer matrix of the
    monomial symmetric function of the J's acts as
    ``m_sig(J) C_mu = sum_nu count * z_nu / n! * C_nu``.
    """
    sig = Partition(sig)
    raw = paths.counts.get((sig, Partition(nu), Partition(mu)), 0)
    if not raw:
        return Fraction(0)
    scale = Fraction(
        math.prod(math.factorial(part) for part in sig),
        math.factorial(paths.d),
    )
    return raw * scale


def fd_bruteforce(n: int, d: int, family) -> dict:
    """Weighted walk sums by exhaustive enumeration.

    ``family`` provides ``params`` and ``path_weight(signature)``; the
    result maps (end class mu, start class nu) to the weighted count
    normalized by n! so that the d = 0 table is diag(1/z_mu).
    """
    paths = enumerate_paths(n, d)
    params = family.params
    classes = enumerate_partitions(n)
    weights = {sig: family.path_weight(sig) for sig in enumerate_partitions(d)}
    inv_nfact = Fraction(1, math.factorial(n))
    table = {}
    for mu in classes:
        for nu in classes:
            total = Scalar.zero(params)
            for sig in enumerate_partitions(d):
                m = normalized_path_count(paths, sig, mu, nu)
                if m:
                    total = total + weights[sig].scale(m * inv_nfact)
            table[(mu, nu)] = total
    return table
