"""Graded symmetric-function arithmetic over exact rational functions.

A :class:`SymmetricFunction` is a finite coefficient map from partitions
of a fixed degree to :class:`~qhurwitz.scalars.Scalar` values, tagged
with a basis:

* ``p`` -- power sums, ``m`` -- monomial, ``s`` -- Schur;
* ``P_macdonald`` -- the two-parameter deformation of the monomial basis,
  orthogonal for the deformed power-sum pairing and unitriangular in
  dominance order;
* ``hl_q`` -- products of one-row Hall-Littlewood polynomials scaled so
  they expand the two-variable kernel at q = 0;
* ``jack_g`` -- the one-parameter analog of products of one-row functions
  arising from the (1 - z c)^(-1/alpha) kernel.

All conversions route through the power-sum basis.  Transition data is
cached per degree; the deformed bases additionally cache per parameter
value, so symbolic and numerically bound parameters coexist.

Evaluation at a finite list of rationals always goes through the p basis:
power sums of an explicit list are trivial to compute exactly, and a
single evaluation path keeps the code honest.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping, Sequence

from .characters import char_table
from .errors import BoundExceededError, ContextMismatchError, WeightMismatchError
from .partitions import (
    Partition,
    dominance_less,
    enumerate_partitions,
    z_mu,
)
from .scalars import Scalar, ZSeries, make_params

#: Largest degree for generic basis conversions.
DEGREE_BOUND = 12
#: Largest degree for the two-parameter orthogonal basis.
MACDONALD_BOUND = 8

BASES = ("p", "m", "s", "P_macdonald", "hl_q", "jack_g")


class SymmetricFunction:
    """Homogeneous symmetric function: basis tag plus coefficient map."""

    __slots__ = ("params", "degree", "basis", "coeffs")

    def __init__(self, params, degree, basis, coeffs: Mapping[Partition, Scalar]):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        clean = {}
        for lam, value in coeffs.items():
            lam = Partition(lam)
            if lam.weight != degree:
                raise WeightMismatchError(
                    f"index {lam} does not have weight {degree}"
                )
            if value.params != params:
                raise ContextMismatchError(
                    "coefficient parameter sets disagree"
                )
            if not value.is_zero():
                clean[lam] = value
        self.params = params
        self.degree = degree
        self.basis = basis
        self.coeffs = clean

    def coefficient(self, lam) -> Scalar:
        return self.coeffs.get(Partition(lam), Scalar.zero(self.params))

    def __eq__(self, other):
        if not isinstance(other, SymmetricFunction):
            return NotImplemented
        return (
            self.params == other.params
            and self.degree == other.degree
            and self.basis == other.basis
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        body = ", ".join(
            f"{tuple(lam)}: {value}" for lam, value in sorted(self.coeffs.items())
        )
        return f"SymmetricFunction({self.basis}, deg={self.degree}, {{{body}}})"


# ---------------------------------------------------------------------------
# Transition matrices between p and m (parameter-free, exact rationals)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _distribution_count(parts: tuple[int, ...], capacities: tuple[int, ...]) -> int:
    """Maps from the listed parts onto labeled boxes with exact box sums."""
    if not parts:
        return 1 if all(c == 0 for c in capacities) else 0
    head, rest = parts[0], parts[1:]
    total = 0
    for b, cap in enumerate(capacities):
        if cap >= head:
            total += _distribution_count(
                rest, capacities[:b] + (cap - head,) + capacities[b + 1:]
            )
    return total


@lru_cache(maxsize=None)
def p_to_m_matrix(n: int) -> tuple[tuple[Fraction, ...], ...]:
    """Row mu, column lam: coefficient of m_lam in p_mu (integers)."""
    order = enumerate_partitions(n)
    return tuple(
        tuple(
            Fraction(_distribution_count(tuple(mu), tuple(lam)))
            for lam in order
        )
        for mu in order
    )


@lru_cache(maxsize=None)
def m_to_p_matrix(n: int) -> tuple[tuple[Fraction, ...], ...]:
    return _invert_fraction_matrix(p_to_m_matrix(n))


def _invert_fraction_matrix(matrix) -> tuple[tuple[Fraction, ...], ...]:
    size = len(matrix)
    work = [list(row) + [Fraction(int(i == j)) for j in range(size)]
            for i, row in enumerate(matrix)]
    for col in range(size):
        pivot = next(r for r in range(col, size) if work[r][col] != 0)
        work[col], work[pivot] = work[pivot], work[col]
        inv = 1 / work[col][col]
        work[col] = [x * inv for x in work[col]]
        for r in range(size):
            if r != col and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
    return tuple(tuple(row[size:]) for row in work)


# ---------------------------------------------------------------------------
# Conversions through the p basis
# ---------------------------------------------------------------------------


def _vector(f: SymmetricFunction, order) -> list[Scalar]:
    return [f.coefficient(lam) for lam in order]


def _from_vector(params, degree, basis, order, vec) -> SymmetricFunction:
    return SymmetricFunction(
        params, degree, basis, dict(zip(order, vec))
    )


def _apply_fraction_matrix(vec: Sequence[Scalar], matrix, params) -> list[Scalar]:
    """Row vector times matrix with rational entries."""
    size = len(vec)
    out = [Scalar.zero(params) for _ in range(size)]
    for i, value in enumerate(vec):
        if value.is_zero():
            continue
        for j in range(size):
            entry = matrix[i][j]
            if entry:
                out[j] = out[j] + value.scale(entry)
    return out


def _to_p(f: SymmetricFunction, q=None, t=None, alpha=None) -> SymmetricFunction:
    n = f.degree
    order = enumerate_partitions(n)
    params = f.params
    if f.basis == "p":
        return f
    if f.basis == "m":
        vec = _apply_fraction_matrix(_vector(f, order), m_to_p_matrix(n), params)
        return _from_vector(params, n, "p", order, vec)
    if f.basis == "s":
        table = char_table(n)
        coeffs: dict[Partition, Scalar] = {}
        for lam, value in f.coeffs.items():
            for mu in order:
                chi = table.value(lam, mu)
                if chi:
                    inc = value.scale(Fraction(chi) / z_mu(mu))
                    coeffs[mu] = coeffs.get(mu, Scalar.zero(params)) + inc
        return SymmetricFunction(params, n, "p", coeffs)
    if f.basis == "P_macdonald":
        q, t = _resolve_qt(params, q, t)
        acc: dict[Partition, Scalar] = {}
        for lam, value in f.coeffs.items():
            mvec = macdonald_P(lam, q, t)
            for mu, k in mvec_to_p(mvec).coeffs.items():
                acc[mu] = acc.get(mu, Scalar.zero(params)) + value * k
        return SymmetricFunction(params, n, "p", acc)
    if f.basis in ("hl_q", "jack_g"):
        basis_p = _product_basis_in_p(f.basis, n, params, q, t, alpha)
        acc: dict[Partition, Scalar] = {}
        for lam, value in f.coeffs.items():
            for mu, k in basis_p[Partition(lam)].items():
                acc[mu] = acc.get(mu, Scalar.zero(params)) + value * k
        return SymmetricFunction(params, n, "p", acc)
    raise ValueError(f.basis)


def _from_p(f: SymmetricFunction, target: str, q=None, t=None, alpha=None) -> SymmetricFunction:
    n = f.degree
    order = enumerate_partitions(n)
    params = f.params
    if target == "p":
        return f
    if target == "m":
        vec = _apply_fraction_matrix(_vector(f, order), p_to_m_matrix(n), params)
        return _from_vector(params, n, "m", order, vec)
    if target == "s":
        table = char_table(n)
        coeffs: dict[Partition, Scalar] = {}
        for mu, value in f.coeffs.items():
            for lam in order:
                chi = table.value(lam, mu)
                if chi:
                    inc = value.scale(chi)
                    coeffs[lam] = coeffs.get(lam, Scalar.zero(params)) + inc
        return SymmetricFunction(params, n, "s", coeffs)
    if target == "P_macdonald":
        q, t = _resolve_qt(params, q, t)
        # solve through the m basis: unitriangular in dominance order
        in_m = _from_p(f, "m")
        remaining = dict(in_m.coeffs)
        out: dict[Partition, Scalar] = {}
        for lam in order:  # revlex descending refines dominance downward
            value = remaining.pop(lam, Scalar.zero(params))
            if value.is_zero():
                continue
            out[lam] = value
            for mu, k in macdonald_P(lam, q, t).items():
                if mu == lam:
                    continue
                cur = remaining.get(mu, Scalar.zero(params)) - value * k
                if cur.is_zero():
                    remaining.pop(mu, None)
                else:
                    remaining[mu] = cur
        return SymmetricFunction(params, n, "P_macdonald", out)
    if target in ("hl_q", "jack_g"):
        basis_p = _product_basis_in_p(target, n, params, q, t, alpha)
        matrix = [
            [basis_p[lam].get(mu, Scalar.zero(params)) for mu in order]
            for lam in order
        ]
        inverse = _invert_scalar_matrix(matrix, params)
        vec = _vector(f, order)
        out_vec = [Scalar.zero(params) for _ in order]
        for i, value in enumerate(vec):
            if value.is_zero():
                continue
            for j in range(len(order)):
                entry = inverse[i][j]
                if not entry.is_zero():
                    out_vec[j] = out_vec[j] + value * entry
        return _from_vector(params, n, target, order, out_vec)
    raise ValueError(f"unknown basis {target!r}")


def _invert_scalar_matrix(matrix, params):
    size = len(matrix)
    one = Scalar.one(params)
    zero = Scalar.zero(params)
    work = [
        list(row) + [one if i == j else zero for j in range(size)]
        for i, row in enumerate(matrix)
    ]
    for col in range(size):
        pivot = next(r for r in range(col, size) if not work[r][col].is_zero())
        work[col], work[pivot] = work[pivot], work[col]
        inv = one / work[col][col]
        work[col] = [x * inv for x in work[col]]
        for r in range(size):
            if r != col and not work[r][col].is_zero():
                factor = work[r][col]
                work[r] = [
                    x - factor * y for x, y in zip(work[r], work[col])
                ]
    return [row[size:] for row in work]


def convert(
    f: SymmetricFunction,
    target_basis: str,
    q: Scalar | None = None,
    t: Scalar | None = None,
    alpha: Scalar | None = None,
) -> SymmetricFunction:
    """Re-express in another basis; round trips are exact identities."""
    if f.degree > DEGREE_BOUND:
        raise BoundExceededError(
            f"degree {f.degree} exceeds conversion bound {DEGREE_BOUND}"
        )
    if target_basis == f.basis:
        return f
    in_p = _to_p(f, q=q, t=t, alpha=alpha)
    return _from_p(in_p, target_basis, q=q, t=t, alpha=alpha)


def _resolve_qt(params, q, t):
    if q is None:
        q = Scalar.param(params, "q")
    if t is None:
        t = Scalar.param(params, "t")
    if q.params != params or t.params != params:
        raise ContextMismatchError("q/t parameter sets disagree with operand")
    return q, t


# ---------------------------------------------------------------------------
# The deformed scalar product and the Macdonald basis
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _z_qt(mu: Partition, q: Scalar, t: Scalar) -> Scalar:
    params = q.params
    one = Scalar.one(params)
    value = Scalar.from_fraction(params, z_mu(mu))
    for part in mu:
        value = value * (one - q**part) / (one - t**part)
    return value


def scalar_product_qt(
    f: SymmetricFunction,
    g: SymmetricFunction,
    q: Scalar | None = None,
    t: Scalar | None = None,
) -> Scalar:
    """Bilinear pairing with the power sums diagonal: (p_mu, p_mu) = z_mu(q,t)."""
    if f.degree != g.degree:
        raise WeightMismatchError(
            f"degrees differ: {f.degree} vs {g.degree}"
        )
    if f.params != g.params:
        raise ContextMismatchError("operands in different parameter sets")
    q, t = _resolve_qt(f.params, q, t)
    fp = _to_p(f)
    gp = _to_p(g)
    total = Scalar.zero(f.params)
    for mu, a in fp.coeffs.items():
        b = gp.coeffs.get(mu)
        if b is not None:
            total = total + a * b * _z_qt(mu, q, t)
    return total


@lru_cache(maxsize=None)
def _m_gram_matrix(n: int, q: Scalar, t: Scalar):
    """Pairing of monomial basis elements at the given parameter values."""
    params = q.params
    order = enumerate_partitions(n)
    m2p = m_to_p_matrix(n)
    zvals = [_z_qt(mu, q, t) for mu in order]
    size = len(order)
    gram = [[Scalar.zero(params)] * size for _ in range(size)]
    for a in range(size):
        for b in range(a, size):
            total = Scalar.zero(params)
            for r in range(size):
                xa = m2p[a][r]
                xb = m2p[b][r]
                if xa and xb:
                    total = total + zvals[r].scale(xa * xb)
            gram[a][b] = total
            gram[b][a] = total
    return gram


@lru_cache(maxsize=None)
def _macdonald_degree(n: int, q: Scalar, t: Scalar):
    """All P_lam of degree n as m-basis coefficient dicts."""
    params = q.params
    order = enumerate_partitions(n)
    index = {lam: i for i, lam in enumerate(order)}
    gram = _m_gram_matrix(n, q, t)
    result: dict[Partition, dict[Partition, Scalar]] = {}
    norms: dict[Partition, Scalar] = {}
    one = Scalar.one(params)

    def pair_m_with(vec: dict[Partition, Scalar], lam: Partition) -> Scalar:
        row = gram[index[lam]]
        total = Scalar.zero(params)
        for mu, coeff in vec.items():
            entry = row[index[mu]]
            if not entry.is_zero():
                total = total + coeff * entry
        return total

    # ascending order: dominance-smaller partitions first (revlex reversed)
    for lam in reversed(order):
        vec = {lam: one}
        for mu in reversed(order):
            if mu == lam:
                break
            if not dominance_less(mu, lam):
                continue
            overlap = pair_m_with(result[mu], lam)
            if overlap.is_zero():
                continue
            factor = overlap / norms[mu]
            for rho, coeff in result[mu].items():
                cur = vec.get(rho, Scalar.zero(params)) - factor * coeff
                if cur.is_zero():
                    vec.pop(rho, None)
                else:
                    vec[rho] = cur
        result[lam] = vec
        # (P, P) = (m_lam, P) because the lower orthogonalized terms drop out
        norms[lam] = pair_m_with(vec, lam)
    return result, norms


def macdonald_P(lam, q: Scalar | None = None, t: Scalar | None = None) -> dict[Partition, Scalar]:
    """Coefficients on the monomial basis of the orthogonal deformation.

    Unit coefficient on m_lam, support only on dominance-smaller partitions.
    """
    lam = Partition(lam)
    if lam.weight > MACDONALD_BOUND:
        raise BoundExceededError(
            f"degree {lam.weight} exceeds the orthogonal-basis bound {MACDONALD_BOUND}"
        )
    params = make_params(("q", "t")) if q is None else q.params
    q, t = _resolve_qt(params, q, t)
    basis, _ = _macdonald_degree(lam.weight, q, t)
    return basis[lam]


def macdonald_P_symfunc(lam, q: Scalar | None = None, t: Scalar | None = None) -> SymmetricFunction:
    lam = Partition(lam)
    params = make_params(("q", "t")) if q is None else q.params
    q, t = _resolve_qt(params, q, t)
    return SymmetricFunction(params, lam.weight, "m", macdonald_P(lam, q, t))


def mvec_to_p(vec_or_sym) -> SymmetricFunction:
    """m-basis coefficient dict (or SymmetricFunction) to the p basis."""
    if isinstance(vec_or_sym, SymmetricFunction):
        return _to_p(vec_or_sym)
    some = next(iter(vec_or_sym.values()))
    degree = next(iter(vec_or_sym)).weight if vec_or_sym else 0
    return _to_p(
        SymmetricFunction(some.params, degree, "m", vec_or_sym)
    )


def macdonald_norm(lam, q: Scalar | None = None, t: Scalar | None = None) -> Scalar:
    """Self-pairing (P_lam, P_lam)."""
    lam = Partition(lam)
    params = make_params(("q", "t")) if q is None else q.params
    q, t = _resolve_qt(params, q, t)
    _, norms = _macdonald_degree(lam.weight, q, t)
    return norms[lam]


def b_lambda(lam, q: Scalar | None = None, t: Scalar | None = None) -> Scalar:
    """Reciprocal self-pairing of the orthogonal basis element."""
    norm = macdonald_norm(lam, q, t)
    return Scalar.one(norm.params) / norm


# ---------------------------------------------------------------------------
# Product bases built from one-part generators (hl_q, jack_g)
# ---------------------------------------------------------------------------


def _concat_partitions(a: Partition, b: Partition) -> Partition:
    return Partition(sorted(tuple(a) + tuple(b), reverse=True))


def _product_in_p(factors: list[dict[Partition, Scalar]], params) -> dict[Partition, Scalar]:
    """Product of p-expansions: power sums multiply by concatenation."""
    acc = {Partition(): Scalar.one(params)}
    for factor in factors:
        nxt: dict[Partition, Scalar] = {}
        for mu, a in acc.items():
            for nu, b in factor.items():
                key = _concat_partitions(mu, nu)
                cur = nxt.get(key, Scalar.zero(params)) + a * b
                if cur.is_zero():
                    nxt.pop(key, None)
                else:
                    nxt[key] = cur
        acc = nxt
    return acc


def _one_part_in_p(j: int, params, per_part: Callable[[int], Scalar]) -> dict[Partition, Scalar]:
    """p-expansion of the degree-j generator sum_mu (prod per_part)/z_mu p_mu."""
    out = {}
    for mu in enumerate_partitions(j):
        value = Scalar.from_fraction(params, Fraction(1) / z_mu(mu))
        for part in mu:
            value = value * per_part(part)
        if not value.is_zero():
            out[mu] = value
    return out


def _per_part_factory(basis: str, params, q, t, alpha) -> Callable[[int], Scalar]:
    one = Scalar.one(params)
    if basis == "hl_q":
        if t is None:
            t = Scalar.param(params, "t")
        return lambda m: one - t**m
    if basis == "jack_g":
        if alpha is None:
            alpha = Scalar.param(params, "alpha")
        inv = one / alpha
        return lambda m: inv
    raise ValueError(basis)


@lru_cache(maxsize=None)
def _product_basis_in_p_cached(basis, n, params, q, t, alpha):
    per_part = _per_part_factory(basis, params, q, t, alpha)
    singles = {j: _one_part_in_p(j, params, per_part) for j in range(1, n + 1)}
    out = {}
    for lam in enumerate_partitions(n):
        out[lam] = _product_in_p([singles[j] for j in lam], params)
    return out


def _product_basis_in_p(basis, n, params, q, t, alpha):
    return _product_basis_in_p_cached(basis, n, params, q, t, alpha)


# ---------------------------------------------------------------------------
# Evaluation at finite rational lists
# ---------------------------------------------------------------------------


def p_eval(mu, c: Sequence[Fraction]) -> Fraction:
    """Power sum of an explicit finite list of rationals."""
    value = Fraction(1)
    for part in Partition(mu):
        value *= sum((Fraction(x) ** part for x in c), Fraction(0))
    return value


def m_eval(lam, c: Sequence[Fraction]) -> Fraction:
    """Monomial symmetric function of an explicit list, via the p basis."""
    lam = Partition(lam)
    order = enumerate_partitions(lam.weight)
    row = m_to_p_matrix(lam.weight)[order.index(lam)]
    return sum(
        (coeff * p_eval(mu, c) for coeff, mu in zip(row, order) if coeff),
        Fraction(0),
    )


def sym_eval(f: SymmetricFunction, c: Sequence[Fraction]) -> Scalar:
    """Evaluate at a finite rational list (through the p basis)."""
    fp = _to_p(f)
    total = Scalar.zero(f.params)
    for mu, coeff in fp.coeffs.items():
        total = total + coeff.scale(p_eval(mu, c))
    return total


# ---------------------------------------------------------------------------
# Weight coefficients: the z-series generators for every family
# ---------------------------------------------------------------------------


def weighted_one_part_value(
    j: int,
    c: Sequence[Fraction],
    params,
    per_part: Callable[[int], Scalar],
) -> Scalar:
    """sum over partitions mu of j of p_mu(c) * prod(per_part)/z_mu."""
    total = Scalar.zero(params)
    for mu in enumerate_partitions(j):
        value = Scalar.from_fraction(params, p_eval(mu, c) / z_mu(mu))
        for part in mu:
            value = value * per_part(part)
        total = total + value
    return total


def g_j_value(j: int, c, q: Scalar, t: Scalar) -> Scalar:
    """Degree-j coefficient of the two-parameter weight kernel at x = c."""
    params = q.params
    one = Scalar.one(params)
    return weighted_one_part_value(
        j, c, params, lambda m: (one - t**m) / (one - q**m)
    )


def g_j_series(c, order: int, q: Scalar | None = None, t: Scalar | None = None) -> ZSeries:
    """Truncated series whose z^j coefficient is g_j(c, q, t)."""
    params = make_params(("q", "t")) if q is None else q.params
    q, t = _resolve_qt(params, q, t)
    return ZSeries([g_j_value(j, c, q, t) for j in range(order + 1)])


def g_lambda_value(lam, c, q: Scalar | None = None, t: Scalar | None = None) -> Scalar:
    lam = Partition(lam)
    params = make_params(("q", "t")) if q is None else q.params
    q, t = _resolve_qt(params, q, t)
    value = Scalar.one(params)
    for part in lam:
        value = value * g_j_value(part, c, q, t)
    return value


def classical_h_value(j: int, c, params=()) -> Scalar:
    """Complete homogeneous coefficient (the q = t collapse)."""
    params = make_params(params)
    one = Scalar.one(params)
    return weighted_one_part_value(j, c, params, lambda m: one)


def elementary_q_value(j: int, c, q: Scalar) -> Scalar:
    """Quantum elementary coefficient e_j(q, c)."""
    params = q.params
    one = Scalar.one(params)
    return weighted_one_part_value(
        j, c, params,
        lambda m: (one if m % 2 else -one) / (one - q**m),
    )


def complete_q_value(j: int, c, q: Scalar) -> Scalar:
    """Quantum complete coefficient h_j(q, c)."""
    params = q.params
    one = Scalar.one(params)
    return weighted_one_part_value(
        j, c, params, lambda m: one / (one - q**m)
    )


def hl_q_value(j: int, c, t: Scalar) -> Scalar:
    """One-part Hall-Littlewood generator value q_j(c, t)."""
    params = t.params
    one = Scalar.one(params)
    return weighted_one_part_value(j, c, params, lambda m: one - t**m)


def hl_q_lambda(lam, c, t: Scalar | None = None) -> Scalar:
    """Product of one-part Hall-Littlewood generators."""
    lam = Partition(lam)
    params = make_params(("t",)) if t is None else t.params
    if t is None:
        t = Scalar.param(params, "t")
    value = Scalar.one(params)
    for part in lam:
        value = value * hl_q_value(part, c, t)
    return value


def negative_binomial_coefficient(alpha: Scalar, k: int) -> Scalar:
    """Generalized binomial coefficient (-1/alpha choose k)."""
    params = alpha.params
    inv = -(Scalar.one(params) / alpha)
    value = Scalar.one(params)
    for i in range(k):
        value = value * (inv - Scalar.from_fraction(params, i))
    return value.scale(Fraction(1, math.factorial(k)))


def jack_g_value(j: int, c, alpha: Scalar) -> Scalar:
    """Coefficient of z^j in prod_i (1 - z c_i)^(-1/alpha).

    Expanded variable by variable with the generalized binomial series.
    """
    params = alpha.params
    coeffs = [Scalar.one(params)] + [Scalar.zero(params)] * j
    for x in c:
        x = Fraction(x)
        per_var = [
            negative_binomial_coefficient(alpha, k).scale((-x) ** k)
            for k in range(j + 1)
        ]
        nxt = [Scalar.zero(params) for _ in range(j + 1)]
        for a in range(j + 1):
            if coeffs[a].is_zero():
                continue
            for b in range(j + 1 - a):
                nxt[a + b] = nxt[a + b] + coeffs[a] * per_var[b]
        coeffs = nxt
    return coeffs[j]


def jack_g_value_psum(j: int, c, alpha: Scalar) -> Scalar:
    """Independent route: the power-sum expansion of the same coefficient."""
    params = alpha.params
    inv = Scalar.one(params) / alpha
    return weighted_one_part_value(j, c, params, lambda m: inv)


def jack_g_lambda(lam, c, alpha: Scalar | None = None) -> Scalar:
    lam = Partition(lam)
    params = make_params(("alpha",)) if alpha is None else alpha.params
    if alpha is None:
        alpha = Scalar.param(params, "alpha")
    value = Scalar.one(params)
    for part in lam:
        value = value * jack_g_value(part, c, alpha)
    return value


# ---------------------------------------------------------------------------
# Schur helpers
# ---------------------------------------------------------------------------


def schur_in_p(lam, params=()) -> SymmetricFunction:
    """Schur function in the p basis (character expansion)."""
    lam = Partition(lam)
    params = make_params(params)
    n = lam.weight
    table = char_table(n)
    coeffs = {}
    for mu in enumerate_partitions(n):
        chi = table.value(lam, mu)
        if chi:
            coeffs[mu] = Scalar.from_fraction(params, Fraction(chi) / z_mu(mu))
    return SymmetricFunction(params, n, "p", coeffs)
