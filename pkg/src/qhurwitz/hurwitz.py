"""Weighted Hurwitz numbers by two independent routes.

This module owns the weight families, the pure (unweighted) Hurwitz
numbers, the two closed-form level-weight functions, and the weighted
branched-cover configuration sums, together with the character route
that must agree with them.

Weight families
---------------
A :class:`WeightFamily` packages a kind, a finite rational list ``c`` and
parameter bindings.  Each kind has a one-variable kernel whose product
over the ``c`` entries generates the per-step weights:

* ``macdonald``      -- two parameters (q, t); per-step weights g_j(c,q,t)
* ``classical``      -- the q = t collapse: complete symmetric weights
* ``elementary``     -- one parameter q, kernel prod (1 + z q^k c_i)
* ``complete``       -- one parameter q, kernel prod (1 - z q^k c_i)^(-1)
* ``hall_littlewood``-- one parameter t, kernel prod (1 - t z c_i)/(1 - z c_i)
* ``jack``           -- one parameter alpha, kernel prod (1 - z c_i)^(-1/alpha)

A parameter is either symbolic (carried exactly in the rational-function
field) or bound to a rational; binding everything turns the whole
pipeline into fast exact rational arithmetic, which is how randomized
identity testing runs.

Sign conventions
----------------
The closed-form weights follow the geometric-sum normal forms: class-I
collections use strictly increasing level indices, class-II collections
weakly increasing ones.  ``weight_WH`` carries the sign
(-1)^(total colength).  Inside configuration sums the total sign per
configuration is (-1)^(e + d_II + k_II), where e is the class-I colength
total, d_II the class-II colength total and k_II the number of class-II
profiles; this convention is forced by exact agreement with both the
walk-count route and the eigenvalue route, which the test suite checks
symbolically.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .characters import char_table
from .errors import BoundExceededError, WeightMismatchError
from .partitions import (
    Partition,
    aut_order,
    colength,
    enumerate_partitions,
    hook_product,
    z_mu,
)
from .scalars import Scalar, make_params, parse_rational
from .symfunc import (
    SymmetricFunction,
    classical_h_value,
    complete_q_value,
    elementary_q_value,
    g_j_value,
    hl_q_value,
    jack_g_value,
    m_eval,
    negative_binomial_coefficient,
)

#: kind -> parameter names the kind depends on
FAMILY_PARAMS = {
    "macdonald": ("q", "t"),
    "classical": (),
    "elementary": ("q",),
    "complete": ("q",),
    "hall_littlewood": ("t",),
    "jack": ("alpha",),
}

#: Hard bounds for the configuration sums.
HDE_N_BOUND = 5
HDE_D_BOUND = 4


@dataclass(frozen=True)
class WeightFamily:
    """A weight-generating kernel with its parameters pinned down."""

    kind: str
    c: tuple[Fraction, ...]
    bindings: tuple[tuple[str, Fraction], ...] = ()

    @classmethod
    def make(cls, kind, c=(), q=None, t=None, alpha=None) -> "WeightFamily":
        if kind not in FAMILY_PARAMS:
            raise ValueError(
                f"unknown family kind {kind!r}; "
                f"expected one of {sorted(FAMILY_PARAMS)}"
            )
        c = tuple(
            parse_rational(x) if isinstance(x, str) else Fraction(x) for x in c
        )
        given = {"q": q, "t": t, "alpha": alpha}
        bindings = []
        for name in FAMILY_PARAMS[kind]:
            value = given.pop(name, None)
            if value is not None:
                bindings.append((name, Fraction(value)))
        extra = [name for name, value in given.items() if value is not None]
        if extra:
            raise ValueError(
                f"family {kind!r} does not use parameter(s) {extra}"
            )
        return cls(kind=kind, c=c, bindings=tuple(sorted(bindings)))

    @property
    def params(self) -> tuple[str, ...]:
        bound = {name for name, _ in self.bindings}
        return make_params(
            name for name in FAMILY_PARAMS[self.kind] if name not in bound
        )

    def scalar(self, name: str) -> Scalar:
        """The parameter as a Scalar: symbolic or the bound constant."""
        for bname, value in self.bindings:
            if bname == name:
                return Scalar.from_fraction(self.params, value)
        return Scalar.param(self.params, name)

    def weight_coeff(self, j: int) -> Scalar:
        """Coefficient of z^j in the family's weight-generating series."""
        if self.kind == "macdonald":
            return g_j_value(j, self.c, self.scalar("q"), self.scalar("t"))
        if self.kind == "classical":
            return classical_h_value(j, self.c, self.params)
        if self.kind == "elementary":
            return elementary_q_value(j, self.c, self.scalar("q"))
        if self.kind == "complete":
            return complete_q_value(j, self.c, self.scalar("q"))
        if self.kind == "hall_littlewood":
            return hl_q_value(j, self.c, self.scalar("t"))
        if self.kind == "jack":
            return jack_g_value(j, self.c, self.scalar("alpha"))
        raise ValueError(self.kind)

    def path_weight(self, sig) -> Scalar:
        """Multiplicative weight attached to a walk signature."""
        return _path_weight_cached(self, Partition(sig))

    def label(self) -> dict:
        out = {"kind": self.kind, "c": [str(x) for x in self.c]}
        for name, value in self.bindings:
            out[name] = str(value)
        return out


@lru_cache(maxsize=None)
def _path_weight_cached(family: WeightFamily, sig: Partition) -> Scalar:
    value = Scalar.one(family.params)
    for part in sig:
        value = value * family.weight_coeff(part)
    return value


# ---------------------------------------------------------------------------
# Pure Hurwitz numbers
# ---------------------------------------------------------------------------


def pure_hurwitz(profiles, n: int) -> Fraction:
    """Automorphism-weighted count of covers with the given profiles.

    Computed by the character sum over irreducibles; agrees with direct
    factorization counting in the symmetric group (see the brute-force
    twin below).
    """
    profiles = tuple(sorted(Partition(p) for p in profiles))
    if not profiles:
        raise ValueError("at least one ramification profile is required")
    for p in profiles:
        if p.weight != n:
            raise WeightMismatchError(f"{p} is not a partition of {n}")
    return _pure_hurwitz_cached(profiles, n)


@lru_cache(maxsize=None)
def _pure_hurwitz_cached(profiles: tuple[Partition, ...], n: int) -> Fraction:
    table = char_table(n)
    k = len(profiles)
    total = Fraction(0)
    zs = [z_mu(p) for p in profiles]
    for lam in table.irreps:
        h = hook_product(lam)
        term = Fraction(h) ** (k - 2)
        for p, z in zip(profiles, zs):
            chi = table.value(lam, p)
            if not chi:
                term = Fraction(0)
                break
            term *= Fraction(chi) / z
        total += term
    return total


def pure_hurwitz_bruteforce(profiles, n: int) -> Fraction:
    """Direct factorization count: tuples multiplying to the identity.

    Exponential in the inputs; intended as the oracle for small n.
    """
    from .group_algebra import Permutation, elements_of_class, identity_permutation

    profiles = [Partition(p) for p in profiles]
    for p in profiles:
        if p.weight != n:
            raise WeightMismatchError(f"{p} is not a partition of {n}")
    if not profiles:
        raise ValueError("at least one ramification profile is required")
    last = profiles[-1]
    count = 0
    partial = [identity_permutation(n)]
    for p in profiles[:-1]:
        elements = elements_of_class(p, n)
        partial = [g * e for g in partial for e in elements]
    for g in partial:
        if g.inverse().cycle_type() == last:
            count += 1
    return Fraction(count, math.factorial(n))


# ---------------------------------------------------------------------------
# Closed-form level weights
# ---------------------------------------------------------------------------


def _colengths(profiles) -> list[int]:
    out = []
    for p in profiles:
        p = Partition(p)
        ell = colength(p)
        if ell < 1:
            raise ValueError(
                f"profile {p} has colength 0; identity profiles are excluded"
            )
        out.append(ell)
    return out


def _strict_ordered_sum(cols: tuple[int, ...], q: Scalar) -> Scalar:
    """Sum over strictly increasing levels for one fixed profile ordering."""
    params = q.params
    one = Scalar.one(params)
    k = len(cols)
    num_exp = sum((m - 1) * a for m, a in enumerate(cols, start=1))
    value = q**num_exp
    for r in range(k):
        value = value / (one - q ** sum(cols[r:]))
    return value


def _weak_ordered_sum(cols: tuple[int, ...], q: Scalar) -> Scalar:
    """Sum over weakly increasing levels for one fixed profile ordering."""
    params = q.params
    one = Scalar.one(params)
    value = Scalar.one(params)
    for r in range(len(cols)):
        value = value / (one - q ** sum(cols[r:]))
    return value


def _distinct_orderings(items: tuple) -> list[tuple]:
    return sorted(set(itertools.permutations(items)))


def strict_level_sum(profiles, q: Scalar) -> Scalar:
    """Multiset-normalized strict-level geometric sum (class I)."""
    profiles = tuple(Partition(p) for p in profiles)
    total = Scalar.zero(q.params)
    for ordering in _distinct_orderings(profiles):
        total = total + _strict_ordered_sum(
            tuple(colength(p) for p in ordering), q
        )
    return total if profiles else Scalar.one(q.params)


def weak_level_sum(profiles, q: Scalar) -> Scalar:
    """Multiset-normalized weak-level geometric sum (class II)."""
    profiles = tuple(Partition(p) for p in profiles)
    total = Scalar.zero(q.params)
    for ordering in _distinct_orderings(profiles):
        total = total + _weak_ordered_sum(
            tuple(colength(p) for p in ordering), q
        )
    return total if profiles else Scalar.one(q.params)


def weight_WE(profiles, q: Scalar | None = None) -> Scalar:
    """Class-I weight: all-orderings strict-level sum over |aut|.

    The denominator factors use cumulative colength sums; the full sum
    over orderings makes the prefix and suffix readings agree.
    """
    if q is None:
        q = Scalar.param(make_params(("q",)), "q")
    profiles = tuple(Partition(p) for p in profiles)
    cols = _colengths(profiles)
    total = Scalar.zero(q.params)
    for perm in itertools.permutations(cols):
        total = total + _strict_ordered_sum(perm, q)
    return total.scale(Fraction(1, aut_order(Partition(sorted(cols, reverse=True)))))


def weight_WH(profiles, q: Scalar | None = None) -> Scalar:
    """Class-II weight: signed all-orderings weak-level sum over |aut|.

    Carries the sign (-1)^(total colength).
    """
    if q is None:
        q = Scalar.param(make_params(("q",)), "q")
    profiles = tuple(Partition(p) for p in profiles)
    cols = _colengths(profiles)
    total = Scalar.zero(q.params)
    for perm in itertools.permutations(cols):
        total = total + _weak_ordered_sum(perm, q)
    sign = -1 if sum(cols) % 2 else 1
    return total.scale(
        Fraction(sign, aut_order(Partition(sorted(cols, reverse=True))))
    )


# ---------------------------------------------------------------------------
# Branched-cover configuration sums
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ColourGroup:
    """One colour: a class-I and a class-II profile multiset."""

    class_one: tuple[Partition, ...]
    class_two: tuple[Partition, ...]

    @property
    def weight(self) -> int:
        return sum(colength(p) for p in self.class_one + self.class_two)

    @property
    def e_part(self) -> int:
        return sum(colength(p) for p in self.class_one)

    def profiles(self) -> tuple[Partition, ...]:
        return self.class_one + self.class_two


@lru_cache(maxsize=None)
def _profile_pool(n: int) -> tuple[Partition, ...]:
    return tuple(p for p in enumerate_partitions(n) if colength(p) >= 1)


@lru_cache(maxsize=None)
def _profile_multisets(n: int, total: int) -> tuple[tuple[Partition, ...], ...]:
    """Multisets of non-identity profiles of the given colength total."""
    pool = _profile_pool(n)

    def rec(total, start):
        if total == 0:
            yield ()
            return
        for i in range(start, len(pool)):
            ell = colength(pool[i])
            if ell <= total:
                for rest in rec(total - ell, i):
                    yield (pool[i],) + rest

    return tuple(rec(total, 0))


@lru_cache(maxsize=None)
def _colour_groups(n: int, weight: int, kind: str) -> tuple[ColourGroup, ...]:
    """Nonempty colour groups of the given colength total."""
    groups = []
    if kind in ("macdonald", "hall_littlewood"):
        splits = [(e, weight - e) for e in range(weight + 1)]
    elif kind in ("elementary", "jack"):
        splits = [(weight, 0)]
    elif kind == "complete":
        splits = [(0, weight)]
    else:
        raise ValueError(f"no geometric sum for family kind {kind!r}")
    for e, rest in splits:
        for one in _profile_multisets(n, e):
            for two in _profile_multisets(n, rest):
                if one or two:
                    groups.append(ColourGroup(one, two))
    return tuple(groups)


def _group_scalar(group: ColourGroup, family: WeightFamily) -> Scalar:
    """Sign and level-sum weight of one colour group (t-power excluded)."""
    params = family.params
    if family.kind == "jack":
        profiles = group.class_one
        k = len(profiles)
        mult = 1
        for p in set(profiles):
            mult *= math.factorial(profiles.count(p))
        value = negative_binomial_coefficient(family.scalar("alpha"), k)
        value = value.scale(Fraction(math.factorial(k), mult))
        sign = -1 if group.weight % 2 else 1
        return value.scale(sign)
    if family.kind == "hall_littlewood":
        level_q = Scalar.zero(params)
    elif family.kind in ("macdonald", "elementary", "complete"):
        level_q = family.scalar("q")
    else:
        raise ValueError(f"no geometric sum for family kind {family.kind!r}")
    value = strict_level_sum(group.class_one, level_q) * weak_level_sum(
        group.class_two, level_q
    )
    if family.kind == "elementary":
        sign = 1
    else:
        d_two = sum(colength(p) for p in group.class_two)
        sign = -1 if (group.e_part + d_two + len(group.class_two)) % 2 else 1
    return value.scale(sign)


def _config_multisets(n: int, d: int, kind: str):
    """Multisets of colour groups with colength totals summing to d."""
    groups_by_weight = {
        w: _colour_groups(n, w, kind) for w in range(1, d + 1)
    }

    def rec(remaining, w_cap, idx_cap):
        if remaining == 0:
            yield ()
            return
        for w in range(min(remaining, w_cap), 0, -1):
            groups = groups_by_weight[w]
            start = idx_cap if w == w_cap else 0
            for i in range(start, len(groups)):
                for rest in rec(remaining - w, w, i):
                    yield ((groups[i], i),) + rest

    for config in rec(d, d, 0):
        yield tuple(g for g, _ in config)


def hde_geometric(n: int, d: int, e: int | None, family: WeightFamily) -> dict:
    """Weighted branched-cover sums H^(d,e) over base-point classes.

    Enumerates colour-group configurations of total colength d (class-I
    total e when e is given; e=None sums the grading away, which is the
    only option for kinds without a t refinement).  Returns a map
    (mu, nu) -> Scalar with the z_nu normalization under which the d = 0
    table is the identity matrix.
    """
    if n > HDE_N_BOUND or d > HDE_D_BOUND:
        raise BoundExceededError(
            f"(n={n}, d={d}) exceeds cover-sum bounds "
            f"(n <= {HDE_N_BOUND}, d <= {HDE_D_BOUND})"
        )
    if family.kind == "classical":
        raise ValueError("the classical family has no graded geometric sum")
    if family.kind == "jack" and e is not None:
        raise ValueError("the jack family is not graded by e")
    params = family.params
    classes = enumerate_partitions(n)
    table = {
        (mu, nu): Scalar.zero(params) for mu in classes for nu in classes
    }
    if e is not None and (e < 0 or e > d):
        return table
    for config in _config_multisets(n, d, family.kind):
        e_config = sum(g.e_part for g in config)
        if e is not None and e_config != e:
            continue
        lam = Partition(sorted((g.weight for g in config), reverse=True))
        group_mult = 1
        for g in set(config):
            group_mult *= math.factorial(config.count(g))
        weight = Scalar.from_fraction(
            params,
            m_eval(lam, family.c) * Fraction(aut_order(lam), group_mult),
        )
        for g in config:
            weight = weight * _group_scalar(g, family)
        if weight.is_zero():
            continue
        profiles = tuple(
            itertools.chain.from_iterable(g.profiles() for g in config)
        )
        for mu in classes:
            for nu in classes:
                h = pure_hurwitz(profiles + (mu, nu), n)
                if h:
                    table[(mu, nu)] = table[(mu, nu)] + weight.scale(
                        h * z_mu(nu)
                    )
    return table


# ---------------------------------------------------------------------------
# Character route
# ---------------------------------------------------------------------------


def fd_character(n: int, d: int, family: WeightFamily) -> dict:
    """Weighted walk sums via content-product eigenvalues.

    F^d(mu, nu) = (z_mu z_nu)^(-1) sum over shapes of
    chi(mu) chi(nu) [z^d] r_shape(z); exact Scalar table.
    """
    from . import tau

    params = family.params
    table = char_table(n)
    classes = enumerate_partitions(n)
    r_coeff = {
        lam: tau.r_lambda(lam, 0, family, d).series.coefficient(d)
        for lam in classes
    }
    out = {}
    for mu in classes:
        for nu in classes:
            total = Scalar.zero(params)
            for lam in classes:
                chi_m = table.value(lam, mu)
                chi_n = table.value(lam, nu)
                if chi_m and chi_n:
                    total = total + r_coeff[lam].scale(chi_m * chi_n)
            out[(mu, nu)] = total.scale(
                Fraction(1) / (z_mu(mu) * z_mu(nu))
            )
    return out


def fd_bruteforce(n: int, d: int, family: WeightFamily) -> dict:
    """Weighted walk sums by exhaustive enumeration (kernel-backed)."""
    from .group_algebra import fd_bruteforce as _fd

    return _fd(n, d, family)


# ---------------------------------------------------------------------------
# The generator expansion over cycle-type sums
# ---------------------------------------------------------------------------


def gj_cycle_expansion_check(n: int, j: int, family: WeightFamily | None = None):
    """Check the degree-j generator of the central series two ways.

    The eigenvalue route applies the symmetric function g_j of the
    star-transposition sums; the weighted route assembles class-sum
    products over colour groups with strict/weak level sums and the t
    grading.  Returns (ok, report lines).
    """
    from .group_algebra import (
        CentralElement,
        central_multiply,
        jm_symmetric_apply,
    )

    if family is None:
        family = WeightFamily.make("macdonald")
    if family.kind != "macdonald":
        raise ValueError("the cycle-sum expansion check is for the macdonald kind")
    params = family.params
    q = family.scalar("q")
    t = family.scalar("t")

    # eigenvalue route: g_j as a power-sum combination of the J's
    one = Scalar.one(params)
    coeffs = {}
    for mu in enumerate_partitions(j):
        value = Scalar.from_fraction(params, Fraction(1) / z_mu(mu))
        for part in mu:
            value = value * (one - t**part) / (one - q**part)
        coeffs[mu] = value
    gj = SymmetricFunction(params, j, "p", coeffs)
    lhs = jm_symmetric_apply(gj, n).to_basis("C")

    # weighted route: colour groups of total colength j
    rhs = CentralElement(n, "C", params, {})
    if j == 0:
        rhs = CentralElement.identity(n, params)
    report = []
    for group in _colour_groups(n, j, "macdonald"):
        weight = _group_scalar(group, family) * t**group.e_part
        if weight.is_zero():
            continue
        element = CentralElement.identity(n, params)
        for p in group.profiles():
            element = central_multiply(
                element, CentralElement.class_sum(n, p, params)
            )
        rhs = rhs + element.scale_scalar(weight)
        report.append(
            f"group I={[list(p) for p in group.class_one]} "
            f"II={[list(p) for p in group.class_two]} weight={weight}"
        )
    ok = lhs == rhs
    if not ok:
        report.append(f"eigenvalue route: {lhs!r}")
        report.append(f"weighted route:  {rhs!r}")
    return ok, report
