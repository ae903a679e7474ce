"""Exact arithmetic foundation.

Everything in this package is computed exactly.  Four layers live here:

* ``Rational`` -- arbitrary-precision rationals (``fractions.Fraction``).
* ``Poly`` -- sparse multivariate polynomials with rational coefficients
  in a fixed, ordered tuple of parameter names (a subset of
  ``q, t, alpha, u``).
* ``Scalar`` -- reduced rational functions ``num/den`` of two ``Poly``
  values in the same parameter set.  The representation is canonical:
  integer coefficients, coprime integer contents, no common polynomial
  factor, positive leading denominator coefficient.  Equal values
  therefore have identical representations, compare equal and hash equal.
* ``ZSeries`` -- power series in the bookkeeping variable z, truncated at
  an explicit order, with ``Scalar`` coefficients.

Polynomial GCDs (needed to keep ``Scalar`` reduced) are computed by
recursive content/primitive-part extraction with a primitive
pseudo-remainder sequence in the last parameter.  Degrees stay small at
the scales this package targets, so no modular or sparse-interpolation
tricks are needed.

All values are immutable after construction and safe to share across
threads or processes.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import (
    ContextMismatchError,
    EvaluationPoleError,
    OrderMismatchError,
    ParseError,
    ScalarDivisionError,
)

Rational = Fraction

#: Canonical ordering of the admissible parameter names.
PARAM_ORDER = ("q", "t", "alpha", "u")

_ZERO = Fraction(0)
_ONE = Fraction(1)


def make_params(names: Iterable[str]) -> tuple[str, ...]:
    """Canonicalize a collection of parameter names.

    The result is ordered by ``PARAM_ORDER`` so that two contexts built
    from the same set of names are identical tuples.
    """
    unique = set(names)
    for name in unique:
        if name not in PARAM_ORDER:
            raise ValueError(f"unknown parameter name {name!r}")
    return tuple(p for p in PARAM_ORDER if p in unique)


def _check_same_params(a, b):
    if a.params != b.params:
        raise ContextMismatchError(
            f"parameter sets differ: {a.params} vs {b.params}"
        )


# ---------------------------------------------------------------------------
# Poly
# ---------------------------------------------------------------------------


class Poly:
    """Sparse multivariate polynomial over the rationals.

    ``terms`` maps exponent tuples (one entry per parameter) to nonzero
    ``Fraction`` coefficients.  Instances are treated as immutable; do not
    mutate ``terms`` after construction.
    """

    __slots__ = ("params", "terms", "_hash")

    def __init__(self, params: tuple[str, ...], terms: dict):
        self.params = params
        self.terms = terms
        self._hash = None

    # -- constructors -------------------------------------------------

    @classmethod
    def from_terms(cls, params, terms) -> "Poly":
        """Build from a mapping, dropping zero coefficients."""
        clean = {}
        width = len(params)
        for exp, coeff in terms.items():
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            exp = tuple(exp)
            if len(exp) != width:
                raise ValueError(
                    f"exponent vector {exp} has length {len(exp)}, "
                    f"expected {width}"
                )
            clean[exp] = clean.get(exp, _ZERO) + coeff
        return cls(params, {e: c for e, c in clean.items() if c != 0})

    @classmethod
    def constant(cls, params, value) -> "Poly":
        value = Fraction(value)
        if value == 0:
            return cls(params, {})
        return cls(params, {(0,) * len(params): value})

    @classmethod
    def variable(cls, params, name) -> "Poly":
        if name not in params:
            raise ContextMismatchError(
                f"parameter {name!r} not in context {params}"
            )
        exp = tuple(1 if p == name else 0 for p in params)
        return cls(params, {exp: _ONE})

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self) -> Fraction:
        if self.is_zero():
            return _ZERO
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return next(iter(self.terms.values()))

    # -- ring operations ------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        _check_same_params(self, other)
        terms = dict(self.terms)
        for exp, coeff in other.terms.items():
            new = terms.get(exp, _ZERO) + coeff
            if new == 0:
                terms.pop(exp, None)
            else:
                terms[exp] = new
        return Poly(self.params, terms)

    def __neg__(self) -> "Poly":
        return Poly(self.params, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        _check_same_params(self, other)
        if len(self.terms) > len(other.terms):
            self, other = other, self
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                new = terms.get(exp, _ZERO) + c1 * c2
                if new == 0:
                    terms.pop(exp, None)
                else:
                    terms[exp] = new
        return Poly(self.params, terms)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a Poly")
        result = Poly.constant(self.params, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale(self, value) -> "Poly":
        value = Fraction(value)
        if value == 0:
            return Poly(self.params, {})
        return Poly(self.params, {e: c * value for e, c in self.terms.items()})

    # -- structure -------------------------------------------------------

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        """Degree in one parameter; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        idx = self.params.index(name)
        return max(e[idx] for e in self.terms)

    def coefficients_in(self, name: str) -> dict:
        """Split by powers of ``name``: exponent -> Poly without ``name``."""
        idx = self.params.index(name)
        rest = tuple(p for p in self.params if p != name)
        split: dict[int, dict] = {}
        for exp, coeff in self.terms.items():
            reduced = tuple(v for i, v in enumerate(exp) if i != idx)
            split.setdefault(exp[idx], {})[reduced] = coeff
        return {k: Poly(rest, terms) for k, terms in sorted(split.items())}

    def embed(self, params: tuple[str, ...]) -> "Poly":
        """Re-index into a superset parameter context."""
        for name in self.params:
            if name not in params:
                raise ContextMismatchError(
                    f"cannot embed {self.params} into {params}"
                )
        positions = [params.index(name) for name in self.params]
        terms = {}
        for exp, coeff in self.terms.items():
            new_exp = [0] * len(params)
            for pos, power in zip(positions, exp):
                new_exp[pos] = power
            terms[tuple(new_exp)] = coeff
        return Poly(params, terms)

    def leading(self) -> tuple[tuple[int, ...], Fraction]:
        """Leading term under graded-lexicographic order."""
        exp = max(self.terms, key=lambda e: (sum(e), e))
        return exp, self.terms[exp]

    def content(self) -> Fraction:
        """Positive rational c with self/c integer-coefficient, content 1."""
        if not self.terms:
            return _ONE
        num_gcd = 0
        den_lcm = 1
        for coeff in self.terms.values():
            num_gcd = math.gcd(num_gcd, abs(coeff.numerator))
            den_lcm = den_lcm * coeff.denominator // math.gcd(
                den_lcm, coeff.denominator
            )
        return Fraction(num_gcd, den_lcm)

    # -- evaluation and substitution --------------------------------------

    def evaluate(self, assignment: Mapping[str, Fraction]) -> Fraction:
        for name in self.params:
            if name not in assignment:
                raise ValueError(f"no value assigned to parameter {name!r}")
        values = [Fraction(assignment[name]) for name in self.params]
        total = _ZERO
        for exp, coeff in self.terms.items():
            term = coeff
            for value, power in zip(values, exp):
                if power:
                    term *= value**power
            total += term
        return total

    def substitute(self, bindings: Mapping[str, Union[Fraction, int, str]]) -> "Poly":
        """Bind some parameters to rationals or rename them to other params.

        The result lives in the context of the remaining parameters.
        """
        remaining = make_params(
            [p for p in self.params if p not in bindings]
            + [v for v in bindings.values() if isinstance(v, str)]
        )
        result = Poly.constant(remaining, 0)
        for exp, coeff in self.terms.items():
            term = Poly.constant(remaining, coeff)
            for name, power in zip(self.params, exp):
                if not power:
                    continue
                if name in bindings:
                    target = bindings[name]
                    if isinstance(target, str):
                        term = term * Poly.variable(remaining, target) ** power
                    else:
                        term = term.scale(Fraction(target) ** power)
                else:
                    term = term * Poly.variable(remaining, name) ** power
            result = result + term
        return result

    # -- dunder plumbing ---------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.params == other.params and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.params, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        return poly_to_string(self)

    def __repr__(self):
        return f"Poly({poly_to_string(self)!r})"

    def __reduce__(self):
        return (_rebuild_poly, (self.params, tuple(self.terms.items())))


def _rebuild_poly(params, items):
    return Poly(params, dict(items))


# ---------------------------------------------------------------------------
# Polynomial GCD: recursive dense representation, primitive PRS in the
# last parameter.
# ---------------------------------------------------------------------------
# A "rep" at level 0 is an int; at level k it is a list of level-(k-1) reps
# indexed by the exponent of the k-th parameter, with a nonzero last entry.


def _r_zero(level):
    return 0 if level == 0 else []


def _r_is_zero(rep, level):
    return rep == 0 if level == 0 else not rep


def _r_trim(rep, level):
    if level == 0:
        return rep
    while rep and _r_is_zero(rep[-1], level - 1):
        rep.pop()
    return rep


def _r_add(a, b, level):
    if level == 0:
        return a + b
    out = []
    for i in range(max(len(a), len(b))):
        x = a[i] if i < len(a) else _r_zero(level - 1)
        y = b[i] if i < len(b) else _r_zero(level - 1)
        out.append(_r_add(x, y, level - 1))
    return _r_trim(out, level)


def _r_neg(a, level):
    if level == 0:
        return -a
    return [_r_neg(x, level - 1) for x in a]


def _r_mul(a, b, level):
    if level == 0:
        return a * b
    if not a or not b:
        return []
    out = [_r_zero(level - 1) for _ in range(len(a) + len(b) - 1)]
    for i, x in enumerate(a):
        if _r_is_zero(x, level - 1):
            continue
        for j, y in enumerate(b):
            if _r_is_zero(y, level - 1):
                continue
            out[i + j] = _r_add(out[i + j], _r_mul(x, y, level - 1), level - 1)
    return _r_trim(out, level)


def _r_scale(a, s, level):
    """Multiply by a level-(level-1) rep."""
    if level == 0:
        raise AssertionError("scale needs level >= 1")
    return _r_trim([_r_mul(x, s, level - 1) for x in a], level)


def _r_canonical(a, level):
    """Sign-normalized associate (leading integer positive); zero stays zero."""
    if level == 0:
        return abs(a)
    if _r_is_zero(a, level):
        return a
    return _r_neg(a, level) if _r_leading_int(a, level) < 0 else a


def _r_eval_tail(a, level, point):
    """Evaluate all lower variables at integers; main-variable int list."""
    if level == 1:
        return list(a)
    out = []
    for coeff in a:
        value = 0
        for x in reversed(_r_eval_tail(coeff, level - 1, point)):
            value = value * point + x
        out.append(value)
    return out


def _int_gcd_poly(a: list, b: list):
    """Primitive gcd of two integer univariate polys, positive leading.

    Returns None when an input is zero after trimming.
    """
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    if not a or not b:
        return None
    if len(a) < len(b):
        a, b = b, a
    while b:
        # primitive pseudo-remainder
        da, db = len(a) - 1, len(b) - 1
        lb = b[-1]
        rem = list(a)
        for i in range(da - db, -1, -1):
            lead = rem[db + i]
            if not lead:
                continue
            rem = [x * lb for x in rem]
            for j, y in enumerate(b):
                rem[i + j] -= lead * y
        while rem and rem[-1] == 0:
            rem.pop()
        if rem:
            g = 0
            for x in rem:
                g = math.gcd(g, abs(x))
            rem = [x // g for x in rem]
        a, b = b, rem
    g = 0
    for x in a:
        g = math.gcd(g, abs(x))
    a = [x // g for x in a]
    if a[-1] < 0:
        a = [-x for x in a]
    return a


def _int_gcd_degree(a: list, b: list):
    g = _int_gcd_poly(a, b)
    return None if g is None else len(g) - 1


def _coprime_by_evaluation(a, b, level) -> bool:
    """Sound coprimality certificate for primitive reps (level >= 1).

    Evaluating the lower variables at a point where both leading
    coefficients survive can only raise the gcd degree, so a degree-zero
    univariate gcd proves the main-variable gcd degree is zero; for
    primitive inputs that means the gcd is trivial.
    """
    if level == 1:
        return _int_gcd_degree(list(a), list(b)) == 0
    for point in (2, 3, 5, -7):
        ea = _r_eval_tail(a, level, point)
        eb = _r_eval_tail(b, level, point)
        if ea[-1] == 0 or eb[-1] == 0:
            continue  # leading coefficient vanished; try another point
        return _int_gcd_degree(ea, eb) == 0
    return False


def _r_gcd(a, b, level):
    """GCD of integer-coefficient reps, sign-normalized."""
    if level == 0:
        return math.gcd(abs(a), abs(b))
    if _r_is_zero(a, level):
        return _r_canonical(b, level)
    if _r_is_zero(b, level):
        return _r_canonical(a, level)
    ca = _r_content(a, level)
    cb = _r_content(b, level)
    a = _r_divcoeff(a, ca, level)
    b = _r_divcoeff(b, cb, level)
    cg = _r_gcd(ca, cb, level - 1)
    if len(a) < len(b):
        a, b = b, a
    g = None
    if len(b) == 1 or _coprime_by_evaluation(a, b, level):
        g = [_r_one(level - 1)]
    elif level == 1:
        g = _int_gcd_poly(list(a), list(b))
    elif level == 2:
        g = _bivariate_gcd(a, b)
    if g is None:
        # primitive pseudo-remainder sequence in the main variable
        while True:
            r = _r_pseudo_rem(a, b, level)
            if _r_is_zero(r, level):
                break
            a, b = b, _r_divcoeff(r, _r_content(r, level), level)
        g = _r_primitive_signed(b, level)
    return _r_scale(g, cg, level)


def _r_one(level):
    return 1 if level == 0 else [_r_one(level - 1)]


def _int_eval(poly: list, x: int) -> int:
    value = 0
    for coeff in reversed(poly):
        value = value * x + coeff
    return value


def _lagrange_interpolate(points):
    """Monomial coefficients (Fractions) through (int, Fraction) points."""
    # Newton divided differences, then expansion
    xs = [Fraction(x) for x, _ in points]
    table = [Fraction(y) for _, y in points]
    m = len(points)
    newton = [table[0]]
    for level in range(1, m):
        table = [
            (table[i + 1] - table[i]) / (xs[i + level] - xs[i])
            for i in range(m - level)
        ]
        newton.append(table[0])
    coeffs = [Fraction(0)] * m
    coeffs[0] = newton[-1]
    for k in range(m - 2, -1, -1):
        # multiply by (x - xs[k]) and add newton[k]
        shifted = [Fraction(0)] + coeffs[:-1]
        coeffs = [s - xs[k] * c for s, c in zip(shifted, coeffs + [Fraction(0)])]
        coeffs = coeffs[:m]
        coeffs[0] += newton[k]
    return coeffs


def _bivariate_gcd(a, b, attempts: int = 4):
    """Evaluation-interpolation gcd for primitive level-2 reps.

    Evaluates the inner variable at integer points, takes univariate
    integer gcds, lifts by interpolation with the leading-coefficient
    correction, and certifies by trial division.  Returns None to hand
    over to the pseudo-remainder fallback.
    """
    gamma = _int_gcd_poly([x for x in a[-1]], [x for x in b[-1]])
    if gamma is None:
        return None
    deg_inner = max(
        max(len(c) for c in a), max(len(c) for c in b), len(gamma)
    )
    n_points = 2 * deg_inner + 2  # safe bound for lc-corrected gcd coeffs

    point = 1
    for _ in range(attempts):
        samples = []
        deg_min = None
        guard = 0
        while len(samples) < n_points and guard < 40 * n_points:
            point += 1
            guard += 1
            ga = _int_eval_level2(a, point)
            gb = _int_eval_level2(b, point)
            if len(ga) != len(a) or len(gb) != len(b):
                continue  # a leading coefficient vanished at this point
            if _int_eval(gamma, point) == 0:
                continue
            g = _int_gcd_poly(ga, gb)
            d = len(g) - 1
            if deg_min is None or d < deg_min:
                deg_min = d
                samples = []
            if d == deg_min:
                samples.append((point, g))
        if deg_min is None:
            return None
        if deg_min == 0:
            return [_r_one(1)]
        # leading-coefficient correction so all samples interpolate one poly
        corrected = []
        for x, g in samples:
            target = Fraction(_int_eval(gamma, x), g[-1])
            corrected.append((x, [coeff * target for coeff in g]))
        coeff_polys = []
        ok_candidate = True
        for k in range(deg_min + 1):
            pts = [(x, g[k]) for x, g in corrected]
            coeff_polys.append(_lagrange_interpolate(pts))
        # clear rational content, build the level-2 rep (inner lists)
        den_lcm = 1
        for cp in coeff_polys:
            for value in cp:
                den_lcm = den_lcm * value.denominator // math.gcd(
                    den_lcm, value.denominator
                )
        candidate = []
        for cp in coeff_polys:
            inner = [int(value * den_lcm) for value in cp]
            while inner and inner[-1] == 0:
                inner.pop()
            candidate.append(inner)
        candidate = _r_trim(candidate, 2)
        if not candidate:
            ok_candidate = False
        if ok_candidate:
            candidate = _r_primitive_signed(candidate, 2)
            try:
                _r_divexact(a, candidate, 2)
                _r_divexact(b, candidate, 2)
                return candidate
            except AssertionError:
                pass  # unlucky points; try a fresh batch
    return None


def _int_eval_level2(rep, x: int) -> list:
    out = [_int_eval(inner, x) for inner in rep]
    while out and out[-1] == 0:
        out.pop()
    return out


def _r_content(a, level):
    """GCD of the coefficients (a level-(level-1) rep)."""
    acc = _r_zero(level - 1)
    for x in a:
        acc = _r_gcd(acc, x, level - 1)
    return acc


def _r_divcoeff(a, c, level):
    """Divide each coefficient exactly by the level-(level-1) rep c."""
    return [_r_divexact(x, c, level - 1) for x in a]


def _r_divexact(a, b, level):
    """Exact division of reps (raises AssertionError if not exact)."""
    if level == 0:
        q, r = divmod(a, b)
        if r:
            raise AssertionError("inexact integer division in GCD")
        return q
    if not a:
        return []
    if not b:
        raise ZeroDivisionError("rep division by zero")
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        raise AssertionError("inexact polynomial division in GCD")
    rem = list(a)
    out = [_r_zero(level - 1)] * (da - db + 1)
    lb = b[-1]
    for i in range(da - db, -1, -1):
        cur = rem[db + i]
        if _r_is_zero(cur, level - 1):
            continue
        coeff = _r_divexact(cur, lb, level - 1)
        out[i] = coeff
        for j, y in enumerate(b):
            rem[i + j] = _r_add(
                rem[i + j], _r_neg(_r_mul(coeff, y, level - 1), level - 1),
                level - 1,
            )
    if not _r_is_zero(_r_trim(rem, level), level):
        raise AssertionError("inexact polynomial division in GCD")
    return _r_trim(out, level)


def _r_pseudo_rem(a, b, level):
    """Pseudo-remainder of a by b in the main variable."""
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        return list(a)
    lb = b[-1]
    rem = list(a)
    for i in range(da - db, -1, -1):
        lead = rem[db + i]
        if _r_is_zero(lead, level - 1):
            continue
        # rem <- lb*rem - lead*x^i*b, cancelling the coefficient of x^(db+i)
        rem = [_r_mul(x, lb, level - 1) for x in rem]
        for j, y in enumerate(b):
            rem[i + j] = _r_add(
                rem[i + j], _r_neg(_r_mul(lead, y, level - 1), level - 1),
                level - 1,
            )
    return _r_trim(rem[:db] if db >= 0 else [], level)


def _r_leading_int(a, level):
    """Sign-defining integer: leading coefficient down the nesting."""
    while level > 0:
        a = a[-1]
        level -= 1
    return a


def _r_primitive_signed(a, level):
    a = _r_divcoeff(a, _r_content(a, level), level)
    if _r_leading_int(a, level) < 0:
        a = _r_neg(a, level)
    return a


def _poly_to_rep(poly: Poly):
    level = len(poly.params)
    if level == 0:
        value = poly.constant_value()
        assert value.denominator == 1
        return int(value)

    def build(terms, lv):
        if lv == 0:
            coeff = terms.get((), _ZERO)
            assert coeff.denominator == 1
            return int(coeff)
        groups: dict[int, dict] = {}
        for exp, coeff in terms.items():
            groups.setdefault(exp[-1], {})[exp[:-1]] = coeff
        size = max(groups) + 1 if groups else 0
        return _r_trim(
            [build(groups.get(i, {}), lv - 1) for i in range(size)], lv
        )

    return build(poly.terms, level)


def _rep_to_poly(rep, params) -> Poly:
    level = len(params)
    terms: dict = {}

    def walk(r, lv, suffix):
        if lv == 0:
            if r:
                terms[suffix] = Fraction(r)
            return
        for i, x in enumerate(r):
            walk(x, lv - 1, (i,) + suffix)

    walk(rep, level, ())
    return Poly(params, terms)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Primitive GCD with positive leading coefficient (grlex)."""
    _check_same_params(a, b)
    if a.is_zero() and b.is_zero():
        return Poly.constant(a.params, 1)
    scale_a = a.content() or _ONE
    scale_b = b.content() or _ONE
    ia = a.scale(1 / scale_a) if not a.is_zero() else a
    ib = b.scale(1 / scale_b) if not b.is_zero() else b
    if not a.params:
        return Poly.constant(a.params, 1)
    rep = _r_gcd(_poly_to_rep(ia), _poly_to_rep(ib), len(a.params))
    return _rep_to_poly(rep, a.params)


def poly_divexact(a: Poly, b: Poly) -> Poly:
    """Exact division a/b (b must divide a)."""
    _check_same_params(a, b)
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if a.is_zero():
        return a
    lb_exp, lb_coeff = b.leading()
    quotient: dict = {}
    rem = a
    while not rem.is_zero():
        le, lc = rem.leading()
        diff = tuple(x - y for x, y in zip(le, lb_exp))
        if any(d < 0 for d in diff):
            raise AssertionError("inexact polynomial division")
        c = lc / lb_coeff
        quotient[diff] = c
        piece = Poly(a.params, {diff: c}) * b
        rem = rem - piece
    return Poly(a.params, quotient)


# ---------------------------------------------------------------------------
# Scalar
# ---------------------------------------------------------------------------


class Scalar:
    """Reduced rational function in the ambient parameter set.

    Use :meth:`make` (or the ``from_fraction``/``param`` constructors);
    the two-argument form trusts its inputs to be canonical already.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Poly, den: Poly):
        self.num = num
        self.den = den
        self._hash = None

    @staticmethod
    def make(num: Poly, den: Poly) -> "Scalar":
        _check_same_params(num, den)
        if den.is_zero():
            raise ScalarDivisionError("zero denominator")
        if num.is_zero():
            return Scalar(
                Poly(num.params, {}), Poly.constant(num.params, 1)
            )
        g = poly_gcd(num, den)
        if g.total_degree() > 0:
            num = poly_divexact(num, g)
            den = poly_divexact(den, g)
        return Scalar._normalized_coprime(num, den)

    @staticmethod
    def _normalized_coprime(num: Poly, den: Poly) -> "Scalar":
        """Normalize contents and sign; num/den must already be coprime."""
        if num.is_zero():
            return Scalar(
                Poly(num.params, {}), Poly.constant(num.params, 1)
            )
        cn = num.content()
        cd = den.content()
        ratio = cn / cd
        num = num.scale(Fraction(ratio.numerator) / cn)
        den = den.scale(Fraction(ratio.denominator) / cd)
        first = min(den.terms, key=_term_sort_key)
        if den.terms[first] < 0:
            num = -num
            den = -den
        return Scalar(num, den)

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_fraction(cls, params: tuple[str, ...], value) -> "Scalar":
        value = Fraction(value)
        return cls(
            Poly.constant(params, value.numerator),
            Poly.constant(params, value.denominator),
        )

    @classmethod
    def from_poly(cls, poly: Poly) -> "Scalar":
        return cls.make(poly, Poly.constant(poly.params, 1))

    @classmethod
    def param(cls, params: tuple[str, ...], name: str) -> "Scalar":
        return cls.from_poly(Poly.variable(params, name))

    @classmethod
    def zero(cls, params: tuple[str, ...]) -> "Scalar":
        return cls.from_fraction(params, 0)

    @classmethod
    def one(cls, params: tuple[str, ...]) -> "Scalar":
        return cls.from_fraction(params, 1)

    # -- predicates -------------------------------------------------------

    @property
    def params(self) -> tuple[str, ...]:
        return self.num.params

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num == self.den

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        if self.is_zero():
            return _ZERO
        return self.num.constant_value() / self.den.constant_value()

    # -- field operations ---------------------------------------------------

    def __add__(self, other: "Scalar") -> "Scalar":
        """Sum with denominator-gcd splitting to keep gcd operands small."""
        _check_same_params(self.num, other.num)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            num = self.num + other.num
            g = poly_gcd(num, self.den)
            if g.total_degree() > 0:
                return Scalar._normalized_coprime(
                    poly_divexact(num, g), poly_divexact(self.den, g)
                )
            return Scalar._normalized_coprime(num, self.den)
        g = poly_gcd(self.den, other.den)
        if g.total_degree() <= 0:
            num = self.num * other.den + other.num * self.den
            return Scalar._normalized_coprime(num, self.den * other.den)
        left = poly_divexact(self.den, g)
        right = poly_divexact(other.den, g)
        num = self.num * right + other.num * left
        # any residual common factor divides g only
        h = poly_gcd(num, g)
        den = left * right
        if h.total_degree() > 0:
            num = poly_divexact(num, h)
            den = den * poly_divexact(g, h)
        else:
            den = den * g
        return Scalar._normalized_coprime(num, den)

    def __neg__(self) -> "Scalar":
        return Scalar(-self.num, self.den)

    def __sub__(self, other: "Scalar") -> "Scalar":
        return self + (-other)

    def __mul__(self, other: "Scalar") -> "Scalar":
        """Product with cross-cancellation before multiplying out."""
        _check_same_params(self.num, other.num)
        if self.is_zero() or other.is_zero():
            return Scalar.zero(self.params)
        n1, d1 = self.num, self.den
        n2, d2 = other.num, other.den
        g1 = poly_gcd(n1, d2)
        if g1.total_degree() > 0:
            n1 = poly_divexact(n1, g1)
            d2 = poly_divexact(d2, g1)
        g2 = poly_gcd(n2, d1)
        if g2.total_degree() > 0:
            n2 = poly_divexact(n2, g2)
            d1 = poly_divexact(d1, g2)
        return Scalar._normalized_coprime(n1 * n2, d1 * d2)

    def reciprocal(self) -> "Scalar":
        if self.is_zero():
            raise ScalarDivisionError("reciprocal of the zero Scalar")
        return Scalar._normalized_coprime(self.den, self.num)

    def __truediv__(self, other: "Scalar") -> "Scalar":
        _check_same_params(self.num, other.num)
        if other.is_zero():
            raise ScalarDivisionError("division by the zero Scalar")
        return self * other.reciprocal()

    def __pow__(self, n: int) -> "Scalar":
        """Powers of a reduced fraction stay reduced; no gcd needed."""
        if n < 0:
            return self.reciprocal() ** (-n)
        return Scalar._normalized_coprime(self.num**n, self.den**n)

    def scale(self, value) -> "Scalar":
        value = Fraction(value)
        if value == 0 or self.is_zero():
            return Scalar.zero(self.params)
        return Scalar._normalized_coprime(self.num.scale(value), self.den)

    # -- evaluation, substitution, limits ---------------------------------

    def evaluate(self, assignment: Mapping[str, Fraction]) -> Fraction:
        den = self.den.evaluate(assignment)
        if den == 0:
            raise EvaluationPoleError(
                f"denominator {self.den} vanishes at {dict(assignment)}"
            )
        return self.num.evaluate(assignment) / den

    def substitute(self, bindings: Mapping[str, Union[Fraction, int, str]]) -> "Scalar":
        num = self.num.substitute(bindings)
        den = self.den.substitute(bindings)
        if den.is_zero():
            raise EvaluationPoleError(
                f"denominator {self.den} vanishes under {dict(bindings)}"
            )
        return Scalar.make(num, den)

    def limit_scaled_at_infinity(self, name: str, power: int) -> "Scalar":
        """Exact limit of ``self / name**power`` as ``name -> infinity``.

        Returns a Scalar in the remaining parameters; raises ValueError if
        the limit diverges.
        """
        dn = self.num.degree_in(name)
        dd = self.den.degree_in(name)
        rest = make_params(p for p in self.params if p != name)
        if self.is_zero() or dn - dd < power:
            return Scalar.zero(rest)
        if dn - dd > power:
            raise ValueError(
                f"{self} grows faster than {name}^{power} at infinity"
            )
        top_num = self.num.coefficients_in(name)[dn]
        top_den = self.den.coefficients_in(name)[dd]
        return Scalar.make(top_num, top_den)

    # -- dunder plumbing ------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __str__(self):
        return scalar_to_string(self)

    def __repr__(self):
        return f"Scalar({scalar_to_string(self)!r})"

    def __reduce__(self):
        return (Scalar, (self.num, self.den))


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """Dispatch form of the four field operations."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def scalar_eval(a: Scalar, assignment: Mapping[str, Fraction]) -> Fraction:
    """Evaluate at rational parameter values (pole raises)."""
    return a.evaluate(assignment)


def scalar_coefficients_in(a: Scalar, name: str) -> dict[int, "Scalar"]:
    """Coefficients of the powers of one parameter, as Scalars.

    Requires the denominator to be free of that parameter (i.e. the value
    is polynomial in it over the remaining rational-function field).
    """
    if a.den.degree_in(name) > 0:
        raise ValueError(
            f"{a} is not polynomial in {name}: denominator {a.den}"
        )
    out = {}
    for power, chunk in a.num.coefficients_in(name).items():
        if not chunk.is_zero():
            out[power] = Scalar.make(chunk.embed(a.params), a.den)
    return out


# ---------------------------------------------------------------------------
# ZSeries
# ---------------------------------------------------------------------------


class ZSeries:
    """Power series in z truncated at an explicit order.

    ``coeffs[k]`` is the coefficient of ``z**k``; the tuple always has
    ``order + 1`` entries.  Operations never read or write beyond the
    declared order, and operands must share the same order.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence[Scalar]):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ValueError("a ZSeries needs at least the z^0 coefficient")
        params = coeffs[0].params
        for c in coeffs[1:]:
            if c.params != params:
                raise ContextMismatchError(
                    "ZSeries coefficients live in different parameter sets"
                )
        self.order = len(coeffs) - 1
        self.coeffs = coeffs

    @classmethod
    def constant(cls, params: tuple[str, ...], value, order: int) -> "ZSeries":
        zero = Scalar.zero(params)
        return cls(
            (Scalar.from_fraction(params, value),) + (zero,) * order
        )

    @classmethod
    def one(cls, params: tuple[str, ...], order: int) -> "ZSeries":
        return cls.constant(params, 1, order)

    @property
    def params(self) -> tuple[str, ...]:
        return self.coeffs[0].params

    def coefficient(self, k: int) -> Scalar:
        if not 0 <= k <= self.order:
            raise OrderMismatchError(
                f"coefficient {k} beyond declared order {self.order}"
            )
        return self.coeffs[k]

    def _check_order(self, other: "ZSeries"):
        if self.order != other.order:
            raise OrderMismatchError(
                f"series orders differ: {self.order} vs {other.order}"
            )

    def __add__(self, other: "ZSeries") -> "ZSeries":
        self._check_order(other)
        return ZSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "ZSeries") -> "ZSeries":
        """Cauchy product truncated at the shared order."""
        self._check_order(other)
        zero = Scalar.zero(self.params)
        out = [zero] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if b.is_zero():
                    continue
                out[i + j] = out[i + j] + a * b
        return ZSeries(out)

    def scale_argument(self, factor: Scalar) -> "ZSeries":
        """Substitute z -> factor * z (coefficient k picks up factor**k)."""
        out = [self.coeffs[0]]
        power = Scalar.one(self.params)
        for k in range(1, self.order + 1):
            power = power * factor
            out.append(self.coeffs[k] * power)
        return ZSeries(out)

    def inverse(self) -> "ZSeries":
        """Multiplicative inverse; the constant term must be nonzero."""
        c0 = self.coeffs[0]
        if c0.is_zero():
            raise ScalarDivisionError(
                "series with zero constant term has no inverse"
            )
        inv0 = Scalar.one(self.params) / c0
        out = [inv0]
        for k in range(1, self.order + 1):
            acc = Scalar.zero(self.params)
            for i in range(1, k + 1):
                ci = self.coeffs[i]
                if ci.is_zero():
                    continue
                acc = acc + ci * out[k - i]
            out.append(-(inv0 * acc))
        return ZSeries(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        return " + ".join(
            f"({c}) z^{k}" for k, c in enumerate(self.coeffs)
        )

    def __repr__(self):
        return f"ZSeries(order={self.order}, coeffs={list(map(str, self.coeffs))})"

    def __reduce__(self):
        return (ZSeries, (self.coeffs,))


def zseries_arith(a: ZSeries, b, op: str) -> ZSeries:
    """Dispatch form: op in {add, mul, mul_many}.

    For ``mul_many``, ``b`` is an iterable of series and ``a`` one of
    {None, a leading series}; the product of all of them is returned.
    """
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "mul_many":
        factors = list(b)
        if a is not None:
            factors.insert(0, a)
        if not factors:
            raise ValueError("mul_many of an empty collection needs a seed")
        result = factors[0]
        for f in factors[1:]:
            result = result * f
        return result
    raise ValueError(f"unknown operation {op!r}")


def zseries_scale_argument(a: ZSeries, factor: Scalar) -> ZSeries:
    return a.scale_argument(factor)


# ---------------------------------------------------------------------------
# Canonical strings
# ---------------------------------------------------------------------------
# Terms are printed in ascending total degree; ties break toward earlier
# parameters (so "q" prints before "t").  Example: (1 - t)/(1 - q).


def _term_sort_key(exp):
    return (sum(exp), tuple(-e for e in exp))


def _monomial_string(params, exp) -> str:
    pieces = []
    for name, power in zip(params, exp):
        if power == 1:
            pieces.append(name)
        elif power > 1:
            pieces.append(f"{name}^{power}")
    return " ".join(pieces)


def poly_to_string(poly: Poly) -> str:
    if poly.is_zero():
        return "0"
    chunks = []
    for exp in sorted(poly.terms, key=_term_sort_key):
        coeff = poly.terms[exp]
        mono = _monomial_string(poly.params, exp)
        mag = abs(coeff)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag} {mono}"
        else:
            body = str(mag)
        if not chunks:
            chunks.append(body if coeff > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(chunks)


def _needs_parens_as_denominator(poly: Poly) -> bool:
    if len(poly.terms) != 1:
        return True
    exp, coeff = next(iter(poly.terms.items()))
    factors = sum(1 for e in exp if e)
    if factors == 0:
        return False  # bare integer
    return abs(coeff) != 1 or factors > 1


def scalar_to_string(scalar: Scalar) -> str:
    """Canonical serialized form; round-trips bit-exactly."""
    num = poly_to_string(scalar.num)
    if scalar.den == Poly.constant(scalar.params, 1):
        return num
    den = poly_to_string(scalar.den)
    if len(scalar.num.terms) > 1:
        num = f"({num})"
    if _needs_parens_as_denominator(scalar.den):
        den = f"({den})"
    return f"{num}/{den}"


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]+)(?:\^(\d+))?|([()+\-/]))")


def _parse_sum(text: str, params: tuple[str, ...]) -> Poly:
    pos = 0
    terms: dict = {}
    sign = 1
    expect_term = True
    width = len(params)
    index = {name: i for i, name in enumerate(params)}

    def flush(coeff, exps):
        exp = [0] * width
        for name, power in exps:
            if name not in index:
                raise ParseError(
                    f"parameter {name!r} not in context {params}"
                )
            exp[index[name]] += power
        key = tuple(exp)
        terms[key] = terms.get(key, _ZERO) + coeff

    coeff = None
    exps: list = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot tokenize {text[pos:]!r}")
        pos = m.end()
        number, name, power, punct = m.groups()
        if number is not None:
            if coeff is None:
                coeff = Fraction(int(number))
            else:
                coeff *= int(number)
        elif name is not None:
            if coeff is None:
                coeff = _ONE
            exps.append((name, int(power) if power else 1))
        elif punct in "+-":
            if coeff is not None or exps:
                flush(sign * (coeff if coeff is not None else _ONE), exps)
            elif not expect_term and punct == "-":
                pass
            sign = 1 if punct == "+" else -1
            coeff = None
            exps = []
            expect_term = True
        else:
            raise ParseError(f"unexpected token {punct!r} in {text!r}")
    if coeff is not None or exps:
        flush(sign * (coeff if coeff is not None else _ONE), exps)
    elif expect_term:
        raise ParseError(f"dangling sign in {text!r}")
    return Poly.from_terms(params, terms)


def _strip_parens(text: str) -> str:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        depth = 0
        for i, ch in enumerate(text):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0 and i != len(text) - 1:
                    return text
        return text[1:-1]
    return text


def scalar_from_string(text: str, params: tuple[str, ...]) -> Scalar:
    """Parse the canonical serialized form back into a Scalar."""
    depth = 0
    split = None
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            if split is not None:
                raise ParseError(f"multiple top-level '/' in {text!r}")
            split = i
    if split is None:
        num_text, den_text = text, None
    else:
        num_text, den_text = text[:split], text[split + 1:]
    num = _parse_sum(_strip_parens(num_text), params)
    if den_text is None:
        den = Poly.constant(params, 1)
    else:
        den = _parse_sum(_strip_parens(den_text), params)
    return Scalar.make(num, den)


def parse_rational(text: str) -> Fraction:
    """Parse 'p/q' or an integer string; decimals are rejected."""
    text = text.strip()
    if re.fullmatch(r"-?\d+(/\d+)?", text) is None:
        raise ParseError(
            f"not an exact rational (use p/q or an integer): {text!r}"
        )
    return Fraction(text)
