"""Named verification suites, one per acceptance criterion.

Each suite returns a :class:`CriterionResult` with per-check report lines
and, on failure, a minimal counterexample (n, d, mu, nu, evaluation
point).  The command-line ``verify`` subcommand maps onto these one to
one; the pytest acceptance module drives the same functions.

Identity testing runs in two modes: fully symbolic (exact rational
functions) at small sizes, and seeded random rational evaluation at the
largest sizes, where parameters are bound to random rationals with
numerators and denominators bounded by 10^4 and at least five independent
points are used.  Both modes are exact; the random mode is sound with
overwhelming probability and much cheaper.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .characters import char_table
from .errors import EvaluationPoleError, ScalarDivisionError
from .group_algebra import (
    CentralElement,
    central_multiply,
    enumerate_paths,
    jm_symmetric_apply,
    normalized_path_count,
)
from .hurwitz import (
    WeightFamily,
    fd_bruteforce,
    fd_character,
    gj_cycle_expansion_check,
    hde_geometric,
    pure_hurwitz,
    pure_hurwitz_bruteforce,
)
from .partitions import (
    Partition,
    dominance_less,
    enumerate_partitions,
    hook_product,
    pochhammer_partition,
    z_mu,
)
from .scalars import Scalar, make_params, scalar_coefficients_in
from .symfunc import (
    SymmetricFunction,
    b_lambda,
    classical_h_value,
    convert,
    g_j_value,
    g_lambda_value,
    hl_q_lambda,
    jack_g_value,
    macdonald_P,
    macdonald_P_symfunc,
    scalar_product_qt,
    schur_in_p,
    sym_eval,
)
from . import tau

DEFAULT_SEED = 42
DEFAULT_TRIALS = 5

#: default c-lists exercised by the identity suites
DEFAULT_C_LISTS = ((Fraction(1),), (Fraction(1), Fraction(1, 2)))


@dataclass
class CriterionResult:
    name: str
    ok: bool = True
    lines: list = field(default_factory=list)
    counterexample: str | None = None

    def check(self, ok: bool, label: str, counterexample: str = ""):
        self.lines.append(f"{'pass' if ok else 'FAIL'}: {label}")
        if not ok and self.ok:
            self.ok = False
            self.counterexample = counterexample or label
        return ok


def random_points(params, trials: int, seed: int, bound: int = 10**4):
    """Seeded rational evaluation points avoiding trivial degeneracies."""
    rng = random.Random(seed)
    points = []
    while len(points) < trials:
        point = {
            name: Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
            for name in params
        }
        if any(v in (0, 1, -1) for v in point.values()):
            continue
        points.append(point)
    return points


def _tables_equal(a: dict, b: dict):
    for key in a:
        if a[key] != b[key]:
            return key
    return None


# ---------------------------------------------------------------------------
# 1. Route equality of the three constructions
# ---------------------------------------------------------------------------


def verify_theorem_combinatorial(
    ns=(2, 3, 4), d_max=3, c_lists=DEFAULT_C_LISTS,
    trials=DEFAULT_TRIALS, seed=DEFAULT_SEED, jobs=1,
) -> CriterionResult:
    """Eigenvalue route == walk route == table slice, every (mu, nu)."""
    result = CriterionResult("theorem-combinatorial")
    for c in c_lists:
        for n in ns:
            if n <= 3:
                families = [(WeightFamily.make("macdonald", c), "symbolic")]
            else:
                families = [
                    (
                        WeightFamily.make(
                            "macdonald", c, q=pt["q"], t=pt["t"]
                        ),
                        f"q={pt['q']},t={pt['t']}",
                    )
                    for pt in random_points(("q", "t"), trials, seed)
                ]
            for fam, mode in families:
                table = tau.tau_tables(n, d_max, 0, fam, jobs=jobs)
                for d in range(d_max + 1):
                    char_route = fd_character(n, d, fam)
                    walk_route = fd_bruteforce(n, d, fam)
                    slice_route = {
                        key: table.powersum[(d, key[0], key[1])]
                        for key in char_route
                    }
                    for label, other in (
                        ("walk", walk_route), ("table", slice_route),
                    ):
                        bad = _tables_equal(char_route, other)
                        if not result.check(
                            bad is None,
                            f"c={list(map(str, c))} n={n} d={d} "
                            f"[{mode}] eigenvalue vs {label}",
                            counterexample=(
                                f"n={n} d={d} mu={list(bad[0])} "
                                f"nu={list(bad[1])} point={mode}"
                                if bad
                                else ""
                            ),
                        ):
                            return result
    return result


# ---------------------------------------------------------------------------
# 2. Geometric refinement
# ---------------------------------------------------------------------------


def verify_theorem_geometric(
    ns=(2, 3, 4), d_max=3, c_lists=DEFAULT_C_LISTS,
    trials=DEFAULT_TRIALS, seed=DEFAULT_SEED,
) -> CriterionResult:
    """Walk sums are t-polynomials of degree <= d whose t^e coefficients,
    rescaled by z_nu, are the branched-cover configuration sums."""
    result = CriterionResult("theorem-geometric")
    for c in c_lists:
        for n in ns:
            if n <= 3:
                families = [(WeightFamily.make("macdonald", c), "symbolic")]
            else:
                families = [
                    (
                        WeightFamily.make("macdonald", c, q=pt["q"]),
                        f"q={pt['q']}",
                    )
                    for pt in random_points(("q",), trials, seed)
                ]
            for fam, mode in families:
                zero = Scalar.zero(fam.params)
                for d in range(d_max + 1):
                    walks = fd_character(n, d, fam)
                    covers = {
                        e: hde_geometric(n, d, e, fam) for e in range(d + 1)
                    }
                    for (mu, nu), value in walks.items():
                        coeffs = scalar_coefficients_in(value, "t")
                        if not result.check(
                            max(coeffs, default=0) <= d,
                            f"c={list(map(str, c))} n={n} d={d} [{mode}] "
                            f"t-degree bound at ({list(mu)},{list(nu)})",
                            counterexample=(
                                f"n={n} d={d} mu={list(mu)} nu={list(nu)} "
                                f"point={mode}"
                            ),
                        ):
                            return result
                        for e in range(d + 1):
                            lhs = coeffs.get(e, zero).scale(z_mu(nu))
                            if lhs != covers[e][(mu, nu)]:
                                result.check(
                                    False,
                                    f"c={list(map(str, c))} n={n} d={d} e={e} "
                                    f"[{mode}] cover sum at "
                                    f"({list(mu)},{list(nu)})",
                                    counterexample=(
                                        f"n={n} d={d} mu={list(mu)} "
                                        f"nu={list(nu)} point={mode}"
                                    ),
                                )
                                return result
                    result.check(
                        True,
                        f"c={list(map(str, c))} n={n} d={d} [{mode}] "
                        "grading matches cover sums",
                    )
    return result


# ---------------------------------------------------------------------------
# 3. Generator expansion over cycle-type sums
# ---------------------------------------------------------------------------


def verify_gj_cycle_sums(
    ns=(2, 3, 4), j_max=3, trials=DEFAULT_TRIALS, seed=DEFAULT_SEED,
) -> CriterionResult:
    result = CriterionResult("gj-cycle-sums")
    for n in ns:
        for j in range(1, j_max + 1):
            if n <= 3:
                fams = [(WeightFamily.make("macdonald"), "symbolic")]
            else:
                fams = [
                    (
                        WeightFamily.make("macdonald", q=pt["q"], t=pt["t"]),
                        f"q={pt['q']},t={pt['t']}",
                    )
                    for pt in random_points(("q", "t"), trials, seed)
                ]
            for fam, mode in fams:
                ok, _report = gj_cycle_expansion_check(n, j, fam)
                if not result.check(
                    ok,
                    f"n={n} j={j} [{mode}] generator expansion",
                    counterexample=f"n={n} d={j} point={mode}",
                ):
                    return result
    return result


# ---------------------------------------------------------------------------
# 4. Walk-transfer endomorphism identity
# ---------------------------------------------------------------------------


def verify_lemma_paths(ns=(2, 3, 4), d_max=3) -> CriterionResult:
    result = CriterionResult("lemma-paths")
    params = ()
    for n in ns:
        for d in range(1, d_max + 1):
            paths = enumerate_paths(n, d)
            for sig in enumerate_partitions(d):
                monomial = SymmetricFunction(
                    params, d, "m", {sig: Scalar.one(params)}
                )
                action = jm_symmetric_apply(convert(monomial, "p"), n)
                for mu in enumerate_partitions(n):
                    lhs = central_multiply(
                        action, CentralElement.class_sum(n, mu, params)
                    ).to_basis("C")
                    rhs_coeffs = {}
                    for nu in enumerate_partitions(n):
                        m = normalized_path_count(paths, sig, mu, nu)
                        if m:
                            rhs_coeffs[nu] = Scalar.from_fraction(
                                params, m * z_mu(nu) / math.factorial(n)
                            )
                    rhs = CentralElement(n, "C", params, rhs_coeffs)
                    if not result.check(
                        lhs == rhs,
                        f"n={n} signature={list(sig)} start={list(mu)}",
                        counterexample=(
                            f"n={n} d={d} mu={list(mu)} "
                            f"sig={list(sig)} point=exact"
                        ),
                    ):
                        return result
    return result


# ---------------------------------------------------------------------------
# 5. Orthogonal-basis kernel
# ---------------------------------------------------------------------------


def verify_macdonald_kernel(
    ortho_max=6, schur_max=5, hl_max=4, cauchy_max=4,
) -> CriterionResult:
    result = CriterionResult("macdonald-kernel")
    params = make_params(("q", "t"))

    for n in range(1, ortho_max + 1):
        parts = enumerate_partitions(n)
        for i, lam in enumerate(parts):
            vec = macdonald_P(lam)
            leading = vec.get(lam)
            tri_ok = leading is not None and leading.is_one() and all(
                mu == lam or dominance_less(mu, lam) for mu in vec
            )
            if not result.check(
                tri_ok,
                f"unitriangularity at {list(lam)}",
                counterexample=f"n={n} d=- mu={list(lam)} nu=- point=symbolic",
            ):
                return result
            for other in parts[i + 1:]:
                sp = scalar_product_qt(
                    macdonald_P_symfunc(lam), macdonald_P_symfunc(other)
                )
                if not result.check(
                    sp.is_zero(),
                    f"orthogonality ({list(lam)}, {list(other)})",
                    counterexample=(
                        f"n={n} d=- mu={list(lam)} nu={list(other)} "
                        "point=symbolic"
                    ),
                ):
                    return result
        result.check(True, f"degree {n}: orthogonal and unitriangular")

    for n in range(1, schur_max + 1):
        for lam in enumerate_partitions(n):
            vec = {
                mu: value.substitute({"t": "q"})
                for mu, value in macdonald_P(lam).items()
            }
            schur = {
                mu: value.substitute({"t": "q"})
                for mu, value in convert(
                    schur_in_p(lam, params), "m"
                ).coeffs.items()
            }
            if not result.check(
                vec == schur,
                f"q=t collapse to Schur at {list(lam)}",
                counterexample=f"n={n} d=- mu={list(lam)} nu=- point=q=t",
            ):
                return result

    c_list = (Fraction(1), Fraction(1, 3))
    for n in range(1, hl_max + 1):
        for lam in enumerate_partitions(n):
            g0 = g_lambda_value(lam, c_list).substitute({"q": Fraction(0)})
            hl = hl_q_lambda(lam, c_list)
            if not result.check(
                g0 == hl,
                f"q=0 product-basis value at {list(lam)}",
                counterexample=f"n={n} d=- mu={list(lam)} nu=- point=q=0",
            ):
                return result
    result.check(True, "q=t and q=0 specializations")

    c1 = (Fraction(1), Fraction(1, 2))
    c2 = (Fraction(1, 3),)
    from .symfunc import m_eval

    for n in range(1, cauchy_max + 1):
        lhs = Scalar.zero(params)
        rhs = Scalar.zero(params)
        for lam in enumerate_partitions(n):
            f = macdonald_P_symfunc(lam)
            lhs = lhs + b_lambda(lam) * sym_eval(f, c1) * sym_eval(f, c2)
            rhs = rhs + g_lambda_value(lam, c1).scale(m_eval(lam, c2))
        if not result.check(
            lhs == rhs,
            f"degree-{n} two-kernel expansion slice",
            counterexample=f"n={n} d=- mu=- nu=- point=symbolic",
        ):
            return result
    return result


# ---------------------------------------------------------------------------
# 6. Partition Pochhammer factorization
# ---------------------------------------------------------------------------


def verify_pochhammer(weight_max=6) -> CriterionResult:
    result = CriterionResult("pochhammer")
    params = make_params(("u",))
    u = Scalar.param(params, "u")
    for n in range(1, weight_max + 1):
        table = char_table(n)
        for lam in enumerate_partitions(n):
            expanded = Scalar.zero(params)
            for mu in enumerate_partitions(n):
                chi = table.value(lam, mu)
                if chi:
                    expanded = expanded + (u ** len(mu)).scale(
                        Fraction(chi) / z_mu(mu)
                    )
            rhs = expanded.scale(hook_product(lam))
            if not result.check(
                pochhammer_partition(lam) == rhs,
                f"content product at {list(lam)}",
                counterexample=f"n={n} d=- mu={list(lam)} nu=- point=symbolic",
            ):
                return result
        result.check(True, f"weight {n}")
    return result


# ---------------------------------------------------------------------------
# 7. Pure Hurwitz numbers against factorization counts
# ---------------------------------------------------------------------------


def verify_pure_hurwitz(n_max=4, profile_max=4) -> CriterionResult:
    result = CriterionResult("pure-hurwitz")
    examples = [
        ((Partition((2,)), Partition((2,))), 2, Fraction(1, 2)),
        ((Partition((2,)),) * 3, 2, Fraction(0)),
        ((Partition((3,)), Partition((3,))), 3, Fraction(1, 3)),
    ]
    for profiles, n, expected in examples:
        value = pure_hurwitz(profiles, n)
        if not result.check(
            value == expected,
            f"pinned value H{tuple(map(list, profiles))} n={n}",
            counterexample=f"n={n} d=- mu={list(profiles[0])} nu=- point=exact",
        ):
            return result

    import itertools

    for n in range(2, n_max + 1):
        pool = [p for p in enumerate_partitions(n) if p != Partition([1] * n)]
        for k in range(1, profile_max + 1):
            for combo in itertools.combinations_with_replacement(pool, k):
                frobenius = pure_hurwitz(combo, n)
                direct = pure_hurwitz_bruteforce(combo, n)
                if not result.check(
                    frobenius == direct,
                    f"n={n} profiles={[list(p) for p in combo]}",
                    counterexample=(
                        f"n={n} d=- mu={list(combo[0])} nu=- point=exact"
                    ),
                ):
                    return result
        result.check(True, f"n={n}: all multisets up to {profile_max} profiles")
    return result


# ---------------------------------------------------------------------------
# 8. The specialization web between families
# ---------------------------------------------------------------------------


def verify_specializations(order=3, c_lists=DEFAULT_C_LISTS) -> CriterionResult:
    result = CriterionResult("specializations")
    qt = make_params(("q", "t"))
    q = Scalar.param(qt, "q")
    t = Scalar.param(qt, "t")
    for c in c_lists:
        macdonald = WeightFamily.make("macdonald", c)
        complete = WeightFamily.make("complete", c)
        elementary = WeightFamily.make("elementary", c)
        jack_one = WeightFamily.make("jack", c, alpha=1)
        classical = WeightFamily.make("classical", c)
        for j in range(order + 1):
            g = macdonald.weight_coeff(j)
            if not result.check(
                g.substitute({"t": Fraction(0)}) == complete.weight_coeff(j),
                f"c={list(map(str, c))} j={j}: t=0 equals complete kind",
                counterexample=f"n=- d={j} mu=- nu=- point=t=0",
            ):
                return result
            # scaled limit t -> infinity after flipping the sign of tz
            sign = 1 if j % 2 == 0 else -1
            limit = g.limit_scaled_at_infinity("t", j).scale(sign)
            target = elementary.weight_coeff(j).substitute({})
            if not result.check(
                limit == target,
                f"c={list(map(str, c))} j={j}: scaled limit equals elementary",
                counterexample=f"n=- d={j} mu=- nu=- point=t->inf",
            ):
                return result
            if not result.check(
                _constant_match(
                    g.substitute({"t": "q"}), classical.weight_coeff(j)
                ),
                f"c={list(map(str, c))} j={j}: q=t collapse is classical",
                counterexample=f"n=- d={j} mu=- nu=- point=q=t",
            ):
                return result
            if not result.check(
                jack_one.weight_coeff(j) == classical.weight_coeff(j),
                f"c={list(map(str, c))} j={j}: alpha=1 is the geometric kernel",
                counterexample=f"n=- d={j} mu=- nu=- point=alpha=1",
            ):
                return result
    return result


def _constant_match(value_in_q: Scalar, constant: Scalar) -> bool:
    """A (q)-context value equals a parameter-free constant."""
    return value_in_q.is_constant() and (
        value_in_q.as_fraction() == constant.as_fraction()
    )


# ---------------------------------------------------------------------------
# 9. Determinism of command-line artifacts
# ---------------------------------------------------------------------------


def verify_determinism(tmpdir=None) -> CriterionResult:
    import os
    import tempfile

    from .cli import main as cli_main

    result = CriterionResult("determinism")
    owned = tmpdir is None
    if owned:
        tmpdir = tempfile.mkdtemp(prefix="qhurwitz-verify-")
    commands = [
        ["chars", "--n", "4"],
        ["fd", "--n", "3", "--dmax", "2", "--family", "macdonald",
         "--c", "1,1/2", "--mode", "symbolic"],
        ["tau", "--nmax", "2", "--dmax", "2", "--offset", "1",
         "--family", "hall_littlewood", "--c", "1"],
        ["hde", "--n", "3", "--d", "2", "--e", "1",
         "--family", "macdonald", "--c", "1", "--format", "csv"],
    ]
    for index, argv in enumerate(commands):
        outputs = []
        for run in (0, 1):
            path = os.path.join(tmpdir, f"det-{index}-{run}.out")
            code = cli_main(argv + ["--out", path])
            if not result.check(
                code == 0,
                f"exit code of {' '.join(argv)}",
                counterexample=f"n=- d=- mu=- nu=- point=run{run}",
            ):
                return result
            with open(path, "rb") as handle:
                outputs.append(handle.read())
        if not result.check(
            outputs[0] == outputs[1] and len(outputs[0]) > 0,
            f"byte-identical reruns of {' '.join(argv)}",
            counterexample="n=- d=- mu=- nu=- point=rerun",
        ):
            return result
    return result


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

CRITERIA = {
    "theorem-combinatorial": verify_theorem_combinatorial,
    "theorem-geometric": verify_theorem_geometric,
    "gj-cycle-sums": verify_gj_cycle_sums,
    "lemma-paths": verify_lemma_paths,
    "macdonald-kernel": verify_macdonald_kernel,
    "pochhammer": verify_pochhammer,
    "pure-hurwitz": verify_pure_hurwitz,
    "specializations": verify_specializations,
    "determinism": verify_determinism,
}
