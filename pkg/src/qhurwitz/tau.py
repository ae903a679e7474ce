"""Content-product eigenvalue series and coefficient-table assembly.

The double-Schur coefficient attached to a shape is a truncated series in
the bookkeeping variable z: the product over cells of the weight series
with its argument scaled by (N + column - row), times a prefactor series
for the integer offset N (reciprocal factors for negative N).  Expanding
the double-Schur table in products of power sums via the character
transform yields exactly the weighted walk sums of the hurwitz module;
the tables produced here carry both sections.

Weight series coefficients are always computed by the finite partition
sums of the family (never by truncating infinite products), so every
entry is an exact rational function.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .characters import char_table
from .errors import BoundExceededError
from .partitions import Partition, enumerate_partitions, z_mu
from .scalars import Scalar, ZSeries, scalar_to_string
from ._parallel import parallel_map

#: Hard bound mirroring the walk/cover modules.
TAU_N_BOUND = 6


def weight_series(family, order: int) -> ZSeries:
    """Truncated weight-generating series of a family."""
    return ZSeries([family.weight_coeff(j) for j in range(order + 1)])


@dataclass(frozen=True)
class ContentProductSeries:
    """Series eigenvalue of the central kernel element at one shape."""

    shape: Partition
    N: int
    series: ZSeries


def _r0_series(N: int, base: ZSeries, params) -> ZSeries:
    """Offset prefactor: products of argument-scaled copies of the base.

    Empty product for N in {0, 1}; reciprocal factors for negative N.
    """
    order = base.order
    result = ZSeries.one(params, order)
    if N >= 1:
        for j in range(1, N):
            factor = base.scale_argument(Scalar.from_fraction(params, N - j))
            result = result * factor
    elif N <= -1:
        M = -N
        for j in range(1, M + 1):
            factor = base.scale_argument(Scalar.from_fraction(params, j - M))
            result = result * factor.inverse()
    return result


def r_lambda(lam, N: int, family, order: int) -> ContentProductSeries:
    """Content-product series for one shape at integer offset N."""
    lam = Partition(lam)
    params = family.params
    base = weight_series(family, order)
    series = _r0_series(N, base, params)
    for content in lam.contents():
        series = series * base.scale_argument(
            Scalar.from_fraction(params, N + content)
        )
    return ContentProductSeries(shape=lam, N=N, series=series)


@dataclass(frozen=True)
class TauTable:
    """Double-Schur and power-sum coefficient tables, to a fixed order."""

    N: int
    n_max: int
    d_max: int
    family_label: dict
    schur: dict  # Partition -> ZSeries
    powersum: dict  # (d, mu, nu) -> Scalar

    def to_json_dict(self) -> dict:
        schur_entries = []
        for lam in sorted(self.schur, key=lambda p: (p.weight, [-x for x in p])):
            schur_entries.append(
                {
                    "lambda": list(lam),
                    "series": [
                        scalar_to_string(c) for c in self.schur[lam].coeffs
                    ],
                }
            )
        powersum_entries = []
        for (d, mu, nu) in sorted(
            self.powersum,
            key=lambda key: (
                key[0],
                key[1].weight,
                [-x for x in key[1]],
                [-x for x in key[2]],
            ),
        ):
            powersum_entries.append(
                {
                    "d": d,
                    "mu": list(mu),
                    "nu": list(nu),
                    "value": scalar_to_string(self.powersum[(d, mu, nu)]),
                }
            )
        return {
            "N": self.N,
            "n_max": self.n_max,
            "d_max": self.d_max,
            "family": self.family_label,
            "schur": schur_entries,
            "powersum": powersum_entries,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    def to_latex(self) -> str:
        """Small tabular rendering of the power-sum section."""
        lines = [
            r"\begin{tabular}{rllll}",
            r"$d$ & $\mu$ & $\nu$ & coefficient \\",
            r"\hline",
        ]
        for entry in self.to_json_dict()["powersum"]:
            mu = ",".join(map(str, entry["mu"])) or "-"
            nu = ",".join(map(str, entry["nu"])) or "-"
            value = entry["value"]
            lines.append(
                f"{entry['d']} & $({mu})$ & $({nu})$ & ${value}$ \\\\"
            )
        lines.append(r"\end{tabular}")
        return "\n".join(lines) + "\n"


def _powersum_block(n: int, d_max: int, N: int, family, jobs: int = 1) -> dict:
    """Power-sum coefficients for one weight n via the character transform."""
    params = family.params
    classes = enumerate_partitions(n)
    table = char_table(n) if n else None
    series_list = parallel_map(
        _RLambdaWorker(N, family, d_max), classes, jobs=jobs
    )
    series = dict(zip(classes, series_list))
    out = {}
    if n == 0:
        empty = Partition()
        base = _r0_series(N, weight_series(family, d_max), params)
        for d in range(d_max + 1):
            out[(d, empty, empty)] = base.coefficient(d)
        return out
    for mu in classes:
        for nu in classes:
            scale = Fraction(1) / (z_mu(mu) * z_mu(nu))
            for d in range(d_max + 1):
                total = Scalar.zero(params)
                for lam in classes:
                    chi_m = table.value(lam, mu)
                    chi_n = table.value(lam, nu)
                    if chi_m and chi_n:
                        total = total + series[lam].coefficient(d).scale(
                            chi_m * chi_n
                        )
                out[(d, mu, nu)] = total.scale(scale)
    return out


class _RLambdaWorker:
    """Picklable per-shape series builder for the worker pool."""

    def __init__(self, N, family, order):
        self.N = N
        self.family = family
        self.order = order

    def __call__(self, lam):
        return r_lambda(lam, self.N, self.family, self.order).series


def tau_tables(n_max: int, d_max: int, N: int, family, jobs: int = 1) -> TauTable:
    """Assemble the double-Schur and power-sum sections up to the bounds."""
    if n_max > TAU_N_BOUND:
        raise BoundExceededError(
            f"n_max={n_max} exceeds the table bound {TAU_N_BOUND}"
        )
    schur = {}
    for n in range(n_max + 1):
        for lam in enumerate_partitions(n):
            schur[lam] = r_lambda(lam, N, family, d_max).series
    powersum = {}
    for n in range(n_max + 1):
        powersum.update(_powersum_block(n, d_max, N, family, jobs=jobs))
    return TauTable(
        N=N,
        n_max=n_max,
        d_max=d_max,
        family_label=family.label(),
        schur=schur,
        powersum=powersum,
    )


def powersum_to_schur_coefficient(table: TauTable, lam, d: int) -> Scalar:
    """Invert the character transform on a table (round-trip check).

    Recovers [z^d] of the shape series from the power-sum section by the
    double character sum; exact by orthogonality.
    """
    lam = Partition(lam)
    n = lam.weight
    chars = char_table(n)
    params = next(iter(table.powersum.values())).params
    total = Scalar.zero(params)
    for mu in enumerate_partitions(n):
        chi_m = chars.value(lam, mu)
        if not chi_m:
            continue
        for nu in enumerate_partitions(n):
            chi_n = chars.value(lam, nu)
            if chi_n:
                total = total + table.powersum[(d, mu, nu)].scale(
                    chi_m * chi_n
                )
    return total
