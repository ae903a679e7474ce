"""Irreducible characters of the symmetric group.

Character values are computed by the Murnaghan-Nakayama border-strip
recursion on first-column hook lengths (beta sets), memoized on the
(shape, remaining cycles) pair.  Everything is an exact integer.

Complete tables are cached to disk as one JSON file per group size; a
cache entry is invalidated only by deleting the file.  Rows are indexed
by irreducible representation (trivial first, i.e. reverse-lexicographic
order), columns by conjugacy class (identity class first).
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import BoundExceededError, WeightMismatchError
from .partitions import Partition, enumerate_partitions, hook_product, z_mu

#: Default ceiling for full character tables.
CHARTABLE_BOUND = 10

_CACHE_ENV = "QHURWITZ_CACHE"


def cache_directory(explicit: str | None = None) -> str:
    """Resolve the character-table cache directory."""
    if explicit:
        return explicit
    env = os.environ.get(_CACHE_ENV)
    if env:
        return env
    return os.path.join(os.path.expanduser("~"), ".cache", "qhurwitz")


def _beta_set(shape: tuple[int, ...]) -> tuple[int, ...]:
    ell = len(shape)
    return tuple(shape[i] + (ell - 1 - i) for i in range(ell))


def _shape_from_beta(beta: tuple[int, ...]) -> tuple[int, ...]:
    ordered = sorted(beta, reverse=True)
    ell = len(ordered)
    shape = [ordered[i] - (ell - 1 - i) for i in range(ell)]
    return tuple(p for p in shape if p > 0)


@lru_cache(maxsize=None)
def _mn(shape: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    if not cycles:
        return 1 if not shape else 0
    if sum(shape) != sum(cycles):
        raise WeightMismatchError(f"|{shape}| != |{cycles}|")
    r = cycles[0]
    rest = cycles[1:]
    beta = _beta_set(shape)
    beta_set = set(beta)
    total = 0
    for b in beta:
        if b < r or (b - r) in beta_set:
            continue
        height = sum(1 for x in beta if b - r < x < b)
        new_beta = tuple(x for x in beta if x != b) + (b - r,)
        sub = _mn(_shape_from_beta(new_beta), rest)
        total += -sub if height % 2 else sub
    return total


def character(lam: Partition, mu: Partition) -> int:
    """Character of the irreducible of shape lam at the class mu."""
    lam = Partition(lam)
    mu = Partition(mu)
    if lam.weight != mu.weight:
        raise WeightMismatchError(
            f"irrep and class weights differ: {lam} vs {mu}"
        )
    # removing long cycles first keeps the recursion shallow
    return _mn(tuple(lam), tuple(sorted(mu, reverse=True)))


def dimension(lam: Partition) -> int:
    """Dimension of the irreducible of shape lam."""
    lam = Partition(lam)
    return math.factorial(lam.weight) // hook_product(lam)


def central_character(lam: Partition, mu: Partition) -> Fraction:
    """Eigenvalue of the class sum of type mu on the isotypic projector lam."""
    lam = Partition(lam)
    mu = Partition(mu)
    if lam.weight != mu.weight:
        raise WeightMismatchError(
            f"irrep and class weights differ: {lam} vs {mu}"
        )
    return Fraction(hook_product(lam) * character(lam, mu)) / z_mu(mu)


@dataclass(frozen=True)
class CharacterTable:
    """Full character table of the symmetric group on n symbols."""

    n: int
    classes: tuple[Partition, ...]  # identity class first
    irreps: tuple[Partition, ...]  # trivial representation first
    chi: tuple[tuple[int, ...], ...]  # chi[irrep_index][class_index]

    def value(self, lam: Partition, mu: Partition) -> int:
        return self.chi[self.irreps.index(Partition(lam))][
            self.classes.index(Partition(mu))
        ]

    def z(self, mu: Partition) -> Fraction:
        return z_mu(mu)

    def dimensions(self) -> tuple[int, ...]:
        identity = self.classes.index(Partition([1] * self.n) if self.n else Partition())
        return tuple(row[identity] for row in self.chi)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "classes": [list(mu) for mu in self.classes],
            "irreps": [list(lam) for lam in self.irreps],
            "chi": [list(row) for row in self.chi],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "CharacterTable":
        return cls(
            n=data["n"],
            classes=tuple(Partition(mu) for mu in data["classes"]),
            irreps=tuple(Partition(lam) for lam in data["irreps"]),
            chi=tuple(tuple(row) for row in data["chi"]),
        )


def _build_table(n: int) -> CharacterTable:
    irreps = tuple(enumerate_partitions(n))
    classes = tuple(reversed(irreps))
    chi = tuple(
        tuple(character(lam, mu) for mu in classes) for lam in irreps
    )
    return CharacterTable(n=n, classes=classes, irreps=irreps, chi=chi)


@lru_cache(maxsize=None)
def _table_via_disk(n: int, cache_dir: str | None) -> CharacterTable:
    directory = cache_directory(cache_dir)
    path = os.path.join(directory, f"chartable_n{n}.json")
    if os.path.exists(path):
        with open(path, encoding="utf-8") as handle:
            return CharacterTable.from_json_dict(json.load(handle))
    table = _build_table(n)
    try:
        os.makedirs(directory, exist_ok=True)
        tmp = path + ".tmp"
        with open(tmp, "w", encoding="utf-8") as handle:
            json.dump(table.to_json_dict(), handle, separators=(",", ":"))
            handle.write("\n")
        os.replace(tmp, path)
    except OSError:
        pass  # caching is best-effort; the computed table is still returned
    return table


def char_table(n: int, cache_dir: str | None = None, bound: int = CHARTABLE_BOUND) -> CharacterTable:
    """Complete character table, cached to disk after first computation."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > bound:
        raise BoundExceededError(
            f"n={n} exceeds the character-table bound {bound}"
        )
    return _table_via_disk(n, cache_dir)
