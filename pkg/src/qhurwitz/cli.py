"""Command-line front end.

Subcommands: chars, macdonald, weights, fd, hde, tau, verify, cache.
Identical run configurations produce byte-identical artifacts: iteration
orders are fixed, scalars serialize canonically, and the default seed is
a constant.

Exit codes: 0 success, 1 failed verification or internal error, 2 usage
error, 3 enumeration bound exceeded.

An optional key=value config file supplies defaults; explicit flags win.
The QHURWITZ_CACHE environment variable (or --cache-dir) relocates the
character-table cache.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import shutil
import sys
from dataclasses import dataclass
from fractions import Fraction

from ._parallel import default_jobs
from .characters import cache_directory, char_table
from .errors import BoundExceededError, ParseError, QHurwitzError
from .hurwitz import FAMILY_PARAMS, WeightFamily, fd_character, hde_geometric
from .partitions import Partition, enumerate_partitions, z_mu
from .scalars import parse_rational, scalar_to_string
from .symfunc import macdonald_P
from . import tau

DEFAULT_SEED = 42
DEFAULT_TRIALS = 5


@dataclass(frozen=True)
class RunConfig:
    """Fully resolved options of one invocation."""

    command: str
    n: int | None = None
    n_max: int | None = None
    d: int | None = None
    d_max: int | None = None
    e: int | None = None
    offset: int = 0
    degree: int | None = None
    family: str = "macdonald"
    c: tuple[Fraction, ...] = ()
    q: Fraction | None = None
    t: Fraction | None = None
    alpha: Fraction | None = None
    mode: str = "symbolic"
    fmt: str = "json"
    seed: int = DEFAULT_SEED
    trials: int = DEFAULT_TRIALS
    jobs: int = 1
    cache_dir: str | None = None
    out: str | None = None
    criterion: str | None = None
    action: str | None = None

    def build_family(self) -> WeightFamily:
        bindings = {"q": self.q, "t": self.t, "alpha": self.alpha}
        given = {
            name: value
            for name, value in bindings.items()
            if value is not None and name in FAMILY_PARAMS[self.family]
        }
        if self.mode == "eval":
            from .verify import random_points

            missing = [
                name
                for name in FAMILY_PARAMS[self.family]
                if name not in given
            ]
            if missing:
                point = random_points(tuple(missing), 1, self.seed)[0]
                given.update(point)
        return WeightFamily.make(self.family, self.c, **given)


def _parse_c(text: str) -> tuple[Fraction, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(parse_rational(part) for part in text.split(","))


def _parse_binding(text: str) -> Fraction | None:
    text = text.strip()
    if text == "symbolic":
        return None
    return parse_rational(text)


def _read_config_file(path: str) -> dict:
    values = {}
    with open(path, encoding="utf-8") as handle:
        for raw in handle:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ParseError(f"config line without '=': {raw!r}")
            key, _, value = line.partition("=")
            values[key.strip().replace("-", "_")] = value.strip()
    return values


def _add_common(parser: argparse.ArgumentParser):
    parser.add_argument("--config", help="key=value defaults file")
    parser.add_argument("--format", dest="fmt", choices=("json", "csv", "latex"))
    parser.add_argument("--out", help="output path (default stdout)")
    parser.add_argument("--cache-dir", dest="cache_dir")
    parser.add_argument("--seed", type=int)
    parser.add_argument("--trials", type=int)
    parser.add_argument("--jobs", type=int, help="worker pool size (1 = serial)")


def _add_family(parser: argparse.ArgumentParser):
    parser.add_argument("--family", choices=sorted(FAMILY_PARAMS))
    parser.add_argument("--c", help="comma-separated rationals, e.g. 1,1/2")
    parser.add_argument("--q", help="'symbolic' or a rational")
    parser.add_argument("--t", help="'symbolic' or a rational")
    parser.add_argument("--alpha", help="'symbolic' or a rational")
    parser.add_argument("--mode", choices=("symbolic", "eval"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qhurwitz",
        description=(
            "Exact quantum weighted Hurwitz numbers: character tables, "
            "orthogonal-basis tables, weight series, weighted walk and "
            "cover sums, and coefficient tables of the generating series."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chars", help="character table of one symmetric group")
    p.add_argument("--n", type=int)
    _add_common(p)

    p = sub.add_parser("macdonald", help="orthogonal basis on monomials")
    p.add_argument("--degree", type=int)
    p.add_argument("--q", help="'symbolic' or a rational")
    p.add_argument("--t", help="'symbolic' or a rational")
    _add_common(p)

    p = sub.add_parser("weights", help="weight series coefficients")
    p.add_argument("--dmax", dest="d_max", type=int)
    _add_family(p)
    _add_common(p)

    p = sub.add_parser("fd", help="weighted walk sums for d = 0..dmax")
    p.add_argument("--n", type=int)
    p.add_argument("--dmax", dest="d_max", type=int)
    _add_family(p)
    _add_common(p)

    p = sub.add_parser("hde", help="weighted branched-cover sums")
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--e", type=int)
    _add_family(p)
    _add_common(p)

    p = sub.add_parser("tau", help="series coefficient tables")
    p.add_argument("--nmax", dest="n_max", type=int)
    p.add_argument("--dmax", dest="d_max", type=int)
    p.add_argument("--offset", type=int, help="integer lattice offset N")
    _add_family(p)
    _add_common(p)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("criterion")
    p.add_argument("--n", type=int, help="largest group size to exercise")
    p.add_argument("--dmax", dest="d_max", type=int)
    p.add_argument("--c", help="comma-separated rationals, e.g. 1,1/2")
    _add_common(p)

    p = sub.add_parser("cache", help="inspect or clear the disk cache")
    p.add_argument("action", choices=("info", "clear"))
    _add_common(p)

    return parser


def _resolve_config(args: argparse.Namespace) -> RunConfig:
    file_values = {}
    if getattr(args, "config", None):
        file_values = _read_config_file(args.config)

    def pick(key, default=None, cast=None):
        value = getattr(args, key, None)
        if value is None and key in file_values:
            value = file_values[key]
        if value is None:
            return default
        if cast is not None and isinstance(value, str):
            return cast(value)
        return value

    return RunConfig(
        command=args.command,
        n=pick("n", cast=int),
        n_max=pick("n_max", cast=int),
        d=pick("d", cast=int),
        d_max=pick("d_max", cast=int),
        e=pick("e", cast=int),
        offset=pick("offset", 0, cast=int),
        degree=pick("degree", cast=int),
        family=pick("family", "macdonald"),
        c=_parse_c(pick("c", "") or ""),
        q=_parse_binding(pick("q", "symbolic")),
        t=_parse_binding(pick("t", "symbolic")),
        alpha=_parse_binding(pick("alpha", "symbolic")),
        mode=pick("mode", "symbolic"),
        fmt=pick("fmt", "json"),
        seed=pick("seed", DEFAULT_SEED, cast=int),
        trials=pick("trials", DEFAULT_TRIALS, cast=int),
        jobs=pick("jobs", default_jobs(), cast=int),
        cache_dir=pick("cache_dir"),
        out=pick("out"),
        criterion=getattr(args, "criterion", None),
        action=getattr(args, "action", None),
    )


# ---------------------------------------------------------------------------
# Rendering helpers
# ---------------------------------------------------------------------------


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _csv_text(header, rows) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _latex_table(header, rows) -> str:
    lines = [
        r"\begin{tabular}{" + "l" * len(header) + "}",
        " & ".join(header) + r" \\",
        r"\hline",
    ]
    for row in rows:
        lines.append(" & ".join(str(x) for x in row) + r" \\")
    lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"


def _partition_key(p: Partition) -> str:
    return "[" + ",".join(map(str, p)) + "]"


def _entry_rows(entries):
    return [
        (e["d"], _partition_key(Partition(e["mu"])),
         _partition_key(Partition(e["nu"])), e["value"])
        for e in entries
    ]


# ---------------------------------------------------------------------------
# Subcommand handlers
# ---------------------------------------------------------------------------


def _require(config: RunConfig, **fields):
    for name, value in fields.items():
        if value is None:
            raise ParseError(
                f"{config.command}: missing required option --{name}"
            )


def _run_chars(config: RunConfig) -> str:
    _require(config, n=config.n)
    table = char_table(config.n, cache_dir=config.cache_dir)
    if config.fmt == "json":
        return _json_text(table.to_json_dict())
    header = ["irrep"] + [_partition_key(mu) for mu in table.classes]
    rows = [
        [_partition_key(lam)] + list(row)
        for lam, row in zip(table.irreps, table.chi)
    ]
    if config.fmt == "csv":
        return _csv_text(header, rows)
    return _latex_table(header, rows)


def _run_macdonald(config: RunConfig) -> str:
    _require(config, degree=config.degree)
    from .scalars import Scalar, make_params

    params = make_params(
        name for name, value in (("q", config.q), ("t", config.t))
        if value is None
    )
    q = (
        Scalar.param(params, "q")
        if config.q is None
        else Scalar.from_fraction(params, config.q)
    )
    t = (
        Scalar.param(params, "t")
        if config.t is None
        else Scalar.from_fraction(params, config.t)
    )
    functions = []
    for lam in enumerate_partitions(config.degree):
        vec = macdonald_P(lam, q, t)
        functions.append(
            {
                "lambda": list(lam),
                "degree": config.degree,
                "basis": "m",
                "coeffs": {
                    _partition_key(mu): scalar_to_string(value)
                    for mu, value in sorted(
                        vec.items(), key=lambda kv: [-x for x in kv[0]]
                    )
                },
            }
        )
    return _json_text({"degree": config.degree, "P": functions})


def _run_weights(config: RunConfig) -> str:
    _require(config, dmax=config.d_max)
    family = config.build_family()
    series = tau.weight_series(family, config.d_max)
    coeffs = [scalar_to_string(c) for c in series.coeffs]
    if config.fmt == "json":
        return _json_text(
            {
                "family": family.label(),
                "order": config.d_max,
                "coeffs": coeffs,
            }
        )
    rows = list(enumerate(coeffs))
    if config.fmt == "csv":
        return _csv_text(["j", "coefficient"], rows)
    return _latex_table(["$j$", "coefficient"], rows)


def _fd_entries(n: int, d: int, family) -> list:
    table = fd_character(n, d, family)
    entries = []
    for mu in enumerate_partitions(n):
        for nu in enumerate_partitions(n):
            entries.append(
                {
                    "d": d,
                    "mu": list(mu),
                    "nu": list(nu),
                    "value": scalar_to_string(table[(mu, nu)]),
                }
            )
    return entries


def _run_fd(config: RunConfig) -> str:
    _require(config, n=config.n, dmax=config.d_max)
    family = config.build_family()
    tables = []
    all_entries = []
    for d in range(config.d_max + 1):
        entries = _fd_entries(config.n, d, family)
        all_entries.extend(entries)
        tables.append(
            {
                "n": config.n,
                "d": d,
                "family": family.label(),
                "entries": [
                    {k: v for k, v in e.items() if k != "d"} for e in entries
                ],
            }
        )
    if config.fmt == "json":
        return _json_text(
            {
                "n": config.n,
                "dmax": config.d_max,
                "family": family.label(),
                "tables": tables,
            }
        )
    rows = _entry_rows(all_entries)
    if config.fmt == "csv":
        return _csv_text(["d", "mu", "nu", "value"], rows)
    return _latex_table(["$d$", "$\\mu$", "$\\nu$", "value"], rows)


def _run_hde(config: RunConfig) -> str:
    _require(config, n=config.n, d=config.d)
    family = config.build_family()
    table = hde_geometric(config.n, config.d, config.e, family)
    entries = []
    for mu in enumerate_partitions(config.n):
        for nu in enumerate_partitions(config.n):
            entries.append(
                {
                    "d": config.d,
                    "mu": list(mu),
                    "nu": list(nu),
                    "value": scalar_to_string(table[(mu, nu)]),
                }
            )
    if config.fmt == "json":
        return _json_text(
            {
                "n": config.n,
                "d": config.d,
                "e": config.e,
                "family": family.label(),
                "entries": [
                    {k: v for k, v in e.items() if k != "d"} for e in entries
                ],
            }
        )
    rows = _entry_rows(entries)
    if config.fmt == "csv":
        return _csv_text(["d", "mu", "nu", "value"], rows)
    return _latex_table(["$d$", "$\\mu$", "$\\nu$", "value"], rows)


def _run_tau(config: RunConfig) -> str:
    _require(config, nmax=config.n_max, dmax=config.d_max)
    family = config.build_family()
    table = tau.tau_tables(
        config.n_max, config.d_max, config.offset, family, jobs=config.jobs
    )
    if config.fmt == "latex":
        return table.to_latex()
    if config.fmt == "csv":
        entries = table.to_json_dict()["powersum"]
        return _csv_text(["d", "mu", "nu", "value"], _entry_rows(entries))
    return table.to_json()


def _run_verify(config: RunConfig, stdout) -> int:
    from . import verify as verify_mod

    names = (
        sorted(verify_mod.CRITERIA)
        if config.criterion == "all"
        else [config.criterion]
    )
    for name in names:
        if name not in verify_mod.CRITERIA:
            raise ParseError(
                f"unknown criterion {name!r}; known: "
                f"{', '.join(sorted(verify_mod.CRITERIA))} or 'all'"
            )
    overall = True
    report_lines = []
    for name in names:
        kwargs = {}
        if name in ("theorem-combinatorial", "theorem-geometric"):
            if config.n is not None:
                kwargs["ns"] = tuple(range(2, config.n + 1))
            if config.d_max is not None:
                kwargs["d_max"] = config.d_max
            if config.c:
                kwargs["c_lists"] = (config.c,)
            kwargs["trials"] = config.trials
            kwargs["seed"] = config.seed
        elif name == "gj-cycle-sums":
            if config.n is not None:
                kwargs["ns"] = tuple(range(2, config.n + 1))
            if config.d_max is not None:
                kwargs["j_max"] = config.d_max
            kwargs["trials"] = config.trials
            kwargs["seed"] = config.seed
        elif name == "lemma-paths":
            if config.n is not None:
                kwargs["ns"] = tuple(range(2, config.n + 1))
            if config.d_max is not None:
                kwargs["d_max"] = config.d_max
        result = verify_mod.CRITERIA[name](**kwargs)
        overall = overall and result.ok
        status = "PASS" if result.ok else "FAIL"
        report_lines.append(f"[{status}] {result.name}")
        report_lines.extend(f"  {line}" for line in result.lines)
        if not result.ok and result.counterexample:
            report_lines.append(f"  counterexample: {result.counterexample}")
    report = "\n".join(report_lines) + "\n"
    stdout.write(report)
    return 0 if overall else 1


def _run_cache(config: RunConfig, stdout) -> int:
    directory = cache_directory(config.cache_dir)
    if config.action == "info":
        stdout.write(f"cache directory: {directory}\n")
        if os.path.isdir(directory):
            for name in sorted(os.listdir(directory)):
                path = os.path.join(directory, name)
                stdout.write(f"  {name} ({os.path.getsize(path)} bytes)\n")
        else:
            stdout.write("  (not created yet)\n")
        return 0
    if config.action == "clear":
        if os.path.isdir(directory):
            shutil.rmtree(directory)
        stdout.write(f"cleared {directory}\n")
        return 0
    raise ParseError(f"unknown cache action {config.action!r}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _resolve_config(args)
        if config.command == "verify":
            return _run_verify(config, sys.stdout)
        if config.command == "cache":
            return _run_cache(config, sys.stdout)
        handler = {
            "chars": _run_chars,
            "macdonald": _run_macdonald,
            "weights": _run_weights,
            "fd": _run_fd,
            "hde": _run_hde,
            "tau": _run_tau,
        }[config.command]
        text = handler(config)
    except BoundExceededError as exc:
        print(f"qhurwitz: {exc}", file=sys.stderr)
        return 3
    except ParseError as exc:
        parser.error(str(exc))  # exits with status 2
        return 2
    except QHurwitzError as exc:
        print(f"qhurwitz: {exc}", file=sys.stderr)
        return 1
    if config.out:
        with open(config.out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
