"""Command-line front end.

One flat flag interface drives every command:

    fermatreps --n 6 --command decompose --m-min 1 --m-max 9 --format table
    fermatreps --n 6 --command series --format json
    fermatreps --n 6 --command taylor --taylor-terms 19
    fermatreps --n 6 --command verify --m-min 1 --m-max 4
    fermatreps --n 5 --command irreps
    fermatreps --n 4 --command lattice-probe --m 2 --x 1 --y 3

Data goes to stdout, diagnostics to stderr.  Exit codes: 0 success, 1 usage
error, 2 verification failure.  The FERMATREPS_WORKERS environment variable
caps the number of worker processes the verify command may use.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass

from .chars import DiffSpaceSpec, dim_Vm
from .decompose import (
    DEFAULT_ORACLE_BOUND,
    MultiplicityTable,
    decompose_table,
    multiplicity,
    multiplicity_oracle,
)
from .group import IrrepLabel, irrep_degree, list_irreps
from .lattice import I_diff, J_diff, alpha
from .series import RationalFunction, isotypic_series, taylor, total_series

COMMANDS = ("decompose", "series", "taylor", "verify", "lattice-probe", "irreps")
FORMATS = ("table", "json", "csv")


@dataclass(frozen=True)
class CliConfig:
    n: int
    command: str
    m_min: int
    m_max: int
    format: str
    taylor_terms: int
    oracle_bound: int
    label: str | None = None
    weighted: bool = True
    probe_m: int | None = None
    probe_x: int | None = None
    probe_y: int | None = None


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fermatreps", description=__doc__, add_help=True)
    parser.add_argument("--n", type=int, required=True, help="Fermat exponent, >= 4")
    parser.add_argument("--command", choices=COMMANDS, default="decompose")
    parser.add_argument("--m-min", type=int, default=0, dest="m_min")
    parser.add_argument("--m-max", type=int, default=9, dest="m_max")
    parser.add_argument("--format", choices=FORMATS, default="table")
    parser.add_argument("--taylor-terms", type=int, default=20, dest="taylor_terms")
    parser.add_argument(
        "--oracle-bound", type=int, default=DEFAULT_ORACLE_BOUND, dest="oracle_bound"
    )
    parser.add_argument(
        "--label",
        default=None,
        help='isotypic label "kappa,lambda,rho" for the taylor command (default: total)',
    )
    parser.add_argument(
        "--unweighted",
        action="store_true",
        help="use the plain sum of isotypic series instead of the degree-weighted one",
    )
    parser.add_argument("--m", type=int, default=None, help="tensor power for lattice-probe")
    parser.add_argument("--x", type=int, default=None, help="X shift for lattice-probe")
    parser.add_argument("--y", type=int, default=None, help="Y shift for lattice-probe")
    return parser


def _config_from_args(args: argparse.Namespace) -> CliConfig:
    if args.n < 4:
        raise UsageError(f"--n must be at least 4, got {args.n}")
    if args.m_min > args.m_max:
        raise UsageError(f"--m-min {args.m_min} exceeds --m-max {args.m_max}")
    if args.m_min < 0:
        raise UsageError("--m-min must be non-negative")
    if args.taylor_terms < 0:
        raise UsageError("--taylor-terms must be non-negative")
    return CliConfig(
        n=args.n,
        command=args.command,
        m_min=args.m_min,
        m_max=args.m_max,
        format=args.format,
        taylor_terms=args.taylor_terms,
        oracle_bound=args.oracle_bound,
        label=args.label,
        weighted=not args.unweighted,
        probe_m=args.m,
        probe_x=args.x,
        probe_y=args.y,
    )


def _label_key(label: IrrepLabel) -> str:
    return f"({label.kappa},{label.lam}){label.rho}"


def _rf_to_json(rf: RationalFunction) -> dict:
    scale = 1
    for c in rf.num.coeffs:
        scale = math.lcm(scale, c.denominator)
    return {
        "num": [int(c * scale) for c in rf.num.coeffs],
        "den": [int(c * scale) for c in rf.den.coeffs],
    }


def _rf_to_text(rf: RationalFunction) -> str:
    return f"({_poly_to_text(rf.num.coeffs)})/({_poly_to_text(rf.den.coeffs)})"


def _poly_to_text(coeffs) -> str:
    """Render descending-degree text like 't^3 + 8*t^2 + 8*t + 1'."""
    parts = []
    for d in range(len(coeffs) - 1, -1, -1):
        c = coeffs[d]
        if c == 0:
            continue
        mag = abs(c)
        mag_s = str(int(mag) if mag.denominator == 1 else mag)
        if d == 0:
            term = mag_s
        else:
            head = "" if mag == 1 else f"{mag_s}*"
            term = f"{head}t" if d == 1 else f"{head}t^{d}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts) if parts else "0"


# -- decompose rendering -----------------------------------------------------


def _bracket_cell(entries: list[tuple[object, int]]) -> str:
    return ", ".join(f"[{k},{v}]" for k, v in entries if v)


def _decompose_rows(tables: list[MultiplicityTable]):
    for table in tables:
        yield table, dim_Vm(DiffSpaceSpec(table.n, table.m))


def _render_decompose_table(n: int, tables: list[MultiplicityTable]) -> str:
    labels = list_irreps(n)
    fixed = [l for l in labels if l.orbit_class == "fully_fixed"]
    out = io.StringIO()
    header = ["n", "m"]
    header += [_label_key(l) for l in fixed]
    header += ["(k,k)triv", "(k,k)sgn", "(k,l)triv", "dim"]
    rows = [header]
    for table, dim in _decompose_rows(tables):
        by_label = table.as_dict()
        row = [str(n), str(table.m)]
        row += [str(by_label[l]) for l in fixed]
        diag_triv = [(l.kappa, by_label[l]) for l in labels if l.orbit_class == "diagonal" and l.rho == "triv"]
        diag_sgn = [(l.kappa, by_label[l]) for l in labels if l.orbit_class == "diagonal" and l.rho == "sgn"]
        generic = [(f"({l.kappa},{l.lam})", by_label[l]) for l in labels if l.orbit_class == "generic"]
        row += [_bracket_cell(diag_triv), _bracket_cell(diag_sgn), _bracket_cell(generic), str(dim)]
        rows.append(row)
    widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
    for r in rows:
        out.write("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() + "\n")
    return out.getvalue()


def _decompose_json(n: int, tables: list[MultiplicityTable]) -> dict:
    return {
        "n": n,
        "tables": [
            {
                "m": table.m,
                "dim": dim,
                "entries": [
                    {
                        "kappa": label.kappa,
                        "lambda": label.lam,
                        "rho": label.rho,
                        "degree": irrep_degree(label),
                        "mult": mult,
                    }
                    for label, mult in table.entries
                ],
            }
            for table, dim in _decompose_rows(tables)
        ],
    }


def _decompose_csv(n: int, tables: list[MultiplicityTable]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["n", "m", "kappa", "lambda", "rho", "degree", "mult"])
    for table, _dim in _decompose_rows(tables):
        for label, mult in table.entries:
            writer.writerow([n, table.m, label.kappa, label.lam, label.rho, irrep_degree(label), mult])
    return out.getvalue()


def _cmd_decompose(cfg: CliConfig) -> int:
    tables = decompose_table(cfg.n, range(cfg.m_min, cfg.m_max + 1))
    if cfg.format == "table":
        sys.stdout.write(_render_decompose_table(cfg.n, tables))
    elif cfg.format == "json":
        json.dump(_decompose_json(cfg.n, tables), sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        sys.stdout.write(_decompose_csv(cfg.n, tables))
    return 0


# -- series ------------------------------------------------------------------


def _series_payload(n: int):
    labels = list_irreps(n)
    per_label = [(label, isotypic_series(n, label)) for label in labels]
    return per_label, total_series(n, True), total_series(n, False)


def _cmd_series(cfg: CliConfig) -> int:
    per_label, weighted, unweighted = _series_payload(cfg.n)
    if cfg.format == "json":
        payload = {
            "n": cfg.n,
            "isotypic": [
                {
                    "kappa": label.kappa,
                    "lambda": label.lam,
                    "rho": label.rho,
                    "degree": irrep_degree(label),
                    **_rf_to_json(rf),
                }
                for label, rf in per_label
            ],
            "total_weighted": _rf_to_json(weighted),
            "total_unweighted": _rf_to_json(unweighted),
        }
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
    elif cfg.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["kappa", "lambda", "rho", "degree", "num", "den"])
        for label, rf in per_label:
            j = _rf_to_json(rf)
            writer.writerow(
                [label.kappa, label.lam, label.rho, irrep_degree(label),
                 " ".join(map(str, j["num"])), " ".join(map(str, j["den"]))]
            )
        for name, rf in (("total_weighted", weighted), ("total_unweighted", unweighted)):
            j = _rf_to_json(rf)
            writer.writerow([name, "", "", "", " ".join(map(str, j["num"])), " ".join(map(str, j["den"]))])
    else:
        for label, rf in per_label:
            sys.stdout.write(f"{_label_key(label)}: {_rf_to_text(rf)}\n")
        sys.stdout.write(f"total (degree-weighted): {_rf_to_text(weighted)}\n")
        sys.stdout.write(f"total (unweighted): {_rf_to_text(unweighted)}\n")
    return 0


def _parse_label(n: int, text: str) -> IrrepLabel:
    try:
        kappa_s, lam_s, rho = text.split(",")
        kappa, lam = int(kappa_s), int(lam_s)
    except ValueError as exc:
        raise UsageError(f'--label must look like "kappa,lambda,rho", got {text!r}') from exc
    for label in list_irreps(n):
        if (label.kappa, label.lam, label.rho) == (kappa, lam, rho.strip()):
            return label
    raise UsageError(f"{text!r} is not a canonical irreducible label for n={n}")


def _cmd_taylor(cfg: CliConfig) -> int:
    if cfg.label is not None:
        label = _parse_label(cfg.n, cfg.label)
        rf = isotypic_series(cfg.n, label)
        name = _label_key(label)
    else:
        rf = total_series(cfg.n, cfg.weighted)
        name = "total_weighted" if cfg.weighted else "total_unweighted"
    coefs = taylor(rf, cfg.taylor_terms)
    values = [int(c) if c.denominator == 1 else str(c) for c in coefs]
    if cfg.format == "json":
        json.dump({"n": cfg.n, "series": name, "coefficients": values}, sys.stdout)
        sys.stdout.write("\n")
    elif cfg.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["m", "coefficient"])
        for m, c in enumerate(values):
            writer.writerow([m, c])
    else:
        sys.stdout.write(f"{name}: {values}\n")
    return 0


# -- verify ------------------------------------------------------------------


def _verify_one_m(task: tuple[int, int, int]) -> tuple[int, list[tuple[str, int, int]]]:
    n, m, bound = task
    mismatches = []
    for label in list_irreps(n):
        closed = multiplicity(n, m, label)
        brute = multiplicity_oracle(n, m, label, oracle_bound=bound)
        if closed != brute:
            mismatches.append((_label_key(label), closed, brute))
    return m, mismatches


def _worker_count(tasks: int) -> int:
    workers = min(os.cpu_count() or 1, tasks)
    cap = os.environ.get("FERMATREPS_WORKERS")
    if cap is not None:
        try:
            workers = min(workers, max(1, int(cap)))
        except ValueError:
            workers = 1
    return max(workers, 1)


def _cmd_verify(cfg: CliConfig) -> int:
    if cfg.n > cfg.oracle_bound:
        raise UsageError(
            f"--n {cfg.n} exceeds --oracle-bound {cfg.oracle_bound}; "
            "the brute-force check is quadratic in the group order"
        )
    ms = list(range(max(1, cfg.m_min), cfg.m_max + 1))
    tasks = [(cfg.n, m, cfg.oracle_bound) for m in ms]
    workers = _worker_count(len(tasks))
    results = []
    if workers > 1:
        try:
            from concurrent.futures import ProcessPoolExecutor

            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(_verify_one_m, tasks))
        except (OSError, ImportError):
            results = []
    if not results:
        results = [_verify_one_m(t) for t in tasks]
    results.sort()
    n_labels = len(list_irreps(cfg.n))
    failed = False
    for m, mismatches in results:
        status = "ok" if not mismatches else "MISMATCH"
        sys.stdout.write(f"verify n={cfg.n} m={m}: {status} ({n_labels} labels)\n")
        for key, closed, brute in mismatches:
            failed = True
            sys.stderr.write(
                f"mismatch at n={cfg.n} m={m} {key}: closed form {closed}, oracle {brute}\n"
            )
    return 2 if failed else 0


# -- irreps and lattice-probe -------------------------------------------------


def _cmd_irreps(cfg: CliConfig) -> int:
    labels = list_irreps(cfg.n)
    if cfg.format == "json":
        payload = {
            "n": cfg.n,
            "irreps": [
                {
                    "kappa": l.kappa,
                    "lambda": l.lam,
                    "rho": l.rho,
                    "orbit_class": l.orbit_class,
                    "degree": irrep_degree(l),
                }
                for l in labels
            ],
        }
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
    elif cfg.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["kappa", "lambda", "rho", "orbit_class", "degree"])
        for l in labels:
            writer.writerow([l.kappa, l.lam, l.rho, l.orbit_class, irrep_degree(l)])
    else:
        for l in labels:
            sys.stdout.write(f"{_label_key(l):>14}  {l.orbit_class:<11} degree {irrep_degree(l)}\n")
        sys.stdout.write(f"total: {len(labels)} classes, sum of squared degrees {6 * cfg.n * cfg.n}\n")
    return 0


def _cmd_lattice_probe(cfg: CliConfig) -> int:
    if cfg.probe_m is None or cfg.probe_x is None or cfg.probe_y is None:
        raise UsageError("lattice-probe needs --m, --x and --y")
    n, m, x, y = cfg.n, cfg.probe_m, cfg.probe_x, cfg.probe_y
    payload = {
        "n": n,
        "m": m,
        "X": x,
        "Y": y,
        "I_diff": I_diff(n, m, x, y),
        "alpha": alpha(n, m, x, y),
        "J_diff": J_diff(n, m, x),
    }
    if cfg.format == "json":
        json.dump(payload, sys.stdout)
        sys.stdout.write("\n")
    else:
        sys.stdout.write(
            f"n={n} m={m} X={x} Y={y}: I_diff={payload['I_diff']} "
            f"alpha={payload['alpha']} J_diff={payload['J_diff']}\n"
        )
    return 0


_DISPATCH = {
    "decompose": _cmd_decompose,
    "series": _cmd_series,
    "taylor": _cmd_taylor,
    "verify": _cmd_verify,
    "irreps": _cmd_irreps,
    "lattice-probe": _cmd_lattice_probe,
}


def run(cfg: CliConfig) -> int:
    return _DISPATCH[cfg.command](cfg)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = _config_from_args(args)
        return run(cfg)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
