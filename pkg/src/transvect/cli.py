"""Command-line front end: verification suites with exact result tables.

Commands
--------
lemma-a      cross-check the self-transvectant constant on an (e, p) grid
             by four routes (symbolic omega, graph sum, alternating sum,
             closed form), plus the generic-quadratic polynomial identity
lemma-b      cross-check the chain constant (symbolic omega vs closed form)
             on an (r, e, p', p) grid, plus existence-choice rows
characters   print the ideal-piece character and dimension bookkeeping
covariants   run the octavic or ternary suite with a fixed seed

Every number is printed as an exact integer or rational string; the exit
code is 0 only when every assertion of the invoked suite passes.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from .characters import decompose, ideal_char, locus_char, plethysm_weights
from .closed import chain_coeff_closed, generating_series_check
from .covariants import octavic_suite, ternary_suite
from .verify import check_chain_coeff, check_self_coeff, existence_choice

__all__ = ["main", "RunConfig"]

DEFAULT_E_BOUND = 8
DEFAULT_R_BOUND = 4


@dataclass
class RunConfig:
    command: str
    e_max: int = 3
    r_max: int = 3
    r: int = 3
    d: int = 8
    trials: int = 10
    seed: int = 20240
    format: str = "text"
    jobs: int = 1
    force: bool = False

    def validate(self) -> None:
        if self.jobs < 1:
            raise ValueError("--jobs must be positive")
        if self.format not in ("text", "csv", "json"):
            raise ValueError(f"unknown format {self.format}")
        if not self.force:
            if self.e_max > DEFAULT_E_BOUND:
                raise ValueError(f"--e-max above {DEFAULT_E_BOUND} needs --force")
            if self.r_max > DEFAULT_R_BOUND:
                raise ValueError(f"--r-max above {DEFAULT_R_BOUND} needs --force")


def _self_cell(cell: tuple[int, int]) -> dict:
    e, p = cell
    return check_self_coeff(e, p).to_record()


def _chain_cell(cell: tuple[int, int, int, int]) -> dict:
    r, e, pp, p = cell
    return check_chain_coeff(r, e, pp, p).to_record()


def _map_cells(fn, cells: list, jobs: int) -> list[dict]:
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, cells))
    return [fn(cell) for cell in cells]


def run_lemma_a(cfg: RunConfig) -> tuple[list[dict], bool]:
    cells = [(e, p) for e in range(1, cfg.e_max + 1) for p in range(0, e + 1)]
    rows = _map_cells(_self_cell, cells, cfg.jobs)
    ok = all(row["agree"] for row in rows)
    return rows, ok


def run_lemma_b(cfg: RunConfig) -> tuple[list[dict], bool]:
    cells = [
        (r, e, pp, p)
        for r in range(2, cfg.r_max + 1)
        for e in range(1, cfg.e_max + 1)
        for pp in range(0, ((r + 1) * e) // 2 + 1)
        for p in range(0, (r * e) // 2 + 1)
    ]
    rows = _map_cells(_chain_cell, cells, cfg.jobs)
    ok = all(row["agree"] for row in rows)
    for r in range(2, cfg.r_max + 1):
        for e in range(1, cfg.e_max + 1):
            for pp in range(0, ((r + 1) * e) // 2 + 1):
                p = existence_choice(r, e, pp)
                value = chain_coeff_closed(r, e, pp, p)
                rows.append(
                    {
                        "r": r,
                        "e": e,
                        "p_prime": pp,
                        "p": p,
                        "kind": "existence",
                        "closed": str(value),
                        "agree": value != 0,
                    }
                )
                ok = ok and value != 0
    return rows, ok


def run_characters(cfg: RunConfig) -> tuple[list[dict], bool]:
    if cfg.d % 2:
        raise ValueError("--d must be even")
    try:
        ideal = ideal_char(cfg.r, cfg.d)
    except ValueError as exc:
        return [{"r": cfg.r, "d": cfg.d, "error": str(exc)}], False
    total = decompose(plethysm_weights(cfg.r, cfg.d)).dim() if cfg.r else 1
    locus = locus_char(cfg.r, cfg.d // 2).dim() if cfg.r else 1
    row = {
        "r": cfg.r,
        "d": cfg.d,
        "ideal": str(ideal),
        "ideal_records": ideal.to_record(),
        "dim_total": total,
        "dim_locus": locus,
        "dim_ideal": ideal.dim(),
    }
    return [row], total == locus + ideal.dim()


def run_covariants(cfg: RunConfig, suite: str) -> tuple[list[dict], bool]:
    if suite == "octavic":
        report = octavic_suite(trials=cfg.trials, seed=cfg.seed)
    elif suite == "ternary":
        report = ternary_suite(trials=cfg.trials, seed=cfg.seed)
    else:
        raise ValueError(f"unknown suite {suite!r}")
    record = report.to_record()
    return [record], record["passed"]


def run_series(cfg: RunConfig, order: int) -> tuple[list[dict], bool]:
    ok = generating_series_check(cfg.r, cfg.e_max, order)
    return [{"r": cfg.r, "e": cfg.e_max, "order": order, "match": ok}], ok


def _flag_of(row: dict):
    for key in ("agree", "passed", "match"):
        if key in row:
            return bool(row[key])
    return None


def _emit_text(rows: list[dict], ok: bool, out: io.TextIOBase) -> None:
    for row in rows:
        out.write("  ".join(f"{k}={v}" for k, v in row.items()) + "\n")
    if not ok:
        for row in rows:
            if _flag_of(row) is False or "error" in row:
                out.write(f"offending cell: {row}\n")
    out.write("PASS\n" if ok else "FAIL\n")


def _emit_csv(rows: list[dict], ok: bool, out: io.TextIOBase) -> None:
    keys: list[str] = []
    for row in rows:
        for k in row:
            if k not in keys:
                keys.append(k)
    writer = csv.DictWriter(out, fieldnames=keys)
    writer.writeheader()
    for row in rows:
        writer.writerow({k: row.get(k, "") for k in keys})
    out.write("PASS\r\n" if ok else "FAIL\r\n")


def _emit_json(command: str, cfg: RunConfig, rows: list[dict], ok: bool, out) -> None:
    payload = {
        "command": command,
        "config": asdict(cfg),
        "rows": rows,
        "pass": ok,
    }
    json.dump(payload, out, indent=1, default=str)
    out.write("\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="transvect",
        description="exact verification suites for transvectant constants, "
        "covariants and plethysm characters",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "csv", "json"), default="text")
        p.add_argument("--jobs", type=int, default=1, metavar="N")
        p.add_argument("--seed", type=int, default=20240)
        p.add_argument("--force", action="store_true", help="lift default range bounds")

    p = sub.add_parser("lemma-a", help="self-transvectant constant, four routes")
    p.add_argument("--e-max", type=int, default=3)
    common(p)

    p = sub.add_parser("lemma-b", help="chain constant, direct vs closed")
    p.add_argument("--r-max", type=int, default=3)
    p.add_argument("--e-max", type=int, default=2)
    common(p)

    p = sub.add_parser("characters", help="ideal-piece character for one (r, d)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    common(p)

    p = sub.add_parser("covariants", help="octavic or ternary suite")
    p.add_argument("--suite", choices=("octavic", "ternary"), required=True)
    p.add_argument("--trials", type=int, default=10)
    common(p)

    p = sub.add_parser("series", help="generating-function series cross-check")
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--e", type=int, default=1)
    p.add_argument("--order", type=int, default=4)
    common(p)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        command=args.command,
        e_max=getattr(args, "e_max", getattr(args, "e", 3)),
        r_max=getattr(args, "r_max", 3),
        r=getattr(args, "r", 3),
        d=getattr(args, "d", 8),
        trials=getattr(args, "trials", 10),
        seed=args.seed,
        format=args.format,
        jobs=args.jobs,
        force=args.force,
    )
    try:
        cfg.validate()
        if args.command == "lemma-a":
            rows, ok = run_lemma_a(cfg)
        elif args.command == "lemma-b":
            rows, ok = run_lemma_b(cfg)
        elif args.command == "characters":
            rows, ok = run_characters(cfg)
        elif args.command == "covariants":
            rows, ok = run_covariants(cfg, args.suite)
        elif args.command == "series":
            rows, ok = run_series(cfg, args.order)
        else:  # pragma: no cover - argparse enforces the choices
            raise ValueError(f"unknown command {args.command!r}")
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    out = sys.stdout
    if cfg.format == "text":
        _emit_text(rows, ok, out)
    elif cfg.format == "csv":
        _emit_csv(rows, ok, out)
    else:
        _emit_json(args.command, cfg, rows, ok, out)
    return 0 if ok else 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
