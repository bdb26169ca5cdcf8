"""Command-line interface.

Exit codes:
  0  success
  1  I/O, parse, or configuration error
  2  structural graph error (not bipartite, disconnected, duplicate, empty, too large)
  3  toric ideal not generated by quadrics (witness cycle reported)
  4  graph is not good (no certified choice of special monomials)
  5  dimension mismatch (p != edges - vertices + 1)
  6  verification mismatch between formula and brute-force routes
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Sequence

from . import choice as choice_mod
from .counting import count_report, hilbert_series_truncated
from .errors import (
    DimensionMismatch,
    GraphError,
    GraphFormatError,
    GraphTooLarge,
    NoCoprimeChoice,
    NotGood,
    NotQuadratic,
    ToricMultError,
    VerificationMismatch,
)
from .graph import (
    check_quadratic_generation,
    cyclomatic_number,
    enumerate_four_cycles,
    generate_ladder,
    load_graph,
)
from .oracle import DEFAULT_SEED
from .pipeline import Caps, analyse, explain_terms, multiplicity_report

EXIT_OK = 0
EXIT_IO = 1
EXIT_STRUCTURE = 2
EXIT_NOT_QUADRATIC = 3
EXIT_NOT_GOOD = 4
EXIT_DIMENSION = 5
EXIT_MISMATCH = 6

CAP_KEYS = ("edge_cap", "p_cap", "assignment_cap", "t_max", "enumeration_cap")


@dataclass(frozen=True)
class RunConfig:
    input: Path | None
    fmt: str = "text"
    k_range: tuple[int, int] = (0, 10)
    degree: int = 10
    caps: Caps = Caps()
    seed: int = DEFAULT_SEED

    def __post_init__(self) -> None:
        if self.fmt not in ("text", "json"):
            raise ValueError(f"format must be 'text' or 'json', got {self.fmt!r}")
        lo, hi = self.k_range
        if lo < 0 or hi < lo:
            raise ValueError(f"empty or negative k-range {lo}..{hi}")
        if self.degree < 0:
            raise ValueError("series degree must be non-negative")


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            raise ValueError
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=None)
    common.add_argument("--config", type=Path, help="JSON file with defaults for caps and seed")
    common.add_argument("--seed", type=int)
    common.add_argument("--edge-cap", type=int, dest="edge_cap")
    common.add_argument("--p-cap", type=int, dest="p_cap")
    common.add_argument("--assignment-cap", type=int, dest="assignment_cap")
    common.add_argument("--t-max", type=int, dest="t_max")
    common.add_argument("--enum-cap", type=int, dest="enumeration_cap")

    parser = argparse.ArgumentParser(
        prog="toricmult",
        description="Hilbert-Samuel multiplicity of toric rings of good bipartite graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("validate", "check structure and quadratic generation"),
        ("cycles", "list the 4-cycles"),
        ("choose", "select certified special monomials"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("file", type=Path)

    p = sub.add_parser("count", parents=[common], help="monomial counts by degree")
    p.add_argument("file", type=Path)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--k", type=int)
    group.add_argument("--range", type=_parse_range, dest="k_range")

    p = sub.add_parser("series", parents=[common], help="truncated Hilbert series")
    p.add_argument("file", type=Path)
    p.add_argument("--degree", type=int)

    p = sub.add_parser("multiplicity", parents=[common], help="multiplicity by closed form")
    p.add_argument("file", type=Path)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--explain", action="store_true")
    p.add_argument("--kmax", type=int)

    p = sub.add_parser("verify", parents=[common], help="formula against brute force")
    p.add_argument("file", type=Path)
    p.add_argument("--kmax", type=int)

    p = sub.add_parser("generate", parents=[common], help="emit a graph family member")
    p.add_argument("family", choices=("ladder",))
    p.add_argument("size", type=int)
    p.add_argument("-o", "--output", type=Path)
    return parser


def resolve_config(args: argparse.Namespace, env: dict[str, str] | None = None) -> RunConfig:
    """Merge flags over the config file over defaults; ``GM_SEED`` sits above the file."""
    env = os.environ if env is None else env
    file_cfg: dict[str, Any] = {}
    if args.config is not None:
        try:
            file_cfg = json.loads(args.config.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise GraphFormatError(f"cannot read config {args.config}: {exc}") from exc
        if not isinstance(file_cfg, dict):
            raise GraphFormatError(f"config {args.config} must hold a JSON object")
        unknown = set(file_cfg) - set(CAP_KEYS) - {"seed", "format", "kmax", "degree"}
        if unknown:
            raise GraphFormatError(f"unknown config field(s): {', '.join(sorted(unknown))}")

    def pick(name: str, default: Any) -> Any:
        value = getattr(args, name, None)
        if value is not None:
            return value
        return file_cfg.get(name, default)

    caps = Caps(**{key: pick(key, getattr(Caps(), key)) for key in CAP_KEYS})
    seed = args.seed
    if seed is None and "GM_SEED" in env:
        seed = int(env["GM_SEED"], 0)
    if seed is None:
        seed = file_cfg.get("seed", DEFAULT_SEED)

    kmax = pick("kmax", 10)
    k_range = (0, kmax)
    if getattr(args, "k", None) is not None:
        k_range = (args.k, args.k)
    elif getattr(args, "k_range", None) is not None:
        k_range = args.k_range
    return RunConfig(
        input=getattr(args, "file", None),
        fmt=pick("format", "text"),
        k_range=k_range,
        degree=pick("degree", 10),
        caps=caps,
        seed=seed,
    )


def _emit(cfg: RunConfig, payload: Any, text: str) -> None:
    if cfg.fmt == "json":
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


def cmd_validate(cfg: RunConfig) -> int:
    g = load_graph(cfg.input)
    check = check_quadratic_generation(g, cfg.caps.edge_cap)
    cycles = enumerate_four_cycles(g)
    payload = {
        "graph": g.name,
        "vertices": g.m,
        "edges": g.n_edges,
        "four_cycles": len(cycles),
        "cyclomatic_number": cyclomatic_number(g),
        "quadratic": check.passed,
        "witness": list(check.witness) if not check.passed else None,
    }
    if check.passed:
        text = (f"ok: {g.m} vertices, {g.n_edges} edges, {len(cycles)} four-cycles; "
                f"toric ideal generated by quadrics")
        _emit(cfg, payload, text)
        return EXIT_OK
    text = (f"not quadratic: induced cycle of length {len(check.witness)}: "
            + " - ".join(check.witness))
    _emit(cfg, payload, text)
    return EXIT_NOT_QUADRATIC


def cmd_cycles(cfg: RunConfig) -> int:
    g = load_graph(cfg.input)
    cycles = enumerate_four_cycles(g)
    payload = {
        "graph": g.name,
        "p": len(cycles),
        "cycles": [{"edges": list(c.edge_indices), "diag_a": list(c.diag_a),
                    "diag_b": list(c.diag_b)} for c in cycles],
    }
    lines = [f"{len(cycles)} four-cycles"]
    lines += [f"  {i}: edges {c.edge_indices}  x{c.diag_a[0]}*x{c.diag_a[1]} - x{c.diag_b[0]}*x{c.diag_b[1]}"
              for i, c in enumerate(cycles, start=1)]
    _emit(cfg, payload, "\n".join(lines))
    return EXIT_OK


def cmd_choose(cfg: RunConfig) -> int:
    a = analyse(load_graph(cfg.input), cfg.caps)
    ch = a.choice
    lines = [f"good: {ch.p} special monomials"]
    for i, (z, w) in enumerate(zip(ch.z, ch.w), start=1):
        lines.append(f"  {i}: z = {z}  ->  w = {w}")
    if ch.certificate is not None:
        lines.append("certificate: " + " ".join(str(c) for c in ch.certificate))
    _emit(cfg, ch.to_dict(), "\n".join(lines))
    return EXIT_OK


def _coprime_p(cfg: RunConfig) -> tuple[int, int]:
    g = load_graph(cfg.input)
    cycles = enumerate_four_cycles(g)
    binomials = choice_mod.binomials_from_cycles(g, cycles)
    try:
        next(iter(choice_mod.solve_coprime_choice(binomials, cfg.caps.p_cap, 1)), None)
    except NoCoprimeChoice as exc:
        raise NotGood("no-coprime-choice", "not-good") from exc
    return g.n_edges, len(cycles)


def cmd_count(cfg: RunConfig) -> int:
    n, p = _coprime_p(cfg)
    lo, hi = cfg.k_range
    reports = [count_report(n, p, k) for k in range(lo, hi + 1)]
    payload = {"edges": n, "p": p, "rows": [r.to_dict() for r in reports]}
    lines = [f"{'k':>4} {'M_k':>14} {'NS_k':>14} {'S_k':>14}"]
    lines += [f"{r.k:>4} {r.M:>14} {r.NS:>14} {r.S:>14}" for r in reports]
    _emit(cfg, payload, "\n".join(lines))
    return EXIT_OK


def cmd_series(cfg: RunConfig) -> int:
    n, p = _coprime_p(cfg)
    coeffs = hilbert_series_truncated(n, p, cfg.degree)
    payload = {"edges": n, "p": p, "degree": cfg.degree, "coefficients": [str(c) for c in coeffs]}
    text = " + ".join(f"{c}*t^{k}" for k, c in enumerate(coeffs)) + " + ..."
    _emit(cfg, payload, text)
    return EXIT_OK


def cmd_multiplicity(cfg: RunConfig, verify: bool = False, explain: bool = False) -> int:
    a = analyse(load_graph(cfg.input), cfg.caps)
    report = multiplicity_report(a, verify=verify, kmax=cfg.k_range[1], seed=cfg.seed)
    lines = [f"e = {report.e}",
             f"vertices {report.m}, edges {report.n_edges}, four-cycles {report.p}, "
             f"Krull dimension {report.dimension}"]
    if explain:
        terms = explain_terms(a)
        lines.append(f"{'r':>3} {'(-1)^r C(p,r)':>16} {'inner sum':>24} {'product':>24}")
        for r, sign, inner in terms:
            lines.append(f"{r:>3} {sign:>16} {inner:>24} {sign * inner:>24}")
        total = sum(s * i for _, s, i in terms)
        lines.append(f"sum = {total}; e = (m-2)!/(n-1)! * sum = {report.e}")
    status = EXIT_OK
    if verify:
        for key, value in report.cross_checks.items():
            lines.append(f"cross-check {key}: {value}")
        ver = report.extra["verification"]
        mismatched = [r["k"] for r in ver["rows"] if r["match"] is False]
        lines.append(f"enumeration rows: {len(ver['rows'])}, mismatches: {mismatched or 'none'}")
        lines.append(f"confluence probe: {'pass' if ver['confluence']['passed'] else 'FAIL'}")
        if (mismatched or not ver["confluence"]["passed"]
                or any(v != report.e for v in report.cross_checks.values())):
            status = EXIT_MISMATCH
    _emit(cfg, report.to_dict(), "\n".join(lines))
    return status


def cmd_verify(cfg: RunConfig) -> int:
    a = analyse(load_graph(cfg.input), cfg.caps)
    report = multiplicity_report(a, verify=True, kmax=cfg.k_range[1], seed=cfg.seed)
    ver = report.extra["verification"]
    fd = report.cross_checks["finite_difference"]
    rows_ok = all(r["match"] is not False for r in ver["rows"])
    ok = rows_ok and fd == report.e and ver["confluence"]["passed"]
    payload = {
        "graph": a.graph.name,
        "rows": ver["rows"],
        "summary": {
            "formula_e": str(report.e),
            "finite_difference_e": str(fd),
            "confluence": ver["confluence"],
            "match": ok,
        },
    }
    lines = [f"{'k':>4} {'formula':>14} {'enumerated':>14}  match"]
    for r in ver["rows"]:
        shown = r["enumerated"] if r["enumerated"] is not None else "skipped"
        mark = {True: "yes", False: "NO", None: "-"}[r["match"]]
        lines.append(f"{r['k']:>4} {r['formula']:>14} {shown:>14}  {mark}")
    lines.append(f"e: formula {report.e}, finite difference {fd}")
    lines.append(f"confluence probe: {'pass' if ver['confluence']['passed'] else 'FAIL'}")
    _emit(cfg, payload, "\n".join(lines))
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_generate(cfg: RunConfig, family: str, size: int, output: Path | None) -> int:
    g = generate_ladder(size)
    text = g.to_json()
    if output is None:
        sys.stdout.write(text)
    else:
        output.write_text(text, encoding="utf-8")
    return EXIT_OK


def _error_exit(cfg_fmt: str, code: int, exc: BaseException, extra: dict | None = None) -> int:
    sys.stderr.write(f"error: {exc}\n")
    if cfg_fmt == "json":
        payload = {"error": type(exc).__name__, "message": str(exc), "exit": code}
        payload.update(extra or {})
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    return code


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    fmt = args.format or "text"
    try:
        cfg = resolve_config(args)
        fmt = cfg.fmt
        if args.command == "validate":
            return cmd_validate(cfg)
        if args.command == "cycles":
            return cmd_cycles(cfg)
        if args.command == "choose":
            return cmd_choose(cfg)
        if args.command == "count":
            return cmd_count(cfg)
        if args.command == "series":
            return cmd_series(cfg)
        if args.command == "multiplicity":
            return cmd_multiplicity(cfg, args.verify, args.explain)
        if args.command == "verify":
            return cmd_verify(cfg)
        if args.command == "generate":
            return cmd_generate(cfg, args.family, args.size, args.output)
    except (OSError, GraphFormatError, ValueError) as exc:
        return _error_exit(fmt, EXIT_IO, exc)
    except (GraphError, GraphTooLarge) as exc:
        return _error_exit(fmt, EXIT_STRUCTURE, exc)
    except NotQuadratic as exc:
        return _error_exit(fmt, EXIT_NOT_QUADRATIC, exc, {"witness": list(exc.witness)})
    except NotGood as exc:
        return _error_exit(fmt, EXIT_NOT_GOOD, exc, exc.to_dict())
    except DimensionMismatch as exc:
        return _error_exit(fmt, EXIT_DIMENSION, exc)
    except VerificationMismatch as exc:
        return _error_exit(fmt, EXIT_MISMATCH, exc)
    except ToricMultError as exc:
        return _error_exit(fmt, EXIT_IO, exc)
    raise AssertionError(f"unhandled command {args.command}")
