"""Command-line front end.

    trigmin verify    --m 81 --n 42          certificate for one pair
    trigmin constants [--strict]             recomputed constant table
    trigmin oracle    --m 81 --n 42          floating-point global minimum of f
    trigmin scan      --m-from 3 --m-to 9    largest working even n per odd m
    trigmin bmn       --m 4 --n 3            B_mn = min f, with what is known about it

Exit codes: 0 success, 1 claim fails (refuted certificate, oracle says the
minimum is not at 0, constants out of tolerance), 2 pair outside the theorem's
hypotheses, 3 certificate inconclusive, 64 usage error (nothing written),
74 output could not be written.

Options may also come from a flat ``key = value`` file given by --config;
keys are the long option names (``m``, ``grid-density`` or ``grid_density``,
...).  Command-line flags win over the file.  TRIGMIN_THREADS caps the number
of worker threads.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import oracle
from .certificates.assemble import assemble_certificate, fmt17, thread_cap
from .constants import STRICT_TOL, constant_rows
from .model import PairMN, ScopeError, b_mn_reference
from .prover import DEFAULT_MAX_DEPTH, ProofStatus

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_SCOPE = 2
EXIT_INCONCLUSIVE = 3
EXIT_USAGE = 64
EXIT_IO = 74

COMMANDS = ("verify", "constants", "oracle", "scan", "bmn")
FORMATS = ("json", "csv", "text")
ORACLE_COLUMNS = ("m", "n", "argmin", "min", "f0", "works", "slack")
SCAN_COLUMNS = ("m", "n_max_works", "slope", "first_failure_n", "first_failure_slope")
CONSTANT_COLUMNS = ("step_id", "name", "lo", "hi", "paper", "tol", "reference", "ok")

_DEFAULTS = {
    "m": None,
    "n": None,
    "m_from": None,
    "m_to": None,
    "grid_density": 1.0,
    "output": None,
    "format": "json",
    "max_depth": DEFAULT_MAX_DEPTH,
    "seed": 0,
    "strict": False,
}
_CASTS = {"m": int, "n": int, "m_from": int, "m_to": int, "grid_density": float,
          "max_depth": int, "seed": int, "output": str, "format": str}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    m: int | None = None
    n: int | None = None
    m_from: int | None = None
    m_to: int | None = None
    grid_density: float = 1.0
    output_path: str | None = None
    format: str = "json"
    max_depth: int = DEFAULT_MAX_DEPTH
    seed: int = 0
    strict: bool = False


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit with 2, which means "out of scope" here
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--m", type=int, default=argparse.SUPPRESS)
    common.add_argument("--n", type=int, default=argparse.SUPPRESS)
    common.add_argument("--m-from", dest="m_from", type=int, default=argparse.SUPPRESS)
    common.add_argument("--m-to", dest="m_to", type=int, default=argparse.SUPPRESS)
    common.add_argument("--grid-density", dest="grid_density", type=float, default=argparse.SUPPRESS,
                        help="oracle grid multiplier (>= 1; 1 means 40 m points on [0, pi])")
    common.add_argument("-o", "--output", default=argparse.SUPPRESS, help="report path (default stdout)")
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    common.add_argument("--max-depth", dest="max_depth", type=int, default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    tol = common.add_mutually_exclusive_group()
    tol.add_argument("--paper-tolerances", dest="strict", action="store_false", default=argparse.SUPPRESS,
                     help="match printed values at their stated precision (default)")
    tol.add_argument("--strict", dest="strict", action="store_true", default=argparse.SUPPRESS,
                     help=f"match an independent high-precision value within {float(STRICT_TOL):g}")
    common.add_argument("--config", default=argparse.SUPPRESS, help="flat key=value option file")

    p = _Parser(prog="trigmin", description="Verify min f = f(0) for f = (n sin x - sin nx)/(m sin x - sin mx).")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.add_parser("verify", parents=[common], help="rigorous certificate for one pair")
    sub.add_parser("constants", parents=[common], help="table of recomputed constants")
    sub.add_parser("oracle", parents=[common], help="floating-point global minimum of f")
    sub.add_parser("scan", parents=[common], help="largest working even n for each odd m")
    sub.add_parser("bmn", parents=[common], help="B_mn = min f for one pair")
    return p


def read_config(path: str) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    out = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.lstrip("-").replace("-", "_")
        if key == "paper_tolerances":
            key, value = "strict", str(not _truthy(value, path, lineno))
        if key == "strict":
            out[key] = _truthy(value, path, lineno)
        elif key in _CASTS:
            try:
                out[key] = _CASTS[key](value)
            except ValueError as exc:
                raise UsageError(f"{path}:{lineno}: bad value for {key}: {value!r}") from exc
        else:
            raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
    return out


def _truthy(value: str, path: str, lineno: int) -> bool:
    v = value.lower()
    if v in ("1", "true", "yes", "on"):
        return True
    if v in ("0", "false", "no", "off"):
        return False
    raise UsageError(f"{path}:{lineno}: expected a boolean, got {value!r}")


def parse_config(argv) -> RunConfig:
    ns = build_parser().parse_args(argv)
    if ns.command is None:
        raise UsageError("a command is required: " + ", ".join(COMMANDS))
    given = vars(ns)
    merged = dict(_DEFAULTS)
    if "config" in given:
        merged.update(read_config(given["config"]))
    merged.update({k: v for k, v in given.items() if k in _DEFAULTS})
    cfg = RunConfig(command=ns.command, m=merged["m"], n=merged["n"], m_from=merged["m_from"],
                    m_to=merged["m_to"], grid_density=merged["grid_density"],
                    output_path=merged["output"], format=merged["format"],
                    max_depth=merged["max_depth"], seed=merged["seed"], strict=merged["strict"])
    _validate(cfg)
    return cfg


def _validate(cfg: RunConfig) -> None:
    if cfg.format not in FORMATS:
        raise UsageError(f"format must be one of {', '.join(FORMATS)}")
    if cfg.max_depth < 1:
        raise UsageError("--max-depth must be >= 1")
    if not -(2 ** 63) <= cfg.seed < 2 ** 64:
        raise UsageError("--seed must fit in 64 bits")
    if cfg.grid_density < 1:
        raise UsageError("--grid-density must be >= 1")
    if cfg.command in ("verify", "oracle", "bmn"):
        if cfg.m is None or cfg.n is None:
            raise UsageError(f"{cfg.command} needs --m and --n")
        if not cfg.m > cfg.n >= 2:
            raise UsageError("need m > n >= 2")
    if cfg.command == "scan":
        if cfg.m_from is None or cfg.m_to is None:
            raise UsageError("scan needs --m-from and --m-to")
        if cfg.m_from % 2 == 0 or cfg.m_to % 2 == 0:
            raise UsageError("--m-from and --m-to must be odd")
        if not 3 <= cfg.m_from <= cfg.m_to:
            raise UsageError("need 3 <= m-from <= m-to")


# --------------------------------------------------------------------------
# rendering


def _json(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def _csv(columns, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow(["" if r.get(c) is None else r.get(c) for c in columns])
    return buf.getvalue()


def _text(columns, rows) -> str:
    cells = [[str(c) for c in columns]] + [["" if r.get(c) is None else str(r.get(c)) for c in columns]
                                           for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(columns))]
    return "".join("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() + "\n" for row in cells)


def _render(fmt: str, doc, columns, rows) -> str:
    if fmt == "json":
        return _json(doc)
    if fmt == "csv":
        return _csv(columns, rows)
    return _text(columns, rows)


def _bool(b: bool) -> str:
    return "true" if b else "false"


# --------------------------------------------------------------------------
# commands; each returns (exit code, report text)


def cmd_verify(cfg: RunConfig) -> tuple[int, str]:
    pair = PairMN(cfg.m, cfg.n)
    try:
        cert = assemble_certificate(pair, cfg.max_depth, cfg.seed, threads=thread_cap())
    except ScopeError:
        doc = {"pair": {"m": pair.m, "n": pair.n,
                        "lambda": str(pair.lam)},
               "steps": [], "verdict": "scope_rejected", "failed_step": None,
               "scope_violations": pair.scope_violations()}
        rows = [{"step_id": "scope", "status": "rejected", "margin": "; ".join(pair.scope_violations())}]
        return EXIT_SCOPE, _render(cfg.format, doc, ("step_id", "status", "margin"), rows)
    doc = cert.to_dict()
    rows = [{"step_id": s.step_id, "status": s.status.value, "margin": fmt17(s.margin)} for s in cert.steps]
    rows.append({"step_id": "verdict", "status": cert.verdict if cert.failed_step is None
                 else f"{cert.verdict}({cert.failed_step})", "margin": None})
    text = _render(cfg.format, doc, ("step_id", "status", "margin"), rows)
    if cert.holds:
        return EXIT_OK, text
    return (EXIT_INCONCLUSIVE if cert.status is ProofStatus.INCONCLUSIVE else EXIT_FAIL), text


def cmd_constants(cfg: RunConfig) -> tuple[int, str]:
    table = constant_rows(cfg.max_depth)
    mode = "strict" if cfg.strict else "paper"
    rows = []
    for r in table:
        rows.append({
            "step_id": r.step_id,
            "name": r.name,
            "lo": fmt17(r.enclosure.lo),
            "hi": fmt17(r.enclosure.hi),
            "paper": r.printed,
            "tol": fmt17(STRICT_TOL if cfg.strict else r.tol),
            "reference": format(float(r.reference), ".17g"),
            "ok": _bool(r.ok(cfg.strict)),
        })
    all_ok = all(r.ok(cfg.strict) for r in table)
    doc = {"mode": mode, "all_ok": all_ok,
           "rows": [{**row, "ok": row["ok"] == "true"} for row in rows]}
    return (EXIT_OK if all_ok else EXIT_FAIL), _render(cfg.format, doc, CONSTANT_COLUMNS, rows)


def _oracle_row(est: oracle.OracleEstimate, works: bool) -> dict:
    return {"m": est.pair.m, "n": est.pair.n, "argmin": fmt17(est.argmin_x),
            "min": fmt17(est.min_value), "f0": fmt17(est.f_at_zero), "works": _bool(works),
            "slack": fmt17(est.slack)}


def cmd_oracle(cfg: RunConfig) -> tuple[int, str]:
    pair = PairMN(cfg.m, cfg.n)
    works, margin, est = oracle.check_works(pair, cfg.grid_density)
    row = _oracle_row(est, works)
    doc = {**row, "works": works, "f0_exact": str(est.f_at_zero),
           "margin": fmt17(margin), "grid_points": est.grid_points,
           "refinement_iterations": est.refinement_iterations,
           "skipped": [fmt17(x) for x in est.skipped]}
    return (EXIT_OK if works else EXIT_FAIL), _render(cfg.format, doc, ORACLE_COLUMNS, [row])


def cmd_scan(cfg: RunConfig) -> tuple[int, str]:
    rows_raw = oracle.scan_slope(cfg.m_from, cfg.m_to, cfg.grid_density, threads=thread_cap())
    rows = [{"m": r.m, "n_max_works": r.n_max_works,
             "slope": None if r.slope is None else fmt17(r.slope),
             "first_failure_n": r.first_failure_n,
             "first_failure_slope": None if r.first_failure_slope is None else fmt17(r.first_failure_slope)}
            for r in rows_raw]
    return EXIT_OK, _render(cfg.format, rows, SCAN_COLUMNS, rows)


def cmd_bmn(cfg: RunConfig) -> tuple[int, str]:
    pair = PairMN(cfg.m, cfg.n)
    ref = b_mn_reference(pair)
    est = oracle.global_min_f(pair, cfg.grid_density)
    known = ref.known_value
    row = {"m": pair.m, "n": pair.n, "b_mn": fmt17(est.min_value), "argmin": fmt17(est.argmin_x),
           "f0": fmt17(ref.f_at_zero),
           "known": None if known is None else str(known),
           "reason": ref.reason}
    return EXIT_OK, _render(cfg.format, row, tuple(row), [row])


HANDLERS = {"verify": cmd_verify, "constants": cmd_constants, "oracle": cmd_oracle,
            "scan": cmd_scan, "bmn": cmd_bmn}


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    Path(path).write_text(text)


def main(argv=None) -> int:
    try:
        cfg = parse_config(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        print(f"trigmin: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    code, text = HANDLERS[cfg.command](cfg)
    try:
        _write(cfg.output_path, text)
    except OSError as exc:
        print(f"trigmin: cannot write {cfg.output_path}: {exc}", file=sys.stderr)
        return EXIT_IO
    return code


if __name__ == "__main__":
    sys.exit(main())
