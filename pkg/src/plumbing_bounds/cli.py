"""Command line front end: ``plumb-bounds {bounds,lemma-check,batch,fixtures}``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import TextIO

from . import catalog, suites
from .bounds import BoundsReport, report_for_braid, report_for_graph, report_for_pd
from .braid import parse_braid_word
from .errors import InputError, InvariantViolation, PlumbingError
from .graph import SeifertGraph
from .spanning import POLICIES

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2
INPUT_KINDS = ("braid", "pd", "graph", "known")


@dataclass
class CliConfig:
    command: str = "bounds"
    input_kind: str | None = None
    payload: str | None = None
    strands: int | None = None
    policy: str = "min-beta"
    exhaustive: bool = False
    assert_minimal: bool = False
    format: str = "text"
    seed: int = 0
    count: int = 1000
    identities: bool = False
    paths: list = field(default_factory=list)

    def __post_init__(self):
        if self.policy not in POLICIES:
            raise ValueError(f"policy must be one of {POLICIES}")
        if self.command == "bounds" and self.input_kind not in INPUT_KINDS:
            raise ValueError("exactly one of --braid/--pd/--graph/--known is required")


def _read(path: str, stdin: TextIO) -> str:
    if path == "-":
        return stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_json(text: str, where: str) -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{where}: invalid JSON ({exc.msg})") from None


def _known(name: str, **kw) -> BoundsReport:
    try:
        fx = catalog.get_fixture(name)
    except KeyError as exc:
        raise InputError(exc.args[0]) from None
    report = report_for_braid(fx.braid, **kw) if fx.braid is not None else report_for_graph(fx.raw_graph, **kw)
    report.input = {"kind": "known", "name": fx.name, **report.input}
    return report


def _engine_options(cfg: CliConfig) -> dict:
    return {"policy": cfg.policy, "exhaustive": cfg.exhaustive, "assert_minimal": cfg.assert_minimal}


def build_report(cfg: CliConfig, stdin: TextIO | None = None) -> BoundsReport:
    stdin = stdin or sys.stdin
    opts = _engine_options(cfg)
    if cfg.input_kind == "braid":
        return report_for_braid(parse_braid_word(cfg.payload, cfg.strands), **opts)
    if cfg.input_kind == "pd":
        return report_for_pd(_read(cfg.payload, stdin), **opts)
    if cfg.input_kind == "graph":
        doc = _load_json(_read(cfg.payload, stdin), cfg.payload)
        return report_for_graph(SeifertGraph.from_json(doc), **opts)
    return _known(cfg.payload, **opts)


def report_from_file(path: str, cfg: CliConfig) -> BoundsReport:
    """Guess the input kind of one batch item from its contents."""
    text = _read(path, sys.stdin)
    opts = _engine_options(cfg)
    if path.endswith(".json"):
        doc = _load_json(text, path)
        if not isinstance(doc, dict):
            raise InputError(f"{path}: expected a JSON object")
        if "edges" in doc:
            return report_for_graph(SeifertGraph.from_json(doc), **opts)
        if "braid" in doc:
            return report_for_braid(parse_braid_word(doc["braid"], doc.get("strands")), **opts)
        if "pd" in doc:
            return report_for_pd(doc["pd"], **opts)
        if "known" in doc:
            return _known(doc["known"], **opts)
        raise InputError(f"{path}: no edges/braid/pd/known key")
    body = text.strip()
    if body == "U" or body.startswith("X["):
        return report_for_pd(body, **opts)
    return report_for_braid(parse_braid_word(body, cfg.strands), **opts)


def _error_record(exc: Exception) -> dict:
    code = exc.code if isinstance(exc, PlumbingError) else "internal_error"
    return {"code": code, "message": str(exc)}


def _exit_code(exc: Exception) -> int:
    if isinstance(exc, InvariantViolation):
        return EXIT_INTERNAL
    if isinstance(exc, (InputError, PlumbingError)):
        return EXIT_INPUT
    return EXIT_INTERNAL


def _use_color(out: TextIO) -> bool:
    return not os.environ.get("PLUMB_BOUNDS_NO_COLOR") and hasattr(out, "isatty") and out.isatty()


def render_text(report: BoundsReport, color: bool = False) -> str:
    bold = (lambda s: f"\033[1m{s}\033[0m") if color else (lambda s: s)
    src = report.input
    lines = [f"input: {src.get('kind')} " + ", ".join(f"{k}={v}" for k, v in src.items() if k != "kind")]
    gr = report.graph
    lines.append(
        f"seifert graph: s={gr['s']} c={gr['c']} l={gr['l']} chi={gr['euler_characteristic']} "
        f"genus(canonical surface)={report.genus.g_diagram}"
    )
    lines.append("bounds:")
    width = max(len(e.name) for e in report.bounds)
    for e in report.bounds:
        tail = f"  [{e.note}]" if e.note else ""
        lines.append(f"  {e.name:<{width}}  {e.value:>4}  {e.ref}{tail}")
    b = report.best
    lines.append(bold(f"best: bk <= {b.bk}, fp <= {b.fp}, fpbk <= {b.fpbk}"))
    gb = report.genus
    if gb.exact_bk is not None:
        lines.append(bold(f"exact: bk = {gb.exact_bk} ({gb.reason})"))
    flags = report.flags
    if flags.get("possibly_trivial"):
        lines.append("note: best fp bound is below 3, so the link may be trivial")
    if flags.get("fpbk_interpretation_ambiguous"):
        lines.append("note: fpbk_diagram_min_bound depends on how the signing is chosen; not certified")
    return "\n".join(lines)


def _emit_error(exc: Exception, cfg: CliConfig, out: TextIO, err: TextIO) -> int:
    if cfg.format == "json":
        out.write(json.dumps({"error": _error_record(exc)}, indent=2) + "\n")
    else:
        err.write(f"error: {exc}\n")
    return _exit_code(exc)


def run(cfg: CliConfig, stdin: TextIO | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    stdin, out, err = stdin or sys.stdin, out or sys.stdout, err or sys.stderr
    try:
        if cfg.command == "bounds":
            report = build_report(cfg, stdin)
            if cfg.format == "json":
                out.write(json.dumps(report.to_dict(), indent=2) + "\n")
            else:
                out.write(render_text(report, _use_color(out)) + "\n")
            return EXIT_OK
        if cfg.command == "lemma-check":
            return _lemma_check(cfg, out)
        if cfg.command == "batch":
            return _batch(cfg, out)
        if cfg.command == "fixtures":
            return _fixtures(cfg, out)
        raise ValueError(f"unknown command {cfg.command!r}")
    except Exception as exc:  # noqa: BLE001 - every failure maps to an exit code
        return _emit_error(exc, cfg, out, err)


def _lemma_check(cfg: CliConfig, out: TextIO) -> int:
    braids = suites.random_braids(cfg.count, cfg.seed)
    results = [suites.lemma_suite(braids)]
    if cfg.identities:
        results.append(suites.identity_suite(braids))
    if cfg.format == "json":
        doc = [
            {"suite": r.name, "total": r.total, "passed": r.passed, "failures": r.failures[:20]}
            for r in results
        ]
        out.write(json.dumps({"seed": cfg.seed, "results": doc}, indent=2) + "\n")
    else:
        for r in results:
            out.write(r.summary() + "\n")
            for f in r.failures[:20]:
                out.write(f"  failed: {json.dumps(f)}\n")
    return EXIT_OK if all(r.ok for r in results) else EXIT_INTERNAL


def _batch(cfg: CliConfig, out: TextIO) -> int:
    items = []
    status = EXIT_OK
    for path in cfg.paths:
        try:
            items.append({"path": path, "report": report_from_file(path, cfg).to_dict()})
        except Exception as exc:  # noqa: BLE001 - isolate each item
            items.append({"path": path, "error": _error_record(exc)})
            status = max(status, _exit_code(exc))
    out.write(json.dumps(items, indent=2) + "\n")
    return status


def _fixtures(cfg: CliConfig, out: TextIO) -> int:
    rows = []
    for fx in catalog.load_fixtures():
        rows.append(
            {
                "name": fx.name,
                "braid": None if fx.braid is None else str(fx.braid),
                "strands": None if fx.braid is None else fx.braid.strands,
                "graph": None if fx.raw_graph is None else fx.raw_graph.to_json(),
                "l": fx.l,
                "genus": fx.genus,
                "alternating": fx.alternating,
                "positive": fx.positive,
                "description": fx.description,
            }
        )
    if cfg.format == "json":
        out.write(json.dumps(rows, indent=2) + "\n")
    else:
        for r in rows:
            what = f"braid '{r['braid']}' on {r['strands']} strands" if r["braid"] is not None else "raw graph"
            out.write(f"{r['name']:<14} {what:<36} l={r['l']} genus={r['genus']}\n")
    return EXIT_OK


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="plumb-bounds", description="Plumbing number bounds for links.")
    sub = p.add_subparsers(dest="command", required=True)

    def engine_flags(sp):
        sp.add_argument("--strands", type=int, help="strand count for braid words")
        sp.add_argument("--fpbk-policy", choices=POLICIES, default="min-beta")
        sp.add_argument("--exhaustive", action="store_true", help="also minimise over all spanning trees")
        sp.add_argument("--assert-minimal-genus", action="store_true",
                        help="treat the diagram's canonical surface as minimal genus")

    b = sub.add_parser("bounds", help="bounds for one link")
    src = b.add_mutually_exclusive_group(required=True)
    src.add_argument("--braid", metavar="STR", help="braid word, e.g. '1 -2 1 -2'")
    src.add_argument("--pd", metavar="PATH", help="file with a PD code ('-' for stdin)")
    src.add_argument("--graph", metavar="PATH", help="raw Seifert graph JSON ('-' for stdin)")
    src.add_argument("--known", metavar="NAME", help="built-in fixture name")
    engine_flags(b)
    b.add_argument("--format", choices=("text", "json"), default="text")

    lc = sub.add_parser("lemma-check", help="random sign-sum lemma suite")
    lc.add_argument("--random", type=int, default=1000, dest="count", metavar="N")
    lc.add_argument("--seed", type=int, default=0)
    lc.add_argument("--identities", action="store_true", help="also run the identity suite")
    lc.add_argument("--format", choices=("text", "json"), default="text")

    bt = sub.add_parser("batch", help="one report per input file, as a JSON array")
    bt.add_argument("paths", nargs="*")
    engine_flags(bt)

    fx = sub.add_parser("fixtures", help="list the built-in fixtures")
    fx.add_argument("--format", choices=("text", "json"), default="text")
    return p


def config_from_args(argv: list[str] | None = None) -> CliConfig:
    ns = _parser().parse_args(argv)
    kw: dict = {"command": ns.command}
    if ns.command in ("bounds", "batch"):
        kw.update(
            strands=ns.strands,
            policy=ns.fpbk_policy,
            exhaustive=ns.exhaustive,
            assert_minimal=ns.assert_minimal_genus,
        )
    if ns.command == "bounds":
        kind = next(k for k in INPUT_KINDS if getattr(ns, k) is not None)
        kw.update(input_kind=kind, payload=getattr(ns, kind))
    if ns.command == "batch":
        kw.update(paths=ns.paths, format="json")
    else:
        kw["format"] = ns.format
    if ns.command == "lemma-check":
        kw.update(count=ns.count, seed=ns.seed, identities=ns.identities)
    return CliConfig(**kw)


def main(argv: list[str] | None = None) -> int:
    return run(config_from_args(argv))


if __name__ == "__main__":
    sys.exit(main())
