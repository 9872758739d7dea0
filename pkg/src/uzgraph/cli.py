"""Command-line surface: ``uzgraph info|build|analyze|verify|sweep``.

Every flag falls back to a ``UZG_``-prefixed environment variable (``.env`` is
loaded first); an explicit flag always wins. Data goes to stdout or ``--out``,
logs and errors to stderr, so identical invocations give byte-identical files.

Exit status: 0 success, 1 a theorem check failed, 2 usage or parse error,
3 a resource limit was exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Optional

from dotenv import load_dotenv

from . import __version__
from .anatomy import ring_facts
from .config import Limits, env_default
from .graph import build_uz, to_csv, to_dot, to_json
from .invariants import analyze, csv_header
from .ring import TooLargeError
from .ringspec import parse_ring
from .sweep import FAMILIES, aggregate_table, run_ring, summary, sweep, to_markdown
from .theorems import render_report

log = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3

FORMATS = {
    "info": ("json",),
    "build": ("dot", "csv", "json"),
    "analyze": ("json", "csv"),
    "verify": ("text", "json", "md", "csv"),
    "sweep": ("md", "csv", "json"),
}


def _positive_int(raw: str) -> int:
    try:
        value = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {raw!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _env_int(name: str) -> Optional[int]:
    raw = env_default(name)
    if raw is None:
        return None
    try:
        return _positive_int(raw)
    except argparse.ArgumentTypeError as e:
        raise ValueError(f"UZG_{name.upper()}: {e}") from None


def _json_default(value: Any) -> Any:
    if hasattr(value, "item"):  # numpy scalars
        return value.item()
    if isinstance(value, (set, frozenset, tuple)):
        return sorted(value) if isinstance(value, (set, frozenset)) else list(value)
    return str(value)


def _dumps(doc: Any, *, indent: Optional[int] = 2) -> str:
    return json.dumps(doc, indent=indent, default=_json_default)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="uzgraph",
        description="Unit-zero divisor graphs of finite commutative rings",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="count", default=0,
                   help="-v for progress, -vv for per-ring pipeline detail")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", help="output format (default depends on the command; env UZG_FORMAT)")
    common.add_argument("--out", help="write output to this file instead of stdout (env UZG_OUT)")
    common.add_argument("--meta", action="store_true", default=None,
                        help="append a run-metadata block: version, limits, timestamp (env UZG_META)")

    limited = argparse.ArgumentParser(add_help=False)
    limited.add_argument("--limit-hamiltonian", type=_positive_int, metavar="N")
    limited.add_argument("--limit-chromatic", type=_positive_int, metavar="N")
    limited.add_argument("--limit-planarity-subdivision", type=_positive_int, metavar="N")

    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    s = sub.add_parser("info", parents=[common, limited], help="ring anatomy as JSON")
    s.add_argument("spec", help="ring spec, e.g. zn:12, prod:zn:2,zn:3, polyq:2:x^2")

    s = sub.add_parser("build", parents=[common, limited], help="export G_UZ(R) as DOT, CSV or JSON")
    s.add_argument("spec")
    s.add_argument("--label", choices=("index", "residues"),
                   help="DOT/JSON vertex labels (default index; env UZG_LABEL)")

    s = sub.add_parser("analyze", parents=[common, limited], help="every graph invariant")
    s.add_argument("spec")

    s = sub.add_parser("verify", parents=[common, limited], help="run the theorem checks on rings")
    s.add_argument("specs", nargs="+", metavar="spec")

    s = sub.add_parser("sweep", parents=[common, limited], help="run the checks over a ring family")
    s.add_argument("family", help=f"one of {', '.join(FAMILIES)}")
    s.add_argument("lo", type=_positive_int)
    s.add_argument("hi", type=_positive_int)
    s.add_argument("--jobs", type=_positive_int, help="worker processes (env UZG_JOBS, default 1)")
    return p


def _limits(args: argparse.Namespace) -> Limits:
    return Limits.from_env().with_overrides(
        hamiltonian=args.limit_hamiltonian,
        chromatic=args.limit_chromatic,
        planarity_subdivision=args.limit_planarity_subdivision,
    )


def _resolve(args: argparse.Namespace, parser: argparse.ArgumentParser) -> None:
    """Fill unset flags from the environment and validate the format."""
    allowed = FORMATS[args.command]
    fmt = args.format or env_default("format")
    if fmt is None or (args.format is None and fmt not in allowed):
        fmt = allowed[0]
    if fmt not in allowed:
        parser.error(f"{args.command}: --format must be one of {', '.join(allowed)}, got {fmt!r}")
    args.format = fmt
    args.out = args.out or env_default("out")
    if args.meta is None:
        args.meta = (env_default("meta") or "").lower() in ("1", "true", "yes", "on")
    if args.command == "build":
        args.label = args.label or env_default("label", "index")
        if args.label not in ("index", "residues"):
            parser.error(f"UZG_LABEL must be index or residues, got {args.label!r}")
    if args.command == "sweep" and args.jobs is None:
        args.jobs = _env_int("jobs") or 1


def _meta_block(limits: Limits, fmt: str) -> dict[str, Any]:
    return {
        "version": __version__,
        "limits": limits.to_dict(),
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "format": fmt,
    }


# one JSON document per ring; the others print a single document
JSON_LINES = ("verify", "sweep")


def _with_meta(text: str, command: str, fmt: str, meta: Optional[dict[str, Any]]) -> str:
    """Attach run metadata without breaking the output format."""
    if meta is None:
        return text
    if fmt == "json" and command in JSON_LINES:
        return text + _dumps({"meta": meta}, indent=None) + "\n"
    if fmt == "json":
        doc = json.loads(text)
        doc["meta"] = meta
        return _dumps(doc) + "\n"
    prefix = "// " if fmt == "dot" else "# "
    return text + prefix + "meta: " + _dumps(meta, indent=None) + "\n"


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
        log.info("wrote %s", out)
    else:
        sys.stdout.write(text)


def cmd_info(args: argparse.Namespace, limits: Limits) -> tuple[str, int]:
    R = parse_ring(args.spec, limits)
    facts = ring_facts(R, limits)
    return _dumps(facts.to_dict(R)) + "\n", EXIT_OK


def cmd_build(args: argparse.Namespace, limits: Limits) -> tuple[str, int]:
    R = parse_ring(args.spec, limits)
    G = build_uz(R, ring_facts(R, limits))
    residues = args.label == "residues"
    if args.format == "dot":
        return to_dot(G, residues=residues), EXIT_OK
    if args.format == "csv":
        return to_csv(G), EXIT_OK
    return to_json(G, residues=residues), EXIT_OK


def cmd_analyze(args: argparse.Namespace, limits: Limits) -> tuple[str, int]:
    R = parse_ring(args.spec, limits)
    inv = analyze(build_uz(R, ring_facts(R, limits)), limits)
    if args.format == "csv":
        return csv_header() + inv.to_csv_row(), EXIT_OK
    return _dumps(inv.to_dict()) + "\n", EXIT_OK


def _render_results(results, fmt: str) -> str:
    if fmt == "text":
        return "".join(render_report(r.report) for r in results)
    if fmt == "json":
        return "".join(_dumps(r.to_dict(), indent=None) + "\n" for r in results)
    table = aggregate_table(results)
    if fmt == "csv":
        return table.to_csv(index=False, lineterminator="\n")
    return to_markdown(table)


def cmd_verify(args: argparse.Namespace, limits: Limits) -> tuple[str, int]:
    results = [run_ring(spec, limits) for spec in args.specs]
    code = EXIT_OK if all(r.ok for r in results) else EXIT_FAILED
    return _render_results(results, args.format), code


def cmd_sweep(args: argparse.Namespace, limits: Limits) -> tuple[str, int]:
    results = sweep(args.family, args.lo, args.hi, limits, jobs=args.jobs)
    totals = summary(results)
    log.info("sweep done: %(rings)d rings, %(passed)d passed, %(failed)d failed, %(skipped)d skipped", totals)
    code = EXIT_OK if totals["failed"] == 0 else EXIT_FAILED
    return _render_results(results, args.format), code


COMMANDS = {
    "info": cmd_info,
    "build": cmd_build,
    "analyze": cmd_analyze,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
}


def main(argv: Optional[list[str]] = None) -> int:
    load_dotenv()
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose >= 2 else logging.INFO if args.verbose else logging.WARNING,
        format="[%(levelname)s] %(message)s",
        stream=sys.stderr,
        force=True,
    )
    try:
        _resolve(args, parser)
        limits = _limits(args)
        text, code = COMMANDS[args.command](args, limits)
        meta = _meta_block(limits, args.format) if args.meta else None
        _emit(_with_meta(text, args.command, args.format, meta), args.out)
    except TooLargeError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_LIMIT
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    return code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
