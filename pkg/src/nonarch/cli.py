"""Command-line front end: ``nonarch eval|repl|batch|filters|witness``.

Exit codes: 0 on success, 2 when an expression fails to parse or evaluate,
1 on I/O failure or an invalid filter-lab universe.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, TextIO

from .errors import NonArchError, UniverseTooLarge
from .evaluate import format_value, run
from .filterlab import lab_report
from .magnitude import ScalingCase, archimedean_witness, witness_certificate

EXIT_OK = 0
EXIT_IO = 1
EXIT_EXPR = 2

WITNESS_SAMPLES = (1, 10, 10**3, 10**6)


def evaluate_line(line: str) -> dict:
    """One result record: ``{input, kind, value}`` or ``{input, kind, value, error}``."""
    try:
        res = run(line)
    except NonArchError as e:
        return {"input": line, "kind": "error", "value": str(e), "error": e.name}
    rec = {"input": line, "kind": res.kind, "value": format_value(res.value)}
    if isinstance(res.value, ScalingCase):
        rec["detail"] = res.value.to_dict()
    return rec


def format_record(rec: dict) -> str:
    if rec["kind"] == "error":
        return f"error: {rec['value']}"
    if "detail" in rec:
        d = rec["detail"]
        return (
            f"case: {rec['value']} (gal0 {d['gal0']}, length {d['length']}, "
            f"in-monad {str(d['in_monad']).lower()})"
        )
    return f"{rec['kind']}: {rec['value']}"


def _records(lines: Iterable[str]):
    for raw in lines:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield evaluate_line(line)


def run_batch(lines: Iterable[str], out: TextIO, as_json: bool = False) -> int:
    status = EXIT_OK
    for rec in _records(lines):
        if rec["kind"] == "error":
            status = EXIT_EXPR
        out.write((json.dumps(rec) if as_json else format_record(rec)) + "\n")
    return status


def run_repl(inp: TextIO, out: TextIO) -> int:
    interactive = inp.isatty()
    status = EXIT_OK
    while True:
        if interactive:
            out.write("nonarch> ")
            out.flush()
        line = inp.readline()
        if not line:
            break
        if line.strip() in ("quit", "exit"):
            break
        for rec in _records([line]):
            if rec["kind"] == "error":
                status = EXIT_EXPR
            out.write(format_record(rec) + "\n")
            out.flush()
    return status


def run_filter_lab(k: int, out: TextIO, as_json: bool = False) -> int:
    try:
        report = lab_report(k)
    except (UniverseTooLarge, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO
    if as_json:
        out.write(json.dumps(report) + "\n")
        return EXIT_OK
    out.write(
        f"universe size {report['universe_size']} ({report['mode']}"
        + (f", {report['candidates_checked']} candidate families" if report["candidates_checked"] else "")
        + ")\n"
    )
    out.write(f"filters: {report['filter_count']}, ultrafilters: {report['ultrafilter_count']}\n")
    for e in report["filters"]:
        q = e["quotient"]
        out.write(
            f"  generator {e['ideal_co_support']}: ultrafilter={str(e['is_ultrafilter']).lower()} "
            f"dim={q['dim']} field={str(q['field']).lower()} order={q['order']}\n"
        )
    for name, ok in report["checks"].items():
        out.write(f"check {name}: {'pass' if ok else 'FAIL'}\n")
    return EXIT_OK


def run_witness(text: str, out: TextIO) -> int:
    try:
        res = run(text)
        x = archimedean_witness(res.value)
    except NonArchError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_EXPR
    out.write(f"u = {res.value}\n")
    out.write(f"x = {x}\n")
    for n in WITNESS_SAMPLES:
        ok = witness_certificate(res.value, x, n)
        out.write(f"{n}*u < x: {'certified' if ok else 'FAILED'} (x/u - {n} = {x / res.value - n})\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nonarch", description="Exact arithmetic in a non-Archimedean field of germs.")
    sub = p.add_subparsers(dest="command", required=True)
    e = sub.add_parser("eval", help="evaluate one expression")
    e.add_argument("expr")
    e.add_argument("--json", action="store_true")
    sub.add_parser("repl", help="read-eval-print loop on stdin")
    b = sub.add_parser("batch", help="evaluate one expression per line of a file ('-' for stdin)")
    b.add_argument("file")
    b.add_argument("--json", action="store_true")
    f = sub.add_parser("filters", help="filter/ideal laboratory on a finite universe")
    f.add_argument("k", type=int)
    f.add_argument("--json", action="store_true")
    w = sub.add_parser("witness", help="element exceeding every n*u")
    w.add_argument("expr")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout
    if args.command == "eval":
        rec = evaluate_line(args.expr)
        if args.json:
            out.write(json.dumps(rec) + "\n")
        elif rec["kind"] == "error":
            print(format_record(rec), file=sys.stderr)
        else:
            out.write(format_record(rec) + "\n")
        return EXIT_EXPR if rec["kind"] == "error" else EXIT_OK
    if args.command == "repl":
        return run_repl(sys.stdin, out)
    if args.command == "batch":
        if args.file == "-":
            return run_batch(sys.stdin, out, args.json)
        try:
            with open(args.file, encoding="utf-8") as fh:
                lines = fh.readlines()
        except OSError as e:
            print(f"error: cannot read {args.file}: {e.strerror or e}", file=sys.stderr)
            return EXIT_IO
        return run_batch(lines, out, args.json)
    if args.command == "filters":
        return run_filter_lab(args.k, out, args.json)
    if args.command == "witness":
        return run_witness(args.expr, out)
    return EXIT_IO  # pragma: no cover


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
