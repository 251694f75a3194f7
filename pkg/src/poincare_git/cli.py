"""Command line front end.

Exit codes: 0 success, 1 usage or schema error, 2 verification failure,
3 computation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .algebra import CycloRational, IntPoly, expand
from .errors import PoincareError
from .problems import catalog, compute, dumps, load, verify

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_COMPUTE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _error_text(exc: PoincareError) -> str:
    lines = [f"error: {exc.kind}: {exc}"]
    if exc.trace:
        lines.append(f"  after {len(exc.trace)} completed step(s):")
        lines += [f"    {s.label} [{s.formula}] -> {s.output}" for s in exc.trace]
    return "\n".join(lines)


def _error_json(exc: PoincareError) -> dict:
    return {
        "error": {
            "type": exc.kind,
            "message": exc.message,
            "path": exc.path,
            "step": exc.step,
            "completed_steps": [s.label for s in exc.trace],
        }
    }


def _compute_one(path: Path, args) -> tuple[int, str, str]:
    """Return (exit code, stdout text, stderr text)."""
    try:
        env = compute(load(path), truncate=args.truncate, allow_trivial_stages=args.allow_trivial_stages or None)
    except PoincareError as exc:
        if args.format == "json":
            return exc.exit_code, dumps(_error_json(exc)), ""
        return exc.exit_code, "", _error_text(exc) + "\n"
    except OSError as exc:
        return EXIT_USAGE, "", f"error: {exc}\n"
    err = "".join(f"warning: {w}\n" for w in env.warnings)
    err += "".join(f"check failed: {c.name}: {c.detail}\n" for c in env.checks if not c.passed)
    out = env.render(args.format)
    if not out.endswith("\n"):
        out += "\n"
    return EXIT_OK, out, err


def _cmd_compute(args) -> int:
    if args.batch is None and args.input is None:
        print("compute: one of -i/--input or --batch is required", file=sys.stderr)
        return EXIT_USAGE
    if args.batch is None:
        code, out, err = _compute_one(Path(args.input), args)
        sys.stdout.write(out)
        sys.stderr.write(err)
        return code
    files = sorted(Path(args.batch).glob("*.json"))
    if not files:
        print(f"compute: no *.json files in {args.batch}", file=sys.stderr)
        return EXIT_USAGE
    with ThreadPoolExecutor() as pool:
        results = list(pool.map(lambda f: _compute_one(f, args), files))
    worst = EXIT_OK
    for f, (code, out, err) in zip(files, results):
        sys.stdout.write(f"== {f.name}\n{out}")
        sys.stderr.write(err)
        worst = max(worst, code)
    return worst


def _cmd_verify(args) -> int:
    try:
        pf = load(Path(args.input))
    except PoincareError as exc:
        print(f"FAIL {exc.kind}: {exc}")
        return EXIT_VERIFY
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    checks, code = verify(pf, allow_trivial_stages=args.allow_trivial_stages or None)
    for c in checks:
        status = "PASS" if c.passed else "FAIL"
        print(f"{status} {c.name}" + (f": {c.detail}" if c.detail else ""))
    return code


def _cmd_catalog(args) -> int:
    entries = catalog()
    if args.format == "json":
        sys.stdout.write(dumps(entries))
        return EXIT_OK
    for e in entries:
        print(f"{e['kind']:<12} {e['name']:<20} {json.dumps(e['descriptor'], sort_keys=True):<60} {e['sample']}")
    return EXIT_OK


def _cmd_expand(args) -> int:
    num, sep, den = args.expr.partition(";")
    try:
        p = IntPoly.parse(num)
        ks = [int(k) for k in den.split(",") if k.strip()] if sep else []
        r = CycloRational(p, ks)
    except ValueError as exc:
        print(f"expand: {exc}", file=sys.stderr)
        return EXIT_USAGE
    s = expand(r, args.order)
    print(s.latex() if args.format == "latex" else s)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="poincare-git", description="Poincare series of GIT quotients.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="compute the series described by a problem file")
    p.add_argument("-i", "--input")
    p.add_argument("--batch", metavar="DIR", help="process every *.json file in DIR")
    p.add_argument("--truncate", type=int, metavar="N")
    p.add_argument("--format", choices=["plain", "latex", "json"], default="plain")
    p.add_argument("--allow-trivial-stages", action="store_true")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("verify", help="run the consistency checks only")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--allow-trivial-stages", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("catalog", help="list built-in spaces and groups")
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("expand", help='expand "num;k1,k2,..." = num / prod (1-t^k)')
    p.add_argument("-e", "--expr", required=True)
    p.add_argument("-N", "--order", type=int, required=True)
    p.add_argument("--format", choices=["plain", "latex"], default="plain")
    p.set_defaults(func=_cmd_expand)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
