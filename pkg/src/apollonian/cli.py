"""Command-line interface: ``apollonian {enumerate,build,reduce,render,dust,check}``.

Exit codes: 0 success, 1 usage, 2 I/O, 3 domain error, 4 invariant failure.
"""
from __future__ import annotations

import argparse
import logging
import sys
from typing import List, Optional, Sequence, Union

from . import checks
from .descartes import from_spinors, is_descartes, to_params
from .enumeration import ClassificationRow, counts_by_B, enumerate_range, rows_to_csv, rows_to_json, solve_params
from .errors import ApollonianError, DegenerateLatticeError, InvalidQuadrupleError, NotEvertedError
from .geometry import build_packing
from .lattice import LatticeBasis, principal_basis, similarity_key
from .minkowski import dust_dataset, dust_to_csv, dust_to_json
from .spinor import Spinor
from .svg import RenderOptions, render_svg

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_DOMAIN, EXIT_INVARIANT = 0, 1, 2, 3, 4

log = logging.getLogger("apollonian")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _ints(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def parse_pair(text: str) -> tuple[Spinor, Spinor]:
    """``"x,y;u,v"`` -> two spinors."""
    parts = text.split(";")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected 'x,y;u,v', got {text!r}")
    vecs = [_ints(p) for p in parts]
    if any(len(v) != 2 for v in vecs):
        raise argparse.ArgumentTypeError(f"expected 'x,y;u,v', got {text!r}")
    return Spinor(*vecs[0]), Spinor(*vecs[1])


def parse_quadruple(text: str) -> tuple[int, ...]:
    q = _ints(text)
    if len(q) != 4:
        raise argparse.ArgumentTypeError(f"expected four curvatures, got {text!r}")
    return tuple(q)


def positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {v}")
    return v


def _write(path: str, data: Union[str, bytes]) -> None:
    raw = data.encode("utf-8") if isinstance(data, str) else data
    if path == "-":
        sys.stdout.flush()
        sys.stdout.buffer.write(raw)
        sys.stdout.buffer.flush()
        return
    with open(path, "wb") as fh:
        fh.write(raw)


def _fmt_q(q) -> str:
    return "(" + ", ".join(str(b) for b in q) + ")"


def _fmt_spinor(s: Spinor) -> str:
    return f"[{s.x}, {s.y}]"


def cmd_enumerate(args) -> int:
    rows = enumerate_range(args.bmax)
    _write(args.out, rows_to_csv(rows) if args.format == "csv" else rows_to_json(rows))
    # Keep stdout machine-readable when the table itself goes there.
    stream = sys.stderr if args.out == "-" else sys.stdout
    counts = counts_by_B(rows)
    for B in range(1, args.bmax + 1):
        print(f"B={B} count={counts.get(B, 0)}", file=stream)
    print(f"total={len(rows)}", file=stream)
    return EXIT_OK


def cmd_build(args) -> int:
    a, b = args.spinors
    main, conj = from_spinors(a, b)
    print(f"quadruple: {_fmt_q(main)}")
    print(f"conjugate: {_fmt_q(conj)}")
    t = to_params(main)
    print(f"params: B={t.B} k={t.k} n={t.n} mu={t.mu}")
    if main[0] == 0:
        print("note: strip configuration (B = 0, bounded by parallel lines)")
    return EXIT_OK


def cmd_reduce(args) -> int:
    basis = LatticeBasis(*args.basis)
    p = principal_basis(basis)
    k, n, mu = p.gram()
    print(f"principal: {_fmt_spinor(p.v)} {_fmt_spinor(p.w)}")
    print(f"gram: k={k} n={n} mu={mu} discriminant={p.discriminant}")
    print(f"key: {_fmt_q(similarity_key(basis))}")
    match = [t for t in solve_params(p.discriminant) if (t.k, t.n, t.mu) == (k, n, mu)]
    if match:
        row = ClassificationRow.from_params(match[0])
        print(f"row: B={row.params.B} k={k} n={n} mu={mu} quintet={_fmt_q(row.quintet)}")
    else:
        print("row: none (lattice is reducible)")
    return EXIT_OK


def cmd_render(args) -> int:
    q = args.quadruple
    if not is_descartes(q):
        raise UsageError(f"{_fmt_q(q)} does not satisfy the Descartes relation")
    try:
        p = build_packing(q, args.max_curvature)
    except (NotEvertedError, InvalidQuadrupleError) as exc:
        raise UsageError(str(exc))
    except ApollonianError:
        raise
    except ValueError as exc:  # bound below the root's curvatures
        raise UsageError(str(exc))
    _write(args.out, render_svg(p, RenderOptions(labels=args.labels)))
    if args.json:
        _write(args.json, p.to_json())
    log.info("rendered %d disks", len(p.disks))
    return EXIT_OK


def cmd_dust(args) -> int:
    pts = dust_dataset(args.bmax, args.projection)
    _write(args.out, dust_to_csv(pts) if args.format == "csv" else dust_to_json(pts))
    log.info("%d points", len(pts))
    return EXIT_OK


def cmd_check(args) -> int:
    results = checks.run_all(args.bmax)
    for r in results:
        print(r.line())
    ok = checks.all_passed(results)
    failed = [r.name for r in results if not r.passed and r.tier == "error"]
    print("all invariants hold" if ok else f"failed invariants: {', '.join(failed)}")
    return EXIT_OK if ok else EXIT_INVARIANT


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="apollonian", description="Integral Apollonian packings from spinors.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="classification table of maximal irreducible packings")
    p.add_argument("--bmax", type=positive_int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default="-", help="output path, '-' for stdout")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("build", help="Descartes quadruples generated by two spinors")
    p.add_argument("--spinors", type=parse_pair, required=True, metavar='"x,y;u,v"')
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("reduce", help="principal basis and class of a lattice")
    p.add_argument("--basis", type=parse_pair, required=True, metavar='"x,y;u,v"')
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("render", help="SVG drawing of a packing")
    p.add_argument("--quadruple", type=parse_quadruple, required=True, metavar="a,b,c,d")
    p.add_argument("--max-curvature", type=positive_int, default=100)
    p.add_argument("--labels", action="store_true")
    p.add_argument("--out", default="-")
    p.add_argument("--json", default=None, help="also write the packing as JSON")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("dust", help="celestial-sphere projection of the classification")
    p.add_argument("--bmax", type=positive_int, required=True)
    p.add_argument("--projection", choices=("north", "south"), default="north")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_dust)

    p = sub.add_parser("check", help="run the invariant suites")
    p.add_argument("--bmax", type=positive_int, default=30)
    p.set_defaults(func=cmd_check)
    return parser


_VECTOR_FLAGS = ("--quadruple", "--spinors", "--basis")


def _join_vector_flags(argv: Sequence[str]) -> List[str]:
    """``--quadruple -1,2,2,3`` -> ``--quadruple=-1,2,2,3`` so argparse does not read an option."""
    out: List[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _VECTOR_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_join_vector_flags(sys.argv[1:] if argv is None else argv))
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"apollonian: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DegenerateLatticeError as exc:
        print(f"apollonian: degenerate lattice: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ApollonianError as exc:
        print(f"apollonian: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"apollonian: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
