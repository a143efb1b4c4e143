"""Command-line front end.

Exit codes: 0 success, 1 parse or I/O error, 2 validation error (disconnected
graph, partition not coarser than Theta*, bad tubulene parameters, search
limit hit), 3 computation routes disagree.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .automorphisms import DEFAULT_NODE_LIMIT, enumerate_automorphisms, vertex_orbits
from .errors import GPIndexError, ParseError
from .graph import format_edge_list, read_edge_list, require_connected
from .indices import index_report
from .quotient import quotient_graph
from .relations import format_partition, read_partition, theta_star_partition
from .tubulene import (
    TubuleneSpec,
    full_report,
    generate,
    theoretical_orbits,
    vertex_labels,
)

EXIT_PARSE = 1
EXIT_INVALID = 2
EXIT_MISMATCH = 3

SWEEP_HEADER = ["n", "h", "gp_direct", "gp_cut", "gp_closed", "regime", "aut_order", "agree"]


class RouteMismatch(Exception):
    pass


def fmt_exact(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def fmt_decimal(x: Fraction, places: int = 6) -> str:
    scaled = round(x * 10**places)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**places)
    return f"{sign}{whole}.{frac:0{places}d}"


def fmt_plain(x: Fraction | None) -> str:
    if x is None:
        return ""
    return str(x.numerator) if x.denominator == 1 else fmt_exact(x)


def _gp_lines(gp: Fraction) -> list[str]:
    return [f"GP={fmt_exact(gp)}", f"GP≈{fmt_decimal(gp)}"]


def cmd_compute(args, out) -> int:
    g = read_edge_list(args.graph)
    require_connected(g)
    partition = read_partition(args.partition, g.edge_count) if args.partition else None
    if partition is not None and args.method == "direct":
        raise GPIndexError("--partition only applies to --method cut or both")
    orbits = vertex_orbits(g, enumerate_automorphisms(g, args.node_limit))
    cut = args.method in ("cut", "both")
    report = index_report(
        g, orbits, partition, cut=cut, check_coarser=not args.unsafe_skip_check
    )
    print(f"W={report.wiener}", file=out)
    print(f"Wprime={report.orbit_wiener_sum}", file=out)
    gp = report.gp_cut if args.method == "cut" else report.gp_direct
    for line in _gp_lines(gp):
        print(line, file=out)
    if args.method == "both":
        print(f"agree={'true' if report.routes_agree else 'false'}", file=out)
    if args.verbose:
        for i, (size, w) in enumerate(report.per_orbit, start=1):
            print(f"orbit i={i} size={size} W={w}", file=out)
        if report.per_block_quotient_terms is not None:
            for i, row in enumerate(report.per_block_quotient_terms, start=1):
                for j, w in enumerate(row, start=1):
                    print(f"term i={i} j={j} W={w}", file=out)
    if args.show_quotients:
        blocks = (partition or theta_star_partition(g)).blocks
        for j, block in enumerate(blocks, start=1):
            q = quotient_graph(g, block)
            print(f"# quotient j={j}", file=out)
            for c, members in enumerate(q.members):
                print(f"# members: {c}: " + " ".join(map(str, members)), file=out)
            out.write(format_edge_list(q.quotient))
    if not report.routes_agree:
        raise RouteMismatch(
            f"direct route gives {fmt_exact(report.gp_direct)}, cut method gives {fmt_exact(report.gp_cut)}"
        )
    return 0


def cmd_tubulene(args, out) -> int:
    spec = TubuleneSpec(args.n, args.h)
    if args.emit_graph:
        g = generate(spec)
        try:
            with open(args.emit_graph, "w") as fh:
                fh.write(format_edge_list(g, vertex_labels(spec)))
        except OSError as exc:
            raise ParseError(f"cannot write {args.emit_graph}: {exc.strerror}") from exc
    method = args.method
    print(f"n={spec.n}", file=out)
    print(f"h={spec.h}", file=out)
    result = full_report(spec, cut=method in ("cut", "all"))
    report, closed = result.report, result.closed
    closed_text = fmt_exact(Fraction(closed.value)) if closed.supported else "unsupported"
    if method in ("direct", "all"):
        print(f"GP_direct={fmt_exact(report.gp_direct)}", file=out)
    if method in ("cut", "all"):
        print(f"GP_cut={fmt_exact(report.gp_cut)}", file=out)
    if method in ("closed", "all"):
        print(f"GP_closed={closed_text}", file=out)
    print(f"Wprime={report.orbit_wiener_sum}", file=out)
    if method == "closed":
        print(f"GP={closed_text} regime={closed.regime}", file=out)
    else:
        gp = report.gp_cut if method == "cut" else report.gp_direct
        print(f"GP={fmt_exact(gp)} regime={closed.regime}", file=out)
    if args.verbose:
        for i, (size, w) in enumerate(report.per_orbit, start=1):
            print(f"orbit i={i} size={size} W={w}", file=out)
        if report.per_block_quotient_terms is not None:
            for i, row in enumerate(report.per_block_quotient_terms, start=1):
                for j, w in enumerate(row, start=1):
                    print(f"term i={i} j={j} W={w}", file=out)
    if method == "all":
        print(f"agree={'true' if result.agree else 'false'}", file=out)
        if not result.agree:
            raise RouteMismatch(f"routes disagree on ZT({spec.n},{spec.h})")
    return 0


def cmd_theta(args, out) -> int:
    g = read_edge_list(args.graph)
    p = theta_star_partition(g)
    print(f"# theta-star classes={len(p)}", file=out)
    out.write(format_partition(p))
    return 0


def cmd_orbits(args, out) -> int:
    g = read_edge_list(args.graph)
    autos = enumerate_automorphisms(g, args.node_limit)
    for orbit in vertex_orbits(g, autos).orbits:
        print(" ".join(map(str, orbit)), file=out)
    print(f"|Aut|={len(autos)}", file=out)
    return 0


def sweep_row(n: int, h: int, aut_max_vertices: int, node_limit: int) -> dict:
    spec = TubuleneSpec(n, h)
    result = full_report(spec)
    agree = result.agree
    aut_order = ""
    if spec.vertex_count <= aut_max_vertices:
        g = generate(spec)
        autos = enumerate_automorphisms(g, node_limit)
        aut_order = str(len(autos))
        agree &= vertex_orbits(g, autos) == theoretical_orbits(spec)
    closed = result.closed
    return {
        "n": n,
        "h": h,
        "gp_direct": fmt_plain(result.report.gp_direct),
        "gp_cut": fmt_plain(result.report.gp_cut),
        "gp_closed": str(closed.value) if closed.supported else "",
        "regime": closed.regime,
        "aut_order": aut_order,
        "agree": "true" if agree else "false",
    }


def _sweep_row_star(args):
    return sweep_row(*args)


def cmd_sweep(args, out) -> int:
    if args.n_max < 1 or args.h_max < 2:
        raise GPIndexError("sweep bounds need n-max >= 1 and h-max >= 2")
    cells = [
        (n, h, args.aut_max_vertices, args.node_limit)
        for n in range(1, args.n_max + 1)
        for h in range(2, args.h_max + 1)
    ]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_sweep_row_star, cells))
    else:
        rows = [sweep_row(*c) for c in cells]
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=SWEEP_HEADER, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    if args.output == "-":
        out.write(buf.getvalue())
    else:
        try:
            with open(args.output, "w", newline="") as fh:
                fh.write(buf.getvalue())
        except OSError as exc:
            raise ParseError(f"cannot write {args.output}: {exc.strerror}") from exc
    failed = [(r["n"], r["h"]) for r in rows if r["agree"] != "true"]
    if failed:
        raise RouteMismatch(f"routes disagree for (n,h) in {failed}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gpindex",
        description="Graovac-Pisanski index by orbits, generalized cut method and tubulene closed forms.",
    )
    parser.add_argument("--timing", action="store_true", help="append elapsed=<seconds> to the output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="indices of a graph given as an edge-list file")
    p.add_argument("graph")
    p.add_argument("--method", choices=("direct", "cut", "both"), default="both")
    p.add_argument("--partition", help="edge partition file for the cut method (default: Theta*)")
    p.add_argument("--verbose", action="store_true")
    p.add_argument("--show-quotients", action="store_true")
    p.add_argument("--unsafe-skip-check", action="store_true",
                   help="skip verifying that --partition is coarser than Theta*")
    p.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("tubulene", help="zig-zag tubulene ZT(n,h)")
    p.add_argument("n", type=int)
    p.add_argument("h", type=int)
    p.add_argument("--method", choices=("direct", "cut", "closed", "all"), default="all")
    p.add_argument("--emit-graph", metavar="FILE")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_tubulene)

    p = sub.add_parser("theta", help="print the Theta*-partition of a graph")
    p.add_argument("graph")
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("orbits", help="print automorphism orbits and |Aut|")
    p.add_argument("graph")
    p.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT)
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("sweep", help="CSV of all routes for 1<=n<=N, 2<=h<=H")
    p.add_argument("n_max", type=int, metavar="N_MAX")
    p.add_argument("h_max", type=int, metavar="H_MAX")
    p.add_argument("--output", "-o", default="-")
    p.add_argument("--aut-max-vertices", type=int, default=120,
                   help="enumerate Aut only for tubulenes up to this many vertices")
    p.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        code = args.func(args, out)
    except (ParseError, OSError) as exc:
        print(f"gpindex: error: {exc}", file=err)
        return EXIT_PARSE
    except RouteMismatch as exc:
        print(f"gpindex: error: {exc}", file=err)
        return EXIT_MISMATCH
    except GPIndexError as exc:
        print(f"gpindex: error: {exc}", file=err)
        return EXIT_INVALID
    if args.timing:
        print(f"elapsed={time.perf_counter() - start:.3f}s", file=out)
    return code


if __name__ == "__main__":
    sys.exit(main())
