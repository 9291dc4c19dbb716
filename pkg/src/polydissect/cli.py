"""Command-line front end: count, table, verify and render subcommands."""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .arrangement import CountSummary, count_vertices, counts, split_all_fast
from .errors import GeometryError
from .geom import DEFAULT_FUZZ, Tolerance
from .planar import build_graph
from .polygon import PolygonSpec, base_segments
from .render import RenderOptions, render_svg

MAX_N = 64
REFERENCE_MAX_N = 39

# Published (F, E) reference counts for n = 2..39 (N = 4..78). V, per_ray
# and central are derived: V = E - F + 1, F = N*per_ray + central.
_REFERENCE_F_E = [
    (1, 4),            # n = 2
    (6, 12),           # n = 3
    (25, 48),          # n = 4
    (50, 80),          # n = 5
    (145, 276),        # n = 6
    (224, 378),        # n = 7
    (497, 960),        # n = 8
    (630, 1062),       # n = 9
    (1281, 2500),      # n = 10
    (1606, 2860),      # n = 11
    (2761, 5424),      # n = 12
    (3302, 5980),      # n = 13
    (5265, 10388),     # n = 14
    (5940, 10770),     # n = 15
    (9185, 18176),     # n = 16
    (10472, 19482),    # n = 17
    (14977, 29700),    # n = 18
    (16834, 31616),    # n = 19
    (23161, 46000),    # n = 20
    (25284, 47460),    # n = 21
    (34321, 68244),    # n = 22
    (37720, 71714),    # n = 23
    (49105, 97728),    # n = 24
    (53500, 102150),   # n = 25
    (68225, 135876),   # n = 26
    (73278, 140076),   # n = 27
    (92457, 184240),   # n = 28
    (99470, 191284),   # n = 29
    (122641, 244500),  # n = 30
    (131316, 253270),  # n = 31
    (159681, 318464),  # n = 32
    (169158, 326238),  # n = 33
    (204545, 408068),  # n = 34
    (217210, 420840),  # n = 35
    (258265, 515376),  # n = 36
    (273282, 530432),  # n = 37
    (321937, 642580),  # n = 38
    (338208, 656526),  # n = 39
]


@dataclass(frozen=True)
class ReferenceRow:
    n: int
    N: int
    F: int
    E: int
    V: int
    per_ray: int
    central: int


@dataclass(frozen=True)
class VerifyRow:
    n: int
    computed: CountSummary
    reference: ReferenceRow
    match: bool
    elapsed: float


@dataclass(frozen=True)
class VerifyReport:
    rows: list[VerifyRow]
    all_match: bool


def reference_table() -> list[ReferenceRow]:
    """The 38 published (n, F, E) rows with their derived columns."""
    rows = []
    for i, (f, e) in enumerate(_REFERENCE_F_E):
        n = i + 2
        central = 1 if n % 2 == 0 else 0
        rows.append(ReferenceRow(n=n, N=2 * n, F=f, E=e, V=e - f + 1,
                                 per_ray=(f - central) // (2 * n), central=central))
    return rows


def _count_one(payload: tuple[int, float]) -> tuple[int, CountSummary, float]:
    n, fuzz = payload
    start = time.perf_counter()
    summary = counts(PolygonSpec(n), Tolerance(fuzz))
    return n, summary, time.perf_counter() - start


def _count_range(ns: list[int], tol: Tolerance, jobs: int):
    payloads = [(n, tol.point_fuzzy) for n in ns]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_count_one, payloads))
    return [_count_one(p) for p in payloads]


def _summary_dict(s: CountSummary) -> dict:
    return {"N": s.N, "n": s.n, "F": s.F, "E": s.E, "V": s.V,
            "per_ray": s.per_ray, "central": s.central}


def verify(max_n: int, tol: Tolerance = Tolerance(), jobs: int = 1) -> VerifyReport:
    """Recompute n = 2..max_n and diff against the reference table."""
    reference = {r.n: r for r in reference_table()}
    rows = []
    for n, summary, elapsed in _count_range(list(range(2, max_n + 1)), tol, jobs):
        ref = reference[n]
        match = summary.V == ref.V and summary.E == ref.E and summary.F == ref.F
        rows.append(VerifyRow(n=n, computed=summary, reference=ref,
                              match=match, elapsed=elapsed))
    return VerifyReport(rows=rows, all_match=all(r.match for r in rows))


def cmd_count(n: int, tol: Tolerance, as_json: bool = False, stream=None) -> int:
    stream = stream or sys.stdout
    summary = counts(PolygonSpec(n), tol)
    if as_json:
        json.dump(_summary_dict(summary), stream)
        stream.write("\n")
    else:
        suffix = "" if n <= REFERENCE_MAX_N else " (unverified)"
        stream.write(f"{summary.E} edges {summary.V} vertices {summary.F} tiles{suffix}\n")
        stream.write(f"{summary.per_ray} tiles per ray, {summary.central} central\n")
    return 0


def cmd_verify(max_n: int, tol: Tolerance, jobs: int = 1, stream=None) -> int:
    stream = stream or sys.stdout
    report = verify(max_n, tol, jobs)
    for row in report.rows:
        status = "ok" if row.match else "MISMATCH"
        c = row.computed
        stream.write(f"n={row.n:2d} N={2 * row.n:2d}  E={c.E:7d}  V={c.V:7d}  F={c.F:7d}"
                     f"  {status}  ({row.elapsed:.2f}s)\n")
        if not row.match:
            r = row.reference
            stream.write(f"    expected E={r.E} V={r.V} F={r.F}\n")
    if report.all_match:
        stream.write(f"all {len(report.rows)} rows match the reference tables\n")
        return 0
    bad = sum(1 for r in report.rows if not r.match)
    stream.write(f"{bad} of {len(report.rows)} rows MISMATCH\n")
    return 5


def cmd_table(max_n: int, fmt: str, tol: Tolerance, jobs: int = 1, stream=None) -> int:
    stream = stream or sys.stdout
    results = _count_range(list(range(2, max_n + 1)), tol, jobs)
    summaries = [s for _, s, _ in results]
    if fmt == "csv":
        stream.write("N,n,F,E,V,per_ray,central\n")
        for s in summaries:
            stream.write(f"{s.N},{s.n},{s.F},{s.E},{s.V},{s.per_ray},{s.central}\n")
    elif fmt == "json":
        json.dump([_summary_dict(s) for s in summaries], stream, indent=2)
        stream.write("\n")
    else:
        stream.write(f"{'N':>4} {'n':>4} {'F':>8} {'E':>8} {'V':>8} {'per_ray':>8} {'central':>8}\n")
        for s in summaries:
            stream.write(f"{s.N:>4} {s.n:>4} {s.F:>8} {s.E:>8} {s.V:>8}"
                         f" {s.per_ray:>8} {s.central:>8}\n")
    return 0


def cmd_render(n: int, out_path: str, opts: RenderOptions,
               tol: Tolerance, stream=None) -> int:
    stream = stream or sys.stdout
    base = base_segments(PolygonSpec(n))
    split = split_all_fast(base, tol)
    graph = None
    if opts.color_faces or opts.label_orbits:
        graph = build_graph(split, tol)
    document = render_svg(split, graph, opts, tol)
    try:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(document)
    except OSError as exc:
        print(f"error: cannot write {out_path}: {exc}", file=sys.stderr)
        return 4
    e = len(split)
    v = count_vertices(split, tol)
    stream.write(f"{e} edges {v} vertices {1 + e - v} tiles -> {out_path}\n")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polydissect",
        description="Dissect the regular 2n-gon by its side-parallel diagonals "
                    "and count vertices, edges and tiles.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_fuzz(p):
        p.add_argument("--fuzz", type=float, default=DEFAULT_FUZZ,
                       help="point identity threshold (default 1e-10)")

    p_count = sub.add_parser("count", help="count V, E, F for one polygon")
    p_count.add_argument("--n", type=int, required=True, help="half the side count")
    add_fuzz(p_count)
    p_count.add_argument("--json", action="store_true", dest="as_json",
                         help="emit a JSON object instead of text")

    p_table = sub.add_parser("table", help="tabulate counts for n = 2..max-n")
    p_table.add_argument("--max-n", type=int, required=True, dest="max_n")
    p_table.add_argument("--format", required=True, choices=("text", "csv", "json"))
    add_fuzz(p_table)
    p_table.add_argument("--jobs", type=int, default=1, help="parallel workers")

    p_verify = sub.add_parser("verify", help="check counts against the reference tables")
    p_verify.add_argument("--max-n", type=int, required=True, dest="max_n")
    add_fuzz(p_verify)
    p_verify.add_argument("--jobs", type=int, default=1, help="parallel workers")

    p_render = sub.add_parser("render", help="write an SVG figure of the dissection")
    p_render.add_argument("--n", type=int, required=True)
    p_render.add_argument("--out", required=True, help="output SVG path")
    p_render.add_argument("--faces", action="store_true", help="fill tiles, one color per orbit")
    p_render.add_argument("--zoom", help="clip window as x0,y0,x1,y1 in unit-circle units")
    p_render.add_argument("--scale", type=float, default=400.0,
                          help="canvas units per unit-circle radius")
    add_fuzz(p_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    try:
        tol = Tolerance(args.fuzz)
    except ValueError as exc:
        parser.error(str(exc))

    try:
        if args.command == "count":
            if not 2 <= args.n <= MAX_N:
                parser.error(f"--n must be in 2..{MAX_N}")
            return cmd_count(args.n, tol, as_json=args.as_json)
        if args.command == "table":
            if not 2 <= args.max_n <= REFERENCE_MAX_N:
                parser.error(f"--max-n must be in 2..{REFERENCE_MAX_N}")
            if args.jobs < 1:
                parser.error("--jobs must be at least 1")
            return cmd_table(args.max_n, args.format, tol, jobs=args.jobs)
        if args.command == "verify":
            if not 2 <= args.max_n <= REFERENCE_MAX_N:
                parser.error(f"--max-n must be in 2..{REFERENCE_MAX_N}")
            if args.jobs < 1:
                parser.error("--jobs must be at least 1")
            return cmd_verify(args.max_n, tol, jobs=args.jobs)
        if args.command == "render":
            if not 2 <= args.n <= MAX_N:
                parser.error(f"--n must be in 2..{MAX_N}")
            zoom = None
            if args.zoom:
                try:
                    parts = [float(v) for v in args.zoom.split(",")]
                except ValueError:
                    parts = []
                if len(parts) != 4:
                    parser.error("--zoom expects four numbers: x0,y0,x1,y1")
                zoom = tuple(parts)
            try:
                opts = RenderOptions(scale=args.scale, color_faces=args.faces, zoom=zoom)
            except ValueError as exc:
                parser.error(str(exc))
            return cmd_render(args.n, args.out, opts, tol)
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    raise AssertionError(f"unhandled command {args.command!r}")


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
