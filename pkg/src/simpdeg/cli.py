"""Command-line interface.

Subcommands: ``summarize`` (summary and facet-size rows), ``degrees``
(degree statistics with optional per-simplex CSV), ``distribution``
(histogram export and log-log figure), ``laplacian`` (matrix assembly and
coordinate-triplet export, small inputs only) and ``verify`` (the
cross-validation suite on seeded random complexes).

Exit codes: 0 success, 1 computation error (diagnostic on stderr),
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .analytics import (classical_degree_stats, closed_view, closure_simplices,
                        degree_distribution, facet_size_stats,
                        simplicial_degree_stats)
from .degrees import facet_degree, maximal_adjacent_simplices
from .errors import SimpdegError
from .ingest import fetch_dataset, load_dataset
from .laplacian import multi_laplacian
from .oracles import (run_alternating_route_comparison, run_classical_suite,
                      run_equivalence_suite, run_laplacian_suite)

STAT_KINDS = ("classical", "kF", "kU_star", "k_star")


def _emit(payload: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload, indent=2))
        return
    for key, value in payload.items():
        print(f"{key}: {value}")


def _cmd_summarize(args) -> int:
    K, summary = load_dataset(args.directory, args.name, mode="explicit")
    sizes = facet_size_stats(K.facets()) if K.facets() else None
    payload = summary.to_json_dict()
    if sizes is not None:
        payload["facet_sizes"] = sizes.to_json_dict()
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(summary.CSV_HEADER)
        print(summary.to_csv_row())
        if sizes is not None:
            print("max_s,mean_s,median_s,mode_s")
            print(f"{sizes.max_s},{sizes.mean_s:.2f},{sizes.median_s},{sizes.mode_s}")
    return 0


def _write_per_simplex_csv(K, q, kind, enumeration, include_self, path) -> None:
    KC = closed_view(K)
    population = closure_simplices(KC, q) if enumeration == "closure" \
        else tuple(sorted(s for s in KC.generators if len(s) == q + 1))
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("simplex,dim,kind,params,value\n")
        for s in population:
            if kind == "kU_star":
                value = facet_degree(KC, s, include_self=include_self)
            else:
                value = len(maximal_adjacent_simplices(KC, s, None)) \
                    + facet_degree(KC, s, include_self=include_self)
            label = "|".join(str(x) for x in KC.labels(s))
            fh.write(f"{label},{q},{kind},enumeration={enumeration},{value}\n")


def _cmd_degrees(args) -> int:
    K, _summary = load_dataset(args.directory, args.name, mode="explicit")
    payload: dict = {"dataset": args.name, "kind": args.kind}
    if args.kind in ("classical", "kF"):
        k_stats, kf_stats = classical_degree_stats(K, edge_mode=args.edge_mode)
        stats = k_stats if args.kind == "classical" else kf_stats
    else:
        if args.q is None:
            print("error: --q is required for per-dimension kinds", file=sys.stderr)
            return 2
        stats = simplicial_degree_stats(
            K, args.q, args.kind, enumeration=args.mode,
            include_self=not args.strict_self, threads=args.threads)
        if args.per_simplex:
            _write_per_simplex_csv(K, args.q, args.kind, args.mode,
                                   not args.strict_self, args.per_simplex)
            payload["per_simplex_csv"] = str(args.per_simplex)
    payload.update(stats.to_json_dict())
    _emit(payload, args.json)
    return 0


def _cmd_distribution(args) -> int:
    from .plotting import emit_plot
    K, _summary = load_dataset(args.directory, args.name, mode="explicit")
    kind = {"classical": "classical_k", "kF": "node_to_facets_kF"}.get(args.kind, args.kind)
    dist = degree_distribution(K, kind, q=args.q, enumeration=args.mode,
                               edge_mode=args.edge_mode,
                               include_self=not args.strict_self,
                               threads=args.threads)
    payload: dict = {"dataset": args.name, "kind": args.kind,
                     "support": len(dist.support()),
                     "total_probability": sum(dist.normalized.values())}
    if args.plot:
        csv_path, svg_path = emit_plot(dist, args.plot,
                                       title=f"{args.name} {args.kind}")
        payload["csv"] = str(csv_path)
        payload["svg"] = str(svg_path)
    elif args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("degree,probability\n")
            for d in dist.support():
                fh.write(f"{d},{dist.normalized[d]!r}\n")
        payload["csv"] = str(args.csv)
    _emit(payload, args.json)
    return 0


def _cmd_laplacian(args) -> int:
    K, _summary = load_dataset(args.directory, args.name, mode="closed")
    needed = {args.q, args.q + args.h, args.q - args.hp}
    for d in needed:
        if d < 0 or d > K.dim:
            continue
        n = len(K.simplices(d))
        if n > args.max_matrix_simplices:
            print(f"error: dimension {d} holds {n} simplices, above the cap "
                  f"{args.max_matrix_simplices} (raise --max-matrix-simplices)",
                  file=sys.stderr)
            return 1
    trip = multi_laplacian(K, args.q, args.h, args.hp)
    part = {"full": trip.full, "upper": trip.upper, "lower": trip.lower}[args.part]
    labels = dict(enumerate(K.vertex_labels))
    part.write_text(args.export, name=f"laplacian_{args.part}",
                    params={"q": args.q, "h": args.h, "hp": args.hp},
                    labels=labels)
    _emit({"dataset": args.name, "q": args.q, "h": args.h, "hp": args.hp,
           "part": args.part, "shape": list(part.shape), "nnz": part.nnz,
           "export": str(args.export)}, args.json)
    return 0


def _cmd_verify(args) -> int:
    res = run_equivalence_suite(seed=args.seed, n_complexes=args.complexes)
    lap = run_laplacian_suite(seed=args.seed, n_complexes=args.complexes)
    cls = run_classical_suite(seed=args.seed, n_complexes=args.complexes)
    total_checks = res.checks + lap.checks + cls.checks
    mismatches = res.mismatches + lap.mismatches + cls.mismatches
    print(f"degree equivalence: {res.checks} checks")
    print(f"laplacian entries: {lap.checks} checks")
    print(f"classical specializations: {cls.checks} checks")
    if args.include_alternating:
        alt = run_alternating_route_comparison(seed=args.seed, n_complexes=args.complexes)
        print(f"alternating-route comparison: {alt.checks} checks, "
              f"{len(alt.mismatches)} known-inexact")
    for m in mismatches[:20]:
        print(f"MISMATCH {m}", file=sys.stderr)
    print(f"{len(mismatches)} mismatches ({total_checks} checks)")
    return 0 if not mismatches else 1


def _cmd_fetch(args) -> int:
    dest = fetch_dataset(args.name, args.directory, base_url=args.url)
    _emit({"dataset": args.name, "directory": str(dest)}, args.json)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simpdeg",
        description="Simplicial complexes, higher-order degrees and "
                    "multi-parameter Laplacians over simplex-stream datasets.")
    parser.add_argument("--threads", type=int, default=1,
                        help="parallel workers for per-simplex degree evaluation")
    parser.add_argument("--max-matrix-simplices", type=int, default=5000,
                        help="per-dimension basis cap for matrix assembly")
    parser.add_argument("--json", action="store_true", help="JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("summarize", help="dataset summary and facet size rows")
    p.add_argument("directory")
    p.add_argument("name")
    p.set_defaults(func=_cmd_summarize)

    p = sub.add_parser("degrees", help="degree statistics for one kind")
    p.add_argument("directory")
    p.add_argument("name")
    p.add_argument("--kind", choices=STAT_KINDS, required=True)
    p.add_argument("--q", type=int, default=None, help="simplex dimension")
    p.add_argument("--mode", choices=("closure", "explicit"), default="closure",
                   help="population enumeration for per-dimension kinds")
    p.add_argument("--edge-mode", choices=("closure", "explicit"), default="closure",
                   help="edge counting mode for the classical degree")
    p.add_argument("--strict-self", action="store_true",
                   help="do not count a facet as containing itself")
    p.add_argument("--per-simplex", type=Path, default=None,
                   help="write per-simplex values to this CSV")
    p.set_defaults(func=_cmd_degrees)

    p = sub.add_parser("distribution", help="degree distribution export/plot")
    p.add_argument("directory")
    p.add_argument("name")
    p.add_argument("--kind", choices=STAT_KINDS, required=True)
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--mode", choices=("closure", "explicit"), default="closure")
    p.add_argument("--edge-mode", choices=("closure", "explicit"), default="closure")
    p.add_argument("--strict-self", action="store_true")
    p.add_argument("--plot", type=Path, default=None, help="SVG output path")
    p.add_argument("--csv", type=Path, default=None, help="CSV-only output path")
    p.set_defaults(func=_cmd_distribution)

    p = sub.add_parser("laplacian", help="assemble and export one Laplacian")
    p.add_argument("directory")
    p.add_argument("name")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--hp", type=int, required=True)
    p.add_argument("--part", choices=("full", "upper", "lower"), default="full")
    p.add_argument("--export", type=Path, required=True)
    p.set_defaults(func=_cmd_laplacian)

    p = sub.add_parser("verify", help="run the cross-validation suite")
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--complexes", type=int, default=50)
    p.add_argument("--include-alternating", action="store_true",
                   help="also report the alternating strict-upper route, "
                        "which is exact only for bouquet-like stars")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("fetch", help="download and cache a dataset")
    p.add_argument("name")
    p.add_argument("directory")
    p.add_argument("--url", default=None, help="base URL (default: SIMPDEG_DATA_URL)")
    p.set_defaults(func=_cmd_fetch)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SimpdegError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
