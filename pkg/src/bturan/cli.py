"""Command-line front end: solving, lookups, construction checks, family
enumeration, the small-trees table, balanced cuts, ratio reports, and the
persistent result cache.

Exit codes: 0 success, 2 usage error, 3 budget exhausted, 4 verification
failure, 5 I/O error.  Flags beat the WORKBENCH_CACHE / WORKBENCH_THREADS
environment variables, which beat built-in defaults.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import __version__, cache as cache_mod
from .constructions import (
    build_construction,
    claimed_edge_count,
    declared_target,
    expected_connected,
    parse_spec,
)
from .embedding import find_embedding
from .general import GgfParseError, parse_general
from .graphs import is_connected, serialize_bgf
from .maxcut import bipartite_subgraph_from_cut, cut_guarantee, switch_to_large_cut
from .patterns import (
    TreeFamily,
    enumerate_trees_by_parts,
    exbc_defined,
    parse_target,
)
from .ratios import (
    RatioParams,
    build_ratio_construction,
    finite_ratio,
    gamma_bc_lower,
    gamma_cross_lower,
    x0,
)
from .registry import lookup as registry_lookup, witness_graph
from .solver import SolverConfig, solve

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_VERIFY = 4
EXIT_IO = 5

GRAMMAR_HELP = """\
pattern literals:
  P5          path on 5 vertices          K2         single edge
  K1,4        star with 4 leaves          D2,2       double star
  S3,1,1      spider by leg lengths       S2,3*1     3*1 = three unit legs
  Prst:1,1,2  caterpillar (3-vertex spine with 1,1,2 leaves)
  T3,3        every tree with part sizes 3 and 3 (family)
  U(P3,K2)    disjoint union              E:0-1,1-2  explicit forest edges

construction literals:  kind(params), e.g. theta(7), circulant(6,3),
  disjoint_double_biclique(2,6,6), spider_blocks(9,2), star_plus(5,7,3)

graph text formats: bipartite (BGF) "a b" header then one "i j" line per
edge, 0-based, lex-sorted; general graphs use a single vertex-count header.
"""

# trees of orders 4, 5, 6 shown in the small-trees table
TABLE_TREES = [
    "P4", "K1,3",
    "P5", "K1,4", "S2,1,1",
    "P6", "K1,5", "S3,1,1", "S2,2,1", "S2,1,1,1", "D2,2",
]


def _env_int(name: str) -> int | None:
    raw = os.environ.get(name)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        return None


def _cache_path(args) -> str:
    if getattr(args, "cache", None):
        return args.cache
    return os.environ.get("WORKBENCH_CACHE", "bturan-cache.jsonl")


def _threads(args) -> int:
    if getattr(args, "threads", None):
        return args.threads
    return _env_int("WORKBENCH_THREADS") or 1


def _emit(report: dict, fmt: str, text_lines: list[str], csv_rows: list | None = None):
    if fmt == "json":
        print(json.dumps(report))
    elif fmt == "csv" and csv_rows is not None:
        buf = io.StringIO()
        writer = csv.writer(buf, quoting=csv.QUOTE_NONNUMERIC)
        for row in csv_rows:
            writer.writerow(row)
        sys.stdout.write(buf.getvalue())
    else:
        for line in text_lines:
            print(line)


def _host_sizes(args) -> tuple[int, int]:
    if args.n is not None:
        if args.a is not None or args.b is not None:
            raise ValueError("give either --n or --a/--b, not both")
        return args.n, args.n
    if args.a is None or args.b is None:
        raise ValueError("host sizes required: --n N or --a A --b B")
    return args.a, args.b


def cmd_solve(args) -> int:
    a, b = _host_sizes(args)
    target = parse_target(args.pattern)
    cfg = SolverConfig(
        variant=args.variant,
        memo_capacity=args.memo_capacity,
        node_budget=args.node_budget,
        thread_budget=_threads(args),
        enumerate_extremal=args.enumerate,
        use_registry_seed=not args.no_seed,
    )
    res = solve(a, b, target, cfg)
    report = {
        "command": "solve",
        "a": res.a,
        "b": res.b,
        "pattern": res.target_name,
        "variant": res.variant,
        "status": res.status,
        "value": res.value,
        "certificate_bgf": serialize_bgf(res.certificate),
        "extremal_count": len(res.all_extremal) if res.all_extremal is not None else None,
        "stats": {
            "nodes": res.stats.nodes,
            "memo_hits": res.stats.memo_hits,
            "wall_time_s": round(res.stats.wall_time, 6),
        },
        "tool_version": __version__,
    }
    lines = [
        f"ex_{res.variant}({a},{b},{res.target_name}) = {res.value} [{res.status}]",
        f"nodes={res.stats.nodes} memo_hits={res.stats.memo_hits} "
        f"time={res.stats.wall_time:.2f}s",
        "certificate:",
        serialize_bgf(res.certificate).rstrip("\n"),
    ]
    if res.all_extremal is not None:
        lines.insert(1, f"extremal graphs (up to isomorphism): {len(res.all_extremal)}")
    csv_rows = [
        ["a", "b", "pattern", "variant", "status", "value"],
        [a, b, res.target_name, res.variant, res.status, res.value],
    ]
    _emit(report, args.format, lines, csv_rows)
    if not args.no_cache:
        try:
            cache_mod.append_record(_cache_path(args), cache_mod.record_from_result(res))
        except OSError as exc:
            print(f"cache write failed: {exc}", file=sys.stderr)
            return EXIT_IO
    return EXIT_OK if res.exact else EXIT_BUDGET


def cmd_lookup(args) -> int:
    a, b = _host_sizes(args)
    target = parse_target(args.pattern)
    res = registry_lookup(target, a, b, args.variant)
    wit = witness_graph(res)
    report = {
        "command": "lookup",
        "a": a,
        "b": b,
        "pattern": target.name,
        "variant": args.variant,
        "kind": res.tag,
        "lo": res.lo,
        "hi": res.hi,
        "citations": list(res.citations),
        "witness": res.witness.name if res.witness else None,
        "witness_edges": wit.edge_count if wit else None,
    }
    lines = [
        f"lookup ex_{args.variant}({a},{b},{target.name}): {res.describe()}",
        f"citations: {', '.join(res.citations) or '-'}",
    ]
    if res.witness:
        lines.append(
            f"witness: {res.witness.name}"
            + (f" ({wit.edge_count} edges, verified)" if wit else " (unverified)")
        )
    if res.notes:
        lines.append(f"note: {res.notes}")
    _emit(report, args.format, lines)
    return EXIT_OK


def cmd_verify_construction(args) -> int:
    cs = parse_spec(args.spec)
    g = build_construction(cs)
    claimed = claimed_edge_count(cs)
    target = parse_target(args.target) if args.target else declared_target(cs)
    if target is None:
        raise ValueError(f"{cs.name} has no declared target; pass --target")
    emb = find_embedding(g, target) if not isinstance(target, TreeFamily) else None
    if isinstance(target, TreeFamily):
        from .embedding import contains

        free = not contains(g, target)
    else:
        free = emb is None
    want_conn = expected_connected(cs)
    conn = is_connected(g)
    conn_ok = want_conn is None or conn == want_conn
    ok = free and g.edge_count == claimed and conn_ok
    report = {
        "command": "verify-construction",
        "spec": cs.name,
        "target": target.name,
        "edges": g.edge_count,
        "claimed": claimed,
        "free": free,
        "connected": conn,
        "ok": ok,
        "witness_embedding": list(emb.assignment) if emb else None,
    }
    lines = [
        f"{cs.name} vs {target.name}: edges={g.edge_count} claimed={claimed} "
        f"free={free} connected={conn} -> {'OK' if ok else 'FAIL'}"
    ]
    if emb is not None:
        lines.append(f"witness embedding: {list(emb.assignment)}")
    _emit(report, args.format, lines)
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_family(args) -> int:
    members = enumerate_trees_by_parts(args.k, args.l, cap=args.cap)
    report = {
        "command": "family",
        "k": args.k,
        "l": args.l,
        "count": len(members),
        "members": [
            {"name": m.name, "edges": [list(e) for e in m.edges], "parts": [m.p, m.q]}
            for m in members
        ],
    }
    lines = [f"T({args.k},{args.l}): {len(members)} trees"]
    lines += [f"  {m.name}" for m in members]
    _emit(report, args.format, lines)
    return EXIT_OK


def _table_rows(max_n: int, cfg_base: dict) -> list[dict]:
    rows = []
    for lit in TABLE_TREES:
        tree = parse_target(lit)
        for variant in ("b", "bc"):
            if variant == "bc" and not exbc_defined(tree):
                for n in range(2, max_n + 1):
                    rows.append(
                        {"tree": lit, "n": n, "variant": variant,
                         "registry": "-", "solver": None, "verdict": "UNDEFINED"}
                    )
                continue
            for n in range(2, max_n + 1):
                reg = registry_lookup(tree, n, n, variant)
                try:
                    res = solve(n, n, tree, SolverConfig(variant=variant, **cfg_base))
                    value = res.value if res.exact else None
                except Exception:
                    value = None
                if value is None:
                    verdict = "INCONCLUSIVE"
                elif reg.tag == "infeasible":
                    verdict = "DEGENERATE" if value == n * n else "MISMATCH"
                elif reg.tag == "exact":
                    verdict = "MATCH" if value == reg.lo else "MISMATCH"
                elif reg.tag == "range":
                    verdict = (
                        "BOUNDS-CONSISTENT" if reg.lo <= value <= reg.hi else "MISMATCH"
                    )
                else:
                    verdict = "UNKNOWN"
                rows.append(
                    {"tree": lit, "n": n, "variant": variant,
                     "registry": reg.describe(), "solver": value, "verdict": verdict}
                )
    return rows


def cmd_table(args) -> int:
    cfg_base = dict(
        memo_capacity=args.memo_capacity,
        node_budget=args.node_budget,
    )
    rows = _table_rows(args.max_n, cfg_base)
    report = {"command": "table", "max_n": args.max_n, "rows": rows}
    lines = [f"{'tree':10s} {'n':>2s} {'var':3s} {'registry':12s} {'solver':>6s} verdict"]
    for r in rows:
        sv = "-" if r["solver"] is None else str(r["solver"])
        lines.append(
            f"{r['tree']:10s} {r['n']:2d} {r['variant']:3s} "
            f"{r['registry']:12s} {sv:>6s} {r['verdict']}"
        )
    csv_rows = [["tree", "n", "variant", "registry", "solver", "verdict"]] + [
        [r["tree"], r["n"], r["variant"], r["registry"],
         -1 if r["solver"] is None else r["solver"], r["verdict"]]
        for r in rows
    ]
    _emit(report, args.format, lines, csv_rows)
    bad = [r for r in rows if r["verdict"] == "MISMATCH"]
    return EXIT_VERIFY if bad else EXIT_OK


def cmd_cut(args) -> int:
    if args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            print(f"cannot read {args.input}: {exc}", file=sys.stderr)
            return EXIT_IO
    g = parse_general(text)
    cut = switch_to_large_cut(g)
    bip = bipartite_subgraph_from_cut(g, cut)
    report = {
        "command": "cut",
        "vertices": g.n,
        "edges": g.edge_count,
        "cut_size": cut.cut_size,
        "guarantee": cut_guarantee(g),
        "sides": list(cut.sides),
        "bipartite_bgf": serialize_bgf(bip),
    }
    lines = [
        f"balanced cut: {cut.cut_size} of {g.edge_count} edges "
        f"(guaranteed >= {cut_guarantee(g)})",
        "sides: " + "".join(map(str, cut.sides)),
        "bipartite subgraph:",
        serialize_bgf(bip).rstrip("\n"),
    ]
    _emit(report, args.format, lines)
    return EXIT_OK


def cmd_ratio(args) -> int:
    rows = []
    if args.tree:
        tree = parse_target(args.tree)
        if isinstance(tree, TreeFamily):
            raise ValueError("ratio reports need a single tree, not a family")
        for n in args.n or []:
            rep = finite_ratio(tree, n, args.variant, args.source)
            rows.append(
                {"tree": rep.tree, "n": rep.n, "variant": rep.variant,
                 "source": rep.source, "edges": rep.edges, "ratio": rep.ratio}
            )
    report = {
        "command": "ratio",
        "constants": {
            "x0": x0(),
            "gamma_bc_lower": gamma_bc_lower(),
            "gamma_cross_lower": gamma_cross_lower(),
        },
        "rows": rows,
    }
    lines = [
        f"x0 = {x0():.12f}   gamma_bc >= {gamma_bc_lower():.6f}   "
        f"gamma_cross >= {gamma_cross_lower():.6f}"
    ]
    for r in rows:
        lines.append(
            f"{r['tree']} n={r['n']} {r['variant']}/{r['source']}: "
            f"{r['edges']} edges, ratio {r['ratio']:.6f}"
        )
    csv_rows = [["tree", "n", "variant", "source", "edges", "ratio"]] + [
        [r["tree"], r["n"], r["variant"], r["source"], r["edges"], r["ratio"]]
        for r in rows
    ]
    _emit(report, args.format, lines, csv_rows)
    return EXIT_OK


def cmd_ratio_build(args) -> int:
    params = RatioParams(c=args.c, p=args.p, k=args.k, n=args.n)
    g = build_ratio_construction(args.kind, params)
    sys.stdout.write(serialize_bgf(g))
    return EXIT_OK


def cmd_construct(args) -> int:
    cs = parse_spec(args.spec)
    g = build_construction(cs)
    if args.format == "json":
        print(json.dumps({
            "command": "construct",
            "spec": cs.name,
            "edges": g.edge_count,
            "bgf": serialize_bgf(g),
        }))
    else:
        sys.stdout.write(serialize_bgf(g))
    return EXIT_OK


def cmd_cache(args) -> int:
    path = _cache_path(args)
    action = args.action
    try:
        if action == "list":
            records, errors = cache_mod.load_records(path)
            report = {"command": "cache", "action": "list",
                      "records": len(records), "failures": errors}
            lines = [f"{len(records)} records ({len(errors)} unreadable lines)"]
            for rec in sorted(records.values(), key=lambda r: r.key):
                lines.append(
                    f"  ex_{rec.variant}({rec.a},{rec.b},{rec.pattern}) = {rec.value} "
                    f"[{rec.status}, v{rec.tool_version}]"
                )
            _emit(report, args.format, lines)
            return EXIT_OK
        if action == "verify":
            ok, failures = cache_mod.verify_records(path)
            report = {"command": "cache", "action": "verify",
                      "records": ok, "failures": failures}
            lines = [f"{ok} certificates verified, {len(failures)} failures"]
            lines += [f"  {f}" for f in failures]
            _emit(report, args.format, lines)
            return EXIT_VERIFY if failures else EXIT_OK
        if action == "prune":
            kept, removed = cache_mod.prune_records(path)
            report = {"command": "cache", "action": "prune",
                      "records": kept, "failures": [], "removed": removed}
            _emit(report, args.format, [f"kept {kept}, removed {removed}"])
            return EXIT_OK
    except FileNotFoundError:
        print(f"cache file not found: {path}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"cache I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    raise ValueError(f"unknown cache action {action!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bturan",
        description=__doc__,
        epilog=GRAMMAR_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, cache_flag=True):
        p.add_argument("--format", choices=["json", "csv", "text"], default="text")
        if cache_flag:
            p.add_argument("--cache", help="cache file (default $WORKBENCH_CACHE)")

    p = sub.add_parser("solve", help="exact value with certificate")
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--n", type=int, help="balanced host shorthand")
    p.add_argument("--pattern", required=True)
    p.add_argument("--variant", choices=["b", "bc"], default="b")
    p.add_argument("--enumerate", action="store_true",
                   help="collect all extremal graphs up to isomorphism")
    p.add_argument("--node-budget", type=int, default=20_000_000)
    p.add_argument("--memo-capacity", type=int, default=1_500_000)
    p.add_argument("--threads", type=int, help="default $WORKBENCH_THREADS")
    p.add_argument("--no-seed", action="store_true",
                   help="skip the registry construction seed")
    p.add_argument("--no-cache", action="store_true")
    add_common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("lookup", help="catalog value/bounds with citation")
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--pattern", required=True)
    p.add_argument("--variant", choices=["b", "bc"], default="b")
    add_common(p, cache_flag=False)
    p.set_defaults(func=cmd_lookup)

    p = sub.add_parser("verify-construction", help="freeness + edge count check")
    p.add_argument("--spec", required=True, help='e.g. "theta(7)"')
    p.add_argument("--target", help="pattern literal (default: declared target)")
    add_common(p, cache_flag=False)
    p.set_defaults(func=cmd_verify_construction)

    p = sub.add_parser("family", help="enumerate trees by part sizes")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--cap", type=int, default=12)
    add_common(p, cache_flag=False)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("table", help="small trees: catalog vs solver")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--node-budget", type=int, default=20_000_000)
    p.add_argument("--memo-capacity", type=int, default=1_500_000)
    add_common(p, cache_flag=False)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("cut", help="balanced cut of a general graph")
    p.add_argument("--input", default="-", help="file or - for stdin")
    add_common(p, cache_flag=False)
    p.set_defaults(func=cmd_cut)

    p = sub.add_parser("ratio", help="ratio constants and finite-size reports")
    p.add_argument("--tree")
    p.add_argument("--n", type=int, action="append")
    p.add_argument("--variant", choices=["b", "bc"], default="b")
    p.add_argument("--source", choices=["solver", "registry", "witness"],
                   default="solver")
    add_common(p, cache_flag=False)
    p.set_defaults(func=cmd_ratio)

    p = sub.add_parser("ratio-build", help="emit a worst-case-ratio construction")
    p.add_argument("--kind", type=int, choices=[1, 2, 3], required=True)
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_ratio_build)

    p = sub.add_parser("construct", help="build a named construction as BGF")
    p.add_argument("--spec", required=True)
    add_common(p, cache_flag=False)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("cache", help="inspect the persistent result cache")
    p.add_argument("action", choices=["list", "verify", "prune"])
    add_common(p)
    p.set_defaults(func=cmd_cache)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, GgfParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
