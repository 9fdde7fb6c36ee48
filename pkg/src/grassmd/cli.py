"""Command-line surface.

Conventions: diagnostics go to stderr, data (files, tables, JSON) to
stdout; exit 0 on success, 1 when a verification-style command finds a
negative answer, 2 on bad usage or out-of-budget requests.  `-f -` reads
the family from stdin so constructions pipe straight into `verify`.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import acceptance as acceptance_mod
from .bounds import CSV_HEADER, babai_strong, compare, csv_row, lower_bound
from .constructions import (
    build_mixed_partition,
    build_spread,
    resolving_from_partition,
    resolving_from_spread,
    resolving_greedy_rank,
)
from .errors import BudgetExceeded, GrassmdError
from .famfile import format_family, parse_family
from .gfq import field_new
from .grassmann import GrassmannGraph, edge_list, is_resolving
from .rank import certify_resolving_by_rank, exact_rank, incidence_matrix
from .rank import verify_gram as rank_verify_gram
from .search import DEFAULT_EXACT_LIMIT, metric_dimension_exact, metric_dimension_greedy
from .subspaces import SubspaceFamily, enumerate_k_subspaces, gaussian_binomial


def _emit(text: str, path: str | None):
    if path and path != "-":
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read_family_arg(path: str):
    if path == "-":
        return parse_family(sys.stdin.read())
    with open(path) as fh:
        return parse_family(fh.read())


def _cmd_binom(args) -> int:
    value = gaussian_binomial(args.n, args.k, args.q)
    if args.json:
        print(json.dumps({"command": "binom", "n": args.n, "k": args.k,
                          "q": args.q, "value": value}))
    else:
        print(value)
    return 0


def _cmd_graph(args) -> int:
    ctx = field_new(args.q)
    g = GrassmannGraph(ctx, args.n, args.k)
    edges = edge_list(g)
    header = {"q": args.q, "n": args.n, "k": args.k,
              "vertices": len(g), "edges": len(edges)}
    lines = [json.dumps(header)]
    lines.extend(f"{u} {v}" for u, v in edges)
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def _cmd_spread(args) -> int:
    ctx = field_new(args.q)
    sp = build_spread(ctx, args.n, args.t)
    text = format_family(args.q, args.n, args.t, sp.members,
                         comments=[f"{args.t}-spread of V({args.n},{args.q})"])
    _emit(text, args.output)
    return 0


def _cmd_partition(args) -> int:
    ctx = field_new(args.q)
    part = build_mixed_partition(ctx, args.n, args.k)
    sections = [
        format_family(args.q, args.n, args.k + 1, part.spread_part,
                      comments=[f"mixed partition of V({args.n},{args.q}), "
                                f"k={args.k}, s={part.s}, t={part.t}",
                                "spread part"]),
        format_family(args.q, args.n, part.t, part.tail_part,
                      comments=["tail part"]),
        format_family(args.q, args.n, part.Z.dim, SubspaceFamily([part.Z]),
                      comments=["joining subspace Z"]),
    ]
    _emit("".join(sections), args.output)
    return 0


def _cmd_construct(args) -> int:
    ctx = field_new(args.q)
    builders = {
        "spread": resolving_from_spread,
        "partition": resolving_from_partition,
        "greedy": resolving_greedy_rank,
    }
    fam = builders[args.method](ctx, args.n, args.k)
    text = format_family(
        args.q, args.n, args.k, fam,
        comments=[f"resolving family for G_{args.q}({args.n},{args.k}), "
                  f"method={args.method}, size={len(fam)}"])
    _emit(text, args.output)
    return 0


def _cmd_verify(args) -> int:
    ctx, n, k, fam = _read_family_arg(args.family)
    if (ctx.q, n, k) != (args.q, args.n, args.k):
        raise GrassmdError(
            f"family file is for q={ctx.q} n={n} k={k}, "
            f"arguments say q={args.q} n={args.n} k={args.k}")
    g = GrassmannGraph(ctx, n, k)
    verdict = is_resolving(fam, g)
    if args.json:
        print(json.dumps({
            "command": "verify", "q": args.q, "n": args.n, "k": args.k,
            "family_size": len(fam), "resolving": verdict.resolving,
            "collision": list(verdict.ordinals) if verdict.ordinals else None,
        }))
    elif verdict.resolving:
        print("RESOLVING")
    else:
        i, j = verdict.ordinals
        print(f"COLLISION {i} {j}")
        a, b = verdict.pair
        print(f"# vertex {i}")
        print(a.to_text())
        print(f"# vertex {j}")
        print(b.to_text())
    return 0 if verdict.resolving else 1


def _cmd_rank(args) -> int:
    if args.all is not None:
        q, n, k = args.all
        ctx = field_new(q)
        fam = SubspaceFamily(enumerate_k_subspaces(ctx, n, k))
        required = gaussian_binomial(n, 1, q)
        M = incidence_matrix(fam)
        r = exact_rank(M)
        certified = r == required
    elif args.family:
        ctx, n, k, fam = _read_family_arg(args.family)
        M = incidence_matrix(fam)
        required = gaussian_binomial(n, 1, ctx.q)
        cert = certify_resolving_by_rank(fam)
        r, certified = cert.rank, cert.certified
    else:
        print("rank: need -f FILE or --all q n k", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps({
            "command": "rank", "mode": "all" if args.all else "family",
            "rank": r, "required": required, "certified": certified,
            "m": M.m, "N": M.N,
        }))
    else:
        status = "CERTIFIED" if certified else "INCONCLUSIVE"
        print(f"{status} rank={r} required={required} shape={M.m}x{M.N}")
    return 0 if certified else 1


def _cmd_gram(args) -> int:
    from .rank import gram_closed_form

    ctx = field_new(args.q)
    ok = rank_verify_gram(ctx, args.n, args.k)
    diag, offdiag = gram_closed_form(ctx, args.n, args.k)
    if args.json:
        print(json.dumps({"command": "gram", "q": args.q, "n": args.n,
                          "k": args.k, "ok": ok, "diag": diag,
                          "offdiag": offdiag}))
    else:
        print(f"{'GRAM-OK' if ok else 'GRAM-MISMATCH'} diag={diag} offdiag={offdiag}")
    return 0 if ok else 1


def _parse_grid(spec: str) -> list:
    out = []
    for part in spec.split(","):
        trip = part.strip().split(":")
        if len(trip) != 3:
            raise GrassmdError(f"grid entries are q:n:k, got {part!r}")
        out.append(tuple(int(x) for x in trip))
    return out


def _cmd_bounds(args) -> int:
    if args.grid:
        print(CSV_HEADER)
        for q, n, k in _parse_grid(args.grid):
            print(csv_row(compare(q, n, k, args.log_base)))
        return 0
    if None in (args.q, args.n, args.k):
        print("bounds: need q n k or --grid", file=sys.stderr)
        return 2
    rep = compare(args.q, args.n, args.k, args.log_base)
    if args.json:
        print(json.dumps({"command": "bounds", **rep.to_json()}))
    else:
        print(f"G_{rep.q}({rep.n},{rep.k}): {rep.num_vertices} vertices")
        print(f"lower bound (log_k N):      {rep.lower_log:.4f}")
        print(f"upper, general:             {rep.babai_general:.4f}")
        print(f"upper, strong (M={rep.babai_M}, j={rep.babai_argmax_j}): "
              f"{rep.babai_strong:.4f}")
        print(f"upper, constructive:        {rep.constructive_bound}")
        for name, size in rep.construction_sizes.items():
            print(f"  construction size [{name}]: {size}")
        print(f"log base: {rep.log_base}")
    return 0


def _cmd_metricdim(args) -> int:
    ctx = field_new(args.q)
    g = GrassmannGraph(ctx, args.n, args.k)
    t0 = time.time()
    if args.method == "exact":
        mu, fam = metric_dimension_exact(g, args.limit)
    else:
        fam = metric_dimension_greedy(g)
        mu = None
    elapsed = time.time() - t0
    if args.json:
        print(json.dumps({
            "command": "metricdim", "method": args.method,
            "q": args.q, "n": args.n, "k": args.k,
            "size": len(fam), "mu": mu,
            "witness": [[list(r) for r in s.basis.data] for s in fam],
        }))
        return 0
    stats = (f"method={args.method} size={len(fam)} "
             f"vertices={len(g)} elapsed={elapsed:.2f}s")
    if mu is not None:
        stats = f"mu={mu} " + stats
    text = format_family(args.q, args.n, args.k, fam) + f"# {stats}\n"
    _emit(text, args.output)
    return 0


def _cmd_accept(args) -> int:
    results = acceptance_mod.run_all()
    if args.json:
        print(json.dumps({
            "command": "accept",
            "passed": all(r.passed for r in results),
            "criteria": [r.to_json() for r in results],
        }))
    else:
        width = max(len(r.title) for r in results)
        for r in results:
            mark = "PASS" if r.passed else "FAIL"
            print(f"{r.num:>2}  {r.title:<{width}}  {mark}  {r.elapsed:7.2f}s")
            if not r.passed:
                print(f"    details: {r.details}", file=sys.stderr)
        total = sum(r.elapsed for r in results)
        good = sum(1 for r in results if r.passed)
        print(f"{good}/{len(results)} criteria passed ({total:.1f}s)")
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="grassmd",
        description="Resolving sets and metric dimension of Grassmann graphs, exactly.")
    sub = p.add_subparsers(dest="cmd", required=True)

    def add_json(sp):
        sp.add_argument("--json", action="store_true", help="machine output to stdout")

    sp = sub.add_parser("binom", help="Gaussian binomial [n k]_q")
    sp.add_argument("n", type=int)
    sp.add_argument("k", type=int)
    sp.add_argument("q", type=int)
    add_json(sp)
    sp.set_defaults(fn=_cmd_binom)

    sp = sub.add_parser("graph", help="export the graph as an edge list")
    sp.add_argument("action", choices=["export"])
    sp.add_argument("q", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("k", type=int)
    sp.add_argument("-o", "--output", default=None)
    sp.set_defaults(fn=_cmd_graph)

    sp = sub.add_parser("spread", help="build a t-spread of V(n,q)")
    sp.add_argument("q", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("t", type=int)
    sp.add_argument("-o", "--output", default=None)
    sp.set_defaults(fn=_cmd_spread)

    sp = sub.add_parser("partition", help="build a {k+1,t}-partition of V(n,q)")
    sp.add_argument("q", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("k", type=int)
    sp.add_argument("-o", "--output", default=None)
    sp.set_defaults(fn=_cmd_partition)

    sp = sub.add_parser("construct", help="build a resolving family")
    sp.add_argument("method", choices=["spread", "partition", "greedy"])
    sp.add_argument("q", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("k", type=int)
    sp.add_argument("-o", "--output", default=None)
    sp.set_defaults(fn=_cmd_construct)

    sp = sub.add_parser("verify", help="check a family file is resolving")
    sp.add_argument("q", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("k", type=int)
    sp.add_argument("-f", "--family", required=True,
                    help="family file path, or - for stdin")
    add_json(sp)
    sp.set_defaults(fn=_cmd_verify)

    sp = sub.add_parser("rank", help="incidence rank and the rank certificate")
    sp.add_argument("-f", "--family", default=None,
                    help="family file path, or - for stdin")
    sp.add_argument("--all", nargs=3, type=int, metavar=("q", "n", "k"),
                    help="use all k-subspaces as the family")
    add_json(sp)
    sp.set_defaults(fn=_cmd_rank)

    sp = sub.add_parser("gram", help="entrywise Gram closed-form check")
    sp.add_argument("q", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("k", type=int)
    add_json(sp)
    sp.set_defaults(fn=_cmd_gram)

    sp = sub.add_parser("bounds", help="metric-dimension bound comparison")
    sp.add_argument("q", type=int, nargs="?")
    sp.add_argument("n", type=int, nargs="?")
    sp.add_argument("k", type=int, nargs="?")
    sp.add_argument("--grid", default=None,
                    help="comma-separated q:n:k triples; prints CSV")
    sp.add_argument("--log-base", choices=["e", "2", "10"], default="e")
    add_json(sp)
    sp.set_defaults(fn=_cmd_bounds)

    sp = sub.add_parser("metricdim", help="exact or greedy metric dimension")
    sp.add_argument("method", choices=["exact", "greedy"])
    sp.add_argument("q", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("k", type=int)
    sp.add_argument("--limit", type=int, default=DEFAULT_EXACT_LIMIT,
                    help="vertex ceiling for the exact search")
    sp.add_argument("-o", "--output", default=None)
    add_json(sp)
    sp.set_defaults(fn=_cmd_metricdim)

    sp = sub.add_parser("accept", help="run the acceptance grid")
    add_json(sp)
    sp.set_defaults(fn=_cmd_accept)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.fn(args)
    except BudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except GrassmdError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
