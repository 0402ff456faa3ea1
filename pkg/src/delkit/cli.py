"""Command-line interface.

Subcommands: count (one embedding count), distribution (weight histogram),
sweep (entropy table over all x of one length), gchain (run-merging chain
with entropies), verify (self-check suites).  Output is CSV (with leading
``# key=value`` metadata lines) or JSON; both are deterministic byte-for-byte
for a given invocation.  Exit codes: 0 success, 1 verification failure,
2 usage/budget error.

Enumeration budgets resolve as flag (--budget) over environment
(DELKIT_BUDGET) over the built-in default of 24.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from itertools import product

from . import entropy as ent
from . import oracle, space
from .core import DEFAULT_BUDGET, BudgetError, format_mask, validate_bits
from .embed import count_embeddings_dp, count_embeddings_runs, enumerate_masks

ENV_BUDGET = "DELKIT_BUDGET"
SWEEP_DEFAULT_MAX_M = 12

VERIFY_DEFAULT_MAX_M = {
    "clusters": 6,
    "initials": 5,
    "singletons": 5,
    "lemma1": 8,
    "lemma4": 8,
    "identityB": 10,
    "identityC": 10,
    "entropy-min": 8,
}


def _resolve_budget(args: argparse.Namespace) -> tuple[int, bool]:
    """Effective enumeration budget and whether it was set explicitly."""
    if args.budget is not None:
        return args.budget, True
    env = os.environ.get(ENV_BUDGET)
    if env is not None:
        try:
            return int(env), True
        except ValueError:
            raise BudgetError(f"{ENV_BUDGET}={env!r} is not an integer") from None
    return DEFAULT_BUDGET, False


def _fmt_float(v: float) -> str:
    return format(v, ".17g")


def _csv_text(
    meta: list[tuple[str, object]], header: list[str], rows: list[list[str]]
) -> str:
    buf = io.StringIO()
    for k, v in meta:
        buf.write(f"# {k}={v}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _json_text(obj: object) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as f:
            f.write(text)


def _multiset_text(counts: dict[int, int]) -> str:
    return " ".join(f"{w}:{counts[w]}" for w in sorted(counts)) or "-"


def _all_bits(m: int):
    for bits in product("01", repeat=m):
        yield "".join(bits)


def _compositions(m: int):
    """All compositions of m into positive parts, in lex order."""
    if m == 0:
        yield ()
        return
    for first in range(1, m + 1):
        for rest in _compositions(m - first):
            yield (first,) + rest


def cmd_count(args: argparse.Namespace) -> int:
    y = validate_bits(args.y)
    x = validate_bits(args.x)
    budget, _ = _resolve_budget(args)
    if args.method == "dp":
        w = count_embeddings_dp(y, x)
    elif args.method == "runs":
        w = count_embeddings_runs(y, x)
    else:
        w = oracle.oracle_count(y, x)
    masks = enumerate_masks(y, x, budget) if args.masks else None
    if args.format == "json":
        obj: dict[str, object] = {"y": y, "x": x, "method": args.method, "omega": w}
        if masks is not None:
            obj["masks"] = [[i + 1 for i in pi] for pi in masks]
        _emit(_json_text(obj), args.out)
    else:
        lines = [str(w)]
        if masks is not None:
            lines.extend(format_mask(pi) for pi in masks)
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_distribution(args: argparse.Namespace) -> int:
    x = validate_bits(args.x)
    budget, _ = _resolve_budget(args)
    d = ent.weight_distribution(args.n, x, by_cluster=args.by_cluster, budget=budget)
    meta: list[tuple[str, object]] = [
        ("x", x),
        ("n", d.n),
        ("mu", ent.mu(d.n, d.m)),
        ("upsilon", space.upsilon_size(d.n, d.m)),
    ]
    if args.format == "json":
        obj: dict[str, object] = {k: v for k, v in meta}
        if args.by_cluster:
            assert d.by_cluster is not None
            obj["rows"] = [
                {"cluster": c, "weight": w, "count": k}
                for c in sorted(d.by_cluster)
                for w, k in sorted(d.by_cluster[c].items())
            ]
        else:
            obj["rows"] = [
                {"weight": w, "count": k} for w, k in sorted(d.counts.items())
            ]
        _emit(_json_text(obj), args.out)
    elif args.by_cluster:
        assert d.by_cluster is not None
        rows = [
            [str(c), str(w), str(k)]
            for c in sorted(d.by_cluster)
            for w, k in sorted(d.by_cluster[c].items())
        ]
        _emit(_csv_text(meta, ["cluster", "weight", "count"], rows), args.out)
    else:
        rows = [[str(w), str(k)] for w, k in sorted(d.counts.items())]
        _emit(_csv_text(meta, ["weight", "count"], rows), args.out)
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    budget, explicit = _resolve_budget(args)
    m, n = args.m, args.n
    if m < 0 or n < m:
        raise ValueError(f"need 0 <= m <= n, got m={m}, n={n}")
    cap = budget if explicit else min(budget, SWEEP_DEFAULT_MAX_M)
    if m > cap:
        raise BudgetError(
            f"m={m} exceeds the sweep cap {cap}; raise --budget or {ENV_BUDGET}"
        )
    alphas = args.alpha
    labels = [f"R_{a:g}" for a in alphas]
    header = ["x", "n", "H"] + labels + ["Hmin"]
    meta: list[tuple[str, object]] = [
        ("m", m),
        ("n", n),
        ("alphas", ",".join(f"{a:g}" for a in alphas)),
    ]
    rows = []
    json_rows = []
    for x in _all_bits(m):
        d = ent.weight_distribution(n, x, budget=budget)
        h = ent.shannon_entropy(d)
        rs = [ent.renyi_entropy(d, a) for a in alphas]
        hmin = ent.min_entropy(d)
        rows.append([x, str(n), _fmt_float(h)] + [_fmt_float(v) for v in rs] + [_fmt_float(hmin)])
        json_rows.append(
            {
                "x": x,
                "n": n,
                "H": h,
                "R": {f"{a:g}": v for a, v in zip(alphas, rs)},
                "Hmin": hmin,
            }
        )
    if args.format == "json":
        obj = {k: v for k, v in meta[:2]}
        obj["alphas"] = list(alphas)
        obj["rows"] = json_rows
        _emit(_json_text(obj), args.out)
    else:
        _emit(_csv_text(meta, header, rows), args.out)
    return 0


def cmd_gchain(args: argparse.Namespace) -> int:
    x = validate_bits(args.x)
    if not x:
        raise ValueError("gchain needs a nonempty string")
    predict = (
        ent.predicted_weights_single if args.deletions == 1 else ent.predicted_weights_double
    )
    chain = ent.g_chain(x)
    entries = [(i, s, ent.shannon_entropy(predict(s))) for i, s in enumerate(chain)]
    meta: list[tuple[str, object]] = [
        ("x", x),
        ("deletions", args.deletions),
        ("n", len(x) + args.deletions),
    ]
    if args.format == "json":
        obj = {k: v for k, v in meta}
        obj["rows"] = [{"step": i, "x": s, "H": h} for i, s, h in entries]
        _emit(_json_text(obj), args.out)
    else:
        rows = [[str(i), s, _fmt_float(h)] for i, s, h in entries]
        _emit(_csv_text(meta, ["step", "x", "H"], rows), args.out)
    return 0


Row = tuple[str, str, str, bool]


def _suite_clusters(max_m: int) -> list[Row]:
    rows: list[Row] = []
    for m in range(0, max_m + 1):
        for n in range(m, min(m + 3, 12) + 1):
            for h in range(0, m + 1):
                x = "1" * h + "0" * (m - h)
                sp = oracle.oracle_space(n, x)
                for c in range(0, n - m + 1):
                    closed = space.cluster_size_closed(n, m, h, c)
                    simple = space.cluster_size_simple(n, m, h, c)
                    rec = space.cluster_size_recursive(n, x, c)
                    enum = sum(1 for y in sp.weights if y.count("1") - h == c)
                    ok = closed == simple == rec == enum
                    rows.append(
                        (f"n={n} m={m} h={h} c={c}", str(closed), str(enum), ok)
                    )
    return rows


def _suite_initials(max_m: int) -> list[Row]:
    rows: list[Row] = []
    for m in range(1, max_m + 1):
        for n in range(m, min(m + 3, 11) + 1):
            for x in _all_bits(m):
                h = x.count("1")
                total = 0
                per_cluster: dict[int, int] = {}
                for y in _all_bits(n):
                    if space.is_maximal_initial(y, x):
                        total += 1
                        c = y.count("1") - h
                        per_cluster[c] = per_cluster.get(c, 0) + 1
                ok = total == space.maximal_initials_total(n, m) and all(
                    per_cluster.get(c, 0) == space.maximal_initials_cluster(n, m, h, c)
                    for c in range(0, n - m + 1)
                )
                rows.append(
                    (f"n={n} x={x}", str(total), str(space.maximal_initials_total(n, m)), ok)
                )
    return rows


def _suite_singletons(max_m: int) -> list[Row]:
    rows: list[Row] = []
    for m in range(1, max_m + 1):
        for n in range(m, min(m + 3, 11) + 1):
            for x in _all_bits(m):
                h = x.count("1")
                sp = oracle.oracle_space(n, x)
                singles = sp.singletons()
                closed = space.singleton_count(n, x)
                ok = len(singles) == closed and all(
                    sum(1 for y in singles if y.count("1") - h == c)
                    == space.singleton_cluster_count(n, x, c)
                    for c in range(0, n - m + 1)
                )
                rows.append((f"n={n} x={x}", str(closed), str(len(singles)), ok))
    return rows


def _lemma_rows(max_m: int, extra: int) -> list[Row]:
    predict = ent.predicted_weights_single if extra == 1 else ent.predicted_weights_double
    rows: list[Row] = []
    for m in range(1, max_m + 1):
        n = m + extra
        for x in _all_bits(m):
            predicted = predict(x).counts
            table = oracle.oracle_weight_table(n, x)
            observed: dict[int, int] = {}
            for w in table:
                if w:
                    observed[int(w)] = observed.get(int(w), 0) + 1
            rows.append(
                (
                    f"x={x}",
                    _multiset_text(predicted),
                    _multiset_text(observed),
                    predicted == observed,
                )
            )
    return rows


def _suite_identity(max_m: int, which: str) -> list[Row]:
    fn = ent.double_count_identity if which == "B" else ent.double_weight_identity
    rows: list[Row] = []
    for m in range(1, max_m + 1):
        for ks in _compositions(m):
            lhs, rhs = fn(ks)
            rows.append((",".join(str(k) for k in ks), str(lhs), str(rhs), lhs == rhs))
    return rows


def _suite_entropy_min(max_m: int) -> list[Row]:
    rows: list[Row] = []
    for m in range(1, max_m + 1):
        expected = "{" + ",".join(sorted(["0" * m, "1" * m])) + "}"
        for extra, predict in (
            (1, ent.predicted_weights_single),
            (2, ent.predicted_weights_double),
        ):
            n = m + extra
            values = {x: ent.shannon_entropy(predict(x)) for x in _all_bits(m)}
            low = min(values.values())
            argmin = sorted(x for x, v in values.items() if v <= low + 1e-9)
            got = "{" + ",".join(argmin) + "}"
            rows.append((f"m={m} n={n} measure=H", got, expected, got == expected))
        n = m + 1
        dists = {x: ent.predicted_weights_single(x) for x in _all_bits(m)}
        for a in (0.5, 2.0, 3.0):
            values = {x: ent.renyi_entropy(d, a) for x, d in dists.items()}
            low = min(values.values())
            argmin = sorted(x for x, v in values.items() if v <= low + 1e-9)
            got = "{" + ",".join(argmin) + "}"
            rows.append((f"m={m} n={n} measure=R{a:g}", got, expected, got == expected))
    return rows


def cmd_verify(args: argparse.Namespace) -> int:
    suite = args.suite
    max_m = args.max_m if args.max_m is not None else VERIFY_DEFAULT_MAX_M[suite]
    if max_m < 0:
        raise ValueError(f"--max-m must be nonnegative, got {max_m}")
    if suite == "clusters":
        rows = _suite_clusters(max_m)
    elif suite == "initials":
        rows = _suite_initials(max_m)
    elif suite == "singletons":
        rows = _suite_singletons(max_m)
    elif suite == "lemma1":
        rows = _lemma_rows(max_m, 1)
    elif suite == "lemma4":
        rows = _lemma_rows(max_m, 2)
    elif suite == "identityB":
        rows = _suite_identity(max_m, "B")
    elif suite == "identityC":
        rows = _suite_identity(max_m, "C")
    else:
        rows = _suite_entropy_min(max_m)
    failures = sum(1 for r in rows if not r[3])
    meta: list[tuple[str, object]] = [
        ("suite", suite),
        ("max_m", max_m),
        ("checks", len(rows)),
        ("failures", failures),
    ]
    if args.format == "json":
        obj = {k: v for k, v in meta}
        obj["rows"] = [
            {"suite": suite, "case": c, "lhs": l, "rhs": r, "ok": ok}
            for c, l, r, ok in rows
        ]
        _emit(_json_text(obj), args.out)
    else:
        table = [
            [suite, c, l, r, "true" if ok else "false"] for c, l, r, ok in rows
        ]
        _emit(_csv_text(meta, ["suite", "case", "lhs", "rhs", "ok"], table), args.out)
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="delkit",
        description="Exact combinatorics of deletion channels on binary strings.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--format", choices=["csv", "json"], default="csv")
        sp.add_argument("--out", metavar="PATH", default=None, help="write here instead of stdout")
        sp.add_argument(
            "--budget",
            type=int,
            default=None,
            help=f"enumeration length cap (default {DEFAULT_BUDGET}; env {ENV_BUDGET})",
        )

    c = sub.add_parser("count", help="embedding count of x in y")
    c.add_argument("--y", required=True, help="the longer string")
    c.add_argument("--x", required=True, help="the embedded string")
    c.add_argument("--method", choices=["dp", "runs", "oracle"], default="dp")
    c.add_argument("--masks", action="store_true", help="also list embedding masks, 1-based")
    common(c)
    c.set_defaults(func=cmd_count)

    d = sub.add_parser("distribution", help="weight histogram of the length-n supersequences of x")
    d.add_argument("--x", required=True)
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--by-cluster", action="store_true", help="split by excess-1s cluster")
    common(d)
    d.set_defaults(func=cmd_distribution)

    s = sub.add_parser("sweep", help="entropy table over every x of length m")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument(
        "--alpha", type=float, nargs="+", default=[2.0], help="Renyi orders (default: 2)"
    )
    common(s)
    s.set_defaults(func=cmd_sweep)

    g = sub.add_parser("gchain", help="run-merging chain of x with entropies")
    g.add_argument("--x", required=True)
    g.add_argument("--deletions", type=int, choices=[1, 2], default=1)
    common(g)
    g.set_defaults(func=cmd_gchain)

    v = sub.add_parser("verify", help="self-check suites (exit 1 on any failure)")
    v.add_argument(
        "--suite",
        required=True,
        choices=[
            "clusters",
            "initials",
            "singletons",
            "lemma1",
            "lemma4",
            "identityB",
            "identityC",
            "entropy-min",
        ],
        help=(
            "clusters/initials/singletons: closed forms vs enumeration; "
            "lemma1/lemma4: predicted one/two-insertion multisets vs the oracle; "
            "identityB/identityC: count and mask-mass identities over compositions; "
            "entropy-min: constant strings minimize H and Renyi entropy"
        ),
    )
    v.add_argument("--max-m", type=int, default=None, help="sweep bound (per-suite default)")
    common(v)
    v.set_defaults(func=cmd_verify)

    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
