"""Batch command-line interface.

Every subcommand writes one report to stdout in the selected format and
exits 0 when all embedded contract checks pass, 1 on a contract violation
(a minimal witness is part of the report), 2 on usage errors.  Reports are
byte-deterministic: a fixed seed fully determines every randomized suite,
JSON is emitted with sorted keys, and CSV with a stable field order.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from fractions import Fraction
from typing import Any

from . import cells, classalg, cover, partitions, pi0monoid, ring
from .classalg import FactorizationKey
from .partitions import format_partition, parse_partition
from .permcore import Perm, absolute_length, cycle_type

EXIT_OK = 0
EXIT_CONTRACT = 1
EXIT_USAGE = 2


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, dict):
        return {_key(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [_jsonable(v) for v in items]
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (cover.ComponentSignature, cover.BranchTuple, Perm)):
        return str(obj)
    if isinstance(obj, ring.RingElement):
        return obj.to_jsonable()
    return obj


def _key(k: Any) -> str:
    if isinstance(k, tuple):
        return format_partition(k)
    return str(k)


def emit(report: dict, fmt: str) -> bytes:
    """Render a report deterministically; identical reports give identical
    bytes."""
    if fmt == "json":
        flat = _jsonable({k: v for k, v in report.items() if k != "csv_rows"})
        return (json.dumps(flat, sort_keys=True, indent=2) + "\n").encode()
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if "csv_rows" in report:
            for row in report["csv_rows"]:
                writer.writerow(row)
        else:
            writer.writerow(["key", "value"])
            flat = _jsonable({k: v for k, v in report.items() if k != "csv_rows"})
            for k in sorted(flat):
                writer.writerow([k, json.dumps(flat[k], sort_keys=True)])
        return buf.getvalue().encode()
    lines = []
    flat = _jsonable({k: v for k, v in report.items() if k != "csv_rows"})
    for k in sorted(flat):
        lines.append(f"{k}: {json.dumps(flat[k], sort_keys=True)}")
    return ("\n".join(lines) + "\n").encode()


def _perm_arg(text: str, d: int) -> Perm:
    return Perm.parse(text, d)


def cmd_betti(args) -> tuple[dict, bool]:
    table = cells.betti(args.d)
    rows = [["degree", "betti"]] + [[k, v] for k, v in sorted(table.items())]
    return {"d": args.d, "betti": table, "csv_rows": rows}, True


def cmd_cells(args) -> tuple[dict, bool]:
    descriptors = cells.cell_list(args.d)
    ok = cells.cell_consistency_check(args.d)
    rows = [["lam", "dim", "isotropy_order"]]
    rows += [[format_partition(c.lam), c.dim, c.isotropy_order] for c in descriptors]
    report = {
        "d": args.d,
        "cells": [
            {"lam": format_partition(c.lam), "dim": c.dim, "isotropy_order": c.isotropy_order}
            for c in descriptors
        ],
        "consistency_ok": ok,
        "csv_rows": rows,
    }
    return report, ok


def cmd_cup(args) -> tuple[dict, bool]:
    mu = parse_partition(args.mu, args.d)
    nu = parse_partition(args.nu, args.d)
    results = {}
    methods = ["brute", "chars"] if args.method == "both" else [args.method]
    for method in methods:
        results[method] = ring.cup_basis(mu, nu, args.d, method)
    ok = len({str(v) for v in results.values()}) == 1
    report = {
        "d": args.d,
        "mu": format_partition(mu),
        "nu": format_partition(nu),
        "product": {m: v.to_jsonable() for m, v in results.items()},
        "pretty": {m: str(v) for m, v in results.items()},
        "methods_agree": ok,
    }
    return report, ok


def cmd_ring_verify(args) -> tuple[dict, bool]:
    report = ring.verify_polynomial(args.d, args.method if args.method != "both" else "chars")
    return report, report["ok"]


def cmd_factor_count(args) -> tuple[dict, bool]:
    key = FactorizationKey(
        args.d,
        parse_partition(args.mu, args.d),
        parse_partition(args.nu, args.d),
        parse_partition(args.lam, args.d),
    )
    counts: dict[str, int] = {}
    if args.method in ("brute", "both"):
        counts["brute"] = classalg.factorization_count_brute(key)
    if args.method in ("chars", "both"):
        counts["chars"] = classalg.factorization_count_char(
            key, cache_dir=args.cache_dir, use_cache=not args.no_cache
        )
    ok = len(set(counts.values())) == 1
    report = {
        "d": args.d,
        "mu": format_partition(key.mu),
        "nu": format_partition(key.nu),
        "lam": format_partition(key.lam),
        "counts": counts,
        "methods_agree": ok,
    }
    return report, ok


def cmd_chars(args) -> tuple[dict, bool]:
    table = classalg.char_table(
        args.d, cache_dir=args.cache_dir, use_cache=not args.no_cache, max_d=args.max_degree
    )
    ok = table.check_orthogonality() and table.check_burnside()
    rows = [["irrep\\class", *[format_partition(c) for c in table.index]]]
    rows += [
        [format_partition(irrep), *table.values[i]] for i, irrep in enumerate(table.index)
    ]
    report = {
        "d": args.d,
        "classes": [format_partition(c) for c in table.index],
        "values": table.values,
        "orthogonality_ok": table.check_orthogonality(),
        "burnside_ok": table.check_burnside(),
        "csv_rows": rows,
    }
    return report, ok


def cmd_stability(args) -> tuple[dict, bool]:
    report = cells.stability_check(args.d)
    report["new_cells"] = [format_partition(lam) for lam in report["new_cells"]]
    return report, report["ok"]


def cmd_stable_table(args) -> tuple[dict, bool]:
    max_d = args.max_d
    degrees = list(range(1, max_d + 1))
    ok = True
    rows = [["d", *[2 * m for m in range(0, max_d // 2 + 1)]]]
    table = {}
    for d in degrees:
        b = cells.betti(d)
        table[d] = {2 * m: b.get(2 * m, 0) for m in range(0, max_d // 2 + 1)}
        rows.append([d, *[table[d][2 * m] for m in range(0, max_d // 2 + 1)]])
        for m in range(0, d // 2 + 1):
            if b.get(2 * m, 0) != cells.stable_betti(m):
                ok = False
    report = {"max_d": max_d, "table": table, "stable_region_ok": ok, "csv_rows": rows}
    return report, ok


def cmd_monoid_mul(args) -> tuple[dict, bool]:
    a = cover.ComponentSignature.from_json(args.a)
    b = cover.ComponentSignature.from_json(args.b)
    product = pi0monoid.multiply(a, b)
    oracle = pi0monoid.oracle_multiply(a, b)
    ok = product == oracle
    report = {
        "a": json.loads(a.to_json()),
        "b": json.loads(b.to_json()),
        "product": json.loads(product.to_json()),
        "oracle_agrees": ok,
    }
    return report, ok


def cmd_monoid_check(args) -> tuple[dict, bool]:
    failures: list[dict] = []
    trials = args.trials
    mode_tag = {"commutation": 1, "oracle": 2, "ore": 3, "good": 4}[args.mode]
    for i in range(trials):
        # deterministic per-trial derivation so suites can be split by seed
        trial_rng = random.Random(args.seed * 1_000_003 + i * 7 + mode_tag)
        d = trial_rng.randint(1, args.d)
        a = pi0monoid.random_signature(trial_rng, d)
        b = pi0monoid.random_signature(trial_rng, d)
        if args.mode == "commutation":
            if not pi0monoid.commutation_check(a, b):
                failures.append({"a": str(a), "b": str(b)})
        elif args.mode == "oracle":
            if pi0monoid.multiply(a, b) != pi0monoid.oracle_multiply(a, b):
                failures.append({"a": str(a), "b": str(b)})
        elif args.mode == "ore":
            u, v = pi0monoid.ore_witness_1(a, b)
            if pi0monoid.multiply(a, u) != pi0monoid.multiply(b, v):
                failures.append({"a": str(a), "b": str(b)})
        elif args.mode == "good":
            _, _, result = pi0monoid.make_good(a)
            if not pi0monoid.is_good(result):
                failures.append({"a": str(a)})
        if failures and len(failures) >= 1:
            break
    ok = not failures
    report = {
        "mode": args.mode,
        "max_d": args.d,
        "trials": trials,
        "seed": args.seed,
        "ok": ok,
        "witness": failures[:1],
    }
    return report, ok


def cmd_cover_check(args) -> tuple[dict, bool]:
    t = cover.BranchTuple.parse(args.tuple)
    report: dict = {"tuple": str(t), "mode": args.mode}
    if args.mode == "local":
        report["is_local"] = cover.is_local(t)
        sig = cover.component_signature(t)
        report["signature"] = json.loads(sig.to_json())
        return report, True
    target = _perm_arg(args.target_pi, t.d)
    ok, diagnosis = cover.validate_hurwitz_point(t, target, args.genus)
    report["valid"] = ok
    report["diagnosis"] = diagnosis
    report["target_pi"] = str(target)
    report["genus"] = args.genus
    return report, True  # an invalid point is a result, not a contract violation


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["json", "csv", "text"], default="text")
    p.add_argument("--cache-dir", default=None)
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-degree", type=int, default=classalg.DEFAULT_MAX_D)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="branchcover",
        description="Exact combinatorics of branched covers of the disk",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        _add_common(p)
        p.set_defaults(fn=fn)
        return p

    p = add("betti", cmd_betti, help="Betti numbers of the degree-d complex")
    p.add_argument("--d", type=int, required=True)

    p = add("cells", cmd_cells, help="cell inventory with isotropy orders")
    p.add_argument("--d", type=int, required=True)

    p = add("cup", cmd_cup, help="cup product of two basis classes")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--method", choices=["brute", "chars", "both"], default="both")

    p = add("ring-verify", cmd_ring_verify, help="polynomial-ring verification")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--method", choices=["brute", "chars", "both"], default="chars")

    p = add("factor-count", cmd_factor_count, help="factorization count, both oracles")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--lam", required=True)
    p.add_argument("--method", choices=["brute", "chars", "both"], default="both")

    p = add("chars", cmd_chars, help="character table of S_d")
    p.add_argument("--d", type=int, required=True)

    p = add("stability", cmd_stability, help="stabilization-range report")
    p.add_argument("--d", type=int, required=True)

    p = add("stable-table", cmd_stable_table, help="Betti table across degrees")
    p.add_argument("--max-d", type=int, default=12)

    p = add("monoid-mul", cmd_monoid_mul, help="monoid product of two signatures (JSON)")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    p = add("monoid-check", cmd_monoid_check, help="seeded randomized monoid laws")
    p.add_argument("--mode", choices=["commutation", "oracle", "ore", "good"], required=True)
    p.add_argument("--d", type=int, default=6, help="maximum degree for random signatures")

    p = add("cover-check", cmd_cover_check, help="local-cover / Hurwitz-point validation")
    p.add_argument("--mode", choices=["local", "hurwitz"], required=True)
    p.add_argument("--tuple", required=True, help='e.g. "d=3; (1 2); (1 3)"')
    p.add_argument("--target-pi", default=None)
    p.add_argument("--genus", type=int, default=0)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    if getattr(args, "command", None) == "cover-check" and args.mode == "hurwitz" and not args.target_pi:
        sys.stderr.write("cover-check --mode hurwitz requires --target-pi\n")
        return EXIT_USAGE
    try:
        report, ok = args.fn(args)
    except (ValueError, KeyError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    sys.stdout.buffer.write(emit(report, args.format))
    sys.stdout.flush()
    return EXIT_OK if ok else EXIT_CONTRACT


if __name__ == "__main__":
    sys.exit(main())
