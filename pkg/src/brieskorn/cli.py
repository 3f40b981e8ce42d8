"""Command-line entry point: ``brieskorn <command> ...``.

Exit codes: 0 success, 1 domain error, 2 verification mismatch.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import diophantine as dio
from .classify import (
    TABLE_BUDGET,
    InvariantReport,
    classify,
    fmt_rational,
    reproduce_table1,
    search_two_fillable,
)
from .contact import canonical_vector, d3, fillable_count
from .correction import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    apply_ordering,
    correction_term,
    read_ordering,
    read_vectors,
    verify_vector,
)
from .errors import DomainError, VerificationMismatch
from .plumbing import standard_graph
from .seifert import BrieskornIndex, from_brieskorn


def _graph(exponents):
    idx = BrieskornIndex(tuple(exponents))
    return idx, standard_graph(from_brieskorn(idx))


def _load_cache(path: Path | None) -> dict[str, dict]:
    if path is None or not path.exists():
        return {}
    cache = {}
    for line in path.read_text().splitlines():
        if line.strip():
            entry = json.loads(line)
            cache[entry["key"]] = entry["report"]
    return cache


def cmd_info(args) -> int:
    idx = BrieskornIndex(tuple(args.exponents))
    key = ",".join(map(str, idx.exponents))
    cache_path = Path(args.cache) if args.cache else None
    cache = _load_cache(cache_path)
    if key in cache:
        report = InvariantReport.from_dict(cache[key])
    else:
        report = classify(idx, args.budget)
        if cache_path is not None:
            with cache_path.open("a") as fh:
                fh.write(json.dumps({"key": key, "report": report.to_dict()}) + "\n")
    if args.reverse:
        report = report.reversed()
    if args.json:
        print(report.to_json())
    else:
        for name, value in report.to_dict().items():
            print(f"{name}: {value}")
    return 0


def cmd_d3(args) -> int:
    _, g = _graph(args.exponents)
    print(fmt_rational(d3(g, canonical_vector(g))))
    return 0


def cmd_count(args) -> int:
    _, g = _graph(args.exponents)
    print(fillable_count(g))
    return 0


def cmd_dinv(args) -> int:
    _, g = _graph(args.exponents)
    if args.verify:
        vectors = read_vectors(args.verify)
        ordering = read_ordering(args.ordering) if args.ordering else None
        status = 0
        for vec in vectors:
            expected = None
            if len(vec) == g.size + 1:
                # trailing column: expected grading
                *vec, expected = vec
            k = apply_ordering(vec, ordering) if ordering else tuple(vec)
            graded, outcome = verify_vector(g, k)
            line = f"{' '.join(map(str, k))}\t{outcome.status.value}\tsteps={outcome.steps}\tgrading={fmt_rational(graded.grading)}"
            if expected is not None and graded.grading != expected:
                line += f"\tMISMATCH expected {expected}"
                status = 2
            print(line)
        return status
    result = correction_term(g, args.budget)
    if isinstance(result, BudgetExceeded):
        print(f"budget exceeded: {result.initial_count} initial vectors > {result.budget}")
        return 1
    print(fmt_rational(result))
    return 0


def cmd_search(args) -> int:
    out = search_two_fillable(args.max_product)
    for note in out.excluded:
        print(f"# {note}")
    for report in out.two_fillable:
        print(f"{report.manifold}\td3={fmt_rational(report.d3)}\tfillable={report.fillable_count}")
    print(f"# {len(out.delegated)} e0 = -1 manifolds delegated; {out.scanned} scanned")
    return 0


def cmd_table1(args) -> int:
    checks = reproduce_table1(args.kmax, args.budget)
    for check in checks:
        print(check.line())
    failed = sum(not c.passed for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} rows PASS")
    return 0 if not failed else 2


def cmd_dioph(args) -> int:
    status = 0
    if args.which == "quadruples":
        sol = dio.quadruples_unit()
        print(dio.quadruples_tsv(sol))
        if args.oracle:
            ref = dio.quadruples_unit_oracle(args.bound or 100)
            ok = ref.finite == sol.finite
            print(f"# oracle (bound {args.bound or 100}): {'agrees' if ok else 'DISAGREES'}")
            status = 0 if ok else 2
    elif args.which == "prop-new":
        sol = dio.prop_new_check(args.bound or 200)
        print(dio.quadruples_tsv(sol))
        print(f"# {len(sol.finite)} solutions with a, b, c <= {args.bound or 200}")
    else:
        v_bound = args.bound or 25
        sol = dio.admissible_triples(v_bound)
        print(dio.triples_tsv(sol))
        if args.oracle:
            ref = dio.admissible_triples_oracle(20, v_bound)
            in_range = tuple(t for t in sol.finite if t.v <= v_bound)
            ok = ref.finite == in_range and ref.family_members == sol.family_members
            print(f"# oracle (20, {v_bound}): {'agrees' if ok else 'DISAGREES'}")
            status = 0 if ok else 2
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="brieskorn", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="full invariant report")
    p.add_argument("exponents", type=int, nargs="+")
    p.add_argument("--json", action="store_true")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--reverse", action="store_true", help="report the opposite orientation")
    p.add_argument("--cache", help="JSON-lines file of previously computed reports")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("d3", help="d3 of the canonical structure")
    p.add_argument("exponents", type=int, nargs="+")
    p.set_defaults(func=cmd_d3)

    p = sub.add_parser("dinv", help="correction term, or verify explicit vectors")
    p.add_argument("exponents", type=int, nargs="+")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--verify", help="file with one vector per line")
    p.add_argument("--ordering", help="permutation file: canonical index of each listed coordinate")
    p.set_defaults(func=cmd_dinv)

    p = sub.add_parser("count", help="number of fillable structures")
    p.add_argument("exponents", type=int, nargs="+")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("search", help="two-fillable Brieskorn spheres up to a product bound")
    p.add_argument("--max-product", type=int, required=True)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("table1", help="reproduce the reference table")
    p.add_argument("--kmax", type=int, default=5)
    p.add_argument("--budget", type=int, default=TABLE_BUDGET)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("dioph", help="Diophantine enumerations")
    p.add_argument("which", choices=["quadruples", "prop-new", "triples"])
    p.add_argument("--bound", type=int)
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(func=cmd_dioph)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except VerificationMismatch as exc:
        print(f"verification mismatch: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
