"""Command-line front end: exact counts, enumeration streams, series
expansion, verification suites, and sequence-file comparison.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parameter error,
3 enumeration budget exceeded.  Counts are always printed as decimal
strings; enumeration uses JSON Lines by default.  All output is
deterministic for a fixed request, regardless of --workers.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from importlib import resources

from .convexity import (
    DEFAULT_MAX_SUBSETS,
    EnumerationBudget,
    count_digitally_convex,
    enumerate_digitally_convex,
)
from .cyclic import (
    a_count,
    a_series,
    convex_set_from_string,
    count_cycle_power,
    enumerate_B,
    string_from_convex_set,
)
from .errors import (
    BfileParseError,
    BudgetExceededError,
    EmptyOverlapError,
    InvalidParameterError,
    NotConvexError,
    NotImageError,
    NotMemberError,
)
from .graphs import (
    VertexSet,
    cartesian_product,
    graph_power,
    make_complete,
    make_cycle,
    make_path,
    set_to_json,
)
from .products import (
    _image_codes,
    count_complete_product,
    count_grid_p2,
    count_grid_via_arrays,
    count_mis_grid3,
    generate_grid_p2,
)
from .sequences import compare_with_bfile

FAMILIES = ("path", "cycle", "complete", "cycle-power", "complete-product", "path-grid")

# per family: required parameter names and the methods that can count it,
# first method listed is the default
_FAMILY_PARAMS = {
    "path": ("n",),
    "cycle": ("n",),
    "complete": ("n",),
    "cycle-power": ("n", "k"),
    "complete-product": ("n", "m"),
    "path-grid": ("n", "m"),
}
_COUNT_METHODS = {
    "path": ("bruteforce", "arrays"),
    "cycle": ("recurrence", "bruteforce", "bijection"),
    "complete": ("formula", "bruteforce"),
    "cycle-power": ("recurrence", "bruteforce", "bijection"),
    "complete-product": ("formula", "bruteforce"),
    "path-grid": ("arrays", "bruteforce", "recurrence"),
}
_ENUM_METHODS = {
    "path": ("bruteforce", "arrays"),
    "cycle": ("bruteforce", "bijection"),
    "complete": ("bruteforce",),
    "cycle-power": ("bruteforce", "bijection"),
    "complete-product": ("bruteforce",),
    "path-grid": ("bruteforce", "arrays", "recurrence"),
}


def _usage_error(message: str):
    raise InvalidParameterError(message)


def _family_graph(family: str, n: int, m, k):
    if family == "path":
        return make_path(n)
    if family == "cycle":
        return make_cycle(n)
    if family == "complete":
        return make_complete(n)
    if family == "cycle-power":
        return graph_power(make_cycle(n), k)
    if family == "complete-product":
        return cartesian_product(make_complete(n), make_complete(m))
    return cartesian_product(make_path(n), make_path(m))


def _check_params(args, family: str):
    needed = _FAMILY_PARAMS[family]
    for name in needed:
        if getattr(args, name) is None:
            _usage_error(f"family {family} needs --{name}")
    for name in ("n", "m", "k"):
        if name not in needed and getattr(args, name) is not None:
            _usage_error(f"family {family} does not take --{name}")


def _params_dict(args, family: str) -> dict:
    return {name: getattr(args, name) for name in _FAMILY_PARAMS[family]}


def _budget_from(args) -> EnumerationBudget:
    cap = args.max_subsets
    if cap is None:
        env = os.environ.get("DIGICON_MAX_SUBSETS")
        if env is not None:
            try:
                cap = int(env)
            except ValueError:
                _usage_error(f"DIGICON_MAX_SUBSETS must be an integer, got {env!r}")
    if cap is None:
        cap = DEFAULT_MAX_SUBSETS
    return EnumerationBudget(max_subsets=cap, workers=args.workers)


def _count_value(args, family: str, method: str, budget: EnumerationBudget) -> int:
    n, m, k = args.n, args.m, args.k
    if method == "bruteforce":
        return count_digitally_convex(_family_graph(family, n, m, k), budget)
    if family == "path" and method == "arrays":
        return count_grid_via_arrays(n, 1, budget)
    if family == "cycle":
        if method == "recurrence":
            return count_cycle_power(1, n)
        return sum(1 for _ in enumerate_B(2, n, budget))
    if family == "complete":
        if n < 1:
            _usage_error(f"--n must be >= 1, got {n}")
        return 2
    if family == "cycle-power":
        if method == "recurrence":
            return count_cycle_power(k, n)
        return sum(1 for _ in enumerate_B(k + 1, n, budget))
    if family == "complete-product":
        return count_complete_product(n, m)
    # path-grid
    if method == "arrays":
        return count_grid_via_arrays(n, m, budget)
    if m != 2:
        _usage_error("method recurrence for path-grid needs --m 2")
    return count_grid_p2(n)


def _cmd_count(args) -> int:
    family = args.family
    _check_params(args, family)
    method = args.method or _COUNT_METHODS[family][0]
    if method not in _COUNT_METHODS[family]:
        _usage_error(f"family {family} cannot count by method {method}")
    budget = _budget_from(args)
    value = _count_value(args, family, method, budget)
    params = _params_dict(args, family)
    if args.format == "csv":
        print("family,params,method,count")
        joined = ";".join(f"{k}={v}" for k, v in params.items())
        print(f"{family},{joined},{method},{value}")
    elif args.format == "jsonl":
        print(json.dumps({"family": family, "params": params, "method": method, "count": str(value)}))
    else:
        print(value)
    return 0


def _enumerated_sets(args, family: str, method: str, budget: EnumerationBudget):
    n, m, k = args.n, args.m, args.k
    if method == "bruteforce":
        yield from enumerate_digitally_convex(_family_graph(family, n, m, k), budget)
        return
    if method == "bijection":
        power = 1 if family == "cycle" else k
        for s in enumerate_B(power + 1, n, budget):
            yield convex_set_from_string(power, n, s)
        return
    if method == "recurrence":
        if m != 2:
            _usage_error("method recurrence for path-grid needs --m 2")
        yield from generate_grid_p2(n)
        return
    # arrays: a path is a 1-column grid; image codes are exactly set masks
    cols = 1 if family == "path" else m
    for code in _image_codes(n, cols, budget):
        yield VertexSet(n * cols, code)


def _cmd_enumerate(args) -> int:
    family = args.family
    _check_params(args, family)
    method = args.method or _ENUM_METHODS[family][0]
    if method not in _ENUM_METHODS[family]:
        _usage_error(f"family {family} cannot enumerate by method {method}")
    if args.format == "csv":
        _usage_error("enumerate emits jsonl or plain, not csv")
    budget = _budget_from(args)
    for s in _enumerated_sets(args, family, method, budget):
        if args.format == "plain":
            print(" ".join(str(v + 1) for v in s.indices()))
        else:
            print(set_to_json(s))
    return 0


def _cmd_series(args) -> int:
    series = a_series(args.k, args.terms)
    if args.format == "csv":
        print("n,coefficient")
        for i, c in enumerate(series.coefficients):
            print(f"{i},{c}")
    elif args.format == "jsonl":
        for i, c in enumerate(series.coefficients):
            print(json.dumps({"n": i, "coefficient": str(c)}))
    else:
        print(json.dumps([str(c) for c in series.coefficients]))
    return 0


def _default_bfile():
    return resources.as_file(resources.files("digicon") / "data" / "A217637.txt")


def _grid_cells(max_cells: int):
    for n in range(1, max_cells + 1):
        for m in range(1, max_cells // n + 1):
            yield n, m


def _antidiagonal_index(n: int, m: int) -> int:
    d = n + m
    return (d - 1) * (d - 2) // 2 + n


def _suite_cyclic_strings(max_k: int, max_n: int, budget) -> list:
    cases = []
    for k in range(2, max_k + 1):
        series = a_series(k, max_n)
        for n in range(1, max_n + 1):
            enumerated = sum(1 for _ in enumerate_B(k, n, budget))
            counted = a_count(k, n)
            ok = enumerated == counted == series[n]
            cases.append((f"strings k={k} n={n}", ok,
                          f"enumerated {enumerated}, recurrence {counted}, series {series[n]}"))
    return cases


def _suite_cycle_power(max_k: int, max_n: int, budget) -> list:
    cases = []
    for k in range(1, max_k + 1):
        for n in range(3, max_n + 1):
            graph = graph_power(make_cycle(n), k)
            brute = list(enumerate_digitally_convex(graph, budget))
            recurrence = count_cycle_power(k, n)
            via_strings = a_count(k + 1, n)
            ok = len(brute) == recurrence == via_strings
            detail = f"bruteforce {len(brute)}, recurrence {recurrence}, strings {via_strings}"
            round_trip = all(
                convex_set_from_string(k, n, string_from_convex_set(k, n, s)) == s
                for s in brute
            )
            if not round_trip:
                ok = False
                detail += ", round trip failed"
            cases.append((f"cycle-power k={k} n={n}", ok, detail))
    return cases


def _suite_complete_product(max_n: int, budget) -> list:
    cases = []
    for n in range(1, max_n + 1):
        for m in range(1, max_n + 1):
            formula = count_complete_product(n, m)
            brute = count_digitally_convex(
                cartesian_product(make_complete(n), make_complete(m)), budget)
            cases.append((f"complete-product {n}x{m}", formula == brute,
                          f"formula {formula}, bruteforce {brute}"))
    return cases


def _suite_grid_p2(max_n: int, budget) -> list:
    cases = []
    for n in range(1, max_n + 1):
        ladder = cartesian_product(make_path(n), make_path(2))
        brute = list(enumerate_digitally_convex(ladder, budget))
        generated = generate_grid_p2(n)
        counted = count_grid_p2(n)
        ok = len(brute) == counted and list(generated) == brute
        cases.append((f"ladder n={n}", ok,
                      f"bruteforce {len(brute)}, recurrence {counted}, generated {len(generated)}"))
    return cases


def _suite_grid_arrays(max_cells: int, budget) -> list:
    cases = []
    for n, m in _grid_cells(max_cells):
        arrays = count_grid_via_arrays(n, m, budget)
        brute = count_digitally_convex(
            cartesian_product(make_path(n), make_path(m)), budget)
        cases.append((f"grid {n}x{m}", arrays == brute,
                      f"arrays {arrays}, bruteforce {brute}"))
    return cases


def _suite_oeis(bfile_path, max_cells: int, budget) -> list:
    values = [
        (_antidiagonal_index(n, m), count_grid_via_arrays(n, m, budget))
        for n, m in _grid_cells(max_cells)
    ]
    if bfile_path is None:
        with _default_bfile() as path:
            report = compare_with_bfile(values, path)
    else:
        report = compare_with_bfile(values, bfile_path)
    cases = [("sequence-file overlap", report.all_match,
              f"matched {report.matched}, mismatches {len(report.mismatches)}")]
    for index, expected, found in report.mismatches:
        cases.append((f"index {index}", False, f"expected {expected}, found {found}"))
    return cases


def _checked_bound(value, flag: str):
    if value is not None and value < 1:
        _usage_error(f"{flag} must be a positive integer, got {value}")
    return value


def _cmd_verify(args) -> int:
    budget = _budget_from(args)
    max_k = _checked_bound(args.max_k, "--max-k")
    max_n = _checked_bound(args.max_n, "--max-n")
    max_cells = _checked_bound(args.max_cells, "--max-cells")
    suites = {
        "cyclic-strings": lambda: _suite_cyclic_strings(max_k or 5, max_n or 14, budget),
        "cycle-power-bijection": lambda: _suite_cycle_power(max_k or 3, max_n or 12, budget),
        "complete-product": lambda: _suite_complete_product(max_n or 4, budget),
        "grid-p2": lambda: _suite_grid_p2(max_n or 8, budget),
        "grid-arrays": lambda: _suite_grid_arrays(max_cells or 16, budget),
        "oeis": lambda: _suite_oeis(args.bfile, max_cells or 20, budget),
    }
    chosen = list(suites) if args.suite == "all" else [args.suite]
    failures = 0
    total = 0
    for name in chosen:
        for case, ok, detail in suites[name]():
            total += 1
            failures += not ok
            print(f"{'ok  ' if ok else 'FAIL'} [{name}] {case}: {detail}")
    if failures:
        print(f"{failures} of {total} cases failed")
        return 1
    print(f"all {total} cases passed")
    return 0


def _cmd_oeis(args) -> int:
    budget = _budget_from(args)
    max_cells = _checked_bound(args.max_cells, "--max-cells")
    values = [
        (_antidiagonal_index(n, m), count_grid_via_arrays(n, m, budget))
        for n, m in _grid_cells(max_cells)
    ]
    if args.bfile is None:
        with _default_bfile() as path:
            report = compare_with_bfile(values, path)
    else:
        report = compare_with_bfile(values, args.bfile)
    print(report.to_json())
    return 0 if report.all_match else 1


def _add_common(sub, with_format=True):
    sub.add_argument("--workers", type=int, default=1, help="worker threads for sweeps")
    sub.add_argument("--max-subsets", type=int, default=None,
                     help=f"sweep size cap (default {DEFAULT_MAX_SUBSETS}, env DIGICON_MAX_SUBSETS)")
    if with_format:
        sub.add_argument("--format", choices=("jsonl", "csv", "plain"), default=None)


def _add_family_params(sub):
    sub.add_argument("--family", required=True, choices=FAMILIES)
    sub.add_argument("--n", type=int, default=None)
    sub.add_argument("--m", type=int, default=None)
    sub.add_argument("--k", type=int, default=None)
    sub.add_argument("--method", default=None,
                     choices=("bruteforce", "recurrence", "formula", "bijection", "arrays"))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="digicon",
        description="Exact enumeration of digitally convex sets of graphs.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    count = commands.add_parser("count", help="count digitally convex sets of a graph family")
    _add_family_params(count)
    _add_common(count)
    count.set_defaults(handler=_cmd_count)

    enum = commands.add_parser("enumerate", help="stream the digitally convex sets themselves")
    _add_family_params(enum)
    _add_common(enum)
    enum.set_defaults(handler=_cmd_enumerate)

    series = commands.add_parser("series", help="expand the block-string counting series")
    series.add_argument("--k", type=int, required=True, help="minimum block length, >= 2")
    series.add_argument("--terms", type=int, required=True, help="highest exponent to expand")
    _add_common(series)
    series.set_defaults(handler=_cmd_series)

    verify = commands.add_parser("verify", help="cross-validate counts between independent methods")
    verify.add_argument("--suite", required=True,
                        choices=("cyclic-strings", "cycle-power-bijection", "complete-product",
                                 "grid-p2", "grid-arrays", "oeis", "all"))
    verify.add_argument("--max-n", type=int, default=None)
    verify.add_argument("--max-k", type=int, default=None)
    verify.add_argument("--max-cells", type=int, default=None)
    verify.add_argument("--bfile", default=None, help="sequence file for the oeis suite")
    _add_common(verify, with_format=False)
    verify.set_defaults(handler=_cmd_verify)

    oeis = commands.add_parser("oeis", help="compare grid counts against a sequence file")
    oeis.add_argument("--bfile", default=None, help="path to the sequence file (default: bundled snapshot)")
    oeis.add_argument("--max-cells", type=int, default=20, help="largest n*m to compute")
    _add_common(oeis, with_format=False)
    oeis.set_defaults(handler=_cmd_oeis)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (InvalidParameterError, NotConvexError, NotMemberError, NotImageError,
            BfileParseError, EmptyOverlapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
