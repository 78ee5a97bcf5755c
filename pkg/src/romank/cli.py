"""Command-line driver: ``romank <command> ...``.

Exit codes: 0 success, 1 discrepancy, 2 usage error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import graph as gc
from .kmn import THEOREM_VARIANT, TheoremContradiction, formula
from .solvers import (METHODS, Budget, BudgetExceeded, export_ilp, solve,
                      solve_kmn_multiset)
from .transforms import (GadgetParams, check_inequality_suite,
                         gadget_lower_bound_check)
from .weights import ALL_VARIANTS, Variant, WeightFunction, validate

EXIT_OK, EXIT_DISCREPANCY, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def parse_range(text: str) -> range:
    """'3' -> 3..3, '1..6' -> 1..6 inclusive."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}") from None
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"empty or non-positive range {text!r}")
    return range(lo, hi + 1)


def parse_variants(text: str) -> tuple[Variant, ...]:
    if text == "all":
        return ALL_VARIANTS
    try:
        return tuple(Variant.parse(t) for t in text.split(","))
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _variant(text: str) -> Variant:
    try:
        return Variant.parse(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown variant {text!r}") from None


@dataclass(frozen=True)
class SweepSpec:
    m_range: range
    n_range: range
    k_range: range
    variants: tuple[Variant, ...]
    method: str = "multiset"

    def cells(self) -> list[tuple[int, int, int, Variant]]:
        pairs = sorted({(min(m, n), max(m, n)) for m in self.m_range for n in self.n_range})
        return [(m, n, k, v) for m, n in pairs for k in self.k_range for v in self.variants]


def _solve_cell(m: int, n: int, k: int, v: Variant, method: str) -> int:
    if method == "multiset":
        return solve_kmn_multiset(m, n, k, v).value
    g, _ = gc.complete_bipartite(m, n)
    return solve(g, k, v, method).value


def verify_cell(cell: tuple[int, int, int, Variant, str]) -> dict:
    m, n, k, v, method = cell
    fr = formula(m, n, k, v)
    row = {"m": m, "n": n, "k": k, "variant": v.value, "formula": fr.to_dict()}
    try:
        x = _solve_cell(m, n, k, v, method)
    except BudgetExceeded as e:
        row.update(solver=None, match=None, budget=str(e))
        return row
    row["solver"] = x
    row["match"] = fr.value == x if fr.is_exact else fr.contains(x)
    return row


def run_sweep(spec: SweepSpec, jobs: int = 1) -> list[dict]:
    cells = [c + (spec.method,) for c in spec.cells()]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as ex:
            return list(ex.map(verify_cell, cells, chunksize=8))
    return [verify_cell(c) for c in cells]


def render_table(rows: list[dict], fmt: str) -> str:
    head = ["m", "n", "k", "formula", "case", "solver", "match"]
    body = []
    for r in rows:
        f = r["formula"]
        val = (str(f["value"]) if f["kind"] == "exact" else
               "{} or {}".format(*f["options"]) if f["kind"] == "one_of" else
               f"{f['lo']}..{f['hi']}")
        body.append([str(r["m"]), str(r["n"]), str(r["k"]), val, f["case"],
                     "" if r["solver"] is None else str(r["solver"]),
                     {True: "yes", False: "NO", None: "?"}[r["match"]]])
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(head)
        w.writerows(body)
        return buf.getvalue()
    widths = [max(len(x) for x in col) for col in zip(head, *body)]
    line = lambda cells: "| " + " | ".join(c.ljust(w) for c, w in zip(cells, widths)) + " |"
    out = [line(head), "|" + "|".join("-" * (w + 2) for w in widths) + "|"]
    out += [line(b) for b in body]
    return "\n".join(out) + "\n"


# -- commands ---------------------------------------------------------------------------

def _load(path: str) -> gc.Graph:
    return gc.read_graph(path)


def cmd_solve(a) -> int:
    g = _load(a.graph)
    budget = Budget(a.budget_nodes, a.budget_ms)
    try:
        res = solve(g, a.k, a.variant, a.method, budget)
    except BudgetExceeded as e:
        if e.partial is not None:
            print(e.partial.to_json())
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    print(res.to_json())
    return EXIT_OK


def cmd_validate(a) -> int:
    g = _load(a.graph)
    with open(a.function) as fh:
        f = WeightFunction.from_text(fh.read())
    rep = validate(g, f, a.variant, all_violations=a.explain)
    print(json.dumps({
        "valid": rep.ok, "weight": f.weight,
        "violations": [{"vertex": v.vertex, "kind": v.kind, "covered": v.covered,
                        "required": v.required} for v in rep.violations]}))
    return EXIT_OK if rep.ok else EXIT_DISCREPANCY


def cmd_formula(a) -> int:
    fr = formula(a.m, a.n, a.k, a.variant)
    out = {"m": a.m, "n": a.n, "k": a.k, "variant": a.variant.value, **fr.to_dict()}
    if a.resolve:
        try:
            x = solve_kmn_multiset(a.m, a.n, a.k, a.variant).value
        except BudgetExceeded as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_BUDGET
        if not fr.contains(x):
            print(json.dumps(out))
            print(f"theorem contradiction: solver value {x} outside {fr.render()}", file=sys.stderr)
            return EXIT_DISCREPANCY
        out["resolved"] = x
    print(json.dumps(out))
    return EXIT_OK


def _spec(a) -> SweepSpec:
    return SweepSpec(a.m, a.n, a.k, a.variants, a.method)


def cmd_verify(a) -> int:
    rows = run_sweep(_spec(a), a.jobs)
    bad = [r for r in rows if r["match"] is False]
    flagged = [r for r in rows if r["match"] is None]
    summary = {"cells": len(rows), "discrepancies": len(bad), "budget_flagged": len(flagged),
               "failures": bad, "rows": rows if a.all_rows else None}
    if summary["rows"] is None:
        del summary["rows"]
    text = json.dumps(summary, indent=1)
    if a.out:
        with open(a.out, "w") as fh:
            fh.write(text + "\n")
    print(text)
    return EXIT_DISCREPANCY if bad else EXIT_OK


def cmd_table(a) -> int:
    spec = SweepSpec(a.m, a.n, a.k, (THEOREM_VARIANT[a.theorem],), a.method)
    rows = run_sweep(spec, a.jobs)
    text = render_table(rows, "csv" if a.csv else "md")
    if a.out:
        with open(a.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_DISCREPANCY if any(r["match"] is False for r in rows) else EXIT_OK


def _gen(family: str, params: list[int]) -> gc.Graph:
    need = {"kmn": 2, "complete": 1, "path": 1, "cycle": 1, "empty": 1, "fan": 2,
            "gadget": 2}
    if family not in need:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(need)}")
    if len(params) != need[family]:
        raise ValueError(f"{family} takes {need[family]} integer parameter(s)")
    if family == "kmn":
        return gc.complete_bipartite(*params)[0]
    if family == "fan":
        return gc.fan(*params)
    if family == "gadget":
        from .transforms import build_gadget
        return build_gadget(GadgetParams(*params))
    return getattr(gc, family)(*params)


def cmd_gen(a) -> int:
    g = _gen(a.family, a.params)
    text = gc.serialize_graph(g)
    if a.out:
        with open(a.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_props(a) -> int:
    g = _load(a.graph)
    rep = check_inequality_suite(g, a.kmax, a.graph_id or a.graph,
                                 budget=Budget(a.budget_nodes, a.budget_ms))
    print(json.dumps(rep.to_list(), indent=1))
    if rep.partial:
        return EXIT_BUDGET
    return EXIT_OK if rep.ok else EXIT_DISCREPANCY


def cmd_ilp(a) -> int:
    text = export_ilp(_load(a.graph), a.k, a.variant)
    if a.out:
        with open(a.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_gadget(a) -> int:
    rows = []
    try:
        for k in a.k:
            rows.append(gadget_lower_bound_check(GadgetParams(a.m, a.ell), k,
                                                 Budget(a.budget_nodes, a.budget_ms)))
    except BudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    for r in rows:
        r.pop("witness")
    print(json.dumps(rows, indent=1))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="romank",
                                description="Exact Roman k-domination workbench")
    sub = p.add_subparsers(dest="cmd", required=True)

    def budget_flags(sp):
        sp.add_argument("--budget-nodes", type=int, default=None)
        sp.add_argument("--budget-ms", type=int, default=None)

    def sweep_flags(sp, variants=True):
        sp.add_argument("--m", type=parse_range, default=parse_range("1..6"))
        sp.add_argument("--n", type=parse_range, default=parse_range("1..6"))
        sp.add_argument("--k", type=parse_range, default=parse_range("1..6"))
        if variants:
            sp.add_argument("--variants", type=parse_variants, default=ALL_VARIANTS)
        sp.add_argument("--method", choices=METHODS, default="multiset")
        sp.add_argument("--jobs", type=int, default=1)
        sp.add_argument("-o", "--out", default=None)

    sp = sub.add_parser("solve", help="exact domination number of a graph file")
    sp.add_argument("graph")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--variant", type=_variant, default=Variant.ROMAN)
    sp.add_argument("--method", choices=METHODS, default="auto")
    budget_flags(sp)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("validate", help="check a weight function file against a graph")
    sp.add_argument("graph")
    sp.add_argument("function")
    sp.add_argument("--variant", type=_variant, default=Variant.ROMAN)
    sp.add_argument("--explain", action="store_true", help="list every violation")
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("formula", help="closed form for K_{m,n}")
    sp.add_argument("m", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("k", type=int)
    sp.add_argument("variant", type=_variant)
    sp.add_argument("--resolve", action="store_true")
    sp.set_defaults(func=cmd_formula)

    sp = sub.add_parser("verify", help="compare closed forms with the solver over a grid")
    sweep_flags(sp)
    sp.add_argument("--all-rows", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("table", help="render one theorem's table")
    sp.add_argument("theorem", choices=sorted(THEOREM_VARIANT))
    sweep_flags(sp, variants=False)
    fmt = sp.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true")
    fmt.add_argument("--md", action="store_true")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("gen", help="write a generated graph")
    sp.add_argument("family")
    sp.add_argument("params", type=int, nargs="*")
    sp.add_argument("-o", "--out", default=None)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("props", help="run the inequality suite on a graph file")
    sp.add_argument("graph")
    sp.add_argument("--kmax", type=int, default=3)
    sp.add_argument("--graph-id", default=None)
    budget_flags(sp)
    sp.set_defaults(func=cmd_props)

    sp = sub.add_parser("ilp", help="export the 0/1 model in LP format")
    sp.add_argument("graph")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--variant", type=_variant, default=Variant.ROMAN)
    sp.add_argument("-o", "--out", default=None)
    sp.set_defaults(func=cmd_ilp)

    sp = sub.add_parser("gadget", help="pendant-gadget perfect-domination ratio report")
    sp.add_argument("--m", type=int, default=3)
    sp.add_argument("--ell", type=int, default=2)
    sp.add_argument("--k", type=parse_range, default=parse_range("1..2"))
    budget_flags(sp)
    sp.set_defaults(func=cmd_gadget)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    a = parser.parse_args(argv)
    try:
        return a.func(a)
    except (gc.GraphFormatError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except TheoremContradiction as e:
        print(f"theorem contradiction: {e}", file=sys.stderr)
        return EXIT_DISCREPANCY


if __name__ == "__main__":
    sys.exit(main())
