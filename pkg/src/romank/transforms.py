"""Constructive transforms between dominating functions, and the
inequality suite that checks the known bounds on small graphs.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any

from .graph import Graph, attach_pendants, complete_bipartite
from .solvers import (Budget, BudgetExceeded, SolveResult, solve, solve_bnb)
from .weights import (ALL_VARIANTS, Variant, WeightFunction, ceil_half,
                      uniform_upper_bound_function, validate)

GADGET_MAX_VERTICES = 10_000


# -- transforms ---------------------------------------------------------------------

def normalize_strong(g: Graph, f: WeightFunction) -> WeightFunction:
    """Remove every value strictly between 0 and k/2 without raising the weight.

    A gap vertex u is zeroed outright when its strong neighbours already
    supply k; otherwise the shortfall k - j is moved onto its lowest-indexed
    strong neighbour (capped at k since that neighbour carries at most j).
    """
    if not validate(g, f, Variant.STRONG):
        raise ValueError("input is not a strong Roman k-dominating function")
    k = f.k
    vals = list(f.values)
    for u in range(g.n):
        if not (0 < vals[u] and 2 * vals[u] < k):
            continue
        strong = [v for v in g.neighbors(u) if 2 * vals[v] > k]
        j = sum(vals[v] for v in strong)
        vals[u] = 0
        if j < k:
            vals[strong[0]] += k - j
    return WeightFunction(tuple(vals), k)


def lift_strong(g: Graph, f: WeightFunction) -> WeightFunction:
    """Gap-free strong k-function -> strong (k+1)-function: non-zero values gain 1."""
    if not validate(g, f, Variant.STRONG):
        raise ValueError("input is not a strong Roman k-dominating function")
    if not f.is_gap_free():
        raise ValueError("input has values strictly between 0 and k/2; normalize first")
    return WeightFunction(tuple(x + 1 if x else 0 for x in f.values), f.k + 1)


def roman_lift_threshold(k: int) -> int:
    return k // 2


def lift_roman(g: Graph, f: WeightFunction) -> WeightFunction:
    """Roman k-function -> Roman (k+1)-function.

    Values <= floor(k/2) gain 1, the rest are kept; isolated vertices are
    re-pinned to k+1.  Weight grows by #{f <= floor(k/2)} + #isolated.
    """
    if not validate(g, f, Variant.ROMAN):
        raise ValueError("input is not a Roman k-dominating function")
    k, r = f.k, roman_lift_threshold(f.k)
    out = [x + 1 if x <= r else x for x in f.values]
    for u in g.isolated():
        out[u] = k + 1
    return WeightFunction(tuple(out), k + 1)


# -- pendant gadget --------------------------------------------------------------

@dataclass(frozen=True)
class GadgetParams:
    m: int = 3
    ell: int = 2

    def __post_init__(self):
        if self.m < 3:
            raise ValueError("gadget needs m >= 3")
        if self.ell < 2:
            raise ValueError("gadget needs ell >= 2")

    @property
    def vertex_count(self) -> int:
        return self.m ** self.ell + 4 * self.m


def build_gadget(p: GadgetParams) -> Graph:
    """K_{m, m^ell} with three pendants hung on every vertex of the small side."""
    if p.vertex_count > GADGET_MAX_VERTICES:
        raise ValueError(f"gadget would have {p.vertex_count} > {GADGET_MAX_VERTICES} vertices")
    g, lab = complete_bipartite(p.m, p.m ** p.ell)
    return attach_pendants(g, lab.side_a, 3)


def gadget_lower_bound_check(p: GadgetParams, k: int,
                             budget: Budget | None = None) -> dict:
    """Exact perfect number of the gadget against m*k + m^ell*ceil(k/2) and |V|*ceil(k/2)."""
    g = build_gadget(p)
    res = solve_bnb(g, k, Variant.PERFECT, budget)
    half = Fraction(k, 2) if k % 2 == 0 else Fraction(k + 1, 2)
    bound = p.m * k + p.m ** p.ell * ceil_half(k)
    ratio = Fraction(res.value, g.n)
    return {
        "m": p.m, "ell": p.ell, "k": k, "vertices": g.n,
        "gamma_p": res.value,
        "structural_bound": bound,
        "structural_bound_holds": res.value >= bound,
        "ratio": str(ratio),
        "ratio_float": float(ratio),
        "target": str(half),
        "ratio_vs_target": float(ratio / half),
        "upper_bound": g.n * ceil_half(k),
        "witness": list(res.witness.values),
        "nodes": res.nodes_explored,
    }


# -- inequality suite ------------------------------------------------------------

@dataclass
class CheckRecord:
    check: str
    graph_id: str
    k: int
    lhs: int
    rhs: int
    holds: bool
    witness: list[int] | None = None
    note: str = ""

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        if d["witness"] is None:
            del d["witness"]
        if not d["note"]:
            del d["note"]
        return d


@dataclass
class SuiteReport:
    graph_id: str
    records: list[CheckRecord] = field(default_factory=list)
    partial: bool = False

    @property
    def ok(self) -> bool:
        return not self.partial and all(r.holds for r in self.records)

    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.holds]

    def to_list(self) -> list[dict]:
        return [r.to_dict() for r in self.records]


def _le(out, name, gid, k, lhs, rhs, witness=None, note=""):
    out.append(CheckRecord(name, gid, k, int(lhs), int(rhs), lhs <= rhs, witness, note))


def check_inequality_suite(g: Graph, k_max: int, graph_id: str = "g",
                           spanning_samples: int = 3, seed: int = 0,
                           method: str = "auto",
                           budget: Budget | None = None) -> SuiteReport:
    """Run every bound check for k = 1..k_max; solves up to k_max + 1."""
    rep = SuiteReport(graph_id)
    out = rep.records
    cache: dict[tuple[Graph, int, Variant], SolveResult] = {}

    def val(h: Graph, k: int, v: Variant) -> SolveResult:
        key = (h, k, v)
        if key not in cache:
            cache[key] = solve(h, k, v, method, budget)
        return cache[key]

    t = g.num_components()
    iso = len(g.isolated())
    rng = random.Random(seed)
    extra = g.non_edges()
    rng.shuffle(extra)
    extra = extra[:spanning_samples]
    try:
        for k in range(1, k_max + 1):
            r = {v: val(g, k, v) for v in ALL_VARIANTS}
            nxt = {v: val(g, k + 1, v) for v in (Variant.ROMAN, Variant.STRONG)}
            gr, gp, gs, gps = (r[v].value for v in
                               (Variant.ROMAN, Variant.PERFECT, Variant.STRONG, Variant.PERFECT_STRONG))
            upper = uniform_upper_bound_function(g, k).weight
            if g.n:
                _le(out, "k_le_roman", graph_id, k, k, gr)
            _le(out, "components_le_min", graph_id, k, t * k, min(gr, gp, gs, gps))
            _le(out, "roman_le_perfect", graph_id, k, gr, gp)
            _le(out, "perfect_le_upper", graph_id, k, gp, upper)
            _le(out, "roman_le_strong", graph_id, k, gr, gs)
            _le(out, "strong_le_perfect_strong", graph_id, k, gs, gps)
            _le(out, "perfect_strong_le_upper", graph_id, k, gps, upper)

            # strong lift: gamma^s_{k+1} <= gamma^s_k + |V| - |V_0| <= 2 gamma^s_k
            fs = normalize_strong(g, r[Variant.STRONG].witness)
            nonzero = g.n - len(fs.level_sets()[0])
            mid = gs + nonzero
            _le(out, "strong_next_le_lift", graph_id, k, nxt[Variant.STRONG].value, mid,
                list(fs.values))
            _le(out, "strong_lift_le_double", graph_id, k, mid, 2 * gs)
            strict = nxt[Variant.STRONG].value < 2 * gs
            out.append(CheckRecord("strong_next_lt_double", graph_id, k,
                                   nxt[Variant.STRONG].value, 2 * gs, strict or k <= 2,
                                   note="" if strict else "equality (permitted for k<=2)"))
            ls = lift_strong(g, fs)
            ok = (validate(g, ls, Variant.STRONG).ok and ls.weight == mid)
            out.append(CheckRecord("lift_strong_valid", graph_id, k, ls.weight, mid, ok,
                                   list(ls.values)))

            # plain lift: gamma_{k+1} <= gamma_k + sum_{i<=r}|V_i| <= 2 gamma_k + |V_0|
            fr = r[Variant.ROMAN].witness
            levels = fr.level_sets()
            rr = roman_lift_threshold(k)
            low_count = sum(len(levels[i]) for i in range(rr + 1))
            mid_r = gr + low_count + iso
            _le(out, "roman_next_le_lift", graph_id, k, nxt[Variant.ROMAN].value, mid_r,
                list(fr.values), "" if not iso else f"+{iso} isolated")
            _le(out, "roman_lift_le_double", graph_id, k, mid_r, 2 * gr + len(levels[0]))
            lr = lift_roman(g, fr)
            ok = validate(g, lr, Variant.ROMAN).ok and lr.weight == mid_r
            out.append(CheckRecord("lift_roman_valid", graph_id, k, lr.weight, mid_r, ok,
                                   list(lr.values)))

            # perfect strong: each low vertex has exactly one strong neighbour
            fps = r[Variant.PERFECT_STRONG].witness
            counts = [sum(1 for v in g.neighbors(u) if 2 * fps[v] > k)
                      for u in range(g.n) if g.neighbors(u) and 2 * fps[u] < k]
            out.append(CheckRecord("perfect_strong_unique_neighbor", graph_id, k,
                                   max(counts, default=1), 1,
                                   all(c == 1 for c in counts), list(fps.values)))

            for v in ALL_VARIANTS:
                ok = validate(g, r[v].witness, v).ok and r[v].witness.weight == r[v].value
                out.append(CheckRecord(f"witness_valid_{v.value}", graph_id, k,
                                       r[v].witness.weight, r[v].value, ok))

            for (a, b) in extra:
                h = g.add_edge(a, b)
                for v in (Variant.ROMAN, Variant.STRONG):
                    _le(out, f"spanning_monotone_{v.value}", graph_id, k,
                        val(h, k, v).value, r[v].value, note=f"added edge {a}-{b}")
    except BudgetExceeded as e:
        rep.partial = True
        out.append(CheckRecord("budget", graph_id, -1, 0, 0, False, note=str(e)))
    return rep
