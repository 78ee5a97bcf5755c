"""Exact minimum-weight solvers for the four Roman k-domination variants.

Three independent routes are provided:

* ``solve_oracle``: vectorised exhaustive enumeration of all (k+1)^|V|
  functions, used as ground truth on small graphs.
* ``solve_bnb``: depth-first branch and bound with incumbent and
  neighbourhood-closure pruning.
* ``solve_kmn_multiset``: K_{m,n} only; validity depends on a vertex's own
  value and the opposite side's aggregate, so only value multisets per side
  need enumerating.

``export_ilp`` writes a 0/1 linear model in CPLEX LP syntax for external
solvers.
"""

from __future__ import annotations

import json
import logging
import time
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Callable

import numpy as np

from .graph import Graph, complete_bipartite, detect_complete_bipartite
from .weights import (Variant, WeightFunction, uniform_upper_bound_function,
                      validate)

log = logging.getLogger(__name__)

ORACLE_MAX_VERTICES = 10
ORACLE_MAX_ASSIGNMENTS = 10 ** 8
MULTISET_MAX_K = 200
MULTISET_MAX_SIDE = 200
MULTISET_MAX_PER_SIDE = 2_000_000
_ORACLE_CHUNK = 1 << 16


class BudgetExceeded(RuntimeError):
    """Raised when a solver refuses or abandons an instance over budget."""

    def __init__(self, message: str, partial: "SolveResult | None" = None):
        super().__init__(message)
        self.partial = partial


@dataclass
class SolveResult:
    variant: Variant
    k: int
    value: int
    witness: WeightFunction
    method: str
    nodes_explored: int = 0
    elapsed: float = 0.0  # seconds
    exact: bool = True
    lower_bound: int | None = None

    def __post_init__(self):
        if self.lower_bound is None and self.exact:
            self.lower_bound = self.value

    def to_dict(self) -> dict:
        d = {
            "variant": self.variant.value,
            "k": self.k,
            "value": self.value,
            "witness": list(self.witness.values),
            "method": self.method,
            "nodes": self.nodes_explored,
            "elapsed_ms": int(round(self.elapsed * 1000)),
            "exact": self.exact,
        }
        if not self.exact:
            d["lower_bound"] = self.lower_bound
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@dataclass
class Budget:
    nodes: int | None = None
    ms: int | None = None

    def deadline(self, start: float) -> float | None:
        return None if self.ms is None else start + self.ms / 1000.0


def _component_lower_bound(g: Graph, k: int) -> int:
    return g.num_components() * k


# -- oracle -------------------------------------------------------------------------

def solve_oracle(g: Graph, k: int, variant: Variant,
                 max_vertices: int = ORACLE_MAX_VERTICES,
                 max_assignments: int = ORACLE_MAX_ASSIGNMENTS) -> SolveResult:
    """Enumerate every f: V -> {0..k} in lexicographic order.

    The witness is the lexicographically smallest valid function of minimum
    weight (vertex 0 most significant).
    """
    if k < 1:
        raise ValueError("k must be positive")
    n = g.n
    total = (k + 1) ** n
    if n > max_vertices or total > max_assignments:
        raise BudgetExceeded(
            f"oracle budget exceeded: |V|={n} (max {max_vertices}), "
            f"(k+1)^|V|={total} (max {max_assignments})")
    t0 = time.perf_counter()
    adj = np.zeros((n, n), dtype=np.int64)
    for u, v in g.edges:
        adj[u, v] = adj[v, u] = 1
    closed = adj + np.eye(n, dtype=np.int64)
    iso = np.array([g.degree(u) == 0 for u in range(n)], dtype=bool)
    powers = (k + 1) ** np.arange(n - 1, -1, -1, dtype=np.int64)

    best_w, best_idx = None, None
    for start in range(0, total, _ORACLE_CHUNK):
        idx = np.arange(start, min(total, start + _ORACLE_CHUNK), dtype=np.int64)
        x = (idx[:, None] // powers[None, :]) % (k + 1)
        if variant.is_strong:
            cov = x + (x * (2 * x > k)) @ adj
        else:
            cov = x @ closed
        met = cov == k if variant.is_perfect else cov >= k
        ok = np.where(2 * x < k, met, True)
        ok &= np.where(iso[None, :], x == k, True)
        valid = ok.all(axis=1)
        if not valid.any():
            continue
        w = x.sum(axis=1)
        w = np.where(valid, w, np.iinfo(np.int64).max)
        i = int(np.argmin(w))
        if best_w is None or w[i] < best_w:
            best_w, best_idx = int(w[i]), int(idx[i])
    assert best_idx is not None  # the uniform function is always valid
    digits = [(best_idx // (k + 1) ** (n - 1 - j)) % (k + 1) for j in range(n)]
    f = WeightFunction(tuple(digits), k)
    return SolveResult(variant, k, best_w, f, "oracle", total,
                       time.perf_counter() - t0)


# -- branch and bound ----------------------------------------------------------

class _Abort(Exception):
    pass


def strong_value_set(k: int) -> list[int]:
    """Values a minimum gap-free strong function may use: 0 and those >= k/2."""
    return [0] + [x for x in range(1, k + 1) if 2 * x >= k]


def _search(g: Graph, k: int, variant: Variant, order: list[int],
            domains: list[list[int]], bound: int, strict: bool,
            first_only: bool, tick: Callable[[], None]):
    """DFS over `order`.  Returns the best (weight, values) below `bound`.

    strict=True prunes partial+lb >= bound (improvement search); otherwise
    partial+lb > bound and the first complete leaf is returned.
    """
    n = g.n
    strong = variant.is_strong
    perfect = variant.is_perfect
    nbrs = [g.neighbors(u) for u in range(n)]
    closed = [nbrs[u] + (u,) for u in range(n)]
    vals = [-1] * n
    cov = [0] * n           # assigned neighbour contribution
    open_ = [len(nbrs[u]) for u in range(n)]  # unassigned neighbours
    best = {"w": bound, "vals": None}

    def contrib(x: int) -> int:
        return x if (not strong or 2 * x > k) else 0

    def lower_extra() -> int:
        # largest single outstanding deficit among assigned low vertices
        need = 0
        for u in range(n):
            x = vals[u]
            if x >= 0 and 2 * x < k and open_[u]:
                d = k - x - cov[u]
                if d > need:
                    need = d
        return need

    def ok_around(v: int) -> bool:
        for w in closed[v]:
            x = vals[w]
            if x < 0 or 2 * x >= k or not nbrs[w]:
                continue
            c = x + cov[w]
            if open_[w] == 0:
                if c < k or (perfect and c != k):
                    return False
            else:
                if perfect and c > k:
                    return False
                if c + open_[w] * k < k:
                    return False
        return True

    def rec(pos: int, partial: int):
        tick()
        if pos == n:
            if strict and partial >= best["w"]:
                return False
            if not strict and partial > best["w"]:
                return False
            best["w"], best["vals"] = partial, list(vals)
            return first_only
        v = order[pos]
        for x in domains[v]:
            w = partial + x
            if strict:
                if w >= best["w"]:
                    break
            elif w > best["w"]:
                break
            vals[v] = x
            cx = contrib(x)
            for u in nbrs[v]:
                cov[u] += cx
                open_[u] -= 1
            good = ok_around(v)
            if good:
                lb = w + lower_extra()
                good = lb < best["w"] if strict else lb <= best["w"]
            if good and rec(pos + 1, w):
                return True
            for u in nbrs[v]:
                cov[u] -= cx
                open_[u] += 1
            vals[v] = -1
        return False

    rec(0, 0)
    return best["w"], best["vals"]


def degree_order(g: Graph) -> list[int]:
    return sorted(range(g.n), key=lambda u: (-g.degree(u), u))


def solve_bnb(g: Graph, k: int, variant: Variant, budget: Budget | None = None,
              use_value_restriction: bool = True) -> SolveResult:
    """Exact optimum by branch and bound.

    Phase one searches vertices in descending-degree order for the optimum
    value; for the strong variants candidate values are limited to 0 and
    values >= k/2 (a minimum function can always be normalised that way).
    Phase two searches in vertex-index order over the full value range for
    the lexicographically smallest optimal function.  If a budget runs out
    the result carries ``exact=False`` and a lower bound.
    """
    if k < 1:
        raise ValueError("k must be positive")
    budget = budget or Budget()
    t0 = time.perf_counter()
    deadline = budget.deadline(t0)
    count = [0]

    def tick():
        count[0] += 1
        if budget.nodes is not None and count[0] > budget.nodes:
            raise _Abort("node budget")
        if deadline is not None and not count[0] & 1023 and time.perf_counter() > deadline:
            raise _Abort("time budget")

    full = list(range(k + 1))
    restricted = strong_value_set(k) if (variant.is_strong and use_value_restriction) else full
    iso = set(g.isolated())
    dom1 = [[k] if u in iso else restricted for u in range(g.n)]
    dom2 = [[k] if u in iso else full for u in range(g.n)]

    start = uniform_upper_bound_function(g, k)
    lb0 = _component_lower_bound(g, k)
    try:
        w, vals = _search(g, k, variant, degree_order(g), dom1, start.weight,
                          True, False, tick)
    except _Abort as e:
        # phase one state is lost on abort; fall back to the starting incumbent
        res = SolveResult(variant, k, start.weight, start, "bnb", count[0],
                          time.perf_counter() - t0, exact=False, lower_bound=lb0)
        raise BudgetExceeded(f"bnb {e} exceeded after {count[0]} nodes", res) from None
    if vals is None:
        opt, witness = start.weight, list(start.values)
    else:
        opt, witness = w, vals
    try:
        w2, vals2 = _search(g, k, variant, list(range(g.n)), dom2, opt,
                            False, True, tick)
        if vals2 is not None:
            witness = vals2
    except _Abort:
        log.info("bnb: canonical witness search out of budget; keeping phase-one witness")
    f = WeightFunction(tuple(witness), k)
    return SolveResult(variant, k, opt, f, "bnb", count[0], time.perf_counter() - t0)


def solve_bnb_or_bound(g: Graph, k: int, variant: Variant,
                       budget: Budget | None = None) -> SolveResult:
    """Like solve_bnb but returns the flagged partial result instead of raising."""
    try:
        return solve_bnb(g, k, variant, budget)
    except BudgetExceeded as e:
        assert e.partial is not None
        return e.partial


# -- K_{m,n} multiset solver -------------------------------------------------------

@dataclass(frozen=True)
class _SideKey:
    total: int      # sum of the side's values
    strong: int     # sum of the side's values exceeding k/2
    lo: int | None  # smallest low value, None if no low vertex
    hi: int | None  # largest low value


def _side_profiles(size: int, k: int) -> dict[_SideKey, tuple[int, ...]]:
    out: dict[_SideKey, tuple[int, ...]] = {}
    seen = 0
    for t in combinations_with_replacement(range(k + 1), size):
        seen += 1
        if seen > MULTISET_MAX_PER_SIDE:
            raise BudgetExceeded(f"more than {MULTISET_MAX_PER_SIDE} multisets per side")
        lows = [x for x in t if 2 * x < k]
        key = _SideKey(sum(t), sum(x for x in t if 2 * x > k),
                       lows[0] if lows else None, lows[-1] if lows else None)
        if key not in out:  # lexicographic generation order: first is smallest
            out[key] = t
    return out


def _side_ok(key: _SideKey, offered: int, k: int, perfect: bool) -> bool:
    if key.lo is None:
        return True
    if perfect:
        return key.lo == key.hi and key.lo + offered == k
    return key.lo + offered >= k


def solve_kmn_multiset(m: int, n: int, k: int, variant: Variant) -> SolveResult:
    """Exact optimum on K_{m,n}; witness vertices follow complete_bipartite(m, n)."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    if k < 1 or k > MULTISET_MAX_K or m > MULTISET_MAX_SIDE or n > MULTISET_MAX_SIDE:
        raise BudgetExceeded(f"multiset caps: k <= {MULTISET_MAX_K}, m, n <= {MULTISET_MAX_SIDE}")
    t0 = time.perf_counter()
    pa = _side_profiles(m, k)
    pb = pa if n == m else _side_profiles(n, k)
    strong, perfect = variant.is_strong, variant.is_perfect
    pairs = 0
    best = None
    for ka, ta in pa.items():
        offer_a = ka.strong if strong else ka.total
        for kb, tb in pb.items():
            pairs += 1
            w = ka.total + kb.total
            if best is not None and w > best[0]:
                continue
            offer_b = kb.strong if strong else kb.total
            if not (_side_ok(ka, offer_b, k, perfect) and _side_ok(kb, offer_a, k, perfect)):
                continue
            cand = (w, ta, tb)
            if best is None or cand < best:
                best = cand
    assert best is not None
    w, ta, tb = best
    f = WeightFunction(ta + tb, k)
    return SolveResult(variant, k, w, f, "multiset", pairs, time.perf_counter() - t0)


# -- dispatch -------------------------------------------------------------------------

METHODS = ("oracle", "bnb", "multiset", "auto")


def canonical_kmn(g: Graph) -> tuple[int, int] | None:
    """(m, n) if g is K_{m,n} labelled with side A = 0..m-1, else None."""
    mn = detect_complete_bipartite(g)
    if mn is None:
        return None
    m, n = mn
    if complete_bipartite(m, n)[0] == g:
        return m, n
    return None


def solve(g: Graph, k: int, variant: Variant, method: str = "auto",
          budget: Budget | None = None) -> SolveResult:
    if method == "auto":
        if canonical_kmn(g) is not None:
            method = "multiset"
        elif g.n <= 8 and (k + 1) ** g.n <= 10 ** 6:
            method = "oracle"
        else:
            method = "bnb"
    if method == "oracle":
        return solve_oracle(g, k, variant)
    if method == "bnb":
        return solve_bnb(g, k, variant, budget)
    if method == "multiset":
        mn = canonical_kmn(g)
        if mn is None:
            raise ValueError("multiset method needs a K_{m,n} with side A labelled first")
        return solve_kmn_multiset(mn[0], mn[1], k, variant)
    raise ValueError(f"unknown method {method!r}")


def check_result(g: Graph, res: SolveResult) -> bool:
    return (validate(g, res.witness, res.variant).ok
            and res.witness.weight == res.value)


# -- LP export -------------------------------------------------------------------------

def _terms(coefs: list[tuple[int, str]]) -> str:
    parts = []
    for c, name in coefs:
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = name if mag == 1 else f"{mag} {name}"
        parts.append(f"{sign} {body}")
    if not parts:
        return "0 x_dummy"
    s = " ".join(parts)
    return s[2:] if s.startswith("+ ") else s


def _wrap(prefix: str, body: str, width: int = 200) -> list[str]:
    line, out = f" {prefix}", []
    for tok in body.split(" "):
        if len(line) + len(tok) + 1 > width:
            out.append(line)
            line = "  "
        line += " " + tok
    out.append(line)
    return out


def export_ilp(g: Graph, k: int, variant: Variant) -> str:
    """CPLEX-LP text for the 0/1 model; x_v_i says vertex v takes value i."""
    n = g.n
    x = lambda v, i: f"x_{v}_{i}"
    rng = range(k + 1)
    out = [f"\\ Roman k-domination model: variant={variant.value} k={k} |V|={n}",
           "Minimize"]
    obj = [(i, x(v, i)) for v in range(n) for i in rng if i]
    out += _wrap("obj:", _terms(obj)) if obj else [" obj: 0 x_0_0" if n else " obj:"]
    out.append("Subject To")
    for v in range(n):
        out += _wrap(f"assign_{v}:", _terms([(1, x(v, i)) for i in rng]) + " = 1")
    for u in range(n):
        if g.degree(u) == 0:
            out.append(f" pin_{u}: {x(u, k)} = 1")
            continue
        low = [(1, x(u, i)) for i in rng if 2 * i < k]
        out += _wrap(f"low_{u}:", _terms([(1, f"z_{u}")] + [(-c, nm) for c, nm in low]) + " = 0")
        if variant.is_strong:
            cov = [(i, x(u, i)) for i in rng if i]
            cov += [(i, x(v, i)) for v in g.neighbors(u) for i in rng if 2 * i > k]
        else:
            cov = [(i, x(v, i)) for v in g.closed_neighbors(u) for i in rng if i]
        out += _wrap(f"cover_{u}:", _terms(cov + [(-k, f"z_{u}")]) + " >= 0")
        if variant.is_perfect:
            big = k * (g.degree(u) + 1)
            out += _wrap(f"exact_{u}:", _terms(cov + [(big, f"z_{u}")]) + f" <= {k + big}")
    out.append("Binary")
    names = [x(v, i) for v in range(n) for i in rng]
    names += [f"z_{u}" for u in range(n) if g.degree(u)]
    for i in range(0, len(names), 10):
        out.append(" " + " ".join(names[i:i + 10]))
    out.append("End")
    return "\n".join(out) + "\n"
