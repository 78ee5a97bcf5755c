"""Closed forms for the four domination numbers of K_{m,n}.

Every evaluator normalises to m <= n (K_{m,n} and K_{n,m} are isomorphic)
and returns a FormulaResult tagged with the case that produced it.  The
perfect number for m, n >= 3 is assembled from the integer solutions of
three small linear systems; see ``solve_system_hub``, ``solve_system_two_hubs``
and ``solve_system_uniform``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .solvers import SolveResult, solve_kmn_multiset
from .weights import Variant


@dataclass(frozen=True)
class FormulaResult:
    kind: str  # "exact", "one_of" or "range"
    lo: int
    hi: int
    case_label: str
    lo_rational: str | None = None  # unrounded lower bound for range results

    def __post_init__(self):
        if self.kind == "exact" and self.lo != self.hi:
            raise ValueError("exact result needs lo == hi")
        if self.kind == "one_of" and not self.lo < self.hi:
            raise ValueError("one_of needs a < b")
        if self.kind == "range" and not self.lo <= self.hi:
            raise ValueError("range needs lo <= hi")
        if self.kind not in ("exact", "one_of", "range"):
            raise ValueError(f"bad kind {self.kind!r}")

    @classmethod
    def exact(cls, value: int, label: str) -> "FormulaResult":
        return cls("exact", value, value, label)

    @classmethod
    def one_of(cls, a: int, b: int, label: str) -> "FormulaResult":
        return cls("one_of", a, b, label)

    @classmethod
    def range(cls, lo: int, hi: int, label: str,
              lo_rational: str | None = None) -> "FormulaResult":
        return cls("range", lo, hi, label, lo_rational)

    @property
    def is_exact(self) -> bool:
        return self.kind == "exact"

    @property
    def value(self) -> int:
        if not self.is_exact:
            raise ValueError(f"{self.kind} result has no single value")
        return self.lo

    def contains(self, x: int) -> bool:
        if self.kind == "one_of":
            return x in (self.lo, self.hi)
        return self.lo <= x <= self.hi

    def render(self) -> str:
        if self.kind == "exact":
            return str(self.lo)
        if self.kind == "one_of":
            return f"{self.lo}|{self.hi}"
        return f"[{self.lo},{self.hi}]"

    def to_dict(self) -> dict:
        d = {"kind": self.kind, "case": self.case_label}
        if self.kind == "exact":
            d["value"] = self.lo
        elif self.kind == "one_of":
            d["options"] = [self.lo, self.hi]
        else:
            d["lo"], d["hi"] = self.lo, self.hi
            if self.lo_rational is not None:
                d["lo_rational"] = self.lo_rational
        return d


@dataclass(frozen=True)
class SystemSolution:
    """Integer solution of one of the K_{m,n} perfect-domination systems.

    ``i`` is the common value of the low vertices of A, ``j`` that of B.
    ``hub_a``/``hub_b`` are the values of the single non-low vertex on each
    side, or None when that side has none.
    """
    i: int
    j: int
    hub_a: int | None
    hub_b: int | None
    weight: int


def _ordered(m: int, n: int) -> tuple[int, int]:
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    return (m, n) if m <= n else (n, m)


def _check_k(k: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise ValueError("k must be a positive integer")


def _hub_ok(h: int, k: int) -> bool:
    return 2 * h >= k and h <= k


def _low(x: int, k: int) -> bool:
    return 0 <= x and 2 * x <= k - 1


# -- perfect strong ------------------------------------------------------------------

def gamma_ps_kmn(m: int, n: int, k: int) -> FormulaResult:
    _check_k(k)
    m, n = _ordered(m, n)
    if m == 1:
        return FormulaResult.exact(k, "ps: m=1 -> k")
    if m == 2 and k % 2 == 0:
        return FormulaResult.exact(3 * k // 2, "ps: k even, m=2 -> 3k/2")
    return FormulaResult.exact(2 * k, "ps: otherwise -> 2k")


# -- strong -------------------------------------------------------------------------

def gamma_s_kmn(m: int, n: int, k: int) -> FormulaResult:
    _check_k(k)
    m, n = _ordered(m, n)
    if m == 1:
        return FormulaResult.exact(k, "s: m=1 -> k")
    if m == 2:
        if k == 2:
            return FormulaResult.exact(3, "s: k=2, m=2 -> 3")
        if k % 2:
            return FormulaResult.exact(k + 1, "s: k odd, m=2 -> k+1")
        return FormulaResult.exact(k + 2, "s: k>2 even, m=2 -> k+2")
    if m == 3:
        if k == 1:
            return FormulaResult.exact(2, "s: k=1, m=3 -> 2k = 2")
        if k == 2:
            # the table's (3k+4)/2 row starts at k=4; k=2 gives 2k = 4
            return FormulaResult.exact(4, "s: k=2, m=3 -> 4")
        if k % 2:
            return FormulaResult.exact((3 * k + 3) // 2, "s: k>1 odd, m=3 -> (3k+3)/2")
        return FormulaResult.exact((3 * k + 4) // 2, "s: k>2 even, m=3 -> (3k+4)/2")
    return FormulaResult.exact(2 * k, "s: else -> 2k")


# -- perfect ------------------------------------------------------------------------

def solve_system_hub(m: int, n: int, k: int) -> list[SystemSolution]:
    """One non-low vertex in total, all others low.

    Hub in A:  j + (m-1) i + hub = k  and  i + n j = k, weight k + (n-1) j.
    Hub in B is the mirror image, weight k + (m-1) i.
    """
    _check_k(k)
    if m < 3 or n < 3:
        raise ValueError("needs m, n >= 3")
    out = []
    for j in range((k + 1) // 2):
        i = k - n * j
        if not _low(i, k):
            continue
        hub = k - (m - 1) * i - j
        if _hub_ok(hub, k):
            out.append(SystemSolution(i, j, hub, None, k + (n - 1) * j))
    for i in range((k + 1) // 2):
        j = k - m * i
        if not _low(j, k):
            continue
        hub = k - (n - 1) * j - i
        if _hub_ok(hub, k):
            out.append(SystemSolution(i, j, None, hub, k + (m - 1) * i))
    return sorted(out, key=lambda s: (s.weight, s.j, s.i, s.hub_a is None))


def solve_system_two_hubs(m: int, n: int, k: int) -> list[SystemSolution]:
    """One non-low vertex on each side; weight 2k - (i + j)."""
    _check_k(k)
    if m < 3 or n < 3:
        raise ValueError("needs m, n >= 3")
    out = []
    for i in range((k + 1) // 2):
        for j in range((k + 1) // 2):
            ha = k - (m - 1) * i - j
            hb = k - (n - 1) * j - i
            if _hub_ok(ha, k) and _hub_ok(hb, k):
                out.append(SystemSolution(i, j, ha, hb, 2 * k - i - j))
    return sorted(out, key=lambda s: (s.weight, s.j, s.i))


def solve_system_uniform(m: int, n: int, k: int) -> SystemSolution | None:
    """All vertices low: i + n j = k and j + m i = k."""
    _check_k(k)
    if m < 3 or n < 3:
        raise ValueError("needs m, n >= 3")
    d = m * n - 1
    if ((n - 1) * k) % d or ((m - 1) * k) % d:
        return None
    i, j = (n - 1) * k // d, (m - 1) * k // d
    if not (_low(i, k) and _low(j, k)):
        return None
    return SystemSolution(i, j, None, None, m * i + n * j)


def gamma_p_kmn(m: int, n: int, k: int) -> FormulaResult:
    _check_k(k)
    m, n = _ordered(m, n)
    if m == 1:
        return FormulaResult.exact(k, "p: m=1 -> k")
    if m == 2:
        if k % 2 == 0:
            return FormulaResult.exact(k, "p: k even, m=2 -> k")
        d = 2 * n - 1
        if k % d == 0:
            i, j = k * (n - 1) // d, k // d
            if _low(i, k) and _low(j, k):
                return FormulaResult.exact(k * (3 * n - 2) // d,
                                           f"p: k odd, m=2, uniform system i={i} j={j} -> k(3n-2)/(2n-1)")
        return FormulaResult.exact((3 * k + 1) // 2, "p: k odd, m=2 -> (3k+1)/2")
    cands = [(2 * k, "2k")]
    hub = solve_system_hub(m, n, k)
    if hub:
        s = hub[0]
        cands.append((s.weight, f"one-hub system i={s.i} j={s.j}"))
    two = solve_system_two_hubs(m, n, k)
    if two:
        s = two[0]
        cands.append((two[0].weight, f"two-hub system i={s.i} j={s.j}"))
    uni = solve_system_uniform(m, n, k)
    if uni is not None:
        cands.append((uni.weight, f"uniform system i={uni.i} j={uni.j}"))
    w, how = min(cands)
    return FormulaResult.exact(w, f"p: n>=m>=3, min over systems -> {how}")


# -- plain Roman ---------------------------------------------------------------------

def roman_lower_bound(m: int, k: int) -> Fraction:
    return Fraction(2 * m * k, m + 1)


def gamma_kmn(m: int, n: int, k: int) -> FormulaResult:
    _check_k(k)
    m, n = _ordered(m, n)
    if m == 1:
        return FormulaResult.exact(k, "r: m=1 -> k")
    if m == 2:
        if k % 2 == 0:
            return FormulaResult.exact(k, "r: k even, m=2 -> k")
        return FormulaResult.exact(k + 1, "r: k odd, m=2 -> k+1")
    if m == 3:
        lo, hi = (3 * k + 1) // 2, (3 * k + 3) // 2
        if k % 2 == 0:
            return FormulaResult.exact(3 * k // 2, "r: k even, m=3 -> 3k/2")
        if k in (1, 3):
            return FormulaResult.exact(lo, "r: k in {1,3}, m=3 -> (3k+1)/2")
        if n == 3:
            return FormulaResult.exact(lo, "r: k odd, m=n=3 -> (3k+1)/2")
        if n >= 6:
            return FormulaResult.exact(hi, "r: k>=5 odd, m=3, n>=6 -> (3k+3)/2")
        if n == 5:
            if k >= 11:
                return FormulaResult.exact(hi, "r: k>=11 odd, m=3, n=5 -> (3k+3)/2")
            return FormulaResult.one_of(lo, hi, "r: 5<=k<=9 odd, m=3, n=5 -> (3k+1)/2 or (3k+3)/2")
        if k >= 17:
            return FormulaResult.exact(hi, "r: k>=17 odd, m=3, n=4 -> (3k+3)/2")
        return FormulaResult.one_of(lo, hi, "r: 5<=k<=15 odd, m=3, n=4 -> (3k+1)/2 or (3k+3)/2")
    b = roman_lower_bound(m, k)
    lo = -((-b.numerator) // b.denominator)
    return FormulaResult.range(lo, 2 * k, f"r: n>=m>=4 -> 2mk/(m+1)={b} <= g <= 2k", str(b))


FORMULAS: dict[Variant, Callable[[int, int, int], FormulaResult]] = {
    Variant.ROMAN: gamma_kmn,
    Variant.PERFECT: gamma_p_kmn,
    Variant.STRONG: gamma_s_kmn,
    Variant.PERFECT_STRONG: gamma_ps_kmn,
}

THEOREM_VARIANT = {"3.1": Variant.PERFECT_STRONG, "3.2": Variant.STRONG,
                   "3.3": Variant.PERFECT, "3.4": Variant.ROMAN}


def formula(m: int, n: int, k: int, variant: Variant) -> FormulaResult:
    return FORMULAS[variant](m, n, k)


class TheoremContradiction(AssertionError):
    def __init__(self, m, n, k, variant, fr: FormulaResult, result: SolveResult):
        super().__init__(
            f"{variant.value} K_{m},{n} k={k}: solver value {result.value} outside "
            f"formula set {fr.render()} ({fr.case_label}); witness {list(result.witness.values)}")
        self.formula = fr
        self.result = result


def resolve(m: int, n: int, k: int, variant: Variant,
            fr: FormulaResult | None = None) -> int:
    """Exact value via the multiset solver, checked against the formula's set."""
    if fr is None:
        fr = formula(m, n, k, variant)
    res = solve_kmn_multiset(m, n, k, variant)
    if not fr.contains(res.value):
        raise TheoremContradiction(m, n, k, variant, fr, res)
    return res.value
