"""Weight functions f: V -> {0..k} and the four dominating-function predicates.

All threshold tests are done on doubled integers: a vertex is *low* when
2 f(u) < k and *strong* when 2 f(v) > k.  For even k the value k/2 is
neither.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph

MAX_K = 1_000_000


class Variant(enum.Enum):
    ROMAN = "roman"
    PERFECT = "perfect"
    STRONG = "strong"
    PERFECT_STRONG = "perfect-strong"

    @property
    def is_strong(self) -> bool:
        return self in (Variant.STRONG, Variant.PERFECT_STRONG)

    @property
    def is_perfect(self) -> bool:
        return self in (Variant.PERFECT, Variant.PERFECT_STRONG)

    @classmethod
    def parse(cls, name: str) -> "Variant":
        key = name.strip().lower().replace("_", "-")
        aliases = {"ps": "perfect-strong", "perfectstrong": "perfect-strong",
                   "plain": "roman", "p": "perfect", "s": "strong"}
        return cls(aliases.get(key, key))


ALL_VARIANTS = tuple(Variant)


@dataclass(frozen=True)
class WeightFunction:
    values: tuple[int, ...]
    k: int

    def __post_init__(self):
        if not 1 <= self.k <= MAX_K:
            raise ValueError(f"k must lie in [1, {MAX_K}], got {self.k}")
        bad = [x for x in self.values if not 0 <= x <= self.k]
        if bad:
            raise ValueError(f"values {bad} outside 0..{self.k}")

    @classmethod
    def of(cls, values: Sequence[int], k: int) -> "WeightFunction":
        return cls(tuple(int(x) for x in values), k)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, u: int) -> int:
        return self.values[u]

    @property
    def weight(self) -> int:
        return sum(self.values)

    def level_sets(self) -> list[list[int]]:
        """(V_0, ..., V_k) as vertex lists."""
        levels: list[list[int]] = [[] for _ in range(self.k + 1)]
        for u, x in enumerate(self.values):
            levels[x].append(u)
        return levels

    @classmethod
    def from_level_sets(cls, levels: Sequence[Sequence[int]]) -> "WeightFunction":
        n = sum(len(s) for s in levels)
        values = [-1] * n
        for i, s in enumerate(levels):
            for u in s:
                values[u] = i
        return cls(tuple(values), len(levels) - 1)

    def is_low(self, u: int) -> bool:
        return 2 * self.values[u] < self.k

    def is_strong(self, u: int) -> bool:
        return 2 * self.values[u] > self.k

    def is_gap_free(self) -> bool:
        return all(x == 0 or 2 * x >= self.k for x in self.values)

    def to_text(self) -> str:
        return f"k {self.k}\n" + "".join(f"{x}\n" for x in self.values)

    @classmethod
    def from_text(cls, text: str) -> "WeightFunction":
        lines = [ln.strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln and not ln.startswith("#")]
        if not lines or not lines[0].startswith("k "):
            raise ValueError("expected 'k <k>' header")
        k = int(lines[0].split()[1])
        # one value per line as written by to_text, but any whitespace layout is read
        return cls(tuple(int(x) for ln in lines[1:] for x in ln.split()), k)


@dataclass(frozen=True)
class Violation:
    vertex: int
    kind: str  # "isolated", "short" or "excess"
    covered: int
    required: int

    @property
    def gap(self) -> int:
        return self.covered - self.required


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...] = ()

    def __bool__(self) -> bool:
        return self.ok

    @property
    def first(self) -> Violation | None:
        return self.violations[0] if self.violations else None


def coverage(g: Graph, f: WeightFunction, u: int, variant: Variant) -> int:
    """Left-hand side of the variant's covering condition at u."""
    vals = f.values
    if variant.is_strong:
        return vals[u] + sum(vals[v] for v in g.neighbors(u) if 2 * vals[v] > f.k)
    return vals[u] + sum(vals[v] for v in g.neighbors(u))


def validate(g: Graph, f: WeightFunction, variant: Variant,
             all_violations: bool = False) -> ValidationReport:
    if len(f) != g.n:
        raise ValueError(f"function has {len(f)} values, graph has {g.n} vertices")
    k = f.k
    found = []
    for u in range(g.n):
        x = f.values[u]
        if not g.neighbors(u):
            if x != k:
                found.append(Violation(u, "isolated", x, k))
        elif 2 * x < k:
            c = coverage(g, f, u, variant)
            if c < k:
                found.append(Violation(u, "short", c, k))
            elif variant.is_perfect and c > k:
                found.append(Violation(u, "excess", c, k))
        if found and not all_violations:
            break
    return ValidationReport(not found, tuple(found))


def is_valid(g: Graph, f: WeightFunction, variant: Variant) -> bool:
    return validate(g, f, variant).ok


def ceil_half(k: int) -> int:
    return (k + 1) // 2


def uniform_upper_bound_function(g: Graph, k: int) -> WeightFunction:
    """Constant ceil(k/2) everywhere, except isolated vertices which must carry k."""
    h = ceil_half(k)
    return WeightFunction(tuple(k if not g.neighbors(u) else h for u in range(g.n)), k)


def strong_neighbor_witnesses(g: Graph, f: WeightFunction, u: int) -> list[int]:
    """Neighbors of a low vertex u that carry more than k/2."""
    if 2 * f.values[u] >= f.k:
        raise ValueError(f"vertex {u} is not low (f={f.values[u]}, k={f.k})")
    if not validate(g, f, Variant.STRONG):
        raise ValueError("function is not a strong Roman k-dominating function")
    return [v for v in g.neighbors(u) if 2 * f.values[v] > f.k]
