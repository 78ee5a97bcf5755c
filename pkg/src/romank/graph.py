"""Simple undirected graphs on dense 0-based vertex indices.

Graphs are immutable.  Adjacency is kept both as sorted neighbor tuples and
as per-vertex integer bitmasks; the solvers consume the bitmask form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

MAX_VERTICES = 100_000


class GraphFormatError(ValueError):
    """Base class for edge-list parse failures."""


class HeaderError(GraphFormatError):
    pass


class VertexRangeError(GraphFormatError):
    pass


class SelfLoopError(GraphFormatError):
    pass


class DuplicateEdgeError(GraphFormatError):
    pass


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]
    _nbrs: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)
    _masks: tuple[int, ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, rejecting loops, duplicates and out-of-range endpoints."""
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            e = _norm(u, v)
            if e in seen:
                raise DuplicateEdgeError(f"duplicate edge {e}")
            seen.add(e)
        nb: list[list[int]] = [[] for _ in range(n)]
        for u, v in seen:
            nb[u].append(v)
            nb[v].append(u)
        nbrs = tuple(tuple(sorted(x)) for x in nb)
        masks = tuple(sum(1 << v for v in x) for x in nbrs)
        return cls(n, frozenset(seen), nbrs, masks)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def __len__(self) -> int:
        return self.n

    def num_edges(self) -> int:
        return len(self.edges)

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self._nbrs[u]

    def closed_neighbors(self, u: int) -> tuple[int, ...]:
        return tuple(sorted(self._nbrs[u] + (u,)))

    def neighbor_mask(self, u: int) -> int:
        return self._masks[u]

    def closed_mask(self, u: int) -> int:
        return self._masks[u] | (1 << u)

    def degree(self, u: int) -> int:
        return len(self._nbrs[u])

    def degrees(self) -> list[int]:
        return [len(x) for x in self._nbrs]

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def isolated(self) -> list[int]:
        return [u for u in range(self.n) if not self._nbrs[u]]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                u = stack.pop()
                comp.append(u)
                for v in self._nbrs[u]:
                    if not seen[v]:
                        seen[v] = True
                        stack.append(v)
            comps.append(sorted(comp))
        return comps

    def num_components(self) -> int:
        return len(self.components())

    def add_edge(self, u: int, v: int) -> "Graph":
        return Graph.from_edges(self.n, list(self.edges) + [(u, v)])

    def non_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n)
                if (u, v) not in self.edges]


@dataclass(frozen=True)
class BipartitionLabels:
    side_a: tuple[int, ...]
    side_b: tuple[int, ...]


# -- generators ---------------------------------------------------------------

def empty(n: int) -> Graph:
    if n < 1:
        raise ValueError("empty(n) needs n >= 1")
    return Graph.from_edges(n, [])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete(n) needs n >= 1")
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path(n) needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle(n) needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(m: int, n: int) -> tuple[Graph, BipartitionLabels]:
    """K_{m,n}; vertices 0..m-1 form side A, m..m+n-1 side B."""
    if m < 1 or n < 1:
        raise ValueError("complete_bipartite needs m >= 1 and n >= 1")
    g = Graph.from_edges(m + n, [(a, m + b) for a in range(m) for b in range(n)])
    return g, BipartitionLabels(tuple(range(m)), tuple(range(m, m + n)))


def disjoint_union(gs: Sequence[Graph]) -> Graph:
    off, edges = 0, []
    for g in gs:
        edges.extend((u + off, v + off) for u, v in g.edges)
        off += g.n
    return Graph.from_edges(off, edges)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of g and h (g first) plus every edge between them."""
    base = disjoint_union([g, h])
    cross = [(u, g.n + v) for u in range(g.n) for v in range(h.n)]
    return Graph.from_edges(base.n, list(base.edges) + cross)


def fan(m: int, n: int) -> Graph:
    """F_{m,n}: join of the empty graph on n vertices with the path on m vertices."""
    return join(empty(n), path(m))


def attach_pendants(g: Graph, targets: Sequence[int], count: int) -> Graph:
    """Hang `count` new leaves on each target; new vertices follow in target order."""
    if count < 1:
        raise ValueError("count must be positive")
    for t in targets:
        if not 0 <= t < g.n:
            raise VertexRangeError(f"target {t} out of range for n={g.n}")
    edges = list(g.edges)
    nxt = g.n
    for t in targets:
        for _ in range(count):
            edges.append((t, nxt))
            nxt += 1
    return Graph.from_edges(nxt, edges)


def is_spanning_subgraph(h: Graph, g: Graph) -> bool:
    return h.n == g.n and h.edges <= g.edges


def is_bipartition(g: Graph, labels: BipartitionLabels) -> bool:
    a, b = set(labels.side_a), set(labels.side_b)
    if a & b or (a | b) != set(range(g.n)):
        return False
    return all((u in a) != (v in a) for u, v in g.edges)


def is_complete_bipartite(g: Graph, labels: BipartitionLabels) -> bool:
    return (is_bipartition(g, labels)
            and g.num_edges() == len(labels.side_a) * len(labels.side_b))


def detect_complete_bipartite(g: Graph) -> tuple[int, int] | None:
    """Return (|A|, |B|) if g is some K_{m,n} with m, n >= 1, else None."""
    if g.n < 2 or g.isolated():
        return None
    a = [u for u in range(g.n) if not g.has_edge(0, u)]
    b = list(g.neighbors(0))
    labels = BipartitionLabels(tuple(a), tuple(b))
    if is_complete_bipartite(g, labels):
        return len(a), len(b)
    return None


# -- edge-list text format -------------------------------------------------------

def serialize_graph(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    n = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise HeaderError(f"line {lineno}: expected 'n <vertex_count>'")
            try:
                n = int(parts[1])
            except ValueError:
                raise HeaderError(f"line {lineno}: bad vertex count {parts[1]!r}") from None
            if not 0 <= n <= MAX_VERTICES:
                raise HeaderError(f"line {lineno}: vertex count {n} outside [0, {MAX_VERTICES}]")
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex") from None
        edges.append((u, v))
    if n is None:
        raise HeaderError("missing 'n <vertex_count>' header")
    return Graph.from_edges(n, edges)


def read_graph(path) -> Graph:
    with open(path) as fh:
        return parse_graph(fh.read())


def write_graph(g: Graph, path) -> None:
    with open(path, "w") as fh:
        fh.write(serialize_graph(g))
