"""Hypergraph representation, family generators and graph reductions.

Every domination variant is answered on a plain graph: vertex domination on
the 2-section, edge domination on the line (intersection) graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence, Union

from hypdomatic.errors import DuplicateEdge, EmptyEdge, IndexOutOfRange, InvalidParams

Edge = tuple[int, ...]


@dataclass(frozen=True)
class Hypergraph:
    """Vertex count plus an ordered tuple of sorted hyperedges.

    Edge indices are positions in ``edges``; partitions refer to them.
    """

    n: int
    edges: tuple[Edge, ...]
    uniform_r: int | None = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, m={self.m}, uniform_r={self.uniform_r})"


@dataclass(frozen=True)
class Complete:
    """All r-subsets of an n-vertex set."""

    n: int
    r: int

    def __post_init__(self):
        if not 1 <= self.r <= self.n:
            raise InvalidParams(f"complete family needs 1 <= r <= n, got n={self.n}, r={self.r}")

    @property
    def vertex_count(self) -> int:
        return self.n

    def hypergraph(self) -> Hypergraph:
        return generate_complete(self.n, self.r)

    def label(self) -> str:
        return f"complete(n={self.n},r={self.r})"


@dataclass(frozen=True)
class CompleteBipartite:
    """r-subsets of X ∪ Y meeting both parts; X = [0, a), Y = [a, a+b)."""

    a: int
    b: int
    r: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1 or self.r < 2 or self.r > self.a + self.b:
            raise InvalidParams(
                f"bipartite family needs a, b >= 1 and 2 <= r <= a+b, got a={self.a}, b={self.b}, r={self.r}"
            )

    @property
    def vertex_count(self) -> int:
        return self.a + self.b

    @property
    def n(self) -> int:
        return self.a + self.b

    def hypergraph(self) -> Hypergraph:
        return generate_complete_bipartite(self.a, self.b, self.r)

    def label(self) -> str:
        return f"bipartite(a={self.a},b={self.b},r={self.r})"


FamilyDescriptor = Union[Complete, CompleteBipartite]


@dataclass(frozen=True, eq=False)
class AdjacencyStructure:
    """Simple undirected graph on ``item_count`` items.

    ``neighbors[i]`` is the open neighbourhood of item i. Bitmask copies
    (bit j set iff j ~ i) are kept for the search code.
    """

    item_count: int
    neighbors: tuple[frozenset[int], ...]
    masks: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        if len(self.neighbors) != self.item_count:
            raise InvalidParams("neighbors must have one entry per item")
        masks = []
        for i, nbrs in enumerate(self.neighbors):
            if i in nbrs:
                raise InvalidParams(f"item {i} is adjacent to itself")
            mask = 0
            for j in nbrs:
                if not 0 <= j < self.item_count:
                    raise IndexOutOfRange(f"neighbour {j} of item {i} out of range", i)
                if i not in self.neighbors[j]:
                    raise InvalidParams(f"adjacency is not symmetric between {i} and {j}")
                mask |= 1 << j
            masks.append(mask)
        object.__setattr__(self, "masks", tuple(masks))

    @classmethod
    def from_edges(cls, item_count: int, pairs: Iterable[tuple[int, int]]) -> "AdjacencyStructure":
        nbrs: list[set[int]] = [set() for _ in range(item_count)]
        for i, j in pairs:
            if i == j:
                continue
            nbrs[i].add(j)
            nbrs[j].add(i)
        return cls(item_count, tuple(frozenset(s) for s in nbrs))

    @classmethod
    def complete(cls, k: int) -> "AdjacencyStructure":
        return cls.from_edges(k, combinations(range(k), 2))

    def degree(self, i: int) -> int:
        return len(self.neighbors[i])

    def min_degree(self) -> int:
        return min((len(s) for s in self.neighbors), default=0)

    def is_complete(self) -> bool:
        return all(len(s) == self.item_count - 1 for s in self.neighbors)

    def has_isolated(self) -> bool:
        return any(not s for s in self.neighbors)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AdjacencyStructure):
            return NotImplemented
        return self.item_count == other.item_count and self.neighbors == other.neighbors

    def __hash__(self) -> int:
        return hash((self.item_count, self.neighbors))


def _colex_key(edge: Edge) -> tuple[int, ...]:
    return (len(edge),) + tuple(reversed(edge))


def make_hypergraph(n: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
    """Validate and canonicalise a hypergraph, keeping the given edge order."""
    if n < 0:
        raise InvalidParams("vertex count must be non-negative")
    canonical: list[Edge] = []
    seen: dict[Edge, int] = {}
    for pos, raw in enumerate(edges):
        verts = list(raw)
        if not verts:
            raise EmptyEdge(f"edge {pos} is empty", pos)
        for v in verts:
            if not 0 <= v < n:
                raise IndexOutOfRange(f"edge {pos} has vertex {v} outside [0, {n})", pos)
        edge = tuple(sorted(verts))
        if len(set(edge)) != len(edge):
            raise InvalidParams(f"edge {pos} repeats a vertex")
        if edge in seen:
            raise DuplicateEdge(f"edge {pos} duplicates edge {seen[edge]}", pos)
        seen[edge] = pos
        canonical.append(edge)
    sizes = {len(e) for e in canonical}
    uniform_r = sizes.pop() if len(sizes) == 1 else None
    return Hypergraph(n, tuple(canonical), uniform_r)


def generate_complete(n: int, r: int) -> Hypergraph:
    """K_n^r with edges in colexicographic order."""
    if not 1 <= r <= n:
        raise InvalidParams(f"need 1 <= r <= n, got n={n}, r={r}")
    edges = sorted(combinations(range(n), r), key=_colex_key)
    return Hypergraph(n, tuple(edges), r)


def generate_complete_bipartite(a: int, b: int, r: int) -> Hypergraph:
    """All r-subsets of [0, a+b) with at least one vertex below a and one at or above a."""
    if a < 1 or b < 1 or r < 2 or r > a + b:
        raise InvalidParams(f"need a, b >= 1 and 2 <= r <= a+b, got a={a}, b={b}, r={r}")
    edges = [e for e in combinations(range(a + b), r) if e[0] < a <= e[-1]]
    edges.sort(key=_colex_key)
    return Hypergraph(a + b, tuple(edges), r)


def degrees(h: Hypergraph) -> list[int]:
    deg = [0] * h.n
    for edge in h.edges:
        for v in edge:
            deg[v] += 1
    return deg


def two_section(h: Hypergraph) -> AdjacencyStructure:
    pairs = (p for edge in h.edges for p in combinations(edge, 2))
    return AdjacencyStructure.from_edges(h.n, pairs)


def line_graph(h: Hypergraph) -> AdjacencyStructure:
    """Items are edge indices; two are adjacent iff the edges share a vertex."""
    incident: list[list[int]] = [[] for _ in range(h.n)]
    for idx, edge in enumerate(h.edges):
        for v in edge:
            incident[v].append(idx)
    nbrs: list[set[int]] = [set() for _ in range(h.m)]
    for idx, edge in enumerate(h.edges):
        for v in edge:
            nbrs[idx].update(incident[v])
        nbrs[idx].discard(idx)
    return AdjacencyStructure(h.m, tuple(frozenset(s) for s in nbrs))


def edge_mask(edge: Sequence[int]) -> int:
    mask = 0
    for v in edge:
        mask |= 1 << v
    return mask
