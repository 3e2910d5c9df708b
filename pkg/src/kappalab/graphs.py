"""Construction of alternating group graphs AG_n and split-stars S_n^2.

Both families are Cayley graphs on permutations of ``1..n``:

* AG_n: vertices are the even permutations, edges the triple rotations
  g_i+ / g_i- for 3 <= i <= n; (2n-4)-regular with n!/2 vertices.
* S_n^2: vertices are all permutations, edges the rotations plus the
  2-exchange g_12; (2n-3)-regular with n! vertices.

Vertex ids are dense ranks (even-permutation rank for AG, plain
lexicographic rank for the split-star), so id 0 is always the identity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .perms import Parity, Perm, even_rank, even_unrank, exchange, parity, rank, rot_minus, rot_plus, unrank

FAMILY_AG = "ag"
FAMILY_SPLIT_STAR = "s2"

MAX_N_AG = 8          # 20160 vertices
MAX_N_SPLIT_STAR = 7  # 5040 vertices

__all__ = [
    "FAMILY_AG",
    "FAMILY_SPLIT_STAR",
    "MAX_N_AG",
    "MAX_N_SPLIT_STAR",
    "BitGraph",
    "CayleyGraph",
    "EdgeLocality",
    "EdgeGenerator",
    "EdgeKind",
    "DecompositionIndex",
    "ParitySplit",
    "build_ag",
    "build_splitstar",
    "build_family",
    "classify_edge",
    "decompose",
    "external_edge_count",
    "parity_split",
    "out_neighbors",
    "to_dimacs",
    "to_json_dict",
]


@dataclass(frozen=True)
class BitGraph:
    """Immutable undirected graph over vertices ``0..V-1``.

    ``neighbors`` holds sorted adjacency tuples; ``adj_masks`` the same
    adjacency as one bitmask per vertex, which is what every solver loop
    operates on.
    """

    neighbors: tuple[tuple[int, ...], ...]
    adj_masks: tuple[int, ...]

    @property
    def vertex_count(self) -> int:
        return len(self.neighbors)

    @property
    def edge_count(self) -> int:
        return sum(len(ns) for ns in self.neighbors) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.vertex_count) - 1

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj_masks[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        for u, ns in enumerate(self.neighbors):
            for v in ns:
                if v > u:
                    yield (u, v)

    @classmethod
    def from_edges(cls, vertex_count: int, edges) -> "BitGraph":
        adj = [set() for _ in range(vertex_count)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        neighbors = tuple(tuple(sorted(ns)) for ns in adj)
        masks = tuple(sum(1 << v for v in ns) for ns in neighbors)
        return cls(neighbors, masks)

    def label_text(self, v: int) -> str:
        return str(v)


@dataclass(frozen=True)
class CayleyGraph(BitGraph):
    """AG_n or S_n^2 with vertex labels attached."""

    family: str
    n: int
    labels: tuple[Perm, ...]

    @property
    def is_splitstar(self) -> bool:
        return self.family == FAMILY_SPLIT_STAR

    def vertex_id(self, p: Perm) -> int:
        return rank(p) if self.is_splitstar else even_rank(p)

    def label(self, v: int) -> Perm:
        return self.labels[v]

    def label_text(self, v: int) -> str:
        return self.labels[v].text()

    def last_symbol(self, v: int) -> int:
        return self.labels[v].symbols[-1]


def _build(family: str, n: int, vertex_count: int, label_of, id_of, with_exchange: bool) -> CayleyGraph:
    labels = tuple(label_of(k) for k in range(vertex_count))
    neighbor_ids: list[set[int]] = [set() for _ in range(vertex_count)]
    for v, p in enumerate(labels):
        images = [rot_plus(p, i) for i in range(3, n + 1)]
        images += [rot_minus(p, i) for i in range(3, n + 1)]
        if with_exchange:
            images.append(exchange(p))
        for q in images:
            u = id_of(q)
            if u == v:
                raise AssertionError("generator produced a self-loop")
            neighbor_ids[v].add(u)
    neighbors = tuple(tuple(sorted(ns)) for ns in neighbor_ids)
    masks = tuple(sum(1 << u for u in ns) for ns in neighbors)
    return CayleyGraph(neighbors, masks, family, n, labels)


def build_ag(n: int) -> CayleyGraph:
    """Build AG_n for 3 <= n <= 8."""
    if not 3 <= n <= MAX_N_AG:
        raise ValueError(f"AG_n supported for 3 <= n <= {MAX_N_AG}, got {n}")
    return _build(
        FAMILY_AG,
        n,
        math.factorial(n) // 2,
        lambda k: even_unrank(k, n),
        even_rank,
        with_exchange=False,
    )


def build_splitstar(n: int) -> CayleyGraph:
    """Build S_n^2 for 3 <= n <= 7."""
    if not 3 <= n <= MAX_N_SPLIT_STAR:
        raise ValueError(f"S_n^2 supported for 3 <= n <= {MAX_N_SPLIT_STAR}, got {n}")
    return _build(
        FAMILY_SPLIT_STAR,
        n,
        math.factorial(n),
        lambda k: unrank(k, n),
        rank,
        with_exchange=True,
    )


def build_family(family: str, n: int) -> CayleyGraph:
    if family == FAMILY_AG:
        return build_ag(n)
    if family == FAMILY_SPLIT_STAR:
        return build_splitstar(n)
    raise ValueError(f"unknown family {family!r}")


class EdgeLocality(Enum):
    INTERNAL = "internal"
    EXTERNAL = "external"


class EdgeGenerator(Enum):
    THREE_ROTATION = "3-rotation"
    TWO_EXCHANGE = "2-exchange"


@dataclass(frozen=True)
class EdgeKind:
    locality: EdgeLocality
    generator: EdgeGenerator
    matching: bool  # true iff a 2-exchange edge joining the parity halves


def classify_edge(G: CayleyGraph, u: int, v: int) -> EdgeKind:
    """Classify an edge by last-symbol locality and by generating operation."""
    if not G.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    locality = (
        EdgeLocality.INTERNAL
        if G.last_symbol(u) == G.last_symbol(v)
        else EdgeLocality.EXTERNAL
    )
    if G.is_splitstar and exchange(G.label(u)) == G.label(v):
        generator = EdgeGenerator.TWO_EXCHANGE
    else:
        generator = EdgeGenerator.THREE_ROTATION
    return EdgeKind(locality, generator, matching=generator is EdgeGenerator.TWO_EXCHANGE)


@dataclass(frozen=True)
class DecompositionIndex:
    """Partition of the vertices by rightmost symbol."""

    parts: dict[int, tuple[int, ...]]


def decompose(G: CayleyGraph) -> DecompositionIndex:
    parts: dict[int, list[int]] = {i: [] for i in range(1, G.n + 1)}
    for v in range(G.vertex_count):
        parts[G.last_symbol(v)].append(v)
    return DecompositionIndex({i: tuple(vs) for i, vs in parts.items()})


def external_edge_count(G: CayleyGraph, i: int, j: int) -> int:
    """Number of edges joining the last-symbol-i and last-symbol-j parts."""
    if i == j:
        raise ValueError("part indices must differ")
    if not (1 <= i <= G.n and 1 <= j <= G.n):
        raise ValueError(f"part indices must lie in 1..{G.n}")
    part_j = [v for v in range(G.vertex_count) if G.last_symbol(v) == j]
    mask_j = sum(1 << v for v in part_j)
    count = 0
    for v in range(G.vertex_count):
        if G.last_symbol(v) == i:
            count += (G.adj_masks[v] & mask_j).bit_count()
    return count


@dataclass(frozen=True)
class ParitySplit:
    even: tuple[int, ...]
    odd: tuple[int, ...]
    matching_edges: tuple[tuple[int, int], ...]


def parity_split(G: CayleyGraph) -> ParitySplit:
    """Split S_n^2 into its even/odd halves and list the matching edges."""
    if not G.is_splitstar:
        raise ValueError("parity_split applies to the split-star family only")
    even = []
    odd = []
    for v in range(G.vertex_count):
        (even if parity(G.label(v)) is Parity.EVEN else odd).append(v)
    matching = []
    for v in even:
        w = G.vertex_id(exchange(G.label(v)))
        matching.append((v, w) if v < w else (w, v))
    return ParitySplit(tuple(even), tuple(odd), tuple(sorted(matching)))


def out_neighbors(G: CayleyGraph, v: int) -> tuple[int, ...]:
    """Neighbors of v lying in a different last-symbol part."""
    last = G.last_symbol(v)
    return tuple(u for u in G.neighbors[v] if G.last_symbol(u) != last)


def to_dimacs(G: CayleyGraph) -> str:
    """DIMACS-like edge list, vertices 1-based, edges sorted by (u, v)."""
    lines = [f"p edge {G.vertex_count} {G.edge_count}"]
    for u, v in G.edges():
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def to_json_dict(G: CayleyGraph) -> dict:
    return {
        "family": G.family,
        "n": G.n,
        "vertices": [G.label_text(v) for v in range(G.vertex_count)],
        "edges": [[u, v] for u, v in G.edges()],
    }
