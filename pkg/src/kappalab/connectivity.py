"""Components of G - F, small-component shapes, neighborhoods, and exact
vertex connectivity.

Everything here operates on bitmask adjacency (``BitGraph.adj_masks``) so the
solvers can call the component routines tens of millions of times without
materializing vertex sets. Vertex sets cross the API boundary as plain
iterables of ids and come back as sorted tuples or frozensets.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .graphs import BitGraph

__all__ = [
    "Shape",
    "FaultSet",
    "ComponentReport",
    "components",
    "component_masks",
    "count_components",
    "is_connected_after",
    "neighborhood",
    "neighborhood_mask",
    "common_neighbors",
    "is_independent",
    "vertex_connectivity",
    "mask_of",
    "ids_of",
]


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def ids_of(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def component_masks(adj: tuple[int, ...], alive: int) -> list[int]:
    """Connected components of the subgraph induced by ``alive``, as masks.

    Components are produced in order of their lowest vertex id.
    """
    comps = []
    remaining = alive
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= adj[low.bit_length() - 1]
                m ^= low
            frontier = nxt & remaining & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


def count_components(adj: tuple[int, ...], alive: int, stop_at: int = 0) -> int:
    """Number of components induced by ``alive``; early exit at ``stop_at``."""
    count = 0
    remaining = alive
    while remaining:
        count += 1
        if stop_at and count >= stop_at:
            return count
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= adj[low.bit_length() - 1]
                m ^= low
            frontier = nxt & remaining & ~comp
            comp |= frontier
        remaining &= ~comp
    return count


def is_connected_after(adj: tuple[int, ...], alive: int) -> bool:
    """True iff the subgraph induced by ``alive`` is connected (or empty)."""
    if alive == 0:
        return True
    seed = alive & -alive
    comp = seed
    frontier = seed
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= adj[low.bit_length() - 1]
            m ^= low
        frontier = nxt & alive & ~comp
        comp |= frontier
    return comp == alive


class Shape(Enum):
    SINGLETON = "singleton"
    EDGE = "edge"
    TWO_PATH = "2-path"
    THREE_CYCLE = "3-cycle"
    FOUR_CYCLE = "4-cycle"
    OTHER = "other"


def _classify_mask(adj: tuple[int, ...], comp: int) -> Shape:
    size = comp.bit_count()
    if size == 1:
        return Shape.SINGLETON
    if size == 2:
        return Shape.EDGE
    degrees = [(adj[v] & comp).bit_count() for v in ids_of(comp)]
    edges = sum(degrees) // 2
    if size == 3:
        return Shape.THREE_CYCLE if edges == 3 else Shape.TWO_PATH
    if size == 4 and edges == 4 and all(d == 2 for d in degrees):
        return Shape.FOUR_CYCLE
    return Shape.OTHER


@dataclass(frozen=True)
class FaultSet:
    """A set of deleted vertices."""

    members: frozenset[int]

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "FaultSet":
        return cls(frozenset(vertices))

    @property
    def mask(self) -> int:
        return mask_of(self.members)

    def sorted_ids(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def by_last_symbol(self, G) -> dict[int, frozenset[int]]:
        """Split along the last-symbol decomposition (the per-part F_i)."""
        out: dict[int, set[int]] = {i: set() for i in range(1, G.n + 1)}
        for v in self.members:
            out[G.last_symbol(v)].add(v)
        return {i: frozenset(vs) for i, vs in out.items()}


def _fault_ids(G: BitGraph, F) -> tuple[int, ...]:
    if isinstance(F, FaultSet):
        ids = F.sorted_ids()
    else:
        ids = tuple(sorted(set(F)))
    if ids and not (0 <= ids[0] and ids[-1] < G.vertex_count):
        raise ValueError("fault set contains out-of-range vertex ids")
    return ids


@dataclass(frozen=True)
class ComponentReport:
    """Components of G - F, largest first (ties by lowest vertex id)."""

    fault: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    shapes: tuple[Shape, ...]

    @property
    def count(self) -> int:
        return len(self.components)

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.components)

    def to_json_dict(self, G: BitGraph) -> dict:
        return {
            "fault": list(self.fault),
            "count": self.count,
            "components": [
                {
                    "size": len(comp),
                    "shape": shape.value,
                    "vertices": [G.label_text(v) for v in comp],
                }
                for comp, shape in zip(self.components, self.shapes)
            ],
        }


def components(G: BitGraph, F) -> ComponentReport:
    fault = _fault_ids(G, F)
    alive = G.full_mask & ~mask_of(fault)
    masks = component_masks(G.adj_masks, alive)
    masks.sort(key=lambda m: (-m.bit_count(), m & -m))
    comps = tuple(ids_of(m) for m in masks)
    shapes = tuple(_classify_mask(G.adj_masks, m) for m in masks)
    return ComponentReport(fault, comps, shapes)


def neighborhood_mask(G: BitGraph, smask: int) -> int:
    out = 0
    m = smask
    while m:
        low = m & -m
        out |= G.adj_masks[low.bit_length() - 1]
        m ^= low
    return out & ~smask


def neighborhood(G: BitGraph, S: Iterable[int]) -> frozenset[int]:
    """N(S): vertices outside S adjacent to some member of S."""
    return frozenset(ids_of(neighborhood_mask(G, mask_of(S))))


def common_neighbors(G: BitGraph, u: int, v: int) -> frozenset[int]:
    if u == v:
        raise ValueError("common_neighbors requires distinct vertices")
    return frozenset(ids_of(G.adj_masks[u] & G.adj_masks[v]))


def is_independent(G: BitGraph, S: Iterable[int]) -> bool:
    smask = mask_of(S)
    m = smask
    while m:
        low = m & -m
        if G.adj_masks[low.bit_length() - 1] & smask:
            return False
        m ^= low
    return True


def _max_vertex_disjoint_paths(G: BitGraph, s: int, t: int, cap: int) -> int:
    """Number of internally vertex-disjoint s-t paths, stopping at ``cap``.

    Unit-capacity vertex-split network solved by BFS augmenting paths: node v
    becomes v_in = 2v, v_out = 2v + 1 with an arc of capacity one between
    them; every edge contributes arcs u_out -> v_in and v_out -> u_in.
    """
    # node encoding: v_in = 2v, v_out = 2v + 1
    split_used = [False] * G.vertex_count
    edge_flow: set[tuple[int, int]] = set()  # (u, v) means arc u_out -> v_in carries flow
    start, goal = 2 * s + 1, 2 * t
    flow = 0
    while flow < cap:
        parent: dict[int, int] = {start: start}
        queue = deque([start])
        found = False
        while queue and not found:
            node = queue.popleft()
            v, is_out = divmod(node, 2)
            if is_out:
                for u in G.neighbors[v]:
                    nxt = 2 * u
                    if nxt not in parent and (v, u) not in edge_flow:
                        parent[nxt] = node
                        if nxt == goal:
                            found = True
                            break
                        queue.append(nxt)
                if not found and split_used[v] and 2 * v not in parent:
                    parent[2 * v] = node  # residual of the saturated split arc
                    queue.append(2 * v)
            else:
                if not split_used[v] and 2 * v + 1 not in parent:
                    parent[2 * v + 1] = node
                    queue.append(2 * v + 1)
                for u in G.neighbors[v]:
                    if (u, v) in edge_flow and 2 * u + 1 not in parent:
                        parent[2 * u + 1] = node  # cancel flow on u_out -> v_in
                        queue.append(2 * u + 1)
        if not found:
            return flow
        node = goal
        while node != start:
            prev = parent[node]
            pv, p_out = divmod(prev, 2)
            nv, n_out = divmod(node, 2)
            if p_out and not n_out:
                if pv == nv:
                    split_used[pv] = False
                else:
                    edge_flow.add((pv, nv))
            else:
                if pv == nv:
                    split_used[pv] = True
                else:
                    edge_flow.discard((nv, pv))
            node = prev
        flow += 1
    return flow


def vertex_connectivity(G: BitGraph) -> int:
    """Exact kappa(G) via max-flow over the standard pair scheme.

    Fix a minimum-degree vertex v0; take the minimum of the max-flow values
    to every non-neighbor of v0 and between every nonadjacent pair of
    neighbors of v0. Complete graphs return |V| - 1 by convention.
    """
    V = G.vertex_count
    if V < 2:
        return V - 1 if V else 0
    v0 = min(range(V), key=G.degree)
    best = G.degree(v0)
    if best == V - 1:
        return V - 1
    non_neighbors = [
        t for t in range(V) if t != v0 and not G.has_edge(v0, t)
    ]
    for t in non_neighbors:
        best = min(best, _max_vertex_disjoint_paths(G, v0, t, best))
    ns = G.neighbors[v0]
    for a in range(len(ns)):
        for b in range(a + 1, len(ns)):
            if not G.has_edge(ns[a], ns[b]):
                best = min(best, _max_vertex_disjoint_paths(G, ns[a], ns[b], best))
    return best
