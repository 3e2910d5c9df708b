"""Tiered computation of the l-component connectivity kappa_l.

kappa_l(G) is the minimum number of vertices whose removal leaves at least
l components or fewer than l vertices. Three tiers:

* :func:`kappa_ell_exhaustive` - level-by-level subset enumeration; exact,
  and the oracle every other tier is judged against.
* :func:`kappa_ell_witness_search` - bounded search over families of l-1
  disjoint, pairwise nonadjacent, connected parts; always an upper bound.
* :func:`construct_paper_cut` - the explicit tight cuts (4-cycle opposite
  pairs, the double-rotation independent sets, and their split-star
  analogues), verified on the built graph.

:func:`verify_cut` certifies any fault set against the definition, and
:func:`hyper_connectivity_scan` censuses all minimum-size cuts.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum

from ._parallel import TaskRunner, worker_state
from .connectivity import (
    ComponentReport,
    component_masks,
    components,
    count_components,
    ids_of,
    is_connected_after,
    mask_of,
    neighborhood_mask,
)
from .graphs import FAMILY_AG, BitGraph, CayleyGraph
from .perms import Perm, rot_minus, rot_plus

DEFAULT_BUDGET = 10**8  # explored-subset cap, not wall time

__all__ = [
    "DEFAULT_BUDGET",
    "Tier",
    "CutWitness",
    "CutRefusal",
    "KappaResult",
    "WitnessFamily",
    "HyperScanReport",
    "verify_cut",
    "kappa_ell_exhaustive",
    "kappa_ell_witness_search",
    "construct_paper_cut",
    "remark_independent_set",
    "hyper_connectivity_scan",
    "comb_lex_rank",
    "level_tasks",
]


class Tier(Enum):
    EXHAUSTIVE = "Exhaustive"
    WITNESS_UPPER_BOUND = "WitnessUpperBound"
    RULE_FEWER_THAN_ELL = "RuleFewerThanEll"


@dataclass(frozen=True)
class CutWitness:
    """A fault set certified against the kappa_l definition."""

    fault: tuple[int, ...]
    report: ComponentReport
    ell: int

    def to_json_dict(self, G: BitGraph) -> dict:
        return {
            "fault": [G.label_text(v) for v in self.fault],
            "count": self.report.count,
            "components": self.report.to_json_dict(G)["components"],
        }


@dataclass(frozen=True)
class CutRefusal:
    """verify_cut outcome for a fault set that does not qualify."""

    fault: tuple[int, ...]
    ell: int
    component_count: int


def verify_cut(G: BitGraph, F, ell: int) -> CutWitness | CutRefusal:
    """Certify F: accepted iff G - F has >= ell components or < ell vertices."""
    if ell < 2:
        raise ValueError("ell must be >= 2")
    report = components(G, F)
    fault = report.fault
    if report.count >= ell or G.vertex_count - len(fault) < ell:
        return CutWitness(fault, report, ell)
    return CutRefusal(fault, ell, report.count)


@dataclass(frozen=True)
class WitnessFamily:
    """l-1 disjoint, pairwise nonadjacent, connected parts.

    Deleting the neighborhood of the union isolates every part, so
    |N(union)| is an upper bound on kappa_l.
    """

    parts: tuple[tuple[int, ...], ...]

    def union_mask(self) -> int:
        return mask_of(v for part in self.parts for v in part)

    def fault_mask(self, G: BitGraph) -> int:
        return neighborhood_mask(G, self.union_mask())

    def fault(self, G: BitGraph) -> tuple[int, ...]:
        return ids_of(self.fault_mask(G))

    def is_valid(self, G: BitGraph) -> bool:
        union = 0
        for part in self.parts:
            pm = mask_of(part)
            if pm == 0 or pm & union:
                return False
            if not is_connected_after(G.adj_masks, pm):
                return False
            union |= pm
        for a in range(len(self.parts)):
            ma = mask_of(self.parts[a])
            na = neighborhood_mask(G, ma)
            for b in range(a + 1, len(self.parts)):
                if na & mask_of(self.parts[b]):
                    return False
        leftover = G.full_mask & ~union & ~neighborhood_mask(G, union)
        return leftover != 0


@dataclass(frozen=True)
class KappaResult:
    ell: int
    value: int | None  # None: no qualifying cut found (see inconclusive_above)
    tier: Tier
    witness: CutWitness | None
    explored: int
    budget: int
    k_max: int
    inconclusive_above: int | None = None  # set only when the budget stopped the scan
    part_size_bound: int | None = None  # witness tier's B

    @property
    def inconclusive(self) -> bool:
        return self.inconclusive_above is not None

    def to_json_dict(self, G: BitGraph) -> dict:
        return {
            "ell": self.ell,
            "value": self.value,
            "tier": self.tier.value,
            "witness": None if self.witness is None else self.witness.to_json_dict(G),
            "explored": self.explored,
            "budget": self.budget,
            "k_max": self.k_max,
            "inconclusive_above": self.inconclusive_above,
            "part_size_bound": self.part_size_bound,
        }


def comb_lex_rank(comb: tuple[int, ...], n: int) -> int:
    """Rank of a sorted combination within lexicographic C(n, k) order."""
    k = len(comb)
    rank = 0
    prev = -1
    for i, c in enumerate(comb):
        for j in range(prev + 1, c):
            rank += math.comb(n - 1 - j, k - 1 - i)
        prev = c
    return rank


def level_tasks(V: int, k: int, target: int = 200_000) -> list[tuple[tuple[int, ...], int]]:
    """Split lex enumeration of C(V, k) into (prefix, start) tasks.

    Task (p, s) covers all combinations p + c with c drawn from
    range(s, V); tasks are in lex order and independent of the job count.
    """
    tasks: list[tuple[tuple[int, ...], int]] = []

    def rec(prefix: tuple[int, ...], start: int, remaining: int):
        if remaining == 0 or math.comb(V - start, remaining) <= target or remaining == 1:
            tasks.append((prefix, start))
            return
        for nxt in range(start, V - remaining + 1):
            rec(prefix + (nxt,), nxt + 1, remaining - 1)

    rec((), 0, k)
    return tasks


def _scan_level_worker(task):
    """First F (lex order) in this task's range with >= ell components."""
    state = worker_state()
    adj = state["adj"]
    full = state["full"]
    ell = state["ell"]
    k, prefix, start = task
    V = len(adj)
    pmask = mask_of(prefix)
    r = k - len(prefix)
    for comb in itertools.combinations(range(start, V), r):
        fm = pmask
        for v in comb:
            fm |= 1 << v
        if count_components(adj, full ^ fm, stop_at=ell) >= ell:
            return prefix + comb
    return None


def kappa_ell_exhaustive(
    G: BitGraph,
    ell: int,
    k_max: int | None = None,
    budget: int = DEFAULT_BUDGET,
    jobs: int = 1,
) -> KappaResult:
    """Exact kappa_l by enumerating fault sets level by level in lex order.

    Levels are scanned in ascending size, so the first qualifying size is the
    exact value. The fewer-than-l-vertices clause fires at |V| - l + 1
    without enumeration. A level is only scanned when it fits the remaining
    subset budget whole; otherwise the result is inconclusive above the last
    completed level.
    """
    if ell < 2:
        raise ValueError("ell must be >= 2")
    V = G.vertex_count
    rule_k = max(V - ell + 1, 0)
    cap = rule_k if k_max is None else min(k_max, rule_k)
    explored = 0
    state = {"adj": G.adj_masks, "full": G.full_mask, "ell": ell}
    with TaskRunner(jobs, state) as runner:
        for k in range(cap + 1):
            if k == rule_k:
                fault = tuple(range(k))
                witness = verify_cut(G, fault, ell)
                assert isinstance(witness, CutWitness)
                return KappaResult(
                    ell, k, Tier.RULE_FEWER_THAN_ELL, witness, explored, budget, cap
                )
            level = math.comb(V, k)
            if explored + level > budget:
                return KappaResult(
                    ell, None, Tier.EXHAUSTIVE, None, explored, budget, cap,
                    inconclusive_above=k - 1,
                )
            tasks = [(k, prefix, start) for prefix, start in level_tasks(V, k)]
            hit = runner.first_hit(_scan_level_worker, tasks)
            if hit is not None:
                explored += comb_lex_rank(hit, V) + 1
                witness = verify_cut(G, hit, ell)
                assert isinstance(witness, CutWitness)
                return KappaResult(
                    ell, k, Tier.EXHAUSTIVE, witness, explored, budget, cap
                )
            explored += level
    return KappaResult(ell, None, Tier.EXHAUSTIVE, None, explored, budget, cap)


def _connected_parts(adj, anchor: int, max_size: int, banned: int):
    """Masks of connected sets containing ``anchor`` with min id = anchor.

    Uniqueness by the usual extension scheme: candidates are scanned in
    ascending id order and a skipped candidate stays excluded in the whole
    subtree. ``banned`` must already contain all ids below ``anchor``.
    """
    out: list[int] = []
    amask = 1 << anchor
    first_ext = adj[anchor] & ~banned & ~amask

    def rec(sub: int, size: int, ext: int, dead: int):
        out.append(sub)
        if size == max_size:
            return
        processed = 0
        m = ext
        while m:
            low = m & -m
            m ^= low
            v = low.bit_length() - 1
            child_dead = dead | processed
            child_ext = ((m | (adj[v] & ~banned)) & ~(sub | low)) & ~child_dead
            rec(sub | low, size + 1, child_ext, child_dead)
            processed |= low

    rec(amask, 1, first_ext, 0)
    return out


def kappa_ell_witness_search(G: BitGraph, ell: int, B: int = 1) -> KappaResult:
    """Cheapest witness family with parts of size <= B.

    Exploits vertex-transitivity of the target families by pinning the first
    part to contain vertex 0; parts are enumerated with strictly increasing
    minimum ids. Returns an upper bound on kappa_l, monotone nonincreasing
    in B, with the lexicographically smallest fault set among the minima.
    """
    if ell < 2:
        raise ValueError("ell must be >= 2")
    if B < 1:
        raise ValueError("B must be >= 1")
    adj = G.adj_masks
    V = G.vertex_count
    full = G.full_mask
    best: tuple[int, tuple[int, ...], tuple[tuple[int, ...], ...]] | None = None

    def place(parts, union, nbhd, next_anchor_from, remaining):
        nonlocal best
        if remaining == 0:
            fault_mask = nbhd & ~union
            leftover = full & ~union & ~fault_mask
            if leftover == 0:
                return
            fault = ids_of(fault_mask)
            key = (len(fault), fault)
            if best is None or key < (best[0], best[1]):
                best = (len(fault), fault, tuple(ids_of(p) for p in parts))
            return
        blocked = union | nbhd
        for a in range(next_anchor_from, V):
            if blocked >> a & 1:
                continue
            below = (1 << a) - 1
            for pmask in _connected_parts(adj, a, B, blocked | below):
                pn = neighborhood_mask(G, pmask)
                place(
                    parts + [pmask],
                    union | pmask,
                    nbhd | pn,
                    a + 1,
                    remaining - 1,
                )

    for first in _connected_parts(adj, 0, B, 0):
        place([first], first, neighborhood_mask(G, first), 1, ell - 2)
    if best is None:
        raise ValueError(f"no witness family with {ell - 1} parts of size <= {B}")
    value, fault, parts = best
    witness = verify_cut(G, fault, ell)
    assert isinstance(witness, CutWitness)
    return KappaResult(
        ell,
        value,
        Tier.WITNESS_UPPER_BOUND,
        witness,
        explored=0,
        budget=0,
        k_max=value,
        part_size_bound=B,
    )


def remark_independent_set(G: CayleyGraph, size: int, i: int, j: int) -> tuple[int, ...]:
    """The explicit independent 3- or 4-set built from double rotations at e.

    size 3: {e, (e gi+)gj+, (e gj+)gi+}; size 4 adds ((e gj+)gi-)gj+.
    Valid for distinct i, j in 3..n; the neighborhood sizes are 6n-16 and
    8n-24 on AG_n.
    """
    if size not in (3, 4):
        raise ValueError("remark sets have size 3 or 4")
    if i == j or not (3 <= i <= G.n and 3 <= j <= G.n):
        raise ValueError(f"need distinct rotation indices in 3..{G.n}")
    e = Perm.identity(G.n)
    members = [
        e,
        rot_plus(rot_plus(e, i), j),
        rot_plus(rot_plus(e, j), i),
    ]
    if size == 4:
        members.append(rot_plus(rot_minus(rot_plus(e, j), i), j))
    return tuple(G.vertex_id(p) for p in members)


def _ag_four_cycle_cut(G: CayleyGraph) -> tuple[int, ...]:
    """N({w, y}) for the lex-first 4-cycle (w, x, y, z) through the identity."""
    e = 0
    ne = G.neighbors[e]
    nmask = G.adj_masks[e]
    for a_idx in range(len(ne)):
        for b_idx in range(a_idx + 1, len(ne)):
            a, b = ne[a_idx], ne[b_idx]
            commons = G.adj_masks[a] & G.adj_masks[b] & ~nmask & ~(1 << e)
            if commons:
                y = (commons & -commons).bit_length() - 1
                return ids_of(neighborhood_mask(G, (1 << e) | (1 << y)))
    raise ValueError("no 4-cycle through the identity")


def _ball(G: BitGraph, v: int, radius: int) -> int:
    m = 1 << v
    for _ in range(radius):
        m |= neighborhood_mask(G, m)
    return m


def _splitstar_tight_set(G: CayleyGraph, size: int, target: int) -> tuple[int, ...]:
    """Bounded search for an independent set S (containing e) with |N(S)| = target.

    Candidates grow through distance-2 closures of the chosen vertices, with
    candidate order preferring shared neighbors, so the tight double-rotation
    patterns are found immediately. Search is deterministic.
    """
    adj = G.adj_masks
    ball2: dict[int, int] = {}

    def ball2_of(v: int) -> int:
        if v not in ball2:
            ball2[v] = _ball(G, v, 2)
        return ball2[v]

    required = size * G.degree(0) - target  # total overlap the set must achieve

    def search(chosen: tuple[int, ...], union_nb: int, pair_overlap: int):
        m = len(chosen)
        if m == size:
            if (union_nb & ~mask_of(chosen)).bit_count() == target:
                return chosen
            return None
        pool = 0
        for x in chosen:
            pool |= ball2_of(x)
        pool &= ~mask_of(chosen) & ~union_nb  # independence: not adjacent to chosen
        rest = size - m - 1
        max_future = 2 * (rest * (m + 1) + rest * (rest - 1) // 2)
        cands = []
        for v in ids_of(pool):
            gain = sum((adj[v] & adj[x]).bit_count() for x in chosen)
            if pair_overlap + gain + max_future >= required:
                cands.append((-gain, v))
        for neg_gain, v in sorted(cands):
            found = search(chosen + (v,), union_nb | adj[v], pair_overlap - neg_gain)
            if found is not None:
                return found
        return None

    found = search((0,), adj[0], 0)
    if found is None:
        raise ValueError(f"no independent {size}-set with |N(S)| = {target} found")
    return tuple(sorted(found))


AG_KAPPA_FORMULAS = {3: lambda n: 4 * n - 10, 4: lambda n: 6 * n - 16, 5: lambda n: 8 * n - 24}
S2_KAPPA_FORMULAS = {3: lambda n: 4 * n - 8, 4: lambda n: 6 * n - 14, 5: lambda n: 8 * n - 20}


def kappa_formula(family: str, ell: int, n: int) -> int:
    formulas = AG_KAPPA_FORMULAS if family == FAMILY_AG else S2_KAPPA_FORMULAS
    return formulas[ell](n)


def construct_paper_cut(G: CayleyGraph, ell: int) -> CutWitness:
    """The explicit cut achieving the kappa_l formula for the family.

    AG_n: l=3 removes N({w, y}) for opposite corners of a 4-cycle through e;
    l=4 and l=5 remove the neighborhood of the double-rotation independent
    sets (with i, j = 3, 4). S_n^2: removes N(S) for an independent set of
    size l-1 found by bounded search at the tight formula value.
    """
    if ell not in (3, 4, 5):
        raise ValueError("paper cuts exist for ell in {3, 4, 5}")
    n = G.n
    if G.family == FAMILY_AG:
        if ell in (3, 4) and n < 4 or ell == 5 and n < 5:
            raise ValueError(f"AG paper cut for ell={ell} needs larger n, got {n}")
        if ell == 3:
            fault = _ag_four_cycle_cut(G)
        else:
            fault = ids_of(
                neighborhood_mask(G, mask_of(remark_independent_set(G, ell - 1, 3, 4)))
            )
    else:
        if n < 4:
            raise ValueError(f"split-star paper cut needs n >= 4, got {n}")
        target = kappa_formula(G.family, ell, n)
        S = _splitstar_tight_set(G, ell - 1, target)
        fault = ids_of(neighborhood_mask(G, mask_of(S)))
    expected = kappa_formula(G.family, ell, n)
    if len(fault) != expected:
        raise AssertionError(
            f"paper cut size {len(fault)} != formula value {expected}"
        )
    witness = verify_cut(G, fault, ell)
    if isinstance(witness, CutRefusal):
        raise AssertionError(
            f"paper cut left only {witness.component_count} components"
        )
    return witness


@dataclass(frozen=True)
class HyperScanReport:
    """Census of all fault sets of size kappa(G)."""

    kappa: int
    scanned: int
    disconnecting: int
    singleton_cuts: int  # cuts leaving exactly two components, one a singleton
    exceptional: tuple[tuple[int, ...], ...]  # every other disconnecting cut
    inconclusive: bool = False

    @property
    def hyper_connected(self) -> bool:
        return not self.inconclusive and self.disconnecting > 0 and not self.exceptional

    def to_json_dict(self, G: BitGraph) -> dict:
        return {
            "kappa": self.kappa,
            "scanned": self.scanned,
            "disconnecting": self.disconnecting,
            "singleton_cuts": self.singleton_cuts,
            "exceptional": [
                [G.label_text(v) for v in fault] for fault in self.exceptional
            ],
            "hyper_connected": self.hyper_connected,
            "inconclusive": self.inconclusive,
        }


def _hyper_scan_worker(task):
    state = worker_state()
    adj = state["adj"]
    full = state["full"]
    k, prefix, start = task
    V = len(adj)
    pmask = mask_of(prefix)
    r = k - len(prefix)
    disconnecting = 0
    singletons = 0
    exceptional = []
    for comb in itertools.combinations(range(start, V), r):
        fm = pmask
        for v in comb:
            fm |= 1 << v
        alive = full ^ fm
        if is_connected_after(adj, alive):
            continue
        disconnecting += 1
        masks = component_masks(adj, alive)
        sizes = sorted(m.bit_count() for m in masks)
        if len(masks) == 2 and sizes[0] == 1:
            singletons += 1
        else:
            exceptional.append(prefix + comb)
    return disconnecting, singletons, exceptional


def hyper_connectivity_scan(
    G: BitGraph,
    kappa: int,
    budget: int = DEFAULT_BUDGET,
    jobs: int = 1,
) -> HyperScanReport:
    """Scan every |F| = kappa subset; classify all disconnecting ones.

    ``kappa`` is the known connectivity (callers may pass
    :func:`~kappalab.connectivity.vertex_connectivity`).
    """
    V = G.vertex_count
    total = math.comb(V, kappa)
    if total > budget:
        return HyperScanReport(kappa, 0, 0, 0, (), inconclusive=True)
    state = {"adj": G.adj_masks, "full": G.full_mask}
    tasks = [(kappa, prefix, start) for prefix, start in level_tasks(V, kappa)]
    with TaskRunner(jobs, state) as runner:
        results = runner.map(_hyper_scan_worker, tasks)
    disconnecting = sum(r[0] for r in results)
    singletons = sum(r[1] for r in results)
    exceptional = tuple(f for r in results for f in r[2])
    return HyperScanReport(kappa, total, disconnecting, singletons, exceptional)
