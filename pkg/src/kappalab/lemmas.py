"""Machine verification of the structural facts behind the connectivity
results: external-edge counts, common-neighbor caps, neighborhood lower
bounds over independent sets, the double-rotation neighbor algebra around
the identity, and the allowed component structures under small vertex cuts.

Every verifier returns a :class:`VerificationReport`; exhaustive runs check
every instance, sampled runs draw seeded uniform fault sets (Fisher-Yates
prefix) and are reported as "consistent (sampled)", never as proved.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Callable

from ._parallel import TaskRunner, worker_state
from .connectivity import (
    ComponentReport,
    Shape,
    common_neighbors,
    components,
    is_connected_after,
    is_independent,
    mask_of,
    neighborhood,
)
from .graphs import FAMILY_AG, FAMILY_SPLIT_STAR, CayleyGraph, build_family
from .kappa import DEFAULT_BUDGET, level_tasks, remark_independent_set
from .perms import Perm, exchange, rot_minus, rot_plus

SAMPLE_CHUNKS = 64  # fixed partition of sampled trials; independent of jobs

__all__ = [
    "VerificationReport",
    "CutStructureRule",
    "CUT_RULES",
    "rule_for",
    "verify_basic_ag",
    "verify_neighbor_bounds_ag",
    "verify_claims_123",
    "verify_cut_structure",
    "verify_splitstar_neighbor_bounds",
    "verify_remark_constructions",
    "independent_sets_containing_zero",
    "sample_subset",
]


@dataclass(frozen=True)
class VerificationReport:
    lemma_id: str
    family: str
    n: int
    mode: str  # "exhaustive" | "sampled" | "skipped"
    instances_checked: int
    violations: tuple[dict, ...]
    trials: int | None = None
    seed: int | None = None
    min_attained: int | None = None
    notes: tuple[str, ...] = ()
    # cut-structure censuses: tally of component signatures over all
    # disconnecting faults, plus the faults hitting an exceptional clause
    outcome_counts: tuple[tuple[str, int], ...] = ()
    exceptional_faults: tuple[tuple[int, ...], ...] = ()

    @property
    def consistent(self) -> bool:
        return not self.violations

    @property
    def verdict(self) -> str:
        if self.violations:
            return "violated"
        if self.mode == "exhaustive":
            return "consistent"
        return f"consistent ({self.mode})"

    def to_json_dict(self) -> dict:
        return {
            "lemma_id": self.lemma_id,
            "family": self.family,
            "n": self.n,
            "mode": self.mode,
            "trials": self.trials,
            "seed": self.seed,
            "instances_checked": self.instances_checked,
            "min_attained": self.min_attained,
            "violations": list(self.violations),
            "verdict": self.verdict,
            "notes": list(self.notes),
            "outcome_counts": [[sig, c] for sig, c in self.outcome_counts],
            "exceptional_faults": [list(f) for f in self.exceptional_faults],
        }


PIN_NOTE = "independent sets pinned to contain the identity (vertex-transitivity)"


def _resolve_graph(family: str, n: int, graph: CayleyGraph | None) -> CayleyGraph:
    if graph is not None:
        return graph
    return build_family(family, n)


# ---------------------------------------------------------------------------
# basic structure of AG_n


def verify_basic_ag(n: int, graph: CayleyGraph | None = None) -> VerificationReport:
    """External-edge counts, out-neighbor spread, and the 2-common-neighbor cap.

    Checks, exhaustively: (1) every pair of last-symbol parts is joined by
    exactly (n-2)! external edges; (2) the two out-neighbors of every vertex
    lie in distinct parts; (3) nonadjacent vertices share at most two
    neighbors.
    """
    if not 4 <= n <= 6:
        raise ValueError("verify_basic_ag supports 4 <= n <= 6")
    G = _resolve_graph(FAMILY_AG, n, graph)
    violations: list[dict] = []
    checked = 0
    expected = math.factorial(n - 2)

    part_of = [G.last_symbol(v) for v in range(G.vertex_count)]
    pair_counts: dict[tuple[int, int], int] = {}
    for u in range(G.vertex_count):
        for v in G.neighbors[u]:
            if v > u and part_of[u] != part_of[v]:
                key = tuple(sorted((part_of[u], part_of[v])))
                pair_counts[key] = pair_counts.get(key, 0) + 1
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            checked += 1
            got = pair_counts.get((i, j), 0)
            if got != expected:
                violations.append(
                    {"check": "external-edge-count", "parts": [i, j], "got": got,
                     "expected": expected}
                )

    for v in range(G.vertex_count):
        checked += 1
        outs = [u for u in G.neighbors[v] if part_of[u] != part_of[v]]
        if len(outs) != 2 or part_of[outs[0]] == part_of[outs[1]]:
            violations.append(
                {"check": "out-neighbors", "vertex": v,
                 "out_parts": sorted(part_of[u] for u in outs)}
            )

    for u in range(G.vertex_count):
        mu = G.adj_masks[u]
        for v in range(u + 1, G.vertex_count):
            if mu >> v & 1:
                continue
            checked += 1
            shared = (mu & G.adj_masks[v]).bit_count()
            if shared > 2:
                violations.append(
                    {"check": "common-neighbor-cap", "pair": [u, v], "got": shared}
                )

    return VerificationReport(
        "basic", FAMILY_AG, n, "exhaustive", checked, tuple(violations)
    )


# ---------------------------------------------------------------------------
# neighborhood lower bounds over independent sets


def independent_sets_containing_zero(G: CayleyGraph, size: int):
    """All independent sets {0, v_1 < v_2 < ...} of the given size."""

    def extend(chosen: tuple[int, ...], blocked: int, start: int):
        if len(chosen) == size:
            yield chosen
            return
        for v in range(start, G.vertex_count):
            if blocked >> v & 1:
                continue
            yield from extend(chosen + (v,), blocked | G.adj_masks[v] | 1 << v, v + 1)

    yield from extend((0,), G.adj_masks[0] | 1, 1)


def sample_subset(rng: random.Random, V: int, k: int) -> list[int]:
    """Uniform k-subset of range(V) by Fisher-Yates prefix."""
    pool = list(range(V))
    for i in range(k):
        j = rng.randrange(i, V)
        pool[i], pool[j] = pool[j], pool[i]
    return pool[:k]


def _chunk_seed(seed: int, chunk: int) -> int:
    return (seed * 0x9E3779B1 + chunk) & 0x7FFFFFFFFFFFFFFF


def _verify_independent_bounds(
    lemma_id: str,
    G: CayleyGraph,
    set_size: int,
    bound: int,
    exhaustive: bool,
    trials: int,
    seed: int,
) -> VerificationReport:
    violations: list[dict] = []
    checked = 0
    attained: int | None = None

    def consider(S):
        nonlocal checked, attained
        checked += 1
        got = len(neighborhood(G, S))
        if attained is None or got < attained:
            attained = got
        if got < bound:
            violations.append(
                {"set": [G.label_text(v) for v in S], "neighborhood": got,
                 "bound": bound}
            )

    if exhaustive:
        for S in independent_sets_containing_zero(G, set_size):
            consider(S)
        mode = "exhaustive"
        report_trials = None
    else:
        rng = random.Random(seed)
        produced = 0
        while produced < trials:
            cand = sample_subset(rng, G.vertex_count - 1, set_size - 1)
            S = (0,) + tuple(sorted(v + 1 for v in cand))
            if is_independent(G, S):
                produced += 1
                consider(S)
        mode = "sampled"
        report_trials = trials
    return VerificationReport(
        lemma_id,
        G.family,
        G.n,
        mode,
        checked,
        tuple(violations),
        trials=report_trials,
        seed=None if exhaustive else seed,
        min_attained=attained,
        notes=(PIN_NOTE,),
    )


def verify_neighbor_bounds_ag(
    n: int,
    set_size: int,
    graph: CayleyGraph | None = None,
    trials: int = 100_000,
    seed: int = 0,
) -> VerificationReport:
    """|N(S)| >= 6n-16 (size 3) resp. 8n-24 (size 4) over independent sets.

    Exhaustive for n <= 5, sampled at n = 6.
    """
    if not 4 <= n <= 6:
        raise ValueError("verify_neighbor_bounds_ag supports 4 <= n <= 6")
    if set_size not in (3, 4):
        raise ValueError("set_size must be 3 or 4")
    G = _resolve_graph(FAMILY_AG, n, graph)
    bound = 6 * n - 16 if set_size == 3 else 8 * n - 24
    return _verify_independent_bounds(
        f"neighbor-bounds-{set_size}", G, set_size, bound, n <= 5, trials, seed
    )


def verify_splitstar_neighbor_bounds(
    n: int,
    set_size: int,
    graph: CayleyGraph | None = None,
    trials: int = 100_000,
    seed: int = 0,
) -> VerificationReport:
    """|N(S)| >= 4n-8 / 6n-14 / 8n-20 for independent sets of size 2 / 3 / 4.

    Exhaustive at n = 4, sampled at n = 5.
    """
    if n not in (4, 5):
        raise ValueError("verify_splitstar_neighbor_bounds supports n in {4, 5}")
    if set_size not in (2, 3, 4):
        raise ValueError("set_size must be 2, 3 or 4")
    G = _resolve_graph(FAMILY_SPLIT_STAR, n, graph)
    bound = {2: 4 * n - 8, 3: 6 * n - 14, 4: 8 * n - 20}[set_size]
    return _verify_independent_bounds(
        f"splitstar-bounds-{set_size}", G, set_size, bound, n == 4, trials, seed
    )


# ---------------------------------------------------------------------------
# the double-rotation neighbor algebra around the identity


def verify_claims_123(n: int, graph: CayleyGraph | None = None) -> VerificationReport:
    """Verify the second-neighborhood algebra of the identity in AG_n.

    Materializes N+, N-, N++, N+-, N-+, N-- by generator application and
    checks: N++ = N--; every x in N++ shares exactly {e gi+, e gj-} with e;
    pairwise common-neighbor caps within and across the second-neighborhood
    classes; independence of N+- and of N-+; and that each vertex of N+- has
    at most one neighbor in N-+ (and vice versa).
    """
    if not 4 <= n <= 6:
        raise ValueError("verify_claims_123 supports 4 <= n <= 6")
    G = _resolve_graph(FAMILY_AG, n, graph)
    e = Perm.identity(n)
    idx = G.vertex_id
    violations: list[dict] = []
    checked = 0

    n_plus = {i: idx(rot_plus(e, i)) for i in range(3, n + 1)}
    n_minus = {i: idx(rot_minus(e, i)) for i in range(3, n + 1)}
    ne_set = set(n_plus.values()) | set(n_minus.values())

    pairs = [(i, j) for i in range(3, n + 1) for j in range(3, n + 1) if i != j]
    npp = {(i, j): idx(rot_plus(rot_plus(e, i), j)) for i, j in pairs}
    npm = {(i, j): idx(rot_minus(rot_plus(e, i), j)) for i, j in pairs}
    nmp = {(i, j): idx(rot_plus(rot_minus(e, i), j)) for i, j in pairs}
    nmm = {(i, j): idx(rot_minus(rot_minus(e, i), j)) for i, j in pairs}

    checked += 1
    if set(npp.values()) != set(nmm.values()):
        violations.append({"check": "npp-equals-nmm"})

    for (i, j), x in npp.items():
        checked += 1
        expected = {n_plus[i], n_minus[j]}
        got = set(common_neighbors(G, 0, x))
        if got != expected:
            violations.append(
                {"check": "npp-shares-two-with-e", "i": i, "j": j,
                 "got": sorted(got), "expected": sorted(expected)}
            )

    def cap_check(name, vertex_set, cap, z_must_be_near_e=False):
        nonlocal checked
        vs = sorted(set(vertex_set))
        for a in range(len(vs)):
            for b in range(a + 1, len(vs)):
                x, y = vs[a], vs[b]
                checked += 1
                commons = common_neighbors(G, x, y)
                if len(commons) > cap:
                    violations.append(
                        {"check": name, "pair": [G.label_text(x), G.label_text(y)],
                         "got": len(commons)}
                    )
                elif z_must_be_near_e and any(z not in ne_set for z in commons):
                    violations.append(
                        {"check": name + "-z-location",
                         "pair": [G.label_text(x), G.label_text(y)]}
                    )

    cap_check("claim1-npp-pairs", npp.values(), 1, z_must_be_near_e=True)
    cap_check("claim2-npm-pairs", npm.values(), 1)
    cap_check("claim2-nmp-pairs", nmp.values(), 1)

    npp_set = set(npp.values())
    for x in sorted(set(npm.values()) | set(nmp.values())):
        for y in sorted(npp_set):
            if x == y:
                continue
            checked += 1
            if G.has_edge(x, y):
                continue
            if len(common_neighbors(G, x, y)) > 1:
                violations.append(
                    {"check": "claim3-cross-cap",
                     "pair": [G.label_text(x), G.label_text(y)]}
                )

    for name, vertex_set in (("npm-independent", npm), ("nmp-independent", nmp)):
        checked += 1
        if not is_independent(G, set(vertex_set.values())):
            violations.append({"check": name})

    nmp_mask = mask_of(set(nmp.values()))
    npm_mask = mask_of(set(npm.values()))
    for x in sorted(set(npm.values())):
        checked += 1
        if (G.adj_masks[x] & nmp_mask).bit_count() > 1:
            violations.append({"check": "npm-to-nmp-degree", "vertex": G.label_text(x)})
    for x in sorted(set(nmp.values())):
        checked += 1
        if (G.adj_masks[x] & npm_mask).bit_count() > 1:
            violations.append({"check": "nmp-to-npm-degree", "vertex": G.label_text(x)})

    return VerificationReport(
        "claims", FAMILY_AG, n, "exhaustive", checked, tuple(violations)
    )


# ---------------------------------------------------------------------------
# component structure under small vertex cuts


@dataclass(frozen=True)
class CutStructureRule:
    """Allowed component structures for faults up to a size bound."""

    key: str
    family: str
    bound: Callable[[int], int]
    min_n: int
    allowed: Callable[[CayleyGraph, ComponentReport, int], bool]
    # marks outcomes worth listing individually (the n=4 4-cycle clauses)
    exceptional: Callable[[ComponentReport], bool] | None = None


def _signature(report: ComponentReport) -> str:
    return ",".join(s.value for s in report.shapes)


def _shapes_small(report: ComponentReport) -> list[Shape]:
    # all but the largest component (report is sorted largest first)
    return list(report.shapes[1:])


def _two_with_small(report, allowed_shapes) -> bool:
    return report.count == 2 and any(s in allowed_shapes for s in report.shapes)


def _rule_ag_4n11(G, report, fsize) -> bool:
    n = G.n
    if report.count != 2:
        return False
    if Shape.SINGLETON in report.shapes:
        return True
    if Shape.EDGE in report.shapes and fsize == 4 * n - 11:
        return True
    if n == 4:
        if report.shapes == (Shape.FOUR_CYCLE, Shape.FOUR_CYCLE) and fsize == 4:
            return True
        if set(report.shapes) == {Shape.FOUR_CYCLE, Shape.TWO_PATH} and fsize == 5:
            return True
    return False


def _rule_ag_6n20(G, report, fsize) -> bool:
    if _two_with_small(report, (Shape.SINGLETON, Shape.EDGE)):
        return True
    return report.count == 3 and _shapes_small(report) == [Shape.SINGLETON] * 2


def _rule_ag_6n19(G, report, fsize) -> bool:
    if _two_with_small(report, (Shape.SINGLETON, Shape.EDGE, Shape.TWO_PATH)):
        return True
    return report.count == 3 and _shapes_small(report) == [Shape.SINGLETON] * 2


def _rule_ag_8n29(G, report, fsize) -> bool:
    if _two_with_small(
        report, (Shape.SINGLETON, Shape.EDGE, Shape.TWO_PATH, Shape.THREE_CYCLE)
    ):
        return True
    if report.count == 3:
        small = sorted(s.value for s in _shapes_small(report))
        return small in (["singleton", "singleton"], ["edge", "singleton"])
    if report.count == 4:
        return _shapes_small(report) == [Shape.SINGLETON] * 3
    return False


def _rule_s2_4n8(G, report, fsize) -> bool:
    n = G.n
    if report.count == 2:
        if Shape.SINGLETON in report.shapes:
            return True
        if Shape.EDGE in report.shapes:
            edge_comp = report.components[report.shapes.index(Shape.EDGE)]
            u, v = edge_comp
            if exchange(G.label(u)) == G.label(v):
                return fsize == 4 * n - 8
            # surviving 3-rotation edge: one shared neighbor, at most one
            # fault vertex beyond N({u, v})
            return (
                len(common_neighbors(G, u, v)) == 1
                and fsize <= len(neighborhood(G, (u, v))) + 1
            )
        # n=4 exceptional clauses, all at |F| = 4n-8 exactly: a 2-path or
        # 4-cycle split off, or the balanced split into two 8-vertex halves
        if n == 4 and fsize == 8:
            if Shape.TWO_PATH in report.shapes or Shape.FOUR_CYCLE in report.shapes:
                return True
            if report.sizes() == (8, 8):
                return True
        return False
    if report.count == 3:
        if _shapes_small(report) != [Shape.SINGLETON] * 2:
            return False
        u = report.components[1][0]
        v = report.components[2][0]
        expected = set(G.neighbors[u]) | set(G.neighbors[v])
        return (
            set(report.fault) == expected
            and len(common_neighbors(G, u, v)) == 2
            and fsize == 4 * n - 8
        )
    return False


def _rule_s2_6n17(G, report, fsize) -> bool:
    return _rule_ag_6n19(G, report, fsize)


def _rule_s2_8n25(G, report, fsize) -> bool:
    return _rule_ag_8n29(G, report, fsize)


def _has_four_cycle(report: ComponentReport) -> bool:
    return Shape.FOUR_CYCLE in report.shapes


def _s2_exceptional(report: ComponentReport) -> bool:
    if Shape.FOUR_CYCLE in report.shapes or Shape.TWO_PATH in report.shapes:
        return True
    return report.count == 2 and report.sizes() == (8, 8)


CUT_RULES: dict[str, CutStructureRule] = {
    rule.key: rule
    for rule in (
        CutStructureRule(
            "ag-4n-11", FAMILY_AG, lambda n: 4 * n - 11, 4, _rule_ag_4n11,
            exceptional=_has_four_cycle,
        ),
        CutStructureRule("ag-6n-20", FAMILY_AG, lambda n: 6 * n - 20, 5, _rule_ag_6n20),
        CutStructureRule("ag-6n-19", FAMILY_AG, lambda n: 6 * n - 19, 5, _rule_ag_6n19),
        CutStructureRule("ag-8n-29", FAMILY_AG, lambda n: 8 * n - 29, 5, _rule_ag_8n29),
        CutStructureRule(
            "s2-4n-8", FAMILY_SPLIT_STAR, lambda n: 4 * n - 8, 4, _rule_s2_4n8,
            exceptional=_s2_exceptional,
        ),
        CutStructureRule("s2-6n-17", FAMILY_SPLIT_STAR, lambda n: 6 * n - 17, 5, _rule_s2_6n17),
        CutStructureRule("s2-8n-25", FAMILY_SPLIT_STAR, lambda n: 8 * n - 25, 5, _rule_s2_8n25),
    )
}


def rule_for(family: str, n: int, bound: int) -> CutStructureRule:
    """The strictest registered rule covering faults of the given bound."""
    for rule in CUT_RULES.values():
        if rule.family == family and n >= rule.min_n and rule.bound(n) >= bound:
            return rule
    raise ValueError(f"no cut-structure rule for family={family}, n={n}, bound={bound}")


def _examine_fault(G, rule, exceptional, fault, fsize, violations, outcomes, exc_faults):
    report = components(G, fault)
    sig = _signature(report)
    outcomes[sig] = outcomes.get(sig, 0) + 1
    if not rule(G, report, fsize):
        violations.append(_violation_payload(G, report))
    elif exceptional is not None and exceptional(report):
        exc_faults.append(report.fault)


def _census_worker(task):
    state = worker_state()
    G = state["graph"]
    rule = state["rule"]
    exceptional = state["exceptional"]
    adj = G.adj_masks
    full = G.full_mask
    k, prefix, start = task
    V = len(adj)
    pmask = mask_of(prefix)
    r = k - len(prefix)
    checked = 0
    violations: list[dict] = []
    outcomes: dict[str, int] = {}
    exc_faults: list[tuple[int, ...]] = []
    for comb in itertools.combinations(range(start, V), r):
        checked += 1
        fm = pmask
        for v in comb:
            fm |= 1 << v
        if is_connected_after(adj, full ^ fm):
            continue
        _examine_fault(G, rule, exceptional, prefix + comb, k, violations, outcomes, exc_faults)
    return checked, violations, outcomes, exc_faults


def _sampled_census_worker(task):
    state = worker_state()
    G = state["graph"]
    rule = state["rule"]
    exceptional = state["exceptional"]
    size = state["size"]
    seed = state["seed"]
    chunk, trials = task
    adj = G.adj_masks
    full = G.full_mask
    V = G.vertex_count
    rng = random.Random(_chunk_seed(seed, chunk))
    violations: list[dict] = []
    outcomes: dict[str, int] = {}
    exc_faults: list[tuple[int, ...]] = []
    for _ in range(trials):
        fault = tuple(sorted(sample_subset(rng, V, size)))
        fm = mask_of(fault)
        if is_connected_after(adj, full ^ fm):
            continue
        _examine_fault(G, rule, exceptional, fault, size, violations, outcomes, exc_faults)
    return trials, violations, outcomes, exc_faults


def _violation_payload(G, report: ComponentReport) -> dict:
    return {
        "fault": list(report.fault),
        "fault_labels": [G.label_text(v) for v in report.fault],
        "count": report.count,
        "sizes": list(report.sizes()),
        "shapes": [s.value for s in report.shapes],
    }


def verify_cut_structure(
    G: CayleyGraph,
    size_bound: int,
    allowed: Callable[[CayleyGraph, ComponentReport, int], bool] | CutStructureRule | str,
    mode: str = "exhaustive",
    trials: int = 1_000_000,
    seed: int = 0,
    lemma_id: str | None = None,
    jobs: int = 1,
    budget: int = DEFAULT_BUDGET,
) -> VerificationReport:
    """Census of component structures for all (or sampled) faults of bounded size.

    Exhaustive mode enumerates every fault of size 0..size_bound; sampled mode
    draws ``trials`` faults of size exactly ``size_bound``. Every fault whose
    removal disconnects the graph must satisfy ``allowed``; all others are
    skipped. ``allowed`` may be a rule key, a rule object, or a predicate
    ``(graph, report, fault_size) -> bool``.
    """
    exceptional = None
    if isinstance(allowed, str):
        allowed = CUT_RULES[allowed]
    if isinstance(allowed, CutStructureRule):
        rule_fn = allowed.allowed
        exceptional = allowed.exceptional
        lemma_id = lemma_id or allowed.key
    else:
        rule_fn = allowed
        lemma_id = lemma_id or "cut-structure"
    V = G.vertex_count

    def merge(results, checked, mode_name, report_trials=None):
        violations = tuple(v for r in results for v in r[1])
        outcomes: dict[str, int] = {}
        for r in results:
            for sig, c in r[2].items():
                outcomes[sig] = outcomes.get(sig, 0) + c
        exc = tuple(f for r in results for f in r[3])
        return VerificationReport(
            lemma_id, G.family, G.n, mode_name, checked, violations,
            trials=report_trials, seed=seed if report_trials else None,
            outcome_counts=tuple(sorted(outcomes.items())),
            exceptional_faults=exc,
        )

    if mode == "exhaustive":
        total = sum(math.comb(V, k) for k in range(size_bound + 1))
        if total > budget:
            raise ValueError(
                f"exhaustive census of {total} subsets exceeds budget {budget}"
            )
        state = {"graph": G, "rule": rule_fn, "exceptional": exceptional}
        tasks = [
            (k, prefix, start)
            for k in range(size_bound + 1)
            for prefix, start in level_tasks(V, k)
        ]
        with TaskRunner(jobs, state) as runner:
            results = runner.map(_census_worker, tasks)
        return merge(results, sum(r[0] for r in results), "exhaustive")
    if mode != "sampled":
        raise ValueError("mode must be 'exhaustive' or 'sampled'")
    state = {
        "graph": G, "rule": rule_fn, "exceptional": exceptional,
        "size": size_bound, "seed": seed,
    }
    base, rem = divmod(trials, SAMPLE_CHUNKS)
    tasks = [
        (chunk, base + (1 if chunk < rem else 0))
        for chunk in range(SAMPLE_CHUNKS)
        if base + (1 if chunk < rem else 0) > 0
    ]
    with TaskRunner(jobs, state) as runner:
        results = runner.map(_sampled_census_worker, tasks)
    return merge(results, sum(r[0] for r in results), "sampled", report_trials=trials)


# ---------------------------------------------------------------------------
# the explicit tight constructions


def verify_remark_constructions(
    n: int, graph: CayleyGraph | None = None
) -> VerificationReport:
    """Independence and exact neighborhood sizes of the double-rotation sets.

    For every valid index pair: the 3-set {e, (e gi+)gj+, (e gj+)gi+} has
    |N(S)| = 6n-16 and the 4-set with ((e gj+)gi-)gj+ added has 8n-24.
    """
    if not 4 <= n <= 8:
        raise ValueError("verify_remark_constructions supports 4 <= n <= 8")
    G = _resolve_graph(FAMILY_AG, n, graph)
    violations: list[dict] = []
    checked = 0
    minima = {3: None, 4: None}

    def consider(size, i, j, expected):
        nonlocal checked
        checked += 1
        S = remark_independent_set(G, size, i, j)
        got = len(neighborhood(G, S))
        if minima[size] is None or got < minima[size]:
            minima[size] = got
        if not is_independent(G, S):
            violations.append({"check": "independence", "size": size, "i": i, "j": j})
        if got != expected:
            violations.append(
                {"check": "neighborhood-size", "size": size, "i": i, "j": j,
                 "got": got, "expected": expected}
            )

    for i in range(3, n + 1):
        for j in range(3, n + 1):
            if i == j:
                continue
            if i < j:
                consider(3, i, j, 6 * n - 16)
            consider(4, i, j, 8 * n - 24)

    return VerificationReport(
        "remark", FAMILY_AG, n, "exhaustive", checked, tuple(violations),
        min_attained=minima[3],
        notes=(f"three-set minimum {minima[3]}, four-set minimum {minima[4]}",),
    )
