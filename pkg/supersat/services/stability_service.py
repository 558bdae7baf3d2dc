# supersat/services/stability_service.py
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Mapping, Sequence

import numpy as np

from supersat.config import check_guardrail, setting
from supersat.errors import SupersatError
from supersat.models import DistanceMethod, DistanceResult, Graph, VertexPartition

logger = logging.getLogger(__name__)

OUT = -1
MODES = ("exact", "heuristic")


# =========================================================
# Edit distance
# =========================================================
def edit_distance(g: Graph, h: Graph, identification: Mapping[int, int] | Sequence[int] | None = None) -> int:
    """|E(G) \\ E(H)| + |E(H) \\ E(G)| with H placed on V(G) through an injective vertex map."""
    if identification is None:
        if h.n > g.n:
            raise SupersatError(f"H has {h.n} vertices but G only {g.n}; give an identification")
        mapping = {v: v for v in range(h.n)}
    elif isinstance(identification, Mapping):
        mapping = {int(k): int(v) for k, v in identification.items()}
    else:
        mapping = {i: int(v) for i, v in enumerate(identification)}

    if set(mapping) != set(range(h.n)):
        raise SupersatError("identification must map every vertex of H")
    images = list(mapping.values())
    if len(set(images)) != len(images):
        raise SupersatError("identification is not injective")
    if any(not 0 <= v < g.n for v in images):
        raise SupersatError(f"identification leaves the vertex range 0..{g.n - 1}")

    placed = {tuple(sorted((mapping[u], mapping[v]))) for u, v in h.edges}
    return len(g.edges - placed) + len(placed - g.edges)


def distance_for_labels(graph: Graph, labels: Sequence[int]) -> int:
    """Distance from G to the complete multipartite graph whose parts are the label classes.

    A label of -1 leaves the vertex out; all its edges then count.
    """
    if len(labels) != graph.n:
        raise SupersatError(f"expected {graph.n} labels, got {len(labels)}")
    cost = 0
    for u, v in graph.edges:
        if labels[u] == OUT or labels[v] == OUT or labels[u] == labels[v]:
            cost += 1
    counts: dict[int, int] = {}
    for label in labels:
        if label != OUT:
            counts[label] = counts.get(label, 0) + 1
    assigned = sum(counts.values())
    cross_pairs = (assigned * assigned - sum(c * c for c in counts.values())) // 2
    cross_edges = sum(1 for u, v in graph.edges if OUT not in (labels[u], labels[v]) and labels[u] != labels[v])
    return cost + cross_pairs - cross_edges


def _canonical(labels: Sequence[int]) -> tuple[int, ...]:
    """Rename parts in order of first appearance."""
    rename: dict[int, int] = {}
    out = []
    for label in labels:
        if label == OUT:
            out.append(OUT)
            continue
        if label not in rename:
            rename[label] = len(rename)
        out.append(rename[label])
    return tuple(out)


def _balanced(sizes: Sequence[int]) -> bool:
    return max(sizes) - min(sizes) <= 1


# =========================================================
# Exact search
# =========================================================
class _ExactSearch:
    """Branch and bound over labels {-1, 0..r-1}.

    Parts are interchangeable, so labels are generated in restricted-growth order.
    The bound adds, for each open vertex, its cheapest label against the decided ones.
    """

    def __init__(self, graph: Graph, r: int, balanced: bool, incumbent: tuple[int, tuple[int, ...]]):
        self.graph = graph
        self.r = r
        self.balanced = balanced
        self.order = sorted(range(graph.n), key=lambda v: (-graph.degrees[v], v))
        self.best_cost, self.best_labels = incumbent
        self.labels = [OUT] * graph.n
        self.decided: list[int] = []
        self.sizes = [0] * r

    def _pair_cost(self, v: int, label: int) -> int:
        nbrs = self.graph.neighbor_sets[v]
        cost = 0
        for u in self.decided:
            other = self.labels[u]
            adjacent = u in nbrs
            if label == OUT or other == OUT or other == label:
                cost += adjacent
            else:
                cost += not adjacent
        return cost

    def _feasible(self, remaining: int) -> bool:
        if not self.balanced:
            return True
        top = max(self.sizes)
        deficit = sum(max(0, top - 1 - s) for s in self.sizes)
        return deficit <= remaining

    def _bound(self, depth: int, parts_open: int) -> int:
        total = 0
        for v in self.order[depth:]:
            total += min(self._pair_cost(v, label) for label in range(OUT, min(self.r, parts_open + 1)))
        return total

    def run(self) -> tuple[int, tuple[int, ...]]:
        self._extend(0, 0, 0)
        return self.best_cost, self.best_labels

    def _extend(self, depth: int, cost: int, parts_open: int) -> None:
        n = self.graph.n
        if depth == n:
            if self.balanced and not _balanced(self.sizes):
                return
            if cost < self.best_cost:
                self.best_cost, self.best_labels = cost, _canonical(self.labels)
            return
        if cost + self._bound(depth, parts_open) >= self.best_cost:
            return
        v = self.order[depth]
        for label in range(OUT, min(self.r, parts_open + 1)):
            step = self._pair_cost(v, label)
            if cost + step >= self.best_cost:
                continue
            self.labels[v] = label
            if label != OUT:
                self.sizes[label] += 1
            if self._feasible(n - depth - 1):
                self.decided.append(v)
                self._extend(depth + 1, cost + step, max(parts_open, label + 1))
                self.decided.pop()
            if label != OUT:
                self.sizes[label] -= 1
            self.labels[v] = OUT


# =========================================================
# Local search
# =========================================================
def _local_search(graph: Graph, r: int, balanced: bool, rng: np.random.Generator, patience: int) -> tuple[int, list[int]]:
    """Random relocations and, in balanced mode, pairwise swaps; accepted on strict improvement.

    Stops after `patience` vertices in a row admit no improving move.
    """
    n = graph.n
    if balanced:
        perm = rng.permutation(n)
        labels = [0] * n
        for i, v in enumerate(perm):
            labels[int(v)] = i % r
    else:
        labels = [int(x) for x in rng.integers(0, r, size=n)]
    sizes = [labels.count(p) for p in range(r)]
    cost = distance_for_labels(graph, labels)
    choices = list(range(OUT, r))

    def contribution(v: int, label: int) -> int:
        """Cost of the pairs at v if v carried `label`."""
        if label == OUT:
            return graph.degrees[v]
        nbr_same = nbr_out = 0
        for w in graph.adjacency[v]:
            if labels[w] == OUT:
                nbr_out += 1
            elif labels[w] == label:
                nbr_same += 1
        assigned_others = sum(sizes) - (labels[v] != OUT)
        same_others = sizes[label] - (labels[v] == label)
        nbr_assigned = graph.degrees[v] - nbr_out
        nbr_cross = nbr_assigned - nbr_same
        cross_others = assigned_others - same_others
        return nbr_out + nbr_same + (cross_others - nbr_cross)

    def move(v: int, label: int) -> int:
        """Relabel v and return the change in cost."""
        delta = contribution(v, label) - contribution(v, labels[v])
        if labels[v] != OUT:
            sizes[labels[v]] -= 1
        if label != OUT:
            sizes[label] += 1
        labels[v] = label
        return delta

    def try_relocate(v: int) -> int | None:
        current = labels[v]
        for label in rng.permutation(choices):
            label = int(label)
            if label == current:
                continue
            if balanced:
                trial = list(sizes)
                if current != OUT:
                    trial[current] -= 1
                if label != OUT:
                    trial[label] += 1
                if not _balanced(trial):
                    continue
            delta = contribution(v, label) - contribution(v, current)
            if delta < 0:
                return move(v, label)
        return None

    def try_swap(v: int) -> int | None:
        # a swap keeps every part size
        a = labels[v]
        for w in rng.permutation(n):
            w = int(w)
            b = labels[w]
            if b == a:
                continue
            delta = move(v, b)
            delta += move(w, a)
            if delta < 0:
                return delta
            move(w, b)
            move(v, a)
        return None

    misses = 0
    while misses < patience:
        v = int(rng.integers(n))
        delta = try_relocate(v)
        if delta is None and balanced:
            delta = try_swap(v)
        if delta is None:
            misses += 1
        else:
            cost += delta
            misses = 0
    return cost, labels


def _start(task: tuple[Graph, int, bool, np.random.SeedSequence, int]) -> tuple[int, tuple[int, ...]]:
    graph, r, balanced, seed_seq, patience = task
    cost, labels = _local_search(graph, r, balanced, np.random.default_rng(seed_seq), patience)
    return cost, _canonical(labels)


def _heuristic(graph: Graph, r: int, balanced: bool, seed: int, starts: int | None,
               workers: int | None = None) -> tuple[int, tuple[int, ...]]:
    """Best of independent local-search starts: least cost, then the smallest canonical labeling."""
    starts = int(starts if starts is not None else setting("LOCAL_SEARCH_STARTS"))
    workers = int(workers if workers is not None else setting("WORKERS"))
    patience = int(setting("LOCAL_SEARCH_PATIENCE")) * max(graph.n, 1)
    tasks = [(graph, r, balanced, child, patience) for child in np.random.SeedSequence(seed).spawn(max(starts, 1))]
    if workers <= 1 or len(tasks) < 2:
        return min(map(_start, tasks))
    with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
        return min(pool.map(_start, tasks))


# =========================================================
# Distances to structured families
# =========================================================
def _result(graph: Graph, r: int, cost: int, labels: Sequence[int], method: DistanceMethod,
            target: str) -> DistanceResult:
    realized = distance_for_labels(graph, labels)
    if realized != cost:
        raise SupersatError(f"internal: witness realizes {realized}, search reported {cost}")
    return DistanceResult(
        distance=cost,
        labels=tuple(labels),
        witness=VertexPartition.from_labels(labels, r),
        method=method,
        target=target,
    )


def _distance(graph: Graph, r: int, balanced: bool, mode: str, seed: int, starts: int | None,
              workers: int | None, guardrail: str, override: bool, target: str) -> DistanceResult:
    if mode not in MODES:
        raise SupersatError(f"mode must be one of {', '.join(MODES)}, got {mode!r}")
    if graph.n == 0:
        return DistanceResult(0, (), VertexPartition.from_parts([[] for _ in range(r)]), DistanceMethod.EXACT, target)

    if mode == "heuristic":
        heuristic_cost, heuristic_labels = _heuristic(graph, r, balanced, seed, starts, workers)
        return _result(graph, r, heuristic_cost, heuristic_labels, DistanceMethod.LOCAL_SEARCH, target)

    check_guardrail(guardrail, graph.n, override=override, what="vertex count")
    # one local-search start seeds the incumbent
    heuristic_cost, heuristic_labels = _heuristic(graph, r, balanced, seed, 1, 1)
    cost, labels = _ExactSearch(graph, r, balanced, (heuristic_cost, heuristic_labels)).run()
    logger.debug("exact %s distance %d (local search gave %d)", target, cost, heuristic_cost)
    return _result(graph, r, cost, labels, DistanceMethod.EXACT, target)


def distance_to_turan(graph: Graph, r: int, mode: str = "exact", *, seed: int = 0,
                      starts: int | None = None, workers: int | None = None, override: bool = False) -> DistanceResult:
    """min d(G, T) over Turán graphs T with r near-equal parts on any vertex subset of G."""
    if r < 1:
        raise SupersatError(f"r must be at least 1, got {r}")
    return _distance(graph, r, True, mode, seed, starts, workers, "TURAN_EXACT_MAX", override, f"turan(r={r})")


def distance_to_bipartite(graph: Graph, mode: str = "exact", *, seed: int = 0,
                          starts: int | None = None, workers: int | None = None, override: bool = False) -> DistanceResult:
    """min d(G, K_{U,V}) over disjoint U, V (no size constraint; vertices may be left out)."""
    return _distance(graph, 2, False, mode, seed, starts, workers, "BIPARTITE_EXACT_MAX", override, "complete-bipartite")
