# supersat/services/graph_core.py
from __future__ import annotations

import logging
from itertools import combinations
from typing import Iterator, Sequence

import networkx as nx

from supersat.config import check_guardrail
from supersat.constants.families import FAMILY_PARAMETERS
from supersat.errors import SupersatError
from supersat.models import Construction, Edge, Graph, GraphFamilySpec, VertexPartition

logger = logging.getLogger(__name__)


# =========================================================
# Turán graphs and relatives
# =========================================================
def turan_part_sizes(n: int, r: int) -> tuple[int, ...]:
    """Largest-first: ceil(n/r) repeated (n mod r) times, then floor(n/r)."""
    if r < 1 or n < r:
        raise SupersatError(f"Turán graph needs 1 <= r <= n, got n = {n}, r = {r}")
    q, extra = divmod(n, r)
    return tuple([q + 1] * extra + [q] * (r - extra))


def turan_edge_count(n: int, r: int) -> int:
    sizes = turan_part_sizes(n, r)
    return (n * n - sum(s * s for s in sizes)) // 2


def _blocks(sizes: Sequence[int]) -> list[tuple[int, ...]]:
    parts, start = [], 0
    for size in sizes:
        parts.append(tuple(range(start, start + size)))
        start += size
    return parts


def _multipartite_edges(parts: Sequence[Sequence[int]]) -> set[Edge]:
    edges: set[Edge] = set()
    for i, j in combinations(range(len(parts)), 2):
        for u in parts[i]:
            for v in parts[j]:
                edges.add((u, v) if u < v else (v, u))
    return edges


def build_complete_multipartite(sizes: Sequence[int]) -> Construction:
    if not sizes:
        raise SupersatError("complete multipartite graph needs at least one part")
    if any(int(s) < 1 for s in sizes):
        raise SupersatError(f"part sizes must be positive, got {list(sizes)}")
    parts = _blocks([int(s) for s in sizes])
    n = sum(len(p) for p in parts)
    return Construction(
        graph=Graph(n, frozenset(_multipartite_edges(parts))),
        partition=VertexPartition.from_parts(parts),
        family=GraphFamilySpec("complete-multipartite", tuple(int(s) for s in sizes)),
    )


def build_turan(n: int, r: int) -> Construction:
    sizes = turan_part_sizes(n, r)
    built = build_complete_multipartite(sizes)
    return Construction(built.graph, built.partition, family=GraphFamilySpec("turan", (n, r)))


def build_turan_plus_edge(n: int, r: int, part: int | None = None) -> Construction:
    """T*_{n,r}: the extra edge joins the two lowest vertices of a smallest part with >= 2 vertices."""
    base = build_turan(n, r)
    assert base.partition is not None
    parts = base.partition.parts
    if part is None:
        candidates = [i for i, p in enumerate(parts) if len(p) >= 2]
        if not candidates:
            raise SupersatError(f"T_{{{n},{r}}} has no part with two vertices to join")
        part = min(candidates, key=lambda i: (len(parts[i]), -i))
    elif not (0 <= part < len(parts)) or len(parts[part]) < 2:
        raise SupersatError(f"part {part} of T_{{{n},{r}}} cannot hold a class edge")
    u, v = parts[part][0], parts[part][1]
    return Construction(
        graph=base.graph.with_edge(u, v),
        partition=base.partition,
        added_edges=((u, v),),
        family=GraphFamilySpec("turan-plus-edge", (n, r)),
    )


def build_bipartite_plus_edge(a: int, b: int) -> Construction:
    if a < 2:
        raise SupersatError(f"the class receiving the extra edge needs at least 2 vertices, got a = {a}")
    if b < 1:
        raise SupersatError(f"the other class needs at least 1 vertex, got b = {b}")
    base = build_complete_multipartite([a, b])
    return Construction(
        graph=base.graph.with_edge(0, 1),
        partition=base.partition,
        added_edges=((0, 1),),
        family=GraphFamilySpec("complete-bipartite-plus-edge", (a, b)),
    )


def build_partial_turan(m: int, r: int) -> Construction:
    """G* with exactly m edges and T_{n,r} ⊆ G* ⊊ T_{n+1,r}, where e(T_{n,r}) <= m < e(T_{n+1,r})."""
    if r < 1:
        raise SupersatError(f"r must be positive, got {r}")
    floor_m = r * (r - 1) // 2
    if m < max(floor_m, 1):
        raise SupersatError(f"need m >= e(T_{{{r},{r}}}) = {floor_m} and m >= 1, got {m}")
    if r == 1:
        raise SupersatError("T_{n,1} is edgeless; partial Turán graphs need r >= 2")
    n = r
    while turan_edge_count(n + 1, r) <= m:
        n += 1
    base = build_turan(n, r)
    assert base.partition is not None
    extra = m - turan_edge_count(n, r)
    spec = GraphFamilySpec("partial-turan", (m, r))
    if extra == 0:
        return Construction(base.graph, base.partition, family=spec)

    host_part = len(base.partition.parts) - 1
    outside = [v for v in range(n) if base.partition.part_of(v) != host_part]
    new_edges = tuple((v, n) for v in outside[:extra])
    parts = [list(p) for p in base.partition.parts]
    parts[host_part].append(n)
    return Construction(
        graph=Graph(n + 1, base.graph.edges | set(new_edges)),
        partition=VertexPartition.from_parts(parts),
        added_edges=new_edges,
        family=spec,
    )


# =========================================================
# Small named graphs
# =========================================================
def build_star(k: int) -> Construction:
    if k < 1:
        raise SupersatError(f"star needs at least one leaf, got {k}")
    base = build_complete_multipartite([1, k])
    return Construction(base.graph, base.partition, family=GraphFamilySpec("star", (k,)))


def build_cycle(k: int) -> Construction:
    if k < 3:
        raise SupersatError(f"cycle needs at least 3 vertices, got {k}")
    graph = Graph.from_edges(k, ((i, (i + 1) % k) for i in range(k)))
    return Construction(graph, family=GraphFamilySpec("cycle", (k,)))


def build_path(k: int) -> Construction:
    if k < 1:
        raise SupersatError(f"path needs at least one vertex, got {k}")
    graph = Graph.from_edges(k, ((i, i + 1) for i in range(k - 1)))
    return Construction(graph, family=GraphFamilySpec("path", (k,)))


def build_clique(k: int) -> Construction:
    if k < 1:
        raise SupersatError(f"clique needs at least one vertex, got {k}")
    base = build_complete_multipartite([1] * k)
    return Construction(base.graph, base.partition, family=GraphFamilySpec("clique", (k,)))


def build_kite() -> Construction:
    base = build_bipartite_plus_edge(2, 2)
    return Construction(base.graph, base.partition, base.added_edges, GraphFamilySpec("kite"))


def build_book(k: int) -> Construction:
    """K_2 joined to k independent vertices: k triangles sharing the spine 0-1."""
    if k < 1:
        raise SupersatError(f"book needs at least one page, got {k}")
    edges = [(0, 1)] + [(s, p) for p in range(2, k + 2) for s in (0, 1)]
    return Construction(Graph.from_edges(k + 2, edges), family=GraphFamilySpec("book", (k,)))


def build_petersen() -> Construction:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Construction(Graph.from_edges(10, outer + inner + spokes), family=GraphFamilySpec("petersen"))


def disjoint_union(*graphs: Graph) -> Graph:
    result = Graph(0)
    for g in graphs:
        result = result.disjoint_union(g)
    return result


_BUILDERS = {
    "turan": lambda p: build_turan(*p),
    "turan-plus-edge": lambda p: build_turan_plus_edge(*p),
    "complete-multipartite": lambda p: build_complete_multipartite(p),
    "complete-bipartite-plus-edge": lambda p: build_bipartite_plus_edge(*p),
    "star": lambda p: build_star(*p),
    "cycle": lambda p: build_cycle(*p),
    "clique": lambda p: build_clique(*p),
    "kite": lambda p: build_kite(),
    "path": lambda p: build_path(*p),
    "petersen": lambda p: build_petersen(),
    "book": lambda p: build_book(*p),
    "partial-turan": lambda p: build_partial_turan(*p),
}


def build_family(spec: GraphFamilySpec) -> Construction:
    expected = FAMILY_PARAMETERS[spec.kind]
    if expected != ("sizes",) and len(spec.parameters) != len(expected):
        names = ", ".join(expected) or "none"
        raise SupersatError(f"{spec.kind} takes parameters ({names}), got {list(spec.parameters)}")
    return _BUILDERS[spec.kind](tuple(spec.parameters))


# =========================================================
# Structural recognition
# =========================================================
def recognize_complete_multipartite(graph: Graph) -> VertexPartition | None:
    """Parts = components of the complement restricted to non-isolated vertices."""
    vertices = graph.non_isolated
    if not vertices:
        return None
    parent = {v: v for v in vertices}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in combinations(vertices, 2):
        if not graph.has_edge(u, v):
            parent[find(u)] = find(v)

    groups: dict[int, list[int]] = {}
    for v in vertices:
        groups.setdefault(find(v), []).append(v)
    parts = sorted(groups.values(), key=lambda p: p[0])

    if len(parts) < 2:
        return None
    expected = sum(len(a) * len(b) for a, b in combinations(parts, 2))
    if graph.m != expected:
        return None
    return VertexPartition.from_parts(parts)


def is_complete_bipartite(graph: Graph) -> bool:
    partition = recognize_complete_multipartite(graph)
    return partition is not None and partition.r == 2


def is_regular_complete_multipartite(graph: Graph, r: int | None = None) -> bool:
    partition = recognize_complete_multipartite(graph)
    if partition is None or (r is not None and partition.r != r):
        return False
    return len(set(partition.sizes)) == 1


# =========================================================
# Isomorphism classes
# =========================================================
def refinement_certificate(graph: Graph) -> tuple:
    """Isomorphism invariant from iterated degree refinement (colour classes ranked canonically)."""
    adjacency = graph.adjacency
    colors = list(graph.degrees)
    history: list[tuple] = []
    for _ in range(graph.n):
        signatures = [(colors[v], tuple(sorted(colors[w] for w in adjacency[v]))) for v in range(graph.n)]
        ranking = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        refined = [ranking[sig] for sig in signatures]
        history.append(tuple(sorted(signatures)))
        stable = len(set(refined)) == len(set(colors))
        colors = refined
        if stable:
            break
    edge_classes = tuple(sorted(tuple(sorted((colors[u], colors[v]))) for u, v in graph.edges))
    return graph.n, graph.m, tuple(history), edge_classes


class IsomorphismClasses:
    """Keeps one representative per isomorphism class; refinement buckets, VF2 inside a bucket."""

    def __init__(self) -> None:
        self._buckets: dict[tuple, list[tuple[Graph, nx.Graph]]] = {}
        self.representatives: list[Graph] = []

    def __len__(self) -> int:
        return len(self.representatives)

    def add(self, graph: Graph) -> bool:
        key = refinement_certificate(graph)
        bucket = self._buckets.setdefault(key, [])
        candidate = graph.to_networkx()
        for _, existing in bucket:
            if nx.is_isomorphic(candidate, existing):
                return False
        bucket.append((graph, candidate))
        self.representatives.append(graph)
        return True


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if (g.n, g.m, sorted(g.degrees)) != (h.n, h.m, sorted(h.degrees)):
        return False
    return nx.is_isomorphic(g.to_networkx(), h.to_networkx())


# =========================================================
# Enumeration
# =========================================================
def _check_enumeration_guardrails(max_n: int, m: int, override: bool) -> None:
    if max_n < 0 or m < 0:
        raise SupersatError(f"max_n and m must be nonnegative, got max_n = {max_n}, m = {m}")
    check_guardrail("ENUM_MAX_N", max_n, override=override, what="max_n")
    check_guardrail("ENUM_MAX_M", m, override=override, what="m")


def _augmentations(rep: Graph, max_n: int) -> Iterator[Graph]:
    k = rep.n
    for u, v in combinations(range(k), 2):
        if (u, v) not in rep.edges:
            yield Graph(k, rep.edges | {(u, v)})
    if k + 1 <= max_n:
        for u in range(k):
            yield Graph(k + 1, rep.edges | {(u, k)})
    if k + 2 <= max_n:
        yield Graph(k + 2, rep.edges | {(k, k + 1)})


def enumerate_graph_levels(max_n: int, max_m: int, *, override: bool = False) -> Iterator[tuple[int, list[Graph]]]:
    """Yields (m, representatives) for m = 0..max_m; graphs carry no isolated vertices."""
    _check_enumeration_guardrails(max_n, max_m, override)
    level = [Graph(0)]
    yield 0, level
    for m in range(1, max_m + 1):
        classes = IsomorphismClasses()
        for rep in level:
            for candidate in _augmentations(rep, max_n):
                classes.add(candidate)
        level = classes.representatives
        logger.debug("enumerated %d classes with m = %d on <= %d vertices", len(level), m, max_n)
        yield m, level


def enumerate_graphs(max_n: int, m: int, dedupe: bool = True, *, override: bool = False) -> Iterator[Graph]:
    """Every simple graph with exactly m edges on at most max_n non-isolated vertices.

    dedupe=True: one representative per isomorphism class, isolated vertices dropped.
    dedupe=False: every labelled edge set on the vertex set 0..max_n-1.
    """
    _check_enumeration_guardrails(max_n, m, override)
    if not dedupe:
        pairs = list(combinations(range(max_n), 2))
        for chosen in combinations(pairs, m):
            yield Graph(max_n, frozenset(chosen))
        return
    for level_m, reps in enumerate_graph_levels(max_n, m, override=override):
        if level_m == m:
            yield from reps


def enumerate_graphs_on(n: int, m: int, *, override: bool = False) -> Iterator[Graph]:
    """Unlabelled graphs on exactly n vertices (isolated vertices allowed) with m edges."""
    total = n * (n - 1) // 2
    if not 0 <= m <= total:
        raise SupersatError(f"a graph on {n} vertices has between 0 and {total} edges, got m = {m}")
    if m > total // 2:
        for rep in enumerate_graphs(n, total - m, override=override):
            yield rep.with_vertices(n).complement()
        return
    for rep in enumerate_graphs(n, m, override=override):
        yield rep.with_vertices(n)
