# supersat/models.py
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Any, Iterable, Sequence

import networkx as nx
import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import connected_components

from .constants.families import FAMILY_KINDS
from .constants.report import SCHEMA_TAG
from .errors import GraphRangeError, SupersatError
from .utils.formatters import jsonable

Edge = tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


# =========================================================
# Graphs
# =========================================================
@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices 0..n-1; edges stored as (u, v) with u < v."""

    n: int
    edges: frozenset[Edge] = frozenset()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise SupersatError(f"vertex count must be nonnegative, got {self.n}")
        for u, v in self.edges:
            if u == v:
                raise SupersatError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise GraphRangeError(f"edge ({u}, {v}) is not a normalized pair inside 0..{self.n - 1}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], *, allow_duplicates: bool = False) -> Graph:
        seen: set[Edge] = set()
        for raw in edges:
            u, v = int(raw[0]), int(raw[1])
            if u == v:
                raise SupersatError(f"self-loop at vertex {u}")
            if min(u, v) < 0 or max(u, v) >= n:
                raise GraphRangeError(f"edge ({u}, {v}) uses a vertex outside 0..{n - 1}")
            e = normalize_edge(u, v)
            if e in seen and not allow_duplicates:
                raise SupersatError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> Graph:
        order = sorted(g.nodes())
        index = {v: i for i, v in enumerate(order)}
        return cls.from_edges(len(order), ((index[u], index[v]) for u, v in g.edges()))

    # ----------------------
    # Derived structure
    # ----------------------
    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(row)) for row in nbrs)

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(row) for row in self.adjacency)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.adjacency)

    @property
    def min_degree(self) -> int:
        return min(self.degrees) if self.n else 0

    @property
    def max_degree(self) -> int:
        return max(self.degrees) if self.n else 0

    @cached_property
    def non_isolated(self) -> tuple[int, ...]:
        return tuple(v for v, d in enumerate(self.degrees) if d > 0)

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges

    def components(self) -> list[tuple[int, ...]]:
        """Connected components (isolated vertices included), ordered by smallest vertex."""
        if self.n == 0:
            return []
        count, labels = connected_components(self.adjacency_matrix(), directed=False)
        groups: list[list[int]] = [[] for _ in range(count)]
        for v, label in enumerate(labels):
            groups[int(label)].append(v)
        return sorted((tuple(g) for g in groups), key=lambda g: g[0])

    def adjacency_matrix(self) -> sp.csr_matrix:
        if not self.edges:
            return sp.csr_matrix((self.n, self.n), dtype=float)
        rows, cols = zip(*self.edges)
        data = np.ones(2 * len(rows))
        return sp.csr_matrix(
            (data, (np.concatenate([rows, cols]), np.concatenate([cols, rows]))),
            shape=(self.n, self.n),
        )

    # ----------------------
    # Derived graphs
    # ----------------------
    def relabel(self, mapping: dict[int, int], n: int | None = None) -> Graph:
        size = n if n is not None else (max(mapping.values()) + 1 if mapping else 0)
        return Graph.from_edges(size, ((mapping[u], mapping[v]) for u, v in self.edges))

    def normalize(self) -> Graph:
        """Drop isolated vertices, relabelling the rest in increasing order."""
        keep = self.non_isolated
        if len(keep) == self.n:
            return self
        return self.relabel({v: i for i, v in enumerate(keep)}, n=len(keep))

    def with_edge(self, u: int, v: int) -> Graph:
        e = normalize_edge(u, v)
        if e in self.edges:
            raise SupersatError(f"edge {e} already present")
        return Graph.from_edges(self.n, [*self.edges, e])

    def without_edge(self, u: int, v: int) -> Graph:
        e = normalize_edge(u, v)
        if e not in self.edges:
            raise SupersatError(f"edge {e} not present")
        return Graph(self.n, self.edges - {e})

    def with_vertices(self, n: int) -> Graph:
        if n < self.n:
            raise SupersatError(f"cannot shrink a graph on {self.n} vertices to {n}")
        return Graph(n, self.edges)

    def is_edge_subgraph_of(self, other: Graph) -> bool:
        return self.n <= other.n and self.edges <= other.edges

    def complement(self) -> Graph:
        return Graph(
            self.n,
            frozenset((u, v) for u in range(self.n) for v in range(u + 1, self.n) if (u, v) not in self.edges),
        )

    def disjoint_union(self, other: Graph) -> Graph:
        shift = self.n
        return Graph(self.n + other.n, self.edges | {(u + shift, v + shift) for u, v in other.edges})

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    def to_dict(self) -> dict[str, Any]:
        return {"n": self.n, "m": self.m, "edges": [list(e) for e in self.sorted_edges]}


@dataclass(frozen=True)
class VertexPartition:
    parts: tuple[tuple[int, ...], ...]
    universe: frozenset[int]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for part in self.parts:
            overlap = seen.intersection(part)
            if overlap:
                raise SupersatError(f"vertices {sorted(overlap)} appear in more than one part")
            seen.update(part)
        if seen != set(self.universe):
            raise SupersatError("partition parts do not cover the stated vertex universe")

    @classmethod
    def from_parts(cls, parts: Iterable[Iterable[int]], universe: Iterable[int] | None = None) -> VertexPartition:
        normalized = tuple(tuple(sorted(int(v) for v in part)) for part in parts)
        if universe is None:
            universe = [v for part in normalized for v in part]
        return cls(normalized, frozenset(universe))

    @classmethod
    def from_labels(cls, labels: Sequence[int], r: int) -> VertexPartition:
        """labels[v] is a part index in [0, r) or -1 for a vertex left out."""
        parts: list[list[int]] = [[] for _ in range(r)]
        for v, label in enumerate(labels):
            if label >= 0:
                parts[label].append(v)
        return cls.from_parts(parts)

    @property
    def r(self) -> int:
        return len(self.parts)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.parts)

    @cached_property
    def part_index(self) -> dict[int, int]:
        return {v: i for i, part in enumerate(self.parts) for v in part}

    def part_of(self, v: int) -> int | None:
        return self.part_index.get(v)

    def same_part(self, u: int, v: int) -> bool:
        pu = self.part_index.get(u)
        return pu is not None and pu == self.part_index.get(v)

    def labels(self, n: int) -> list[int]:
        return [self.part_index.get(v, -1) for v in range(n)]

    def to_dict(self) -> dict[str, Any]:
        return {"r": self.r, "parts": [list(p) for p in self.parts]}


@dataclass(frozen=True)
class GraphFamilySpec:
    kind: str
    parameters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in FAMILY_KINDS:
            raise SupersatError(f"unknown family kind {self.kind!r}; expected one of {', '.join(FAMILY_KINDS)}")

    def describe(self) -> str:
        if not self.parameters:
            return self.kind
        return f"{self.kind}({','.join(str(p) for p in self.parameters)})"


@dataclass(frozen=True)
class Construction:
    graph: Graph
    partition: VertexPartition | None = None
    added_edges: tuple[Edge, ...] = ()
    family: GraphFamilySpec | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "family": self.family.describe() if self.family else None,
            "graph": self.graph.to_dict(),
            "partition": self.partition.to_dict() if self.partition else None,
            "added_edges": [list(e) for e in self.added_edges],
        }


# =========================================================
# Spectral
# =========================================================
@dataclass(frozen=True)
class SpectralResult:
    rho: float
    x: np.ndarray = field(compare=False, repr=False)
    residual: float = 0.0
    iterations: int = 0
    dominant_component: frozenset[int] = frozenset()

    def entry(self, v: int) -> float:
        return float(self.x[v])

    def to_dict(self, include_vector: bool = True) -> dict[str, Any]:
        payload: dict[str, Any] = {
            "rho": self.rho,
            "residual": self.residual,
            "iterations": self.iterations,
            "dominant_component": sorted(self.dominant_component),
        }
        if include_vector:
            payload["x"] = [float(v) for v in self.x]
        return payload


class TerminalReason(enum.Enum):
    NO_LIGHT_EDGES = "no-light-edges"
    STEP_CAP = "step-cap"


@dataclass(frozen=True)
class PeelStep:
    """State of G_i; removed_edge/product are None on the terminal graph."""

    index: int
    edges: int
    rho: float
    phi: float
    removed_edge: Edge | None = None
    product: float | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "i": self.index,
            "e": self.edges,
            "rho": self.rho,
            "phi": self.phi,
            "removed_edge": list(self.removed_edge) if self.removed_edge else None,
            "product": self.product,
        }


@dataclass(frozen=True)
class PeelTrace:
    epsilon: float
    m: int
    cap: int
    steps: tuple[PeelStep, ...]
    terminal_reason: TerminalReason | None
    terminal: Graph | None = field(default=None, compare=False, repr=False)
    terminal_spectral: SpectralResult | None = field(default=None, compare=False, repr=False)

    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def removals(self) -> tuple[PeelStep, ...]:
        return tuple(s for s in self.steps if s.removed_edge is not None)

    def to_dict(self) -> dict[str, Any]:
        return {
            "epsilon": self.epsilon,
            "m": self.m,
            "cap": self.cap,
            "length": self.length,
            "terminal_reason": self.terminal_reason.value if self.terminal_reason else None,
            "steps": [s.to_dict() for s in self.steps],
            "terminal": self.terminal.to_dict() if self.terminal else None,
        }


class CheckStatus(enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    HYPOTHESIS_NOT_MET = "hypothesis-not-met"


@dataclass(frozen=True)
class CheckReport:
    check: str
    status: CheckStatus
    margins: dict[str, float] = field(default_factory=dict)
    first_violation: dict[str, Any] | None = None
    slack: float = 0.0
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status is CheckStatus.PASS

    @property
    def hypothesis_met(self) -> bool:
        return self.status is not CheckStatus.HYPOTHESIS_NOT_MET

    def to_dict(self) -> dict[str, Any]:
        return {
            "check": self.check,
            "status": self.status.value,
            "margins": jsonable(self.margins),
            "first_violation": jsonable(self.first_violation),
            "slack": self.slack,
            "details": jsonable(self.details),
        }


# =========================================================
# Patterns and counts
# =========================================================
@dataclass(frozen=True)
class ColoringProfile:
    good_edge: Edge
    assignment: tuple[int, ...]
    tau: tuple[int, ...]

    def to_dict(self) -> dict[str, Any]:
        return {"good_edge": list(self.good_edge), "assignment": list(self.assignment), "tau": list(self.tau)}


@dataclass(frozen=True, eq=False)
class PatternProfile:
    graph: Graph
    f: int
    chi: int
    good_edges: tuple[Edge, ...]
    aut: int
    colorings: dict[Edge, tuple[ColoringProfile, ...]]
    beta_prime: int | None = None
    name: str | None = None

    @property
    def r(self) -> int:
        return self.chi - 1

    @property
    def is_color_critical(self) -> bool:
        return bool(self.good_edges)

    @property
    def label(self) -> str:
        return self.name or f"F(f={self.f},m={self.graph.m})"

    def coloring_count(self) -> int:
        return sum(len(v) for v in self.colorings.values())

    def to_dict(self, include_colorings: bool = True) -> dict[str, Any]:
        payload: dict[str, Any] = {
            "name": self.name,
            "graph": self.graph.to_dict(),
            "f": self.f,
            "chi": self.chi,
            "r": self.r,
            "color_critical": self.is_color_critical,
            "good_edges": [list(e) for e in self.good_edges],
            "aut": self.aut,
            "beta_prime": self.beta_prime,
        }
        if include_colorings:
            payload["colorings"] = {
                f"{u}-{v}": [c.to_dict() for c in profiles] for (u, v), profiles in self.colorings.items()
            }
        return payload


class CountMethod(enum.Enum):
    FORMULA = "formula"
    BRUTE_FORCE = "brute-force"


@dataclass(frozen=True)
class CountReport:
    quantity: str
    value: int | Fraction
    method: CountMethod
    pattern: str
    host: str
    elapsed: float = field(default=0.0, compare=False)

    def to_dict(self) -> dict[str, Any]:
        return {
            "quantity": self.quantity,
            "value": jsonable(self.value),
            "method": self.method.value,
            "pattern": self.pattern,
            "host": self.host,
            "elapsed": round(self.elapsed, 6),
        }


# =========================================================
# Stability
# =========================================================
class DistanceMethod(enum.Enum):
    EXACT = "exact"
    LOCAL_SEARCH = "local-search-upper-bound"


@dataclass(frozen=True)
class DistanceResult:
    distance: int
    labels: tuple[int, ...]
    witness: VertexPartition
    method: DistanceMethod
    target: str

    def to_dict(self) -> dict[str, Any]:
        return {
            "distance": self.distance,
            "method": self.method.value,
            "target": self.target,
            "labels": list(self.labels),
            "witness": self.witness.to_dict(),
        }


# =========================================================
# Campaigns
# =========================================================
@dataclass(frozen=True)
class CampaignSpec:
    name: str
    grid: dict[str, Any] = field(default_factory=dict)
    seeds: tuple[int, ...] = ()
    output: str | None = None
    workers: int | None = None
    override: bool = False


@dataclass(frozen=True)
class CampaignRecord:
    index: int
    instance: str
    status: str
    margin: float | None = None
    vacuous: bool = False
    note: str = ""
    values: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status != "fail"

    def to_dict(self) -> dict[str, Any]:
        return {
            "index": self.index,
            "instance": self.instance,
            "status": self.status,
            "passed": self.passed,
            "margin": self.margin,
            "vacuous": self.vacuous,
            "note": self.note,
            "values": jsonable(self.values),
        }


@dataclass(frozen=True)
class CampaignReport:
    campaign: str
    grid: dict[str, Any]
    records: tuple[CampaignRecord, ...]
    summary: dict[str, Any]
    generated_at: str = field(default="", compare=False)
    schema: str = SCHEMA_TAG

    @property
    def passed(self) -> bool:
        return not self.summary.get("counterexamples")

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema": self.schema,
            "campaign": self.campaign,
            "generated_at": self.generated_at,
            "grid": jsonable(self.grid),
            "records": [r.to_dict() for r in self.records],
            "summary": jsonable(self.summary),
        }
