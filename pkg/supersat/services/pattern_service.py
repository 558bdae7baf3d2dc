# supersat/services/pattern_service.py
from __future__ import annotations

import logging
import re
from functools import lru_cache
from pathlib import Path
from typing import Iterator, Sequence

import networkx as nx

from supersat.config import check_guardrail
from supersat.constants.patterns import PATTERN_FORMS
from supersat.errors import ColoringInvariantError, SupersatError
from supersat.models import ColoringProfile, Edge, Graph, PatternProfile, normalize_edge
from supersat.services import graph_core
from supersat.services.counting_service import count_injections
from supersat.utils.graph_io import load_graph

logger = logging.getLogger(__name__)


# =========================================================
# Proper colorings
# =========================================================
def _coloring_order(graph: Graph, fixed: Sequence[int]) -> list[int]:
    order = list(fixed)
    placed = set(order)
    rest = sorted((v for v in range(graph.n) if v not in placed), key=lambda v: (-graph.degrees[v], v))
    while rest:
        best = max(rest, key=lambda v: (len(graph.neighbor_sets[v] & placed), graph.degrees[v], -v))
        order.append(best)
        placed.add(best)
        rest.remove(best)
    return order


def _colorings(graph: Graph, k: int, fixed: dict[int, int] | None = None,
               interchangeable: bool = False) -> Iterator[list[int]]:
    """Proper colorings with colours 0..k-1 extending `fixed`.

    interchangeable=True lists one colouring per renaming of the colours (restricted
    growth); only meaningful without fixed vertices.
    """
    fixed = fixed or {}
    order = _coloring_order(graph, list(fixed))
    colors = [-1] * graph.n

    def extend(depth: int, used: int) -> Iterator[list[int]]:
        if depth == len(order):
            yield list(colors)
            return
        v = order[depth]
        taken = {colors[w] for w in graph.adjacency[v] if colors[w] >= 0}
        if v in fixed:
            choices: Sequence[int] = (fixed[v],)
        elif interchangeable:
            choices = range(min(k, used + 1))
        else:
            choices = range(k)
        for c in choices:
            if c in taken:
                continue
            colors[v] = c
            yield from extend(depth + 1, max(used, c + 1))
            colors[v] = -1

    if k <= 0:
        if graph.n == 0:
            yield []
        return
    yield from extend(0, 0)


def _is_colorable(graph: Graph, k: int) -> bool:
    return next(_colorings(graph, k, interchangeable=True), None) is not None


def _chromatic(graph: Graph) -> int:
    if graph.n == 0:
        return 0
    if graph.m == 0:
        return 1
    nxg = graph.to_networkx()
    lower = max(len(clique) for clique in nx.find_cliques(nxg))
    upper = max(nx.greedy_color(nxg, strategy="DSATUR").values()) + 1
    for k in range(lower, upper):
        if _is_colorable(graph, k):
            return k
    return upper


def chromatic_number(pattern: Graph, *, override: bool = False) -> int:
    """Exact chi: clique lower bound, DSATUR upper bound, backtracking in between."""
    core = pattern.normalize()
    if core.n == 0:
        raise SupersatError("chromatic number of an edgeless pattern is not defined here")
    check_guardrail("CHI_MAX_VERTICES", core.n, override=override, what="pattern order")
    return _chromatic(core)


def good_edges(pattern: Graph, chi: int | None = None, *, override: bool = False) -> list[Edge]:
    """Edges xy with chi(F - xy) = chi(F) - 1."""
    chi = chi if chi is not None else chromatic_number(pattern, override=override)
    if chi < 2:
        raise SupersatError(f"good edges need chi >= 2, got {chi}")
    return [e for e in pattern.sorted_edges if _is_colorable(pattern.without_edge(*e), chi - 1)]


def is_color_critical(pattern: Graph, *, override: bool = False) -> bool:
    if pattern.m == 0:
        return False
    return bool(good_edges(pattern, override=override))


def _assert_endpoints_share_color(reduced: Graph, edge: Edge, r: int) -> None:
    if r < 2:
        return
    x, y = edge
    split = next(_colorings(reduced, r, fixed={x: 0, y: 1}), None)
    if split is not None:
        raise ColoringInvariantError(
            f"F - {x}{y} has a proper {r}-coloring giving {x} and {y} different colors: {split}"
        )


def enumerate_colorings(pattern: Graph, edge: Sequence[int], chi: int | None = None,
                        *, override: bool = False) -> list[ColoringProfile]:
    """Every proper r-coloring of F - xy with x, y in colour 1; colours 2..r are labelled."""
    x, y = normalize_edge(int(edge[0]), int(edge[1]))
    if not pattern.has_edge(x, y):
        raise SupersatError(f"({x}, {y}) is not an edge of the pattern")
    chi = chi if chi is not None else chromatic_number(pattern, override=override)
    r = chi - 1
    reduced = pattern.without_edge(x, y)
    if not _is_colorable(reduced, r):
        raise SupersatError(f"edge ({x}, {y}) is not good: F - {x}{y} still needs {chi} colors")
    _assert_endpoints_share_color(reduced, (x, y), r)

    profiles = []
    for colors in _colorings(reduced, r, fixed={x: 0, y: 0}):
        tau = [0] * r
        for z, c in enumerate(colors):
            if z not in (x, y):
                tau[c] += 1
        profiles.append(ColoringProfile((x, y), tuple(c + 1 for c in colors), tuple(tau)))
    return profiles


# =========================================================
# Symmetry and coverings
# =========================================================
def automorphism_count(pattern: Graph, *, override: bool = False) -> int:
    core = pattern.normalize()
    check_guardrail("AUT_MAX_VERTICES", core.n, override=override, what="pattern order")
    return count_injections(core, core)


def beta_prime(pattern: Graph, *, override: bool = False) -> int:
    """Smallest independent vertex cover; exists iff the pattern is bipartite."""
    core = pattern.normalize()
    check_guardrail("BETA_MAX_VERTICES", core.n, override=override, what="pattern order")
    if not nx.is_bipartite(core.to_networkx()):
        raise SupersatError("no independent covering exists: the pattern is not bipartite")
    if core.m == 0:
        return 0
    masks = [sum(1 << w for w in core.adjacency[v]) for v in range(core.n)]
    edges = core.sorted_edges
    best = core.n
    for subset in range(1, 1 << core.n):
        size = subset.bit_count()
        if size >= best:
            continue
        if any(subset >> v & 1 and masks[v] & subset for v in range(core.n)):
            continue
        if all(subset >> u & 1 or subset >> v & 1 for u, v in edges):
            best = size
    return best


# =========================================================
# Profiles and the named-pattern registry
# =========================================================
def profile_pattern(pattern: Graph, name: str | None = None, *, override: bool = False) -> PatternProfile:
    core = pattern.normalize()
    if core.m == 0:
        raise SupersatError("pattern must have at least one edge")
    chi = chromatic_number(core, override=override)
    good = tuple(good_edges(core, chi, override=override))
    colorings = {e: tuple(enumerate_colorings(core, e, chi, override=override)) for e in good}
    return PatternProfile(
        graph=core,
        f=core.n,
        chi=chi,
        good_edges=good,
        aut=automorphism_count(core, override=override),
        colorings=colorings,
        beta_prime=beta_prime(core, override=override) if chi <= 2 else None,
        name=name,
    )


_NAMED = (
    (re.compile(r"^K(\d+)$"), lambda k: graph_core.build_clique(k)),
    (re.compile(r"^K(\d+),(\d+)$"), lambda a, b: graph_core.build_complete_multipartite([a, b])),
    (re.compile(r"^C(\d+)$"), lambda k: graph_core.build_cycle(k)),
    (re.compile(r"^P(\d+)$"), lambda k: graph_core.build_path(k)),
    (re.compile(r"^kite$", re.I), lambda: graph_core.build_kite()),
    (re.compile(r"^petersen$", re.I), lambda: graph_core.build_petersen()),
    (re.compile(r"^star:(\d+)$", re.I), lambda k: graph_core.build_star(k)),
    (re.compile(r"^book:(\d+)$", re.I), lambda k: graph_core.build_book(k)),
    (re.compile(r"^Kab\+e:(\d+),(\d+)$", re.I), lambda a, b: graph_core.build_bipartite_plus_edge(a, b)),
)


def resolve_pattern(name: str) -> Graph | None:
    key = name.strip()
    for regex, build in _NAMED:
        match = regex.match(key)
        if match:
            return build(*(int(g) for g in match.groups())).graph
    return None


@lru_cache(maxsize=64)
def named_profile(name: str) -> PatternProfile:
    graph = resolve_pattern(name)
    if graph is None:
        raise SupersatError(f"unknown pattern {name!r}; named forms: {', '.join(PATTERN_FORMS)}")
    return profile_pattern(graph, name=name.strip())


def load_pattern(ref: str, *, override: bool = False) -> PatternProfile:
    """A registry name wins over a file of the same name (with a warning)."""
    graph = resolve_pattern(ref)
    if graph is not None:
        if Path(ref).exists():
            logger.warning("pattern %r names both a registry entry and a file; using the registry entry", ref)
        return named_profile(ref) if not override else profile_pattern(graph, name=ref.strip(), override=True)
    path = Path(ref)
    if path.is_file():
        return profile_pattern(load_graph(path), name=path.name, override=override)
    raise SupersatError(f"unknown pattern {ref!r}: not a registry name and no such file")
