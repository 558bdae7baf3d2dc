# tests/strategies.py
from __future__ import annotations

import networkx as nx
from hypothesis import strategies as st

from supersat.models import Graph


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8, min_m: int = 0):
    """Random simple graphs on 0..n-1 with at least min_m edges (when that many pairs exist)."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not pairs:
        return Graph(n)
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=min(min_m, len(pairs))))
    return Graph.from_edges(n, chosen)


def nx_monomorphisms(pattern: Graph, host: Graph) -> int:
    """Edge-preserving injections pattern -> host, counted by networkx."""
    matcher = nx.algorithms.isomorphism.GraphMatcher(host.to_networkx(), pattern.to_networkx())
    return sum(1 for _ in matcher.subgraph_monomorphisms_iter())
