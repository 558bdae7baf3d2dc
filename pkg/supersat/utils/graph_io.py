# supersat/utils/graph_io.py
from __future__ import annotations

from pathlib import Path

import networkx as nx

from supersat.errors import GraphParseError, GraphRangeError, SupersatError
from supersat.models import Graph

GRAPH6_MAX_N = 62
GRAPH6_HEADER = ">>graph6<<"
GRAPH_FORMATS = ("edgelist", "graph6")


def detect_format(text: str) -> str:
    first = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
    if first.startswith(GRAPH6_HEADER) or (first and len(first.split()) == 1):
        return "graph6"
    return "edgelist"


def read_graph(text: str, fmt: str | None = None) -> Graph:
    fmt = fmt or detect_format(text)
    if fmt == "edgelist":
        return read_edge_list(text)
    if fmt == "graph6":
        return read_graph6(text)
    raise SupersatError(f"unknown graph format {fmt!r}; expected one of {', '.join(GRAPH_FORMATS)}")


def write_graph(graph: Graph, fmt: str = "edgelist") -> str:
    if fmt == "edgelist":
        return write_edge_list(graph)
    if fmt == "graph6":
        return write_graph6(graph)
    raise SupersatError(f"unknown graph format {fmt!r}; expected one of {', '.join(GRAPH_FORMATS)}")


def load_graph(path: str | Path, fmt: str | None = None) -> Graph:
    return read_graph(Path(path).read_text(encoding="ascii"), fmt)


def save_graph(graph: Graph, path: str | Path, fmt: str = "edgelist") -> None:
    Path(path).write_text(write_graph(graph, fmt), encoding="ascii", newline="\n")


# ======================
# Edge list: "n m" then m lines "u v"
# ======================
def _is_index(tok: str) -> bool:
    # ASCII only: str.isdigit also accepts superscripts that int() rejects
    return tok.isascii() and tok.isdigit()


def read_edge_list(text: str) -> Graph:
    lines = text.split("\n")
    header = lines[0].split() if lines else []
    if len(header) != 2 or not all(_is_index(tok) for tok in header):
        raise GraphParseError("expected header 'n m' with two nonnegative integers", line=1)
    n, m = int(header[0]), int(header[1])

    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2 or not all(_is_index(tok) for tok in tokens):
            raise GraphParseError(f"expected 'u v', got {line!r}", line=lineno)
        u, v = int(tokens[0]), int(tokens[1])
        if u >= n or v >= n:
            raise GraphRangeError(f"vertex index {max(u, v)} is out of range for n = {n}", line=lineno)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", line=lineno)
        edge = (u, v) if u < v else (v, u)
        if edge in edges:
            raise GraphParseError(f"duplicate edge {edge}", line=lineno)
        edges.add(edge)

    if len(edges) != m:
        raise GraphParseError(f"header declares {m} edges but {len(edges)} were listed", line=1)
    return Graph(n, frozenset(edges))


def write_edge_list(graph: Graph) -> str:
    rows = [f"{graph.n} {graph.m}"]
    rows.extend(f"{u} {v}" for u, v in graph.sorted_edges)
    return "\n".join(rows) + "\n"


# ======================
# graph6
# ======================
def read_graph6(text: str) -> Graph:
    payload = text.strip()
    if payload.startswith(GRAPH6_HEADER):
        payload = payload[len(GRAPH6_HEADER):]
    if not payload or len(payload.split()) != 1:
        raise GraphParseError("graph6 input must be a single token", line=1)
    try:
        g = nx.from_graph6_bytes(payload.encode("ascii"))
    except (nx.NetworkXError, ValueError, UnicodeEncodeError) as exc:
        raise GraphParseError(f"invalid graph6 payload: {exc}", line=1) from exc
    if g.number_of_nodes() > GRAPH6_MAX_N:
        raise GraphRangeError(f"graph6 input has {g.number_of_nodes()} vertices; at most {GRAPH6_MAX_N} are supported", line=1)
    return Graph.from_networkx(g)


def write_graph6(graph: Graph) -> str:
    if graph.n > GRAPH6_MAX_N:
        raise GraphRangeError(f"graph6 output supports at most {GRAPH6_MAX_N} vertices, got {graph.n}")
    return nx.to_graph6_bytes(graph.to_networkx(), header=False).decode("ascii")
