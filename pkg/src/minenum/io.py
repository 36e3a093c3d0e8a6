"""Text formats for graphs, hypergraphs and seed sets.

Graph file::

    # comment
    g <n> <m>
    u v          (m lines, 1-based vertices)
    t 1 3 7      (optional Steiner terminals)

Hypergraph file::

    h <n> <m> <d>
    v1 v2 ...    (m lines, 1-based vertices)

Ids are 1-based in files and 0-based in memory.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .model import Graph, GraphError, Hypergraph, build_graph, build_hypergraph


class ParseError(GraphError):
    def __init__(self, path: str, line: int, message: str):
        super().__init__(f"{path}:{line}: {message}")
        self.line = line


@dataclass
class GraphInstance:
    graph: Graph
    terminals: tuple[int, ...] | None = None


def _content_lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield number, line.split()


def _ints(path: str, number: int, tokens: list[str]) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(path, number, f"expected integers, got {' '.join(tokens)!r}") from None


def parse_graph(text: str, path: str = "<string>") -> GraphInstance:
    header = None
    pairs: list[tuple[int, int]] = []
    lines_of_pairs: list[int] = []
    terminals: tuple[int, ...] | None = None
    for number, tokens in _content_lines(text):
        if header is None:
            if tokens[0] != "g" or len(tokens) != 3:
                raise ParseError(path, number, "expected header 'g <n> <m>'")
            header = _ints(path, number, tokens[1:])
            continue
        if tokens[0] == "t":
            terminals = tuple(v - 1 for v in _ints(path, number, tokens[1:]))
            for v in terminals:
                if not 0 <= v < header[0]:
                    raise ParseError(path, number, f"terminal {v + 1} out of range")
            continue
        values = _ints(path, number, tokens)
        if len(values) != 2:
            raise ParseError(path, number, "expected 'u v'")
        pairs.append((values[0] - 1, values[1] - 1))
        lines_of_pairs.append(number)
    if header is None:
        raise ParseError(path, 1, "missing header 'g <n> <m>'")
    n, m = header
    if len(pairs) != m:
        raise ParseError(path, lines_of_pairs[-1] if lines_of_pairs else 1,
                         f"header declares {m} edges, found {len(pairs)}")
    seen: set[tuple[int, int]] = set()
    for (u, v), number in zip(pairs, lines_of_pairs):
        for w in (u, v):
            if not 0 <= w < n:
                raise ParseError(path, number, f"vertex {w + 1} out of range 1..{n}")
        if u == v:
            raise ParseError(path, number, f"self-loop at vertex {u + 1}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(path, number, f"duplicate edge {u + 1} {v + 1}")
        seen.add(key)
    return GraphInstance(build_graph(n, pairs), terminals)


def parse_hypergraph(text: str, path: str = "<string>") -> Hypergraph:
    header = None
    edges: list[list[int]] = []
    for number, tokens in _content_lines(text):
        if header is None:
            if tokens[0] != "h" or len(tokens) != 4:
                raise ParseError(path, number, "expected header 'h <n> <m> <d>'")
            header = _ints(path, number, tokens[1:])
            continue
        members = [v - 1 for v in _ints(path, number, tokens)]
        if not members:
            raise ParseError(path, number, "empty hyperedge")
        if len(set(members)) > header[2]:
            raise ParseError(path, number, f"hyperedge larger than rank {header[2]}")
        for v in members:
            if not 0 <= v < header[0]:
                raise ParseError(path, number, f"vertex {v + 1} out of range")
        edges.append(members)
    if header is None:
        raise ParseError(path, 1, "missing header 'h <n> <m> <d>'")
    n, m, d = header
    if len(edges) != m:
        raise ParseError(path, 1, f"header declares {m} hyperedges, found {len(edges)}")
    return build_hypergraph(n, edges, rank=d)


def read_instance(path: str | Path) -> GraphInstance | Hypergraph:
    """Read a graph or hypergraph file, dispatching on the header letter."""
    text = Path(path).read_text(encoding="utf-8")
    for _, tokens in _content_lines(text):
        if tokens[0] == "h":
            return parse_hypergraph(text, str(path))
        return parse_graph(text, str(path))
    raise ParseError(str(path), 1, "empty input")


def parse_id_list(text: str, path: str = "<string>") -> list[int]:
    """Whitespace- or comma-separated 1-based ids, returned 0-based."""
    ids: list[int] = []
    for number, tokens in _content_lines(text.replace(",", " ")):
        ids.extend(v - 1 for v in _ints(path, number, tokens))
    return ids


def format_graph(g: Graph, terminals=None) -> str:
    lines = [f"g {g.vertex_count} {g.edge_count}"]
    lines += [f"{u + 1} {v + 1}" for u, v in g.edges]
    if terminals:
        lines.append("t " + " ".join(str(v + 1) for v in terminals))
    return "\n".join(lines) + "\n"


def format_hypergraph(h: Hypergraph) -> str:
    lines = [f"h {h.vertex_count} {h.edge_count} {h.rank}"]
    lines += [" ".join(str(v + 1) for v in e) for e in h.hyperedges]
    return "\n".join(lines) + "\n"
