"""Plain-text graph files.

::

    # comments run to end of line
    n m
    u v            (m edge lines, 0-indexed)
    rot            (optional: one line per vertex, neighbours in cyclic order)
    0: 1 2 3
    ...
    lists          (optional: one line per vertex, its colors)
    0: 1 2
    ...
"""

from __future__ import annotations

from dataclasses import dataclass

from .embedding import PlaneEmbedding, build_embedding
from .errors import ParseError
from .graph import Graph, build_graph

SECTIONS = ("rot", "lists")


@dataclass(frozen=True)
class GraphFile:
    graph: Graph
    embedding: PlaneEmbedding | None = None
    lists: tuple[frozenset[int], ...] | None = None


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(lineno, f"expected integers, got {' '.join(tokens)!r}") from None


def _section_lines(body: list[tuple[int, str]], n: int, name: str, header_line: int) -> list[list[int]]:
    rows: dict[int, list[int]] = {}
    for lineno, text in body:
        if ":" not in text:
            raise ParseError(lineno, f"{name} lines look like 'v: a b ...'")
        head, _, tail = text.partition(":")
        (v,) = _ints([head.strip()], lineno)
        if not 0 <= v < n:
            raise ParseError(lineno, f"vertex {v} out of range")
        if v in rows:
            raise ParseError(lineno, f"vertex {v} listed twice in {name}")
        rows[v] = _ints(tail.split(), lineno)
    if len(rows) != n:
        missing = sorted(set(range(n)) - set(rows))
        raise ParseError(header_line, f"{name} section misses vertices {missing}")
    return [rows[v] for v in range(n)]


def parse_graph_file(text: str) -> GraphFile:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append((lineno, stripped))
    if not lines:
        raise ParseError(1, "empty graph file")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError(lineno, "header must be 'n m'")
    n, m = _ints(parts, lineno)
    edges = []
    i = 1
    while i < len(lines) and lines[i][1] not in SECTIONS:
        lineno, text = lines[i]
        tokens = text.split()
        if len(tokens) != 2:
            raise ParseError(lineno, f"unknown section or malformed edge line {text!r}")
        if len(edges) == m:
            raise ParseError(lineno, f"more than the {m} edge lines announced in the header")
        edges.append(tuple(_ints(tokens, lineno)))
        i += 1
    if len(edges) != m:
        raise ParseError(lines[-1][0], f"header announces {m} edges, found {len(edges)}")
    graph = build_graph(n, edges)

    sections: dict[str, tuple[int, list[tuple[int, str]]]] = {}
    while i < len(lines):
        lineno, name = lines[i]
        if name in sections:
            raise ParseError(lineno, f"section {name!r} repeated")
        i += 1
        body = []
        while i < len(lines) and lines[i][1] not in SECTIONS:
            body.append(lines[i])
            i += 1
        sections[name] = (lineno, body)

    embedding = None
    if "rot" in sections:
        start, body = sections["rot"]
        embedding = build_embedding(graph, _section_lines(body, n, "rot", start))
    lists = None
    if "lists" in sections:
        start, body = sections["lists"]
        rows = _section_lines(body, n, "lists", start)
        for v, row in enumerate(rows):
            if not row:
                raise ParseError(start, f"empty list at vertex {v}")
        lists = tuple(frozenset(r) for r in rows)
    return GraphFile(graph, embedding, lists)


def serialize_graph_file(gf: GraphFile | Graph, comment: str | None = None) -> str:
    if isinstance(gf, Graph):
        gf = GraphFile(gf)
    g = gf.graph
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"{g.n} {g.m}")
    out.extend(f"{u} {v}" for u, v in sorted(g.edges))
    if gf.embedding is not None:
        out.append("rot")
        out.extend(f"{v}: {' '.join(map(str, rot))}".rstrip() for v, rot in enumerate(gf.embedding.rotation))
    if gf.lists is not None:
        out.append("lists")
        out.extend(f"{v}: {' '.join(map(str, sorted(lst)))}" for v, lst in enumerate(gf.lists))
    return "\n".join(out) + "\n"


def read_graph_file(path) -> GraphFile:
    with open(path) as fh:
        return parse_graph_file(fh.read())
