"""Immutable simple graphs, BFS distances and connected components."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import (
    DisconnectedGraphError,
    DuplicateEdgeError,
    EmptyGraphError,
    ParseError,
    SelfLoopError,
    VertexRangeError,
)

UNREACHABLE = _kernels.UNREACHABLE


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph on vertices ``0..vertex_count-1``.

    Edge ``i`` is the ``i``-th pair passed at construction; edge partitions
    refer to edges by that position. Build instances with :func:`from_edge_list`.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_index

    def edge_id(self, u: int, v: int) -> int:
        return self._edge_index[(min(u, v), max(u, v))]

    @cached_property
    def _edge_index(self) -> dict[tuple[int, int], int]:
        return {(min(u, v), max(u, v)): i for i, (u, v) in enumerate(self.edges)}

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """``(indptr, indices)`` of the sorted adjacency lists."""
        indptr = np.zeros(self.vertex_count + 1, dtype=np.int64)
        indptr[1:] = np.cumsum([len(a) for a in self.adjacency])
        indices = np.fromiter(
            (v for a in self.adjacency for v in a), dtype=np.int64, count=int(indptr[-1])
        )
        return indptr, indices

    @cached_property
    def edge_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Endpoint arrays ``(eu, ev)`` in edge-index order."""
        arr = np.array(self.edges, dtype=np.int64).reshape(-1, 2)
        return arr[:, 0].copy(), arr[:, 1].copy()

    @cached_property
    def distances(self) -> np.ndarray:
        """All-pairs hop distances (read-only), ``UNREACHABLE`` off-component."""
        indptr, indices = self.csr
        d = _kernels.apsp(indptr, indices, self.vertex_count)
        d.setflags(write=False)
        return d

    def degree_sequence(self) -> list[int]:
        return sorted((len(a) for a in self.adjacency), reverse=True)


def from_edge_list(pairs: Iterable[Sequence[int]], vertex_count: int) -> Graph:
    if vertex_count < 0:
        raise VertexRangeError(f"negative vertex count {vertex_count}")
    edges = []
    seen = set()
    adj: list[list[int]] = [[] for _ in range(vertex_count)]
    for i, pair in enumerate(pairs):
        u, v = (int(x) for x in pair)
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise VertexRangeError(
                f"edge {i} ({u}, {v}) has an endpoint outside 0..{vertex_count - 1}", i
            )
        if u == v:
            raise SelfLoopError(f"edge {i} is a self-loop at vertex {u}", i)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(f"edge {i} ({u}, {v}) duplicates an earlier edge", i)
        seen.add(key)
        edges.append((u, v))
        adj[u].append(v)
        adj[v].append(u)
    return Graph(
        vertex_count=vertex_count,
        edges=tuple(edges),
        adjacency=tuple(tuple(sorted(a)) for a in adj),
    )


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.vertex_count:
        raise VertexRangeError(f"vertex {v} outside 0..{g.vertex_count - 1}")


def bfs_distances(g: Graph, source: int) -> np.ndarray:
    """Hop distances from ``source``; unreachable vertices get ``UNREACHABLE``."""
    _check_vertex(g, source)
    if "distances" in g.__dict__:
        return g.distances[source]
    indptr, indices = g.csr
    return _kernels.bfs_row(indptr, indices, g.vertex_count, int(source))


def connected_components(g: Graph, removed_edges: Iterable[int] = ()) -> np.ndarray:
    """Component id per vertex of ``g`` minus ``removed_edges``.

    Ids are dense and numbered in order of each component's smallest vertex.
    """
    keep = np.ones(g.edge_count, dtype=np.bool_)
    for e in removed_edges:
        if not 0 <= e < g.edge_count:
            raise VertexRangeError(f"edge index {e} outside 0..{g.edge_count - 1}")
        keep[e] = False
    eu, ev = g.edge_arrays
    return _kernels.components(g.vertex_count, eu, ev, keep)


def is_connected(g: Graph) -> bool:
    if g.vertex_count < 1:
        raise EmptyGraphError("connectivity is undefined for the empty graph")
    comp = connected_components(g)
    return int(comp.max()) == 0


def require_connected(g: Graph) -> None:
    """Raise :class:`DisconnectedGraphError` naming the smallest vertex of two components."""
    if is_connected(g):
        return
    comp = connected_components(g)
    reps = [int(np.flatnonzero(comp == c)[0]) for c in range(int(comp.max()) + 1)]
    raise DisconnectedGraphError(
        f"graph is disconnected: {len(reps)} components, e.g. those containing "
        f"vertex {reps[0]} and vertex {reps[1]}",
        reps,
    )


# -- edge-list text format ---------------------------------------------------


def parse_edge_list(text: str, path=None) -> Graph:
    """Parse ``vertices N`` followed by ``u v`` lines; ``#`` lines are comments."""
    vertex_count = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if vertex_count is None:
            if len(tokens) != 2 or tokens[0] != "vertices" or not _is_uint(tokens[1]):
                raise ParseError(f"expected header 'vertices N', got {line!r}", lineno, path)
            vertex_count = int(tokens[1])
            continue
        if len(tokens) != 2 or not all(_is_uint(t) for t in tokens):
            raise ParseError(f"expected 'u v' edge line, got {line!r}", lineno, path)
        pairs.append((int(tokens[0]), int(tokens[1]), lineno))
    if vertex_count is None:
        raise ParseError("missing 'vertices N' header", None, path)
    try:
        return from_edge_list([(u, v) for u, v, _ in pairs], vertex_count)
    except (SelfLoopError, DuplicateEdgeError, VertexRangeError) as exc:
        raise ParseError(str(exc), pairs[exc.edge_index][2], path) from exc


def _is_uint(token: str) -> bool:
    return token.isascii() and token.isdigit()


def read_edge_list(path) -> Graph:
    return parse_edge_list(Path(path).read_text(), path=str(path))


def format_edge_list(g: Graph, vertex_comments: dict[int, str] | None = None) -> str:
    lines = []
    if vertex_comments:
        lines.extend(f"# {vertex_comments[v]}" for v in sorted(vertex_comments))
    lines.append(f"vertices {g.vertex_count}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
