"""Quotient graphs G/F and orbit-derived vertex weights."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable

import numpy as np

from .errors import VertexRangeError
from .graph import Graph, connected_components, from_edge_list, require_connected
from .relations import EdgePartition


@dataclass(frozen=True, eq=False)
class WeightedQuotient:
    quotient: Graph
    component_of: np.ndarray
    members: tuple[tuple[int, ...], ...]
    weights: tuple[int, ...]

    @property
    def size(self) -> int:
        return self.quotient.vertex_count


def quotient_graph(g: Graph, block: Iterable[int]) -> WeightedQuotient:
    """Contract every component of ``g - block`` to a vertex.

    Components are numbered by their smallest original vertex; two components
    are adjacent when an edge of ``block`` joins them.
    """
    require_connected(g)
    block = sorted(set(int(e) for e in block))
    comp = connected_components(g, block)
    k = int(comp.max()) + 1
    qedges = set()
    for e in block:
        u, v = g.edges[e]
        a, b = int(comp[u]), int(comp[v])
        if a != b:
            qedges.add((min(a, b), max(a, b)))
    members: list[list[int]] = [[] for _ in range(k)]
    for v, c in enumerate(comp.tolist()):
        members[c].append(v)
    comp = comp.copy()
    comp.setflags(write=False)
    return WeightedQuotient(
        quotient=from_edge_list(sorted(qedges), k),
        component_of=comp,
        members=tuple(tuple(m) for m in members),
        weights=(0,) * k,
    )


def weight_by_orbit(q: WeightedQuotient, orbit: Iterable[int]) -> WeightedQuotient:
    n = len(q.component_of)
    counts = [0] * q.size
    for v in orbit:
        if not 0 <= v < n:
            raise VertexRangeError(f"orbit vertex {v} outside 0..{n - 1}")
        counts[int(q.component_of[v])] += 1
    return replace(q, weights=tuple(counts))


def decomposed_distances(g: Graph, partition: EdgePartition) -> np.ndarray:
    """Sum over blocks of quotient distances between the images of every vertex pair.

    Equals ``g.distances`` whenever ``partition`` is coarser than Theta*.
    """
    total = np.zeros((g.vertex_count, g.vertex_count), dtype=np.int64)
    for block in partition.blocks:
        q = quotient_graph(g, block)
        c = q.component_of
        total += q.quotient.distances[np.ix_(c, c)]
    return total
