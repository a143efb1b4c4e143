"""Automorphism enumeration by backtracking, and vertex orbits.

The search is a transparent oracle, not a canonical-labelling engine. Images
are assigned one vertex at a time; a candidate must share the vertex's
invariant colour (degree plus sorted distance profile), preserve adjacency
and non-adjacency with every vertex already mapped, and be unused.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import PartitionError, SearchLimitExceeded
from .graph import Graph, require_connected

DEFAULT_NODE_LIMIT = 10**7

Permutation = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class OrbitPartition:
    orbits: tuple[tuple[int, ...], ...]
    vertex_count: int

    def __post_init__(self):
        seen = [0] * self.vertex_count
        for orbit in self.orbits:
            if not orbit:
                raise PartitionError("empty orbit")
            for v in orbit:
                if not 0 <= v < self.vertex_count:
                    raise PartitionError(f"orbit vertex {v} outside 0..{self.vertex_count - 1}")
                seen[v] += 1
        if any(c != 1 for c in seen):
            raise PartitionError(f"orbits do not partition the {self.vertex_count} vertices")

    @classmethod
    def from_sets(cls, orbits: Iterable[Iterable[int]], vertex_count: int) -> "OrbitPartition":
        """Normalize: sorted members, orbits ordered by smallest member."""
        normalized = sorted((tuple(sorted(int(v) for v in o)) for o in orbits), key=lambda o: o[:1])
        return cls(tuple(normalized), vertex_count)

    @cached_property
    def orbit_of(self) -> np.ndarray:
        out = np.empty(self.vertex_count, dtype=np.int64)
        for i, orbit in enumerate(self.orbits):
            out[list(orbit)] = i
        return out

    def as_sets(self) -> set[frozenset[int]]:
        return {frozenset(o) for o in self.orbits}

    def __len__(self) -> int:
        return len(self.orbits)

    def __eq__(self, other):
        if not isinstance(other, OrbitPartition):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.as_sets() == other.as_sets()

    def __hash__(self):
        return hash(frozenset(self.as_sets()))


def is_automorphism(g: Graph, perm: Sequence[int]) -> bool:
    n = g.vertex_count
    if len(perm) != n or sorted(perm) != list(range(n)):
        return False
    return all(g.has_edge(perm[u], perm[v]) for u, v in g.edges)


def _colours(g: Graph) -> list[tuple]:
    d = g.distances
    return [(g.degree(v), tuple(np.sort(d[v]).tolist())) for v in range(g.vertex_count)]


def _search_order(g: Graph) -> list[int]:
    """Highest degree first, then greedily the vertex with most mapped neighbours.

    Ties break on higher degree, then lower index, so the order is deterministic.
    """
    n = g.vertex_count
    placed = [False] * n
    links = [0] * n
    order = []
    for _ in range(n):
        best = max(
            (v for v in range(n) if not placed[v]),
            key=lambda v: (links[v], g.degree(v), -v),
        )
        placed[best] = True
        order.append(best)
        for w in g.neighbors(best):
            links[w] += 1
    return order


def enumerate_automorphisms(g: Graph, node_limit: int = DEFAULT_NODE_LIMIT) -> list[Permutation]:
    """Every automorphism of ``g`` as an image tuple, identity first.

    Raises :class:`SearchLimitExceeded` once more than ``node_limit`` partial
    assignments have been tried.
    """
    require_connected(g)
    n = g.vertex_count
    order = _search_order(g)
    colour = _colours(g)
    classes: dict[tuple, list[int]] = {}
    for v in range(n):
        classes.setdefault(colour[v], []).append(v)
    adj = [set(a) for a in g.adjacency]
    # earlier-ordered neighbours / non-neighbours of each vertex, by position
    pos = {v: i for i, v in enumerate(order)}
    earlier_nbrs = [[w for w in g.neighbors(v) if pos[w] < pos[v]] for v in order]

    image = [-1] * n
    used = [False] * n
    found: list[Permutation] = []
    nodes = 0

    def candidates(depth):
        v = order[depth]
        nbrs = earlier_nbrs[depth]
        if nbrs:
            pool = adj[image[nbrs[0]]]
        else:
            pool = classes[colour[v]]
        want = colour[v]
        for c in sorted(pool):
            if used[c] or colour[c] != want:
                continue
            ok = True
            for w in nbrs:
                if image[w] not in adj[c]:
                    ok = False
                    break
            if ok:
                # mapped non-neighbours must stay non-adjacent
                mapped_nbrs_of_c = sum(1 for x in adj[c] if used[x])
                if mapped_nbrs_of_c != len(nbrs):
                    continue
                yield c

    stack = [candidates(0)]
    depth = 0
    while stack:
        try:
            c = next(stack[-1])
        except StopIteration:
            stack.pop()
            depth -= 1
            if depth >= 0:
                v = order[depth]
                used[image[v]] = False
                image[v] = -1
            continue
        nodes += 1
        if nodes > node_limit:
            raise SearchLimitExceeded(node_limit)
        v = order[depth]
        image[v] = c
        used[c] = True
        if depth == n - 1:
            found.append(tuple(image))
            used[c] = False
            image[v] = -1
            continue
        depth += 1
        stack.append(candidates(depth))

    identity = tuple(range(n))
    found.sort(key=lambda p: p != identity)
    return found


def group_order(g: Graph, node_limit: int = DEFAULT_NODE_LIMIT) -> int:
    return len(enumerate_automorphisms(g, node_limit))


def vertex_orbits(g: Graph, automorphisms: Iterable[Sequence[int]]) -> OrbitPartition:
    """Union-find closure of ``v ~ alpha(v)`` over the given permutations."""
    n = g.vertex_count
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in automorphisms:
        for v, w in enumerate(perm):
            a, b = find(v), find(w)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return OrbitPartition.from_sets(groups.values(), n)


def compose(p: Sequence[int], q: Sequence[int]) -> Permutation:
    """``p after q``: v -> p[q[v]]."""
    return tuple(p[x] for x in q)


def inverse(p: Sequence[int]) -> Permutation:
    out = [0] * len(p)
    for v, w in enumerate(p):
        out[w] = v
    return tuple(out)
