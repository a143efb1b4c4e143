"""Wiener-type indices and the Graovac-Pisanski index by two routes.

All results are exact: Python integers or :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .automorphisms import OrbitPartition
from .errors import PartitionError, VertexRangeError
from .graph import Graph, require_connected
from .quotient import WeightedQuotient, quotient_graph, weight_by_orbit
from .relations import EdgePartition, require_coarser, theta_star_partition

ExactRational = Fraction


def _exact_sum(arr: np.ndarray) -> int:
    # int64 is safe while n^2 * max entry stays far below 2**63
    if arr.size and arr.size * int(np.abs(arr).max()) >= 2**62:
        return sum(int(x) for x in arr.ravel())
    return int(arr.sum(dtype=np.int64))


def _connected_distances(g: Graph) -> np.ndarray:
    require_connected(g)
    return g.distances


def _vertex_list(g: Graph, s: Iterable[int]) -> list[int]:
    out = sorted(set(int(v) for v in s))
    if out and not (0 <= out[0] and out[-1] < g.vertex_count):
        raise VertexRangeError(f"vertex set leaves 0..{g.vertex_count - 1}")
    return out


def wiener(g: Graph) -> int:
    return _exact_sum(_connected_distances(g)) // 2


def wiener_subset(g: Graph, s: Iterable[int]) -> int:
    """Half the sum of ``d_G`` over ordered pairs in ``s`` (distances taken in G)."""
    idx = _vertex_list(g, s)
    if len(idx) < 2:
        return 0
    d = _connected_distances(g)
    return _exact_sum(d[np.ix_(idx, idx)]) // 2


def wiener_weighted(q: WeightedQuotient) -> int:
    w = q.weights
    support = [c for c, x in enumerate(w) if x]
    if len(support) < 2:
        return 0
    d = _connected_distances(q.quotient)
    sub = d[np.ix_(support, support)]
    wv = np.array([w[c] for c in support], dtype=np.int64)
    return _exact_sum(sub * np.outer(wv, wv)) // 2


def distance_to_set(g: Graph, u: int, s: Iterable[int]) -> int:
    """Sum of distances from ``u`` to every vertex of ``s``."""
    if not 0 <= u < g.vertex_count:
        raise VertexRangeError(f"vertex {u} outside 0..{g.vertex_count - 1}")
    idx = _vertex_list(g, s)
    d = _connected_distances(g)
    return _exact_sum(d[u, idx]) if idx else 0


def _check_orbits(g: Graph, orbits: OrbitPartition) -> None:
    if orbits.vertex_count != g.vertex_count:
        raise PartitionError(
            f"orbit partition covers {orbits.vertex_count} vertices, graph has {g.vertex_count}"
        )


def orbit_wieners(g: Graph, orbits: OrbitPartition) -> list[int]:
    _check_orbits(g, orbits)
    return [wiener_subset(g, o) for o in orbits.orbits]


def orbit_wiener_sum(g: Graph, orbits: OrbitPartition) -> int:
    return sum(orbit_wieners(g, orbits))


def gp_direct(g: Graph, orbits: OrbitPartition) -> Fraction:
    """|V| * sum_i W(V_i) / |V_i|."""
    per_orbit = orbit_wieners(g, orbits)
    total = sum(Fraction(w, len(o)) for w, o in zip(per_orbit, orbits.orbits))
    return g.vertex_count * total


def gp_cut_method(
    g: Graph,
    orbits: OrbitPartition,
    partition: EdgePartition | None = None,
    *,
    check_coarser: bool = True,
) -> tuple[Fraction, tuple[tuple[int, ...], ...]]:
    """Graovac-Pisanski index from weighted quotients ``G/F_j``.

    Returns the index and the orbit-by-block matrix of ``W(G/F_j, w_ij)``.
    ``partition`` defaults to the Theta*-partition. Unless ``check_coarser``
    is false, a partition that splits a Theta*-class is rejected with
    :class:`~gpindex.errors.NotCoarserError`.
    """
    require_connected(g)
    _check_orbits(g, orbits)
    if partition is None:
        partition = theta_star_partition(g)
    elif check_coarser:
        require_coarser(partition, theta_star_partition(g))
    if partition.edge_count != g.edge_count:
        raise PartitionError(
            f"partition covers {partition.edge_count} edges, graph has {g.edge_count}"
        )
    quotients = [quotient_graph(g, block) for block in partition.blocks]
    terms = tuple(
        tuple(wiener_weighted(weight_by_orbit(q, orbit)) for q in quotients)
        for orbit in orbits.orbits
    )
    total = sum(Fraction(sum(row), len(orbit)) for row, orbit in zip(terms, orbits.orbits))
    return g.vertex_count * total, terms


def gp_from_automorphisms(g: Graph, automorphisms: Sequence[Sequence[int]]) -> Fraction:
    """Defining double sum |V| / (2|Aut|) * sum_u sum_alpha d(u, alpha(u))."""
    d = _connected_distances(g)
    perms = np.asarray(automorphisms, dtype=np.int64).reshape(len(automorphisms), -1)
    moved = _exact_sum(d[np.arange(g.vertex_count)[None, :], perms])
    return Fraction(g.vertex_count * moved, 2 * len(automorphisms))


@dataclass(frozen=True)
class IndexReport:
    wiener: int
    gp_direct: Fraction
    orbit_wiener_sum: int
    per_orbit: tuple[tuple[int, int], ...]
    gp_cut: Fraction | None = None
    per_block_quotient_terms: tuple[tuple[int, ...], ...] | None = None

    @property
    def routes_agree(self) -> bool:
        return self.gp_cut is None or self.gp_cut == self.gp_direct


def index_report(
    g: Graph,
    orbits: OrbitPartition,
    partition: EdgePartition | None = None,
    *,
    cut: bool = True,
    check_coarser: bool = True,
) -> IndexReport:
    per_orbit = orbit_wieners(g, orbits)
    gp_cut = terms = None
    if cut:
        gp_cut, terms = gp_cut_method(g, orbits, partition, check_coarser=check_coarser)
    return IndexReport(
        wiener=wiener(g),
        gp_direct=gp_direct(g, orbits),
        orbit_wiener_sum=sum(per_orbit),
        per_orbit=tuple((len(o), w) for o, w in zip(orbits.orbits, per_orbit)),
        gp_cut=gp_cut,
        per_block_quotient_terms=terms,
    )
