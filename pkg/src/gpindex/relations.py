"""Djokovic-Winkler relation, its transitive closure and coarser edge partitions."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import NotCoarserError, ParseError, PartitionError
from .graph import Graph, require_connected


class PartitionKind(str, Enum):
    THETA_STAR = "theta-star"
    COARSENING = "coarsening-of-theta-star"
    USER = "user-supplied"


@dataclass(frozen=True, eq=False)
class EdgePartition:
    """Disjoint edge-index blocks covering ``0..edge_count-1``.

    Blocks are normalized: sorted internally and ordered by smallest edge.
    """

    blocks: tuple[tuple[int, ...], ...]
    kind: PartitionKind
    edge_count: int

    def __post_init__(self):
        seen = np.zeros(self.edge_count, dtype=np.int64)
        for block in self.blocks:
            if not block:
                raise PartitionError("edge partition contains an empty block")
            for e in block:
                if not 0 <= e < self.edge_count:
                    raise PartitionError(f"edge index {e} outside 0..{self.edge_count - 1}")
                seen[e] += 1
        if (seen != 1).any():
            missing = np.flatnonzero(seen == 0).tolist()
            repeated = np.flatnonzero(seen > 1).tolist()
            raise PartitionError(
                f"blocks do not partition the {self.edge_count} edges "
                f"(missing {missing[:10]}, repeated {repeated[:10]})"
            )

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], edge_count: int, kind=PartitionKind.USER):
        normalized = sorted((tuple(sorted(int(e) for e in b)) for b in blocks), key=lambda b: b[:1])
        return cls(tuple(normalized), PartitionKind(kind), edge_count)

    @classmethod
    def from_labels(cls, labels: Sequence[int], kind=PartitionKind.USER):
        groups: dict[int, list[int]] = {}
        for e, lab in enumerate(labels):
            groups.setdefault(int(lab), []).append(e)
        return cls.from_blocks(groups.values(), len(labels), kind)

    @cached_property
    def block_of(self) -> np.ndarray:
        out = np.empty(self.edge_count, dtype=np.int64)
        for b, block in enumerate(self.blocks):
            out[list(block)] = b
        return out

    def __len__(self) -> int:
        return len(self.blocks)

    def __eq__(self, other):
        if not isinstance(other, EdgePartition):
            return NotImplemented
        return self.edge_count == other.edge_count and self.blocks == other.blocks

    def __hash__(self):
        return hash((self.edge_count, self.blocks))


def theta_related(g: Graph, e1: int, e2: int, apd: np.ndarray | None = None) -> bool:
    """Djokovic-Winkler test: d(u1,u2)+d(v1,v2) != d(u1,v2)+d(v1,u2)."""
    d = g.distances if apd is None else apd
    u1, v1 = g.edges[e1]
    u2, v2 = g.edges[e2]
    return bool(d[u1, u2] + d[v1, v2] != d[u1, v2] + d[v1, u2])


def theta_star_partition(g: Graph) -> EdgePartition:
    require_connected(g)
    eu, ev = g.edge_arrays
    labels = _kernels.theta_classes(g.distances, eu, ev)
    return EdgePartition.from_labels(labels, PartitionKind.THETA_STAR)


def is_coarser(candidate: EdgePartition, base: EdgePartition) -> bool:
    return find_split_block(candidate, base) is None


def find_split_block(candidate: EdgePartition, base: EdgePartition) -> tuple[int, ...] | None:
    """First base block spread over more than one candidate block, else ``None``."""
    if candidate.edge_count != base.edge_count:
        raise PartitionError(
            f"partitions cover different edge sets ({candidate.edge_count} vs {base.edge_count} edges)"
        )
    owner = candidate.block_of
    for block in base.blocks:
        if len(set(owner[list(block)].tolist())) > 1:
            return block
    return None


def require_coarser(candidate: EdgePartition, base: EdgePartition) -> None:
    split = find_split_block(candidate, base)
    if split is not None:
        owners = sorted(set(candidate.block_of[list(split)].tolist()))
        raise NotCoarserError(
            f"partition is not coarser than the Theta*-partition: class {list(split)} "
            f"is split across blocks {owners}",
            split,
        )


def coarsen(base: EdgePartition, grouping: Iterable[Iterable[int]]) -> EdgePartition:
    """Merge base blocks; ``grouping`` must partition ``range(len(base))``."""
    groups = [sorted(int(i) for i in grp) for grp in grouping]
    flat = sorted(i for grp in groups for i in grp)
    if flat != list(range(len(base))) or any(not grp for grp in groups):
        raise PartitionError(
            f"grouping must partition the block indices 0..{len(base) - 1}, got {groups}"
        )
    merged = [[e for i in grp for e in base.blocks[i]] for grp in groups]
    return EdgePartition.from_blocks(merged, base.edge_count, PartitionKind.COARSENING)


# -- partition text format -----------------------------------------------------


def parse_partition(text: str, edge_count: int, path=None) -> EdgePartition:
    """One ``block: i j k`` line per block; ``#`` lines are comments."""
    blocks = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, sep, rest = line.partition(":")
        tokens = rest.split()
        if head.strip() != "block" or not sep or not tokens:
            raise ParseError(f"expected 'block: i j ...', got {line!r}", lineno, path)
        if not all(t.isascii() and t.isdigit() for t in tokens):
            raise ParseError(f"non-integer edge index in {line!r}", lineno, path)
        blocks.append([int(t) for t in tokens])
    return EdgePartition.from_blocks(blocks, edge_count)


def read_partition(path, edge_count: int) -> EdgePartition:
    return parse_partition(Path(path).read_text(), edge_count, path=str(path))


def format_partition(p: EdgePartition) -> str:
    return "".join("block: " + " ".join(map(str, b)) + "\n" for b in p.blocks)
