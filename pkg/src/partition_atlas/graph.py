"""The unit-transfer partition graph: construction, BFS, components, views.

Vertices are the partitions of n in canonical order; two partitions are
adjacent when one unit moved from a donor part to another part (or to a new
part of size 1) turns one into the other after reordering.  All queries are
deterministic: ties are always broken by canonical vertex id.
"""

from __future__ import annotations

import json
import math
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

from .partitions import Partition, enumerate_partitions, format_partition

#: Largest n for which a full graph is built without an explicit override.
DEFAULT_FULL_GRAPH_BOUND = 40

#: Default limit on the number of geodesics enumerated per query.
DEFAULT_GEODESIC_CAP = 10_000

#: Distance value for unreachable targets; compares greater than any int.
INFINITE = math.inf

#: Extended distance: a natural number, or INFINITE for unreachable pairs.
Distance = int | float


class GraphBoundError(ValueError):
    """Raised when a full-graph build exceeds the configured bound."""


def _neighbor_part_counts(counts: dict[int, int]) -> Iterator[dict[int, int]]:
    """Yield part-count maps one unit transfer away from ``counts``.

    May yield duplicates and the input itself (donor and recipient of equal
    size); callers deduplicate and drop the identity image.
    """
    for donor in list(counts):
        rem = dict(counts)
        rem[donor] -= 1
        if not rem[donor]:
            del rem[donor]
        residue = donor - 1
        for recipient in list(rem):
            out = dict(rem)
            out[recipient] -= 1
            if not out[recipient]:
                del out[recipient]
            out[recipient + 1] = out.get(recipient + 1, 0) + 1
            if residue:
                out[residue] = out.get(residue, 0) + 1
            yield out
        out = dict(rem)
        out[1] = out.get(1, 0) + 1
        if residue:
            out[residue] = out.get(residue, 0) + 1
        yield out


def _counts_to_partition(counts: dict[int, int]) -> Partition:
    return Partition(
        x for value in sorted(counts, reverse=True) for x in (value,) * counts[value]
    )


def unit_transfer_neighbors(p: Partition) -> set[Partition]:
    """All partitions reachable from ``p`` by one elementary unit transfer.

    A transfer decrements a donor part (deleting it at zero) and either
    increments one other existing part or opens a new part of size 1.  The
    relation is symmetric and preserves n.
    """
    if p.n < 2:
        raise ValueError(f"no unit transfers for n={p.n}")
    out = {
        _counts_to_partition(c) for c in _neighbor_part_counts(Counter(p.parts))
    }
    out.discard(p)
    return out


def is_unit_transfer(p: Partition, q: Partition) -> bool:
    """Whether ``q`` lies in ``unit_transfer_neighbors(p)``, without
    materializing the whole neighbor set (cheap for huge near-rectangular
    partitions: cost depends only on the number of distinct part sizes)."""
    if p.n != q.n or p.n < 2 or p == q:
        return False
    target = dict(Counter(q.parts))
    return any(c == target for c in _neighbor_part_counts(dict(Counter(p.parts))))


@dataclass(frozen=True, eq=False)
class PartitionGraph:
    """Immutable adjacency structure for the unit-transfer graph of n."""

    n: int
    vertices: tuple[Partition, ...]
    index: dict[Partition, int] = field(repr=False)
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False)

    def vertex_id(self, p: Partition) -> int:
        try:
            return self.index[p]
        except KeyError:
            raise ValueError(f"{p!r} is not a vertex of G_{self.n}") from None

    def partition_at(self, i: int) -> Partition:
        return self.vertices[i]

    def neighbors(self, p: Partition) -> tuple[Partition, ...]:
        return tuple(self.vertices[j] for j in self.adjacency[self.vertex_id(p)])

    def degree(self, p: Partition) -> int:
        return len(self.adjacency[self.vertex_id(p)])

    def adjacent(self, p: Partition, q: Partition) -> bool:
        return self.vertex_id(q) in self.adjacency[self.vertex_id(p)]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as id pairs (i, j) with i < j, in lexicographic order."""
        for i, nbrs in enumerate(self.adjacency):
            for j in nbrs:
                if i < j:
                    yield (i, j)

    @property
    def num_edges(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def __contains__(self, p: Partition) -> bool:
        return p in self.index

    def __repr__(self) -> str:
        return f"PartitionGraph(n={self.n}, |V|={len(self.vertices)}, |E|={self.num_edges})"


def build_graph(
    n: int, *, max_n: int = DEFAULT_FULL_GRAPH_BOUND, force: bool = False
) -> PartitionGraph:
    """Build the unit-transfer graph of n; deterministic for fixed n.

    Refuses n beyond ``max_n`` unless ``force`` is set: vertex counts grow
    like the partition function and large builds are almost never intended.
    """
    if n < 2:
        raise ValueError(f"graph needs n >= 2, got {n}")
    if n > max_n and not force:
        raise GraphBoundError(
            f"n={n} exceeds the full-graph bound {max_n}; pass force/--force to override"
        )
    vertices = tuple(enumerate_partitions(n))
    index = {p: i for i, p in enumerate(vertices)}
    adjacency = tuple(
        tuple(sorted(index[q] for q in unit_transfer_neighbors(p))) for p in vertices
    )
    return PartitionGraph(n=n, vertices=vertices, index=index, adjacency=adjacency)


class MultiBfsResult(NamedTuple):
    distance: "int | float"
    geodesics: tuple[tuple[Partition, ...], ...]
    truncated: bool


def _bfs_distances(
    g: PartitionGraph, seeds: Iterable[int], blocked: frozenset[int]
) -> dict[int, int]:
    dist: dict[int, int] = {s: 0 for s in seeds}
    queue = deque(dist)
    while queue:
        v = queue.popleft()
        dv = dist[v]
        for u in g.adjacency[v]:
            if u not in dist and u not in blocked:
                dist[u] = dv + 1
                queue.append(u)
    return dist


def multi_bfs(
    g: PartitionGraph,
    sources: Iterable[Partition],
    targets: Iterable[Partition],
    forbidden: Iterable[Partition] = (),
    cap: int = DEFAULT_GEODESIC_CAP,
) -> MultiBfsResult:
    """Shortest source-to-target distance avoiding ``forbidden`` vertices.

    Returns the distance (INFINITE when unreachable), every geodesic up to
    ``cap`` of them, and whether the enumeration was cut off.  Geodesics are
    listed in lexicographic order of their vertex-id sequences; each runs
    from a source to a target and avoids all forbidden vertices.
    """
    src = frozenset(g.vertex_id(p) for p in sources)
    tgt = frozenset(g.vertex_id(p) for p in targets)
    blocked = frozenset(g.vertex_id(p) for p in forbidden)
    if not src or not tgt:
        raise ValueError("sources and targets must be nonempty")
    if src & blocked or tgt & blocked:
        raise ValueError("sources/targets must be disjoint from forbidden vertices")

    ds = _bfs_distances(g, src, blocked)
    dt = _bfs_distances(g, tgt, blocked)
    reachable = [ds[t] for t in tgt if t in ds]
    if not reachable:
        return MultiBfsResult(INFINITE, (), False)
    d = min(reachable)

    paths: list[tuple[int, ...]] = []
    limit = cap + 1  # find one extra to detect truncation exactly

    def extend(path: list[int]) -> bool:
        v = path[-1]
        if dt[v] == 0:
            paths.append(tuple(path))
            return len(paths) < limit
        step = ds[v] + 1
        back = dt[v] - 1
        for u in g.adjacency[v]:
            if ds.get(u) == step and dt.get(u) == back:
                path.append(u)
                more = extend(path)
                path.pop()
                if not more:
                    return False
        return True

    for s in sorted(src):
        if dt.get(s) == d:
            if not extend([s]):
                break

    truncated = len(paths) > cap
    geodesics = tuple(
        tuple(g.vertices[i] for i in path) for path in paths[:cap]
    )
    return MultiBfsResult(d, geodesics, truncated)


def connected_components(
    g: PartitionGraph, subset: Iterable[Partition]
) -> list[frozenset[Partition]]:
    """Components of the subgraph induced on ``subset``.

    Ordered by size descending, then by smallest canonical vertex id.
    """
    ids = {g.vertex_id(p) for p in subset}
    seen: set[int] = set()
    comps: list[list[int]] = []
    for start in sorted(ids):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in g.adjacency[v]:
                if u in ids and u not in seen:
                    seen.add(u)
                    comp.append(u)
                    queue.append(u)
        comps.append(sorted(comp))
    comps.sort(key=lambda c: (-len(c), c[0]))
    return [frozenset(g.vertices[i] for i in comp) for comp in comps]


class SubgraphView:
    """Read-only induced subgraph: exactly the base edges inside ``subset``."""

    def __init__(self, base: PartitionGraph, subset: Iterable[Partition]):
        self.base = base
        self._ids = frozenset(base.vertex_id(p) for p in subset)

    @property
    def vertices(self) -> tuple[Partition, ...]:
        return tuple(self.base.vertices[i] for i in sorted(self._ids))

    def __contains__(self, p: Partition) -> bool:
        return p in self.base and self.base.index[p] in self._ids

    def __len__(self) -> int:
        return len(self._ids)

    def neighbors(self, p: Partition) -> tuple[Partition, ...]:
        i = self.base.vertex_id(p)
        if i not in self._ids:
            raise ValueError(f"{p!r} is not in the induced subgraph")
        return tuple(
            self.base.vertices[j] for j in self.base.adjacency[i] if j in self._ids
        )

    def edges(self) -> Iterator[tuple[int, int]]:
        for i in sorted(self._ids):
            for j in self.base.adjacency[i]:
                if i < j and j in self._ids:
                    yield (i, j)

    @property
    def num_edges(self) -> int:
        return sum(1 for _ in self.edges())


def induced_subgraph(g: PartitionGraph, subset: Iterable[Partition]) -> SubgraphView:
    return SubgraphView(g, subset)


def graph_to_json_dict(g: PartitionGraph) -> dict:
    """JSON-ready form: canonical vertex strings plus sorted id edges."""
    return {
        "n": g.n,
        "vertices": [format_partition(p, "exponent") for p in g.vertices],
        "edges": [[i, j] for i, j in g.edges()],
    }


def graph_to_json(g: PartitionGraph) -> str:
    return json.dumps(graph_to_json_dict(g), indent=2) + "\n"


def graph_to_edge_list(g: PartitionGraph) -> str:
    """Plain edge-list text: header ``p <n> <|V|> <|E|>`` then ``i j`` lines."""
    lines = [f"p {g.n} {len(g.vertices)} {g.num_edges}"]
    lines.extend(f"{i} {j}" for i, j in g.edges())
    return "\n".join(lines) + "\n"
