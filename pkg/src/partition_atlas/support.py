"""Support zones, distances, corridors, and contours between rectangular ears.

The support distance between two ears is measured between their attachment
pairs inside the graph with every rectangular root removed; a corridor is a
realizing shortest path, annotated with the largest clique through each of
its edges.  The zone is the subgraph induced on the union of all attachment
pairs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cliques import edge_clique_number
from .ears import RectEar, build_ear, rect_star
from .graph import (
    DEFAULT_GEODESIC_CAP,
    INFINITE,
    PartitionGraph,
    SubgraphView,
    connected_components,
    induced_subgraph,
    multi_bfs,
)
from .partitions import Partition, canonical_sort

PROFILE_TETRAHEDRAL = "tetrahedral"
PROFILE_MIXED = "mixed"
PROFILE_MIXED_HIGHER = "mixed_higher"
PROFILE_EMPTY = "empty"


@dataclass(frozen=True)
class SupportZone:
    """Induced subgraph on the union of all attachment pairs of Rect*(n)."""

    n: int
    vertex_set: frozenset[Partition]
    edges: tuple[tuple[Partition, Partition], ...]
    components: tuple[frozenset[Partition], ...]

    @property
    def component_sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.components)


def support_zone(g: PartitionGraph) -> SupportZone:
    """Build the support zone of g; empty for prime n."""
    pairs: set[Partition] = set()
    for rho in rect_star(g.n):
        pairs |= build_ear(rho).attachment_pair
    if not pairs:
        return SupportZone(n=g.n, vertex_set=frozenset(), edges=(), components=())
    view = induced_subgraph(g, pairs)
    edges = tuple(
        (g.vertices[i], g.vertices[j]) for i, j in view.edges()
    )
    comps = tuple(connected_components(g, pairs))
    return SupportZone(
        n=g.n, vertex_set=frozenset(pairs), edges=edges, components=comps
    )


def _root_pair(g: PartitionGraph, rho: Partition, sigma: Partition) -> tuple[RectEar, RectEar, set[Partition]]:
    roots = rect_star(g.n)
    if rho not in roots or sigma not in roots:
        raise ValueError(f"{rho!r}, {sigma!r} must be nontrivial rectangular partitions of {g.n}")
    if rho == sigma:
        raise ValueError("support distance needs two distinct roots")
    return build_ear(rho), build_ear(sigma), roots


def support_distance(g: PartitionGraph, rho: Partition, sigma: Partition) -> int | float:
    """Shortest attachment-to-attachment distance avoiding all roots.

    INFINITE when the attachment pairs are separated in the graph minus
    Rect*(n).
    """
    ear_r, ear_s, roots = _root_pair(g, rho, sigma)
    return multi_bfs(
        g, ear_r.attachment_pair, ear_s.attachment_pair, roots, cap=1
    ).distance


def _classify_profile(profile: tuple[int, ...], distance: int | float) -> str:
    """Coarse corridor class from the per-edge clique numbers.

    A zero-length corridor (the attachment pairs share a vertex) counts as
    tetrahedral: there is no edge below the 4-clique level.
    """
    if distance == INFINITE:
        return PROFILE_EMPTY
    if any(e >= 5 for e in profile):
        return PROFILE_MIXED_HIGHER
    if all(e == 4 for e in profile):
        return PROFILE_TETRAHEDRAL
    return PROFILE_MIXED


@dataclass(frozen=True)
class CorridorRecord:
    """Support distance data for one unordered pair of rectangular roots."""

    rho: Partition
    sigma: Partition
    d_sup: int | float
    minimizing_pairs: tuple[tuple[Partition, Partition], ...]
    chosen_endpoints: tuple[Partition, Partition] | None
    geodesic: tuple[Partition, ...]
    edge_clique_profile: tuple[int, ...]
    profile_class: str


def corridor_record(
    g: PartitionGraph, rho: Partition, sigma: Partition
) -> CorridorRecord:
    """Distance, minimizing endpoint pairs, and one deterministic corridor.

    The representative endpoints are the lexicographically least minimizing
    pair in canonical vertex order, and the corridor is the id-lexicographic
    first geodesic between them; its profile lists the largest clique
    through each successive edge.
    """
    ear_r, ear_s, roots = _root_pair(g, rho, sigma)
    side_r = canonical_sort(ear_r.attachment_pair)
    side_s = canonical_sort(ear_s.attachment_pair)

    pair_dist: dict[tuple[Partition, Partition], int | float] = {}
    for u in side_r:
        for v in side_s:
            if u == v:
                pair_dist[(u, v)] = 0
            else:
                pair_dist[(u, v)] = multi_bfs(g, [u], [v], roots, cap=1).distance
    d_sup = min(pair_dist.values())
    if d_sup == INFINITE:
        return CorridorRecord(
            rho=rho,
            sigma=sigma,
            d_sup=INFINITE,
            minimizing_pairs=(),
            chosen_endpoints=None,
            geodesic=(),
            edge_clique_profile=(),
            profile_class=PROFILE_EMPTY,
        )
    minimizing = tuple(
        (u, v) for u in side_r for v in side_s if pair_dist[(u, v)] == d_sup
    )
    chosen = minimizing[0]
    geodesic = multi_bfs(g, [chosen[0]], [chosen[1]], roots, cap=1).geodesics[0]
    profile = tuple(
        edge_clique_number(g, geodesic[i], geodesic[i + 1])
        for i in range(len(geodesic) - 1)
    )
    return CorridorRecord(
        rho=rho,
        sigma=sigma,
        d_sup=d_sup,
        minimizing_pairs=minimizing,
        chosen_endpoints=chosen,
        geodesic=geodesic,
        edge_clique_profile=profile,
        profile_class=_classify_profile(profile, d_sup),
    )


@dataclass(frozen=True)
class CorridorUnion:
    """Union of all enumerated support geodesics between two ears."""

    rho: Partition
    sigma: Partition
    d_sup: int | float
    vertices: frozenset[Partition]
    edges: frozenset[tuple[Partition, Partition]]
    truncated: bool


def corridor_union(
    g: PartitionGraph,
    rho: Partition,
    sigma: Partition,
    cap: int = DEFAULT_GEODESIC_CAP,
) -> CorridorUnion:
    """Vertices and edges covered by the support geodesics, up to ``cap``.

    Empty exactly when the support distance is infinite; ``truncated`` marks
    a union built from a capped enumeration, which may therefore miss some
    geodesics.  Edges are stored with the canonically earlier endpoint first.
    """
    ear_r, ear_s, roots = _root_pair(g, rho, sigma)
    result = multi_bfs(
        g, ear_r.attachment_pair, ear_s.attachment_pair, roots, cap=cap
    )
    vertices: set[Partition] = set()
    edges: set[tuple[Partition, Partition]] = set()
    for path in result.geodesics:
        vertices.update(path)
        for u, v in zip(path, path[1:]):
            i, j = g.vertex_id(u), g.vertex_id(v)
            edges.add((u, v) if i < j else (v, u))
    return CorridorUnion(
        rho=rho,
        sigma=sigma,
        d_sup=result.distance,
        vertices=frozenset(vertices),
        edges=frozenset(edges),
        truncated=result.truncated,
    )


def strong_contour(g: PartitionGraph) -> SubgraphView:
    """Induced subgraph on the roots together with all their neighbors."""
    roots = rect_star(g.n)
    thick = set(roots)
    for rho in roots:
        thick.update(g.neighbors(rho))
    return induced_subgraph(g, thick)
