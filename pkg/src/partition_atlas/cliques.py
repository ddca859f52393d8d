"""Exact clique queries: local simplex dimension, edge clique numbers, layers.

Everything here is exact search, never heuristic: the neighborhoods of the
transfer graph are small at the scales we build, and atlas numbers must be
reproducible integers.  Local simplex dimension of a vertex is the size of
the largest clique containing it, minus one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import PartitionGraph
from .partitions import Partition


def _adjacency_sets(g: PartitionGraph) -> list[set[int]]:
    return [set(nbrs) for nbrs in g.adjacency]


def _max_clique_size(adj: list[set[int]], candidates: set[int]) -> int:
    """Size of the largest clique inside ``candidates`` (0 when empty).

    Carraghan-Pardalos style branch and bound; candidate lists are kept in
    id order so the search (and its result) is deterministic.
    """
    best = 0

    def expand(size: int, cand: list[int]) -> None:
        nonlocal best
        if size > best:
            best = size
        for i, v in enumerate(cand):
            if size + len(cand) - i <= best:
                return
            expand(size + 1, [u for u in cand[i + 1 :] if u in adj[v]])

    expand(0, sorted(candidates))
    return best


def max_clique_size_at_vertex(g: PartitionGraph, v: Partition) -> int:
    """Size of the largest clique of g containing ``v`` (exact)."""
    i = g.vertex_id(v)
    adj = _adjacency_sets(g)
    return 1 + _max_clique_size(adj, adj[i])


def edge_clique_number(g: PartitionGraph, u: Partition, v: Partition) -> int:
    """Size of the largest clique containing the edge uv (exact).

    Equals 2 plus the maximum clique size of the common neighborhood.
    """
    i, j = g.vertex_id(u), g.vertex_id(v)
    adj = _adjacency_sets(g)
    if j not in adj[i]:
        raise ValueError(f"{u!r} and {v!r} are not adjacent in G_{g.n}")
    return 2 + _max_clique_size(adj, adj[i] & adj[j])


@dataclass(frozen=True)
class LayerAssignment:
    """Degree and simplex layer of every vertex of one graph."""

    degree_layer: dict[Partition, int]
    simplex_layer: dict[Partition, int]


def compute_layers(g: PartitionGraph) -> LayerAssignment:
    """Degree and local simplex dimension for all vertices of g."""
    adj = _adjacency_sets(g)
    degree = {p: len(g.adjacency[i]) for i, p in enumerate(g.vertices)}
    simplex = {
        p: _max_clique_size(adj, adj[i]) for i, p in enumerate(g.vertices)
    }
    return LayerAssignment(degree_layer=degree, simplex_layer=simplex)


def _bron_kerbosch(
    adj: list[set[int]], p: set[int], r: list[int], x: set[int], out: list[tuple[int, ...]]
) -> None:
    if not p and not x:
        out.append(tuple(sorted(r)))
        return
    pivot = max(sorted(p | x), key=lambda u: len(adj[u] & p))
    for v in sorted(p - adj[pivot]):
        r.append(v)
        _bron_kerbosch(adj, p & adj[v], r, x & adj[v], out)
        r.pop()
        p.remove(v)
        x.add(v)


def maximal_cliques_containing(
    g: PartitionGraph, v: Partition
) -> list[frozenset[Partition]]:
    """All maximal cliques of g containing ``v``, in a deterministic order.

    A clique through v is maximal in g exactly when its other vertices form
    a maximal clique of the subgraph induced on N(v), so pivoted
    Bron-Kerbosch runs on that neighborhood only.
    """
    i = g.vertex_id(v)
    adj = _adjacency_sets(g)
    if not adj[i]:
        return [frozenset({v})]
    sub = {u: adj[u] & adj[i] for u in adj[i]}
    found: list[tuple[int, ...]] = []
    _bron_kerbosch(
        [sub.get(u, set()) for u in range(len(adj))], set(adj[i]), [], set(), found
    )
    found.sort()
    return [frozenset({v} | {g.vertices[u] for u in clique}) for clique in found]
