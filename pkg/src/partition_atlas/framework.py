"""Front-and-side skeleton of the transfer graph, and attachment loci.

The main chain is the canonical geodesic from (n) to (1^n); the left edge
collects the two-part partitions, the right edge their conjugates.  Their
union is the boundary framework; the axis is the set of self-conjugate
partitions.  All five sets come from closed forms except the axis, which is
a scan over the full partition list.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import PartitionGraph, connected_components
from .partitions import Partition, conjugate, enumerate_partitions


@dataclass(frozen=True)
class FrameworkSets:
    n: int
    main_chain: tuple[Partition, ...]
    left_edge: frozenset[Partition]
    right_edge: frozenset[Partition]
    framework: frozenset[Partition]
    axis: frozenset[Partition]


def framework_sets(n: int) -> FrameworkSets:
    """Main chain, side edges, boundary framework, and self-conjugate axis."""
    if n < 2:
        raise ValueError(f"framework needs n >= 2, got {n}")
    main_chain = tuple(
        Partition([n - k] + [1] * k) for k in range(n)
    )
    left = frozenset(Partition([n - k, k]) for k in range(1, n // 2 + 1))
    right = frozenset(conjugate(p) for p in left)
    axis = frozenset(p for p in enumerate_partitions(n) if conjugate(p) == p)
    return FrameworkSets(
        n=n,
        main_chain=main_chain,
        left_edge=left,
        right_edge=right,
        framework=frozenset(main_chain) | left | right,
        axis=axis,
    )


def attachment_locus(
    g: PartitionGraph, contour: frozenset[Partition] | set[Partition]
) -> list[tuple[frozenset[Partition], frozenset[Partition]]]:
    """For each component E of g minus ``contour``: (E, N(E) within contour).

    Components come in the order of :func:`connected_components`; each locus
    is the set of contour vertices adjacent to at least one vertex of E.
    """
    contour = frozenset(contour)
    if not contour:
        raise ValueError("contour must be nonempty")
    rest = [p for p in g.vertices if p not in contour]
    if not rest:
        raise ValueError("contour must not cover the whole graph")
    for p in contour:
        g.vertex_id(p)  # validate membership
    out = []
    for comp in connected_components(g, rest):
        locus = frozenset(
            q for p in comp for q in g.neighbors(p) if q in contour
        )
        out.append((comp, locus))
    return out
