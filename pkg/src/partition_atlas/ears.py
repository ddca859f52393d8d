"""Rectangular roots and their ears: attachment pairs, support edges, tetra
witnesses, and machine checks of the structural claims about them.

A nontrivial rectangular partition (a^b), a,b >= 2, has exactly two
neighbors: ``alpha`` (one unit moved between two maximal parts) and ``beta``
(one unit split off into a new part).  Together with the root they form its
unique triangle.  When a,b >= 3 the support edge alpha-beta extends to an
explicit 4-clique; everything is verified by direct unit-transfer checks on
the closed-form partitions, never via a full graph build, so the same code
serves the large divisor-indexed atlas.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cliques import compute_layers, maximal_cliques_containing
from .framework import framework_sets
from .graph import PartitionGraph, is_unit_transfer, unit_transfer_neighbors
from .partitions import (
    Partition,
    canonical_sort,
    format_partition,
    rect_dimensions,
)

SIDE = "side"
GENUINE_REAR = "genuine_rear"


def rect_star(n: int) -> set[Partition]:
    """The nontrivial rectangular partitions of n: {(a^b) : ab = n, a,b >= 2}.

    Empty exactly when n is prime (or n < 4); size is d(n) - 2 otherwise.
    """
    if n < 2:
        raise ValueError(f"rect_star needs n >= 2, got {n}")
    out = set()
    b = 2
    while b * b <= n:
        if n % b == 0:
            out.add(Partition([n // b] * b))
            out.add(Partition([b] * (n // b)))
        b += 1
    return out


@dataclass(frozen=True)
class TetraWitness:
    """Two explicit vertices completing a support edge to a 4-clique."""

    gamma1: Partition
    gamma2: Partition


@dataclass(frozen=True)
class RectEar:
    """The V-configuration rooted at a nontrivial rectangular partition."""

    root: Partition
    a: int  # part size
    b: int  # number of parts
    alpha: Partition
    beta: Partition
    ear_type: str  # SIDE or GENUINE_REAR
    self_conjugate: bool
    tetra: TetraWitness | None

    @property
    def attachment_pair(self) -> frozenset[Partition]:
        return frozenset({self.alpha, self.beta})

    @property
    def support_edge(self) -> tuple[Partition, Partition]:
        return (self.alpha, self.beta)

    @property
    def triangle(self) -> frozenset[Partition]:
        return frozenset({self.root, self.alpha, self.beta})


def _require_rect(rho: Partition) -> tuple[int, int]:
    dims = rect_dimensions(rho)
    if dims is None or dims[0] < 2 or dims[1] < 2:
        raise ValueError(f"{rho!r} is not a nontrivial rectangular partition")
    return dims


def ear_neighbors(rho: Partition) -> tuple[Partition, Partition]:
    """Closed forms for the two neighbors of a rectangular root (a^b)."""
    a, b = _require_rect(rho)
    alpha = Partition([a + 1] + [a] * (b - 2) + [a - 1])
    beta = Partition([a] * (b - 1) + [a - 1, 1])
    return alpha, beta


def tetra_witness(rho: Partition) -> TetraWitness:
    """The explicit 4-clique completion of the support edge, for a,b >= 3.

    Verifies all six pairwise adjacencies among alpha, beta, gamma1, gamma2
    by direct unit-transfer checks.  Roots with min(a,b) = 2 are borderline
    side cases and are rejected.
    """
    a, b = _require_rect(rho)
    if a < 3 or b < 3:
        raise ValueError(
            f"{rho!r} has min(a,b)=2: borderline side case, no tetra witness"
        )
    alpha, beta = ear_neighbors(rho)
    gamma1 = Partition([a + 1] + [a] * (b - 3) + [a - 1] * 2 + [1])
    gamma2 = Partition([a + 1] + [a] * (b - 2) + [a - 2, 1])
    four = (alpha, beta, gamma1, gamma2)
    if len(set(four)) != 4:
        raise AssertionError(f"tetra vertices coincide for {rho!r}")
    for i in range(4):
        for j in range(i + 1, 4):
            if not is_unit_transfer(four[i], four[j]):
                raise AssertionError(
                    f"tetra adjacency failed for {rho!r}: "
                    f"{four[i]!r} !~ {four[j]!r}"
                )
    return TetraWitness(gamma1=gamma1, gamma2=gamma2)


def build_ear(rho: Partition) -> RectEar:
    """Construct and verify the ear rooted at a nontrivial rectangular root.

    Uses only local unit-transfer checks: the root's full neighbor set must
    be exactly {alpha, beta}, and the support edge must be an edge.  The
    root is a side ear when it lies on the boundary framework, which happens
    exactly for min(a,b) = 2 (even n); for a,b >= 3 the tetra witness is
    attached.
    """
    a, b = _require_rect(rho)
    alpha, beta = ear_neighbors(rho)
    if unit_transfer_neighbors(rho) != {alpha, beta}:
        raise AssertionError(f"neighbor closed forms failed for {rho!r}")
    if not is_unit_transfer(alpha, beta):
        raise AssertionError(f"support edge failed for {rho!r}")
    tetra = tetra_witness(rho) if a >= 3 and b >= 3 else None
    return RectEar(
        root=rho,
        a=a,
        b=b,
        alpha=alpha,
        beta=beta,
        ear_type=SIDE if min(a, b) == 2 else GENUINE_REAR,
        self_conjugate=(a == b),
        tetra=tetra,
    )


@dataclass(frozen=True)
class ClaimResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class PropositionReport:
    n: int
    claims: tuple[ClaimResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.claims)

    def failures(self) -> list[ClaimResult]:
        return [c for c in self.claims if not c.passed]


def check_rect_propositions(g: PartitionGraph) -> PropositionReport:
    """Machine-check the structural claims about Rect*(n) inside a built graph.

    Covers: degree 2 with neighbors {alpha, beta}; the unique maximal clique
    through each root is its triangle; Rect* is independent; Rect* misses
    the main chain and meets the side edges/axis exactly as the closed forms
    predict; Rect* sits in degree layer 2 and simplex layer 2.  Vacuously
    true for prime n.
    """
    n = g.n
    roots = canonical_sort(rect_star(n))
    ears = {rho: build_ear(rho) for rho in roots}
    fsets = framework_sets(n)
    layers = compute_layers(g)
    claims: list[ClaimResult] = []

    def add(name: str, passed: bool, detail: str = "") -> None:
        claims.append(ClaimResult(name=name, passed=passed, detail=detail))

    bad = [
        rho
        for rho in roots
        if set(g.neighbors(rho)) != {ears[rho].alpha, ears[rho].beta}
    ]
    add(
        "degree_two_neighbors",
        not bad,
        f"roots with unexpected neighbor sets: {bad}" if bad else f"{len(roots)} roots",
    )

    bad = [
        rho
        for rho in roots
        if maximal_cliques_containing(g, rho) != [ears[rho].triangle]
    ]
    add("unique_triangle", not bad, f"failing roots: {bad}" if bad else "")

    adjacent_pairs = [
        (p, q)
        for i, p in enumerate(roots)
        for q in roots[i + 1 :]
        if g.adjacent(p, q)
    ]
    add(
        "independence",
        not adjacent_pairs,
        f"adjacent root pairs: {adjacent_pairs}" if adjacent_pairs else "",
    )

    on_chain = [rho for rho in roots if rho in fsets.main_chain]
    add("main_chain_disjoint", not on_chain, f"on main chain: {on_chain}" if on_chain else "")

    want_left = (
        {Partition([n // 2, n // 2])} if n % 2 == 0 and n >= 4 else set()
    )
    want_right = {Partition([2] * (n // 2))} if n % 2 == 0 and n >= 4 else set()
    got_left = set(roots) & fsets.left_edge
    got_right = set(roots) & fsets.right_edge
    add(
        "side_edge_intersections",
        got_left == want_left and got_right == want_right,
        f"left {_set_str(got_left)} right {_set_str(got_right)}",
    )

    isqrt = int(round(n**0.5))
    want_axis = {Partition([isqrt] * isqrt)} if isqrt * isqrt == n else set()
    got_axis = set(roots) & fsets.axis
    add("axis_intersection", got_axis == want_axis, f"axis {_set_str(got_axis)}")

    off_layer = [
        rho
        for rho in roots
        if layers.degree_layer[rho] != 2 or layers.simplex_layer[rho] != 2
    ]
    add(
        "degree_and_simplex_layer_two",
        not off_layer,
        f"off-layer roots: {off_layer}" if off_layer else "",
    )

    return PropositionReport(n=n, claims=tuple(claims))


def _set_str(ps: set[Partition]) -> str:
    return "{" + ", ".join(format_partition(p) for p in canonical_sort(ps)) + "}"
