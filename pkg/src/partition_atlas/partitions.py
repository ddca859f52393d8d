"""Canonical integer partitions: parsing, formatting, enumeration, conjugation.

A partition is stored as a weakly decreasing tuple of positive parts; this
canonical form is the vertex type of the unit-transfer graph, so equality and
hashing must be exact and order-independent of how the parts were supplied.
"""

from __future__ import annotations

import re
from itertools import groupby
from typing import Iterable, Iterator


class Partition:
    """A partition of a positive integer, kept in canonical descending order.

    Immutable by convention: both attributes are set once in ``__init__``.
    """

    __slots__ = ("parts", "n")

    parts: tuple[int, ...]
    n: int

    def __init__(self, parts: Iterable[int]):
        ps = tuple(sorted(parts, reverse=True))
        if not ps:
            raise ValueError("a partition needs at least one part")
        if ps[-1] < 1:
            raise ValueError(f"parts must be positive, got {ps[-1]}")
        object.__setattr__(self, "parts", ps)
        object.__setattr__(self, "n", sum(ps))

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __repr__(self) -> str:
        return f"Partition({format_partition(self, 'exponent')!r})"


_TERM_RE = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+)\s*)?$")


def parse_partition(text: str) -> Partition:
    """Parse partition text: comma-separated parts, runs written base^count.

    Mixed forms such as ``"4,3^2,1"`` are accepted, parts may appear in any
    order, and whitespace around tokens is ignored.  Raises ``ValueError`` on
    empty input, malformed terms, zero/negative parts, or zero exponents.
    """
    parts: list[int] = []
    for term in text.split(","):
        m = _TERM_RE.match(term)
        if m is None:
            raise ValueError(f"bad partition term {term.strip()!r} in {text!r}")
        base = int(m.group(1))
        if base < 1:
            raise ValueError(f"zero part in {text!r}")
        count = 1
        if m.group(2) is not None:
            count = int(m.group(2))
            if count < 1:
                raise ValueError(f"zero exponent in {text!r}")
        parts.extend([base] * count)
    return Partition(parts)


def format_partition(p: Partition, style: str = "exponent") -> str:
    """Render ``p`` as text that round-trips through :func:`parse_partition`.

    ``plain`` lists every part; ``exponent`` compresses runs of equal parts
    as ``base^count`` (count 1 omitted).
    """
    if style == "plain":
        return ",".join(str(x) for x in p.parts)
    if style == "exponent":
        chunks = []
        for value, run in groupby(p.parts):
            k = len(list(run))
            chunks.append(str(value) if k == 1 else f"{value}^{k}")
        return ",".join(chunks)
    raise ValueError(f"unknown style {style!r}")


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order.

    ``(n)`` comes first and ``(1^n)`` last; this fixed total order defines
    the canonical vertex ids of the transfer graph, so it must never change.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    out: list[Partition] = []
    stack: list[int] = []

    def descend(remaining: int, max_part: int) -> None:
        if remaining == 0:
            out.append(Partition(stack))
            return
        for first in range(min(remaining, max_part), 0, -1):
            stack.append(first)
            descend(remaining - first, first)
            stack.pop()

    descend(n, n)
    return out


def canonical_sort(partitions: Iterable[Partition]) -> list[Partition]:
    """Sort into the enumeration order of :func:`enumerate_partitions`."""
    return sorted(partitions, key=lambda p: p.parts, reverse=True)


def conjugate(p: Partition) -> Partition:
    """Transpose of the Ferrers diagram; an involution preserving n."""
    cols = [0] * p.parts[0]
    for part in p.parts:
        for i in range(part):
            cols[i] += 1
    return Partition(cols)


def rect_dimensions(p: Partition) -> tuple[int, int] | None:
    """Return ``(a, b)`` with ``p = (a^b)`` if all parts are equal, else None."""
    a = p.parts[0]
    if p.parts[-1] != a:
        return None
    return (a, len(p.parts))
