"""Simple digraphs on vertices ``0..n-1`` and the forward/backward arc split.

Vertices are 0-based. The source material numbers vertices from 1, so its
``v_k`` is vertex ``k - 1`` here.
"""

from __future__ import annotations

from bisect import insort
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, NamedTuple


class DigraphError(ValueError):
    """Raised when an operation would break a digraph invariant."""


class Arc(NamedTuple):
    tail: int
    head: int


class Direction(str, Enum):
    FORWARD = "forward"
    BACKWARD = "backward"


class Digraph:
    """A simple digraph: no loops, no parallel arcs.

    With ``oriented=True`` digons (both ``(u, v)`` and ``(v, u)``) are also
    rejected. Out-neighbour lists are kept sorted so iteration and
    serialization are canonical.
    """

    __slots__ = ("n", "oriented", "_out", "_arcset")

    def __init__(self, n: int, oriented: bool = False):
        if n < 1:
            raise DigraphError(f"invalid size: n must be >= 1, got {n}")
        self.n = n
        self.oriented = oriented
        self._out: list[list[int]] = [[] for _ in range(n)]
        self._arcset: set[tuple[int, int]] = set()

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]], oriented: bool = False) -> Digraph:
        g = cls(n, oriented=oriented)
        for tail, head in arcs:
            g.add_arc(tail, head)
        return g

    @classmethod
    def from_out_lists(cls, out: list[list[int]], oriented: bool = False) -> Digraph:
        return cls.from_arcs(len(out), ((u, v) for u, heads in enumerate(out) for v in heads), oriented)

    def add_arc(self, tail: int, head: int) -> Digraph:
        if not (0 <= tail < self.n and 0 <= head < self.n):
            raise DigraphError(f"arc ({tail}, {head}) out of range for n={self.n}")
        if tail == head:
            raise DigraphError(f"self-loop at vertex {tail}")
        if (tail, head) in self._arcset:
            raise DigraphError(f"duplicate arc ({tail}, {head})")
        if self.oriented and (head, tail) in self._arcset:
            raise DigraphError(f"digon: ({head}, {tail}) already present")
        self._arcset.add((tail, head))
        insort(self._out[tail], head)
        return self

    def has_arc(self, tail: int, head: int) -> bool:
        return (tail, head) in self._arcset

    def out_neighbors(self, v: int) -> list[int]:
        return self._out[v]

    def out_degree(self, v: int) -> int:
        return len(self._out[v])

    def in_degree(self, v: int) -> int:
        return sum(1 for u in range(self.n) if (u, v) in self._arcset)

    def arcs(self) -> Iterator[Arc]:
        for u in range(self.n):
            for v in self._out[u]:
                yield Arc(u, v)

    @property
    def num_arcs(self) -> int:
        return len(self._arcset)

    def digons(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u, v in self._arcset if u < v and (v, u) in self._arcset)

    def copy(self) -> Digraph:
        g = Digraph(self.n, self.oriented)
        g._out = [list(h) for h in self._out]
        g._arcset = set(self._arcset)
        return g

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self._out == other._out

    def __hash__(self) -> int:
        return hash((self.n, tuple(map(tuple, self._out))))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.num_arcs})"


def new_digraph(n: int, oriented: bool = False) -> Digraph:
    return Digraph(n, oriented)


def add_arc(g: Digraph, a: tuple[int, int]) -> Digraph:
    return g.add_arc(*a)


def min_out_degree(g: Digraph) -> int:
    return min(len(h) for h in g._out)


def max_out_degree(g: Digraph) -> int:
    return max(len(h) for h in g._out)


def classify_arc(a: tuple[int, int]) -> tuple[Direction, int]:
    """Return the arc's direction and its index difference ``|tail - head|``."""
    tail, head = a
    if tail == head:
        raise DigraphError(f"self-loop at vertex {tail}")
    return (Direction.FORWARD if tail < head else Direction.BACKWARD), abs(tail - head)


@dataclass
class DifferenceProfile:
    """Multiplicity of each index difference, split by arc direction."""

    n: int
    forward: Counter = field(default_factory=Counter)
    backward: Counter = field(default_factory=Counter)

    @property
    def total(self) -> int:
        return sum(self.forward.values()) + sum(self.backward.values())

    def within_occurrence_bounds(self) -> bool:
        # difference d can occur between at most n - d index pairs
        for d in range(1, self.n):
            if self.forward[d] > self.n - d or self.backward[d] > self.n - d:
                return False
            if self.forward[d] + self.backward[d] > 2 * (self.n - d):
                return False
        return True

    def to_json(self) -> dict:
        return {
            "forward": {str(d): c for d, c in sorted(self.forward.items())},
            "backward": {str(d): c for d, c in sorted(self.backward.items())},
        }


def difference_profile(g: Digraph) -> DifferenceProfile:
    prof = DifferenceProfile(g.n)
    for a in g.arcs():
        direction, d = classify_arc(a)
        (prof.forward if direction is Direction.FORWARD else prof.backward)[d] += 1
    return prof


def ex_count(p: int) -> int:
    """Maximum arc count of a circuit-free simple digraph on ``p`` vertices."""
    if p < 1:
        raise ValueError("p must be >= 1")
    return p * (p - 1) // 2


def transitive_tournament(n: int) -> Digraph:
    """All forward arcs ``i -> j`` for ``i < j``."""
    return Digraph.from_arcs(n, ((i, j) for i in range(n) for j in range(i + 1, n)), oriented=True)


def complete_digraph(n: int) -> Digraph:
    return Digraph.from_arcs(n, ((i, j) for i in range(n) for j in range(n) if i != j))


def directed_cycle(n: int) -> Digraph:
    return Digraph.from_arcs(n, ((i, (i + 1) % n) for i in range(n)), oriented=n > 2)
