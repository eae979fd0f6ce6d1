"""All-pairs directed distances ("transparency matrix"), girth, contraction.

Unreachable entries are ``None`` (serialized as ``"inf"``), never a large
integer, so no min/plus update can treat them as a number by accident.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .digraph import Digraph, DigraphError
from .io import to_edge_list
from .reports import AuditReport, verdict

Distance = Optional[int]
UNREACHABLE: Distance = None


@dataclass(frozen=True)
class TransparencyMatrix:
    n: int
    entries: tuple[tuple[Distance, ...], ...]

    def __getitem__(self, ij: tuple[int, int]) -> Distance:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple[Distance, ...]:
        return self.entries[i]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "entries": [["inf" if x is None else x for x in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, obj: dict) -> TransparencyMatrix:
        rows = tuple(tuple(None if x == "inf" else int(x) for x in row) for row in obj["entries"])
        if len(rows) != obj["n"] or any(len(r) != obj["n"] for r in rows):
            raise ValueError("matrix shape does not match n")
        return cls(obj["n"], rows)

    @classmethod
    def from_rows(cls, rows) -> TransparencyMatrix:
        rows = tuple(tuple(r) for r in rows)
        return cls(len(rows), rows)


class Girth(NamedTuple):
    length: int
    pair: tuple[int, int]


class NeighborhoodCounts(NamedTuple):
    first: int
    second_exact: int
    second_paper: int


class Contraction(NamedTuple):
    graph: Digraph
    mapping: tuple[int, ...]  # old vertex -> new vertex


@dataclass(frozen=True)
class CycleCertificate:
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def canonical(self) -> CycleCertificate:
        k = self.vertices.index(min(self.vertices))
        return CycleCertificate(self.vertices[k:] + self.vertices[:k])

    def is_valid_in(self, g: Digraph) -> bool:
        vs = self.vertices
        if len(vs) < 2 or len(set(vs)) != len(vs):
            return False
        return all(g.has_arc(vs[k], vs[(k + 1) % len(vs)]) for k in range(len(vs)))

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "length": self.length}


def bfs_from(g: Digraph, source: int) -> tuple[list[Distance], list[int]]:
    """Distances and BFS parents from ``source`` (parent -1 when unset)."""
    dist: list[Distance] = [None] * g.n
    parent = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in g.out_neighbors(u):
            if dist[v] is None:
                dist[v] = du
                parent[v] = u
                queue.append(v)
    return dist, parent


def compute_transparency(g: Digraph) -> TransparencyMatrix:
    return TransparencyMatrix(g.n, tuple(tuple(bfs_from(g, s)[0]) for s in range(g.n)))


def girth(t: TransparencyMatrix) -> Girth | None:
    """Smallest finite complementary sum ``a_ij + a_ji`` over ``i < j``.

    A closed walk of that length exists, and a minimal one is a circuit, so
    this equals the directed girth. ``None`` means the digraph is acyclic.
    """
    best: Girth | None = None
    e = t.entries
    for i in range(t.n):
        row = e[i]
        for j in range(i + 1, t.n):
            a, b = row[j], e[j][i]
            if a is None or b is None:
                continue
            if best is None or a + b < best.length:
                best = Girth(a + b, (i, j))
    return best


def girth_of(g: Digraph) -> int | None:
    res = girth(compute_transparency(g))
    return None if res is None else res.length


def _path(parent: list[int], source: int, target: int) -> list[int]:
    path = [target]
    while path[-1] != source:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def shortest_cycle_certificate(g: Digraph) -> CycleCertificate | None:
    t = compute_transparency(g)
    best = girth(t)
    if best is None:
        return None
    i, j = best.pair
    _, par_i = bfs_from(g, i)
    _, par_j = bfs_from(g, j)
    walk = _path(par_i, i, j)[:-1] + _path(par_j, j, i)[:-1]
    cert = CycleCertificate(tuple(walk)).canonical()
    assert cert.length == best.length and cert.is_valid_in(g)
    return cert


def contract_graph(g: Digraph, arc: tuple[int, int]) -> Contraction:
    """Merge ``tail`` onto ``head`` for the arc ``(tail, head)``.

    Arcs are re-targeted, loops dropped, parallels merged and indices
    compacted. The result may contain digons, so it is never oriented.
    """
    i, j = arc
    if not g.has_arc(i, j):
        raise DigraphError(f"arc ({i}, {j}) not present")
    if g.n < 2:
        raise DigraphError("cannot contract a 1-vertex digraph")
    merged = [j if v == i else v for v in range(g.n)]
    mapping = tuple(w - 1 if w > i else w for w in merged)
    seen: set[tuple[int, int]] = set()
    h = Digraph(g.n - 1)
    for u, v in g.arcs():
        a, b = mapping[u], mapping[v]
        if a != b and (a, b) not in seen:
            seen.add((a, b))
            h.add_arc(a, b)
    return Contraction(h, mapping)


def _min(a: Distance, b: Distance) -> Distance:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def paper_contract_update(t: TransparencyMatrix, i: int, j: int) -> TransparencyMatrix:
    """Apply the printed matrix rules for contracting ``i`` onto ``j``.

    Order: row/column ``j`` take the entrywise min with row/column ``i``;
    then every entry with ``a_mn == a_mi + a_jn + 1`` in the original
    matrix (all three finite) is decremented; finally row and column ``i``
    are removed. No claim is made that the result equals the distance
    matrix of the contracted digraph; ``audit_contraction`` checks that.
    """
    if t[i, j] != 1:
        raise ValueError(f"a_{i}{j} must be 1 to contract, got {t[i, j]}")
    n = t.n
    e = t.entries
    work = [list(row) for row in e]
    for k in range(n):
        if k != j:
            work[j][k] = _min(e[i][k], e[j][k])
            work[k][j] = _min(e[k][i], e[k][j])
    for m in range(n):
        a_mi = e[m][i]
        if a_mi is None:
            continue
        for q in range(n):
            a_mq, a_jq = e[m][q], e[j][q]
            if a_mq is not None and a_jq is not None and a_mq == a_mi + a_jq + 1:
                work[m][q] -= 1
    keep = [k for k in range(n) if k != i]
    return TransparencyMatrix(n - 1, tuple(tuple(work[a][b] for b in keep) for a in keep))


def audit_contraction(g: Digraph, arc: tuple[int, int]) -> AuditReport:
    i, j = arc
    if not g.has_arc(i, j):
        raise DigraphError(f"arc ({i}, {j}) not present")
    contracted = contract_graph(g, arc)
    expected = compute_transparency(contracted.graph)
    actual = paper_contract_update(compute_transparency(g), i, j)
    # deleting row/col i compacts indices exactly like contract_graph does
    details: dict = {"arc": [i, j], "mapping": list(contracted.mapping)}
    first = next(
        ((a, b) for a in range(expected.n) for b in range(expected.n) if expected[a, b] != actual[a, b]),
        None,
    )
    if first is not None:
        a, b = first
        details["first_difference"] = {
            "row": a,
            "col": b,
            "expected": "inf" if expected[a, b] is None else expected[a, b],
            "actual": "inf" if actual[a, b] is None else actual[a, b],
        }
    return AuditReport(
        claim="contraction-rules",
        instance=to_edge_list(g),
        expected=expected.to_json(),
        actual=actual.to_json(),
        verdict=verdict(first is None),
        details=details,
    )


def contractible_pairs(t: TransparencyMatrix) -> list[tuple[int, int]]:
    return [(i, j) for i in range(t.n) for j in range(t.n) if t.entries[i][j] == 1]


def neighborhood_counts(t: TransparencyMatrix, v: int) -> NeighborhoodCounts:
    """Out-neighbours, vertices at distance exactly 2, and at finite distance >= 2."""
    row = t.row(v)
    first = sum(1 for x in row if x == 1)
    exact = sum(1 for x in row if x == 2)
    wide = sum(1 for x in row if x is not None and x >= 2)
    return NeighborhoodCounts(first, exact, wide)


def adjacency_from_transparency(t: TransparencyMatrix) -> list[list[int]]:
    return [[1 if x == 1 else 0 for x in row] for row in t.entries]


def metric_violations(t: TransparencyMatrix, g: Digraph) -> list[str]:
    """Broken distance-matrix axioms of ``t`` relative to ``g`` (empty if none)."""
    out = []
    n = t.n
    if n != g.n:
        return [f"dimension {n} != vertex count {g.n}"]
    e = t.entries
    for i in range(n):
        if e[i][i] != 0:
            out.append(f"a_{i}{i} = {e[i][i]}")
        for j in range(n):
            if i != j:
                if e[i][j] is not None and e[i][j] < 1:
                    out.append(f"a_{i}{j} = {e[i][j]} off the diagonal")
                if (e[i][j] == 1) != g.has_arc(i, j):
                    out.append(f"a_{i}{j} = {e[i][j]} but arc present = {g.has_arc(i, j)}")
            if e[i][j] is None:
                continue
            for k in range(n):
                if e[j][k] is None:
                    continue
                if e[i][k] is None or e[i][k] > e[i][j] + e[j][k]:
                    out.append(f"triangle a_{i}{k} > a_{i}{j} + a_{j}{k}")
    return out
