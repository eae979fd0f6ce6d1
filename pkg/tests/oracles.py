"""Brute-force ground truth, deliberately sharing no code with the package.

Inputs are plain ``(n, arcs)`` pairs so nothing here depends on ``Digraph``
internals either.
"""

from __future__ import annotations

from itertools import combinations, permutations

INF = float("inf")


def floyd_warshall(n: int, arcs) -> list[list[float]]:
    d = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in arcs:
        d[u][v] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def dfs_girth(n: int, arcs) -> int | None:
    """Shortest directed circuit by exhaustive DFS over simple paths.

    Paths start at their smallest vertex and are cut once they cannot beat
    the best circuit found so far.
    """
    adj = [[] for _ in range(n)]
    for u, v in arcs:
        adj[u].append(v)
    best = INF

    def walk(start: int, v: int, depth: int, seen: set) -> None:
        nonlocal best
        for w in adj[v]:
            if w == start:
                best = min(best, depth + 1)
            elif w > start and w not in seen and depth + 2 < best:
                seen.add(w)
                walk(start, w, depth + 1, seen)
                seen.discard(w)

    for s in range(n):
        walk(s, s, 0, {s})
    return None if best == INF else int(best)


def all_cycles(n: int, arcs, max_len: int | None = None) -> set[tuple[int, ...]]:
    """Every circuit as a tuple starting at its minimum, via permutations."""
    arcset = set(arcs)
    max_len = n if max_len is None else max_len
    found = set()
    for k in range(2, max_len + 1):
        for subset in combinations(range(n), k):
            first, rest = subset[0], subset[1:]
            for perm in permutations(rest):
                cyc = (first,) + perm
                if all((cyc[i], cyc[(i + 1) % k]) in arcset for i in range(k)):
                    found.add(cyc)
    return found


def complete_arcs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(n) if i != j]


def cycle_uses_arc(cyc: tuple[int, ...], arc: tuple[int, int]) -> bool:
    k = len(cyc)
    return any((cyc[i], cyc[(i + 1) % k]) == arc for i in range(k))


def contract_by_hand(n: int, arcs, arc) -> tuple[int, set[tuple[int, int]]]:
    i, j = arc
    relabel = {}
    nxt = 0
    for v in range(n):
        if v != i:
            relabel[v] = nxt
            nxt += 1
    relabel[i] = relabel[j]
    out = {(relabel[u], relabel[v]) for u, v in arcs if relabel[u] != relabel[v]}
    return n - 1, out
