"""Closed-form cycle counts, an exact enumerator, and the formula ledger.

Everything here is exact: ``int`` and ``fractions.Fraction`` only.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from math import comb, factorial

from .constructions import ceil_div
from .digraph import Digraph, complete_digraph
from .reports import CountAudit
from .transparency import CycleCertificate

log = logging.getLogger(__name__)

COMPLETE_CAP = 9
SPARSE_CAP = 12


class CapExceeded(ValueError):
    pass


def _check_cap(n: int, cap: int, force: bool) -> None:
    if n > cap:
        if not force:
            raise CapExceeded(f"n={n} exceeds the enumeration cap {cap}; pass force to override")
        log.warning("enumerating beyond cap: n=%d > %d", n, cap)


def total_j_cycles(n: int, j: int) -> int:
    """Number of cyclic orderings of ``j`` out of ``n`` symbols."""
    if not 2 <= j <= n:
        raise ValueError(f"need 2 <= j <= n, got n={n}, j={j}")
    return comb(n, j) * factorial(j - 1)


def paper_cycles_through_arc(n: int, j: int) -> int:
    """The printed count ``C(n-2, j-2) * (j-3)!`` of j-cycles using a fixed arc.

    Kept verbatim; ``oracle_cycles_through_arc`` gives the true value.
    """
    if not 3 <= j <= n:
        raise ValueError(f"need 3 <= j <= n, got n={n}, j={j}")
    return comb(n - 2, j - 2) * factorial(j - 3)


def corrected_cycles_through_arc(n: int, j: int) -> int:
    return comb(n - 2, j - 2) * factorial(j - 2)


def enumerate_directed_cycles(
    g: Digraph, max_len: int | None = None, cap: int = SPARSE_CAP, force: bool = False
) -> list[CycleCertificate]:
    """Every directed circuit of length ``<= max_len``, smallest vertex first.

    DFS from each start vertex ``s`` through vertices larger than ``s`` only,
    so each circuit is produced once, in its canonical rotation.
    """
    _check_cap(g.n, cap, force)
    if max_len is None:
        max_len = g.n
    if max_len > g.n:
        raise ValueError(f"max_len {max_len} exceeds n={g.n}")
    found: list[CycleCertificate] = []
    for s in range(g.n):
        path = [s]
        on_path = [False] * g.n
        on_path[s] = True
        stack = [iter(g.out_neighbors(s))]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                on_path[path.pop()] = False
                continue
            if nxt == s:
                if len(path) >= 2:
                    found.append(CycleCertificate(tuple(path)))
            elif nxt > s and not on_path[nxt] and len(path) < max_len:
                path.append(nxt)
                on_path[nxt] = True
                stack.append(iter(g.out_neighbors(nxt)))
    found.sort(key=lambda c: (c.length, c.vertices))
    return found


def count_cycles_by_length(g: Digraph, max_len: int | None = None, **kw) -> dict[int, int]:
    counts: dict[int, int] = {}
    for c in enumerate_directed_cycles(g, max_len, **kw):
        counts[c.length] = counts.get(c.length, 0) + 1
    return counts


def cycles_through_arc(g: Digraph, arc: tuple[int, int], j: int) -> list[tuple[int, ...]]:
    """All j-circuits of ``g`` using ``arc``, written starting at its tail."""
    tail, head = arc
    if not g.has_arc(tail, head):
        return []
    out = []
    path = [tail, head]
    used = {tail, head}

    def extend() -> None:
        last = path[-1]
        if len(path) == j:
            if g.has_arc(last, tail):
                out.append(tuple(path))
            return
        for v in g.out_neighbors(last):
            if v not in used:
                used.add(v)
                path.append(v)
                extend()
                path.pop()
                used.discard(v)

    if j == 2:
        return [(tail, head)] if g.has_arc(head, tail) else []
    extend()
    return out


def oracle_cycles_through_arc(
    n: int, j: int, arc: tuple[int, int] = (0, 1), cap: int = COMPLETE_CAP, force: bool = False
) -> int:
    """Count j-circuits of the complete digraph on ``n`` vertices through ``arc``."""
    if not 3 <= j <= n:
        raise ValueError(f"need 3 <= j <= n, got n={n}, j={j}")
    _check_cap(n, cap, force)
    return len(cycles_through_arc(complete_digraph(n), arc, j))


def elimination_bound(n: int, r: int) -> Fraction:
    """Entries that must be zeroed to kill every r-circuit, as printed."""
    if r < 2:
        raise ValueError("r must be >= 2")
    return Fraction(n * (n - 1) * (r - 2), 2 * r)


def elimination_ratio(n: int, r: int) -> Fraction:
    """Total r-cycles divided by the printed per-arc count."""
    return Fraction(total_j_cycles(n, r), paper_cycles_through_arc(n, r))


def max_nonzero_after_elimination(n: int, r: int) -> Fraction:
    return Fraction(n * (n - 1), 2) - elimination_bound(n, r)


def theorem51_claim(n_max: int, r_max: int) -> list[CountAudit]:
    """Violations of ``n * ceil(n/r) > n(n-1)/r`` for ``2 <= r < n <= n_max``."""
    bad = []
    for n in range(3, n_max + 1):
        for r in range(2, min(n - 1, r_max) + 1):
            lhs = n * ceil_div(n, r)
            # compare lhs > n(n-1)/r without leaving the integers
            if not lhs * r > n * (n - 1):
                bad.append(
                    CountAudit("min-degree-claim", {"n": n, "r": r}, lhs, Fraction(n * (n - 1), r), relation="gt")
                )
    return bad


def audit_counting_formulas(
    n_max: int, j_max: int, cap: int = COMPLETE_CAP, force: bool = False
) -> list[CountAudit]:
    """Ledger of the printed counts against enumeration, sorted by ``(n, j)``."""
    _check_cap(n_max, cap, force)
    ledger = []
    for n in range(2, n_max + 1):
        top = min(n, j_max)
        by_len = count_cycles_by_length(complete_digraph(n), top, cap=max(cap, n), force=True)
        for j in range(2, top + 1):
            ledger.append(CountAudit("total_j_cycles", {"n": n, "j": j}, total_j_cycles(n, j), by_len.get(j, 0)))
            if j >= 3:
                ledger.append(
                    CountAudit(
                        "cycles_through_arc",
                        {"n": n, "j": j},
                        paper_cycles_through_arc(n, j),
                        oracle_cycles_through_arc(n, j, cap=max(cap, n), force=True),
                    )
                )
    return ledger
