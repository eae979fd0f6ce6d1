"""Caccetta-Haggkvist and second-neighbourhood checkers, sweeps and searches."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Literal

from . import rng
from .constructions import ConstructionSpec, ceil_div, derive_seed
from .digraph import Digraph, DigraphError, min_out_degree
from .io import to_edge_list
from .parallel import pmap
from .transparency import (
    CycleCertificate,
    compute_transparency,
    contract_graph,
    girth,
    neighborhood_counts,
    shortest_cycle_certificate,
)

log = logging.getLogger(__name__)

Predicate = Literal["ch", "seymour"]
DEFAULT_SWEEP_CAP = 5


class HypothesisError(ValueError):
    """The instance is outside the class a conjecture talks about."""


@dataclass
class ConjectureReport:
    conjecture: str
    instance: str
    n: int
    r: int
    bound: int | None
    girth: int | None
    holds: bool
    certificate: CycleCertificate | None = None
    witness: int | None = None
    extra: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "conjecture": self.conjecture,
            "instance": self.instance,
            "n": self.n,
            "r": self.r,
            "bound": self.bound,
            "girth": self.girth,
            "holds": self.holds,
            "certificate": None if self.certificate is None else self.certificate.to_json(),
            "witness": self.witness,
            **self.extra,
        }


def range_of(n: int, r: int) -> int:
    """Index ``k`` of the block ``(k-1)r < n <= kr``, i.e. ``ceil(n / r)``."""
    if n < 1 or r < 1:
        raise ValueError("n and r must be >= 1")
    return ceil_div(n, r)


def check_ch(g: Digraph, r: int | None = None) -> ConjectureReport:
    """Does ``g`` have a circuit of length at most ``ceil(n / r)``?

    ``r`` defaults to the minimum out-degree; a smaller explicit ``r`` tests
    a weaker bound.
    """
    d = min_out_degree(g)
    if r is None:
        r = d
    if r < 1:
        raise HypothesisError("minimum out-degree is 0: the bound needs r >= 1")
    if r > d:
        raise HypothesisError(f"r={r} exceeds the minimum out-degree {d}")
    bound = ceil_div(g.n, r)
    cert = shortest_cycle_certificate(g)
    length = None if cert is None else cert.length
    holds = length is not None and length <= bound
    return ConjectureReport(
        "CH", to_edge_list(g), g.n, r, bound, length, holds, certificate=cert if holds else None
    )


def check_ch_equivalent(g: Digraph, r: int) -> ConjectureReport:
    """Contrapositive form: no circuit of length <= r forces min out-degree < ceil(n/r)."""
    if r < 2:
        raise ValueError("r must be >= 2")
    d = min_out_degree(g)
    cert = shortest_cycle_certificate(g)
    length = None if cert is None else cert.length
    short_circuit = length is not None and length <= r
    degree_bound = ceil_div(g.n, r)
    holds = short_circuit or d < degree_bound
    return ConjectureReport(
        "CH-equivalent",
        to_edge_list(g),
        g.n,
        r,
        degree_bound,
        length,
        holds,
        certificate=cert if short_circuit else None,
        extra={"min_out_degree": d},
    )


def equivalent_parameter(g: Digraph) -> int:
    """The ``r`` under which ``check_ch_equivalent`` restates ``check_ch``.

    With ``d`` the minimum out-degree and ``r = ceil(n/d)`` we always have
    ``ceil(n/r) <= d``, so the degree clause is false and both checkers
    reduce to ``girth <= ceil(n/d)``.
    """
    return ceil_div(g.n, min_out_degree(g))


def check_seymour(g: Digraph) -> ConjectureReport:
    digons = g.digons()
    if digons:
        u, v = digons[0]
        raise HypothesisError(f"digon between {u} and {v}: the conjecture concerns oriented digraphs")
    t = compute_transparency(g)
    counts = [neighborhood_counts(t, v) for v in range(g.n)]
    witness = next((v for v, c in enumerate(counts) if c.second_exact >= c.first), None)
    wide_witness = next((v for v, c in enumerate(counts) if c.second_paper >= c.first), None)
    gi = girth(t)
    return ConjectureReport(
        "Seymour",
        to_edge_list(g),
        g.n,
        min_out_degree(g),
        None,
        None if gi is None else gi.length,
        witness is not None,
        witness=witness,
        extra={
            "holds_distance_at_least_2": wide_witness is not None,
            "witness_distance_at_least_2": wide_witness,
            "counts": [list(c) for c in counts],
        },
    )


# -- exhaustive sweeps -------------------------------------------------------

def oriented_from_index(n: int, index: int) -> Digraph:
    """The ``index``-th labeled oriented digraph on ``n`` vertices.

    Unordered pairs ``(u, v)``, ``u < v``, in lexicographic order are base-3
    digits of ``index`` (least significant first): 0 no arc, 1 ``u -> v``,
    2 ``v -> u``.
    """
    g = Digraph(n, oriented=True)
    for u in range(n):
        for v in range(u + 1, n):
            index, digit = divmod(index, 3)
            if digit == 1:
                g.add_arc(u, v)
            elif digit == 2:
                g.add_arc(v, u)
    return g


def oriented_space_size(n: int) -> int:
    return 3 ** (n * (n - 1) // 2)


def _sweep_block(job: tuple[int, str, int, int]) -> dict:
    n, predicate, lo, hi = job
    held = violated = vacuous = 0
    violations = []
    for idx in range(lo, hi):
        g = oriented_from_index(n, idx)
        if predicate == "ch":
            if min_out_degree(g) < 1:
                vacuous += 1
                continue
            ok = check_ch(g).holds
        else:
            ok = check_seymour(g).holds
        if ok:
            held += 1
        else:
            violated += 1
            violations.append(idx)
    return {"checked": hi - lo, "held": held, "violated": violated, "vacuous": vacuous, "violations": violations}


def exhaustive_sweep(
    n: int,
    predicate: Predicate,
    cap: int = DEFAULT_SWEEP_CAP,
    force: bool = False,
    threads: int = 1,
) -> dict:
    """Check ``predicate`` on every labeled oriented digraph on ``n`` vertices.

    For CH, digraphs with a sink are outside the hypothesis and counted as
    ``vacuous``; ``held + violated + vacuous == checked``.
    """
    if predicate not in ("ch", "seymour"):
        raise ValueError(f"unknown predicate {predicate!r}")
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > cap and not force:
        raise ValueError(f"n={n} exceeds the sweep cap {cap} ({oriented_space_size(n)} instances); pass force")
    if n > cap:
        log.warning("sweeping %d instances", oriented_space_size(n))
    total = oriented_space_size(n)
    block = max(1, min(4096, total // max(1, 4 * threads)))
    jobs = [(n, predicate, lo, min(total, lo + block)) for lo in range(0, total, block)]
    parts = pmap(_sweep_block, jobs, threads)
    summary = {"n": n, "predicate": predicate, "checked": 0, "held": 0, "violated": 0, "vacuous": 0}
    bad: list[int] = []
    for p in parts:
        for key in ("checked", "held", "violated", "vacuous"):
            summary[key] += p[key]
        bad.extend(p["violations"])
    summary["violations"] = [to_edge_list(oriented_from_index(n, i)) for i in sorted(bad)]
    return summary


# -- randomized search -------------------------------------------------------

def _check(g: Digraph, checker: str) -> ConjectureReport | None:
    if checker == "ch":
        if min_out_degree(g) < 1:
            return None
        return check_ch(g)
    if checker == "ch-equivalent":
        if min_out_degree(g) < 1:
            return None
        return check_ch_equivalent(g, equivalent_parameter(g))
    if checker == "seymour":
        return check_seymour(g)
    raise ValueError(f"unknown checker {checker!r}")


def _search_trial(job: tuple[dict, str]) -> ConjectureReport | None:
    spec_json, checker = job
    spec = ConstructionSpec.from_json(spec_json)
    report = _check(spec.build(), checker)
    if report is None or report.holds:
        return None
    report.extra["spec"] = spec.to_json()
    return report


def trial_specs(template: ConstructionSpec, trials: int, seed: int) -> list[ConstructionSpec]:
    return [template.with_seed(derive_seed(seed, t)) for t in range(trials)]


def search_counterexamples(
    template: ConstructionSpec,
    trials: int,
    seed: int = 0,
    checker: str = "ch",
    threads: int = 1,
    seeds: list[int] | None = None,
) -> list[ConjectureReport]:
    """Build seeded instances of ``template`` and return only the violations.

    Trial ``t`` uses instance seed ``derive_seed(seed, t)`` unless explicit
    ``seeds`` are given.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    specs = [template.with_seed(s) for s in seeds[:trials]] if seeds else trial_specs(template, trials, seed)
    results = pmap(_search_trial, [(s.to_json(), checker) for s in specs], threads)
    return [r for r in results if r is not None]


def contract_and_recheck(g: Digraph, seed: int) -> dict:
    """Contract one random arc and compare girth and range before and after.

    Records what actually happens to the shortest circuit; it does not
    assume that contraction shortens every circuit.
    """
    arcs = list(g.arcs())
    if not arcs:
        raise DigraphError("no arc to contract")
    arc = rng.stream(seed).choice(arcs)
    minor = contract_graph(g, arc).graph
    before, after = girth(compute_transparency(g)), girth(compute_transparency(minor))
    d0, d1 = min_out_degree(g), min_out_degree(minor)
    out = {
        "arc": list(arc),
        "girth_before": None if before is None else before.length,
        "girth_after": None if after is None else after.length,
        "min_out_degree_before": d0,
        "min_out_degree_after": d1,
        "range_before": range_of(g.n, d0) if d0 else None,
        "range_after": range_of(minor.n, d1) if d1 else None,
        "ch_after": check_ch(minor).holds if d1 else None,
    }
    if before is not None and after is not None:
        out["girth_delta"] = after.length - before.length
    return out

