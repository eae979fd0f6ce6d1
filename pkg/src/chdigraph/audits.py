"""Batch audits: many seeded cases, one verdict each, plus a summary."""

from __future__ import annotations

from collections import Counter

from . import rng
from .constructions import derive_seed, evaluate_labeling_claims, labeling_generate, random_digraph
from .digraph import Digraph
from .parallel import pmap
from .transparency import audit_contraction, compute_transparency, contract_graph, metric_violations


def contraction_case(seed: int, t: int, n_max: int) -> tuple[Digraph, tuple[int, int]]:
    """Case ``t``: a random digraph on 2..n_max vertices with at least one arc, and an arc of it."""
    pick = rng.stream(seed, t)
    n = pick.between(2, n_max)
    attempt = 0
    while True:
        g = random_digraph(n, derive_seed(seed, t, attempt))
        arcs = list(g.arcs())
        if arcs:
            return g, tuple(pick.choice(arcs))
        attempt += 1


def _contraction_job(job: tuple[int, int, int]) -> tuple[dict, int]:
    seed, t, n_max = job
    g, arc = contraction_case(seed, t, n_max)
    report = audit_contraction(g, arc)
    minor = contract_graph(g, arc).graph
    oracle_failures = len(metric_violations(compute_transparency(minor), minor))
    return report.to_json(), oracle_failures


def contraction_audit(trials: int, n_max: int, seed: int, threads: int = 1) -> tuple[list[dict], dict]:
    """Compare the printed contraction rules with recomputation on ``trials`` cases."""
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    results = pmap(_contraction_job, [(seed, t, n_max) for t in range(trials)], threads)
    reports = [r for r, _ in results]
    equal = sum(1 for r in reports if r["verdict"] == "equal")
    summary = {
        "type": "summary",
        "audit": "contraction",
        "cases": len(reports),
        "equal": equal,
        "mismatch": len(reports) - equal,
        "agreement_rate": equal / len(reports) if reports else None,
        "oracle_axiom_failures": sum(f for _, f in results),
    }
    return reports, summary


def _labeling_job(job: tuple[int, int, int]) -> list[dict]:
    n, r, s = job
    g, trace = labeling_generate(n, r, s)
    out = [rep.to_json() for rep in evaluate_labeling_claims(g, trace, r)]
    for rep in out:
        rep["seed"] = s
    return out


def labeling_claims_audit(n: int, r: int, seeds: int, seed: int, threads: int = 1) -> tuple[list[dict], dict]:
    """Run the labeling generator ``seeds`` times and tabulate claim verdicts."""
    jobs = [(n, r, derive_seed(seed, k)) for k in range(seeds)]
    reports = [rep for batch in pmap(_labeling_job, jobs, threads) for rep in batch]
    table: dict[str, Counter] = {}
    for rep in reports:
        table.setdefault(rep["claim"], Counter())[rep["verdict"]] += 1
    summary = {
        "type": "summary",
        "audit": "labeling-claims",
        "n": n,
        "r": r,
        "instances": seeds,
        "verdicts": {claim: {"equal": c["equal"], "mismatch": c["mismatch"]} for claim, c in sorted(table.items())},
    }
    return reports, summary

