"""Generators for the digraph families under study.

Deterministic families ignore the seed. Randomized families draw every
choice from ``rng.stream(seed)``, so a ``ConstructionSpec`` fully determines
its instance.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from . import rng
from .digraph import Digraph, DigraphError, min_out_degree
from .io import to_edge_list
from .reports import AuditReport, verdict
from .transparency import compute_transparency

FAMILIES = (
    "circulant",
    "uniform_ge",
    "nonuniform_regular",
    "nonuniform_ge",
    "labeling",
    "forward_greedy",
    "random_oriented",
    "random",
)
# families that ignore r and accept r = 0
UNCONSTRAINED = ("random_oriented", "random")
RANDOM_FAMILIES = ("nonuniform_regular", "nonuniform_ge", "labeling", "forward_greedy")


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _check_params(n: int, r: int) -> None:
    if not 1 <= r < n:
        raise ValueError(f"need 1 <= r < n, got n={n}, r={r}")


def derive_seed(seed: int, *keys: int) -> int:
    """Seed for sub-instance ``keys`` of a batch seeded with ``seed``."""
    ss = np.random.SeedSequence(seed, spawn_key=tuple(keys))
    return int(ss.generate_state(1, np.uint64)[0]) >> 1


@dataclass
class ConstructionSpec:
    family: str
    n: int
    r: int
    seed: int = 0
    extras: dict[str, Any] = field(default_factory=dict)

    def validate(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        if self.family not in UNCONSTRAINED:
            _check_params(self.n, self.r)
        elif self.n < 1 or self.r < 0:
            raise ValueError("need n >= 1 and r >= 0")
        if not 0 <= self.seed < 1 << 64:
            raise ValueError("seed must fit in 64 bits")

    def to_json(self) -> dict:
        return {"family": self.family, "n": self.n, "r": self.r, "seed": self.seed, "extras": self.extras}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, obj: dict) -> ConstructionSpec:
        spec = cls(obj["family"], int(obj["n"]), int(obj["r"]), int(obj.get("seed", 0)), dict(obj.get("extras", {})))
        spec.validate()
        return spec

    def with_seed(self, seed: int) -> ConstructionSpec:
        return ConstructionSpec(self.family, self.n, self.r, seed, dict(self.extras))

    def build(self) -> Digraph:
        self.validate()
        f, n, r, s = self.family, self.n, self.r, self.seed
        if f == "circulant":
            return circulant(n, r)
        if f == "uniform_ge":
            return uniform_ge(n, r, self.extras.get("surplus", [0] * n))
        if f == "nonuniform_regular":
            return nonuniform_regular(n, r, s)
        if f == "nonuniform_ge":
            return nonuniform_ge(n, r, s)
        if f == "labeling":
            return labeling_generate(n, r, s)[0]
        if f == "forward_greedy":
            return forward_greedy(n, r, s, oriented=bool(self.extras.get("oriented", False)))
        if f == "random":
            return random_digraph(n, s, self.extras.get("density_percent"))
        return random_oriented(n, s)


def circulant(n: int, r: int) -> Digraph:
    """Vertex ``i`` points to ``i+1, ..., i+r`` modulo ``n``."""
    _check_params(n, r)
    return Digraph.from_out_lists([[(i + k) % n for k in range(1, r + 1)] for i in range(n)])


def uniform_ge(n: int, r: int, surplus: list[int]) -> Digraph:
    """Like ``circulant`` but vertex ``i`` takes ``r + surplus[i]`` successors."""
    _check_params(n, r)
    if len(surplus) != n:
        raise ValueError(f"surplus needs {n} entries, got {len(surplus)}")
    out = []
    for i, extra in enumerate(surplus):
        if extra < 0 or r + extra >= n:
            raise ValueError(f"vertex {i}: out-degree {r + extra} overflows n={n}")
        out.append([(i + k) % n for k in range(1, r + extra + 1)])
    return Digraph.from_out_lists(out)


def nonuniform_regular(n: int, r: int, seed: int) -> Digraph:
    _check_params(n, r)
    s = rng.stream(seed)
    out = [s.sample([v for v in range(n) if v != u], r) for u in range(n)]
    return Digraph.from_out_lists(out)


def nonuniform_ge(n: int, r: int, seed: int) -> Digraph:
    _check_params(n, r)
    s = rng.stream(seed)
    out = []
    for u in range(n):
        d = s.between(r, n - 1)
        out.append(s.sample([v for v in range(n) if v != u], d))
    return Digraph.from_out_lists(out)


def random_oriented(n: int, seed: int) -> Digraph:
    """Each unordered pair independently: no arc, forward arc, or backward arc."""
    s = rng.stream(seed)
    g = Digraph(n, oriented=True)
    for u in range(n):
        for v in range(u + 1, n):
            state = s.below(3)
            if state == 1:
                g.add_arc(u, v)
            elif state == 2:
                g.add_arc(v, u)
    return g


def random_digraph(n: int, seed: int, density_percent: int | None = None) -> Digraph:
    """Each ordered pair is an arc with probability ``density_percent / 100``.

    Without an explicit density one is drawn from ``[10, 90]`` first.
    """
    s = rng.stream(seed)
    if density_percent is None:
        density_percent = s.between(10, 90)
    if not 0 <= density_percent <= 100:
        raise ValueError("density_percent must be in [0, 100]")
    g = Digraph(n)
    for u in range(n):
        for v in range(n):
            if u != v and s.below(100) < density_percent:
                g.add_arc(u, v)
    return g


def forward_greedy(n: int, r: int, seed: int, oriented: bool = False) -> Digraph:
    """Give each vertex, in index order, forward arcs while possible.

    Once fewer than ``r`` higher-indexed vertices remain, the vertex takes
    all of them plus random lower-indexed targets. With ``oriented`` the
    backward targets avoid creating digons.
    """
    _check_params(n, r)
    s = rng.stream(seed)
    g = Digraph(n, oriented=oriented)
    for i in range(n):
        ahead = list(range(i + 1, n))
        if len(ahead) >= r:
            heads = s.sample(ahead, r)
        else:
            back = [j for j in range(i) if not (oriented and g.has_arc(j, i))]
            need = r - len(ahead)
            if len(back) < need:
                raise ValueError(f"vertex {i}: only {len(back)} backward targets avoid digons, need {need}")
            heads = ahead + s.sample(back, need)
        for v in heads:
            g.add_arc(i, v)
    return g


@dataclass
class LabelingTrace:
    label_order: list[int]
    arcs_into_labeled: int
    labeled_targets: int
    first_forced_label: int | None
    created_after_label: list[int]
    target_preference: tuple[str, ...] = ("new", "unlabeled", "labeled")

    def to_json(self) -> dict:
        return {
            "label_order": self.label_order,
            "arcs_into_labeled": self.arcs_into_labeled,
            "labeled_targets": self.labeled_targets,
            "first_forced_label": self.first_forced_label,
            "created_after_label": self.created_after_label,
            "target_preference": list(self.target_preference),
        }


def labeling_generate(n: int, r: int, seed: int) -> tuple[Digraph, LabelingTrace]:
    """Grow a digraph by the labeling procedure.

    Vertices are numbered in creation order. The first vertex points to
    ``r`` fresh vertices and takes label 0. After that a random unlabeled
    vertex is picked, given ``r`` out-arcs and the next label. Targets are
    drawn from brand-new vertices while fewer than ``n`` exist, then from
    other unlabeled vertices, and only when those run out from labeled ones.
    """
    _check_params(n, r)
    s = rng.stream(seed)
    out: list[list[int]] = [list(range(1, r + 1))]
    out.extend([] for _ in range(r))
    created = r + 1
    labeled = [False] * n
    labeled[0] = True
    order = [0]
    created_after = [created]
    into_labeled = 0
    labeled_hit: set[int] = set()
    forced_at = None
    while len(order) < n:
        unlabeled = [v for v in range(created) if not labeled[v]]
        u = s.choice(unlabeled)
        k_new = min(r, n - created)
        heads = list(range(created, created + k_new))
        out.extend([] for _ in range(k_new))
        created += k_new
        others = [v for v in unlabeled if v != u]
        take = min(r - len(heads), len(others))
        heads += s.sample(others, take)
        need = r - len(heads)
        if need:
            if forced_at is None:
                forced_at = len(order)
            picked = s.sample(order, need)
            into_labeled += need
            labeled_hit.update(picked)
            heads += picked
        out[u] = heads
        labeled[u] = True
        order.append(u)
        created_after.append(created)
    trace = LabelingTrace(order, into_labeled, len(labeled_hit), forced_at, created_after)
    return Digraph.from_out_lists(out), trace


def evaluate_labeling_claims(g: Digraph, trace: LabelingTrace, r: int) -> list[AuditReport]:
    """Check the path-length and reachability claims on one labeled instance.

    Returns one report per claim: short paths into the first forced vertex,
    the forced-arc count (as arcs and as distinct labeled targets), and
    reachability from every earlier label to every later one.
    """
    n = g.n
    if sorted(trace.label_order) != list(range(n)) or any(g.out_degree(v) != r for v in range(n)):
        raise ValueError("trace does not describe this digraph")
    t = compute_transparency(g)
    inst = to_edge_list(g)
    order = trace.label_order
    stage = n - r
    target = order[stage]
    bound = ceil_div(n, r) - 1
    dists = {label: t[order[label], target] for label in range(stage)}
    too_long = {k: ("inf" if d is None else d) for k, d in dists.items() if d is None or d > bound}
    path_report = AuditReport(
        claim="labeling-path-to-forced-vertex",
        instance=inst,
        expected={"max_path_length": bound, "forced_label": stage},
        actual={"max_path_length": None if too_long else max(dists.values(), default=0), "violating_labels": too_long},
        verdict=verdict(not too_long),
        details={"first_forced_label": trace.first_forced_label},
    )
    need = r * (r + 1) // 2
    arcs_report = AuditReport(
        claim="labeling-forced-arc-count",
        instance=inst,
        expected={"at_least": need},
        actual={"arcs": trace.arcs_into_labeled},
        verdict=verdict(trace.arcs_into_labeled >= need),
    )
    targets_report = AuditReport(
        claim="labeling-forced-target-count",
        instance=inst,
        expected={"at_least": need},
        actual={"distinct_labeled_targets": trace.labeled_targets},
        verdict=verdict(trace.labeled_targets >= need),
    )
    unreached = [
        [a, b] for a in range(n) for b in range(a + 1, n) if t[order[a], order[b]] is None
    ]
    reach_report = AuditReport(
        claim="labeling-earlier-reaches-later",
        instance=inst,
        expected={"unreached_pairs": 0},
        actual={"unreached_pairs": len(unreached), "examples": unreached[:5]},
        verdict=verdict(not unreached),
    )
    return [path_report, arcs_report, targets_report, reach_report]


def check_generated(g: Digraph, spec: ConstructionSpec) -> None:
    """Sanity checks every generator output must pass."""
    if g.n != spec.n:
        raise DigraphError(f"expected {spec.n} vertices, got {g.n}")
    if spec.family not in UNCONSTRAINED and min_out_degree(g) < spec.r:
        raise DigraphError(f"min out-degree below r={spec.r}")
