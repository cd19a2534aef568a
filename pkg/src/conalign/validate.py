"""Seeded corpus checks of the structural properties and solver guarantees.

Each ``check_*`` function sweeps a seeded corpus and returns a
:class:`CheckResult`; :data:`PRESETS` maps preset names (as used by the
``corpus`` CLI subcommand) to ``(function, default_count)``.
"""

from __future__ import annotations

import functools
import math
import time
from dataclasses import dataclass, field, replace
from typing import Callable

from . import constructions, graphs
from .conflict import build_conflict_graph
from .errors import StructuralViolation
from .generate import GenParams, SplitMix64, corpus
from .oracle import brute_force_best
from .solvers import (
    bounded_search_fpt,
    chain_approx,
    check_independent,
    exact_mis,
    kfree_fpt,
    ramsey_clique_removal,
)
from .structure import (
    degree_bound,
    find_claw,
    find_hole,
    find_induced_fan,
    find_induced_wheel,
    is_weakly_triangulated,
    max_clique,
)


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.checked > 0 and not self.failures

    def fail(self, msg: str) -> None:
        self.failures.append(msg)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.checked} checked, {len(self.failures)} failures, {self.elapsed:.1f}s"


def _timed(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.elapsed = time.perf_counter() - t0
        return res
    return wrapper


M2_ONE = GenParams(n1=12, n2=24, p1=0.5, p2=0.3, m1_cap=2, m2_cap=1)


def _cycling_m1(base: GenParams, count: int, seed: int, caps=(2, 3, 4), nonempty: bool = False):
    for i in range(count):
        p = replace(base, m1_cap=caps[i % len(caps)])
        yield from corpus(p, 1, seed=seed + 1000 * i, nonempty=nonempty)


@_timed
def check_reduction(count: int = 200, seed: int = 1) -> CheckResult:
    """Brute-force optimum equals the maximum independent set size."""
    res = CheckResult("reduction equivalence (oracle == exact MIS)")
    params = GenParams(n1=10, n2=10, p1=0.3, p2=0.3, m1_cap=3, m2_cap=2, sim_limit=20)
    for k, inst in enumerate(corpus(params, count, seed=seed)):
        best = brute_force_best(inst)
        mis = exact_mis(build_conflict_graph(inst))
        res.checked += 1
        if best.conserved != mis.size or mis.conserved != best.conserved:
            res.fail(f"seed {seed + k}: oracle {best.conserved} vs MIS {mis.size} (conserved {mis.conserved})")
    return res


@_timed
def check_weakly_triangulated(count: int = 200, seed: int = 1) -> CheckResult:
    """Acyclic G1 and m2 = 1 give weakly triangulated conflict graphs."""
    res = CheckResult("acyclic G1 => weakly triangulated")
    params = GenParams(n1=12, n2=36, p1=0.95, p2=0.25, m1_cap=3, m2_cap=1, g1_acyclic=True)
    for k, inst in enumerate(corpus(params, count, seed=seed, nonempty=True)):
        cg = build_conflict_graph(inst)
        wt = is_weakly_triangulated(cg)
        res.checked += 1
        if not wt:
            res.fail(f"instance {k}: hole={wt.hole} antihole={wt.antihole}")
    return res


@_timed
def check_wheels_m1_2(count: int = 500, seed: int = 1) -> CheckResult:
    """m1 = 2, m2 = 1: no induced W_k (k >= 5) and no induced F_t (t >= 8)."""
    res = CheckResult("m1=2: no W_k k>=5, no F_t t>=8")
    for k, inst in enumerate(corpus(M2_ONE, count, seed=seed, nonempty=True)):
        cg = build_conflict_graph(inst)
        res.checked += 1
        w = find_induced_wheel(cg, 5)
        f = find_induced_fan(cg, 8)
        if w or f:
            res.fail(f"instance {k}: wheel={w} fan={f}")
    return res


@_timed
def check_wheels_any_m1(count: int = 300, seed: int = 1) -> CheckResult:
    """m2 = 1: no induced W_k for 7 <= k <= 10; W5 and W6 do occur for m1 = 3."""
    res = CheckResult("m2=1: no W_k 7<=k<=10; W5/W6 constructed for m1=3")
    base = GenParams(n1=12, n2=24, p1=0.35, p2=0.2, m2_cap=1)
    for k, inst in enumerate(_cycling_m1(base, count, seed, nonempty=True)):
        cg = build_conflict_graph(inst)
        res.checked += 1
        w = find_induced_wheel(cg, 7, 10)
        if w:
            res.fail(f"instance {k} (m1={inst.m1}): wheel {w}")
    for size in (5, 6):
        inst = constructions.wheel_m1_3(size)
        cg = build_conflict_graph(inst)
        res.checked += 1
        w = find_induced_wheel(cg, size, size)
        if inst.m1 != 3 or inst.m2 != 1 or w is None or not graphs.is_wheel(cg, w[0], w[1]):
            res.fail(f"constructed W{size} not found (witness {w})")
    return res


@_timed
def check_clique_bound(count: int = 500, seed: int = 1) -> CheckResult:
    """m2 = 1: clique number at most m1^2, attained by the Case-1 construction."""
    res = CheckResult("m2=1: clique <= m1^2, K_{m1^2} constructed")
    base = GenParams(n1=10, n2=24, p1=0.4, p2=0.25, m2_cap=1)
    for k, inst in enumerate(_cycling_m1(base, count, seed, caps=(1, 2, 3, 4))):
        cg = build_conflict_graph(inst)
        size, wit = max_clique(cg)
        res.checked += 1
        if size > inst.m1 ** 2:
            res.fail(f"instance {k}: clique {wit} of size {size} > {inst.m1 ** 2}")
    for m1 in (2, 3):
        inst = constructions.clique_m1_squared(m1)
        size, wit = max_clique(build_conflict_graph(inst))
        res.checked += 1
        if inst.m1 != m1 or size != m1 * m1:
            res.fail(f"construction m1={m1}: clique {size}")
    return res


@_timed
def check_claw(count: int = 300, seed: int = 1) -> CheckResult:
    """m2 = 1: no induced (2*Delta_min+2)-claw."""
    res = CheckResult("m2=1: no (2*Delta_min+2)-claw")
    base = GenParams(n1=14, n2=28, p1=0.4, p2=0.3, m2_cap=1)
    degree_caps = (None, 2, 3)
    for k in range(count):
        params = replace(base, m1_cap=1 + k % 4, max_degree_cap=degree_caps[k % 3])
        inst = next(corpus(params, 1, seed=seed + 1000 * k))
        cg = build_conflict_graph(inst)
        d = 2 * inst.delta_min + 2
        res.checked += 1
        claw = find_claw(cg, d)
        if claw:
            res.fail(f"instance {k}: {d}-claw {claw}")
    return res


@_timed
def check_degree_bound(count: int = 500, seed: int = 1) -> CheckResult:
    """Conflict-graph degree never exceeds the closed-form bound."""
    res = CheckResult("degree bound; m1=m2=1 edgeless")
    caps = [(a, b) for a in (1, 2, 3) for b in (1, 2, 3)]
    base = GenParams(n1=10, n2=10, p1=0.35, p2=0.35)
    for i in range(count):
        m1c, m2c = caps[i % len(caps)]
        inst = next(corpus(replace(base, m1_cap=m1c, m2_cap=m2c), 1, seed=seed + 1000 * i))
        cg = build_conflict_graph(inst)
        res.checked += 1
        bound = degree_bound(inst)
        if cg.n and cg.max_degree > bound:
            res.fail(f"instance {i}: degree {cg.max_degree} > {bound}")
        if inst.m1 <= 1 and inst.m2 <= 1 and cg.m:
            res.fail(f"instance {i}: m1=m2=1 but {cg.m} conflicts")
    return res


@_timed
def check_chain_approx(count: int = 200, seed: int = 1) -> CheckResult:
    """Chain construction reaches ceil((Delta-2)/2) and its shape assertion holds."""
    res = CheckResult("chain_approx >= ceil((Delta-2)/2), shapes P1/P2/P3/C4")
    for k, inst in enumerate(corpus(M2_ONE, count, seed=seed, nonempty=True)):
        cg = build_conflict_graph(inst)
        res.checked += 1
        bound = math.ceil((cg.max_degree - 2) / 2)
        try:
            core = chain_approx(inst, cg, extend=False)
            full = chain_approx(inst, cg)
        except StructuralViolation as exc:
            res.fail(f"instance {k}: {exc} witness={exc.witness}")
            continue
        for r in (core, full):
            check_independent(cg, r.chosen)
            if r.size < bound:
                res.fail(f"instance {k}: size {r.size} < {bound}")
    return res


@_timed
def check_ramsey(count: int = 200, seed: int = 1) -> CheckResult:
    """Clique removal always meets |I|*|C| >= log2(n)^2 / 4."""
    res = CheckResult("Ramsey |I||C| >= log2(n)^2/4")
    base = GenParams(n1=12, n2=30, p1=0.35, p2=0.2, m2_cap=1)
    for k, inst in enumerate(_cycling_m1(base, count, seed, caps=(1, 2, 3, 4), nonempty=True)):
        cg = build_conflict_graph(inst)
        res.checked += 1
        try:
            sol, clique = ramsey_clique_removal(cg)
        except StructuralViolation as exc:
            res.fail(f"instance {k}: {exc}")
            continue
        check_independent(cg, sol.chosen)
        if not graphs.is_clique(cg, clique):
            res.fail(f"instance {k}: returned clique {clique} is not a clique")
        if len(clique) * sol.size < math.log2(cg.n) ** 2 / 4:
            res.fail(f"instance {k}: product {len(clique) * sol.size}")
    return res


@_timed
def check_fpt(count: int = 100, seed: int = 1) -> CheckResult:
    """Both FPT searches decide "independent set of size k" exactly."""
    res = CheckResult("FPT found(k) <=> exact >= k")
    base = GenParams(n1=10, n2=14, p1=0.35, p2=0.3, m2_cap=1)
    for idx, inst in enumerate(_cycling_m1(base, count, seed, caps=(1, 2, 3), nonempty=True)):
        cg = build_conflict_graph(inst)
        alpha = exact_mis(cg).size
        r = inst.m1 ** 2 + 1
        res.checked += 1
        for k in range(1, alpha + 2):
            for name, sol in (("bounded", bounded_search_fpt(cg, k)), ("kfree", kfree_fpt(cg, k, r))):
                if (sol is not None) != (alpha >= k):
                    res.fail(f"instance {idx}: {name} k={k} found={sol is not None} alpha={alpha}")
                elif sol is not None:
                    check_independent(cg, sol.chosen)
                    if sol.size != k:
                        res.fail(f"instance {idx}: {name} returned {sol.size} != {k}")
    return res


def _random_graph(rng: SplitMix64, n: int, p: float) -> list[set[int]]:
    return graphs.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def _sample(rng: SplitMix64, n: int, k: int) -> list[int]:
    pool = list(range(n))
    for i in range(k):
        j = i + rng.below(n - i)
        pool[i], pool[j] = pool[j], pool[i]
    return pool[:k]


def _set_induced(adj: list[set[int]], vs: list[int], edges) -> None:
    """Make ``vs`` induce exactly ``edges`` (pairs of positions in ``vs``)."""
    for u in vs:
        for v in vs:
            adj[u].discard(v)
    for i, j in edges:
        adj[vs[i]].add(vs[j])
        adj[vs[j]].add(vs[i])


def plant_hole(rng: SplitMix64, n: int, p: float, k: int) -> list[set[int]]:
    adj = _random_graph(rng, n, p)
    _set_induced(adj, _sample(rng, n, k), [(i, (i + 1) % k) for i in range(k)])
    return adj


def plant_wheel(rng: SplitMix64, n: int, p: float, k: int) -> list[set[int]]:
    adj = _random_graph(rng, n, p)
    vs = _sample(rng, n, k + 1)
    _set_induced(adj, vs, [(i, i % k + 1) for i in range(1, k + 1)] + [(0, i) for i in range(1, k + 1)])
    return adj


def plant_claw(rng: SplitMix64, n: int, p: float, d: int) -> list[set[int]]:
    adj = _random_graph(rng, n, p)
    _set_induced(adj, _sample(rng, n, d + 1), [(0, i) for i in range(1, d + 1)])
    return adj


@_timed
def check_detectors(count: int = 50, seed: int = 1) -> CheckResult:
    """Planted holes, wheels and claws are found and their witnesses verify."""
    res = CheckResult("detector soundness on planted subgraphs")
    rng = SplitMix64(seed)
    for i in range(count):
        k = 5 + i % 5
        adj = plant_hole(rng, 30, 0.12, k)
        res.checked += 1
        w = find_hole(adj, 5, max_len=k)
        if w is None or not graphs.is_induced_cycle(adj, w) or not 5 <= len(w) <= k:
            res.fail(f"hole {i}: planted C{k}, got {w}")
        w = find_hole(adj, 5)
        if w is None or not graphs.is_induced_cycle(adj, w) or len(w) < 5:
            res.fail(f"hole {i}: unbounded search got {w}")
    for i in range(count):
        k = 4 + i % 6
        adj = plant_wheel(rng, 30, 0.12, k)
        res.checked += 1
        w = find_induced_wheel(adj, 4, k)
        if w is None or not graphs.is_wheel(adj, *w) or not 4 <= len(w[1]) <= k:
            res.fail(f"wheel {i}: planted W{k}, got {w}")
    for i in range(count):
        d = 3 + i % 5
        adj = plant_claw(rng, 30, 0.12, d)
        res.checked += 1
        w = find_claw(adj, d)
        if w is None or not graphs.is_claw(adj, *w) or len(w[1]) != d:
            res.fail(f"claw {i}: planted {d}-claw, got {w}")
    return res


PRESETS: dict[str, tuple[Callable[..., CheckResult], int]] = {
    "reduction": (check_reduction, 200),
    "weak-triangulation": (check_weakly_triangulated, 200),
    "wheels-m1-2": (check_wheels_m1_2, 500),
    "wheels": (check_wheels_any_m1, 300),
    "clique": (check_clique_bound, 500),
    "claw": (check_claw, 300),
    "degree": (check_degree_bound, 500),
    "chain": (check_chain_approx, 200),
    "ramsey": (check_ramsey, 200),
    "fpt": (check_fpt, 100),
    "detectors": (check_detectors, 50),
}

