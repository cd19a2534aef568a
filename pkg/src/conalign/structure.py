"""Forbidden induced subgraph detectors and structural checks on conflict graphs.

Every detector returns a witness (a tuple of vertex indices, see each
function) or ``None``. ``check_all`` runs the detectors whose hypotheses an
instance satisfies and records one verdict per property.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from . import _bitset as bs
from . import graphs
from .conflict import ConflictGraph, build_conflict_graph
from .errors import ContractViolation, ResourceLimitError
from .model import AlignmentInstance, format_instance

log = logging.getLogger(__name__)

HOLE_CAP = 200
ANTIHOLE_CAP = 120


class DetectorCapExceeded(ResourceLimitError):
    pass


def _masks(g) -> list[int]:
    if isinstance(g, ConflictGraph):
        return g.masks
    return bs.from_lists(graphs.adjacency_of(g))


def max_clique(g) -> tuple[int, tuple[int, ...]]:
    adj = _masks(g)
    clique = bs.maximum_clique(adj, bs.full(len(adj)))
    return bs.popcount(clique), tuple(bs.bits(clique))


def _induced_paths(adj: list[int], P: int, length: int):
    """Induced paths on ``length`` vertices in G[P], each reported once."""
    def grow(path: list[int], blocked: int):
        if len(path) == length:
            if length == 1 or path[0] < path[-1]:
                yield path
            return
        last = path[-1]
        for u in bs.bits(adj[last] & P & ~blocked):
            yield from grow(path + [u], blocked | adj[last] | (1 << last))

    for s in bs.bits(P):
        yield from grow([s], 1 << s)


def _hole_in(adj: list[int], P: int, min_len: int) -> tuple[int, ...] | None:
    # A hole of length >= L contains an induced path p1..p_{L-1}; the rest of
    # the hole joins p1 to p_{L-1} avoiding the closed neighbourhoods of the
    # inner path vertices. Conversely a shortest such join closes a hole.
    inner_len = min_len - 3
    for inner in _induced_paths(adj, P, inner_len):
        first, last = inner[0], inner[-1]
        closed = [adj[q] | (1 << q) for q in inner]
        block = 0
        for c in closed:
            block |= c
        interior = P & ~block
        if not interior:
            continue
        if inner_len == 1:
            ends_a = ends_d = P & adj[first]
        else:
            rest_a = rest_d = 0
            for c in closed[1:]:
                rest_a |= c
            for c in closed[:-1]:
                rest_d |= c
            ends_a = P & adj[first] & ~rest_a
            ends_d = P & adj[last] & ~rest_d
        comps = bs.components(adj, interior)
        touch = {}
        for v in bs.bits(ends_a | ends_d):
            t = 0
            for ci, comp in enumerate(comps):
                if adj[v] & comp:
                    t |= 1 << ci
            touch[v] = t
        for a in bs.bits(ends_a):
            if not touch[a]:
                continue
            for d in bs.bits(ends_d & ~adj[a] & ~(1 << a)):
                if inner_len == 1 and d < a:
                    continue
                common = touch[a] & touch[d]
                if common:
                    comp = comps[bs.lowest(common)]
                    join = bs.shortest_path(adj, a, d, comp)
                    return tuple([a, *inner, *join[::-1][:-1]])
    return None


def find_hole(g, min_len: int = 5, cap: int | None = HOLE_CAP, max_len: int | None = None) -> tuple[int, ...] | None:
    """An induced cycle with at least ``min_len`` vertices, in cycle order.

    Without ``max_len`` this is polynomial. With it, chordless paths are
    enumerated up to ``max_len`` vertices, which is exponential in
    ``max_len``.
    """
    if min_len < 4:
        raise ContractViolation("holes have at least 4 vertices")
    adj = _masks(g)
    if cap is not None and len(adj) > cap:
        raise DetectorCapExceeded(f"hole search capped at {cap} vertices, graph has {len(adj)}")
    if max_len is not None:
        return _cycle_in_range(adj, bs.full(len(adj)), min_len, max_len)
    return _hole_in(adj, bs.full(len(adj)), min_len)


def find_antihole(g, min_len: int = 5, cap: int | None = ANTIHOLE_CAP) -> tuple[int, ...] | None:
    """A hole of the complement, i.e. an induced antihole of ``g``."""
    adj = graphs.adjacency_of(g)
    if cap is not None and len(adj) > cap:
        raise DetectorCapExceeded(f"antihole search capped at {cap} vertices, graph has {len(adj)}")
    return find_hole(graphs.complement(adj), min_len, cap=None)


@dataclass(frozen=True)
class WeakTriangulation:
    weakly_triangulated: bool
    hole: tuple[int, ...] | None
    antihole: tuple[int, ...] | None

    def __bool__(self) -> bool:
        return self.weakly_triangulated


def is_weakly_triangulated(g, hole_cap: int | None = HOLE_CAP, antihole_cap: int | None = ANTIHOLE_CAP) -> WeakTriangulation:
    hole = find_hole(g, 5, hole_cap)
    antihole = None if hole else find_antihole(g, 5, antihole_cap)
    return WeakTriangulation(hole is None and antihole is None, hole, antihole)


def _cycle_in_range(adj: list[int], P: int, k_min: int, k_max: int) -> tuple[int, ...] | None:
    """Induced cycle of length in [k_min, k_max] in G[P], smallest vertex first."""
    def grow(path: list[int], pmask: int, blocked: int):
        s, last = path[0], path[-1]
        for u in bs.bits(adj[last] & P & ~blocked & ~pmask):
            if len(path) >= 2 and adj[u] >> s & 1:
                if k_min <= len(path) + 1 <= k_max:
                    return tuple(path + [u])
                continue
            if len(path) + 1 >= k_max:
                continue
            new_blocked = blocked | (adj[last] | (1 << last) if len(path) >= 2 else 0)
            found = grow(path + [u], pmask | (1 << u), new_blocked)
            if found:
                return found
        return None

    for s in bs.bits(P):
        allowed = P & ~((2 << s) - 1)
        sub = grow([s], 1 << s, ~allowed & P)
        if sub:
            return sub
    return None


def find_induced_wheel(g, k_min: int = 5, k_max: int | None = None) -> tuple[int, tuple[int, ...]] | None:
    """``(hub, rim)`` with the rim an induced cycle of length in [k_min, k_max]."""
    if k_min < 4:
        raise ContractViolation("wheel rims have at least 4 vertices")
    adj = _masks(g)
    for hub in range(len(adj)):
        nbhd = adj[hub]
        if bs.popcount(nbhd) < k_min:
            continue
        if k_max is None:
            rim = _hole_in(adj, nbhd, k_min)
        else:
            rim = _cycle_in_range(adj, nbhd, k_min, k_max)
        if rim:
            return hub, rim
    return None


def find_induced_fan(g, t: int) -> tuple[int, tuple[int, ...]] | None:
    """``(hub, spine)`` with the spine an induced path on exactly ``t`` vertices.

    F_t contains every smaller fan, so this also answers "any fan F_s, s >= t".
    """
    adj = _masks(g)
    for hub in range(len(adj)):
        nbhd = adj[hub]
        if bs.popcount(nbhd) < t:
            continue
        for spine in _induced_paths(adj, nbhd, t):
            return hub, tuple(spine)
    return None


def find_claw(g, d: int) -> tuple[int, tuple[int, ...]] | None:
    """``(center, talons)`` with ``d`` pairwise non-adjacent neighbours."""
    if d < 2:
        raise ContractViolation("claws need d >= 2")
    adj = _masks(g)
    for v in range(len(adj)):
        nbhd = adj[v]
        if bs.popcount(nbhd) < d or bs.clique_cover_bound(adj, nbhd) < d:
            continue
        talons = bs.independent_set_of_size(adj, nbhd, d)
        if talons is not None:
            return v, tuple(bs.bits(talons))
    return None


def degree_bound(inst: AlignmentInstance) -> int:
    """Upper bound on the conflict-graph degree from Delta1, Delta2, m1, m2."""
    d1, d2 = inst.g1.max_degree, inst.g2.max_degree
    m1, m2 = inst.m1, inst.m2
    return (
        2 * d1 * m1 * m1 + 2 * d2 * m2 * m2
        - 2 * d1 * m1 - 2 * d2 * m2
        - m1 * m1 - m2 * m2
        + 2 * m1 + 2 * m2 - 2
    )


@dataclass
class Verdict:
    name: str
    status: str  # pass | fail | skipped
    detail: str = ""
    witness: tuple = ()

    @property
    def violated(self) -> bool:
        return self.status == "fail"


@dataclass
class StructureReport:
    n: int
    m: int
    max_degree: int
    max_clique_size: int
    max_clique: tuple[int, ...]
    clique_bound: int
    degree_bound: int
    hole: tuple[int, ...] | None = None
    antihole: tuple[int, ...] | None = None
    wheels: dict[str, tuple | None] = field(default_factory=dict)
    fan: tuple | None = None
    claw: tuple | None = None
    claw_d: int = 0
    verdicts: list[Verdict] = field(default_factory=list)
    instance_text: str = ""

    @property
    def violations(self) -> list[Verdict]:
        return [v for v in self.verdicts if v.violated]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_text(self) -> str:
        out = [
            f"conflict graph: {self.n} c4s, {self.m} conflicts, max degree {self.max_degree}",
            f"max clique: {self.max_clique_size} {list(self.max_clique)}",
        ]
        for v in self.verdicts:
            line = f"{v.status.upper():7s} {v.name}"
            if v.detail:
                line += f": {v.detail}"
            if v.witness:
                line += f" witness={list(v.witness)}"
            out.append(line)
        out.append(f"violations: {len(self.violations)}")
        return "\n".join(out)

    def to_kv(self) -> str:
        out = [
            f"n={self.n}",
            f"m={self.m}",
            f"max_degree={self.max_degree}",
            f"max_clique={self.max_clique_size}",
            f"clique_bound={self.clique_bound}",
            f"degree_bound={self.degree_bound}",
        ]
        for v in self.verdicts:
            w = ",".join(map(str, _flatten(v.witness)))
            out.append(f"check.{v.name}={v.status}" + (f" witness={w}" if w else ""))
        out.append(f"violations={len(self.violations)}")
        return "\n".join(out)

    def bug_report(self) -> str:
        """Instance text plus every violating witness, for minimisation."""
        lines = [f"# {v.name}: {v.detail} witness={list(v.witness)}" for v in self.violations]
        return "\n".join(lines) + "\n" + self.instance_text


def _flatten(w):
    for x in w:
        if isinstance(x, tuple):
            yield from _flatten(x)
        else:
            yield x


def check_all(
    inst: AlignmentInstance,
    cg: ConflictGraph | None = None,
    hole_cap: int | None = HOLE_CAP,
    antihole_cap: int | None = ANTIHOLE_CAP,
) -> StructureReport:
    """Run every structural check whose hypotheses ``inst`` satisfies."""
    cg = cg or build_conflict_graph(inst)
    m1, m2 = inst.m1, inst.m2
    size, clique = max_clique(cg)
    rep = StructureReport(
        n=cg.n,
        m=cg.m,
        max_degree=cg.max_degree,
        max_clique_size=size,
        max_clique=clique,
        clique_bound=m1 * m1,
        degree_bound=degree_bound(inst),
        instance_text=format_instance(inst),
    )
    add = rep.verdicts.append

    if cg.max_degree <= rep.degree_bound or cg.n == 0:
        add(Verdict("degree_bound", "pass", f"{cg.max_degree} <= {rep.degree_bound}"))
    else:
        v = next(i for i in range(cg.n) if cg.degree(i) == cg.max_degree)
        add(Verdict("degree_bound", "fail", f"{cg.max_degree} > {rep.degree_bound}", (v, *cg.neighbors(v))))

    if m2 > 1:
        add(Verdict("m2_eq_1_properties", "skipped", f"m2={m2}"))
        return rep

    if size <= m1 * m1:
        add(Verdict("clique_le_m1_squared", "pass", f"{size} <= {m1 * m1}"))
    else:
        add(Verdict("clique_le_m1_squared", "fail", f"{size} > {m1 * m1}", clique))

    rep.claw_d = 2 * inst.delta_min + 2
    rep.claw = find_claw(cg, rep.claw_d)
    add(_absent("no_claw", rep.claw, f"d={rep.claw_d}"))

    rep.wheels["k>=7"] = find_induced_wheel(cg, 7)
    add(_absent("no_wheel_k>=7", rep.wheels["k>=7"]))

    if m1 <= 2:
        rep.wheels["k>=5"] = find_induced_wheel(cg, 5)
        add(_absent("no_wheel_k>=5", rep.wheels["k>=5"]))
        rep.fan = find_induced_fan(cg, 8)
        add(_absent("no_fan_t>=8", rep.fan))

    if inst.g1.is_acyclic():
        try:
            wt = is_weakly_triangulated(cg, hole_cap, antihole_cap)
        except DetectorCapExceeded as exc:
            log.warning("weak triangulation check skipped: %s", exc)
            add(Verdict("weakly_triangulated", "skipped", str(exc)))
        else:
            rep.hole, rep.antihole = wt.hole, wt.antihole
            if wt:
                add(Verdict("weakly_triangulated", "pass"))
            else:
                kind = "hole" if wt.hole else "antihole"
                add(Verdict("weakly_triangulated", "fail", kind, wt.hole or wt.antihole))
    return rep


def _absent(name: str, witness, detail: str = "") -> Verdict:
    if witness is None:
        return Verdict(name, "pass", detail)
    return Verdict(name, "fail", detail, witness)
