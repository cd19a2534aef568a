"""c4 enumeration, conflict tests and the conflict graph.

A c4 ``(a, b, c, d)`` is the cycle a-b-c-d-a with ab in E1, cd in E2 and
ad, bc similarity edges. Its identity is the pair of similarity edges; the
stored orientation always has ``a < b``.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property

from . import _bitset
from .errors import ContractViolation
from .model import AlignmentInstance, Edge


@dataclass(frozen=True, order=True)
class C4:
    a: int
    b: int
    c: int
    d: int

    @classmethod
    def canonical(cls, a: int, b: int, c: int, d: int) -> C4:
        return cls(a, b, c, d) if a < b else cls(b, a, d, c)

    @property
    def sim_edges(self) -> tuple[Edge, Edge]:
        return ((self.a, self.d), (self.b, self.c))

    def validate(self, inst: AlignmentInstance) -> None:
        ok = (
            self.a < self.b
            and inst.g1.has_edge(self.a, self.b)
            and inst.g2.has_edge(self.c, self.d)
            and (self.a, self.d) in inst.sim
            and (self.b, self.c) in inst.sim
        )
        if not ok:
            raise ContractViolation(f"{self} is not a canonical c4 of the instance")

    def label(self, inst: AlignmentInstance) -> str:
        n1, n2 = inst.names1, inst.names2
        return f"({n1[self.a]},{n1[self.b]},{n2[self.c]},{n2[self.d]})"


class ConflictType(enum.Enum):
    TYPE1A = "Type1a"
    TYPE1B = "Type1b"
    TYPE2 = "Type2"
    TYPE3A = "Type3a"
    TYPE3B = "Type3b"
    UNCLASSIFIED = "Unclassified"

    @property
    def family(self) -> int:
        """1, 2 or 3; 0 for unclassified."""
        return {"1": 1, "2": 2, "3": 3}.get(self.value[4:5], 0)


def enumerate_c4s(inst: AlignmentInstance) -> list[C4]:
    found: set[C4] = set()
    g1, g2, sim = inst.g1, inst.g2, inst.sim
    for a, d in sorted(sim):
        for b in g1.neighbors(a):
            for c in g2.neighbors(d):
                if (b, c) in sim:
                    found.add(C4.canonical(a, b, c, d))
    return sorted(found)


def conflicts(x: C4, y: C4) -> bool:
    """True iff some similarity edge of x and one of y are distinct but touch."""
    for e in x.sim_edges:
        for f in y.sim_edges:
            if e != f and (e[0] == f[0] or e[1] == f[1]):
                return True
    return False


def classify_conflict(ref: C4, other: C4, m2: int = 1) -> ConflictType:
    """Conflict configuration of ``other`` relative to ``ref``.

    Only defined for ``m2 == 1``; larger ``m2`` yields UNCLASSIFIED.
    """
    if not conflicts(ref, other):
        raise ContractViolation(f"{ref} and {other} do not conflict")
    if m2 > 1:
        return ConflictType.UNCLASSIFIED
    shared1 = {ref.a, ref.b} & {other.a, other.b}
    if len(shared1) == 1:
        return ConflictType.TYPE1A if ref.a in shared1 else ConflictType.TYPE1B
    if len(shared1) != 2:
        raise ContractViolation(f"{ref} and {other} share no G1 vertex; is m2 really 1?")
    shared_sim = set(ref.sim_edges) & set(other.sim_edges)
    if not shared_sim:
        return ConflictType.TYPE2
    # the surviving collision is at the end of ab whose sim edge differs
    if shared_sim == {(ref.b, ref.c)}:
        return ConflictType.TYPE3A
    if shared_sim == {(ref.a, ref.d)}:
        return ConflictType.TYPE3B
    raise ContractViolation(f"{ref} and {other} share both similarity edges")


@dataclass(frozen=True)
class ConflictGraph:
    instance: AlignmentInstance
    c4s: tuple[C4, ...]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.c4s)

    @property
    def m(self) -> int:
        return sum(len(ns) for ns in self.adjacency) // 2

    def __len__(self) -> int:
        return len(self.c4s)

    def neighbors(self, i: int) -> tuple[int, ...]:
        return self.adjacency[i]

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])

    @property
    def max_degree(self) -> int:
        return max((len(ns) for ns in self.adjacency), default=0)

    @cached_property
    def masks(self) -> list[int]:
        return _bitset.from_lists(self.adjacency)

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.masks[i] >> j & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, ns in enumerate(self.adjacency) for j in ns if i < j]

    def conflict_type(self, ref: int, other: int) -> ConflictType:
        return classify_conflict(self.c4s[ref], self.c4s[other], self.instance.m2)

    def to_dot(self, name: str = "conflict") -> str:
        out = [f"graph {name} {{"]
        for i, x in enumerate(self.c4s):
            out.append(f'  {i} [label="{i}:{x.label(self.instance)}"];')
        for i, j in self.edges():
            out.append(f"  {i} -- {j};")
        out.append("}")
        return "\n".join(out)


def build_conflict_graph(inst: AlignmentInstance) -> ConflictGraph:
    c4s = enumerate_c4s(inst)
    # two c4s conflict iff distinct sim edges of theirs meet at a vertex,
    # so bucket (c4, sim edge) incidences by endpoint on each side
    buckets: dict[tuple[int, int], list[tuple[int, Edge]]] = defaultdict(list)
    for i, x in enumerate(c4s):
        for e in x.sim_edges:
            buckets[(1, e[0])].append((i, e))
            buckets[(2, e[1])].append((i, e))
    nbrs: list[set[int]] = [set() for _ in c4s]
    for entries in buckets.values():
        for p in range(len(entries)):
            i, e = entries[p]
            for q in range(p + 1, len(entries)):
                j, f = entries[q]
                if i != j and e != f:
                    nbrs[i].add(j)
                    nbrs[j].add(i)
    adjacency = tuple(tuple(sorted(ns)) for ns in nbrs)
    return ConflictGraph(inst, tuple(c4s), adjacency)


@dataclass(frozen=True)
class UnderlyingGraph:
    """G1, G2 and S restricted to what takes part in at least one c4."""

    v1: tuple[int, ...]
    v2: tuple[int, ...]
    e1: tuple[Edge, ...]
    e2: tuple[Edge, ...]
    sim: tuple[Edge, ...]


def underlying_graph(cg: ConflictGraph) -> UnderlyingGraph:
    v1, v2, e1, e2, sim = set(), set(), set(), set(), set()
    for x in cg.c4s:
        v1 |= {x.a, x.b}
        v2 |= {x.c, x.d}
        e1.add((x.a, x.b))
        e2.add((min(x.c, x.d), max(x.c, x.d)))
        sim |= set(x.sim_edges)
    return UnderlyingGraph(*(tuple(sorted(s)) for s in (v1, v2, e1, e2, sim)))
