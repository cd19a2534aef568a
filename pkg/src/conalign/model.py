"""Instances, alignments and their text formats.

Instance text is line oriented, ``#`` starts a comment::

    g1 <u> <v>     edge of G1
    g2 <u> <v>     edge of G2
    sim <u> <v>    similarity edge, u in V1 and v in V2
    g1v <u>        declare a (possibly isolated) G1 vertex
    g2v <v>        declare a (possibly isolated) G2 vertex

The two vertex namespaces are disjoint. Vertices get dense indices in the
order they are first seen on ``g1``/``g1v`` (resp. ``g2``/``g2v``) lines.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, TextIO

from .errors import ContractViolation, ParseError

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SideGraph:
    """Undirected simple graph on vertices ``0..vertex_count-1``."""

    vertex_count: int
    edges: frozenset[Edge]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Edge]) -> SideGraph:
        if vertex_count < 0:
            raise ContractViolation("vertex_count must be non-negative")
        seen: set[Edge] = set()
        nbrs: list[list[int]] = [[] for _ in range(vertex_count)]
        for u, v in edges:
            if u == v:
                raise ContractViolation(f"self-loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ContractViolation(f"edge ({u}, {v}) out of range")
            e = _norm(u, v)
            if e in seen:
                raise ContractViolation(f"duplicate edge {e}")
            seen.add(e)
            nbrs[u].append(v)
            nbrs[v].append(u)
        adjacency = tuple(tuple(sorted(ns)) for ns in nbrs)
        return cls(vertex_count, frozenset(seen), adjacency)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def max_degree(self) -> int:
        return max((len(ns) for ns in self.adjacency), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def is_acyclic(self) -> bool:
        parent = list(range(self.vertex_count))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in sorted(self.edges):
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
        return True


@dataclass(frozen=True)
class AlignmentInstance:
    """Two side graphs plus the bipartite similarity graph between them.

    ``m1``/``m2`` are always recomputed from ``sim``.
    """

    g1: SideGraph
    g2: SideGraph
    sim: frozenset[Edge]
    names1: tuple[str, ...] = ()
    names2: tuple[str, ...] = ()

    def __post_init__(self):
        n1, n2 = self.g1.vertex_count, self.g2.vertex_count
        for u, v in self.sim:
            if not (0 <= u < n1):
                raise ContractViolation(f"sim endpoint {u} not in V1")
            if not (0 <= v < n2):
                raise ContractViolation(f"sim endpoint {v} not in V2")
        if not self.names1:
            object.__setattr__(self, "names1", tuple(f"u{i}" for i in range(n1)))
        if not self.names2:
            object.__setattr__(self, "names2", tuple(f"v{i}" for i in range(n2)))
        if len(self.names1) != n1 or len(self.names2) != n2:
            raise ContractViolation("name tables do not match vertex counts")
        if len(set(self.names1)) != n1 or len(set(self.names2)) != n2:
            raise ContractViolation("duplicate vertex names on one side")

    @classmethod
    def build(
        cls,
        n1: int,
        n2: int,
        e1: Iterable[Edge],
        e2: Iterable[Edge],
        sim: Iterable[Edge],
        names1: Iterable[str] = (),
        names2: Iterable[str] = (),
    ) -> AlignmentInstance:
        sim = list(sim)
        if len(set(sim)) != len(sim):
            raise ContractViolation("duplicate similarity edge")
        return cls(
            SideGraph.from_edges(n1, e1),
            SideGraph.from_edges(n2, e2),
            frozenset(sim),
            tuple(names1),
            tuple(names2),
        )

    @cached_property
    def sim1(self) -> tuple[tuple[int, ...], ...]:
        """For each V1 vertex, its sorted similarity partners in V2."""
        out: list[list[int]] = [[] for _ in range(self.g1.vertex_count)]
        for u, v in self.sim:
            out[u].append(v)
        return tuple(tuple(sorted(x)) for x in out)

    @cached_property
    def sim2(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.g2.vertex_count)]
        for u, v in self.sim:
            out[v].append(u)
        return tuple(tuple(sorted(x)) for x in out)

    @property
    def m1(self) -> int:
        return max((len(x) for x in self.sim1), default=0)

    @property
    def m2(self) -> int:
        return max((len(x) for x in self.sim2), default=0)

    @property
    def delta_min(self) -> int:
        return min(self.g1.max_degree, self.g2.max_degree)


@dataclass(frozen=True)
class Alignment:
    """A matching of the similarity graph and its conserved-edge count.

    Build one with :func:`conalign.oracle.make_alignment`, which checks the
    pairs against the instance and recomputes ``conserved``.
    """

    pairs: frozenset[Edge]
    conserved: int

    def __post_init__(self):
        left = [u for u, _ in self.pairs]
        right = [v for _, v in self.pairs]
        if len(set(left)) != len(left) or len(set(right)) != len(right):
            raise ContractViolation("alignment pairs are not a matching")
        if self.conserved < 0:
            raise ContractViolation("conserved count must be non-negative")

    def __len__(self) -> int:
        return len(self.pairs)


class InstanceStats(NamedTuple):
    delta1: int
    delta2: int
    m1: int
    m2: int
    g1_acyclic: bool


def instance_stats(inst: AlignmentInstance) -> InstanceStats:
    return InstanceStats(
        inst.g1.max_degree,
        inst.g2.max_degree,
        inst.m1,
        inst.m2,
        inst.g1.is_acyclic(),
    )


def _lines(text: str | TextIO) -> Iterable[str]:
    if isinstance(text, str):
        return io.StringIO(text)
    return text


def parse_instance(text: str | TextIO) -> AlignmentInstance:
    """Parse the instance text format described in the module docstring."""
    names: tuple[dict[str, int], dict[str, int]] = ({}, {})
    edges: tuple[list[Edge], list[Edge]] = ([], [])
    seen: tuple[set[Edge], set[Edge]] = (set(), set())
    sim_lines: list[tuple[int, str, str]] = []

    def intern(side: int, name: str) -> int:
        table = names[side]
        if name not in table:
            table[name] = len(table)
        return table[name]

    for lineno, raw in enumerate(_lines(text), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        kind, args = tokens[0], tokens[1:]
        if kind in ("g1", "g2"):
            if len(args) != 2:
                raise ParseError(f"'{kind}' expects two vertex names", lineno)
            side = 0 if kind == "g1" else 1
            if args[0] == args[1]:
                raise ParseError(f"self-loop on {args[0]!r}", lineno)
            e = _norm(intern(side, args[0]), intern(side, args[1]))
            if e in seen[side]:
                raise ParseError(f"duplicate {kind} edge {args[0]} {args[1]}", lineno)
            seen[side].add(e)
            edges[side].append(e)
        elif kind in ("g1v", "g2v"):
            if len(args) != 1:
                raise ParseError(f"'{kind}' expects one vertex name", lineno)
            intern(0 if kind == "g1v" else 1, args[0])
        elif kind == "sim":
            if len(args) != 2:
                raise ParseError("'sim' expects two vertex names", lineno)
            sim_lines.append((lineno, args[0], args[1]))
        else:
            raise ParseError(f"unknown record type {kind!r}", lineno)

    sim: set[Edge] = set()
    for lineno, a, b in sim_lines:
        if a not in names[0]:
            raise ParseError(f"sim endpoint {a!r} is not a G1 vertex", lineno)
        if b not in names[1]:
            raise ParseError(f"sim endpoint {b!r} is not a G2 vertex", lineno)
        e = (names[0][a], names[1][b])
        if e in sim:
            raise ParseError(f"duplicate sim edge {a} {b}", lineno)
        sim.add(e)

    return AlignmentInstance(
        SideGraph.from_edges(len(names[0]), edges[0]),
        SideGraph.from_edges(len(names[1]), edges[1]),
        frozenset(sim),
        tuple(names[0]),
        tuple(names[1]),
    )


def format_instance(inst: AlignmentInstance) -> str:
    """Serialize ``inst``; parsing the result reproduces it index for index."""
    out = [f"g1v {n}" for n in inst.names1]
    out += [f"g2v {n}" for n in inst.names2]
    out += [f"g1 {inst.names1[u]} {inst.names1[v]}" for u, v in sorted(inst.g1.edges)]
    out += [f"g2 {inst.names2[u]} {inst.names2[v]}" for u, v in sorted(inst.g2.edges)]
    out += [f"sim {inst.names1[u]} {inst.names2[v]}" for u, v in sorted(inst.sim)]
    return "\n".join(out) + "\n" if out else ""


def serialize_alignment(a: Alignment, inst: AlignmentInstance) -> str:
    """``pair`` lines sorted by G1 name, then a final ``conserved`` line."""
    rows = sorted((inst.names1[u], inst.names2[v]) for u, v in a.pairs)
    out = [f"pair {x} {y}" for x, y in rows]
    out.append(f"conserved {a.conserved}")
    return "\n".join(out)


def parse_alignment(text: str | TextIO, inst: AlignmentInstance) -> Alignment:
    idx1 = {n: i for i, n in enumerate(inst.names1)}
    idx2 = {n: i for i, n in enumerate(inst.names2)}
    pairs: list[Edge] = []
    conserved = None
    for lineno, raw in enumerate(_lines(text), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        if tokens[0] == "pair" and len(tokens) == 3:
            try:
                pairs.append((idx1[tokens[1]], idx2[tokens[2]]))
            except KeyError as exc:
                raise ParseError(f"unknown vertex {exc.args[0]!r}", lineno) from None
        elif tokens[0] == "conserved" and len(tokens) == 2:
            try:
                conserved = int(tokens[1])
            except ValueError:
                raise ParseError("conserved count is not an integer", lineno) from None
        else:
            raise ParseError(f"malformed alignment line {raw.strip()!r}", lineno)
    if conserved is None:
        raise ParseError("missing 'conserved' line")
    if len(set(pairs)) != len(pairs):
        raise ParseError("duplicate pair")
    return Alignment(frozenset(pairs), conserved)
