"""Plain simple graphs as adjacency lists, plus witness verifiers.

Detectors accept either a :class:`~conalign.conflict.ConflictGraph` or any
sequence of neighbour collections indexed ``0..n-1``. The verifiers here
read adjacency directly and share no code with the detectors.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

Adjacency = list[set[int]]


def adjacency_of(g) -> Sequence[Iterable[int]]:
    return g.adjacency if hasattr(g, "adjacency") else g


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Adjacency:
    adj: Adjacency = [set() for _ in range(n)]
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at {u}")
        adj[u].add(v)
        adj[v].add(u)
    return adj


def edges_of(g) -> list[tuple[int, int]]:
    return sorted((u, v) for u, ns in enumerate(adjacency_of(g)) for v in ns if u < v)


def empty(n: int) -> Adjacency:
    return [set() for _ in range(n)]


def path(n: int) -> Adjacency:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Adjacency:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Adjacency:
    return from_edges(n, combinations(range(n), 2))


def star(leaves: int) -> Adjacency:
    """K_{1,leaves} with centre 0."""
    return from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def wheel(k: int) -> Adjacency:
    """W_k: a k-cycle on 1..k plus hub 0."""
    rim = [(i, i % k + 1) for i in range(1, k + 1)]
    return from_edges(k + 1, rim + [(0, i) for i in range(1, k + 1)])


def complement(g) -> Adjacency:
    adj = adjacency_of(g)
    n = len(adj)
    return [set(range(n)) - set(adj[u]) - {u} for u in range(n)]


def _has(adj, u: int, v: int) -> bool:
    return v in adj[u]


def is_independent(g, vertices: Iterable[int]) -> bool:
    adj = adjacency_of(g)
    vs = list(vertices)
    return len(set(vs)) == len(vs) and not any(_has(adj, u, v) for u, v in combinations(vs, 2))


def is_clique(g, vertices: Iterable[int]) -> bool:
    adj = adjacency_of(g)
    vs = list(vertices)
    return len(set(vs)) == len(vs) and all(_has(adj, u, v) for u, v in combinations(vs, 2))


def is_induced_path(g, seq: Sequence[int]) -> bool:
    adj = adjacency_of(g)
    if len(set(seq)) != len(seq):
        return False
    for i, j in combinations(range(len(seq)), 2):
        if _has(adj, seq[i], seq[j]) != (j == i + 1):
            return False
    return True


def is_induced_cycle(g, seq: Sequence[int]) -> bool:
    adj = adjacency_of(g)
    k = len(seq)
    if k < 3 or len(set(seq)) != k:
        return False
    for i, j in combinations(range(k), 2):
        consecutive = j == i + 1 or (i == 0 and j == k - 1)
        if _has(adj, seq[i], seq[j]) != consecutive:
            return False
    return True


def is_wheel(g, hub: int, rim: Sequence[int]) -> bool:
    adj = adjacency_of(g)
    return hub not in rim and all(_has(adj, hub, v) for v in rim) and is_induced_cycle(adj, rim)


def is_fan(g, hub: int, spine: Sequence[int]) -> bool:
    adj = adjacency_of(g)
    return hub not in spine and all(_has(adj, hub, v) for v in spine) and is_induced_path(adj, spine)


def is_claw(g, center: int, talons: Sequence[int]) -> bool:
    adj = adjacency_of(g)
    return (
        center not in talons
        and all(_has(adj, center, t) for t in talons)
        and is_independent(adj, talons)
    )
