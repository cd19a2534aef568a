"""Graph kernels over int bitsets.

A graph is a list ``adj`` of ints where bit ``j`` of ``adj[i]`` is set iff
``ij`` is an edge. Vertex subsets are ints as well. Every routine breaks
ties towards the lowest vertex index.
"""

from __future__ import annotations

from typing import Iterator

from .errors import BudgetExceeded


def bit(i: int) -> int:
    return 1 << i


def popcount(x: int) -> int:
    return x.bit_count()


def lowest(x: int) -> int:
    return (x & -x).bit_length() - 1


def bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def to_mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def from_lists(adjacency) -> list[int]:
    return [to_mask(ns) for ns in adjacency]


def full(n: int) -> int:
    return (1 << n) - 1


def _min_degree_vertex(adj: list[int], P: int) -> tuple[int, int]:
    best_v, best_d = -1, -1
    for v in bits(P):
        d = popcount(adj[v] & P)
        if best_d < 0 or d < best_d:
            best_v, best_d = v, d
            if d == 0:
                break
    return best_v, best_d


def _max_degree_vertex(adj: list[int], P: int) -> tuple[int, int]:
    best_v, best_d = -1, -1
    for v in bits(P):
        d = popcount(adj[v] & P)
        if d > best_d:
            best_v, best_d = v, d
    return best_v, best_d


def greedy_min_degree(adj: list[int], P: int) -> int:
    """Pick a minimum-degree vertex, delete its closed neighbourhood, repeat."""
    chosen = 0
    while P:
        v, _ = _min_degree_vertex(adj, P)
        chosen |= 1 << v
        P &= ~(adj[v] | (1 << v))
    return chosen


def clique_cover_bound(adj: list[int], P: int) -> int:
    """Size of a greedy clique partition of ``P``; an upper bound on alpha."""
    count = 0
    while P:
        v = lowest(P)
        cand = P & adj[v]
        P &= ~(1 << v)
        while cand:
            u = lowest(cand)
            cand &= adj[u]
            P &= ~(1 << u)
        count += 1
    return count


def maximum_independent_set(adj: list[int], P: int, budget: int = 10**7,
                            target: int | None = None) -> tuple[int, int]:
    """Exact maximum independent set of ``G[P]``; returns ``(set, nodes)``.

    Branches on a maximum-degree vertex (include it and drop its closed
    neighbourhood, or drop it), after folding in degree-0 and degree-1
    vertices, which some maximum set always contains. Subtrees whose
    clique-cover bound cannot beat the incumbent are cut. With ``target``
    the search stops as soon as a set of that size is found.
    """
    best = greedy_min_degree(adj, P)
    best_size = popcount(best)
    nodes = 0
    stack = [(P, 0)]
    while stack:
        if target is not None and best_size >= target:
            break
        P, cur = stack.pop()
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(
                f"branch and bound exceeded {budget} nodes",
                frozenset(bits(best)),
            )
        changed = True
        while changed and P:
            changed = False
            for v in bits(P):
                if not P >> v & 1:
                    continue
                nb = adj[v] & P
                if nb & (nb - 1) == 0:  # degree 0 or 1
                    cur |= 1 << v
                    P &= ~(nb | (1 << v))
                    changed = True
        size = popcount(cur)
        if not P:
            if size > best_size:
                best, best_size = cur, size
            continue
        if size + clique_cover_bound(adj, P) <= best_size:
            continue
        v, _ = _max_degree_vertex(adj, P)
        vb = 1 << v
        stack.append((P & ~vb, cur))
        stack.append((P & ~(adj[v] | vb), cur | vb))
    return best, nodes


def lex_least_mis(adj: list[int], P: int, budget: int = 10**7) -> tuple[int, int]:
    """The lexicographically least maximum independent set of ``G[P]``.

    Finds alpha first, then walks the vertices in index order keeping v
    whenever the rest of the graph still holds the remaining quota. Node
    counts of all searches share ``budget``; returns ``(set, nodes)``.
    """
    best, nodes = maximum_independent_set(adj, P, budget)
    need = popcount(best)
    chosen = 0
    for v in bits(P):
        if not need:
            break
        if not P >> v & 1:
            continue
        vb = 1 << v
        rest = P & ~(adj[v] | vb)
        try:
            found, used = maximum_independent_set(adj, rest, budget - nodes, target=need - 1)
        except BudgetExceeded as exc:
            raise BudgetExceeded(str(exc), frozenset(bits(best))) from None
        nodes += used
        if popcount(found) >= need - 1:
            chosen |= vb
            need -= 1
            P = rest
        else:
            P &= ~vb
    return chosen, nodes


def independent_set_of_size(adj: list[int], P: int, k: int) -> int | None:
    """Bounded search tree: an independent set of exactly ``k`` vertices, or None.

    Some size-``k`` solution, if any exists, meets the closed neighbourhood of
    a minimum-degree vertex, so branching over that neighbourhood is complete.
    """
    if k <= 0:
        return 0
    if popcount(P) < k:
        return None
    v, _ = _min_degree_vertex(adj, P)
    for u in bits(P & (adj[v] | (1 << v))):
        sub = independent_set_of_size(adj, P & ~(adj[u] | (1 << u)), k - 1)
        if sub is not None:
            return sub | (1 << u)
    return None


def ramsey(adj: list[int], P: int) -> tuple[int, int]:
    """Ramsey split on ``G[P]``: returns ``(clique, independent_set)``.

    Pivot on the lowest vertex v, recurse on N(v) (clique side grows by v) and
    on the non-neighbours (independent side grows by v), keep the larger of
    each. Iterative so depth is not bounded by the interpreter stack.
    """
    # frame: [P, stage, pivot, first_result]
    stack: list[list] = [[P, 0, -1, None]]
    result = (0, 0)
    while stack:
        fr = stack[-1]
        if fr[1] == 0:
            if fr[0] == 0:
                result = (0, 0)
                stack.pop()
                continue
            v = lowest(fr[0])
            fr[1], fr[2] = 1, v
            stack.append([fr[0] & adj[v], 0, -1, None])
        elif fr[1] == 1:
            fr[1], fr[3] = 2, result
            v = fr[2]
            stack.append([fr[0] & ~adj[v] & ~(1 << v), 0, -1, None])
        else:
            vb = 1 << fr[2]
            c1, i1 = fr[3]
            c2, i2 = result
            c1 |= vb
            i2 |= vb
            clique = c1 if popcount(c1) >= popcount(c2) else c2
            indep = i2 if popcount(i2) >= popcount(i1) else i1
            result = (clique, indep)
            stack.pop()
    return result


def clique_removal(adj: list[int], P: int) -> tuple[int, int]:
    """Repeat :func:`ramsey`, deleting each clique found; keep the best of both."""
    best_i = best_c = 0
    while P:
        c, i = ramsey(adj, P)
        if popcount(i) > popcount(best_i):
            best_i = i
        if popcount(c) > popcount(best_c):
            best_c = c
        P &= ~c
    return best_c, best_i


def maximum_clique(adj: list[int], P: int) -> int:
    """Bron-Kerbosch with Tomita pivoting, pruned to the maximum clique."""
    best = 0

    def expand(R: int, P: int, X: int) -> None:
        nonlocal best
        if not P:
            if not X and popcount(R) > popcount(best):
                best = R
            return
        if popcount(R) + popcount(P) <= popcount(best):
            return
        pivot, most = -1, -1
        for u in bits(P | X):
            c = popcount(P & adj[u])
            if c > most:
                pivot, most = u, c
        for v in bits(P & ~adj[pivot]):
            vb = 1 << v
            expand(R | vb, P & adj[v], X & adj[v])
            P &= ~vb
            X |= vb

    expand(0, P, 0)
    return best


def components(adj: list[int], P: int) -> list[int]:
    """Connected components of ``G[P]`` in order of their lowest vertex."""
    out = []
    while P:
        comp = frontier = P & -P
        while frontier:
            nb = 0
            for u in bits(frontier):
                nb |= adj[u]
            frontier = nb & P & ~comp
            comp |= frontier
        out.append(comp)
        P &= ~comp
    return out


def shortest_path(adj: list[int], src: int, dst: int, allowed: int) -> list[int] | None:
    """BFS path ``src..dst`` whose interior vertices all lie in ``allowed``."""
    parent = {src: src}
    frontier = [src]
    while frontier:
        nxt = []
        for u in frontier:
            if adj[u] >> dst & 1:
                parent[dst] = u
                path = [dst]
                while path[-1] != src:
                    path.append(parent[path[-1]])
                return path[::-1]
            for w in bits(adj[u] & allowed):
                if w not in parent:
                    parent[w] = u
                    nxt.append(w)
        frontier = nxt
    return None
