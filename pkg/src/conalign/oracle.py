"""Ground truth: conserved-edge counting and exhaustive search over matchings.

Nothing here touches c4s or conflict graphs, so it can be used to check them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import ContractViolation, OracleLimitExceeded
from .model import Alignment, AlignmentInstance, Edge


@dataclass(frozen=True)
class OracleLimit:
    max_sim_edges: int = 22

    def __post_init__(self):
        if self.max_sim_edges < 1:
            raise ValueError("max_sim_edges must be positive")


def _check_matching(inst: AlignmentInstance, pairs: Iterable[Edge]) -> list[Edge]:
    pairs = sorted(set(pairs))
    used1: set[int] = set()
    used2: set[int] = set()
    for u, v in pairs:
        if (u, v) not in inst.sim:
            raise ContractViolation(f"pair ({u}, {v}) is not a similarity edge")
        if u in used1 or v in used2:
            raise ContractViolation("pairs do not form a matching")
        used1.add(u)
        used2.add(v)
    return pairs


def count_conserved(inst: AlignmentInstance, pairs: Iterable[Edge]) -> int:
    """Number of G1 edges whose endpoints are mapped onto a G2 edge."""
    image = dict(_check_matching(inst, pairs))
    g2 = inst.g2
    return sum(
        1
        for u, v in inst.g1.edges
        if u in image and v in image and g2.has_edge(image[u], image[v])
    )


def make_alignment(inst: AlignmentInstance, pairs: Iterable[Edge]) -> Alignment:
    pairs = frozenset(pairs)
    return Alignment(pairs, count_conserved(inst, pairs))


def brute_force_best(inst: AlignmentInstance, limit: OracleLimit = OracleLimit()) -> Alignment:
    """Exact optimum by enumerating every matching of the similarity graph.

    Ties are broken towards the lexicographically smallest sorted pair list.
    """
    edges = sorted(inst.sim)
    if len(edges) > limit.max_sim_edges:
        raise OracleLimitExceeded(
            f"{len(edges)} similarity edges exceed oracle limit {limit.max_sim_edges}"
        )
    g1, g2 = inst.g1, inst.g2
    n = len(edges)
    image: dict[int, int] = {}
    used2: set[int] = set()
    chosen: list[Edge] = []
    best_count = -1
    best_pairs: tuple[Edge, ...] = ()

    # Upper bound on what edges i.. can still add: each new pair gains at most
    # its G1 degree, so suffix sums of per-edge degrees bound the remainder.
    gain_cap = [g1.degree(u) for u, _ in edges]
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + gain_cap[i]

    def search(i: int, count: int) -> None:
        nonlocal best_count, best_pairs
        if count + suffix[i] < best_count:
            return
        if i == n:
            cand = tuple(chosen)
            if count > best_count or (count == best_count and cand < best_pairs):
                best_count, best_pairs = count, cand
            return
        u, v = edges[i]
        if u not in image and v not in used2:
            gain = sum(1 for w in g1.neighbors(u) if w in image and g2.has_edge(image[w], v))
            image[u] = v
            used2.add(v)
            chosen.append((u, v))
            search(i + 1, count + gain)
            chosen.pop()
            used2.discard(v)
            del image[u]
        search(i + 1, count)

    search(0, 0)
    return Alignment(frozenset(best_pairs), best_count)
