"""Independent-set algorithms on the conflict graph.

Every solver returns a :class:`SolveResult` whose chosen c4s are pairwise
non-conflicting; the alignment is the union of their similarity edges.
The FPT searches return ``None`` when no independent set of size ``k``
exists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import _bitset as bs
from .conflict import ConflictGraph, ConflictType
from .errors import BudgetExceeded, ContractViolation, PreconditionError, StructuralViolation
from .model import Alignment, AlignmentInstance
from .oracle import make_alignment

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class SolveResult:
    chosen: tuple[int, ...]
    alignment: Alignment
    method: str
    certificate: dict = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.chosen)

    @property
    def conserved(self) -> int:
        return self.alignment.conserved


def check_independent(cg: ConflictGraph, chosen) -> None:
    chosen = sorted(set(chosen))
    masks = cg.masks
    mask = bs.to_mask(chosen)
    for i in chosen:
        if not 0 <= i < cg.n:
            raise ContractViolation(f"c4 index {i} out of range")
        if masks[i] & mask:
            j = bs.lowest(masks[i] & mask)
            raise ContractViolation(f"c4s {i} and {j} conflict")


def alignment_from_is(cg: ConflictGraph, chosen) -> Alignment:
    check_independent(cg, chosen)
    pairs = set()
    for i in chosen:
        pairs.update(cg.c4s[i].sim_edges)
    return make_alignment(cg.instance, pairs)


def _result(cg: ConflictGraph, chosen, method: str, **certificate) -> SolveResult:
    chosen = tuple(sorted(chosen))
    return SolveResult(chosen, alignment_from_is(cg, chosen), method, certificate)


def exact_mis(cg: ConflictGraph, budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Maximum independent set by branch and bound.

    Of all maximum sets the lexicographically least (by sorted index) is
    returned. Raises :class:`BudgetExceeded` (carrying the incumbent) if more
    than ``budget`` search nodes are needed.
    """
    best, nodes = bs.lex_least_mis(cg.masks, bs.full(cg.n), budget)
    return _result(cg, bs.bits(best), "exact", nodes=nodes)


def bounded_search_fpt(cg: ConflictGraph, k: int) -> SolveResult | None:
    """Independent set of exactly ``k`` c4s, or None if there is none.

    Search tree of depth k branching over the closed neighbourhood of a
    minimum-degree vertex: O(n (Delta+1)^k).
    """
    if k < 0:
        raise ContractViolation("k must be non-negative")
    found = bs.independent_set_of_size(cg.masks, bs.full(cg.n), k)
    if found is None:
        return None
    return _result(cg, bs.bits(found), "fpt", k=k)


def greedy_extend(cg: ConflictGraph, chosen) -> list[int]:
    """Grow ``chosen`` by min-degree greedy over the vertices it leaves free."""
    masks = cg.masks
    taken = bs.to_mask(chosen)
    free = bs.full(cg.n)
    for i in bs.bits(taken):
        free &= ~(masks[i] | (1 << i))
    return sorted(bs.bits(taken | bs.greedy_min_degree(masks, free)))


def _half_of_component(cg: ConflictGraph, comp: list[int]) -> list[int]:
    """An independent half of a P1, P2, P3 or C4 component (shape pre-checked)."""
    if len(comp) <= 2:
        return [comp[0]]
    masks = cg.masks
    members = bs.to_mask(comp)
    if len(comp) == 3:
        return [v for v in comp if bs.popcount(masks[v] & members) == 1]
    first = comp[0]
    opposite = next(v for v in comp if v != first and not masks[first] >> v & 1)
    return [first, opposite]


def _component_shape(cg: ConflictGraph, comp: list[int]) -> str | None:
    masks = cg.masks
    members = bs.to_mask(comp)
    degs = sorted(bs.popcount(masks[v] & members) for v in comp)
    size = len(comp)
    if size == 1:
        return "P1"
    if size == 2:
        return "P2"
    if size == 3 and degs == [1, 1, 2]:
        return "P3"
    if size == 4 and degs == [2, 2, 2, 2]:
        return "C4"
    return None


def chain_approx(inst: AlignmentInstance, cg: ConflictGraph, extend: bool = True) -> SolveResult:
    """Neighbourhood construction for m1 <= 2, m2 = 1.

    Around a maximum-degree c4 v, the Type1 neighbours induce only P1, P2,
    P3 and C4 components; half of each plus the Type2 neighbour is
    independent, giving at least ceil((Delta(C) - 2) / 2) c4s. With
    ``extend`` the set is then grown greedily over the rest of the graph.
    """
    if inst.m1 > 2 or inst.m2 > 1:
        raise PreconditionError(f"chain_approx needs m1 <= 2 and m2 = 1, got m1={inst.m1}, m2={inst.m2}")
    if cg.n == 0:
        return _result(cg, (), "chain", delta=0, bound=0, center=None)

    delta = cg.max_degree
    v = next(i for i in range(cg.n) if cg.degree(i) == delta)
    by_type: dict[ConflictType, list[int]] = {t: [] for t in ConflictType}
    for u in cg.neighbors(v):
        by_type[cg.conflict_type(v, u)].append(u)
    for t in (ConflictType.TYPE2, ConflictType.TYPE3A, ConflictType.TYPE3B):
        if len(by_type[t]) > 1:
            raise StructuralViolation(f"c4 {v} has {len(by_type[t])} {t.value} neighbours", (v, *by_type[t]))

    type1 = by_type[ConflictType.TYPE1A] + by_type[ConflictType.TYPE1B]
    chosen: list[int] = []
    shapes = []
    for comp_mask in bs.components(cg.masks, bs.to_mask(type1)):
        comp = list(bs.bits(comp_mask))
        shape = _component_shape(cg, comp)
        if shape is None:
            raise StructuralViolation(f"Type1 neighbours of c4 {v} induce a non P1/P2/P3/C4 component", tuple(comp))
        shapes.append(shape)
        chosen += _half_of_component(cg, comp)
    chosen += by_type[ConflictType.TYPE2]

    bound = max(0, math.ceil((delta - 2) / 2))
    if len(chosen) < bound:
        raise StructuralViolation(f"chain construction gave {len(chosen)} < {bound}", tuple(chosen))
    core = len(chosen)
    if extend:
        chosen = greedy_extend(cg, chosen)
    return _result(cg, chosen, "chain", delta=delta, bound=bound, center=v, core=core, shapes=tuple(shapes))


def ramsey_clique_removal(cg: ConflictGraph) -> tuple[SolveResult, tuple[int, ...]]:
    """Clique removal around the Ramsey split.

    Returns the best independent set and the largest clique met, with
    ``|I| * |C| >= log2(n)^2 / 4`` checked on the way out.
    """
    if cg.n == 0:
        return _result(cg, (), "ramsey", product=0, bound=0.0), ()
    clique, indep = bs.clique_removal(cg.masks, bs.full(cg.n))
    product = bs.popcount(clique) * bs.popcount(indep)
    bound = math.log2(cg.n) ** 2 / 4
    if product < bound:
        raise StructuralViolation(f"Ramsey product {product} below {bound:.3f}", tuple(bs.bits(indep)))
    res = _result(cg, bs.bits(indep), "ramsey", clique=tuple(bs.bits(clique)), product=product, bound=bound)
    return res, tuple(bs.bits(clique))


def ramsey_threshold(r: int, k: int, cap: int = 2**62) -> int:
    """Upper estimate binom(r+k-2, r-1) of R(r, k), saturating at ``cap``."""
    if r <= 1 or k <= 1:
        return 1
    top, j = r + k - 2, min(r - 1, k - 1)
    value = 1
    for i in range(1, j + 1):
        value = value * (top - j + i) // i
        if value >= cap:
            return cap
    return value


def kfree_fpt(cg: ConflictGraph, k: int, r: int) -> SolveResult | None:
    """Size-k independent set in a K_r-free conflict graph, or None.

    Graphs with at least binom(r+k-2, r-1) vertices always hold one, and the
    Ramsey split finds it directly; smaller graphs go to the bounded search.
    A clique of r vertices means the K_r-free premise was false and raises
    :class:`StructuralViolation`.
    """
    if k < 0 or r < 1:
        raise ContractViolation("need k >= 0 and r >= 1")
    if k == 0:
        return _result(cg, (), "kfree", k=0, r=r, route="trivial")
    threshold = ramsey_threshold(r, k)
    if cg.n >= threshold:
        clique, indep = bs.ramsey(cg.masks, bs.full(cg.n))
        if bs.popcount(clique) >= r:
            raise StructuralViolation(f"conflict graph contains K_{r}", tuple(bs.bits(clique)))
        if bs.popcount(indep) < k:
            raise StructuralViolation(f"Ramsey split returned |I|={bs.popcount(indep)} < {k} above threshold")
        picked = list(bs.bits(indep))[:k]
        return _result(cg, picked, "kfree", k=k, r=r, route="ramsey", threshold=threshold)
    found = bs.independent_set_of_size(cg.masks, bs.full(cg.n), k)
    if found is None:
        return None
    return _result(cg, bs.bits(found), "kfree", k=k, r=r, route="search", threshold=threshold)


def greedy_clawfree(cg: ConflictGraph) -> SolveResult:
    """Min-degree greedy (lowest index on ties).

    On a d-claw-free graph it is within a factor d-1 of optimum; conflict
    graphs with m2 = 1 are (2*Delta_min+2)-claw-free, so the certificate
    records ratio 2*Delta_min+1.
    """
    chosen = bs.greedy_min_degree(cg.masks, bs.full(cg.n))
    d = 2 * cg.instance.delta_min + 2
    return _result(cg, bs.bits(chosen), "greedy", claw_d=d, ratio=d - 1)


__all__ = [
    "BudgetExceeded",
    "SolveResult",
    "alignment_from_is",
    "bounded_search_fpt",
    "chain_approx",
    "check_independent",
    "exact_mis",
    "greedy_clawfree",
    "greedy_extend",
    "kfree_fpt",
    "ramsey_clique_removal",
    "ramsey_threshold",
]
