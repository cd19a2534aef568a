"""Seeded random instances.

Randomness comes from SplitMix64 so corpora can be regenerated by any
implementation::

    state = (state + 0x9E3779B97F4A7C15) mod 2**64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2**64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2**64
    output z ^ (z >> 31)

Uniform floats are ``(next >> 11) * 2**-53``; ``below(n)`` rejects outputs
``>= 2**64 - (2**64 mod n)`` then returns ``x mod n``. The initial state is
the seed itself. Draws are consumed in this order:

1. G1: Erdos-Renyi over pairs (u, v), u < v, lexicographic, one float each;
   or, for a forest, for i = 1..n1-1 one float (attach iff < p1) and, when
   attaching, one ``below`` over the eligible earlier vertices.
2. G2: Erdos-Renyi as above.
3. S: a Fisher-Yates shuffle of all n1*n2 pairs (i from the end down to 1,
   swap with ``below(i + 1)``), then per pair one float (keep iff < p_sim)
   and acceptance subject to the caps.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterator

from .model import AlignmentInstance, format_instance

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def below(self, n: int) -> int:
        if n <= 0:
            raise ValueError("below() needs n >= 1")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n


@dataclass(frozen=True)
class GenParams:
    n1: int = 10
    n2: int = 10
    p1: float = 0.3
    p2: float = 0.3
    m1_cap: int = 2
    m2_cap: int = 1
    g1_acyclic: bool = False
    max_degree_cap: int | None = None
    seed: int = 0
    p_sim: float = 1.0
    sim_limit: int | None = None

    def __post_init__(self):
        for p in (self.p1, self.p2, self.p_sim):
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"probability {p} outside [0, 1]")
        if self.m1_cap < 1 or self.m2_cap < 1:
            raise ValueError("similarity caps must be >= 1")
        if self.n1 < 0 or self.n2 < 0:
            raise ValueError("vertex counts must be non-negative")
        if self.max_degree_cap is not None and self.max_degree_cap < 0:
            raise ValueError("max_degree_cap must be non-negative")


def _erdos_renyi(rng: SplitMix64, n: int, p: float, cap: int | None) -> list[tuple[int, int]]:
    deg = [0] * n
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p and (cap is None or (deg[u] < cap and deg[v] < cap)):
                edges.append((u, v))
                deg[u] += 1
                deg[v] += 1
    return edges


def _forest(rng: SplitMix64, n: int, p: float, cap: int | None) -> list[tuple[int, int]]:
    deg = [0] * n
    edges = []
    for i in range(1, n):
        if rng.random() >= p:
            continue
        eligible = [j for j in range(i) if cap is None or deg[j] < cap]
        if not eligible:
            continue
        j = eligible[rng.below(len(eligible))]
        edges.append((j, i))
        deg[i] += 1
        deg[j] += 1
    return edges


def generate(params: GenParams) -> AlignmentInstance:
    rng = SplitMix64(params.seed)
    cap = params.max_degree_cap
    if params.g1_acyclic:
        e1 = _forest(rng, params.n1, params.p1, cap)
    else:
        e1 = _erdos_renyi(rng, params.n1, params.p1, cap)
    e2 = _erdos_renyi(rng, params.n2, params.p2, cap)

    pairs = [(u, v) for u in range(params.n1) for v in range(params.n2)]
    for i in range(len(pairs) - 1, 0, -1):
        j = rng.below(i + 1)
        pairs[i], pairs[j] = pairs[j], pairs[i]
    deg1 = [0] * params.n1
    deg2 = [0] * params.n2
    sim = []
    for u, v in pairs:
        if params.sim_limit is not None and len(sim) >= params.sim_limit:
            break
        if rng.random() >= params.p_sim:
            continue
        if deg1[u] < params.m1_cap and deg2[v] < params.m2_cap:
            sim.append((u, v))
            deg1[u] += 1
            deg2[v] += 1
    return AlignmentInstance.build(params.n1, params.n2, e1, e2, sim)


def generate_text(params: GenParams) -> str:
    return format_instance(generate(params))


def corpus(params: GenParams, count: int, seed: int | None = None, nonempty: bool = False,
           max_tries: int = 100) -> Iterator[AlignmentInstance]:
    """``count`` instances from consecutive seeds starting at ``seed``.

    With ``nonempty`` an instance without any c4 is skipped and the next seed
    tried; more than ``max_tries`` consecutive empties raise ValueError.
    """
    from .conflict import enumerate_c4s

    s = params.seed if seed is None else seed
    made = misses = 0
    while made < count:
        inst = generate(replace(params, seed=s))
        s += 1
        if nonempty and not enumerate_c4s(inst):
            misses += 1
            if misses > max_tries:
                raise ValueError(f"{max_tries} consecutive seeds gave no c4; loosen the parameters")
            continue
        misses = 0
        made += 1
        yield inst
