"""Compare the solvers on a batch of random m2 = 1 instances.

Prints the exact optimum next to the greedy, Ramsey and chain answers,
and the bound each one promises.
"""

import math

from conalign import (
    GenParams,
    build_conflict_graph,
    chain_approx,
    corpus,
    exact_mis,
    greedy_clawfree,
    kfree_fpt,
    ramsey_clique_removal,
)

params = GenParams(n1=12, n2=24, p1=0.5, p2=0.3, m1_cap=2, m2_cap=1)
print(f"{'seed':>4} {'n':>4} {'Delta':>5} {'exact':>5} {'greedy':>6} {'ramsey':>6} {'chain':>5} {'chain>=':>7}")
for seed, inst in enumerate(corpus(params, 10, seed=20, nonempty=True), start=20):
    cg = build_conflict_graph(inst)
    opt = exact_mis(cg).size
    greedy = greedy_clawfree(cg)
    ram, clique = ramsey_clique_removal(cg)
    chain = chain_approx(inst, cg, extend=False)
    assert greedy.size * greedy.certificate["ratio"] >= opt
    assert ram.size * len(clique) >= math.log2(cg.n) ** 2 / 4
    print(f"{seed:>4} {cg.n:>4} {cg.max_degree:>5} {opt:>5} {greedy.size:>6} {ram.size:>6} "
          f"{chain.size:>5} {chain.certificate['bound']:>7}")

# The decision version: an independent set of k c4s, using the K_r-free route.
inst = next(corpus(params, 1, seed=20, nonempty=True))
cg = build_conflict_graph(inst)
k = exact_mis(cg).size
for kk in (k, k + 1):
    res = kfree_fpt(cg, kk, inst.m1 ** 2 + 1)
    print(f"k={kk}: {'found ' + str(res.chosen) if res else 'none'}")
