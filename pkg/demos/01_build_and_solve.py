"""Build a small instance by hand, look at its conflict graph, and solve it.

Run with ``python demos/01_build_and_solve.py``.
"""

from conalign import (
    brute_force_best,
    build_conflict_graph,
    chain_approx,
    exact_mis,
    parse_instance,
    serialize_alignment,
)

# G1 is a path v0-v1-v2-v3, G2 is three disjoint edges, and each G1 edge can
# be matched to exactly one G2 edge. Neighbouring c4s share a G1 vertex with
# different partners, so they cannot both be realised.
TEXT = """\
g1 v0 v1
g1 v1 v2
g1 v2 v3
g2 a1 b1
g2 a2 b2
g2 a3 b3
sim v0 a1
sim v1 b1
sim v1 a2
sim v2 b2
sim v2 a3
sim v3 b3
"""

inst = parse_instance(TEXT)
cg = build_conflict_graph(inst)
print(f"{cg.n} c4s, {cg.m} conflicts")
for i, x in enumerate(cg.c4s):
    print(f"  c4 {i}: {x.label(inst)}  conflicts with {list(cg.neighbors(i))}")

# The conflict graph is a path of three vertices: the two ends can coexist.
best = exact_mis(cg)
print("\nexact:")
print(serialize_alignment(best.alignment, inst))

# The brute-force oracle searches matchings directly and must agree.
assert brute_force_best(inst).conserved == best.conserved

approx = chain_approx(inst, cg)
print(f"\nchain construction chose {approx.chosen} (guarantee {approx.certificate['bound']})")
print("\nDOT for graphviz:")
print(cg.to_dot())
