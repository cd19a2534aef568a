"""Structural checks on conflict graphs.

With m2 = 1 the conflict graph has bounded cliques and no large claws or
wheels. This script runs the full report on a generated instance, then
shows the hand-built instances that reach the limits.
"""

from conalign import GenParams, build_conflict_graph, check_all, generate, max_clique
from conalign import constructions
from conalign.structure import find_induced_wheel

inst = generate(GenParams(n1=12, n2=24, p1=0.5, p2=0.3, m1_cap=2, m2_cap=1, seed=7))
report = check_all(inst)
print(report.to_text())

print()
for m1 in (2, 3):
    cg = build_conflict_graph(constructions.clique_m1_squared(m1))
    size, witness = max_clique(cg)
    print(f"m1={m1}: clique of {size} c4s on one G1 edge (bound {m1 * m1})")

# With m1 = 3 a c4 can be the hub of an induced 5- or 6-wheel.
for k in (5, 6):
    w_inst = constructions.wheel_m1_3(k)
    cg = build_conflict_graph(w_inst)
    hub, rim = find_induced_wheel(cg, k_min=k, k_max=k)
    print(f"W{k}: hub {cg.c4s[hub].label(w_inst)}, rim {[cg.c4s[i].label(w_inst) for i in rim]}")
