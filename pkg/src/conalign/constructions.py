"""Hand-built instances with known conflict-graph structure."""

from __future__ import annotations

from .model import AlignmentInstance, parse_instance

SINGLE_C4 = """\
g1 a b
g2 c d
sim a d
sim b c
"""

# m1 = 3, m2 = 1. The c4 abcd is the hub of an induced W5; found by seeded
# search (generator seed 0, n1=12, n2=36, p1=0.3, p2=0.15, caps 3/1) and cut
# down to the six c4s of the wheel.
W5_M1_3 = """\
g1 a e
g1 a f
g1 a b
g1 e b
g1 f b
g2 p r
g2 c d
g2 q r
g2 s v
g2 t v
g2 u w
sim a d
sim a t
sim a w
sim e p
sim e v
sim f q
sim f u
sim b c
sim b r
sim b s
"""

# Same origin; the hub abcd carries an induced W6.
W6_M1_3 = """\
g1 a e
g1 a f
g1 a b
g1 a g
g1 e b
g1 f b
g2 p r
g2 c d
g2 q r
g2 s w
g2 t u
g2 v x
g2 w x
sim a d
sim a u
sim a x
sim e p
sim e w
sim f q
sim f v
sim b c
sim b r
sim b s
sim g t
"""

# m1 = 2, m2 = 1; the five c4s conflict in a 5-cycle. Found by seeded search
# (seed 59075, n1=7, n2=8, p1=p2=0.4, caps 2/1, p_sim=0.6), restricted to C_U.
C5_M1_2 = """\
g1 u0 u1
g1 u1 u3
g1 u1 u6
g1 u3 u6
g2 v0 v7
g2 v1 v2
g2 v1 v7
g2 v2 v3
g2 v4 v5
sim u0 v5
sim u1 v1
sim u1 v4
sim u3 v0
sim u3 v2
sim u6 v3
sim u6 v7
"""


def single_c4() -> AlignmentInstance:
    return parse_instance(SINGLE_C4)


def chain(k: int) -> AlignmentInstance:
    """k c4s in chain configuration; the conflict graph is the path P_k.

    G1 is the path v0-...-vk, G2 has edges ai-bi, and c4 i is
    (v{i-1}, vi, bi, ai).
    """
    lines = [f"g1 v{i - 1} v{i}" for i in range(1, k + 1)]
    lines += [f"g2 a{i} b{i}" for i in range(1, k + 1)]
    for i in range(1, k + 1):
        lines += [f"sim v{i - 1} a{i}", f"sim v{i} b{i}"]
    return parse_instance("\n".join(lines))


def clique_m1_squared(m1: int) -> AlignmentInstance:
    """Every c4 shares the G1 edge ab, so the conflict graph is K_{m1^2}.

    a has sim partners x1..x_m1, b has y1..y_m1, and G2 is the complete
    bipartite graph between the xs and the ys; m2 = 1.
    """
    lines = ["g1 a b"]
    lines += [f"g2 x{i} y{j}" for i in range(1, m1 + 1) for j in range(1, m1 + 1)]
    lines += [f"sim a x{i}" for i in range(1, m1 + 1)]
    lines += [f"sim b y{j}" for j in range(1, m1 + 1)]
    return parse_instance("\n".join(lines))


def wheel_m1_3(k: int) -> AlignmentInstance:
    if k == 5:
        return parse_instance(W5_M1_3)
    if k == 6:
        return parse_instance(W6_M1_3)
    raise ValueError("only W5 and W6 constructions are available")


def cycle5() -> AlignmentInstance:
    return parse_instance(C5_M1_2)


def disjoint(n: int) -> AlignmentInstance:
    """n vertex-disjoint c4s; m1 = m2 = 1 and the conflict graph is edgeless."""
    lines = []
    for i in range(n):
        lines += [f"g1 a{i} b{i}", f"g2 c{i} d{i}", f"sim a{i} d{i}", f"sim b{i} c{i}"]
    return parse_instance("\n".join(lines))


def complete(n: int) -> AlignmentInstance:
    """n c4s on one G1 edge ab, pairwise conflicting: the conflict graph is K_n.

    Uses the K_{m1^2} construction with m1 = ceil(sqrt(n)) and drops G2 edges
    until n c4s remain.
    """
    m1 = 1
    while m1 * m1 < n:
        m1 += 1
    g2 = [(i, j) for i in range(1, m1 + 1) for j in range(1, m1 + 1)][:n]
    lines = ["g1 a b"] + [f"g2 x{i} y{j}" for i, j in g2]
    lines += [f"sim a x{i}" for i in range(1, m1 + 1)]
    lines += [f"sim b y{j}" for j in range(1, m1 + 1)]
    return parse_instance("\n".join(lines))


def star(leaves: int) -> AlignmentInstance:
    """Conflict graph K_{1,leaves}; m1 = 2, m2 = 1.

    The centre is abcd. Leaf i is (a, pi, gi, f): it shares the sim edge af
    with every other leaf, so leaves never conflict, while af and ad collide
    at a.
    """
    lines = ["g1 a b", "g2 c d", "sim a d", "sim b c", "sim a f"]
    for i in range(leaves):
        lines += [f"g1 a p{i}", f"g2 f g{i}", f"sim p{i} g{i}"]
    return parse_instance("\n".join(lines))
