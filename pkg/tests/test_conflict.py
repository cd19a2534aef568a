from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conalign import (
    C4,
    ConflictType,
    ContractViolation,
    GenParams,
    build_conflict_graph,
    classify_conflict,
    conflicts,
    enumerate_c4s,
    generate,
    parse_instance,
    underlying_graph,
)
from conalign.constructions import chain

T = ConflictType


def c4s_by_pairs(inst):
    """Reference enumeration: any two sim edges ad, bc with ab in E1, cd in E2."""
    out = set()
    for (a, d), (b, c) in combinations(sorted(inst.sim), 2):
        for (p, s), (q, r) in (((a, d), (b, c)), ((b, c), (a, d))):
            if p < q and inst.g1.has_edge(p, q) and inst.g2.has_edge(r, s):
                out.add(C4(p, q, r, s))
    return out


def conflicts_by_scan(x, y):
    sx, sy = set(x.sim_edges), set(y.sim_edges)
    return any(
        e != f and (e[0] == f[0] or e[1] == f[1]) for e in sx for f in sy
    )


def test_single(single):
    assert enumerate_c4s(single) == [C4(0, 1, 0, 1)]
    assert enumerate_c4s(single)[0].label(single) == "(a,b,c,d)"


def test_no_sim():
    assert enumerate_c4s(parse_instance("g1 a b\ng2 c d")) == []


def test_chain2(chain2):
    xs = enumerate_c4s(chain2)
    assert len(xs) == 2
    assert set(xs) == c4s_by_pairs(chain2)
    assert conflicts(xs[0], xs[1])


def test_conflict_examples():
    # G1 vertices a..g mapped to 0.., only the sim edges matter
    a, b, c, d, e, f, g = range(7)
    assert conflicts(C4(a, b, c, d), C4(a, e, f, g))
    assert not conflicts(C4(0, 1, 0, 1), C4(2, 3, 2, 3))
    # sharing a sim edge alone is not a conflict
    assert not conflicts(C4(a, b, c, d), C4(a, e, f, d))
    assert not conflicts(C4(a, b, c, d), C4(a, b, c, d))


def test_classify_examples():
    # V1: a=0 b=1 p=2; V2: c=0 d=1 e=2 f=3
    ref = C4(0, 1, 0, 1)
    assert classify_conflict(ref, C4(0, 1, 2, 3)) is T.TYPE2
    assert classify_conflict(ref, C4(0, 1, 0, 2)) is T.TYPE3A
    assert classify_conflict(ref, C4(0, 1, 2, 1)) is T.TYPE3B
    assert classify_conflict(ref, C4(0, 2, 2, 3)) is T.TYPE1A
    assert classify_conflict(ref, C4(1, 2, 2, 3)) is T.TYPE1B
    assert classify_conflict(ref, C4(0, 2, 2, 3), m2=2) is T.UNCLASSIFIED
    assert T.TYPE1B.family == 1 and T.TYPE3A.family == 3
    with pytest.raises(ContractViolation):
        classify_conflict(ref, C4(2, 3, 2, 3))


def test_build_single(single):
    cg = build_conflict_graph(single)
    assert (cg.n, cg.m) == (1, 0)


@pytest.mark.parametrize("k", [1, 2, 3, 5, 8])
def test_chain_is_path(k):
    cg = build_conflict_graph(chain(k))
    assert cg.n == k
    assert cg.m == k - 1
    assert sorted(cg.degree(i) for i in range(k)) == sorted([1, 1] + [2] * (k - 2)) if k > 1 else [0]
    # conflicts only between consecutive c4s along the G1 path
    for i, j in cg.edges():
        x, y = cg.c4s[i], cg.c4s[j]
        assert len({x.a, x.b} & {y.a, y.b}) == 1


def test_m1_m2_one_edgeless():
    for seed in range(40):
        inst = generate(GenParams(n1=10, n2=10, p1=0.5, p2=0.5, m1_cap=1, m2_cap=1, seed=seed))
        assert build_conflict_graph(inst).m == 0


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 3), st.integers(1, 3))
def test_build_matches_pair_scan(seed, m1, m2):
    inst = generate(GenParams(n1=8, n2=8, p1=0.4, p2=0.4, m1_cap=m1, m2_cap=m2, seed=seed))
    cg = build_conflict_graph(inst)
    assert set(cg.c4s) == c4s_by_pairs(inst)
    assert list(cg.c4s) == sorted(cg.c4s)
    for i, j in combinations(range(cg.n), 2):
        assert cg.has_edge(i, j) == conflicts_by_scan(cg.c4s[i], cg.c4s[j])
        assert conflicts(cg.c4s[i], cg.c4s[j]) == conflicts(cg.c4s[j], cg.c4s[i])
    for i in range(cg.n):
        assert not cg.has_edge(i, i)
        cg.c4s[i].validate(inst)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 2))
def test_m2_one_type_facts(seed, m1):
    inst = generate(GenParams(n1=9, n2=12, p1=0.5, p2=0.4, m1_cap=m1, m2_cap=1, seed=seed))
    cg = build_conflict_graph(inst)
    # with m2 = 1 every G2 edge carries at most one c4
    assert cg.n <= len(inst.g2.edges)
    for ref in range(cg.n):
        kinds = [cg.conflict_type(ref, o) for o in cg.neighbors(ref)]
        assert T.UNCLASSIFIED not in kinds
        x = cg.c4s[ref]
        for o, kind in zip(cg.neighbors(ref), kinds):
            y = cg.c4s[o]
            shared1 = len({x.a, x.b} & {y.a, y.b})
            assert kind.family == (1 if shared1 == 1 else 2 if not {x.c, x.d} & {y.c, y.d} else 3)
        if m1 == 2:
            # at most one neighbour of each of Type2, Type3a, Type3b
            assert kinds.count(T.TYPE2) <= 1
            assert kinds.count(T.TYPE3A) <= 1
            assert kinds.count(T.TYPE3B) <= 1


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 4))
def test_type2_type3_sizes(seed, m1):
    # Type2 neighbours come from (m1-1)^2 sim-edge pairs, Type3 from 2(m1-1)
    inst = generate(GenParams(n1=8, n2=16, p1=0.5, p2=0.5, m1_cap=m1, m2_cap=1, seed=seed))
    cg = build_conflict_graph(inst)
    for ref in range(cg.n):
        kinds = [cg.conflict_type(ref, o) for o in cg.neighbors(ref)]
        assert kinds.count(T.TYPE2) <= (m1 - 1) ** 2
        assert kinds.count(T.TYPE3A) + kinds.count(T.TYPE3B) <= 2 * (m1 - 1)


def test_underlying_single(single):
    u = underlying_graph(build_conflict_graph(single))
    assert (u.v1, u.v2) == ((0, 1), (0, 1))
    assert len(u.e1) == len(u.e2) == 1 and len(u.sim) == 2


def test_underlying_drops_unused():
    inst = parse_instance("g1 a b\ng2 c d\nsim a d\nsim b c\nsim b d\ng1v z\nsim z c")
    u = underlying_graph(build_conflict_graph(inst))
    assert set(u.sim) == {(0, 1), (1, 0)}
    assert u.v1 == (0, 1)


def test_underlying_chain(chain2):
    u = underlying_graph(build_conflict_graph(chain2))
    assert len(u.v1) == 3 and len(u.v2) == 4
    assert set(u.e1) == chain2.g1.edges
    assert set(u.e2) == chain2.g2.edges
    assert set(u.sim) == chain2.sim


def test_dot(chain2):
    dot = build_conflict_graph(chain2).to_dot()
    assert dot.startswith("graph conflict {")
    assert '0 [label="0:(v0,v1,b1,a1)"]' in dot
    assert "0 -- 1" in dot
