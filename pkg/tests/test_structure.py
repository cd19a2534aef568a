import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conalign import (
    GenParams,
    build_conflict_graph,
    check_all,
    degree_bound,
    find_claw,
    find_hole,
    find_induced_fan,
    find_induced_wheel,
    generate,
    instance_stats,
    is_weakly_triangulated,
    max_clique,
    parse_instance,
)
from conalign import constructions as cons
from conalign import graphs as gr
from conalign.structure import DetectorCapExceeded, find_antihole


def chordal(rng: random.Random, n: int) -> list[set[int]]:
    """Each new vertex attaches to a clique of earlier ones."""
    adj: list[set[int]] = [set() for _ in range(n)]
    for i in range(1, n):
        v = rng.randrange(i)
        clique = {v}
        for u in rng.sample(range(i), i):
            if u not in clique and all(u in adj[w] for w in clique) and rng.random() < 0.7:
                clique.add(u)
        for u in clique:
            adj[i].add(u)
            adj[u].add(i)
    return adj


def test_max_clique_examples():
    assert max_clique(gr.empty(0))[0] == 0
    assert max_clique(gr.empty(4))[0] == 1
    size, w = max_clique(gr.complete(5))
    assert size == 5 and gr.is_clique(gr.complete(5), w)


@pytest.mark.parametrize("m1", [2, 3])
def test_max_clique_construction(m1):
    inst = cons.clique_m1_squared(m1)
    size, w = max_clique(build_conflict_graph(inst))
    assert size == m1 * m1 == inst.m1 ** 2
    assert inst.m2 == 1


def test_hole_examples():
    w = find_hole(gr.cycle(5))
    assert len(w) == 5 and gr.is_induced_cycle(gr.cycle(5), w)
    assert find_hole(gr.cycle(4)) is None
    assert find_hole(gr.wheel(5)) is not None
    assert find_hole(gr.complete(6)) is None
    assert find_hole(gr.cycle(9), max_len=8) is None
    assert len(find_hole(gr.cycle(9), max_len=9)) == 9


def test_hole_cap():
    with pytest.raises(DetectorCapExceeded):
        find_hole(gr.empty(10), cap=5)


@pytest.mark.parametrize("seed", range(20))
def test_chordal_has_no_hole(seed):
    g = chordal(random.Random(seed), 25)
    assert find_hole(g, min_len=4) is None


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(5, 9))
def test_hole_witness_valid(seed, n):
    rng = random.Random(seed)
    g = [set() for _ in range(n)]
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.35:
                g[u].add(v)
                g[v].add(u)
    w = find_hole(g)
    if w is not None:
        assert len(w) >= 5 and gr.is_induced_cycle(g, w)
    else:
        # reference: no induced cycle of length >= 5 over all vertex orders
        from itertools import combinations, permutations

        for k in range(5, n + 1):
            for sub in combinations(range(n), k):
                first = sub[0]
                for rest in permutations(sub[1:]):
                    assert not gr.is_induced_cycle(g, (first, *rest))


def test_weak_triangulation_examples():
    assert is_weakly_triangulated(gr.path(4))
    wt = is_weakly_triangulated(gr.cycle(6))
    assert not wt and wt.hole is not None
    wt = is_weakly_triangulated(gr.complement(gr.cycle(6)))
    assert not wt and wt.hole is None and wt.antihole is not None
    assert gr.is_induced_cycle(gr.cycle(6), find_antihole(gr.complement(gr.cycle(6))))


def test_wheel_examples():
    hub, rim = find_induced_wheel(gr.wheel(4), k_min=4)
    assert hub == 0 and gr.is_wheel(gr.wheel(4), hub, rim)
    assert find_induced_wheel(gr.wheel(4), k_min=5) is None
    assert find_induced_wheel(gr.wheel(8), k_min=5, k_max=7) is None
    assert len(find_induced_wheel(gr.wheel(8), k_min=7, k_max=10)[1]) == 8


@pytest.mark.parametrize("k", [5, 6])
def test_wheel_m1_3(k):
    inst = cons.wheel_m1_3(k)
    assert (inst.m1, inst.m2) == (3, 1)
    cg = build_conflict_graph(inst)
    hub, rim = find_induced_wheel(cg, k_min=k, k_max=k)
    assert gr.is_wheel(cg, hub, rim)
    assert cg.c4s[hub].label(inst) == "(a,b,c,d)"


def test_fan():
    g = gr.from_edges(6, [(0, i) for i in range(1, 6)] + [(i, i + 1) for i in range(1, 5)])
    hub, spine = find_induced_fan(g, 5)
    assert hub == 0 and gr.is_fan(g, hub, spine)
    assert find_induced_fan(g, 6) is None


def test_claw_examples():
    center, talons = find_claw(gr.star(3), 3)
    assert center == 0 and gr.is_claw(gr.star(3), center, talons)
    assert find_claw(gr.complete(3), 2) is None
    assert find_claw(gr.star(3), 4) is None


def test_degree_bound_examples():
    assert degree_bound(parse_instance("g1 a b\ng1 b c\ng2 x y\nsim a x\nsim b y")) == 0
    inst = parse_instance("g1 a b\ng1 b c\ng2 x y\ng2 y z\nsim a x\nsim a y\nsim b z")
    assert instance_stats(inst)[:4] == (2, 2, 2, 1)
    d1 = d2 = 2
    m1, m2 = 2, 1
    expected = (
        2 * d1 * m1 ** 2 + 2 * d2 * m2 ** 2 - 2 * d1 * m1 - 2 * d2 * m2
        - m1 ** 2 - m2 ** 2 + 2 * m1 + 2 * m2 - 2
    )
    assert degree_bound(inst) == expected == 7
    assert degree_bound(parse_instance("g1v a\ng2 x y\nsim a x")) == 0


def test_degree_bound_tight_cases_hold():
    for seed in range(200):
        inst = generate(GenParams(n1=12, n2=12, p1=0.4, p2=0.4, m1_cap=2, m2_cap=1, max_degree_cap=2, seed=seed))
        cg = build_conflict_graph(inst)
        assert cg.max_degree <= degree_bound(inst)
        if instance_stats(inst)[:4] == (2, 2, 2, 1):
            assert cg.max_degree <= 7


def test_check_all_single(single):
    rep = check_all(single)
    assert rep.ok
    assert {v.name for v in rep.verdicts} >= {"degree_bound", "no_claw", "weakly_triangulated"}
    kv = rep.to_kv().splitlines()
    assert "n=1" in kv and "violations=0" in kv
    assert rep.to_text().endswith("violations: 0")


def test_check_all_chain(chain3):
    rep = check_all(chain3)
    assert rep.ok
    assert (rep.n, rep.m, rep.max_degree) == (3, 2, 2)


def test_check_all_m2_gt_1():
    rep = check_all(parse_instance("g1 a b\ng2 c d\nsim a d\nsim b c\nsim a c"))
    assert [v.status for v in rep.verdicts] == ["pass", "skipped"]


def test_check_all_acyclic_generated():
    for seed in range(20):
        inst = generate(GenParams(n1=12, n2=24, p1=0.9, p2=0.3, m1_cap=3, g1_acyclic=True, seed=seed))
        verdict = {v.name: v.status for v in check_all(inst).verdicts}
        assert verdict["weakly_triangulated"] == "pass"


def test_bug_report_has_witness():
    # no real violation exists, so mark one verdict failed to see the format
    inst = cons.wheel_m1_3(5)
    rep = check_all(inst)
    assert rep.ok
    rep.verdicts[0].status = "fail"
    rep.verdicts[0].witness = (1, 2)
    text = rep.bug_report()
    assert text.startswith("# degree_bound")
    assert "witness=[1, 2]" in text
    assert parse_instance(text.split("\n", 1)[1]) == inst
