import math
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conalign import (
    BudgetExceeded,
    ContractViolation,
    GenParams,
    PreconditionError,
    StructuralViolation,
    alignment_from_is,
    bounded_search_fpt,
    brute_force_best,
    build_conflict_graph,
    chain_approx,
    count_conserved,
    exact_mis,
    generate,
    greedy_clawfree,
    kfree_fpt,
    parse_instance,
    ramsey_clique_removal,
)
from conalign import constructions as cons
from conalign.generate import corpus
from conalign.graphs import is_clique, is_independent
from conalign.solvers import ramsey_threshold

SHARED_SIM = """\
g1 a b
g1 a e
g2 c d
g2 d f
sim a d
sim b c
sim e f
"""


def cg_of(inst):
    return build_conflict_graph(inst)


def alpha(cg):
    best = 0
    for r in range(cg.n + 1):
        if any(is_independent(cg, s) for s in combinations(range(cg.n), r)):
            best = r
        else:
            break
    return best


def test_alignment_from_is_chain(chain2):
    cg = cg_of(chain2)
    a = alignment_from_is(cg, [0])
    assert {(chain2.names1[u], chain2.names2[v]) for u, v in a.pairs} == {("v0", "a1"), ("v1", "b1")}
    assert a.conserved == 1
    assert alignment_from_is(cg, []).conserved == 0
    with pytest.raises(ContractViolation):
        alignment_from_is(cg, [0, 1])


def test_alignment_from_is_shared_sim_edge():
    inst = parse_instance(SHARED_SIM)
    cg = cg_of(inst)
    assert (cg.n, cg.m) == (2, 0)
    a = alignment_from_is(cg, [0, 1])
    assert len(a.pairs) == 3
    assert a.conserved == 2 == count_conserved(inst, a.pairs)


def test_exact_edgeless():
    res = exact_mis(cg_of(cons.disjoint(16)))
    assert res.size == 16
    assert res.conserved == 16
    assert res.method == "exact"


def test_exact_c5():
    cg = cg_of(cons.cycle5())
    assert all(cg.degree(i) == 2 for i in range(5))
    assert exact_mis(cg).size == 2


def test_exact_budget():
    cg = cg_of(generate(GenParams(n1=14, n2=14, p1=0.5, p2=0.5, m1_cap=3, m2_cap=2, seed=7)))
    assert cg.n > 20
    with pytest.raises(BudgetExceeded) as exc:
        exact_mis(cg, budget=1)
    assert is_independent(cg, exc.value.best)


def test_exact_matches_oracle_defaults():
    for inst in corpus(GenParams(), 50, seed=100):
        assert exact_mis(cg_of(inst)).conserved == brute_force_best(inst).conserved


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_exact_monotone_in_sim(seed):
    inst = generate(GenParams(n1=7, n2=7, p1=0.4, p2=0.4, m1_cap=3, m2_cap=2, seed=seed))
    base = exact_mis(cg_of(inst)).size
    extra = [(u, v) for u in range(7) for v in range(7) if (u, v) not in inst.sim]
    if extra:
        bigger = type(inst).build(7, 7, inst.g1.edges, inst.g2.edges, [*inst.sim, extra[seed % len(extra)]])
        assert exact_mis(cg_of(bigger)).size >= base


def test_fpt_c5():
    cg = cg_of(cons.cycle5())
    res = bounded_search_fpt(cg, 2)
    assert res is not None and res.size == 2 and is_independent(cg, res.chosen)
    assert bounded_search_fpt(cg, 3) is None
    assert bounded_search_fpt(cg, 0).size == 0


def test_chain_approx_chain3(chain3):
    cg = cg_of(chain3)
    assert chain_approx(chain3, cg, extend=False).size >= 1
    res = chain_approx(chain3, cg)
    assert res.chosen == (0, 2)
    assert res.size == exact_mis(cg).size


def test_chain_approx_single(single):
    res = chain_approx(single, cg_of(single))
    assert res.chosen == (0,)
    assert res.conserved == 1
    assert res.certificate["bound"] == 0


def test_chain_approx_delta4():
    for inst in corpus(GenParams(m1_cap=2, m2_cap=1), 200, seed=1):
        cg = cg_of(inst)
        if cg.max_degree == 4:
            break
    else:
        pytest.fail("no instance with max degree 4")
    res = chain_approx(inst, cg, extend=False)
    assert res.size >= 1 == res.certificate["bound"]
    assert set(res.certificate["shapes"]) <= {"P1", "P2", "P3", "C4"}


def test_chain_approx_precondition():
    with pytest.raises(PreconditionError):
        inst = cons.clique_m1_squared(3)
        chain_approx(inst, cg_of(inst))


def test_ramsey_edgeless():
    res, clique = ramsey_clique_removal(cg_of(cons.disjoint(16)))
    assert res.size == 16 and len(clique) == 1


def test_ramsey_complete():
    cg = cg_of(cons.complete(8))
    assert cg.m == 28
    res, clique = ramsey_clique_removal(cg)
    assert res.size == 1 and len(clique) == 8
    assert res.size * len(clique) >= math.log2(8) ** 2 / 4


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 4))
def test_ramsey_product(seed, m1):
    cg = cg_of(generate(GenParams(n1=12, n2=20, p1=0.4, p2=0.3, m1_cap=m1, m2_cap=1, seed=seed)))
    res, clique = ramsey_clique_removal(cg)
    assert is_independent(cg, res.chosen) and is_clique(cg, clique)
    if cg.n:
        assert res.size * len(clique) >= math.log2(cg.n) ** 2 / 4


def test_ramsey_threshold():
    assert ramsey_threshold(3, 3) == 6
    assert ramsey_threshold(2, 5) == 5
    assert ramsey_threshold(5, 1) == 1
    assert ramsey_threshold(200, 200) == 2**62


def test_kfree_edgeless():
    inst = cons.disjoint(10)
    res = kfree_fpt(cg_of(inst), 10, 2)
    assert res.size == 10
    assert res.certificate["route"] == "ramsey"


def test_kfree_c5():
    assert kfree_fpt(cg_of(cons.cycle5()), 3, 3) is None
    assert kfree_fpt(cg_of(cons.cycle5()), 2, 3).size == 2


def test_kfree_clique_raises():
    cg = cg_of(cons.complete(8))
    with pytest.raises(StructuralViolation) as exc:
        kfree_fpt(cg, 1, 3)
    assert len(exc.value.witness) >= 3


def test_greedy_edgeless_and_star():
    assert greedy_clawfree(cg_of(cons.disjoint(6))).size == 6
    cg = cg_of(cons.star(5))
    assert sorted(cg.degree(i) for i in range(cg.n)) == [1, 1, 1, 1, 1, 5]
    res = greedy_clawfree(cg)
    assert res.size == 5
    assert cg.degree(res.chosen[0]) == 1


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 3))
def test_greedy_ratio(seed, m1):
    inst = generate(GenParams(n1=10, n2=16, p1=0.4, p2=0.3, m1_cap=m1, m2_cap=1, seed=seed))
    cg = cg_of(inst)
    res = greedy_clawfree(cg)
    opt = exact_mis(cg).size
    assert res.size * (2 * inst.delta_min + 1) >= opt
    assert res.certificate["ratio"] == 2 * inst.delta_min + 1


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_solvers_agree_with_enumeration(seed):
    inst = generate(GenParams(n1=8, n2=8, p1=0.4, p2=0.4, m1_cap=2, m2_cap=2, seed=seed))
    cg = cg_of(inst)
    if cg.n > 14:
        return
    a = alpha(cg)
    assert exact_mis(cg).size == a
    assert bounded_search_fpt(cg, a) is not None
    assert bounded_search_fpt(cg, a + 1) is None
