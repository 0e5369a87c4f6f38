"""String C-group certification and the PSL(2,p) involution pipelines."""

import random

import pytest

from polyreal.errors import (
    CrossCheckFailed,
    InvalidParams,
    NoMatch,
    NotPrime,
    PrimeTooLarge,
    RankTooLarge,
)
from polyreal.groups import Permutation, enumerate_group, symmetric_group
from polyreal.psl2 import (
    PSLParams,
    counterexample_pipeline,
    find_ab,
    generation_check,
    lemma_generators,
    moebius_permutation,
    multiplicative_order,
    psl_group,
    psl_order,
    psl_search,
    weil_constituent_check,
)
from polyreal.stringc import (
    MAX_RANK,
    StringCCandidate,
    candidate_report,
    verify_string_cgroup,
)


def test_dihedral_reflections_pass():
    r1 = Permutation.from_cycles(5, [[1, 4], [2, 3]])
    r2 = Permutation.from_cycles(5, [[0, 1], [2, 4]])
    G = enumerate_group([r1, r2])
    assert G.order == 10
    rep = verify_string_cgroup(G, G.generator_indices)
    assert rep.passed
    assert rep.schlafli == (5,)
    assert rep.to_dict()["passed"] is True


def test_noncommuting_far_pair_fails_honestly():
    G = symmetric_group(4)
    idx = [
        G.index_of(Permutation.from_cycles(4, [[0, 1]])),
        G.index_of(Permutation.from_cycles(4, [[1, 2]])),
        G.index_of(Permutation.from_cycles(4, [[1, 3]])),
    ]
    rep = candidate_report(StringCCandidate(G, tuple(idx)))
    assert rep.involutions
    assert not rep.string_condition
    assert not rep.passed


def test_rank_cap():
    # 7 disjoint transpositions: involutions, but one past the cap
    gens = [Permutation.from_cycles(14, [[2 * i, 2 * i + 1]]) for i in range(7)]
    G = enumerate_group(gens)
    assert G.order == 2 ** 7
    assert MAX_RANK == 6
    with pytest.raises(RankTooLarge):
        verify_string_cgroup(G, G.generator_indices)


@pytest.mark.parametrize("p,ab", [(3, (1, 1)), (7, (2, 3)), (13, (3, 4)),
                                  (19, (1, 6)), (43, (1, 16))])
def test_find_ab(p, ab):
    a, b = find_ab(p)
    assert (a, b) == ab
    assert (a * a + b * b) % p == p - 1


def test_param_validation():
    with pytest.raises(NotPrime):
        PSLParams(9, 2, 1, 1)
    for bad_y in (0, 1, 6):
        with pytest.raises(InvalidParams):
            PSLParams(7, bad_y, 2, 3)
    with pytest.raises(InvalidParams):
        PSLParams(7, 2, 0, 3)
    with pytest.raises(InvalidParams):
        PSLParams(7, 2, 1, 1)
    with pytest.raises(NotPrime):
        psl_group(9)
    with pytest.raises(PrimeTooLarge):
        psl_group(53)
    with pytest.raises(InvalidParams):
        moebius_permutation(7, (1, 2, 2, 4))
    with pytest.raises(InvalidParams):
        multiplicative_order(0, 7)
    with pytest.raises(InvalidParams):
        weil_constituent_check(13)
    with pytest.raises(InvalidParams):
        counterexample_pipeline(13, 2)
    with pytest.raises(InvalidParams):
        counterexample_pipeline(19, 2, stabilizer="s0,s2")
    # the <s0,s1> route insists on y of multiplicative order 7
    with pytest.raises(InvalidParams):
        counterexample_pipeline(43, 2, stabilizer="s0,s1")


def test_string_c_holds_for_every_admissible_y():
    cases = {7: None, 11: None, 19: (2, 3, 5, 10)}
    for p, sample in cases.items():
        a, b = find_ab(p)
        G = psl_group(p)
        ys = sample if sample else [y for y in range(2, p - 1)]
        for y in ys:
            lg = lemma_generators(PSLParams(p, y, a, b))
            idx = [G.index_of(s) for s in (lg.s0, lg.s1, lg.s2)]
            rep = verify_string_cgroup(G, idx)
            assert rep.passed, (p, y)
            assert len(rep.schlafli) == 2


def test_string_order_matches_diagonal_order():
    # m0*m1 is diag(-1/y, -y), so ord(s0*s1) is the least k with (-y)^k = +-1
    p = 11
    a, b = find_ab(p)
    rng = random.Random(20240817)
    for _ in range(20):
        y = rng.randrange(2, p - 1)
        lg = lemma_generators(PSLParams(p, y, a, b))
        k = 1
        while pow(p - y, k, p) not in (1, p - 1):
            k += 1
        assert (lg.s0 * lg.s1).order() == k


def test_generation_check_p13():
    a, b = find_ab(13)
    lg = lemma_generators(PSLParams(13, 3, a, b))
    res = generation_check(13, lg.s0, lg.s1, lg.s2)
    assert bool(res) and res.generates
    assert res.order == res.expected == psl_order(13) == 1092
    assert (res.order_s0s1, res.order_s1s2) == (3, 13)
    assert res.hypothesis


@pytest.mark.parametrize("p,degree", [(7, 3), (11, 5), (19, 9), (23, 11)])
def test_weil_pair(p, degree, cache):
    rep = weil_constituent_check(p, cache_dir=cache)
    assert rep.degree == degree == (p - 1) // 2
    assert rep.row != rep.conjugate_row
    assert len(rep.order_p_classes) == 2
    d = rep.to_dict()
    assert d["degree"] == degree and len(d["order_p_classes"]) == 2


def test_pipeline_p19(cache):
    rep = counterexample_pipeline(19, 2, stabilizer="s1,s2", a=8, b=7,
                                  cache_dir=cache)
    assert rep == {
        "p": 19,
        "y": 2,
        "a": 8,
        "b": 7,
        "stabilizer": "s1,s2",
        "stabilizer_order": 6,
        "points": 570,
        "schlafli": [9, 3],
        "string_c": True,
        "generates": True,
        "hypothesis_ge6": True,
        "weil": {"degree": 9, "multiplicity": 2},
        "lower_bound": "2/3",
    }


def test_search_rows():
    rows = psl_search(max_p=13)
    by_p = {r["p"]: r for r in rows}
    assert set(by_p) == {3, 5, 7, 11, 13}
    assert by_p[3]["order3_y"] is None
    assert by_p[5]["order3_y"] is None
    assert by_p[11]["order3_y"] is None
    assert by_p[7]["order3_y"] == 2 and by_p[7]["generates"] is False
    assert by_p[13]["order3_y"] == 3 and by_p[13]["generates"] is True


def test_multiplicative_order_small():
    assert multiplicative_order(2, 7) == 3
    assert multiplicative_order(3, 7) == 6
    assert multiplicative_order(4, 43) == 7
    assert multiplicative_order(1, 5) == 1
