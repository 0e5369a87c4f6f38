import numpy as np
import pytest

from polyreal.errors import CapExceeded, DegreeMismatch
from polyreal.groups import (Permutation, alternating_group, cyclic_group,
                             dihedral_group, double_cosets, enumerate_group,
                             quaternion_group, sl2_group, subgroup_generated,
                             symmetric_group)


def test_permutation_algebra():
    a = Permutation.from_cycles(4, [[0, 1, 2]])
    b = Permutation.from_cycles(4, [[2, 3]])
    assert (a * b)(0) == b(a(0))
    assert a * a.inverse() == Permutation.identity(4)
    assert a.order() == 3 and b.order() == 2
    assert a.cycles() == [(0, 1, 2)]
    with pytest.raises(DegreeMismatch):
        a * Permutation.identity(5)


def test_constructor_orders():
    assert symmetric_group(4).order == 24
    assert cyclic_group(7).order == 7
    assert dihedral_group(6).order == 12
    assert alternating_group(5).order == 60
    assert quaternion_group().order == 8
    assert sl2_group(5).order == 120
    assert sl2_group(3).order == 24


def test_enumeration_cap():
    gens = [Permutation.from_cycles(5, [[0, 1]]),
            Permutation.from_cycles(5, [[0, 1, 2, 3, 4]])]
    with pytest.raises(CapExceeded):
        enumerate_group(gens, cap=100)


def test_multiplication_table_consistency():
    G = symmetric_group(4)
    rng = np.random.default_rng(3)
    for i, j in rng.integers(0, G.order, (50, 2)):
        pi, pj = G.element(int(i)), G.element(int(j))
        assert G.element(G.mul_index(int(i), int(j))) == pi * pj
        assert G.mul_index(int(i), G.inv_index(int(i))) == 0
    assert G.element_order(G.index_of(Permutation.from_cycles(4, [[0, 1, 2, 3]]))) == 4


def test_conjugacy_classes_s4():
    G = symmetric_group(4)
    cd = G.conjugacy_classes()
    assert cd.k == 5
    assert sorted(cd.sizes) == [1, 3, 6, 6, 8]
    assert cd.sizes[0] == 1 and cd.orders[0] == 1
    for j in range(cd.k):
        assert cd.sizes[cd.inverse_class[j]] == cd.sizes[j]
        assert cd.centralizer_order(j) * cd.sizes[j] == G.order


def test_power_map_and_rational_families():
    G = cyclic_group(9)
    cd = G.conjugacy_classes()
    pm = cd.power_map(3)
    assert len(pm) == cd.k
    fams = cd.rational_families()
    covered = sorted(c for _, tr in fams for _, c in tr)
    assert covered == list(range(cd.k))
    for base, tr in fams:
        assert tr[0][0] == 1 and tr[0][1] == base


def test_double_cosets_partition():
    G = symmetric_group(4)
    H = subgroup_generated(G, [G.index_of(Permutation.from_cycles(4, [[0, 1]]))])
    K = subgroup_generated(G, [G.index_of(Permutation.from_cycles(4, [[0, 1, 2]]))])
    blocks = double_cosets(G, H, K)
    assert sum(b["size"] for b in blocks) == G.order


def test_quaternion_structure():
    Q = quaternion_group()
    cd = Q.conjugacy_classes()
    assert cd.k == 5
    assert sorted(Q.element_order(i) for i in range(Q.order)) == [1, 2, 4, 4, 4, 4, 4, 4]
