import os
from fractions import Fraction

import pytest

from polyreal.chartable import (character_table, frobenius_schur,
                                induced_trivial_character, inner_product,
                                inner_product_values, real_irreducibles,
                                verify_orthogonality)
from polyreal.cyclo import Cyclo
from polyreal.groups import (Permutation, alternating_group, cyclic_group,
                             quaternion_group, sl2_group, subgroup_generated,
                             symmetric_group)

DEGREE_ORACLES = {
    "S3": ((1, 1, 2), symmetric_group, 3),
    "S4": ((1, 1, 2, 3, 3), symmetric_group, 4),
    "A5": ((1, 3, 3, 4, 5), alternating_group, 5),
    "SL25": ((1, 2, 2, 3, 3, 4, 4, 5, 6), sl2_group, 5),
}


@pytest.mark.parametrize("name", sorted(DEGREE_ORACLES))
def test_degree_multisets(name, cache):
    degrees, ctor, arg = DEGREE_ORACLES[name]
    table = character_table(ctor(arg), cache_dir=cache)
    assert table.degrees == degrees


def test_quaternion_table_and_indicator(cache):
    table = character_table(quaternion_group(), cache_dir=cache)
    assert table.degrees == (1, 1, 1, 1, 2)
    two = table.degrees.index(2)
    assert frobenius_schur(table, two) == -1
    for r in range(4):
        assert frobenius_schur(table, r) == 1


def test_complex_character_indicator_zero(cache):
    table = character_table(cyclic_group(3), cache_dir=cache)
    nontrivial = [r for r in range(3) if table.conjugate_row_index(r) != r]
    assert len(nontrivial) == 2
    for r in nontrivial:
        assert frobenius_schur(table, r) == 0


def test_first_column_and_row_orthogonality(cache):
    table = character_table(symmetric_group(4), cache_dir=cache)
    verify_orthogonality(table)
    for r in range(table.k):
        assert table.values[r][0] == Cyclo.rational(table.degrees[r])
        ip = inner_product_values(table.classdata, table.values[r],
                                  table.values[r])
        assert ip == Cyclo.one()


def test_cache_round_trip(cache, tmp_path):
    d = str(tmp_path / "c")
    G = symmetric_group(3)
    t1 = character_table(G, cache_dir=d)
    files = os.listdir(d)
    assert len(files) == 1
    t2 = character_table(G, cache_dir=d)
    assert t1.values == t2.values and t1.degrees == t2.degrees


def test_real_irreducible_types(cache):
    table = character_table(quaternion_group(), cache_dir=cache)
    reals = real_irreducibles(table)
    types = sorted(r.typ for r in reals)
    assert types == ["H", "R", "R", "R", "R"]
    h = [r for r in reals if r.typ == "H"][0]
    assert h.degree == 4 and h.norm == 4

    table3 = character_table(cyclic_group(3), cache_dir=cache)
    reals3 = real_irreducibles(table3)
    assert sorted(r.typ for r in reals3) == ["C", "R"]
    c = [r for r in reals3 if r.typ == "C"][0]
    assert c.degree == 2 and c.norm == 2


def test_induced_trivial_character(cache):
    G = symmetric_group(4)
    H = subgroup_generated(G, [G.index_of(Permutation.from_cycles(4, [[0, 1]])),
                               G.index_of(Permutation.from_cycles(4, [[1, 2]]))])
    assert H.order == 6
    pi = induced_trivial_character(G, H)
    assert pi[0] == 4
    table = character_table(G, cache_dir=cache)
    total = Fraction(0)
    for r in range(table.k):
        m = inner_product_values(table.classdata,
                                 [Cyclo.rational(x) for x in pi],
                                 table.values[r])
        total += m.as_fraction() * table.degrees[r]
    assert total == 4


def test_inner_product_entry_point(cache):
    G = cyclic_group(5)
    table = character_table(G, cache_dir=cache)
    assert inner_product(G, table.values[1], table.values[1]) == Cyclo.one()
    assert inner_product(G, table.values[1], table.values[2]) == Cyclo.zero()
