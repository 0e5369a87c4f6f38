from fractions import Fraction

import numpy as np
import pytest

from polyreal.chartable import character_table
from polyreal.cyclo import Cyclo
from polyreal.errors import (MultiplicityNotOne, NotInvariant, NotPSD)
from polyreal.groups import (Permutation, cyclic_group, quaternion_group,
                             subgroup_generated, symmetric_group)
from polyreal.gsets import coset_action
from polyreal.realization import (InvariantMatrix, analyze_gset, cone_blend,
                                  cone_hadamard, cone_ops, cone_report,
                                  cone_scale, cosine_vector_pure,
                                  homogeneous_projection, identity_suite,
                                  integrality_certificate, lambda_inner,
                                  psd_sqrt_commuting, _rel_matrix)


def regular_gset(G):
    return coset_action(G, subgroup_generated(G, []))


def test_quaternion_regular_cone(cache):
    Q = quaternion_group()
    gs = regular_gset(Q)
    table = character_table(Q, cache_dir=cache)
    rep = cone_report(gs, table, cache_dir=cache)
    js = rep.to_json()
    assert js["points"] == 8
    assert len(js["layers"]) == 5
    cones = sorted(s["cone"] for s in js["sigma"])
    assert cones == ["PSD 1x1 over H", "PSD 1x1 over R", "PSD 1x1 over R",
                     "PSD 1x1 over R", "PSD 1x1 over R"]
    assert js["gelfand"] == "gelfand_over_R_only"
    h = [s for s in js["sigma"] if s["cone"].endswith("H")][0]
    assert h["degree"] == 4 and h["multiplicity"] == 1 and h["subcone_dim"] == 1


def test_c3_regular_layers(cache):
    gs = regular_gset(cyclic_group(3))
    an = analyze_gset(gs, cache_dir=cache)
    assert an.layers.n_layers == 2
    assert sorted(an.layers.layer_sizes) == [1, 2]
    assert an.gelfand == "gelfand"


def test_s4_mod_c2_multiplicity_two_block(cache):
    G = symmetric_group(4)
    H = subgroup_generated(G, [G.index_of(Permutation.from_cycles(4, [[0, 1]]))])
    gs = coset_action(G, H)
    assert gs.n_points == 12
    an = analyze_gset(gs, cache_dir=cache)
    mult2 = [c for c in an.constituents if c.mult == 2]
    assert len(mult2) == 1 and mult2[0].sigma.degree == 3
    assert mult2[0].subcone_dim == 3
    assert an.gelfand == "not_gelfand"


def test_identity_suite_small(cache):
    G = symmetric_group(3)
    rep = identity_suite(regular_gset(G), cache_dir=cache)
    assert rep["projection_sum"] and rep["projection_products"]
    assert rep["trace_vs_layer"] and rep["integrality"]


def test_projection_values_are_explicit(cache):
    G = symmetric_group(3)
    H = subgroup_generated(G, [G.index_of(Permutation.from_cycles(3, [[0, 1]]))])
    gs = coset_action(G, H)
    an = analyze_gset(gs, cache_dir=cache)
    ld = gs.layers()
    std = [c for c in an.constituents if c.sigma.degree == 2][0]
    Q = homogeneous_projection(gs, std, ld)
    assert Q.trace() == Cyclo.rational(2)
    vec = cosine_vector_pure(gs, std, ld)
    assert vec[0] == Cyclo.one()
    cert = integrality_certificate(ld, vec)
    assert cert["all_integral"]


def test_cosine_requires_multiplicity_one(cache):
    G = symmetric_group(4)
    H = subgroup_generated(G, [G.index_of(Permutation.from_cycles(4, [[0, 1]]))])
    gs = coset_action(G, H)
    an = analyze_gset(gs, cache_dir=cache)
    bad = [c for c in an.constituents if c.mult == 2][0]
    with pytest.raises(MultiplicityNotOne):
        cosine_vector_pure(gs, bad)


def test_lambda_inner_matches_dense_trace(cache):
    G = symmetric_group(4)
    H = subgroup_generated(G, [G.index_of(Permutation.from_cycles(4, [[0, 1]]))])
    gs = coset_action(G, H)
    ld = gs.layers()
    rel = _rel_matrix(ld)
    rng = np.random.default_rng(11)
    n = gs.n_points
    for _ in range(5):
        a = [int(x) for x in rng.integers(-6, 7, ld.n_layers)]
        b = [int(x) for x in rng.integers(-6, 7, ld.n_layers)]
        A, B = np.asarray(a)[rel], np.asarray(b)[rel]
        want = Fraction(int(np.tensordot(A, B.T, axes=2)), n * n)
        got = lambda_inner(ld, [Cyclo.rational(v) for v in a],
                           [Cyclo.rational(v) for v in b])
        assert got == Cyclo.rational(want)


def test_cone_operations(cache):
    G = symmetric_group(3)
    gs = regular_gset(G)
    an = analyze_gset(gs, cache_dir=cache)
    ld = gs.layers()
    Qs = [homogeneous_projection(gs, c, ld) for c in an.constituents]
    blend = cone_blend(Qs[0], Qs[1], Fraction(1, 3))
    assert blend.trace() == (Qs[0].trace() * Fraction(1, 3)
                             + Qs[1].trace() * Fraction(2, 3))
    scaled = cone_scale(Qs[0], Fraction(2))
    assert scaled.values[0] == Qs[0].values[0] * 4
    had = cone_hadamard(Qs[0], Qs[1])
    assert isinstance(had, InvariantMatrix)
    assert cone_ops("blend", Qs[0], Qs[1], Fraction(1, 2)).values \
        == cone_blend(Qs[0], Qs[1], Fraction(1, 2)).values


def test_psd_sqrt_errors(cache):
    G = symmetric_group(3)
    gs = regular_gset(G)
    ld = gs.layers()
    n = gs.n_points
    with pytest.raises(NotPSD):
        psd_sqrt_commuting(ld, -np.eye(n))
    bad = np.eye(n)
    bad[0, 1] = 0.5
    with pytest.raises(NotInvariant):
        psd_sqrt_commuting(ld, bad)
    A = psd_sqrt_commuting(ld, 4 * np.eye(n))
    assert np.max(np.abs(A - 2 * np.eye(n))) < 1e-12
