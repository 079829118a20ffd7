"""Windowed translation quiver, knitting, and the orbit quotient."""

from __future__ import annotations

import pytest

from clustertilt.errors import WindowTooSmall
from clustertilt.quiver import parse_quiver
from clustertilt.translation import build_zquiver

from conftest import D4, D5, E6, LINEAR, get_category


def test_a2_window_unfolding():
    tq = build_zquiver(parse_quiver("1->2"), (-2, 3))
    slices = sorted({z[0] for z in tq.positions_in_order()})
    assert slices == [-2, -1, 0, 1, 2, 3]
    assert len(tq.positions_in_order()) == 12
    # the ZQ^op pattern for the arrow 1->2: (k,2)->(k,1) and (k,1)->(k+1,2)
    assert ((0, 2), (0, 1)) in {(a.src, a.tgt) for a in tq.arrows}
    assert ((0, 1), (1, 2)) in {(a.src, a.tgt) for a in tq.arrows}
    assert ((0, 1), (0, 2)) not in {(a.src, a.tgt) for a in tq.arrows}


def test_a1_has_no_arrows_and_empty_meshes():
    tq = build_zquiver(parse_quiver("1"), (-2, 2))
    assert tq.arrows == ()
    assert tq.mesh((1, 1)).legs == ()


def test_a3_interior_meshes_have_one_or_two_middles():
    tq = build_zquiver(parse_quiver("1->2 2->3"), (-2, 6))
    interior = [z for z in tq.positions_in_order() if -1 <= z[0] <= 5]
    for z in interior:
        mesh = tq.mesh(z)
        assert 1 <= len(mesh.legs) <= 2
        # middle count is 2 exactly at the middle vertex of the A_3 diagram
        assert (len(mesh.legs) == 2) == (z[1] == 2)


def test_tau_is_slice_shift():
    tq = build_zquiver(parse_quiver("1->2 2->3"), (-2, 6))
    assert tq.tau((3, 2)) == (2, 2)
    assert tq.tau_inv((3, 2)) == (4, 2)


def test_knit_a3_dim_vectors():
    cat = get_category(LINEAR[3])
    found = [cat.region.dims[z] for z in cat.region.modules]
    assert sorted(found) == sorted(
        [(0, 0, 1), (0, 1, 1), (1, 1, 1), (0, 1, 0), (1, 1, 0), (1, 0, 0)]
    )
    assert cat.region.h == 6


def test_knit_counts_small_ranks():
    assert get_category(LINEAR[1]).region.h == 1
    assert get_category(LINEAR[2]).region.h == 3
    assert get_category(D4).region.h == 12


def test_projectives_at_slice_zero():
    cat = get_category(LINEAR[3])
    for v in cat.q.vertices:
        assert cat.region.proj_pos[v] == (0, v)
        assert cat.region.dims[(0, v)][cat.q.vindex[v]] == 1


def test_injectives_close_the_region():
    # tau-orbit of P_v ends at I_{sigma(v)}; sigma is a permutation
    cat = get_category(LINEAR[3])
    assert sorted(cat.region.sigma) == sorted(cat.region.sigma.values())
    for v in cat.q.vertices:
        inj = cat.region.inj_pos[v]
        assert cat.tq.tau_inv(inj) not in cat.region.dims


def test_mesh_additivity_inside_region():
    for text in (LINEAR[3], LINEAR[4], D4):
        cat = get_category(text)
        dims = cat.region.dims
        for z in cat.region.modules:
            start = cat.tq.tau(z)
            if start not in dims:
                continue
            mid_sum = [0] * cat.q.n
            for mid, _, _ in cat.tq.mesh(z).legs:
                if mid in dims:
                    mid_sum = [a + b for a, b in zip(mid_sum, dims[mid])]
            expect = tuple(m - s for m, s in zip(mid_sum, dims[start]))
            assert expect == dims[z]


def test_shift_of_projective_is_outside_region():
    for text in (LINEAR[2], LINEAR[3], D4):
        cat = get_category(text)
        for v in cat.q.vertices:
            p = cat.region.proj_pos[v]
            assert cat.tq.F(p) not in cat.region.dims
            assert cat.tq.shift(p) not in cat.region.dims


def test_a1_shift_and_f_are_slice_translations():
    # P = I = S at (0,1): [1] moves one slice right, F two slices
    cat = get_category(LINEAR[1])
    assert cat.tq.shift((0, 1)) == (1, 1)
    assert cat.tq.F((0, 1)) == (2, 1)


def test_ext_of_module_with_itself_vanishes():
    # dim Hom_D(X, X[1]) = Ext^1_H(X,X) = 0 in Dynkin type
    cat = get_category(LINEAR[3])
    for z in cat.region.modules:
        assert cat.mesh.hom_dim(z, cat.tq.shift(z)) == 0


def test_cluster_domain_a3_has_nine_vertices():
    cat = get_category(LINEAR[3])
    assert len(cat.cluster.domain) == 9
    shifted = [z for z in cat.cluster.domain if cat.cluster.is_shifted_projective(z)]
    assert len(shifted) == 3


def test_cluster_domain_a1_two_vertices_tau_swaps():
    cat = get_category(LINEAR[1])
    assert len(cat.cluster.domain) == 2
    a, b = cat.cluster.domain
    assert cat.cluster.tau_map[a] == b
    assert cat.cluster.tau_map[b] == a


def test_cluster_counts_h_plus_n():
    for text in (LINEAR[2], LINEAR[4], D4, D5, E6):
        cat = get_category(text)
        assert len(cat.cluster.domain) == cat.h + cat.n


def test_tau_square_projective_is_injective():
    for text in (LINEAR[3], LINEAR[4], D4):
        cat = get_category(text)
        inj = set(cat.region.inj_pos.values())
        for v in cat.q.vertices:
            z = cat.cluster.tau_map[cat.region.proj_pos[v]]
            z = cat.cluster.tau_map[z]
            assert z in inj


def test_f_fixed_point_free():
    for text in (LINEAR[1], LINEAR[3], D4):
        cat = get_category(text)
        for z in cat.cluster.domain:
            assert cat.tq.F(z) != z


def test_canonical_is_idempotent():
    cat = get_category(LINEAR[3])
    for z in cat.region.modules:
        once = cat.cluster.canonical(cat.tq.F(z))
        assert cat.cluster.canonical(once) == once == z


def test_cluster_tau_is_permutation():
    cat = get_category(D4)
    image = set(cat.cluster.tau_map.values())
    assert image == set(cat.cluster.domain)


def test_window_too_small_is_reported():
    with pytest.raises(WindowTooSmall):
        build_zquiver(parse_quiver("1->2 2->3"), (0, 1))
