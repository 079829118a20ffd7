"""Presented basic algebras: arrows, relations, projectives, syzygies.

The fixtures are tiny hand-built multiplication tables where every Hom
space has dimension 0 or 1, so products reduce to scalar multiplication
guarded by the dimension of the receiving space.
"""

from __future__ import annotations

from fractions import Fraction

import pytest

from clustertilt.algebra import PresentedAlgebra
from clustertilt.errors import InternalError


def _scalar_algebra(labels, dims):
    def mult(i, j, k, x, y):
        if dims[(i, k)] == 0:
            return []
        return [x[0] * y[0]]

    return PresentedAlgebra(labels, dims, mult)


def _dims(m, nonzero):
    table = {(i, j): 0 for i in range(m) for j in range(m)}
    for i in range(m):
        table[(i, i)] = 1
    for pair in nonzero:
        table[pair] = 1
    return table


def _a2_path_algebra():
    return _scalar_algebra(["1", "2"], _dims(2, [(0, 1)]))


def _cycle_algebra():
    # oriented 3-cycle, rad^2 = 0
    return _scalar_algebra(["1", "2", "3"], _dims(3, [(0, 1), (1, 2), (2, 0)]))


def _a3_with_zero_relation():
    # 1 -> 2 -> 3 with the length-2 composite killed
    return _scalar_algebra(["1", "2", "3"], _dims(3, [(0, 1), (1, 2)]))


def test_a2_structure():
    alg = _a2_path_algebra()
    assert [(a.src, a.tgt) for a in alg.arrows] == [(0, 1)]
    assert alg.relations == []
    assert alg.is_hereditary
    assert not alg.has_cycles
    assert alg.nilpotency == 2
    assert alg.dim_total == 3


def test_a2_projectives_and_global_dimension():
    alg = _a2_path_algebra()
    assert alg.projective(0).dims == (1, 1)
    assert alg.projective(1).dims == (0, 1)
    assert alg.pd_flag(alg.simple(1), 10) == ("finite", 0)
    assert alg.pd_flag(alg.simple(0), 10) == ("finite", 1)
    assert alg.gldim_flag(10) == ("finite", 1)


def test_cycle_structure():
    alg = _cycle_algebra()
    assert [(a.src, a.tgt) for a in alg.arrows] == [(0, 1), (1, 2), (2, 0)]
    assert alg.has_cycles
    assert not alg.is_hereditary
    assert alg.nilpotency == 2
    assert alg.dim_total == 6


def test_cycle_relations_are_the_three_composites():
    alg = _cycle_algebra()
    assert len(alg.relations) == 3
    seen = set()
    for i, j, terms in alg.relations:
        assert len(terms) == 1
        path, coeff = terms[0]
        assert len(path) == 2
        assert coeff == Fraction(1)
        seen.add((i, j))
    # one relation per length-2 composite around the cycle
    assert seen == {(0, 2), (1, 0), (2, 1)}


def test_cycle_syzygies_never_terminate():
    alg = _cycle_algebra()
    # cover of S_0 is the 2-dim projective; kernel is the next simple
    step = alg.syzygy(alg.simple(0))
    assert step.dims == (0, 1, 0)
    assert alg.pd_flag(alg.simple(0), 12) == ("witnessed-infinite", None)
    assert alg.gldim_flag(12) == ("witnessed-infinite", None)


def test_zero_relation_algebra():
    alg = _a3_with_zero_relation()
    assert [(a.src, a.tgt) for a in alg.arrows] == [(0, 1), (1, 2)]
    assert len(alg.relations) == 1
    i, j, terms = alg.relations[0]
    assert (i, j) == (0, 2)
    assert [len(p) for p, _ in terms] == [2]
    assert alg.gldim_flag(10) == ("finite", 2)


def test_projective_covers_are_consistent():
    for alg in (_a2_path_algebra(), _cycle_algebra(), _a3_with_zero_relation()):
        for i in range(alg.m):
            proj = alg.projective(i)
            # the i-th projective has a one-dimensional space at its own
            # vertex (the lazy path) and syzygy zero
            assert proj.dims[i] == 1
            assert alg.syzygy(proj).is_zero()
            assert alg.pd_flag(proj, 5) == ("finite", 0)


def test_diagonal_must_be_scalar():
    bad = _dims(2, [(0, 1)])
    bad[(0, 0)] = 2

    with pytest.raises(InternalError):
        _scalar_algebra(["1", "2"], bad)


def test_simple_reps_shape():
    alg = _cycle_algebra()
    s = alg.simple(1)
    assert s.dims == (0, 1, 0)
    assert not s.is_zero()
    for a in alg.arrows:
        assert len(s.mats[a.idx]) == s.dims[a.src]
