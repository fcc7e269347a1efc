"""Matrix groups over F_p: orbits, p-exceptionality, irreducibility."""

import pytest

from blockheight.catalog import gl_mat, load_fixture, parse_mat_group, sl_mat
from blockheight.matgroup import MatGroup
from blockheight.permgroup import BoundExceeded


def _transvection():
    return parse_mat_group("dim 2\nprime 3\ngen [[1,1],[0,1]]\n", name="t")


# ---------------------------------------------------------------------------
# vector orbits


def test_gl23_orbits():
    orbs = gl_mat(2, 3).vector_orbits()
    assert tuple(orbs.sizes) == (1, 8)


def test_identity_only_orbits():
    M = MatGroup(2, 3, [[[1, 0], [0, 1]]])
    assert tuple(M.vector_orbits().sizes) == (1,) * 9


def test_fixture_orbits_sl2_5():
    M = load_fixture("sl2_5_gl4_3.mgrp")
    assert tuple(M.vector_orbits(bound=81).sizes) == (1, 40, 40)


def test_orbit_sizes_sum_and_divide():
    for M in (gl_mat(2, 3), sl_mat(2, 3), _transvection()):
        orbs = M.vector_orbits()
        assert sum(orbs.sizes) == M.prime**M.dim
        n = M.order()
        for size in orbs.sizes:
            assert n % size == 0


def test_orbit_representatives_cover():
    M = sl_mat(2, 5)
    orbs = M.vector_orbits()
    assert len(orbs.representatives) == len(orbs.sizes)
    assert orbs.representatives[0] == (0, 0)


# ---------------------------------------------------------------------------
# p-exceptional


def test_gl23_p_exceptional():
    flag, cert = gl_mat(2, 3).is_p_exceptional()
    assert flag and tuple(cert) == (1, 8)


def test_transvection_not_exceptional():
    flag, cert = _transvection().is_p_exceptional()
    assert not flag
    assert isinstance(cert, tuple)  # offending orbit representative


def test_m11_fixture_exceptional():
    M = load_fixture("m11_gl5_3.mgrp")
    flag, cert = M.is_p_exceptional(bound=243)
    assert flag and tuple(cert) == (1, 22, 220)


def test_p_not_dividing_order():
    M = MatGroup(1, 5, [[[4]]])  # order 2 in GL_1(5)
    flag, cert = M.is_p_exceptional()
    assert not flag and cert == "group order not divisible by p"


# ---------------------------------------------------------------------------
# irreducibility


def test_gl23_irreducible():
    assert gl_mat(2, 3).is_irreducible()


def test_diagonal_reducible():
    M = MatGroup(2, 3, [[[2, 0], [0, 1]], [[1, 0], [0, 2]]])
    assert not M.is_irreducible()


def test_psl2_11_fixture_irreducible():
    M = load_fixture("psl2_11_gl5_3.mgrp")
    assert M.is_irreducible(bound=243)
    assert tuple(M.vector_orbits(bound=243).sizes) == (1, 22, 110, 110)


# ---------------------------------------------------------------------------
# permutation conversion


def test_as_perm_group_gl22():
    P = gl_mat(2, 2).as_perm_group()
    assert P.degree == 4 and P.order() == 6


def test_as_perm_group_trivial():
    M = MatGroup(2, 2, [[[1, 0], [0, 1]]])
    assert M.as_perm_group().order() == 1


def test_as_perm_group_sl23():
    P = sl_mat(2, 3).as_perm_group()
    assert P.degree == 9 and P.order() == 24


def test_perm_group_preserves_order():
    for M in (gl_mat(2, 3), sl_mat(2, 5), load_fixture("wr3.mgrp")):
        assert M.as_perm_group().order() == M.order()


def test_space_bound_errors():
    M = load_fixture("m23_gl11_2.mgrp")
    with pytest.raises(BoundExceeded):
        M.vector_orbits(bound=729)  # 2^11 = 2048 points


# ---------------------------------------------------------------------------
# imprimitive decompositions


def test_wreath_coordinate_lines():
    text = (
        "dim 2\nprime 3\n"
        "gen [[2,0],[0,1]]\n"   # GL_1(3) in the first coordinate
        "gen [[0,1],[1,0]]\n"   # swap
    )
    M = parse_mat_group(text, name="wr2")
    report = M.check_imprimitive_decomposition([[(1, 0)], [(0, 1)]])
    assert report.n_parts == 2
    assert report.part_dims == (1, 1)
    assert report.part_stabilizer_transitive  # 2 nonzero vectors in a line
    assert report.induced_group.order() == 2


def test_not_permuted_raises():
    with pytest.raises(ValueError, match="does not permute"):
        gl_mat(2, 3).check_imprimitive_decomposition([[(1, 0)], [(0, 1)]])


def test_wr3_fixture_report():
    M = load_fixture("wr3.mgrp")
    parts = [[(1, 0, 0)], [(0, 1, 0)], [(0, 0, 1)]]
    report = M.check_imprimitive_decomposition(parts)
    assert report.n_parts == 3
    assert report.part_dims == (1, 1, 1)
    assert report.part_stabilizer_transitive
    assert report.induced_primitive
    bad = [[(1, 1, 0)], [(0, 1, 0)], [(0, 0, 1)]]
    with pytest.raises(ValueError, match="does not permute"):
        M.check_imprimitive_decomposition(bad)
