"""Permutation groups: orders, classes, Sylow subgroups, cores, series."""

import pytest
from hypothesis import given, strategies as st

from blockheight.catalog import (
    alt,
    cyclic,
    default_catalog,
    direct_product,
    psl2_proj,
    quaternion,
    sym,
)
from blockheight.permgroup import (
    PermGroup,
    parse_cycles,
    perm_order,
    pinv,
    pmul,
)


# ---------------------------------------------------------------------------
# element arithmetic


perms5 = st.permutations(range(5)).map(tuple)


@given(perms5, perms5, perms5)
def test_composition_associative(a, b, c):
    assert pmul(pmul(a, b), c) == pmul(a, pmul(b, c))


@given(perms5)
def test_inverse(a):
    ident = tuple(range(5))
    assert pmul(a, pinv(a)) == ident
    assert pmul(pinv(a), a) == ident


@given(perms5)
def test_order_annihilates(a):
    n = perm_order(a)
    acc = tuple(range(5))
    for _ in range(n):
        acc = pmul(acc, a)
    assert acc == tuple(range(5))


def test_parse_cycles():
    assert parse_cycles("(1,2,3)", 4) == (1, 2, 0, 3)
    assert parse_cycles("(1,2)(3,4)", 4) == (1, 0, 3, 2)
    assert parse_cycles("()", 3) == (0, 1, 2)


# ---------------------------------------------------------------------------
# order


def test_order_trivial():
    assert PermGroup(3, []).order() == 1


def test_order_sym4():
    assert sym(4).order() == 24


def test_order_psl27_brute_force():
    G = psl2_proj(7)
    assert G.degree == 8
    assert G.order() == 168
    assert len(G.elements()) == 168


def test_order_matches_enumeration_small_catalog():
    for entry in default_catalog():
        if entry.expected_order <= 1000:
            G = entry.build()
            assert len(G.elements()) == G.order(), entry.name


# ---------------------------------------------------------------------------
# conjugacy classes


def test_classes_sym3():
    classes = sym(3).conjugacy_classes()
    assert list(classes.sizes) == [1, 3, 2]
    assert list(classes.element_orders) == [1, 2, 3]


def test_classes_q8_regular():
    Q = quaternion(8)
    elems = sorted(Q.elements())
    index = {g: i for i, g in enumerate(elems)}
    regular = PermGroup(
        8,
        [tuple(index[pmul(x, g)] for x in elems) for g in Q.generators],
    )
    assert regular.order() == 8
    assert len(regular.conjugacy_classes().sizes) == 5


def test_classes_elementary_abelian():
    from blockheight.catalog import elementary_abelian

    classes = elementary_abelian(2, 3).conjugacy_classes()
    assert list(classes.sizes) == [1] * 8


def test_class_of_consistency():
    G = sym(4)
    classes = G.conjugacy_classes()
    assert sum(classes.sizes) == 24
    for j, rep in enumerate(classes.representatives):
        assert classes.class_of[rep] == j
    assert classes.sizes[0] == 1 and classes.element_orders[0] == 1


# ---------------------------------------------------------------------------
# Sylow subgroups


def test_sylow_sym4():
    G = sym(4)
    P2 = G.sylow(2)
    assert P2.order() == 8 and not P2.is_abelian()
    assert G.sylow(3).order() == 3
    for g in P2.generators:
        assert G.contains(g)


def test_sylow_alt5():
    assert alt(5).sylow(5).order() == 5


def test_sylow_not_dividing():
    assert sym(4).sylow(5).order() == 1


def test_sylow_full_p_part_everywhere():
    from blockheight.numtheory import valuation

    for entry in default_catalog():
        if entry.expected_order <= 300:
            G = entry.build()
            n = G.order()
            for p in (2, 3, 5, 7):
                if n % p == 0:
                    P = G.sylow(p)
                    assert P.order() == p ** valuation(n, p), (entry.name, p)


# ---------------------------------------------------------------------------
# cores and residuals


def test_cores_sym4():
    G = sym(4)
    O2 = G.p_core(2)
    assert O2.order() == 4
    assert all(pmul(g, g) == G.ident for g in O2.generators)
    assert G.p_prime_core(2).order() == 1


def test_p_prime_core_product():
    G = direct_product(alt(4), cyclic(3))
    assert G.degree == 7
    assert G.p_prime_core(2).order() == 3


def test_core_maximality_sym4():
    G = sym(4)
    O2 = G.p_core(2)
    for N in G.normal_subgroups():
        n = N.order()
        if n == 2 ** (n.bit_length() - 1):  # 2-power order
            assert n <= O2.order()


def test_p_residual():
    assert sym(3).p_residual(3).order() == 3
    assert sym(4).p_residual(2).order() == 24
    assert cyclic(6).p_residual(2).order() == 2


# ---------------------------------------------------------------------------
# (p, p')-series


def test_pp_series_sym4():
    series = sym(4).pp_series(2)
    assert [T.order() for T in series.terms] == [1, 4, 12, 24]
    assert series.reaches and series.p_length == 2


def test_pp_series_p_group():
    series = quaternion(8).pp_series(2)
    assert series.reaches and series.p_length == 1
    assert [T.order() for T in series.terms] == [1, 8]


def test_pp_series_alt5():
    series = alt(5).pp_series(2)
    assert not series.reaches
    assert series.terms[-1].order() < 60
    assert not alt(5).is_p_solvable(2)


def test_pp_series_matches_p_solvable():
    for entry in default_catalog():
        if entry.expected_order <= 300:
            G = entry.build()
            for p in (2, 3, 5):
                if G.order() % p == 0:
                    assert G.pp_series(p).reaches == G.is_p_solvable(p), (
                        entry.name,
                        p,
                    )


# ---------------------------------------------------------------------------
# normal subgroups


def test_normal_subgroups_sym4():
    orders = sorted(N.order() for N in sym(4).normal_subgroups())
    assert orders == [1, 4, 12, 24]


def test_normal_subgroups_alt5():
    orders = sorted(N.order() for N in alt(5).normal_subgroups())
    assert orders == [1, 60]


def test_normal_subgroups_klein():
    from blockheight.catalog import elementary_abelian

    orders = sorted(N.order() for N in elementary_abelian(2, 2).normal_subgroups())
    assert orders == [1, 2, 2, 2, 4]


def test_minimal_normal_subgroups():
    minimal = sym(4).minimal_normal_subgroups()
    assert [N.order() for N in minimal] == [4]
    assert sorted(N.order() for N in cyclic(6).minimal_normal_subgroups()) == [2, 3]
    assert [N.order() for N in alt(5).minimal_normal_subgroups()] == [60]


# ---------------------------------------------------------------------------
# coset action


def test_coset_action_sym4_v4():
    G = sym(4)
    V4 = G.p_core(2)
    act = G.coset_action(V4)
    assert act.group.order() == 6
    assert not act.group.is_abelian()
    assert act.group.order() * V4.order() == G.order()


def test_coset_action_trivial_quotient():
    G = sym(4)
    assert G.coset_action(G).group.order() == 1


def test_coset_action_sym4_a4():
    act = sym(4).coset_action(sym(4).subgroup(alt(4).generators))
    assert act.group.order() == 2


# ---------------------------------------------------------------------------
# structural queries


def test_solvability():
    assert sym(4).is_solvable()
    assert not alt(5).is_solvable()
    assert alt(5).is_p_solvable(7)


def test_normalizer_of_4_cycle():
    G = sym(4)
    C4 = G.subgroup([parse_cycles("(1,2,3,4)", 4)])
    assert G.normalizer(C4).order() == 8


def test_center_and_derived():
    assert quaternion(8).center().order() == 2
    assert sym(4).derived_subgroup().order() == 12
    assert sym(4).derived_subgroup().is_subgroup_of(sym(4))


def test_centralizer():
    G = sym(4)
    g = parse_cycles("(1,2,3,4)", 4)
    C = G.centralizer(g)
    assert C.order() == 4
    assert all(pmul(x, g) == pmul(g, x) for x in C.elements())


def test_orbit_and_stabilizer():
    G = sym(4)
    assert set(G.orbit(0)) == {0, 1, 2, 3}
    assert G.point_stabilizer(0).order() == 6
    S = G.setwise_stabilizer({0, 1})
    assert S.order() == 4
