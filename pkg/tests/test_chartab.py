"""Character tables: class algebra, Dixon-Schneider output, restriction."""

import pytest

from blockheight.catalog import alt, cyclic, dihedral, mathieu11, sym
from blockheight.chartab import (
    BoundExceeded,
    character_table,
    class_mult_coefficient,
)
from blockheight.cyclo import Cyclotomic
from blockheight.permgroup import pmul


# ---------------------------------------------------------------------------
# class multiplication coefficients


def test_identity_class_coefficients():
    classes = sym(4).conjugacy_classes()
    k = len(classes.sizes)
    for j in range(k):
        for m in range(k):
            assert class_mult_coefficient(classes, 0, j, m) == int(j == m)


def test_sym3_a112_against_brute_force():
    G = sym(3)
    classes = G.conjugacy_classes()
    assert list(classes.element_orders) == [1, 2, 3]
    K1 = [g for g in G.elements() if classes.class_of[g] == 1]
    z = classes.representatives[2]
    oracle = sum(1 for x in K1 for y in K1 if pmul(x, y) == z)
    assert oracle == 3
    assert class_mult_coefficient(classes, 1, 1, 2) == 3


def test_counting_identity():
    for G in (sym(3), sym(4)):
        classes = G.conjugacy_classes()
        k = len(classes.sizes)
        for i in range(k):
            for j in range(k):
                total = sum(
                    class_mult_coefficient(classes, i, j, m) * classes.sizes[m]
                    for m in range(k)
                )
                assert total == classes.sizes[i] * classes.sizes[j]


def test_coefficient_representative_independence():
    classes = sym(4).conjugacy_classes()
    # class 2: the double transpositions (three members)
    reps = [g for g in sym(4).elements() if classes.class_of[g] == 2]
    values = {class_mult_coefficient(classes, 1, 1, 2, z=z) for z in reps}
    assert len(values) == 1


# ---------------------------------------------------------------------------
# tables


def test_c2_table():
    T = character_table(cyclic(2))
    rows = [[T.value(r, j) for j in range(2)] for r in range(2)]
    one = Cyclotomic.one()
    assert rows[0] == [one, one]
    assert rows[1] == [one, Cyclotomic.from_fraction(-1)]


def test_sym4_degrees(table):
    assert tuple(sorted(table("S4").degrees)) == (1, 1, 2, 3, 3)


def test_q8_degrees(table):
    assert tuple(sorted(table("Q8").degrees)) == (1, 1, 1, 1, 2)


def test_char_degree_queries(table):
    D8 = table("D8")
    assert D8.cd() == (1, 2) and D8.b() == 2
    assert table("ES(3,3,+)").cd() == (1, 3)
    assert table("C12").cd() == (1,)


def test_sum_of_squares_and_row_count(table):
    for name in ("S4", "Q8", "D10", "SL2(3)", "A5"):
        T = table(name)
        assert sum(d * d for d in T.degrees) == T.group.order()
        assert len(T.degrees) == T.n_classes


def test_orthogonality_spot(table):
    assert table("S4").verify_orthogonality()
    assert table("A5").verify_orthogonality()


# ---------------------------------------------------------------------------
# permutation-character oracles


def _fix(g):
    return sum(1 for i, img in enumerate(g) if img == i)


def test_burnside_orbit_count(table):
    # <pi, 1> equals the number of orbits on points.
    for name in ("S4", "D10", "A5", "D12"):
        T = table(name)
        G = T.group
        classes = T.classes
        total = sum(
            classes.sizes[j] * _fix(classes.representatives[j])
            for j in range(T.n_classes)
        )
        assert total == G.order() * len(G.orbits())


def test_two_transitive_permutation_character(table):
    # For a 2-transitive group, fix(g) - 1 is an irreducible character:
    # an independent combinatorial check of one full table row.
    for name in ("S4", "A5", "M11"):
        T = table(name)
        wanted = [
            Cyclotomic.from_fraction(_fix(rep) - 1)
            for rep in T.classes.representatives
        ]
        matches = [
            r
            for r in range(T.n_classes)
            if all(T.value(r, j) == wanted[j] for j in range(T.n_classes))
        ]
        assert len(matches) == 1
        assert T.degrees[matches[0]] == T.group.degree - 1


# ---------------------------------------------------------------------------
# restriction to normal subgroups


def test_restriction_sym3_alt3():
    G = sym(3)
    T = character_table(G)
    A3 = G.subgroup(alt(3).generators)
    TN = character_table(A3)
    r2 = T.degrees.index(2)
    mults = T.restriction_constituents(TN, r2)
    assert sorted(mults) == [0, 1, 1]
    assert mults[0] == 0  # trivial constituent absent
    triv = T.restriction_constituents(TN, 0)
    assert triv == [1, 0, 0]


def test_restriction_q8_center(group):
    Q8 = group("Q8")
    Z = Q8.center()
    T = character_table(Q8)
    TZ = character_table(Q8.subgroup(Z.generators))
    r2 = T.degrees.index(2)
    mults = T.restriction_constituents(TZ, r2)
    assert sorted(mults) == [0, 2]
    assert mults[0] == 0  # lies over the faithful central character


def test_restriction_degree_accounting(table, group):
    T = table("S4")
    V4 = group("S4").p_core(2)
    TN = character_table(group("S4").subgroup(V4.generators))
    for r in range(T.n_classes):
        mults = T.restriction_constituents(TN, r)
        assert sum(m * TN.degrees[s] for s, m in enumerate(mults)) == T.degrees[r]


def test_restriction_requires_same_points():
    T = character_table(sym(3))
    other = character_table(cyclic(4))
    with pytest.raises(ValueError):
        T.restriction_constituents(other, 0)


# ---------------------------------------------------------------------------
# kernels and quotients


def test_kernel_rows_sym4(table, group):
    T = table("S4")
    G = group("S4")
    V4 = G.p_core(2)
    rows = T.characters_with_kernel_containing(G.subgroup(V4.generators))
    assert sorted(T.degrees[r] for r in rows) == [1, 1, 2]
    A4 = G.subgroup(alt(4).generators)
    rows_a4 = T.characters_with_kernel_containing(A4)
    assert sorted(T.degrees[r] for r in rows_a4) == [1, 1]
    assert T.characters_with_kernel_containing(G.trivial()) == list(
        range(T.n_classes)
    )


def test_quotient_table_matches_kernel_rows(table, group):
    T = table("S4")
    G = group("S4")
    V4 = G.subgroup(G.p_core(2).generators)
    image = G.coset_action(V4).group
    TQ = character_table(image)
    rows = T.characters_with_kernel_containing(V4)
    assert sorted(TQ.degrees) == sorted(T.degrees[r] for r in rows)
    assert TQ.n_classes == len(rows)


# ---------------------------------------------------------------------------
# bounds


def test_order_bound():
    with pytest.raises(BoundExceeded):
        character_table(sym(4), max_order=10)


def test_class_bound():
    with pytest.raises(BoundExceeded):
        character_table(cyclic(12), max_classes=5)


def test_trivial_row_is_first(table):
    for name in ("S4", "D10", "M11"):
        T = table(name)
        assert T.trivial_index == 0
        assert T.degrees[0] == 1
        assert all(
            T.value(0, j) == Cyclotomic.one() for j in range(T.n_classes)
        )
