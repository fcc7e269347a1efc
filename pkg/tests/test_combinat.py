"""Partitions and hooks, concealment, partition orbits, block systems."""

import pytest
from hypothesis import given, settings, strategies as st

from blockheight.catalog import (
    cyclic,
    default_catalog,
    dihedral,
    sym,
    wreath,
)
from blockheight.combinat import (
    Partition,
    hook_degree,
    hook_partition,
    induced_concealed_check,
    is_p_concealed,
    is_primitive,
    maximal_block_system,
    p_concealed_by_counting,
    partitions,
    regular_orbit_on_partitions,
    syt_count,
)
from blockheight.numtheory import valuation
from blockheight.permgroup import PermGroup


# ---------------------------------------------------------------------------
# hook degrees


def test_hook_degree_examples():
    assert hook_degree(Partition((6,))) == 1
    assert hook_degree(Partition((5, 2))) == 14
    assert hook_degree(Partition((5, 1, 1, 1))) == 35


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((2, 3))
    with pytest.raises(ValueError):
        Partition((3, 0))


def test_hook_degree_equals_syt_small():
    for n in range(1, 9):
        for la in partitions(n):
            assert hook_degree(la) == syt_count(la.parts), la


@given(st.integers(min_value=1, max_value=8), st.data())
@settings(max_examples=40)
def test_hook_degree_divides_factorial(n, data):
    import math

    la = data.draw(st.sampled_from(list(partitions(n))))
    degree = hook_degree(la)
    assert degree >= 1
    assert math.factorial(n) % degree == 0


def test_conjugate_partition_same_degree():
    for la in partitions(7):
        assert hook_degree(la) == hook_degree(la.conjugate())


# ---------------------------------------------------------------------------
# the prescribed hook partitions


def test_hook_partition_examples():
    la = hook_partition(7, 7)
    assert la.parts == (5, 2)
    assert hook_degree(la) == 14 and valuation(14, 7) == 1
    la = hook_partition(8, 5)
    assert la.parts == (5, 1, 1, 1)
    assert hook_degree(la) == 35 and valuation(35, 5) == 1


def test_hook_partition_shape_rule():
    # n = ap + b with b != 0 gives the hook (ap, 1^b); b = 0 gives (ap-2, 2).
    assert hook_partition(13, 5).parts == (10, 1, 1, 1)
    assert hook_partition(10, 5).parts == (8, 2)
    assert hook_partition(21, 7).parts == (19, 2)


def test_hook_partition_rejections():
    for n, p in ((6, 3), (4, 3), (10, 2), (25, 5), (8, 9), (3, 5)):
        with pytest.raises(ValueError):
            hook_partition(n, p)


def test_hook_partition_p_part_exact():
    for p in (3, 5, 7):
        for n in range(p, p * p):
            if n <= 4 or (n, p) == (6, 3):
                continue
            la = hook_partition(n, p)
            assert la.n == n
            assert valuation(hook_degree(la), p) == 1, (n, p)


def test_some_partition_with_valuation_one_exists():
    # Exhaustive cross-check: the prescribed partition is not the only
    # certificate, but one must exist among all partitions of n.
    for n, p in ((7, 3), (8, 3), (10, 3), (7, 5), (9, 5), (11, 7)):
        assert any(
            valuation(hook_degree(la), p) == 1 for la in partitions(n)
        )


# ---------------------------------------------------------------------------
# p-concealed


def test_d10_concealed():
    flag, cert = is_p_concealed(dihedral(10), 2)
    assert flag
    assert cert == ((1, 2), (5, 6))


def test_s5_not_concealed():
    flag, cert = is_p_concealed(sym(5), 2)
    assert not flag
    assert isinstance(cert, frozenset)
    assert len(cert) in (2, 3)  # a subset with even-size orbit


def test_agl32_concealed(group):
    flag, _ = is_p_concealed(group("AGL3(2)"), 3)
    assert flag


def test_odd_order_not_divisible():
    flag, cert = is_p_concealed(cyclic(3), 2)
    assert not flag and cert == "group order not divisible by p"


def test_degree_cap():
    with pytest.raises(ValueError):
        is_p_concealed(sym(25), 2)


def test_concealed_dual_implementations(group):
    cases = [
        (dihedral(10), 2, True),
        (sym(5), 2, False),
        (sym(5), 3, True),
        (group("A5"), 3, True),
        (cyclic(6), 3, False),  # singleton orbit has size 6
        (dihedral(12), 2, False),
    ]
    for H, p, expected in cases:
        flag, _ = is_p_concealed(H, p)
        assert flag is expected
        assert p_concealed_by_counting(H, p) is expected


# ---------------------------------------------------------------------------
# regular orbits on ordered partitions


def test_c3_regular_orbit():
    P = cyclic(3)
    w = regular_orbit_on_partitions(P, 2)
    assert w is not None
    # lexicographically first witness under the k-ary point encoding
    assert w.parts == (frozenset({0, 1}), frozenset({2}))


def test_d8_no_regular_2_partition():
    assert regular_orbit_on_partitions(dihedral(8), 2) is None


def test_d8_regular_3_partition():
    w = regular_orbit_on_partitions(dihedral(8), 3)
    assert w is not None
    assert w.parts == (frozenset({0, 1}), frozenset({2}), frozenset({3}))


def test_witness_stabilizer_is_trivial():
    for P, k in ((cyclic(5), 2), (dihedral(8), 3), (cyclic(4), 3)):
        w = regular_orbit_on_partitions(P, k)
        assert w is not None
        stab = 0
        for g in P.elements():
            if all(
                frozenset(g[x] for x in part) == part for part in w.parts
            ):
                stab += 1
        assert stab == 1


# ---------------------------------------------------------------------------
# block systems


def test_d8_maximal_blocks():
    data = maximal_block_system(dihedral(8))
    assert sorted(tuple(sorted(b)) for b in data.blocks) == [(0, 2), (1, 3)]
    assert data.induced.order() == 2


def test_c6_maximal_blocks():
    data = maximal_block_system(cyclic(6))
    assert sorted(len(b) for b in data.blocks) == [3, 3]
    assert data.induced.order() == 2


def test_primitive_rejected():
    with pytest.raises(ValueError):
        maximal_block_system(sym(4))


def test_is_primitive():
    assert is_primitive(sym(4))
    assert not is_primitive(dihedral(8))
    assert is_primitive(cyclic(5))


def test_kernel_stabilizes_all_blocks():
    data = maximal_block_system(dihedral(12))
    for g in data.kernel.generators:
        for block in data.blocks:
            assert frozenset(g[x] for x in block) == frozenset(block)


# ---------------------------------------------------------------------------
# concealment under induced actions


def test_induced_concealed_wreath():
    G = wreath(cyclic(2), dihedral(10))
    assert G.degree == 10 and G.order() == 320
    assert induced_concealed_check(G, 2) is True


def test_induced_concealed_catalog_imprimitive():
    for entry in default_catalog():
        if entry.expected_order > 300:
            continue
        G = entry.build()
        if not isinstance(G, PermGroup) or G.degree > 12:
            continue
        if not G.is_transitive() or is_primitive(G):
            continue
        for p in (2, 3):
            if G.order() % p == 0:
                assert induced_concealed_check(G, p) is True, (entry.name, p)
