"""p-block distribution, defects, and character heights, exactly.

Central characters omega_chi(K_j) = |K_j| chi(g_j) / chi(1) are algebraic
integers; we verify that directly (hard error otherwise) by checking the
power-basis coordinates, then reduce them into F_{p^m} through a
deterministically chosen maximal ideal over p.  Two rows lie in the same
p-block iff their reduced central characters agree on every class.  The
partition is recomputed under a second, Galois-inequivalent reduction when
one exists and the two partitions are required to agree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chartab import CharacterTable
from .cyclo import reduce_exponent_vector
from .gf import GF
from .numtheory import multiplicative_order, p_prime_part, valuation


def omega_coords(table: CharacterTable, r: int, j: int) -> tuple[int, ...]:
    """Power-basis integer coordinates of omega_chi_r(K_j) over Q(zeta_e_j).

    Asserts integrality: |K_j| * chi(g_j) must be divisible by chi(1)
    coordinate-wise, which is exactly the statement that omega is an
    algebraic integer.
    """
    d = table.degrees[r]
    n_j = table.classes.sizes[j]
    e_j = table.classes.element_orders[j]
    scaled = [n_j * m for m in table.mults[r][j]]
    coords = reduce_exponent_vector(e_j, scaled)
    out = []
    for c in coords:
        q, rem = divmod(c, d)
        assert rem == 0, (
            f"central character not integral at row {r}, class {j}"
        )
        out.append(q)
    return tuple(out)


class ReductionContext:
    """A ring homomorphism Z[zeta_e] -> F_{p^m} determined by u = image of
    zeta_e; u is the lex-smallest element of order e' (the p'-part of e),
    or a fixed Galois-inequivalent alternative when variant=1."""

    def __init__(self, p: int, e: int, variant: int = 0) -> None:
        self.p = p
        self.e = e
        self.e_prime = p_prime_part(e, p)
        m = 1 if self.e_prime == 1 else multiplicative_order(p, self.e_prime)
        self.field = GF(p, m)
        u = self.field.element_of_order(self.e_prime)
        if variant:
            j = self._second_exponent()
            assert j is not None, "no Galois-inequivalent reduction exists"
            u = self.field.pow(u, j)
        self.u = u
        self._basis_cache: dict[int, list[tuple[int, ...]]] = {}

    def _second_exponent(self) -> int | None:
        """Smallest j coprime to e' outside <p mod e'>; None if every
        admissible choice is Frobenius-equivalent to the first."""
        ep = self.e_prime
        if ep <= 2:
            return None
        frob = {1}
        t = self.p % ep
        while t not in frob:
            frob.add(t)
            t = t * self.p % ep
        for j in range(2, ep):
            if _gcd(j, ep) == 1 and j not in frob:
                return j
        return None

    def has_second_reduction(self) -> bool:
        return self._second_exponent() is not None

    def _basis_images(self, e_j: int) -> list[tuple[int, ...]]:
        """Images of the power basis 1, zeta_{e_j}, ..., zeta^{phi(e_j)-1}."""
        if e_j not in self._basis_cache:
            assert self.e % e_j == 0
            u_j = self.field.pow(self.u, self.e // e_j)
            images = [self.field.one]
            deg = len(reduce_exponent_vector(e_j, [0]))
            for _ in range(deg - 1):
                images.append(self.field.mul(images[-1], u_j))
            self._basis_cache[e_j] = images
        return self._basis_cache[e_j]

    def reduce_coords(self, e_j: int, coords) -> tuple[int, ...]:
        """Image in F_{p^m} of the element with the given power-basis
        coordinates over Q(zeta_{e_j})."""
        basis = self._basis_images(e_j)
        acc = self.field.zero
        for c, b in zip(coords, basis):
            if c % self.p:
                acc = self.field.add(acc, self.field.scalar_mul(c, b))
        return acc


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


@dataclass
class BlockDistribution:
    """The p-blocks of a character table.

    blocks[i] lists row indices; block 0 is the principal block.  heights
    and defects follow the usual normalization: for chi in B,
    h(chi) = v_p(chi(1)) - (a - d(B)) with a = v_p(|G|) and
    d(B) = a - min_{chi in B} v_p(chi(1)).
    """

    table: CharacterTable
    prime: int
    a: int
    blocks: tuple[tuple[int, ...], ...]
    defects: tuple[int, ...]
    heights: tuple[tuple[int, ...], ...]

    @property
    def n_blocks(self) -> int:
        return len(self.blocks)

    def principal_rows(self) -> tuple[int, ...]:
        return self.blocks[0]

    def block_of_row(self, r: int) -> int:
        for i, rows in enumerate(self.blocks):
            if r in rows:
                return i
        raise ValueError(f"row {r} not in any block")

    def defect(self, i: int = 0) -> int:
        return self.defects[i]

    def max_height(self, i: int = 0) -> int:
        return max(self.heights[i])

    def min_positive_height(self, i: int = 0) -> int | None:
        """mh(B): the least height > 0 among the block's rows, or None when
        every height is zero (reported as infinity downstream)."""
        positive = [h for h in self.heights[i] if h > 0]
        return min(positive) if positive else None

    def height_zero_count(self, i: int = 0) -> int:
        return sum(1 for h in self.heights[i] if h == 0)

    def to_json_dict(self) -> dict:
        table = self.table
        return {
            "group": table.group.name or "G",
            "order": table.group.order(),
            "prime": self.prime,
            "a": self.a,
            "n_blocks": self.n_blocks,
            "blocks": [
                {
                    "index": i,
                    "principal": i == 0,
                    "rows": list(rows),
                    "degrees": [table.degrees[r] for r in rows],
                    "defect": self.defects[i],
                    "heights": list(self.heights[i]),
                    "mh": self.min_positive_height(i),
                    "max_height": self.max_height(i),
                }
                for i, rows in enumerate(self.blocks)
            ],
        }


def _signatures(table: CharacterTable, ctx: ReductionContext):
    k = table.n_classes
    orders = table.classes.element_orders
    sigs = []
    for r in range(len(table.degrees)):
        sig = tuple(
            ctx.reduce_coords(orders[j], omega_coords(table, r, j))
            for j in range(k)
        )
        sigs.append(sig)
    return sigs


def block_distribution(
    table: CharacterTable, p: int, check_second_reduction: bool = True
) -> BlockDistribution:
    """Partition Irr(G) into p-blocks and attach defects and heights."""
    n = table.group.order()
    a = valuation(n, p) if n % p == 0 else 0
    ctx = ReductionContext(p, table.exponent)
    sigs = _signatures(table, ctx)

    partition: dict[tuple, list[int]] = {}
    for r, sig in enumerate(sigs):
        partition.setdefault(sig, []).append(r)
    blocks = sorted(partition.values(), key=lambda rows: rows[0])
    assert blocks[0][0] == 0  # principal block leads (it contains row 0)

    if check_second_reduction and ctx.has_second_reduction():
        ctx2 = ReductionContext(p, table.exponent, variant=1)
        sigs2 = _signatures(table, ctx2)
        partition2: dict[tuple, list[int]] = {}
        for r, sig in enumerate(sigs2):
            partition2.setdefault(sig, []).append(r)
        blocks2 = sorted(partition2.values(), key=lambda rows: rows[0])
        assert blocks == blocks2, (
            "block partition depends on the choice of reduction"
        )

    defects = []
    heights = []
    for rows in blocks:
        min_v = min(valuation(table.degrees[r], p) for r in rows)
        defects.append(a - min_v)
        heights.append(tuple(valuation(table.degrees[r], p) - min_v for r in rows))
        assert all(h >= 0 for h in heights[-1]) and 0 in heights[-1]
        if defects[-1] == 0:
            assert len(rows) == 1, "defect-0 block is not a singleton"
    return BlockDistribution(
        table, p, a, tuple(tuple(b) for b in blocks), tuple(defects),
        tuple(heights),
    )


def mh_of_p_group(table: CharacterTable, p: int) -> int | None:
    """mh(P) for a p-group P: least positive v_p(chi(1)), None if abelian.

    Computed through the block machinery, which doubles as a check that a
    p-group has a single block of full defect.
    """
    n = table.group.order()
    assert n == p ** valuation(n, p), "group is not a p-group"
    dist = block_distribution(table, p, check_second_reduction=False)
    assert dist.n_blocks == 1, "p-group with more than one p-block"
    assert dist.defects[0] == dist.a, "p-group block without full defect"
    return dist.min_positive_height(0)


@dataclass
class HeightProfile:
    """Per-row heights plus the two mh quantities of the main inequality.

    mh_B0: least positive height in the principal block (None = infinity).
    mh_D:  least v_p(phi(1)) over nonlinear irreducible characters of the
           defect group of B_0, i.e. a Sylow p-subgroup (None = infinity,
           exactly when the Sylow subgroup is abelian).
    """

    prime: int
    heights: tuple[int, ...]
    mh_B0: int | None
    mh_D: int | None


def height_profile(
    table: CharacterTable,
    partition: BlockDistribution,
    sylow_table: CharacterTable,
) -> HeightProfile:
    """Flatten the block heights and compute mh(B_0) and mh(P)."""
    p = partition.prime
    assert partition.table is table
    heights = [0] * len(table.degrees)
    for rows, hs in zip(partition.blocks, partition.heights):
        for r, h in zip(rows, hs):
            heights[r] = h
    mh_b0 = partition.min_positive_height(0)
    nonlinear = [d for d in sylow_table.degrees if d > 1]
    mh_d = min(valuation(d, p) for d in nonlinear) if nonlinear else None
    return HeightProfile(p, tuple(heights), mh_b0, mh_d)


def covering_relation(
    table_G: CharacterTable, table_N: CharacterTable, p: int
) -> set[tuple[int, int]]:
    """All pairs (i, j) with block i of G covering block j of N.

    B covers b iff some chi in B has a restriction constituent in b; N must
    be normal in G and act on the same points.
    """
    dist_G = block_distribution(table_G, p, check_second_reduction=False)
    dist_N = block_distribution(table_N, p, check_second_reduction=False)
    matrix = table_G.restriction_matrix(table_N)
    relation: set[tuple[int, int]] = set()
    for i, rows in enumerate(dist_G.blocks):
        for r in rows:
            for s, m in enumerate(matrix[r]):
                if m > 0:
                    relation.add((i, dist_N.block_of_row(s)))
    return relation


def covered_principal_blocks(
    table_G: CharacterTable, table_N: CharacterTable, p: int
) -> set[int]:
    """Indices of p-blocks of N covered by B_0(G); N normal in G, acting on
    the same points."""
    dist_G = block_distribution(table_G, p, check_second_reduction=False)
    dist_N = block_distribution(table_N, p, check_second_reduction=False)
    covered: set[int] = set()
    for r in dist_G.principal_rows():
        mults = table_G.restriction_constituents(table_N, r)
        for s, m in enumerate(mults):
            if m > 0:
                covered.add(dist_N.block_of_row(s))
    return covered


def is_p_constrained_single_block(
    G, p: int, table: CharacterTable | None = None
) -> tuple[bool, bool | None]:
    """(hypothesis, conclusion) pair for the p-constrained single-block test.

    hypothesis: O_{p'}(G) = 1 and C_G(O_p(G)) <= O_p(G).
    conclusion: G has exactly one p-block (None when hypothesis fails and no
    table was supplied; the implication is what callers assert).
    """
    hypothesis = False
    if G.p_prime_core(p).order() == 1:
        Q = G.p_core(p)
        C = G.centralizer_of_subgroup(Q)
        hypothesis = C.is_subgroup_of(Q)
    if table is None:
        if not hypothesis:
            return hypothesis, None
        from .chartab import character_table

        table = character_table(G)
    dist = block_distribution(table, p, check_second_reduction=False)
    return hypothesis, dist.n_blocks == 1
