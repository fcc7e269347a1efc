"""Partitions and hook lengths; power-set and set-partition orbit tests;
block systems of imprimitive permutation groups.

Subsets of the domain are bitmasks; generator images of masks go through
per-generator 8-bit chunk tables so orbit sweeps over all 2^n subsets stay
cheap (hard cap n <= 24).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from math import factorial

from .numtheory import valuation
from .permgroup import PermGroup, action_kernel, pinv

POWERSET_CAP = 24
PARTITION_ENUM_CAP = 16


# ---------------------------------------------------------------------------
# partitions and hooks


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p <= 0 for p in parts):
            raise ValueError("parts must be positive")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("parts must be weakly decreasing")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition(())
        cols = [sum(1 for p in self.parts if p > j) for j in range(self.parts[0])]
        return Partition(tuple(cols))

    def hooks(self) -> list[int]:
        """All hook lengths h_{ij} = arm + leg + 1, row by row."""
        conj = self.conjugate().parts
        out = []
        for i, row in enumerate(self.parts):
            for j in range(row):
                out.append((row - j - 1) + (conj[j] - i - 1) + 1)
        return out

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def hook_degree(la: Partition) -> int:
    """n! over the product of the hook lengths; always an exact integer."""
    prod = 1
    for h in la.hooks():
        prod *= h
    degree, rem = divmod(factorial(la.n), prod)
    assert rem == 0, "hook product does not divide n!"
    return degree


@cache
def syt_count(parts: tuple[int, ...]) -> int:
    """Standard Young tableaux count by corner-removal recursion (oracle
    for hook_degree; deliberately avoids the hook formula)."""
    if not parts:
        return 1
    total = 0
    for i, row in enumerate(parts):
        if i + 1 < len(parts) and parts[i + 1] == row:
            continue  # not a removable corner
        smaller = list(parts)
        smaller[i] -= 1
        if smaller[i] == 0:
            smaller.pop(i)
        total += syt_count(tuple(smaller))
    return total


def partitions(n: int):
    """All partitions of n, parts weakly decreasing, lex-descending order."""

    def gen(remaining: int, maximum: int, prefix: tuple[int, ...]):
        if remaining == 0:
            yield Partition(prefix)
            return
        for part in range(min(remaining, maximum), 0, -1):
            yield from gen(remaining - part, part, prefix + (part,))

    yield from gen(n, n, ())


def hook_partition(n: int, p: int) -> Partition:
    """The distinguished partition of n whose degree has p-part exactly p.

    Requires odd p with p <= n < p^2, n > 4 and (n, p) != (6, 3).  Writing
    n = a*p + b with 1 <= a < p and 0 <= b < p, the partition is (ap, 1^b)
    for b > 0 and (ap - 2, 2) for b = 0.
    """
    if p == 2 or p < 2:
        raise ValueError("p must be an odd prime")
    if not (p <= n < p * p):
        raise ValueError(f"need p <= n < p^2, got n={n}, p={p}")
    if n <= 4:
        raise ValueError("need n > 4")
    if (n, p) == (6, 3):
        raise ValueError("(n, p) = (6, 3) is excluded")
    a, b = divmod(n, p)
    if b:
        la = Partition((a * p,) + (1,) * b)
    else:
        la = Partition((a * p - 2, 2))
    assert valuation(hook_degree(la), p) == 1, "p-part of the degree is not p"
    return la


# ---------------------------------------------------------------------------
# power-set orbits (p-concealed)


def _chunk_tables(perm, n: int, n_chunks: int):
    """Chunk tables for one permutation: image of an 8-bit block of points.

    Entries with bits beyond the degree are never queried (masks < 2^n)."""
    chunks = []
    for c in range(n_chunks):
        base = 8 * c
        width = min(8, n - base)
        table = [0] * 256
        for m in range(1 << width):
            img = 0
            mm = m
            while mm:
                low = mm & -mm
                img |= 1 << perm[base + low.bit_length() - 1]
                mm ^= low
            table[m] = img
        chunks.append(table)
    return chunks


def _mask_tables(G: PermGroup):
    """Per-generator chunk tables for fast subset images."""
    n = G.degree
    n_chunks = (n + 7) // 8
    tables = [_chunk_tables(g, n, n_chunks) for g in G.generators]
    return n_chunks, tables


def _mask_orbits(G: PermGroup):
    """Yield (orbit size, smallest mask) over all 2^n subsets."""
    n = G.degree
    if n > POWERSET_CAP:
        raise ValueError(f"degree {n} exceeds the power-set cap {POWERSET_CAP}")
    n_chunks, tables = _mask_tables(G)
    total = 1 << n
    seen = bytearray(total)
    for start in range(total):
        if seen[start]:
            continue
        seen[start] = 1
        queue = [start]
        size = 1
        for m in queue:
            for chunks in tables:
                img = 0
                for c in range(n_chunks):
                    img |= chunks[c][(m >> (8 * c)) & 255]
                if not seen[img]:
                    seen[img] = 1
                    size += 1
                    queue.append(img)
        yield size, start


def is_p_concealed(H: PermGroup, p: int):
    """(flag, certificate): p divides |H| and every orbit on the power set
    of the domain has p'-size.

    Certificate: sorted (size, count) summary when true; an offending
    subset (as a frozenset of points) or an explanatory string when false.
    """
    if H.order() % p:
        return False, "group order not divisible by p"
    counts: dict[int, int] = {}
    for size, mask in _mask_orbits(H):
        if size % p == 0:
            offender = frozenset(i for i in range(H.degree) if mask >> i & 1)
            return False, offender
        counts[size] = counts.get(size, 0) + 1
    return True, tuple(sorted(counts.items()))


def p_concealed_by_counting(H: PermGroup, p: int, order_cap: int = 2000) -> bool:
    """Independent implementation: for each subset, count its stabilizer by
    scanning all group elements; the orbit has p'-size iff the stabilizer
    order carries the full p-part of |H|."""
    order = H.order()
    if order % p:
        return False
    if order > order_cap:
        raise ValueError(f"order {order} exceeds the counting cap {order_cap}")
    full = valuation(order, p)
    n = H.degree
    n_chunks = (n + 7) // 8
    element_tables = [_chunk_tables(h, n, n_chunks) for h in H.elements()]
    for mask in range(1 << n):
        stab = 0
        for chunks in element_tables:
            img = 0
            for c in range(n_chunks):
                img |= chunks[c][(mask >> (8 * c)) & 255]
            if img == mask:
                stab += 1
        if valuation(stab, p) != full:
            return False
    return True


# ---------------------------------------------------------------------------
# ordered set partitions


@dataclass(frozen=True)
class OrderedSetPartition:
    """An ordered tuple of pairwise disjoint subsets covering the domain;
    empty parts are allowed."""

    n: int
    parts: tuple[frozenset, ...]

    def __post_init__(self):
        union: set[int] = set()
        total = 0
        for part in self.parts:
            union |= part
            total += len(part)
        if total != self.n or union != set(range(self.n)):
            raise ValueError("parts must partition the domain")

    def assignment(self) -> tuple[int, ...]:
        out = [0] * self.n
        for idx, part in enumerate(self.parts):
            for point in part:
                out[point] = idx
        return tuple(out)


def regular_orbit_on_partitions(
    P: PermGroup, k: int, cap: int = PARTITION_ENUM_CAP
) -> OrderedSetPartition | None:
    """Lexicographically first ordered k-part partition of the domain whose
    stabilizer in P is trivial, or None if no orbit is regular.

    Partitions are encoded as base-k assignment vectors; the action of g
    moves the assignment of i to g[i].
    """
    n = P.degree
    if n > cap:
        raise ValueError(f"degree {n} exceeds the enumeration cap {cap}")
    nontrivial = [g for g in P.elements() if g != P.ident]
    inverse = [pinv(g) for g in nontrivial]
    assignment = [0] * n
    while True:
        if all(
            any(assignment[gi[i]] != assignment[i] for i in range(n))
            for gi in inverse
        ):
            parts = tuple(
                frozenset(i for i in range(n) if assignment[i] == j)
                for j in range(k)
            )
            return OrderedSetPartition(n, parts)
        # increment the base-k counter (last point least significant)
        pos = n - 1
        while pos >= 0 and assignment[pos] == k - 1:
            assignment[pos] = 0
            pos -= 1
        if pos < 0:
            return None
        assignment[pos] += 1


# ---------------------------------------------------------------------------
# block systems


def minimal_block_containing(G: PermGroup, seed) -> tuple[int, ...]:
    """Smallest block of the transitive group G containing the seed points
    (classic union-find congruence closure)."""
    n = G.degree
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    seed = list(seed)
    queue: list[tuple[int, int]] = []

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx
            queue.append((rx, ry))

    for pt in seed[1:]:
        union(seed[0], pt)
    while queue:
        x, y = queue.pop()
        for g in G.generators:
            union(g[x], g[y])
    root = find(seed[0])
    return tuple(sorted(i for i in range(n) if find(i) == root))


def is_primitive(G: PermGroup) -> bool:
    """True iff the transitive group G admits only trivial blocks."""
    if not G.is_transitive():
        raise ValueError("primitivity is defined for transitive groups")
    n = G.degree
    for i in range(1, n):
        if len(minimal_block_containing(G, (0, i))) < n:
            return False
    return True


@dataclass
class BlockSystemData:
    """A maximal (coarsest proper) block system with its kernel and the
    induced action on the translates."""

    blocks: tuple[tuple[int, ...], ...]
    kernel: PermGroup
    induced: PermGroup


def maximal_block_system(G: PermGroup) -> BlockSystemData:
    """A block system through a maximal proper block, with kernel and
    induced action; the induced action is checked to be primitive."""
    if not G.is_transitive():
        raise ValueError("block systems require a transitive group")
    n = G.degree
    minimal = {
        minimal_block_containing(G, (0, i)) for i in range(1, n)
    }
    minimal = {b for b in minimal if len(b) < n}
    if not minimal:
        raise ValueError("group is primitive: no proper block exists")
    # join-closure: all blocks through 0 are joins of the minimal ones
    blocks = set(minimal)
    frontier = list(minimal)
    while frontier:
        b = frontier.pop()
        for c in list(blocks):
            joined = minimal_block_containing(G, tuple(set(b) | set(c)))
            if len(joined) < n and joined not in blocks:
                blocks.add(joined)
                frontier.append(joined)
    delta = max(blocks, key=lambda b: (len(b), [-x for x in b]))
    # translates of delta tile the domain
    translates = [delta]
    seen_points = set(delta)
    queue = [delta]
    index = {delta: 0}
    for block in queue:
        for g in G.generators:
            img = tuple(sorted(g[x] for x in block))
            if img not in index:
                assert not (set(img) & seen_points), "translates overlap"
                index[img] = len(translates)
                translates.append(img)
                seen_points.update(img)
                queue.append(img)
    assert len(seen_points) == n
    images = []
    for g in G.generators:
        images.append(
            tuple(
                index[tuple(sorted(g[x] for x in translates[i]))]
                for i in range(len(translates))
            )
        )
    induced = PermGroup(len(translates), images, name=f"{G.name}|blocks")
    assert is_primitive(induced), "induced action on a maximal block system must be primitive"
    kernel = action_kernel(G, images, len(translates))
    return BlockSystemData(tuple(translates), kernel, induced)


def induced_concealed_check(G: PermGroup, p: int) -> bool:
    """Implication test for imprimitive transitive G: if G is p-concealed
    on its domain then the induced action on a maximal block system is
    p-concealed; vacuously true when G is not p-concealed."""
    concealed, _ = is_p_concealed(G, p)
    if not concealed:
        return True
    system = maximal_block_system(G)
    induced_concealed, _ = is_p_concealed(system.induced, p)
    return induced_concealed
