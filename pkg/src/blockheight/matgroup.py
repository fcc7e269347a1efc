"""Matrix groups over prime fields acting on V = F_p^n at desk scale.

Vectors are row tuples acted on from the right (v |-> v*g), matching the
left-to-right composition of the permutation layer.  Space enumeration is
capped (default p^n <= 729; fixtures needing 2^11 points pass a larger
bound explicitly).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .numtheory import is_prime
from .permgroup import BoundExceeded, PermGroup

SPACE_BOUND = 729
LARGE_SPACE_BOUND = 2048


# ---------------------------------------------------------------------------
# matrix / vector helpers (tuples of tuples, entries in 0..p-1)


def mat_identity(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def mat_mul(a, b, p: int):
    n = len(a)
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) % p for col in bt)
        for row in a
    )


def vec_mat(v, m, p: int):
    n = len(v)
    return tuple(
        sum(v[i] * m[i][j] for i in range(n)) % p for j in range(n)
    )


def mat_inv(m, p: int):
    """Inverse by Gauss-Jordan; raises ValueError on singular input."""
    n = len(m)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        pivot = next((r for r in range(c, n) if aug[r][c] % p), None)
        if pivot is None:
            raise ValueError("singular matrix")
        aug[c], aug[pivot] = aug[pivot], aug[c]
        inv = pow(aug[c][c], -1, p)
        aug[c] = [x * inv % p for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [(x - f * y) % p for x, y in zip(aug[r], aug[c])]
    return tuple(tuple(row[n:]) for row in aug)


def rref(rows, p: int):
    """Reduced row echelon form over F_p; returns tuple of nonzero rows."""
    rows = [list(r) for r in rows]
    if not rows:
        return ()
    n = len(rows[0])
    out: list[list[int]] = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    for row in rows[:r]:
        out.append(row)
    return tuple(tuple(row) for row in out)


# ---------------------------------------------------------------------------


@dataclass
class VectorOrbits:
    """Orbit sizes on all of V (zero included), ascending, with reps."""

    sizes: tuple[int, ...]
    representatives: tuple[tuple[int, ...], ...]


@dataclass
class ImprimitivityReport:
    """Results of checking a supplied direct-sum decomposition."""

    n_parts: int
    part_dims: tuple[int, ...]
    induced_group: PermGroup
    part_stabilizer_transitive: bool
    induced_primitive: bool
    induced_p_concealed: bool
    concealed_certificate: object


class MatGroup:
    """A subgroup of GL_n(p) given by generating matrices."""

    def __init__(self, dim: int, prime: int, generators, name: str = "") -> None:
        if not is_prime(prime) or prime >= 2**8:
            raise ValueError(f"prime {prime} out of range")
        self.dim = dim
        self.prime = prime
        self.name = name
        gens = []
        for g in generators:
            g = tuple(tuple(int(x) % prime for x in row) for row in g)
            if len(g) != dim or any(len(row) != dim for row in g):
                raise ValueError("generator has wrong shape")
            mat_inv(g, prime)  # raises on singular input
            gens.append(g)
        self.generators = tuple(gens)
        self._perm_cache: dict[int, PermGroup] = {}

    def __repr__(self) -> str:
        tag = self.name or f"dim {self.dim} mod {self.prime}"
        return f"MatGroup({tag}, {len(self.generators)} gens)"

    @property
    def space_size(self) -> int:
        return self.prime**self.dim

    def identity_matrix(self):
        return mat_identity(self.dim)

    # ---- vector plumbing ----------------------------------------------

    def vector_index(self, v) -> int:
        out = 0
        for c in reversed(v):
            out = out * self.prime + c
        return out

    def vector_from_index(self, k: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.dim):
            out.append(k % self.prime)
            k //= self.prime
        return tuple(out)

    def _check_space(self, bound: int) -> None:
        if self.space_size > bound:
            raise BoundExceeded(
                f"p^n = {self.space_size} exceeds the space bound {bound}"
            )

    # ---- orbits --------------------------------------------------------

    def vector_orbits(self, bound: int = SPACE_BOUND) -> VectorOrbits:
        """Orbit sizes on all p^n vectors, ascending; deterministic reps."""
        self._check_space(bound)
        seen = [False] * self.space_size
        orbits: list[tuple[int, tuple[int, ...]]] = []
        for start in range(self.space_size):
            if seen[start]:
                continue
            seen[start] = True
            rep = self.vector_from_index(start)
            queue = [rep]
            size = 1
            for v in queue:
                for g in self.generators:
                    w = vec_mat(v, g, self.prime)
                    wi = self.vector_index(w)
                    if not seen[wi]:
                        seen[wi] = True
                        size += 1
                        queue.append(w)
            orbits.append((size, rep))
        orbits.sort(key=lambda t: (t[0], self.vector_index(t[1])))
        return VectorOrbits(
            tuple(s for s, _ in orbits), tuple(r for _, r in orbits)
        )

    def order(self, bound: int = 10**6) -> int:
        """|G| by orbit-stabilizer on the image of the standard basis.

        The stabilizer of the full basis tuple is trivial, so the orbit is
        regular and its size is the group order; independent of (and a
        cross-check for) the permutation-group order.
        """
        basis = tuple(
            tuple(int(i == j) for j in range(self.dim)) for i in range(self.dim)
        )
        seen = {basis}
        queue = [basis]
        for t in queue:
            for g in self.generators:
                img = tuple(vec_mat(v, g, self.prime) for v in t)
                if img not in seen:
                    if len(seen) >= bound:
                        raise BoundExceeded(f"group order exceeds {bound}")
                    seen.add(img)
                    queue.append(img)
        return len(seen)

    # ---- structure ------------------------------------------------------

    def as_perm_group(self, bound: int = SPACE_BOUND) -> PermGroup:
        """Faithful permutation action on all p^n vectors (zero fixed)."""
        self._check_space(bound)
        if bound not in self._perm_cache:
            images = []
            for g in self.generators:
                images.append(
                    tuple(
                        self.vector_index(
                            vec_mat(self.vector_from_index(i), g, self.prime)
                        )
                        for i in range(self.space_size)
                    )
                )
            self._perm_cache[bound] = PermGroup(
                self.space_size, images, name=self.name
            )
        return self._perm_cache[bound]

    def is_p_exceptional(self, bound: int = SPACE_BOUND):
        """(flag, certificate): p divides |G| and all orbit sizes are p'.

        Certificate is the full ascending orbit-size list when true; the
        representative of an offending orbit (or the note that p does not
        divide |G|) when false.
        """
        orbs = self.vector_orbits(bound)
        order = self.as_perm_group(bound).order()
        if order % self.prime:
            return False, "group order not divisible by p"
        for size, rep in zip(orbs.sizes, orbs.representatives):
            if size % self.prime == 0:
                return False, rep
        return True, orbs.sizes

    def spin(self, vectors) -> tuple[tuple[int, ...], ...]:
        """rref basis of the smallest invariant subspace containing vectors."""
        basis = list(rref(list(vectors), self.prime))
        queue = list(basis)
        for v in queue:
            for g in self.generators:
                w = vec_mat(v, g, self.prime)
                stacked = rref(basis + [w], self.prime)
                if len(stacked) > len(basis):
                    basis = list(stacked)
                    queue.append(w)
        return rref(basis, self.prime)

    def is_irreducible(self, bound: int = SPACE_BOUND) -> bool:
        """No proper nonzero invariant subspace, by spinning every line."""
        self._check_space(bound)
        p, n = self.prime, self.dim
        for rep in self._line_reps():
            if len(self.spin([rep])) < n:
                return False
        return True

    def _line_reps(self):
        """Canonical representatives of 1-spaces: leading coefficient 1."""
        p, n = self.prime, self.dim
        for k in range(self.space_size):
            v = self.vector_from_index(k)
            lead = next((c for c in v if c), None)
            if lead == 1:
                yield v

    # ---- imprimitivity --------------------------------------------------

    def check_imprimitive_decomposition(
        self, parts, bound: int = SPACE_BOUND
    ) -> ImprimitivityReport:
        """Verify a supplied direct-sum decomposition V = V_1 + ... + V_r.

        Raises ValueError if the parts do not form a direct sum or are not
        permuted by the group.  Otherwise reports: transitivity of the
        part-1 stabilizer on V_1 minus zero, and primitivity plus
        p-concealedness of the induced action on the parts.
        """
        from .combinat import is_p_concealed, is_primitive

        p, n = self.prime, self.dim
        bases = [rref(part, p) for part in parts]
        dims = [len(b) for b in bases]
        if any(d == 0 for d in dims):
            raise ValueError("empty part in decomposition")
        stacked = rref([row for b in bases for row in b], p)
        if sum(dims) != n or len(stacked) != n:
            raise ValueError("parts do not form a direct-sum decomposition")
        index_of_part = {b: i for i, b in enumerate(bases)}

        def part_image(i, g):
            img = rref([vec_mat(v, g, p) for v in bases[i]], p)
            if img not in index_of_part:
                raise ValueError(
                    f"group does not permute the parts (part {i} breaks)"
                )
            return index_of_part[img]

        r = len(bases)
        induced_images = []
        for g in self.generators:
            induced_images.append(tuple(part_image(i, g) for i in range(r)))
        induced = PermGroup(r, induced_images, name=f"{self.name}|parts")

        # Schreier generators for the stabilizer of part 0, as matrices
        transversal = {0: self.identity_matrix()}
        queue = [0]
        stab_gens = []
        for i in queue:
            t = transversal[i]
            for g, gbar in zip(self.generators, induced_images):
                j = gbar[i]
                tg = mat_mul(t, g, p)
                if j not in transversal:
                    transversal[j] = tg
                    queue.append(j)
                else:
                    schreier = mat_mul(tg, mat_inv(transversal[j], p), p)
                    stab_gens.append(schreier)

        # transitivity of the stabilizer on the nonzero vectors of part 0
        v0 = bases[0][0]
        seen = {v0}
        queue2 = [v0]
        for v in queue2:
            for g in stab_gens:
                w = vec_mat(v, g, p)
                if w not in seen:
                    seen.add(w)
                    queue2.append(w)
        transitive = len(seen) == p ** dims[0] - 1

        primitive = is_primitive(induced) if induced.is_transitive() else False
        concealed, cert = is_p_concealed(induced, p)
        return ImprimitivityReport(
            n_parts=r,
            part_dims=tuple(dims),
            induced_group=induced,
            part_stabilizer_transitive=transitive,
            induced_primitive=primitive,
            induced_p_concealed=concealed,
            concealed_certificate=cert,
        )


# ---------------------------------------------------------------------------
# module-level spellings of the contract operations


def vector_orbits(M: MatGroup, bound: int = SPACE_BOUND) -> VectorOrbits:
    return M.vector_orbits(bound)


def is_p_exceptional(M: MatGroup, bound: int = SPACE_BOUND):
    return M.is_p_exceptional(bound)


def is_irreducible(M: MatGroup, bound: int = SPACE_BOUND) -> bool:
    return M.is_irreducible(bound)


def as_perm_group(M: MatGroup, bound: int = SPACE_BOUND) -> PermGroup:
    return M.as_perm_group(bound)


def check_imprimitive_decomposition(M: MatGroup, parts, bound: int = SPACE_BOUND):
    return M.check_imprimitive_decomposition(parts, bound)
