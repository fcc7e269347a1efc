"""Exact character tables of finite permutation groups (Dixon-Schneider).

The table is computed by simultaneous diagonalization of class matrices over
a prime field F_ell with ell = 1 (mod exp(G)) and ell > 2*sqrt(|G|), then
lifted to exact cyclotomic values through root-of-unity multiplicity vectors.
Every lift is checked against the modular data, and verify_orthogonality()
reproves both orthogonality relations in exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

import numpy as np

from .cyclo import Cyclotomic, reduce_exponent_vector
from .numtheory import multiplicative_order, next_prime_in_ap, sqrt_mod_prime
from .permgroup import BoundExceeded, ConjugacyClassData, PermGroup, pinv, pmul

MAX_ORDER = 20000
MAX_CLASSES = 60


# ---------------------------------------------------------------------------
# class multiplication coefficients


def class_mult_coefficient(
    classes: ConjugacyClassData, i: int, j: int, k: int, z=None
) -> int:
    """a_{ijk} = #{(x, y) in K_i x K_j : x*y = z} for a fixed z in K_k.

    z may be overridden with any member of K_k; the count is independent of
    the choice, which tests exploit.
    """
    if z is None:
        z = classes.representatives[k]
    count = 0
    for x in classes.members[i]:
        if classes.class_of[pmul(pinv(x), z)] == j:
            count += 1
    return count


def class_mult_coefficients(classes: ConjugacyClassData) -> list[list[list[int]]]:
    """The full tensor a[i][j][k]; costs |G| * k products."""
    return [class_matrix(classes, i) for i in range(len(classes.representatives))]


def class_matrix(classes: ConjugacyClassData, i: int) -> list[list[int]]:
    """The matrix A_i with A_i[j][m] = a_{ijm}; costs |K_i| * k products."""
    k = len(classes.representatives)
    A = [[0] * k for _ in range(k)]
    inverted = [pinv(x) for x in classes.members[i]]
    for m, z in enumerate(classes.representatives):
        class_of = classes.class_of
        col = [0] * k
        for xi in inverted:
            col[class_of[pmul(xi, z)]] += 1
        for j in range(k):
            A[j][m] = col[j]
    return A


# ---------------------------------------------------------------------------
# modular linear algebra (numpy int64; ell^2 * MAX_CLASSES stays below 2^63)


def _rref_mod(M: np.ndarray, ell: int):
    """Row-reduce mod ell; returns (rref, pivot columns)."""
    M = M.copy() % ell
    rows, cols = M.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivot = next((i for i in range(r, rows) if M[i, c] % ell), None)
        if pivot is None:
            continue
        if pivot != r:
            M[[r, pivot]] = M[[pivot, r]]
        M[r] = M[r] * pow(int(M[r, c]), -1, ell) % ell
        for i in range(rows):
            if i != r and M[i, c]:
                M[i] = (M[i] - M[i, c] * M[r]) % ell
        pivots.append(c)
        r += 1
    return M[:r], pivots


def _nullspace_mod(M: np.ndarray, ell: int) -> np.ndarray:
    """Canonical (rref) basis of the right nullspace mod ell, as rows."""
    R, pivots = _rref_mod(M, ell)
    cols = M.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for idx, c in enumerate(free):
        basis[idx, c] = 1
        for r, pc in enumerate(pivots):
            basis[idx, pc] = (-int(R[r, c])) % ell
    if len(basis):
        basis, _ = _rref_mod(basis, ell)
    return basis


def _charpoly_mod(M: np.ndarray, ell: int) -> list[int]:
    """Characteristic polynomial mod ell (ascending), via Hessenberg form."""
    H = M.copy() % ell
    n = H.shape[0]
    for c in range(n - 2):
        pivot = next((r for r in range(c + 1, n) if H[r, c] % ell), None)
        if pivot is None:
            continue
        if pivot != c + 1:
            H[[c + 1, pivot]] = H[[pivot, c + 1]]
            H[:, [c + 1, pivot]] = H[:, [pivot, c + 1]]
        inv = pow(int(H[c + 1, c]), -1, ell)
        for r in range(c + 2, n):
            factor = int(H[r, c]) * inv % ell
            if factor:
                H[r] = (H[r] - factor * H[c + 1]) % ell
                H[:, c + 1] = (H[:, c + 1] + factor * H[:, r]) % ell
    # p_m = charpoly of leading m x m minor of the Hessenberg matrix
    polys: list[list[int]] = [[1]]
    for m in range(1, n + 1):
        # (x - H[m-1,m-1]) * p_{m-1}
        prev = polys[m - 1]
        poly = [0] + prev
        for idx, c in enumerate(prev):
            poly[idx] = (poly[idx] - int(H[m - 1, m - 1]) * c) % ell
        prod = 1
        for i in range(m - 2, -1, -1):
            prod = prod * int(H[i + 1, i]) % ell
            coeff = int(H[i, m - 1]) * prod % ell
            if coeff:
                for idx, c in enumerate(polys[i]):
                    poly[idx] = (poly[idx] - coeff * c) % ell
        polys.append([c % ell for c in poly])
    return polys[n]


def _poly_roots_mod(coeffs: list[int], ell: int) -> list[int]:
    """All roots in F_ell by vectorized evaluation (ell is small)."""
    xs = np.arange(ell, dtype=np.int64)
    acc = np.zeros(ell, dtype=np.int64)
    for c in reversed(coeffs):
        acc = (acc * xs + c) % ell
    return sorted(int(x) for x in xs[acc == 0])


# ---------------------------------------------------------------------------
# the table


@dataclass
class CharacterTable:
    """Exact character table; values are cyclotomic, rows are irreducible.

    Row r, class j carries a multiplicity vector mu of length ord(g_j) with
    chi_r(g_j) = sum_t mu[t] * zeta^t, zeta = exp(2*pi*i/ord(g_j)); these
    integer vectors are the workhorse for exact orthogonality and blocks.
    """

    group: PermGroup
    classes: ConjugacyClassData
    exponent: int
    modulus: int
    degrees: tuple[int, ...]
    mults: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self) -> None:
        self._value_cache: dict[tuple[int, int], Cyclotomic] = {}

    @property
    def n_classes(self) -> int:
        return len(self.classes.representatives)

    @property
    def class_sizes(self) -> tuple[int, ...]:
        return tuple(self.classes.sizes)

    def value(self, r: int, j: int) -> Cyclotomic:
        key = (r, j)
        if key not in self._value_cache:
            e_j = self.classes.element_orders[j]
            self._value_cache[key] = Cyclotomic.from_exponent_vector(
                e_j, self.mults[r][j]
            )
        return self._value_cache[key]

    def row_values(self, r: int) -> list[Cyclotomic]:
        return [self.value(r, j) for j in range(self.n_classes)]

    def char_degrees(self) -> tuple[int, ...]:
        """Sorted set of distinct irreducible character degrees cd(G)."""
        return tuple(sorted(set(self.degrees)))

    cd = char_degrees

    def b(self) -> int:
        """Largest irreducible character degree."""
        return max(self.degrees)

    @property
    def trivial_index(self) -> int:
        return 0

    # ---- exact verification -------------------------------------------

    def _pair_row_product(self, r: int, s: int) -> list[int]:
        """sum_j n_j * chi_r(g_j) * conj(chi_s(g_j)) as a power-basis vector."""
        e = self.exponent
        acc = [0] * e
        for j in range(self.n_classes):
            e_j = self.classes.element_orders[j]
            mu, nu = self.mults[r][j], self.mults[s][j]
            n_j = self.classes.sizes[j]
            stride = e // e_j
            # correlation c_m = sum_{t-u=m mod e_j} mu_t nu_u
            for t, a in enumerate(mu):
                if not a:
                    continue
                na = n_j * a
                for u, b in enumerate(nu):
                    if b:
                        acc[((t - u) % e_j) * stride] += na * b
        return reduce_exponent_vector(e, acc)

    def _pair_column_product(self, i: int, j: int) -> list[int]:
        """sum_r chi_r(g_i) * conj(chi_r(g_j)) as a power-basis vector."""
        e = self.exponent
        e_i = self.classes.element_orders[i]
        e_j = self.classes.element_orders[j]
        si, sj = e // e_i, e // e_j
        acc = [0] * e
        for r in range(len(self.degrees)):
            mu, nu = self.mults[r][i], self.mults[r][j]
            for t, a in enumerate(mu):
                if not a:
                    continue
                for u, b in enumerate(nu):
                    if b:
                        acc[(t * si - u * sj) % e] += a * b
        return reduce_exponent_vector(e, acc)

    def verify_orthogonality(self) -> bool:
        """Re-prove both orthogonality relations in exact integer arithmetic.

        Raises AssertionError with the offending pair on any failure.  This
        deliberately recomputes the column sums instead of inferring them
        from the row relations.
        """
        n = self.group.order()
        k = self.n_classes
        deg = len(reduce_exponent_vector(self.exponent, [0]))
        for r in range(k):
            for s in range(r, k):
                got = self._pair_row_product(r, s)
                want = [n if (r == s) else 0] + [0] * (deg - 1)
                assert got == want, f"row orthogonality fails at ({r}, {s}): {got}"
        for i in range(k):
            for j in range(i, k):
                got = self._pair_column_product(i, j)
                cent = n // self.classes.sizes[i]
                want = [cent if (i == j) else 0] + [0] * (deg - 1)
                assert got == want, f"column orthogonality fails at ({i}, {j}): {got}"
        return True

    # ---- kernels and quotients ----------------------------------------

    def kernel_classes(self, r: int) -> list[int]:
        """Indices of classes on which chi_r takes the value chi_r(1)."""
        d = self.degrees[r]
        out = []
        for j in range(self.n_classes):
            mu = self.mults[r][j]
            if mu[0] == d and not any(mu[1:]):
                out.append(j)
        return out

    def characters_with_kernel_containing(self, N: PermGroup) -> list[int]:
        """Rows whose kernel contains the normal subgroup N."""
        inside = [
            j
            for j, rep in enumerate(self.classes.representatives)
            if N.contains(rep)
        ]
        out = []
        for r in range(len(self.degrees)):
            kc = set(self.kernel_classes(r))
            if all(j in kc for j in inside):
                out.append(r)
        return out

    # ---- restriction --------------------------------------------------

    def restriction_constituents(self, sub_table: "CharacterTable", r: int) -> list[int]:
        """Multiplicities of sub_table's rows in chi_r restricted to H <= G.

        H must act on the same points as G (same degree).  Exact; asserts
        every inner product is a non-negative integer.
        """
        H = sub_table.group
        if H.degree != self.group.degree:
            raise ValueError("subgroup must act on the same points")
        g_class = [
            self.classes.class_of[rep] for rep in sub_table.classes.representatives
        ]
        out = []
        order_h = H.order()
        e_h = sub_table.exponent
        for s in range(sub_table.n_classes):
            # sum_j n_j chi_r(h_j) conj(psi_s(h_j)) by power-basis
            # correlation, the same integer engine as the orthogonality
            # checks; chi_r(h_j) is read off the fused class of G.
            acc = [0] * e_h
            for hj in range(sub_table.n_classes):
                mu = self.mults[r][g_class[hj]]
                nu = sub_table.mults[s][hj]
                e_j = len(mu)
                n_j = sub_table.classes.sizes[hj]
                stride = e_h // e_j
                for t, a in enumerate(mu):
                    if not a:
                        continue
                    na = n_j * a
                    for u, b in enumerate(nu):
                        if b:
                            acc[((t - u) % e_j) * stride] += na * b
            vec = reduce_exponent_vector(e_h, acc)
            assert not any(vec[1:]), f"non-integral restriction multiplicity {vec}"
            m, rem = divmod(vec[0], order_h)
            assert rem == 0, f"non-integral restriction multiplicity {vec}"
            assert m >= 0
            out.append(m)
        assert (
            sum(m * sub_table.degrees[s] for s, m in enumerate(out))
            == self.degrees[r]
        ), "restriction constituents do not account for the full degree"
        return out

    def restriction_matrix(self, sub_table: "CharacterTable") -> list[list[int]]:
        """Full constituent-multiplicity matrix, rows of G x rows of H."""
        return [
            self.restriction_constituents(sub_table, r)
            for r in range(len(self.degrees))
        ]

    # ---- output -------------------------------------------------------

    def class_label(self, j: int) -> str:
        order = self.classes.element_orders[j]
        earlier = sum(
            1 for i in range(j) if self.classes.element_orders[i] == order
        )
        return f"{order}{chr(ord('a') + earlier)}"

    def to_json_dict(self) -> dict:
        return {
            "group": self.group.name or "G",
            "order": self.group.order(),
            "exponent": self.exponent,
            "n_classes": self.n_classes,
            "classes": [
                {
                    "label": self.class_label(j),
                    "size": self.classes.sizes[j],
                    "element_order": self.classes.element_orders[j],
                }
                for j in range(self.n_classes)
            ],
            "degrees": list(self.degrees),
            "values": [
                [str(self.value(r, j)) for j in range(self.n_classes)]
                for r in range(len(self.degrees))
            ],
            "multiplicity_vectors": [
                [list(m) for m in row] for row in self.mults
            ],
        }

    def pretty(self) -> str:
        k = self.n_classes
        headers = [self.class_label(j) for j in range(k)]
        grid = [[""] + headers]
        grid.append(["size"] + [str(s) for s in self.classes.sizes])
        for r in range(k):
            grid.append(
                [f"X{r + 1}"] + [str(self.value(r, j)) for j in range(k)]
            )
        widths = [
            max(len(row[c]) for row in grid) for c in range(k + 1)
        ]
        lines = []
        for idx, row in enumerate(grid):
            lines.append("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
            if idx == 1:
                lines.append("-" * len(lines[-1]))
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# Dixon-Schneider


def _split_spaces(matrices, ell: int, k: int):
    """Common eigenvector directions of the class matrices, mod ell.

    `matrices` yields (index, numpy matrix) lazily in deterministic order;
    splitting stops as soon as every subspace is one-dimensional.
    """
    spaces: list[np.ndarray] = [np.eye(k, dtype=np.int64)]
    for _, A in matrices:
        if all(space.shape[0] == 1 for space in spaces):
            break
        new_spaces: list[np.ndarray] = []
        for space in spaces:
            d = space.shape[0]
            if d == 1:
                new_spaces.append(space)
                continue
            # restriction of A to the invariant subspace spanned by the rows
            _, pivots = _rref_mod(space, ell)
            images = A @ space.T % ell  # columns: A applied to basis vectors
            coords = images[pivots, :] % ell  # rref basis: coords sit at pivots
            assert np.array_equal(space.T @ coords % ell, images), (
                "class matrix does not preserve the subspace"
            )
            R = coords  # R[s, t]: A b_t = sum_s R[s,t] b_s
            roots = _poly_roots_mod(_charpoly_mod(R, ell), ell)
            pieces: list[np.ndarray] = []
            for lam in roots:
                null = _nullspace_mod(
                    (R - lam * np.eye(d, dtype=np.int64)) % ell, ell
                )
                if null.shape[0]:
                    vecs = null @ space % ell
                    vecs, _ = _rref_mod(vecs, ell)
                    pieces.append(vecs)
            assert sum(p.shape[0] for p in pieces) == d, (
                "restricted class matrix failed to diagonalize"
            )
            new_spaces.extend(pieces)
        spaces = new_spaces
    assert all(space.shape[0] == 1 for space in spaces), (
        "class matrices did not split the space completely"
    )
    assert len(spaces) == k
    return [space[0] for space in spaces]


def character_table(
    G: PermGroup,
    classes: ConjugacyClassData | None = None,
    max_order: int = MAX_ORDER,
    max_classes: int = MAX_CLASSES,
) -> CharacterTable:
    """Exact character table of G by the Dixon-Schneider algorithm."""
    n = G.order()
    if n > max_order:
        raise BoundExceeded(f"|G| = {n} exceeds the character-table bound {max_order}")
    if classes is None:
        classes = G.conjugacy_classes()
    k = len(classes.representatives)
    if k > max_classes:
        raise BoundExceeded(f"{k} classes exceeds the bound {max_classes}")
    e = G.exponent()
    ell = next_prime_in_ap(e, 1, 2 * (isqrt(n) + 1))

    if n == 1:
        return CharacterTable(G, classes, 1, ell, (1,), (((1,),),))

    def lazy_matrices():
        order = sorted(
            range(1, k), key=lambda i: (classes.sizes[i], i)
        )
        for i in order:
            yield i, np.array(class_matrix(classes, i), dtype=np.int64) % ell

    eigvecs = _split_spaces(lazy_matrices(), ell, k)

    inv_class = [classes.inverse_class(j) for j in range(k)]
    inv_sizes = [pow(classes.sizes[j], -1, ell) for j in range(k)]

    rows: list[tuple[int, tuple[tuple[int, ...], ...]]] = []
    # z has exact multiplicative order e modulo ell
    z = None
    for c in range(2, ell):
        t = pow(c, (ell - 1) // e, ell)
        if multiplicative_order(t, ell) == e:
            z = t
            break
    assert z is not None

    for w in eigvecs:
        w = [int(x) % ell for x in w]
        assert w[0] % ell, "eigenvector vanishes on the identity class"
        scale = pow(w[0], -1, ell)
        omega = [x * scale % ell for x in w]
        s = sum(
            omega[j] * omega[inv_class[j]] * inv_sizes[j] for j in range(k)
        ) % ell
        assert s, "degree reconstruction degenerated"
        d_sq = n % ell * pow(s, -1, ell) % ell
        d = sqrt_mod_prime(d_sq, ell)
        if d > ell // 2:
            d = ell - d
        assert 0 < d and d * d <= n, f"implausible degree {d}"
        chi_bar = [d * omega[j] % ell * inv_sizes[j] % ell for j in range(k)]
        assert chi_bar[0] == d % ell

        row_mults: list[tuple[int, ...]] = []
        for j in range(k):
            e_j = classes.element_orders[j]
            z_j = pow(z, e // e_j, ell)
            z_j_inv = pow(z_j, -1, ell)
            inv_ej = pow(e_j, -1, ell)
            powers = [classes.power_class(j, s_) for s_ in range(e_j)]
            mu = []
            for t in range(e_j):
                zt = pow(z_j_inv, t, ell)
                total = 0
                acc = 1
                for s_ in range(e_j):
                    total += chi_bar[powers[s_]] * acc
                    acc = acc * zt % ell
                mu_t = total % ell * inv_ej % ell
                assert mu_t <= d, f"multiplicity {mu_t} exceeds degree {d}"
                mu.append(mu_t)
            assert sum(mu) == d, "multiplicities do not sum to the degree"
            check = sum(m * pow(z_j, t, ell) for t, m in enumerate(mu)) % ell
            assert check == chi_bar[j], "lifted value disagrees with modular value"
            row_mults.append(tuple(mu))
        rows.append((d, tuple(row_mults)))

    assert sum(d * d for d, _ in rows) == n, "degrees violate sum-of-squares"

    def is_trivial(row) -> bool:
        d, mults = row
        return d == 1 and all(m[0] == 1 and sum(m) == 1 for m in mults)

    rows.sort(key=lambda row: (not is_trivial(row), row[0], row[1]))
    assert is_trivial(rows[0])
    degrees = tuple(d for d, _ in rows)
    mults = tuple(m for _, m in rows)
    return CharacterTable(G, classes, e, ell, degrees, mults)
