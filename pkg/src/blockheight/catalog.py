"""Built-in group constructors, shipped fixtures, and group file formats.

Permutation file format: UTF-8 lines, ``#`` starts a comment, a ``degree n``
header line, then one ``gen`` line per generator, either in cycle notation
``(1,2,3)(4,5)`` or as a 1-based image list ``[2,3,1,5,4]``.

Matrix file format: ``dim n`` and ``prime p`` header lines, then one
``gen [[row],[row],...]`` line per generator with entries in ``0..p-1``.
"""

from __future__ import annotations

import ast
import math
from dataclasses import dataclass, field
from importlib import resources
from typing import Callable, Optional, Union

from .gf import GF
from .matgroup import MatGroup
from .numtheory import factorize, is_prime
from .permgroup import PermGroup, format_cycles, parse_cycles

Group = Union[PermGroup, MatGroup]

_ORDER_CHECK_CAP = 200_000


# ---------------------------------------------------------------------------
# permutation-group builders


def sym(n: int) -> PermGroup:
    """Symmetric group on ``n`` points."""
    if n < 1:
        raise ValueError("sym: n must be >= 1")
    gens = []
    if n >= 2:
        gens.append(parse_cycles("(1,2)", n))
    if n >= 3:
        gens.append(tuple((i + 1) % n for i in range(n)))
    G = PermGroup(n, gens, name=f"S{n}")
    assert G.order() == math.factorial(n)
    return G


def alt(n: int) -> PermGroup:
    """Alternating group on ``n`` points."""
    if n < 1:
        raise ValueError("alt: n must be >= 1")
    if n < 3:
        return PermGroup(n, [], name=f"A{n}")
    gens = [parse_cycles("(1,2,3)", n)]
    if n > 3:
        if n % 2:
            gens.append(tuple((i + 1) % n for i in range(n)))
        else:
            gens.append((0,) + tuple(range(2, n)) + (1,))
    G = PermGroup(n, gens, name=f"A{n}")
    assert G.order() == math.factorial(n) // 2
    return G


def cyclic(n: int) -> PermGroup:
    """Cyclic group of order ``n`` acting on ``n`` points."""
    if n < 1:
        raise ValueError("cyclic: n must be >= 1")
    gens = [] if n == 1 else [tuple((i + 1) % n for i in range(n))]
    G = PermGroup(max(n, 1), gens, name=f"C{n}")
    assert G.order() == n
    return G


def dihedral(order: int) -> PermGroup:
    """Dihedral group of the given (even) order, acting on order/2 points."""
    if order % 2 or order < 6:
        raise ValueError("dihedral: order must be even and >= 6")
    n = order // 2
    rot = tuple((i + 1) % n for i in range(n))
    refl = tuple((n - i) % n for i in range(n))
    G = PermGroup(n, [rot, refl], name=f"D{order}")
    assert G.order() == order
    return G


def quaternion(order: int = 8) -> PermGroup:
    """Quaternion group of order 8 (via its 2-dimensional model over F_3)."""
    if order != 8:
        raise ValueError("quaternion: only order 8 supported")
    i_mat = [[0, 2], [1, 0]]
    j_mat = [[1, 1], [1, 2]]
    H = MatGroup(2, 3, [i_mat, j_mat]).as_perm_group()
    G = PermGroup(H.degree, H.generators, name="Q8")
    assert G.order() == 8 and not G.is_abelian()
    return G


def elementary_abelian(p: int, k: int) -> PermGroup:
    """Elementary abelian group of order p^k on p*k points."""
    if not is_prime(p):
        raise ValueError("elementary_abelian: p must be prime")
    if k < 1:
        raise ValueError("elementary_abelian: k must be >= 1")
    deg = p * k
    gens = []
    for c in range(k):
        img = list(range(deg))
        for i in range(p):
            img[c * p + i] = c * p + (i + 1) % p
        gens.append(tuple(img))
    G = PermGroup(deg, gens, name=f"EA({p},{k})")
    assert G.order() == p**k
    return G


def extraspecial(p: int, n: int, kind: str) -> PermGroup:
    """Extraspecial group of order p^3.

    For odd p, kind "+" is the exponent-p group (Heisenberg model) and "-"
    the exponent-p^2 group; for p = 2 they are D8 and Q8.
    """
    if n != 3:
        raise ValueError("extraspecial: only order p^3 supported")
    if kind not in ("+", "-"):
        raise ValueError("extraspecial: kind must be '+' or '-'")
    if not is_prime(p):
        raise ValueError("extraspecial: p must be prime")
    name = f"ES({p},3,{kind})"
    if p == 2:
        H = dihedral(8) if kind == "+" else quaternion(8)
        return PermGroup(H.degree, H.generators, name=name)
    if kind == "+":
        x = [[1, 1, 0], [0, 1, 0], [0, 0, 1]]
        y = [[1, 0, 0], [0, 1, 1], [0, 0, 1]]
        H = MatGroup(3, p, [x, y]).as_perm_group(bound=p**3)
        G = PermGroup(H.degree, H.generators, name=name)
        assert G.order() == p**3 and G.exponent() == p
        return G
    m = p * p
    a = tuple((i + 1) % m for i in range(m))
    b = tuple(i * (1 + p) % m for i in range(m))
    G = PermGroup(m, [a, b], name=name)
    assert G.order() == p**3 and G.exponent() == m
    return G


def wreath(A: PermGroup, B: PermGroup) -> PermGroup:
    """Permutation wreath product A wr B in its imprimitive action."""
    a, b = A.degree, B.degree
    deg = a * b
    gens = []
    for c in range(b):
        for g in A.generators:
            img = list(range(deg))
            for i in range(a):
                img[c * a + i] = c * a + g[i]
            gens.append(tuple(img))
    for h in B.generators:
        gens.append(tuple(h[i // a] * a + (i % a) for i in range(deg)))
    G = PermGroup(deg, gens, name=f"{A.name or 'A'}wr{B.name or 'B'}")
    assert G.order() == A.order() ** b * B.order()
    return G


def direct_product(*groups: PermGroup) -> PermGroup:
    """Direct product acting on the disjoint union of the factors' domains."""
    if not groups:
        raise ValueError("direct_product: at least one factor required")
    deg = sum(G.degree for G in groups)
    gens = []
    off = 0
    for G in groups:
        for g in G.generators:
            img = list(range(deg))
            for i in range(G.degree):
                img[off + i] = off + g[i]
            gens.append(tuple(img))
        off += G.degree
    P = PermGroup(deg, gens, name="x".join(G.name or "?" for G in groups))
    expected = math.prod(G.order() for G in groups)
    assert P.order() == expected
    return P


def mathieu11() -> PermGroup:
    """The Mathieu group M11 on 11 points (shipped generators)."""
    gens = [
        parse_cycles("(1,2,3,4,5,6,7,8,9,10,11)", 11),
        parse_cycles("(3,7,11,8)(4,10,5,6)", 11),
    ]
    G = PermGroup(11, gens, name="M11")
    if G.order() != 7920:
        raise ValueError("mathieu11: shipped generators failed the order check")
    return G


# ---------------------------------------------------------------------------
# matrix-group builders and linear/affine permutation groups


def _gl_order(n: int, p: int) -> int:
    q = p**n
    return math.prod(q - p**i for i in range(n))


def _primitive_root(p: int) -> int:
    F = GF(p, 1)
    return F.to_int(F.primitive_element())


def _gl_generators(n: int, p: int) -> list[list[list[int]]]:
    ident = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    gens = []
    if n >= 2:
        t = [row[:] for row in ident]
        t[0][1] = 1
        gens.append(t)
        c = [[1 if j == (i + 1) % n else 0 for j in range(n)] for i in range(n)]
        gens.append(c)
    if p > 2:
        d = [row[:] for row in ident]
        d[0][0] = _primitive_root(p)
        gens.append(d)
    return gens


def gl_mat(n: int, p: int) -> MatGroup:
    """GL_n(p) as a matrix group."""
    if n < 1:
        raise ValueError("gl_mat: n must be >= 1")
    if not is_prime(p):
        raise ValueError("gl_mat: p must be prime")
    M = MatGroup(n, p, _gl_generators(n, p), name=f"GL{n}({p})")
    expected = _gl_order(n, p)
    if expected <= _ORDER_CHECK_CAP:
        assert M.order() == expected
    return M


def sl_mat(n: int, p: int) -> MatGroup:
    """SL_n(p) as a matrix group."""
    if n < 1:
        raise ValueError("sl_mat: n must be >= 1")
    if not is_prime(p):
        raise ValueError("sl_mat: p must be prime")
    gens = []
    if n >= 2:
        ident = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        t = [row[:] for row in ident]
        t[0][1] = 1
        b = [[0] * n for _ in range(n)]
        for i in range(n - 1):
            b[i][i + 1] = 1
        b[n - 1][0] = (-1) ** (n - 1) % p
        gens = [t, b]
    M = MatGroup(n, p, gens, name=f"SL{n}({p})")
    expected = _gl_order(n, p) // (p - 1)
    if expected <= _ORDER_CHECK_CAP:
        assert M.order() == expected
    return M


def _prime_power(q: int) -> tuple[int, int]:
    fac = factorize(q)
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    ((p, m),) = fac.items()
    return p, m


def _sl2_generator_mats(F: GF):
    one, zero = F.one, F.zero
    zeta = F.primitive_element() if F.size > 2 else one
    return [
        ((one, one), (zero, one)),
        ((one, zeta), (zero, one)),
        ((one, zero), (one, one)),
        ((one, zero), (zeta, one)),
    ]


def psl2_proj(q: int) -> PermGroup:
    """PSL_2(q) acting on the q+1 points of the projective line."""
    p, m = _prime_power(q)
    if not 2 <= q <= 13:
        raise ValueError("psl2_proj: q must be a prime power in 2..13")
    F = GF(p, m)
    pts = [F.from_int(i) for i in range(q)]
    perms = []
    for ((a, b), (c, d)) in _sl2_generator_mats(F):
        img = []
        for x in pts:
            num = F.add(F.mul(x, a), c)
            den = F.add(F.mul(x, b), d)
            img.append(q if den == F.zero else F.to_int(F.mul(num, F.inv(den))))
        img.append(F.to_int(F.mul(a, F.inv(b))) if b != F.zero else q)
        perms.append(tuple(img))
    G = PermGroup(q + 1, perms, name=f"PSL2({q})")
    assert G.order() == q * (q * q - 1) // math.gcd(2, q - 1)
    return G


def sl2_proj(q: int) -> PermGroup:
    """SL_2(q) as a faithful permutation group.

    For even q this is the projective-line action (SL = PSL); for odd q the
    center acts trivially on the line, so the action on the q^2 - 1 nonzero
    vectors is used instead.
    """
    p, m = _prime_power(q)
    if not 2 <= q <= 13:
        raise ValueError("sl2_proj: q must be a prime power in 2..13")
    if p == 2:
        H = psl2_proj(q)
        return PermGroup(H.degree, H.generators, name=f"SL2({q})")
    F = GF(p, m)
    vecs = [
        (F.from_int(k // q), F.from_int(k % q)) for k in range(1, q * q)
    ]
    index = {v: i for i, v in enumerate(vecs)}
    perms = []
    for ((a, b), (c, d)) in _sl2_generator_mats(F):
        img = tuple(
            index[(F.add(F.mul(x, a), F.mul(y, c)), F.add(F.mul(x, b), F.mul(y, d)))]
            for (x, y) in vecs
        )
        perms.append(img)
    G = PermGroup(q * q - 1, perms, name=f"SL2({q})")
    assert G.order() == q * (q * q - 1)
    return G


def agl(n: int, p: int) -> PermGroup:
    """Affine group AGL_n(p) acting on the p^n vectors of F_p^n."""
    if n < 1:
        raise ValueError("agl: n must be >= 1")
    if not is_prime(p):
        raise ValueError("agl: p must be prime")
    deg = p**n
    vecs = []
    for k in range(deg):
        v, rest = [], k
        for _ in range(n):
            v.append(rest % p)
            rest //= p
        vecs.append(tuple(v))

    def vid(v):
        return sum(v[i] * p**i for i in range(n))

    trans = tuple(vid(((v[0] + 1) % p,) + v[1:]) for v in vecs)
    gens = [trans]
    for mat in _gl_generators(n, p):
        gens.append(
            tuple(
                vid(tuple(sum(v[i] * mat[i][j] for i in range(n)) % p for j in range(n)))
                for v in vecs
            )
        )
    G = PermGroup(deg, gens, name=f"AGL{n}({p})")
    expected = deg * _gl_order(n, p)
    if expected <= _ORDER_CHECK_CAP:
        assert G.order() == expected
    return G


def frobenius_affine(q: int, k: int) -> PermGroup:
    """The Frobenius group C_q^+ : C_k inside AGL_1(q), of order q*k.

    Requires k > 1 and k | q - 1.  With k = q - 1 this is all of AGL_1(q).
    """
    p, m = _prime_power(q)
    if k < 2 or (q - 1) % k:
        raise ValueError("frobenius_affine: k must divide q - 1 and exceed 1")
    F = GF(p, m)
    g = F.element_of_order(k)
    pts = [F.from_int(i) for i in range(q)]
    add1 = tuple(F.to_int(F.add(x, F.one)) for x in pts)
    mul = tuple(F.to_int(F.mul(x, g)) for x in pts)
    name = f"AGL1({q})" if k == q - 1 else f"F{q * k}"
    G = PermGroup(q, [add1, mul], name=name)
    assert G.order() == q * k
    return G


def agammal1(q: int) -> PermGroup:
    """The semilinear affine group AGammaL_1(q) on q points, order q(q-1)m."""
    p, m = _prime_power(q)
    F = GF(p, m)
    pts = [F.from_int(i) for i in range(q)]
    add1 = tuple(F.to_int(F.add(x, F.one)) for x in pts)
    zeta = F.primitive_element()
    mul = tuple(F.to_int(F.mul(x, zeta)) for x in pts)
    gens = [add1, mul]
    if m > 1:
        gens.append(tuple(F.to_int(F.pow(x, p)) for x in pts))
    G = PermGroup(q, gens, name=f"AGammaL1({q})")
    assert G.order() == q * (q - 1) * m
    return G


# ---------------------------------------------------------------------------
# file formats


def _logical_lines(text: str):
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield ln, line


def _literal(ln: int, body: str):
    try:
        return ast.literal_eval(body)
    except (ValueError, SyntaxError) as exc:
        raise ValueError(f"line {ln}: cannot parse {body!r}") from exc


def parse_perm_group(text: str, name: str = "") -> PermGroup:
    """Parse the permutation-group file format."""
    degree: Optional[int] = None
    gens = []
    for ln, line in _logical_lines(text):
        if degree is None:
            if not line.startswith("degree "):
                raise ValueError(f"line {ln}: expected 'degree n' header")
            try:
                degree = int(line[7:].strip())
            except ValueError:
                raise ValueError(f"line {ln}: bad degree {line[7:].strip()!r}")
            if degree < 1:
                raise ValueError(f"line {ln}: degree must be >= 1")
            continue
        if not line.startswith("gen "):
            raise ValueError(f"line {ln}: expected 'gen ...'")
        body = line[4:].strip()
        if body.startswith("["):
            images = _literal(ln, body)
            if not (
                isinstance(images, list)
                and all(isinstance(i, int) for i in images)
            ):
                raise ValueError(f"line {ln}: image list must hold integers")
            if len(images) != degree or sorted(images) != list(range(1, degree + 1)):
                raise ValueError(
                    f"line {ln}: image list is not a 1-based permutation "
                    f"of degree {degree}"
                )
            gens.append(tuple(i - 1 for i in images))
        elif body.startswith("(") or body == "()":
            try:
                gens.append(parse_cycles(body, degree))
            except ValueError as exc:
                raise ValueError(f"line {ln}: {exc}") from exc
        else:
            raise ValueError(f"line {ln}: generator must be cycles or an image list")
    if degree is None:
        raise ValueError("missing 'degree n' header")
    return PermGroup(degree, gens, name=name)


def serialize_perm_group(G: PermGroup) -> str:
    lines = [f"degree {G.degree}"]
    for g in G.generators:
        lines.append(f"gen {format_cycles(g)}")
    return "\n".join(lines) + "\n"


def parse_mat_group(text: str, name: str = "") -> MatGroup:
    """Parse the matrix-group file format."""
    dim: Optional[int] = None
    prime: Optional[int] = None
    gens = []
    gen_lines = []
    for ln, line in _logical_lines(text):
        if dim is None:
            if not line.startswith("dim "):
                raise ValueError(f"line {ln}: expected 'dim n' header")
            try:
                dim = int(line[4:].strip())
            except ValueError:
                raise ValueError(f"line {ln}: bad dim {line[4:].strip()!r}")
            if dim < 1:
                raise ValueError(f"line {ln}: dim must be >= 1")
            continue
        if prime is None:
            if not line.startswith("prime "):
                raise ValueError(f"line {ln}: expected 'prime p' header")
            try:
                prime = int(line[6:].strip())
            except ValueError:
                raise ValueError(f"line {ln}: bad prime {line[6:].strip()!r}")
            if not is_prime(prime):
                raise ValueError(f"line {ln}: {prime} is not prime")
            continue
        if not line.startswith("gen "):
            raise ValueError(f"line {ln}: expected 'gen [[row],...]'")
        mat = _literal(ln, line[4:].strip())
        if not (
            isinstance(mat, list)
            and len(mat) == dim
            and all(isinstance(row, list) and len(row) == dim for row in mat)
            and all(isinstance(e, int) for row in mat for e in row)
        ):
            raise ValueError(f"line {ln}: expected a {dim}x{dim} integer matrix")
        if any(not 0 <= e < prime for row in mat for e in row):
            raise ValueError(f"line {ln}: entries must lie in 0..{prime - 1}")
        gens.append(mat)
        gen_lines.append(ln)
    if dim is None:
        raise ValueError("missing 'dim n' header")
    if prime is None:
        raise ValueError("missing 'prime p' header")
    try:
        return MatGroup(dim, prime, gens, name=name)
    except ValueError as exc:
        for ln, mat in zip(gen_lines, gens):
            try:
                MatGroup(dim, prime, [mat])
            except ValueError:
                raise ValueError(f"line {ln}: {exc}") from exc
        raise


def serialize_mat_group(M: MatGroup) -> str:
    lines = [f"dim {M.dim}", f"prime {M.prime}"]
    for g in M.generators:
        body = "[" + ",".join(
            "[" + ",".join(str(e) for e in row) + "]" for row in g
        ) + "]"
        lines.append(f"gen {body}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# shipped fixtures


@dataclass(frozen=True)
class FixtureSpec:
    """Validation data recorded for a shipped fixture file."""

    kind: str  # "perm" | "mat"
    expected_order: int
    orbit_sizes: Optional[tuple[int, ...]] = None
    large: bool = False


FIXTURES: dict[str, FixtureSpec] = {
    "m11.pgrp": FixtureSpec("perm", 7920),
    "wr3.mgrp": FixtureSpec("mat", 24),
    "sl2_5_gl4_3.mgrp": FixtureSpec("mat", 120, (1, 40, 40)),
    "psl2_11_gl5_3.mgrp": FixtureSpec("mat", 1320, (1, 22, 110, 110)),
    "m11_gl5_3.mgrp": FixtureSpec("mat", 7920, (1, 22, 220)),
    "m23_gl11_2.mgrp": FixtureSpec("mat", 10200960, (1, 23, 253, 1771), large=True),
}


def fixture_text(name: str) -> str:
    if name not in FIXTURES:
        raise ValueError(f"unknown fixture {name!r}")
    return resources.files(__package__).joinpath("fixtures", name).read_text()


def load_fixture(name: str, validate: bool = True, deep: bool = False) -> Group:
    """Load a shipped fixture and check its recorded invariants.

    Order validation of the largest fixture is deferred to ``deep=True``;
    its orbit sizes are always checked.
    """
    spec = FIXTURES.get(name)
    if spec is None:
        raise ValueError(f"unknown fixture {name!r}")
    stem = name.rsplit(".", 1)[0]
    if spec.kind == "perm":
        G: Group = parse_perm_group(fixture_text(name), name=stem)
    else:
        G = parse_mat_group(fixture_text(name), name=stem)
    if validate:
        if spec.orbit_sizes is not None:
            assert isinstance(G, MatGroup)
            space = sum(spec.orbit_sizes) + 1
            got = G.vector_orbits(bound=max(space, 729)).sizes
            if got != spec.orbit_sizes:
                raise ValueError(
                    f"fixture {name}: orbit sizes {got} != {spec.orbit_sizes}"
                )
        if not spec.large:
            if G.order() != spec.expected_order:
                raise ValueError(f"fixture {name}: order check failed")
        elif deep:
            assert isinstance(G, MatGroup)
            P = G.as_perm_group(bound=G.space_size)
            if P.order() != spec.expected_order:
                raise ValueError(f"fixture {name}: order check failed")
    return G


# ---------------------------------------------------------------------------
# the default verification catalog


@dataclass(frozen=True)
class CatalogEntry:
    """One catalog group: a name, a pure constructor, and validation data."""

    name: str
    construction: str
    builder: Callable[[], Group] = field(compare=False, repr=False)
    expected_order: Optional[int] = None
    tags: frozenset[str] = frozenset()

    def build(self) -> Group:
        G = self.builder()
        if self.expected_order is not None and G.order() != self.expected_order:
            raise ValueError(
                f"catalog entry {self.name}: order {G.order()} != "
                f"{self.expected_order}"
            )
        return G


def _e(name, construction, builder, order, *tags) -> CatalogEntry:
    return CatalogEntry(name, construction, builder, order, frozenset(tags))


def default_catalog() -> tuple[CatalogEntry, ...]:
    """The built-in verification catalog, in a fixed deterministic order."""
    entries = [
        # cyclic and elementary abelian
        _e("C2", "cyclic(2)", lambda: cyclic(2), 2, "solvable"),
        _e("C3", "cyclic(3)", lambda: cyclic(3), 3, "solvable"),
        _e("C4", "cyclic(4)", lambda: cyclic(4), 4, "solvable"),
        _e("C5", "cyclic(5)", lambda: cyclic(5), 5, "solvable"),
        _e("C6", "cyclic(6)", lambda: cyclic(6), 6, "solvable"),
        _e("C7", "cyclic(7)", lambda: cyclic(7), 7, "solvable"),
        _e("C8", "cyclic(8)", lambda: cyclic(8), 8, "solvable", "p-group"),
        _e("C9", "cyclic(9)", lambda: cyclic(9), 9, "solvable", "p-group"),
        _e("C12", "cyclic(12)", lambda: cyclic(12), 12, "solvable"),
        _e("EA(2,2)", "elementary_abelian(2,2)", lambda: elementary_abelian(2, 2), 4,
           "solvable", "p-group"),
        _e("EA(2,3)", "elementary_abelian(2,3)", lambda: elementary_abelian(2, 3), 8,
           "solvable", "p-group"),
        _e("EA(3,2)", "elementary_abelian(3,2)", lambda: elementary_abelian(3, 2), 9,
           "solvable", "p-group"),
        _e("EA(5,2)", "elementary_abelian(5,2)", lambda: elementary_abelian(5, 2), 25,
           "solvable", "p-group"),
        # dihedral and quaternion
        _e("D8", "dihedral(8)", lambda: dihedral(8), 8, "solvable", "p-group"),
        _e("D10", "dihedral(10)", lambda: dihedral(10), 10, "solvable"),
        _e("D12", "dihedral(12)", lambda: dihedral(12), 12, "solvable"),
        _e("D16", "dihedral(16)", lambda: dihedral(16), 16, "solvable", "p-group"),
        _e("D24", "dihedral(24)", lambda: dihedral(24), 24, "solvable"),
        _e("D32", "dihedral(32)", lambda: dihedral(32), 32, "solvable", "p-group"),
        _e("D40", "dihedral(40)", lambda: dihedral(40), 40, "solvable"),
        _e("Q8", "quaternion(8)", lambda: quaternion(8), 8, "solvable", "p-group"),
        # extraspecial p^3 (all nonabelian groups of order p^3, p in {2,3,5};
        # the p = 2 pair is D8/Q8 above)
        _e("ES(3,3,+)", "extraspecial(3,3,+)", lambda: extraspecial(3, 3, "+"), 27,
           "solvable", "p-group"),
        _e("ES(3,3,-)", "extraspecial(3,3,-)", lambda: extraspecial(3, 3, "-"), 27,
           "solvable", "p-group"),
        _e("ES(5,3,+)", "extraspecial(5,3,+)", lambda: extraspecial(5, 3, "+"), 125,
           "solvable", "p-group"),
        _e("ES(5,3,-)", "extraspecial(5,3,-)", lambda: extraspecial(5, 3, "-"), 125,
           "solvable", "p-group"),
        # p-group wreath products
        _e("C4wrC2", "wreath(cyclic(4),cyclic(2))",
           lambda: wreath(cyclic(4), cyclic(2)), 32, "solvable", "p-group", "wreath"),
        _e("C3wrC3", "wreath(cyclic(3),cyclic(3))",
           lambda: wreath(cyclic(3), cyclic(3)), 81, "solvable", "p-group", "wreath"),
        # symmetric and alternating
        _e("S3", "sym(3)", lambda: sym(3), 6, "solvable"),
        _e("S4", "sym(4)", lambda: sym(4), 24, "solvable"),
        _e("S5", "sym(5)", lambda: sym(5), 120),
        _e("S6", "sym(6)", lambda: sym(6), 720),
        _e("S7", "sym(7)", lambda: sym(7), 5040),
        _e("S8", "sym(8)", lambda: sym(8), 40320),
        _e("A4", "alt(4)", lambda: alt(4), 12, "solvable"),
        _e("A5", "alt(5)", lambda: alt(5), 60, "simple"),
        _e("A6", "alt(6)", lambda: alt(6), 360, "simple"),
        _e("A7", "alt(7)", lambda: alt(7), 2520, "simple"),
        _e("A8", "alt(8)", lambda: alt(8), 20160, "simple"),
        # linear groups
        _e("SL2(3)", "sl2_proj(3)", lambda: sl2_proj(3), 24, "solvable", "linear"),
        _e("SL2(5)", "sl2_proj(5)", lambda: sl2_proj(5), 120, "linear"),
        _e("SL2(7)", "sl2_proj(7)", lambda: sl2_proj(7), 336, "linear"),
        _e("SL2(9)", "sl2_proj(9)", lambda: sl2_proj(9), 720, "linear"),
        _e("SL2(13)", "sl2_proj(13)", lambda: sl2_proj(13), 2184, "linear"),
        _e("GL2(3)", "gl_mat(2,3) as perms", lambda: gl_mat(2, 3).as_perm_group(),
           48, "solvable", "linear"),
        _e("PSL2(7)", "psl2_proj(7)", lambda: psl2_proj(7), 168, "simple", "linear"),
        _e("PSL2(8)", "psl2_proj(8)", lambda: psl2_proj(8), 504, "simple", "linear"),
        _e("PSL2(11)", "psl2_proj(11)", lambda: psl2_proj(11), 660, "simple", "linear"),
        _e("PSL2(13)", "psl2_proj(13)", lambda: psl2_proj(13), 1092, "simple", "linear"),
        # affine and Frobenius fixtures
        _e("F20", "frobenius_affine(5,4)", lambda: frobenius_affine(5, 4), 20,
           "solvable", "frobenius"),
        _e("F21", "frobenius_affine(7,3)", lambda: frobenius_affine(7, 3), 21,
           "solvable", "frobenius"),
        _e("F55", "frobenius_affine(11,5)", lambda: frobenius_affine(11, 5), 55,
           "solvable", "frobenius"),
        _e("AGL1(7)", "frobenius_affine(7,6)", lambda: frobenius_affine(7, 6), 42,
           "solvable", "affine"),
        _e("AGL1(8)", "frobenius_affine(8,7)", lambda: frobenius_affine(8, 7), 56,
           "solvable", "affine"),
        _e("AGammaL1(8)", "agammal1(8)", lambda: agammal1(8), 168,
           "solvable", "affine"),
        _e("AGL2(3)", "agl(2,3)", lambda: agl(2, 3), 432, "solvable", "affine"),
        _e("AGL3(2)", "agl(3,2)", lambda: agl(3, 2), 1344, "affine"),
        # sporadic
        _e("M11", "mathieu11()", mathieu11, 7920, "simple", "sporadic"),
        # mixed wreath products and semidirect-style fixtures
        _e("S3wrC2", "wreath(sym(3),cyclic(2))",
           lambda: wreath(sym(3), cyclic(2)), 72, "solvable", "wreath"),
        _e("C2wrS3", "wreath(cyclic(2),sym(3))",
           lambda: wreath(cyclic(2), sym(3)), 48, "solvable", "wreath"),
        _e("C5wrC2", "wreath(cyclic(5),cyclic(2))",
           lambda: wreath(cyclic(5), cyclic(2)), 50, "solvable", "wreath"),
        _e("C3wrS3", "wreath(cyclic(3),sym(3))",
           lambda: wreath(cyclic(3), sym(3)), 162, "solvable", "wreath"),
        # direct products
        _e("Q8xC3", "direct_product(quaternion(8),cyclic(3))",
           lambda: direct_product(quaternion(8), cyclic(3)), 24,
           "solvable", "product"),
        _e("D8xC5", "direct_product(dihedral(8),cyclic(5))",
           lambda: direct_product(dihedral(8), cyclic(5)), 40,
           "solvable", "product"),
        _e("S4xC3", "direct_product(sym(4),cyclic(3))",
           lambda: direct_product(sym(4), cyclic(3)), 72, "solvable", "product"),
        _e("S4xS3", "direct_product(sym(4),sym(3))",
           lambda: direct_product(sym(4), sym(3)), 144, "solvable", "product"),
        _e("A5xC2", "direct_product(alt(5),cyclic(2))",
           lambda: direct_product(alt(5), cyclic(2)), 120, "product"),
    ]
    names = [e.name for e in entries]
    assert len(names) == len(set(names))
    return tuple(entries)


def catalog_from_directory(path) -> tuple[CatalogEntry, ...]:
    """Build catalog entries from every .pgrp/.mgrp file in a directory."""
    import pathlib

    base = pathlib.Path(path)
    if not base.is_dir():
        raise ValueError(f"{path!r} is not a directory")
    entries = []
    for file in sorted(base.iterdir()):
        if file.suffix not in (".pgrp", ".mgrp"):
            continue
        text = file.read_text()
        stem = file.stem

        def make_builder(text=text, stem=stem, suffix=file.suffix):
            def build() -> Group:
                if suffix == ".pgrp":
                    return parse_perm_group(text, name=stem)
                return parse_mat_group(text, name=stem)

            return build

        entries.append(
            CatalogEntry(stem, f"file:{file.name}", make_builder(), None,
                         frozenset(["file"]))
        )
    return tuple(entries)
