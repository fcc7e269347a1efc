"""Finite permutation groups with exact structural queries.

Permutations are tuples of images acting on ``{0, ..., degree-1}``;
``p[i]`` is the image of ``i`` and products compose left-to-right
(``pmul(a, b)`` applies ``a`` first).  All group-level queries run off a
deterministic Schreier-Sims stabilizer chain, so every output is
reproducible run to run.
"""

from __future__ import annotations

import itertools
import re
import threading
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator, Optional, Sequence


class BoundExceeded(Exception):
    """An enumeration-backed query was asked about a group beyond its bound."""


# ---------------------------------------------------------------------------
# permutation helpers


def identity(degree: int) -> tuple[int, ...]:
    return tuple(range(degree))


def pmul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Product "a then b": (a*b)[i] = b[a[i]]."""
    return tuple(map(b.__getitem__, a))


def pinv(a: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(a)
    for i, j in enumerate(a):
        inv[j] = i
    return tuple(inv)


def ppow(a: Sequence[int], k: int) -> tuple[int, ...]:
    n = len(a)
    if k < 0:
        return ppow(pinv(a), -k)
    result = identity(n)
    base = tuple(a)
    while k:
        if k & 1:
            result = pmul(result, base)
        base = pmul(base, base)
        k >>= 1
    return result


def pconj(g: Sequence[int], h: Sequence[int]) -> tuple[int, ...]:
    """Conjugate g^h = h^-1 g h."""
    hi = pinv(h)
    return pmul(pmul(hi, g), h)


def perm_order(a: Sequence[int]) -> int:
    order = 1
    for c in cycles(a):
        order = order * len(c) // gcd(order, len(c))
    return order


def cycles(a: Sequence[int], include_fixed: bool = False) -> list[tuple[int, ...]]:
    """Disjoint cycle decomposition, cycles sorted by smallest moved point."""
    seen = [False] * len(a)
    out = []
    for start in range(len(a)):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        j = a[start]
        while j != start:
            cyc.append(j)
            seen[j] = True
            j = a[j]
        if len(cyc) > 1 or include_fixed:
            out.append(tuple(cyc))
    return out


def perm_from_cycles(cycs: Iterable[Sequence[int]], degree: int) -> tuple[int, ...]:
    images = list(range(degree))
    for cyc in cycs:
        for i, pt in enumerate(cyc):
            if not 0 <= pt < degree:
                raise ValueError(f"point {pt} out of range for degree {degree}")
            images[pt] = cyc[(i + 1) % len(cyc)]
    perm = tuple(images)
    if sorted(perm) != list(range(degree)):
        raise ValueError("cycles overlap; not a permutation")
    return perm


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int, one_based: bool = True) -> tuple[int, ...]:
    """Parse cycle notation like "(1,2,3)(4,5)"; points are 1-based by default."""
    stripped = re.sub(r"[\s]", "", text)
    if stripped in ("", "()"):
        return identity(degree)
    if _CYCLE_RE.sub("", stripped) != "":
        raise ValueError(f"bad cycle notation: {text!r}")
    shift = 1 if one_based else 0
    cycs = []
    for body in _CYCLE_RE.findall(stripped):
        if not body:
            continue
        pts = [int(tok) - shift for tok in body.split(",")]
        if len(pts) != len(set(pts)):
            raise ValueError(f"repeated point in cycle: {text!r}")
        cycs.append(pts)
    return perm_from_cycles(cycs, degree)


def format_cycles(a: Sequence[int], one_based: bool = True) -> str:
    shift = 1 if one_based else 0
    cycs = cycles(a)
    if not cycs:
        return "()"
    return "".join("(" + ",".join(str(p + shift) for p in c) + ")" for c in cycs)


# ---------------------------------------------------------------------------
# stabilizer chain


class _Level:
    """One level of a stabilizer chain: a base point, generators fixing all
    earlier base points, and a transversal {point: u} with base^u = point."""

    __slots__ = ("base", "gens", "transversal")

    def __init__(self, base: int):
        self.base = base
        self.gens: list[tuple[int, ...]] = []
        self.transversal: dict[int, tuple[int, ...]] = {}

    def rebuild_orbit(self, degree: int) -> None:
        ident = identity(degree)
        self.transversal = {self.base: ident}
        queue = [self.base]
        for pt in queue:
            u = self.transversal[pt]
            for g in self.gens:
                img = g[pt]
                if img not in self.transversal:
                    self.transversal[img] = pmul(u, g)
                    queue.append(img)


def _first_moved(perm: Sequence[int]) -> Optional[int]:
    for i, j in enumerate(perm):
        if i != j:
            return i
    return None


class PermGroup:
    """Permutation group on ``degree`` points given by generators.

    Immutable once constructed; the stabilizer chain and the various
    enumeration caches are built lazily under a lock.
    """

    def __init__(self, degree: int, generators: Iterable[Sequence[int]], name: str = ""):
        if degree < 1:
            raise ValueError("degree must be >= 1")
        gens = []
        seen = set()
        ident = identity(degree)
        for g in generators:
            t = tuple(g)
            if len(t) != degree or sorted(t) != list(range(degree)):
                raise ValueError(f"generator {t!r} is not a permutation of degree {degree}")
            if t != ident and t not in seen:
                gens.append(t)
                seen.add(t)
        self.degree = degree
        self.generators: tuple[tuple[int, ...], ...] = tuple(gens)
        self.name = name
        self._lock = threading.RLock()
        self._levels: Optional[list[_Level]] = None
        self._order: Optional[int] = None
        self._elements: Optional[tuple[tuple[int, ...], ...]] = None
        self._classes = None
        self._normals: Optional[tuple["PermGroup", ...]] = None
        self._cache: dict = {}

    # -- construction helpers ------------------------------------------------

    @classmethod
    def trivial(cls, degree: int = 1) -> "PermGroup":
        return cls(degree, [])

    @classmethod
    def from_cycles(cls, degree: int, cycle_strings: Iterable[str], name: str = "") -> "PermGroup":
        return cls(degree, [parse_cycles(s, degree) for s in cycle_strings], name=name)

    def __repr__(self) -> str:
        label = self.name or f"{len(self.generators)} gens"
        return f"PermGroup(degree={self.degree}, {label}, order={self.order()})"

    @property
    def ident(self) -> tuple[int, ...]:
        return identity(self.degree)

    # -- stabilizer chain ----------------------------------------------------

    def _chain(self) -> list[_Level]:
        with self._lock:
            if self._levels is None:
                self._levels = self._schreier_sims()
            return self._levels

    def _schreier_sims(self) -> list[_Level]:
        degree = self.degree
        levels: list[_Level] = []

        def add_strong_generator(perm: tuple[int, ...]) -> None:
            """Install a nontrivial strong generator at every level whose
            base-prefix it fixes, extending the chain if it fixes all bases."""
            j = 0
            while j < len(levels) and perm[levels[j].base] == levels[j].base:
                j += 1
            if j == len(levels):
                moved = _first_moved(perm)
                assert moved is not None
                levels.append(_Level(moved))
            for l in range(j + 1):
                levels[l].gens.append(perm)
                levels[l].rebuild_orbit(degree)

        def strip(perm: tuple[int, ...], start: int) -> tuple[int, ...]:
            g = perm
            for idx in range(start, len(levels)):
                lv = levels[idx]
                img = g[lv.base]
                if img not in lv.transversal:
                    return g
                g = pmul(g, pinv(lv.transversal[img]))
            return g

        def verify_level(idx: int) -> bool:
            """Sift all Schreier generators of level idx; returns True if the
            level was already complete."""
            lv = levels[idx]
            for pt in sorted(lv.transversal):
                u = lv.transversal[pt]
                for g in lv.gens:
                    ug = pmul(u, g)
                    rep = lv.transversal[g[pt]]
                    schreier = pmul(ug, pinv(rep))
                    if _first_moved(schreier) is None:
                        continue
                    residue = strip(schreier, idx + 1)
                    if _first_moved(residue) is not None:
                        add_strong_generator(residue)
                        return False
            return True

        for g in self.generators:
            add_strong_generator(g)
        # verify from the deepest level upward; restart after every addition
        idx = len(levels) - 1
        while idx >= 0:
            if verify_level(idx):
                idx -= 1
            else:
                idx = len(levels) - 1
        return levels

    def order(self) -> int:
        with self._lock:
            if self._order is None:
                n = 1
                for lv in self._chain():
                    n *= len(lv.transversal)
                self._order = n
            return self._order

    def __contains__(self, perm: Sequence[int]) -> bool:
        return self.contains(perm)

    def contains(self, perm: Sequence[int]) -> bool:
        g = tuple(perm)
        if len(g) != self.degree:
            return False
        for lv in self._chain():
            img = g[lv.base]
            if img not in lv.transversal:
                return False
            g = pmul(g, pinv(lv.transversal[img]))
        return _first_moved(g) is None

    def base_points(self) -> tuple[int, ...]:
        return tuple(lv.base for lv in self._chain())

    # -- element enumeration -------------------------------------------------

    ENUM_BOUND = 10**6

    def elements(self, bound: Optional[int] = None) -> tuple[tuple[int, ...], ...]:
        """All elements, sorted lexicographically. Errors above the bound."""
        limit = bound if bound is not None else self.ENUM_BOUND
        if self.order() > limit:
            raise BoundExceeded(f"order {self.order()} exceeds enumeration bound {limit}")
        with self._lock:
            if self._elements is None:
                out = [self.ident]
                for lv in reversed(self._chain()):
                    trans = list(lv.transversal.values())
                    out = [pmul(rest, u) for rest in out for u in trans]
                out.sort()
                self._elements = tuple(out)
            return self._elements

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.elements())

    # -- basic structural queries -------------------------------------------

    def orbit(self, point: int) -> tuple[int, ...]:
        seen = {point}
        queue = [point]
        for pt in queue:
            for g in self.generators:
                img = g[pt]
                if img not in seen:
                    seen.add(img)
                    queue.append(img)
        return tuple(sorted(seen))

    def orbits(self) -> tuple[tuple[int, ...], ...]:
        seen = set()
        out = []
        for pt in range(self.degree):
            if pt not in seen:
                orb = self.orbit(pt)
                seen.update(orb)
                out.append(orb)
        return tuple(out)

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def moved_points(self) -> tuple[int, ...]:
        moved = set()
        for g in self.generators:
            for i, j in enumerate(g):
                if i != j:
                    moved.add(i)
        return tuple(sorted(moved))

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(
            pmul(a, b) == pmul(b, a) for i, a in enumerate(gens) for b in gens[i + 1:]
        )

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and all(other.contains(g) for g in self.generators)

    def same_group(self, other: "PermGroup") -> bool:
        return (
            self.degree == other.degree
            and self.order() == other.order()
            and self.is_subgroup_of(other)
        )

    def subgroup(self, gens: Iterable[Sequence[int]], name: str = "") -> "PermGroup":
        sub = PermGroup(self.degree, gens, name=name)
        return sub

    def subgroup_generated(self, elems: Iterable[Sequence[int]], name: str = "") -> "PermGroup":
        return self.subgroup(elems, name=name)

    # -- conjugacy classes ---------------------------------------------------

    def conjugacy_classes(self, bound: Optional[int] = None) -> "ConjugacyClassData":
        with self._lock:
            if self._classes is None:
                self._classes = self._compute_classes(bound)
            return self._classes

    def _compute_classes(self, bound: Optional[int]) -> "ConjugacyClassData":
        elems = self.elements(bound)
        gens = self.generators
        class_of: dict[tuple[int, ...], int] = {}
        raw_classes: list[list[tuple[int, ...]]] = []
        for x in elems:
            if x in class_of:
                continue
            idx = len(raw_classes)
            members = [x]
            class_of[x] = idx
            queue = [x]
            for y in queue:
                for g in gens:
                    c = pconj(y, g)
                    if c not in class_of:
                        class_of[c] = idx
                        members.append(c)
                        queue.append(c)
            raw_classes.append(members)
        # deterministic ordering: identity first, then by (element order, size, min rep)
        keyed = []
        for members in raw_classes:
            rep = min(members)
            keyed.append((perm_order(rep), len(members), rep, members))
        keyed.sort(key=lambda t: (t[0] != 1, t[0], t[1], t[2]))
        reps = tuple(t[2] for t in keyed)
        sizes = tuple(t[1] for t in keyed)
        orders = tuple(t[0] for t in keyed)
        members_per_class = tuple(tuple(sorted(t[3])) for t in keyed)
        remap = {}
        for new_idx, t in enumerate(keyed):
            remap[class_of[t[2]]] = new_idx
        class_of = {x: remap[i] for x, i in class_of.items()}
        return ConjugacyClassData(
            group=self,
            representatives=reps,
            sizes=sizes,
            element_orders=orders,
            members=members_per_class,
            class_of=class_of,
        )

    def exponent(self) -> int:
        data = self.conjugacy_classes()
        e = 1
        for o in data.element_orders:
            e = e * o // gcd(e, o)
        return e

    def center(self) -> "PermGroup":
        gens = self.generators
        central = [
            x for x in self.elements() if all(pmul(x, g) == pmul(g, x) for g in gens)
        ]
        return self.subgroup(central, name="center")

    def centralizer(self, x: Sequence[int]) -> "PermGroup":
        """Centralizer of an element, by orbit-stabilizer on the conjugation orbit."""
        x = tuple(x)
        transversal = {x: self.ident}
        queue = [x]
        stab = self.subgroup([])
        stab_gens: list[tuple[int, ...]] = []
        for y in queue:
            t = transversal[y]
            for g in self.generators:
                c = pconj(y, g)
                tg = pmul(t, g)
                if c not in transversal:
                    transversal[c] = tg
                    queue.append(c)
                else:
                    schreier = pmul(tg, pinv(transversal[c]))
                    if _first_moved(schreier) is not None and not stab.contains(schreier):
                        stab_gens.append(schreier)
                        stab = self.subgroup(stab_gens)
        assert stab.order() * len(transversal) == self.order()
        return self.subgroup(stab_gens, name="centralizer")

    def centralizer_of_subgroup(self, H: "PermGroup") -> "PermGroup":
        """Centralizer of a subgroup, by orbit-stabilizer on the conjugation
        orbit of the tuple of H's generators."""
        base = tuple(H.generators)
        if not base:
            return self
        transversal: dict[tuple, tuple[int, ...]] = {base: self.ident}
        queue = [base]
        stab_gens: list[tuple[int, ...]] = []
        stab = self.subgroup([])
        for ys in queue:
            t = transversal[ys]
            for g in self.generators:
                c = tuple(pconj(y, g) for y in ys)
                tg = pmul(t, g)
                if c not in transversal:
                    transversal[c] = tg
                    queue.append(c)
                else:
                    schreier = pmul(tg, pinv(transversal[c]))
                    if _first_moved(schreier) is not None and not stab.contains(schreier):
                        stab_gens.append(schreier)
                        stab = self.subgroup(stab_gens)
        assert stab.order() * len(transversal) == self.order()
        return self.subgroup(stab_gens, name="centralizer_of_subgroup")

    def normalizer(self, H: "PermGroup") -> "PermGroup":
        """Normalizer of a subgroup, by scanning the element list."""
        norm_gens: list[tuple[int, ...]] = []
        norm = self.subgroup([])
        hgens = H.generators
        for g in self.elements():
            if norm.contains(g):
                continue
            if all(H.contains(pconj(h, g)) for h in hgens):
                norm_gens.append(g)
                norm = self.subgroup(norm_gens)
        return self.subgroup(norm_gens, name="normalizer")

    def setwise_stabilizer(self, points: Iterable[int]) -> "PermGroup":
        """Stabilizer of a set of points, by orbit-stabilizer on set images."""
        base = frozenset(points)
        transversal: dict[frozenset, tuple[int, ...]] = {base: self.ident}
        queue = [base]
        stab_gens: list[tuple[int, ...]] = []
        stab = self.subgroup([])
        for s in queue:
            t = transversal[s]
            for g in self.generators:
                img = frozenset(g[p] for p in s)
                tg = pmul(t, g)
                if img not in transversal:
                    transversal[img] = tg
                    queue.append(img)
                else:
                    schreier = pmul(tg, pinv(transversal[img]))
                    if _first_moved(schreier) is not None and not stab.contains(schreier):
                        stab_gens.append(schreier)
                        stab = self.subgroup(stab_gens)
        assert stab.order() * len(transversal) == self.order()
        return self.subgroup(stab_gens, name="setwise_stabilizer")

    def point_stabilizer(self, point: int) -> "PermGroup":
        return self.setwise_stabilizer([point])

    # -- normal structure ----------------------------------------------------

    def normal_closure(self, seeds: Iterable[Sequence[int]]) -> "PermGroup":
        gens = [tuple(s) for s in seeds if _first_moved(s) is not None]
        closure = self.subgroup(gens)
        queue = list(gens)
        for h in queue:
            for g in self.generators:
                c = pconj(h, g)
                if not closure.contains(c):
                    gens.append(c)
                    queue.append(c)
                    closure = self.subgroup(gens)
        return closure

    def derived_subgroup(self) -> "PermGroup":
        comms = []
        gens = self.generators
        for a in gens:
            for b in gens:
                comms.append(pmul(pmul(pinv(a), pinv(b)), pmul(a, b)))
        return self.normal_closure(comms)

    def is_solvable(self) -> bool:
        g = self
        while g.order() > 1:
            d = g.derived_subgroup()
            if d.order() == g.order():
                return False
            g = d
        return True

    def is_perfect(self) -> bool:
        return self.derived_subgroup().order() == self.order()

    def normal_subgroups(self, bound: Optional[int] = None) -> tuple["PermGroup", ...]:
        """All normal subgroups, via joins of class normal closures."""
        limit = bound if bound is not None else self.ENUM_BOUND
        if self.order() > limit:
            raise BoundExceeded(f"order {self.order()} exceeds bound {limit}")
        with self._lock:
            if self._normals is None:
                self._normals = self._compute_normals()
            return self._normals

    def _compute_normals(self) -> tuple["PermGroup", ...]:
        data = self.conjugacy_classes()
        seen: list[PermGroup] = [self.subgroup([])]

        def known(candidate: PermGroup) -> bool:
            return any(candidate.same_group(n) for n in seen)

        def add(candidate: PermGroup) -> bool:
            if known(candidate):
                return False
            seen.append(candidate)
            return True

        closures = []
        for members in data.members:
            cl = self.subgroup(members)  # class closure: already closed under conjugation
            closures.append(cl)
            add(cl)
        # close under joins
        changed = True
        while changed:
            changed = False
            current = list(seen)
            for a, b in itertools.combinations(current, 2):
                if a.order() == self.order() or b.order() == self.order():
                    continue
                join = self.subgroup(a.generators + b.generators)
                if add(join):
                    changed = True
        seen.sort(key=lambda n: (n.order(), sorted(n.generators)))
        return tuple(seen)

    def is_normal_in(self, G: "PermGroup") -> bool:
        return all(self.contains(pconj(h, g)) for h in self.generators for g in G.generators)

    def minimal_normal_subgroups(self) -> tuple["PermGroup", ...]:
        normals = [n for n in self.normal_subgroups() if 1 < n.order() < self.order()]
        out = []
        for n in normals:
            if not any(m.order() < n.order() and m.is_subgroup_of(n) for m in normals):
                out.append(n)
        if not out and self.order() > 1:
            out = [self]  # simple group: G is its own minimal normal subgroup
        return tuple(out)

    # -- p-local structure ---------------------------------------------------

    def sylow(self, p: int) -> "PermGroup":
        """A Sylow p-subgroup, by deterministic normalizer growth."""
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        target = 1
        n = self.order()
        while n % p == 0:
            n //= p
            target *= p
        Q = self.subgroup([])
        if target == 1:
            return Q
        p_elements = []
        for x in self.elements():
            o = perm_order(x)
            if o == 1:
                continue
            m = o
            while m % p == 0:
                m //= p
            if m == 1:
                p_elements.append(x)
            elif m < o:
                p_elements.append(ppow(x, m))
        p_elements = sorted(set(p_elements))
        qgens: list[tuple[int, ...]] = []
        while Q.order() < target:
            grown = False
            for z in p_elements:
                if Q.contains(z):
                    continue
                if all(Q.contains(pconj(h, z)) for h in qgens):
                    qgens.append(z)
                    Q = self.subgroup(qgens, name=f"sylow_{p}")
                    grown = True
                    break
            if not grown:  # no normalizing p-element left: Q is already Sylow
                break
        assert Q.order() == target, "sylow growth stalled below the full p-part"
        return Q

    def p_core(self, p: int) -> "PermGroup":
        """Largest normal p-subgroup."""
        best = self.subgroup([])
        for n in self.normal_subgroups():
            if _is_p_power(n.order(), p) and n.order() > best.order():
                best = n
        return best

    def p_prime_core(self, p: int) -> "PermGroup":
        """Largest normal subgroup of order prime to p."""
        best = self.subgroup([])
        for n in self.normal_subgroups():
            if n.order() % p != 0 and n.order() > best.order():
                best = n
        return best

    def p_residual(self, p: int) -> "PermGroup":
        """Smallest normal subgroup with p'-quotient: the normal closure of a Sylow p."""
        P = self.sylow(p)
        return self.normal_closure(P.generators)

    def pp_series(self, p: int) -> "SubnormalSeries":
        """Ascending alternating series of p-cores and p'-cores."""
        terms: list[PermGroup] = [self.subgroup([])]
        kinds: list[str] = []
        current = terms[0]
        while True:
            changed = False
            for kind in ("p", "p'"):
                if current.order() == 1:
                    action, Q = None, self
                else:
                    action = self.coset_action(current)
                    Q = action.group
                core = Q.p_core(p) if kind == "p" else Q.p_prime_core(p)
                if core.order() > 1:
                    lifted = core if action is None else action.preimage(core)
                    terms.append(lifted)
                    kinds.append(kind)
                    current = lifted
                    changed = True
            if not changed or current.order() == self.order():
                break
        reaches = current.order() == self.order()
        p_length = sum(1 for k in kinds if k == "p")
        return SubnormalSeries(
            group=self, terms=tuple(terms), kinds=tuple(kinds),
            reaches=reaches, p_length=p_length if reaches else None, p=p,
        )

    def is_p_solvable(self, p: int) -> bool:
        return self.pp_series(p).reaches

    # -- quotients -----------------------------------------------------------

    def coset_action(self, N: "PermGroup") -> "CosetAction":
        """Faithful action of G/N on the right cosets of a normal subgroup N."""
        if not N.is_normal_in(self):
            raise ValueError("subgroup is not normal")
        n_elems = N.elements()

        def canon(g: tuple[int, ...]) -> tuple[int, ...]:
            return min(pmul(n, g) for n in n_elems)

        reps = [canon(self.ident)]
        index = {reps[0]: 0}
        images: list[list[int]] = [[] for _ in self.generators]
        queue = [0]
        for i in queue:
            r = reps[i]
            for gi, g in enumerate(self.generators):
                c = canon(pmul(r, g))
                if c not in index:
                    index[c] = len(reps)
                    reps.append(c)
                    queue.append(len(reps) - 1)
        for gi, g in enumerate(self.generators):
            images[gi] = [index[canon(pmul(r, g))] for r in reps]
        m = max(1, len(reps))
        quotient = PermGroup(m, [tuple(im) for im in images], name=f"{self.name}/N" if self.name else "")
        assert quotient.order() * N.order() == self.order()
        return CosetAction(source=self, kernel=N, group=quotient,
                           reps=tuple(reps), index=index)

    def abelianization_order(self) -> int:
        return self.order() // self.derived_subgroup().order()


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


@dataclass(frozen=True)
class ConjugacyClassData:
    """Complete conjugacy class data with a total element -> class map."""

    group: PermGroup
    representatives: tuple[tuple[int, ...], ...]
    sizes: tuple[int, ...]
    element_orders: tuple[int, ...]
    members: tuple[tuple[tuple[int, ...], ...], ...]
    class_of: dict

    def __post_init__(self):
        assert sum(self.sizes) == self.group.order()
        assert self.sizes[0] == 1 and self.element_orders[0] == 1

    def __len__(self) -> int:
        return len(self.representatives)

    def index_of(self, perm: Sequence[int]) -> int:
        return self.class_of[tuple(perm)]

    def inverse_class(self, j: int) -> int:
        return self.class_of[pinv(self.representatives[j])]

    def power_class(self, j: int, s: int) -> int:
        return self.class_of[ppow(self.representatives[j], s)]


@dataclass(frozen=True)
class SubnormalSeries:
    """Ascending (p,p')-series; kinds tags the factor above each term."""

    group: PermGroup
    terms: tuple[PermGroup, ...]
    kinds: tuple[str, ...]
    reaches: bool
    p_length: Optional[int]
    p: int

    def term_orders(self) -> tuple[int, ...]:
        return tuple(t.order() for t in self.terms)


@dataclass(frozen=True)
class CosetAction:
    """Quotient G/N realized on the cosets of N (a regular G/N-action)."""

    source: PermGroup
    kernel: PermGroup
    group: PermGroup
    reps: tuple[tuple[int, ...], ...]
    index: dict

    def canon(self, g: Sequence[int]) -> tuple[int, ...]:
        return min(pmul(n, tuple(g)) for n in self.kernel.elements())

    def image(self, g: Sequence[int]) -> tuple[int, ...]:
        """Image of an arbitrary element of G in the coset action."""
        g = tuple(g)
        return tuple(self.index[self.canon(pmul(r, g))] for r in self.reps)

    def section(self, i: int) -> tuple[int, ...]:
        """A coset representative lifting the quotient element sending coset 0 to i."""
        return self.reps[i]

    def preimage(self, H: PermGroup) -> PermGroup:
        """Full preimage in G of a subgroup of the quotient.

        The coset action of G/N is regular, so the quotient element h is
        lifted by the representative of the coset h sends coset 0 to.
        """
        gens = list(self.kernel.generators)
        for h in H.generators:
            gens.append(self.reps[h[0]])
        return self.source.subgroup(gens)


# ---------------------------------------------------------------------------
# cross-action tools


def action_kernel(G: PermGroup, images: Sequence[Sequence[int]], m: int) -> PermGroup:
    """Kernel of the homomorphism sending G's generators to perms on m points.

    Works on the direct sum of the two actions (degree n + m) and strips the
    stabilizer of the appended points off its chain.
    """
    n = G.degree
    combined = [
        tuple(g) + tuple(n + x for x in img) for g, img in zip(G.generators, images)
    ]
    big = PermGroup(n + m, combined)
    current = big
    for pt in range(n, n + m):
        current = current.point_stabilizer(pt)
    kernel_gens = [g[:n] for g in current.generators]
    return G.subgroup(kernel_gens, name="action_kernel")
