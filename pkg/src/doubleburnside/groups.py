"""Finite groups as explicit multiplication tables.

Everything downstream (Burnside rings, twisted-diagonal bisets, unit
searches) works with element indices 0..order-1, identity 0, and assumes
O(1) multiplication through the stored table.  Groups are deliberately
capped in order: the point is exact desk-scale computation, not
asymptotics.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Optional

DEFAULT_ORDER_CAP = 48


class GroupOrderError(ValueError):
    """Construction would exceed the configured order cap."""


class SpecParseError(ValueError):
    """Malformed group description string."""


class FiniteGroup:
    """A finite group on element indices 0..order-1 with 0 the identity.

    The full multiplication table is validated exhaustively at
    construction (identity, inverses, associativity).  Instances are
    immutable and compared by identity.
    """

    __slots__ = ("order", "table", "_inv", "name", "provenance", "_orders")

    def __init__(self, table, name: str = "?", provenance: Optional[str] = None):
        self.table = tuple(tuple(row) for row in table)
        self.order = len(self.table)
        if self.order == 0:
            raise ValueError("empty multiplication table")
        n = self.order
        for row in self.table:
            if len(row) != n or any(not (0 <= v < n) for v in row):
                raise ValueError("multiplication table is not square over element indices")
        t = self.table
        for x in range(n):
            if t[0][x] != x or t[x][0] != x:
                raise ValueError("element 0 is not a two-sided identity")
        inv = []
        for x in range(n):
            y = t[x].index(0)
            if t[y][x] != 0:
                raise ValueError(f"element {x} has no two-sided inverse")
            inv.append(y)
        self._inv = tuple(inv)
        for x in range(n):
            tx = t[x]
            for y in range(n):
                txy = t[tx[y]]
                ty = t[y]
                for z in range(n):
                    if txy[z] != tx[ty[z]]:
                        raise ValueError(f"associativity fails at ({x},{y},{z})")
        self.name = name
        self.provenance = provenance
        self._orders = None

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self._inv[a]

    def conj(self, g: int, x: int) -> int:
        """g x g^{-1}."""
        return self.table[self.table[g][x]][self._inv[g]]

    @property
    def elements(self) -> range:
        return range(self.order)

    def element_order(self, x: int) -> int:
        if self._orders is None:
            orders = []
            for e in range(self.order):
                k, y = 1, e
                while y != 0:
                    y = self.table[y][e]
                    k += 1
                orders.append(k)
            self._orders = tuple(orders)
        return self._orders[x]

    def full_subgroup(self) -> "Subgroup":
        return Subgroup(self, tuple(range(self.order)))

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[x][y] == t[y][x] for x in range(self.order) for y in range(x))

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"


@dataclass(frozen=True)
class Subgroup:
    """A subgroup given by its sorted member indices inside a parent group."""

    group: FiniteGroup
    members: tuple

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(set(self.members))))

    @cached_property
    def member_set(self) -> frozenset:
        return frozenset(self.members)

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self.member_set

    def validate(self) -> None:
        G = self.group
        if 0 not in self.member_set:
            raise ValueError("subgroup does not contain the identity")
        for x in self.members:
            if G.inv(x) not in self.member_set:
                raise ValueError("subgroup not closed under inversion")
            for y in self.members:
                if G.mul(x, y) not in self.member_set:
                    raise ValueError("subgroup not closed under multiplication")
        if G.order % self.order != 0:
            raise ValueError("subgroup order does not divide group order")

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, of={self.group.name})"


def closure_members(G: FiniteGroup, gens: Iterable[int]) -> frozenset:
    """Members of the subgroup generated by ``gens``."""
    known = {0}
    gens = [g for g in gens if g != 0]
    queue = [0]
    while queue:
        nxt = []
        for q in queue:
            for g in gens:
                e = G.mul(q, g)
                if e not in known:
                    known.add(e)
                    nxt.append(e)
        queue = nxt
    return frozenset(known)


def generated_subgroup(G: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    return Subgroup(G, tuple(closure_members(G, gens)))


def centralizer(G: FiniteGroup, S: Subgroup) -> Subgroup:
    t = G.table
    mem = [x for x in range(G.order) if all(t[x][s] == t[s][x] for s in S.members)]
    return Subgroup(G, tuple(mem))


def normalizer(G: FiniteGroup, S: Subgroup) -> Subgroup:
    ms = S.member_set
    mem = [x for x in range(G.order) if all(G.conj(x, s) in ms for s in S.members)]
    return Subgroup(G, tuple(mem))


def center(G: FiniteGroup) -> Subgroup:
    return centralizer(G, G.full_subgroup())


def conjugate_subgroup(x: int, S: Subgroup) -> Subgroup:
    G = S.group
    return Subgroup(G, tuple(G.conj(x, s) for s in S.members))


@dataclass(frozen=True)
class GroupMorphism:
    """A homomorphism between subgroups, stored as images aligned with the
    sorted domain members."""

    domain: Subgroup
    codomain: Subgroup
    images: tuple

    @cached_property
    def _map(self) -> dict:
        return dict(zip(self.domain.members, self.images))

    def __call__(self, x: int) -> int:
        return self._map[x]

    @cached_property
    def image_set(self) -> frozenset:
        return frozenset(self.images)

    def is_bijective(self) -> bool:
        return (
            len(self.image_set) == self.domain.order
            and self.image_set == self.codomain.member_set
        )

    def validate(self) -> None:
        GD, GC = self.domain.group, self.codomain.group
        m = self._map
        for x in self.domain.members:
            for y in self.domain.members:
                if m[GD.mul(x, y)] != GC.mul(m[x], m[y]):
                    raise ValueError(f"not a homomorphism at ({x},{y})")

    def __repr__(self) -> str:
        return f"GroupMorphism({self.domain.order}->{self.codomain.order}, {self.images})"


def identity_morphism(S: Subgroup) -> GroupMorphism:
    return GroupMorphism(S, S, S.members)


def compose(f: GroupMorphism, g: GroupMorphism) -> GroupMorphism:
    """x -> f(g(x)); requires the image of g to lie in the domain of f."""
    fm = f._map
    return GroupMorphism(g.domain, f.codomain, tuple(fm[y] for y in g.images))


def inverse_morphism(f: GroupMorphism) -> GroupMorphism:
    back = {y: x for x, y in zip(f.domain.members, f.images)}
    return GroupMorphism(f.codomain, f.domain, tuple(back[y] for y in f.codomain.members))


def restrict_morphism(f: GroupMorphism, members: Iterable[int]) -> GroupMorphism:
    sub = Subgroup(f.domain.group, tuple(members))
    images = tuple(f(x) for x in sub.members)
    return GroupMorphism(sub, Subgroup(f.codomain.group, images), images)


def inner_morphism(S: Subgroup, x: int) -> GroupMorphism:
    """Conjugation c_x restricted to S, landing in ^xS."""
    G = S.group
    images = tuple(G.conj(x, s) for s in S.members)
    return GroupMorphism(S, Subgroup(G, images), images)


def _generating_data(S: Subgroup):
    """Greedy small generating set of S plus BFS word derivations.

    Returns (gens, derive) where derive lists (element, source, gen_index)
    in discovery order so that element = source * gens[gen_index]; every
    non-identity member appears exactly once.
    """
    G = S.group
    by_priority = sorted(S.members, key=lambda x: (-G.element_order(x), x))
    gens = []
    known = frozenset({0})
    for x in by_priority:
        if x not in known:
            gens.append(x)
            known = closure_members(G, gens)
            if len(known) == S.order:
                break
    derive = []
    seen = {0}
    queue = [0]
    while queue:
        nxt = []
        for q in queue:
            for gi, g in enumerate(gens):
                e = G.mul(q, g)
                if e not in seen:
                    seen.add(e)
                    derive.append((e, q, gi))
                    nxt.append(e)
        queue = nxt
    return gens, derive


@lru_cache(maxsize=None)
def isomorphisms(S: Subgroup, R: Subgroup) -> tuple:
    """All isomorphisms S -> R, in a deterministic order.

    Empty when S and R are not isomorphic.  Brute force: candidate images
    of a greedy generating set are filtered by element order, extended
    multiplicatively, and validated in full.
    """
    if S.order != R.order:
        return ()
    GS, GR = S.group, R.group
    if S.order == 1:
        return (GroupMorphism(S, R, (R.members[0],)),)
    gens, derive = _generating_data(S)
    cand = [
        tuple(y for y in R.members if GR.element_order(y) == GS.element_order(g))
        for g in gens
    ]
    if any(not c for c in cand):
        return ()
    rset = R.member_set
    found = []
    for images in itertools.product(*cand):
        m = {0: R.members[0] if 0 not in rset else 0}
        ok = True
        for e, q, gi in derive:
            m[e] = GR.mul(m[q], images[gi])
        vals = set(m.values())
        if len(vals) != S.order or vals != rset:
            continue
        for x in S.members:
            mx = m[x]
            for y in S.members:
                if m[GS.mul(x, y)] != GR.mul(mx, m[y]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(GroupMorphism(S, R, tuple(m[x] for x in S.members)))
    return tuple(found)


def automorphism_cosets(S: Subgroup):
    """(aut, inn, coset_reps) for a subgroup, with the identity the first rep."""
    aut = isomorphisms(S, S)
    inn = []
    seen = set()
    for x in S.members:
        f = inner_morphism(S, x)
        if f.images not in seen:
            seen.add(f.images)
            inn.append(GroupMorphism(S, S, f.images))
    reps = [identity_morphism(S)]
    covered = {compose(reps[0], i).images for i in inn}
    for f in aut:
        if f.images not in covered:
            reps.append(f)
            covered |= {compose(f, i).images for i in inn}
    return aut, tuple(inn), tuple(reps)


@dataclass(frozen=True)
class OuterAutomorphismGroup:
    """Aut(G), Inn(G) and a deterministic transversal of Inn(G)-cosets,
    with composition and inversion tables on the transversal."""

    group: FiniteGroup
    aut: tuple
    inn: tuple
    coset_reps: tuple
    comp: tuple
    inv: tuple

    @property
    def order(self) -> int:
        return len(self.coset_reps)

    @cached_property
    def _coset_of(self) -> dict:
        table = {}
        for ci, rep in enumerate(self.coset_reps):
            for i in self.inn:
                table[compose(rep, i).images] = ci
        return table

    def out_index(self, f: GroupMorphism) -> int:
        return self._coset_of[f.images]

    @property
    def identity_index(self) -> int:
        return 0


@lru_cache(maxsize=None)
def outer_automorphism_group(G: FiniteGroup) -> OuterAutomorphismGroup:
    full = G.full_subgroup()
    aut, inn, reps = automorphism_cosets(full)
    coset_of = {}
    for ci, rep in enumerate(reps):
        for i in inn:
            coset_of[compose(rep, i).images] = ci
    comp = tuple(
        tuple(coset_of[compose(a, b).images] for b in reps) for a in reps
    )
    inv = tuple(coset_of[inverse_morphism(a).images] for a in reps)
    out = OuterAutomorphismGroup(G, aut, inn, reps, comp, inv)
    assert len(aut) == len(inn) * len(reps)
    return out


@dataclass(frozen=True)
class SubgroupClass:
    """A conjugacy class of subgroups: canonical representative, the full
    class, and the normalizer/centralizer of the representative."""

    rep: Subgroup
    members: tuple
    normalizer: Subgroup
    centralizer: Subgroup

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def order(self) -> int:
        return self.rep.order


class SubgroupLattice:
    """Conjugacy classes of subgroups with containment-up-to-conjugacy.

    Classes are canonically ordered: ascending subgroup order, ties broken
    lexicographically on the sorted member indices of the minimal
    representative.
    """

    def __init__(self, group: FiniteGroup, classes):
        self.group = group
        self.classes = tuple(classes)
        self._index = {}
        for ci, cls in enumerate(self.classes):
            for mem in cls.members:
                self._index[frozenset(mem)] = ci
        n = len(self.classes)
        leq = []
        for i in range(n):
            row = []
            reps = [set(m) for m in self.classes[i].members]
            for j in range(n):
                target = set(self.classes[j].rep.members)
                row.append(any(m <= target for m in reps))
            leq.append(tuple(row))
        self._leq = tuple(leq)

    def __len__(self) -> int:
        return len(self.classes)

    def class_index(self, members: Iterable[int]) -> int:
        return self._index[frozenset(members)]

    def leq(self, i: int, j: int) -> bool:
        """Containment up to conjugacy on class indices."""
        return self._leq[i][j]

    def all_subgroups(self) -> Iterator[tuple]:
        for cls in self.classes:
            yield from cls.members

    def full_class_index(self) -> int:
        return len(self.classes) - 1

    def trivial_class_index(self) -> int:
        return 0


def _all_subgroup_sets(G: FiniteGroup):
    cyclic = {closure_members(G, (x,)) for x in range(G.order)}
    subs = set(cyclic)
    frontier = list(subs)
    while frontier:
        nxt = []
        for a in frontier:
            for c in cyclic:
                if c <= a:
                    continue
                j = closure_members(G, a | c)
                if j not in subs:
                    subs.add(j)
                    nxt.append(j)
        frontier = nxt
    return subs


@lru_cache(maxsize=None)
def subgroup_lattice(G: FiniteGroup) -> SubgroupLattice:
    """Enumerate all subgroups of G and classify them by conjugation."""
    subs = _all_subgroup_sets(G)
    unvisited = set(subs)
    classes = []
    while unvisited:
        seed = next(iter(unvisited))
        orbit = {frozenset(G.conj(g, s) for s in seed) for g in range(G.order)}
        unvisited -= orbit
        members = sorted(tuple(sorted(m)) for m in orbit)
        rep = Subgroup(G, members[0])
        classes.append(
            SubgroupClass(
                rep=rep,
                members=tuple(members),
                normalizer=normalizer(G, rep),
                centralizer=centralizer(G, rep),
            )
        )
    classes.sort(key=lambda c: (c.rep.order, c.rep.members))
    lat = SubgroupLattice(G, classes)
    for cls in lat.classes:
        assert cls.normalizer.order * cls.size == G.order
    return lat


def is_nilpotent(G: FiniteGroup) -> bool:
    """Normalizer condition: every proper subgroup is proper in its normalizer."""
    lat = subgroup_lattice(G)
    return all(
        cls.normalizer.order > cls.order
        for cls in lat.classes
        if cls.order < G.order
    )


def is_cyclic(G: FiniteGroup) -> bool:
    return any(G.element_order(x) == G.order for x in range(G.order))


# ---------------------------------------------------------------------------
# Construction: permutation closure, direct products, catalog names.
# ---------------------------------------------------------------------------


def group_from_permutations(perms, name: str = "perm", cap: int = DEFAULT_ORDER_CAP,
                            provenance: Optional[str] = None) -> FiniteGroup:
    """Close a list of permutations (tuples of images, 0-based) into a group.

    Element 0 is the identity; the remaining indexing follows breadth-first
    discovery order, so it is deterministic for a fixed generator list.
    """
    degree = max((len(p) for p in perms), default=1)
    gens = []
    for p in perms:
        padded = tuple(p) + tuple(range(len(p), degree))
        gens.append(padded)
    ident = tuple(range(degree))
    elements = [ident]
    index = {ident: 0}
    queue = [ident]
    while queue:
        nxt = []
        for p in queue:
            for g in gens:
                q = tuple(p[g[i]] for i in range(degree))
                if q not in index:
                    if len(elements) >= cap:
                        raise GroupOrderError(
                            f"generated group exceeds the order cap {cap}"
                        )
                    index[q] = len(elements)
                    elements.append(q)
                    nxt.append(q)
        queue = nxt
    n = len(elements)
    table = [
        [index[tuple(a[b[i]] for i in range(degree))] for b in elements]
        for a in elements
    ]
    return FiniteGroup(table, name=name, provenance=provenance)


def direct_product(G: FiniteGroup, H: FiniteGroup, cap: int = DEFAULT_ORDER_CAP):
    """Componentwise product with its two projection morphisms."""
    n = G.order * H.order
    if n > cap:
        raise GroupOrderError(f"direct product of order {n} exceeds the cap {cap}")
    oh = H.order
    table = [
        [G.mul(a1, b1) * oh + H.mul(a2, b2) for b1 in range(G.order) for b2 in range(oh)]
        for a1 in range(G.order)
        for a2 in range(oh)
    ]
    P = FiniteGroup(table, name=f"{G.name}x{H.name}")
    full = P.full_subgroup()
    p1 = GroupMorphism(full, G.full_subgroup(), tuple(e // oh for e in range(n)))
    p2 = GroupMorphism(full, H.full_subgroup(), tuple(e % oh for e in range(n)))
    return P, p1, p2


def _quaternion_table():
    # elements: 1, -1, i, -i, j, -j, k, -k
    axes = "1ijk"
    prod = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("j", "1"): (1, "j"), ("k", "1"): (1, "k"),
        ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
        ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
    }

    def idx(sign, axis):
        return axes.index(axis) * 2 + (0 if sign == 1 else 1)

    def elem(i):
        return (1 if i % 2 == 0 else -1, axes[i // 2])

    table = []
    for a in range(8):
        sa, xa = elem(a)
        row = []
        for b in range(8):
            sb, xb = elem(b)
            sp, xp = prod[(xa, xb)]
            row.append(idx(sa * sb * sp, xp))
        table.append(row)
    return table


def _cycle(n: int) -> tuple:
    return tuple((i + 1) % n for i in range(n))


def _catalog_group(name: str, cap: int) -> FiniteGroup:
    if name == "Q8":
        if cap < 8:
            raise GroupOrderError(f"Q8 exceeds the order cap {cap}")
        return FiniteGroup(_quaternion_table(), name="Q8")
    m = re.fullmatch(r"([CDSA])(\d+)", name)
    if not m:
        raise SpecParseError(f"unknown catalog name {name!r}")
    kind, num = m.group(1), int(m.group(2))
    if kind == "C":
        if num < 1:
            raise SpecParseError(f"bad cyclic order in {name!r}")
        order = num
        gens = [_cycle(num)] if num > 1 else [(0,)]
    elif kind == "D":
        if num < 2 or num % 2 != 0:
            raise SpecParseError(f"dihedral names take the group order (even, >=2): {name!r}")
        order = num
        half = num // 2
        if half == 1:
            gens = [(1, 0)]
        elif half == 2:
            gens = [(1, 0, 2, 3), (0, 1, 3, 2)]
        else:
            rot = _cycle(half)
            refl = tuple((half - i) % half for i in range(half))
            gens = [rot, refl]
    elif kind == "S":
        if num < 1:
            raise SpecParseError(f"bad symmetric degree in {name!r}")
        order = 1
        for i in range(2, num + 1):
            order *= i
        gens = [(0,)] if num == 1 else [(1, 0) + tuple(range(2, num)), _cycle(num)]
    else:  # A<n>
        if num < 1:
            raise SpecParseError(f"bad alternating degree in {name!r}")
        if num < 3:
            order = 1
            gens = [(0,)]
        else:
            order = 1
            for i in range(2, num + 1):
                order *= i
            order //= 2
            # consecutive 3-cycles (s s+1 s+2) generate A_n
            gens = []
            for s in range(num - 2):
                p = list(range(num))
                p[s], p[s + 1], p[s + 2] = p[s + 1], p[s + 2], p[s]
                gens.append(tuple(p))
    if order > cap:
        raise GroupOrderError(f"{name} has order {order}, above the cap {cap}")
    g = group_from_permutations(gens, name=name, cap=cap)
    assert g.order == order, f"catalog {name}: built order {g.order}, expected {order}"
    return g


def _split_top_level(text: str, seps=(";", ",")) -> list:
    parts = []
    depth = 0
    cur = []
    for ch in text:
        if ch == "(":
            depth += 1
            cur.append(ch)
        elif ch == ")":
            depth -= 1
            cur.append(ch)
        elif ch in seps and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p for p in (q.strip() for q in parts) if p]


def _perm_from_cycles(text: str) -> tuple:
    """Parse cycle notation like "(1 2 3)(4 5)" into a permutation tuple.

    Points are 1-based in the input and 0-based internally.
    """
    pos = 0
    cycles = []
    s = text
    while pos < len(s):
        ch = s[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch != "(":
            raise SpecParseError(f"expected '(' at position {pos} in {text!r}")
        end = s.find(")", pos)
        if end < 0:
            raise SpecParseError(f"unclosed '(' at position {pos} in {text!r}")
        body = s[pos + 1 : end]
        pts = [p for p in re.split(r"[\s,]+", body.strip()) if p]
        cycle = []
        for p in pts:
            if not p.isdigit() or int(p) < 1:
                raise SpecParseError(
                    f"bad point {p!r} at position {pos} in {text!r}: points are 1-based integers"
                )
            cycle.append(int(p) - 1)
        if len(set(cycle)) != len(cycle):
            raise SpecParseError(f"repeated point in cycle at position {pos} in {text!r}")
        if cycle:
            cycles.append(cycle)
        pos = end + 1
    degree = max((max(c) + 1 for c in cycles), default=1)
    perm = list(range(degree))
    for cycle in reversed(cycles):
        prev = perm[:]
        for i, pt in enumerate(cycle):
            perm[pt] = prev[cycle[(i + 1) % len(cycle)]]
    return tuple(perm)


def build_group(spec: str, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Build a group from a description string.

    Grammar: ``catalog: <NAME>`` with NAME in {C<n>, D<2n>, Q8, S<n>, A<n>},
    possibly joined with ``x`` for direct products, or
    ``perm: <cycles>;<cycles>;...`` with cycles like ``(1 2 3)(4 5)``.
    The ``catalog:``/``perm:`` prefixes may be omitted; bare cycle lists are
    treated as permutation specs.  Whitespace-insensitive.
    """
    s = spec.strip()
    if not s:
        raise SpecParseError("empty group spec")
    lowered = s.lower()
    if lowered.startswith("perm:"):
        return _build_perm_spec(s[5:], cap, provenance=spec.strip())
    if lowered.startswith("catalog:"):
        s = s[8:]
    elif "(" in s:
        return _build_perm_spec(s, cap, provenance=spec.strip())
    compact = re.sub(r"\s+", "", s)
    if not compact:
        raise SpecParseError(f"empty catalog name in {spec!r}")
    factors = compact.split("x")
    if any(not f for f in factors):
        raise SpecParseError(f"empty factor in product spec {spec!r}")
    group = _catalog_group(factors[0].upper(), cap)
    for f in factors[1:]:
        group, _, _ = direct_product(group, _catalog_group(f.upper(), cap), cap=cap)
    return group


def _build_perm_spec(body: str, cap: int, provenance: str) -> FiniteGroup:
    parts = _split_top_level(body)
    if not parts:
        raise SpecParseError(f"no generators in permutation spec {body!r}")
    perms = [_perm_from_cycles(p) for p in parts]
    return group_from_permutations(perms, name="perm", cap=cap, provenance=provenance)
