"""The bifree double Burnside group B^Delta(G,H) on twisted-diagonal classes.

The basis is built directly from (subgroup class of R, subgroup class of S,
isomorphism orbit) without ever enumerating the subgroup lattice of G x H.
Two independent tensor algorithms are provided: the double-coset
decomposition on transitive bisets, and the mark-level orbit-sum formula;
their agreement is the central cross-check of the whole artifact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable

from .burnside import BurnsideElement, NotIntegral, table_of_marks
from .groups import (
    FiniteGroup,
    GroupMorphism,
    Subgroup,
    compose,
    identity_morphism,
    inner_morphism,
    inverse_morphism,
    isomorphisms,
    outer_automorphism_group,
    subgroup_lattice,
)


@dataclass(frozen=True)
class TwistedDiagonal:
    """Delta(R, alpha, S) = {(alpha(s), s) | s in S} <= G x H.

    R is a subgroup of the left group, S of the right group, and alpha an
    isomorphism S -> R.
    """

    R: Subgroup
    S: Subgroup
    alpha: GroupMorphism  # S -> R

    def __post_init__(self):
        assert self.alpha.domain.members == self.S.members
        assert self.alpha.codomain.member_set == self.R.member_set

    @cached_property
    def members(self) -> frozenset:
        amap = self.alpha._map
        return frozenset((amap[s], s) for s in self.S.members)

    @property
    def order(self) -> int:
        return self.S.order

    def conjugate(self, g: int, h: int) -> "TwistedDiagonal":
        """^{(g,h)} Delta(R, alpha, S) = Delta(^gR, c_g alpha c_h^{-1}, ^hS)."""
        G, H = self.R.group, self.S.group
        s_new = tuple(sorted(H.conj(h, s) for s in self.S.members))
        hinv = H.inv(h)
        amap = self.alpha._map
        images = tuple(G.conj(g, amap[H.conj(hinv, s)]) for s in s_new)
        Rn = Subgroup(G, images)
        Sn = Subgroup(H, s_new)
        return TwistedDiagonal(Rn, Sn, GroupMorphism(Sn, Rn, images))

    def dual(self) -> "TwistedDiagonal":
        """Delta(R, alpha, S)^o = Delta(S, alpha^{-1}, R)."""
        return TwistedDiagonal(self.S, self.R, inverse_morphism(self.alpha))

    def __repr__(self) -> str:
        return f"TwistedDiagonal(|R|={self.R.order}, alpha={self.alpha.images})"


def diagonal(R: Subgroup) -> TwistedDiagonal:
    """Delta(R) = Delta(R, id, R)."""
    return TwistedDiagonal(R, R, identity_morphism(R))


def star(L: TwistedDiagonal, M: TwistedDiagonal) -> TwistedDiagonal:
    """Composition of L <= G x H and M <= H x K as relations.

    Defined for arbitrary (not necessarily composable) twisted diagonals;
    when the middle subgroups agree, Delta(R,a,S) * Delta(S,b,T) =
    Delta(R, a.b, T).
    """
    G = L.R.group
    K = M.S.group
    w = sorted(L.S.member_set & M.R.member_set)
    bmap = M.alpha._map
    t2 = tuple(sorted(t for t in M.S.members if bmap[t] in set(w)))
    amap = L.alpha._map
    images = tuple(amap[bmap[t]] for t in t2)
    Sn = Subgroup(K, t2)
    Rn = Subgroup(G, images)
    return TwistedDiagonal(Rn, Sn, GroupMorphism(Sn, Rn, images))


def n_alpha(delta: TwistedDiagonal):
    """The one-sided stabilizer subgroups of a twisted diagonal.

    Returns (N_alpha <= N_H(S), N_alphainv <= N_G(R)) where N_alpha is the
    set of h in N_H(S) for which some g in N_G(R) satisfies
    alpha c_h = c_g alpha on S.  The order identity
    |N_{GxH}(Delta)| = |N_alphainv| |C_H(S)| = |C_G(R)| |N_alpha|
    is asserted by direct count.
    """
    from .groups import centralizer, normalizer

    G, H = delta.R.group, delta.S.group
    ngr = normalizer(G, delta.R).members
    nhs = normalizer(H, delta.S).members
    alpha = delta.alpha
    smem = delta.S.members

    def twist_right(h):
        # images of alpha . c_h on S, aligned with smem
        return tuple(alpha(H.conj(h, s)) for s in smem)

    def twist_left(g):
        return tuple(G.conj(g, alpha(s)) for s in smem)

    lefts = {twist_left(g): g for g in ngr}
    rights = {twist_right(h): h for h in nhs}
    na = tuple(sorted(h for h in nhs if twist_right(h) in lefts))
    nainv = tuple(sorted(g for g in ngr if twist_left(g) in rights))
    # direct normalizer count inside G x H
    base = delta.members
    ndelta = sum(
        1
        for g in ngr
        for h in nhs
        if delta.conjugate(g, h).members == base
    )
    cg = len([x for x in range(G.order) if all(G.mul(x, r) == G.mul(r, x) for r in delta.R.members)])
    ch = len([x for x in range(H.order) if all(H.mul(x, s) == H.mul(s, x) for s in delta.S.members)])
    assert ndelta == len(nainv) * ch == cg * len(na)
    return Subgroup(H, na), Subgroup(G, nainv)


class TwistedClassTable:
    """Conjugacy classes of twisted diagonal subgroups of G x H.

    Holds canonical class representatives (ascending |S|, deterministic
    tie-break), cached centralizer/normalizer orders, the full conjugation
    orbit of every representative (which doubles as the conjugacy-witness
    oracle and makes mark computation cheap), and the mark matrix.
    """

    def __init__(self, G: FiniteGroup, H: FiniteGroup):
        self.G = G
        self.H = H
        self.latG = subgroup_lattice(G)
        self.latH = subgroup_lattice(H)
        records = []
        for ri, rc in enumerate(self.latG.classes):
            for si, sc in enumerate(self.latH.classes):
                if rc.order != sc.order:
                    continue
                isos = isomorphisms(sc.rep, rc.rep)
                if not isos:
                    continue
                # reduce by alpha -> c_g . alpha . c_h^{-1}, g in N_G(R), h in N_H(S)
                remaining = {f.images: f for f in isos}
                orbit_reps = []
                while remaining:
                    key = min(remaining)
                    seed = remaining[key]
                    orbit_reps.append(seed)
                    for g in rc.normalizer.members:
                        cg = inner_morphism(rc.rep, g)
                        left = compose(GroupMorphism(rc.rep, rc.rep, cg.images), seed)
                        for h in sc.normalizer.members:
                            chi = inner_morphism(sc.rep, H.inv(h))
                            f = compose(left, GroupMorphism(sc.rep, sc.rep, chi.images))
                            remaining.pop(f.images, None)
                for oi, alpha in enumerate(orbit_reps):
                    records.append((rc.order, ri, si, oi, TwistedDiagonal(rc.rep, sc.rep, alpha)))
        records.sort(key=lambda r: (r[0], r[1], r[2], r[3]))
        self.reps = tuple(r[4] for r in records)
        self.r_class = tuple(r[1] for r in records)
        self.s_class = tuple(r[2] for r in records)
        self.orbit_index = tuple(r[3] for r in records)
        self.cG = tuple(self.latG.classes[r[1]].centralizer.order for r in records)
        self.cH = tuple(self.latH.classes[r[2]].centralizer.order for r in records)
        # full conjugation orbits (closure under one-sided conjugation)
        orbits = []
        lookup = {}
        for k, rep in enumerate(self.reps):
            orbit = self._orbit(rep)
            orbits.append(orbit)
            for mem in orbit:
                assert mem not in lookup, "twisted classes are not pairwise non-conjugate"
                lookup[mem] = k
        self.orbits = tuple(orbits)
        self._lookup = lookup
        self.n_order = tuple(
            (G.order * H.order) // len(orb) for orb in self.orbits
        )
        self._mark_matrix = None
        self._dual_indices = None
        self._iota_map = None
        self._full_by_out = None
        self._prod_cache = {}
        self._uniform_cache = {}

    def _orbit(self, rep: TwistedDiagonal):
        G, H = self.G, self.H
        base = rep.members
        seen = {base}
        queue = [base]
        while queue:
            nxt = []
            for mem in queue:
                for g in range(1, G.order):
                    cm = frozenset((G.conj(g, a), b) for a, b in mem)
                    if cm not in seen:
                        seen.add(cm)
                        nxt.append(cm)
                for h in range(1, H.order):
                    cm = frozenset((a, H.conj(h, b)) for a, b in mem)
                    if cm not in seen:
                        seen.add(cm)
                        nxt.append(cm)
            queue = nxt
        return frozenset(seen)

    def __len__(self) -> int:
        return len(self.reps)

    def class_of(self, delta) -> int:
        """Class index of a twisted diagonal (or raw member frozenset)."""
        members = delta if isinstance(delta, frozenset) else delta.members
        return self._lookup[members]

    def label(self, k: int) -> str:
        return f"D(R#{self.r_class[k]}, a#{self.orbit_index[k]}, S#{self.s_class[k]})"

    @property
    def mark_matrix(self) -> tuple:
        """M[i][j] = Phi_{Delta_i}([(GxH)/Delta_j]); triangular in class order."""
        if self._mark_matrix is None:
            n = len(self.reps)
            matrix = []
            for i in range(n):
                base = self.reps[i].members
                oi = self.reps[i].order
                row = []
                for j in range(n):
                    if oi > self.reps[j].order:
                        row.append(0)
                        continue
                    hits = sum(1 for mem in self.orbits[j] if base <= mem)
                    row.append(hits * (self.n_order[j] // self.reps[j].order))
                matrix.append(tuple(row))
            self._mark_matrix = tuple(matrix)
        return self._mark_matrix

    def leq(self, i: int, j: int) -> bool:
        """Subconjugacy of twisted classes (nonzero mark on the basis element)."""
        return self.mark_matrix[i][j] != 0

    def identity_index(self) -> int:
        """Class of the full diagonal Delta(G); only valid when G is H."""
        assert self.G is self.H
        return self.class_of(diagonal(self.G.full_subgroup()))

    def dual_indices(self) -> tuple:
        """Index bijection onto the classes of the (H,G) table."""
        if self._dual_indices is None:
            other = class_table(self.H, self.G)
            self._dual_indices = tuple(
                other.class_of(rep.dual()) for rep in self.reps
            )
        return self._dual_indices


_TABLES: dict = {}


def class_table(G: FiniteGroup, H: FiniteGroup) -> TwistedClassTable:
    key = (id(G), id(H))
    tab = _TABLES.get(key)
    if tab is None:
        tab = TwistedClassTable(G, H)
        _TABLES[key] = tab
        # keep the groups alive so ids stay unique
        tab._keepalive = (G, H)
    return tab


def twisted_classes(G: FiniteGroup, H: FiniteGroup) -> TwistedClassTable:
    """Alias for class_table; the table IS the class enumeration."""
    return class_table(G, H)


def conjugacy_test(d1: TwistedDiagonal, d2: TwistedDiagonal):
    """A witness (g,h) with ^{(g,h)}d1 = d2, or None if not conjugate."""
    G, H = d1.R.group, d1.S.group
    if d1.order != d2.order:
        return None
    target = d2.members
    for g in range(G.order):
        for h in range(H.order):
            if d1.conjugate(g, h).members == target:
                return (g, h)
    return None


@dataclass(frozen=True)
class BisetElement:
    """An element of B^Delta(G,H): integer coefficients over twisted classes."""

    table: TwistedClassTable
    coeffs: tuple

    def __add__(self, other: "BisetElement") -> "BisetElement":
        assert self.table is other.table
        return BisetElement(self.table, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "BisetElement") -> "BisetElement":
        assert self.table is other.table
        return BisetElement(self.table, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "BisetElement":
        return BisetElement(self.table, tuple(-a for a in self.coeffs))

    def __rmul__(self, k: int) -> "BisetElement":
        return BisetElement(self.table, tuple(k * a for a in self.coeffs))

    def support(self) -> tuple:
        return tuple(k for k, c in enumerate(self.coeffs) if c)

    def __repr__(self) -> str:
        return f"BisetElement({self.coeffs})"


def biset_basis(table: TwistedClassTable, k: int) -> BisetElement:
    coeffs = [0] * len(table)
    coeffs[k] = 1
    return BisetElement(table, tuple(coeffs))


def biset_identity(G: FiniteGroup) -> BisetElement:
    """[G] = [(GxG)/Delta(G)], the identity of B^Delta(G,G)."""
    t = class_table(G, G)
    return biset_basis(t, t.identity_index())


def biset_marks(a: BisetElement) -> tuple:
    """Mark vector of a over the twisted classes of its table."""
    m = a.table.mark_matrix
    c = a.coeffs
    return tuple(sum(row[j] * c[j] for j in range(len(c)) if c[j]) for row in m)


def mark_at(a: BisetElement, delta) -> int:
    """Phi_Delta(a) for an arbitrary twisted diagonal (or class index)."""
    k = delta if isinstance(delta, int) else a.table.class_of(delta)
    row = a.table.mark_matrix[k]
    return sum(row[j] * c for j, c in enumerate(a.coeffs) if c)


def biset_from_marks(table: TwistedClassTable, values: Iterable[int]) -> BisetElement:
    """Exact triangular inversion of the mark map; raises NotIntegral."""
    v = list(values)
    n = len(table)
    m = table.mark_matrix
    coeffs = [0] * n
    for j in range(n - 1, -1, -1):
        rhs = v[j] - sum(m[j][s] * coeffs[s] for s in range(j + 1, n) if coeffs[s])
        diag = m[j][j]
        q, r = divmod(rhs, diag)
        if r:
            raise NotIntegral(f"twisted mark vector not integral at class {j}")
        coeffs[j] = q
    return BisetElement(table, tuple(coeffs))


def dual(a: BisetElement) -> BisetElement:
    """The anti-involution B^Delta(G,H) -> B^Delta(H,G)."""
    t = a.table
    other = class_table(t.H, t.G)
    coeffs = [0] * len(other)
    dmap = t.dual_indices()
    for k, c in enumerate(a.coeffs):
        if c:
            coeffs[dmap[k]] += c
    return BisetElement(other, tuple(coeffs))


def _double_coset_reps(H: FiniteGroup, left: Iterable[int], right: Iterable[int]):
    left = tuple(left)
    right = tuple(right)
    seen = set()
    reps = []
    for h in range(H.order):
        if h in seen:
            continue
        reps.append(h)
        for a in left:
            ah = H.mul(a, h)
            for b in right:
                seen.add(H.mul(ah, b))
    return reps


def _basis_tensor(tGH: TwistedClassTable, tHK: TwistedClassTable, i: int, j: int) -> tuple:
    """[(GxH)/L_i] .H [(HxK)/M_j] decomposed over the (G,K) classes."""
    key = (id(tHK), i, j)
    cached = tGH._prod_cache.get(key)
    if cached is not None:
        return cached
    H = tGH.H
    tGK = class_table(tGH.G, tHK.H)
    L = tGH.reps[i]
    M = tHK.reps[j]
    coeffs = [0] * len(tGK)
    for h in _double_coset_reps(H, L.S.members, M.R.members):
        # ^{(h,1)}M : conjugate the left (H) side of M by h
        s_new = tuple(sorted(H.conj(h, r) for r in M.R.members))
        Rn = Subgroup(H, s_new)
        bmap = M.alpha._map
        images = tuple(H.conj(h, bmap[t]) for t in M.S.members)
        Mh = TwistedDiagonal(Rn, M.S, GroupMorphism(M.S, Rn, images))
        d = star(L, Mh)
        coeffs[tGK.class_of(d)] += 1
    out = tuple(coeffs)
    tGH._prod_cache[key] = out
    return out


def tensor(a: BisetElement, b: BisetElement) -> BisetElement:
    """Tensor product over the middle group, via the double-coset formula."""
    tGH, tHK = a.table, b.table
    assert tGH.H is tHK.G, "incompatible middle group"
    tGK = class_table(tGH.G, tHK.H)
    coeffs = [0] * len(tGK)
    for i, ca in enumerate(a.coeffs):
        if not ca:
            continue
        for j, cb in enumerate(b.coeffs):
            if not cb:
                continue
            prod = _basis_tensor(tGH, tHK, i, j)
            w = ca * cb
            for k, c in enumerate(prod):
                if c:
                    coeffs[k] += w * c
    return BisetElement(tGK, tuple(coeffs))


@dataclass(frozen=True)
class TripleOrbits:
    """Representatives of the H-orbits of triples (sigma, S, tau) with
    sigma . tau = rho, together with |C_H(S)| per representative."""

    R: Subgroup
    rho: GroupMorphism  # T -> R
    H: FiniteGroup
    triples: tuple  # of (sigma, S, tau, |C_H(S)|)


_TRIPLE_CACHE: dict = {}


def triple_orbits(R: Subgroup, rho: GroupMorphism, H: FiniteGroup) -> TripleOrbits:
    """Enumerate H-orbit representatives of factorizations of rho through H.

    A triple is (sigma: S -> R, S <= H, tau: T -> S) with sigma . tau = rho;
    given sigma the factor tau is determined, so triples are (S, sigma)
    pairs reduced under ^h(sigma, S, tau) = (sigma c_{h^{-1}}, ^hS, c_h tau).
    """
    key = (id(R.group), R.members, rho.images, rho.domain.members, id(H))
    cached = _TRIPLE_CACHE.get(key)
    if cached is not None:
        return cached
    latH = subgroup_lattice(H)
    pairs = {}
    for cls in latH.classes:
        if cls.order != R.order:
            continue
        for mem in cls.members:
            S = Subgroup(H, mem)
            for sigma in isomorphisms(S, R):
                pairs[(mem, sigma.images)] = (S, sigma)
    reps = []
    while pairs:
        key0 = min(pairs)
        S, sigma = pairs.pop(key0)
        reps.append((S, sigma))
        for h in range(H.order):
            hs = tuple(sorted(H.conj(h, s) for s in S.members))
            hinv = H.inv(h)
            smap = sigma._map
            images = tuple(smap[H.conj(hinv, s)] for s in hs)
            pairs.pop((hs, images), None)
    triples = []
    T = rho.domain
    for S, sigma in reps:
        inv_sigma = {y: x for x, y in zip(sigma.domain.members, sigma.images)}
        tau_images = tuple(inv_sigma[rho(t)] for t in T.members)
        tau = GroupMorphism(T, S, tau_images)
        ch = sum(
            1
            for x in range(H.order)
            if all(H.mul(x, s) == H.mul(s, x) for s in S.members)
        )
        triples.append((sigma, S, tau, ch))
    out = TripleOrbits(R, rho, H, tuple(triples))
    _TRIPLE_CACHE[key] = out
    return out


def tensor_mark(a: BisetElement, b: BisetElement, target) -> int:
    """Phi_{Delta(R,rho,T)}(a .H b) via the orbit-sum formula.

    Independent of the double-coset tensor; the division by |C_H(S)| must
    be exact after summation, which is asserted.
    """
    tGH, tHK = a.table, b.table
    assert tGH.H is tHK.G
    tGK = class_table(tGH.G, tHK.H)
    rep = tGK.reps[target] if isinstance(target, int) else target
    R, T, rho = rep.R, rep.S, rep.alpha
    orbits = triple_orbits(R, rho, tGH.H)
    total = Fraction(0)
    for sigma, S, tau, ch in orbits.triples:
        left = mark_at(a, TwistedDiagonal(R, S, sigma))
        if not left:
            continue
        right = mark_at(b, TwistedDiagonal(S, T, tau))
        if not right:
            continue
        total += Fraction(left * right, ch)
    assert total.denominator == 1, "orbit-sum mark is not integral"
    return int(total)


def iota(x: BurnsideElement) -> BisetElement:
    """The diagonal embedding B(G) -> B^Delta(G,G), [G/R] -> [(GxG)/Delta(R)]."""
    G = x.table.group
    t = class_table(G, G)
    if t._iota_map is None:
        lat = x.table.lattice
        t._iota_map = tuple(
            t.class_of(diagonal(cls.rep)) for cls in lat.classes
        )
    coeffs = [0] * len(t)
    for i, c in enumerate(x.coeffs):
        if c:
            coeffs[t._iota_map[i]] += c
    return BisetElement(t, tuple(coeffs))


def _full_class_by_out(t: TwistedClassTable) -> dict:
    """Map outer-automorphism index -> class index of Delta(G, phi, G)."""
    if t._full_by_out is None:
        G = t.G
        out = outer_automorphism_group(G)
        full = G.full_subgroup()
        mapping = {}
        for oi, rep in enumerate(out.coset_reps):
            d = TwistedDiagonal(full, full, rep)
            mapping[oi] = t.class_of(d)
        t._full_by_out = mapping
    return t._full_by_out


def eta(G: FiniteGroup, out_index: int) -> BisetElement:
    """Out(G) -> B^Delta(G,G), phi-bar -> [(GxG)/Delta(G,phi,G)]."""
    t = class_table(G, G)
    return biset_basis(t, _full_class_by_out(t)[out_index])


def rho(a: BisetElement) -> dict:
    """Read off coefficients at full twisted diagonals Delta(G,phi,G).

    Returns {outer index: coefficient}, omitting zeros.  rho . eta = id.
    """
    t = a.table
    assert t.G is t.H
    mapping = _full_class_by_out(t)
    out = {}
    for oi, k in mapping.items():
        if a.coeffs[k]:
            out[oi] = a.coeffs[k]
    return out
