"""Search and analysis of orthogonal units in the bifree double Burnside group.

An orthogonal unit is gamma in B^Delta(G,H) with gamma . gamma^o = [G]
(two-sidedness then follows and is asserted anyway).  The search is a
complete constrained enumeration in mark space: for each subgroup class of
G exactly one admissible twisted class carries mark +-|C_G(R)|, everything
else in that block is zero, and integrality plus a tensor check filter the
branches.  A bounded naive coefficient search doubles as an independent
oracle for small groups.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from typing import Optional

from .bisets import (
    BisetElement,
    TwistedClassTable,
    TwistedDiagonal,
    _basis_tensor,
    biset_from_marks,
    biset_identity,
    biset_marks,
    class_table,
    diagonal,
    dual,
    eta,
    iota,
    rho,
    tensor,
)
from .burnside import (
    NotIntegral,
    out_action,
    table_of_marks,
    unit_group,
)
from .groups import (
    DEFAULT_ORDER_CAP,
    FiniteGroup,
    GroupMorphism,
    Subgroup,
    automorphism_cosets,
    build_group,
    compose,
    is_cyclic,
    is_nilpotent,
    isomorphisms,
    normalizer,
    outer_automorphism_group,
    subgroup_lattice,
)


@dataclass(frozen=True)
class OrthogonalUnit:
    """A verified orthogonal unit with its replayable search certificate.

    certificate lists, per subgroup class of G in decreasing order, the
    chosen twisted class and sign; uniform holds a witnessing isomorphism
    H -> G when the unit is uniform; principal is (outer index, epsilon)
    when G is H.
    """

    element: BisetElement
    certificate: tuple
    uniform: Optional[GroupMorphism]
    principal: Optional[tuple]

    @property
    def epsilon(self) -> Optional[int]:
        return None if self.principal is None else self.principal[1]

    def __repr__(self) -> str:
        return f"OrthogonalUnit({self.element.coeffs})"


def verify_two_sided(gamma: BisetElement) -> bool:
    """Independently check gamma^o .G gamma = [H]."""
    t = gamma.table
    return tensor(dual(gamma), gamma).coeffs == biset_identity(t.H).coeffs


def certificate_of(gamma: BisetElement) -> tuple:
    """(class, sign) per subgroup class of G, decreasing order, from marks."""
    t = gamma.table
    latG = subgroup_lattice(t.G)
    v = biset_marks(gamma)
    cert = []
    for ri in range(len(latG.classes) - 1, -1, -1):
        chosen = None
        for k in range(len(t)):
            if t.r_class[k] == ri and v[k]:
                assert chosen is None, "mark support not unique per subgroup class"
                assert abs(v[k]) == t.cG[k]
                chosen = (k, 1 if v[k] > 0 else -1)
        assert chosen is not None, "missing mark support for a subgroup class"
        cert.append(chosen)
    return tuple(cert)


def is_uniform(gamma: BisetElement) -> Optional[GroupMorphism]:
    """A witnessing isomorphism phi: H -> G with the support of gamma inside
    the classes of Delta(phi(V), phi, V), or None."""
    t = gamma.table
    support = set(gamma.support())
    if not support:
        return None
    for phi in isomorphisms(t.H.full_subgroup(), t.G.full_subgroup()):
        allowed = t._uniform_cache.get(phi.images)
        if allowed is None:
            classes = set()
            for mem in subgroup_lattice(t.H).all_subgroups():
                V = Subgroup(t.H, mem)
                images = tuple(phi(v) for v in V.members)
                RV = Subgroup(t.G, images)
                classes.add(t.class_of(TwistedDiagonal(RV, V, GroupMorphism(V, RV, images))))
            allowed = frozenset(classes)
            t._uniform_cache[phi.images] = allowed
        if support <= allowed:
            return phi
    return None


def principal_iso(gamma: BisetElement) -> tuple:
    """(outer class index, epsilon) read off rho(gamma); G = H only."""
    image = rho(gamma)
    assert len(image) == 1, "principal isomorphism is not unique"
    (oi, eps), = image.items()
    assert eps in (1, -1), "full-diagonal coefficient is not a sign"
    return oi, eps


def _make_unit(gamma: BisetElement, certificate: tuple) -> OrthogonalUnit:
    t = gamma.table
    principal = principal_iso(gamma) if t.G is t.H else None
    return OrthogonalUnit(gamma, certificate, is_uniform(gamma), principal)


def search_orthogonal(G: FiniteGroup, H: Optional[FiniteGroup] = None) -> list:
    """Complete enumeration of the orthogonal units of B^Delta(G,H).

    Branches over, per subgroup class of G in decreasing order, one
    admissible twisted class (centralizer orders must agree and the class
    must be a single right-side conjugation orbit over its first component)
    and one sign; integrality of the mark vector and the tensor identity
    gamma . gamma^o = [G] filter the branches.  Empty iff G and H are not
    isomorphic.
    """
    if H is None:
        H = G
    t = class_table(G, H)
    latG = subgroup_lattice(G)
    order_desc = list(range(len(latG.classes) - 1, -1, -1))
    candidates = []
    for ri in order_desc:
        ngr = latG.classes[ri].normalizer.order
        cand = [
            k
            for k in range(len(t))
            if t.r_class[k] == ri
            and t.cG[k] == t.cH[k]
            and t.n_order[k] == ngr * t.cH[k]
        ]
        if not cand:
            return []
        candidates.append(cand)
    identity = biset_identity(G).coeffs
    units = []
    n = len(t)
    for picks in itertools.product(*candidates):
        for signs in itertools.product((1, -1), repeat=len(picks)):
            v = [0] * n
            for k, s in zip(picks, signs):
                v[k] = s * t.cG[k]
            try:
                gamma = biset_from_marks(t, v)
            except NotIntegral:
                continue
            if tensor(gamma, dual(gamma)).coeffs != identity:
                continue
            assert verify_two_sided(gamma)
            units.append(_make_unit(gamma, tuple(zip(picks, signs))))
    units.sort(key=lambda u: u.element.coeffs)
    return units


def naive_orthogonal(G: FiniteGroup, bound: Optional[int] = None,
                     max_candidates: int = 500_000_000) -> list:
    """Independent oracle: bounded brute force over coefficient vectors.

    Enumerates every integer vector with |coefficient| <= bound (default
    |G|) on the twisted basis of (G,G) and keeps those with
    gamma . gamma^o = [G].  Returns sorted coefficient tuples.
    """
    import numpy as np

    t = class_table(G, G)
    n = len(t)
    b = G.order if bound is None else bound
    base = 2 * b + 1
    total = base**n
    if total > max_candidates:
        raise ValueError(
            f"naive search over {total} candidate vectors is infeasible"
        )
    dmap = t.dual_indices()
    P = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            P[i, j, :] = _basis_tensor(t, t, i, dmap[j])
    e = np.array(biset_identity(G).coeffs, dtype=np.int64)
    results = []
    chunk = 500_000
    for lo in range(0, total, chunk):
        ids = np.arange(lo, min(lo + chunk, total), dtype=np.int64)
        C = np.empty((len(ids), n), dtype=np.int64)
        q = ids
        for d in range(n):
            C[:, d] = q % base - b
            q = q // base
        # filter one product coordinate at a time; the first filter kills
        # almost every candidate so later quadratic forms are near-free
        for k in range(n):
            r = ((C @ P[:, :, k]) * C).sum(axis=1)
            C = C[r == e[k]]
            if not len(C):
                break
        for row in C:
            results.append(tuple(int(x) for x in row))
    results.sort()
    return results


@dataclass
class UnitGroupStructure:
    """The group structure of the orthogonal units of B^Delta(G,G)."""

    group: FiniteGroup
    elements: tuple  # sorted BisetElement list
    mult: tuple  # mult[i][j] = index of elements[i] . elements[j]
    identity_index: int
    pi: tuple  # outer class per element
    epsilon: tuple
    lambda_indices: tuple  # kernel of pi
    delta_indices: tuple  # image of eta, per outer class
    decomposition: tuple  # (lambda element index, outer class) per element
    exponent: int
    is_abelian: bool
    is_elementary_abelian_2: bool
    rank: Optional[int]
    generators: tuple
    eta_conjugation_ok: bool

    @property
    def order(self) -> int:
        return len(self.elements)


def _element_order(mult, identity_index, i) -> int:
    k, x = 1, i
    while x != identity_index:
        x = mult[x][i]
        k += 1
    return k


def structure(units: list, G: Optional[FiniteGroup] = None) -> UnitGroupStructure:
    """Multiplication table, projection to Out(G), and the semidirect
    decomposition of a complete orthogonal unit list for G = H."""
    elements = sorted((u.element for u in units), key=lambda e: e.coeffs)
    if G is None:
        G = elements[0].table.G
    index = {e.coeffs: i for i, e in enumerate(elements)}
    nat = len(elements)
    mult = []
    for a in elements:
        row = []
        for b in elements:
            prod = tensor(a, b)
            if prod.coeffs not in index:
                raise AssertionError("orthogonal unit set is not closed under tensor")
            row.append(index[prod.coeffs])
        mult.append(tuple(row))
    mult = tuple(mult)
    identity_index = index[biset_identity(G).coeffs]
    pi = []
    eps = []
    for e in elements:
        oi, s = principal_iso(e)
        pi.append(oi)
        eps.append(s)
    pi = tuple(pi)
    eps = tuple(eps)
    out = outer_automorphism_group(G)
    lambda_indices = tuple(i for i in range(nat) if pi[i] == out.identity_index)
    delta_indices = tuple(index[eta(G, oi).coeffs] for oi in range(out.order))
    decomposition = []
    for i, e in enumerate(elements):
        oi = pi[i]
        lam = tensor(e, eta(G, out.inv[oi]))
        li = index[lam.coeffs]
        assert pi[li] == out.identity_index
        assert tensor(elements[li], eta(G, oi)).coeffs == e.coeffs
        decomposition.append((li, oi))
    orders = [_element_order(mult, identity_index, i) for i in range(nat)]
    exponent = 1
    for o in orders:
        exponent = exponent * o // gcd(exponent, o)
    is_abelian = all(
        mult[i][j] == mult[j][i] for i in range(nat) for j in range(i)
    )
    is_ea2 = all(o <= 2 for o in orders)
    rank = None
    if is_ea2 and nat and (nat & (nat - 1)) == 0:
        rank = nat.bit_length() - 1
    generators = []
    generated = {identity_index}
    for i in range(nat):
        if i in generated:
            continue
        generators.append(i)
        closure = set(generated) | {i}
        frontier = [i]
        while frontier:
            nxt = []
            for x in frontier:
                for y in list(closure):
                    for z in (mult[x][y], mult[y][x]):
                        if z not in closure:
                            closure.add(z)
                            nxt.append(z)
            frontier = nxt
        generated = closure
        if len(generated) == nat:
            break
    # Conjugation of diagonal Burnside units by eta images lands where the
    # outer action on B(G) says it must.
    tom = table_of_marks(G)
    eta_ok = True
    for oi in range(out.order):
        e_oi = eta(G, oi)
        e_inv = eta(G, out.inv[oi])
        for u in unit_group(tom):
            lhs = tensor(tensor(e_oi, iota(u)), e_inv)
            rhs = iota(out_action(out.coset_reps[oi], u))
            if lhs.coeffs != rhs.coeffs:
                eta_ok = False
    return UnitGroupStructure(
        group=G,
        elements=tuple(elements),
        mult=mult,
        identity_index=identity_index,
        pi=pi,
        epsilon=eps,
        lambda_indices=lambda_indices,
        delta_indices=delta_indices,
        decomposition=tuple(decomposition),
        exponent=exponent,
        is_abelian=is_abelian,
        is_elementary_abelian_2=is_ea2,
        rank=rank,
        generators=tuple(generators),
        eta_conjugation_ok=eta_ok,
    )


def validate_frobenius_complement(G: FiniteGroup, H: Subgroup) -> bool:
    """Structural test: H is proper, nontrivial, self-normalizing, and meets
    its distinct conjugates trivially."""
    if not (1 < H.order < G.order):
        return False
    if normalizer(G, H).member_set != H.member_set:
        return False
    hset = H.member_set
    for g in range(G.order):
        if g in hset:
            continue
        conj = frozenset(G.conj(g, x) for x in H.members)
        if conj != hset and len(conj & hset) != 1:
            return False
        if conj == hset:
            return False  # contradicts self-normalizing + g outside H
    return True


def frobenius_units(G: FiniteGroup, H: Subgroup) -> list:
    """The Frobenius-complement units [G] - [Delta(H)] + [Delta(H,alpha,H)],
    one per outer class of Aut(H); verified orthogonal and multiplicative."""
    if not validate_frobenius_complement(G, H):
        raise ValueError("H is not a Frobenius complement in G")
    t = class_table(G, G)
    aut, inn, reps = automorphism_cosets(H)
    k_full = t.class_of(diagonal(G.full_subgroup()))
    k_diag = t.class_of(diagonal(H))

    def gamma_of(alpha: GroupMorphism) -> BisetElement:
        coeffs = [0] * len(t)
        coeffs[k_full] += 1
        coeffs[k_diag] -= 1
        coeffs[t.class_of(TwistedDiagonal(H, H, alpha))] += 1
        return BisetElement(t, tuple(coeffs))

    units = []
    seen = set()
    identity = biset_identity(G).coeffs
    for alpha in reps:
        gamma = gamma_of(alpha)
        assert tensor(gamma, dual(gamma)).coeffs == identity
        assert set(rho(gamma)) == {0}, "Frobenius unit leaves the kernel of pi"
        assert gamma.coeffs not in seen, "outer classes must give distinct units"
        seen.add(gamma.coeffs)
        units.append(_make_unit(gamma, certificate_of(gamma)))
    # group law gamma_a . gamma_b = gamma_{ab} over all of Aut(H)
    for a in aut:
        for b in aut:
            lhs = tensor(gamma_of(a), gamma_of(b))
            if lhs.coeffs != gamma_of(compose(a, b)).coeffs:
                raise AssertionError("Frobenius units do not multiply as composition")
    return units


def _nonisomorphic_partner(G: FiniteGroup) -> FiniteGroup:
    n = G.order
    if not is_cyclic(G):
        return build_group(f"C{n}", cap=max(DEFAULT_ORDER_CAP, n))
    return build_group(f"C{n + 1}", cap=max(DEFAULT_ORDER_CAP, n + 1))


def _diagonal_classes(t: TwistedClassTable) -> frozenset:
    lat = subgroup_lattice(t.G)
    return frozenset(t.class_of(diagonal(cls.rep)) for cls in lat.classes)


def theorem_report(G: FiniteGroup) -> dict:
    """Run the full pipeline on (G,G) and verify the main assertions.

    Covers two-sidedness, finiteness/completeness of the search, emptiness
    against a non-isomorphic partner, principal isomorphisms, the nilpotent
    structure count and factorization, and (for non-uniform units) the
    self-normalizing maximal off-diagonal support condition.
    """
    tom = table_of_marks(G)
    burnside_units = unit_group(tom)
    out = outer_automorphism_group(G)
    units = search_orthogonal(G, G)
    nilpotent = is_nilpotent(G)
    report: dict = {
        "group": {"name": G.name, "order": G.order, "nilpotent": nilpotent},
        "burnside_unit_count": len(burnside_units),
        "out_order": out.order,
        "orthogonal_unit_count": len(units),
    }
    checks: dict = {}
    checks["two_sided"] = all(verify_two_sided(u.element) for u in units)
    checks["finite"] = True  # the constrained search terminates with a complete list
    partner = _nonisomorphic_partner(G)
    checks["empty_for_nonisomorphic"] = {
        "partner": partner.name,
        "ok": search_orthogonal(G, partner) == [],
    }
    principal_ok = all(
        u.principal is not None and u.principal[1] in (1, -1) for u in units
    )
    checks["principal_iso"] = principal_ok
    uniform_flags = [u.uniform is not None for u in units]
    if nilpotent:
        checks["all_uniform"] = all(uniform_flags)
    st = structure(units, G)
    lam_count = len(st.lambda_indices)
    report["lambda_order"] = lam_count
    report["structure"] = {
        "exponent": st.exponent,
        "abelian": st.is_abelian,
        "elementary_abelian_2": st.is_elementary_abelian_2,
        "rank": st.rank,
        "generators": list(st.generators),
    }
    checks["semidirect_decomposition"] = len(units) == lam_count * out.order
    checks["eta_conjugation"] = st.eta_conjugation_ok
    if nilpotent:
        checks["nilpotent_count"] = len(units) == len(burnside_units) * out.order
        iota_units = {iota(u).coeffs for u in burnside_units}
        checks["lambda_is_iota_units"] = (
            {st.elements[i].coeffs for i in st.lambda_indices} == iota_units
        )
    # Consistency for non-uniform units: a maximal off-diagonal support
    # class has coefficient +-1 and self-normalizing proper R.
    t = class_table(G, G)
    diag_classes = _diagonal_classes(t)
    latG = subgroup_lattice(G)
    witnesses = []
    off_ok = True
    for u in units:
        if u.uniform is not None or u.principal[0] != out.identity_index:
            continue
        offs = [k for k in u.element.support() if k not in diag_classes]
        if not offs:
            off_ok = False
            continue
        maximal = [
            k for k in offs if not any(m != k and t.leq(k, m) for m in offs)
        ]
        for k in maximal:
            ri = t.r_class[k]
            cls = latG.classes[ri]
            coeff_ok = u.element.coeffs[k] in (1, -1)
            self_norm = (
                cls.normalizer.order == cls.order and cls.order < G.order
            )
            if not (coeff_ok and self_norm):
                off_ok = False
            witnesses.append(
                {
                    "unit": list(u.element.coeffs),
                    "class": t.label(k),
                    "coefficient": u.element.coeffs[k],
                    "self_normalizing_proper": self_norm,
                }
            )
    checks["max_offdiagonal_selfnormalizing"] = off_ok
    report["offdiagonal_witnesses"] = witnesses
    report["checks"] = checks
    report["ok"] = all(
        v["ok"] if isinstance(v, dict) else bool(v) for v in checks.values()
    )
    return report
