"""Twisted diagonal classes, tensor products, marks, and structure maps."""

import random

import pytest

from doubleburnside import (
    NotIntegral,
    biset_identity,
    biset_marks,
    class_table,
    conjugacy_test,
    dual,
    eta,
    iota,
    mark_at,
    n_alpha,
    rho,
    star,
    subgroup_lattice,
    table_of_marks,
    tensor,
    tensor_mark,
)
from doubleburnside.bisets import (
    TwistedDiagonal,
    biset_basis,
    biset_from_marks,
    diagonal,
)
from doubleburnside.burnside import basis_element, marks
from doubleburnside.groups import (
    Subgroup,
    centralizer,
    isomorphisms,
    normalizer,
    outer_automorphism_group,
)


def all_twisted_subgroups(G, H):
    """Oracle: every twisted diagonal of G x H, from raw isomorphism lists."""
    out = []
    latG, latH = subgroup_lattice(G), subgroup_lattice(H)
    for rcls in latG.classes:
        for mem_r in rcls.members:
            R = Subgroup(G, tuple(sorted(mem_r)))
            for scls in latH.classes:
                if scls.order != rcls.order:
                    continue
                for mem_s in scls.members:
                    S = Subgroup(H, tuple(sorted(mem_s)))
                    for alpha in isomorphisms(S, R):
                        out.append(TwistedDiagonal(R, S, alpha))
    return out


@pytest.mark.parametrize("gname,hname,count", [
    ("C1", "C1", 1),
    ("C2", "C2", 2),
    ("C2", "C3", 1),
    ("S3", "S3", 4),
    ("A4", "A4", 8),
    ("C2xC2", "C2xC2", 16),
])
def test_class_counts(gname, hname, count, groups):
    assert len(class_table(groups(gname), groups(hname))) == count


@pytest.mark.parametrize("gname,hname", [
    ("C4", "C4"), ("S3", "S3"), ("C2xC2", "C2"), ("C6", "S3"),
])
def test_classes_partition_all_twisted_subgroups(gname, hname, groups):
    G, H = groups(gname), groups(hname)
    t = class_table(G, H)
    subs = all_twisted_subgroups(G, H)
    # every twisted subgroup lands in exactly one class
    seen = {}
    for d in subs:
        k = t.class_of(d)
        seen.setdefault(k, set()).add(d.members)
    assert set(seen) == set(range(len(t)))
    # and the orbit sets stored in the table are exactly the fibers
    for k, fib in seen.items():
        assert fib == set(t.orbits[k])


def test_conjugacy_test_witnesses(groups):
    G = groups("A4")
    t = class_table(G, G)
    for k in range(2, 5):
        d = t.reps[k]
        moved = d.conjugate(3, 5)
        witness = conjugacy_test(d, moved)
        assert witness is not None
        g, h = witness
        assert d.conjugate(g, h).members == moved.members
    assert conjugacy_test(t.reps[0], t.reps[1]) is None


def test_normalizer_order_identity(groups):
    for gname, hname in [("S3", "S3"), ("A4", "A4"), ("D8", "Q8"), ("C6", "C6")]:
        G, H = groups(gname), groups(hname)
        t = class_table(G, H)
        for k in range(len(t)):
            d = t.reps[k]
            nal, nalinv = n_alpha(d)
            cH = centralizer(H, d.S).order
            cG = centralizer(G, d.R).order
            assert t.n_order[k] == nalinv.order * cH
            assert t.n_order[k] == cG * nal.order


def test_duality_is_an_involution(groups):
    G, H = groups("S3"), groups("S3")
    t = class_table(G, H)
    for k in range(len(t)):
        d = t.reps[k]
        dd = d.dual().dual()
        assert dd.members == d.members
    a = biset_basis(t, 2) - 3 * biset_basis(t, 0)
    assert dual(dual(a)).coeffs == a.coeffs


def test_star_composes_relations(groups):
    G = groups("S3")
    t = class_table(G, G)
    full = G.full_subgroup()
    idm = diagonal(full)
    for k in range(len(t)):
        d = t.reps[k]
        assert star(idm, d).members == d.members
        assert star(d, diagonal(d.S.group.full_subgroup())).members == d.members


def test_identity_of_tensor(groups):
    for name in ["C4", "S3", "A4"]:
        G = groups(name)
        t = class_table(G, G)
        e = biset_identity(G)
        for k in range(len(t)):
            b = biset_basis(t, k)
            assert tensor(e, b).coeffs == b.coeffs
            assert tensor(b, e).coeffs == b.coeffs


def test_tensor_associativity(groups):
    G, H = groups("S3"), groups("C2xC2")
    rng = random.Random(7)
    tGG = class_table(G, G)
    tGH = class_table(G, H)
    tHH = class_table(H, H)
    for _ in range(20):
        a = biset_basis(tGG, rng.randrange(len(tGG)))
        b = biset_basis(tGH, rng.randrange(len(tGH)))
        c = biset_basis(tHH, rng.randrange(len(tHH)))
        assert tensor(tensor(a, b), c).coeffs == tensor(a, tensor(b, c)).coeffs


def test_duality_is_contravariant(groups):
    G, H = groups("S3"), groups("S3")
    t = class_table(G, H)
    rng = random.Random(11)
    for _ in range(20):
        a = biset_basis(t, rng.randrange(len(t)))
        b = biset_basis(class_table(H, G), rng.randrange(len(t)))
        lhs = dual(tensor(a, b))
        rhs = tensor(dual(b), dual(a))
        assert lhs.coeffs == rhs.coeffs


def test_mark_matrix_triangular_and_invertible(groups):
    for name in ["S3", "A4"]:
        G = groups(name)
        t = class_table(G, G)
        m = t.mark_matrix
        for i in range(len(t)):
            assert m[i][i] > 0
            for j in range(len(t)):
                if m[i][j]:
                    assert t.reps[i].order <= t.reps[j].order
        for k in range(len(t)):
            b = biset_basis(t, k)
            assert biset_from_marks(t, biset_marks(b)).coeffs == b.coeffs


def test_biset_from_marks_rejects_non_integral(groups):
    G = groups("C2")
    t = class_table(G, G)
    bad = [0] * len(t)
    bad[0] = 1  # the free class alone cannot carry mark 1 at the trivial class
    with pytest.raises(NotIntegral):
        biset_from_marks(t, bad)


def test_tensor_against_independent_mark_algorithm(groups):
    rng = random.Random(5)
    names = ["C2", "C3", "S3", "C2xC2"]
    for _ in range(40):
        G, H, K = (groups(rng.choice(names)) for _ in range(3))
        tGH, tHK = class_table(G, H), class_table(H, K)
        if not len(tGH) or not len(tHK):
            continue
        a = biset_basis(tGH, rng.randrange(len(tGH)))
        b = biset_basis(tHK, rng.randrange(len(tHK)))
        prod = tensor(a, b)
        tGK = prod.table
        assert biset_marks(prod) == tuple(
            tensor_mark(a, b, k) for k in range(len(tGK))
        )


def test_iota_is_a_ring_embedding(groups):
    for name in ["S3", "A4"]:
        G = groups(name)
        tom = table_of_marks(G)
        lat = tom.lattice
        xs = [basis_element(tom, i) for i in range(tom.size)]
        for x in xs:
            ix = iota(x)
            # the diagonal mark identity: centralizer order times the mark
            for ri, cls in enumerate(lat.classes):
                expected = centralizer(G, cls.rep).order * marks(x)[ri]
                assert mark_at(ix, diagonal(cls.rep)) == expected
            for y in xs:
                assert tensor(iota(x), iota(y)).coeffs == iota(x * y).coeffs
        assert iota(xs[-1]).coeffs == biset_identity(G).coeffs


def test_eta_is_a_section_of_rho(groups):
    for name in ["A4", "C2xC2", "C5"]:
        G = groups(name)
        out = outer_automorphism_group(G)
        for oi in range(out.order):
            e = eta(G, oi)
            assert rho(e) == {oi: 1}
            for oj in range(out.order):
                prod = tensor(e, eta(G, oj))
                assert rho(prod) == {out.comp[oi][oj]: 1}


def test_basis_coefficient_divisibility(groups):
    # each tensor coefficient is bounded by the double coset count and the
    # product expansion has nonnegative coefficients on basis inputs
    G = groups("A4")
    t = class_table(G, G)
    for i in range(len(t)):
        for j in range(len(t)):
            prod = tensor(biset_basis(t, i), biset_basis(t, j))
            assert all(c >= 0 for c in prod.coeffs)
            assert sum(prod.coeffs) >= 1
