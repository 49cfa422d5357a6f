"""Shared fixtures and independent brute-force oracles.

The oracles deliberately avoid the library's own algorithms: subgroups by
subset filtering, marks by coset counting, automorphisms by permutation
filtering.  They are only usable for small orders and exist to validate
the structured implementations.
"""

import itertools

import pytest

from doubleburnside import build_group


@pytest.fixture(scope="session")
def groups():
    """A shared cache of catalog groups so lru_cached lattices are reused."""
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = build_group(name)
        return cache[name]

    return get


def brute_subgroup_sets(G):
    """Every subgroup of G as a frozenset, by filtering all subsets."""
    n = G.order
    assert n <= 12, "subset filtering is for tiny groups only"
    out = []
    elements = list(range(n))
    for mask in range(1 << n):
        if not mask & 1:
            continue
        members = [g for g in elements if mask >> g & 1]
        mset = set(members)
        if all(G.mul(a, b) in mset for a in members for b in members):
            out.append(frozenset(members))
    return out


def brute_fixed_points(G, u_members, s_members):
    """#{gS : U <= gSg^{-1}} by direct coset enumeration."""
    sset = set(s_members)
    seen = set()
    count = 0
    for g in range(G.order):
        coset = frozenset(G.mul(g, s) for s in s_members)
        if coset in seen:
            continue
        seen.add(coset)
        ginv = G.inv(g)
        if all(G.mul(ginv, G.mul(u, g)) in sset for u in u_members):
            count += 1
    return count


def brute_automorphisms(G):
    """All automorphisms of G as image tuples, by permutation filtering."""
    n = G.order
    assert n <= 8, "permutation filtering is for tiny groups only"
    autos = []
    for perm in itertools.permutations(range(n)):
        if perm[0] != 0:
            continue
        if all(
            perm[G.mul(a, b)] == G.mul(perm[a], perm[b])
            for a in range(n)
            for b in range(n)
        ):
            autos.append(perm)
    return autos
