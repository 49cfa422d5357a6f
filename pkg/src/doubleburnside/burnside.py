"""The Burnside ring B(G): table of marks, ghost-map arithmetic, unit group.

Elements are integer coefficient vectors over the standard basis [G/R],
one slot per conjugacy class of subgroups in the canonical lattice order
(ascending subgroup order).  All arithmetic goes through the mark
homomorphism and exact triangular back-substitution.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .groups import (
    FiniteGroup,
    GroupMorphism,
    Subgroup,
    SubgroupLattice,
    subgroup_lattice,
)


class NotIntegral(ArithmeticError):
    """A mark vector has no integral preimage under the ghost map."""


class TableOfMarks:
    """Square integer matrix m[U][S] = number of U-fixed points of G/S.

    Lower-triangular in the canonical class order: m[U][S] != 0 only when
    U is subconjugate to S, and m[S][S] = [N_G(S):S] > 0.
    """

    def __init__(self, lattice: SubgroupLattice):
        self.lattice = lattice
        self.group = lattice.group
        G = self.group
        n = len(lattice.classes)
        matrix = []
        for u in range(n):
            urep = set(lattice.classes[u].rep.members)
            row = []
            for s in range(n):
                scls = lattice.classes[s]
                cosets_per_conjugate = scls.normalizer.order // scls.order
                hits = sum(1 for mem in scls.members if urep <= set(mem))
                row.append(hits * cosets_per_conjugate)
            matrix.append(tuple(row))
        self.matrix = tuple(matrix)

    @property
    def size(self) -> int:
        return len(self.matrix)

    def label(self, i: int) -> str:
        return f"R#{i}(order={self.lattice.classes[i].order})"

    def __repr__(self) -> str:
        return f"TableOfMarks({self.group.name}, {self.size} classes)"


@lru_cache(maxsize=None)
def table_of_marks(G: FiniteGroup) -> TableOfMarks:
    return TableOfMarks(subgroup_lattice(G))


@dataclass(frozen=True)
class BurnsideElement:
    """An element of B(G) as an integer coefficient vector over [G/R]."""

    table: TableOfMarks
    coeffs: tuple

    def __add__(self, other: "BurnsideElement") -> "BurnsideElement":
        assert self.table is other.table
        return BurnsideElement(self.table, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "BurnsideElement") -> "BurnsideElement":
        assert self.table is other.table
        return BurnsideElement(self.table, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "BurnsideElement":
        return BurnsideElement(self.table, tuple(-a for a in self.coeffs))

    def __rmul__(self, k: int) -> "BurnsideElement":
        return BurnsideElement(self.table, tuple(k * a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return self.__rmul__(other)
        assert self.table is other.table
        prod = tuple(a * b for a, b in zip(marks(self), marks(other)))
        return mark_inverse(self.table, prod)

    def __repr__(self) -> str:
        return f"BurnsideElement({self.coeffs})"


def basis_element(table: TableOfMarks, i: int) -> BurnsideElement:
    coeffs = [0] * table.size
    coeffs[i] = 1
    return BurnsideElement(table, tuple(coeffs))


def burnside_one(table: TableOfMarks) -> BurnsideElement:
    """The ring identity [G/G] (last class in the canonical order)."""
    full = table.lattice.full_class_index()
    assert table.lattice.classes[full].order == table.group.order
    return basis_element(table, full)


def marks(x: BurnsideElement) -> tuple:
    """Mark vector (Phi_U(x))_U, one slot per subgroup class."""
    m = x.table.matrix
    c = x.coeffs
    return tuple(sum(row[s] * c[s] for s in range(len(c)) if c[s]) for row in m)


def mark_inverse(table: TableOfMarks, values: Iterable[int]) -> BurnsideElement:
    """Solve Phi(x) = values exactly; raises NotIntegral if unsolvable in B(G)."""
    v = list(values)
    n = table.size
    if len(v) != n:
        raise ValueError(f"expected {n} marks, got {len(v)}")
    m = table.matrix
    coeffs = [0] * n
    for j in range(n - 1, -1, -1):
        rhs = v[j] - sum(m[j][s] * coeffs[s] for s in range(j + 1, n) if coeffs[s])
        diag = m[j][j]
        q, r = divmod(rhs, diag)
        if r:
            raise NotIntegral(f"mark vector not in the image of the ghost map at class {j}")
        coeffs[j] = q
    return BurnsideElement(table, tuple(coeffs))


def unit_group(table: TableOfMarks) -> tuple:
    """All units of B(G), by brute force over sign vectors in mark space.

    Units are exactly the elements with all marks in {+-1} that are
    integral under the ghost-map inverse.
    """
    units = []
    for signs in itertools.product((1, -1), repeat=table.size):
        try:
            units.append(mark_inverse(table, signs))
        except NotIntegral:
            continue
    units.sort(key=lambda u: u.coeffs)
    return tuple(units)


def out_action(phi: GroupMorphism, x: BurnsideElement) -> BurnsideElement:
    """The action of an automorphism of G on B(G): [G/R] -> [G/phi(R)]."""
    table = x.table
    lat = table.lattice
    coeffs = [0] * table.size
    for i, c in enumerate(x.coeffs):
        if not c:
            continue
        image = [phi(m) for m in lat.classes[i].rep.members]
        coeffs[lat.class_index(image)] += c
    return BurnsideElement(table, tuple(coeffs))
