"""Frobenius complement units on A4.

A4 acts on the Sylow 2-subgroup with complement C3; the complement gives
non-uniform orthogonal units indexed by the automorphisms of C3.  This
script builds them, verifies the group law, and locates them inside the
full unit group.
"""

from doubleburnside import (
    build_group,
    frobenius_units,
    iota,
    search_orthogonal,
    subgroup_lattice,
    table_of_marks,
    tensor,
    unit_group,
)


def main():
    G = build_group("A4")
    lat = subgroup_lattice(G)
    H = next(cls.rep for cls in lat.classes if cls.order == 3)
    print(f"complement: subgroup of order {H.order} in {G.name}")

    units = frobenius_units(G, H)
    for u in units:
        tag = "identity" if u.element.coeffs == units[0].element.coeffs \
            else "inversion"
        print(f"  gamma_{tag}: {u.element.coeffs} "
              f"uniform={u.uniform is not None}")

    g = units[1].element
    print(f"gamma_inv squared is the identity: "
          f"{tensor(g, g).coeffs == units[0].element.coeffs}")

    embedded = {iota(u).coeffs for u in unit_group(table_of_marks(G))}
    everything = {u.element.coeffs for u in search_orthogonal(G)}
    print(f"gamma_inv lies outside the embedded Burnside units: "
          f"{g.coeffs not in embedded}")
    print(f"but inside the full orthogonal unit group: "
          f"{g.coeffs in everything}")


if __name__ == "__main__":
    main()
