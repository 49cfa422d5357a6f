"""Walk through the Burnside ring of A4.

Builds the subgroup lattice, prints the table of marks, multiplies a few
basis elements through the ghost map, and enumerates the unit group.
"""

from doubleburnside import build_group, marks, table_of_marks, unit_group
from doubleburnside.burnside import basis_element, burnside_one


def main():
    G = build_group("A4")
    tom = table_of_marks(G)
    print(f"{G.name}: {tom.size} conjugacy classes of subgroups")
    for i, row in enumerate(tom.matrix):
        print(f"  {tom.label(i):>16} {row}")

    x = basis_element(tom, 1)
    y = basis_element(tom, 2)
    print(f"\n[{tom.label(1)}] * [{tom.label(2)}] has coefficients {(x * y).coeffs}")
    print(f"mark vectors multiply pointwise: {marks(x * y)}")

    one = burnside_one(tom)
    print("\nunit group of B(A4):")
    for u in unit_group(tom):
        tag = "identity" if u.coeffs == one.coeffs else ""
        print(f"  {u.coeffs} marks={marks(u)} {tag}")


if __name__ == "__main__":
    main()
