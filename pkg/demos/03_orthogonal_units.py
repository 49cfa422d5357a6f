"""The orthogonal unit group of the double Burnside ring.

Runs the constrained search on a few groups, shows the semidirect
structure over Out(G), and compares two non-isomorphic groups where the
search must come back empty.
"""

from doubleburnside import (
    build_group,
    outer_automorphism_group,
    search_orthogonal,
    structure,
    table_of_marks,
    unit_group,
)


def main():
    for name in ["C3", "C5", "D8", "A4"]:
        G = build_group(name)
        units = search_orthogonal(G)
        st = structure(units, G)
        out = outer_automorphism_group(G)
        bx = len(unit_group(table_of_marks(G)))
        print(f"{name}: {len(units)} orthogonal units "
              f"(|B^x|={bx}, |Out|={out.order}, "
              f"kernel of pi has {len(st.lambda_indices)}), "
              f"exponent {st.exponent}, "
              f"{'abelian' if st.is_abelian else 'nonabelian'}")
        for u in units[:4]:
            tag = "uniform" if u.uniform else "non-uniform"
            print(f"    {u.element.coeffs}  {tag}  pi -> {u.principal}")

    C4, V4 = build_group("C4"), build_group("C2xC2")
    print(f"\nB(C4, C2xC2) orthogonal units: {search_orthogonal(C4, V4)}")
    C6 = build_group("C6")
    C2xC3 = build_group("C2xC3")
    across = search_orthogonal(C6, C2xC3)
    print(f"B(C6, C2xC3) orthogonal units: {len(across)} "
          "(nonempty exactly because the groups are isomorphic)")


if __name__ == "__main__":
    main()
