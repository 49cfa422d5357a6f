"""Twisted diagonal classes and the two tensor product algorithms.

Enumerates the basis of the bifree double Burnside group for (A4, A4),
multiplies two basis elements with the double coset formula, and checks
every coefficient with the independent orbit-sum mark algorithm.
"""

from doubleburnside import (
    biset_marks,
    build_group,
    class_table,
    dual,
    n_alpha,
    tensor,
    tensor_mark,
)
from doubleburnside.bisets import biset_basis


def main():
    G = build_group("A4")
    t = class_table(G, G)
    print(f"B^Delta({G.name}, {G.name}) has {len(t)} basis classes:")
    for k in range(len(t)):
        d = t.reps[k]
        nal, nalinv = n_alpha(d)
        print(f"  {t.label(k):>22} |Delta|={d.order:>2} "
              f"|N|={t.n_order[k]:>3} = |N_a^-1|*|C(S)| = {nalinv.order}*{t.cH[k]}")

    a = biset_basis(t, 5)
    b = biset_basis(t, 7)
    prod = tensor(a, b)
    print(f"\n{t.label(5)} . {t.label(7)} = {prod.coeffs}")
    recomputed = tuple(tensor_mark(a, b, k) for k in range(len(t)))
    print(f"orbit-sum marks agree: {biset_marks(prod) == recomputed}")

    d = dual(a)
    print(f"dual of {t.label(5)} is supported on "
          f"{[t.label(k) for k in d.support()]}")


if __name__ == "__main__":
    main()
