"""Counting distinct constituents of character products.

For a p-group character chi of degree p^n, the product chi * conj(chi)
always has at least 2n(p-1)+1 distinct irreducible constituents.  Dropping
the conjugate is a different story: the order-27 extraspecial group has a
degree-3 character whose square is 3 times a single irreducible.
"""

from etalab import (
    character_table,
    decompose,
    dihedral,
    extraspecial_exp_p,
    load_catalog_group,
    quaternion,
)


def bound(p, n):
    return 2 * n * (p - 1) + 1


def show(name, G, p):
    table = character_table(G)
    print(f"== {name}")
    for i, chi in enumerate(table):
        if chi.degree == 1:
            continue
        dec = decompose(chi * chi.conjugate())
        n = 0
        d = chi.degree
        while d > 1:
            d //= p
            n += 1
        pattern = dec.degree_pattern()
        print(f"   chi_{i} (deg {chi.degree}): eta = {dec.eta} >= {bound(p, n)}"
              f"  constituent degrees {list(pattern)}")
    print()


def main():
    show("dihedral of order 8", dihedral(4), 2)
    show("quaternion group", quaternion(), 2)
    show("extraspecial 27", extraspecial_exp_p(3), 3)

    print("== the same group without the conjugate")
    table = character_table(load_catalog_group("es27"))
    chi = next(c for c in table if c.degree == 3)
    square = decompose(chi * chi)
    only, mult = square.constituents[0]
    print(f"   chi * chi has eta = {square.eta}: "
          f"a single degree-{only.degree} constituent with multiplicity {mult}")
    print("   so the lower bound genuinely needs the conjugate partner")


if __name__ == "__main__":
    main()
