"""Character tables from nothing but generator permutations.

Builds the dihedral group of order 8 and the extraspecial group of order
27, computes their exact tables, and double-checks the orthogonality
relations.  Every value is a cyclotomic integer; nothing is floating point.
"""

from etalab import character_table, dihedral, extraspecial_exp_p
from etalab.groupfile import format_permutation


def show_table(name, G):
    table = character_table(G)
    print(f"== {name}: order {G.order}, {len(table)} classes, "
          f"conductor {table.e}, working prime {table.q}")
    print("   classes:")
    for k, rep in enumerate(table.classes.representatives):
        print(f"     C{k}  size {table.classes.sizes[k]:2d}  {format_permutation(rep)}")
    print("   irreducibles:")
    for i, chi in enumerate(table):
        row = "  ".join(f"{str(v):>10s}" for v in chi.values)
        print(f"     chi_{i} (deg {chi.degree}): {row}")
    table.verify_orthogonality()
    print("   orthogonality: exact, verified")
    print(f"   sum of squared degrees: {sum(d * d for d in table.degrees)} = |G|")
    print()


def main():
    show_table("dihedral of order 8", dihedral(4))
    show_table("extraspecial of order 27, exponent 3", extraspecial_exp_p(3))


if __name__ == "__main__":
    main()
