"""Descent chains and their ledgers.

Walking a character down a chief series splits each step into stable,
extension, or induced.  The running count m of unstable indices obeys
m = 2s + r at every level, where p^s is the current degree and p^r the
index of the current stabilizer; at the top this closes to m_t = 2n.
"""

from etalab import build_chain, classify_chain, character_table, dihedral, prop5_witness


def show_chain(name, G, chi):
    chain = build_chain(G, chi)
    ledger = classify_chain(chain)
    print(f"== {name}: chi of degree {chi.degree}, group order {G.order}")
    print("   i  |N_i|  deg nu_i  case        m  r  s  |stabilizer|")
    for i, N in enumerate(chain.series):
        print(f"   {i}  {N.order:5d}  {chain.nus[i].degree:8d}  {ledger.case[i]:10s}"
              f"  {ledger.m[i]}  {ledger.r[i]}  {ledger.s[i]}"
              f"  {ledger.stabilizer_orders[i]}")
    print(f"   closes at m_t = {ledger.m[-1]} = 2n, "
          f"so eta(chi, conj chi) >= m_t(p-1)+1")
    print()


def main():
    G = dihedral(4)
    table = character_table(G)
    show_chain("dihedral of order 8", G, table[4])

    w = prop5_witness(2, 1)
    show_chain("wreath witness (p=2, n=1)", w.group, w.chi)

    w3 = prop5_witness(3, 1)
    show_chain("wreath witness (p=3, n=1)", w3.group, w3.chi)


if __name__ == "__main__":
    main()
