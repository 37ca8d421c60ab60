"""
Crackers and classification of a few small cubic graphs
=======================================================

"""

from cubic_genetics import NAMED, classify, enumerate_cubic_crackers, to_graph6

# each named graph: its graph6 code, the kind, and its smallest cracker size
print(f"{'name':10} {'g6':12} {'kind':11} cyc  girth  ham    mutant")
for name, g in NAMED.items():
    c = classify(g)
    print(
        f"{name:10} {to_graph6(g).decode():12} {c.kind:11} {str(c.cyclic_connectivity):4} "
        f"{c.girth:<6} {str(c.hamiltonian):6} {c.mutant}"
    )

# the 1-, 2- and 3-crackers of the two-block graphs
for name in ("TWOCRACK8", "BRIDGE10", "PRISM"):
    edges = [c.edges for c in enumerate_cubic_crackers(NAMED[name])]
    print(name, "crackers:", edges)
