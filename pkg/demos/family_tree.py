"""
Breeding a graph and recovering its ancestors
=============================================

Start from three copies of K4, breed them together, hide a triangle in the
result, then decompose it again and replay the family tree.
"""

from pathlib import Path

from cubic_genetics import (
    K4,
    breed1,
    decompose,
    is_isomorphic,
    parth3,
    recompose,
    render_tree_dot,
    to_graph6,
    verify_conjecture,
)

# two K4s joined by a bridge, then a third K4 bridged onto that
pair, bridge, _ = breed1(K4, K4, (2, 3), (2, 3))
trio, _, _ = breed1(pair, K4, (0, 1), (0, 1))
print("bridge between the first two blocks:", bridge)

# parthenogenesis: blow the apex of a bridge up into a triangle
child, (apex, v1, v2), rec = parth3(trio, bridge[0])
print("child:", to_graph6(child).decode(), "on", child.n, "vertices; triangle", (apex, v1, v2))

# decompose back down to genes
tree = decompose(child)
print("ancestor genes:", tree.genes())
print("tree has", len(tree.nodes), "nodes and", len(tree.links), "operations")

# the tree replays to a graph isomorphic to the child
print("replay matches:", is_isomorphic(recompose(tree), child))

# every pathway agrees on the gene multiset
unique, evidence = verify_conjecture(child)
print("unique gene multiset:", unique, "over", evidence.pathways, "pathways")

out = Path("family_tree.dot")
out.write_text(render_tree_dot(tree))
print("wrote", out)
