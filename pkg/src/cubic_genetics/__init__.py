"""Crackers, breeding operations and gene decompositions of cubic graphs."""

from .analysis import (
    DESCENDANT,
    GENE,
    Classification,
    Cracker,
    bridges,
    check_hamiltonian_cycle,
    check_tait_coloring,
    classify,
    cracker_sides,
    cyclic_edge_connectivity,
    enumerate_crackers,
    enumerate_cubic_crackers,
    girth,
    is_cracker,
    is_gene,
    is_hamiltonian,
    is_tait_colorable,
    smallest_cracker,
)
from .canon import GeneMultiset, canonical_form, canonical_graph, canonical_labeling, is_isomorphic, multiset_equal
from .corpus import StatsRecord, batch_run, count_cubic, enumerate_cubic, ingest_graph6, mutants, table1_stats
from .errors import *  # noqa: F401,F403
from .errors import CubicGraphError
from .genealogy import (
    ConjectureEvidence,
    DecompositionStep,
    FamilyTree,
    Link,
    admissible_steps,
    all_decompositions,
    ancestor_genes,
    apply_inverse,
    decompose,
    decompose_step,
    recompose,
    render_tree_dot,
    verify_conjecture,
)
from .graph import (
    CubicGraph,
    decode_graph6,
    edge_ref,
    from_edge_list,
    neighbors,
    parse_edge_list_text,
    parse_graph6,
    read_graph,
    relabel,
    to_edge_list_text,
    to_graph6,
)
from .named import BRIDGE10, K4, K33, NAMED, PETERSEN, PRISM, TWOCRACK8
from .operations import (
    OpRecord,
    ParthenogenicObject,
    apply_record,
    breed1,
    breed2,
    breed3,
    find_parthenogenic_objects,
    inv_breed1,
    inv_breed2,
    inv_breed3,
    inv_parth1,
    inv_parth2,
    inv_parth3,
    is_irreducible,
    parth1,
    parth2,
    parth3,
)

__version__ = "0.1.0"
