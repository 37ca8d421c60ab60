"""Small named cubic graphs used throughout the tests and demos."""

from __future__ import annotations

from .graph import from_edge_list

K4 = from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])

K33 = from_edge_list(6, [(a, b) for a in (0, 1, 2) for b in (3, 4, 5)])

# two triangles 012 / 345 joined by the rungs 03, 14, 25
PRISM = from_edge_list(
    6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)]
)

# outer 5-cycle 0..4, spokes i -> i+5, inner pentagram
PETERSEN = from_edge_list(
    10,
    [(i, (i + 1) % 5) for i in range(5)]
    + [(i, i + 5) for i in range(5)]
    + [(5 + i, 5 + (i + 2) % 5) for i in range(5)],
)

# K4 - (2,3) on 0..3 and K4 - (6,7) on 4..7, joined by 26 and 37
TWOCRACK8 = from_edge_list(
    8,
    [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3),
     (4, 5), (4, 6), (4, 7), (5, 6), (5, 7),
     (2, 6), (3, 7)],
)

# same two blocks, ports 2,3 -> vertex 8, ports 6,7 -> vertex 9, bridge 89
BRIDGE10 = from_edge_list(
    10,
    [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3),
     (4, 5), (4, 6), (4, 7), (5, 6), (5, 7),
     (2, 8), (3, 8), (6, 9), (7, 9), (8, 9)],
)

NAMED = {
    "K4": K4,
    "K33": K33,
    "PRISM": PRISM,
    "PETERSEN": PETERSEN,
    "TWOCRACK8": TWOCRACK8,
    "BRIDGE10": BRIDGE10,
}
