"""Frozen instances that exercise every post-construction repair branch.

Each entry: branch tag -> (n, edges, X, witnesses, completeness shape).
Found by seeded random search over symmetric-sum graphs; each is the first
hit for its tag and is kept verbatim.
"""

REPAIR_INSTANCES = {
    't2_complete_swap12': (
        10,
        ((0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 7), (0, 9), (1, 2), (1, 5), (1, 6), (1, 7), (1, 8), (3, 8), (3, 9), (6, 9), (7, 9)),
        (0, 1),
        (2, 3, 4, 5, 6, 7, 8),
        'y4',
    ),
    't2_reverse_x1x2': (
        9,
        ((0, 1), (0, 2), (0, 3), (0, 4), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8), (2, 7), (2, 8), (3, 6), (4, 7), (5, 6), (6, 8)),
        (0, 1),
        (2, 3, 4, 5, 6, 7, 8),
        'x2',
    ),
    't3_anchor_swap_gap2': (
        14,
        ((0, 3), (0, 4), (0, 5), (0, 6), (0, 11), (0, 12), (0, 13), (1, 5), (1, 6), (1, 7), (1, 8), (1, 9), (1, 10), (2, 5), (2, 10), (2, 11), (2, 12), (2, 13), (3, 8), (3, 9), (4, 6), (4, 10), (4, 11), (5, 13), (6, 10), (7, 11), (8, 9), (11, 13)),
        (0, 1, 2),
        (3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13),
        'y8',
    ),
    't3_anchor_swap_gap3': (
        21,
        ((0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (0, 10), (0, 11), (0, 12), (0, 14), (1, 6), (1, 7), (1, 8), (1, 9), (1, 10), (1, 19), (2, 4), (2, 9), (2, 10), (2, 11), (2, 12), (2, 13), (2, 17), (2, 19), (3, 17), (4, 5), (4, 14), (5, 12), (6, 16), (6, 18), (7, 13), (8, 11), (8, 16), (9, 11), (10, 12), (10, 13), (10, 15), (10, 16), (10, 20), (11, 12), (13, 18), (15, 16)),
        (0, 1, 2),
        (3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13),
        'y8',
    ),
    't3_complete_swap12': (
        17,
        ((0, 3), (0, 4), (0, 5), (0, 6), (0, 12), (0, 14), (0, 16), (1, 4), (1, 6), (1, 7), (1, 8), (1, 9), (1, 10), (1, 14), (2, 3), (2, 4), (2, 6), (2, 11), (2, 12), (2, 13), (2, 14), (2, 15), (4, 5), (4, 14), (5, 10), (6, 7), (8, 9), (9, 14), (10, 12), (10, 15), (15, 16)),
        (0, 1, 2),
        (3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13),
        'y4',
    ),
    't3_complete_swap13': (
        15,
        ((0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (0, 7), (1, 5), (1, 6), (1, 7), (1, 8), (1, 9), (1, 10), (1, 11), (2, 5), (2, 6), (2, 11), (2, 12), (2, 13), (3, 4), (3, 5), (3, 6), (3, 13), (4, 7), (4, 11), (5, 9), (6, 9), (6, 14), (7, 12), (7, 14), (8, 11), (10, 14), (13, 14)),
        (0, 1, 2),
        (3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13),
        'y4',
    ),
    't3_complete_swap23': (
        21,
        ((0, 3), (0, 4), (0, 5), (0, 6), (0, 10), (0, 12), (0, 13), (0, 14), (0, 16), (1, 2), (1, 3), (1, 6), (1, 7), (1, 8), (1, 9), (1, 10), (2, 4), (2, 6), (2, 11), (2, 12), (2, 13), (2, 15), (2, 18), (2, 20), (3, 8), (3, 17), (3, 18), (4, 8), (4, 11), (4, 19), (5, 20), (6, 19), (7, 16), (7, 18), (8, 13), (9, 19), (10, 20), (11, 14), (11, 18), (12, 13), (12, 19), (17, 18), (17, 19), (18, 20)),
        (0, 1, 2),
        (3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13),
        'y4',
    ),
    't3_four_edge': (
        14,
        ((0, 3), (0, 4), (0, 5), (0, 6), (0, 10), (0, 11), (0, 13), (1, 6), (1, 7), (1, 8), (1, 9), (1, 10), (1, 13), (2, 8), (2, 10), (2, 11), (2, 12), (2, 13), (3, 6), (3, 7), (4, 8), (4, 9), (4, 11), (4, 12), (6, 11), (7, 10), (10, 12), (10, 13), (12, 13)),
        (0, 1, 2),
        (3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13),
        'y8',
    ),
    't3_partial_swap12': (
        17,
        ((0, 3), (0, 4), (0, 5), (0, 6), (0, 10), (0, 12), (0, 13), (1, 6), (1, 7), (1, 8), (1, 9), (1, 10), (1, 13), (1, 15), (1, 16), (2, 10), (2, 11), (2, 12), (2, 13), (3, 7), (4, 5), (5, 6), (5, 8), (5, 15), (7, 13), (8, 9), (9, 12), (10, 14), (10, 16), (11, 14), (14, 15)),
        (0, 1, 2),
        (3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13),
        'y8',
    ),
    't3_partial_swap23': (
        16,
        ((0, 3), (0, 4), (0, 5), (0, 6), (0, 7), (0, 8), (0, 9), (0, 12), (0, 15), (1, 3), (1, 6), (1, 7), (1, 8), (1, 9), (1, 10), (2, 5), (2, 10), (2, 11), (2, 12), (2, 13), (2, 14), (3, 11), (3, 13), (3, 15), (4, 6), (4, 9), (7, 10), (8, 12), (10, 15)),
        (0, 1, 2),
        (3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13),
        'y8',
    ),
}
