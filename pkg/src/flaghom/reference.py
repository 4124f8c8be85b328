"""Pinned reference values used by the regression suite and the tests.

These constants are mutually consistent by construction: the biword's
bottom line has column weight (3,2,5,2,0,1), matching the insertion-side
weight of all four pinned tableaux, and both pinned insertion traces come
from folding its last letter.  (Note the eighth bottom letter is 3; with a
4 there the weights could not match any of the tableaux.)
"""


def _tabloid_cells(label_rows):
    """Snake cell sets from a grid of snake indices, bottom row first."""
    nsnakes = max((max(row) for row in label_rows if row), default=0)
    snakes = [set() for _ in range(max(nsnakes, len(label_rows)))]
    for r, row in enumerate(label_rows, start=1):
        for c, label in enumerate(row, start=1):
            snakes[label - 1].add((c, r))
    return tuple(frozenset(s) for s in snakes)


# shape shared by the pinned fillings, the column-stack maps, and the
# staircase diagram
SHAPE_A = (1, 0, 3, 6, 1, 0, 2)

SSKT_FIG = ((1,), (), (3, 3, 2), (4, 4, 3, 3, 3, 1), (2,), (), (6, 1))
RSSAF_FIG = ((1,), (), (3, 3, 5), (4, 4, 4, 5, 5, 6), (5,), (), (7, 7))

BIWORD_TOP = (1, 3, 3, 4, 4, 4, 5, 5, 5, 5, 6, 7, 7)
BIWORD_BOTTOM = (1, 3, 2, 4, 3, 1, 4, 3, 3, 2, 1, 6, 3)

P_FIG = ((6, 4, 3, 3, 3, 1), (4, 3, 2), (3, 1), (2,), (1,))
Q_FIG = ((1, 3, 4, 5, 5, 6), (3, 4, 5), (4, 7), (5,), (7,))

# classical insertion of 3: start tableau and bump chain (column, row)
P_BEFORE = ((6, 4, 3, 3, 2, 1), (4, 3, 1), (3,), (2,), (1,))
P_CHAIN = [(5, 1), (3, 2), (2, 3)]

# flagged insertion of 3 with window 7: start filling and chain
SSKT_BEFORE = ((1,), (), (3, 3, 1), (4, 4, 3, 3, 2, 1), (2,), (), (6,))
SSKT_CHAIN = [(5, 4), (3, 3), (2, 7)]

# one-cell-per-column staircase diagram of SHAPE_A
DA_CELLS = frozenset(
    {(1, 1), (2, 3), (3, 3), (4, 3), (5, 4), (6, 4), (7, 4), (8, 4), (9, 4),
     (10, 4), (11, 5), (12, 7), (13, 7)}
)

# a diagram admitting exactly three moves, and the three results
KOHNERT_START = frozenset({(2, 4), (1, 3), (2, 3), (3, 3), (3, 2)})
KOHNERT_RESULTS = {
    frozenset({(1, 3), (2, 3), (3, 3), (2, 2), (3, 2)}),
    frozenset({(2, 4), (1, 3), (2, 3), (3, 2), (3, 1)}),
    frozenset({(2, 4), (1, 3), (2, 3), (3, 3), (3, 1)}),
}

# key poset comparisons
POSET_LEQ = ((0, 6, 0, 1, 2, 8, 4), (3, 7, 0, 2, 5, 8, 6))
POSET_NOT_LEQ = ((0, 6, 0, 1, 5, 8, 2), (3, 7, 0, 2, 5, 8, 6))

# snake machinery on shape (3,7,0,2,5,8,6)
SHAPE_B = (3, 7, 0, 2, 5, 8, 6)
SNAKE_CELLS = frozenset(
    {(5, 7), (6, 7), (3, 5), (4, 5), (5, 5), (2, 4), (7, 2), (1, 1), (2, 1), (3, 1)}
)

RIMHOOK_MU = (8, 7, 6, 5, 3, 2)
RIMHOOK_CELLS = frozenset(
    {(6, 5), (7, 5), (5, 4), (6, 4), (3, 3), (4, 3), (5, 3), (2, 2), (3, 2), (1, 1), (2, 1)}
)

# the two displayed tabloids of SHAPE_B with their weights and signs
TABLOID_A = _tabloid_cells(
    ((1, 1, 1), (2, 2, 2, 2, 2, 2, 1), (), (4, 1), (4, 2, 1, 1, 1),
     (6, 6, 6, 6, 4, 2, 2, 2), (4, 4, 4, 4, 1, 1))
)
TABLOID_A_WEIGHT = (10, 10, 0, 7, 0, 4, 0)
TABLOID_A_SIGN = -1
TABLOID_B = _tabloid_cells(
    ((1, 1, 1), (2, 2, 2, 2, 2, 1, 1), (), (4, 4), (5, 4, 1, 1, 1),
     (6, 4, 4, 4, 4, 4, 4, 4), (7, 7, 7, 4, 2, 2))
)
TABLOID_B_WEIGHT = (8, 7, 0, 11, 1, 1, 3)
TABLOID_B_SIGN = 1

# equal weight, opposite signs, shape (2,4,3)
CANCEL_SHAPE = (2, 4, 3)
CANCEL_LEFT = _tabloid_cells(((1, 1), (2, 2, 2, 1), (2, 1, 1)))
CANCEL_RIGHT = _tabloid_cells(((1, 1), (2, 1, 1, 1), (2, 2, 2)))

# sorted-equal but distinct weights, shape (1,1,2,2)
NONCANCEL_SHAPE = (1, 1, 2, 2)
NONCANCEL_LEFT = _tabloid_cells(((1,), (2,), (2, 2), (4, 4)))
NONCANCEL_RIGHT = _tabloid_cells(((1,), (1,), (3, 3), (4, 3)))

# a filling that is 1 on its snake and an SSKT off it, but not an SSKT
ALMOST_SSKT = ((1, 1, 1), (2, 2, 2, 2, 2, 1, 1), (), (1, 1), (4, 3, 1, 1, 1),
               (6, 5, 4, 4, 3, 2, 2, 2), (7, 7, 3, 1, 1, 1))
ALMOST_SNAKE = frozenset({(1, 1), (2, 1), (3, 1), (3, 5), (4, 5), (5, 5), (5, 7), (6, 7)})

# the displayed involution pair: the filling is fixed, the snake flips
INVOLUTION_T = ((1, 1, 1), (2, 2, 2, 1, 1, 1, 1), (), (1, 1), (4, 3, 1, 1, 1),
                (6, 5, 4, 4, 4, 4, 3, 1), (7, 7, 3, 3, 3, 2))
INVOLUTION_SMALL = frozenset({(1, 1), (2, 1), (3, 1), (3, 5), (4, 5), (5, 5)})
INVOLUTION_LARGE = INVOLUTION_SMALL | {(6, 2), (7, 2)}
INVOLUTION_X = (5, 5)

# weakly connected components illustration
CONNECTED_CELLS = frozenset(
    {(6, 7), (2, 5), (4, 5), (1, 4), (1, 3), (5, 3), (6, 3), (5, 2), (1, 1)}
)
CONNECTED_COMPONENTS = [
    {(1, 4), (1, 3), (1, 1)},
    {(2, 5)},
    {(6, 7), (4, 5), (5, 3), (6, 3), (5, 2)},
]
