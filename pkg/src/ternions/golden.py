"""Reference data for the order-eight ternion ring, typed in by hand.

All values are in the 0..7 labelling.  Nothing here is computed: the
verifier compares the library's output against these literals.
"""

# label -> (a, b, c) of the matrix [[a, b], [0, c]]
LABELS = {
    0: (0, 0, 0),
    1: (1, 0, 1),
    2: (1, 1, 1),
    3: (1, 1, 0),
    4: (0, 0, 1),
    5: (1, 0, 0),
    6: (0, 1, 0),
    7: (0, 1, 1),
}

# addition table, row + column
ADDITION = [
    [0, 1, 2, 3, 4, 5, 6, 7],
    [1, 0, 6, 7, 5, 4, 2, 3],
    [2, 6, 0, 4, 3, 7, 1, 5],
    [3, 7, 4, 0, 2, 6, 5, 1],
    [4, 5, 3, 2, 0, 1, 7, 6],
    [5, 4, 7, 6, 1, 0, 3, 2],
    [6, 2, 1, 5, 7, 3, 0, 4],
    [7, 3, 5, 1, 6, 2, 4, 0],
]

# multiplication table, row x column
MULTIPLICATION = [
    [0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 2, 3, 4, 5, 6, 7],
    [0, 2, 1, 3, 7, 5, 6, 4],
    [0, 3, 5, 3, 6, 5, 6, 0],
    [0, 4, 4, 0, 4, 0, 0, 4],
    [0, 5, 3, 3, 0, 5, 6, 6],
    [0, 6, 6, 0, 6, 0, 0, 6],
    [0, 7, 7, 0, 7, 0, 0, 7],
]

I1 = {0, 4, 6, 7}
I2 = {0, 3, 5, 6}
J = {0, 6}
UNITS = {1, 2}
NILPOTENTS = {0, 6}
# nontrivial idempotents (0 and 1 excluded)
IDEMPOTENTS = {3, 4, 5, 7}

# the free left cyclic submodules generated by non-unimodular triples:
# (generator pair, element set)
SUBMODULES = [
    (((4, 6, 7), (7, 6, 4)),
     {(0, 0, 0), (4, 6, 7), (7, 6, 4), (6, 6, 0), (4, 0, 4), (0, 6, 6), (6, 0, 6), (7, 0, 7)}),
    (((4, 7, 6), (7, 4, 6)),
     {(0, 0, 0), (4, 7, 6), (7, 4, 6), (6, 0, 6), (4, 4, 0), (0, 6, 6), (6, 6, 0), (7, 7, 0)}),
    (((6, 4, 7), (6, 7, 4)),
     {(0, 0, 0), (6, 4, 7), (6, 7, 4), (6, 6, 0), (0, 4, 4), (6, 0, 6), (0, 6, 6), (0, 7, 7)}),
    (((4, 4, 7), (7, 7, 4)),
     {(0, 0, 0), (4, 4, 7), (7, 7, 4), (6, 6, 0), (4, 4, 4), (0, 0, 6), (6, 6, 6), (7, 7, 7)}),
    (((4, 7, 4), (7, 4, 7)),
     {(0, 0, 0), (4, 7, 4), (7, 4, 7), (6, 0, 6), (4, 4, 4), (0, 6, 0), (6, 6, 6), (7, 7, 7)}),
    (((7, 4, 4), (4, 7, 7)),
     {(0, 0, 0), (7, 4, 4), (4, 7, 7), (0, 6, 6), (4, 4, 4), (6, 0, 0), (6, 6, 6), (7, 7, 7)}),
    (((4, 4, 6), (7, 7, 6)),
     {(0, 0, 0), (4, 4, 6), (7, 7, 6), (6, 6, 6), (4, 4, 0), (0, 0, 6), (6, 6, 0), (7, 7, 0)}),
    (((4, 6, 4), (7, 6, 7)),
     {(0, 0, 0), (4, 6, 4), (7, 6, 7), (6, 6, 6), (4, 0, 4), (0, 6, 0), (6, 0, 6), (7, 0, 7)}),
    (((6, 4, 4), (6, 7, 7)),
     {(0, 0, 0), (6, 4, 4), (6, 7, 7), (6, 6, 6), (0, 4, 4), (6, 0, 0), (0, 6, 6), (0, 7, 7)}),
    (((6, 6, 7), (6, 6, 4)),
     {(0, 0, 0), (6, 6, 7), (6, 6, 4), (6, 6, 0), (0, 0, 4), (6, 6, 6), (0, 0, 6), (0, 0, 7)}),
    (((6, 7, 6), (6, 4, 6)),
     {(0, 0, 0), (6, 7, 6), (6, 4, 6), (6, 0, 6), (0, 4, 0), (6, 6, 6), (0, 6, 0), (0, 7, 0)}),
    (((7, 6, 6), (4, 6, 6)),
     {(0, 0, 0), (7, 6, 6), (4, 6, 6), (0, 6, 6), (4, 0, 0), (6, 6, 6), (6, 0, 0), (7, 0, 0)}),
    (((0, 6, 7), (0, 6, 4)),
     {(0, 0, 0), (0, 6, 7), (0, 6, 4), (0, 6, 0), (0, 0, 4), (0, 6, 6), (0, 0, 6), (0, 0, 7)}),
    (((0, 7, 6), (0, 4, 6)),
     {(0, 0, 0), (0, 7, 6), (0, 4, 6), (0, 0, 6), (0, 4, 0), (0, 6, 6), (0, 6, 0), (0, 7, 0)}),
    (((0, 4, 7), (0, 7, 4)),
     {(0, 0, 0), (0, 4, 7), (0, 7, 4), (0, 6, 0), (0, 4, 4), (0, 0, 6), (0, 6, 6), (0, 7, 7)}),
    (((6, 0, 7), (6, 0, 4)),
     {(0, 0, 0), (6, 0, 7), (6, 0, 4), (6, 0, 0), (0, 0, 4), (6, 0, 6), (0, 0, 6), (0, 0, 7)}),
    (((7, 0, 6), (4, 0, 6)),
     {(0, 0, 0), (7, 0, 6), (4, 0, 6), (0, 0, 6), (4, 0, 0), (6, 0, 6), (6, 0, 0), (7, 0, 0)}),
    (((4, 0, 7), (7, 0, 4)),
     {(0, 0, 0), (4, 0, 7), (7, 0, 4), (6, 0, 0), (4, 0, 4), (0, 0, 6), (6, 0, 6), (7, 0, 7)}),
    (((6, 7, 0), (6, 4, 0)),
     {(0, 0, 0), (6, 7, 0), (6, 4, 0), (6, 0, 0), (0, 4, 0), (6, 6, 0), (0, 6, 0), (0, 7, 0)}),
    (((7, 6, 0), (4, 6, 0)),
     {(0, 0, 0), (7, 6, 0), (4, 6, 0), (0, 6, 0), (4, 0, 0), (6, 6, 0), (6, 0, 0), (7, 0, 0)}),
    (((4, 7, 0), (7, 4, 0)),
     {(0, 0, 0), (4, 7, 0), (7, 4, 0), (6, 0, 0), (4, 4, 0), (0, 6, 0), (6, 6, 0), (7, 7, 0)}),
]

SUBMODULE_COUNT = 21
GENERATOR_COUNT = 42
I1_TRIPLE_COUNT = 64

# triples lying on nine submodules (the Fano points)
DEGREE_NINE = {
    (6, 0, 0), (0, 6, 0), (0, 0, 6), (6, 6, 0), (6, 0, 6), (0, 6, 6), (6, 6, 6),
}
# triples lying on three submodules
DEGREE_THREE = {
    (4, 0, 0), (0, 4, 0), (0, 0, 4), (4, 4, 0), (4, 0, 4), (0, 4, 4), (4, 4, 4),
    (7, 0, 0), (0, 7, 0), (0, 0, 7), (7, 7, 0), (7, 0, 7), (0, 7, 7), (7, 7, 7),
}
# remaining triples each lie on a single submodule
DEGREE_ONE_COUNT = 42

# the Fano plane: seven points, seven lines, each line carried by three submodules
FANO_POINTS = 7
FANO_LINES = 7
FANO_LINE_MULTIPLICITY = 3
FANO_ORDER = 2
