"""Published reference listings the census verifies the engines against.

Everything here is transcribed from the source tables this package set out
to reproduce, verbatim: the 16x16 sedenion multiplication grid, the 7-row
box-kite vertex table, the pathion triplet listing, the strut-3 harmonic
rosters and cross-harmonic sails, and the strut-11 partition rows.

Two entries are faithful transcriptions of known misprints and are expected
to be flagged by the census discrepancy checks rather than silently fixed:
``(13 16 19)`` in the pathion triplet listing (not XOR-closed) and
``(37, 47)`` in the cross-harmonic sail listing (its own roster says 46).
"""

from __future__ import annotations

# 16x16 signed-index grid; "-0" means minus the real unit.
SEDENION_TABLE = (
    "0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15",
    "1 -0 3 -2 5 -4 -7 6 9 -8 -11 10 -13 12 15 -14",
    "2 -3 -0 1 6 7 -4 -5 10 11 -8 -9 -14 -15 12 13",
    "3 2 -1 -0 7 -6 5 -4 11 -10 9 -8 -15 14 -13 12",
    "4 -5 -6 -7 -0 1 2 3 12 13 14 15 -8 -9 -10 -11",
    "5 4 -7 6 -1 -0 -3 2 13 -12 15 -14 9 -8 11 -10",
    "6 7 4 -5 -2 3 -0 -1 14 -15 -12 13 10 -11 -8 9",
    "7 -6 5 4 -3 -2 1 -0 15 14 -13 -12 11 10 -9 -8",
    "8 -9 -10 -11 -12 -13 -14 -15 -0 1 2 3 4 5 6 7",
    "9 8 -11 10 -13 12 15 -14 -1 -0 -3 2 -5 4 7 -6",
    "10 11 8 -9 -14 -15 12 13 -2 3 -0 -1 -6 -7 4 5",
    "11 -10 9 8 -15 14 -13 12 -3 -2 1 -0 -7 6 -5 4",
    "12 13 14 15 8 -9 -10 -11 -4 5 6 7 -0 -1 -2 -3",
    "13 -12 15 -14 9 8 11 -10 -5 -4 7 -6 1 -0 3 -2",
    "14 -15 -12 13 10 -11 8 9 -6 -7 -4 5 2 -3 -0 1",
    "15 14 -13 -12 11 10 -9 8 -7 6 -5 -4 3 2 -1 -0",
)


def parse_signed(cell: str) -> tuple[int, int]:
    """Parse a "-0"-convention signed index into (sign, index)."""
    cell = cell.strip()
    if cell.startswith("-"):
        return (-1, int(cell[1:]))
    return (1, int(cell))


def sedenion_table_cells() -> tuple[tuple[tuple[int, int], ...], ...]:
    """The reference grid as (sign, index) cells."""
    return tuple(
        tuple(parse_signed(cell) for cell in row.split()) for row in SEDENION_TABLE
    )


# Strut constant -> assessor index pairs at vertices A, B, C, D, E, F.
BOX_KITE_TABLE = {
    1: ((3, 10), (6, 15), (5, 12), (4, 13), (7, 14), (2, 11)),
    2: ((1, 11), (7, 13), (6, 12), (4, 14), (5, 15), (3, 9)),
    3: ((2, 9), (5, 14), (7, 12), (4, 15), (6, 13), (1, 10)),
    4: ((1, 13), (2, 14), (3, 15), (7, 11), (6, 10), (5, 9)),
    5: ((2, 15), (4, 9), (6, 11), (3, 14), (1, 12), (7, 10)),
    6: ((3, 13), (4, 10), (7, 9), (1, 15), (2, 12), (5, 11)),
    7: ((1, 14), (4, 11), (5, 10), (2, 13), (3, 12), (6, 9)),
}


OCTONION_TRIPLETS = "(1 2 3) (1 4 5) (1 7 6) (2 4 6) (2 5 7) (3 4 7) (3 6 5)"

SEDENION_TRIPLETS = """
(1 8 9) (1 11 10) (1 13 12) (1 14 15)
(2 8 10) (2 9 11) (2 14 12) (2 15 13) (3 8 11) (3 10 9) (3 13 14) (3 15 12)
(4 8 12) (4 9 13) (4 10 14) (4 11 15) (5 8 13) (5 10 15) (5 12 9) (5 14 11)
(6 8 14) (6 11 13) (6 12 10) (6 15 9) (7 8 15) (7 9 14) (7 12 11) (7 13 10)
"""

PATHION_TRIPLETS = """
(1 16 17) (1 19 18) (1 21 20) (1 22 23) (1 25 24) (1 26 27) (1 28 29) (1 31 30)
(2 16 18) (2 17 19) (2 22 20) (2 23 21) (2 26 24) (2 27 25) (2 28 30) (2 29 31)
(3 16 19) (3 18 17) (3 21 22) (3 23 20) (3 25 26) (3 27 24) (3 28 31) (3 30 29)
(4 16 20) (4 17 21) (4 18 22) (4 19 23) (4 28 24) (4 29 25) (4 30 26) (4 31 27)
(5 16 21) (5 18 23) (5 20 17) (5 22 19) (5 25 28) (5 27 30) (5 29 24) (5 31 26)
(6 16 22) (6 19 21) (6 20 18) (6 23 17) (6 25 31) (6 26 28) (6 29 27) (6 30 24)
(7 16 23) (7 17 22) (7 20 19) (7 21 18) (7 26 29) (7 27 28) (7 30 25) (7 31 24)
(8 16 24) (8 17 25) (8 18 26) (8 19 27) (8 20 28) (8 21 29) (8 22 30) (8 23 31)
(9 16 25) (9 18 27) (9 20 29) (9 23 30) (9 24 17) (9 26 19) (9 28 21) (9 31 22)
(10 16 26) (10 19 25) (10 20 30) (10 21 31) (10 24 18) (10 27 17) (10 28 22) (10 29 23)
(11 16 27) (11 17 26) (11 20 31) (11 22 29) (11 24 19) (11 25 18) (11 28 23) (11 30 21)
(12 16 28) (12 21 25) (12 22 26) (12 23 27) (12 24 20) (12 29 17) (12 30 18) (12 31 19)
(13 16 19) (13 17 28) (13 19 30) (13 23 26) (13 24 21) (13 25 20) (13 27 22) (13 31 18)
(14 16 30) (14 17 31) (14 18 28) (14 21 27) (14 24 22) (14 25 23) (14 26 20) (14 29 19)
(15 16 31) (15 18 29) (15 19 28) (15 22 25) (15 24 23) (15 26 21) (15 27 20) (15 30 17)
"""


def parse_triplet_listing(text: str) -> tuple[tuple[int, int, int], ...]:
    out = []
    for chunk in text.replace("(", " ").split(")"):
        parts = chunk.split()
        if parts:
            a, b, c = (int(p) for p in parts)
            out.append((a, b, c))
    return tuple(out)


def pathion_triplet_listing() -> tuple[tuple[int, int, int], ...]:
    """The full printed 155-entry listing (octonion + sedenion + pathion rows)."""
    return (
        parse_triplet_listing(OCTONION_TRIPLETS)
        + parse_triplet_listing(SEDENION_TRIPLETS)
        + parse_triplet_listing(PATHION_TRIPLETS)
    )


# Strut-3 box-kite harmonics, printed as strut-opposite pairs
# (A, F), (B, E), (C, D) shifted by 16k.
STRUT3_HARMONIC_ROWS = {
    1: ((18, 25), (17, 26), (21, 30), (22, 29), (23, 28), (20, 31)),
    2: ((34, 41), (33, 42), (37, 46), (38, 45), (39, 44), (36, 47)),
    3: ((50, 57), (49, 58), (53, 62), (54, 61), (55, 60), (52, 63)),
}

# The four printed cross-harmonic sails anchored on (17, 26): each pairs the
# anchor with one second-harmonic and one third-harmonic assessor.
# (37, 47) is the transcription of a misprint; the roster above has (37, 46).
CROSS_SAILS_17_26 = (
    ((36, 47), (53, 62)),
    ((37, 47), (52, 63)),
    ((38, 45), (55, 60)),
    ((39, 44), (54, 61)),
)

# The strut-11 sky-high partitioned into 3 box-kites (vertices A .. F).
PARTITION_STRUT_11 = (
    ((1, 26), (8, 19), (9, 18), (2, 25), (3, 24), (10, 17)),
    ((4, 31), (8, 19), (12, 23), (7, 28), (3, 24), (15, 20)),
    ((6, 29), (8, 19), (14, 21), (5, 30), (3, 24), (13, 22)),
)

# Hand-checkable row of the strut-1 emanation table: row lo=2, columns in
# heading order, as (sign, emanated lo) or None on the void diagonals.
# (One glyph of the printed row is unreadable; the value 13 below is the
# recomputed content, forced anyway by lo XOR law 2^15 = 13.)
STRUT1_ROW_LO2 = (
    None,
    ("-", 6), ("+", 4), ("-", 10), ("+", 8), ("-", 14), ("+", 12),
    ("-", 13), ("+", 15), ("-", 9), ("+", 11), ("-", 5), ("+", 7),
    None,
)
