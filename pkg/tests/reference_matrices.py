"""Printed resistance matrices of the two worked 6- and 9-vertex examples."""

from fractions import Fraction

FIGURE2_ROWS = [
    "0 8/15 11/15 3/5 11/15 8/15",
    "8/15 0 3/5 11/15 11/15 8/15",
    "11/15 3/5 0 8/15 8/15 11/15",
    "3/5 11/15 8/15 0 8/15 11/15",
    "11/15 11/15 8/15 8/15 0 3/5",
    "8/15 8/15 11/15 11/15 3/5 0",
]

FIGURE3_ROWS = [
    "0 41/90 3/5 41/90 19/45 19/45 17/30 28/45 28/45",
    "41/90 0 41/90 5/9 41/90 17/30 5/9 41/90 17/30",
    "3/5 41/90 0 41/90 28/45 28/45 17/30 19/45 19/45",
    "41/90 5/9 41/90 0 17/30 41/90 5/9 17/30 41/90",
    "19/45 41/90 28/45 17/30 0 19/45 41/90 3/5 28/45",
    "19/45 17/30 28/45 41/90 19/45 0 41/90 28/45 3/5",
    "17/30 5/9 17/30 5/9 41/90 41/90 0 41/90 41/90",
    "28/45 41/90 19/45 17/30 3/5 28/45 41/90 0 19/45",
    "28/45 17/30 19/45 41/90 28/45 3/5 41/90 19/45 0",
]


def rows(text_rows):
    return [[Fraction(x) for x in r.split()] for r in text_rows]


FIGURE2 = rows(FIGURE2_ROWS)
FIGURE3 = rows(FIGURE3_ROWS)
