"""Independent transcriptions of the displayed example matrices.

Written as text grids (``.`` = 0) straight from the source displays, without
reference to the package's own catalog, so the two can be compared.
"""

from fractions import Fraction


def grid(text: str, scale=1) -> list[list[Fraction]]:
    rows = []
    for line in text.strip().splitlines():
        rows.append([Fraction(0) if t == "." else Fraction(t) * Fraction(scale) for t in line.split()])
    n = len(rows)
    assert all(len(r) == n for r in rows), "ragged transcription"
    return rows


def perm_grid(images) -> list[list[int]]:
    n = len(images)
    return [[int(images[i] == j + 1) for j in range(n)] for i in range(n)]


SHIFT6 = """
. 1 . . . .
. . 1 . . .
. . . 1 . .
. . . . 1 .
. . . . . 1
1 . . . . .
"""
SHIFT6_SUM = """
. 1 . . . 1
1 . 1 . . .
. 1 . 1 . .
. . 1 . 1 .
. . . 1 . 1
1 . . . 1 .
"""
SHIFT6_PART1 = """
. 1 . . . .
1 . . . . .
. . . 1 . .
. . 1 . . .
. . . . . 1
. . . . 1 .
"""
SHIFT6_PART2 = """
. . . . . 1
. . 1 . . .
. 1 . . . .
. . . . 1 .
. . . 1 . .
1 . . . . .
"""

HANKEL3 = """
0 1 0
0 0 1
1 0 0
"""
HANKEL4 = """
0 1 0 0
1 0 0 0
0 0 0 1
0 0 1 0
"""
EXTRA4 = """
. 1 . .
. . . 1
1 . . .
. . 1 .
"""

THETA_IN = (2, 1, 6, 5, 4, 3, 8, 7)
THETA_OUT = """
-1 . . .
. -1 . .
. . . 1
. . 1 .
"""

DOUBLE = """
1 1 0 1 0 0 0 1
0 0 0 0 1 1 0 0
0 0 0 0 0 1 0 0
1 0 1 0 0 1 0 0
0 0 1 0 0 1 0 1
0 0 1 0 0 0 0 0
0 0 1 1 0 0 0 0
1 0 0 0 1 0 1 1
"""
DOUBLE_B = """
1 1 0 1
0 0 1 1
0 0 1 0
1 1 1 0
"""
# shaded cells of the final display, row by row
DOUBLE_SHADED = [(1, 2), (2, 5), (3, 6), (4, 1), (5, 8), (6, 3), (7, 4), (8, 7)]

CROSS = """
0 1 0
1 0 1
0 1 0
"""

CENT_A = ("""
3 1 0
1 2 1
0 1 3
""", Fraction(1, 4))
CENT_E1 = ("""
0 1 1
1 0 1
1 1 0
""", Fraction(1, 2))
CENT_E2 = ("""
1 1 0
1 0 1
0 1 1
""", Fraction(1, 2))

DIM4 = {
    1: "1 . . .\n. 1 . .\n. . 1 .\n. . . 1",
    2: ". 1 . .\n1 . . .\n. . . 1\n. . 1 .",
    3: ". . . 1\n. 1 . .\n. . 1 .\n1 . . .",
    4: "1 . . .\n. . 1 .\n. 1 . .\n. . . 1",
    5: ". . 1 .\n1 . . .\n. . . 1\n. 1 . .",
    6: ". 1 . .\n. . . 1\n1 . . .\n. . 1 .",
    7: ". . . 1\n. . 1 .\n. 1 . .\n1 . . .",
    8: ". . 1 .\n. . . 1\n1 . . .\n. 1 . .",
}

BASIS4 = [
    "1 . . .\n. 1 . .\n. . 1 .\n. . . 1",
    ". 1 . .\n1 . . .\n. . . 1\n. . 1 .",
    ". . 1 .\n1 . . .\n. . . 1\n. 1 . .",
    ". . . 1\n. 1 . .\n. . 1 .\n1 . . .",
    "1 . . .\n. . 1 .\n. 1 . .\n. . . 1",
    ". 1 . .\n. . . 1\n1 . . .\n. . 1 .",
]

ISO_Q = """
. 1 . . .
1 . . . .
. . . 1 .
. . . . 1
. . 1 . .
"""
ISO_A = ("""
. 1 1 . .
2 . . . .
. 1 . 1 .
. . . . 2
. . 1 1 .
""", Fraction(1, 2))
ISO_P = """
0 1 0
1 0 0
0 0 1
"""
ISO_BLOCK = ("""
1 1 0
1 0 1
0 1 1
""", Fraction(1, 2))
ISO_K = (1, 3, 5)
ISO_L = (2, 3, 4)

SH_A1 = """
. . . 1 .
. . . . 1
. . 1 . .
1 . . . .
. 1 . . .
"""
SH_A2 = ("""
. 1 . . . 1
1 . 1 . . .
. 1 . 1 . .
. . 1 . 1 .
. . . 1 . 1
1 . . . 1 .
""", Fraction(1, 2))

NE_P = (3, 2, 4, 6, 5, 7, 1, 8)
NE_QUARTER = ("""
2 . 1 . . . 1 .
. 2 1 . . . . 1
1 1 . 1 1 . . .
. . 1 2 . 1 . .
. . 1 . 2 1 . .
. . . 1 1 . 1 1
1 . . . . 1 2 .
. 1 . . . 1 . 2
""", Fraction(1, 4))
NE_R = ("""
2 . 1 . . . 1 .
. 2 1 . . . . 1
1 1 . 2 0 . . .
. . 2 2 . 0 . .
. . 0 . 2 2 . .
. . . 0 2 . 1 1
1 . . . . 1 2 .
. 1 . . . 1 . 2
""", Fraction(1, 4))
NE_R_PARTNER = ("""
2 . 1 . . . 1 .
. 2 1 . . . . 1
1 1 . 0 2 . . .
. . 0 2 . 2 . .
. . 2 . 2 0 . .
. . . 2 0 . 1 1
1 . . . . 1 2 .
. 1 . . . 1 . 2
""", Fraction(1, 4))

ODD11 = ("""
. 3 . . 1 . . . . . .
3 . 1 . . . . . . . .
. 1 . 3 . . . . . . .
. . 3 . 1 . . . . . .
1 . . 1 . 2 . . . . .
. . . . 2 . 2 . . . .
. . . . . 2 . 1 . . 1
. . . . . . 1 . 3 . .
. . . . . . . 3 . 1 .
. . . . . . . . 1 . 3
. . . . . . 1 . . 3 .
""", Fraction(1, 4))
# the seventh display row has eight cells; the ninth is padded with 0
ODD9 = ("""
. . . . . . 1 3 .
. . . . . . 1 . 3
. . . . . 2 . 1 1
. . . . 2 . 2 . .
. . . 2 . 2 . . .
. . 2 . 2 . . . .
1 1 . 2 . . . . .
3 . 1 . . . . . .
. 3 1 . . . . . .
""", Fraction(1, 4))
ODD7 = ("""
. 1 . . . . 1
1 . 1 . . . .
. 1 . 1 . . .
. . 1 . 1 . .
. . . 1 . 1 .
. . . . 1 . 1
1 . . . . 1 .
""", Fraction(1, 2))
