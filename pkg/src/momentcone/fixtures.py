"""Reference data for the Kronecker cones of three ququarts and smaller cases.

Vectors are stored as strings of integers or fractions ``p/q``.
"""

EDGE_COUNTS = {
    (2, 2): (2, 2, 3, 2),
    (3, 3): (42, 36, 17, 10),
    (4, 4): (24024, 6660, 457, 233),
}
"""(a, b) -> (tableaux, cubicles, extremal edges, edges up to permutations)."""

STAGE_NAMES = ("E+", "E+adm", "E", "inequalities", "facets", "rays")

STAGE_COUNTS = {
    (2, 2, 2): ((7, 3), (11, 5), (9, 3), (9, 3), (6, 2), (5, 3)),
    (3, 3, 3): ((51, 17), (67, 25), (192, 41), (114, 25), (45, 10), (33, 11)),
    (4, 4, 4): ((3027, 600), (2231, 484), (32406, 5633), (1749, 323), (270, 50), (328, 65)),
}

# Extreme rays of C(4,4,4) up to subsystem permutations: (V_A, V_B, V_C).
REFERENCE_RAYS_444 = [
    (("1/4", "1/4", "1/4", "1/4"), ("1/4", "1/4", "1/4", "1/4"), ("1/4", "1/4", "1/4", "1/4")),
    (("1/4", "1/4", "1/4", "1/4"), ("1/4", "1/4", "1/4", "1/4"), ("1/3", "1/3", "1/3", "0")),
    (("1/4", "1/4", "1/4", "1/4"), ("1/4", "1/4", "1/4", "1/4"), ("1/2", "1/2", "0", "0")),
    (("1/4", "1/4", "1/4", "1/4"), ("1/4", "1/4", "1/4", "1/4"), ("1", "0", "0", "0")),
    (("1/4", "1/4", "1/4", "1/4"), ("1/3", "1/3", "1/3", "0"), ("1/3", "1/3", "1/3", "0")),
    (("1/4", "1/4", "1/4", "1/4"), ("1/3", "1/3", "1/3", "0"), ("1/2", "1/2", "0", "0")),
    (("1/4", "1/4", "1/4", "1/4"), ("1/3", "1/3", "1/3", "0"), ("2/3", "1/6", "1/6", "0")),
    (("1/4", "1/4", "1/4", "1/4"), ("1/3", "1/3", "1/3", "0"), ("2/3", "1/4", "1/12", "0")),
    (("1/4", "1/4", "1/4", "1/4"), ("1/3", "1/3", "1/3", "0"), ("3/4", "1/12", "1/12", "1/12")),
    (("1/4", "1/4", "1/4", "1/4"), ("3/8", "3/8", "1/4", "0"), ("5/8", "3/8", "0", "0")),
    (("1/4", "1/4", "1/4", "1/4"), ("3/8", "3/8", "1/4", "0"), ("3/4", "1/8", "1/8", "0")),
    (("1/4", "1/4", "1/4", "1/4"), ("2/5", "3/10", "3/10", "0"), ("7/10", "3/20", "3/20", "0")),
    (("1/4", "1/4", "1/4", "1/4"), ("5/12", "5/12", "1/6", "0"), ("2/3", "1/6", "1/12", "1/12")),
    (("1/4", "1/4", "1/4", "1/4"), ("1/2", "1/6", "1/6", "1/6"), ("1/2", "1/2", "0", "0")),
    (("1/4", "1/4", "1/4", "1/4"), ("1/2", "1/4", "1/8", "1/8"), ("5/8", "3/8", "0", "0")),
    (("1/4", "1/4", "1/4", "1/4"), ("1/2", "1/4", "1/4", "0"), ("1/2", "1/2", "0", "0")),
    (("1/4", "1/4", "1/4", "1/4"), ("1/2", "1/4", "1/4", "0"), ("2/3", "1/6", "1/6", "0")),
    (("1/4", "1/4", "1/4", "1/4"), ("1/2", "1/4", "1/4", "0"), ("3/4", "1/4", "0", "0")),
    (("1/4", "1/4", "1/4", "1/4"), ("1/2", "3/8", "1/8", "0"), ("5/8", "1/8", "1/8", "1/8")),
    (("1/4", "1/4", "1/4", "1/4"), ("1/2", "1/2", "0", "0"), ("1/2", "1/2", "0", "0")),
    (("2/7", "2/7", "2/7", "1/7"), ("4/7", "1/7", "1/7", "1/7"), ("4/7", "3/7", "0", "0")),
    (("7/24", "7/24", "5/24", "5/24"), ("1/3", "1/3", "1/3", "0"), ("3/4", "1/8", "1/8", "0")),
    (("3/10", "3/10", "1/5", "1/5"), ("2/5", "3/10", "3/10", "0"), ("4/5", "1/10", "1/10", "0")),
    (("3/10", "3/10", "3/10", "1/10"), ("1/2", "1/2", "0", "0"), ("11/20", "3/20", "3/20", "3/20")),
    (("3/10", "3/10", "3/10", "1/10"), ("1/2", "1/2", "0", "0"), ("3/5", "1/5", "1/10", "1/10")),
    (("1/3", "2/9", "2/9", "2/9"), ("1/3", "1/3", "1/3", "0"), ("2/3", "1/3", "0", "0")),
    (("1/3", "2/9", "2/9", "2/9"), ("1/3", "1/3", "1/3", "0"), ("7/9", "1/9", "1/9", "0")),
    (("1/3", "2/9", "2/9", "2/9"), ("4/9", "4/9", "1/9", "0"), ("2/3", "1/9", "1/9", "1/9")),
    (("1/3", "1/3", "1/6", "1/6"), ("1/3", "1/3", "1/3", "0"), ("7/9", "1/9", "1/9", "0")),
    (("1/3", "1/3", "1/6", "1/6"), ("1/3", "1/3", "1/3", "0"), ("5/6", "1/6", "0", "0")),
    (("1/3", "1/3", "1/6", "1/6"), ("1/2", "1/4", "1/4", "0"), ("3/4", "1/12", "1/12", "1/12")),
    (("1/3", "1/3", "1/6", "1/6"), ("2/3", "1/6", "1/6", "0"), ("2/3", "1/6", "1/6", "0")),
    (("1/3", "1/3", "1/3", "0"), ("1/3", "1/3", "1/3", "0"), ("1/3", "1/3", "1/3", "0")),
    (("1/3", "1/3", "1/3", "0"), ("1/3", "1/3", "1/3", "0"), ("1/2", "1/2", "0", "0")),
    (("1/3", "1/3", "1/3", "0"), ("1/3", "1/3", "1/3", "0"), ("1", "0", "0", "0")),
    (("1/3", "1/3", "1/3", "0"), ("2/5", "1/5", "1/5", "1/5"), ("11/15", "2/15", "1/15", "1/15")),
    (("1/3", "1/3", "1/3", "0"), ("5/12", "1/4", "1/6", "1/6"), ("3/4", "1/12", "1/12", "1/12")),
    (("1/3", "1/3", "1/3", "0"), ("5/12", "5/12", "1/12", "1/12"), ("3/4", "1/12", "1/12", "1/12")),
    (("1/3", "1/3", "1/3", "0"), ("4/9", "1/3", "1/9", "1/9"), ("7/9", "1/9", "1/9", "0")),
    (("1/3", "1/3", "1/3", "0"), ("1/2", "1/6", "1/6", "1/6"), ("1/2", "1/2", "0", "0")),
    (("1/3", "1/3", "1/3", "0"), ("1/2", "1/6", "1/6", "1/6"), ("2/3", "1/9", "1/9", "1/9")),
    (("1/3", "1/3", "1/3", "0"), ("1/2", "1/6", "1/6", "1/6"), ("2/3", "1/3", "0", "0")),
    (("1/3", "1/3", "1/3", "0"), ("1/2", "1/2", "0", "0"), ("1/2", "1/2", "0", "0")),
    (("1/3", "1/3", "1/3", "0"), ("1/2", "1/2", "0", "0"), ("7/12", "1/4", "1/12", "1/12")),
    (("1/3", "1/3", "1/3", "0"), ("1/2", "1/2", "0", "0"), ("2/3", "1/6", "1/6", "0")),
    (("1/3", "1/3", "1/3", "0"), ("5/9", "2/9", "1/9", "1/9"), ("2/3", "1/9", "1/9", "1/9")),
    (("1/3", "1/3", "1/3", "0"), ("2/3", "1/3", "0", "0"), ("2/3", "1/3", "0", "0")),
    (("5/14", "5/14", "1/7", "1/7"), ("3/7", "2/7", "2/7", "0"), ("11/14", "1/14", "1/14", "1/14")),
    (("4/11", "4/11", "3/11", "0"), ("5/11", "2/11", "2/11", "2/11"), ("8/11", "1/11", "1/11", "1/11")),
    (("3/8", "1/4", "1/4", "1/8"), ("1/2", "1/2", "0", "0"), ("5/8", "1/8", "1/8", "1/8")),
    (("3/8", "3/8", "1/4", "0"), ("5/8", "1/8", "1/8", "1/8"), ("5/8", "1/8", "1/8", "1/8")),
    (("2/5", "1/5", "1/5", "1/5"), ("2/5", "2/5", "1/5", "0"), ("4/5", "1/5", "0", "0")),
    (("2/5", "1/5", "1/5", "1/5"), ("1/2", "1/2", "0", "0"), ("3/5", "1/5", "1/10", "1/10")),
    (("2/5", "3/10", "3/10", "0"), ("2/5", "2/5", "1/10", "1/10"), ("4/5", "1/10", "1/10", "0")),
    (("2/5", "2/5", "1/10", "1/10"), ("3/5", "1/5", "1/5", "0"), ("7/10", "1/10", "1/10", "1/10")),
    (("5/12", "5/12", "1/12", "1/12"), ("1/2", "1/4", "1/4", "0"), ("3/4", "1/12", "1/12", "1/12")),
    (("3/7", "3/7", "1/7", "0"), ("4/7", "1/7", "1/7", "1/7"), ("5/7", "1/7", "1/7", "0")),
    (("1/2", "1/6", "1/6", "1/6"), ("1/2", "1/2", "0", "0"), ("2/3", "1/6", "1/6", "0")),
    (("1/2", "1/4", "1/4", "0"), ("1/2", "1/2", "0", "0"), ("5/8", "1/8", "1/8", "1/8")),
    (("1/2", "1/4", "1/4", "0"), ("1/2", "1/2", "0", "0"), ("3/4", "1/4", "0", "0")),
    (("1/2", "1/2", "0", "0"), ("1/2", "1/2", "0", "0"), ("1/2", "1/2", "0", "0")),
    (("1/2", "1/2", "0", "0"), ("1/2", "1/2", "0", "0"), ("1", "0", "0", "0")),
    (("1/2", "1/2", "0", "0"), ("5/8", "1/8", "1/8", "1/8"), ("5/8", "1/8", "1/8", "1/8")),
    (("1/2", "1/2", "0", "0"), ("2/3", "1/6", "1/6", "0"), ("2/3", "1/6", "1/6", "0")),
    (("1", "0", "0", "0"), ("1", "0", "0", "0"), ("1", "0", "0", "0")),
]

# Facet normals of C(4,4,4) up to subsystem permutations: (H_A, H_B, H_C, z, markers).
REFERENCE_FACETS_444 = [
    ((-5, -1, 3, 3), (-5, 3, 3, -1), (5, 1, -3, -3), 5, ("highest",)),
    ((-5, -1, 3, 3), (1, -3, -3, 5), (3, 3, -1, -5), 5, ()),
    ((-5, 3, -1, 3), (-5, 3, -1, 3), (5, 1, -3, -3), 5, ("highest",)),
    ((-5, 3, -1, 3), (-5, 3, 3, -1), (5, -3, 1, -3), 5, ("highest",)),
    ((-5, 3, -1, 3), (-3, 1, -3, 5), (3, 3, -1, -5), 5, ("highest",)),
    ((-5, 3, -1, 3), (-3, 5, 1, -3), (3, -5, 3, -1), 5, ("highest",)),
    ((-5, 3, -1, 3), (1, -3, -3, 5), (3, -1, 3, -5), 5, ()),
    ((-5, 3, -1, 3), (1, -3, 5, -3), (3, -1, -5, 3), 5, ()),
    ((-5, 3, 3, -1), (-5, 3, 3, -1), (5, -3, -3, 1), 5, ("highest",)),
    ((-5, 3, 3, -1), (-3, -3, 1, 5), (3, 3, -1, -5), 5, ("highest",)),
    ((-5, 3, 3, -1), (-3, -3, 5, 1), (3, 3, -5, -1), 5, ("highest",)),
    ((-5, 3, 3, -1), (-3, 1, -3, 5), (3, -1, 3, -5), 5, ("highest",)),
    ((-5, 3, 3, -1), (-3, 1, 5, -3), (3, -1, -5, 3), 5, ("highest",)),
    ((-5, 3, 3, -1), (-3, 5, -3, 1), (3, -5, 3, -1), 5, ("highest",)),
    ((-5, 3, 3, -1), (-3, 5, 1, -3), (3, -5, -1, 3), 5, ("highest",)),
    ((-5, 3, 3, -1), (-1, -5, 3, 3), (1, 5, -3, -3), 5, ("highest",)),
    ((-5, 3, 3, -1), (-1, 3, -5, 3), (1, -3, 5, -3), 5, ("highest",)),
    ((-5, 3, 3, -1), (-1, 3, 3, -5), (1, -3, -3, 5), 5, ("highest",)),
    ((-3, -1, 3, 1), (-3, 3, 1, -1), (3, 1, -1, -3), 3, ("highest",)),
    ((-3, -1, 3, 1), (1, -1, -3, 3), (3, 1, -1, -3), 3, ()),
    ((-3, 1, 1, 1), (-3, 1, 1, 1), (3, -1, -1, -1), 3, ("highest",)),
    ((-3, 1, 1, 1), (-2, -2, 2, 2), (2, 2, -2, -2), 3, ("highest",)),
    ((-3, 1, 1, 1), (-2, 2, -2, 2), (2, -2, 2, -2), 3, ("highest",)),
    ((-3, 1, 1, 1), (-2, 2, 2, -2), (2, -2, -2, 2), 3, ("highest",)),
    ((-3, 1, 1, 1), (-1, -1, -1, 3), (1, 1, 1, -3), 3, ("highest",)),
    ((-3, 1, 1, 1), (-1, -1, 3, -1), (1, 1, -3, 1), 3, ("highest",)),
    ((-3, 1, 1, 1), (-1, 3, -1, -1), (1, -3, 1, 1), 3, ("highest",)),
    ((-3, 3, 1, -1), (-3, 3, 1, -1), (3, -1, -3, 1), 3, ("highest",)),
    ((-3, 3, 1, -1), (-1, -3, 1, 3), (3, 1, -1, -3), 3, ()),
    ((-3, 3, 1, -1), (-1, -3, 3, 1), (1, 3, -1, -3), 3, ("highest",)),
    ((-3, 3, 1, -1), (-1, -3, 3, 1), (3, 1, -3, -1), 3, ()),
    ((-3, 3, 1, -1), (-1, 3, 1, -3), (1, -1, -3, 3), 3, ("highest",)),
    ((-2, -2, 2, 2), (-2, 2, 2, -2), (1, 1, -3, 1), 3, ("highest",)),
    ((-2, 2, -2, 2), (-2, 2, 2, -2), (1, -3, 1, 1), 3, ("highest",)),
    ((-1, -1, -1, 3), (0, 0, 0, 0), (0, 0, 0, 0), 1, ("highest",)),
    ((-1, 0, 0, 1), (-1, 1, 0, 0), (1, 0, 0, -1), 1, ("highest",)),
    ((-1, 0, 0, 1), (0, 0, -1, 1), (1, 0, 0, -1), 1, ()),
    ((-1, 0, 1, 0), (-1, 0, 1, 0), (1, 0, 0, -1), 1, ("highest",)),
    ((-1, 0, 1, 0), (-1, 1, 0, 0), (1, 0, -1, 0), 1, ("highest",)),
    ((-1, 0, 1, 0), (0, -1, 0, 1), (1, 0, 0, -1), 1, ()),
    ((-1, 0, 1, 0), (0, -1, 1, 0), (0, 1, 0, -1), 1, ("highest",)),
    ((-1, 0, 1, 0), (0, -1, 1, 0), (1, 0, -1, 0), 1, ()),
    ((-1, 0, 1, 0), (0, 0, -1, 1), (0, 1, 0, -1), 1, ("highest",)),
    ((-1, 1, 0, 0), (-1, 1, 0, 0), (1, -1, 0, 0), 1, ("highest",)),
    ((-1, 1, 0, 0), (0, -1, 0, 1), (0, 1, 0, -1), 1, ("highest",)),
    ((-1, 1, 0, 0), (0, -1, 1, 0), (0, 1, -1, 0), 1, ("highest",)),
    ((-1, 1, 0, 0), (0, 0, -1, 1), (0, 0, 1, -1), 1, ("highest",)),
    ((0, 0, 0, 0), (0, 0, 0, 0), (0, 0, 1, -1), 0, ("origin", "highest")),
    ((0, 0, 0, 0), (0, 0, 0, 0), (0, 1, -1, 0), 0, ("origin", "highest")),
    ((0, 0, 0, 0), (0, 0, 0, 0), (1, -1, 0, 0), 0, ("origin",)),
]
