"""Published avoider-count data the classifier reproduces and tests against.

Each table row lists the members printed for that equivalence class (a
class may have further members related by the count-preserving symmetries)
and the counts for n = 1..8.  Named entries carry a catalogued sequence id; rows without a legible
catalogue id carry none.
"""

KNOWN_SEQUENCES = {
    "A000108": (1, 2, 5, 14, 42, 132, 429, 1430),
    "A000027": (1, 2, 3, 4, 5, 6, 7, 8),
    "A000045": (1, 2, 3, 5, 8, 13, 21, 34),
    "A000984": (1, 2, 6, 20, 70, 252, 924, 3432),
    "A049124": (1, 2, 6, 20, 71, 264, 1015, 4002),
}

# family tag -> list of (class members, counts n=1..8, sequence id or None)
TABLE_ROWS = {
    "size3-connected": [
        (["pop 3: c[1>2>3]"], (1, 2, 5, 14, 42, 132, 429, 1430), "A000108"),
    ],
    "size3-2chain": [
        (["pop 3: c[1>2], i[3]"], (1, 2, 3, 4, 5, 6, 7, 8), "A000027"),
        (["pop 3: c[1>3], i[2]"], (1, 2, 3, 5, 8, 13, 21, 34), "A000045"),
    ],
    "t4-ii": [
        (["(1,2,3;4)", "(1,3,2;4)", "(3,1,2;4)"],
         (1, 2, 6, 20, 70, 252, 924, 3432), "A000984"),
        (["(4,1,2;3)", "(4,2,1;3)", "(2,4,1;3)"],
         (1, 2, 6, 20, 71, 264, 1015, 4002), "A049124"),
    ],
    "t4-iii": [
        (["(1,2;4,3)", "(1,2;3,4)"], (1, 2, 6, 18, 50, 130, 322, 770), None),
        (["(1,3;4,2)"], (1, 2, 6, 18, 52, 152, 444, 1296), None),
        (["(1,3;2,4)"], (1, 2, 6, 18, 52, 147, 413, 1159), None),
        (["(1,4;3,2)"], (1, 2, 6, 18, 50, 134, 358, 962), None),
        (["(1,4;2,3)"], (1, 2, 6, 18, 53, 156, 460, 1357), None),
    ],
    "t5-i": [
        # (3,1,2,4;5)'s chain is the classical 3241, inverse-related to
        # 1342; enumeration (exact, confirmed by an independent naive
        # filter) places it in the second class.
        (["(1,2,3,4;5)", "(2,1,4,3;5)", "(2,1,3,4;5)", "(3,2,1,4;5)"],
         (1, 2, 6, 24, 115, 618, 3591, 22088), None),
        (["(2,3,1,4;5)", "(3,1,4,2;5)", "(3,1,2,4;5)"],
         (1, 2, 6, 24, 115, 618, 3584, 21920), None),
        (["(1,3,2,4;5)"], (1, 2, 6, 24, 115, 618, 3591, 22096), None),
        (["(5,3,2,1;4)", "(5,3,1,2;4)", "(5,1,2,3;4)", "(3,5,2,1;4)", "(3,5,1,2;4)"],
         (1, 2, 6, 24, 115, 619, 3612, 22386), None),
        (["(5,2,1,3;4)", "(5,1,3,2;4)"], (1, 2, 6, 24, 115, 618, 3592, 22102), None),
        (["(5,2,3,1;4)"], (1, 2, 6, 24, 115, 619, 3613, 22412), None),
        (["(2,5,3,1;4)"], (1, 2, 6, 24, 115, 619, 3607, 22257), None),
        (["(2,5,1,3;4)"], (1, 2, 6, 24, 115, 618, 3587, 22000), None),
        (["(1,5,3,2;4)"], (1, 2, 6, 24, 115, 619, 3608, 22293), None),
        (["(1,5,2,3;4)"], (1, 2, 6, 24, 115, 619, 3606, 22232), None),
        (["(4,5,1,2;3)", "(5,4,2,1;3)", "(5,4,1,2;3)"],
         (1, 2, 6, 24, 115, 619, 3614, 22425), None),
        (["(5,2,4,1;3)"], (1, 2, 6, 24, 115, 619, 3615, 22457), None),
        (["(4,2,5,1;3)"], (1, 2, 6, 24, 115, 619, 3608, 22272), None),
        (["(2,5,4,1;3)"], (1, 2, 6, 24, 115, 619, 3609, 22297), None),
        (["(2,5,1,4;3)"], (1, 2, 6, 24, 115, 619, 3601, 22147), None),
        (["(2,4,5,1;3)"], (1, 2, 6, 24, 115, 619, 3614, 22426), None),
    ],
    "t5-ii": [
        (["(1,2,3;4;5)", "(1,3,2;4;5)", "(3,1,2;4;5)"],
         (1, 2, 6, 24, 100, 420, 1764, 7392), None),
        (["(1,3,4;2;5)", "(1,4,3;2;5)", "(4,1,3;2;5)",
          "(1,2,4;3;5)", "(1,4,2;3;5)", "(4,1,2;3;5)"],
         (1, 2, 6, 24, 100, 426, 1848, 8120), None),
        (["(1,3,5;2;4)", "(5,3,1;2;4)"], (1, 2, 6, 24, 100, 434, 1934, 8828), None),
        (["(1,5,3;2;4)", "(3,1,5;2;4)", "(5,1,3;2;4)"],
         (1, 2, 6, 24, 100, 430, 1889, 8494), None),
        (["(1,2,5;3;4)", "(5,1,2;3;4)"], (1, 2, 6, 24, 100, 426, 1875, 8482), None),
        (["(1,5,2;3;4)"], (1, 2, 6, 24, 100, 426, 1855, 8278), None),
    ],
    "t5-iii": [
        (["(3,4,5;1,2)", "(3,5,4;1,2)", "(5,3,4;1,2)"],
         (1, 2, 6, 24, 110, 530, 2597, 12796), None),
        (["(2,4,5;1,3)"], (1, 2, 6, 24, 110, 532, 2629, 13135), None),
        (["(2,5,4;1,3)"], (1, 2, 6, 24, 110, 532, 2632, 13188), None),
        (["(4,2,5;1,3)"], (1, 2, 6, 24, 110, 532, 2628, 13095), None),
        (["(5,4,2;1,3)"], (1, 2, 6, 24, 110, 533, 2658, 13527), None),
        (["(4,5,2;1,3)"], (1, 2, 6, 24, 110, 532, 2638, 13329), None),
        (["(5,2,4;1,3)"], (1, 2, 6, 24, 110, 533, 2640, 13195), None),
        (["(2,3,5;1,4)"], (1, 2, 6, 24, 110, 535, 2679, 13632), None),
        (["(2,5,3;1,4)"], (1, 2, 6, 24, 110, 535, 2690, 13836), None),
        (["(3,2,5;1,4)"], (1, 2, 6, 24, 110, 531, 2613, 12974), None),
        (["(5,3,2;1,4)"], (1, 2, 6, 24, 110, 531, 2601, 12817), None),
        (["(3,5,2;1,4)"], (1, 2, 6, 24, 110, 531, 2626, 13192), None),
        (["(5,2,3;1,4)"], (1, 2, 6, 24, 110, 534, 2666, 13534), None),
        (["(2,3,4;1,5)"], (1, 2, 6, 24, 110, 536, 2690, 13711), None),
        (["(2,4,3;1,5)"], (1, 2, 6, 24, 110, 530, 2595, 12759), None),
        (["(4,3,2;1,5)"], (1, 2, 6, 24, 110, 530, 2564, 12190), None),
        (["(3,4,2;1,5)"], (1, 2, 6, 24, 110, 530, 2575, 12407), None),
        (["(1,4,5;2,3)"], (1, 2, 6, 24, 110, 533, 2663, 13637), None),
        (["(1,5,4;2,3)"], (1, 2, 6, 24, 110, 534, 2678, 13748), None),
        (["(4,1,5;2,3)"], (1, 2, 6, 24, 110, 530, 2607, 12997), None),
        (["(5,4,1;2,3)"], (1, 2, 6, 24, 110, 530, 2605, 12996), None),
        (["(4,5,1;2,3)"], (1, 2, 6, 24, 110, 530, 2617, 13202), None),
        (["(5,1,4;2,3)"], (1, 2, 6, 24, 110, 533, 2633, 13156), None),
        (["(1,3,5;2,4)"], (1, 2, 6, 24, 110, 537, 2727, 14261), None),
        (["(1,5,3;2,4)"], (1, 2, 6, 24, 110, 533, 2673, 13757), None),
        (["(5,3,1;2,4)"], (1, 2, 6, 24, 110, 533, 2644, 13319), None),
        (["(3,5,1;2,4)"], (1, 2, 6, 24, 110, 532, 2628, 13175), None),
    ],
    "t5-iv": [
        (["(1,2;3,4;5)", "(1,2;4,3;5)", "(1,2;4,5;3)"],
         (1, 2, 6, 24, 90, 300, 910, 2576), None),
        (["(1,3;4,2;5)"], (1, 2, 6, 24, 90, 312, 1064, 3552), None),
        (["(1,3;2,4;5)"], (1, 2, 6, 24, 90, 312, 1029, 3304), None),
        (["(1,4;3,2;5)"], (1, 2, 6, 24, 90, 300, 938, 2864), None),
        (["(1,4;2,3;5)"], (1, 2, 6, 24, 90, 318, 1092, 3680), None),
        (["(1,2;3,5;4)", "(1,2;5,3;4)"], (1, 2, 6, 24, 90, 315, 1043, 3318), None),
        (["(1,3;2,5;4)"], (1, 2, 6, 24, 90, 311, 1034, 3401), None),
        (["(1,3;5,2;4)"], (1, 2, 6, 24, 90, 323, 1129, 3951), None),
        (["(1,5;2,3;4)"], (1, 2, 6, 24, 90, 310, 1034, 3458), None),
        (["(1,5;3,2;4)"], (1, 2, 6, 24, 90, 301, 914, 2768), None),
        (["(1,4;2,5;3)"], (1, 2, 6, 24, 90, 329, 1192, 4302), None),
        (["(1,4;5,2;3)"], (1, 2, 6, 24, 90, 310, 1088, 3888), None),
        (["(1,5;2,4;3)"], (1, 2, 6, 24, 90, 334, 1235, 4567), None),
        (["(1,5;4,2;3)"], (1, 2, 6, 24, 90, 316, 1009, 3210), None),
    ],
}

EXPECTED_CLASS_COUNTS = {
    "size3-connected": 1,
    "size3-2chain": 2,
    "t4-ii": 2,
    "t4-iii": 5,
    "t5-i": 16,
    "t5-ii": 6,
    "t5-iii": 27,
    "t5-iv": 14,
}

EXPECTED_FAMILY_SIZES = {
    "size3-connected": 6,
    "size3-2chain": 6,
    "t4-ii": 24,
    "t4-iii": 24,
    "t5-i": 120,
    "t5-ii": 60,
    "t5-iii": 120,
    "t5-iv": 120,
}

# the three conjectured equality chains, written as type-I tuples
DIMITROV_CHAINS = (
    ("(5,4,3,1;2)", "(4,5,3,1;2)", "(4,5,1,3;2)"),
    ("(5,4,2,1;3)", "(4,5,2,1;3)", "(4,5,1,2;3)"),
    ("(5,3,2,1;4)", "(3,5,2,1;4)", "(3,5,1,2;4)"),
)
# chains 1 and 3 share the counts of t5-i row 4; chain 2 matches row 11
DIMITROV_EXPECTED = (
    (1, 2, 6, 24, 115, 619, 3612, 22386),
    (1, 2, 6, 24, 115, 619, 3614, 22425),
    (1, 2, 6, 24, 115, 619, 3612, 22386),
)
