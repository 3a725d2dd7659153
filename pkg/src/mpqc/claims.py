"""Transcribed reference claims that the engine audits.

Everything in this module is static input data, copied from the claim
tables the artifact is meant to reproduce or refute.  Nothing here is
computed; the comparison machinery lives in quantum.py and cli.py.

TABLE1 rows map each claimed new code to the (l, d, case) that the
six-case formula needs, alongside the previously known code it was
compared against.  CHAIN_EXAMPLES holds the claimed outputs of the two
negacyclic chain families, keyed by the identifiers the command line
exposes.
"""

TABLE1 = [
    {"l": 5, "d": 4, "case": "i", "new": (96, 86, 4), "compare": (96, 82, 4)},
    {"l": 5, "d": 4, "case": "v", "new": (104, 94, 4), "compare": (104, 94, 4)},
    {"l": 7, "d": 4, "case": "i", "new": (192, 182, 4), "compare": (192, 182, 3)},
    {"l": 7, "d": 7, "case": "ii", "new": (192, 170, 7), "compare": (192, 170, 5)},
    {"l": 7, "d": 4, "case": "v", "new": (200, 190, 4), "compare": (200, 188, 4)},
    {"l": 7, "d": 8, "case": "v", "new": (200, 172, 8), "compare": (200, 172, 8)},
    {"l": 9, "d": 4, "case": "i", "new": (320, 310, 4), "compare": (320, 310, 3)},
    {"l": 9, "d": 8, "case": "i", "new": (320, 292, 8), "compare": (320, 284, 8)},
    {"l": 9, "d": 7, "case": "ii", "new": (320, 298, 7), "compare": (320, 298, 5)},
    {"l": 9, "d": 4, "case": "v", "new": (328, 318, 4), "compare": (328, 318, 4)},
]

# claimed [[n, k, d]] outputs per subfield order, as printed (duplicates kept)
CHAIN_EXAMPLES = {
    "3.8": {
        "family": "full",
        "claims": {
            5: [(78, 72, 4), (78, 68, 6)],
            9: [
                (246, 240, 4),
                (246, 236, 6),
                (246, 232, 8),
                (246, 228, 10),
                (246, 232, 8),
                (246, 228, 10),
            ],
            13: [
                (510, 504, 4),
                (510, 500, 6),
                (510, 496, 8),
                (510, 492, 10),
                (510, 488, 12),
                (510, 484, 14),
            ],
            17: [
                (870, 864, 4),
                (870, 860, 6),
                (870, 856, 8),
                (870, 852, 10),
                (870, 848, 12),
                (870, 844, 14),
                (870, 840, 16),
                (870, 836, 18),
            ],
        },
    },
    "3.10": {
        "family": "half",
        "claims": {
            7: [(75, 67, 5), (75, 63, 7)],
            11: [(183, 175, 5), (183, 171, 7), (183, 167, 9), (183, 163, 11)],
            13: [
                (255, 247, 5),
                (255, 243, 7),
                (255, 239, 9),
                (255, 235, 11),
                (255, 231, 13),
            ],
            17: [
                (435, 427, 5),
                (435, 423, 7),
                (435, 419, 9),
                (435, 415, 11),
                (435, 411, 13),
                (435, 407, 15),
                (435, 403, 17),
            ],
        },
    },
}
