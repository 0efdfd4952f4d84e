"""Published reference values, transcribed by hand.

These are kept apart from the constructions so the verification suite can
compare computed objects against an independent copy of the printed data.
The lambda_4..lambda_7 matrices follow the printed numbering, which permutes
the textbook Gell-Mann labels.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

j = 1j
S3 = math.sqrt(3)
S6 = math.sqrt(6)


def _m(rows, factor=1.0):
    return np.array(rows, dtype=np.complex128) * factor


#: images of sigma_0..sigma_4
DIRAC_MATRICES = (
    _m([[-j, 0, 0, 0], [0, j, 0, 0], [0, 0, -j, 0], [0, 0, 0, j]]),
    _m([[0, 0, 0, 1], [0, 0, -1, 0], [0, -1, 0, 0], [1, 0, 0, 0]]),
    _m([[0, j, 0, 0], [-j, 0, 0, 0], [0, 0, 0, -j], [0, 0, j, 0]]),
    _m([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]),
    _m([[0, 0, 0, -j], [0, 0, j, 0], [0, -j, 0, 0], [j, 0, 0, 0]]),
)

GELL_MANN = (
    _m([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]),
    _m([[0, -j, 0, 0], [j, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]),
    _m([[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]),
    _m([[0, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 0]]),
    _m([[0, 0, 0, 0], [0, 0, -j, 0], [0, j, 0, 0], [0, 0, 0, 0]]),
    _m([[0, 0, 1, 0], [0, 0, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0]]),
    # printed with j at (3, 2), which is not Hermitian; see PRINTED_LAMBDA7
    _m([[0, 0, -j, 0], [0, 0, 0, 0], [j, 0, 0, 0], [0, 0, 0, 0]]),
    _m([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -2, 0], [0, 0, 0, 0]], 1 / S3),
)
PRINTED_LAMBDA7 = _m([[0, 0, -j, 0], [0, 0, 0, 0], [0, j, 0, 0], [0, 0, 0, 0]])

SU4_EXTENSION = (
    _m([[0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 0]]),
    _m([[0, 0, 0, -j], [0, 0, 0, 0], [0, 0, 0, 0], [j, 0, 0, 0]]),
    _m([[0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0], [0, 1, 0, 0]]),
    _m([[0, 0, 0, 0], [0, 0, 0, -j], [0, 0, 0, 0], [0, j, 0, 0]]),
    _m([[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]),
    _m([[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, -j], [0, 0, j, 0]]),
    _m([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -3]], 1 / S6),
)

F = Fraction
h = F(1, 2)
r23 = math.sqrt(2 / 3)
r32 = math.sqrt(3 / 2)

#: (a0, a1, a2, a3), lambda3, lambda8, lambda15, q, i3, designation
TABLE_1 = (
    ((F(1), F(0), F(0), F(0)), F(0), 0.0, 0.0, F(0), h, ""),
    ((F(0), F(1), F(0), F(0)), F(0), 2 / S3, r23, F(2, 3), h, "up"),
    ((F(0), F(0), F(1), F(0)), F(1), 1 / S3, -r23, F(1, 3), h, "anti-down"),
    ((F(0), F(0), F(0), F(1)), F(-1), 1 / S3, -r23, F(1), h, "positron"),
    ((F(-1), F(0), F(0), F(0)), F(0), 0.0, 0.0, F(0), -h, ""),
    ((F(0), F(-1), F(0), F(0)), F(0), -2 / S3, -r23, F(-2, 3), -h, "anti-up"),
    ((F(0), F(0), F(-1), F(0)), F(-1), -1 / S3, r23, F(-1, 3), -h, "down"),
    ((F(0), F(0), F(0), F(-1)), F(1), -1 / S3, r23, F(-1), -h, "electron"),
    ((-h, -h, h, h), F(0), 0.0, -r32, F(1, 3), F(0), "anti-strange"),
    ((-h, h, -h, h), F(-1), 1 / S3, 1 / S6, F(2, 3), F(0), "charm"),
    ((-h, h, h, -h), F(1), 1 / S3, 1 / S6, F(0), F(0), ""),
    ((h, -h, -h, h), F(-1), -1 / S3, -1 / S6, F(0), F(0), ""),
    ((h, -h, h, -h), F(1), -1 / S3, -1 / S6, F(-2, 3), F(0), "anti-charm"),
    ((h, h, -h, -h), F(0), 0.0, r32, F(-1, 3), F(0), "strange"),
    ((h, h, h, h), F(0), 2 / S3, -1 / S6, F(1), F(1), "anti-mu"),
    ((-h, -h, -h, -h), F(0), -2 / S3, 1 / S6, F(-1), F(-1), "mu"),
)

#: number of rep(h) diagonals with k negative entries, k = 0..4
NEGATIVE_COUNTS = {0: 1, 1: 4, 2: 6, 3: 4, 4: 1}
