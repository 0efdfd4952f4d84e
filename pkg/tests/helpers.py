"""Shared strategies and independent oracles for the test suite."""

from fractions import Fraction

import numpy as np
from hypothesis import strategies as st

from g41.algebra import DIM, Multivector

METRIC = {0: -1, 1: 1, 2: 1, 3: 1, 4: 1}


def naive_blade_product(a, b):
    """Multiply generator words by repeated adjacent swaps and contractions.

    Works on plain lists and shares nothing with the bitmask implementation.
    Returns (sign, sorted generator tuple).
    """
    word = list(a) + list(b)
    sign = 1
    changed = True
    while changed:
        changed = False
        k = 0
        while k < len(word) - 1:
            x, y = word[k], word[k + 1]
            if x == y:
                sign *= METRIC[x]
                del word[k : k + 2]
                changed = True
            elif x > y:
                word[k], word[k + 1] = y, x
                sign = -sign
                changed = True
                k += 1
            else:
                k += 1
    return sign, tuple(word)


def listed_square(gens) -> int:
    """Square of a basis blade by the categories enumerated in the text.

    +1: sigma_i, sigma_0i, sigma_0ij, i sigma_0 (= +/- sigma_1234) and 1;
    -1: sigma_0, sigma_ij, sigma_ijk, i sigma_i (grade 4 containing 0) and i.
    """
    k, has0 = len(gens), 0 in gens
    table = {
        (0, False): 1,
        (1, False): 1,
        (1, True): -1,
        (2, True): 1,
        (2, False): -1,
        (3, True): 1,
        (3, False): -1,
        (4, False): 1,
        (4, True): -1,
        (5, True): -1,
    }
    return table[(k, has0)]


coeff = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
small_int = st.integers(-5, 5)


@st.composite
def multivectors(draw, elements=coeff):
    return Multivector(draw(st.lists(elements, min_size=DIM, max_size=DIM)))


@st.composite
def exact_multivectors(draw):
    vals = draw(st.lists(small_int, min_size=DIM, max_size=DIM))
    return Multivector([Fraction(v) for v in vals])


@st.composite
def vectors(draw):
    return Multivector.vector(draw(st.lists(coeff, min_size=5, max_size=5)))


def random_mv(rng, scale=1.0):
    return Multivector(rng.uniform(-scale, scale, DIM))


def close(a, b, tol):
    return (a - b).max_abs() <= tol


def max_abs_matrix(m):
    return float(np.abs(m).max())
