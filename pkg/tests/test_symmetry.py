import math

import numpy as np
import pytest

from g41 import reference
from g41.algebra import ONE, I, Multivector, basis
from g41.errors import ClosureViolation, InvalidPair
from g41.matrix_rep import has_zero_fourth_row_column, rep
from g41.symmetry import (
    CommutingPair,
    alpha_pair,
    antisymmetry_error,
    canonical_pair,
    closure_residual,
    commutator,
    idempotents_from_pair,
    nonzero_constants,
    structure_constants,
    su3_alpha,
    su3_lambda,
    su4_extension,
    su4_full,
    trace_gram,
)

S3 = math.sqrt(3)


def trace_oracle(gens):
    """f_abc = tr(rep([g_a, g_b]) rep(g_c)) / 4j, using tr(rep g_a rep g_b) = 2 delta."""
    mats = [rep(g) for g in gens]
    n = len(mats)
    f = np.zeros((n, n, n))
    for a in range(n):
        for b in range(n):
            c_ab = mats[a] @ mats[b] - mats[b] @ mats[a]
            for c in range(n):
                f[a, b, c] = (np.trace(c_ab @ mats[c]) / 4j).real
    return f


def test_pair_validation():
    with pytest.raises(InvalidPair, match="commute"):
        CommutingPair(basis("e1"), basis("e2"))
    with pytest.raises(InvalidPair, match="h1"):
        CommutingPair(basis("e0"), basis("e014"))
    with pytest.raises(InvalidPair):
        CommutingPair(basis("e023"), -basis("e023"))


def test_first_idempotent_expansion():
    q = idempotents_from_pair(canonical_pair())
    h1, h2 = basis("e023"), basis("e014")
    assert q[1].equals((ONE + h1 + h2 + h1 * h2) / 4)
    assert q.f1.equals(0.25 + 0.25 * basis("e014") + 0.25 * basis("e023") - 0.25 * basis("e1234"))


def test_second_quartet():
    q = idempotents_from_pair(alpha_pair())
    h1, h2 = basis("e3"), basis("e04")
    assert q.f1.equals((ONE + h1) * (ONE + h2) / 4)
    assert q.f2.equals((ONE + h1) * (ONE - h2) / 4)
    assert q.f3.equals((ONE - h1) * (ONE - h2) / 4)
    assert q.f4.equals((ONE - h1) * (ONE + h2) / 4)


@pytest.mark.parametrize("pair", [canonical_pair, alpha_pair])
def test_quartet_laws_exact(pair):
    assert idempotents_from_pair(pair()).violations() == []


def test_first_quartet_images_are_diagonal_units():
    for k, f in enumerate(idempotents_from_pair(canonical_pair())):
        want = np.zeros((4, 4))
        want[k, k] = 1
        assert np.array_equal(rep(f), want)


def test_second_quartet_images_are_rank_one_projectors():
    for f in idempotents_from_pair(alpha_pair()):
        m = rep(f)
        assert np.allclose(m @ m, m, atol=1e-15)
        assert np.linalg.matrix_rank(m) == 1


@pytest.mark.parametrize("build", [su3_lambda, su4_extension, su3_alpha])
def test_closed_forms_agree_exactly(build):
    assert build().mismatches() == []


def test_named_closed_forms():
    lam = su3_lambda()
    assert lam["lambda1"].equals((basis("e3") + basis("e02")) / 2)
    q = idempotents_from_pair(canonical_pair())
    assert lam["lambda3"].equals(q.f1 - q.f2)
    assert lam["lambda8"].isclose((q.f1 + q.f2 - 2 * q.f3) / S3, 1e-15)
    ext = su4_extension()
    assert ext["lambda9"].equals((basis("e1") - basis("e04")) / 2)
    assert ext["lambda15"].isclose((basis("e023") - basis("e014") - basis("e1234")) / math.sqrt(6), 1e-15)
    alpha = su3_alpha()
    assert alpha["alpha3"].equals((basis("e04") - basis("e034")) / 2)
    assert alpha["alpha8"].isclose((2 * basis("e3") + basis("e04") + basis("e034")) / (2 * S3), 1e-15)


def test_printed_lambda11_form_is_minus_lambda6():
    printed = (-basis("e012") - basis("e034")) / 2
    assert printed.equals(-su3_lambda()["lambda6"])
    assert np.array_equal(rep(su4_extension()["lambda11"]), reference.SU4_EXTENSION[2])


def test_printed_lambda7_matrix_is_not_hermitian():
    m = reference.PRINTED_LAMBDA7
    assert not np.array_equal(m, m.conj().T)
    assert np.array_equal(rep(su3_lambda()["lambda7"]), reference.GELL_MANN[6])


def test_images_match_published_matrices():
    for m, r in zip(su4_full().matrices(), reference.GELL_MANN + reference.SU4_EXTENSION):
        assert np.abs(m - r).max() <= 1e-12
    assert np.allclose(rep(su4_extension()["lambda15"]), np.diag([1, 1, 1, -3]) / math.sqrt(6), atol=1e-15)


@pytest.mark.parametrize("build", [su3_lambda, su4_full, su3_alpha])
def test_hermitian_traceless_orthogonal(build):
    g = build()
    for m in g.matrices():
        assert np.abs(m - m.conj().T).max() <= 1e-15
        assert abs(np.trace(m)) <= 1e-15
    assert np.abs(trace_gram(g) - 2 * np.eye(len(g))).max() <= 1e-10


def test_fourth_row_column_separates_the_two_su3_sets():
    assert all(has_zero_fourth_row_column(m) for m in su3_lambda().matrices())
    assert not any(has_zero_fourth_row_column(m) for m in su3_alpha().matrices())


def test_commutator_examples():
    lam = su3_lambda()
    x = lam["lambda4"]
    assert commutator(x, x).is_zero()
    assert commutator(lam["lambda1"], lam["lambda2"]).isclose(2 * I * lam["lambda3"], 1e-15)
    # with the printed numbering lambda4, lambda5 are the textbook lambda6, lambda7
    want = I * (S3 * lam["lambda8"] - lam["lambda3"])
    assert commutator(lam["lambda4"], lam["lambda5"]).isclose(want, 1e-12)


@pytest.mark.parametrize("build", [su3_lambda, su4_full, su3_alpha])
def test_structure_constants_match_trace_oracle(build):
    g = build()
    f = structure_constants(g)
    assert np.abs(f - trace_oracle(g)).max() <= 1e-12
    assert antisymmetry_error(f) <= 1e-10
    assert closure_residual(g) <= 1e-10


def test_lambda_structure_constants():
    f = structure_constants(su3_lambda())
    got = {(a, b, c): round(v, 12) for a, b, c, v in nonzero_constants(f)}
    h = 0.5
    assert got == {
        (1, 2, 3): 1.0,
        (1, 4, 7): h,
        (1, 5, 6): -h,
        (2, 4, 6): -h,
        (2, 5, 7): -h,
        (3, 4, 5): -h,
        (3, 6, 7): h,
        (4, 5, 8): round(S3 / 2, 12),
        (6, 7, 8): round(S3 / 2, 12),
    }


def test_closure_violation_is_reported():
    partial = su3_lambda().elements[:2]
    with pytest.raises(ClosureViolation):
        structure_constants(partial)
    assert closure_residual(partial) > 0.1
