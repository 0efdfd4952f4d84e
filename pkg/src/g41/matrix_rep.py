"""Faithful representation of G(4,1) on 4x4 complex matrices.

The five generator matrices below are the fixed mapping used throughout;
every blade image is the ordered product of its generator matrices.  The
complex imaginary is written ``j`` in text output.
"""

from __future__ import annotations

import json

import numpy as np

from .algebra import BLADES, DIM, Multivector
from .errors import SingularBasis

j = 1j

#: images of sigma_0 .. sigma_4
GENERATOR_MATRICES = (
    np.array([[-j, 0, 0, 0], [0, j, 0, 0], [0, 0, -j, 0], [0, 0, 0, j]]),
    np.array([[0, 0, 0, 1], [0, 0, -1, 0], [0, -1, 0, 0], [1, 0, 0, 0]], dtype=complex),
    np.array([[0, j, 0, 0], [-j, 0, 0, 0], [0, 0, 0, -j], [0, 0, j, 0]]),
    np.array([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex),
    np.array([[0, 0, 0, -j], [0, 0, j, 0], [0, -j, 0, 0], [j, 0, 0, 0]]),
)
for _m in GENERATOR_MATRICES:
    _m.flags.writeable = False


def _blade_image(blade) -> np.ndarray:
    m = np.eye(4, dtype=complex)
    for g in blade.generators:
        m = m @ GENERATOR_MATRICES[g]
    return m


BLADE_IMAGES = np.stack([_blade_image(b) for b in BLADES])
BLADE_IMAGES.flags.writeable = False


def _real_coords(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    return np.concatenate([m.real.ravel(), m.imag.ravel()])


def _build_inverse():
    basis = np.stack([_real_coords(img) for img in BLADE_IMAGES], axis=1)
    if np.linalg.matrix_rank(basis) != DIM:
        raise SingularBasis("blade images do not span M(4, C)")
    gram = basis.T @ basis
    # images are signed permutation matrices with unit phases: columns are
    # orthogonal with squared length 4, so the inverse is exact
    if np.array_equal(gram, 4 * np.eye(DIM)):
        return basis, basis.T / 4
    return basis, np.linalg.inv(basis)


_BASIS, _BASIS_INV = _build_inverse()


def rep(a: Multivector) -> np.ndarray:
    """4x4 complex matrix image of ``a``."""
    coeffs = np.asarray(a.coeffs, dtype=np.float64)
    return np.tensordot(coeffs, BLADE_IMAGES, axes=1)


def unrep(m) -> Multivector:
    """The unique multivector whose image is ``m``."""
    m = np.asarray(m, dtype=complex)
    if m.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {m.shape}")
    return Multivector(_BASIS_INV @ _real_coords(m))


def basis_rank() -> int:
    return int(np.linalg.matrix_rank(_BASIS))


def is_diagonal(m, tol: float = 1e-10) -> bool:
    m = np.asarray(m)
    return bool(np.all(np.abs(m - np.diag(np.diag(m))) <= tol))


def has_zero_fourth_row_column(m, tol: float = 1e-12) -> bool:
    m = np.asarray(m)
    return bool(np.all(np.abs(m[3, :]) <= tol) and np.all(np.abs(m[:, 3]) <= tol))


def _fmt_real(x: float) -> str:
    x = float(x) + 0.0
    if x.is_integer() and abs(x) < 1e16:
        return str(int(x))
    return repr(x)


def format_entry(z: complex, tol: float = 1e-15) -> str:
    """Render a complex entry as ``a+bj`` (dropping a zero part)."""
    re = 0.0 if abs(z.real) <= tol else z.real
    im = 0.0 if abs(z.imag) <= tol else z.imag
    if im == 0:
        return _fmt_real(re)
    if im in (1.0, -1.0):
        imag = "j" if im > 0 else "-j"
    else:
        imag = _fmt_real(im) + "j"
    if re == 0:
        return imag
    return _fmt_real(re) + ("" if imag.startswith("-") else "+") + imag


def format_matrix(m) -> str:
    cells = [[format_entry(complex(z)) for z in row] for row in np.asarray(m)]
    width = max(len(c) for row in cells for c in row)
    return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)


def matrix_to_json(m) -> list:
    """Nested ``[[ [re, im], ... ], ...]`` arrays."""
    return [[[float(z.real) + 0.0, float(z.imag) + 0.0] for z in row] for row in np.asarray(m, dtype=complex)]


def matrix_from_json(data) -> np.ndarray:
    arr = np.asarray(data, dtype=np.float64)
    if arr.shape != (4, 4, 2):
        raise ValueError("expected a 4x4 array of [re, im] pairs")
    return arr[..., 0] + 1j * arr[..., 1]


def dumps_matrix(m) -> str:
    return json.dumps(matrix_to_json(m))
