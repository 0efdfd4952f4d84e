"""Geometric algebra G(4,1): multivectors, the 4x4 complex matrix
representation, SU(3)/SU(4) generators, the unitary spectrum and
monogenic plane waves."""

__version__ = "0.1.0"

from .algebra import (
    BLADES,
    I,
    ONE,
    Blade,
    FrameSet,
    Multivector,
    basis,
    bivector_norm,
    e0,
    e1,
    e2,
    e3,
    e4,
    exp_scalar_square,
    geometric_product,
    grade_project,
    inner,
    outer,
    reciprocal_frame,
    reverse,
    rotor,
    rotor_apply,
)
from .errors import *  # noqa: F401,F403
from .expr import evaluate, evaluate_str, format_multivector, parse
from .matrix_rep import rep, unrep

__all__ = [
    "BLADES",
    "Blade",
    "FrameSet",
    "I",
    "Multivector",
    "ONE",
    "basis",
    "bivector_norm",
    "e0",
    "e1",
    "e2",
    "e3",
    "e4",
    "evaluate",
    "evaluate_str",
    "exp_scalar_square",
    "format_multivector",
    "geometric_product",
    "grade_project",
    "inner",
    "outer",
    "parse",
    "reciprocal_frame",
    "rep",
    "reverse",
    "rotor",
    "rotor_apply",
    "unrep",
]
