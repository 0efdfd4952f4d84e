"""Idempotent quartets, the SU(3)/SU(4) generator sets and their closure."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .algebra import ONE, I, Multivector, basis
from .errors import ClosureViolation, InvalidPair
from .matrix_rep import rep

SQRT3 = math.sqrt(3.0)
SQRT6 = math.sqrt(6.0)


def commutator(a: Multivector, b: Multivector) -> Multivector:
    return a * b - b * a


@dataclass(frozen=True)
class CommutingPair:
    """Two commuting elements that square to +1 and are not +/-1 or +/- each other."""

    h1: Multivector
    h2: Multivector

    def __post_init__(self):
        problems = pair_problems(self.h1, self.h2)
        if problems:
            raise InvalidPair("; ".join(problems))


def pair_problems(h1: Multivector, h2: Multivector) -> list[str]:
    problems = []
    if not (h1 * h1).isclose(ONE):
        problems.append("h1^2 != 1")
    if not (h2 * h2).isclose(ONE):
        problems.append("h2^2 != 1")
    if not commutator(h1, h2).is_zero(1e-12):
        problems.append("h1 and h2 do not commute")
    if h1.isclose(ONE) or h1.isclose(-ONE):
        problems.append("h1 is +/-1")
    if h2.isclose(ONE) or h2.isclose(-ONE):
        problems.append("h2 is +/-1")
    if h1.isclose(h2) or h1.isclose(-h2):
        problems.append("h1 is +/-h2")
    return problems


@dataclass(frozen=True)
class IdempotentQuartet:
    f1: Multivector
    f2: Multivector
    f3: Multivector
    f4: Multivector
    pair: CommutingPair | None = field(default=None, compare=False)

    def __iter__(self):
        return iter((self.f1, self.f2, self.f3, self.f4))

    def __getitem__(self, k: int) -> Multivector:
        """1-based access, so ``q[1]`` is f1."""
        return (self.f1, self.f2, self.f3, self.f4)[k - 1]

    def violations(self, atol: float = 0.0) -> list[str]:
        """Quartet laws that fail; empty when all hold (exactly by default)."""
        fs = list(self)
        out = []
        for a, fa in enumerate(fs, 1):
            for b, fb in enumerate(fs, 1):
                target = fa if a == b else Multivector()
                if not (fa * fb).isclose(target, atol):
                    out.append(f"f{a} f{b} != {'f%d' % a if a == b else '0'}")
        if not sum(fs, Multivector()).isclose(ONE, atol):
            out.append("f1 + f2 + f3 + f4 != 1")
        return out


def idempotents_from_pair(pair: CommutingPair) -> IdempotentQuartet:
    h1, h2 = pair.h1, pair.h2
    quartet = IdempotentQuartet(
        (ONE + h1) * (ONE + h2) / 4,
        (ONE + h1) * (ONE - h2) / 4,
        (ONE - h1) * (ONE - h2) / 4,
        (ONE - h1) * (ONE + h2) / 4,
        pair,
    )
    bad = quartet.violations(1e-12)
    if bad:
        raise InvalidPair("idempotent laws fail: " + "; ".join(bad))
    return quartet


def canonical_pair() -> CommutingPair:
    return CommutingPair(basis("e023"), basis("e014"))


def alpha_pair() -> CommutingPair:
    return CommutingPair(basis("e3"), basis("e04"))


@dataclass(frozen=True)
class GeneratorSet:
    """Generators in printed order.

    ``elements`` come from the idempotent combinations, ``closed_forms``
    from the explicit blade expressions; ``names`` carry 1-based labels.
    """

    label: str
    names: tuple[str, ...]
    elements: tuple[Multivector, ...]
    closed_forms: tuple[Multivector, ...]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, name: str) -> Multivector:
        return self.elements[self.names.index(name)]

    def mismatches(self) -> list[str]:
        """Names whose combination and closed forms differ (exact comparison)."""
        return [n for n, a, b in zip(self.names, self.elements, self.closed_forms) if not a.equals(b)]

    def matrices(self) -> list[np.ndarray]:
        return [rep(x) for x in self.elements]


def _b(name: str) -> Multivector:
    return basis(name)


def su3_lambda(quartet: IdempotentQuartet | None = None) -> GeneratorSet:
    """lambda_1..lambda_8 built on the (e023, e014) quartet."""
    q = quartet if quartet is not None else idempotents_from_pair(canonical_pair())
    f1, f2, f3, f4 = q
    combos = (
        _b("e02") * (f1 + f2),
        _b("e03") * (f1 + f2),
        f1 - f2,
        -_b("e1") * (f2 + f3),
        -_b("e4") * (f2 + f3),
        _b("e012") * (f1 + f3),
        -_b("e024") * (f1 + f3),
        (f1 + f2 - 2 * f3) / SQRT3,
    )
    closed = (
        (_b("e3") + _b("e02")) / 2,
        (-_b("e2") + _b("e03")) / 2,
        (_b("e014") - _b("e1234")) / 2,
        (-_b("e1") - _b("e04")) / 2,
        (-_b("e4") + _b("e01")) / 2,
        (_b("e012") + _b("e034")) / 2,
        (_b("e013") - _b("e024")) / 2,
        (2 * _b("e023") + _b("e014") + _b("e1234")) / 2 / SQRT3,
    )
    return GeneratorSet("su3-lambda", tuple(f"lambda{k}" for k in range(1, 9)), combos, closed)


def su4_extension(quartet: IdempotentQuartet | None = None) -> GeneratorSet:
    """lambda_9..lambda_15, the seven generators completing SU(4)."""
    q = quartet if quartet is not None else idempotents_from_pair(canonical_pair())
    f1, f2, f3, f4 = q
    combos = (
        _b("e1") * (f1 + f4),
        _b("e4") * (f1 + f4),
        -_b("e012") * (f2 + f4),
        _b("e024") * (f2 + f4),
        _b("e3") * (f3 + f4),
        _b("e2") * (f3 + f4),
        (f1 + f2 + f3 - 3 * f4) / SQRT6,
    )
    closed = (
        (_b("e1") - _b("e04")) / 2,
        (_b("e4") + _b("e01")) / 2,
        # printed as (-e012 - e034)/2, whose image is -lambda_6; the sign of
        # e034 here agrees with both the idempotent form and the matrix
        (-_b("e012") + _b("e034")) / 2,
        (_b("e013") + _b("e024")) / 2,
        (_b("e3") - _b("e02")) / 2,
        (_b("e2") + _b("e03")) / 2,
        (_b("e023") - _b("e014") - _b("e1234")) / SQRT6,
    )
    return GeneratorSet("su4-extension", tuple(f"lambda{k}" for k in range(9, 16)), combos, closed)


def su4_full(quartet: IdempotentQuartet | None = None) -> GeneratorSet:
    """All fifteen lambda generators."""
    a, b = su3_lambda(quartet), su4_extension(quartet)
    return GeneratorSet("su4", a.names + b.names, a.elements + b.elements, a.closed_forms + b.closed_forms)


def su3_alpha() -> GeneratorSet:
    """alpha_1..alpha_8 built on the (e3, e04) quartet."""
    f1, f2, f3, f4 = idempotents_from_pair(alpha_pair())
    combos = (
        _b("e02") * (f1 + f2),
        _b("e01") * (f1 + f2),
        f1 - f2,
        _b("e2") * (f2 + f3),
        -_b("e1") * (f2 + f3),
        _b("e4") * (f1 + f3),
        _b("e012") * (f1 + f3),
        (f1 + f2 - 2 * f3) / SQRT3,
    )
    closed = (
        (_b("e02") + _b("e023")) / 2,
        (_b("e01") + _b("e013")) / 2,
        (_b("e04") - _b("e034")) / 2,
        (_b("e2") + _b("e024")) / 2,
        (-_b("e1") - _b("e014")) / 2,
        (_b("e4") - _b("e03")) / 2,
        (_b("e012") + _b("e1234")) / 2,
        (2 * _b("e3") + _b("e04") + _b("e034")) / 2 / SQRT3,
    )
    return GeneratorSet("su3-alpha", tuple(f"alpha{k}" for k in range(1, 9)), combos, closed)


GROUPS = {"lambda": su3_lambda, "su4": su4_full, "alpha": su3_alpha}


def structure_constants(gens, tol: float = 1e-10) -> np.ndarray:
    """f[a, b, c] (0-based) with [g_a, g_b] = 2 i sum_c f[a, b, c] g_c.

    Each commutator is divided by 2i and projected onto the span of the
    generators by least squares.  Raises ClosureViolation when the
    projection residual exceeds ``tol``.
    """
    elements = list(gens)
    n = len(elements)
    basis_cols = np.stack([np.asarray(g.coeffs, dtype=np.float64) for g in elements], axis=1)
    f = np.zeros((n, n, n))
    for a in range(n):
        for b in range(a + 1, n):
            target = np.asarray((commutator(elements[a], elements[b]) * (-0.5 * I)).coeffs, dtype=np.float64)
            coef, *_ = np.linalg.lstsq(basis_cols, target, rcond=None)
            resid = float(np.max(np.abs(basis_cols @ coef - target)))
            if resid > tol:
                raise ClosureViolation(f"[g{a + 1}, g{b + 1}] leaves the span (residual {resid:.3g})")
            f[a, b] = coef
            f[b, a] = -coef
    return f


def closure_residual(gens) -> float:
    """Largest projection residual over all commutator pairs."""
    elements = list(gens)
    basis_cols = np.stack([np.asarray(g.coeffs, dtype=np.float64) for g in elements], axis=1)
    worst = 0.0
    for a in range(len(elements)):
        for b in range(a + 1, len(elements)):
            target = np.asarray((commutator(elements[a], elements[b]) * (-0.5 * I)).coeffs, dtype=np.float64)
            coef, *_ = np.linalg.lstsq(basis_cols, target, rcond=None)
            worst = max(worst, float(np.max(np.abs(basis_cols @ coef - target))))
    return worst


def antisymmetry_error(f: np.ndarray) -> float:
    """Largest deviation from total antisymmetry of a structure-constant table."""
    return float(
        max(
            np.max(np.abs(f + f.transpose(1, 0, 2))),
            np.max(np.abs(f + f.transpose(0, 2, 1))),
            np.max(np.abs(f + f.transpose(2, 1, 0))),
        )
    )


def nonzero_constants(f: np.ndarray, tol: float = 1e-12):
    """Yield 1-based ``(a, b, c, value)`` for a < b < c with |f| > tol."""
    n = f.shape[0]
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                if abs(f[a, b, c]) > tol:
                    yield a + 1, b + 1, c + 1, float(f[a, b, c])


def trace_gram(gens) -> np.ndarray:
    """Matrix of trace(rep(g_a) rep(g_b))."""
    mats = [rep(g) for g in gens]
    return np.array([[np.trace(x @ y) for y in mats] for x in mats])
