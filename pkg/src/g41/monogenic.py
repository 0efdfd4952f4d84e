"""Monogenic plane waves, the Dirac form and the gauge derivative.

A plane wave is psi = A psi0 exp(u (+/-p0 t + p_i x^i + alpha)) with u^2 = -1.
Because u commutes with its own exponential, every first-order operator
applied to psi returns (something) * exp(...); the residual functions below
return that "something" with the exponential stripped.  The finite
difference path differentiates the full field instead and exists as an
independent cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import (
    ONE,
    I,
    Multivector,
    N_GENERATORS,
    SCALAR_TOL,
    basis,
    e0,
    e4,
    exp_scalar_square,
)
from .errors import NotUnitary, ZeroMass

#: sigma^0 = -sigma_0, sigma^i = sigma_i
RECIPROCAL = (-e0,) + tuple(basis(f"e{k}") for k in range(1, N_GENERATORS))
METRIC_DIAG = (-1.0, 1.0, 1.0, 1.0, 1.0)


@dataclass(frozen=True)
class FiveMomentum:
    """(p0; p1, p2, p3; p4): energy, wave vector and rest mass."""

    p0: float
    p1: float
    p2: float
    p3: float
    p4: float

    @classmethod
    def of(cls, values) -> "FiveMomentum":
        vals = [float(v) for v in values]
        if len(vals) != 5:
            raise ValueError("a five-momentum has exactly five components")
        return cls(*vals)

    def __iter__(self):
        return iter((self.p0, self.p1, self.p2, self.p3, self.p4))

    @property
    def spatial(self) -> tuple[float, float, float, float]:
        return (self.p1, self.p2, self.p3, self.p4)

    def shell(self) -> float:
        """sum_i p_i^2 - p0^2, zero on the mass shell."""
        return sum(x * x for x in self.spatial) - self.p0 * self.p0

    def on_shell(self, tol: float = 1e-12) -> bool:
        scale = max(1.0, max(abs(x) for x in self) ** 2)
        return abs(self.shell()) <= tol * scale


def _branch_sign(branch: str) -> int:
    if branch == "+":
        return 1
    if branch == "-":
        return -1
    raise ValueError(f"branch must be '+' or '-', got {branch!r}")


def phase_gradient(p: FiveMomentum, branch: str = "+") -> tuple[float, ...]:
    """d(theta)/dx^k for theta = +/-p0 t + p_i x^i."""
    return (_branch_sign(branch) * p.p0,) + p.spatial


@dataclass(frozen=True)
class PlaneWave:
    amplitude: Multivector
    u: Multivector
    p: FiveMomentum
    branch: str = "+"
    phase: float = 0.0
    scale: float = 1.0

    def __post_init__(self):
        _branch_sign(self.branch)
        if not (self.u * self.u).isclose(-ONE, SCALAR_TOL):
            raise NotUnitary("the imaginary unit u must square to -1")
        if not isinstance(self.p, FiveMomentum):
            object.__setattr__(self, "p", FiveMomentum.of(self.p))

    def theta(self, x) -> float:
        k = phase_gradient(self.p, self.branch)
        return float(np.dot(k, x)) + self.phase

    def __call__(self, x) -> Multivector:
        return self.scale * self.amplitude * exp_scalar_square(self.u * self.theta(x))


@dataclass(frozen=True)
class GaugePotential:
    A0: float = 0.0
    A1: float = 0.0
    A2: float = 0.0
    A3: float = 0.0

    @classmethod
    def of(cls, values) -> "GaugePotential":
        vals = [float(v) for v in values]
        if len(vals) != 4:
            raise ValueError("a gauge potential has exactly four components")
        return cls(*vals)

    def vector(self) -> Multivector:
        """A_mu sigma^mu."""
        comps = (self.A0, self.A1, self.A2, self.A3)
        out = Multivector()
        for a, s in zip(comps, RECIPROCAL):
            out = out + a * s
        return out


def imaginary_from_unitary(h: Multivector) -> Multivector:
    """u = i h, a square root of -1 for any h with h^2 = 1."""
    if not (h * h).isclose(ONE, SCALAR_TOL):
        raise NotUnitary("h must square to +1")
    return I * h.to_float()


def commutes_with(u: Multivector, x: Multivector, tol: float = 1e-12) -> bool:
    return (u * x - x * u).is_zero(tol)


def anticommutes_with(u: Multivector, x: Multivector, tol: float = 1e-12) -> bool:
    return (u * x + x * u).is_zero(tol)


def nilpotent_amplitude(p: FiveMomentum, branch: str = "+") -> Multivector:
    """v = p4 sigma^4 + p_m sigma^m -/+ p0 sigma_0; v^2 = sum p_i^2 - p0^2."""
    k = phase_gradient(p, branch)
    out = Multivector()
    for kk, s in zip(k, RECIPROCAL):
        out = out + kk * s
    return out


def monogenic_residual(w: PlaneWave) -> Multivector:
    """D psi with the exponential stripped: A (sigma^i p_i -/+ sigma_0 p0) psi0 u."""
    v = nilpotent_amplitude(w.p, w.branch)
    return w.scale * (v * w.amplitude * w.u)


def wave_residual(w: PlaneWave) -> float:
    """Scalar multiplying psi after applying the Laplacian: p0^2 - sum p_i^2."""
    return 0.0 - w.p.shell()


def dirac_matrices() -> tuple[Multivector, ...]:
    """(gamma0, gamma1, gamma2, gamma3, gamma5) as elements of G(4,1)."""
    g0 = -(e4 * e0)
    gm = tuple(e4 * basis(f"e{m}") for m in (1, 2, 3))
    g5 = -e4
    return (g0,) + gm + (g5,)


def dirac_residual(w: PlaneWave) -> Multivector:
    """gamma^mu d_mu psi + m psi u with the exponential stripped.

    Uses d_4 psi = +p4 psi u, so the residual vanishes for every monogenic
    plane wave.
    """
    g = dirac_matrices()[:4]
    k = phase_gradient(w.p, w.branch)
    op = Multivector.scalar(w.p.p4)
    for mu in range(4):
        op = op + k[mu] * g[mu]
    return w.scale * (op * w.amplitude * w.u)


def dirac_form_residual(w: PlaneWave) -> Multivector:
    """(-sigma_40 d_t + sigma_4m d_m + d_4) psi, the left product of sigma_4 with D psi."""
    k = phase_gradient(w.p, w.branch)
    op = k[0] * -(e4 * e0) + Multivector.scalar(k[4])
    for m in (1, 2, 3):
        op = op + k[m] * (e4 * basis(f"e{m}"))
    return w.scale * (op * w.amplitude * w.u)


def gauge_residual(w: PlaneWave, pot: GaugePotential, u: Multivector | None = None) -> Multivector:
    """((1/m) A_mu sigma^mu u d_4 + sigma^k d_k) psi with the exponential stripped.

    ``u`` is the imaginary unit inside the gauge derivative and defaults to
    the wave's own.  d_4 psi contributes p4 psi0 w.u.
    """
    m = w.p.p4
    if m == 0:
        raise ZeroMass("the gauge derivative divides by the rest mass p4")
    ug = w.u if u is None else u
    a = pot.vector()
    coupling = (1.0 / m) * (a * ug * (w.p.p4 * w.amplitude * w.u))
    return w.scale * coupling + monogenic_residual(w)


def gauge_coupling(w: PlaneWave, pot: GaugePotential, u: Multivector | None = None) -> Multivector | None:
    """Left operator C with (A-term of the gauge residual) = A C psi0.

    Defined when the wave's u commutes (C = a u_g u) or anticommutes
    (C = -a u_g u) with psi0; None otherwise.  C is the pure vector -a when
    the gauge u equals the wave's u and commutes with psi0; any other grade
    in C is the non-vector remainder.
    """
    ug = w.u if u is None else u
    a = pot.vector()
    if commutes_with(w.u, w.amplitude):
        return a * ug * w.u
    if anticommutes_with(w.u, w.amplitude):
        return -(a * ug * w.u)
    return None


def non_vector_part(x: Multivector) -> Multivector:
    return x - x.grade(1)


def shifted_vector(p: FiveMomentum, pot: GaugePotential, u: Multivector, branch: str = "+") -> Multivector:
    """W = v + a u, the momentum vector shifted by the potential along u."""
    return nilpotent_amplitude(p, branch) + pot.vector() * u


def shifted_shell_momentum(pot: GaugePotential, spatial, branch: str = "+") -> FiveMomentum:
    """Five-momentum making W = v + a u nilpotent for a u commuting with v and a.

    Then W^2 = (v.v - a.a) + 2 (v.a) u, so both v.a = 0 and v.v = a.a are
    needed.  Given p1..p3 the first fixes p0 and the second p4.
    """
    if pot.A0 == 0:
        raise ValueError("A0 must be nonzero to solve for p0")
    p1, p2, p3 = (float(x) for x in spatial)
    s = _branch_sign(branch)
    # v.a = -s p0 A0 + p.A, since v and a carry -s p0 and -A0 on sigma_0
    p0 = (p1 * pot.A1 + p2 * pot.A2 + p3 * pot.A3) / (s * pot.A0)
    a_sq = -pot.A0**2 + pot.A1**2 + pot.A2**2 + pot.A3**2
    m_sq = a_sq - (p1 * p1 + p2 * p2 + p3 * p3) + p0 * p0
    if m_sq <= 0:
        raise ValueError("no real rest mass satisfies the shifted shell condition")
    return FiveMomentum(p0, p1, p2, p3, math.sqrt(m_sq))


def numeric_vector_derivative(f, x, h: float) -> Multivector:
    """Central-difference D f = sum_k sigma^k (f(x + h e_k) - f(x - h e_k)) / 2h."""
    if h <= 0:
        raise ValueError("step must be positive")
    x = np.asarray(x, dtype=np.float64)
    out = Multivector()
    for k in range(N_GENERATORS):
        step = np.zeros(N_GENERATORS)
        step[k] = h
        out = out + RECIPROCAL[k] * ((f(x + step) - f(x - step)) / (2 * h))
    return out


@dataclass(frozen=True)
class RefinementCheck:
    h: float
    residual_h: float
    residual_half: float

    @property
    def ratio(self) -> float:
        if self.residual_half == 0:
            return math.inf
        return self.residual_h / self.residual_half


def refinement_check(w: PlaneWave, x, h: float) -> RefinementCheck:
    """Max stencil residual of ``w`` at step h and h/2."""
    r1 = numeric_vector_derivative(w, x, h).max_abs()
    r2 = numeric_vector_derivative(w, x, h / 2).max_abs()
    return RefinementCheck(h, r1, r2)


def random_on_shell(rng, scale: float = 2.0) -> FiveMomentum:
    spatial = rng.uniform(-scale, scale, size=4)
    return FiveMomentum(float(np.linalg.norm(spatial)), *map(float, spatial))


def random_off_shell(rng, scale: float = 2.0, gap: float = 0.1) -> FiveMomentum:
    """A momentum whose shell value is at least ``gap`` away from zero."""
    while True:
        vals = rng.uniform(-scale, scale, size=5)
        p = FiveMomentum(*map(float, vals))
        if abs(p.shell()) >= gap:
            return p


__all__ = [
    "FiveMomentum",
    "GaugePotential",
    "PlaneWave",
    "RECIPROCAL",
    "RefinementCheck",
    "anticommutes_with",
    "commutes_with",
    "dirac_form_residual",
    "dirac_matrices",
    "dirac_residual",
    "gauge_coupling",
    "gauge_residual",
    "imaginary_from_unitary",
    "monogenic_residual",
    "nilpotent_amplitude",
    "non_vector_part",
    "numeric_vector_derivative",
    "phase_gradient",
    "random_off_shell",
    "random_on_shell",
    "refinement_check",
    "shifted_shell_momentum",
    "shifted_vector",
    "wave_residual",
]
