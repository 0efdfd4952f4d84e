"""Blade-level product structure and multivector arithmetic of G(4,1).

Generators are numbered 0..4 with metric (-1, +1, +1, +1, +1).  A blade is
stored as a bitmask (bit k set when generator k is present), and a
multivector as a dense array of 32 coefficients indexed by that bitmask.
Coefficients are float64 by default; passing :class:`fractions.Fraction`
values switches to an object array so rational work stays exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Number, Rational

import numpy as np

from .errors import DegenerateFrame, GradeError, NegativeNorm, NonScalarSquare

N_GENERATORS = 5
DIM = 1 << N_GENERATORS
METRIC = (-1, 1, 1, 1, 1)

#: absolute tolerance used by ``==`` on multivectors
ATOL = 1e-12
#: largest non-scalar coefficient still accepted as "is a scalar"
SCALAR_TOL = 1e-9


@dataclass(frozen=True)
class Blade:
    """A basis blade, given by its generators in ascending order."""

    generators: tuple[int, ...] = ()

    def __post_init__(self):
        gens = tuple(self.generators)
        if any(not 0 <= g < N_GENERATORS for g in gens):
            raise GradeError(f"generator index out of range in {gens}")
        if any(a >= b for a, b in zip(gens, gens[1:])):
            raise GradeError(f"generators must be strictly ascending, got {gens}")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def from_mask(cls, mask: int) -> "Blade":
        return cls(tuple(k for k in range(N_GENERATORS) if mask >> k & 1))

    @classmethod
    def from_name(cls, name: str) -> "Blade":
        if name == "1":
            return cls()
        if name == "i":
            return cls(tuple(range(N_GENERATORS)))
        if not name.startswith("e") or not name[1:].isdigit():
            raise GradeError(f"not a blade name: {name!r}")
        return cls(tuple(int(c) for c in name[1:]))

    @property
    def mask(self) -> int:
        return sum(1 << g for g in self.generators)

    @property
    def grade(self) -> int:
        return len(self.generators)

    @property
    def name(self) -> str:
        if not self.generators:
            return "1"
        return "e" + "".join(str(g) for g in self.generators)

    def __str__(self):
        return self.name


def blade_product(a: Blade, b: Blade) -> tuple[int, Blade]:
    """Geometric product of two basis blades as ``(sign, blade)``.

    The generator lists are concatenated and bubble-sorted; every swap of
    two distinct generators contributes -1.  Adjacent repeats then contract
    to the metric value of that generator.
    """
    gens = list(a.generators) + list(b.generators)
    sign = 1
    n = len(gens)
    for i in range(n):
        for k in range(n - 1 - i):
            if gens[k] > gens[k + 1]:
                gens[k], gens[k + 1] = gens[k + 1], gens[k]
                sign = -sign
    out: list[int] = []
    for g in gens:
        if out and out[-1] == g:
            out.pop()
            sign *= METRIC[g]
        else:
            out.append(g)
    return sign, Blade(tuple(out))


BLADES = tuple(Blade.from_mask(m) for m in range(DIM))
GRADES = np.array([b.grade for b in BLADES])
# grade-ascending, then lexicographic on the generator list
CANONICAL_ORDER = tuple(sorted(range(DIM), key=lambda m: (BLADES[m].grade, BLADES[m].generators)))

_SIGN = np.zeros((DIM, DIM), dtype=np.int64)
for _a in range(DIM):
    for _b in range(DIM):
        _s, _r = blade_product(BLADES[_a], BLADES[_b])
        assert _r.mask == _a ^ _b
        _SIGN[_a, _b] = _s
_XOR = np.bitwise_xor.outer(np.arange(DIM), np.arange(DIM))
# _KERNEL[i, k] is the sign of blade i times blade (i ^ k), whose product is blade k
_KERNEL = np.take_along_axis(_SIGN, _XOR, axis=1)
_KERNEL_F = _KERNEL.astype(np.float64)
_REVERSE_SIGN = np.array([(-1) ** (g * (g - 1) // 2) for g in GRADES])

del _a, _b, _s, _r


def _is_exact(x) -> bool:
    return isinstance(x, Rational) and not isinstance(x, bool)


def _normalize(arr: np.ndarray) -> np.ndarray:
    """Return a float64 array, or an object array of Fractions when exact."""
    if arr.dtype != object:
        return np.asarray(arr, dtype=np.float64)
    if all(type(x) is Fraction for x in arr):
        return arr
    if all(_is_exact(x) for x in arr):
        return np.array([x if type(x) is Fraction else Fraction(x) for x in arr], dtype=object)
    return arr.astype(np.float64)


def _coerce_scalar(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, Number) and not isinstance(x, complex):
        return x
    raise TypeError(f"unsupported coefficient type {type(x).__name__}")


class Multivector:
    """Immutable element of G(4,1).

    ``*`` is the geometric product, ``^`` the outer product, ``|`` the inner
    product and ``~`` reversion.  ``==`` compares componentwise within
    :data:`ATOL`; use :meth:`equals` for exact comparison.
    """

    __slots__ = ("_c",)
    __hash__ = None  # type: ignore[assignment]
    __array_priority__ = 1000

    def __init__(self, coeffs=None):
        if coeffs is None:
            arr = np.zeros(DIM)
        elif isinstance(coeffs, Multivector):
            arr = coeffs._c
        else:
            seq = list(coeffs)
            if len(seq) != DIM:
                raise ValueError(f"expected {DIM} coefficients, got {len(seq)}")
            if any(isinstance(x, Fraction) for x in seq):
                arr = _normalize(np.array(seq, dtype=object))
            else:
                arr = np.array(seq, dtype=np.float64)
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "_c", arr)

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> "Multivector":
        out = object.__new__(cls)
        arr = _normalize(arr)
        arr.flags.writeable = False
        object.__setattr__(out, "_c", arr)
        return out

    @classmethod
    def scalar(cls, value=0) -> "Multivector":
        return cls.blade(Blade(), value)

    @classmethod
    def blade(cls, blade, coeff=1) -> "Multivector":
        """Single-blade multivector; ``blade`` is a Blade, a bitmask or a name."""
        mask = _blade_mask(blade)
        coeff = _coerce_scalar(coeff)
        arr = np.zeros(DIM, dtype=object if isinstance(coeff, Fraction) else np.float64)
        if arr.dtype == object:
            arr[:] = Fraction(0)
        arr[mask] = coeff
        return cls._wrap(arr)

    @classmethod
    def vector(cls, components) -> "Multivector":
        """Grade-1 element with the given five components on e0..e4."""
        comps = list(components)
        if len(comps) != N_GENERATORS:
            raise ValueError("a vector needs exactly five components")
        exact = any(isinstance(c, Fraction) for c in comps)
        arr = np.zeros(DIM, dtype=object if exact else np.float64)
        if exact:
            arr[:] = Fraction(0)
        for k, c in enumerate(comps):
            arr[1 << k] = Fraction(c) if exact else c
        return cls._wrap(arr)

    @classmethod
    def from_dict(cls, terms: dict) -> "Multivector":
        """Build from ``{blade: coefficient}``; keys as accepted by :meth:`blade`."""
        out = cls()
        for key, value in terms.items():
            out = out + cls.blade(key, value)
        return out

    # -- access -----------------------------------------------------------

    @property
    def coeffs(self) -> np.ndarray:
        """Read-only view of the 32 coefficients, indexed by blade bitmask."""
        return self._c

    @property
    def exact(self) -> bool:
        return self._c.dtype == object

    def __getitem__(self, blade):
        return self._c[_blade_mask(blade)]

    def items(self):
        """Yield ``(Blade, coefficient)`` for nonzero terms in canonical order."""
        for m in CANONICAL_ORDER:
            c = self._c[m]
            if c != 0:
                yield BLADES[m], c

    def to_dict(self) -> dict:
        return {b.name: c for b, c in self.items()}

    def scalar_part(self):
        return self._c[0]

    def grade(self, k: int) -> "Multivector":
        return grade_project(self, k)

    def grades(self) -> set[int]:
        """Grades carrying a nonzero coefficient."""
        return {int(GRADES[m]) for m in range(DIM) if self._c[m] != 0}

    def max_abs(self) -> float:
        if self._c.dtype != object:
            return float(np.abs(self._c).max())
        return float(max(abs(x) for x in self._c))

    def is_scalar(self, tol: float = SCALAR_TOL) -> bool:
        return all(abs(self._c[m]) <= tol for m in range(1, DIM))

    def is_zero(self, tol: float = 0.0) -> bool:
        return self.max_abs() <= tol

    def to_float(self) -> "Multivector":
        return Multivector._wrap(self._c.astype(np.float64))

    # -- comparison -------------------------------------------------------

    def equals(self, other) -> bool:
        """Exact componentwise equality."""
        other = _as_mv(other)
        return all(a == b for a, b in zip(self._c, other._c))

    def isclose(self, other, atol: float = ATOL) -> bool:
        other = _as_mv(other)
        return all(abs(a - b) <= atol for a, b in zip(self._c, other._c))

    def __eq__(self, other):
        if not isinstance(other, (Multivector, Number)):
            return NotImplemented
        return self.isclose(other, ATOL)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, (Multivector, Number)):
            return NotImplemented
        return Multivector._wrap(self._c + _as_mv(other)._c)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (Multivector, Number)):
            return NotImplemented
        return Multivector._wrap(self._c - _as_mv(other)._c)

    def __rsub__(self, other):
        if not isinstance(other, Number):
            return NotImplemented
        return Multivector._wrap(_as_mv(other)._c - self._c)

    def __neg__(self):
        return Multivector._wrap(-self._c)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        if isinstance(other, Number) and not isinstance(other, complex):
            return Multivector._wrap(self._c * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Number) and not isinstance(other, complex):
            return Multivector._wrap(other * self._c)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Number) and not isinstance(other, complex):
            if _is_exact(other) and self.exact:
                return Multivector._wrap(self._c / Fraction(other))
            return Multivector._wrap(self._c / float(other))
        return NotImplemented

    def __invert__(self):
        return reverse(self)

    def __xor__(self, other):
        return outer(self, _as_mv(other))

    def __rxor__(self, other):
        return outer(_as_mv(other), self)

    def __or__(self, other):
        return inner(self, _as_mv(other))

    def __ror__(self, other):
        return inner(_as_mv(other), self)

    def __repr__(self):
        from .expr import format_multivector

        return f"Multivector({format_multivector(self)!r})"

    def __str__(self):
        from .expr import format_multivector

        return format_multivector(self)


def _blade_mask(blade) -> int:
    if isinstance(blade, Blade):
        return blade.mask
    if isinstance(blade, str):
        return Blade.from_name(blade).mask
    if isinstance(blade, (int, np.integer)) and 0 <= blade < DIM:
        return int(blade)
    if isinstance(blade, tuple):
        return Blade(blade).mask
    raise KeyError(blade)


def _as_mv(x) -> Multivector:
    if isinstance(x, Multivector):
        return x
    return Multivector.scalar(x)


def basis(name: str) -> Multivector:
    """The unit blade with the given name, e.g. ``basis("e023")``."""
    return Multivector.blade(name)


ONE = Multivector.scalar(1)
#: the pseudoscalar e01234
I = Multivector.blade((0, 1, 2, 3, 4))
e0, e1, e2, e3, e4 = (Multivector.blade(1 << k) for k in range(N_GENERATORS))


# -- products ---------------------------------------------------------------


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    """Bilinear extension of :func:`blade_product` to multivectors."""
    ca, cb = a.coeffs, b.coeffs
    if ca.dtype == object or cb.dtype == object:
        # exact coefficients are slow per operation, so only touch nonzero pairs
        out = np.array([Fraction(0)] * DIM, dtype=object)
        nz_b = [(k, cb[k]) for k in range(DIM) if cb[k] != 0]
        for i in range(DIM):
            x = ca[i]
            if x == 0:
                continue
            for k, y in nz_b:
                out[i ^ k] += _SIGN[i, k] * x * y
        return Multivector._wrap(out)
    return Multivector._wrap(ca @ (_KERNEL_F * cb[_XOR]))


def grade_project(a: Multivector, k: int) -> Multivector:
    """Grade-k part of ``a``."""
    if not isinstance(k, (int, np.integer)) or not 0 <= k <= N_GENERATORS:
        raise GradeError(f"grade must be an integer in 0..{N_GENERATORS}, got {k!r}")
    c = a.coeffs.copy()
    c[GRADES != k] = 0
    return Multivector._wrap(c)


def reverse(a: Multivector) -> Multivector:
    return Multivector._wrap(a.coeffs * _REVERSE_SIGN)


def _graded_parts(a: Multivector):
    for k in range(N_GENERATORS + 1):
        part = grade_project(a, k)
        if not part.is_zero():
            yield k, part


def inner(a: Multivector, b: Multivector) -> Multivector:
    """Grade-lowering inner product: sum over r, s of <A_r B_s>_|r-s|.

    Scalars are not special-cased, so the inner product of a vector with a
    scalar is that vector scaled.
    """
    out = Multivector()
    for r, ar in _graded_parts(a):
        for s, bs in _graded_parts(b):
            out = out + grade_project(ar * bs, abs(r - s))
    return out


def outer(a: Multivector, b: Multivector) -> Multivector:
    """Grade-raising outer product: sum over r, s of <A_r B_s>_(r+s)."""
    out = Multivector()
    for r, ar in _graded_parts(a):
        for s, bs in _graded_parts(b):
            if r + s <= N_GENERATORS:
                out = out + grade_project(ar * bs, r + s)
    return out


# -- exponentials and rotors --------------------------------------------------


def _scalar_square(x: Multivector) -> float:
    sq = x * x
    if not sq.is_scalar(SCALAR_TOL):
        raise NonScalarSquare(f"{x} squares to a non-scalar")
    return float(sq.scalar_part())


def exp_scalar_square(x: Multivector) -> Multivector:
    """exp(x) for an element whose square is a scalar.

    Writes x = u*theta with u^2 in {-1, 0, +1} and sums the series in closed
    form (cos/sin, cosh/sinh, or the truncated 1 + x).
    """
    s = _scalar_square(x)
    if s == 0:
        return ONE + x
    theta = math.sqrt(abs(s))
    x = x.to_float()
    if s < 0:
        return math.cos(theta) + x * (math.sin(theta) / theta)
    return math.cosh(theta) + x * (math.sinh(theta) / theta)


def rotor(b: Multivector) -> Multivector:
    """R = exp(-B/2) for a bivector B with scalar square."""
    if b.grades() - {2}:
        raise GradeError("rotor generator must be a pure bivector")
    return exp_scalar_square(-0.5 * b)


def rotor_apply(b: Multivector, a: Multivector) -> Multivector:
    """Rotate vector ``a`` by exp(-B/2) a exp(+B/2); the angle is |B|."""
    if a.grades() - {1}:
        raise GradeError("rotor_apply acts on pure vectors")
    r = rotor(b)
    return r * a * exp_scalar_square(0.5 * b)


def bivector_norm(b: Multivector) -> float:
    """|B| = sqrt(B ~B)."""
    sq = b * reverse(b)
    if not sq.is_scalar(SCALAR_TOL):
        raise NonScalarSquare("B ~B is not a scalar")
    s = float(sq.scalar_part())
    if s < -SCALAR_TOL:
        raise NegativeNorm(f"B ~B = {s} < 0")
    return math.sqrt(max(s, 0.0))


# -- frames -----------------------------------------------------------------------


@dataclass(frozen=True)
class FrameSet:
    """Five grade-1 vectors g_0..g_4, optionally with their refractive index table.

    ``index[k][j]`` is the component of g_j along sigma_k, so that
    g_j = sum_k index[k][j] sigma_k.
    """

    vectors: tuple[Multivector, ...]
    index: tuple[tuple[float, ...], ...] | None = None

    def __post_init__(self):
        vecs = tuple(self.vectors)
        if len(vecs) != N_GENERATORS:
            raise ValueError("a frame has exactly five vectors")
        for v in vecs:
            if v.grades() - {1}:
                raise GradeError("frame elements must be pure vectors")
        object.__setattr__(self, "vectors", vecs)

    @classmethod
    def orthonormal(cls) -> "FrameSet":
        return cls((e0, e1, e2, e3, e4))

    @classmethod
    def from_index(cls, n) -> "FrameSet":
        """Frame g_j = n[k][j] sigma_k from a 5x5 refractive index table."""
        n = np.asarray(n, dtype=np.float64)
        if n.shape != (N_GENERATORS, N_GENERATORS):
            raise ValueError("refractive index table must be 5x5")
        vecs = tuple(Multivector.vector(n[:, j]) for j in range(N_GENERATORS))
        return cls(vecs, tuple(map(tuple, n.tolist())))

    def volume(self) -> float:
        """Scalar |V| in g_0 ^ g_1 ^ ... ^ g_4 = |V| i."""
        v = self.vectors[0]
        for g in self.vectors[1:]:
            v = v ^ g
        return v[DIM - 1]

    def __getitem__(self, k) -> Multivector:
        return self.vectors[k]

    def __iter__(self):
        return iter(self.vectors)

    def __len__(self):
        return N_GENERATORS


def reciprocal_frame(g: FrameSet, tol: float = SCALAR_TOL) -> FrameSet:
    """Vectors g^k with g^k . g_j = delta^k_j.

    g^k = (-1)^(k+1) / |V| * (wedge of the other four g_j) * i.
    """
    vol = g.volume()
    if abs(vol) <= tol:
        raise DegenerateFrame(f"frame volume {vol} is below tolerance")
    out = []
    for k in range(N_GENERATORS):
        wedge = ONE
        for j in range(N_GENERATORS):
            if j != k:
                wedge = wedge ^ g[j]
        sign = (-1) ** (k + 1)
        out.append(grade_project(wedge * I, 1) * (sign / vol))
    return FrameSet(tuple(out))
