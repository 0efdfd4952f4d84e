"""Unitary elements h = a0 + a1 h1 + a2 h2 + a3 h3 with h^2 = 1, and Table 1.

Coefficients are exact :class:`~fractions.Fraction` values throughout; only
the lambda_8 and lambda_15 columns, which carry surds, are floats.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .algebra import DIM, Multivector
from .errors import CensusMismatch, InvalidPair, NonDiagonalRep
from .matrix_rep import is_diagonal, rep
from .symmetry import CommutingPair, canonical_pair, commutator

HALF = Fraction(1, 2)
GRID = (Fraction(-1), -HALF, Fraction(0), HALF, Fraction(1))


@dataclass(frozen=True)
class Triad:
    """Three commuting unit-square blades with h1 h2 = sign * h3."""

    h1: Multivector
    h2: Multivector
    h3: Multivector
    sign: int

    def __iter__(self):
        return iter((self.h1, self.h2, self.h3))


def _unit_blade(x: Multivector):
    """(sign, blade-mask) if x is +/- a single blade, else None."""
    nz = [m for m in range(len(x.coeffs)) if x.coeffs[m] != 0]
    if len(nz) != 1 or abs(x.coeffs[nz[0]]) != 1:
        return None
    return (1 if x.coeffs[nz[0]] > 0 else -1), nz[0]


def triad_from_pair(pair: CommutingPair) -> Triad:
    """Complete a commuting basis pair with h3, the unit blade along h1 h2."""
    prod = pair.h1 * pair.h2
    found = _unit_blade(prod)
    if found is None:
        raise InvalidPair("h1 h2 is not a signed basis blade")
    sign, mask = found
    h3 = Multivector.blade(mask)
    for a, b in itertools.combinations((pair.h1, pair.h2, h3), 2):
        if not commutator(a, b).is_zero():
            raise InvalidPair("triad elements do not commute")
    return Triad(pair.h1, pair.h2, h3, sign)


def canonical_triad() -> Triad:
    return triad_from_pair(canonical_pair())


def unitary_element(a, t: Triad) -> Multivector:
    """h = a0 + a1 h1 + a2 h2 + a3 h3 with exact coefficients."""
    coeffs = [Fraction(0)] * DIM
    coeffs[0] = Fraction(a[0])
    for x, h in zip(a[1:], t):
        sign, mask = _unit_blade(h)
        coeffs[mask] += sign * Fraction(x)
    return Multivector(coeffs)


def unitary_square(a, t: Triad) -> Multivector:
    """h^2 by blade arithmetic, exact for rational coefficients."""
    h = unitary_element(a, t)
    return h * h


def uniteq_coefficients(a, sign: int = -1) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Closed-form components of h^2 on (1, h1, h2, h3) when h1 h2 = sign * h3."""
    a0, a1, a2, a3 = (Fraction(x) for x in a)
    return (
        a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3,
        2 * (a0 * a1 + sign * a2 * a3),
        2 * (a0 * a2 + sign * a1 * a3),
        2 * (a0 * a3 + sign * a1 * a2),
    )


def decompose_on_triad(x: Multivector, t: Triad):
    """Components of ``x`` on (1, h1, h2, h3), or None if ``x`` leaves that span."""
    parts = [x.scalar_part()]
    rest = x - Multivector.scalar(x.scalar_part())
    for h in t:
        s, mask = _unit_blade(h)
        c = x.coeffs[mask] * s
        parts.append(c)
        rest = rest - c * h
    if not rest.is_zero():
        return None
    return tuple(parts)


@dataclass(frozen=True)
class UnitarySolution:
    a: tuple[Fraction, Fraction, Fraction, Fraction]
    family: str

    @property
    def a0(self):
        return self.a[0]

    @property
    def a1(self):
        return self.a[1]

    @property
    def a2(self):
        return self.a[2]

    @property
    def a3(self):
        return self.a[3]


def family_of(a) -> str:
    nonzero = [x for x in a if x != 0]
    if len(nonzero) == 1:
        return "unit"
    if len(set(a)) == 1:
        return "half-uniform"
    return "half-mixed"


def _characters(sign: int):
    """Joint eigenvalues of (1, h1, h2, h3) on the four common eigenspaces."""
    return [(1, e1, e2, sign * e1 * e2) for e1 in (1, -1) for e2 in (1, -1)]


def closed_form_solutions(t: Triad) -> list[tuple[Fraction, ...]]:
    """All real solutions of h^2 = 1.

    The triad spans a commutative algebra isomorphic to R^4 through its four
    characters, so h^2 = 1 exactly when h takes the value +1 or -1 on each
    character.  The character matrix M satisfies M^T M = 4, giving the 16
    solutions a = M^T s / 4 for s in {+1, -1}^4.
    """
    m = [[Fraction(x) for x in row] for row in _characters(t.sign)]
    out = []
    for s in itertools.product((1, -1), repeat=4):
        a = tuple(sum(m[r][c] * s[r] for r in range(4)) / 4 for c in range(4))
        out.append(a)
    return out


def brute_force_solutions(t: Triad, grid=GRID) -> list[tuple[Fraction, ...]]:
    """Candidates on ``grid``^4 whose square is 1 under blade arithmetic."""
    one = Multivector.scalar(Fraction(1))
    return [a for a in itertools.product(grid, repeat=4) if unitary_square(a, t).equals(one)]


def enumerate_unitary(t: Triad | None = None) -> list[UnitarySolution]:
    """The 16 unitary elements over a triad, cross-checked by grid search."""
    t = t if t is not None else canonical_triad()
    closed = closed_form_solutions(t)
    brute = brute_force_solutions(t)
    if set(closed) != set(brute) or len(closed) != 16:
        raise CensusMismatch(f"closed form gives {len(set(closed))} solutions, grid search {len(set(brute))}")
    one = Multivector.scalar(Fraction(1))
    for a in closed:
        if not unitary_square(a, t).equals(one):
            raise CensusMismatch(f"{a} does not square to 1")
    return [UnitarySolution(a, family_of(a)) for a in closed]


def census(solutions) -> dict[str, int]:
    counts = {"unit": 0, "half-mixed": 0, "half-uniform": 0}
    for s in solutions:
        counts[s.family] += 1
    return counts


def diagonal_signature(s, t: Triad | None = None, tol: float = 1e-10) -> tuple[int, int, int, int]:
    """Diagonal of rep(h), which must be diagonal with entries +/-1."""
    t = t if t is not None else canonical_triad()
    a = s.a if isinstance(s, UnitarySolution) else tuple(s)
    m = rep(unitary_element(a, t))
    if not is_diagonal(m, tol):
        raise NonDiagonalRep(f"rep of h{a} is not diagonal")
    diag = np.diag(m)
    out = []
    for z in diag:
        if abs(z - 1) <= tol:
            out.append(1)
        elif abs(z + 1) <= tol:
            out.append(-1)
        else:
            raise NonDiagonalRep(f"diagonal entry {z} of rep(h{a}) is not +/-1")
    return tuple(out)


# -- quantum numbers and Table 1 ------------------------------------------------

R = Fraction
#: Table 1 row order with designations; four rows are deliberately unnamed
TABLE_ROWS: tuple[tuple[tuple[Fraction, ...], str], ...] = (
    ((R(1), R(0), R(0), R(0)), ""),
    ((R(0), R(1), R(0), R(0)), "up"),
    ((R(0), R(0), R(1), R(0)), "anti-down"),
    ((R(0), R(0), R(0), R(1)), "positron"),
    ((R(-1), R(0), R(0), R(0)), ""),
    ((R(0), R(-1), R(0), R(0)), "anti-up"),
    ((R(0), R(0), R(-1), R(0)), "down"),
    ((R(0), R(0), R(0), R(-1)), "electron"),
    ((-HALF, -HALF, HALF, HALF), "anti-strange"),
    ((-HALF, HALF, -HALF, HALF), "charm"),
    ((-HALF, HALF, HALF, -HALF), ""),
    ((HALF, -HALF, -HALF, HALF), ""),
    ((HALF, -HALF, HALF, -HALF), "anti-charm"),
    ((HALF, HALF, -HALF, -HALF), "strange"),
    ((HALF, HALF, HALF, HALF), "anti-mu"),
    ((-HALF, -HALF, -HALF, -HALF), "mu"),
)
DESIGNATIONS = dict(TABLE_ROWS)


@dataclass(frozen=True)
class QuantumRow:
    a: tuple[Fraction, Fraction, Fraction, Fraction]
    lambda3: Fraction
    lambda8: float
    lambda15: float
    q: Fraction
    i3: Fraction
    designation: str = ""
    # rational multipliers of 1/sqrt(3) and sqrt(2/3), kept for pretty printing
    lambda8_over: Fraction = Fraction(0)
    lambda15_over: Fraction = Fraction(0)


def charge(a) -> Fraction:
    """q = (2 a1 + a2 + 3 a3) / 3."""
    _, a1, a2, a3 = (Fraction(x) for x in a)
    return (2 * a1 + a2 + 3 * a3) / 3


def isospin(a) -> Fraction:
    return sum((Fraction(x) for x in a), Fraction(0)) / 2


def quantum_numbers(s) -> QuantumRow:
    a = tuple(Fraction(x) for x in (s.a if isinstance(s, UnitarySolution) else s))
    _, a1, a2, a3 = a
    l8 = 2 * a1 + a2 + a3
    l15 = a1 - a2 - a3
    return QuantumRow(
        a=a,
        lambda3=a2 - a3,
        lambda8=float(l8) / math.sqrt(3.0),
        lambda15=math.sqrt(2.0 / 3.0) * float(l15),
        q=charge(a),
        i3=isospin(a),
        designation=DESIGNATIONS.get(a, ""),
        lambda8_over=l8,
        lambda15_over=l15,
    )


def table_rows(t: Triad | None = None) -> list[QuantumRow]:
    """Table 1 in its printed row order, each row checked against the enumeration."""
    found = {s.a for s in enumerate_unitary(t)}
    ordered = [a for a, _ in TABLE_ROWS]
    if set(ordered) != found:
        raise CensusMismatch("enumerated solutions differ from the tabulated rows")
    return [quantum_numbers(a) for a in ordered]


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_decimal(x: float) -> str:
    return format(float(x) + 0.0, ".17g")


def _surd_names():
    s3, s6 = math.sqrt(3.0), math.sqrt(6.0)
    base = {
        1 / s3: "1/sqrt(3)",
        2 / s3: "2/sqrt(3)",
        math.sqrt(2.0 / 3.0): "sqrt(2/3)",
        math.sqrt(3.0 / 2.0): "sqrt(3/2)",
        1 / s6: "1/sqrt(6)",
    }
    out = [(0.0, "0")]
    for value, name in base.items():
        out.append((value, name))
        out.append((-value, "-" + name))
    return out


_SURDS = _surd_names()


def format_surd(x: float, tol: float = 1e-12) -> str:
    """Pretty form for the handful of surds in Table 1, else decimals."""
    for value, name in _SURDS:
        if abs(x - value) <= tol:
            return name
    return format_decimal(x)


COLUMNS = ("a0", "a1", "a2", "a3", "lambda3", "lambda8", "lambda15", "q", "i3", "designation")


def _row_json(r: QuantumRow) -> dict:
    def rat(x):
        return {"num": x.numerator, "den": x.denominator}

    return {
        "a0": rat(r.a[0]),
        "a1": rat(r.a[1]),
        "a2": rat(r.a[2]),
        "a3": rat(r.a[3]),
        "lambda3": rat(r.lambda3),
        "lambda8": float(format_decimal(r.lambda8)),
        "lambda15": float(format_decimal(r.lambda15)),
        "q": rat(r.q),
        "i3": rat(r.i3),
        "designation": r.designation,
    }


def table_emit(fmt: str = "text", rows: list[QuantumRow] | None = None) -> str:
    """Render Table 1 as ``text``, ``csv`` or ``json``."""
    rows = rows if rows is not None else table_rows()
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(COLUMNS)
        for r in rows:
            writer.writerow(
                [format_rational(x) for x in r.a]
                + [format_rational(r.lambda3), format_decimal(r.lambda8), format_decimal(r.lambda15)]
                + [format_rational(r.q), format_rational(r.i3), r.designation]
            )
        return buf.getvalue()
    if fmt == "json":
        return json.dumps({"schema": 1, "columns": list(COLUMNS), "rows": [_row_json(r) for r in rows]}, indent=2) + "\n"
    if fmt == "text":
        cells = [list(COLUMNS)]
        for r in rows:
            cells.append(
                [format_rational(x) for x in r.a]
                + [format_rational(r.lambda3), format_surd(r.lambda8), format_surd(r.lambda15)]
                + [format_rational(r.q), format_rational(r.i3), r.designation]
            )
        widths = [max(len(row[c]) for row in cells) for c in range(len(COLUMNS))]
        lines = ["  ".join(cell.rjust(w) if c < 9 else cell for c, (cell, w) in enumerate(zip(row, widths))).rstrip() for row in cells]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown table format {fmt!r}")
