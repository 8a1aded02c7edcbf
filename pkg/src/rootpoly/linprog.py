"""Exact rational linear programming.

A primal simplex on the standard form  max c.x  s.t.  A.x <= b, x >= 0,
b >= 0, using Bland's rule, so termination is guaranteed and every
comparison is exact.  The tableau is kept integral with a running
denominator (integer pivoting), which is much faster in Python than
Fraction entries; all reported values are exact Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

Rational = int | Fraction

OPTIMAL = "optimal"
UNBOUNDED = "unbounded"
STOPPED = "stopped"


@dataclass(frozen=True)
class SimplexResult:
    status: str
    value: Fraction
    x: tuple[Fraction, ...]


def _integer_row(row: Sequence[Rational], tail: Rational) -> tuple[list[int], int]:
    """Scale a row and its right-hand entry by the lcm of denominators."""
    fracs = [Fraction(v) for v in row]
    t = Fraction(tail)
    scale = lcm(t.denominator, *(f.denominator for f in fracs)) if fracs else t.denominator
    return [int(f * scale) for f in fracs], int(t * scale)


def simplex_maximize(
    objective: Sequence[Rational],
    lhs: Sequence[Sequence[Rational]],
    rhs: Sequence[Rational],
    stop_above: Rational | None = None,
) -> SimplexResult:
    """Maximise objective.x subject to lhs.x <= rhs, x >= 0.

    Requires rhs >= 0 so the slack basis is feasible.  When ``stop_above``
    is given, returns early (status "stopped") as soon as the objective
    value of the current basic solution exceeds it.
    """
    nv = len(objective)
    m = len(lhs)
    if len(rhs) != m:
        raise ValueError("lhs and rhs sizes differ")

    obj_scale = lcm(1, *(Fraction(v).denominator for v in objective)) if nv else 1
    obj_int = [int(Fraction(v) * obj_scale) for v in objective]

    width = nv + m + 1
    rows: list[list[int]] = []
    for i, row in enumerate(lhs):
        if len(row) != nv:
            raise ValueError("constraint row length mismatch")
        base, b = _integer_row(row, rhs[i])
        if b < 0:
            raise ValueError("rhs must be nonnegative for a slack starting basis")
        full = base + [0] * m + [b]
        full[nv + i] = 1
        rows.append(full)
    zrow = [-v for v in obj_int] + [0] * m + [0]

    basis = list(range(nv, nv + m))
    det = 1  # current tableau denominator, always positive
    target = None if stop_above is None else Fraction(stop_above)

    while True:
        # Bland: entering column = lowest index with negative reduced cost.
        enter = -1
        for j in range(nv + m):
            if zrow[j] < 0:
                enter = j
                break
        if enter < 0:
            status = OPTIMAL
            break
        # Ratio test, ties broken by lowest basic variable index (Bland).
        leave = -1
        for i in range(m):
            a = rows[i][enter]
            if a <= 0:
                continue
            if leave < 0:
                leave = i
                continue
            diff = rows[i][width - 1] * rows[leave][enter] - rows[leave][width - 1] * a
            if diff < 0 or (diff == 0 and basis[i] < basis[leave]):
                leave = i
        if leave < 0:
            status = UNBOUNDED
            break

        piv = rows[leave][enter]
        prow = rows[leave]
        for r in rows:
            if r is prow:
                continue
            f = r[enter]
            if f:
                for j in range(width):
                    r[j] = (r[j] * piv - f * prow[j]) // det
            else:
                for j in range(width):
                    r[j] = (r[j] * piv) // det
        f = zrow[enter]
        if f:
            for j in range(width):
                zrow[j] = (zrow[j] * piv - f * prow[j]) // det
        else:
            for j in range(width):
                zrow[j] = (zrow[j] * piv) // det
        det = piv
        basis[leave] = enter

        if target is not None and Fraction(zrow[width - 1], det * obj_scale) > target:
            status = STOPPED
            break

    if status == UNBOUNDED:
        return SimplexResult(UNBOUNDED, Fraction(0), tuple(Fraction(0) for _ in range(nv)))

    xs = [Fraction(0)] * nv
    for i, var in enumerate(basis):
        if var < nv:
            xs[var] = Fraction(rows[i][width - 1], det)
    value = Fraction(zrow[width - 1], det * obj_scale)
    return SimplexResult(status, value, tuple(xs))
