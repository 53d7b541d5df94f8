"""Instance ingestion, normalization to unit right-hand side, and the two
feasibility prechecks that gate the inversion engine.

The polytope is {x in R^n, x >= 0, Ax <= b} with b > 0 componentwise.
Dividing row i by b_i leaves the body (and hence its volume) unchanged
and puts the right-hand side at the all-ones vector, which is the only
form the symbolic engine consumes.  Two exact LPs then certify the
engine's hypotheses:

* compactness: some u >= 0 has A'u >= 1 in every coordinate, which
  bounds the body (and yields the Monte Carlo box bound u'b);
* pointedness / strict interior: some c > 0 has A'c > 0 componentwise,
  found by maximizing a margin t over {c >= t, A'c >= t, sum(c) <= 1}
  and accepting iff the optimum is strictly positive.  This c seeds the
  integration abscissae.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional, Sequence, Tuple

from . import lp
from .errors import EmptyAfterCleanup, NonpositiveB, NotCompact, NotPointed
from .linforms import rat

Row = Tuple[Fraction, ...]
Matrix = Tuple[Row, ...]


@dataclass(frozen=True)
class PolytopeInstance:
    """Raw half-space data: rows of A and the right-hand side b."""

    rows: Matrix
    rhs: Tuple[Fraction, ...]

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])


def make_instance(A: Sequence[Sequence], b: Sequence) -> PolytopeInstance:
    rows = tuple(tuple(rat(v) for v in row) for row in A)
    rhs = tuple(rat(v) for v in b)
    if not rows or not rows[0]:
        raise ValueError("need m >= 1 constraint rows and n >= 1 columns")
    if any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("ragged constraint matrix")
    if len(rhs) != len(rows):
        raise ValueError("b length must match the number of rows")
    return PolytopeInstance(rows, rhs)


@dataclass(frozen=True)
class NormalizedInstance:
    """Validated instance with implied right-hand side all-ones.

    Only constructed once both prechecks passed, so ``compact`` and
    ``pointed`` are always True on live objects; they are kept as fields
    because reports print them.
    """

    rows: Matrix
    compact: bool
    pointed: bool
    interior: Tuple[Fraction, ...]       # c > 0 with A'c > 0, integer-scaled
    box_witness: Tuple[Fraction, ...]    # u >= 0 with A'u >= 1
    dropped_vacuous: int
    merged_duplicates: int

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])


def scale_and_dedupe(inst: PolytopeInstance) -> Tuple[Matrix, int, int]:
    """Divide each row by its b entry, drop vacuous all-zero rows and
    merge duplicates.  Returns (rows, dropped, merged)."""
    bad = [i for i, bi in enumerate(inst.rhs) if bi <= 0]
    if bad:
        raise NonpositiveB(f"b must be strictly positive; offending rows: {bad}")
    seen = []
    dropped = merged = 0
    for row, bi in zip(inst.rows, inst.rhs):
        scaled = tuple(v / bi for v in row)
        if all(v == 0 for v in scaled):
            dropped += 1
            continue
        if scaled in seen:
            merged += 1
            continue
        seen.append(scaled)
    if not seen:
        raise EmptyAfterCleanup("no nontrivial constraint row survived cleanup")
    return tuple(seen), dropped, merged


def compact_witness(rows: Matrix) -> Optional[Tuple[Fraction, ...]]:
    """A u >= 0 with A'u >= 1 in every coordinate, or None if the body
    is unbounded."""
    m, n = len(rows), len(rows[0])
    system = [lp.ineq(_unit(m, i), ">=", 0) for i in range(m)]
    for j in range(n):
        system.append(lp.ineq([rows[i][j] for i in range(m)], ">=", 1))
    feasible, u = lp.lp_feasible(m, system)
    return u if feasible else None


def check_compact(rows: Matrix) -> bool:
    """True iff {x >= 0, Ax <= 1} is bounded."""
    return compact_witness(rows) is not None


def find_strict_interior(rows: Matrix) -> Tuple[Fraction, ...]:
    """A strictly feasible c > 0 with A'c > 0, scaled to integers.

    Raises NotPointed when {x >= 0, Ax <= 0} has a nonzero solution, in
    which case no such c exists and the inversion integral is undefined.
    """
    m, n = len(rows), len(rows[0])
    # variables: c_1..c_m, t; maximize the margin t
    nv = m + 1
    system = [lp.ineq(_unit(nv, i), ">=", 0) for i in range(nv)]
    for i in range(m):
        coeffs = list(_unit(nv, i))
        coeffs[m] = Fraction(-1)
        system.append(lp.ineq(coeffs, ">=", 0))           # c_i - t >= 0
    for j in range(n):
        coeffs = [rows[i][j] for i in range(m)] + [Fraction(-1)]
        system.append(lp.ineq(coeffs, ">=", 0))           # (A'c)_j - t >= 0
    system.append(lp.ineq([Fraction(1)] * m + [Fraction(0)], "<=", 1))
    objective = [Fraction(0)] * m + [Fraction(1)]
    status, x, t_star = lp.maximize(nv, objective, system)
    assert status == lp.OPTIMAL  # feasible at 0 and bounded by sum(c) <= 1
    if t_star <= 0:
        raise NotPointed(
            "no c > 0 with A'c > 0 exists; {x >= 0, Ax <= 0} has a nonzero solution"
        )
    c = _integerize(x[:m])
    _assert_strict(rows, c)
    return c


def normalize(inst: PolytopeInstance) -> NormalizedInstance:
    """Full ingestion pipeline: scale b to ones, clean rows, certify
    compactness and pointedness.  Raises on any failed gate."""
    rows, dropped, merged = scale_and_dedupe(inst)
    u = compact_witness(rows)
    if u is None:
        raise NotCompact("polytope is unbounded (no u >= 0 with A'u >= 1)")
    c = find_strict_interior(rows)
    return NormalizedInstance(
        rows=rows,
        compact=True,
        pointed=True,
        interior=c,
        box_witness=u,
        dropped_vacuous=dropped,
        merged_duplicates=merged,
    )


def _unit(k: int, i: int) -> Tuple[Fraction, ...]:
    return tuple(Fraction(1 if j == i else 0) for j in range(k))


def _integerize(values: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    scale = lcm(*(v.denominator for v in values)) if values else 1
    return tuple(v * scale for v in values)


def _assert_strict(rows: Matrix, c: Sequence[Fraction]) -> None:
    assert all(v > 0 for v in c)
    n = len(rows[0])
    for j in range(n):
        assert sum(rows[i][j] * c[i] for i in range(len(rows))) > 0
