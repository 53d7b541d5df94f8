"""Direct inversion: integrate exp(l1+..+lm) * G over l1..lm by residues.

G is the reciprocal of the product of the m variable factors l_i and
the n column factors (A'l)_j.  Levels 1..m-1 are residue integrations
in ascending variable order; the last variable is evaluated in closed
form.  The level-k node count is bounded by (n+1)^k, which the driver
asserts on every run.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import DegenerateInstance
from .linforms import LinForm, rat
from .polytope import NormalizedInstance
from .terms import (
    ContourConfig,
    LevelStats,
    SideRule,
    Term,
    final_level_value,
    integrate_level,
)


@dataclass(frozen=True)
class DirectRun:
    instance: NormalizedInstance
    config: ContourConfig
    levels: Tuple[LevelStats, ...]
    result: Fraction


def column_factors(rows) -> List[LinForm]:
    """The n forms (A'l)_j = sum_i A[i][j] * l_i, variables 1-based."""
    m, n = len(rows), len(rows[0])
    return [
        LinForm([(i + 1, rows[i][j]) for i in range(m)]) for j in range(n)
    ]


def initial_term(norm: NormalizedInstance) -> Term:
    """exp(l1+..+lm) over the product of all m+n simple factors.

    Any two proportional factors would create a repeated pole at level
    one already, so they are rejected here with a hint; axis-parallel
    constraint rows (boxes) are the typical trigger.
    """
    m = norm.m
    factors = [LinForm.var(i) for i in range(1, m + 1)] + column_factors(norm.rows)
    if m == 1:
        # no intermediate level exists: every factor is a multiple of l1
        # (the single row is positive by compactness) and the repeated
        # root is exactly the closed-form final-level shape
        assert all(f.is_multiple_of_var(1) for f in factors)
    else:
        for a in range(len(factors)):
            for b in range(a + 1, len(factors)):
                if factors[a].parallel(factors[b]):
                    raise DegenerateInstance(
                        f"coincident denominator factors ({factors[a]}) and "
                        f"({factors[b]}): a constraint row is proportional to a "
                        "coordinate axis or to another column factor. Perturb A "
                        "slightly (approximate result) or use the known-volume "
                        "generators for such shapes."
                    )
    exponent = LinForm([(i, 1) for i in range(1, m + 1)])
    return Term(Fraction(1), exponent, tuple((f, 1) for f in factors))


def _direct_domain(rows):
    m, n = len(rows), len(rows[0])

    def ok(abscissae) -> bool:
        c = [abscissae[i] for i in range(1, m + 1)]
        if any(v <= 0 for v in c):
            return False
        return all(
            sum(rows[i][j] * c[i] for i in range(m)) > 0 for j in range(n)
        )

    return ok


def run_direct(
    norm: NormalizedInstance, abscissae: Optional[Sequence] = None
) -> DirectRun:
    """Full direct-method run; ``abscissae`` overrides the LP-found
    contour seed c (it must still satisfy c > 0 and A'c > 0)."""
    m, n = norm.m, norm.n
    c = _contour_seed(norm, abscissae)
    config = ContourConfig(
        {i + 1: c[i] for i in range(m)}, domain_ok=_direct_domain(norm.rows)
    )
    terms: List[Term] = [initial_term(norm)]
    history: list = []
    levels: List[LevelStats] = []
    for k in range(1, m):
        terms, config, stats = integrate_level(
            terms, k, config, SideRule.BY_EXPONENT_SIGN, history
        )
        levels.append(stats)
        assert len(terms) <= (n + 1) ** k, "level node bound (n+1)^k exceeded"
    for t in terms:
        assert t.total_multiplicity == n + 1, "final-level degree bookkeeping"
    result = sum((final_level_value(t, m) for t in terms), Fraction(0))
    levels.append(
        LevelStats(var=m, terms_in=len(terms), poles_found=0, left=0, right=0,
                   repaired=0, terms_out=len(terms))
    )
    return DirectRun(norm, config, tuple(levels), result)


def volume_direct(norm: NormalizedInstance, abscissae: Optional[Sequence] = None) -> Fraction:
    return run_direct(norm, abscissae).result


def _contour_seed(norm: NormalizedInstance, abscissae: Optional[Sequence]) -> Tuple[Fraction, ...]:
    if abscissae is None:
        return norm.interior
    c = tuple(rat(v) for v in abscissae)
    if len(c) != norm.m:
        raise ValueError(f"need {norm.m} abscissae, got {len(c)}")
    if not _direct_domain(norm.rows)({i + 1: c[i] for i in range(norm.m)}):
        raise ValueError("abscissae must satisfy c > 0 and A'c > 0")
    return c
