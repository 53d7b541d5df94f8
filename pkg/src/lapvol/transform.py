"""Associated-transform inversion: trade the exponentials for one extra
variable p.

Substituting l1 = p - (l2+..+lm) turns the integrand into a pure
rational function; integrating l2..lm leaves a function of p that must
be C / p^(n+1) for a single constant C, and the volume is C / n!.  The
closure side at each level is free (both agree up to sign), so the
driver picks whichever half-plane holds fewer poles.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import List, Optional, Sequence, Tuple

from .errors import DegenerateInstance, MalformedH
from .linforms import LinForm, P_VAR, rat
from .polytope import NormalizedInstance
from .terms import (
    ContourConfig,
    LevelStats,
    SideRule,
    Term,
    integrate_level,
)


@dataclass(frozen=True)
class TransformRun:
    instance: NormalizedInstance
    config: ContourConfig
    levels: Tuple[LevelStats, ...]
    H_coefficient: Fraction  # the C of H(p) = C / p^(n+1)
    result: Fraction


def substituted_term(norm: NormalizedInstance) -> Term:
    """The pure-rational integrand after eliminating l1 = p - sum(l_j).

    Exponent is identically zero: the exp(zp) factor lives outside the
    inner integrals and is inverted analytically at the end.
    """
    m = norm.m
    rows = norm.rows
    l1_root = LinForm([(P_VAR, 1)] + [(j, -1) for j in range(2, m + 1)])
    factors = [l1_root] + [LinForm.var(j) for j in range(2, m + 1)]
    for j in range(norm.n):
        col = LinForm([(i + 1, rows[i][j]) for i in range(norm.m)])
        factors.append(col.substitute(1, l1_root))
    assert all(not f.is_zero for f in factors)
    if m > 1:
        for a in range(len(factors)):
            for b in range(a + 1, len(factors)):
                if factors[a].parallel(factors[b]):
                    raise DegenerateInstance(
                        f"coincident denominator factors ({factors[a]}) and "
                        f"({factors[b]}) after the p-substitution. Perturb A "
                        "slightly (approximate result) or use the known-volume "
                        "generators for such shapes."
                    )
    return Term(Fraction(1), LinForm.zero(), tuple((f, 1) for f in factors))


def _transform_domain(rows):
    """Strict feasibility in the substituted coordinates: the vector
    (d - sum(c_j), c_2, .., c_m) must stay in {y > 0, A'y > 0}."""
    m, n = len(rows), len(rows[0])

    def ok(abscissae) -> bool:
        tail = [abscissae[j] for j in range(2, m + 1)]
        y = [abscissae[P_VAR] - sum(tail)] + tail
        if any(v <= 0 for v in y):
            return False
        return all(
            sum(rows[i][j] * y[i] for i in range(m)) > 0 for j in range(n)
        )

    return ok


def run_transform(
    norm: NormalizedInstance,
    abscissae: Optional[Sequence] = None,
    force_sides: Optional[dict] = None,
) -> TransformRun:
    """Full transform-method run.

    ``abscissae`` overrides the contour seed c (length m; d = sum(c) is
    derived).  ``force_sides`` maps a lambda index to a Side and exists
    for the side-independence tests.
    """
    m, n = norm.m, norm.n
    c = _seed(norm, abscissae)
    d = sum(c, Fraction(0))
    points = {j: c[j - 1] for j in range(2, m + 1)}
    points[P_VAR] = d
    config = ContourConfig(points, domain_ok=_transform_domain(norm.rows))
    terms: List[Term] = [substituted_term(norm)]
    history: list = []
    levels: List[LevelStats] = []
    for k in range(2, m + 1):
        assert all(t.exponent.is_zero for t in terms), "transform terms grew an exponential"
        force = (force_sides or {}).get(k)
        terms, config, stats = integrate_level(
            terms, k, config, SideRule.FEWER_POLES, history, force_side=force
        )
        levels.append(stats)
        assert len(terms) <= (n + 1) ** (k - 1), "level node bound (n+1)^k exceeded"
    C = Fraction(0)
    for t in terms:
        if not t.exponent.is_zero:
            raise MalformedH(f"surviving term carries an exponential: {t}")
        q = 0
        K = t.coeff
        for factor, mult in t.denom:
            if not factor.is_multiple_of_var(P_VAR):
                raise MalformedH(f"surviving denominator factor {factor} is not a power of p")
            K /= factor.coeff(P_VAR) ** mult
            q += mult
        if q != n + 1:
            raise MalformedH(f"surviving term has p-multiplicity {q}, expected {n + 1}")
        C += K
    return TransformRun(norm, config, tuple(levels), C, C / factorial(n))


def volume_transform(norm: NormalizedInstance, abscissae: Optional[Sequence] = None) -> Fraction:
    return run_transform(norm, abscissae).result


def _seed(norm: NormalizedInstance, abscissae: Optional[Sequence]) -> Tuple[Fraction, ...]:
    if abscissae is None:
        return norm.interior
    c = tuple(rat(v) for v in abscissae)
    if len(c) != norm.m:
        raise ValueError(f"need {norm.m} abscissae, got {len(c)}")
    if any(v <= 0 for v in c):
        raise ValueError("abscissae must be positive")
    n = norm.n
    for j in range(n):
        if sum(norm.rows[i][j] * c[i] for i in range(norm.m)) <= 0:
            raise ValueError("abscissae must satisfy A'c > 0")
    return c
