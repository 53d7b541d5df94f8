"""Shared symbolic machinery for iterated Bromwich integration.

A :class:`Term` is one summand of a partially integrated integrand,

    coeff * exp(L) / product(factor_i ** mult_i),

where L and every factor are homogeneous linear forms over the not yet
integrated variables (evaluated at z = 1 throughout).  Integrating one
variable along its vertical path Re(var) = c_var turns a list of terms
into a new list via Cauchy residues at simple poles:

* each denominator factor containing the variable contributes a pole at
  its root, a linear form in the later variables;
* the side of the root relative to the path picks whether the left or
  right half-plane closure collects it; right closures are traversed
  clockwise, so their residue sum enters with a minus sign;
* poles landing exactly on a path are repaired by nudging that path's
  abscissa (the on-line perturbation), never by moving the pole.

Repeated roots before the final level mean the data are degenerate and
are rejected rather than differentiated through.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import DegenerateInstance, DivergentSlice
from .linforms import LinForm, rat, var_name


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"
    ON_PATH = "on-path"


class SideRule(enum.Enum):
    """How integrate_var picks the closure half-plane.

    BY_EXPONENT_SIGN: decay side of exp(a*var) (a > 0 left, a < 0
    right); terms with a = 0 fall back to the fewer-poles choice, which
    needs denominator degree >= 2.  FEWER_POLES: pure-rational terms
    only; both closures agree up to sign, so take the cheaper one.
    """

    BY_EXPONENT_SIGN = "by-exponent-sign"
    FEWER_POLES = "fewer-poles"


@dataclass(frozen=True)
class Term:
    coeff: Fraction
    exponent: LinForm
    denom: Tuple[Tuple[LinForm, int], ...]

    def __post_init__(self):
        for f, mult in self.denom:
            assert not f.is_zero and mult >= 1, "denominator factors must be nonzero"

    def degree_in(self, var: int) -> int:
        return sum(mult for f, mult in self.denom if f.coeff(var) != 0)

    @property
    def total_multiplicity(self) -> int:
        return sum(mult for _, mult in self.denom)

    def __str__(self) -> str:
        den = " * ".join(
            f"({f})" if mult == 1 else f"({f})^{mult}" for f, mult in self.denom
        )
        return f"{self.coeff} * e^({self.exponent}) / [{den}]"


def make_term(coeff, exponent: LinForm, denom: Iterable[Tuple[LinForm, int]]) -> Term:
    return Term(rat(coeff), exponent, tuple((f, int(m)) for f, m in denom))


@dataclass(frozen=True)
class PoleSite:
    """One distinct root of the current variable in a term's denominator."""

    root: LinForm
    leading: Fraction
    side: Side
    order: int


@dataclass(frozen=True)
class PerturbationRecord:
    var: int
    delta: Fraction    # post-repair distance from the path to the nearest pole
    epsilon: Fraction  # how far the abscissa moved


@dataclass(frozen=True)
class ContourConfig:
    """Real abscissae of the vertical integration paths plus the ledger
    of on-line perturbations applied so far.

    ``domain_ok`` is the method-specific strict-feasibility predicate
    (condition (a) of the perturbation step); it receives a candidate
    abscissae mapping and must hold at all times.
    """

    abscissae: Mapping[int, Fraction]
    ledger: Tuple[PerturbationRecord, ...] = ()
    domain_ok: Callable[[Mapping[int, Fraction]], bool] = field(
        default=lambda _: True, compare=False, repr=False
    )

    def abscissa(self, var: int) -> Fraction:
        return self.abscissae[var]

    def with_abscissa(self, var: int, value: Fraction, record: PerturbationRecord) -> "ContourConfig":
        updated = dict(self.abscissae)
        updated[var] = value
        return ContourConfig(updated, self.ledger + (record,), self.domain_ok)


@dataclass(frozen=True)
class LevelStats:
    var: int
    terms_in: int
    poles_found: int
    left: int
    right: int
    repaired: int
    terms_out: int


# level history entries: (var, classified pole sites under the final config)
History = List[Tuple[int, Tuple[PoleSite, ...]]]


def poles_of(term: Term, var: int, config: ContourConfig) -> List[PoleSite]:
    """Distinct poles of the term in ``var``, classified against the
    path Re(var) = abscissa(var).

    Factors sharing a root are one site whose order is the sum of their
    multiplicities; root equality is exact LinForm equality, so scaled
    copies of a factor correctly pile up into a higher-order site.
    """
    groups: dict[LinForm, list] = {}
    for factor, mult in term.denom:
        if factor.coeff(var) == 0:
            continue
        leading, root = factor.solve_for(var)
        if root in groups:
            groups[root][0] += mult
        else:
            groups[root] = [mult, leading]
    path = config.abscissa(var)
    sites = []
    for root, (order, leading) in groups.items():
        value = root.evaluate(config.abscissae)
        if value < path:
            side = Side.LEFT
        elif value > path:
            side = Side.RIGHT
        else:
            side = Side.ON_PATH
        sites.append(PoleSite(root, leading, side, order))
    return sites


def residue_simple(term: Term, var: int, pole: PoleSite) -> Term:
    """Residue of the term at a simple pole, as a new term without ``var``.

    The vanishing factor is dropped and divides the coefficient by its
    leading coefficient; the root is substituted everywhere else.
    """
    if pole.order != 1:
        raise DegenerateInstance(
            f"pole of order {pole.order} at {var_name(var)} = {pole.root}; "
            "coincident denominator factors before the final level. "
            "A tiny random perturbation of A removes the coincidence at the "
            "price of an approximate volume."
        )
    vanish_leading = None
    remaining = []
    for factor, mult in term.denom:
        if factor.coeff(var) != 0 and factor.solve_for(var)[1] == pole.root:
            assert vanish_leading is None and mult == 1
            vanish_leading = factor.coeff(var)
            continue
        remaining.append((factor, mult))
    assert vanish_leading is not None, "pole does not belong to this term"
    new_denom = tuple((f.substitute(var, pole.root), m) for f, m in remaining)
    return Term(
        term.coeff / vanish_leading,
        term.exponent.substitute(var, pole.root),
        new_denom,
    )


def integrate_var(
    terms: Sequence[Term],
    var: int,
    config: ContourConfig,
    rule: SideRule,
    force_side: Optional[Side] = None,
) -> List[Term]:
    """Integrate every term over Re(var) = abscissa(var) by residues.

    Precondition: no pole sits on the path (repair first with
    :func:`perturb_abscissa`).  ``force_side`` overrides the fewer-poles
    choice for zero-exponent terms; it exists for the side-consistency
    tests and must not be used when the exponent decides the side.
    """
    out: List[Term] = []
    for term in terms:
        sites = poles_of(term, var, config)
        if any(s.side is Side.ON_PATH for s in sites):
            raise RuntimeError(
                f"pole on the integration path Re({var_name(var)}); "
                "perturb_abscissa must run before integrate_var"
            )
        a = term.exponent.coeff(var)
        if rule is SideRule.FEWER_POLES:
            assert a == 0, "fewer-poles rule requires a pure-rational term"
        if rule is SideRule.BY_EXPONENT_SIGN and a != 0:
            side = Side.LEFT if a > 0 else Side.RIGHT
        else:
            # no exponential decay: both closures are valid only when the
            # integrand dies off at least quadratically
            if term.degree_in(var) < 2:
                raise DivergentSlice(
                    f"term {term} has degree {term.degree_in(var)} in "
                    f"{var_name(var)} and no exponential decay"
                )
            if force_side is not None:
                side = force_side
            else:
                n_left = sum(1 for s in sites if s.side is Side.LEFT)
                n_right = len(sites) - n_left
                side = Side.LEFT if n_left <= n_right else Side.RIGHT
        sign = 1 if side is Side.LEFT else -1
        for site in sites:
            if site.side is not side:
                continue
            res = residue_simple(term, var, site)
            out.append(res if sign == 1 else replace(res, coeff=-res.coeff))
    return out


def final_level_value(term: Term, var: int) -> Fraction:
    """Closed form of the last one-variable inversion integral.

    With every factor a multiple of ``var`` (total multiplicity q) and
    exponent a*var, the integral is K * a^(q-1) / (q-1)! for a > 0 and
    zero otherwise, where K divides the coefficient by the product of
    the factors' leading coefficients.
    """
    q = 0
    K = term.coeff
    for factor, mult in term.denom:
        assert factor.is_multiple_of_var(var), (
            f"final level expects pure multiples of {var_name(var)}, got {factor}"
        )
        K /= factor.coeff(var) ** mult
        q += mult
    assert set(term.exponent.variables) <= {var}
    alpha = term.exponent.coeff(var)
    if alpha <= 0:
        return Fraction(0)
    return K * alpha ** (q - 1) / factorial(q - 1)


def perturb_abscissa(
    config: ContourConfig,
    var: int,
    level_sites: Sequence[PoleSite],
    history: History,
) -> ContourConfig:
    """Move the path Re(var) off a colliding pole without disturbing any
    earlier classification.

    The shift epsilon > 0 is halved from 1 until three exact conditions
    hold: (a) the method's strict domain constraint still holds, (b) no
    pole of this level sits on the new path, (c) every pole recorded at
    the earlier levels keeps its original side once re-evaluated with
    the shifted abscissa.  A valid epsilon always exists because each
    condition is a finite set of strict inequalities satisfied for all
    small enough shifts.
    """
    values = sorted({site.root.evaluate(config.abscissae) for site in level_sites})
    path = config.abscissa(var)
    if path not in values:
        return config  # nothing on the path; no repair needed
    eps = Fraction(1)
    for _ in range(512):
        candidate = path + eps
        trial = dict(config.abscissae)
        trial[var] = candidate
        if (
            config.domain_ok(trial)
            and all(v != candidate for v in values)
            and _sides_stable(history, trial)
        ):
            delta = min(abs(v - candidate) for v in values)
            record = PerturbationRecord(var, delta, eps)
            return config.with_abscissa(var, candidate, record)
        eps /= 2
    raise AssertionError("no admissible perturbation found; cannot happen")


def _sides_stable(history: History, trial: Mapping[int, Fraction]) -> bool:
    for lvl_var, sites in history:
        path = trial[lvl_var]
        for site in sites:
            value = site.root.evaluate(trial)
            if site.side is Side.LEFT and not value < path:
                return False
            if site.side is Side.RIGHT and not value > path:
                return False
    return True


def integrate_level(
    terms: Sequence[Term],
    var: int,
    config: ContourConfig,
    rule: SideRule,
    history: History,
    force_side: Optional[Side] = None,
) -> Tuple[List[Term], ContourConfig, LevelStats]:
    """One full level: classify poles, repair on-path collisions, record
    the classification, then integrate.  Returns the new term list, the
    (possibly perturbed) config and the level diagnostics."""
    flat = [s for t in terms for s in poles_of(t, var, config)]
    repaired = 0
    if any(s.side is Side.ON_PATH for s in flat):
        config = perturb_abscissa(config, var, flat, history)
        repaired = 1
        flat = [s for t in terms for s in poles_of(t, var, config)]
        assert not any(s.side is Side.ON_PATH for s in flat)
    history.append((var, tuple(flat)))
    out = integrate_var(terms, var, config, rule, force_side)
    stats = LevelStats(
        var=var,
        terms_in=len(terms),
        poles_found=len(flat),
        left=sum(1 for s in flat if s.side is Side.LEFT),
        right=sum(1 for s in flat if s.side is Side.RIGHT),
        repaired=repaired,
        terms_out=len(out),
    )
    return out, config, stats
