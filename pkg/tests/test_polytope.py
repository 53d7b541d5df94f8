"""Normalization and the two feasibility gates."""
import random
from fractions import Fraction

import pytest

import lapvol as lv
from lapvol import lp
from lapvol.polytope import (
    check_compact,
    compact_witness,
    find_strict_interior,
    make_instance,
    normalize,
    scale_and_dedupe,
)

from conftest import draw_valid_instance


def F(v):
    return Fraction(v)


def rows_of(*rows):
    return tuple(tuple(Fraction(v) for v in r) for r in rows)


# -- scaling / cleanup -------------------------------------------------


def test_scale_noop_on_unit_rhs():
    inst = make_instance([[1, 1], [-2, 2], [2, -1]], [1, 1, 1])
    rows, dropped, merged = scale_and_dedupe(inst)
    assert rows == inst.rows and dropped == 0 and merged == 0


def test_scale_divides_rows():
    inst = make_instance([[2, 2]], [2])
    rows, _, _ = scale_and_dedupe(inst)
    assert rows == rows_of((1, 1))


def test_scale_merges_duplicates():
    inst = make_instance([[1, 1], [2, 2]], [1, 2])
    rows, dropped, merged = scale_and_dedupe(inst)
    assert rows == rows_of((1, 1)) and merged == 1


def test_vacuous_rows_dropped():
    inst = make_instance([[0, 0], [1, 1]], [1, 1])
    rows, dropped, _ = scale_and_dedupe(inst)
    assert rows == rows_of((1, 1)) and dropped == 1


def test_nonpositive_b_rejected():
    with pytest.raises(lv.NonpositiveB):
        scale_and_dedupe(make_instance([[1, 1]], [0]))
    with pytest.raises(lv.NonpositiveB):
        scale_and_dedupe(make_instance([[1, 1], [1, 2]], [1, -3]))


def test_empty_after_cleanup():
    with pytest.raises(lv.EmptyAfterCleanup):
        scale_and_dedupe(make_instance([[0, 0]], [5]))


# -- compactness -------------------------------------------------------


def test_compact_worked_example():
    assert check_compact(rows_of((1, 1), (-2, 2), (2, -1)))


def test_compact_unit_box_pattern():
    assert check_compact(rows_of((1, 0), (0, 1)))


def test_not_compact_single_row():
    assert not check_compact(rows_of((1, -1)))


def test_compact_witness_verifies():
    rows = rows_of((1, 1), (-2, 2), (2, -1))
    u = compact_witness(rows)
    assert u is not None and all(v >= 0 for v in u)
    for j in range(2):
        assert sum(rows[i][j] * u[i] for i in range(3)) >= 1


# -- strict interior / pointedness -------------------------------------


def test_interior_worked_example():
    rows = rows_of((1, 1), (-2, 2), (2, -1))
    c = find_strict_interior(rows)
    assert all(v > 0 for v in c)
    for j in range(2):
        assert sum(rows[i][j] * c[i] for i in range(3)) > 0
    # the worked contour (3,2,1) is itself a valid witness of the system
    hand = (F(3), F(2), F(1))
    assert all(v > 0 for v in hand)
    for j in range(2):
        assert sum(rows[i][j] * hand[i] for i in range(3)) > 0


def test_interior_identity_rows():
    c = find_strict_interior(rows_of((1, 0), (0, 1)))
    assert all(v > 0 for v in c)


def test_not_pointed():
    with pytest.raises(lv.NotPointed):
        find_strict_interior(rows_of((-1, 1)))


def test_normalize_full_pipeline():
    inst, _ = lv.paper_example()
    norm = normalize(inst)
    assert norm.compact and norm.pointed
    assert norm.m == 3 and norm.n == 2
    assert all(v > 0 for v in norm.interior)


def test_normalize_rejects_unbounded():
    with pytest.raises(lv.NotCompact):
        normalize(make_instance([[1, -1]], [1]))


# -- cross-checks against independent formulations ---------------------


def _recession_direction(rows):
    """Nonzero d >= 0 with Ad <= 0, found by an LP on the primal side."""
    m, n = len(rows), len(rows[0])
    system = [lp.ineq([1 if j == i else 0 for j in range(n)], ">=", 0) for i in range(n)]
    for row in rows:
        system.append(lp.ineq(list(row), "<=", 0))
    system.append(lp.ineq([1] * n, ">=", 1))
    ok, d = lp.lp_feasible(n, system)
    return d if ok else None


@pytest.mark.parametrize("seed", range(6))
def test_noncompact_has_recession_direction(seed):
    rng = random.Random(seed)
    found = 0
    for _ in range(60):
        inst = lv.random_instance(rng, rng.randint(1, 3), rng.randint(1, 3), signed=True)
        rows, _, _ = scale_and_dedupe(inst)
        if check_compact(rows):
            continue
        d = _recession_direction(rows)
        assert d is not None
        assert any(v > 0 for v in d) and all(v >= 0 for v in d)
        for row in rows:
            assert sum(r * v for r, v in zip(row, d)) <= 0
        found += 1
    assert found > 0


def _bounded_by_coordinate_lps(rows):
    """Boundedness oracle: max x_j over {x >= 0, Ax <= 1} finite for all j."""
    m, n = len(rows), len(rows[0])
    system = [lp.ineq([1 if k == j else 0 for k in range(n)], ">=", 0) for j in range(n)]
    for row in rows:
        system.append(lp.ineq(list(row), "<=", 1))
    for j in range(n):
        obj = [1 if k == j else 0 for k in range(n)]
        status, *_ = lp.maximize(n, obj, system)
        if status == lp.UNBOUNDED:
            return False
        assert status == lp.OPTIMAL
    return True


@pytest.mark.parametrize("seed", range(6))
def test_gates_match_boundedness_oracle(seed):
    # pointedness and compactness both coincide with LP boundedness in
    # every coordinate direction on small instances
    rng = random.Random(100 + seed)
    for _ in range(25):
        inst = lv.random_instance(rng, rng.randint(1, 3), rng.randint(1, 3), signed=True)
        rows, _, _ = scale_and_dedupe(inst)
        bounded = _bounded_by_coordinate_lps(rows)
        assert check_compact(rows) == bounded
        pointed = True
        try:
            find_strict_interior(rows)
        except lv.NotPointed:
            pointed = False
        assert pointed == bounded


def test_normalize_preserves_volume_monte_carlo():
    rng = random.Random(77)
    inst, _, exact = draw_valid_instance(rng, 2, 2)
    # scale b away from 1, then check the normalized body has the stated
    # volume relation via two independent MC estimates
    t = Fraction(3, 2)
    scaled = make_instance(inst.rows, [t * b for b in inst.rhs])
    est_scaled = lv.mc_volume(scaled, 200_000, seed=13)
    est_norm = lv.mc_volume(inst, 200_000, seed=14)
    # vol(scaled) = t^n vol(input); each estimate within 3 stderr
    n = inst.n
    assert abs(est_norm.estimate - float(exact)) <= 3 * est_norm.stderr + 1e-12
    assert abs(est_scaled.estimate - float(t**n * exact)) <= 3 * est_scaled.stderr + 1e-12
