"""Exact scalar / linear-form algebra tests."""
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lapvol.errors import NotAPoleInVar
from lapvol.linforms import LinForm, P_VAR, rat, var_name


def lf(pairs):
    return LinForm(pairs)


def test_rat_parses_strings_and_ints():
    assert rat("-3/7") == Fraction(-3, 7)
    assert rat(5) == Fraction(5)
    assert rat(Fraction(2, 4)) == Fraction(1, 2)


def test_rat_refuses_floats():
    with pytest.raises(TypeError):
        rat(0.1)


def test_canonical_form_drops_zeros():
    f = lf([(1, 1), (2, 0), (3, "2/2"), (3, -1)])
    assert f.items() == ((1, Fraction(1)),)
    assert f.coeff(2) == 0
    assert not f.is_zero
    assert LinForm.zero().is_zero


def test_structural_equality_is_mathematical_equality():
    assert lf([(1, 2), (2, -4)]) == lf([(2, -4), (1, 2)])
    assert lf([(1, 1)]) - lf([(1, 1)]) == LinForm.zero()
    assert hash(lf([(1, 2)])) == hash(lf([(1, "2/1")]))


def test_ordering_of_p():
    assert P_VAR > 10**6
    assert var_name(P_VAR) == "p"
    assert var_name(3) == "l3"
    f = lf([(P_VAR, 1), (1, 1)])
    assert f.variables == (1, P_VAR)


def test_substitute_worked_example():
    # l1 -> 2*l2 - 2*l3 inside (l1 + 2*l2 - l3) gives 4*l2 - 3*l3
    target = lf([(1, 1), (2, 2), (3, -1)])
    root = lf([(2, 2), (3, -2)])
    assert target.substitute(1, root) == lf([(2, 4), (3, -3)])


def test_substitute_trivial_cases():
    assert lf([(1, 1), (2, 1), (3, 1)]).substitute(1, LinForm.zero()) == lf([(2, 1), (3, 1)])
    assert lf([(2, 3), (3, -1)]).substitute(2, LinForm.var(P_VAR)) == lf([(P_VAR, 3), (3, -1)])
    # var absent: unchanged
    f = lf([(2, 1)])
    assert f.substitute(1, lf([(3, 5)])) == f


def test_evaluate_paper_contour():
    f = lf([(1, 1), (2, -2), (3, 2)])
    assert f.evaluate({1: Fraction(3), 2: Fraction(2), 3: Fraction(1)}) == 1
    assert LinForm.zero().evaluate({}) == 0
    # the pathological equal-abscissae case evaluates to an exact zero
    assert lf([(3, 1), (2, -1)]).evaluate({2: Fraction(1), 3: Fraction(1)}) == 0


def test_evaluate_missing_variable():
    with pytest.raises(KeyError):
        lf([(1, 1), (2, 1)]).evaluate({1: Fraction(1)})


def test_solve_for_examples():
    leading, root = lf([(1, 1), (2, -2), (3, 2)]).solve_for(1)
    assert leading == 1 and root == lf([(2, 2), (3, -2)])

    a, b = Fraction(5, 3), Fraction(-7, 2)
    leading, root = lf([(1, a), (2, b)]).solve_for(1)
    assert leading == a and root == lf([(2, -b / a)])

    leading, root = LinForm.var(2).solve_for(2)
    assert leading == 1 and root.is_zero


def test_solve_for_absent_variable():
    with pytest.raises(NotAPoleInVar):
        lf([(2, 1)]).solve_for(1)


def test_parallel():
    assert lf([(1, 2), (2, -2)]).parallel(lf([(1, 1), (2, -1)]))
    assert not lf([(1, 2), (2, -2)]).parallel(lf([(1, 1), (2, 1)]))
    assert not lf([(1, 1)]).parallel(lf([(1, 1), (2, 1)]))
    assert LinForm.zero().parallel(LinForm.zero())
    assert not LinForm.zero().parallel(lf([(1, 1)]))


small_rats = st.fractions(min_value=-10, max_value=10, max_denominator=12)
forms = st.builds(
    LinForm,
    st.lists(st.tuples(st.integers(min_value=1, max_value=4), small_rats), max_size=4),
)
points = st.fixed_dictionaries({k: small_rats for k in (1, 2, 3, 4)})


@given(forms, forms, points)
def test_evaluate_is_linear(f, g, at):
    assert (f + g).evaluate(at) == f.evaluate(at) + g.evaluate(at)


@given(forms, small_rats, points)
def test_evaluate_scales(f, s, at):
    assert (f * s).evaluate(at) == s * f.evaluate(at)


@given(forms)
def test_solve_substitute_round_trip(f):
    for var in f.variables:
        _, root = f.solve_for(var)
        assert f.substitute(var, root).is_zero


@given(small_rats, small_rats, small_rats)
def test_rational_arithmetic_is_exact(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    if z != 0:
        assert (x / z) * z == x


def test_module_doctests():
    import doctest

    import lapvol.linforms as mod

    failures, _ = doctest.testmod(mod)
    assert failures == 0
