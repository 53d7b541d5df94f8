"""Exact scalars and homogeneous linear forms.

Every number in the engine is a :class:`fractions.Fraction` (aliased
``Rat``).  Variables are small integer ids: ``1..m`` for the lambda
block, plus the distinguished id :data:`P_VAR` for the transform
variable p, which orders after every lambda.  A :class:`LinForm` is a
canonical sparse map from variable id to coefficient; there is no
constant part anywhere in the algebra, so structural equality equals
mathematical equality.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Tuple, Union

from .errors import NotAPoleInVar

Rat = Fraction
RatLike = Union[Fraction, int, str]

# p must compare greater than any realistic lambda index.
P_VAR = 1 << 30


def rat(value: RatLike) -> Fraction:
    """Exact rational from an int, a Fraction, or a string like '-3/7'.

    Floats are refused on purpose: the engine is exact end to end.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError(f"refusing float {value!r}: pass a string or Fraction")
    return Fraction(value)


def var_name(var: int) -> str:
    return "p" if var == P_VAR else f"l{var}"


class LinForm:
    """Homogeneous linear form with exact rational coefficients.

    >>> f = LinForm({1: 1, 2: 2, 3: -1})
    >>> print(f)
    l1 + 2*l2 - l3
    >>> f.coeff(2)
    Fraction(2, 1)
    >>> print(f.substitute(1, LinForm({2: 2, 3: -2})))
    4*l2 - 3*l3
    >>> print(f - f)
    0
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Union[Mapping[int, RatLike], Iterable[Tuple[int, RatLike]]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, Fraction] = {}
        for var, c in items:
            c = rat(c)
            if var in acc:
                acc[var] += c
            else:
                acc[var] = c
        self._coeffs = tuple(sorted((v, c) for v, c in acc.items() if c != 0))

    @classmethod
    def var(cls, var: int, coeff: RatLike = 1) -> "LinForm":
        return cls([(var, coeff)])

    @classmethod
    def zero(cls) -> "LinForm":
        return cls()

    # -- inspection ----------------------------------------------------

    def items(self) -> Tuple[Tuple[int, Fraction], ...]:
        return self._coeffs

    @property
    def variables(self) -> Tuple[int, ...]:
        return tuple(v for v, _ in self._coeffs)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def coeff(self, var: int) -> Fraction:
        for v, c in self._coeffs:
            if v == var:
                return c
        return Fraction(0)

    def is_multiple_of_var(self, var: int) -> bool:
        """True iff the form is c*var for some nonzero c."""
        return len(self._coeffs) == 1 and self._coeffs[0][0] == var

    def lowest_var(self):
        return self._coeffs[0][0] if self._coeffs else None

    # -- algebra -------------------------------------------------------

    def __add__(self, other: "LinForm") -> "LinForm":
        return LinForm(tuple(self._coeffs) + tuple(other._coeffs))

    def __sub__(self, other: "LinForm") -> "LinForm":
        return self + (-other)

    def __neg__(self) -> "LinForm":
        return LinForm([(v, -c) for v, c in self._coeffs])

    def __mul__(self, scalar: RatLike) -> "LinForm":
        s = rat(scalar)
        return LinForm([(v, c * s) for v, c in self._coeffs])

    __rmul__ = __mul__

    def __truediv__(self, scalar: RatLike) -> "LinForm":
        s = rat(scalar)
        if s == 0:
            raise ZeroDivisionError("LinForm division by zero")
        return self * (Fraction(1) / s)

    # -- the three core operations --------------------------------------

    def substitute(self, var: int, root: "LinForm") -> "LinForm":
        """Eliminate ``var`` by replacing it with ``root``.

        ``root`` must not itself involve ``var``; the result has zero
        coefficient on ``var``.
        """
        c = self.coeff(var)
        if c == 0:
            return self
        assert root.coeff(var) == 0, "substitution root may not contain the variable"
        rest = [(v, k) for v, k in self._coeffs if v != var]
        return LinForm(rest + [(v, k * c) for v, k in root._coeffs])

    def evaluate(self, abscissae: Mapping[int, Fraction]) -> Fraction:
        """Exact value at the given real abscissae; every variable of the
        form must be covered."""
        total = Fraction(0)
        for v, c in self._coeffs:
            if v not in abscissae:
                raise KeyError(f"no abscissa for variable {var_name(v)}")
            total += c * abscissae[v]
        return total

    def solve_for(self, var: int) -> Tuple[Fraction, "LinForm"]:
        """Write the factor as leading*(var - root) and return
        ``(leading, root)``; substituting the root back kills the factor.
        """
        leading = self.coeff(var)
        if leading == 0:
            raise NotAPoleInVar(f"{self} has no {var_name(var)} term")
        root = LinForm([(v, -c / leading) for v, c in self._coeffs if v != var])
        return leading, root

    def parallel(self, other: "LinForm") -> bool:
        """True iff self = r*other for some nonzero rational r."""
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        if self.variables != other.variables:
            return False
        v0, c0 = self._coeffs[0]
        ratio = c0 / other.coeff(v0)
        return all(c == ratio * other.coeff(v) for v, c in self._coeffs)

    # -- plumbing --------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, LinForm) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for v, c in self._coeffs:
            name = var_name(v)
            mag = abs(c)
            body = name if mag == 1 else f"{mag}*{name}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LinForm('{self}')"


if __name__ == "__main__":
    import doctest

    doctest.testmod()
