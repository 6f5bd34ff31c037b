from collections.abc import Sequence
from fractions import Fraction
from functools import lru_cache

import numpy as np
from sympy import Poly, QQ, Rational, cyclotomic_poly, symbols, totient

from src.core.exceptions import InvalidInputError

_X = symbols("x")

RationalLike = int | Fraction


@lru_cache(maxsize=None)
def cyclotomic_coefficients(m: int) -> tuple[int, ...]:
    """
    Ascending integer coefficients of the m-th cyclotomic polynomial.

    :param m: order, at least 1
    :return: coefficients, monic, of length φ(m) + 1
    """

    if m < 1:
        raise InvalidInputError(f"Cyclotomic field needs m >= 1, got {m}.")
    coefficients = tuple(int(c) for c in reversed(cyclotomic_poly(m, _X, polys=True).all_coeffs()))
    if len(coefficients) != int(totient(m)) + 1:
        raise InvalidInputError(f"Unexpected degree of the {m}-th cyclotomic polynomial.")
    return coefficients


def _reduce(values: list[Fraction], m: int) -> tuple[Fraction, ...]:
    modulus = cyclotomic_coefficients(m)
    degree = len(modulus) - 1

    for top in range(len(values) - 1, degree - 1, -1):
        lead = values[top]
        if lead:
            shift = top - degree
            for index, coefficient in enumerate(modulus):
                values[shift + index] -= lead * coefficient

    values = values[:degree] + [Fraction(0)] * max(0, degree - len(values))
    return tuple(values)


class CycloScalar:
    """
    Element of ℚ(ω), ω = exp(2πi/m), stored as its residue modulo Φ_m.

    ``coeffs[k]`` multiplies ω^k for k < φ(m). Every operation reduces
    eagerly, so equal field elements have equal coefficient tuples.
    """

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs: Sequence[RationalLike]) -> None:
        self.m = m
        self.coeffs = _reduce([Fraction(c) for c in coeffs], m)

    @classmethod
    def zero(cls, m: int) -> "CycloScalar":
        return cls(m, [])

    @classmethod
    def one(cls, m: int) -> "CycloScalar":
        return cls(m, [1])

    @classmethod
    def rational(cls, m: int, value: RationalLike) -> "CycloScalar":
        return cls(m, [value])

    @classmethod
    def omega_power(cls, m: int, exponent: int) -> "CycloScalar":
        values = [Fraction(0)] * (exponent % m + 1)
        values[-1] = Fraction(1)
        return cls(m, values)

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise InvalidInputError(f"{self} is not a rational number.")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def to_complex(self) -> complex:
        omega = np.exp(2j * np.pi / self.m)
        return complex(sum(float(c) * omega ** k for k, c in enumerate(self.coeffs)))

    def _coerce(self, other) -> "CycloScalar | None":
        if isinstance(other, CycloScalar):
            if other.m != self.m:
                raise InvalidInputError(f"Cannot combine elements of Q(ω_{self.m}) and Q(ω_{other.m}).")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloScalar.rational(self.m, other)
        return None

    def __add__(self, other) -> "CycloScalar":
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return CycloScalar(self.m, [a + b for a, b in zip(self.coeffs, value.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> "CycloScalar":
        return CycloScalar(self.m, [-c for c in self.coeffs])

    def __sub__(self, other) -> "CycloScalar":
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return self + (-value)

    def __rsub__(self, other) -> "CycloScalar":
        return (-self) + other

    def __mul__(self, other) -> "CycloScalar":
        value = self._coerce(other)
        if value is None:
            return NotImplemented

        product = [Fraction(0)] * max(0, self.degree + value.degree - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(value.coeffs):
                    product[i + j] += a * b
        return CycloScalar(self.m, product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "CycloScalar":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = CycloScalar.one(self.m), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def inverse(self) -> "CycloScalar":
        """
        Multiplicative inverse through the extended Euclidean algorithm modulo Φ_m.

        :return: inverse element
        """

        if self.is_zero():
            raise ZeroDivisionError("Zero has no inverse in Q(ω).")
        if self.is_rational():
            return CycloScalar.rational(self.m, 1 / self.coeffs[0])

        element = Poly([Rational(c.numerator, c.denominator) for c in reversed(self.coeffs)], _X, domain=QQ)
        modulus = Poly(list(reversed(cyclotomic_coefficients(self.m))), _X, domain=QQ)
        inverse = element.invert(modulus)
        return CycloScalar(self.m, [Fraction(int(c.p), int(c.q)) for c in reversed(inverse.all_coeffs())])

    def __truediv__(self, other) -> "CycloScalar":
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return self * value.inverse()

    def __rtruediv__(self, other) -> "CycloScalar":
        return self.inverse() * other

    def __eq__(self, other) -> bool:
        value = self._coerce(other) if isinstance(other, (CycloScalar, int, Fraction)) else None
        if value is None:
            return NotImplemented
        return self.coeffs == value.coeffs

    def __hash__(self) -> int:
        return hash((self.m, self.coeffs))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        terms = [f"{c}" if k == 0 else f"({c})·ω^{k}" for k, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) if terms else "0"
