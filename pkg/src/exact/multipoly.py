import itertools
from collections.abc import Sequence
from fractions import Fraction

import numpy as np

from src.core.exceptions import InvalidInputError
from src.exact.cyclo import CycloScalar
from src.models.domain.wreath import MonomialAction, Representation

Exponents = tuple[int, ...]


def variables_for(n: int, rep: str) -> tuple[str, ...]:
    """
    Variable names of ℂ[L_n] or ℂ[L_n × L_n].

    :param n: number of coordinates per factor
    :param rep: "L" or "LL"
    :return: ("z1", ..., "zn") optionally followed by ("z'1", ..., "z'n")
    """

    names = tuple(f"z{i + 1}" for i in range(n))
    if Representation.validate(rep) == Representation.LL:
        names += tuple(f"z'{i + 1}" for i in range(n))
    return names


def monomial_exponents(count: int, degree: int) -> list[Exponents]:
    """
    All exponent vectors of the given total degree, in decreasing lexicographic order.

    :param count: number of variables
    :param degree: total degree
    :return: exponent tuples
    """

    result = []
    for combination in itertools.combinations_with_replacement(range(count), degree):
        exponents = [0] * count
        for index in combination:
            exponents[index] += 1
        result.append(tuple(exponents))
    return result


def _grlex_key(exponents: Exponents) -> tuple[int, Exponents]:
    return sum(exponents), exponents


class MultiPoly:
    """
    Polynomial over ℚ(ω) in a fixed ordered list of variables.

    Terms map exponent vectors to nonzero ``CycloScalar`` coefficients.
    Ints and Fractions mix in as constants, which lets object arrays of
    polynomials run through the generic matrix routines.
    """

    __slots__ = ("m", "variables", "terms")

    def __init__(self, m: int, variables: Sequence[str], terms: dict[Exponents, CycloScalar] | None = None) -> None:
        self.m = m
        self.variables = tuple(variables)
        self.terms: dict[Exponents, CycloScalar] = {}
        for exponents, coefficient in (terms or {}).items():
            if len(exponents) != len(self.variables):
                raise InvalidInputError(f"Exponent vector {exponents} does not match {len(self.variables)} variables.")
            if not coefficient.is_zero():
                self.terms[tuple(exponents)] = coefficient

    @classmethod
    def zero(cls, m: int, variables: Sequence[str]) -> "MultiPoly":
        return cls(m, variables)

    @classmethod
    def constant(cls, m: int, variables: Sequence[str], value: int | Fraction | CycloScalar) -> "MultiPoly":
        scalar = value if isinstance(value, CycloScalar) else CycloScalar.rational(m, value)
        return cls(m, variables, {(0,) * len(variables): scalar})

    @classmethod
    def monomial(cls, m: int, variables: Sequence[str], exponents: Exponents,
                 coefficient: int | Fraction | CycloScalar = 1) -> "MultiPoly":
        scalar = coefficient if isinstance(coefficient, CycloScalar) else CycloScalar.rational(m, coefficient)
        return cls(m, variables, {tuple(exponents): scalar})

    @classmethod
    def variable(cls, m: int, variables: Sequence[str], index: int) -> "MultiPoly":
        exponents = [0] * len(variables)
        exponents[index] = 1
        return cls.monomial(m, variables, tuple(exponents))

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self) -> bool:
        return len({sum(exponents) for exponents in self.terms}) <= 1

    def degree(self) -> int:
        return max((sum(exponents) for exponents in self.terms), default=-1)

    def sorted_terms(self) -> list[tuple[Exponents, CycloScalar]]:
        """
        Terms in graded lexicographic order, highest first.

        :return: (exponents, coefficient) pairs
        """

        return sorted(self.terms.items(), key=lambda item: _grlex_key(item[0]), reverse=True)

    def coefficient(self, exponents: Exponents) -> CycloScalar:
        return self.terms.get(tuple(exponents), CycloScalar.zero(self.m))

    def _coerce(self, other) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            if (other.m, other.variables) != (self.m, self.variables):
                raise InvalidInputError("Polynomials live in different rings.")
            return other
        if isinstance(other, (int, Fraction, CycloScalar)):
            return MultiPoly.constant(self.m, self.variables, other)
        return None

    def __add__(self, other) -> "MultiPoly":
        value = self._coerce(other)
        if value is None:
            return NotImplemented

        terms = dict(self.terms)
        for exponents, coefficient in value.terms.items():
            terms[exponents] = terms[exponents] + coefficient if exponents in terms else coefficient
        return MultiPoly(self.m, self.variables, terms)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.m, self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return self + (-value)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        value = self._coerce(other)
        if value is None:
            return NotImplemented

        terms: dict[Exponents, CycloScalar] = {}
        for left, a in self.terms.items():
            for right, b in value.terms.items():
                exponents = tuple(i + j for i, j in zip(left, right))
                product = a * b
                terms[exponents] = terms[exponents] + product if exponents in terms else product
        return MultiPoly(self.m, self.variables, terms)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.degree() != 0:
                raise InvalidInputError("Only division by constants is supported.")
            other = other.coefficient((0,) * other.nvars)
        if not isinstance(other, (int, Fraction, CycloScalar)):
            return NotImplemented
        divisor = other if isinstance(other, CycloScalar) else CycloScalar.rational(self.m, other)
        inverse = divisor.inverse()
        return MultiPoly(self.m, self.variables, {e: c * inverse for e, c in self.terms.items()})

    def __pow__(self, exponent: int) -> "MultiPoly":
        if exponent < 0:
            raise InvalidInputError("Negative powers of polynomials are not defined.")
        result = MultiPoly.constant(self.m, self.variables, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        value = self._coerce(other) if isinstance(other, (MultiPoly, int, Fraction, CycloScalar)) else None
        if value is None:
            return NotImplemented
        return self.terms == value.terms

    def __hash__(self) -> int:
        return hash((self.m, self.variables, frozenset(self.terms.items())))

    def substitute(self, action: MonomialAction) -> "MultiPoly":
        """
        Apply the substitution variable_j -> ω^{phase[j]}·variable_{source[j]}.

        :param action: monomial action of a group element on these variables
        :return: transformed polynomial
        """

        if len(action.source) != self.nvars:
            raise InvalidInputError(f"Action on {len(action.source)} coordinates cannot act on {self.nvars} variables.")

        terms: dict[Exponents, CycloScalar] = {}
        for exponents, coefficient in self.terms.items():
            image = [0] * self.nvars
            twist = 0
            for j, power in enumerate(exponents):
                image[action.source[j]] += power
                twist += action.phase[j] * power
            key = tuple(image)
            value = coefficient * CycloScalar.omega_power(action.m, twist)
            terms[key] = terms[key] + value if key in terms else value
        return MultiPoly(self.m, self.variables, terms)

    def derivative(self, index: int) -> "MultiPoly":
        terms: dict[Exponents, CycloScalar] = {}
        for exponents, coefficient in self.terms.items():
            power = exponents[index]
            if power:
                lowered = list(exponents)
                lowered[index] -= 1
                terms[tuple(lowered)] = coefficient * power
        return MultiPoly(self.m, self.variables, terms)

    def evaluate(self, point: Sequence[complex] | np.ndarray) -> complex:
        values = np.asarray(point, dtype=np.complex128)
        return complex(sum(
            coefficient.to_complex() * np.prod(values ** np.array(exponents))
            for exponents, coefficient in self.terms.items()
        ))

    def coefficient_vector(self, basis: dict[Exponents, int]) -> list[CycloScalar]:
        vector = [CycloScalar.zero(self.m)] * len(basis)
        for exponents, coefficient in self.terms.items():
            if exponents not in basis:
                raise InvalidInputError(f"Monomial {exponents} is outside the supplied basis.")
            vector[basis[exponents]] = coefficient
        return vector

    def __repr__(self) -> str:
        if not self.terms:
            return "0"

        rendered = []
        for exponents, coefficient in self.sorted_terms():
            factors = [name if power == 1 else f"{name}^{power}"
                       for name, power in zip(self.variables, exponents) if power]
            monomial = "·".join(factors)
            scalar = repr(coefficient)
            if not monomial:
                rendered.append(scalar)
            elif scalar == "1":
                rendered.append(monomial)
            else:
                rendered.append(f"({scalar})·{monomial}")
        return " + ".join(rendered)
