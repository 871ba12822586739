##
# @file Polynomial.py
# @brief Sparse Exact Polynomials in Ambient Coordinates
# @author Alexander Rothman <[gnomesort@megate.ch](mailto:gnomesort@megate.ch)>
# @date 2024
# @copyright AGPL-3.0-or-later
from fractions import Fraction
from math import comb, lcm
from typing import Iterable

from .ExactArithmetic import Vector, Matrix, rational_to_string, rational_from_string

##
# @brief A sparse multivariate polynomial with exact rational coefficients.
# @details Terms are stored as a dictionary mapping exponent tuples to nonzero Fractions. Every exponent tuple has one
#          entry per ambient coordinate. Polynomials are immutable and hash by their terms.
class Polynomial:
    ##
    # @brief Construct a Polynomial.
    # @param variables The number of variables.
    # @param terms A dictionary mapping exponent tuples to coefficients. Zero coefficients are dropped. Defaults to
    #              None (the zero polynomial).
    # @throw ValueError If an exponent tuple has the wrong length or a negative entry, or a coefficient is not rational.
    def __init__(self, variables: int, terms: dict = None):
        self.__variables = variables
        self.__terms = { }
        for exponents, value in (terms or { }).items():
            exponents = tuple(exponents)
            if len(exponents) != variables or any(not isinstance(e, int) or e < 0 for e in exponents):
                raise ValueError(f"\"{exponents}\" is not a valid exponent vector for {variables} variables.")
            try:
                value = Fraction(value)
            except (TypeError, ValueError, ZeroDivisionError):
                raise ValueError(f"\"{value}\" is not a valid rational coefficient.")
            if value != 0:
                self.__terms[exponents] = self.__terms.get(exponents, 0) + value
                if self.__terms[exponents] == 0:
                    del self.__terms[exponents]
        self.__hash = None
    ### @cond
    @classmethod
    def _wrap(cls, variables: int, terms: dict):
        res = cls.__new__(cls)
        res.__variables = variables
        res.__terms = terms
        res.__hash = None
        return res
    @staticmethod
    def __accumulate(terms: dict, exponents: tuple, value) -> None:
        total = terms.get(exponents, 0) + value
        if total == 0:
            terms.pop(exponents, None)
        else:
            terms[exponents] = total
    ### @endcond
    ##
    # @brief Construct the zero Polynomial.
    # @param variables The number of variables.
    # @return The zero Polynomial.
    @staticmethod
    def zero(variables: int):
        return Polynomial._wrap(variables, { })
    ##
    # @brief Construct a constant Polynomial.
    # @param variables The number of variables.
    # @param value The constant value.
    # @return The constant Polynomial.
    @staticmethod
    def constant(variables: int, value):
        value = Fraction(value)
        return Polynomial._wrap(variables, { (0,) * variables: value } if value != 0 else { })
    ##
    # @brief Construct a coordinate Polynomial.
    # @param variables The number of variables.
    # @param index The 0-based index of the coordinate.
    # @return The Polynomial x_index.
    @staticmethod
    def variable(variables: int, index: int):
        return Polynomial._wrap(variables, { tuple(1 if i == index else 0 for i in range(variables)): Fraction(1) })
    ##
    # @brief Construct the linear form of a Vector.
    # @param vector The Vector v.
    # @return The Polynomial x -> (v, x).
    @staticmethod
    def linear_form(vector: Vector):
        n = vector.dimension()
        return Polynomial._wrap(n, { tuple(1 if i == j else 0 for i in range(n)): value
                                     for j, value in enumerate(vector) if value != 0 })
    ##
    # @brief Compute the power sums of a set of Vectors for every degree up to a bound.
    # @details The Vectors are scaled by the least common multiple of their denominators so that the expansion runs over
    #          the integers. The result is rescaled once per degree.
    # @param vectors The Vectors y to sum over.
    # @param max_degree The largest degree to compute.
    # @param variables The number of variables. Only required when vectors is empty. Defaults to None.
    # @return A list whose entry i is the Polynomial sum_y (y, x)^i, for i = 0 ... max_degree.
    @staticmethod
    def power_sums(vectors: Iterable[Vector], max_degree: int, variables: int = None) -> list:
        vectors = list(vectors)
        if variables is None:
            variables = vectors[0].dimension() if vectors else 0
        scale = 1
        for vector in vectors:
            scale = lcm(scale, vector.common_denominator())
        sums = [ { } for _ in range(max_degree + 1) ]
        origin = (0,) * variables
        if vectors:
            sums[0][origin] = len(vectors)
        for vector in vectors:
            weights = [ (j, int(value * scale)) for j, value in enumerate(vector) if value != 0 ]
            current = { origin: 1 }
            for degree in range(1, max_degree + 1):
                following = { }
                for exponents, value in current.items():
                    for j, weight in weights:
                        shifted = exponents[:j] + (exponents[j] + 1,) + exponents[j + 1:]
                        following[shifted] = following.get(shifted, 0) + value * weight
                current = following
                target = sums[degree]
                for exponents, value in current.items():
                    target[exponents] = target.get(exponents, 0) + value
        res = [ ]
        for degree, terms in enumerate(sums):
            divisor = scale ** degree
            res.append(Polynomial._wrap(variables, { exponents: Fraction(value, divisor)
                                                     for exponents, value in terms.items() if value != 0 }))
        return res
    ##
    # @brief Compute a single power sum of a set of Vectors.
    # @param vectors The Vectors y to sum over.
    # @param degree The degree i.
    # @param variables The number of variables. Only required when vectors is empty. Defaults to None.
    # @return The Polynomial sum_y (y, x)^i. When i is 0 this is the constant |vectors|.
    @staticmethod
    def power_sum(vectors: Iterable[Vector], degree: int, variables: int = None):
        return Polynomial.power_sums(vectors, degree, variables)[degree]
    ##
    # @brief Compute the product of the linear forms of a set of Vectors.
    # @param vectors A nonempty collection of Vectors.
    # @return The Polynomial prod_y (y, x).
    # @throw ValueError If vectors is empty.
    @staticmethod
    def product_of_forms(vectors: Iterable[Vector]):
        vectors = list(vectors)
        if len(vectors) == 0:
            raise ValueError("Cannot form the product of an empty set of linear forms.")
        res = Polynomial.constant(vectors[0].dimension(), 1)
        for vector in sorted(vectors):
            res = res * Polynomial.linear_form(vector)
        return res
    ##
    # @brief Retrieve the number of variables.
    # @return An integer.
    def variables(self) -> int:
        return self.__variables
    ##
    # @brief Retrieve the terms.
    # @return A dictionary mapping exponent tuples to nonzero Fractions. Callers must not modify it.
    def terms(self) -> dict:
        return self.__terms
    ##
    # @brief Retrieve a single coefficient.
    # @param exponents An exponent tuple.
    # @return The coefficient of the monomial x^exponents.
    def coefficient(self, exponents: tuple) -> Fraction:
        return self.__terms.get(tuple(exponents), Fraction(0))
    ##
    # @brief Retrieve the total degree.
    # @return The largest total degree of any term. The zero polynomial has degree -1.
    def degree(self) -> int:
        return max((sum(exponents) for exponents in self.__terms), default=-1)
    ##
    # @brief Determine whether or not the Polynomial is zero.
    # @return True if there are no terms. Otherwise False.
    def is_zero(self) -> bool:
        return len(self.__terms) == 0
    ##
    # @brief Retrieve the constant term.
    # @return The coefficient of the monomial 1.
    def constant_term(self) -> Fraction:
        return self.coefficient((0,) * self.__variables)
    ##
    # @brief Retrieve a homogeneous component.
    # @param degree The degree of the component.
    # @return The Polynomial made of the terms of exactly that degree.
    def homogeneous_part(self, degree: int):
        return Polynomial._wrap(self.__variables, { exponents: value for exponents, value in self.__terms.items()
                                                    if sum(exponents) == degree })
    ##
    # @brief Compute the sort key of a monomial in graded-lex order.
    # @param exponents An exponent tuple.
    # @return A tuple that sorts monomials by total degree and then lexicographically.
    @staticmethod
    def monomial_key(exponents: tuple) -> tuple:
        return (sum(exponents), exponents)
    ##
    # @brief Retrieve the leading monomial in graded-lex order.
    # @return The largest exponent tuple. None for the zero polynomial.
    def leading_monomial(self) -> tuple:
        if not self.__terms:
            return None
        return max(self.__terms, key=Polynomial.monomial_key)
    ##
    # @brief Retrieve the coefficient of the leading monomial.
    # @return A Fraction. Zero for the zero polynomial.
    def leading_coefficient(self) -> Fraction:
        monomial = self.leading_monomial()
        return self.__terms[monomial] if monomial is not None else Fraction(0)
    def __coerce(self, other):
        if isinstance(other, Polynomial):
            if other.__variables != self.__variables:
                raise ValueError(f"Cannot combine polynomials in {self.__variables} and {other.__variables} "
                                 "variables.")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.__variables, other)
        return None
    def __add__(self, other):
        other = self.__coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.__terms)
        for exponents, value in other.__terms.items():
            Polynomial.__accumulate(terms, exponents, value)
        return Polynomial._wrap(self.__variables, terms)
    def __radd__(self, other):
        return self.__add__(other)
    def __neg__(self):
        return Polynomial._wrap(self.__variables, { exponents: -value for exponents, value in self.__terms.items() })
    def __sub__(self, other):
        other = self.__coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)
    def __rsub__(self, other):
        other = self.__coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)
    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            scalar = Fraction(other)
            if scalar == 0:
                return Polynomial.zero(self.__variables)
            return Polynomial._wrap(self.__variables, { exponents: value * scalar
                                                        for exponents, value in self.__terms.items() })
        other = self.__coerce(other)
        if other is None:
            return NotImplemented
        terms = { }
        for left, x in self.__terms.items():
            for right, y in other.__terms.items():
                Polynomial.__accumulate(terms, tuple(i + j for i, j in zip(left, right)), x * y)
        return Polynomial._wrap(self.__variables, terms)
    def __rmul__(self, other):
        return self.__mul__(other)
    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"\"{exponent}\" is not a valid polynomial exponent.")
        res = Polynomial.constant(self.__variables, 1)
        base = self
        while exponent:
            if exponent & 1:
                res = res * base
            exponent >>= 1
            if exponent:
                base = base * base
        return res
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.__variables, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.__variables == other.__variables and self.__terms == other.__terms
    def __hash__(self) -> int:
        if self.__hash is None:
            self.__hash = hash((self.__variables, frozenset(self.__terms.items())))
        return self.__hash
    ##
    # @brief Evaluate the Polynomial at a point.
    # @param point A Vector or sequence of rationals with one entry per variable.
    # @return The exact value.
    # @throw ValueError If the point has the wrong length.
    def evaluate(self, point) -> Fraction:
        point = tuple(Fraction(value) for value in point)
        if len(point) != self.__variables:
            raise ValueError(f"Cannot evaluate a polynomial in {self.__variables} variables at a point of length "
                             f"{len(point)}.")
        res = Fraction(0)
        for exponents, value in self.__terms.items():
            for x, e in zip(point, exponents):
                if e:
                    value *= x ** e
            res += value
        return res
    ##
    # @brief Compute a partial derivative.
    # @param index The 0-based index of the variable.
    # @return The Polynomial d/dx_index.
    def derivative(self, index: int):
        terms = { }
        for exponents, value in self.__terms.items():
            e = exponents[index]
            if e:
                lowered = exponents[:index] + (e - 1,) + exponents[index + 1:]
                terms[lowered] = value * e
        return Polynomial._wrap(self.__variables, terms)
    ##
    # @brief Evaluate the gradient at a point.
    # @param point A Vector or sequence of rationals with one entry per variable.
    # @return A Vector of partial derivatives.
    def gradient(self, point) -> Vector:
        point = tuple(Fraction(value) for value in point)
        res = [ Fraction(0) ] * self.__variables
        for exponents, value in self.__terms.items():
            for i, e in enumerate(exponents):
                if e == 0:
                    continue
                term = value * e
                for j, (x, f) in enumerate(zip(point, exponents)):
                    power = f - 1 if j == i else f
                    if power:
                        term *= x ** power
                res[i] += term
        return Vector._wrap(tuple(res))
    ##
    # @brief Translate the Polynomial by a Vector.
    # @details Each coordinate is shifted in turn with a univariate Taylor expansion.
    # @param shift The Vector a.
    # @return The Polynomial x -> f(x + a).
    # @throw ValueError If the shift has the wrong dimension.
    def translate(self, shift: Vector):
        if shift.dimension() != self.__variables:
            raise ValueError(f"Cannot translate a polynomial in {self.__variables} variables by {shift}.")
        terms = self.__terms
        for index, amount in enumerate(shift):
            if amount == 0:
                continue
            shifted = { }
            for exponents, value in terms.items():
                e = exponents[index]
                if e == 0:
                    Polynomial.__accumulate(shifted, exponents, value)
                    continue
                for k in range(e + 1):
                    lowered = exponents[:index] + (k,) + exponents[index + 1:]
                    Polynomial.__accumulate(shifted, lowered, value * comb(e, k) * amount ** (e - k))
            terms = shifted
        return Polynomial._wrap(self.__variables, dict(terms))
    ##
    # @brief Substitute a linear change of variables.
    # @param matrix A square Matrix M.
    # @return The Polynomial x -> f(M x).
    # @throw ValueError If the Matrix has the wrong shape.
    def transform(self, matrix: Matrix):
        n = self.__variables
        if matrix.row_count() != n or matrix.column_count() != n:
            raise ValueError(f"Cannot substitute a {matrix.row_count()}x{matrix.column_count()} matrix into a "
                             f"polynomial in {n} variables.")
        forms = [ Polynomial.linear_form(Vector._wrap(matrix[i])) for i in range(n) ]
        powers = [ [ Polynomial.constant(n, 1) ] for _ in range(n) ]
        res = Polynomial.zero(n)
        for exponents, value in self.__terms.items():
            term = Polynomial.constant(n, value)
            for i, e in enumerate(exponents):
                while len(powers[i]) <= e:
                    powers[i].append(powers[i][-1] * forms[i])
                if e:
                    term = term * powers[i][e]
            res = res + term
        return res
    ##
    # @brief Average a Polynomial over a finite group.
    # @param elements The group elements. Each must provide matrix().
    # @param polynomial The Polynomial to average.
    # @return The Reynolds image (1 / |G|) sum_g f(g x).
    # @throw ValueError If there are no elements.
    @staticmethod
    def average(elements: list, polynomial):
        if len(elements) == 0:
            raise ValueError("Cannot average over an empty group.")
        res = Polynomial.zero(polynomial.variables())
        for element in elements:
            res = res + polynomial.transform(element.matrix())
        return res * Fraction(1, len(elements))
    ##
    # @brief Convert the Polynomial into a string.
    # @return A string such as "2*x1^2 + -1/3*x2 + 5".
    def __str__(self) -> str:
        if not self.__terms:
            return "0"
        parts = [ ]
        for exponents in sorted(self.__terms, key=Polynomial.monomial_key, reverse=True):
            factors = [ f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(exponents) if e ]
            value = self.__terms[exponents]
            if not factors:
                parts.append(rational_to_string(value))
            elif value == 1:
                parts.append("*".join(factors))
            else:
                parts.append("*".join([ rational_to_string(value) ] + factors))
        return " + ".join(parts)
    def __repr__(self) -> str:
        return f"Polynomial({self})"
    ##
    # @brief Convert the Polynomial into a JSON compatible value.
    # @return A list of {"exponents", "coefficient"} dictionaries in descending graded-lex order.
    def to_json(self) -> list[dict]:
        return [ { "exponents": list(exponents), "coefficient": rational_to_string(self.__terms[exponents]) }
                 for exponents in sorted(self.__terms, key=Polynomial.monomial_key, reverse=True) ]
    ##
    # @brief Construct a Polynomial from its JSON representation.
    # @param variables The number of variables.
    # @param data A list of {"exponents", "coefficient"} dictionaries.
    # @return The parsed Polynomial.
    # @throw ValueError If the data is malformed.
    @staticmethod
    def from_json(variables: int, data: list):
        if not isinstance(data, list):
            raise ValueError(f"\"{data}\" is not a JSON polynomial.")
        try:
            return Polynomial(variables, { tuple(term["exponents"]): rational_from_string(str(term["coefficient"]))
                                           for term in data })
        except (KeyError, TypeError):
            raise ValueError(f"\"{data}\" is not a JSON polynomial.")

__all__ = [ "Polynomial" ]
