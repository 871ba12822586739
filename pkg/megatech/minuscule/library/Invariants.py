##
# @file Invariants.py
# @brief Orbit Invariants, Hilbert Series, and Filtered Spans
# @author Alexander Rothman <[gnomesort@megate.ch](mailto:gnomesort@megate.ch)>
# @date 2024
# @copyright AGPL-3.0-or-later
import random
from fractions import Fraction
from itertools import combinations_with_replacement
from math import prod
from typing import Iterable

from .ExactArithmetic import Vector, Matrix
from .Polynomial import Polynomial
from .WeylGroup import WeylGroup

##
# @brief The default bound on rows times columns for a filtered span computation.
DEFAULT_TERM_BUDGET = 4000000

##
# @brief A power sum over a finite set of Vectors, expanded only on demand.
class OrbitPowerSum:
    ##
    # @brief Construct an OrbitPowerSum.
    # @param vectors The Vectors y to sum over.
    # @param degree The exponent i.
    # @param label A name for the invariant. Defaults to None.
    def __init__(self, vectors: Iterable[Vector], degree: int, label: str = None):
        self.__vectors = tuple(sorted(vectors))
        self.__degree = degree
        self.__label = label or f"p{degree}"
        self.__expansion = None
    def vectors(self) -> tuple[Vector, ...]:
        return self.__vectors
    def degree(self) -> int:
        return self.__degree
    def label(self) -> str:
        return self.__label
    ##
    # @brief Evaluate the power sum.
    # @param point The point x.
    # @return sum_y (y, x)^i.
    def evaluate(self, point: Vector) -> Fraction:
        return sum((y.dot(point) ** self.__degree for y in self.__vectors), Fraction(0))
    ##
    # @brief Evaluate the gradient of the power sum.
    # @param point The point x.
    # @return sum_y i (y, x)^(i - 1) y.
    def gradient(self, point: Vector) -> Vector:
        res = Vector.zero(point.dimension())
        if self.__degree == 0:
            return res
        for y in self.__vectors:
            weight = self.__degree * y.dot(point) ** (self.__degree - 1)
            if weight:
                res = res + y * weight
        return res
    ##
    # @brief Expand the power sum into a Polynomial.
    # @return The expanded Polynomial. It is computed once and cached.
    def expand(self) -> Polynomial:
        if self.__expansion is None:
            dimension = self.__vectors[0].dimension() if self.__vectors else 0
            self.__expansion = Polynomial.power_sum(self.__vectors, self.__degree, dimension)
        return self.__expansion
    ##
    # @brief Determine whether or not the power sum is invariant under a group.
    # @param group A WeylGroup.
    # @return True if every generating reflection maps the summation set into itself. Otherwise False.
    def is_invariant(self, group: WeylGroup) -> bool:
        return group.stabilizes(self.__vectors)

##
# @brief A product of linear forms over a finite set of Vectors, expanded only on demand.
class OrbitProduct:
    ##
    # @brief Construct an OrbitProduct.
    # @param vectors A nonempty collection of Vectors.
    # @param label A name for the invariant. Defaults to None.
    # @throw ValueError If vectors is empty.
    def __init__(self, vectors: Iterable[Vector], label: str = None):
        self.__vectors = tuple(sorted(vectors))
        if len(self.__vectors) == 0:
            raise ValueError("An orbit product requires at least one vector.")
        self.__label = label or "d"
        self.__expansion = None
    def vectors(self) -> tuple[Vector, ...]:
        return self.__vectors
    def degree(self) -> int:
        return len(self.__vectors)
    def label(self) -> str:
        return self.__label
    ##
    # @brief Evaluate the product.
    # @param point The point x.
    # @return prod_y (y, x).
    def evaluate(self, point: Vector) -> Fraction:
        return prod((y.dot(point) for y in self.__vectors), start=Fraction(1))
    ##
    # @brief Evaluate the gradient of the product.
    # @param point The point x.
    # @return sum_k (prod_{m != k} (y_m, x)) y_k.
    def gradient(self, point: Vector) -> Vector:
        values = [ y.dot(point) for y in self.__vectors ]
        res = Vector.zero(point.dimension())
        for k, y in enumerate(self.__vectors):
            weight = prod((value for m, value in enumerate(values) if m != k), start=Fraction(1))
            if weight:
                res = res + y * weight
        return res
    ##
    # @brief Expand the product into a Polynomial.
    # @return The expanded Polynomial. It is computed once and cached.
    def expand(self) -> Polynomial:
        if self.__expansion is None:
            self.__expansion = Polynomial.product_of_forms(self.__vectors)
        return self.__expansion
    ##
    # @brief Determine whether or not the product is invariant under a group.
    # @details A reflection s sends prod_y (y, x) to prod_y (s y, x). The product is invariant when s maps the set onto
    #          itself up to an even number of sign changes.
    # @param group A WeylGroup.
    # @return True if every generating reflection preserves the product. Otherwise False.
    def is_invariant(self, group: WeylGroup) -> bool:
        universe = frozenset(self.__vectors)
        for generator in group.generators():
            flips = 0
            image = set()
            for y in self.__vectors:
                reflected = WeylGroup.reflect(generator, y)
                if reflected in universe:
                    image.add(reflected)
                elif -reflected in universe:
                    image.add(-reflected)
                    flips += 1
                else:
                    return False
            if len(image) != len(universe) or flips % 2 != 0:
                return False
        return True

##
# @brief Compute the Jacobian rank of a list of polynomial functions.
# @details Each function must provide gradient(point). Polynomial, OrbitPowerSum and OrbitProduct all qualify. When no
#          points are given, random integer points are drawn from a seeded generator until the rank is full or the
#          attempts run out. The coordinates of a drawn point have distinct nonzero absolute values, so the point avoids
#          the hyperplanes x_i = x_j, x_i = -x_j and x_i = 0 where Weyl invariant Jacobians drop rank.
# @param functions The functions to differentiate.
# @param points Explicit sample points. Defaults to None.
# @param dimension The ambient dimension. Required when points is None.
# @param seed The seed for random points. Defaults to 0.
# @param attempts The number of random points to try. Defaults to 12.
# @param magnitude The largest absolute value of a random coordinate. It is raised to the dimension when smaller.
#                  Defaults to 1000.
# @return The largest rank observed.
# @throw ValueError If neither points nor a dimension is given.
def jacobian_rank(functions: list, points: list[Vector] = None, dimension: int = None, seed: int = 0,
                  attempts: int = 12, magnitude: int = 1000) -> int:
    functions = list(functions)
    if len(functions) == 0:
        return 0
    if points is None:
        if dimension is None:
            raise ValueError("A dimension is required to draw random sample points.")
        rng = random.Random(seed)
        magnitude = max(magnitude, dimension)
        points = [ Vector([ value * rng.choice((-1, 1)) for value in rng.sample(range(1, magnitude + 1), dimension) ])
                   for _ in range(attempts) ]
    res = 0
    for point in points:
        rows = [ function.gradient(point).coordinates() for function in functions ]
        res = max(res, Matrix(rows).rank())
        if res == len(functions):
            break
    return res

##
# @brief The Hilbert series data of a polynomial invariant ring generated in known degrees.
# @details The ring is free on `trivial` linear forms and on generators of the listed reflection degrees. Its Hilbert
#          series is 1 / ((1 - t)^trivial prod_i (1 - t^d_i)).
class HilbertSpec:
    __EXCEPTIONAL = { (1, 2, 2): ("E", 6, (2, 5, 6, 8, 9, 12)), (1, 2, 3): ("E", 7, (2, 6, 8, 10, 12, 14, 18)),
                      (1, 2, 4): ("E", 8, (2, 8, 12, 14, 18, 20, 24, 30)) }
    ##
    # @brief Construct a HilbertSpec.
    # @param degrees The reflection degrees.
    # @param trivial The number of trivial directions. Defaults to 0.
    # @param types The Dynkin types the degrees came from. Defaults to an empty tuple.
    # @throw ValueError If a degree is less than 1 or trivial is negative.
    def __init__(self, degrees: Iterable[int], trivial: int = 0, types: Iterable[str] = ( )):
        self.__degrees = tuple(sorted(degrees))
        if any(degree < 1 for degree in self.__degrees) or trivial < 0:
            raise ValueError(f"\"{self.__degrees}\" with {trivial} trivial directions is not a valid Hilbert series.")
        self.__trivial = trivial
        self.__types = tuple(types)
    ##
    # @brief Classify the Dynkin components of a Cartan matrix.
    # @param cartan A square integer matrix given as a sequence of rows.
    # @return A list of (type name, degrees) pairs, one per component, in order of first node.
    # @throw ValueError If a component is not a finite type Dynkin diagram.
    @staticmethod
    def classify(cartan) -> list[tuple[str, tuple[int, ...]]]:
        size = len(cartan)
        neighbours = [ [ j for j in range(size) if j != i and cartan[i][j] != 0 ] for i in range(size) ]
        seen = set()
        res = [ ]
        for start in range(size):
            if start in seen:
                continue
            component = { start }
            frontier = [ start ]
            while frontier:
                current = frontier.pop()
                for other in neighbours[current]:
                    if other not in component:
                        component.add(other)
                        frontier.append(other)
            seen |= component
            res.append(HilbertSpec.__classify_component(cartan, neighbours, sorted(component)))
        return res
    ### @cond
    @staticmethod
    def __classify_component(cartan, neighbours, nodes: list[int]) -> tuple[str, tuple[int, ...]]:
        k = len(nodes)
        bonds = { }
        for i in nodes:
            for j in neighbours[i]:
                if i < j:
                    bonds[(i, j)] = cartan[i][j] * cartan[j][i]
        if len(bonds) != k - 1:
            raise ValueError(f"The Dynkin diagram on nodes {nodes} contains a cycle.")
        if k == 1:
            return ("A1", (2,))
        if 3 in bonds.values():
            if k != 2:
                raise ValueError(f"The Dynkin diagram on nodes {nodes} is not of finite type.")
            return ("G2", (2, 6))
        doubles = [ edge for edge, value in bonds.items() if value == 2 ]
        if len(doubles) > 1 or any(value > 3 for value in bonds.values()):
            raise ValueError(f"The Dynkin diagram on nodes {nodes} is not of finite type.")
        branches = [ i for i in nodes if len(neighbours[i]) >= 3 ]
        if doubles:
            if branches:
                raise ValueError(f"The Dynkin diagram on nodes {nodes} is not of finite type.")
            i, j = doubles[0]
            if len(neighbours[i]) == 1 or len(neighbours[j]) == 1:
                return (f"B{k}", tuple(range(2, 2 * k + 1, 2)))
            if k == 4:
                return ("F4", (2, 6, 8, 12))
            raise ValueError(f"The Dynkin diagram on nodes {nodes} is not of finite type.")
        if not branches:
            return (f"A{k}", tuple(range(2, k + 2)))
        if len(branches) > 1 or len(neighbours[branches[0]]) > 3:
            raise ValueError(f"The Dynkin diagram on nodes {nodes} is not of finite type.")
        center = branches[0]
        arms = [ ]
        for first in neighbours[center]:
            length = 1
            previous, current = center, first
            while True:
                following = [ node for node in neighbours[current] if node != previous ]
                if not following:
                    break
                previous, current = current, following[0]
                length += 1
            arms.append(length)
        arms = tuple(sorted(arms))
        if arms[:2] == (1, 1):
            return (f"D{k}", tuple(sorted(list(range(2, 2 * k - 1, 2)) + [ k ])))
        if arms in HilbertSpec.__EXCEPTIONAL:
            family, rank, degrees = HilbertSpec.__EXCEPTIONAL[arms]
            return (f"{family}{rank}", degrees)
        raise ValueError(f"The Dynkin diagram on nodes {nodes} is not of finite type.")
    ### @endcond
    ##
    # @brief Construct the HilbertSpec of the invariants of a reflection group generated by a simple system.
    # @param simple_roots The simple roots.
    # @param ambient_dimension The dimension of the space the polynomials live on.
    # @return A HilbertSpec whose trivial directions are the ambient directions not spanned by the roots.
    @staticmethod
    def from_simple_roots(simple_roots: list[Vector], ambient_dimension: int):
        cartan = [ [ int(2 * alpha.dot(beta) / beta.dot(beta)) for beta in simple_roots ] for alpha in simple_roots ]
        components = HilbertSpec.classify(cartan)
        degrees = [ degree for _, component in components for degree in component ]
        return HilbertSpec(degrees, ambient_dimension - len(simple_roots), [ name for name, _ in components ])
    def degrees(self) -> tuple[int, ...]:
        return self.__degrees
    def trivial(self) -> int:
        return self.__trivial
    def types(self) -> tuple[str, ...]:
        return self.__types
    ##
    # @brief Retrieve the degrees of a minimal generating set.
    # @return A sorted tuple with one entry 1 per trivial direction followed by the reflection degrees.
    def generator_degrees(self) -> tuple[int, ...]:
        return tuple(sorted((1,) * self.__trivial + self.__degrees))
    ##
    # @brief Compute the group order predicted by the degrees.
    # @return The product of the reflection degrees.
    def order(self) -> int:
        return prod(self.__degrees)
    ##
    # @brief Expand the Hilbert series.
    # @param max_degree The last coefficient to compute.
    # @return A list of graded dimensions for d = 0 ... max_degree.
    def series(self, max_degree: int) -> list[int]:
        res = [ 1 ] + [ 0 ] * max_degree
        for degree in (1,) * self.__trivial + self.__degrees:
            for d in range(degree, max_degree + 1):
                res[d] += res[d - degree]
        return res
    ##
    # @brief Compute a single graded dimension.
    # @param degree The degree d.
    # @return The dimension of the degree d part of the invariant ring.
    def dimension(self, degree: int) -> int:
        if degree < 0:
            return 0
        return self.series(degree)[degree]
    ##
    # @brief Compute the filtered dimensions.
    # @param max_degree The last degree to include.
    # @return A list whose entry d is the dimension of the invariants of degree at most d.
    def cumulative(self, max_degree: int) -> list[int]:
        res = [ ]
        total = 0
        for value in self.series(max_degree):
            total += value
            res.append(total)
        return res
    def to_json(self) -> dict:
        return { "degrees": list(self.__degrees), "trivial": self.__trivial, "types": list(self.__types),
                 "order": self.order() }

##
# @brief A labelled list of generators of a polynomial subalgebra.
# @details Each entry has a label, a function, and a weight. The function is a Polynomial or an object with expand()
#          and gradient(). The weight bounds the degree of the generator from above and is used to bound products.
class GeneratorSet:
    ##
    # @brief Construct a GeneratorSet.
    # @param variables The number of variables.
    # @param entries An iterable of (label, function) or (label, function, weight) tuples. A missing weight is the
    #                degree of the function. Defaults to an empty tuple.
    # @throw ValueError If a weight is less than 1.
    def __init__(self, variables: int, entries: Iterable[tuple] = ( )):
        self.__variables = variables
        self.__entries = [ ]
        for entry in entries:
            self.add(*entry)
    ##
    # @brief Add a generator.
    # @param label The label of the generator.
    # @param function The generator.
    # @param weight The weight of the generator. Defaults to its degree.
    # @throw ValueError If the weight is less than 1.
    def add(self, label: str, function, weight: int = None) -> None:
        weight = function.degree() if weight is None else weight
        if weight < 1:
            raise ValueError(f"The generator \"{label}\" has weight {weight}. Constant generators are not permitted.")
        self.__entries.append((label, function, weight))
    def variables(self) -> int:
        return self.__variables
    def labels(self) -> list[str]:
        return [ label for label, _, _ in self.__entries ]
    def functions(self) -> list:
        return [ function for _, function, _ in self.__entries ]
    def weights(self) -> list[int]:
        return [ weight for _, _, weight in self.__entries ]
    def __len__(self) -> int:
        return len(self.__entries)
    ##
    # @brief Expand every generator.
    # @return A list of Polynomials.
    def polynomials(self) -> list[Polynomial]:
        return [ function if isinstance(function, Polynomial) else function.expand()
                 for _, function, _ in self.__entries ]
    ##
    # @brief Extend the set with its translates.
    # @details A translate equal to an existing generator is skipped.
    # @param shift The translation Vector a.
    # @return A new GeneratorSet with every generator g followed by the translates tau(a)(g), labelled "tau(g)".
    def with_translates(self, shift: Vector):
        res = GeneratorSet(self.__variables, self.__entries)
        known = set(self.polynomials())
        for (label, _, weight), polynomial in zip(self.__entries, self.polynomials()):
            translate = polynomial.translate(shift)
            if translate not in known:
                known.add(translate)
                res.add(f"tau({label})", translate, weight)
        return res
    ##
    # @brief Compute the Jacobian rank of the generators.
    # @param points Explicit sample points. Defaults to None.
    # @param seed The seed for random points. Defaults to 0.
    # @return The largest rank observed.
    def jacobian_rank(self, points: list[Vector] = None, seed: int = 0) -> int:
        return jacobian_rank(self.functions(), points, self.__variables, seed)
    ### @cond
    def __monomials(self, max_degree: int) -> list[tuple]:
        res = [ ]
        for degree in range(max_degree, -1, -1):
            level = [ ]
            for choice in combinations_with_replacement(range(self.__variables), degree):
                exponents = [ 0 ] * self.__variables
                for index in choice:
                    exponents[index] += 1
                level.append(tuple(exponents))
            res.extend(sorted(level, reverse=True))
        return res
    @staticmethod
    def __products(polynomials: list[Polynomial], weights: list[int], max_weight: int, variables: int) -> dict:
        # multisets of generator indices in nondecreasing order, keyed by total weight
        res = { w: [ ] for w in range(max_weight + 1) }
        res[0].append(Polynomial.constant(variables, 1))
        stack = [ ((), 0, Polynomial.constant(variables, 1)) ]
        while stack:
            indices, weight, value = stack.pop()
            start = indices[-1] if indices else 0
            for i in range(start, len(polynomials)):
                total = weight + weights[i]
                if total > max_weight:
                    continue
                product = value * polynomials[i]
                res[total].append(product)
                stack.append((indices + (i,), total, product))
        return res
    @staticmethod
    def __row(polynomial: Polynomial, columns: dict) -> list:
        row = [ 0 ] * len(columns)
        for exponents, value in polynomial.terms().items():
            row[columns[exponents]] = value
        return row
    @staticmethod
    def __check_budget(rows: int, columns: int, budget: int) -> None:
        if rows * columns > budget:
            raise OverflowError(f"The filtered span needs {rows} x {columns} entries, exceeding the term budget of "
                                f"{budget}.")
    ### @endcond
    ##
    # @brief Compute lower bounds for the filtered dimensions of the generated subalgebra.
    # @details Every product of generators with total weight at most max_degree is expanded and row reduced with the
    #          monomial columns ordered by descending degree. The pivot of each echelon row is then its leading
    #          monomial, so the rows with pivot degree at most d span the intersection of the products with the
    #          polynomials of degree at most d.
    # @param max_degree The bound D on weights and degrees.
    # @param budget The bound on rows times columns. Defaults to DEFAULT_TERM_BUDGET.
    # @return A tuple whose entry d counts the echelon rows of pivot degree at most d, for d = 0 ... D.
    # @throw OverflowError If the budget is exceeded.
    def filtered_dimensions(self, max_degree: int, budget: int = DEFAULT_TERM_BUDGET) -> tuple[int, ...]:
        monomials = self.__monomials(max_degree)
        columns = { exponents: i for i, exponents in enumerate(monomials) }
        products = GeneratorSet.__products(self.polynomials(), self.weights(), max_degree, self.__variables)
        rows = [ GeneratorSet.__row(product, columns) for level in products.values() for product in level ]
        GeneratorSet.__check_budget(len(rows), len(columns), budget)
        _, _, pivots = Matrix(rows, len(columns)).row_reduce()
        degrees = [ sum(monomials[pivot]) for pivot in pivots ]
        return tuple(sum(1 for degree in degrees if degree <= d) for d in range(max_degree + 1))
    ##
    # @brief Compute lower bounds for the filtered dimensions after saturating low degree elements.
    # @details Products are added one weight level at a time. When a level yields a new span element whose degree is
    #          below the level, the elements of the lowest such degree are adopted as generators with that degree as
    #          their weight and the computation restarts. The result is still a lower bound: every adopted element
    #          lies in the subalgebra.
    # @param max_degree The bound D on weights and degrees.
    # @param rounds The largest number of restarts. Defaults to 8.
    # @param budget The bound on rows times columns. Defaults to DEFAULT_TERM_BUDGET.
    # @return A tuple (dimensions, adopted) where dimensions is as in filtered_dimensions and adopted is the number of
    #         span elements adopted as generators.
    # @throw OverflowError If the budget is exceeded.
    def saturated_dimensions(self, max_degree: int, rounds: int = 8, budget: int = DEFAULT_TERM_BUDGET) -> tuple:
        monomials = self.__monomials(max_degree)
        columns = { exponents: i for i, exponents in enumerate(monomials) }
        polynomials = self.polynomials()
        weights = self.weights()
        adopted = 0
        for attempt in range(rounds + 1):
            products = GeneratorSet.__products(polynomials, weights, max_degree, self.__variables)
            GeneratorSet.__check_budget(sum(len(level) for level in products.values()), len(columns), budget)
            basis = [ ]
            pivots = ( )
            found = [ ]
            for weight in range(max_degree + 1):
                rows = basis + [ GeneratorSet.__row(product, columns) for product in products[weight] ]
                if not rows:
                    continue
                rank, echelon, following = Matrix(rows, len(columns)).row_reduce()
                known = set(pivots)
                for index, pivot in enumerate(following):
                    degree = sum(monomials[pivot])
                    if pivot not in known and degree < weight:
                        found.append((degree, echelon[index]))
                basis = [ list(echelon[i]) for i in range(rank) ]
                pivots = following
                if found and attempt < rounds:
                    break
            if not found or attempt == rounds:
                break
            lowest = min(degree for degree, _ in found)
            for degree, row in found:
                if degree == lowest:
                    polynomials.append(Polynomial(self.__variables, { monomials[i]: value
                                                                      for i, value in enumerate(row) if value }))
                    weights.append(degree)
                    adopted += 1
        degrees = [ sum(monomials[pivot]) for pivot in pivots ]
        return (tuple(sum(1 for degree in degrees if degree <= d) for d in range(max_degree + 1)), adopted)
    def to_json(self) -> list[dict]:
        return [ { "label": label, "weight": weight } for label, _, weight in self.__entries ]

__all__ = [ "DEFAULT_TERM_BUDGET", "OrbitPowerSum", "OrbitProduct", "jacobian_rank", "HilbertSpec", "GeneratorSet" ]
