##
# @file RootSystem.py
# @brief Root System Construction
# @author Alexander Rothman <[gnomesort@megate.ch](mailto:gnomesort@megate.ch)>
# @date 2024
# @copyright AGPL-3.0-or-later
import re
from enum import IntEnum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import factorial

from .ExactArithmetic import Vector, Matrix
from .WeylGroup import WeylGroup

##
# @brief An enumeration of the root system families that the library can construct.
# @details E8 is only constructed as the ambient parent of E7 and E6. It has no minuscule coweight.
class RootSystemFamily(IntEnum):
    A = 0
    B = 1
    C = 2
    D = 3
    E6 = 4
    E7 = 5
    E8 = 6
    ##
    # @brief Parse a family name.
    # @param text A family name such as "A" or "e7". Case is ignored.
    # @return The matching RootSystemFamily.
    # @throw ValueError If the name does not match any family.
    @staticmethod
    def parse(text: str):
        name = (text or "").strip().upper()
        if name not in RootSystemFamily.__members__:
            raise ValueError(f"\"{text}\" is not a supported root system family.")
        return RootSystemFamily[name]
    ##
    # @brief Retrieve the fixed rank of an exceptional family.
    # @return The rank of E6, E7, or E8. None for the classical families.
    def fixed_rank(self) -> int:
        return { RootSystemFamily.E6: 6, RootSystemFamily.E7: 7, RootSystemFamily.E8: 8 }.get(self)
    ##
    # @brief Retrieve the smallest rank supported by a classical family.
    # @return The minimum rank.
    def minimum_rank(self) -> int:
        return { RootSystemFamily.A: 1, RootSystemFamily.B: 2, RootSystemFamily.C: 2,
                 RootSystemFamily.D: 3 }.get(self, self.fixed_rank())
    ##
    # @brief Convert a RootSystemFamily into a string.
    # @return The name of the family.
    def __str__(self) -> str:
        return self.name

##
# @brief A root system family paired with a rank.
class RootSystemLabel:
    ##
    # @brief Construct a RootSystemLabel.
    # @param family A RootSystemFamily or the name of one.
    # @param rank The rank of the system. Exceptional families may omit it. Defaults to None.
    # @throw ValueError If the family is unknown, if a classical rank is missing or too small, or if an exceptional
    #                   rank disagrees with the family.
    def __init__(self, family, rank: int = None):
        if not isinstance(family, RootSystemFamily):
            family = RootSystemFamily.parse(family)
        fixed = family.fixed_rank()
        if fixed is not None:
            if rank is not None and rank != fixed:
                raise ValueError(f"The family \"{family}\" has rank {fixed}, not {rank}.")
            rank = fixed
        elif rank is None:
            raise ValueError(f"The family \"{family}\" requires a rank.")
        elif rank < family.minimum_rank():
            raise ValueError(f"The family \"{family}\" requires a rank of at least {family.minimum_rank()}.")
        self.__family = family
        self.__rank = rank
    ##
    # @brief Parse a label such as "A3", "D4", or "E7".
    # @param text The label string.
    # @return The parsed RootSystemLabel.
    # @throw ValueError If the string is not a valid label.
    @staticmethod
    def parse(text: str):
        match = re.match(r"^\s*(E[678]|[ABCD])(\d*)\s*$", (text or "").upper())
        if not match:
            raise ValueError(f"\"{text}\" is not a valid root system label.")
        if match.group(1).startswith("E"):
            return RootSystemLabel(match.group(1))
        if match.group(2) == "":
            raise ValueError(f"\"{text}\" is missing a rank.")
        return RootSystemLabel(match.group(1), int(match.group(2), 10))
    ##
    # @brief Retrieve the family.
    # @return A RootSystemFamily.
    def family(self) -> RootSystemFamily:
        return self.__family
    ##
    # @brief Retrieve the rank.
    # @return A positive integer.
    def rank(self) -> int:
        return self.__rank
    def __eq__(self, other) -> bool:
        if not isinstance(other, RootSystemLabel):
            return NotImplemented
        return self.__family == other.__family and self.__rank == other.__rank
    def __hash__(self) -> int:
        return hash((self.__family, self.__rank))
    ##
    # @brief Convert a RootSystemLabel into a string.
    # @return A string such as "A3" or "E7".
    def __str__(self) -> str:
        if self.__family.fixed_rank() is not None:
            return str(self.__family)
        return f"{self.__family}{self.__rank}"

##
# @brief Root data shared by complete root systems and their subsystems.
# @details Everything here is derived from the roots and a simple system: the Gram matrix, the dual basis of the
#          simple roots inside their span, heights, positivity, the highest root, and the minuscule coweights.
class RootSystemBase:
    ##
    # @brief Construct a RootSystemBase.
    # @param ambient_dimension The dimension of the ambient space.
    # @param roots The roots.
    # @param simple_roots An ordered simple system for the roots.
    # @throw ValueError If the simple roots are linearly dependent.
    def __init__(self, ambient_dimension: int, roots, simple_roots):
        self.__ambient_dimension = ambient_dimension
        self.__roots = tuple(sorted(set(roots)))
        self.__root_set = frozenset(self.__roots)
        self.__simple_roots = tuple(simple_roots)
        size = len(self.__simple_roots)
        gram = Matrix([ [ alpha.dot(beta) for beta in self.__simple_roots ] for alpha in self.__simple_roots ], size)
        inverse = gram.inverse()
        self.__dual_basis = tuple(RootSystemBase.__combine(inverse[i], self.__simple_roots, ambient_dimension)
                                  for i in range(size))
        self.__cartan = tuple(tuple(int(2 * gram[i][j] / gram[j][j]) for j in range(size)) for i in range(size))
        self.__components = self.__find_components()
        self.__weyl_group = None
        self.__highest_root = None
        self.__multiplicities = ( )
        if len(self.__components) == 1:
            self.__highest_root = max(self.__roots, key=lambda root: (self.height(root), root))
            self.__multiplicities = tuple(int(value) for value in self.coefficients(self.__highest_root))
    @staticmethod
    def __combine(coefficients, vectors, dimension: int) -> Vector:
        res = Vector.zero(dimension)
        for coefficient, vector in zip(coefficients, vectors):
            if coefficient:
                res = res + vector * coefficient
        return res
    def __find_components(self) -> list[tuple[int, ...]]:
        remaining = set(range(len(self.__simple_roots)))
        res = [ ]
        while remaining:
            start = min(remaining)
            component = { start }
            frontier = [ start ]
            while frontier:
                current = frontier.pop()
                for other in list(remaining - component):
                    if self.__cartan[current][other] != 0:
                        component.add(other)
                        frontier.append(other)
            remaining -= component
            res.append(tuple(sorted(component)))
        return res
    ##
    # @brief Retrieve the dimension of the ambient space.
    # @return An integer.
    def ambient_dimension(self) -> int:
        return self.__ambient_dimension
    ##
    # @brief Retrieve the roots.
    # @return A sorted tuple of Vectors.
    def roots(self) -> tuple[Vector, ...]:
        return self.__roots
    ##
    # @brief Determine whether or not a Vector is a root.
    # @param vector The Vector to test.
    # @return True if vector is a root. Otherwise False.
    def contains_root(self, vector: Vector) -> bool:
        return vector in self.__root_set
    ##
    # @brief Retrieve the simple roots.
    # @return An ordered tuple of Vectors.
    def simple_roots(self) -> tuple[Vector, ...]:
        return self.__simple_roots
    ##
    # @brief Retrieve the dual basis of the simple roots inside their span.
    # @details Element i pairs to 1 with simple root i and to 0 with the others. These are the fundamental coweights.
    # @return A tuple of Vectors.
    def dual_basis(self) -> tuple[Vector, ...]:
        return self.__dual_basis
    ##
    # @brief Retrieve the Cartan matrix.
    # @return A tuple of rows with entry (i, j) equal to 2 (alpha_i, alpha_j) / (alpha_j, alpha_j).
    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        return self.__cartan
    ##
    # @brief Retrieve the connected components of the Dynkin diagram.
    # @return A list of tuples of 0-based simple root indices.
    def components(self) -> list[tuple[int, ...]]:
        return list(self.__components)
    ##
    # @brief Determine whether or not the system is irreducible.
    # @return True if the Dynkin diagram is connected and nonempty. Otherwise False.
    def is_irreducible(self) -> bool:
        return len(self.__components) == 1
    ##
    # @brief Compute the coordinates of a Vector in the simple basis.
    # @param vector A Vector in the span of the roots.
    # @return A tuple of Fractions.
    def coefficients(self, vector: Vector) -> tuple[Fraction, ...]:
        return tuple(vector.dot(dual) for dual in self.__dual_basis)
    ##
    # @brief Compute the height of a Vector.
    # @param vector A Vector in the span of the roots.
    # @return The sum of its simple coordinates.
    def height(self, vector: Vector) -> Fraction:
        return sum(self.coefficients(vector), Fraction(0))
    ##
    # @brief Retrieve the positive roots.
    # @return A sorted tuple of the roots with positive height.
    def positive_roots(self) -> tuple[Vector, ...]:
        return tuple(root for root in self.__roots if self.height(root) > 0)
    ##
    # @brief Determine whether or not a Vector is in the span of the roots.
    # @param vector The Vector to test.
    # @return True if vector is a combination of the simple roots. Otherwise False.
    def in_span(self, vector: Vector) -> bool:
        return RootSystemBase.__combine(self.coefficients(vector), self.__simple_roots,
                                        self.__ambient_dimension) == vector
    ##
    # @brief Retrieve the highest root.
    # @return The root of maximal height. None if the system is not irreducible.
    def highest_root(self) -> Vector:
        return self.__highest_root
    ##
    # @brief Retrieve the simple coordinates of the highest root.
    # @return A tuple of integers. Empty if the system is not irreducible.
    def multiplicities(self) -> tuple[int, ...]:
        return self.__multiplicities
    ##
    # @brief Retrieve the minuscule coweights.
    # @return The dual basis elements of the simple roots with multiplicity 1 in the highest root, in node order.
    def minuscule_coweights(self) -> tuple[Vector, ...]:
        return tuple(self.__dual_basis[i] for i, value in enumerate(self.__multiplicities) if value == 1)
    ##
    # @brief Determine whether or not a Vector is dominant.
    # @param vector The Vector to test.
    # @return True if vector pairs nonnegatively with every simple root. Otherwise False.
    def is_dominant(self, vector: Vector) -> bool:
        return all(vector.dot(alpha) >= 0 for alpha in self.__simple_roots)
    ##
    # @brief Compute the set of root pairings of a Vector.
    # @param vector The Vector to pair.
    # @return A sorted tuple of the distinct values (alpha, vector).
    def pairing_values(self, vector: Vector) -> tuple[Fraction, ...]:
        return tuple(sorted(set(vector.dot(root) for root in self.__roots)))
    ##
    # @brief Determine whether or not a Vector is colinear to a minuscule coweight.
    # @param vector A Vector in the span of the roots.
    # @return A tuple (flag, normalized). flag is True when a positive multiple of vector pairs into {0, 1, -1} with
    #         every root and nontrivially with some root. normalized is that multiple, or None.
    def is_minuscule(self, vector: Vector) -> tuple:
        if vector.is_zero() or not self.in_span(vector):
            return (False, None)
        magnitudes = set(abs(value) for value in self.pairing_values(vector) if value != 0)
        if len(magnitudes) != 1:
            return (False, None)
        scale = 1 / magnitudes.pop()
        return (True, vector * scale)
    ##
    # @brief Construct the subsystem of roots orthogonal to a Vector.
    # @param vector The fixed Vector.
    # @return A SubSystem.
    def orthogonal_subsystem(self, vector: Vector):
        return SubSystem(self, vector)
    ##
    # @brief Retrieve the Weyl group generated by the simple reflections.
    # @return A WeylGroup whose alphabet is the simple system.
    def weyl_group(self) -> WeylGroup:
        if self.__weyl_group is None:
            self.__weyl_group = WeylGroup(list(self.__simple_roots), ambient_dimension=self.__ambient_dimension)
        return self.__weyl_group

##
# @brief The roots of a parent system orthogonal to a fixed Vector.
# @details The simple roots are the positive roots (positivity taken from the parent) that are not a sum of two other
#          positive roots of the subsystem. They are ordered by parent height and then by parent simple coordinates, so
#          parent simple roots keep their parent order.
class SubSystem(RootSystemBase):
    ##
    # @brief Construct a SubSystem.
    # @param parent The parent root system.
    # @param fixed_vector The Vector every root of the subsystem is orthogonal to.
    # @throw ValueError If the fixed Vector has the wrong dimension.
    def __init__(self, parent: RootSystemBase, fixed_vector: Vector):
        if fixed_vector.dimension() != parent.ambient_dimension():
            raise ValueError(f"The vector {fixed_vector} is not in the ambient space of the parent system.")
        roots = [ root for root in parent.roots() if root.dot(fixed_vector) == 0 ]
        positive = [ root for root in roots if parent.height(root) > 0 ]
        positive_set = frozenset(positive)
        simple = [ root for root in positive if not any((root - other) in positive_set for other in positive) ]
        simple.sort(key=lambda root: (parent.height(root), tuple(-value for value in parent.coefficients(root))))
        super().__init__(parent.ambient_dimension(), roots, simple)
        self.__parent = parent
        self.__fixed_vector = fixed_vector
    ##
    # @brief Retrieve the parent system.
    # @return The RootSystemBase this subsystem was cut from.
    def parent(self) -> RootSystemBase:
        return self.__parent
    ##
    # @brief Retrieve the fixed Vector.
    # @return The Vector every root is orthogonal to.
    def fixed_vector(self) -> Vector:
        return self.__fixed_vector

##
# @brief A complete root system in the coordinates of its family.
# @details A_n lives in V_{n+1} with the sum-zero constraint carried as data. B_n, C_n, and D_n live in V_n. E8, E7,
#          and E6 all live in V_8: E7 is the part of E8 in the hyperplane of zero coordinate sum and E6 is the part of
#          E7 orthogonal to the E7 coweight a.
class RootSystem(RootSystemBase):
    ##
    # @brief Construct a RootSystem.
    # @param label The RootSystemLabel to build.
    # @throw ValueError If the label is invalid.
    def __init__(self, label: RootSystemLabel):
        if not isinstance(label, RootSystemLabel):
            raise ValueError(f"\"{label}\" is not a root system label.")
        builders = { RootSystemFamily.A: RootSystem.__build_a, RootSystemFamily.B: RootSystem.__build_b,
                     RootSystemFamily.C: RootSystem.__build_c, RootSystemFamily.D: RootSystem.__build_d,
                     RootSystemFamily.E6: RootSystem.__build_e6, RootSystemFamily.E7: RootSystem.__build_e7,
                     RootSystemFamily.E8: RootSystem.__build_e8 }
        ambient, roots, simple, constraints, names = builders[label.family()](label.rank())
        super().__init__(ambient, roots, simple)
        self.__label = label
        self.__constraints = tuple(constraints)
        self.__names = tuple(names)
        if len(self.__names) != len(self.minuscule_coweights()):
            raise RuntimeError(f"The system {label} produced an unexpected set of minuscule coweights.")
    ##
    # @brief Build a RootSystem, reusing a previously built instance for the same label.
    # @param label The RootSystemLabel to build.
    # @return A RootSystem.
    # @throw ValueError If the label is invalid.
    @staticmethod
    def build(label: RootSystemLabel):
        return _build_cached(label)
    ### @cond
    @staticmethod
    def __unit(dimension: int, *entries) -> Vector:
        coordinates = [ 0 ] * dimension
        for index, value in entries:
            coordinates[index] = value
        return Vector(coordinates)
    @staticmethod
    def __chain(dimension: int, count: int, offset: int = 0) -> list[Vector]:
        return [ RootSystem.__unit(dimension, (i, 1), (i + 1, -1)) for i in range(offset, offset + count) ]
    @staticmethod
    def __long_roots(dimension: int) -> list[Vector]:
        res = [ ]
        for i, j in combinations(range(dimension), 2):
            for x, y in product((1, -1), repeat=2):
                res.append(RootSystem.__unit(dimension, (i, x), (j, y)))
        return res
    @staticmethod
    def __build_a(rank: int) -> tuple:
        dimension = rank + 1
        roots = [ RootSystem.__unit(dimension, (i, 1), (j, -1)) for i in range(dimension) for j in range(dimension)
                  if i != j ]
        return (dimension, roots, RootSystem.__chain(dimension, rank), [ Vector([ 1 ] * dimension) ],
                [ f"a{r}" for r in range(1, rank + 1) ])
    @staticmethod
    def __build_b(rank: int) -> tuple:
        roots = RootSystem.__long_roots(rank)
        roots += [ RootSystem.__unit(rank, (i, sign)) for i in range(rank) for sign in (1, -1) ]
        simple = RootSystem.__chain(rank, rank - 1) + [ RootSystem.__unit(rank, (rank - 1, 1)) ]
        return (rank, roots, simple, [ ], [ "b" ])
    @staticmethod
    def __build_c(rank: int) -> tuple:
        roots = RootSystem.__long_roots(rank)
        roots += [ RootSystem.__unit(rank, (i, 2 * sign)) for i in range(rank) for sign in (1, -1) ]
        simple = RootSystem.__chain(rank, rank - 1) + [ RootSystem.__unit(rank, (rank - 1, 2)) ]
        return (rank, roots, simple, [ ], [ "c" ])
    @staticmethod
    def __build_d(rank: int) -> tuple:
        simple = RootSystem.__chain(rank, rank - 1) + [ RootSystem.__unit(rank, (rank - 2, 1), (rank - 1, 1)) ]
        return (rank, RootSystem.__long_roots(rank), simple, [ ], [ "b", "c-prime", "c" ])
    @staticmethod
    def __build_e8(rank: int) -> tuple:
        half = Fraction(1, 2)
        roots = RootSystem.__long_roots(8)
        for signs in product((half, -half), repeat=8):
            if sum(1 for sign in signs if sign < 0) % 2 == 0:
                roots.append(Vector(signs))
        simple = RootSystem.__chain(8, 6) + [ RootSystem.__unit(8, (5, 1), (6, 1)), Vector([ -half ] * 8) ]
        return (8, roots, simple, [ Vector([ 1 ] * 8) ], [ ])
    @staticmethod
    def __alpha_7_prime() -> Vector:
        half = Fraction(1, 2)
        return Vector([ -half ] * 4 + [ half ] * 4)
    @staticmethod
    def __build_e7(rank: int) -> tuple:
        parent = RootSystem.build(RootSystemLabel(RootSystemFamily.E8))
        roots = [ root for root in parent.roots() if sum(root.coordinates()) == 0 ]
        simple = RootSystem.__chain(8, 6) + [ RootSystem.__alpha_7_prime() ]
        return (8, roots, simple, [ Vector([ 1 ] * 8) ], [ "a" ])
    @staticmethod
    def __build_e6(rank: int) -> tuple:
        parent = RootSystem.build(RootSystemLabel(RootSystemFamily.E7))
        a = parent.minuscule_coweights()[0]
        roots = [ root for root in parent.roots() if root.dot(a) == 0 ]
        simple = RootSystem.__chain(8, 5, 1) + [ RootSystem.__alpha_7_prime() ]
        return (8, roots, simple, [ Vector([ 1 ] * 8), a ], [ "b-plus", "b-minus" ])
    ### @endcond
    ##
    # @brief Retrieve the label.
    # @return The RootSystemLabel the system was built from.
    def label(self) -> RootSystemLabel:
        return self.__label
    ##
    # @brief Retrieve the family.
    # @return A RootSystemFamily.
    def family(self) -> RootSystemFamily:
        return self.__label.family()
    ##
    # @brief Retrieve the rank.
    # @return The number of simple roots.
    def rank(self) -> int:
        return self.__label.rank()
    ##
    # @brief Retrieve vectors spanning the orthogonal complement of the roots in the ambient space.
    # @return A tuple of Vectors. A_n and E7 have (1, ..., 1). E6 has (1, ..., 1) and the E7 coweight a.
    def constraint_vectors(self) -> tuple[Vector, ...]:
        return self.__constraints
    ##
    # @brief Retrieve the order of the Weyl group from its classical formula.
    # @return An integer.
    def weyl_order(self) -> int:
        n = self.rank()
        family = self.family()
        if family == RootSystemFamily.A:
            return factorial(n + 1)
        elif family in (RootSystemFamily.B, RootSystemFamily.C):
            return 2 ** n * factorial(n)
        elif family == RootSystemFamily.D:
            return 2 ** (n - 1) * factorial(n)
        return { RootSystemFamily.E6: 51840, RootSystemFamily.E7: 2903040, RootSystemFamily.E8: 696729600 }[family]
    ##
    # @brief Retrieve the names of the minuscule coweights.
    # @return A tuple of names in the same order as minuscule_coweights().
    def coweight_names(self) -> tuple[str, ...]:
        return self.__names
    ##
    # @brief Select a minuscule coweight by name or 1-based index.
    # @param choice A name such as "c-prime", a 1-based integer index, or a string containing one.
    # @return A tuple (name, coweight).
    # @throw ValueError If the choice does not select a minuscule coweight.
    def coweight(self, choice) -> tuple[str, Vector]:
        coweights = self.minuscule_coweights()
        if isinstance(choice, str) and choice.strip().isdigit():
            choice = int(choice.strip(), 10)
        if isinstance(choice, int):
            if 1 <= choice <= len(coweights):
                return (self.__names[choice - 1], coweights[choice - 1])
        elif isinstance(choice, str) and choice.strip().lower() in self.__names:
            index = self.__names.index(choice.strip().lower())
            return (self.__names[index], coweights[index])
        raise ValueError(f"\"{choice}\" does not select a minuscule coweight of {self.__label}. The choices are "
                         f"{', '.join(self.__names) or 'none'}.")
    ##
    # @brief Convert the RootSystem into a JSON compatible summary.
    # @return A dictionary.
    def to_json(self) -> dict:
        return { "label": str(self.__label), "ambient_dimension": self.ambient_dimension(),
                 "root_count": len(self.roots()),
                 "simple_roots": [ root.to_json() for root in self.simple_roots() ],
                 "highest_root": self.highest_root().to_json(),
                 "multiplicities": list(self.multiplicities()),
                 "minuscule_coweights": [ { "name": name, "vector": vector.to_json(), "q": str(vector.q()) }
                                          for name, vector in zip(self.__names, self.minuscule_coweights()) ],
                 "weyl_order": self.weyl_order() }

### @cond
@lru_cache(maxsize=None)
def _build_cached(label: RootSystemLabel) -> RootSystem:
    return RootSystem(label)
### @endcond

__all__ = [ "RootSystemFamily", "RootSystemLabel", "RootSystemBase", "SubSystem", "RootSystem" ]
