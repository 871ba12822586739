##
# @file ExactArithmetic.py
# @brief Exact Rational Vectors and Matrices
# @author Alexander Rothman <[gnomesort@megate.ch](mailto:gnomesort@megate.ch)>
# @date 2024
# @copyright AGPL-3.0-or-later
from fractions import Fraction
from math import lcm
from typing import Iterable

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

##
# @brief Convert a rational value into its canonical string form.
# @param value The value to convert.
# @return A string of the form "p/q". The denominator is omitted when it is 1.
def rational_to_string(value: Fraction) -> str:
    return str(Fraction(value))

##
# @brief Parse a rational value from a string.
# @param text A string of the form "p/q" or "p".
# @return The parsed Fraction.
# @throw ValueError If the string is not a rational number.
def rational_from_string(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError, AttributeError):
        raise ValueError(f"\"{text}\" is not a valid rational number.")

##
# @brief An immutable vector of exact rational coordinates.
# @details Vectors hash and compare through their lowest-terms coordinates. The ordering is lexicographic on the
#          coordinates and is the canonical ordering used everywhere a deterministic iteration order is required.
class Vector:
    ##
    # @brief Construct a Vector.
    # @param coordinates An iterable of values accepted by Fraction (integers, Fractions, or strings like "3/4").
    # @throw ValueError If any coordinate is not a rational number.
    def __init__(self, coordinates: Iterable):
        try:
            self.__coordinates = tuple(Fraction(value) for value in coordinates)
        except (TypeError, ValueError, ZeroDivisionError):
            raise ValueError(f"\"{coordinates}\" is not a valid list of rational coordinates.")
        self.__hash = hash(self.__coordinates)
    ### @cond
    @classmethod
    def _wrap(cls, coordinates: tuple):
        res = cls.__new__(cls)
        res.__coordinates = coordinates
        res.__hash = hash(coordinates)
        return res
    ### @endcond
    ##
    # @brief Construct the zero Vector.
    # @param dimension The length of the Vector.
    # @return A Vector of zeros.
    @staticmethod
    def zero(dimension: int):
        return Vector._wrap(tuple(Fraction(0) for _ in range(dimension)))
    ##
    # @brief Construct a standard basis Vector.
    # @param dimension The length of the Vector.
    # @param index The 0-based index of the nonzero coordinate.
    # @return The Vector e_index.
    @staticmethod
    def basis(dimension: int, index: int):
        return Vector._wrap(tuple(Fraction(1 if i == index else 0) for i in range(dimension)))
    ##
    # @brief Construct a Vector from its JSON representation.
    # @param data A list of rational strings.
    # @return The parsed Vector.
    # @throw ValueError If the data is not a list of rational strings.
    @staticmethod
    def from_json(data: list):
        if not isinstance(data, list):
            raise ValueError(f"\"{data}\" is not a JSON vector.")
        return Vector._wrap(tuple(rational_from_string(str(value)) for value in data))
    ##
    # @brief Retrieve the coordinates of the Vector.
    # @return A tuple of Fractions.
    def coordinates(self) -> tuple:
        return self.__coordinates
    ##
    # @brief Retrieve the dimension of the Vector.
    # @return The number of coordinates.
    def dimension(self) -> int:
        return len(self.__coordinates)
    ##
    # @brief Compute the standard inner product of two Vectors.
    # @param other The right-hand Vector.
    # @return The exact inner product.
    # @throw ValueError If the Vectors have different dimensions.
    def dot(self, other) -> Fraction:
        if len(self.__coordinates) != len(other.__coordinates):
            raise ValueError(f"Cannot pair vectors of dimension {len(self.__coordinates)} and "
                             f"{len(other.__coordinates)}.")
        return sum((x * y for x, y in zip(self.__coordinates, other.__coordinates) if x and y), Fraction(0))
    ##
    # @brief Compute the quadratic form q(v) = (v, v) / 2.
    # @return The exact value of q.
    def q(self) -> Fraction:
        return self.dot(self) / 2
    ##
    # @brief Determine whether or not the Vector is zero.
    # @return True if every coordinate is zero. Otherwise False.
    def is_zero(self) -> bool:
        return not any(self.__coordinates)
    ##
    # @brief Compute the least common multiple of the coordinate denominators.
    # @return A positive integer L such that L * v has integer coordinates.
    def common_denominator(self) -> int:
        res = 1
        for value in self.__coordinates:
            res = lcm(res, value.denominator)
        return res
    def __check_dimension(self, other) -> None:
        if len(self.__coordinates) != len(other.__coordinates):
            raise ValueError(f"Cannot combine vectors of dimension {len(self.__coordinates)} and "
                             f"{len(other.__coordinates)}.")
    def __add__(self, other):
        self.__check_dimension(other)
        return Vector._wrap(tuple(x + y for x, y in zip(self.__coordinates, other.__coordinates)))
    def __sub__(self, other):
        self.__check_dimension(other)
        return Vector._wrap(tuple(x - y for x, y in zip(self.__coordinates, other.__coordinates)))
    def __neg__(self):
        return Vector._wrap(tuple(-x for x in self.__coordinates))
    def __mul__(self, scalar):
        scalar = Fraction(scalar)
        return Vector._wrap(tuple(x * scalar for x in self.__coordinates))
    def __rmul__(self, scalar):
        return self.__mul__(scalar)
    def __truediv__(self, scalar):
        scalar = Fraction(scalar)
        if scalar == 0:
            raise ValueError("Cannot divide a vector by zero.")
        return Vector._wrap(tuple(x / scalar for x in self.__coordinates))
    def __len__(self) -> int:
        return len(self.__coordinates)
    def __iter__(self):
        return iter(self.__coordinates)
    def __getitem__(self, index: int) -> Fraction:
        return self.__coordinates[index]
    ##
    # @brief Perform a 3-way lexicographic comparison between two Vectors.
    # @param other The Vector to compare to.
    # @return 0 if the Vectors are equal. >0 if the left-hand Vector is greater. <0 if it is less.
    def compare(self, other) -> int:
        if self.__coordinates == other.__coordinates:
            return 0
        return -1 if self.__coordinates < other.__coordinates else 1
    def __eq__(self, other) -> bool:
        if not isinstance(other, Vector):
            return NotImplemented
        return self.__hash == other.__hash and self.__coordinates == other.__coordinates
    def __lt__(self, other) -> bool:
        return self.__coordinates < other.__coordinates
    def __le__(self, other) -> bool:
        return self.__coordinates <= other.__coordinates
    def __gt__(self, other) -> bool:
        return self.__coordinates > other.__coordinates
    def __ge__(self, other) -> bool:
        return self.__coordinates >= other.__coordinates
    def __hash__(self) -> int:
        return self.__hash
    ##
    # @brief Convert the Vector into a string.
    # @return A string of the form "(p/q, ...)".
    def __str__(self) -> str:
        return f"({', '.join(rational_to_string(x) for x in self.__coordinates)})"
    def __repr__(self) -> str:
        return f"Vector({self})"
    ##
    # @brief Convert the Vector into a JSON compatible value.
    # @return A list of rational strings.
    def to_json(self) -> list[str]:
        return [ rational_to_string(x) for x in self.__coordinates ]

##
# @brief An immutable rectangular matrix of exact rational entries.
class Matrix:
    ##
    # @brief Construct a Matrix.
    # @param rows An iterable of rows. Each row is an iterable of values accepted by Fraction.
    # @param columns The number of columns. This is only required when there are no rows. Defaults to None.
    # @throw ValueError If the rows are ragged or the column count disagrees with the rows.
    def __init__(self, rows: Iterable, columns: int = None):
        self.__rows = tuple(tuple(Fraction(value) for value in row) for row in rows)
        if len(self.__rows) > 0:
            width = len(self.__rows[0])
            for row in self.__rows:
                if len(row) != width:
                    raise ValueError("Matrix rows must all have the same length.")
            if columns is not None and columns != width:
                raise ValueError(f"Expected {columns} columns but found {width}.")
            self.__columns = width
        else:
            self.__columns = columns if columns is not None else 0
    ##
    # @brief Construct an identity Matrix.
    # @param dimension The number of rows and columns.
    # @return The identity Matrix.
    @staticmethod
    def identity(dimension: int):
        return Matrix([ [ 1 if i == j else 0 for j in range(dimension) ] for i in range(dimension) ], dimension)
    ##
    # @brief Construct a Matrix whose columns are the given Vectors.
    # @param columns A list of Vectors of equal dimension.
    # @param dimension The row count. Only required when there are no columns.
    # @return The Matrix.
    @staticmethod
    def from_columns(columns: list[Vector], dimension: int = None):
        if len(columns) == 0:
            return Matrix([ [ ] for _ in range(dimension or 0) ], 0)
        return Matrix([ [ column[i] for column in columns ] for i in range(columns[0].dimension()) ], len(columns))
    ##
    # @brief Retrieve the rows of the Matrix.
    # @return A tuple of tuples of Fractions.
    def rows(self) -> tuple:
        return self.__rows
    ##
    # @brief Retrieve the number of rows.
    # @return The row count.
    def row_count(self) -> int:
        return len(self.__rows)
    ##
    # @brief Retrieve the number of columns.
    # @return The column count.
    def column_count(self) -> int:
        return self.__columns
    def __getitem__(self, index: int) -> tuple:
        return self.__rows[index]
    ##
    # @brief Compute the transpose of the Matrix.
    # @return The transposed Matrix.
    def transpose(self):
        return Matrix([ [ row[j] for row in self.__rows ] for j in range(self.__columns) ], len(self.__rows))
    ##
    # @brief Multiply two Matrices.
    # @param other The right-hand Matrix.
    # @return The product self * other.
    # @throw ValueError If the inner dimensions disagree.
    def multiply(self, other):
        if self.__columns != other.row_count():
            raise ValueError(f"Cannot multiply a {self.row_count()}x{self.__columns} matrix by a "
                             f"{other.row_count()}x{other.column_count()} matrix.")
        columns = other.transpose().rows()
        return Matrix([ [ sum((x * y for x, y in zip(row, column)), Fraction(0)) for column in columns ]
                        for row in self.__rows ], other.column_count())
    def __matmul__(self, other):
        return self.multiply(other)
    ##
    # @brief Apply the Matrix to a Vector.
    # @param vector The Vector to transform.
    # @return The product of the Matrix and the Vector.
    # @throw ValueError If the Vector has the wrong dimension.
    def apply(self, vector: Vector) -> Vector:
        if vector.dimension() != self.__columns:
            raise ValueError(f"Cannot apply a matrix with {self.__columns} columns to a vector of dimension "
                             f"{vector.dimension()}.")
        coordinates = vector.coordinates()
        return Vector._wrap(tuple(sum((x * y for x, y in zip(row, coordinates) if x and y), Fraction(0))
                                  for row in self.__rows))
    ##
    # @brief Determine whether or not the Matrix is orthogonal.
    # @return True if the Matrix is square and its transpose is its inverse. Otherwise False.
    def is_orthogonal(self) -> bool:
        if self.row_count() != self.__columns:
            return False
        return self.transpose().multiply(self) == Matrix.identity(self.__columns)
    ##
    # @brief Compute the exact reduced row-echelon form of the Matrix.
    # @details Columns are reduced in their stored order, so callers that need a particular pivot preference must
    #          order their columns accordingly.
    # @return A tuple (rank, echelon, pivot_columns). The echelon Matrix has the same shape as the input with zero
    #         rows last.
    def row_reduce(self) -> tuple:
        if self.row_count() == 0 or self.__columns == 0:
            return (0, self, ())
        domain_matrix = DomainMatrix([ [ QQ(value.numerator, value.denominator) for value in row ]
                                       for row in self.__rows ], (self.row_count(), self.__columns), QQ)
        reduced, pivots = domain_matrix.rref()
        echelon = Matrix([ [ Fraction(int(value.numerator), int(value.denominator)) for value in row ]
                           for row in reduced.to_list() ], self.__columns)
        return (len(pivots), echelon, tuple(pivots))
    ##
    # @brief Compute the rank of the Matrix.
    # @return The exact rank.
    def rank(self) -> int:
        return self.row_reduce()[0]
    ##
    # @brief Compute the inverse of a square Matrix.
    # @return The inverse Matrix.
    # @throw ValueError If the Matrix is not square or is singular.
    def inverse(self):
        size = self.row_count()
        if size != self.__columns:
            raise ValueError("Only square matrices can be inverted.")
        augmented = Matrix([ list(row) + [ 1 if i == j else 0 for j in range(size) ]
                             for i, row in enumerate(self.__rows) ], 2 * size)
        rank, echelon, pivots = augmented.row_reduce()
        if size > 0 and tuple(pivots[:size]) != tuple(range(size)):
            raise ValueError("The matrix is singular.")
        return Matrix([ row[size:] for row in echelon.rows() ], size)
    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.__columns == other.__columns and self.__rows == other.__rows
    def __hash__(self) -> int:
        return hash((self.__columns, self.__rows))
    def __str__(self) -> str:
        return "[" + ", ".join(f"[{', '.join(rational_to_string(x) for x in row)}]" for row in self.__rows) + "]"
    ##
    # @brief Convert the Matrix into a JSON compatible value.
    # @return A list of lists of rational strings.
    def to_json(self) -> list[list[str]]:
        return [ [ rational_to_string(x) for x in row ] for row in self.__rows ]

__all__ = [ "rational_to_string", "rational_from_string", "Vector", "Matrix" ]
