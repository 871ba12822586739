##
# @file WeylGroup.py
# @brief Weyl Group Actions, Orbits, and Words
# @author Alexander Rothman <[gnomesort@megate.ch](mailto:gnomesort@megate.ch)>
# @date 2024
# @copyright AGPL-3.0-or-later
from typing import Iterable

from .ExactArithmetic import Vector, Matrix

##
# @brief The default bound on orbit sizes.
DEFAULT_ORBIT_CAP = 100000
##
# @brief The default bound on enumerated group orders.
DEFAULT_GROUP_CAP = 100000

##
# @brief A word in simple reflections.
# @details Letters are 1-based indices into an alphabet of simple roots. The composition order is fixed: the leftmost
#          letter is applied last. The word (1, 2) therefore represents s_1 s_2 and sends v to s_1(s_2(v)).
class WeylWord:
    ##
    # @brief Construct a WeylWord.
    # @param letters An iterable of positive integers. Defaults to the empty word.
    # @throw ValueError If any letter is not a positive integer.
    def __init__(self, letters: Iterable[int] = ( )):
        self.__letters = tuple(letters)
        for letter in self.__letters:
            if not isinstance(letter, int) or letter < 1:
                raise ValueError(f"\"{letter}\" is not a valid simple reflection index.")
    ##
    # @brief Construct a WeylWord from its JSON representation.
    # @param data A list of positive integers.
    # @return The parsed WeylWord.
    @staticmethod
    def from_json(data: list):
        if not isinstance(data, list):
            raise ValueError(f"\"{data}\" is not a JSON word.")
        return WeylWord(data)
    ##
    # @brief Retrieve the letters of the WeylWord.
    # @return A tuple of 1-based simple reflection indices.
    def letters(self) -> tuple[int, ...]:
        return self.__letters
    ##
    # @brief Compute the inverse word.
    # @details Simple reflections are involutions so the inverse is the reversed word.
    # @return The inverse WeylWord.
    def inverse(self):
        return WeylWord(reversed(self.__letters))
    ##
    # @brief Compose two words.
    # @param other The word to apply first.
    # @return The word that applies other and then self.
    def compose(self, other):
        return WeylWord(self.__letters + other.__letters)
    def __len__(self) -> int:
        return len(self.__letters)
    def __eq__(self, other) -> bool:
        if not isinstance(other, WeylWord):
            return NotImplemented
        return self.__letters == other.__letters
    def __hash__(self) -> int:
        return hash(self.__letters)
    ##
    # @brief Convert the WeylWord into a string.
    # @return A string like "s1 s3 s2". The empty word is "e".
    def __str__(self) -> str:
        if len(self.__letters) == 0:
            return "e"
        return " ".join(f"s{letter}" for letter in self.__letters)
    ##
    # @brief Convert the WeylWord into a JSON compatible value.
    # @return A list of integers.
    def to_json(self) -> list[int]:
        return list(self.__letters)

##
# @brief An element of a Weyl group represented by a word and an exact orthogonal matrix.
class GroupElement:
    ##
    # @brief Construct a GroupElement.
    # @param group The WeylGroup whose alphabet the word refers to.
    # @param word The WeylWord representing the element.
    def __init__(self, group, word: WeylWord):
        self.__group = group
        self.__word = word
        self.__matrix = None
    ##
    # @brief Retrieve the witness word of the element.
    # @return A WeylWord.
    def word(self) -> WeylWord:
        return self.__word
    ##
    # @brief Retrieve the matrix of the element.
    # @details The matrix is computed on first use by applying the word to the standard basis.
    # @return A square Matrix M with M v = w(v).
    def matrix(self) -> Matrix:
        if self.__matrix is None:
            dimension = self.__group.ambient_dimension()
            columns = [ self.__group.apply(self.__word, Vector.basis(dimension, j)) for j in range(dimension) ]
            self.__matrix = Matrix.from_columns(columns, dimension)
        return self.__matrix
    ##
    # @brief Apply the element to a Vector.
    # @param vector The Vector to transform.
    # @return The transformed Vector.
    def apply(self, vector: Vector) -> Vector:
        return self.__group.apply(self.__word, vector)

##
# @brief An orbit of a Vector under a reflection group, with a witness word for every element.
class Orbit:
    ##
    # @brief Construct an Orbit.
    # @param base The Vector the orbit was generated from.
    # @param words A dictionary mapping each element to a WeylWord that sends base to it.
    # @throw ValueError If base is not an element of the orbit.
    def __init__(self, base: Vector, words: dict):
        if base not in words:
            raise ValueError(f"The base vector {base} must belong to its orbit.")
        self.__base = base
        self.__words = dict(words)
        self.__elements = tuple(sorted(self.__words))
        self.__element_set = frozenset(self.__elements)
    ##
    # @brief Retrieve the base Vector.
    # @return The Vector the orbit was generated from.
    def base(self) -> Vector:
        return self.__base
    ##
    # @brief Retrieve the elements of the Orbit.
    # @return A sorted tuple of Vectors.
    def elements(self) -> tuple[Vector, ...]:
        return self.__elements
    ##
    # @brief Retrieve the elements of the Orbit as a set.
    # @return A frozenset of Vectors.
    def element_set(self) -> frozenset:
        return self.__element_set
    ##
    # @brief Retrieve the witness word for an element.
    # @param element A Vector in the Orbit.
    # @return A WeylWord sending the base to element.
    # @throw KeyError If element is not in the Orbit.
    def word(self, element: Vector) -> WeylWord:
        return self.__words[element]
    def __len__(self) -> int:
        return len(self.__elements)
    def __contains__(self, element: Vector) -> bool:
        return element in self.__element_set
    def __iter__(self):
        return iter(self.__elements)
    ##
    # @brief Convert the Orbit into a JSON compatible value.
    # @return A dictionary containing the base, the elements, and their words.
    def to_json(self) -> dict:
        return { "base": self.__base.to_json(), "elements": [ element.to_json() for element in self.__elements ],
                 "words": [ self.__words[element].to_json() for element in self.__elements ] }

##
# @brief A partition of a finite set of Vectors into orbits of a subgroup.
class OrbitPartition:
    ##
    # @brief Construct an OrbitPartition.
    # @param blocks An iterable of iterables of Vectors.
    # @throw ValueError If two blocks intersect.
    def __init__(self, blocks: Iterable):
        normalized = [ tuple(sorted(block)) for block in blocks ]
        normalized.sort(key=lambda block: (len(block), block))
        self.__blocks = tuple(normalized)
        self.__index = { }
        for i, block in enumerate(self.__blocks):
            for element in block:
                if element in self.__index:
                    raise ValueError(f"The vector {element} appears in more than one block.")
                self.__index[element] = i
    ##
    # @brief Retrieve the blocks of the partition.
    # @return A tuple of sorted tuples of Vectors, ordered by size and then by first element.
    def blocks(self) -> tuple:
        return self.__blocks
    ##
    # @brief Retrieve the block sizes.
    # @return A tuple of integers in block order.
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(block) for block in self.__blocks)
    ##
    # @brief Find the block containing a Vector.
    # @param element A Vector in the partitioned set.
    # @return The index of the block containing element.
    # @throw KeyError If element is not in the partitioned set.
    def block_of(self, element: Vector) -> int:
        return self.__index[element]
    ##
    # @brief Compare two partitions of the same set.
    # @param other The OrbitPartition to compare to.
    # @return True if both partitions have exactly the same blocks. Otherwise False.
    def __eq__(self, other) -> bool:
        if not isinstance(other, OrbitPartition):
            return NotImplemented
        return set(self.__blocks) == set(other.__blocks)
    def __hash__(self) -> int:
        return hash(frozenset(self.__blocks))
    def __len__(self) -> int:
        return len(self.__blocks)
    ##
    # @brief Convert the OrbitPartition into a JSON compatible value.
    # @return A list of lists of JSON vectors.
    def to_json(self) -> list:
        return [ [ element.to_json() for element in block ] for block in self.__blocks ]

##
# @brief A reflection group generated by reflections in a list of roots.
# @details Every generator carries a word in an alphabet of simple roots. For the Weyl group of a root system the
#          alphabet is the simple system and each generator is its own single-letter word. Subgroups (for example
#          stabilizers) share the alphabet of their parent so that every witness word they produce can be applied
#          in the parent.
class WeylGroup:
    ##
    # @brief Construct a WeylGroup.
    # @param generators The roots whose reflections generate the group.
    # @param alphabet The simple roots that word letters refer to. If this is None then the generators themselves are
    #                 the alphabet. Defaults to None.
    # @param words The word of each generator's reflection in the alphabet. If this is None then generator i is the
    #              word (i + 1,). Defaults to None.
    # @param simple Whether or not the generators form a simple system for the group they generate. Dominance
    #               operations require a simple system. Defaults to True.
    # @param ambient_dimension The dimension of the ambient space. Only required when there are no generators and no
    #                          alphabet. Defaults to None.
    # @throw ValueError If a generator is zero, if the words and generators disagree in length, or if the dimension
    #                   cannot be determined.
    def __init__(self, generators: list[Vector], alphabet: list[Vector] = None, words: list[WeylWord] = None,
                 simple: bool = True, ambient_dimension: int = None):
        self.__generators = tuple(generators)
        for generator in self.__generators:
            if generator.is_zero():
                raise ValueError("A reflection group cannot be generated by the zero vector.")
        self.__alphabet = tuple(alphabet) if alphabet is not None else self.__generators
        if words is None:
            if alphabet is not None:
                raise ValueError("Generator words are required when an explicit alphabet is provided.")
            words = [ WeylWord((i + 1,)) for i in range(len(self.__generators)) ]
        self.__words = tuple(words)
        if len(self.__words) != len(self.__generators):
            raise ValueError("Every generator requires exactly one word.")
        if ambient_dimension is None:
            if len(self.__generators) > 0:
                ambient_dimension = self.__generators[0].dimension()
            elif len(self.__alphabet) > 0:
                ambient_dimension = self.__alphabet[0].dimension()
            else:
                raise ValueError("The ambient dimension of a trivial group must be explicit.")
        self.__ambient_dimension = ambient_dimension
        self.__simple = simple
        self.__root_closure = None
    ##
    # @brief Retrieve the generating roots.
    # @return A tuple of Vectors.
    def generators(self) -> tuple[Vector, ...]:
        return self.__generators
    ##
    # @brief Retrieve the word of each generator.
    # @return A tuple of WeylWords.
    def generator_words(self) -> tuple[WeylWord, ...]:
        return self.__words
    ##
    # @brief Retrieve the alphabet that words refer to.
    # @return A tuple of Vectors.
    def alphabet(self) -> tuple[Vector, ...]:
        return self.__alphabet
    ##
    # @brief Retrieve the dimension of the ambient space.
    # @return An integer.
    def ambient_dimension(self) -> int:
        return self.__ambient_dimension
    ##
    # @brief Determine whether or not the generators form a simple system.
    # @return True if dominance operations are available. Otherwise False.
    def is_simple_system(self) -> bool:
        return self.__simple
    ##
    # @brief Reflect a Vector in the hyperplane orthogonal to a root.
    # @param alpha The root defining the reflection.
    # @param vector The Vector to reflect.
    # @return vector - (2 (vector, alpha) / (alpha, alpha)) alpha.
    # @throw ValueError If alpha is zero.
    @staticmethod
    def reflect(alpha: Vector, vector: Vector) -> Vector:
        norm = alpha.dot(alpha)
        if norm == 0:
            raise ValueError("Cannot reflect in the zero vector.")
        pairing = vector.dot(alpha)
        if pairing == 0:
            return vector
        return vector - alpha * (2 * pairing / norm)
    ##
    # @brief Apply a word to a Vector.
    # @param word A WeylWord in this group's alphabet.
    # @param vector The Vector to transform.
    # @return The transformed Vector.
    # @throw ValueError If the word uses a letter outside of the alphabet.
    def apply(self, word: WeylWord, vector: Vector) -> Vector:
        res = vector
        for letter in reversed(word.letters()):
            if letter > len(self.__alphabet):
                raise ValueError(f"The letter {letter} is outside of an alphabet of size {len(self.__alphabet)}.")
            res = WeylGroup.reflect(self.__alphabet[letter - 1], res)
        return res
    ##
    # @brief Construct the GroupElement represented by a word.
    # @param word A WeylWord in this group's alphabet.
    # @return A GroupElement.
    def element(self, word: WeylWord) -> GroupElement:
        return GroupElement(self, word)
    ##
    # @brief Compute the closure of the generators under the generating reflections.
    # @return A sorted tuple of roots. The group acts faithfully on this set.
    def root_closure(self) -> tuple[Vector, ...]:
        if self.__root_closure is None:
            seen = set(self.__generators)
            frontier = sorted(seen)
            while frontier:
                found = [ ]
                for root in frontier:
                    for generator in self.__generators:
                        image = WeylGroup.reflect(generator, root)
                        if image not in seen:
                            seen.add(image)
                            found.append(image)
                frontier = sorted(found)
            self.__root_closure = tuple(sorted(seen))
        return self.__root_closure
    ##
    # @brief Determine whether or not a Vector is dominant with respect to the generators.
    # @param vector The Vector to test.
    # @return True if the Vector pairs nonnegatively with every generator. Otherwise False.
    def is_dominant(self, vector: Vector) -> bool:
        return all(vector.dot(generator) >= 0 for generator in self.__generators)
    def __require_simple(self) -> None:
        if not self.__simple:
            raise ValueError("Dominance requires a group generated by a simple system.")
    ##
    # @brief Compute the dominant representative of a Vector's orbit.
    # @details The generators are scanned in index order. The first generator pairing negatively with the current
    #          Vector is applied and the scan restarts.
    # @param vector The Vector to move into the dominant chamber. Components orthogonal to every generator are
    #               preserved.
    # @return A tuple (dominant, word) such that applying word to vector yields dominant.
    # @throw ValueError If the generators are not a simple system.
    # @throw RuntimeError If the iteration cap is exhausted.
    def dominant(self, vector: Vector) -> tuple[Vector, WeylWord]:
        self.__require_simple()
        cap = 64 * max(1, len(self.root_closure()))
        current = vector
        word = WeylWord()
        for _ in range(cap):
            for i, generator in enumerate(self.__generators):
                if current.dot(generator) < 0:
                    current = WeylGroup.reflect(generator, current)
                    word = self.__words[i].compose(word)
                    break
            else:
                return (current, word)
        raise RuntimeError(f"The dominance iteration for {vector} did not terminate within {cap} steps.")
    ##
    # @brief Compute the orbit of a Vector.
    # @details The orbit is built breadth first. Each frontier is visited in sorted order and the generators are tried
    #          in index order, so the witness words are reproducible.
    # @param vector The base Vector.
    # @param cap The largest permitted orbit. Defaults to DEFAULT_ORBIT_CAP.
    # @return The Orbit of vector.
    # @throw OverflowError If the orbit has more than cap elements.
    def orbit(self, vector: Vector, cap: int = DEFAULT_ORBIT_CAP) -> Orbit:
        words = { vector: WeylWord() }
        frontier = [ vector ]
        while frontier:
            found = [ ]
            for current in frontier:
                for i, generator in enumerate(self.__generators):
                    image = WeylGroup.reflect(generator, current)
                    if image not in words:
                        words[image] = self.__words[i].compose(words[current])
                        if len(words) > cap:
                            raise OverflowError(f"The orbit of {vector} exceeds the orbit cap of {cap} elements.")
                        found.append(image)
            frontier = sorted(found)
        return Orbit(vector, words)
    ##
    # @brief Retrieve the generators orthogonal to a dominant Vector.
    # @param vector A dominant Vector.
    # @return A list of the generating simple roots orthogonal to vector. They generate the full stabilizer.
    # @throw ValueError If the group is not generated by a simple system or if vector is not dominant.
    def stabilizer_simple_roots(self, vector: Vector) -> list[Vector]:
        self.__require_simple()
        if not self.is_dominant(vector):
            raise ValueError(f"The vector {vector} is not dominant. Compute its dominant representative first.")
        return [ generator for generator in self.__generators if generator.dot(vector) == 0 ]
    ##
    # @brief Construct the stabilizer subgroup of any Vector.
    # @details The stabilizer of a dominant Vector is generated by the simple roots orthogonal to it. For any other
    #          Vector those roots are conjugated back by the dominant word.
    # @param vector The Vector to stabilize.
    # @return A WeylGroup sharing this group's alphabet. Its generators form a simple system.
    def stabilizer(self, vector: Vector):
        dominant, word = self.dominant(vector)
        inverse = word.inverse()
        generators = [ ]
        words = [ ]
        for i, generator in enumerate(self.__generators):
            if generator.dot(dominant) == 0:
                generators.append(self.apply(inverse, generator))
                words.append(inverse.compose(self.__words[i]).compose(word))
        return WeylGroup(generators, self.__alphabet, words, True, self.__ambient_dimension)
    ##
    # @brief Enumerate every element of the group.
    # @details Elements are found as permutations of the root closure, on which the group acts faithfully.
    # @param cap The largest permitted group order. Defaults to DEFAULT_GROUP_CAP.
    # @return A list of GroupElements, starting with the identity.
    # @throw OverflowError If the group has more than cap elements.
    def enumerate(self, cap: int = DEFAULT_GROUP_CAP) -> list[GroupElement]:
        domain = self.root_closure()
        index = { root: i for i, root in enumerate(domain) }
        permutations = [ tuple(index[WeylGroup.reflect(generator, root)] for root in domain)
                         for generator in self.__generators ]
        identity = tuple(range(len(domain)))
        seen = { identity: WeylWord() }
        frontier = [ identity ]
        while frontier:
            found = [ ]
            for current in frontier:
                for i, permutation in enumerate(permutations):
                    image = tuple(permutation[j] for j in current)
                    if image not in seen:
                        seen[image] = self.__words[i].compose(seen[current])
                        if len(seen) > cap:
                            raise OverflowError(f"The group exceeds the group cap of {cap} elements.")
                        found.append(image)
            frontier = found
        return [ GroupElement(self, word) for word in seen.values() ]
    ##
    # @brief Compute the order of the group by enumeration.
    # @param cap The largest permitted group order. Defaults to DEFAULT_GROUP_CAP.
    # @return The number of elements.
    # @throw OverflowError If the group has more than cap elements.
    def order(self, cap: int = DEFAULT_GROUP_CAP) -> int:
        return len(self.enumerate(cap))
    ##
    # @brief Partition a finite stable set into orbits.
    # @param elements The set of Vectors to partition.
    # @return An OrbitPartition of elements.
    # @throw ValueError If some generator moves an element outside of the set.
    def partition(self, elements: Iterable[Vector]) -> OrbitPartition:
        remaining = set(elements)
        universe = frozenset(remaining)
        blocks = [ ]
        for start in sorted(universe):
            if start not in remaining:
                continue
            remaining.discard(start)
            block = [ start ]
            frontier = [ start ]
            while frontier:
                found = [ ]
                for current in frontier:
                    for generator in self.__generators:
                        image = WeylGroup.reflect(generator, current)
                        if image not in universe:
                            raise ValueError(f"The set is not stable: {current} is sent to {image}.")
                        if image in remaining:
                            remaining.discard(image)
                            block.append(image)
                            found.append(image)
                frontier = sorted(found)
            blocks.append(block)
        return OrbitPartition(blocks)
    ##
    # @brief Determine whether or not two Vectors are conjugate.
    # @param vector The target Vector.
    # @param other The source Vector.
    # @return A tuple (flag, witness). When flag is True, witness is a WeylWord sending other to vector. Otherwise
    #         witness is None.
    # @throw ValueError If the group is not generated by a simple system.
    def conjugate(self, vector: Vector, other: Vector) -> tuple:
        dominant, word = self.dominant(vector)
        other_dominant, other_word = self.dominant(other)
        if dominant != other_dominant:
            return (False, None)
        return (True, word.inverse().compose(other_word))
    ##
    # @brief Determine whether or not a finite set is stable under the generating reflections.
    # @param elements The set of Vectors to test.
    # @return True if every generator maps the set into itself. Otherwise False.
    def stabilizes(self, elements: Iterable[Vector]) -> bool:
        universe = frozenset(elements)
        return all(WeylGroup.reflect(generator, element) in universe
                   for element in universe for generator in self.__generators)

__all__ = [ "DEFAULT_ORBIT_CAP", "DEFAULT_GROUP_CAP", "WeylWord", "GroupElement", "Orbit", "OrbitPartition",
            "WeylGroup" ]
