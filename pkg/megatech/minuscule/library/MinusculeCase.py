##
# @file MinusculeCase.py
# @brief Minuscule Coweight Configurations
# @author Alexander Rothman <[gnomesort@megate.ch](mailto:gnomesort@megate.ch)>
# @date 2024
# @copyright AGPL-3.0-or-later
from fractions import Fraction
from math import comb, factorial

from .ExactArithmetic import Vector, Matrix, rational_to_string
from .Polynomial import Polynomial
from .WeylGroup import DEFAULT_ORBIT_CAP, DEFAULT_GROUP_CAP, WeylGroup, Orbit
from .RootSystem import RootSystemFamily, RootSystemLabel, RootSystem
from .Invariants import OrbitPowerSum, OrbitProduct, HilbertSpec, GeneratorSet, jacobian_rank
from .GenerationChain import ChainStep, GenerationChain

##
# @brief One minuscule coweight of one root system, acted on by one Weyl group.
# @details The case chooses a finite W-stable set X (the chain orbit) whose power sums lie in S^W, splits it into the
#          level sets X[k] = { y in X : (y, a) = k }, and derives the power sums of the level sets from S^W and its
#          translate by a. The targets of the case are the linear forms of the constraint vectors, the linear form of a,
#          and selected level power sums. Together they generate the invariants of the stabilizer W_a.
#
#          For D_n the group is either "W", the signed permutations W(B_n), or "W0", the Weyl group W(D_n). Every other
#          family only accepts "W".
class MinusculeCase:
    ##
    # @brief Construct a MinusculeCase.
    # @param system The RootSystem.
    # @param coweight A coweight name or 1-based index accepted by RootSystem.coweight(). Defaults to 1.
    # @param group Either "W" or "W0". Defaults to "W".
    # @param orbit_cap The largest permitted orbit. Defaults to DEFAULT_ORBIT_CAP.
    # @param group_cap The largest permitted group enumeration. Defaults to DEFAULT_GROUP_CAP.
    # @throw ValueError If the coweight choice or the group choice is invalid.
    def __init__(self, system: RootSystem, coweight = 1, group: str = "W", orbit_cap: int = DEFAULT_ORBIT_CAP,
                 group_cap: int = DEFAULT_GROUP_CAP):
        self.__system = system
        self.__name, self.__coweight = system.coweight(coweight)
        group = str(group).strip().upper().replace("°", "0")
        if group not in ("W", "W0"):
            raise ValueError(f"\"{group}\" is not a valid group choice. Use \"W\" or \"W0\".")
        if group == "W0" and system.family() != RootSystemFamily.D:
            raise ValueError(f"The group \"W0\" is only defined for D_n, not for {system.label()}.")
        self.__group_name = group
        self.__orbit_cap = orbit_cap
        self.__group_cap = group_cap
        n = system.rank()
        if system.family() == RootSystemFamily.D and group == "W":
            self.__group = RootSystem.build(RootSystemLabel(RootSystemFamily.B, n)).weyl_group()
            self.__group_order = 2 ** n * factorial(n)
        else:
            self.__group = system.weyl_group()
            self.__group_order = system.weyl_order()
        self.__stabilizer = None
        self.__chain_orbit = None
        self.__coweight_orbit = None
        self.__levels = None
        self.__sums = { }
        self.__quadratic = None
        self.__targets = None
    ### @cond
    def __dimension(self) -> int:
        return self.__system.ambient_dimension()
    def __uses_product(self) -> bool:
        return self.__system.family() == RootSystemFamily.D and self.__group_name == "W0" and self.__name == "b"
    def __chain_base(self) -> Vector:
        family = self.__system.family()
        if family == RootSystemFamily.A:
            return self.__system.minuscule_coweights()[0]
        elif family in (RootSystemFamily.B, RootSystemFamily.C, RootSystemFamily.D):
            return Vector.basis(self.__dimension(), 0)
        return self.__coweight
    def __sums_of(self, key, vectors, degree: int) -> list[Polynomial]:
        cached = self.__sums.get(key)
        if cached is None or len(cached) <= degree:
            cached = Polynomial.power_sums(vectors, max(degree, 2 * len(cached or [ ])), self.__dimension())
            self.__sums[key] = cached
        return cached
    def __orbit_sum(self, degree: int) -> Polynomial:
        return self.__sums_of("X", self.chain_orbit().elements(), degree)[degree]
    def __level_sum(self, level: Fraction, degree: int) -> Polynomial:
        return self.__sums_of(("X", level), self.levels()[level], degree)[degree]
    def __projection_sum(self, level: Fraction, degree: int) -> Polynomial:
        return self.__sums_of(("T", level), self.projections(level), degree)[degree]
    def __form(self) -> Polynomial:
        return Polynomial.linear_form(self.__coweight)
    @staticmethod
    def __text(value: Fraction) -> str:
        return rational_to_string(value)
    @staticmethod
    def __orbit_name(degree: int) -> str:
        return f"p{degree}(X)"
    @staticmethod
    def __level_name(level: Fraction, degree: int) -> str:
        return f"p{degree}(X[{MinusculeCase.__text(level)}])"
    @staticmethod
    def __projection_name(level: Fraction, degree: int) -> str:
        return f"p{degree}(T[{MinusculeCase.__text(level)}])"
    @staticmethod
    def __tau(name: str) -> str:
        return f"tau({name})"
    ### @endcond
    def system(self) -> RootSystem:
        return self.__system
    def coweight_name(self) -> str:
        return self.__name
    def coweight(self) -> Vector:
        return self.__coweight
    def group_name(self) -> str:
        return self.__group_name
    ##
    # @brief Retrieve a short identifier for the case.
    # @return The coweight name, suffixed with ".W0" when the D_n Weyl group was selected.
    def case_id(self) -> str:
        return self.__name if self.__group_name == "W" else f"{self.__name}.W0"
    ##
    # @brief Retrieve the acting group.
    # @return A WeylGroup generated by a simple system.
    def weyl_group(self) -> WeylGroup:
        return self.__group
    ##
    # @brief Retrieve the order of the acting group.
    # @return An integer.
    def group_order(self) -> int:
        return self.__group_order
    ##
    # @brief Retrieve the stabilizer of the coweight.
    # @return A WeylGroup sharing the alphabet of the acting group.
    def stabilizer(self) -> WeylGroup:
        if self.__stabilizer is None:
            self.__stabilizer = self.__group.stabilizer(self.__coweight)
        return self.__stabilizer
    ##
    # @brief Compute the HilbertSpec of the stabilizer invariants.
    # @return A HilbertSpec classified from the stabilizer's simple system.
    def hilbert(self) -> HilbertSpec:
        return HilbertSpec.from_simple_roots(list(self.stabilizer().generators()), self.__dimension())
    ##
    # @brief Compute the orbit of the coweight under the acting group.
    # @return An Orbit.
    # @throw OverflowError If the orbit cap is exceeded.
    def coweight_orbit(self) -> Orbit:
        if self.__coweight_orbit is None:
            self.__coweight_orbit = self.__group.orbit(self.__coweight, self.__orbit_cap)
        return self.__coweight_orbit
    ##
    # @brief Compute the chain orbit X.
    # @details A_n uses the orbit of a_1. B_n, C_n, and D_n use the orbit of e_1, which is { +-e_i }. E7 and E6 use
    #          the orbit of the coweight itself.
    # @return An Orbit.
    # @throw OverflowError If the orbit cap is exceeded.
    def chain_orbit(self) -> Orbit:
        if self.__chain_orbit is None:
            self.__chain_orbit = self.__group.orbit(self.__chain_base(), self.__orbit_cap)
        return self.__chain_orbit
    ##
    # @brief Split the chain orbit into level sets.
    # @return A dictionary mapping each pairing value k to the sorted tuple of y in X with (y, a) = k, in descending
    #         order of k.
    def levels(self) -> dict:
        if self.__levels is None:
            res = { }
            for y in self.chain_orbit().elements():
                res.setdefault(y.dot(self.__coweight), [ ]).append(y)
            self.__levels = { level: tuple(sorted(res[level])) for level in sorted(res, reverse=True) }
        return self.__levels
    ##
    # @brief Compute the level sizes the chain orbit must produce.
    # @return A dictionary mapping pairing values to level sizes.
    def expected_levels(self) -> dict:
        n = self.__system.rank()
        family = self.__system.family()
        half = Fraction(1, 2)
        if family == RootSystemFamily.A:
            r = int(self.__name[1:])
            s = n + 1 - r
            return { Fraction(s, n + 1): r, Fraction(-r, n + 1): s }
        elif family == RootSystemFamily.B or (family == RootSystemFamily.D and self.__name == "b"):
            return { Fraction(1): 1, Fraction(0): 2 * n - 2, Fraction(-1): 1 }
        elif family in (RootSystemFamily.C, RootSystemFamily.D):
            return { half: n, -half: n }
        elif family == RootSystemFamily.E7:
            return { Fraction(3, 2): 1, half: 27, -half: 27, Fraction(-3, 2): 1 }
        return { Fraction(4, 3): 1, Fraction(1, 3): 16, Fraction(-2, 3): 10 }
    ##
    # @brief Project a level set onto the hyperplane orthogonal to the coweight.
    # @param level The pairing value k.
    # @return The sorted tuple of y - (k / (a, a)) a for y in X[k].
    def projections(self, level: Fraction) -> tuple[Vector, ...]:
        shift = self.__coweight * (level / self.__coweight.dot(self.__coweight))
        return tuple(sorted(y - shift for y in self.levels()[level]))
    ##
    # @brief Find the level sets that are a single multiple of the coweight.
    # @return A dictionary mapping such pairing values k to the multiple k / (a, a).
    def known_levels(self) -> dict:
        norm = self.__coweight.dot(self.__coweight)
        return { level: level / norm for level, vectors in self.levels().items()
                 if len(vectors) == 1 and vectors[0] == self.__coweight * (level / norm) }
    ##
    # @brief Retrieve the level power sums that generate the stabilizer invariants together with the linear forms.
    # @return A list of (level, degrees) pairs.
    def target_levels(self) -> list[tuple]:
        n = self.__system.rank()
        family = self.__system.family()
        half = Fraction(1, 2)
        if family == RootSystemFamily.A:
            r = int(self.__name[1:])
            s = n + 1 - r
            res = [ (Fraction(s, n + 1), tuple(range(2, r + 1))), (Fraction(-r, n + 1), tuple(range(2, s + 1))) ]
        elif family == RootSystemFamily.B:
            res = [ (Fraction(0), tuple(range(2, 2 * n - 1, 2))) ]
        elif family == RootSystemFamily.D and self.__name == "b":
            top = 2 * n - 1 if self.__group_name == "W" else 2 * n - 3
            res = [ (Fraction(0), tuple(range(2, top, 2))) ]
        elif family in (RootSystemFamily.C, RootSystemFamily.D):
            res = [ (half, tuple(range(2, n + 1))) ]
        elif family == RootSystemFamily.E7:
            res = [ (half, (2, 5, 6, 8, 9, 12)) ]
        else:
            res = [ (Fraction(-2, 3), (2, 4, 6, 8)), (Fraction(1, 3), (5,)) ]
        return [ (level, degrees) for level, degrees in res if degrees ]
    ##
    # @brief Construct the target invariants.
    # @return A list of (name, function, degree) triples. Names match the outputs of chain().
    def targets(self) -> list[tuple]:
        if self.__targets is None:
            res = [ ]
            for k, u in enumerate(self.__system.constraint_vectors()):
                res.append((f"l(u{k + 1})", Polynomial.linear_form(u), 1))
            res.append(("l(a)", self.__form(), 1))
            for level, degrees in self.target_levels():
                for degree in degrees:
                    name = MinusculeCase.__level_name(level, degree)
                    res.append((name, OrbitPowerSum(self.levels()[level], degree, name), degree))
            if self.__uses_product():
                n = self.__system.rank()
                res.append(("d'", OrbitProduct([ Vector.basis(n, i) for i in range(1, n) ], "d'"), n - 1))
            self.__targets = res
        return self.__targets
    ##
    # @brief Determine whether or not a target is invariant under the stabilizer.
    # @param function A target function.
    # @return True if every generating reflection of the stabilizer fixes the function. Otherwise False.
    def is_stabilizer_invariant(self, function) -> bool:
        stabilizer = self.stabilizer()
        if not isinstance(function, Polynomial):
            return function.is_invariant(stabilizer)
        n = self.__dimension()
        for generator in stabilizer.generators():
            reflection = Matrix.from_columns([ WeylGroup.reflect(generator, Vector.basis(n, i)) for i in range(n) ])
            if function.transform(reflection) != function:
                return False
        return True
    ##
    # @brief Compute the Jacobian rank of the targets.
    # @param seed The seed for random sample points. Defaults to 0.
    # @return The largest rank observed.
    def target_rank(self, seed: int = 0) -> int:
        return jacobian_rank([ function for _, function, _ in self.targets() ], dimension=self.__dimension(), seed=seed)
    ##
    # @brief Construct generators of S^W.
    # @details The constraint linear forms and the power sums of the chain orbit in the reflection degrees of the
    #          acting group. For D_n under W(D_n) the Pfaffian degree n is supplied by the product d = x1 ... xn.
    # @return A GeneratorSet.
    def invariant_generators(self) -> GeneratorSet:
        n = self.__system.rank()
        spec = HilbertSpec.from_simple_roots(list(self.__group.generators()), self.__dimension())
        degrees = list(spec.degrees())
        res = GeneratorSet(self.__dimension())
        for k, u in enumerate(self.__system.constraint_vectors()):
            res.add(f"l(u{k + 1})", Polynomial.linear_form(u))
        product = self.__system.family() == RootSystemFamily.D and self.__group_name == "W0"
        if product:
            degrees.remove(n)
        for degree in degrees:
            res.add(MinusculeCase.__orbit_name(degree), self.__orbit_sum(degree), degree)
        if product:
            res.add("d", Polynomial.product_of_forms([ Vector.basis(n, i) for i in range(n) ]), n)
        return res
    ##
    # @brief Compute the quadratic identity (tau - 1) r2 = kappa l(a) + c.
    # @details r2 is the sum of the squared root linear forms. kappa is determined by 2 sum (alpha, a) alpha = kappa a
    #          and c is sum (alpha, a)^2.
    # @return A dictionary with the keys "kappa", "constant", "printed_kappa", "printed_constant", "colinear",
    #         "left", and "right".
    def quadratic_identity(self) -> dict:
        if self.__quadratic is None:
            a = self.__coweight
            n = self.__system.rank()
            roots = self.__system.roots()
            total = Vector.zero(self.__dimension())
            constant = Fraction(0)
            for alpha in roots:
                pairing = alpha.dot(a)
                if pairing:
                    total = total + alpha * pairing
                    constant += pairing ** 2
            kappa = 2 * total.dot(a) / a.dot(a)
            r2 = Polynomial.power_sum(roots, 2, self.__dimension())
            family = self.__system.family()
            if family == RootSystemFamily.A:
                r = int(self.__name[1:])
                printed = (4 * (n + 1), 2 * r * (n + 1 - r))
            elif family == RootSystemFamily.B:
                printed = (4 * (2 * n - 1), 2 * (2 * n - 1))
            elif family == RootSystemFamily.C:
                printed = (8 * (n + 1), n * n + n)
            elif family == RootSystemFamily.D:
                printed = (8 * (n - 1), 4 * (n - 1) * a.dot(a))
            elif family == RootSystemFamily.E7:
                printed = (54, 54)
            else:
                printed = (32, 32)
            self.__quadratic = { "kappa": kappa, "constant": constant, "printed_kappa": Fraction(printed[0]),
                                 "printed_constant": Fraction(printed[1]), "colinear": total * 2 == a * kappa,
                                 "left": r2.translate(a) - r2, "right": self.__form() * kappa + constant }
        return self.__quadratic
    ##
    # @brief Build the generation chain.
    # @details The seeds are the power sums of X, r2, the constraint linear forms, the product d for D_n under
    #          W(D_n) with the coweight b, and their translates. The chain then derives l(a) from the quadratic
    #          identity, the power sums of the known levels from l(a), the power sums of the remaining levels from the
    #          level recurrence, the power sums of the projections, and finally d' = (tau - 1) d.
    # @return A GenerationChain.
    # @throw RuntimeError If more than two levels are not multiples of the coweight.
    def chain(self) -> GenerationChain:
        a = self.__coweight
        levels = self.levels()
        known = self.known_levels()
        unknown = [ level for level in levels if level not in known ]
        if len(unknown) > 2:
            raise RuntimeError(f"The chain orbit of {self.__system.label()} has {len(unknown)} unknown levels.")
        targets = self.target_levels()
        top = max((max(degrees) for _, degrees in targets), default=0)
        group = self.__group
        res = GenerationChain()
        seeds = [ MinusculeCase.__orbit_name(j) for j in range(1, top + 2) ]
        res.add(ChainStep("seed.power-sums", ( ), seeds,
                          [ ("X is W-stable", lambda: group.stabilizes(self.chain_orbit().elements())) ]))
        res.add(ChainStep("seed.roots", ( ), [ "r2" ],
                          [ ("the roots are W-stable", lambda: group.stabilizes(self.__system.roots())) ]))
        constraints = [ ]
        for k, u in enumerate(self.__system.constraint_vectors()):
            constraints.append(f"l(u{k + 1})")
            res.add(ChainStep(f"seed.constraint{k + 1}", ( ), [ constraints[-1] ],
                              [ (f"u{k + 1} is W-fixed", lambda u=u: all(u.dot(g) == 0 for g in group.generators())) ]))
        base = seeds + [ "r2" ] + constraints
        product = self.__uses_product()
        if product:
            n = self.__system.rank()
            d = OrbitProduct([ Vector.basis(n, i) for i in range(n) ], "d")
            d_prime = OrbitProduct([ Vector.basis(n, i) for i in range(1, n) ], "d'")
            res.add(ChainStep("seed.product", ( ), [ "d" ], [ ("d is W-invariant", lambda: d.is_invariant(group)) ]))
            base.append("d")
        res.add(ChainStep("seed.translates", base, [ MinusculeCase.__tau(name) for name in base ]))
        quadratic = self.quadratic_identity
        res.add(ChainStep("linear-form", [ "r2", "tau(r2)" ], [ "l(a)" ],
                          [ ("2 sum (alpha, a) alpha = kappa a", lambda: quadratic()["colinear"]),
                            ("kappa is nonzero", lambda: quadratic()["kappa"] != 0) ],
                          [ ("tau(r2) - r2 = kappa l(a) + c", 2,
                             lambda: (quadratic()["left"], quadratic()["right"])) ]))
        expected = self.expected_levels()
        stabilizer = self.stabilizer()
        res.add(ChainStep("levels", ( ), ( ),
                          [ ("the levels partition X", lambda: sorted(y for vectors in levels.values() for y in vectors)
                                                               == list(self.chain_orbit().elements())),
                            ("the level sizes are as tabulated",
                             lambda: { level: len(vectors) for level, vectors in levels.items() } == expected),
                            ("every level is W_a-stable",
                             lambda: all(stabilizer.stabilizes(vectors) for vectors in levels.values())) ]))
        form = self.__form()
        for level, multiple in known.items():
            text = MinusculeCase.__text(level)
            res.add(ChainStep(f"level[{text}]", [ "l(a)" ],
                              [ MinusculeCase.__level_name(level, j) for j in range(1, top + 1) ],
                              [ (f"X[{text}] = {{{MinusculeCase.__text(multiple)} a}}",
                                 lambda level=level, multiple=multiple: levels[level] == (a * multiple,)) ],
                              [ (f"{MinusculeCase.__level_name(level, j)} = ({MinusculeCase.__text(multiple)} l(a))^{j}",
                                 j, lambda level=level, multiple=multiple, j=j:
                                 (self.__level_sum(level, j), (form * multiple) ** j))
                                for j in range(1, top + 1) ]))
        for m in range(1, top + 1 if unknown else 1):
            split = (f"{MinusculeCase.__orbit_name(m)} = sum of the level power sums", m,
                     lambda m=m: (self.__orbit_sum(m), sum((self.__level_sum(level, m) for level in levels),
                                                           Polynomial.zero(self.__dimension()))))
            known_inputs = [ MinusculeCase.__level_name(level, m) for level in known ]
            outputs = [ MinusculeCase.__level_name(level, m) for level in unknown ]
            if len(unknown) == 1:
                res.add(ChainStep(f"solve[{m}]", [ MinusculeCase.__orbit_name(m) ] + known_inputs, outputs,
                                  identities=[ split ]))
                continue
            first, second = unknown
            following = MinusculeCase.__orbit_name(m + 1)
            inputs = [ MinusculeCase.__orbit_name(m), following, MinusculeCase.__tau(following) ]
            inputs += [ MinusculeCase.__level_name(level, j) for level in known for j in range(1, m + 1) ]
            inputs += [ MinusculeCase.__level_name(level, j) for level in unknown for j in range(1, m) ]
            recurrence = (f"(tau - 1) {following} = sum of the shifted level power sums", m + 1,
                          lambda m=m: (self.__orbit_sum(m + 1).translate(a) - self.__orbit_sum(m + 1),
                                       sum((self.__level_sum(level, j) * (comb(m + 1, j) * level ** (m + 1 - j))
                                            for level in levels for j in range(m + 1)),
                                           Polynomial.zero(self.__dimension()))))
            res.add(ChainStep(f"solve[{m}]", inputs, outputs,
                              [ (f"the levels {MinusculeCase.__text(first)} and {MinusculeCase.__text(second)} give "
                                 "an invertible system",
                                 lambda: Matrix([ [ 1, 1 ], [ first, second ] ]).rank() == 2) ],
                              [ split, recurrence ]))
        for level, degrees in targets:
            text = MinusculeCase.__text(level)
            multiple = -level / a.dot(a)
            shifted = form * multiple
            res.add(ChainStep(f"transport[{text}]",
                              [ "l(a)" ] + [ MinusculeCase.__level_name(level, j) for j in range(1, max(degrees) + 1) ],
                              [ MinusculeCase.__projection_name(level, j) for j in degrees ],
                              [ (f"T[{text}] is orthogonal to a",
                                 lambda level=level: all(y.dot(a) == 0 for y in self.projections(level))) ],
                              [ (f"{MinusculeCase.__projection_name(level, j)} = sum of the shifted "
                                 f"{MinusculeCase.__level_name(level, j)}", j,
                                 lambda level=level, j=j, shifted=shifted:
                                 (self.__projection_sum(level, j),
                                  sum((self.__level_sum(level, m) * comb(j, m) * shifted ** (j - m)
                                       for m in range(j + 1)), Polynomial.zero(self.__dimension()))))
                                for j in degrees ]))
        if product:
            res.add(ChainStep("product", [ "d", "tau(d)" ], [ "d'" ],
                              [ ("b is the first standard basis vector", lambda: a == Vector.basis(n, 0)) ],
                              [ ("tau(d) - d = d'", n,
                                 lambda: (d.expand().translate(a) - d.expand(), d_prime.expand())) ]))
        return res
    def to_json(self) -> dict:
        return { "label": str(self.__system.label()), "coweight": self.__name, "vector": self.__coweight.to_json(),
                 "group": self.__group_name, "group_order": self.__group_order }

__all__ = [ "MinusculeCase" ]
