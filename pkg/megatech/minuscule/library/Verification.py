##
# @file Verification.py
# @brief Verification Suites
# @author Alexander Rothman <[gnomesort@megate.ch](mailto:gnomesort@megate.ch)>
# @date 2024
# @copyright AGPL-3.0-or-later
import random
import time
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb
from typing import Callable

from .ExactArithmetic import Vector, Matrix
from .Polynomial import Polynomial
from .WeylGroup import DEFAULT_ORBIT_CAP, DEFAULT_GROUP_CAP, WeylWord, WeylGroup, Orbit, OrbitPartition
from .RootSystem import RootSystemFamily, RootSystemLabel, RootSystem
from .Invariants import HilbertSpec
from .GenerationChain import GenerationChain
from .MinusculeCase import MinusculeCase
from .OrbitCache import OrbitCache
from .VerifyReport import VerifyStatus, VerifyReport, Triangle

##
# @brief The systems covered by the acceptance run.
ACCEPTANCE_LABELS = ( "A2", "A3", "A4", "A5", "B2", "B3", "B4", "B5", "C2", "C3", "C4", "C5", "D3", "D4", "D5", "E6",
                      "E7" )
##
# @brief The systems on which the acceptance run also compares filtered dimensions with the Hilbert series.
FILTERED_LABELS = ( "A2", "A3", "B3", "C3", "D4" )
##
# @brief The names of the individual suites.
SUITE_NAMES = ( "construction", "identities", "orbits", "fibers", "generation", "triangles" )
##
# @brief Alternate suite names accepted by the verifier.
SUITE_ALIASES = { "prop1": "fibers", "prop2": "generation" }

##
# @brief Runs verification checks and produces VerifyReports.
# @details Every public suite takes a root system label and returns a list of reports. Failures are reported, not
#          raised. Exceptions are reserved for invalid input.
class VerificationSuite:
    __E5_COWEIGHTS = { "b-plus": ( Vector([ "-1/4", "-1/4", "1/4", "1/4", "1/4", "1/4", "-3/4", "1/4" ]),
                                   Vector([ "-3/8", "-3/8", "7/8", "-1/8", "-1/8", "-1/8", "-1/8", "3/8" ]) ),
                       "b-minus": ( Vector([ "-1/4", "3/4", "-1/4", "-1/4", "-1/4", "-1/4", "1/4", "1/4" ]),
                                    Vector([ "-3/8", "1/8", "1/8", "1/8", "1/8", "-7/8", "3/8", "3/8" ]) ) }
    ##
    # @brief Construct a VerificationSuite.
    # @param orbit_cap The largest permitted orbit. Defaults to DEFAULT_ORBIT_CAP.
    # @param group_cap The largest permitted group enumeration. Defaults to DEFAULT_GROUP_CAP.
    # @param max_degree The largest degree to expand symbolically. Defaults to 8.
    # @param cache An OrbitCache for coweight and sample orbits. Defaults to None.
    # @param seed The seed for random sample points and random triangles. Defaults to 0.
    # @param progress A callable receiving progress messages. Defaults to None.
    # @throw ValueError If max_degree is less than 2 or a cap is less than 1.
    def __init__(self, orbit_cap: int = DEFAULT_ORBIT_CAP, group_cap: int = DEFAULT_GROUP_CAP, max_degree: int = 8,
                 cache: OrbitCache = None, seed: int = 0, progress: Callable[[str], None] = None):
        if max_degree < 2:
            raise ValueError(f"The maximum degree must be at least 2, not \"{max_degree}\".")
        if orbit_cap < 1 or group_cap < 1:
            raise ValueError(f"The caps must be positive, not \"{orbit_cap}\" and \"{group_cap}\".")
        self.__orbit_cap = orbit_cap
        self.__group_cap = group_cap
        self.__max_degree = max_degree
        self.__cache = cache
        self.__seed = seed
        self.__progress = progress
        self.__cases = { }
        self.__chains = { }
        self.__orders = { }
    def max_degree(self) -> int:
        return self.__max_degree
    ### @cond
    def __log(self, message: str) -> None:
        if self.__progress is not None:
            self.__progress(message)
    def __orbit(self, system: RootSystem, group: WeylGroup, base: Vector) -> Orbit:
        if self.__cache is not None:
            return self.__cache.orbit(system.label(), group, base, self.__orbit_cap)
        return group.orbit(base, self.__orbit_cap)
    def __enumerated_order(self, group: WeylGroup) -> int:
        key = tuple(group.generators())
        if key not in self.__orders:
            self.__log(f"Enumerating a group with {len(key)} generators.")
            self.__orders[key] = group.order(self.__group_cap)
        return self.__orders[key]
    def __chain(self, case: MinusculeCase) -> tuple:
        key = (str(case.system().label()), case.case_id())
        if key not in self.__chains:
            started = time.perf_counter()
            ok, derived, summary = case.chain().verify(self.__max_degree,
                                                       lambda name: self.__log(f"{key[0]} {key[1]}: {name}"))
            self.__chains[key] = (ok, derived, summary, VerifyReport.elapsed(started))
        return self.__chains[key]
    @staticmethod
    def __root_count(system: RootSystem) -> int:
        n = system.rank()
        family = system.family()
        if family == RootSystemFamily.A:
            return n * (n + 1)
        elif family in (RootSystemFamily.B, RootSystemFamily.C):
            return 2 * n * n
        elif family == RootSystemFamily.D:
            return 2 * n * (n - 1)
        return { RootSystemFamily.E6: 72, RootSystemFamily.E7: 126, RootSystemFamily.E8: 240 }[family]
    @staticmethod
    def __multiplicities(system: RootSystem) -> tuple:
        n = system.rank()
        family = system.family()
        if family == RootSystemFamily.A:
            return (1,) * n
        elif family == RootSystemFamily.B:
            return (1,) + (2,) * (n - 1)
        elif family == RootSystemFamily.C:
            return (2,) * (n - 1) + (1,)
        elif family == RootSystemFamily.D:
            return (1,) + (2,) * (n - 3) + (1, 1)
        return { RootSystemFamily.E6: (1, 2, 3, 2, 1, 2), RootSystemFamily.E7: (1, 2, 3, 4, 3, 2, 2) }[family]
    @staticmethod
    def __expected_q(system: RootSystem, name: str) -> Fraction:
        n = system.rank()
        family = system.family()
        if family == RootSystemFamily.A:
            r = int(name[1:])
            return Fraction(r * (n + 1 - r), 2 * (n + 1))
        elif name == "b":
            return Fraction(1, 2)
        elif family in (RootSystemFamily.C, RootSystemFamily.D):
            return Fraction(n, 8)
        elif family == RootSystemFamily.E7:
            return Fraction(3, 4)
        return Fraction(2, 3)
    @staticmethod
    def __expected_orbit_size(case: MinusculeCase) -> int:
        system = case.system()
        n = system.rank()
        family = system.family()
        name = case.coweight_name()
        if family == RootSystemFamily.A:
            return comb(n + 1, int(name[1:]))
        elif name == "b":
            return 2 * n
        elif family == RootSystemFamily.C or (family == RootSystemFamily.D and case.group_name() == "W"):
            return 2 ** n
        elif family == RootSystemFamily.D:
            return 2 ** (n - 1)
        return { RootSystemFamily.E6: 27, RootSystemFamily.E7: 56 }[family]
    @staticmethod
    def __is_symmetric(system: RootSystem) -> bool:
        if system.family() == RootSystemFamily.A:
            return system.rank() == 1
        return system.family() != RootSystemFamily.E6
    @staticmethod
    def __samples(system: RootSystem) -> list[tuple]:
        res = list(zip(system.coweight_names(), system.minuscule_coweights()))
        res.append(("highest-root", system.highest_root()))
        if system.family() in (RootSystemFamily.A, RootSystemFamily.B, RootSystemFamily.C, RootSystemFamily.D):
            res.append(("rho", sum(system.dual_basis(), Vector.zero(system.ambient_dimension()))))
        if system.family() in (RootSystemFamily.B, RootSystemFamily.C):
            short = min(root.dot(root) for root in system.roots())
            res.append(("highest-short-root", max((root for root in system.roots() if root.dot(root) == short),
                                                  key=system.height)))
        return res
    ### @endcond
    ##
    # @brief Build the root system for a label.
    # @param label A RootSystemLabel or a string such as "D4".
    # @return The RootSystem.
    # @throw ValueError If the label is invalid or names E8.
    @staticmethod
    def system(label) -> RootSystem:
        if not isinstance(label, RootSystemLabel):
            label = RootSystemLabel.parse(str(label))
        if label.family() == RootSystemFamily.E8:
            raise ValueError("The system \"E8\" has no minuscule coweight to verify.")
        return RootSystem.build(label)
    ##
    # @brief Build the MinusculeCases of a label.
    # @param label A RootSystemLabel or a string.
    # @param coweight A coweight name or index. If this is None then every coweight is used. Defaults to None.
    # @param group "W" or "W0". If this is None then every coweight uses "W" and D_n repeats each coweight under
    #              "W0". Defaults to None.
    # @return A list of MinusculeCases.
    # @throw ValueError If the coweight or the group is invalid.
    def cases(self, label, coweight = None, group: str = None) -> list[MinusculeCase]:
        system = VerificationSuite.system(label)
        if coweight is not None:
            choices = [ (system.coweight(coweight)[0], group or "W") ]
        elif group is not None:
            choices = [ (name, group) for name in system.coweight_names() ]
        else:
            choices = [ (name, "W") for name in system.coweight_names() ]
            if system.family() == RootSystemFamily.D:
                choices = [ (name, choice) for name, _ in choices for choice in ("W", "W0") ]
        res = [ ]
        for name, choice in choices:
            key = (str(system.label()), name, str(choice).strip().upper())
            if key not in self.__cases:
                self.__cases[key] = MinusculeCase(system, name, choice, self.__orbit_cap, self.__group_cap)
            res.append(self.__cases[key])
        return res
    ##
    # @brief Verify the construction of a root system.
    # @param label A RootSystemLabel or a string.
    # @return A list of VerifyReports covering roots, coweights, and orthogonal subsystems.
    def construction(self, label) -> list[VerifyReport]:
        system = VerificationSuite.system(label)
        name = str(system.label())
        self.__log(f"Verifying the construction of {name}.")
        group = system.weyl_group()
        simple = list(system.simple_roots())
        res = [ ]
        started = time.perf_counter()
        chevalley = HilbertSpec.from_simple_roots(simple, system.ambient_dimension())
        equalities = [ ("root count", len(system.roots()), VerificationSuite.__root_count(system)),
                       ("reflections permute the roots", group.stabilizes(system.roots()), True),
                       ("highest root multiplicities", system.multiplicities(),
                        VerificationSuite.__multiplicities(system)),
                       ("the highest root is not minuscule", system.is_minuscule(system.highest_root())[0], False),
                       ("degree product equals the Weyl order", chevalley.order(), system.weyl_order()) ]
        if system.family() not in (RootSystemFamily.E6, RootSystemFamily.E7) and \
           system.weyl_order() <= self.__group_cap:
            equalities.append(("enumerated Weyl order", self.__enumerated_order(group),
                               system.weyl_order()))
        res.append(VerifyReport.build(f"construction.{name}.roots",
                                      f"{name} roots, highest root, and Weyl order", equalities,
                                      { "root_count": len(system.roots()), "weyl_order": system.weyl_order(),
                                        "highest_root": system.highest_root(), "types": list(chevalley.types()) },
                                      started))
        for coweight_name, vector in zip(system.coweight_names(), system.minuscule_coweights()):
            started = time.perf_counter()
            nodes = [ i for i, alpha in enumerate(simple) if vector.dot(alpha) != 0 ]
            values = system.pairing_values(vector)
            equalities = [ ("dominant", system.is_dominant(vector), True),
                           ("root pairings lie in {0, 1, -1}", set(values) <= { 0, 1, -1 }, True),
                           ("exactly one simple root pairs nontrivially", len(nodes), 1),
                           ("that node has multiplicity 1", [ system.multiplicities()[i] for i in nodes ], [ 1 ]),
                           ("q", vector.q(), VerificationSuite.__expected_q(system, coweight_name)),
                           ("a multiple normalizes back", system.is_minuscule(vector * 2), (True, vector)),
                           ("at most three pairing values", len(values) <= 3, True) ]
            res.append(VerifyReport.build(f"construction.{name}.{coweight_name}",
                                          f"{coweight_name} is a minuscule coweight of {name}", equalities,
                                          { "vector": vector, "q": vector.q(), "pairing_values": list(values) },
                                          started))
        started = time.perf_counter()
        equalities = [ ]
        details = { }
        for coweight_name, vector in zip(system.coweight_names(), system.minuscule_coweights()):
            subsystem = system.orthogonal_subsystem(vector)
            stabilizer = group.stabilizer(vector)
            equalities.append((f"{coweight_name}: simple roots are the orthogonal simple roots",
                               set(subsystem.simple_roots()), set(group.stabilizer_simple_roots(vector))))
            equalities.append((f"{coweight_name}: roots are the closure of the orthogonal simple roots",
                               set(subsystem.roots()), set(stabilizer.root_closure())))
            details[coweight_name] = { "root_count": len(subsystem.roots()),
                                       "types": list(HilbertSpec.from_simple_roots(list(subsystem.simple_roots()),
                                                                                   system.ambient_dimension())
                                                     .types()) }
            if system.family() == RootSystemFamily.E7:
                equalities.append((f"{coweight_name}: root count", len(subsystem.roots()), 72))
            elif system.family() == RootSystemFamily.E6:
                equalities.append((f"{coweight_name}: root count", len(subsystem.roots()), 40))
        generic = sum(system.dual_basis(), Vector.zero(system.ambient_dimension()))
        equalities.append(("a generic vector has an empty orthogonal subsystem",
                           len(system.orthogonal_subsystem(generic).roots()), 0))
        res.append(VerifyReport.build(f"construction.{name}.subsystems",
                                      f"orthogonal subsystems of the {name} coweights", equalities, details, started))
        if system.family() == RootSystemFamily.E6:
            res.append(self.__e5_report(system))
        return res
    def __e5_report(self, system: RootSystem) -> VerifyReport:
        started = time.perf_counter()
        subsystems = { name: system.orthogonal_subsystem(vector)
                       for name, vector in zip(system.coweight_names(), system.minuscule_coweights()) }
        equalities = [ ]
        matches = { }
        for sign, printed in VerificationSuite.__E5_COWEIGHTS.items():
            found = [ name for name, subsystem in subsystems.items()
                      if set(printed) <= set(subsystem.minuscule_coweights()) ]
            matches[sign] = found
            equalities.append((f"the printed {sign} pair are coweights of one E5 subsystem", len(found), 1))
            for name in found:
                subsystem = subsystems[name]
                for vector in printed:
                    equalities.append((f"{vector} is dominant in the subsystem", subsystem.is_dominant(vector), True))
                    equalities.append((f"{vector} is minuscule in the subsystem", subsystem.is_minuscule(vector),
                                       (True, vector)))
        equalities.append(("the printed pairs belong to different subsystems",
                           len(set(name for found in matches.values() for name in found)), 2))
        return VerifyReport.build("construction.E6.e5-coweights", "the E5 coweights c and d are minuscule",
                                  equalities, { "matches": matches }, started)
    ##
    # @brief Verify the displayed identities of every case of a label.
    # @param label A RootSystemLabel or a string.
    # @return A list of VerifyReports: the quadratic identity and every chain step of each case, and for E7 the
    #         vanishing of the odd power sums.
    def identities(self, label) -> list[VerifyReport]:
        system = VerificationSuite.system(label)
        name = str(system.label())
        res = [ ]
        for case in self.cases(system.label()):
            self.__log(f"Verifying the identities of {name} {case.case_id()}.")
            res.append(self.__quadratic_report(case))
            ok, derived, summary, runtime = self.__chain(case)
            for step in summary:
                if not step["facts"] and not step["identities"]:
                    continue
                equalities = [ (fact["name"], fact["holds"], True) for fact in step["facts"] ]
                equalities += [ (identity["name"], identity["result"], "equal") for identity in step["identities"]
                                if identity["result"] != "skipped" ]
                if "missing" in step:
                    equalities.append(("inputs are derived", step["missing"], [ ]))
                skipped = [ identity["name"] for identity in step["identities"] if identity["result"] == "skipped" ]
                res.append(VerifyReport.build(f"identities.{name}.{case.case_id()}.{step['name']}",
                                              f"{name} {case.coweight_name()} derivation step {step['name']}",
                                              equalities, { "skipped": skipped, "outputs": step["outputs"] }))
        if system.family() == RootSystemFamily.E7:
            started = time.perf_counter()
            case = self.cases(system.label())[0]
            sums = Polynomial.power_sums(case.chain_orbit().elements(), self.__max_degree)
            zero = Polynomial.zero(system.ambient_dimension())
            equalities = [ (f"p{j}(X) = 0", sums[j], zero) for j in range(1, self.__max_degree + 1, 2) ]
            res.append(VerifyReport.build(f"identities.{name}.a.odd-power-sums",
                                          "the odd power sums of the E7 orbit of a vanish", equalities, { }, started))
        return res
    def __quadratic_report(self, case: MinusculeCase) -> VerifyReport:
        started = time.perf_counter()
        system = case.system()
        name = str(system.label())
        quadratic = case.quadratic_identity()
        equalities = [ ("tau(r2) - r2 = kappa l(a) + c", quadratic["left"], quadratic["right"]),
                       ("2 sum (alpha, a) alpha is colinear with a", quadratic["colinear"], True),
                       ("constant", quadratic["constant"], quadratic["printed_constant"]) ]
        details = { "kappa": quadratic["kappa"], "constant": quadratic["constant"],
                    "printed_kappa": quadratic["printed_kappa"], "printed_constant": quadratic["printed_constant"] }
        if system.family() in (RootSystemFamily.E6, RootSystemFamily.E7):
            exact = Fraction(72 if system.family() == RootSystemFamily.E7 else 48)
            equalities.append(("linear coefficient", quadratic["kappa"], exact))
            details["note"] = "the printed linear coefficient differs from the exact expansion"
        else:
            equalities.append(("linear coefficient", quadratic["kappa"], quadratic["printed_kappa"]))
        return VerifyReport.build(f"identities.{name}.{case.case_id()}.quadratic",
                                  f"{name} {case.coweight_name()} quadratic translate of r2", equalities, details,
                                  started)
    ##
    # @brief Verify orbit sizes, level splits, projections, and orbit-stabilizer products.
    # @param label A RootSystemLabel or a string.
    # @return A list of VerifyReports, one per case, plus the c and c' conjugacy check for D_n.
    def orbit_structure(self, label) -> list[VerifyReport]:
        system = VerificationSuite.system(label)
        name = str(system.label())
        res = [ ]
        for case in self.cases(system.label()):
            self.__log(f"Verifying the orbit structure of {name} {case.case_id()}.")
            started = time.perf_counter()
            stabilizer = case.stabilizer()
            hilbert = case.hilbert()
            try:
                levels = case.levels()
                elements = case.chain_orbit().element_set()
                orbit = self.__orbit(system, case.weyl_group(), case.coweight())
            except OverflowError as error:
                res.append(VerifyReport(f"orbits.{name}.{case.case_id()}", f"{name} orbit structure",
                                        VerifyStatus.INCONCLUSIVE, { "error": str(error) }))
                continue
            equalities = [ ("coweight orbit size", len(orbit), VerificationSuite.__expected_orbit_size(case)),
                           ("level sizes", { level: len(vectors) for level, vectors in levels.items() },
                            case.expected_levels()),
                           ("every level is one W_a-orbit", [ stabilizer.partition(vectors).sizes()
                                                              for vectors in levels.values() ],
                            [ (len(vectors),) for vectors in levels.values() ]),
                           ("the projections are orthogonal to a",
                            all(y.dot(case.coweight()) == 0 for level in levels for y in case.projections(level)),
                            True),
                           ("the projections are W_a-stable",
                            all(stabilizer.stabilizes(case.projections(level)) for level in levels), True),
                           ("-X = X", frozenset(-y for y in elements) == elements,
                            VerificationSuite.__is_symmetric(system)),
                           ("orbit size times stabilizer order", len(orbit) * hilbert.order(), case.group_order()) ]
            details = { "orbit_size": len(orbit), "stabilizer": hilbert.to_json(),
                        "levels": { level: len(vectors) for level, vectors in levels.items() } }
            try:
                if hilbert.order() <= self.__group_cap:
                    equalities.append(("enumerated stabilizer order", len(stabilizer.enumerate(self.__group_cap)),
                                       hilbert.order()))
                if case.group_order() <= self.__group_cap:
                    equalities.append(("enumerated group order",
                                       self.__enumerated_order(case.weyl_group()),
                                       case.group_order()))
            except OverflowError as error:
                details["enumeration"] = str(error)
            if system.family() == RootSystemFamily.E7:
                equalities.append(("W6-orbits on the orbit of a",
                                   sorted(stabilizer.partition(case.chain_orbit().elements()).sizes()),
                                   [ 1, 1, 27, 27 ]))
                details["wording"] = "the 27-element halves are described as W7-orbits; they are W6-orbits"
            elif system.family() == RootSystemFamily.E6:
                equalities.append(("W5-orbits on the orbit of b",
                                   sorted(stabilizer.partition(case.chain_orbit().elements()).sizes()),
                                   [ 1, 10, 16 ]))
            res.append(VerifyReport.build(f"orbits.{name}.{case.case_id()}",
                                          f"{name} orbit of {case.coweight_name()} splits into stabilizer orbits",
                                          equalities, details, started))
        if system.family() == RootSystemFamily.D:
            res.append(self.__conjugacy_report(system))
        return res
    def __conjugacy_report(self, system: RootSystem) -> VerifyReport:
        started = time.perf_counter()
        n = system.rank()
        name = str(system.label())
        c_prime = system.coweight("c-prime")[1]
        c = system.coweight("c")[1]
        signed = RootSystem.build(RootSystemLabel(RootSystemFamily.B, n)).weyl_group()
        flag, word = signed.conjugate(c, c_prime)
        equalities = [ ("c and c' are W(B_n)-conjugate", flag, True),
                       ("the witness maps c' to c", signed.apply(word, c_prime) if flag else None, c),
                       ("c and c' are not W(D_n)-conjugate", system.weyl_group().conjugate(c, c_prime)[0], False) ]
        return VerifyReport.build(f"orbits.{name}.c-conjugacy", f"{name} c and c' conjugacy", equalities,
                                  { "witness": word }, started)
    ##
    # @brief Verify that the fibers of x -> dominant(a + x) over an orbit are the stabilizer orbits.
    # @param label A RootSystemLabel or a string.
    # @param exploratory A dominant vector tested in place of the minuscule coweights. Its reports are INCONCLUSIVE
    #                    rather than FAIL when the statement does not hold. Defaults to None.
    # @return A list of VerifyReports, one per (coweight, sample) pair.
    def fibers(self, label, exploratory: Vector = None) -> list[VerifyReport]:
        system = VerificationSuite.system(label)
        name = str(system.label())
        group = system.weyl_group()
        samples = VerificationSuite.__samples(system)
        res = [ ]
        for coweight_name, a in zip(system.coweight_names(), system.minuscule_coweights()):
            for sample_name, x in samples:
                self.__log(f"Verifying the fibers of {name} {coweight_name} over {sample_name}.")
                res.append(self.__fiber_report(system, group, f"fibers.{name}.{coweight_name}.{sample_name}",
                                               f"{name} fibers over {coweight_name} + W {sample_name}", a, x, False))
        if exploratory is not None:
            if exploratory.dimension() != system.ambient_dimension():
                raise ValueError(f"The vector \"{exploratory}\" is not in the ambient space of {name}.")
            for sample_name, x in samples:
                res.append(self.__fiber_report(system, group, f"fibers.{name}.exploratory.{sample_name}",
                                               f"{name} fibers over a non-minuscule vector", exploratory, x, True))
        return res
    def __fiber_report(self, system: RootSystem, group: WeylGroup, check_id: str, anchor: str, a: Vector, x: Vector,
                       exploratory: bool) -> VerifyReport:
        started = time.perf_counter()
        try:
            orbit = self.__orbit(system, group, x)
        except OverflowError as error:
            return VerifyReport(check_id, anchor, VerifyStatus.INCONCLUSIVE, { "error": str(error) })
        stabilizer = group.stabilizer(a)
        keys = [ group.dominant(a + y)[0] for y in orbit ]
        fibers = { }
        for key, y in zip(keys, orbit):
            fibers.setdefault(key, [ ]).append(y)
        fiber_partition = OrbitPartition(fibers.values())
        orbit_partition = stabilizer.partition(orbit.elements())
        blocks = [ orbit_partition.block_of(y) for y in orbit ]
        biconditional = len(set(keys)) == len(orbit_partition) == len(set(zip(keys, blocks)))
        equalities = [ ("fiber partition equals the W_a-orbit partition", fiber_partition, orbit_partition),
                       ("dominant(a + b) = dominant(a + b') iff b and b' are W_a-conjugate", biconditional, True) ]
        return VerifyReport.build(check_id, anchor, equalities,
                                  { "a": a, "sample": x, "orbit_size": len(orbit), "fiber_count": len(fibers),
                                    "block_sizes": list(orbit_partition.sizes()) },
                                  started, exploratory)
    ##
    # @brief Verify that S^(W_a) is generated by S^W and its translate by a.
    # @param label A RootSystemLabel or a string.
    # @param strategy "C" for the generation chain certificate or "F" for filtered dimensions. Defaults to "C".
    # @param coweight A coweight name or index. If this is None then every case is checked. Defaults to None.
    # @param group "W" or "W0". Defaults to None.
    # @return A list of VerifyReports, one per case.
    # @throw ValueError If the strategy, the coweight, or the group is invalid.
    def generation(self, label, strategy: str = "C", coweight = None, group: str = None) -> list[VerifyReport]:
        strategy = str(strategy).strip().upper()
        if strategy not in ("C", "F"):
            raise ValueError(f"\"{strategy}\" is not a valid generation strategy. Use \"C\" or \"F\".")
        res = [ ]
        for case in self.cases(label, coweight, group):
            self.__log(f"Verifying generation for {case.system().label()} {case.case_id()} with strategy {strategy}.")
            if strategy == "C":
                res.append(self.__chain_report(case))
            else:
                res.append(self.__filtered_report(case))
        return res
    def __chain_report(self, case: MinusculeCase) -> VerifyReport:
        started = time.perf_counter()
        name = str(case.system().label())
        ok, derived, summary, runtime = self.__chain(case)
        targets = case.targets()
        hilbert = case.hilbert()
        orbit = case.coweight_orbit()
        missing = [ target for target, _, _ in targets if target not in derived ]
        variant = [ target for target, function, _ in targets if not case.is_stabilizer_invariant(function) ]
        rank = case.target_rank(self.__seed)
        equalities = [ ("the chain verifies", ok, True),
                       ("every target is derived", missing, [ ]),
                       ("every target is W_a-invariant", variant, [ ]),
                       ("Jacobian rank equals the number of targets", rank, len(targets)),
                       ("the number of targets equals the ambient dimension", len(targets),
                        case.system().ambient_dimension()),
                       ("target degrees equal the stabilizer degrees", sorted(degree for _, _, degree in targets),
                        list(hilbert.generator_degrees())),
                       ("|W a| divides |W|", case.group_order() % len(orbit), 0),
                       ("degree product equals |W| / |W a|", hilbert.order(), case.group_order() // len(orbit)) ]
        details = { "identities": GenerationChain.tally(summary), "steps": len(summary),
                    "failed_steps": [ step["name"] for step in summary if not step["ok"] ],
                    "targets": [ target for target, _, _ in targets ], "stabilizer": hilbert.to_json(),
                    "group": case.group_name() }
        anchor = f"{name} S^W and its translate by {case.coweight_name()} generate S^(W_a)"
        skipped = details["identities"]["skipped"]
        if skipped:
            anchor += f" ({skipped} identities above degree {self.__max_degree} not expanded)"
        report = VerifyReport.build(f"generation.{name}.{case.case_id()}.chain", anchor,
                                    equalities, details, started)
        return VerifyReport(report.check_id(), report.anchor(), report.status(), report.details(),
                            report.runtime_ms() + runtime)
    def __reynolds_dimensions(self, case: MinusculeCase, max_degree: int) -> list[int]:
        elements = case.stabilizer().enumerate(self.__group_cap)
        n = case.system().ambient_dimension()
        res = [ ]
        for degree in range(max_degree + 1):
            monomials = [ ]
            for choice in combinations_with_replacement(range(n), degree):
                exponents = [ 0 ] * n
                for index in choice:
                    exponents[index] += 1
                monomials.append(tuple(exponents))
            columns = { exponents: i for i, exponents in enumerate(monomials) }
            rows = [ ]
            for exponents in monomials:
                image = Polynomial.average(elements, Polynomial(n, { exponents: 1 }))
                row = [ 0 ] * len(columns)
                for key, value in image.terms().items():
                    row[columns[key]] = value
                rows.append(row)
            res.append(Matrix(rows, len(columns)).rank())
        return res
    def __filtered_report(self, case: MinusculeCase) -> VerifyReport:
        started = time.perf_counter()
        name = str(case.system().label())
        check_id = f"generation.{name}.{case.case_id()}.filtered"
        anchor = f"{name} filtered dimensions of S^W and its translate by {case.coweight_name()}"
        hilbert = case.hilbert()
        cumulative = hilbert.cumulative(self.__max_degree)
        series = hilbert.series(self.__max_degree)
        try:
            generators = case.invariant_generators().with_translates(case.coweight())
            dimensions, adopted = generators.saturated_dimensions(self.__max_degree)
            oracle = self.__reynolds_dimensions(case, self.__max_degree)
        except OverflowError as error:
            return VerifyReport(check_id, anchor, VerifyStatus.INCONCLUSIVE,
                                { "error": str(error), "hilbert": cumulative }, VerifyReport.elapsed(started))
        dimensions = list(dimensions)
        if oracle != series or any(found > bound for found, bound in zip(dimensions, cumulative)):
            status = VerifyStatus.FAIL
        elif dimensions == cumulative:
            status = VerifyStatus.PASS
        else:
            status = VerifyStatus.INCONCLUSIVE
        details = { "dimensions": dimensions, "hilbert": cumulative, "series": series, "reynolds": oracle,
                    "adopted": adopted, "generators": generators.labels(), "max_degree": self.__max_degree }
        return VerifyReport(check_id, anchor, status, details, VerifyReport.elapsed(started))
    ##
    # @brief Find a single word carrying one triangle to another.
    # @param label A RootSystemLabel or a string.
    # @param target The Triangle (a, b, c). The side a must be colinear to a minuscule coweight.
    # @param source The Triangle (a', b', c').
    # @return A WeylWord w with w a' = a, w b' = b, and w c' = c.
    # @throw ValueError If a is not colinear to a minuscule coweight.
    # @throw LookupError If some pair of corresponding sides is not W-conjugate.
    # @throw RuntimeError If the stabilizer search does not reach b.
    def triangle_witness(self, label, target: Triangle, source: Triangle) -> WeylWord:
        system = VerificationSuite.system(label)
        group = system.weyl_group()
        if not system.is_minuscule(target.a())[0]:
            raise ValueError(f"The side \"{target.a()}\" is not colinear to a minuscule coweight of "
                             f"{system.label()}.")
        words = [ ]
        for side, x, y in zip("abc", target.sides(), source.sides()):
            flag, word = group.conjugate(x, y)
            if not flag:
                raise LookupError(f"The sides {side} = {x} and {side}' = {y} are not W-conjugate.")
            words.append(word)
        moved = group.apply(words[0], source.b())
        orbit = group.stabilizer(target.a()).orbit(moved, self.__orbit_cap)
        if target.b() not in orbit:
            raise RuntimeError(f"The stabilizer orbit of {moved} does not contain {target.b()}.")
        res = orbit.word(target.b()).compose(words[0])
        for x, y in zip(target.sides(), source.sides()):
            if group.apply(res, y) != x:
                raise RuntimeError(f"The witness {res} does not map {y} to {x}.")
        return res
    ##
    # @brief Report on a triangle witness search.
    # @param label A RootSystemLabel or a string.
    # @param target The Triangle (a, b, c).
    # @param source The Triangle (a', b', c').
    # @return A VerifyReport. Conjugacy and search failures are reported as FAIL.
    # @throw ValueError If a is not colinear to a minuscule coweight.
    def triangle_report(self, label, target: Triangle, source: Triangle) -> VerifyReport:
        started = time.perf_counter()
        system = VerificationSuite.system(label)
        name = str(system.label())
        check_id = f"triangles.{name}.witness"
        anchor = f"{name} triangles with a minuscule side are conjugate by a single word"
        try:
            word = self.triangle_witness(system.label(), target, source)
        except (LookupError, RuntimeError) as error:
            return VerifyReport(check_id, anchor, VerifyStatus.FAIL,
                                { "error": str(error), "target": target.to_json(), "source": source.to_json() },
                                VerifyReport.elapsed(started))
        group = system.weyl_group()
        equalities = [ (f"w {side}' = {side}", group.apply(word, y), x)
                       for side, x, y in zip("abc", target.sides(), source.sides()) ]
        return VerifyReport.build(check_id, anchor, equalities,
                                  { "witness": word, "target": target.to_json(), "source": source.to_json() },
                                  started)
    ##
    # @brief Run randomized triangle witness round trips.
    # @details Each trial takes a minuscule coweight a and a random root b, moves the triangle (a, b, -a - b) by a
    #          random word, and searches for a witness carrying it back.
    # @param label A RootSystemLabel or a string.
    # @param count The number of trials per coweight.
    # @param seed The seed for the trials. If this is None then the suite seed is used. Defaults to None.
    # @return A list of VerifyReports, one per coweight.
    def triangles(self, label, count: int, seed: int = None) -> list[VerifyReport]:
        system = VerificationSuite.system(label)
        name = str(system.label())
        group = system.weyl_group()
        roots = system.roots()
        rank = len(system.simple_roots())
        rng = random.Random(self.__seed if seed is None else seed)
        res = [ ]
        for coweight_name, a in zip(system.coweight_names(), system.minuscule_coweights()):
            self.__log(f"Running {count} triangle round trips for {name} {coweight_name}.")
            started = time.perf_counter()
            failures = [ ]
            lengths = [ ]
            for trial in range(count):
                target = Triangle(a, roots[rng.randrange(len(roots))])
                word = WeylWord([ rng.randint(1, rank) for _ in range(rng.randint(0, 2 * rank)) ])
                source = Triangle(*(group.apply(word, side) for side in target.sides()))
                try:
                    lengths.append(len(self.triangle_witness(system.label(), target, source)))
                except (LookupError, RuntimeError) as error:
                    failures.append({ "trial": trial, "error": str(error) })
            res.append(VerifyReport.build(f"triangles.{name}.{coweight_name}.random",
                                          f"{name} random triangles with side {coweight_name} round trip",
                                          [ ("successful round trips", count - len(failures), count) ],
                                          { "count": count, "failures": failures,
                                            "longest_witness": max(lengths, default=0) }, started))
        return res
    ##
    # @brief Run every suite on a list of systems.
    # @param labels The labels to run. If this is None then ACCEPTANCE_LABELS is used. Defaults to None.
    # @param triangle_count The number of random triangles per coweight. Defaults to 100.
    # @param filtered The labels that also run strategy F. If this is None then FILTERED_LABELS is used. Defaults to
    #                 None.
    # @return A list of VerifyReports.
    def acceptance(self, labels: list = None, triangle_count: int = 100, filtered: list = None) -> list[VerifyReport]:
        labels = ACCEPTANCE_LABELS if labels is None else labels
        filtered = FILTERED_LABELS if filtered is None else filtered
        res = [ ]
        for label in labels:
            name = str(VerificationSuite.system(label).label())
            res += self.construction(label)
            res += self.identities(label)
            res += self.orbit_structure(label)
            res += self.fibers(label)
            res += self.generation(label, "C")
            if name in filtered:
                res += self.generation(label, "F")
            res += self.triangles(label, triangle_count)
        return res

__all__ = [ "ACCEPTANCE_LABELS", "FILTERED_LABELS", "SUITE_ALIASES", "SUITE_NAMES", "VerificationSuite" ]
