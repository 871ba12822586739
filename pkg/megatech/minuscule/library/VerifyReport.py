##
# @file VerifyReport.py
# @brief Verification Reports and Triangles
# @author Alexander Rothman <[gnomesort@megate.ch](mailto:gnomesort@megate.ch)>
# @date 2024
# @copyright AGPL-3.0-or-later
import json
import time
from enum import IntEnum
from fractions import Fraction

from .ExactArithmetic import Vector, Matrix, rational_to_string
from .Polynomial import Polynomial
from .WeylGroup import WeylWord, Orbit, OrbitPartition

##
# @brief The outcome of a verification check.
class VerifyStatus(IntEnum):
    PASS = 0
    FAIL = 1
    INCONCLUSIVE = 2
    ##
    # @brief Convert a VerifyStatus into a string.
    # @return The lower case name of the status.
    def __str__(self) -> str:
        return self.name.lower()

##
# @brief Convert a value into a JSON compatible value.
# @details Fractions become rational strings. Vectors, Matrices, Polynomials, words, orbits, and partitions use their
#          own JSON forms. Dictionaries, lists, tuples, and sets are converted recursively. Sets are sorted.
# @param value The value to convert.
# @return A JSON compatible value.
def to_json_value(value):
    if isinstance(value, IntEnum):
        return str(value)
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return rational_to_string(value)
    if isinstance(value, (Vector, Matrix, Polynomial, WeylWord, Orbit, OrbitPartition)):
        return value.to_json()
    if isinstance(value, dict):
        return { str(key): to_json_value(item) for key, item in value.items() }
    if isinstance(value, (set, frozenset)):
        return [ to_json_value(item) for item in sorted(value) ]
    if isinstance(value, (list, tuple)):
        return [ to_json_value(item) for item in value ]
    return str(value)

##
# @brief A structured record of one verification check.
# @details A report is built from a list of named equalities. The builder compares both sides itself, so the status of
#          a report always reflects comparisons made when the report was built.
class VerifyReport:
    ##
    # @brief Construct a VerifyReport.
    # @param check_id A dotted identifier such as "orbits.E7.a.sizes".
    # @param anchor A short description of the mathematical statement being checked.
    # @param status The VerifyStatus.
    # @param details A dictionary of JSON compatible details. Defaults to None.
    # @param runtime_ms The time spent on the check in milliseconds. Defaults to 0.
    def __init__(self, check_id: str, anchor: str, status: VerifyStatus, details: dict = None, runtime_ms: int = 0):
        self.__check_id = check_id
        self.__anchor = anchor
        self.__status = status
        self.__details = to_json_value(details or { })
        self.__runtime_ms = runtime_ms
    ##
    # @brief Build a VerifyReport from exact equalities.
    # @param check_id The check identifier.
    # @param anchor The description of the statement being checked.
    # @param equalities A list of (name, left, right) tuples. Every pair is compared with ==.
    # @param details Additional details. Defaults to None.
    # @param started A time.perf_counter() value taken when the check began. Defaults to None (runtime 0).
    # @param inconclusive Whether a failed comparison means the budget ran out rather than a contradiction. Defaults to
    #                     False.
    # @return A VerifyReport whose status is PASS when every pair is equal.
    @staticmethod
    def build(check_id: str, anchor: str, equalities: list[tuple], details: dict = None, started: float = None,
              inconclusive: bool = False):
        results = [ ]
        failures = [ ]
        for name, left, right in equalities:
            holds = bool(left == right)
            results.append({ "name": name, "holds": holds })
            if not holds:
                failures.append({ "name": name, "left": VerifyReport.__abbreviate(left),
                                  "right": VerifyReport.__abbreviate(right) })
        res = dict(details or { })
        res["checks"] = results
        if failures:
            res["failures"] = failures
        status = VerifyStatus.PASS
        if failures:
            status = VerifyStatus.INCONCLUSIVE if inconclusive else VerifyStatus.FAIL
        return VerifyReport(check_id, anchor, status, res, VerifyReport.elapsed(started))
    @staticmethod
    def __abbreviate(value) -> str:
        text = json.dumps(to_json_value(value), sort_keys=True)
        return text if len(text) <= 240 else text[:237] + "..."
    ##
    # @brief Compute the milliseconds elapsed since a starting time.
    # @param started A time.perf_counter() value or None.
    # @return The elapsed time in whole milliseconds. 0 when started is None.
    @staticmethod
    def elapsed(started: float) -> int:
        if started is None:
            return 0
        return int((time.perf_counter() - started) * 1000)
    def check_id(self) -> str:
        return self.__check_id
    def anchor(self) -> str:
        return self.__anchor
    def status(self) -> VerifyStatus:
        return self.__status
    def details(self) -> dict:
        return self.__details
    def runtime_ms(self) -> int:
        return self.__runtime_ms
    ##
    # @brief Determine whether or not the report failed.
    # @return True if the status is FAIL. Otherwise False.
    def failed(self) -> bool:
        return self.__status == VerifyStatus.FAIL
    ##
    # @brief Retrieve the family part of the check identifier.
    # @return The second dotted component of the identifier, or an empty string.
    def family(self) -> str:
        parts = self.__check_id.split(".")
        return parts[1] if len(parts) > 1 else ""
    ##
    # @brief Convert the VerifyReport into a JSON compatible dictionary.
    # @param timing Whether or not to include the measured runtime. When this is False runtime_ms is 0. Defaults to
    #               True.
    # @return A dictionary with the keys check_id, paper_anchor, status, details, and runtime_ms.
    def to_json(self, timing: bool = True) -> dict:
        return { "check_id": self.__check_id, "paper_anchor": self.__anchor, "status": str(self.__status),
                 "details": self.__details, "runtime_ms": self.__runtime_ms if timing else 0 }
    ##
    # @brief Convert the VerifyReport into a single JSON line.
    # @param timing Whether or not to include the measured runtime. Defaults to True.
    # @return A compact JSON string with sorted keys.
    def to_json_line(self, timing: bool = True) -> str:
        return json.dumps(self.to_json(timing), sort_keys=True, separators=(",", ":"))

##
# @brief Three Vectors summing to zero.
class Triangle:
    ##
    # @brief Construct a Triangle.
    # @param a The first side.
    # @param b The second side.
    # @param c The third side. If this is None then it is computed as -a - b. Defaults to None.
    # @throw ValueError If a + b + c is not exactly zero.
    def __init__(self, a: Vector, b: Vector, c: Vector = None):
        if c is None:
            c = -a - b
        if not (a + b + c).is_zero():
            raise ValueError(f"The vectors {a}, {b}, and {c} do not sum to zero.")
        self.__sides = (a, b, c)
    def a(self) -> Vector:
        return self.__sides[0]
    def b(self) -> Vector:
        return self.__sides[1]
    def c(self) -> Vector:
        return self.__sides[2]
    def sides(self) -> tuple[Vector, Vector, Vector]:
        return self.__sides
    def __eq__(self, other) -> bool:
        if not isinstance(other, Triangle):
            return NotImplemented
        return self.__sides == other.__sides
    def __hash__(self) -> int:
        return hash(self.__sides)
    def to_json(self) -> dict:
        return { "a": self.__sides[0].to_json(), "b": self.__sides[1].to_json(), "c": self.__sides[2].to_json() }

__all__ = [ "VerifyStatus", "to_json_value", "VerifyReport", "Triangle" ]
