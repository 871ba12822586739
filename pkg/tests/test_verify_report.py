#!/usr/bin/env python3

import unittest
import json

from fractions import Fraction

from megatech.minuscule import *

class TestVerifyReport(unittest.TestCase):
    def test_build_should_pass_when_every_pair_is_equal(self) -> None:
        report = VerifyReport.build("orbits.A2.a1", "the orbit has 3 elements", [ ("size", 3, 3) ])
        self.assertEqual(report.status(), VerifyStatus.PASS)
        self.assertFalse(report.failed())
        self.assertEqual(report.details()["checks"], [ { "name": "size", "holds": True } ])
        self.assertNotIn("failures", report.details())
    def test_build_should_fail_and_record_both_sides(self) -> None:
        report = VerifyReport.build("orbits.A2.a1", "the orbit has 3 elements", [ ("size", 2, 3) ])
        self.assertEqual(report.status(), VerifyStatus.FAIL)
        self.assertTrue(report.failed())
        self.assertEqual(report.details()["failures"], [ { "name": "size", "left": "2", "right": "3" } ])
    def test_build_should_be_inconclusive_when_requested(self) -> None:
        report = VerifyReport.build("generation.A2.a1.filtered", "bounds", [ ("dims", 1, 2) ], inconclusive=True)
        self.assertEqual(report.status(), VerifyStatus.INCONCLUSIVE)
        self.assertFalse(report.failed())
    def test_family_should_be_the_second_component(self) -> None:
        self.assertEqual(VerifyReport("orbits.E7.a", "", VerifyStatus.PASS).family(), "E7")
        self.assertEqual(VerifyReport("orbits", "", VerifyStatus.PASS).family(), "")
    def test_to_json_line_should_be_deterministic_without_timing(self) -> None:
        report = VerifyReport("orbits.E7.a", "anchor", VerifyStatus.PASS, { "q": Fraction(3, 4) }, 17)
        data = json.loads(report.to_json_line(False))
        self.assertEqual(data, { "check_id": "orbits.E7.a", "paper_anchor": "anchor", "status": "pass",
                                 "details": { "q": "3/4" }, "runtime_ms": 0 })
        self.assertEqual(report.to_json()["runtime_ms"], 17)

class TestToJsonValue(unittest.TestCase):
    def test_to_json_value_should_convert_exact_values(self) -> None:
        value = { "v": Vector([ "1/2", 0 ]), "w": WeylWord([ 1, 2 ]), "s": { 2, 1 }, "t": (Fraction(1, 3), True),
                  "status": VerifyStatus.INCONCLUSIVE }
        self.assertEqual(to_json_value(value), { "v": [ "1/2", "0" ], "w": [ 1, 2 ], "s": [ 1, 2 ],
                                                 "t": [ "1/3", True ], "status": "inconclusive" })

class TestTriangle(unittest.TestCase):
    def test_init_should_fail_when_the_sides_do_not_close(self) -> None:
        with self.assertRaises(ValueError):
            Triangle(Vector([ 1, 0 ]), Vector([ 0, 1 ]), Vector([ 1, 1 ]))
    def test_init_should_complete_the_third_side(self) -> None:
        triangle = Triangle(Vector([ 1, 0 ]), Vector([ 0, 1 ]))
        self.assertEqual(triangle.c(), Vector([ -1, -1 ]))
        self.assertEqual(triangle, Triangle(Vector([ 1, 0 ]), Vector([ 0, 1 ]), Vector([ -1, -1 ])))
        self.assertEqual(triangle.to_json()["c"], [ "-1", "-1" ])


if __name__ == "__main__":
  unittest.main()
