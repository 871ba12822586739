#!/usr/bin/env python3

import unittest

from megatech.minuscule import *

class TestVerificationSuite(unittest.TestCase):
    def setUp(self) -> None:
        self.__messages = [ ]
        self.__suite = VerificationSuite(max_degree=6, progress=self.__messages.append)
        self.__a2 = VerificationSuite.system("A2")
        self.__a1 = self.__a2.coweight("a1")[1]
    def _assert_passed(self, reports: list) -> None:
        self.assertGreater(len(reports), 0)
        for report in reports:
            self.assertEqual(report.status(), VerifyStatus.PASS, report.to_json_line(False))
    def test_init_should_fail_for_weird_bounds(self) -> None:
        with self.assertRaises(ValueError):
            VerificationSuite(max_degree=1)
        with self.assertRaises(ValueError):
            VerificationSuite(orbit_cap=0)
    def test_system_should_reject_e8(self) -> None:
        with self.assertRaises(ValueError):
            VerificationSuite.system("E8")
        self.assertEqual(str(VerificationSuite.system(RootSystemLabel.parse("D4")).label()), "D4")
    def test_cases_should_check_every_d_coweight_under_both_groups(self) -> None:
        ids = [ case.case_id() for case in self.__suite.cases("D4") ]
        self.assertEqual(ids, [ "b", "b.W0", "c-prime", "c-prime.W0", "c", "c.W0" ])
        self.assertEqual([ case.case_id() for case in self.__suite.cases("D4", "c", "W0") ], [ "c.W0" ])
        self.assertIs(self.__suite.cases("D4")[0], self.__suite.cases("D4", "b")[0])
    def test_construction_should_pass_for_classical_systems(self) -> None:
        for label in ("A3", "B3", "C3", "D4"):
            reports = self.__suite.construction(label)
            self._assert_passed(reports)
            self.assertIn(f"construction.{label}.subsystems", [ report.check_id() for report in reports ])
        self.assertGreater(len(self.__messages), 0)
    def test_construction_should_check_the_e5_coweights(self) -> None:
        ids = [ report.check_id() for report in self.__suite.construction("E6") ]
        self.assertIn("construction.E6.e5-coweights", ids)
        self.assertIn("construction.E6.b-plus", ids)
    def test_construction_should_pass_for_e6(self) -> None:
        self._assert_passed(self.__suite.construction("E6"))
    def test_orbit_structure_should_pass_after_construction(self) -> None:
        suite = VerificationSuite(max_degree=4)
        self._assert_passed(suite.construction("D4"))
        reports = suite.orbit_structure("D4")
        self._assert_passed(reports)
        ids = [ report.check_id() for report in reports ]
        self.assertIn("orbits.D4.c.W0", ids)
        self.assertIn("orbits.D4.c-prime.W0", ids)
    def test_identities_should_pass_for_small_systems(self) -> None:
        for label in ("A2", "B3", "D4"):
            reports = self.__suite.identities(label)
            self._assert_passed(reports)
            self.assertIn(f"identities.{label}.{self.__suite.cases(label)[0].case_id()}.quadratic",
                          [ report.check_id() for report in reports ])
    def test_orbit_structure_should_pass_for_small_systems(self) -> None:
        for label in ("A3", "C3", "D4"):
            self._assert_passed(self.__suite.orbit_structure(label))
        ids = [ report.check_id() for report in self.__suite.orbit_structure("D4") ]
        self.assertIn("orbits.D4.c-conjugacy", ids)
        self.assertIn("orbits.D4.b.W0", ids)
    def test_orbit_structure_should_be_inconclusive_past_the_cap(self) -> None:
        suite = VerificationSuite(orbit_cap=2)
        reports = suite.orbit_structure("B3")
        self.assertEqual(reports[0].status(), VerifyStatus.INCONCLUSIVE)
    def test_fibers_should_pass_for_minuscule_coweights(self) -> None:
        reports = self.__suite.fibers("A2")
        self._assert_passed(reports)
        self.assertIn("fibers.A2.a1.rho", [ report.check_id() for report in reports ])
    def test_fibers_should_sample_the_highest_short_root(self) -> None:
        for label, coweight in (("B3", "b"), ("C3", "c")):
            reports = self.__suite.fibers(label)
            self._assert_passed(reports)
            self.assertIn(f"fibers.{label}.{coweight}.highest-short-root", [ report.check_id() for report in reports ])
    def test_fibers_should_never_fail_for_exploratory_vectors(self) -> None:
        reports = self.__suite.fibers("A2", self.__a2.highest_root())
        exploratory = [ report for report in reports if ".exploratory." in report.check_id() ]
        self.assertGreater(len(exploratory), 0)
        for report in exploratory:
            self.assertNotEqual(report.status(), VerifyStatus.FAIL)
    def test_fibers_should_fail_for_exploratory_vectors_of_the_wrong_dimension(self) -> None:
        with self.assertRaises(ValueError):
            self.__suite.fibers("A2", Vector([ 1, 0 ]))
    def test_generation_should_fail_for_unknown_strategies(self) -> None:
        with self.assertRaises(ValueError):
            self.__suite.generation("A2", "X")
    def test_generation_should_pass_with_the_chain(self) -> None:
        reports = self.__suite.generation("A2", "C", "a1")
        self._assert_passed(reports)
        self.assertEqual(reports[0].check_id(), "generation.A2.a1.chain")
        self.assertNotIn("not expanded", reports[0].anchor())
    def test_generation_should_note_identities_above_the_maximum_degree(self) -> None:
        report = VerificationSuite(max_degree=2).generation("A3", "C", "a2")[0]
        self.assertGreater(report.details()["identities"]["skipped"], 0)
        self.assertIn("not expanded", report.anchor())
        self.assertIn("above degree 2", report.anchor())
    def test_generation_should_pass_with_the_chain_for_exceptional_systems(self) -> None:
        suite = VerificationSuite(max_degree=4)
        for label in ("E6", "E7"):
            reports = suite.generation(label, "C")
            self._assert_passed(reports)
            for report in reports:
                self.assertEqual(report.details()["failed_steps"], [ ])
    def test_generation_should_pass_with_filtered_dimensions(self) -> None:
        reports = VerificationSuite(max_degree=4).generation("A2", "f", "a1")
        self._assert_passed(reports)
        self.assertEqual(reports[0].details()["dimensions"], [ 1, 3, 7, 13, 22 ])
        self.assertEqual(reports[0].details()["reynolds"], reports[0].details()["series"])
    def test_triangle_witness_should_carry_the_source_to_the_target(self) -> None:
        group = self.__a2.weyl_group()
        target = Triangle(self.__a1, Vector([ 0, 1, -1 ]))
        source = Triangle(*(group.apply(WeylWord([ 1, 2 ]), side) for side in target.sides()))
        word = self.__suite.triangle_witness("A2", target, source)
        for x, y in zip(target.sides(), source.sides()):
            self.assertEqual(group.apply(word, y), x)
        self.assertEqual(self.__suite.triangle_report("A2", target, source).status(), VerifyStatus.PASS)
    def test_triangle_witness_should_fail_for_non_minuscule_sides(self) -> None:
        target = Triangle(Vector([ 1, 0, -1 ]), Vector([ -1, 1, 0 ]))
        with self.assertRaises(ValueError):
            self.__suite.triangle_witness("A2", target, target)
    def test_triangle_witness_should_fail_for_non_conjugate_sides(self) -> None:
        target = Triangle(self.__a1, Vector([ 0, 1, -1 ]))
        source = Triangle(-self.__a1, Vector([ 0, 1, -1 ]))
        with self.assertRaises(LookupError):
            self.__suite.triangle_witness("A2", target, source)
        report = self.__suite.triangle_report("A2", target, source)
        self.assertEqual(report.status(), VerifyStatus.FAIL)
        self.assertIn("error", report.details())
    def test_triangles_should_round_trip(self) -> None:
        reports = self.__suite.triangles("B3", 10, 7)
        self._assert_passed(reports)
        self.assertEqual(reports[0].check_id(), "triangles.B3.b.random")
    def test_acceptance_should_run_every_suite(self) -> None:
        reports = VerificationSuite(max_degree=4).acceptance([ "A2" ], 3, [ "A2" ])
        prefixes = { report.check_id().split(".")[0] for report in reports }
        self.assertEqual(prefixes, set(SUITE_NAMES))
        self.assertFalse(any(report.failed() for report in reports))
    def test_acceptance_should_pass_for_d4(self) -> None:
        reports = VerificationSuite(max_degree=4).acceptance([ "D4" ], 3, [ ])
        self.assertGreater(len(reports), 0)
        self.assertEqual([ report.check_id() for report in reports if report.failed() ], [ ])


if __name__ == "__main__":
  unittest.main()
