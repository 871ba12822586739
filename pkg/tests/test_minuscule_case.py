#!/usr/bin/env python3

import unittest

from fractions import Fraction

from megatech.minuscule import *

def system(text: str) -> RootSystem:
    return RootSystem.build(RootSystemLabel.parse(text))

class TestMinusculeCase(unittest.TestCase):
    def test_init_should_fail_for_unknown_groups(self) -> None:
        with self.assertRaises(ValueError):
            MinusculeCase(system("D4"), "c", "V")
    def test_init_should_fail_for_w0_outside_of_d(self) -> None:
        with self.assertRaises(ValueError):
            MinusculeCase(system("B3"), "b", "W0")
    def test_init_should_fail_for_unknown_coweights(self) -> None:
        with self.assertRaises(ValueError):
            MinusculeCase(system("B3"), "c")
    def test_case_id_should_mark_the_d_weyl_group(self) -> None:
        self.assertEqual(MinusculeCase(system("D4"), "b", "w0").case_id(), "b.W0")
        self.assertEqual(MinusculeCase(system("D4"), "b").case_id(), "b")
    def test_group_order_should_follow_the_group_choice(self) -> None:
        self.assertEqual(MinusculeCase(system("D4"), "c").group_order(), 384)
        self.assertEqual(MinusculeCase(system("D4"), "c", "W0").group_order(), 192)
        self.assertEqual(MinusculeCase(system("A3"), "a2").group_order(), 24)
    def test_coweight_orbit_should_follow_the_group_choice(self) -> None:
        self.assertEqual(len(MinusculeCase(system("D4"), "c").coweight_orbit()), 16)
        self.assertEqual(len(MinusculeCase(system("D4"), "c", "W0").coweight_orbit()), 8)
    def test_levels_should_match_the_expected_sizes(self) -> None:
        for text, coweight in (("A3", "a2"), ("A4", "a1"), ("B3", "b"), ("C3", "c"), ("D4", "b"), ("D4", "c-prime")):
            case = MinusculeCase(system(text), coweight)
            sizes = { level: len(vectors) for level, vectors in case.levels().items() }
            self.assertEqual(sizes, case.expected_levels())
    def test_levels_should_be_in_descending_order(self) -> None:
        levels = list(MinusculeCase(system("B3"), "b").levels())
        self.assertEqual(levels, [ Fraction(1), Fraction(0), Fraction(-1) ])
    def test_known_levels_should_find_the_multiples_of_the_coweight(self) -> None:
        self.assertEqual(MinusculeCase(system("B3"), "b").known_levels(), { Fraction(1): 1, Fraction(-1): -1 })
        self.assertEqual(MinusculeCase(system("C3"), "c").known_levels(), { })
    def test_projections_should_be_orthogonal_to_the_coweight(self) -> None:
        case = MinusculeCase(system("C3"), "c")
        for level in case.levels():
            for y in case.projections(level):
                self.assertEqual(y.dot(case.coweight()), 0)
    def test_quadratic_identity_should_hold_for_classical_systems(self) -> None:
        case = MinusculeCase(system("A3"), "a1")
        quadratic = case.quadratic_identity()
        self.assertEqual(quadratic["kappa"], 16)
        self.assertEqual(quadratic["constant"], 6)
        self.assertEqual(quadratic["kappa"], quadratic["printed_kappa"])
        self.assertTrue(quadratic["colinear"])
        self.assertEqual(quadratic["left"], quadratic["right"])
    def test_targets_should_be_stabilizer_invariant(self) -> None:
        for text, coweight, group in (("A3", "a2", "W"), ("B3", "b", "W"), ("C3", "c", "W"), ("D4", "b", "W0")):
            case = MinusculeCase(system(text), coweight, group)
            for name, function, _ in case.targets():
                self.assertTrue(case.is_stabilizer_invariant(function), f"{text} {coweight}: {name}")
    def test_targets_should_be_algebraically_independent(self) -> None:
        case = MinusculeCase(system("B3"), "b")
        self.assertEqual([ name for name, _, _ in case.targets() ], [ "l(a)", "p2(X[0])", "p4(X[0])" ])
        functions = [ function for _, function, _ in case.targets() ]
        self.assertEqual(jacobian_rank(functions, [ Vector([ 1, 2, 3 ]) ]), 3)
    def test_target_rank_should_be_full_for_exceptional_systems(self) -> None:
        for label, coweight in (("E6", "b-plus"), ("E7", "a")):
            case = MinusculeCase(system(label), coweight)
            self.assertEqual(case.target_rank(0), len(case.targets()))
            self.assertEqual(case.target_rank(0), 8)
    def test_targets_should_include_the_product_for_the_d_weyl_group(self) -> None:
        names = [ name for name, _, _ in MinusculeCase(system("D4"), "b", "W0").targets() ]
        self.assertIn("d'", names)
        self.assertNotIn("d'", [ name for name, _, _ in MinusculeCase(system("D4"), "b").targets() ])
    def test_invariant_generators_should_be_invariant(self) -> None:
        case = MinusculeCase(system("D4"), "b", "W0")
        generators = case.invariant_generators()
        self.assertIn("d", generators.labels())
        self.assertEqual(sorted(generators.weights()), [ 2, 4, 4, 6 ])
    def test_hilbert_should_describe_the_stabilizer(self) -> None:
        hilbert = MinusculeCase(system("B3"), "b").hilbert()
        self.assertEqual(hilbert.degrees(), (2, 4))
        self.assertEqual(hilbert.trivial(), 1)
    def test_chain_should_verify_for_small_cases(self) -> None:
        for text, coweight, group in (("A2", "a1", "W"), ("A3", "a2", "W"), ("B3", "b", "W"), ("C3", "c", "W"),
                                      ("D4", "c", "W"), ("D4", "b", "W0")):
            chain = MinusculeCase(system(text), coweight, group).chain()
            ok, derived, summary = chain.verify(8)
            self.assertTrue(ok, f"{text} {coweight} {group}")
            self.assertEqual(derived, chain.outputs())
            self.assertEqual(GenerationChain.tally(summary)["differs"], 0)
    def test_chain_should_derive_every_target(self) -> None:
        case = MinusculeCase(system("C3"), "c")
        outputs = case.chain().outputs()
        for name, _, _ in case.targets():
            self.assertIn(name, outputs)
        self.assertIn("p4(T[1/2])", outputs)

class TestExceptionalCases(unittest.TestCase):
    def test_e7_levels_should_split_the_coweight_orbit(self) -> None:
        case = MinusculeCase(system("E7"), "a")
        self.assertEqual(len(case.coweight_orbit()), 56)
        partition = case.stabilizer().partition(case.coweight_orbit().elements())
        self.assertEqual(partition.sizes(), (1, 1, 27, 27))
        self.assertEqual(case.known_levels(), { Fraction(3, 2): 1, Fraction(-3, 2): -1 })
    def test_e7_quadratic_identity_should_use_the_exact_coefficient(self) -> None:
        quadratic = MinusculeCase(system("E7"), "a").quadratic_identity()
        self.assertEqual(quadratic["kappa"], 72)
        self.assertEqual(quadratic["constant"], 54)
        self.assertTrue(quadratic["colinear"])
    def test_e6_levels_should_split_the_coweight_orbit(self) -> None:
        case = MinusculeCase(system("E6"), "b-plus")
        self.assertEqual(len(case.coweight_orbit()), 27)
        sizes = { level: len(vectors) for level, vectors in case.levels().items() }
        self.assertEqual(sizes, { Fraction(4, 3): 1, Fraction(1, 3): 16, Fraction(-2, 3): 10 })
        partition = case.stabilizer().partition(case.coweight_orbit().elements())
        self.assertEqual(partition.sizes(), (1, 10, 16))
    def test_e6_quadratic_identity_should_use_the_exact_coefficient(self) -> None:
        quadratic = MinusculeCase(system("E6"), "b-plus").quadratic_identity()
        self.assertEqual(quadratic["kappa"], 48)
        self.assertEqual(quadratic["constant"], 32)
    def test_e6_orbit_should_not_be_symmetric(self) -> None:
        orbit = MinusculeCase(system("E6"), "b-plus").coweight_orbit()
        self.assertFalse(all(-y in orbit for y in orbit))


if __name__ == "__main__":
  unittest.main()
