#!/usr/bin/env python3

import unittest

from fractions import Fraction

from megatech.minuscule import *

def system(text: str) -> RootSystem:
    return RootSystem.build(RootSystemLabel.parse(text))

class TestOrbitPowerSum(unittest.TestCase):
    def setUp(self) -> None:
        self.__b3 = system("B3")
        self.__orbit = self.__b3.weyl_group().orbit(Vector.basis(3, 0)).elements()
    def test_is_invariant_should_accept_orbits(self) -> None:
        self.assertTrue(OrbitPowerSum(self.__orbit, 4).is_invariant(self.__b3.weyl_group()))
        self.assertFalse(OrbitPowerSum([ Vector.basis(3, 0) ], 4).is_invariant(self.__b3.weyl_group()))
    def test_expand_should_match_evaluation(self) -> None:
        p4 = OrbitPowerSum(self.__orbit, 4)
        point = Vector([ 1, "1/2", -3 ])
        self.assertEqual(p4.expand().evaluate(point), p4.evaluate(point))
        self.assertEqual(p4.expand().gradient(point), p4.gradient(point))
        self.assertEqual(p4.label(), "p4")
    def test_odd_power_sums_of_symmetric_orbits_should_vanish(self) -> None:
        self.assertTrue(OrbitPowerSum(self.__orbit, 3).expand().is_zero())

class TestOrbitProduct(unittest.TestCase):
    def setUp(self) -> None:
        self.__d = OrbitProduct([ Vector.basis(3, i) for i in range(3) ])
    def test_init_should_fail_for_empty_sets(self) -> None:
        with self.assertRaises(ValueError):
            OrbitProduct([ ])
    def test_is_invariant_should_allow_even_sign_changes(self) -> None:
        self.assertTrue(self.__d.is_invariant(system("D3").weyl_group()))
        self.assertFalse(self.__d.is_invariant(system("B3").weyl_group()))
    def test_evaluate_should_multiply_the_forms(self) -> None:
        point = Vector([ 1, 2, 3 ])
        self.assertEqual(self.__d.degree(), 3)
        self.assertEqual(self.__d.evaluate(point), 6)
        self.assertEqual(self.__d.gradient(point), Vector([ 6, 3, 2 ]))
        self.assertEqual(self.__d.expand().gradient(point), self.__d.gradient(point))

class TestJacobianRank(unittest.TestCase):
    def test_jacobian_rank_should_fail_without_points_or_a_dimension(self) -> None:
        with self.assertRaises(ValueError):
            jacobian_rank([ Polynomial.variable(2, 0) ])
    def test_jacobian_rank_should_detect_independence(self) -> None:
        orbit = system("B2").weyl_group().orbit(Vector.basis(2, 0)).elements()
        p2 = OrbitPowerSum(orbit, 2)
        p4 = OrbitPowerSum(orbit, 4)
        point = [ Vector([ 1, 2 ]) ]
        self.assertEqual(jacobian_rank([ p2, p4 ], point), 2)
        self.assertEqual(jacobian_rank([ p2, p2 ], point), 1)
        self.assertEqual(jacobian_rank([ ]), 0)
    def test_jacobian_rank_should_draw_points_off_the_reflecting_hyperplanes(self) -> None:
        orbit = system("B2").weyl_group().orbit(Vector.basis(2, 0)).elements()
        functions = [ OrbitPowerSum(orbit, 2), OrbitPowerSum(orbit, 4) ]
        self.assertEqual(jacobian_rank(functions, [ Vector([ 2, -2 ]), Vector([ 0, 3 ]) ]), 1)
        for seed in range(50):
            self.assertEqual(jacobian_rank(functions, dimension=2, seed=seed, attempts=1), 2)
            self.assertEqual(jacobian_rank(functions, dimension=2, seed=seed, attempts=1, magnitude=1), 2)

class TestHilbertSpec(unittest.TestCase):
    def test_init_should_fail_for_weird_degrees(self) -> None:
        with self.assertRaises(ValueError):
            HilbertSpec([ 0, 2 ])
        with self.assertRaises(ValueError):
            HilbertSpec([ 2 ], trivial=-1)
    def test_classify_should_name_the_components(self) -> None:
        self.assertEqual(HilbertSpec.classify(system("A3").cartan_matrix()), [ ("A3", (2, 3, 4)) ])
        self.assertEqual(HilbertSpec.classify(system("B3").cartan_matrix()), [ ("B3", (2, 4, 6)) ])
        self.assertEqual(HilbertSpec.classify(system("C3").cartan_matrix()), [ ("B3", (2, 4, 6)) ])
        self.assertEqual(HilbertSpec.classify(system("D4").cartan_matrix()), [ ("D4", (2, 4, 4, 6)) ])
        self.assertEqual(HilbertSpec.classify(system("E6").cartan_matrix()), [ ("E6", (2, 5, 6, 8, 9, 12)) ])
        self.assertEqual(HilbertSpec.classify(system("E7").cartan_matrix()),
                         [ ("E7", (2, 6, 8, 10, 12, 14, 18)) ])
        self.assertEqual(HilbertSpec.classify([ [ 2, 0 ], [ 0, 2 ] ]), [ ("A1", (2,)), ("A1", (2,)) ])
    def test_classify_should_fail_for_cycles(self) -> None:
        with self.assertRaises(ValueError):
            HilbertSpec.classify([ [ 2, -1, -1 ], [ -1, 2, -1 ], [ -1, -1, 2 ] ])
    def test_from_simple_roots_should_count_trivial_directions(self) -> None:
        a3 = system("A3")
        spec = HilbertSpec.from_simple_roots(a3.simple_roots(), a3.ambient_dimension())
        self.assertEqual(spec.trivial(), 1)
        self.assertEqual(spec.order(), 24)
        self.assertEqual(spec.generator_degrees(), (1, 2, 3, 4))
    def test_order_should_match_the_weyl_order(self) -> None:
        for text in ("B4", "D5", "E6", "E7"):
            s = system(text)
            self.assertEqual(HilbertSpec.from_simple_roots(s.simple_roots(), s.ambient_dimension()).order(),
                             s.weyl_order())
    def test_series_should_expand_the_generating_function(self) -> None:
        spec = HilbertSpec([ 2 ], trivial=2)
        self.assertEqual(spec.series(4), [ 1, 2, 4, 6, 9 ])
        self.assertEqual(spec.cumulative(4), [ 1, 3, 7, 13, 22 ])
        self.assertEqual(spec.dimension(3), 6)
        self.assertEqual(spec.dimension(-1), 0)

class TestGeneratorSet(unittest.TestCase):
    def setUp(self) -> None:
        self.__x1 = Polynomial.variable(2, 0)
        self.__x2 = Polynomial.variable(2, 1)
    def test_add_should_fail_for_constants(self) -> None:
        with self.assertRaises(ValueError):
            GeneratorSet(2, [ ("one", Polynomial.constant(2, 1)) ])
    def test_with_translates_should_skip_repeated_generators(self) -> None:
        generators = GeneratorSet(2, [ ("x", self.__x1), ("y", self.__x2) ])
        translated = generators.with_translates(Vector([ 1, 0 ]))
        self.assertEqual(translated.labels(), [ "x", "y", "tau(x)" ])
        self.assertEqual(translated.polynomials()[2], self.__x1 + 1)
    def test_filtered_dimensions_should_count_products(self) -> None:
        generators = GeneratorSet(2, [ ("q", self.__x1 ** 2 + self.__x2 ** 2) ])
        self.assertEqual(generators.filtered_dimensions(5), (1, 1, 2, 2, 3, 3))
    def test_filtered_dimensions_should_fail_past_the_budget(self) -> None:
        generators = GeneratorSet(2, [ ("x", self.__x1), ("y", self.__x2) ])
        with self.assertRaises(OverflowError):
            generators.filtered_dimensions(6, budget=10)
    def test_saturated_dimensions_should_adopt_low_degree_elements(self) -> None:
        generators = GeneratorSet(2, [ ("x", self.__x1, 2) ])
        self.assertEqual(generators.filtered_dimensions(3), (1, 2, 2, 2))
        self.assertEqual(generators.saturated_dimensions(3), ((1, 2, 3, 4), 1))
    def test_saturated_dimensions_should_reach_the_stabilizer_invariants(self) -> None:
        case = MinusculeCase(system("A2"), "a1")
        generators = case.invariant_generators().with_translates(case.coweight())
        dimensions, adopted = generators.saturated_dimensions(4)
        self.assertGreater(adopted, 0)
        self.assertEqual(list(dimensions), case.hilbert().cumulative(4))
    def test_jacobian_rank_should_use_the_generators(self) -> None:
        generators = GeneratorSet(2, [ ("x", self.__x1), ("y", self.__x2), ("xy", self.__x1 * self.__x2) ])
        self.assertEqual(generators.jacobian_rank(), 2)


if __name__ == "__main__":
  unittest.main()
