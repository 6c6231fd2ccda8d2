# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
import unittest

from friedrichskit.common import ScalarField
from friedrichskit.expression import parse_expression
from friedrichskit.solver import RandomRhsGenerator, random_rhs


def _has_imaginary_unit(node) -> bool:
    return "i" in {token for token in node.to_text().replace("(", " ").replace(")", " ")
                   .split()}


class TestRandomRhs(unittest.TestCase):

    def test_reproducible(self):
        first = random_rhs(2, seed=9)
        second = random_rhs(2, seed=9)
        self.assertEqual(first, second)
        self.assertEqual(len(first), 2)
        self.assertNotEqual(random_rhs(2, seed=10), first)

    def test_generator_advances(self):
        generator = RandomRhsGenerator(3)
        self.assertNotEqual(generator.generate(1), generator.generate(1))

    def test_texts_parse_back(self):
        for seed in range(10):
            for component in random_rhs(1, seed, ScalarField.COMPLEX):
                self.assertEqual(parse_expression(component.to_text()), component)

    def test_complex_components(self):
        components = [random_rhs(1, seed, ScalarField.COMPLEX)[0] for seed in range(10)]
        self.assertTrue(any(_has_imaginary_unit(c) for c in components))
        real = [random_rhs(1, seed)[0] for seed in range(10)]
        self.assertFalse(any(_has_imaginary_unit(c) for c in real))

    def test_degree(self):
        with self.assertRaises(ValueError):
            RandomRhsGenerator(0, degree=7)
        constant = random_rhs(1, seed=1, degree=0)[0]
        self.assertEqual(parse_expression(constant.to_text()).evaluate(0.3),
                         constant.evaluate(0.7))


if __name__ == '__main__':
    unittest.main()
