# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
import unittest

import numpy as np
from numpy.testing import assert_allclose

from friedrichskit.coefficients import CoefficientField

INTERVAL = (0.0, 1.0)


class TestCoefficientField(unittest.TestCase):

    def test_parse_and_evaluate(self):
        field = CoefficientField.parse([["1", "x"], ["x", "1-x"]], INTERVAL)
        self.assertEqual(field.n, 2)
        assert_allclose(field.evaluate(0.25), [[1, 0.25], [0.25, 0.75]])
        values = field.evaluate(np.array([0.0, 0.5, 1.0]))
        self.assertEqual(values.shape, (3, 2, 2))
        assert_allclose(values[:, 1, 1], [1, 0.5, 0])

    def test_complex_entries(self):
        field = CoefficientField.from_json([[{"re": "1", "im": "x"}]], 1, INTERVAL, "C")
        self.assertTrue(field.has_imaginary_part())
        self.assertEqual(field.evaluate(0.5)[0, 0], 1 + 0.5j)
        assert_allclose(field.conj_transpose().evaluate(0.5), [[1 - 0.5j]])
        assert_allclose(field.times_i().evaluate(0.5), [[-0.5 + 1j]])
        self.assertEqual(field.to_json(), [[{"re": "1.0", "im": "x"}]])

    def test_numbers_are_accepted(self):
        field = CoefficientField.from_json([[2, 0.5], [0.5, 1]], 2, INTERVAL, "A")
        assert_allclose(field.evaluate(0.0), [[2, 0.5], [0.5, 1]])

    def test_arithmetic(self):
        a = CoefficientField.parse("x^2", INTERVAL)
        b = CoefficientField.parse("1", INTERVAL)
        x = np.array([0.0, 0.5, 1.0])
        assert_allclose(a.derivative().evaluate(x)[:, 0, 0], 2 * x)
        assert_allclose((a + b).evaluate(x)[:, 0, 0], x ** 2 + 1)
        assert_allclose((a - b).evaluate(x)[:, 0, 0], x ** 2 - 1)
        assert_allclose((-a).evaluate(x)[:, 0, 0], -x ** 2)
        assert_allclose(a.scale(3).evaluate(x)[:, 0, 0], 3 * x ** 2)

    def test_submatrix_and_block(self):
        field = CoefficientField.constant([[1, 2, 3], [4, 5, 6], [7, 8, 9]], INTERVAL)
        assert_allclose(field.submatrix([0, 2]).evaluate(0.0), [[1, 3], [7, 9]])
        assert_allclose(field.block(1).evaluate(0.0), [[5]])

    def test_constant_identity_zeros(self):
        assert_allclose(CoefficientField.identity(2, INTERVAL).evaluate(0.3), np.eye(2))
        assert_allclose(CoefficientField.zeros(2, INTERVAL).evaluate(0.3), np.zeros((2, 2)))
        assert_allclose(CoefficientField.constant([[1j]], INTERVAL).evaluate(0.3), [[1j]])

    def test_hashable_value_semantics(self):
        a = CoefficientField.parse("1+x", INTERVAL)
        b = CoefficientField.parse("1+x", INTERVAL)
        self.assertEqual(a, b)
        self.assertEqual(hash(a), hash(b))

    def test_malformed(self):
        with self.assertRaises(ValueError):
            CoefficientField.from_json([["1"]], 2, INTERVAL, "A")
        with self.assertRaises(ValueError):
            CoefficientField.from_json([["1", "0"]], 2, INTERVAL, "A")
        with self.assertRaises(ValueError):
            CoefficientField.from_json([[{"re": "1", "j": "2"}]], 1, INTERVAL, "A")
        with self.assertRaises(ValueError):
            CoefficientField.from_json([[True]], 1, INTERVAL, "A")
        with self.assertRaises(ValueError):
            CoefficientField.parse("1", (1.0, 0.0))
        with self.assertRaises(ValueError):
            CoefficientField.parse("1", INTERVAL) + CoefficientField.parse("1", (0.0, 2.0))


if __name__ == '__main__':
    unittest.main()
