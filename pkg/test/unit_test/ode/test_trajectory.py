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

from friedrichskit.expression import parse_expression
from friedrichskit.ode import ExpressionTrajectory, SampledTrajectory


class TestTrajectory(unittest.TestCase):

    def test_sampled_trajectory(self):
        x = np.linspace(0, 1, 33)
        values = np.stack([np.sin(x), 1j * x ** 2], axis=1)
        derivatives = np.stack([np.cos(x), 2j * x], axis=1)
        u = SampledTrajectory(x, values, derivatives)
        self.assertEqual(u.n, 2)
        self.assertEqual(u.interval, (0.0, 1.0))
        assert_allclose(u.evaluate(0.3), [np.sin(0.3), 0.09j], atol=1e-7)
        assert_allclose(u.derivative(np.array([0.3]))[0], [np.cos(0.3), 0.6j], atol=1e-5)
        assert_allclose(u.trace(), [0, 0, np.sin(1), 1j])

    def test_expression_trajectory(self):
        u = ExpressionTrajectory([parse_expression("x"), parse_expression("exp(x)")],
                                 (0.0, 2.0), node_count=5)
        assert_allclose(u.nodes, [0, 0.5, 1, 1.5, 2])
        assert_allclose(u.evaluate(1.0), [1, np.e])
        assert_allclose(u.derivative(np.array([0.0, 1.0])), [[1, 1], [1, np.e]])
        assert_allclose(u.start_value(), [0, 1])

    def test_to_records(self):
        u = ExpressionTrajectory([parse_expression("1 + i*x")], (0.0, 1.0))
        records = u.to_records(np.array([0.0, 1.0]))
        self.assertEqual(records, [
            {"x": 0.0, "Re u1": 1.0, "Im u1": 0.0},
            {"x": 1.0, "Re u1": 1.0, "Im u1": 1.0},
        ])


if __name__ == '__main__':
    unittest.main()
