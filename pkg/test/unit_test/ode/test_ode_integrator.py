# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
import math
import unittest

import numpy as np
from numpy.testing import assert_allclose
from scipy.linalg import expm

from friedrichskit.coefficients import FriedrichsSpec
from friedrichskit.common import OperatorVariant, ToleranceConfig
from friedrichskit.common.errors import SingularAError
from friedrichskit.expression import parse_expression
from friedrichskit.ode import OdeIntegrator, fundamental_matrix, solve_initial_value


class TestOdeIntegrator(unittest.TestCase):

    def setUp(self):
        self.spec = FriedrichsSpec.scalar("1", "1")

    def test_scalar_fundamental_matrix(self):
        phi = fundamental_matrix(self.spec)
        self.assertAlmostEqual(phi.start[0, 0], 1.0)
        self.assertAlmostEqual(phi.end[0, 0].real, math.exp(-1), places=9)
        x = np.linspace(0, 1, 7)
        assert_allclose(phi.evaluate(x)[:, 0, 0], np.exp(-x), rtol=1e-8)
        assert_allclose(phi.derivative(x)[:, 0, 0], -np.exp(-x), rtol=1e-6)
        self.assertLessEqual(phi.error_estimate, ToleranceConfig().ode_verify_tol)

    def test_adjoint_fundamental_matrix(self):
        phi = fundamental_matrix(self.spec, OperatorVariant.ADJOINT_MAXIMAL)
        self.assertAlmostEqual(phi.end[0, 0].real, math.e, places=8)

    def test_anchor_at_right_end(self):
        phi = fundamental_matrix(self.spec, anchor=1.0)
        self.assertAlmostEqual(phi.end[0, 0].real, 1.0)
        self.assertAlmostEqual(phi.start[0, 0].real, math.e, places=8)
        self.assertTrue(np.all(np.diff(phi.x) > 0))

    def test_constant_system_matches_matrix_exponential(self):
        spec = FriedrichsSpec.from_dict({
            "field": "real",
            "interval": [0, 1],
            "dimension": 2,
            "A": [["1", "0"], ["0", "-1"]],
            "C": [["2", "1"], ["1", "2"]],
        })
        a = np.diag([1.0, -1.0])
        c = np.array([[2.0, 1.0], [1.0, 2.0]])
        phi = OdeIntegrator().fundamental_matrix(spec)
        for x in (0.25, 0.5, 1.0):
            assert_allclose(phi.evaluate(x), expm(-np.linalg.solve(a, c) * x),
                            rtol=1e-7, atol=1e-9)

    def test_anchored_matrices_compose(self):
        spec = FriedrichsSpec.from_dict({
            "field": "real",
            "interval": [0, 1],
            "dimension": 2,
            "A": [["2 + x", "0.3"], ["0.3", "-1"]],
            "C": [["2", "x"], ["0", "2"]],
        })
        integrator = OdeIntegrator()
        phi = integrator.fundamental_matrix(spec)
        shifted = integrator.fundamental_matrix(spec, anchor=0.4)
        assert_allclose(shifted.evaluate(0.4), np.eye(2), atol=1e-12)
        at_anchor = phi.evaluate(0.4)
        for x in (0.0, 0.1, 0.4, 0.75, 1.0):
            assert_allclose(phi.evaluate(x), shifted.evaluate(x) @ at_anchor,
                            rtol=1e-7, atol=1e-9, err_msg=str(x))

    def test_residual_shrinks_with_tolerance(self):
        spec = FriedrichsSpec.scalar("1 + x", "2")
        errors = []
        for rtol in (1e-5, 1e-8, 1e-11):
            tol = ToleranceConfig(ode_rtol=rtol, ode_verify_tol=1e-1, dense_intervals=1)
            phi = OdeIntegrator(tol).fundamental_matrix(spec)
            self.assertEqual(phi.rtol, rtol)
            errors.append(phi.error_estimate)
        self.assertLessEqual(errors[1], errors[0])
        self.assertLessEqual(errors[2], errors[1])

    def test_initial_value_with_forcing(self):
        u = solve_initial_value(self.spec, forcing=[parse_expression("1")])
        x = np.linspace(0, 1, 9)
        assert_allclose(u.evaluate(x)[:, 0], 1 - np.exp(-x), atol=1e-9)
        assert_allclose(u.derivative(x)[:, 0], np.exp(-x), atol=1e-6)
        assert_allclose(u.trace(), [0, 1 - math.exp(-1)], atol=1e-9)

    def test_initial_value_checks_sizes(self):
        with self.assertRaises(ValueError):
            solve_initial_value(self.spec, initial=[1, 2])
        with self.assertRaises(ValueError):
            solve_initial_value(self.spec, forcing=[parse_expression("1")] * 2)

    def test_cache(self):
        integrator = OdeIntegrator()
        first = integrator.fundamental_matrix(self.spec)
        self.assertIs(integrator.fundamental_matrix(self.spec), first)
        integrator.clear_cache()
        self.assertIsNot(integrator.fundamental_matrix(self.spec), first)
        uncached = OdeIntegrator(use_cache=False)
        self.assertIsNot(uncached.fundamental_matrix(self.spec),
                         uncached.fundamental_matrix(self.spec))

    def test_singular_leading_coefficient(self):
        spec = FriedrichsSpec.scalar("x", "1")
        with self.assertRaises(SingularAError):
            OdeIntegrator().fundamental_matrix(spec)


if __name__ == '__main__':
    unittest.main()
