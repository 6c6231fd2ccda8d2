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

from friedrichskit.coefficients import FriedrichsSpec, validate_spec
from friedrichskit.ode import accretivity_identity, green_identity
from friedrichskit.solver import BoundaryValueSolver, check_apriori
from friedrichskit.trace import alpha_condition, build_trace_form, parse_boundary_condition

X = np.linspace(0, 1, 401)

TRIALS = 50

SYSTEM = {
    "field": "complex",
    "interval": [0, 1],
    "dimension": 2,
    "A": [["1", "0"], ["0", "-1"]],
    "C": [["1", {"re": "0", "im": "1"}], [{"re": "0", "im": "1"}, "2"]],
}


class TestBoundaryValueProblems(unittest.TestCase):

    def setUp(self):
        self.spec = FriedrichsSpec.scalar("1", "1")
        self.solver = BoundaryValueSolver()

    def test_manufactured_solutions(self):
        # (α, f = u′ + u, u)
        cases = [
            ("inf", "1", lambda x: 1 - np.exp(-x)),
            ("inf", "cos(x) + sin(x)", np.sin),
            (2, "2 + x", lambda x: 1 + x),
            (-1, "pi*cos(pi*x) + sin(pi*x)", lambda x: np.sin(np.pi * x)),
        ]
        for alpha, f, exact in cases:
            solution = self.solver.solve(self.spec, alpha_condition(alpha), [f])
            error = np.max(np.abs(solution.u.evaluate(X)[:, 0] - exact(X)))
            self.assertLessEqual(error, 1e-7, f)

    def test_apriori_bounds(self):
        for alpha in (2, -1, "inf"):
            report = check_apriori(self.spec, alpha_condition(alpha), trials=TRIALS, seed=17)
            self.assertEqual(len(report.trials), TRIALS)
            self.assertTrue(report.passed, (alpha, report.worst_graph_ratio,
                                            report.worst_lower_ratio))

    def test_identities(self):
        parts = validate_spec(self.spec)
        bc = alpha_condition(2)
        u = self.solver.solve(self.spec, bc, ["2 + x"]).u
        v = self.solver.adjoint_solve(self.spec, bc, ["exp(x)"]).u
        self.assertLessEqual(green_identity(self.spec, u, v).residual, 1e-7)
        self.assertLessEqual(accretivity_identity(self.spec, parts, u).residual, 1e-7)
        report = self.solver.duality_check(self.spec, bc, ["2 + x"], ["exp(x)"])
        self.assertTrue(report.passed)

    def test_complex_system(self):
        spec = FriedrichsSpec.from_dict(SYSTEM)
        # u₁(a) = 0 and u₂(b) = u₁(b)
        bc = parse_boundary_condition(
            {"kind": "matrices", "Ma": [[1, 0], [0, 0]], "Mb": [[0, 0], [1, -1]]},
            build_trace_form(spec))
        solution = self.solver.solve(spec, bc, ["1", "x"])
        self.assertLess(solution.residual_l2, 1e-6)
        self.assertLess(solution.trace_residual, 1e-8)
        report = check_apriori(spec, bc, trials=10, seed=3)
        self.assertTrue(report.passed)


if __name__ == '__main__':
    unittest.main()
