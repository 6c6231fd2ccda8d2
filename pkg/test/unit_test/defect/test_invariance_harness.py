# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
import json
import unittest

import numpy as np

from friedrichskit.coefficients import CoefficientField, FriedrichsSpec
from friedrichskit.common.errors import IntervalMismatchError
from friedrichskit.defect import (
    InvarianceHarness,
    Verdict,
    boundary_condition_robustness,
    convex_path,
    invariance_harness,
    random_bounded_parts,
)
from friedrichskit.trace import BoundaryAlpha


class TestInvarianceHarness(unittest.TestCase):

    def setUp(self):
        self.spec = FriedrichsSpec.scalar("1", "1")
        self.samples = [self.spec.C,
                        CoefficientField.parse("1 + x", self.spec.interval),
                        CoefficientField.parse("2 + sin(x)", self.spec.interval)]

    def test_scalar_indices_are_invariant(self):
        samples = self.samples + random_bounded_parts(self.spec, 4, seed=1)
        report = invariance_harness(self.spec, samples)
        self.assertEqual(report.verdict, Verdict.PASS)
        self.assertEqual(report.indices, (1, 1))
        self.assertEqual(len(report.rows), 7)
        self.assertEqual([r.index for r in report.rows], list(range(7)))
        data = report.to_dict()
        self.assertEqual(data["verdict"], "PASS")
        self.assertEqual(data["indices"], [1, 1])
        label = json.loads(data["rows"][1]["C"])
        self.assertEqual(len(label), 1)
        self.assertIn("x", label[0][0])

    def test_invalid_samples_are_excluded(self):
        other = CoefficientField.parse("1", (0.0, 2.0))
        samples = self.samples + [CoefficientField.parse("-5", self.spec.interval), other]
        report = InvarianceHarness(max_workers=1).run(self.spec, samples)
        self.assertEqual(report.verdict, Verdict.PASS)
        self.assertEqual(len(report.included), 3)
        excluded = [r for r in report.rows if r.excluded]
        self.assertEqual([r.index for r in excluded], [3, 4])
        self.assertTrue(all(r.error for r in excluded))
        self.assertIsNone(excluded[0].d_plus)

    def test_no_valid_samples_fails(self):
        report = invariance_harness(self.spec, [CoefficientField.parse("-1", (0.0, 1.0))])
        self.assertEqual(report.verdict, Verdict.FAIL)
        self.assertIsNone(report.to_dict()["indices"])

    def test_convex_path(self):
        path = convex_path(self.samples[1], self.samples[2])
        self.assertEqual(len(path), 5)
        x = np.linspace(0, 1, 7)
        np.testing.assert_allclose(path[0].evaluate(x), self.samples[2].evaluate(x))
        np.testing.assert_allclose(path[-1].evaluate(x), self.samples[1].evaluate(x))
        self.assertEqual(invariance_harness(self.spec, path).indices, (1, 1))
        with self.assertRaises(IntervalMismatchError):
            convex_path(self.samples[1], CoefficientField.parse("1", (0.0, 2.0)))

    def test_robustness(self):
        samples = self.samples + random_bounded_parts(self.spec, 3, seed=2)
        report = boundary_condition_robustness(self.spec, BoundaryAlpha.of(2).subspace(),
                                               samples)
        self.assertTrue(report.all_bijective)
        self.assertTrue(all(r.signed_boundary_map for r in report.rows))
        self.assertEqual(len(report.to_dict()["rows"]), 6)


if __name__ == '__main__':
    unittest.main()
