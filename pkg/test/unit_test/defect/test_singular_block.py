# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
import unittest

from friedrichskit.coefficients import CoefficientField, FriedrichsSpec
from friedrichskit.common import Endpoint
from friedrichskit.common.errors import NotScalarError, UndecidableIntegrabilityError
from friedrichskit.defect import analyze_singular_block, analyze_spec_block

INTERVAL = (0.0, 1.0)

BLOCK = {
    "field": "real",
    "interval": [0, 1],
    "dimension": 2,
    "A": [["1", "0"], ["0", "1-x"]],
    "C": [["1", "0"], ["0", "0"]],
    "degeneracy": [{"block": 1, "endpoint": "right"}],
}


def _field(text):
    return CoefficientField.parse(text, INTERVAL)


class TestSingularBlock(unittest.TestCase):

    def test_right_endpoint(self):
        # ker T₁ holds the constants, ker T̃₁ holds 1/(1 − x)
        report = analyze_singular_block(_field("1 - x"), _field("0"), Endpoint.RIGHT)
        self.assertTrue(report.kernel_in_l2)
        self.assertFalse(report.adjoint_kernel_in_l2)
        self.assertAlmostEqual(report.maximal.growth_exponent, 0.0, places=4)
        self.assertAlmostEqual(report.adjoint.growth_exponent, -1.0, places=4)
        for ratio in report.maximal.ratios[-5:]:
            self.assertAlmostEqual(ratio, 0.5, places=4)

    def test_left_endpoint_power_laws(self):
        # ker T₁ holds x^-c and ker T̃₁ holds x^(c-1)
        cases = [("1", False, True), ("0.75", False, True), ("0.25", True, False),
                 ("0.5", False, False)]
        for c, kernel, adjoint in cases:
            report = analyze_singular_block(_field("x"), _field(c), Endpoint.LEFT)
            self.assertEqual(report.kernel_in_l2, kernel, c)
            self.assertEqual(report.adjoint_kernel_in_l2, adjoint, c)
            self.assertAlmostEqual(report.maximal.growth_exponent, -float(c), places=3)

    def test_undecidable(self):
        # collar mass ratios of 2^-0.03 sit between the two thresholds
        with self.assertRaises(UndecidableIntegrabilityError):
            analyze_singular_block(_field("x"), _field("0.485"), Endpoint.LEFT)

    def test_report(self):
        spec = FriedrichsSpec.from_dict(BLOCK)
        report = analyze_spec_block(spec, 1)
        data = report.to_dict()
        self.assertEqual(data["block"], 1)
        self.assertEqual(data["endpoint"], "right")
        self.assertTrue(data["T1"]["in_l2"])
        self.assertFalse(data["T1~"]["in_l2"])
        self.assertEqual(data["T1"]["levels"], len(data["T1"]["ratios"]) + 1)
        with self.assertRaises(ValueError):
            analyze_spec_block(spec, 0)

    def test_requires_scalar_block(self):
        with self.assertRaises(NotScalarError):
            analyze_singular_block(CoefficientField.identity(2, INTERVAL),
                                   CoefficientField.zeros(2, INTERVAL), Endpoint.LEFT)


if __name__ == '__main__':
    unittest.main()
