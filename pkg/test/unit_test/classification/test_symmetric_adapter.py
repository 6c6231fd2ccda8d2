# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
import cmath
import unittest

from friedrichskit.classification import (
    Classifier,
    MutualAdjointCount,
    SymmetricSystem,
    count_mutually_adjoint,
    symmetric_adapter,
)
from friedrichskit.coefficients import CoefficientField
from friedrichskit.common import ScalarField
from friedrichskit.common.errors import (
    NotHermitianError,
    NotStrictlyPositiveError,
    SpecValidationError,
)
from friedrichskit.trace import BoundaryAlpha, kernel_traces

INTERVAL = (0.0, 1.0)


class TestSymmetricAdapter(unittest.TestCase):

    def setUp(self):
        self.system = SymmetricSystem.derivative_operator(1, INTERVAL)

    def test_momentum_operator(self):
        for s1 in ("0", "1"):
            spec = symmetric_adapter(self.system,
                                     CoefficientField.parse(s1, INTERVAL),
                                     CoefficientField.identity(1, INTERVAL))
            self.assertEqual(spec.field, ScalarField.COMPLEX)
            kb = kernel_traces(spec)
            self.assertEqual(count_mutually_adjoint(kb), MutualAdjointCount.INFINITE)
            classifier = Classifier(spec.tolerances)
            for alpha in (1, -1, 1j, -1j, cmath.exp(0.25j * cmath.pi)):
                report = classifier.classify(BoundaryAlpha.of(alpha).subspace(), kb)
                self.assertTrue(report.selfadjoint_type, (s1, alpha))
                self.assertTrue(report.bijective, (s1, alpha))
            for alpha in (2, 0.5, 0):
                report = classifier.classify(BoundaryAlpha.of(alpha).subspace(), kb)
                self.assertFalse(report.selfadjoint_type, (s1, alpha))

    def test_not_hermitian(self):
        with self.assertRaises(NotHermitianError):
            symmetric_adapter(self.system,
                              CoefficientField.constant(1j, INTERVAL),
                              CoefficientField.identity(1, INTERVAL))

    def test_not_positive(self):
        with self.assertRaises(NotStrictlyPositiveError):
            symmetric_adapter(self.system,
                              CoefficientField.zeros(1, INTERVAL),
                              CoefficientField.constant(-1, INTERVAL))

    def test_not_symmetric(self):
        system = SymmetricSystem(M=CoefficientField.identity(1, INTERVAL),
                                 B=CoefficientField.constant(1j, INTERVAL))
        with self.assertRaises(SpecValidationError):
            symmetric_adapter(system,
                              CoefficientField.zeros(1, INTERVAL),
                              CoefficientField.identity(1, INTERVAL))

    def test_mismatched_fields(self):
        with self.assertRaises(SpecValidationError):
            symmetric_adapter(self.system,
                              CoefficientField.zeros(2, INTERVAL),
                              CoefficientField.identity(1, INTERVAL))


if __name__ == '__main__':
    unittest.main()
