# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
import cmath
import math
import time
import unittest

from friedrichskit.classification import (
    Classifier,
    SymmetricSystem,
    count_from_indices,
    count_mutually_adjoint,
    sweep_alpha,
    symmetric_adapter,
)
from friedrichskit.coefficients import CoefficientField, FriedrichsSpec
from friedrichskit.common import ScalarField
from friedrichskit.trace import BoundaryAlpha, kernel_traces, ortho_complement

GRID = [-2, -1, -0.5, 0, 0.3, math.exp(-1), 0.9, 1, 2, "inf"]


def _alphas(values):
    return {BoundaryAlpha.of(v) for v in values}


class TestScalarExample(unittest.TestCase):
    """
    The scalar operator u′ + u on (0, 1) with the conditions u(b) = αu(a).
    """

    def setUp(self):
        self.spec = FriedrichsSpec.scalar("1", "1")

    def test_sweep(self):
        start = time.monotonic()
        report = sweep_alpha(self.spec, GRID, include_alpha_beta=False)
        self.assertLess(time.monotonic() - start, 10.0)
        self.assertLess(abs(report.alpha_beta - math.exp(-1)), 1e-8)
        self.assertEqual(_alphas(report.non_bijective()), _alphas([math.exp(-1)]))
        self.assertEqual(set(report.alphas_where("signed_boundary_map")),
                         _alphas([-2, -1, 1, 2, "inf"]))
        self.assertEqual(set(report.alphas_where("selfadjoint_type")), _alphas([-1, 1]))
        self.assertEqual(set(report.alphas_where("maximal_nonnegative")),
                         _alphas([-2, -1, 1, 2, "inf"]))

    def test_adjoint_pairing(self):
        kb = kernel_traces(self.spec)
        for value in GRID:
            alpha = BoundaryAlpha.of(value)
            perp = ortho_complement(alpha.subspace(), kb.form)
            self.assertLessEqual(perp.distance(alpha.adjoint().subspace()), 1e-8, value)
        zero, infinity = BoundaryAlpha.of(0), BoundaryAlpha.of("inf")
        self.assertLessEqual(ortho_complement(zero.subspace(), kb.form)
                             .distance(infinity.subspace()), 1e-8)
        self.assertLessEqual(ortho_complement(infinity.subspace(), kb.form)
                             .distance(zero.subspace()), 1e-8)

    def test_counts(self):
        table = [((1, 1), ScalarField.REAL, "2"),
                 ((1, 1), ScalarField.COMPLEX, "infinite"),
                 ((0, 0), ScalarField.REAL, "1"),
                 ((2, 1), ScalarField.REAL, "0"),
                 ((3, 3), ScalarField.REAL, "infinite")]
        for (d_plus, d_minus), field, expected in table:
            self.assertEqual(str(count_from_indices(d_plus, d_minus, field)), expected)
        self.assertEqual(str(count_mutually_adjoint(kernel_traces(self.spec))), "2")

    def test_real_selfadjoint_realisations(self):
        # the two real realisations with V = V^[⊥] are α = ±1
        report = sweep_alpha(self.spec, [-1, 1, 2], include_alpha_beta=False)
        self.assertEqual(len(report.alphas_where("selfadjoint_type")), 2)


class TestMomentumOperator(unittest.TestCase):
    """
    The joint pair of the symmetric operator −i d/dx with S₁ = 0 and S₂ = 1.
    """

    def test_selfadjoint_realisations(self):
        interval = (0.0, 1.0)
        spec = symmetric_adapter(SymmetricSystem.derivative_operator(1, interval),
                                 CoefficientField.zeros(1, interval),
                                 CoefficientField.identity(1, interval))
        kb = kernel_traces(spec)
        classifier = Classifier(spec.tolerances)
        unit_circle = [1, -1, 1j, -1j, cmath.exp(0.25j * cmath.pi)]
        for alpha in unit_circle + [2, 0.5, 0]:
            report = classifier.classify(BoundaryAlpha.of(alpha).subspace(), kb)
            self.assertEqual(report.selfadjoint_type, alpha in unit_circle, alpha)


if __name__ == '__main__':
    unittest.main()
