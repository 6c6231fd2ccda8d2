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
from scipy.stats import unitary_group

from friedrichskit.classification import (
    build_U,
    build_V_from_U,
    complement_from_U,
    kernel_grams,
    mutually_adjoint_realisation,
    unitary_from_bijection,
)
from friedrichskit.coefficients import FriedrichsSpec
from friedrichskit.common.errors import NotBijectiveError, WellDefinednessError
from friedrichskit.trace import (
    BoundaryAlpha,
    TraceSubspace,
    is_selfadjoint_type,
    kernel_traces,
    ortho_complement,
)

SYSTEM = {
    "field": "complex",
    "interval": [0, 1],
    "dimension": 2,
    "A": [["1 + x", "0.5"], ["0.5", "-2"]],
    "C": [["3", {"re": "0", "im": "x"}], [{"re": "0", "im": "x"}, "2 + x"]],
}

BLOCK = {
    "field": "real",
    "interval": [0, 1],
    "dimension": 2,
    "A": [["1", "0"], ["0", "1-x"]],
    "C": [["1", "0"], ["0", "0"]],
    "degeneracy": [{"block": 1, "endpoint": "right"}],
}


class TestClassifyingMap(unittest.TestCase):

    def setUp(self):
        self.kb = kernel_traces(FriedrichsSpec.scalar("1", "1"))

    def test_kernel_grams_are_positive(self):
        gk, gkt = kernel_grams(self.kb)
        self.assertGreater(gk[0, 0].real, 0)
        self.assertGreater(gkt[0, 0].real, 0)

    def test_round_trip(self):
        for alpha in (2, -1, 0.5, 0, 1j, "inf"):
            v = BoundaryAlpha.of(alpha).subspace()
            u = build_U(v, self.kb)
            self.assertTrue(u.has_full_domain)
            self.assertLess(build_V_from_U(u).distance(v), 1e-10, alpha)
            perp = ortho_complement(v, self.kb.form)
            self.assertLess(complement_from_U(u).distance(perp), 1e-10, alpha)

    def test_norm_follows_the_cone(self):
        def u_of(alpha):
            return build_U(BoundaryAlpha.of(alpha).subspace(), self.kb)

        self.assertTrue(u_of(2).is_contraction())
        self.assertFalse(u_of(2).is_isometry())
        self.assertFalse(u_of(0.5).is_contraction())
        for alpha in (1, -1, 1j):
            self.assertTrue(u_of(alpha).is_unitary(), alpha)
            self.assertAlmostEqual(u_of(alpha).norm_indefinite, 1.0, places=8)
        self.assertLess(u_of("inf").norm_indefinite, 1.0)

    def test_kernel_meeting_subspace(self):
        with self.assertRaises(WellDefinednessError):
            build_U(BoundaryAlpha.of(math.exp(-1)).subspace(), self.kb)

    def test_zero_subspace(self):
        u = build_U(TraceSubspace.zero(2), self.kb)
        self.assertEqual(u.domain_dim, 0)
        self.assertFalse(u.has_full_domain)
        self.assertEqual(u.norm_indefinite, 0.0)
        self.assertTrue(build_V_from_U(u).is_zero)
        self.assertLess(complement_from_U(u).distance(self.kb.K.sum(self.kb.K_tilde)), 1e-12)

    def test_unitary_from_bijection(self):
        u = unitary_from_bijection(self.kb, [[3.0]])
        self.assertTrue(u.is_unitary())
        with self.assertRaises(NotBijectiveError):
            unitary_from_bijection(self.kb, [[0.0]])
        with self.assertRaises(NotBijectiveError):
            unitary_from_bijection(self.kb, np.eye(2))

    def test_mutually_adjoint_realisation(self):
        u, v = mutually_adjoint_realisation(self.kb)
        self.assertTrue(is_selfadjoint_type(v, self.kb.form))
        self.assertLess(build_V_from_U(u).distance(v), 1e-12)
        block = kernel_traces(FriedrichsSpec.from_dict(BLOCK))
        with self.assertRaises(WellDefinednessError):
            mutually_adjoint_realisation(block)

    def test_system_round_trip(self):
        kb = kernel_traces(FriedrichsSpec.from_dict(SYSTEM))
        for seed in range(5):
            b = unitary_group.rvs(2, random_state=seed)
            u, v = mutually_adjoint_realisation(kb, b)
            self.assertTrue(u.is_unitary())
            self.assertTrue(is_selfadjoint_type(v, kb.form))
            rebuilt = build_U(v, kb)
            self.assertLess(build_V_from_U(rebuilt).distance(v), 1e-9)
            assert_allclose(rebuilt.image_basis @ np.linalg.pinv(rebuilt.domain_basis),
                            u.image_basis @ np.linalg.pinv(u.domain_basis), atol=1e-8)


if __name__ == '__main__':
    unittest.main()
