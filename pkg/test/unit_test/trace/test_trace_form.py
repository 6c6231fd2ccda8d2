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

from friedrichskit.coefficients import FriedrichsSpec
from friedrichskit.common import Endpoint
from friedrichskit.trace import (
    Cone,
    TraceSubspace,
    build_trace_form,
    cone_test,
    full_index,
    is_selfadjoint_type,
    is_symmetric,
    ortho_complement,
)

BLOCK = {
    "field": "real",
    "interval": [0, 1],
    "dimension": 2,
    "A": [["1", "0"], ["0", "1-x"]],
    "C": [["1", "0"], ["0", "0"]],
    "degeneracy": [{"block": 1, "endpoint": "right"}],
}


def _line(*vector):
    return TraceSubspace.span(np.array(vector, dtype=complex).reshape(-1, 1))


class TestTraceForm(unittest.TestCase):

    def setUp(self):
        self.qf = build_trace_form(FriedrichsSpec.scalar("1", "1"))

    def test_scalar_form(self):
        assert_allclose(self.qf.Q, np.diag([-1, 1]))
        self.assertEqual(self.qf.dimension, 2)
        self.assertEqual(self.qf.signature(1e-8), (1, 1, 0))
        self.assertEqual(self.qf.pairing(np.array([1, 2]), np.array([1, 1j])), -1 - 2j)

    def test_variable_coefficient(self):
        qf = build_trace_form(FriedrichsSpec.scalar("1 + x", "1", (0, 2)))
        assert_allclose(qf.Q, np.diag([-1, 3]))
        self.assertAlmostEqual(qf.norm, 3.0)

    def test_degenerate_coordinates_are_deleted(self):
        qf = build_trace_form(FriedrichsSpec.from_dict(BLOCK))
        self.assertEqual(qf.dimension, 3)
        self.assertEqual(qf.full_dimension, 4)
        self.assertEqual(qf.coordinates, ((Endpoint.LEFT, 0), (Endpoint.LEFT, 1),
                                          (Endpoint.RIGHT, 0)))
        assert_allclose(qf.Q, np.diag([-1, -1, 1]))
        assert_allclose(qf.restrict(np.array([1, 2, 3, 4])), [1, 2, 3])
        assert_allclose(qf.embed(np.array([1, 2, 3])), [1, 2, 3, 0])
        self.assertEqual(full_index(2, (Endpoint.RIGHT, 1)), 3)
        self.assertEqual(qf.coordinate_index(Endpoint.RIGHT, 0), 2)

    def test_cone(self):
        self.assertEqual(cone_test(_line(1, 2), self.qf), Cone.NONNEG)
        self.assertEqual(cone_test(_line(1, 0.5), self.qf), Cone.NONPOS)
        self.assertEqual(cone_test(_line(1, 1), self.qf), Cone.NEUTRAL)
        self.assertEqual(cone_test(TraceSubspace.full(2), self.qf), Cone.NEITHER)
        self.assertEqual(cone_test(TraceSubspace.zero(2), self.qf), Cone.NEUTRAL)
        self.assertTrue(Cone.NEUTRAL.is_nonneg() and Cone.NEUTRAL.is_nonpos())

    def test_ortho_complement(self):
        # the complement of u(b) = αu(a) is u(b) = u(a)/ᾱ
        perp = ortho_complement(_line(1, 2), self.qf)
        self.assertLess(perp.distance(_line(1, 0.5)), 1e-12)
        perp = ortho_complement(_line(1, 1j), self.qf)
        self.assertLess(perp.distance(_line(1, 1j)), 1e-12)
        perp = ortho_complement(_line(1, 0), self.qf)
        self.assertLess(perp.distance(_line(0, 1)), 1e-12)
        self.assertEqual(ortho_complement(TraceSubspace.zero(2), self.qf).dim, 2)
        self.assertEqual(ortho_complement(TraceSubspace.full(2), self.qf).dim, 0)

    def test_symmetric_and_selfadjoint_type(self):
        for alpha in (1, -1, 1j):
            self.assertTrue(is_symmetric(_line(1, alpha), self.qf))
            self.assertTrue(is_selfadjoint_type(_line(1, alpha), self.qf))
        self.assertFalse(is_symmetric(_line(1, 2), self.qf))
        self.assertTrue(is_symmetric(TraceSubspace.zero(2), self.qf))
        self.assertFalse(is_selfadjoint_type(TraceSubspace.zero(2), self.qf))


class TestTraceSubspace(unittest.TestCase):

    def test_span_and_constraints(self):
        v = TraceSubspace.span_vectors([[1, 0, 1], [2, 0, 2]], 3)
        self.assertEqual(v.dim, 1)
        self.assertTrue(v.contains(np.array([3, 0, 3])))
        self.assertFalse(v.contains(np.array([1, 0, 0])))
        w = TraceSubspace.constraints(np.array([[1, 0, -1]]))
        self.assertEqual(w.dim, 2)
        self.assertTrue(w.contains_subspace(v))
        self.assertEqual(TraceSubspace.span_vectors([], 3).dim, 0)
        with self.assertRaises(ValueError):
            TraceSubspace.span_vectors([[1, 0]], 3)

    def test_algebra(self):
        e = np.eye(3)
        a = TraceSubspace.span(e[:, :2])
        b = TraceSubspace.span(e[:, 1:])
        self.assertEqual(a.intersection(b).dim, 1)
        self.assertEqual(a.sum(b).dim, 3)
        assert_allclose(a.projector(), np.diag([1, 1, 0]), atol=1e-14)
        self.assertAlmostEqual(a.residual(np.array([0, 0, 2])), 2.0)
        self.assertAlmostEqual(a.distance(a), 0.0)


if __name__ == '__main__':
    unittest.main()
