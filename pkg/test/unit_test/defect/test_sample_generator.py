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

from friedrichskit.coefficients import FriedrichsSpec, validate_spec
from friedrichskit.common import ScalarField
from friedrichskit.defect import random_bounded_parts


class TestSampleGenerator(unittest.TestCase):

    def test_samples_are_admissible(self):
        for spec in (FriedrichsSpec.scalar("1 + x", "1"),
                     FriedrichsSpec.scalar("2", "1", (0, 3), ScalarField.COMPLEX)):
            samples = random_bounded_parts(spec, 6, seed=3)
            self.assertEqual(len(samples), 6)
            for c in samples:
                self.assertEqual(c.interval, spec.interval)
                parts = validate_spec(spec.with_c(c))
                self.assertGreaterEqual(parts.mu, 0.1 - 1e-9)

    def test_real_field_gives_real_samples(self):
        spec = FriedrichsSpec.scalar("1", "1")
        for c in random_bounded_parts(spec, 4, seed=0):
            self.assertFalse(c.has_imaginary_part())

    def test_seeded(self):
        spec = FriedrichsSpec.scalar("1", "1")
        x = np.linspace(0, 1, 11)
        first = [c.evaluate(x) for c in random_bounded_parts(spec, 3, seed=11)]
        second = [c.evaluate(x) for c in random_bounded_parts(spec, 3, seed=11)]
        other = random_bounded_parts(spec, 1, seed=12)[0].evaluate(x)
        for p, q in zip(first, second):
            assert_allclose(p, q)
        self.assertFalse(np.allclose(first[0], other))

    def test_margin(self):
        spec = FriedrichsSpec.scalar("1", "1")
        for c in random_bounded_parts(spec, 3, seed=5, margin=2.0):
            self.assertGreaterEqual(validate_spec(spec.with_c(c)).mu, 2.0 - 1e-9)


if __name__ == '__main__':
    unittest.main()
