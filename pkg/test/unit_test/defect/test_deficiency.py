# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
import unittest

from friedrichskit.coefficients import FriedrichsSpec
from friedrichskit.defect import deficiency_indices

BLOCK = {
    "field": "real",
    "interval": [0, 1],
    "dimension": 2,
    "A": [["1", "0"], ["0", "1-x"]],
    "C": [["1", "0"], ["0", "0"]],
    "degeneracy": [{"block": 1, "endpoint": "right"}],
}


class TestDeficiency(unittest.TestCase):

    def test_regular(self):
        indices = deficiency_indices(FriedrichsSpec.scalar("1 + x", "2"))
        self.assertEqual(indices.as_tuple(), (1, 1))
        self.assertEqual(indices.effective_dimension, 2)
        self.assertEqual(indices.singular_blocks, ())

    def test_degenerate_block(self):
        indices = deficiency_indices(FriedrichsSpec.from_dict(BLOCK))
        self.assertEqual(indices.as_tuple(), (2, 1))
        self.assertEqual(indices.effective_dimension, 3)
        data = indices.to_dict()
        self.assertEqual(len(data["singular_blocks"]), 1)
        self.assertEqual(data["singular_blocks"][0]["endpoint"], "right")


if __name__ == '__main__':
    unittest.main()
