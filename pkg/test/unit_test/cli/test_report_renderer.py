# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
import json
import math
import unittest

import numpy as np

from friedrichskit.cli import OutputFormat, ReportRenderer, to_plain


class TestReportRenderer(unittest.TestCase):

    def test_to_plain(self):
        self.assertEqual(to_plain(1 + 2j), {"re": 1.0, "im": 2.0})
        self.assertEqual(to_plain(np.complex128(3)), 3.0)
        self.assertIsNone(to_plain(math.nan))
        self.assertIsNone(to_plain(np.float64(np.inf)))
        self.assertIs(to_plain(np.bool_(True)), True)
        self.assertEqual(to_plain(np.int64(4)), 4)
        self.assertEqual(to_plain((1, np.array([2.5, 3.5]))), [1, [2.5, 3.5]])
        self.assertEqual(to_plain({1: "a"}), {"1": "a"})

    def test_json(self):
        payload = {"schema_version": "1", "command": "count", "m": "2", "mu": math.inf}
        text = ReportRenderer().render(payload)
        self.assertTrue(text.endswith("\n"))
        data = json.loads(text)
        self.assertEqual(list(data), ["schema_version", "command", "m", "mu"])
        self.assertIsNone(data["mu"])
        self.assertIn('\n  "command": "count"', text)

    def test_text(self):
        payload = {
            "command": "sweep-alpha",
            "alpha_beta": 0.5,
            "nested": {"passed": True, "value": None},
            "entries": [{"alpha": 2.0, "bijective": True},
                        {"alpha": "inf", "bijective": False, "extra": [1, 2]}],
        }
        lines = ReportRenderer(OutputFormat.TEXT).render(payload).splitlines()
        self.assertEqual(lines[0], "command     sweep-alpha")
        self.assertEqual(lines[1], "alpha_beta  0.5")
        self.assertEqual(lines[2], "nested:")
        self.assertEqual(lines[3], "  passed  true")
        self.assertEqual(lines[4], "  value   -")
        self.assertEqual(lines[5], "entries:")
        self.assertEqual(lines[6].split(), ["alpha", "bijective", "extra"])
        self.assertEqual(lines[7].split(), ["2.0", "true"])
        self.assertEqual(lines[8].split(), ["inf", "false", "[1,2]"])


if __name__ == '__main__':
    unittest.main()
