# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
import unittest

from friedrichskit.cli import parse_alpha_grid, split_components
from friedrichskit.cli.command_runner import read_json_argument
from friedrichskit.common.errors import UsageError


class TestCommandRunnerHelpers(unittest.TestCase):

    def test_split_components(self):
        self.assertEqual(split_components("1"), ["1"])
        self.assertEqual(split_components("1, sin(x)"), ["1", "sin(x)"])
        self.assertEqual(split_components("exp(-(x + 1)) , 2*x"), ["exp(-(x + 1))", "2*x"])
        for text in ("", "1,,2", "1,", " , x"):
            with self.assertRaises(UsageError, msg=text):
                split_components(text)

    def test_parse_alpha_grid(self):
        self.assertEqual(parse_alpha_grid("-1, 0.5,inf, 1+2j, ∞, Infinity"),
                         [-1 + 0j, 0.5 + 0j, "inf", 1 + 2j, "inf", "inf"])
        self.assertEqual(parse_alpha_grid("1 + 2j"), [1 + 2j])
        with self.assertRaises(UsageError):
            parse_alpha_grid("two")

    def test_read_json_argument(self):
        self.assertEqual(read_json_argument('{"kind": "alpha", "alpha": 2}', "bc"),
                         {"kind": "alpha", "alpha": 2})
        with self.assertRaises(UsageError):
            read_json_argument("{kind", "bc")
        with self.assertRaises(UsageError):
            read_json_argument("/nonexistent/samples.json", "samples", inline=False)


if __name__ == '__main__':
    unittest.main()
