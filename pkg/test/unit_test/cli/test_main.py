# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
import csv
import io
import json
import math
import os
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from unittest.mock import patch

from numpy.linalg import LinAlgError

from friedrichskit.cli import (
    EXIT_INTERNAL,
    EXIT_NUMERICAL,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VALIDATION,
    Command,
    exit_code_of,
    main,
    parse_config,
)
from friedrichskit.common.errors import (
    IllConditionedError,
    InternalInconsistencyError,
    NotBijectiveError,
    UsageError,
)

RESOURCES = os.path.join(os.path.dirname(__file__), os.pardir, os.pardir, "resources")


def _resource(name: str) -> str:
    return os.path.normpath(os.path.join(RESOURCES, name))


def _run(*argv: str):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


class TestMain(unittest.TestCase):

    def setUp(self):
        self.ex37 = _resource("ex37.json")

    def _json(self, *argv: str) -> dict:
        code, out, err = _run(*argv)
        self.assertEqual(code, EXIT_OK, err)
        return json.loads(out)

    def test_validate(self):
        data = self._json("validate", "--spec", self.ex37)
        self.assertEqual(data["schema_version"], "1")
        self.assertEqual(data["command"], "validate")
        self.assertTrue(data["valid"])
        self.assertEqual(data["dimension"], 1)
        self.assertAlmostEqual(data["parts"]["mu"], 1.0, places=9)

    def test_count(self):
        self.assertEqual(self._json("count", "--spec", self.ex37)["m"], "2")
        self.assertEqual(self._json("count", "--spec", _resource("ex37_complex.json"))["m"],
                         "infinite")
        data = self._json("count", "--spec", _resource("block_example.json"))
        self.assertEqual((data["d_plus"], data["d_minus"], data["m"]), (2, 1, "0"))

    def test_kernels(self):
        data = self._json("kernels", "--spec", self.ex37)
        self.assertEqual(data["indices"]["d_plus"], 1)
        self.assertTrue(data["decomposition"]["passed"])
        self.assertAlmostEqual(data["K"][1][0], math.exp(-1), places=9)
        self.assertAlmostEqual(data["K_tilde"][1][0], math.e, places=8)

    def test_classify(self):
        data = self._json("classify", "--spec", self.ex37, "--bc", '{"kind": "alpha", "alpha": 2}')
        self.assertTrue(data["signed_boundary_map"])
        self.assertFalse(data["selfadjoint_type"])
        self.assertAlmostEqual(data["alpha_beta"], math.exp(-1), places=9)
        self.assertEqual(data["boundary_condition"], {"kind": "alpha", "alpha": 2})
        data = self._json("classify", "--spec", self.ex37, "--bc", _resource("alpha_two.json"))
        self.assertTrue(data["bijective"])

    def test_sweep_alpha(self):
        data = self._json("sweep-alpha", "--spec", self.ex37, "--alphas", "-1,2,inf")
        self.assertEqual([e["alpha"] for e in data["entries"]][:3], [-1.0, 2.0, "inf"])
        self.assertEqual(len(data["entries"]), 4)
        self.assertFalse(data["entries"][3]["bijective"])

    def test_solve(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "u.csv")
            data = self._json("solve", "--spec", self.ex37, "--bc",
                              '{"kind": "alpha", "alpha": "inf"}', "--rhs", "1",
                              "--out", path, "--apriori", "3")
            self.assertLess(data["residual_l2"], 1e-6)
            self.assertTrue(data["apriori"]["passed"])
            self.assertEqual(data["csv"], path)
            with open(path, encoding="utf-8", newline="") as f:
                rows = list(csv.reader(f))
        self.assertEqual(rows[0], ["x", "Re u1", "Im u1"])
        x, re_u, _ = (float(v) for v in rows[-1])
        self.assertAlmostEqual(x, 1.0)
        self.assertAlmostEqual(re_u, 1 - math.exp(-1), places=7)

    def test_defect(self):
        data = self._json("defect", "--spec", self.ex37, "--samples", _resource("samples.json"))
        self.assertEqual(data["verdict"], "PASS")
        self.assertEqual(data["indices"], [1, 1])
        self.assertEqual(len(data["rows"]), 4)
        data = self._json("defect", "--spec", self.ex37, "--count", "2", "--seed", "5")
        self.assertEqual(len(data["rows"]), 3)

    def test_report_as_text_to_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "report.txt")
            code, out, err = _run("report", "--spec", self.ex37, "--format", "text",
                                  "--out", path)
            self.assertEqual(code, EXIT_OK, err)
            self.assertEqual(out, "")
            with open(path, encoding="utf-8") as f:
                text = f.read()
        self.assertTrue(text.startswith("schema_version"))
        self.assertIn("sweep_alpha:", text)

    def test_exit_codes(self):
        cases = [
            (EXIT_USAGE, ["validate", "--spec", _resource("missing.json")]),
            (EXIT_USAGE, ["validate"]),
            (EXIT_USAGE, ["frobnicate", "--spec", self.ex37]),
            (EXIT_USAGE, ["classify", "--spec", self.ex37, "--bc", "{kind"]),
            (EXIT_VALIDATION, ["validate", "--spec", _resource("not_accretive.json")]),
            (EXIT_VALIDATION, ["classify", "--spec", _resource("block_example.json"),
                               "--bc", '{"kind": "alpha", "alpha": 1}']),
            (EXIT_VALIDATION, ["solve", "--spec", self.ex37, "--rhs", "1",
                               "--bc", json.dumps({"kind": "alpha", "alpha": math.exp(-1)})]),
            (EXIT_VALIDATION, ["solve", "--spec", self.ex37, "--rhs", "y",
                               "--bc", '{"kind": "alpha", "alpha": 2}']),
        ]
        for expected, argv in cases:
            code, out, err = _run(*argv)
            self.assertEqual(code, expected, argv)
            self.assertEqual(out, "", argv)
            self.assertTrue(err.startswith("friedrichs-kit"), err)

    def test_invalid_json_spec(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "spec.json")
            with open(path, "w", encoding="utf-8") as f:
                f.write("{\"field\": ")
            code, _, err = _run("validate", "--spec", path)
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("usage", err)


class TestParseConfig(unittest.TestCase):

    def setUp(self):
        self.ex37 = _resource("ex37.json")

    def test_overrides(self):
        config = parse_config(["kernels", "--spec", "s.json", "--rank-tol", "1e-9",
                               "--grid", "512"])
        self.assertEqual(config.command, Command.KERNELS)
        self.assertEqual(dict(config.tolerance_overrides), {"grid": 512, "rank_tol": 1e-9})
        self.assertIsNone(config.out)

    def test_solve_arguments(self):
        config = parse_config(["solve", "--spec", "s.json", "--bc", "{}", "--rhs", "1,x",
                               "--apriori", "5", "--seed", "2"])
        self.assertEqual((config.rhs, config.apriori_trials, config.seed), ("1,x", 5, 2))
        with self.assertRaises(UsageError):
            parse_config(["solve", "--spec", "s.json", "--bc", "{}"])

    def test_exit_code_of(self):
        self.assertEqual(exit_code_of(UsageError("x")), EXIT_USAGE)
        self.assertEqual(exit_code_of(FileNotFoundError("x")), EXIT_USAGE)
        self.assertEqual(exit_code_of(json.JSONDecodeError("x", "", 0)), EXIT_USAGE)
        self.assertEqual(exit_code_of(IllConditionedError("x", 1e13)), EXIT_NUMERICAL)
        self.assertEqual(exit_code_of(InternalInconsistencyError("x")), EXIT_NUMERICAL)
        self.assertEqual(exit_code_of(NotBijectiveError("x")), EXIT_VALIDATION)
        self.assertEqual(exit_code_of(ValueError("x")), EXIT_VALIDATION)
        self.assertEqual(exit_code_of(LinAlgError("singular matrix")), EXIT_NUMERICAL)
        self.assertEqual(exit_code_of(KeyError("x")), EXIT_INTERNAL)

    def test_unexpected_failure_is_reported(self):
        with patch("friedrichskit.cli.command_runner.CommandRunner.run", side_effect=KeyError("lost")):
            code, out, err = _run("validate", "--spec", self.ex37)
        self.assertEqual(code, EXIT_INTERNAL)
        self.assertEqual(out, "")
        self.assertIn("friedrichs-kit: internal error:", err)
        self.assertNotIn("Traceback", err)

    def test_linear_algebra_failure_is_numerical(self):
        with patch("friedrichskit.cli.command_runner.CommandRunner.run",
                   side_effect=LinAlgError("Singular matrix")):
            code, _, err = _run("validate", "--spec", self.ex37)
        self.assertEqual(code, EXIT_NUMERICAL)
        self.assertIn("friedrichs-kit: numerical failure: Singular matrix", err)


if __name__ == '__main__':
    unittest.main()
