import os
import tempfile
import unittest

import numpy as np
from click.testing import CliRunner

from cli.commands import qaoa_maxcut
from cli.config import RunConfig
from cli.graph_file import format_graph, parse_graph_file, write_graph_file
from cli.results import read_result, write_result
from core import maxcut
from core.models import Graph
from utils.errors import (
    ConfigError,
    DuplicateEdgeError,
    GraphFileMissingError,
    MalformedLineError,
    ResultFileError,
    SelfLoopError,
    VertexRangeError,
)

C4 = Graph(4, ((0, 1), (1, 2), (2, 3), (3, 0)))


class CliTestCase(unittest.TestCase):
    def setUp(self):
        self.temp_dir = tempfile.TemporaryDirectory()
        self.runner = CliRunner()
        self.c4_path = self.write("c4.txt", "n 4\n0 1\n1 2\n2 3\n3 0\n")

    def tearDown(self):
        self.temp_dir.cleanup()

    def write(self, name: str, text: str) -> str:
        path = os.path.join(self.temp_dir.name, name)
        with open(path, "w") as f:
            f.write(text)
        return path

    def invoke(self, *args, env=None):
        return self.runner.invoke(qaoa_maxcut, list(args), env=env)

    # ---------- parse_graph_file ----------

    def test_parse_c4(self):
        self.assertEqual(parse_graph_file(self.c4_path), C4)

    def test_comments_ignored(self):
        path = self.write(
            "commented.txt", "# the 4-cycle\n\nn 4\n# edges\n0 1\n1 2  # inline\n2 3\n3 0\n"
        )
        self.assertEqual(parse_graph_file(path), C4)

    def test_parse_errors_are_line_numbered(self):
        cases = [
            ("n 2\n0 0\n", SelfLoopError, 2),
            ("n 3\n0 1\n1 0\n", DuplicateEdgeError, 3),
            ("n 3\n0 3\n", VertexRangeError, 2),
            ("n 3\n0 1 2\n", MalformedLineError, 2),
            ("n 3\n0 x\n", MalformedLineError, 2),
            ("# header missing\n0 1\n", MalformedLineError, 2),
            ("n 0\n", MalformedLineError, 1),
            ("", MalformedLineError, 0),
        ]
        for i, (text, error, line_no) in enumerate(cases):
            with self.subTest(text=text):
                path = self.write(f"bad{i}.txt", text)
                with self.assertRaises(error) as ctx:
                    parse_graph_file(path)
                self.assertEqual(ctx.exception.line_no, line_no)
                self.assertIn(f"{path}:{line_no}:", str(ctx.exception))

    def test_missing_file(self):
        with self.assertRaises(GraphFileMissingError):
            parse_graph_file(os.path.join(self.temp_dir.name, "nope.txt"))

    def test_graph_round_trip(self):
        rng = np.random.default_rng(4)
        for i in range(10):
            graph = maxcut.random_graph(int(rng.integers(1, 9)), 0.5, rng)
            path = os.path.join(self.temp_dir.name, f"g{i}.txt")
            write_graph_file(graph, path)
            self.assertEqual(parse_graph_file(path), graph)
        self.assertEqual(format_graph(C4), "n 4\n0 1\n1 2\n2 3\n3 0\n")

    # ---------- RunConfig ----------

    def test_run_config_validation(self):
        with self.assertRaises(ConfigError):
            RunConfig(self.c4_path, n_samples=0)
        with self.assertRaises(ConfigError):
            RunConfig(self.c4_path, n_iterations=0)
        with self.assertRaises(ConfigError):
            RunConfig(self.c4_path, mode="plot")
        spsa_config = RunConfig(self.c4_path).spsa_config()
        self.assertEqual(
            (spsa_config.n_iterations, spsa_config.a_start, spsa_config.c_start),
            (100, 0.25, 0.25),
        )

    # ---------- brute ----------

    def test_brute_c4(self):
        result = self.invoke("brute", self.c4_path)
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.stdout, "max 4: 0101 1010\n")

    def test_brute_empty_edges(self):
        result = self.invoke("brute", self.write("empty.txt", "n 2\n"))
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.stdout, "max 0: 00 01 10 11\n")

    def test_brute_size_guard(self):
        result = self.invoke("brute", self.write("big.txt", "n 21\n0 1\n"))
        self.assertNotEqual(result.exit_code, 0)
        self.assertIn("Error:", result.stderr)
        self.assertEqual(result.stdout, "")

    def test_missing_graph_reports_error(self):
        result = self.invoke("brute", os.path.join(self.temp_dir.name, "nope.txt"))
        self.assertEqual(result.exit_code, 1)
        self.assertIn("not found", result.stderr)

    # ---------- solve ----------

    def test_solve_single_iteration(self):
        result = self.invoke("solve", self.c4_path, "--iterations", "1", "--samples", "500")
        self.assertEqual(result.exit_code, 0, result.output)
        lines = result.stdout.splitlines()
        self.assertEqual(sum(line.startswith("Iteration:") for line in lines), 1)
        self.assertRegex(lines[0], r"^Iteration: 0 Exp\(\+\): \S+ Exp\(-\): \S+$")
        self.assertIn("Brute-force optimum: 4 (0101 1010)", lines)
        self.assertTrue(any(line.startswith("Final expectation (sampled): ") for line in lines))

    def test_solve_is_deterministic(self):
        args = ("solve", self.c4_path, "--iterations", "5", "--samples", "300", "--seed", "9")
        first, second = self.invoke(*args), self.invoke(*args)
        self.assertEqual(first.exit_code, 0)
        self.assertEqual(first.stdout, second.stdout)

        parallel = self.invoke(*args, "--parallel")
        self.assertEqual(first.stdout, parallel.stdout)

    def test_solve_result_file_matches_log(self):
        out = os.path.join(self.temp_dir.name, "result.json")
        result = self.invoke(
            "solve", self.c4_path, "--iterations", "4", "--samples", "200", "--out", out
        )
        self.assertEqual(result.exit_code, 0, result.output)

        doc = read_result(out)
        logged = [
            line.split() for line in result.stdout.splitlines() if line.startswith("Iteration:")
        ]
        self.assertEqual(len(doc["trace"]), len(logged))
        for record, words in zip(doc["trace"], logged):
            self.assertEqual(record["i"], int(words[1]))
            self.assertEqual(record["f_plus"], float(words[3]))
            self.assertEqual(record["f_minus"], float(words[5]))
        self.assertEqual(doc["config"]["n_iterations"], 4)
        self.assertEqual(doc["graph"], {"n_vertices": 4, "edges": [[0, 1], [1, 2], [2, 3], [3, 0]]})
        self.assertEqual(doc["brute_force"], {"max_score": 4, "argmax": ["0101", "1010"]})
        self.assertEqual(doc["seed"], 1234)
        self.assertGreaterEqual(doc["wall_time_s"], 0.0)

    def test_solve_exact_mode(self):
        result = self.invoke("solve", self.c4_path, "--iterations", "3", "--exact", "--p", "1")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("Final expectation (exact): ", result.stdout)

    def test_solve_env_var_defaults(self):
        result = self.invoke(
            "solve", self.c4_path, "--samples", "100",
            env={"QAOA_MAXCUT_SOLVE_ITERATIONS": "2"},
        )
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(result.stdout.count("Iteration:"), 2)

    def test_solve_random_seed(self):
        result = self.invoke(
            "solve", self.c4_path, "--iterations", "1", "--samples", "50", "--seed", "random"
        )
        self.assertEqual(result.exit_code, 0, result.output)

    def test_solve_bad_arguments(self):
        result = self.invoke("solve", self.c4_path, "--iterations", "0")
        self.assertEqual(result.exit_code, 1)
        self.assertIn("n_iterations", result.stderr)

        result = self.invoke("solve", self.c4_path, "--a-start", "inf")
        self.assertEqual(result.exit_code, 1)
        self.assertIn("a_start must be finite", result.stderr)

        result = self.invoke("solve", self.c4_path, "--seed", "abc")
        self.assertNotEqual(result.exit_code, 0)

    # ---------- evaluate ----------

    def test_evaluate_zero_angles(self):
        result = self.invoke(
            "evaluate", self.c4_path, "--gammas", "0,0", "--betas", "0,0", "--samples", "1000"
        )
        self.assertEqual(result.exit_code, 0, result.output)
        lines = dict(line.split(": ", 1) for line in result.stdout.splitlines())
        self.assertAlmostEqual(float(lines["Exact expectation"]), 2.0, delta=1e-10)
        sampled = float(lines["Sampled expectation"].split()[0])
        self.assertTrue(0.0 <= sampled <= 4.0)

    def test_evaluate_mismatched_lengths(self):
        result = self.invoke("evaluate", self.c4_path, "--gammas", "0,0", "--betas", "0")
        self.assertEqual(result.exit_code, 1)
        self.assertIn("Error:", result.stderr)

    def test_evaluate_malformed_list(self):
        for gammas in ("0,a", "0,,0", "0,", "0,,0,", ",", " "):
            with self.subTest(gammas=gammas):
                result = self.invoke(
                    "evaluate", self.c4_path, "--gammas", gammas, "--betas", "0,0"
                )
                self.assertNotEqual(result.exit_code, 0)
                self.assertEqual(result.stdout, "")
                self.assertIn("Error", result.stderr)

    def test_evaluate_list_tolerates_spaces(self):
        result = self.invoke(
            "evaluate", self.c4_path, "--gammas", " 0 , 0 ", "--betas", "0,0"
        )
        self.assertEqual(result.exit_code, 0, result.output)

    def test_evaluate_reproducible(self):
        args = ("evaluate", self.c4_path, "--gammas=0.3", "--betas=-0.2", "--seed", "7")
        self.assertEqual(self.invoke(*args).stdout, self.invoke(*args).stdout)

    # ---------- circuit ----------

    def test_circuit_listing(self):
        result = self.invoke("circuit", self.c4_path, "--gammas", "0.5", "--betas", "0.25")
        self.assertEqual(result.exit_code, 0, result.output)
        lines = result.stdout.splitlines()
        self.assertEqual(lines[:4], ["h 0", "h 1", "h 2", "h 3"])
        self.assertEqual(lines[4:7], ["cx 0 1", "rz(0.5) 1", "cx 0 1"])
        self.assertEqual(lines[-2], "rx(0.5) 3")
        self.assertEqual(lines[-1], "measure")

    # ---------- result documents ----------

    def test_result_file_schema_checked(self):
        path = os.path.join(self.temp_dir.name, "other.json")
        write_result(path, {"schema": "something-else"})
        with self.assertRaises(ResultFileError):
            read_result(path)
        with self.assertRaises(ResultFileError):
            read_result(os.path.join(self.temp_dir.name, "absent.json"))


if __name__ == "__main__":
    unittest.main()
