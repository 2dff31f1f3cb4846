"""End-to-end checks of the rbmg executable: exit codes, output formats, determinism.

Usage: test_cli.py <path-to-rbmg> <test-data-dir>
"""

import json
import pathlib
import subprocess
import sys
import tempfile
import unittest

BIN = ""
DATA = pathlib.Path()


def run(*args, stdin=None):
    return subprocess.run([BIN, *map(str, args)], input=stdin, capture_output=True, text=True, timeout=120)


class Recognize(unittest.TestCase):
    def test_exit_codes(self):
        two_clusters = DATA / "two_clusters.cg"
        self.assertEqual(run("recognize", "--class", "nrbmg", two_clusters).returncode, 0)
        self.assertEqual(run("recognize", "--class", "hc-cograph", two_clusters).returncode, 0)
        self.assertEqual(run("recognize", "--class", "2rbmg", two_clusters).returncode, 1)
        self.assertEqual(run("recognize", "--class", "bicluster", DATA / "p4.cg").returncode, 1)
        self.assertEqual(run("recognize", "--class", "nope", two_clusters).returncode, 2)
        self.assertEqual(run("recognize", "--class", "nrbmg", DATA / "missing.cg").returncode, 2)
        self.assertEqual(run("recognize", "--class", "nrbmg", "-", stdin="p cgraph 2 1\nv a A\n").returncode, 2)
        self.assertEqual(run("frobnicate").returncode, 2)

    def test_text_and_json_agree(self):
        for cls in ("bicluster", "2rbmg", "cograph", "hc-cograph", "rbmg-oracle", "nrbmg"):
            for name in ("two_clusters.cg", "p4.cg", "edgeless2.cg"):
                text = run("recognize", "--class", cls, DATA / name)
                js = run("recognize", "--class", cls, "--json", DATA / name)
                self.assertEqual(text.returncode, js.returncode, (cls, name))
                verdict = json.loads(js.stdout)["verdict"]
                self.assertIn(f"verdict {'yes' if verdict else 'no'}", text.stdout)
                self.assertEqual(verdict, text.returncode == 0)

    def test_stdin_and_quiet(self):
        graph = (DATA / "p4.cg").read_text()
        r = run("recognize", "--class", "cograph", "--quiet", "-", stdin=graph)
        self.assertEqual((r.returncode, r.stdout), (1, ""))
        r = run("recognize", "--class", "cograph", "--certificate", stdin=graph)
        self.assertIn("induced-p4", r.stdout)


class Solve(unittest.TestCase):
    def test_statuses(self):
        r = run("solve", "--target", "bicluster", DATA / "p4.cg")
        self.assertEqual(r.returncode, 0)
        self.assertIn("status solved", r.stdout)
        self.assertIn("size 1", r.stdout)
        r = run("solve", "--target", "2rbmg", "--mode", "delete", DATA / "edgeless2.cg")
        self.assertEqual(r.returncode, 3)
        self.assertIn("status infeasible", r.stdout)
        r = run("solve", "--target", "bicluster", "--k-max", "0", DATA / "p4.cg")
        self.assertEqual(r.returncode, 4)
        self.assertNotIn("size", r.stdout)
        self.assertEqual(run("solve", "--target", "bicluster", "--mode", "sideways", DATA / "p4.cg").returncode, 2)
        self.assertEqual(run("solve", "--target", "nrbmg", "--mode", "complete", DATA / "p4.cg").returncode, 2)

    def test_edgeless_rainbow_clique(self):
        for n in range(2, 6):
            graph = f"p cgraph {n} {n}\n" + "".join(f"v x{i} C{i}\n" for i in range(n))
            doc = json.loads(run("solve", "--target", "nrbmg", "--mode", "edit", "--json", stdin=graph).stdout)
            self.assertEqual(doc["size"], n * (n - 1) // 2)
            self.assertEqual(len({v for pair in doc["witness"] for v in pair}), n)

    def test_json_matches_text(self):
        for target in ("bicluster", "2rbmg", "hc-cograph", "nrbmg"):
            for mode in ("delete", "edit"):
                text = run("solve", "--target", target, "--mode", mode, DATA / "p4.cg")
                js = run("solve", "--target", target, "--mode", mode, "--json", DATA / "p4.cg")
                self.assertEqual(text.returncode, js.returncode)
                doc = json.loads(js.stdout)
                self.assertIn(f"status {doc['status']}", text.stdout)
                pairs = [line.split()[1:] for line in text.stdout.splitlines() if line.startswith("pair ")]
                self.assertEqual(pairs, doc["witness"])
                if doc["status"] == "solved":
                    self.assertEqual(doc["size"], len(pairs))

    def test_threads_do_not_change_answer(self):
        graph = run("gen", "graph", "--planted", "--seed", 9, "-n", 30, "--flips", 5).stdout
        one = json.loads(run("solve", "--target", "2rbmg", "--json", stdin=graph).stdout)
        four = json.loads(run("solve", "--target", "2rbmg", "--threads", 4, "--json", stdin=graph).stdout)
        self.assertEqual(one["witness"], four["witness"])


class Trees(unittest.TestCase):
    def test_tree_to_graph_matches_fixture(self):
        r = run("tree-to-graph", DATA / "two_clusters.tree")
        self.assertEqual(r.returncode, 0)
        self.assertEqual(r.stdout, (DATA / "two_clusters.cg").read_text())

    def test_out_file_and_orthology(self):
        with tempfile.TemporaryDirectory() as tmp:
            out = pathlib.Path(tmp) / "g.cg"
            self.assertEqual(run("tree-to-graph", "--relation", "orthology", "-o", out, DATA / "two_clusters.tree").returncode, 0)
            self.assertTrue(out.read_text().startswith("p cgraph 5 3"))
            self.assertEqual(run("recognize", "--class", "cograph", out).returncode, 0)
        self.assertEqual(run("tree-to-graph", "--index", 7, DATA / "two_clusters.tree").returncode, 2)


class Generators(unittest.TestCase):
    def test_graph_round_trip(self):
        first = run("gen", "graph", "--seed", 5, "-n", 12, "--colors", 3)
        self.assertEqual(first.returncode, 0)
        self.assertEqual(first.stdout, run("gen", "graph", "--seed", 5, "-n", 12, "--colors", 3).stdout)
        self.assertNotEqual(first.stdout, run("gen", "graph", "--seed", 6, "-n", 12, "--colors", 3).stdout)
        tree = run("gen", "tree", "--seed", 5, "-n", 9, "--colors", 3)
        graph = run("tree-to-graph", "-", stdin=tree.stdout)
        self.assertEqual(run("recognize", "--class", "nrbmg", "-", stdin=graph.stdout).returncode, 0)

    def test_planted_recovery(self):
        graph = run("gen", "graph", "--planted", "--seed", 3, "-n", 20, "--flips", 2).stdout
        doc = json.loads(run("solve", "--target", "2rbmg", "--json", stdin=graph).stdout)
        self.assertLessEqual(doc["size"], 2)


class Bench(unittest.TestCase):
    def test_csv_is_byte_identical(self):
        args = ("bench", "--seed", 17, "--trials", 6, "--leaves", 30, "--flips", 4)
        first = run(*args)
        self.assertEqual(first.returncode, 0)
        self.assertEqual(first.stdout, run(*args).stdout)
        self.assertEqual(first.stdout, run(*args, "--jobs", 3).stdout)
        self.assertEqual(len(first.stdout.splitlines()), 7)

    def test_suite_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            suite = pathlib.Path(tmp) / "suite.toml"
            suite.write_text("seed = 17\ntrials = 6\nleaves = 30\nflips = 4\n")
            from_file = run("bench", "--suite", suite)
            flags = run("bench", "--seed", 17, "--trials", 6, "--leaves", 30, "--flips", 4)
            self.assertEqual(from_file.stdout, flags.stdout)
            suite.write_text("speed = 3\n")
            self.assertEqual(run("bench", "--suite", suite).returncode, 2)


class Version(unittest.TestCase):
    def test_version(self):
        r = run("--version")
        self.assertEqual(r.returncode, 0)
        self.assertTrue(r.stdout.startswith("rbmg 0.1.0"))


if __name__ == "__main__":
    BIN = sys.argv[1]
    DATA = pathlib.Path(sys.argv[2])
    unittest.main(argv=sys.argv[:1], verbosity=1)
