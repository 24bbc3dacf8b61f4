import json
import logging
import sys
import tempfile
import unittest
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from cli import EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_RESOURCE, main
from symcomb.utils import set_log_level

from tests.samples import C6, K3, U24

MINORS_2X3 = "x1*x5 - x2*x4\nx1*x6 - x3*x4\nx2*x6 - x3*x5\n"


class TestCli(unittest.TestCase):
    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.tmp = Path(self._tmp.name)
        for name, complex_ in (("c6", C6), ("k3", K3), ("u24", U24)):
            (self.tmp / f"{name}.json").write_text(complex_.to_json(), encoding="utf-8")
        (self.tmp / "minors.ideal").write_text(MINORS_2X3, encoding="utf-8")

    def tearDown(self):
        self._tmp.cleanup()

    def path(self, name):
        return str(self.tmp / name)

    def run_report(self, *argv):
        out = self.path("report.json")
        code = main(list(argv) + ["--output", out])
        self.assertEqual(code, EXIT_OK)
        return json.loads(Path(out).read_text(encoding="utf-8"))

    def test_version(self):
        self.assertEqual(main(["version"]), EXIT_OK)

    def test_matroid_witness(self):
        report = self.run_report("complex", "--file", self.path("c6.json"), "--matroid")
        self.assertEqual(report["command"], "complex")
        self.assertFalse(report["results"]["is_matroid"])
        self.assertEqual(report["results"]["witness"], {"F": [1, 2], "G": [4, 5], "i": 1})
        self.assertTrue(report["provenance"])

    def test_self_dual(self):
        report = self.run_report("complex", "--file", self.path("u24.json"), "--dual")
        self.assertTrue(report["results"]["self_dual"])

    def test_connectivity(self):
        report = self.run_report("complex", "--file", self.path("k3.json"), "--connectivity", "--strong")
        self.assertEqual(report["results"]["connectivity"], 1)
        self.assertTrue(report["results"]["strongly_connected"])

    def test_hexagon_depth(self):
        report = self.run_report("ideal", "--cover", self.path("c6.json"), "--symbolic", "1", "--depth")
        self.assertEqual(report["results"]["depth"], 3)
        self.assertEqual(report["results"]["dim"], 4)

    def test_prime_power_associated_primes(self):
        report = self.run_report("ideal", "--prime", "1,2", "--power", "2", "--ass-polar")
        self.assertEqual(report["results"]["ass_polar_count"], 3)
        self.assertEqual(
            sorted(report["results"]["ass_polar"]),
            sorted([[[1, 1], [2, 1]], [[1, 1], [2, 2]], [[1, 2], [2, 1]]]),
        )

    def test_basic_covers(self):
        report = self.run_report("covers", "--file", self.path("k3.json"), "-k", "2", "--classify", "2,2,2", "--reduce", "2,2,2")
        self.assertEqual(report["results"]["class"], "Cover")
        self.assertEqual(report["results"]["basic"], [1, 1, 1])

    def test_regularity(self):
        report = self.run_report("minors", "--reg", "-t", "3", "-m", "5", "-n", "5")
        self.assertEqual(report["results"]["regularity"], {"case": "ii", "a": -13, "reg": 12, "k0": 3})
        self.assertEqual(report["inputs"], {"m": 5, "n": 5, "t": 3})

    def test_shape_relations(self):
        report = self.run_report("minors", "--shape-relations", "-t", "2", "-m", "3", "-n", "4")
        self.assertEqual(report["results"]["shape_relations"], [[[3, 3], [4, 1, 1]]])

    def test_table_mode(self):
        self.assertEqual(main(["minors", "--shape-relations", "-t", "2", "-m", "3", "-n", "4", "--table"]), EXIT_OK)

    def test_seeded_runs_are_identical(self):
        argv = ["minors", "--det-relations", "-t", "2", "--trials", "5", "--seed", "7"]
        first, second = self.path("a.json"), self.path("b.json")
        self.assertEqual(main(argv + ["--output", first]), EXIT_OK)
        self.assertEqual(main(argv + ["--output", second]), EXIT_OK)
        text = Path(first).read_text(encoding="utf-8")
        self.assertEqual(text, Path(second).read_text(encoding="utf-8"))
        report = json.loads(text)
        self.assertEqual(report["seed"], 7)
        self.assertTrue(report["results"]["det_relations_hold"])

    def test_deformation_report(self):
        report = self.run_report("groebner", "--file", self.path("minors.ideal"), "--order", "lex", "--deform-report")
        deformation = report["results"]["deformation"]
        self.assertTrue(deformation["strongly_connected"])
        self.assertTrue(deformation["is_CM_of_initial"])
        self.assertEqual(deformation["complex"]["facets"], [[1, 2, 3, 4], [2, 3, 4, 5], [3, 4, 5, 6]])

    def test_exit_codes(self):
        self.assertEqual(main(["complex", "--file", self.path("missing.json")]), EXIT_PARSE)
        (self.tmp / "bad.json").write_text("{not json", encoding="utf-8")
        self.assertEqual(main(["ideal", "--file", self.path("bad.json"), "--depth"]), EXIT_PARSE)
        self.assertEqual(main(["minors", "--reg", "-t", "2", "-m", "3", "-n", "3"]), EXIT_PRECONDITION)
        self.assertEqual(main(["minors", "--reg", "-t", "3"]), EXIT_PARSE)
        self.assertEqual(main(["groebner", "--ara", "4"]), EXIT_RESOURCE)

    def test_verbose_switches_to_debug(self):
        try:
            report = self.run_report("complex", "--file", self.path("k3.json"), "--verbose")
            self.assertEqual(report["results"]["dimension"], 1)
            self.assertEqual(logging.getLogger("symcomb.covers.weights").level, logging.DEBUG)
            self.assertEqual(logging.getLogger("cli").level, logging.DEBUG)
        finally:
            set_log_level(logging.INFO)

    def test_polarization_cap_is_the_default_route(self):
        argv = ["ideal", "--prime", "1,2", "--power", "9", "--depth"]
        self.assertEqual(main(argv), EXIT_RESOURCE)
        report = self.run_report(*argv, "--method", "lcm")
        self.assertEqual(report["results"]["route"], "lcm")
        self.assertEqual(report["results"]["depth"], 0)


if __name__ == "__main__":
    unittest.main()
