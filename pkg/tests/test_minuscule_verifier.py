#!/usr/bin/env python3

import unittest
import tempfile
import os
import contextlib
import json

from io import StringIO
from pathlib import Path

from megatech.minuscule.applications import MinusculeVerifier, Configuration, run
from megatech.minuscule import *

TEMPORARY_PREFIX = "test-minuscule-verifier-"

def tmpfile(dir: Path = None) -> Path:
    handle = None
    name = None
    if dir and dir.is_dir():
        (handle, name) = tempfile.mkstemp(prefix=TEMPORARY_PREFIX, dir=dir)
    else:
        (handle, name) = tempfile.mkstemp()
    os.close(handle)
    return Path(name)

class TestConfiguration(unittest.TestCase):
    def setUp(self) -> None:
        self.__tmp_dir = Path(tempfile.mkdtemp(prefix=TEMPORARY_PREFIX))
    def tearDown(self) -> None:
        for file in self.__tmp_dir.iterdir():
            file.unlink()
        self.__tmp_dir.rmdir()
    def test_init_should_use_defaults(self) -> None:
        configuration = Configuration()
        self.assertEqual(configuration.max_degree(), 8)
        self.assertEqual(configuration.output(), "json")
        self.assertFalse(configuration.timing())
        self.assertIsNone(configuration.cache_dir())
    def test_init_should_fail_for_unknown_settings(self) -> None:
        with self.assertRaises(ValueError):
            Configuration({ "frog": 1 })
    def test_init_should_fail_for_weird_integers(self) -> None:
        with self.assertRaises(ValueError):
            Configuration({ "orbit_cap": "many" })
        with self.assertRaises(ValueError):
            Configuration({ "max_degree": 1 })
        with self.assertRaises(ValueError):
            Configuration({ "seed": True })
    def test_init_should_fail_for_weird_outputs(self) -> None:
        with self.assertRaises(ValueError):
            Configuration({ "output": "xml" })
    def test_init_should_fail_for_weird_booleans(self) -> None:
        with self.assertRaises(ValueError):
            Configuration({ "timing": "maybe" })
        self.assertTrue(Configuration({ "timing": "Yes" }).timing())
    def test_resolve_should_prefer_flags_then_environment_then_file(self) -> None:
        path = tmpfile(self.__tmp_dir)
        path.write_text(json.dumps({ "max_degree": 5, "seed": 1, "orbit_cap": 7 }), encoding="utf-8")
        configuration = Configuration.resolve({ "max_degree": 3, "seed": None },
                                              { "MINUSCULE_MAX_DEGREE": "4", "MINUSCULE_SEED": "9" }, path)
        self.assertEqual(configuration.max_degree(), 3)
        self.assertEqual(configuration.seed(), 9)
        self.assertEqual(configuration.orbit_cap(), 7)
        self.assertEqual(configuration.group_cap(), DEFAULT_GROUP_CAP)
    def test_resolve_should_fail_when_the_file_doesnt_exist(self) -> None:
        with self.assertRaises(FileNotFoundError):
            Configuration.resolve({ }, { }, Path(self.__tmp_dir, "not-a-real-config.json"))
    def test_resolve_should_fail_when_the_file_isnt_a_file(self) -> None:
        with self.assertRaises(OSError):
            Configuration.resolve({ }, { }, self.__tmp_dir)
    def test_resolve_should_fail_for_weird_files(self) -> None:
        path = tmpfile(self.__tmp_dir)
        path.write_text("{ not json", encoding="utf-8")
        with self.assertRaises(ValueError):
            Configuration.resolve({ }, { }, path)
        path.write_text("[ 1, 2 ]", encoding="utf-8")
        with self.assertRaises(ValueError):
            Configuration.resolve({ }, { }, path)

class TestMinusculeVerifier(unittest.TestCase):
    def setUp(self) -> None:
        self.__err = StringIO()
        self.__redirect_stderr = contextlib.redirect_stderr(self.__err)
        self.__redirect_stderr.__enter__()
        self.__tmp_dir = Path(tempfile.mkdtemp(prefix=TEMPORARY_PREFIX))
        self.__tmp_template = tmpfile(self.__tmp_dir)
        with open(self.__tmp_template, "wb") as outfile:
            outfile.write(b"${len(reports) == totals['pass']} ${','.join(arguments)}")
    def tearDown(self) -> None:
        self.__redirect_stderr.__exit__(None, None, None)
        for file in self.__tmp_dir.iterdir():
            file.unlink()
        self.__tmp_dir.rmdir()
    def _run_to_file(self, arguments: list[str], environment: dict = None) -> (int, str):
        output = tmpfile(self.__tmp_dir)
        code = run([ "-o", str(output) ] + arguments, environment or { })
        text = output.read_text(encoding="utf-8")
        output.unlink()
        return (code, text)
    def test_init_should_fail_when_template_doesnt_exist(self) -> None:
        with self.assertRaises(FileNotFoundError):
            MinusculeVerifier(None, False, False, None, Path(self.__tmp_dir, "not-a-real-template.txt"))
    def test_init_should_fail_when_template_isnt_a_file(self) -> None:
        with self.assertRaises(OSError):
            with tempfile.TemporaryDirectory(prefix=TEMPORARY_PREFIX) as tmpdir:
                MinusculeVerifier(None, False, False, None, Path(tmpdir))
    def test_init_should_fail_when_output_isnt_a_file(self) -> None:
        with self.assertRaises(OSError):
            with tempfile.TemporaryDirectory(prefix=TEMPORARY_PREFIX) as tmpdir:
                MinusculeVerifier(None, False, False, Path(tmpdir))
    def test_run_should_describe_root_systems(self) -> None:
        code, text = self._run_to_file([ "rootsys", "info", "--family", "A", "--rank", "2" ])
        self.assertEqual(code, 0)
        data = json.loads(text)
        self.assertEqual(data["label"], "A2")
        self.assertEqual(data["root_count"], 6)
        self.assertEqual(data["weyl_order"], 6)
    def test_run_should_write_to_stdout_without_an_output_file(self) -> None:
        res = ""
        with StringIO() as out, contextlib.redirect_stdout(out):
            code = run([ "rootsys", "info", "--family", "B", "--rank", "3" ], { })
            res = out.getvalue()
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(res)["label"], "B3")
    def test_run_should_return_2_for_weird_families(self) -> None:
        self.assertEqual(run([ "rootsys", "info", "--family", "Q", "--rank", "2" ], { }), 2)
        self.assertIn("ERROR:", self.__err.getvalue())
    def test_run_should_return_2_without_a_family(self) -> None:
        self.assertEqual(run([ "verify", "construction" ], { }), 2)
    def test_run_should_return_2_for_weird_environments(self) -> None:
        self.assertEqual(run([ "rootsys", "info", "--family", "A", "--rank", "2" ], { "MINUSCULE_OUTPUT": "xml" }), 2)
    def test_run_should_partition_orbits(self) -> None:
        code, text = self._run_to_file([ "orbit", "--family", "B", "--rank", "3", "--coweight", "b",
                                         "--partition-coweight", "b" ])
        self.assertEqual(code, 0)
        data = json.loads(text)
        self.assertEqual(data["size"], 6)
        self.assertEqual(sorted(data["partition"]["sizes"]), [ 1, 1, 4 ])
    def test_run_should_fill_the_orbit_cache(self) -> None:
        code, _ = self._run_to_file([ "--cache-dir", str(self.__tmp_dir), "orbit", "--family", "A", "--rank", "2",
                                      "--vector", "1,0,0" ])
        self.assertEqual(code, 0)
        self.assertTrue(any(file.name.startswith("A-2-") for file in self.__tmp_dir.iterdir()))
    def test_run_should_find_dominant_representatives(self) -> None:
        code, text = self._run_to_file([ "dominant", "--family", "A", "--rank", "2", "--vector", "0,0,1" ])
        self.assertEqual(code, 0)
        data = json.loads(text)
        self.assertEqual(data["dominant"], [ "1", "0", "0" ])
        group = RootSystem.build(RootSystemLabel.parse("A2")).weyl_group()
        self.assertEqual(group.apply(WeylWord(data["word"]), Vector([ 0, 0, 1 ])), Vector([ 1, 0, 0 ]))
    def test_run_should_decide_conjugacy(self) -> None:
        code, text = self._run_to_file([ "conjugate", "--family", "A", "--rank", "2", "--vector", "1,0,0",
                                         "--other", "0,0,1" ])
        self.assertEqual(code, 0)
        data = json.loads(text)
        self.assertTrue(data["conjugate"])
        group = RootSystem.build(RootSystemLabel.parse("A2")).weyl_group()
        self.assertEqual(group.apply(WeylWord(data["witness"]), Vector([ 0, 0, 1 ])), Vector([ 1, 0, 0 ]))
    def test_run_should_use_the_full_group_for_d(self) -> None:
        arguments = [ "conjugate", "--family", "D", "--rank", "4", "--vector", "1/2,1/2,1/2,1/2",
                      "--other", "1/2,1/2,1/2,-1/2" ]
        self.assertFalse(json.loads(self._run_to_file(arguments)[1])["conjugate"])
        self.assertTrue(json.loads(self._run_to_file(arguments + [ "--full-group" ])[1])["conjugate"])
    def test_run_should_write_deterministic_json_lines(self) -> None:
        code, text = self._run_to_file([ "verify", "construction", "--family", "A", "--rank", "2" ])
        self.assertEqual(code, 0)
        lines = [ json.loads(line) for line in text.splitlines() ]
        self.assertGreater(len(lines), 0)
        for line in lines:
            self.assertEqual(line["status"], "pass")
            self.assertEqual(line["runtime_ms"], 0)
            self.assertTrue(line["check_id"].startswith("construction.A2."))
        self.assertEqual(self._run_to_file([ "verify", "construction", "--family", "A", "--rank", "2" ])[1], text)
    def test_run_should_report_runtimes_only_with_timing(self) -> None:
        arguments = [ "verify", "orbits", "--family", "A", "--rank", "2" ]
        code, text = self._run_to_file([ "--timing" ] + arguments)
        self.assertEqual(code, 0)
        for line in text.splitlines():
            self.assertGreaterEqual(json.loads(line)["runtime_ms"], 0)
        first = self._run_to_file(arguments)[1]
        self.assertEqual(self._run_to_file(arguments)[1], first)
        self.assertTrue(all(json.loads(line)["runtime_ms"] == 0 for line in first.splitlines()))
    def test_run_should_accept_suite_aliases(self) -> None:
        code, text = self._run_to_file([ "verify", "prop1", "--family", "A", "--rank", "2" ])
        self.assertEqual(code, 0)
        self.assertTrue(all(json.loads(line)["check_id"].startswith("fibers.A2.") for line in text.splitlines()))
        code, text = self._run_to_file([ "verify", "prop2", "--family", "A", "--rank", "2" ])
        self.assertEqual(code, 0)
        self.assertTrue(all(json.loads(line)["check_id"].startswith("generation.A2.") for line in text.splitlines()))
    def test_run_should_recompute_stale_cache_files_silently(self) -> None:
        arguments = [ "--cache-dir", str(self.__tmp_dir), "verify", "orbits", "--family", "A", "--rank", "2" ]
        code, text = self._run_to_file(arguments)
        self.assertEqual(code, 0)
        cached = [ file for file in self.__tmp_dir.iterdir() if file.name.startswith("A-2-") ]
        self.assertGreater(len(cached), 0)
        for file in cached:
            data = json.loads(file.read_text(encoding="utf-8"))
            data["version"] = "0.0.1"
            file.write_text(json.dumps(data), encoding="utf-8")
        self.assertEqual(self._run_to_file(arguments), (0, text))
        self.assertNotIn("WARN:", self.__err.getvalue())
        for file in cached:
            data = json.loads(file.read_text(encoding="utf-8"))
            data["version"] = "0.0.1"
            file.write_text(json.dumps(data), encoding="utf-8")
        self.assertEqual(self._run_to_file([ "-V" ] + arguments)[0], 0)
        self.assertIn("is stale and was recomputed", self.__err.getvalue())
    def test_run_should_render_text_summaries(self) -> None:
        code, text = self._run_to_file([ "verify", "orbits", "--family", "A", "--rank", "2" ],
                                       { "MINUSCULE_OUTPUT": "text" })
        self.assertEqual(code, 0)
        self.assertTrue(text.startswith(f"minuscule-verifier {MinusculeVerifier.version}"))
        self.assertIn("[PASS] orbits.A2.", text)
        self.assertIn("0 failed, 0 inconclusive", text)
        self.assertNotIn(" ms)", text)
    def test_run_should_render_templates(self) -> None:
        code, text = self._run_to_file([ "--template", str(self.__tmp_template), "-t", "a,b", "verify",
                                         "construction", "--family", "A", "--rank", "2" ])
        self.assertEqual(code, 0)
        self.assertEqual(text, "True a,b")
    def test_run_should_warn_about_inconclusive_reports(self) -> None:
        code, text = self._run_to_file([ "--orbit-cap", "2", "verify", "orbits", "--family", "B", "--rank", "3" ])
        self.assertEqual(code, 0)
        self.assertIn("inconclusive", json.loads(text.splitlines()[0])["status"])
        self.assertIn("WARN:", self.__err.getvalue())
    def test_run_should_find_triangle_witnesses(self) -> None:
        code, text = self._run_to_file([ "triangle", "witness", "--family", "A", "--rank", "2", "--count", "3" ])
        self.assertEqual(code, 0)
        for line in text.splitlines():
            self.assertEqual(json.loads(line)["status"], "pass")
    def test_run_should_return_1_for_failed_triangles(self) -> None:
        code, text = self._run_to_file([ "triangle", "witness", "--family", "A", "--rank", "2",
                                         "--target", "a1", "0,1,-1", "--triangle", "-2/3,1/3,1/3", "0,1,-1" ])
        self.assertEqual(code, 1)
        self.assertEqual(json.loads(text)["status"], "fail")
    def test_run_should_require_target_and_triangle_together(self) -> None:
        self.assertEqual(run([ "triangle", "witness", "--family", "A", "--rank", "2", "--target", "a1", "0,1,-1" ],
                             { }), 2)


if __name__ == "__main__":
  unittest.main()
