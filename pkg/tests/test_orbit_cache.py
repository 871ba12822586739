#!/usr/bin/env python3

import unittest
import tempfile
import os
import json

from pathlib import Path

from megatech.minuscule import *

TEMPORARY_PREFIX = "test-orbit-cache-"

def tmpfile(dir: Path = None) -> Path:
    handle = None
    name = None
    if dir and dir.is_dir():
        (handle, name) = tempfile.mkstemp(prefix=TEMPORARY_PREFIX, dir=dir)
    else:
        (handle, name) = tempfile.mkstemp()
    os.close(handle)
    return Path(name)

class TestOrbitCache(unittest.TestCase):
    def setUp(self) -> None:
        self.__tmp_dir = Path(tempfile.mkdtemp(prefix=TEMPORARY_PREFIX))
        self.__system = RootSystem.build(RootSystemLabel.parse("B3"))
        self.__base = Vector.basis(3, 0)
    def tearDown(self) -> None:
        for file in self.__tmp_dir.iterdir():
            file.unlink()
        self.__tmp_dir.rmdir()
    def test_init_should_fail_for_regular_files(self) -> None:
        path = tmpfile(self.__tmp_dir)
        with self.assertRaises(OSError):
            OrbitCache(path, "1.0.0")
    def test_path_should_name_the_family_rank_and_version(self) -> None:
        cache = OrbitCache(self.__tmp_dir, "1.2.3")
        path = cache.path(self.__system.label(), self.__system.weyl_group(), self.__base)
        self.assertEqual(path.parent, self.__tmp_dir.absolute())
        self.assertTrue(path.name.startswith("B-3-"))
        self.assertTrue(path.name.endswith("-1.2.3.json"))
    def test_path_should_keep_exceptional_labels_whole(self) -> None:
        e7 = RootSystem.build(RootSystemLabel.parse("E7"))
        cache = OrbitCache(self.__tmp_dir, "1.0.0")
        self.assertTrue(cache.path(e7.label(), e7.weyl_group(), e7.coweight("a")[1]).name.startswith("E7-7-"))
    def test_path_should_depend_on_the_group(self) -> None:
        cache = OrbitCache(self.__tmp_dir, "1.0.0")
        d3 = RootSystem.build(RootSystemLabel.parse("D3"))
        self.assertNotEqual(cache.path("B3", self.__system.weyl_group(), self.__base),
                            cache.path("B3", d3.weyl_group(), self.__base))
    def test_orbit_should_store_and_reload(self) -> None:
        cache = OrbitCache(self.__tmp_dir, "1.0.0")
        group = self.__system.weyl_group()
        computed = cache.orbit(self.__system.label(), group, self.__base)
        self.assertTrue(cache.path(self.__system.label(), group, self.__base).is_file())
        loaded = OrbitCache(self.__tmp_dir, "1.0.0").load(self.__system.label(), group, self.__base)
        self.assertEqual(loaded.elements(), computed.elements())
        for element in loaded:
            self.assertEqual(group.apply(loaded.word(element), self.__base), element)
    def test_load_should_miss_for_absent_files(self) -> None:
        cache = OrbitCache(self.__tmp_dir, "1.0.0")
        self.assertIsNone(cache.load(self.__system.label(), self.__system.weyl_group(), self.__base))
        self.assertEqual(cache.stale(), [ ])
    def test_load_should_reject_mismatched_versions(self) -> None:
        group = self.__system.weyl_group()
        old = OrbitCache(self.__tmp_dir, "0.9.0")
        path = old.store(self.__system.label(), group, group.orbit(self.__base))
        data = json.loads(path.read_text(encoding="utf-8"))
        data["version"] = "0.8.0"
        path.write_text(json.dumps(data), encoding="utf-8")
        self.assertIsNone(old.load(self.__system.label(), group, self.__base))
        self.assertEqual(old.stale(), [ path ])
    def test_load_should_reject_corrupt_files(self) -> None:
        cache = OrbitCache(self.__tmp_dir, "1.0.0")
        group = self.__system.weyl_group()
        path = cache.path(self.__system.label(), group, self.__base)
        path.write_text(json.dumps({ "label": "B3", "version": "1.0.0", "base": [ "1", "0", "0" ],
                                     "elements": [ [ "1", "0", "0" ] ], "words": [ ] }), encoding="utf-8")
        self.assertIsNone(cache.load(self.__system.label(), group, self.__base))
        self.assertEqual(len(cache.stale()), 1)
        self.assertEqual(len(cache.orbit(self.__system.label(), group, self.__base)), 6)
    def test_cache_version_should_fall_back(self) -> None:
        self.assertTrue(len(cache_version("0.0.0")) > 0)


if __name__ == "__main__":
  unittest.main()
