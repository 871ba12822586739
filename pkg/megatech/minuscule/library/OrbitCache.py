##
# @file OrbitCache.py
# @brief On-disk Orbit Cache
# @author Alexander Rothman <[gnomesort@megate.ch](mailto:gnomesort@megate.ch)>
# @date 2024
# @copyright AGPL-3.0-or-later
import hashlib
import json
import sys
from pathlib import Path

if sys.version_info >= (3, 10):
    from importlib.metadata import version as package_version, PackageNotFoundError
else: # pragma: no cover
    from importlib_metadata import version as package_version, PackageNotFoundError

from .ExactArithmetic import Vector
from .WeylGroup import DEFAULT_ORBIT_CAP, WeylWord, WeylGroup, Orbit

##
# @brief The distribution name used to look up the cache version.
DISTRIBUTION_NAME = "megatech-minuscule-tools"

##
# @brief Determine the version stamped into cache files.
# @param fallback The version to use when the distribution is not installed. Defaults to "1.0.0".
# @return A version string.
def cache_version(fallback: str = "1.0.0") -> str:
    try:
        return package_version(DISTRIBUTION_NAME)
    except PackageNotFoundError:
        return fallback

##
# @brief A directory of JSON orbit files.
# @details Each file holds { label, base, elements, words, version }. The file name is
#          "{family}-{rank}-{sha256}-{version}.json" where the digest covers the base vector and the generators of the
#          acting group. A file is only used when its label and version match the request.
class OrbitCache:
    ##
    # @brief Construct an OrbitCache.
    # @param directory The cache directory. It is created if it does not exist.
    # @param version The version to stamp into files. If this is None then cache_version() is used. Defaults to None.
    # @throw OSError If the path exists and is not a directory.
    def __init__(self, directory: Path, version: str = None):
        self.__directory = Path(directory).absolute()
        if self.__directory.exists() and not self.__directory.is_dir():
            raise OSError(f"The path {self.__directory} exists but is not a directory.")
        self.__directory.mkdir(parents=True, exist_ok=True)
        self.__version = version or cache_version()
        self.__stale = [ ]
    def directory(self) -> Path:
        return self.__directory
    def version(self) -> str:
        return self.__version
    ##
    # @brief Retrieve the paths of files that were rejected because they did not match.
    # @return A list of Paths.
    def stale(self) -> list[Path]:
        return list(self.__stale)
    ##
    # @brief Compute the cache path for an orbit.
    # @param label The root system label, such as "E7".
    # @param group The acting WeylGroup.
    # @param base The base Vector.
    # @return A Path inside the cache directory.
    def path(self, label, group: WeylGroup, base: Vector) -> Path:
        text = str(label)
        family = text.rstrip("0123456789") or text
        rank = text[len(family):] or "0"
        if family == "E":
            family, rank = text, text[1:]
        key = json.dumps({ "base": base.to_json(), "generators": [ generator.to_json()
                                                                   for generator in group.generators() ] },
                         sort_keys=True)
        digest = hashlib.sha256(key.encode("utf-8")).hexdigest()
        return self.__directory / f"{family}-{rank}-{digest}-{self.__version}.json"
    ##
    # @brief Load a cached orbit.
    # @param label The root system label.
    # @param group The acting WeylGroup.
    # @param base The base Vector.
    # @return An Orbit, or None if there is no matching file.
    def load(self, label, group: WeylGroup, base: Vector) -> Orbit:
        path = self.path(label, group, base)
        if not path.exists():
            return None
        if not path.is_file():
            raise OSError(f"The path {path} does not refer to a regular file.")
        try:
            with open(path, "r", encoding="utf-8") as infile:
                data = json.load(infile)
            if data.get("label") != str(label) or data.get("version") != self.__version:
                self.__stale.append(path)
                return None
            elements = [ Vector.from_json(element) for element in data["elements"] ]
            words = [ WeylWord.from_json(word) for word in data["words"] ]
            if Vector.from_json(data["base"]) != base or len(elements) != len(words):
                self.__stale.append(path)
                return None
        except (KeyError, TypeError, ValueError):
            self.__stale.append(path)
            return None
        return Orbit(base, dict(zip(elements, words)))
    ##
    # @brief Store an orbit.
    # @param label The root system label.
    # @param group The acting WeylGroup.
    # @param orbit The Orbit to store.
    # @return The Path that was written.
    def store(self, label, group: WeylGroup, orbit: Orbit) -> Path:
        path = self.path(label, group, orbit.base())
        data = orbit.to_json()
        data["label"] = str(label)
        data["version"] = self.__version
        with open(path, "w", encoding="utf-8") as outfile:
            json.dump(data, outfile, sort_keys=True)
        return path
    ##
    # @brief Retrieve an orbit from the cache, computing and storing it when it is missing.
    # @param label The root system label.
    # @param group The acting WeylGroup.
    # @param base The base Vector.
    # @param cap The largest permitted orbit. Defaults to DEFAULT_ORBIT_CAP.
    # @return An Orbit.
    # @throw OverflowError If the orbit has to be computed and exceeds cap.
    def orbit(self, label, group: WeylGroup, base: Vector, cap: int = DEFAULT_ORBIT_CAP) -> Orbit:
        res = self.load(label, group, base)
        if res is None:
            res = group.orbit(base, cap)
            self.store(label, group, res)
        return res

__all__ = [ "DISTRIBUTION_NAME", "cache_version", "OrbitCache" ]
