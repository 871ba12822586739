##
# @file MinusculeVerifier.py
# @brief Minuscule Verifier Application Implementation
# @author Alexander Rothman <[gnomesort@megate.ch](mailto:gnomesort@megate.ch)>
# @date 2024
# @copyright AGPL-3.0-or-later
from argparse import ArgumentParser, Action, Namespace, RawDescriptionHelpFormatter
from datetime import datetime, timezone
from pathlib import Path
from typing import Mapping
import json
import os
import sys

from mako.template import Template

# i.e., from megatech.minuscule import *
from .. import *

##
# @brief The text summary template. It receives the reports grouped by family.
TEXT_SUMMARY = """\
minuscule-verifier ${version}
% for family, reports in groups.items():

${family or "general"}:
% for report in reports:
    [${str(report.status()).upper()}] ${report.check_id()}: ${report.anchor()}\\
% if timing:
 (${report.runtime_ms()} ms)\\
% endif

% endfor
% endfor

${totals["pass"]} passed, ${totals["fail"]} failed, ${totals["inconclusive"]} inconclusive
"""

##
# @brief A simple logger.
class Logger: #pragma: no cover
    ##
    # @brief Construct a Logger.
    # @param verbose Whether or not verbose outputs should be logged.
    def __init__(self, verbose: bool):
        self.__verbose = verbose
    ##
    # @brief Unconditionally print a message.
    # @param message The message to print.
    # @param **kwargs A list of keyword arguments that will get passed on during printing.
    def output(self, message: str, **kwargs) -> None:
        print(message, **kwargs)
    ##
    # @brief Print a verbose message.
    # @param message The message to print.
    # @param **kwargs A list of keyword arguments that will get passed on during printing.
    def output_verbose(self, message: str, **kwargs) -> None:
        if self.__verbose:
            print(message, flush=True, **kwargs)
    ##
    # @brief Format a RootSystem to a string and print it to verbose output.
    # @param system The RootSystem to print.
    # @param **kwargs A list of keyword arguments that will get passed on during printing.
    def output_system_verbose(self, system: RootSystem, **kwargs) -> None:
        self.output_verbose(f"SYSTEM: {system.label()}", **kwargs)
        self.output_verbose(f"\tROOTS: {len(system.roots())}", **kwargs)
        self.output_verbose(f"\tCOWEIGHTS: {', '.join(system.coweight_names()) or 'none'}", **kwargs)
    ##
    # @brief Format a VerifyReport to a string and print it to verbose output.
    # @param report The VerifyReport to print.
    # @param **kwargs A list of keyword arguments that will get passed on during printing.
    def output_report_verbose(self, report: VerifyReport, **kwargs) -> None:
        self.output_verbose(f"REPORT: {report.check_id()} {report.status()} ({report.runtime_ms()} ms)", **kwargs)

##
# @brief Resolved application settings.
# @details Values come from command line flags, then MINUSCULE_* environment variables, then a JSON configuration
#          file, then defaults.
class Configuration:
    ##
    # @brief The default settings.
    defaults = { "orbit_cap": DEFAULT_ORBIT_CAP, "group_cap": DEFAULT_GROUP_CAP, "max_degree": 8, "cache_dir": None,
                 "output": "json", "triangle_count": 100, "seed": 0, "timing": False }
    ##
    # @brief The environment variable that overrides each setting.
    environment = { "orbit_cap": "MINUSCULE_ORBIT_CAP", "group_cap": "MINUSCULE_GROUP_CAP",
                    "max_degree": "MINUSCULE_MAX_DEGREE", "cache_dir": "MINUSCULE_CACHE_DIR",
                    "output": "MINUSCULE_OUTPUT", "triangle_count": "MINUSCULE_TRIANGLE_COUNT",
                    "seed": "MINUSCULE_SEED", "timing": "MINUSCULE_TIMING" }
    ##
    # @brief Construct a Configuration.
    # @param values A dictionary of settings. Missing settings take their defaults. Defaults to None.
    # @throw ValueError If a setting is unknown or invalid.
    def __init__(self, values: dict = None):
        values = dict(values or { })
        unknown = sorted(set(values) - set(Configuration.defaults))
        if unknown:
            raise ValueError(f"\"{unknown[0]}\" is not a valid configuration setting.")
        settings = dict(Configuration.defaults)
        settings.update({ key: value for key, value in values.items() if value is not None })
        self.__orbit_cap = Configuration.__integer("orbit_cap", settings["orbit_cap"], 1)
        self.__group_cap = Configuration.__integer("group_cap", settings["group_cap"], 1)
        self.__max_degree = Configuration.__integer("max_degree", settings["max_degree"], 2)
        self.__triangle_count = Configuration.__integer("triangle_count", settings["triangle_count"], 0)
        self.__seed = Configuration.__integer("seed", settings["seed"], 0)
        self.__output = str(settings["output"]).strip().lower()
        if self.__output not in ("text", "json"):
            raise ValueError(f"\"{settings['output']}\" is not a valid output format. Use \"text\" or \"json\".")
        self.__cache_dir = Path(settings["cache_dir"]) if settings["cache_dir"] else None
        self.__timing = Configuration.__boolean("timing", settings["timing"])
    ### @cond
    @staticmethod
    def __integer(name: str, value, minimum: int) -> int:
        if isinstance(value, bool):
            raise ValueError(f"The setting \"{name}\" must be an integer, not \"{value}\".")
        elif isinstance(value, int):
            res = value
        else:
            try:
                res = int(str(value).strip(), 10)
            except ValueError:
                raise ValueError(f"The setting \"{name}\" must be an integer, not \"{value}\".")
        if res < minimum:
            raise ValueError(f"The setting \"{name}\" must be an integer of at least {minimum}, not \"{value}\".")
        return res
    @staticmethod
    def __boolean(name: str, value) -> bool:
        if isinstance(value, bool):
            return value
        text = str(value).strip().lower()
        if text in ("1", "true", "yes", "on"):
            return True
        elif text in ("0", "false", "no", "off", ""):
            return False
        raise ValueError(f"The setting \"{name}\" must be a boolean, not \"{value}\".")
    ### @endcond
    ##
    # @brief Resolve a Configuration from every source.
    # @param flags A dictionary of command line values. None means the flag was not given.
    # @param environment A mapping of environment variables. Defaults to os.environ.
    # @param config_path A path to a JSON configuration file. Defaults to None.
    # @return A Configuration.
    # @throw FileNotFoundError If config_path does not exist.
    # @throw OSError If config_path is not a regular file.
    # @throw ValueError If the configuration file is not a JSON object or a setting is invalid.
    @staticmethod
    def resolve(flags: dict, environment: Mapping = None, config_path: Path = None):
        environment = os.environ if environment is None else environment
        values = { }
        if config_path is not None:
            config_path = Path(config_path).absolute()
            if not config_path.exists():
                raise FileNotFoundError(f"The path {config_path} does not exist.")
            elif not config_path.is_file():
                raise OSError(f"The path {config_path} exists but is not a file.")
            with open(config_path, "r", encoding="utf-8") as infile:
                try:
                    data = json.load(infile)
                except json.JSONDecodeError as error:
                    raise ValueError(f"The configuration file \"{config_path}\" is not valid JSON: {error}")
            if not isinstance(data, dict):
                raise ValueError(f"The configuration file \"{config_path}\" must contain a JSON object.")
            values.update(data)
        for key, variable in Configuration.environment.items():
            if variable in environment:
                values[key] = environment[variable]
        values.update({ key: value for key, value in flags.items() if value is not None })
        return Configuration(values)
    def orbit_cap(self) -> int:
        return self.__orbit_cap
    def group_cap(self) -> int:
        return self.__group_cap
    def max_degree(self) -> int:
        return self.__max_degree
    def cache_dir(self) -> Path:
        return self.__cache_dir
    def output(self) -> str:
        return self.__output
    def triangle_count(self) -> int:
        return self.__triangle_count
    def seed(self) -> int:
        return self.__seed
    ##
    # @brief Determine whether or not runtimes are rendered.
    # @details Output without runtimes is reproducible byte for byte.
    # @return True if runtimes are included in output. Otherwise False.
    def timing(self) -> bool:
        return self.__timing
    def to_json(self) -> dict:
        return { "orbit_cap": self.__orbit_cap, "group_cap": self.__group_cap, "max_degree": self.__max_degree,
                 "cache_dir": str(self.__cache_dir) if self.__cache_dir else None, "output": self.__output,
                 "triangle_count": self.__triangle_count, "seed": self.__seed,
                 "timing": self.__timing }

##
# @brief An implementation of the minuscule-verifier application.
class MinusculeVerifier:
    ##
    # @brief The application version.
    version = "1.0.0"
    ##
    # @brief Construct a MinusculeVerifier.
    # @param configuration The resolved Configuration. If this is None then the defaults are used. Defaults to None.
    # @param verbose A flag indicating whether or not verbose output should be logged. Defaults to False.
    # @param quiet A flag indicating whether or not to suppress warning messages. Defaults to False.
    # @param output_path A Path indicating the location to write output to. If this is None then the application
    #                    writes output to stdout. Defaults to None.
    # @param template_path A Path to a Mako template used in place of the text summary. Defaults to None.
    # @param template_arguments An arbitrary list of strings passed to the template. Defaults to [ ].
    # @throw FileNotFoundError If the template path doesn't exist.
    # @throw OSError If the output path exists and is not a file, if the template path is not a file, or if the cache
    #                directory is not a directory.
    def __init__(self, configuration: Configuration = None, verbose: bool = False, quiet: bool = False,
                 output_path: Path = None, template_path: Path = None, template_arguments: list[str] = [ ]):
        self.__configuration = configuration or Configuration()
        self.__logger = Logger(verbose)
        self.__quiet = quiet
        self.__output_path = output_path
        if self.__output_path:
            self.__output_path = Path(self.__output_path).absolute()
            if self.__output_path.exists() and not self.__output_path.is_file():
                raise OSError(f"The path {self.__output_path} does not refer to a regular file.")
        self.__template_path = template_path
        if self.__template_path:
            self.__template_path = Path(self.__template_path).absolute()
            if not self.__template_path.exists():
                raise FileNotFoundError(f"The path {self.__template_path} does not exist.")
            elif not self.__template_path.is_file():
                raise OSError(f"The path {self.__template_path} exists but is not a file.")
        self.__template_arguments = template_arguments
        self.__cache = None
        if self.__configuration.cache_dir() is not None:
            self.__cache = OrbitCache(self.__configuration.cache_dir())
    def configuration(self) -> Configuration:
        return self.__configuration
    ### @cond
    def __warn(self, message: str) -> None:
        if not self.__quiet:
            self.__logger.output(f"WARN: {message}", file=sys.stderr)
    def __suite(self) -> VerificationSuite:
        return VerificationSuite(self.__configuration.orbit_cap(), self.__configuration.group_cap(),
                                 self.__configuration.max_degree(), self.__cache, self.__configuration.seed(),
                                 lambda message: self.__logger.output_verbose(message, file=sys.stderr))
    @staticmethod
    def __label(arguments: Namespace) -> RootSystemLabel:
        if arguments.family is None:
            raise ValueError("A root system family is required. Use \"--family\".")
        return RootSystemLabel(arguments.family, arguments.rank)
    def __system(self, arguments: Namespace) -> RootSystem:
        res = RootSystem.build(MinusculeVerifier.__label(arguments))
        self.__logger.output_system_verbose(res, file=sys.stderr)
        return res
    @staticmethod
    def __vector(system: RootSystem, value) -> Vector:
        if isinstance(value, Vector):
            if value.dimension() != system.ambient_dimension():
                raise ValueError(f"The vector \"{value}\" does not have dimension {system.ambient_dimension()}.")
            return value
        return system.coweight(value)[1]
    def __orbit(self, system: RootSystem, group: WeylGroup, base: Vector) -> Orbit:
        if self.__cache is not None:
            return self.__cache.orbit(system.label(), group, base, self.__configuration.orbit_cap())
        return group.orbit(base, self.__configuration.orbit_cap())
    def __rootsys(self, arguments: Namespace) -> list:
        system = self.__system(arguments)
        return [ system.to_json() ]
    def __orbit_command(self, arguments: Namespace) -> list:
        system = self.__system(arguments)
        if (arguments.vector is None) == (arguments.coweight is None):
            raise ValueError("Exactly one of \"--vector\" and \"--coweight\" is required.")
        base = MinusculeVerifier.__vector(system, arguments.vector if arguments.vector is not None else
                                          arguments.coweight)
        group = system.weyl_group()
        orbit = self.__orbit(system, group, base)
        self.__logger.output_verbose(f"ORBIT: {len(orbit)} elements", file=sys.stderr)
        res = { "label": str(system.label()), "size": len(orbit) }
        res.update(orbit.to_json())
        if arguments.partition_coweight is not None:
            name, coweight = system.coweight(arguments.partition_coweight)
            partition = group.stabilizer(coweight).partition(orbit.elements())
            res["partition"] = { "coweight": name, "sizes": list(partition.sizes()), "blocks": partition.to_json() }
        return [ res ]
    def __dominant(self, arguments: Namespace) -> list:
        system = self.__system(arguments)
        vector = MinusculeVerifier.__vector(system, arguments.vector)
        dominant, word = system.weyl_group().dominant(vector)
        return [ { "label": str(system.label()), "vector": vector.to_json(), "dominant": dominant.to_json(),
                   "word": word.to_json() } ]
    def __conjugate(self, arguments: Namespace) -> list:
        system = self.__system(arguments)
        vector = MinusculeVerifier.__vector(system, arguments.vector)
        other = MinusculeVerifier.__vector(system, arguments.other)
        group = system.weyl_group()
        if arguments.full_group and system.family() == RootSystemFamily.D:
            group = RootSystem.build(RootSystemLabel(RootSystemFamily.B, system.rank())).weyl_group()
        flag, word = group.conjugate(vector, other)
        return [ { "label": str(system.label()), "vector": vector.to_json(), "other": other.to_json(),
                   "conjugate": flag, "witness": word.to_json() if flag else None } ]
    def __verify(self, arguments: Namespace) -> list[VerifyReport]:
        suite = self.__suite()
        name = SUITE_ALIASES.get(arguments.SUITE, arguments.SUITE)
        if name == "all":
            labels = None
            if arguments.family is not None:
                labels = [ MinusculeVerifier.__label(arguments) ]
            return suite.acceptance(labels, self.__configuration.triangle_count())
        label = MinusculeVerifier.__label(arguments)
        if name == "construction":
            return suite.construction(label)
        elif name == "identities":
            return suite.identities(label)
        elif name == "orbits":
            return suite.orbit_structure(label)
        elif name == "fibers":
            exploratory = None
            if arguments.exploratory is not None:
                exploratory = MinusculeVerifier.__vector(suite.system(label), arguments.exploratory)
            return suite.fibers(label, exploratory)
        elif name == "generation":
            return suite.generation(label, arguments.strategy, arguments.coweight, arguments.group)
        return suite.triangles(label, self.__configuration.triangle_count(), self.__configuration.seed())
    def __triangle(self, arguments: Namespace) -> list[VerifyReport]:
        suite = self.__suite()
        label = MinusculeVerifier.__label(arguments)
        if (arguments.target is None) != (arguments.triangle is None):
            raise ValueError("The options \"--target\" and \"--triangle\" must be used together.")
        if arguments.target is None:
            count = self.__configuration.triangle_count() if arguments.count is None else arguments.count
            seed = self.__configuration.seed() if arguments.seed is None else arguments.seed
            return suite.triangles(label, count, seed)
        system = suite.system(label)
        target = Triangle(*(MinusculeVerifier.__vector(system, value) for value in arguments.target))
        source = Triangle(*(MinusculeVerifier.__vector(system, value) for value in arguments.triangle))
        return [ suite.triangle_report(label, target, source) ]
    def __render(self, reports: list[VerifyReport]) -> str:
        timing = self.__configuration.timing()
        groups = { }
        for report in reports:
            groups.setdefault(report.family(), [ ]).append(report)
        totals = { str(status): 0 for status in VerifyStatus }
        for report in reports:
            totals[str(report.status())] += 1
        if self.__template_path is not None:
            template = Template(filename=self.__template_path.as_posix())
            return template.render(reports=reports, groups=groups, totals=totals, timing=timing,
                                   buildtime=datetime.now(timezone.utc), arguments=self.__template_arguments)
        elif self.__configuration.output() == "text":
            return Template(text=TEXT_SUMMARY).render(reports=reports, groups=groups, totals=totals, timing=timing,
                                                      version=MinusculeVerifier.version)
        return "".join(report.to_json_line(timing) + "\n" for report in reports)
    @staticmethod
    def __format(results: list, output: str) -> str:
        if output == "text":
            return "".join(json.dumps(to_json_value(result), sort_keys=True, indent=2) + "\n" for result in results)
        return "".join(json.dumps(to_json_value(result), sort_keys=True, separators=(",", ":")) + "\n"
                       for result in results)
    def __write(self, text: str) -> None:
        if self.__output_path is not None:
            self.__logger.output_verbose(f"Writing output to \"{self.__output_path}\".", file=sys.stderr)
            with open(self.__output_path, "w", encoding="utf-8") as outfile:
                outfile.write(text)
        else:
            self.__logger.output_verbose("Writing output to standard output.", file=sys.stderr)
            sys.stdout.write(text)
    ### @endcond
    ##
    # @brief Run the application.
    # @param arguments The parsed command line. The "command" attribute selects the subcommand.
    # @return The exit code. 1 when any report failed. Otherwise 0.
    # @throw ValueError If the arguments are invalid.
    def run(self, arguments: Namespace) -> int:
        command = arguments.command
        if command in ("rootsys", "orbit", "dominant", "conjugate"):
            handlers = { "rootsys": self.__rootsys, "orbit": self.__orbit_command, "dominant": self.__dominant,
                         "conjugate": self.__conjugate }
            self.__write(MinusculeVerifier.__format(handlers[command](arguments), self.__configuration.output()))
            return 0
        elif command == "verify":
            reports = self.__verify(arguments)
        elif command == "triangle":
            reports = self.__triangle(arguments)
        else:
            raise ValueError(f"\"{command}\" is not a valid command.")
        for report in reports:
            self.__logger.output_report_verbose(report, file=sys.stderr)
            if report.status() == VerifyStatus.INCONCLUSIVE:
                self.__warn(f"The check \"{report.check_id()}\" is inconclusive.")
        if self.__cache is not None:
            for path in self.__cache.stale():
                self.__logger.output_verbose(f"The cache file \"{path}\" is stale and was recomputed.", file=sys.stderr)
        self.__write(self.__render(reports))
        return 1 if any(report.failed() for report in reports) else 0

### @cond
class RationalVectorStoreAction(Action): # pragma: no cover
    def __call__(self, parser, namespace, values, option_string=None):
        if isinstance(values, list):
            setattr(namespace, self.dest, [ RationalVectorStoreAction.parse(value) for value in values ])
        else:
            setattr(namespace, self.dest, RationalVectorStoreAction.parse(values))
    @staticmethod
    def parse(value: str):
        text = value.replace("\"", "").replace("\'", "").strip()
        if "," not in text and not text.lstrip("-+").replace("/", "").isdigit():
            return text
        return Vector([ part.strip() for part in text.split(",") if len(part.strip()) > 0 ])

class CommaSeparatedListStoreAction(Action): # pragma: no cover
    def __init__(self, option_strings, dest, nargs=None, **kwargs):
        if nargs is not None:
            raise ValueError("Lists must be packed in a single string.")
        super().__init__(option_strings, dest, **kwargs)
    def __call__(self, parser, namespace, values, option_string=None):
        res = [ ]
        for value in values.split(","):
            if len(value) > 0:
                res.append(value.replace("\"", "").replace("\'", ""))
        setattr(namespace, self.dest, res)

class IndentedDescriptionFormatter(RawDescriptionHelpFormatter): # pragma: no cover
    def _fill_text(self, text, width, indent) -> str:
        import textwrap
        res = [ ]
        offset = ""
        for line in text.splitlines():
            offset = "    " * (len(line) - len(line.lstrip()))
            res.append(textwrap.fill(line.strip(), width, initial_indent=offset, subsequent_indent=offset))
        return "\n".join(res)

def _system_parent() -> ArgumentParser:
    res = ArgumentParser(add_help=False)
    res.add_argument("--family", type=str, default=None, help="The root system family (A, B, C, D, E6, or E7).")
    res.add_argument("--rank", type=int, default=None,
                     help="The rank of a classical family. The exceptional families have a fixed rank.")
    return res
### @endcond

##
# @brief Build the command line parser.
# @return An ArgumentParser.
def build_parser() -> ArgumentParser:
    progepilog = """
vectors:
\tVectors are comma separated rationals in ambient coordinates (e.g., \"1/2,1/2,-1/2,-1/2\").
\tWherever a vector is expected, a minuscule coweight name or 1-based index may be given instead.
\tCoweight names:
\t\tA_n: a1, ..., an
\t\tB_n: b
\t\tC_n: c
\t\tD_n: b, c-prime, c
\t\tE6: b-plus, b-minus
\t\tE7: a

configuration:
\tSettings are read from flags, then MINUSCULE_* environment variables, then the \"--config\" JSON file.
\tMINUSCULE_ORBIT_CAP, MINUSCULE_GROUP_CAP, MINUSCULE_MAX_DEGREE, MINUSCULE_CACHE_DIR, MINUSCULE_OUTPUT,
\tMINUSCULE_TRIANGLE_COUNT, MINUSCULE_SEED, and MINUSCULE_TIMING are recognized.

templates:
\tTemplates passed to \"--template\" receive six parameters.
\treports:
\t\tA list of VerifyReport objects.
\tgroups:
\t\tA dictionary mapping root system labels to lists of VerifyReport objects.
\ttotals:
\t\tA dictionary mapping status names to counts.
\ttiming:
\t\tA flag indicating whether or not runtimes should be rendered.
\tbuildtime:
\t\tA datetime object representing the render time in UTC.
\targuments:
\t\tA list of strings containing any values passed to the \"--template-arguments\" option.

exit status:
\t0 when every report passed or was inconclusive, 1 when any report failed, and 2 on usage errors.
"""
    res = ArgumentParser(description="Verifies minuscule coweight invariant theory with exact arithmetic.",
                         epilog=progepilog, formatter_class=IndentedDescriptionFormatter, add_help=False)
    res.add_argument("-h", "--help", action="help", help="Display this help message and exit.")
    res.add_argument("-v", "--version", action="version", version=f"%(prog)s {MinusculeVerifier.version}",
                     help="Display version information and exit.")
    res.add_argument("-V", "--verbose", action="store_true", default=False, help="Display verbose output.")
    res.add_argument("-q", "--quiet", action="store_true", default=False,
                     help="Disable warning messages. This has no effect on verbose output.")
    res.add_argument("-o", "--output-file", type=Path, default=None,
                     help="A path to an output file. If you don't provide an output file, the application writes "
                          "to standard output.")
    res.add_argument("--config", type=Path, default=None, help="A path to a JSON configuration file.")
    res.add_argument("--orbit-cap", type=int, default=None, help="The largest permitted orbit. Defaults to 100000.")
    res.add_argument("--group-cap", type=int, default=None,
                     help="The largest permitted group enumeration. Defaults to 100000.")
    res.add_argument("--max-degree", type=int, default=None,
                     help="The largest degree expanded symbolically. This must be at least 2. Defaults to 8.")
    res.add_argument("--cache-dir", type=Path, default=None, help="A directory for cached orbits.")
    res.add_argument("--output", type=str, choices=[ "text", "json" ], default=None,
                     help="The output format. Defaults to \"json\".")
    res.add_argument("--timing", action="store_const", const=True, default=None,
                     help="Include runtimes. Without this flag identical invocations produce identical output.")
    res.add_argument("--template", type=Path, default=None,
                     help="A path to a Mako template used to render reports instead of the text summary.")
    res.add_argument("-t", "--template-arguments", action=CommaSeparatedListStoreAction, default=[ ],
                     help="A comma separated list of arguments that will be passed through to the template.")
    parent = _system_parent()
    commands = res.add_subparsers(dest="command", required=True)
    rootsys = commands.add_parser("rootsys", parents=[ parent ], help="Describe a root system.")
    rootsys.add_argument("ACTION", choices=[ "info" ])
    orbit = commands.add_parser("orbit", parents=[ parent ], help="Compute the Weyl orbit of a vector.")
    orbit.add_argument("--vector", action=RationalVectorStoreAction, default=None, help="The base vector.")
    orbit.add_argument("--coweight", type=str, default=None, help="A minuscule coweight to use as the base.")
    orbit.add_argument("--partition-coweight", type=str, default=None,
                       help="Partition the orbit into orbits of the stabilizer of this coweight.")
    dominant = commands.add_parser("dominant", parents=[ parent ], help="Find the dominant representative.")
    dominant.add_argument("--vector", action=RationalVectorStoreAction, required=True, help="The vector.")
    conjugate = commands.add_parser("conjugate", parents=[ parent ], help="Decide Weyl conjugacy with a witness.")
    conjugate.add_argument("--vector", action=RationalVectorStoreAction, required=True, help="The target vector.")
    conjugate.add_argument("--other", action=RationalVectorStoreAction, required=True, help="The source vector.")
    conjugate.add_argument("--full-group", action="store_true", default=False,
                           help="Use W(B_n) for D_n. Other families already use their full Weyl group.")
    verify = commands.add_parser("verify", parents=[ parent ], help="Run verification suites.")
    verify.add_argument("SUITE", choices=list(SUITE_NAMES) + list(SUITE_ALIASES) + [ "all" ])
    verify.add_argument("--coweight", type=str, default=None, help="Restrict generation to one coweight.")
    verify.add_argument("--strategy", type=str, choices=[ "C", "F", "c", "f" ], default="C",
                        help="The generation strategy: \"C\" for the chain certificate or \"F\" for filtered "
                             "dimensions. Defaults to \"C\".")
    verify.add_argument("--group", type=str, choices=[ "W", "W0" ], default=None,
                        help="The acting group for generation. \"W0\" is only valid for D_n.")
    verify.add_argument("--exploratory", action=RationalVectorStoreAction, default=None,
                        help="A non-minuscule dominant vector tested by the fibers suite.")
    triangle = commands.add_parser("triangle", parents=[ parent ], help="Find triangle witnesses.")
    triangle.add_argument("ACTION", choices=[ "witness" ])
    triangle.add_argument("--count", type=int, default=None, help="The number of random trials per coweight.")
    triangle.add_argument("--seed", type=int, default=None, help="The seed for random trials.")
    triangle.add_argument("--target", action=RationalVectorStoreAction, nargs=2, default=None,
                          help="The sides a and b of the target triangle. a must be minuscule.")
    triangle.add_argument("--triangle", action=RationalVectorStoreAction, nargs=2, default=None,
                          help="The sides a' and b' of the source triangle.")
    return res

##
# @brief Parse a command line and run the application.
# @param argv The command line arguments without the program name.
# @param environment A mapping of environment variables. Defaults to os.environ.
# @return The exit code. 2 when the arguments are invalid.
def run(argv: list[str], environment: Mapping = None) -> int:
    parser = build_parser()
    arguments = parser.parse_args(argv)
    flags = { "orbit_cap": arguments.orbit_cap, "group_cap": arguments.group_cap, "max_degree": arguments.max_degree,
              "cache_dir": arguments.cache_dir, "output": arguments.output, "timing": arguments.timing }
    try:
        configuration = Configuration.resolve(flags, environment, arguments.config)
        app = MinusculeVerifier(configuration, arguments.verbose, arguments.quiet, arguments.output_file,
                                arguments.template, arguments.template_arguments)
        return app.run(arguments)
    except ValueError as error:
        print(f"ERROR: {error}", file=sys.stderr)
        return 2

### @cond
def main() -> None: # pragma: no cover
    sys.exit(run(sys.argv[1:]))

if __name__ == "__main__": # pragma: no cover
    main()
### @endcond
__all__ = [ "TEXT_SUMMARY", "Configuration", "MinusculeVerifier", "build_parser", "run", "main" ]
