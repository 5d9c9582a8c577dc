# -*- coding: utf-8 -*-

# Trajstat: thermodynamics of quantum trajectories
# Copyright (C) 2025 The Trajstat Authors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

import argparse
import asyncio
import logging
import re
import sys
from locale import gettext as _
from typing import Callable, List, Optional, Sequence

from trajstat import APP_NAME, __version__
from trajstat.actions import ActionRegistry, CountingProvider, ModelProvider
from trajstat.actions import OutputProvider, RenewalProvider, ReportProvider
from trajstat.actions import SamplingProvider, ThermoProvider
from trajstat.errors import EXIT_IO, EXIT_OK, EXIT_VALIDATION, TrajstatError
from trajstat.model import model_hash
from trajstat.utils import ConfigManager, ExpressionParser

from .report_writer import ReportWriter
from .run_config import RunConfig

_logger = logging.getLogger(__name__)

# Arguments that are not command options
_COMMON = ("command", "model", "c", "workers", "tol", "out", "verbose")

# Option values that start with a minus sign followed by a number
NEGATIVE_VALUE = re.compile(r"^-[\d.]")


def _typed(method: Callable) -> Callable:
    """Wrap an expression parser method as an argparse type."""

    def convert(text: str):
        try:
            value = method(text)
        except (SyntaxError, ValueError) as e:
            raise argparse.ArgumentTypeError(str(e))

        return value.tolist() if hasattr(value, "tolist") else value

    convert.__name__ = method.__name__
    return convert


def _tolerance(text: str):
    key, separator, value = text.partition("=")

    if not separator or not key.strip():
        raise argparse.ArgumentTypeError(_("Expected key=value: %s") % text)

    return key.strip(), _typed(ExpressionParser().scalar)(value)


def _scheme(text: str) -> str:
    return text.replace("-", "_")


def _automatic(convert: Callable) -> Callable:
    """Argparse type accepting ``auto`` for a value chosen at run time."""

    def automatic(text: str):
        return None if text.strip().lower() == "auto" else convert(text)

    automatic.__name__ = convert.__name__
    return automatic


def attach_negative_values(argv: Sequence[str]) -> List[str]:
    """Glue values such as ``-0.5:0.5:21`` to the option before them.

    argparse only accepts plain negative numbers as option values.
    """

    tokens: List[str] = []

    for token in argv:
        previous = tokens[-1] if tokens else ""
        glue = previous.startswith("--") and "=" not in previous

        if glue and NEGATIVE_VALUE.match(token):
            tokens[-1] = f"{previous}={token}"
        else:
            tokens.append(token)

    return tokens


class Application:
    """Command line front end.

    Parses the arguments into a :class:`RunConfig`, invokes the action
    registered under the command name and writes its artifacts. Every
    failure is reported as a structured log line and mapped to an exit
    status.
    """

    def __init__(self) -> None:
        self._config = ConfigManager()
        self._registry = ActionRegistry()
        self._expressions = ExpressionParser()
        self._setup_actions()
        self._parser = self._build_parser()

    def _setup_actions(self) -> None:
        """Register every command provider."""

        self._registry.add_provider(ModelProvider())
        self._registry.add_provider(ThermoProvider())
        self._registry.add_provider(CountingProvider())
        self._registry.add_provider(SamplingProvider())
        self._registry.add_provider(OutputProvider())
        self._registry.add_provider(RenewalProvider())
        self._registry.add_provider(ReportProvider())

    def _build_parser(self) -> argparse.ArgumentParser:
        scalar = _typed(self._expressions.scalar)
        integer = _typed(self._expressions.integer)
        vector = _typed(self._expressions.vector)
        integers = _typed(self._expressions.integers)
        grid = _typed(self._expressions.grid)
        k_max = _automatic(integer)

        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("--workers", type=int, help=_("Worker pool size"))
        common.add_argument(
            "--tol", type=_tolerance, action="append", default=[],
            metavar="KEY=VALUE", help=_("Override a tolerance"),
        )
        common.add_argument("--c", type=vector, help=_("Spin counting field"))
        common.add_argument("--out", help=_("Output file or directory"))
        common.add_argument(
            "-v", "--verbose", action="count", default=0,
            help=_("Log more details"),
        )

        parser = argparse.ArgumentParser(prog=APP_NAME)
        parser.add_argument("--version", action="version", version=__version__)
        commands = parser.add_subparsers(dest="command", required=True)

        def command(name: str, helptext: str, needs_model: bool = True):
            sub = commands.add_parser(name, parents=[common], help=helptext)

            if needs_model:
                sub.add_argument("model", help=_("Model file or bundled name"))

            return sub

        command("validate", _("Validate a model file"))

        sub = command("potentials", _("Thermodynamic potentials on a grid"))
        sub.add_argument("--kind", choices=("x", "s"), default="s")
        fields = sub.add_mutually_exclusive_group(required=True)
        fields.add_argument("--grid", type=grid)
        fields.add_argument("--s-grid", type=grid)
        fields.add_argument("--x-grid", type=grid)

        sub = command("duality", _("Duality table on a counting field grid"))
        sub.add_argument("--s-grid", type=grid, default="-0.5:0.5:21")

        sub = command("counting", _("Counting distributions"))
        sub.add_argument("--tau", type=vector, required=True)
        sub.add_argument("--kmax", "--K-max", dest="K_max", type=k_max)
        sub.add_argument("--s-grid", type=grid)
        sub.add_argument("--jump-K", type=integer)
        sub.add_argument("--T-grid", type=grid)
        sub.add_argument("--laplace-x", type=scalar)

        sub = command("concentration", _("Concentration exponents"))
        sub.add_argument("--s", type=scalar, default=0.3)
        sub.add_argument("--K", type=integers, default="4,8,16,32")

        sub = command("sample", _("Sample quantum jump trajectories"))
        sub.add_argument(
            "--scheme", type=_scheme, choices=("fixed_time", "fixed_count"),
            default="fixed-time", metavar="{fixed-time,fixed-count}",
        )
        sub.add_argument("--tau", type=scalar)
        sub.add_argument("--K", type=integer)
        sub.add_argument("--n", type=integer, default=1000)
        sub.add_argument("--seed", type=integer, default=0)
        sub.add_argument("--field", type=scalar)
        sub.add_argument("--reject-dark", action="store_true")

        sub = command("reduced", _("Reduced output states"))
        sub.add_argument("--s", type=scalar, default=0.3)
        sub.add_argument("--tau0", type=scalar, default=1.0)
        sub.add_argument("--tau", type=vector, default="")
        sub.add_argument("--K", type=integers, default="")
        sub.add_argument("--nmax", dest="n_max", type=integer)
        sub.add_argument("--nodes", type=integer)

        sub = command("phase-check", _("Phase transformation checks"))
        sub.add_argument("--kind", choices=("P1", "P2"), default="P1")
        sub.add_argument("--phi", type=scalar, default=0.0)
        sub.add_argument("--s", type=scalar)
        sub.add_argument("--tau", type=scalar)
        sub.add_argument("--K", type=integer)
        sub.add_argument("--x", type=scalar)
        sub.add_argument("--tau0", type=scalar)
        sub.add_argument("--nmax", dest="n_max", type=integer)
        sub.add_argument("--nodes", type=integer)
        sub.add_argument("--pairs", dest="n_pairs", type=integer)
        sub.add_argument("--seed", type=integer)

        sub = command("renewal-demo", _("Renewal process walkthrough"), False)
        sub.add_argument("--omega1", type=scalar, default=1.0)
        sub.add_argument("--omega2", type=scalar, default=0.2)
        sub.add_argument("--kappa", type=scalar, default=1.0)
        sub.add_argument("--s", type=scalar, default=0.3)
        sub.add_argument("--n", type=integer, default=0)
        sub.add_argument("--seed", type=integer, default=0)

        sub = command("equivalence-report", _("Bundled equivalence report"))
        sub.add_argument("--s", type=scalar, default=0.3)
        sub.add_argument("--tau0", type=scalar, default=1.0)
        sub.add_argument("--phi", type=scalar, default=0.7)
        sub.add_argument("--tau", type=vector, default="3,6,11")
        sub.add_argument("--K", type=integers, default="4,8,16")
        sub.add_argument("--K-range", type=integers, default="4,8,16,32")
        sub.add_argument("--nmax", dest="n_max", type=integer)
        sub.add_argument("--nodes", type=integer)
        sub.add_argument("--n", type=integer, default=0)
        sub.add_argument("--seed", type=integer, default=0)

        return parser

    def parse(self, argv: Sequence[str]) -> tuple:
        """Parse arguments into a run configuration and a verbosity."""

        args = vars(self._parser.parse_args(attach_negative_values(argv)))
        options = {
            key: value for key, value in args.items() if key not in _COMMON
        }

        config = RunConfig(
            command=args["command"],
            model=args.get("model"),
            options=options,
            c=tuple(args.get("c") or ()),
            workers=args.get("workers"),
            tolerances=dict(args.get("tol") or ()),
            out=args.get("out"),
        )

        return config, args.get("verbose", 0)

    def _header(self, config: RunConfig) -> dict:
        return {
            "config": config.to_dict(),
            "model_hash": model_hash(config.load_model()) if config.model else None,
            "version": __version__,
        }

    def execute(self, config: RunConfig) -> List:
        """Run one command and write its artifacts."""

        for key, value in config.tolerances.items():
            self._config.override(key, value)

        header = self._header(config)
        result = asyncio.run(self._registry.invoke(config.command, config))

        return ReportWriter(header).write(result, config.out)

    def run(self, argv: Sequence[str]) -> int:
        """Run the command line tool and return its exit status."""

        try:
            config, verbose = self.parse(argv)
        except SystemExit as e:
            return EXIT_OK if not e.code else EXIT_VALIDATION

        if verbose:
            level = logging.INFO if verbose == 1 else logging.DEBUG
            logging.getLogger().setLevel(level)

        try:
            self.execute(config)
            return EXIT_OK
        except TrajstatError as e:
            self._log_failure(config, e)
            return e.exit_status
        except OSError as e:
            self._log_failure(config, e)
            return EXIT_IO
        except (KeyError, ValueError) as e:
            self._log_failure(config, e)
            return EXIT_VALIDATION
        finally:
            self._config.clear_overrides()

    def _log_failure(self, config: RunConfig, error: Exception) -> None:
        _logger.error(
            "Command failed",
            extra={
                "command": config.command,
                "error": type(error).__name__,
                "reason": str(error),
            },
        )


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point shared by ``python -m trajstat`` and the script."""

    return Application().run(sys.argv[1:] if argv is None else argv)
