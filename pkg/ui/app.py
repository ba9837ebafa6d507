import argparse
import logging
import sys
from dataclasses import replace

from logic.config import CONFIG_KEYS, build_run_config, load_config, save_config
from logic.dynamics import TimeUnit
from logic.errors import ConfigError, InvariantViolation, SimulationError
from ui.commands import COMMANDS

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INVARIANT = 3

# flag dest -> RunConfig field
OVERRIDE_FLAGS = {
    "omega": "omega",
    "gamma": "gamma",
    "epsilon": "epsilon",
    "initial": "initial",
    "tmax": "t_max",
    "steps": "steps",
    "time_unit": "time_unit",
    "lam": "lam",
    "molecule": "molecule",
}


def setup_logging(level="WARNING"):
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True,
    )


def common_arguments():
    common = argparse.ArgumentParser(add_help=False)
    group = common.add_argument_group("model and run")
    group.add_argument("--omega", type=float, help="harmonic frequency (cm^-1)")
    group.add_argument("--gamma", type=float, help="anharmonicity (cm^-1)")
    group.add_argument("--epsilon", type=float, help="inter-bond coupling (cm^-1)")
    group.add_argument("--molecule", help="parameter preset from logic/data/config.json")
    group.add_argument("--initial", help='initial state: "n,m" or "amps:N:re,im;re,im;..."')
    group.add_argument("--tmax", type=float, help="end of the time grid")
    group.add_argument("--steps", type=int, help="number of grid points, t=0 included")
    group.add_argument("--time-unit", choices=[u.value for u in TimeUnit],
                       help="ps, or phase (energy in cm^-1 times t gives radians)")
    group.add_argument("--lambda", dest="lam", type=float, help="Duan scale (default 1)")

    io = common.add_argument_group("input/output")
    io.add_argument("--config", help="config file (.json or key=value lines)")
    io.add_argument("--save-config", metavar="PATH", help="write the resolved run config as JSON")
    io.add_argument("--out", help="output path (default stdout)")
    io.add_argument("--log-level", default="WARNING",
                    choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    return common


class App:
    def __init__(self):
        self.parser = argparse.ArgumentParser(
            prog="localmode",
            description="Entanglement dynamics of two coupled anharmonic C-H stretches.",
        )
        self._create_commands()

    # ---------- Commands ----------
    def _create_commands(self):
        common = common_arguments()
        subparsers = self.parser.add_subparsers(dest="command", metavar="command", required=True)
        self.commands = {}
        for command_cls in COMMANDS:
            command = command_cls()
            sub = subparsers.add_parser(command.name, help=command.help, parents=[common])
            command.add_arguments(sub)
            self.commands[command.name] = command

    # ---------- Config ----------
    def _run_config(self, args):
        file_values = load_config(args.config) if args.config else {}
        if args.config and not file_values:
            raise ConfigError(f"config file {args.config!r} is missing or empty")
        overrides = {field: getattr(args, dest) for dest, field in OVERRIDE_FLAGS.items()}
        cfg = build_run_config(file_values, overrides)
        explicit = {CONFIG_KEYS[k] for k in file_values}
        explicit |= {k for k, v in overrides.items() if v is not None}
        return replace(cfg, extra={"explicit": frozenset(explicit)})

    # ---------- Run ----------
    def run(self, argv=None):
        try:
            args = self.parser.parse_args(argv)
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else EXIT_USAGE
        setup_logging(args.log_level)

        try:
            cfg = self._run_config(args)
            if args.save_config:
                save_config(cfg.get_state(), args.save_config)
                logger.info("saved run config to %s", args.save_config)
            return self.commands[args.command].run(cfg, args)
        except InvariantViolation as e:
            logger.error("%s", e)
            print(f"error: {e}", file=sys.stderr)
            return EXIT_INVARIANT
        except (ConfigError, SimulationError) as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_USAGE
        except OSError as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_USAGE
