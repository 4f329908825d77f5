# -*- coding: utf-8 -*-

import argparse
import logging
import sys
from contextlib import ExitStack
from math import isfinite
from multiprocessing import freeze_support

from qubitherm import __version__
from qubitherm.logger import DEFAULT_LOG_FILE, setup_logging
from qubitherm.meta import QubithermError
from qubitherm.models import model_names
from qubitherm.sweep import (
    PRESETS,
    SELF_CHECK_TOL,
    SweepSpec,
    SweepSpecError,
    concurrence_point,
    critical_temperature_table,
    sweep_temperature,
    write_csv,
)

logger = logging.getLogger("qubitherm")

DESCRIPTION = """qubitherm computes the thermal entanglement of two-qubit spin models,
the anisotropic XXZ model and the Heisenberg model with Dzyaloshinski-Moriya
interaction, from closed-form expressions and by exact diagonalization.

Results are written as CSV on standard output. """

EPILOG = """Parameter grids are comma-separated lists without spaces, e.g.
--delta 0,0.5,1. Temperatures are in units of J."""

CONCURRENCE_HELP = """Concurrence at a single temperature, from closed forms and numerically."""

SWEEP_HELP = """Concurrence over a temperature grid, one column per parameter value."""

TC_HELP = """Critical temperatures over a grid of anisotropy parameters."""

# Flags whose values may start with a minus sign
NUMERIC_FLAGS = ("--delta", "--D", "--Dvec", "--J", "--T", "--tmin", "--tmax")
NUMERIC_START = set("0123456789.")


def grid(value):
    """ Parse a comma-separated list of finite numbers. """
    try:
        values = tuple(float(v) for v in value.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid grid: {value!r}")
    if not all(isfinite(v) for v in values):
        raise argparse.ArgumentTypeError(f"grid values must be finite: {value!r}")
    return values


def vector(value):
    """ Parse a 3-vector x,y,z. """
    values = grid(value)
    if len(values) != 3:
        raise argparse.ArgumentTypeError(f"expected 3 components, got {value!r}")
    return values


# Flags shared by all sub-commands
common = argparse.ArgumentParser(add_help=False)
common.add_argument(
    "--model", choices=model_names(), default=None, help="Spin model. Default is xxz."
)
common.add_argument("--J", type=float, default=None, help="Exchange constant. Default is 1.")
common.add_argument("--delta", type=grid, default=None, help="Anisotropy, scalar or grid.")
common.add_argument("--D", type=grid, default=None, help="DM coupling, scalar or grid.")
common.add_argument(
    "--Dvec", type=vector, default=None, help="DM vector x,y,z of the general model."
)
common.add_argument("--out", default=None, help="Output file. Default is standard output.")
common.add_argument(
    "--processes", type=int, default=1, help="Number of processes evaluating the grid."
)

verbosity = common.add_mutually_exclusive_group()
verbosity.add_argument(
    "-q", "--quiet", dest="level", action="store_const", const=logging.ERROR,
    help="Only report errors.",
)
verbosity.add_argument(
    "--verbose", dest="level", action="store_const", const=logging.INFO,
    help="Report progress.",
)
verbosity.add_argument(
    "--debug", dest="level", action="store_const", const=logging.DEBUG,
    help="Report everything.",
)
common.add_argument(
    "--log-file", nargs="?", const=DEFAULT_LOG_FILE, default=None,
    help=f"Also log to a file. Default location is {DEFAULT_LOG_FILE}.",
)

parser = argparse.ArgumentParser(prog="qubitherm", description=DESCRIPTION, epilog=EPILOG)
parser.add_argument("-v", "--version", action="version", version=__version__)

subparsers = parser.add_subparsers(
    title="Subcommands", help="Available sub-commands", dest="subcmd"
)

concurrence_parser = subparsers.add_parser(
    "concurrence", parents=[common], help=CONCURRENCE_HELP
)
concurrence_parser.add_argument("--T", type=float, required=True, help="Temperature.")

sweep_parser = subparsers.add_parser("sweep", parents=[common], help=SWEEP_HELP)
sweep_parser.add_argument("--tmin", type=float, default=None, help="Lowest temperature.")
sweep_parser.add_argument("--tmax", type=float, default=None, help="Highest temperature.")
sweep_parser.add_argument("--steps", type=int, default=None, help="Number of temperatures.")
sweep_parser.add_argument(
    "--preset", choices=("fig2a", "fig2b"), default=None,
    help="Parameters of the standard concurrence-versus-temperature curves.",
)

for subparser, default_method in [(concurrence_parser, "both"), (sweep_parser, "closed")]:
    subparser.add_argument(
        "--method", choices=("closed", "numeric", "both"), default=None,
        help=f"Evaluation method. Default is {default_method}.",
    )
    subparser.add_argument(
        "--self-check", action="store_true",
        help=f"Fail if closed and numeric concurrences differ by more than {SELF_CHECK_TOL}.",
    )
    subparser.set_defaults(default_method=default_method)

tc_parser = subparsers.add_parser("tc", parents=[common], help=TC_HELP)
tc_parser.add_argument(
    "--sign", choices=("afm", "fm", "both"), default=None,
    help="Sign of J for the xxz model. Default is both.",
)
tc_parser.add_argument(
    "--preset", choices=("fig1",), default=None,
    help="Parameters of the critical-temperature phase diagram.",
)


def apply_preset(args):
    """ Fill the arguments that were not given on the command line from a preset. """
    preset = getattr(args, "preset", None)
    if preset is None:
        return
    for key, value in PRESETS[preset].items():
        if key in ("command", "note"):
            continue
        if getattr(args, key, None) is None:
            setattr(args, key, value)
    note = PRESETS[preset].get("note")
    args.preset_note = preset if note is None else f"{preset} ({note})"


def resolve_method(args, subparser):
    method = args.method or args.default_method
    if args.self_check:
        if args.method is None:
            method = "both"
        elif method != "both":
            subparser.error("--self-check requires --method both")
    return method


def build_spec(args, temperatures=None, method="closed"):
    kwargs = dict(delta=args.delta, D=args.D, Dvec=args.Dvec, method=method)
    if temperatures is not None:
        return SweepSpec(args.model, args.J, temperatures, **kwargs)
    return SweepSpec.from_range(args.model, args.J, args.tmin, args.tmax, args.steps, **kwargs)


def tabulate(args):
    """ Compute the table of a sub-command. """
    if args.subcmd == "concurrence":
        spec = build_spec(args, [args.T], resolve_method(args, concurrence_parser))
        return concurrence_point(spec)

    if args.subcmd == "sweep":
        if None in (args.tmin, args.tmax, args.steps):
            sweep_parser.error("--tmin, --tmax and --steps are required without --preset")
        spec = build_spec(args, method=resolve_method(args, sweep_parser))
        return sweep_temperature(spec, processes=args.processes)

    if args.model == "general":
        tc_parser.error("critical temperatures are not available for the general model")
    if args.Dvec is not None or (args.D if args.model == "xxz" else args.delta) is not None:
        tc_parser.error(f"the grid of the {args.model} model is given by --delta (xxz) or --D (dm)")
    values = args.D if args.model == "dm" else args.delta
    return critical_temperature_table(
        args.model,
        values if values is not None else (0.0,),
        J=args.J,
        sign=args.sign or "both",
        processes=args.processes,
    )


def self_check(table):
    """ Returns the exit code of the comparison between closed and numeric concurrences. """
    if table.max_difference is None:
        return 0
    logger.info(f"Largest difference between methods: {table.max_difference:.3e}")
    if table.max_difference > SELF_CHECK_TOL:
        logger.error(
            f"Self-check failed: closed and numeric concurrences differ by {table.max_difference:.3e}"
        )
        return 1
    return 0


def bind_negative_values(argv):
    """
    Join numeric values that start with a minus sign to the preceding flag, e.g.
    ``--delta -1,0,1`` becomes ``--delta=-1,0,1``. Otherwise, argparse mistakes
    such values for flags.
    """
    argv, bound = list(argv), list()
    while argv:
        arg = argv.pop(0)
        if (
            arg in NUMERIC_FLAGS
            and argv
            and argv[0][:1] == "-"
            and argv[0][1:2] in NUMERIC_START
        ):
            arg = f"{arg}={argv.pop(0)}"
        bound.append(arg)
    return bound


def main(argv=None):
    # This is to support frozen executables, as described here:
    #   https://docs.python.org/3/library/multiprocessing.html#multiprocessing.freeze_support
    freeze_support()

    argv = sys.argv[1:] if argv is None else argv
    args = parser.parse_args(bind_negative_values(argv))
    if args.subcmd is None:
        parser.error("a sub-command is required")

    setup_logging(level=args.level or logging.WARNING, log_file=args.log_file)

    apply_preset(args)
    args.model = args.model or "xxz"
    args.J = 1.0 if args.J is None else args.J
    subparser = subparsers.choices[args.subcmd]

    try:
        table = tabulate(args)
        if hasattr(args, "preset_note"):
            table.metadata.append(("preset", args.preset_note))

        # The output file is only opened once the table is complete
        with ExitStack() as stack:
            stream = sys.stdout
            if args.out is not None:
                stream = stack.enter_context(
                    open(args.out, "w", newline="", encoding="utf-8")
                )
            write_csv(stream, table)
    except SweepSpecError as e:
        subparser.error(str(e))
    except QubithermError as e:
        print(f"qubitherm: error: {e}", file=sys.stderr)
        sys.exit(1)
    except OSError as e:
        print(f"qubitherm: error: {e}", file=sys.stderr)
        sys.exit(1)

    sys.exit(self_check(table) if getattr(args, "self_check", False) else 0)


if __name__ == "__main__":
    main()
