"""Command line interface: ``gsqgpatch solve|check|sigma``."""
import argparse
import json
import logging
import os
import sys

import gsqgpatch

logger = logging.getLogger(__name__)

EXIT_CODES = {
    "complete": 0,
    "config": 2,
    "partial": 3,
    "solve": 4,
    "check": 5,
}
SOLVE_ERRORS = (
    gsqgpatch.NewtonError,
    gsqgpatch.JacobianProbeError,
    gsqgpatch.QuadratureConvergenceError,
    gsqgpatch.DegenerateBoundaryError,
    gsqgpatch.SingularBlockError,
)
OVERRIDES = (
    # (flag, configuration key, type)
    ("--mode", "mode", str),
    ("--alpha", "alpha", float),
    ("--b1", "b1", float),
    ("--b2", "b2", float),
    ("--gamma1", "gamma1", float),
    ("--gamma2", "gamma2", float),
    ("--d", "d", float),
    ("--order", "order", int),
    ("--grid-size", "grid_size", int),
    ("--tol", "tol", float),
    ("--max-iters", "max_iters", int),
    ("--damping", "damping", float),
    ("--scheme", "scheme", str),
    ("--output", "output", str),
)
_RECORD_FIELDS = set(vars(logging.LogRecord("", 0, "", 0, "", (), None)))|{
    "message", "asctime"}


class StructuredFormatter(logging.Formatter):
    """Format each record as one JSON object, ``extra`` fields included."""

    def format(self, record):
        payload = {
            "time": self.formatTime(record),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
        }
        payload.update({key: value for key, value in vars(record).items()
                        if key not in _RECORD_FIELDS})
        if record.exc_info:
            payload["exception"] = self.formatException(record.exc_info)
        return json.dumps(payload, default=str)


def _configure_logging(level, log_format="text", log_path=None):
    handlers = [logging.StreamHandler(stream=sys.stderr)]
    if log_path is not None:
        os.makedirs(os.path.dirname(log_path) or ".", exist_ok=True)
        handlers.append(logging.FileHandler(log_path, mode="a", encoding="utf-8"))
    if log_format == "json":
        formatter = StructuredFormatter()
    else:
        formatter = logging.Formatter("%(asctime)s %(levelname)s %(name)s %(message)s")
    for handler in handlers:
        handler.setFormatter(formatter)
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.INFO),
        handlers=handlers,
        force=True,
    )


def _eps_list(text):
    try:
        return [float(value) for value in text.split(",") if value.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            "comma separated numbers expected; found %r" % text)


def parse_args(argv=None):
    """Parse command line arguments."""
    parser = argparse.ArgumentParser(
        prog="gsqgpatch",
        description="Co-rotating and traveling vortex-patch pairs for generalized SQG")
    parser.add_argument("--log-level", default="info",
                        choices=("debug", "info", "warning", "error"))
    parser.add_argument("--log-format", default="text", choices=("text", "json"),
                        help="json writes one structured record per line")
    commands = parser.add_subparsers(dest="command", required=True)

    solve = commands.add_parser("solve", help="continue a branch from eps = 0")
    solve.add_argument("--config", dest="config_path",
                       help="JSON run configuration; defaults apply without it")
    solve.add_argument("--eps", dest="eps_schedule", type=_eps_list,
                       help="comma separated eps schedule, starting at 0")
    for flag, key, kind in OVERRIDES:
        solve.add_argument(flag, dest=key, type=kind)

    check = commands.add_parser("check", help="re-run diagnostics on a saved branch")
    check.add_argument("branch", help="branch JSON written by solve")
    check.add_argument("--scheme", default="spectral",
                       help="quadrature scheme for recomputed residuals")
    check.add_argument("--report", help="write the report here instead of stdout")

    sigma = commands.add_parser("sigma", help="print the multipliers sigma_j")
    sigma.add_argument("--alpha", type=float, required=True)
    sigma.add_argument("--order", type=int, default=16)
    sigma.add_argument("--normalization", default="contour",
                       choices=sorted(gsqgpatch.NORMALIZATIONS))
    return parser.parse_args(argv)


def _write_convergence_log(branch, path):
    with open(path, "w", encoding="utf-8") as dst:
        dst.write("%-12s %9s %22s\n" % ("eps", "iteration", "residual"))
        for entry in branch.entries:
            for iteration, norm in enumerate(entry.diagnostics.history):
                dst.write("%-12.6g %9d %22.15e\n" % (entry.eps, iteration, norm))


def _write_outputs(branch, config):
    output = config.output
    os.makedirs(output, exist_ok=True)
    schedule = config.eps_schedule
    if config.branch_json:
        gsqgpatch.save_branch(branch, os.path.join(
            output, gsqgpatch.branch_name(config.mode, config.alpha, schedule)))
    if config.boundary_csv:
        grid = gsqgpatch.CollocationGrid(config.grid_size, config.order)
        for entry in branch.entries:
            gsqgpatch.write_boundary_csv(
                entry.state, branch.geometry.with_eps(entry.eps), grid,
                os.path.join(output, gsqgpatch.artifact_name(
                    config.mode, config.alpha, entry.eps, "csv")))
    if config.diagnostics_json:
        report, _ = gsqgpatch.branch_report(branch)
        path = os.path.join(output, gsqgpatch.branch_name(
            config.mode, config.alpha, schedule, "diagnostics.json"))
        with open(path, "w", encoding="utf-8") as dst:
            json.dump(report, dst, indent=2, sort_keys=True)
    if config.convergence_log:
        _write_convergence_log(branch, os.path.join(output, "convergence.log"))


def run(config):
    """
    Continue the configured branch and write the requested outputs.

    Args:
        config (gsqgpatch.RunConfig):
            Validated run configuration.

    Returns:
        (int):
            0 for a complete branch, 3 if continuation stalled, 4 if solving
            failed otherwise.

    """
    try:
        branch = gsqgpatch.continue_branch(
            config.geometry(), config.mode, config.solver_config())
    except SOLVE_ERRORS as err:
        logger.error("solve failed: %s", err, extra={"exit_code": EXIT_CODES["solve"]})
        return EXIT_CODES["solve"]
    _write_outputs(branch, config)
    if branch.complete:
        logger.info("branch complete with %d entries", len(branch.entries),
                    extra={"exit_code": EXIT_CODES["complete"]})
        return EXIT_CODES["complete"]
    logger.error("branch %s after %d entries", branch.status, len(branch.entries),
                 extra={"exit_code": EXIT_CODES["partial"]})
    return EXIT_CODES["partial"]


def solve(args):
    """Handle the ``solve`` subcommand."""
    overrides = {key: getattr(args, key) for _, key, _ in OVERRIDES
                 if getattr(args, key) is not None}
    if args.eps_schedule is not None:
        overrides["eps_schedule"] = args.eps_schedule
    try:
        if args.config_path is None:
            config = gsqgpatch.parse_config("{}", overrides)
        else:
            config = gsqgpatch.load_config(args.config_path, overrides)
    except (gsqgpatch.ConfigError, OSError) as err:
        logger.error("invalid configuration: %s", err,
                     extra={"exit_code": EXIT_CODES["config"]})
        return EXIT_CODES["config"]
    _configure_logging(args.log_level, args.log_format,
                       os.path.join(config.output, "gsqgpatch.log"))
    logger.info("solving %s pair, alpha=%g, schedule %s", config.mode,
                config.alpha, list(config.eps_schedule))
    return run(config)


def check(args):
    """Handle the ``check`` subcommand."""
    try:
        branch = gsqgpatch.read_branch(args.branch)
        quad = gsqgpatch.QuadratureConfig(scheme=args.scheme)
    except (OSError, ValueError, KeyError, TypeError) as err:
        logger.error("cannot check %s: %s", args.branch, err,
                     extra={"exit_code": EXIT_CODES["config"]})
        return EXIT_CODES["config"]
    report, passed = gsqgpatch.branch_report(branch, quad, recompute=True)
    text = json.dumps(report, indent=2, sort_keys=True)+"\n"
    if args.report is None:
        sys.stdout.write(text)
    else:
        with open(args.report, "w", encoding="utf-8") as dst:
            dst.write(text)
    if passed:
        return EXIT_CODES["complete"]
    logger.error("diagnostics failed for %s", args.branch,
                 extra={"exit_code": EXIT_CODES["check"]})
    return EXIT_CODES["check"]


def sigma(args):
    """Handle the ``sigma`` subcommand."""
    try:
        table = gsqgpatch.multiplier_table(args.alpha, args.order, args.normalization)
    except (gsqgpatch.AlphaDomainError, ValueError) as err:
        logger.error("%s", err, extra={"exit_code": EXIT_CODES["config"]})
        return EXIT_CODES["config"]
    for j, value in enumerate(table.sigma, start=1):
        sys.stdout.write("%d %.17g\n" % (j, value))
    return EXIT_CODES["complete"]


COMMANDS = {"solve": solve, "check": check, "sigma": sigma}


def main(argv=None):
    """Entry point of the ``gsqgpatch`` console script."""
    args = parse_args(argv)
    _configure_logging(args.log_level, args.log_format)
    return COMMANDS[args.command](args)
