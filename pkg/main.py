"""
Command line entry point: run, verify, fit, plot and sweep.

Exit codes: 0 success (including a resolution-limit stop), 2 blow-up,
64 usage error, 1 internal error.
"""

import argparse
import logging
import os
import sys
from multiprocessing import Pool

from tqdm import tqdm

from analysis.growth import growth_fit
from model.exceptions import ConfigError
from run.make_data import run_to_frame
from run.outputs import check_columns, plot_svg, read_csv, write_run
from run.verify import SUITES, run_suite
from settings.config import RunConfig

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_BLOW_UP = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class ArgumentParser(argparse.ArgumentParser):

    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def make_data(config_file, run_name=None, with_tqdm=False):
    """Run one config file and write its outputs; returns the exit code"""

    config = RunConfig.get(config_file)
    if run_name is not None:
        config.run_name = run_name
    df, summary = run_to_frame(config, with_tqdm=with_tqdm)
    write_run(config, df, summary)
    return EXIT_BLOW_UP if summary.blew_up else EXIT_OK


def _sweep_job(config_file):
    name = os.path.splitext(os.path.basename(config_file))[0]
    return make_data(config_file, run_name=name)


def cmd_run(args):
    return make_data(args.config, with_tqdm=args.progress)


def cmd_verify(args):

    checks = run_suite(args.suite)
    for check in checks:
        print(check.line())
    n_failed = sum(not c.passed for c in checks)
    print(f"{len(checks) - n_failed}/{len(checks)} checks passed")
    return EXIT_OK if n_failed == 0 else EXIT_INTERNAL


def cmd_fit(args):

    df = read_csv(args.csv)
    check_columns(df, ["t", args.column])
    fit = growth_fit(df["t"], df[args.column], window=args.window)
    print(f"window=[{fit.t_a:.6g}, {fit.t_b:.6g}] samples={fit.n_samples}")
    print(f"linear:    log y = a + b t,        b={fit.linear_slope:.6f} "
          f"r2={fit.r_squared:.6f}")
    print(f"quadratic: log y = a + b t + q t^2, b={fit.quadratic_slope:.6f} "
          f"q={fit.quadratic_coeff:.6f}")
    print(f"residual variance reduction by t^2: "
          f"{100 * fit.variance_reduction:.2f}%")
    print(fit.line())
    return EXIT_OK


def cmd_plot(args):
    plot_svg(read_csv(args.csv), args.columns, args.out, log=args.log)
    return EXIT_OK


def cmd_sweep(args):

    codes = []
    with Pool(processes=args.jobs) as p:
        with tqdm(total=len(args.configs)) as pbar:
            for code in p.imap_unordered(_sweep_job, args.configs):
                codes.append(code)
                pbar.update()
    return max(codes, default=EXIT_OK)


def build_parser():

    parser = ArgumentParser(prog="boussinesq-lab", description=__doc__,
                            formatter_class=argparse.RawTextHelpFormatter)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=ArgumentParser)

    p = sub.add_parser("run", help="integrate one config")
    p.add_argument("config")
    p.add_argument("--progress", action="store_true",
                   help="show a progress bar")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("verify", help="run a property suite")
    p.add_argument("suite", choices=SUITES)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fit", help="growth fit of a CSV column")
    p.add_argument("csv")
    p.add_argument("--column", default="h1_rho")
    p.add_argument("--window", nargs=2, type=float, metavar=("T_A", "T_B"))
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("plot", help="SVG line chart of CSV columns")
    p.add_argument("csv")
    p.add_argument("--columns", nargs="+", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--log", action="store_true", help="log value axis")
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("sweep", help="run several configs in parallel")
    p.add_argument("configs", nargs="+")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None):

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(asctime)s %(name)s %(levelname)s: %(message)s")

    try:
        return args.func(args)
    except (ConfigError, ValueError) as e:
        logger.error(str(e))
        return EXIT_USAGE
    except OSError as e:
        logger.error(str(e))
        return EXIT_INTERNAL
    except Exception:
        logger.exception("internal error")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
