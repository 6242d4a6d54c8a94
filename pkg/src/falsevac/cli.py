"""Command-line entry point: ``falsevac <subcommand> [--config FILE] [--set k=v ...] [--out DIR]``.

Exit codes: 0 success, 1 domain or computation error (including bad
configuration), 2 I/O error.
"""

import argparse
import sys

from .errors import FalseVacError
from .report import COMMANDS, build_config, config_defaults, format_cell, parse_config_text

_HELP = {
    "landscape": "potential over [-1, 2pi + 1] and the located vacua (landscape.csv, vacua.csv)",
    "profile": "kink-antikink wall profile, X and s = X^2 (profile.csv)",
    "kessence": "equation of state and sound speed across the wall (eos.csv)",
    "slowroll": "flatness ratio and slow-roll parameters at the stationary points (slowroll.csv)",
    "rates": "nucleation rates and tunneling amplitudes (rates.csv)",
    "audit": "quoted values against recomputed ones (audit.csv)",
}


def _params_epilog():
    lines = ["overridable parameters (dotted key = default):"]
    lines += [f"  {k} = {format_cell(v)}" for k, v in config_defaults().items()]
    return "\n".join(lines)


def build_parser():
    parser = argparse.ArgumentParser(prog="falsevac", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", metavar="{" + "|".join(COMMANDS) + "}")
    sub.required = True
    epilog = _params_epilog()
    for name in COMMANDS:
        sp = sub.add_parser(
            name,
            help=_HELP[name],
            description=_HELP[name],
            epilog=epilog,
            formatter_class=argparse.RawDescriptionHelpFormatter,
        )
        sp.add_argument("--config", metavar="FILE", help="file of 'key = value' lines")
        sp.add_argument(
            "--set", metavar="KEY=VALUE", action="append", default=[], dest="overrides",
            help="override one parameter; repeatable, wins over --config",
        )
        sp.add_argument("--out", metavar="DIR", default=".", help="output directory (default: .)")
    return parser


def _err(msg):
    print(f"falsevac: error: {msg}", file=sys.stderr)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        values = {}
        if args.config:
            with open(args.config, encoding="utf-8") as fh:
                values.update(parse_config_text(fh.read()))
        for item in args.overrides:
            if "=" not in item:
                raise ValueError(f"--set expects KEY=VALUE, got {item!r}")
            k, v = item.split("=", 1)
            values[k.strip()] = v.strip()
        cfg = build_config(values, args.out)
    except OSError as exc:
        _err(exc)
        return 2
    except (FalseVacError, ValueError) as exc:
        _err(exc)
        return 1

    try:
        paths = COMMANDS[args.command](cfg)
    except OSError as exc:
        _err(f"cannot write output: {exc}")
        return 2
    except (FalseVacError, ValueError, ArithmeticError) as exc:
        _err(exc)
        return 1
    for path in paths:
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
