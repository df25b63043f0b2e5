"""Command-line front end.

    polmix run <config> <preset|kind> <outdir> [options]
    polmix validate <config>
    polmix list-presets

Exit status: 0 on success, 2 on invalid configuration or arguments, 3 on an
unknown preset or sweep kind.
"""
import argparse
from dataclasses import replace
import json
import sys

from . import __version__
from .config import ConfigError, load_config
from .polariton import CONVENTIONS
from .sweeps import KINDS, PRESETS, REFERENCE_K, Grid, SweepSpec, write_outputs
from . import units

EXIT_CONFIG = 2
EXIT_UNKNOWN_TARGET = 3


class UsageError(ValueError):
    pass


def parse_quantity(text, default_unit):
    """Parse ``START:STOP:COUNT[:UNIT]`` into a Grid, or ``V[,V...][:UNIT]`` into values.

    Returns ``(grid, None)`` or ``(None, values_in_internal_units)``.
    """
    parts = text.split(":")
    unit = default_unit
    if len(parts) in (2, 4):
        unit = parts.pop()
    if unit == "1/Å":
        unit = "1/A"
    try:
        if len(parts) == 3:
            return Grid(float(parts[0]), float(parts[1]), int(parts[2]), unit), None
        if len(parts) == 1:
            values = tuple(units.to_internal(float(v), unit) for v in parts[0].split(","))
            return None, values
    except ValueError as exc:
        raise UsageError(f"cannot parse {text!r}: {exc}") from exc
    raise UsageError(f"cannot parse {text!r}; expected START:STOP:COUNT[:UNIT] or VALUE[,VALUE...][:UNIT]")


def parse_drive(text):
    if text in ("s", "p"):
        return text
    try:
        b_s, b_p = (complex(x.replace(" ", "")) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"--drive must be s, p or 'B_S,B_P' complex amplitudes, got {text!r}") from exc
    if b_s == 0 and b_p == 0:
        raise UsageError("--drive amplitudes are both zero")
    return (b_s, b_p)


def custom_spec(args):
    kind = args.target
    grid = None
    k = REFERENCE_K
    thetas = None
    if args.k is not None:
        g, vals = parse_quantity(args.k, "1/m")
        if g is not None:
            grid = g
        else:
            if len(vals) != 1:
                raise UsageError("--k takes a single value or a grid")
            k = vals[0]
    if args.theta is not None:
        g, vals = parse_quantity(args.theta, "rad")
        if g is not None:
            if kind == "weights-vs-theta":
                grid = g
            else:
                thetas = tuple(float(t) for t in g.values())
        else:
            thetas = vals
    if args.freq is not None:
        g, vals = parse_quantity(args.freq, "Hz")
        if g is None:
            raise UsageError("--freq takes a grid START:STOP:COUNT[:UNIT]")
        grid = g
    kwargs = dict(
        kind=kind,
        grid=grid,
        k=k,
        drive=parse_drive(args.drive),
        conventions=(args.convention or CONVENTIONS[0],),
    )
    if thetas is not None:
        kwargs["thetas"] = thetas
    if args.branch:
        kwargs["branches"] = (args.branch,)
    try:
        return SweepSpec(**kwargs)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def build_parser():
    parser = argparse.ArgumentParser(prog="polmix", description=__doc__.splitlines()[0] if __doc__ else None)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a figure preset or a custom sweep")
    run.add_argument("config", help="JSON configuration file")
    run.add_argument("target", help="preset id (see list-presets) or sweep kind: " + ", ".join(KINDS))
    run.add_argument("outdir", help="output directory")
    run.add_argument("--k", help="wavenumber value or grid, default unit 1/m (e.g. 5e-7:1/A, 0:1e5:500)")
    run.add_argument("--theta", help="angle value(s) or grid, default unit rad (e.g. 45:deg, 0:3.1416:181)")
    run.add_argument("--freq", help="probe frequency grid, default unit Hz")
    run.add_argument("--drive", default="s", help="s, p, or complex amplitudes 'B_S,B_P' (default s)")
    run.add_argument("--branch", choices=("upper", "middle", "lower"), help="restrict weight sweeps to one branch")
    run.add_argument("--convention", choices=CONVENTIONS,
                     help="middle-branch convention (default orthonormal; fig13-16 always emit both)")
    run.add_argument("--unwrap-phases", action="store_true", help="add unwrapped phase columns")
    run.add_argument("--paper-L", type=float, metavar="METERS", help="override the mirror spacing, e.g. 3.77e-6")

    val = sub.add_parser("validate", help="validate a configuration and print it fully resolved")
    val.add_argument("config")
    val.add_argument("--paper-L", type=float, metavar="METERS")

    sub.add_parser("list-presets", help="list figure presets")
    return parser


def _cmd_run(args):
    try:
        settings = load_config(args.config, L_override=args.paper_L)
    except ConfigError as exc:
        print(exc, file=sys.stderr)
        return EXIT_CONFIG

    if args.target in PRESETS:
        preset = PRESETS[args.target]
        spec = preset.spec
        if args.convention and not preset.dual_convention:
            spec = replace(spec, conventions=(args.convention,))
    elif args.target in KINDS:
        try:
            spec = custom_spec(args)
        except UsageError as exc:
            print(f"polmix: error: {exc}", file=sys.stderr)
            return EXIT_CONFIG
    else:
        print(f"polmix: error: unknown preset or sweep kind {args.target!r}", file=sys.stderr)
        return EXIT_UNKNOWN_TARGET

    run_info = {"L_override_m": args.paper_L}
    csv_path, json_path, table = write_outputs(
        settings, spec, args.outdir, args.target, run_info=run_info, unwrap_phases=args.unwrap_phases
    )
    print(f"wrote {csv_path} ({len(table.rows)} rows) and {json_path}")
    return 0


def _cmd_validate(args):
    try:
        settings = load_config(args.config, L_override=args.paper_L)
    except ConfigError as exc:
        print(exc, file=sys.stderr)
        return EXIT_CONFIG
    print(json.dumps(settings.report(), indent=2))
    return 0


def _cmd_list_presets(args):
    for preset in PRESETS.values():
        print(f"{preset.id:6s} {preset.spec.kind:17s} {preset.description}")
    return 0


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {"run": _cmd_run, "validate": _cmd_validate, "list-presets": _cmd_list_presets}[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
