"""Command-line front end for angle sweeps.

``lgpol-sweep`` (or ``python -m lgpol``) runs one sweep and writes the
CSV.  Settings come from flags, from an optional ``--config`` key=value
file, and from built-in defaults, in that order of precedence.  Exit
codes: 0 on success, 1 for usage or configuration problems, 2 when the
output file cannot be written.
"""

import argparse
import sys

from .errors import ConfigError
from .lgi import InitialStateSpec
from .noise import NoiseConfig
from .sweep import SweepConfig, emit_csv, run_sweep

_DEFAULTS = {
    "theta1": 0.0,
    "theta2_start": 0.0,
    "theta2_end": 180.0,
    "steps": 37,
    "state": "diagonal",
    "noise_sigma": 0.02,
    "trials": 5,
    "seed": 0,
    "out": "sweep.csv",
}

_COERCE = {
    "theta1": float,
    "theta2_start": float,
    "theta2_end": float,
    "steps": int,
    "state": str,
    "noise_sigma": float,
    "trials": int,
    "seed": int,
    "out": str,
}


def parse_state(text: str) -> InitialStateSpec:
    """Parse a state argument: linear:<deg>, diagonal, unpolarized or partial:<dop>."""
    kind, sep, arg = text.partition(":")
    if kind == "diagonal" and not sep:
        return InitialStateSpec.diagonal()
    if kind == "unpolarized" and not sep:
        return InitialStateSpec.unpolarized()
    if kind == "linear" and sep:
        try:
            angle = float(arg)
        except ValueError:
            raise ConfigError(f"linear state needs a numeric angle, got {arg!r}") from None
        return InitialStateSpec.linear(angle)
    if kind == "partial" and sep:
        try:
            dop = float(arg)
        except ValueError:
            raise ConfigError(f"partial state needs a numeric dop, got {arg!r}") from None
        return InitialStateSpec.partially_polarized(dop)
    raise ConfigError(
        f"unknown state {text!r}; expected linear:<deg>, diagonal,"
        " unpolarized or partial:<dop>"
    )


class _Parser(argparse.ArgumentParser):
    # Usage problems exit 1; argparse's default of 2 is reserved for I/O
    # failures here.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="lgpol-sweep",
        description="Sweep the second plate angle and write K statistics to CSV.",
    )
    parser.add_argument("--theta1", type=float, help="first plate angle in degrees (default 0)")
    parser.add_argument("--theta2-start", type=float, help="sweep start in degrees (default 0)")
    parser.add_argument("--theta2-end", type=float, help="sweep end in degrees (default 180)")
    parser.add_argument(
        "--steps", type=int, help="grid points, both endpoints included (default 37)"
    )
    parser.add_argument(
        "--state",
        help="initial state: linear:<deg>, diagonal, unpolarized or partial:<dop>"
        " (default diagonal)",
    )
    parser.add_argument(
        "--noise-sigma", type=float, help="relative intensity noise (default 0.02)"
    )
    parser.add_argument("--trials", type=int, help="noisy runs per grid point (default 5)")
    parser.add_argument("--seed", type=int, help="base RNG seed (default 0)")
    parser.add_argument("--out", help="output CSV path (default sweep.csv)")
    parser.add_argument("--config", help="key=value settings file; flags take precedence")
    return parser


def _read_config_file(path) -> dict:
    values = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ConfigError(f"{path}:{lineno}: expected key=value, got {line!r}")
            key = key.strip().replace("-", "_")
            if key not in _DEFAULTS:
                raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
            values[key] = value.strip()
    return values


def config_from_args(args: argparse.Namespace) -> SweepConfig:
    """Merge flags, config file and defaults into a validated SweepConfig."""
    settings = dict(_DEFAULTS)
    if args.config is not None:
        try:
            raw = _read_config_file(args.config)
        except OSError as exc:
            raise ConfigError(f"cannot read config file {args.config}: {exc}") from exc
        for key, text in raw.items():
            try:
                settings[key] = _COERCE[key](text)
            except ValueError:
                raise ConfigError(f"config key {key} has malformed value {text!r}") from None
    for key in _DEFAULTS:
        given = getattr(args, key)
        if given is not None:
            settings[key] = given
    return SweepConfig(
        theta1=settings["theta1"],
        theta2_start=settings["theta2_start"],
        theta2_end=settings["theta2_end"],
        steps=settings["steps"],
        state=parse_state(settings["state"]),
        noise=NoiseConfig(sigma_rel=settings["noise_sigma"], seed=settings["seed"]),
        trials=settings["trials"],
        output_path=settings["out"],
    )


def parse_cli(argv=None) -> SweepConfig:
    """Turn an argument list into a validated SweepConfig.

    Raises SystemExit for --help and for malformed flags (argparse
    behavior) and ConfigError/ValueError for bad values.
    """
    return config_from_args(build_parser().parse_args(argv))


def main(argv=None) -> int:
    try:
        cfg = parse_cli(argv)
    except SystemExit as exc:
        # --help exits 0 through here; usage errors exit 1.
        return int(exc.code or 0)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        rows = run_sweep(cfg)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        emit_csv(rows, cfg.output_path)
    except OSError as exc:
        print(f"error: cannot write {cfg.output_path}: {exc}", file=sys.stderr)
        return 2
    n_violating = sum(row.violation for row in rows)
    print(f"wrote {len(rows)} rows to {cfg.output_path} ({n_violating} violating)")
    return 0


def entrypoint() -> None:
    sys.exit(main())
