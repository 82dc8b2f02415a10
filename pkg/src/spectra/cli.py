"""Command-line interface.

Subcommands:

* ``spectra synth --scenario <file.json|bundled-name> [--out <dir>]``
* ``spectra analyze --common a.csv b.csv [...] -k 3 [--keep-dc]``
* ``spectra analyze --emphasize a.csv [...] --suppress c.csv [...] -k 3
  --epsilon 1e-6 [--plain-division]``
* ``spectra fft in.csv --axis paper|standard``

Exit codes: 0 success, 2 validation error, 3 numeric-precondition error,
4 I/O error.
"""
from __future__ import annotations

import argparse
import dataclasses
import sys
from pathlib import Path

from .detect import common_frequencies, non_common_frequencies
from .dsp import AXIS_CONVENTIONS, magnitude_spectrum
from .errors import SpectraError, ValidationError
from .io import (
    detections_csv_text,
    read_samples_csv,
    spectrum_csv_text,
    write_detections_csv,
    write_spectrum_csv,
)
from .scenario import BUNDLED_SCENARIO_NAMES, bundled_scenario, load_scenario, run_scenario
from .spectrum import DivisionPolicy


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spectra",
        description="Detect common and non-common frequencies across congruent discrete spectra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    synth = sub.add_parser("synth", help="run a scenario file or a bundled scenario")
    synth.add_argument(
        "--scenario",
        required=True,
        help=f"scenario JSON path, or one of: {', '.join(BUNDLED_SCENARIO_NAMES)}",
    )
    synth.add_argument("--out", help="output directory (overrides the scenario's output_dir)")

    analyze = sub.add_parser("analyze", help="run detection pipelines on sample CSV files")
    analyze.add_argument("--common", nargs="+", metavar="CSV", help="sample files to find common frequencies of")
    analyze.add_argument("--emphasize", nargs="+", metavar="CSV", help="sample files whose frequencies to emphasize")
    analyze.add_argument("--suppress", nargs="+", metavar="CSV", help="sample files whose frequencies to suppress")
    analyze.add_argument("-k", type=int, default=3, help="number of ranked detections (default 3)")
    analyze.add_argument("--keep-dc", action="store_true", help="let bin 0 compete in the ranking")
    analyze.add_argument("--epsilon", type=float, default=DivisionPolicy().epsilon,
                         help="conditioned-division threshold (default 1e-6)")
    analyze.add_argument("--plain-division", action="store_true",
                         help="divide unconditionally instead of using the epsilon rule")
    analyze.add_argument("--out", help="write the detections CSV here instead of stdout")

    fft = sub.add_parser("fft", help="spectrum of a single sample CSV")
    fft.add_argument("input", help="sample CSV path")
    fft.add_argument("--axis", choices=list(AXIS_CONVENTIONS),
                     help="frequency-axis convention (overrides the file header)")
    fft.add_argument("--out", help="write the spectrum CSV here instead of stdout")

    return parser


def _cmd_synth(args: argparse.Namespace) -> int:
    ref = args.scenario
    if Path(ref).is_file():
        spec = load_scenario(ref)
    elif ref in BUNDLED_SCENARIO_NAMES:
        spec = bundled_scenario(ref)
    else:
        raise ValidationError(
            f"{ref!r} is neither a scenario file nor a bundled scenario "
            f"({', '.join(BUNDLED_SCENARIO_NAMES)})"
        )
    results = run_scenario(spec, args.out)
    for result in results:
        top = result.top
        if top is None:
            print(f"{result.name}: no detections")
        else:
            print(
                f"{result.name}: bin={top.bin_index} frequency_hz={top.frequency:.9g} "
                f"magnitude={top.magnitude:.9g}"
            )
    return 0


def _cmd_analyze(args: argparse.Namespace) -> int:
    grouped = args.emphasize is not None or args.suppress is not None
    if args.common is not None and grouped:
        raise ValidationError("--common cannot be combined with --emphasize/--suppress")
    if grouped and (args.emphasize is None or args.suppress is None):
        raise ValidationError("--emphasize and --suppress must be given together")
    if args.common is None and not grouped:
        raise ValidationError("nothing to analyze: pass --common, or --emphasize with --suppress")

    def spectra_of(paths):
        return [magnitude_spectrum(read_samples_csv(p)) for p in paths]

    exclude_dc = not args.keep_dc
    if args.common is not None:
        detections = common_frequencies(spectra_of(args.common), args.k, exclude_dc)
    else:
        policy = DivisionPolicy.plain() if args.plain_division else DivisionPolicy.conditioned(args.epsilon)
        detections = non_common_frequencies(
            spectra_of(args.emphasize), spectra_of(args.suppress), policy, args.k, exclude_dc
        )
    if args.out:
        write_detections_csv(detections, args.out)
    else:
        sys.stdout.write(detections_csv_text(detections))
    return 0


def _cmd_fft(args: argparse.Namespace) -> int:
    series = read_samples_csv(args.input)
    if args.axis is not None and args.axis != series.config.axis_convention:
        cfg = dataclasses.replace(series.config, axis_convention=args.axis)
        series = dataclasses.replace(series, config=cfg)
    spectrum = magnitude_spectrum(series)
    if args.out:
        write_spectrum_csv(spectrum, args.out)
    else:
        sys.stdout.write(spectrum_csv_text(spectrum))
    return 0


_COMMANDS = {"synth": _cmd_synth, "analyze": _cmd_analyze, "fft": _cmd_fft}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except SpectraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
